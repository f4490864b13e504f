//! Bitset-backed undirected simple graphs on up to 62 vertices.
//!
//! One `u64` per vertex holds its adjacency row, which keeps the distance
//! and regularity kernels branch-light: a BFS frontier expansion is a few
//! OR/AND operations, an eccentricity is `n` of those.

use std::fmt;

/// Largest supported vertex count. Chosen so a graph6 short-form size byte
/// (single byte, value `n + 63`) can always represent `n` exactly.
pub const MAX_VERTICES: usize = 62;

/// Errors from graph construction and the scalar formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// Vertex count outside `1..=62`.
    SizeOutOfRange(usize),
    /// Vertex index not in `0..n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// Attempt to add a self-loop.
    SelfLoop(usize),
    /// Degree parameter `k` does not satisfy `k < n`.
    DegreeOutOfRange { k: usize, n: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SizeOutOfRange(n) => {
                write!(f, "vertex count {n} outside supported range 1..={MAX_VERTICES}")
            }
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {v} not allowed"),
            GraphError::DegreeOutOfRange { k, n } => {
                write!(f, "degree {k} not feasible on {n} vertices (need k < n)")
            }
        }
    }
}

impl std::error::Error for GraphError {}

/// Undirected simple graph, adjacency stored as one bit row per vertex.
///
/// Rows stay symmetric with a zero diagonal by construction; all mutation
/// goes through [`Graph::add_edge`] / [`Graph::remove_edge`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices, `1 <= n <= 62`.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::SizeOutOfRange(n));
        }
        Ok(Graph { n, rows: vec![0; n] })
    }

    /// Graph on `n` vertices with the given 0-based edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for &(i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    /// Cycle C_n (requires n >= 3).
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::SizeOutOfRange(n));
        }
        let mut g = Graph::new(n)?;
        for v in 0..n {
            g.add_edge(v, (v + 1) % n)?;
        }
        Ok(g)
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j)?;
            }
        }
        Ok(g)
    }

    pub(crate) fn from_rows(n: usize, rows: &[u64]) -> Self {
        debug_assert_eq!(rows.len(), n);
        Graph { n, rows: rows.to_vec() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.rows
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Insert the undirected edge `{i, j}`. Idempotent.
    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<(), GraphError> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(GraphError::SelfLoop(i));
        }
        self.rows[i] |= 1 << j;
        self.rows[j] |= 1 << i;
        Ok(())
    }

    /// Remove the undirected edge `{i, j}` if present.
    pub fn remove_edge(&mut self, i: usize, j: usize) -> Result<(), GraphError> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(GraphError::SelfLoop(i));
        }
        self.rows[i] &= !(1 << j);
        self.rows[j] &= !(1 << i);
        Ok(())
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.n && j < self.n && self.rows[i] >> j & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// Per-vertex degrees, indexed by vertex.
    pub fn degree_sequence(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as 0-based pairs `(i, j)` with `i < j`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            let mut higher = self.rows[i] & !((1u64 << (i + 1)) - 1);
            while higher != 0 {
                let j = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((i, j));
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.rows[v])
    }

    /// True iff a BFS from vertex 0 reaches all `n` vertices.
    pub fn is_connected(&self) -> bool {
        self.reach_from(0).count_ones() as usize == self.n
    }

    fn reach_from(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Hop distances from `start`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, start: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        dist[start] = Some(0);
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        let mut level = 0u32;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.rows[v];
            }
            next &= !seen;
            level += 1;
            let mut nf = next;
            while nf != 0 {
                let v = nf.trailing_zeros() as usize;
                nf &= nf - 1;
                dist[v] = Some(level);
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    /// All-pairs hop distances.
    pub fn distance_matrix(&self) -> DistanceMatrix {
        let mut dist = Vec::with_capacity(self.n * self.n);
        for v in 0..self.n {
            dist.extend(self.bfs_distances(v));
        }
        DistanceMatrix { n: self.n, dist }
    }

    /// Eccentricity of `v`, or `None` if some vertex is unreachable from it.
    pub fn eccentricity(&self, v: usize) -> Option<u32> {
        let (levels, seen) = self.ecc_raw(v);
        if seen.count_ones() as usize == self.n {
            Some(levels)
        } else {
            None
        }
    }

    #[inline]
    fn ecc_raw(&self, start: usize) -> (u32, u64) {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        let mut level = 0u32;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.rows[v];
            }
            frontier = next & !seen;
            if frontier != 0 {
                level += 1;
                seen |= frontier;
            }
        }
        (level, seen)
    }

    /// Longest shortest path over all vertex pairs; `None` iff disconnected.
    /// A single vertex has diameter 0.
    pub fn diameter(&self) -> Option<u32> {
        let mut max = 0u32;
        for v in 0..self.n {
            let (levels, seen) = self.ecc_raw(v);
            if seen.count_ones() as usize != self.n {
                return None;
            }
            max = max.max(levels);
        }
        Some(max)
    }

    /// Exact diameter when it is `<= cap` and the graph is connected;
    /// `None` as soon as either fails. Lets a census discard non-optima
    /// without finishing the eccentricity scan.
    pub fn diameter_capped(&self, cap: u32) -> Option<u32> {
        let mut max = 0u32;
        for v in 0..self.n {
            let (levels, seen) = self.ecc_raw(v);
            if seen.count_ones() as usize != self.n || levels > cap {
                return None;
            }
            max = max.max(levels);
        }
        Some(max)
    }

    pub fn is_k_regular(&self, k: usize) -> bool {
        self.rows.iter().all(|r| r.count_ones() as usize == k)
    }

    /// True iff exactly one vertex has degree `k + 1` and the rest degree `k`.
    pub fn is_k_quasi_regular(&self, k: usize) -> bool {
        let mut specials = 0usize;
        for r in &self.rows {
            let d = r.count_ones() as usize;
            if d == k + 1 {
                specials += 1;
            } else if d != k {
                return false;
            }
        }
        specials == 1
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// Relabel vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut out = Graph { n: self.n, rows: vec![0; self.n] };
        for (i, j) in self.edges() {
            out.rows[perm[i]] |= 1 << perm[j];
            out.rows[perm[j]] |= 1 << perm[i];
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// All-pairs hop counts; `None` marks unreachable pairs.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        self.dist[i * self.n + j]
    }
}

/// Comparisons required by a k-(quasi-)regular pattern on n items:
/// `nk/2` when `n` or `k` is even, `(nk+1)/2` when both are odd.
pub fn required_edge_count(n: usize, k: usize) -> Result<usize, GraphError> {
    if n == 0 || n > MAX_VERTICES {
        return Err(GraphError::SizeOutOfRange(n));
    }
    if k >= n {
        return Err(GraphError::DegreeOutOfRange { k, n });
    }
    let p = n * k;
    Ok(if p.is_multiple_of(2) { p / 2 } else { p.div_ceil(2) })
}

/// Elicited comparisons over all `n(n-1)/2` possible ones, kept as the
/// exact fraction the tables print (numerator unreduced).
#[derive(Clone, Copy, Debug, Eq)]
pub struct CompletionRatio {
    pub numerator: u64,
    pub denominator: u64,
}

impl CompletionRatio {
    pub fn value(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }

    pub fn reduced(&self) -> (u64, u64) {
        let g = gcd(self.numerator, self.denominator);
        (self.numerator / g, self.denominator / g)
    }
}

impl PartialEq for CompletionRatio {
    fn eq(&self, other: &Self) -> bool {
        // exact rational equality, independent of printed form
        self.numerator as u128 * other.denominator as u128
            == other.numerator as u128 * self.denominator as u128
    }
}

impl fmt::Display for CompletionRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}

/// Completion ratio c for a k-(quasi-)regular pattern on n items.
pub fn completion_ratio(n: usize, k: usize) -> Result<CompletionRatio, GraphError> {
    let edges = required_edge_count(n, k)?;
    Ok(CompletionRatio {
        numerator: edges as u64,
        denominator: (n * (n - 1) / 2) as u64,
    })
}

/// Largest possible vertex count of a graph with maximum degree `k` and
/// diameter `d`: `1 + k * ((k-1)^d - 1) / (k - 2)` for `k > 2`.
pub fn moore_bound(k: usize, d: u32) -> u64 {
    if k <= 1 {
        return (k + 1) as u64;
    }
    if k == 2 {
        return 2 * d as u64 + 1;
    }
    let mut total = 1u64;
    let mut layer = k as u64;
    for _ in 0..d {
        total += layer;
        layer *= (k - 1) as u64;
    }
    total
}
