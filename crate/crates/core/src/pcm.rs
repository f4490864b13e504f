//! Bridge between graphs and incomplete pairwise comparison matrices:
//! which entries of an n-by-n comparison matrix are known is exactly an
//! undirected graph on the n items, and a recommended filling pattern is
//! the edge set of a minimal-diameter (quasi-)regular graph.

use crate::canonical::canonical_form;
use crate::catalog::{self, CatalogEntry};
use crate::codec::encode_graph6;
use crate::enumerate::{min_diameter_census, regularity_for, CensusQuery, Regularity};
use crate::graph::{completion_ratio, required_edge_count, CompletionRatio, Graph};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PcmError {
    /// Item count outside the supported 3..=20 envelope.
    SizeOutOfRange(usize),
    /// Mask entry `(i, j)` known while `(j, i)` is not.
    Reciprocity { i: usize, j: usize },
    /// Diagonal entry marked unknown.
    Diagonal(usize),
    /// Mask text malformed.
    BadMask { line: usize, content: String },
    /// Pattern extraction requires a connected graph.
    Disconnected,
    /// No `(k, d)` choice satisfies the request; carries what is achievable.
    Unsatisfiable { frontier: Vec<FrontierPoint> },
}

impl fmt::Display for PcmError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PcmError::SizeOutOfRange(n) => write!(f, "item count {n} outside 3..=20"),
            PcmError::Reciprocity { i, j } => {
                write!(f, "mask not reciprocal at ({i},{j}) vs ({j},{i})")
            }
            PcmError::Diagonal(i) => write!(f, "diagonal entry {i} must be known"),
            PcmError::BadMask { line, content } => {
                write!(f, "mask line {line}: unexpected {content:?}")
            }
            PcmError::Disconnected => write!(f, "comparison graph is disconnected"),
            PcmError::Unsatisfiable { frontier } => {
                write!(f, "no feasible pattern; achievable: ")?;
                for (i, p) in frontier.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "k={} d={} edges={}", p.k, p.d, p.edges)?;
                }
                Ok(())
            }
        }
    }
}

impl std::error::Error for PcmError {}

/// An achievable `(k, d, edges)` combination, reported when a request
/// cannot be met.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrontierPoint {
    pub k: usize,
    pub d: u32,
    pub edges: usize,
}

/// Which comparisons are already made (or planned): a symmetric boolean
/// matrix with a known diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcmMask {
    n: usize,
    known: Vec<bool>,
}

impl PcmMask {
    pub fn new(n: usize) -> Self {
        let mut known = vec![false; n * n];
        for i in 0..n {
            known[i * n + i] = true;
        }
        PcmMask { n, known }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_known(&self, i: usize, j: usize) -> bool {
        self.known[i * self.n + j]
    }

    /// Mark the pair `{i, j}` (and its reciprocal) as known.
    pub fn mark_known(&mut self, i: usize, j: usize) {
        self.known[i * self.n + j] = true;
        self.known[j * self.n + i] = true;
    }

    /// Parse the text format: an `n=<N>` or bare `<N>` header line, then n
    /// lines of n characters, `1` known, `0` or `x` unknown, diagonal `1`.
    pub fn parse(text: &str) -> Result<Self, PcmError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or(PcmError::BadMask { line: 1, content: String::new() })?;
        let n: usize = header
            .strip_prefix("n=")
            .unwrap_or(header)
            .trim()
            .parse()
            .map_err(|_| PcmError::BadMask { line: 1, content: header.to_string() })?;
        if n == 0 || n > crate::graph::MAX_VERTICES {
            return Err(PcmError::SizeOutOfRange(n));
        }
        let mut mask = PcmMask::new(n);
        for i in 0..n {
            let row = lines
                .next()
                .ok_or(PcmError::BadMask { line: i + 2, content: "<missing row>".into() })?;
            let cells: Vec<char> = row.chars().filter(|c| !c.is_whitespace()).collect();
            if cells.len() != n {
                return Err(PcmError::BadMask { line: i + 2, content: row.to_string() });
            }
            for (j, &ch) in cells.iter().enumerate() {
                match ch {
                    '1' => mask.known[i * n + j] = true,
                    '0' | 'x' | 'X' => mask.known[i * n + j] = false,
                    _ => {
                        return Err(PcmError::BadMask { line: i + 2, content: row.to_string() })
                    }
                }
            }
        }
        for i in 0..n {
            if !mask.known[i * n + i] {
                return Err(PcmError::Diagonal(i + 1));
            }
            for j in 0..n {
                if mask.known[i * n + j] != mask.known[j * n + i] {
                    return Err(PcmError::Reciprocity { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(mask)
    }

    pub fn render(&self) -> String {
        let mut out = format!("n={}\n", self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.push(if self.known[i * self.n + j] { '1' } else { 'x' });
            }
            out.push('\n');
        }
        out
    }
}

/// Graph of the known off-diagonal comparisons.
pub fn graph_from_mask(mask: &PcmMask) -> Result<Graph, PcmError> {
    let n = mask.n();
    let mut g = Graph::new(n).map_err(|_| PcmError::SizeOutOfRange(n))?;
    for i in 0..n {
        for j in i + 1..n {
            if mask.is_known(i, j) != mask.is_known(j, i) {
                return Err(PcmError::Reciprocity { i: i + 1, j: j + 1 });
            }
            if mask.is_known(i, j) {
                g.add_edge(i, j).expect("indices in range");
            }
        }
    }
    Ok(g)
}

/// Ordered list of comparisons to elicit: unordered 1-based pairs, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FillingPattern {
    pub n: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl FillingPattern {
    /// CSV rendering, one `i,j` pair per line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j\n");
        for &(i, j) in &self.pairs {
            out.push_str(&format!("{i},{j}\n"));
        }
        out
    }

    /// Bullet-style sketch of the comparison matrix: `*` above the diagonal
    /// for a comparison, `o` mirrored below, `1` on the diagonal.
    pub fn to_matrix_sketch(&self) -> String {
        matrix_sketch(&self.to_graph())
    }

    pub fn to_mask(&self) -> PcmMask {
        let mut mask = PcmMask::new(self.n);
        for &(i, j) in &self.pairs {
            mask.mark_known(i - 1, j - 1);
        }
        mask
    }

    pub fn to_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> = self.pairs.iter().map(|&(i, j)| (i - 1, j - 1)).collect();
        Graph::from_edges(self.n, &edges).expect("pattern pairs are valid")
    }

    pub fn to_graph6(&self) -> String {
        encode_graph6(&self.to_graph())
    }
}

/// Bullet-style adjacency sketch: `*` above the diagonal for an edge,
/// `o` mirrored below, `1` on the diagonal, `.` elsewhere.
pub fn matrix_sketch(g: &Graph) -> String {
    let n = g.n();
    let mut cells = vec!['.'; n * n];
    for i in 0..n {
        cells[i * n + i] = '1';
    }
    for (i, j) in g.edges() {
        cells[i * n + j] = '*';
        cells[j * n + i] = 'o';
    }
    let mut out = String::new();
    for row in cells.chunks(n) {
        out.extend(row.iter());
        out.push('\n');
    }
    out
}

/// Edge set of a connected comparison graph as an elicitation pattern.
pub fn pattern_from_graph(g: &Graph) -> Result<FillingPattern, PcmError> {
    if !g.is_connected() {
        return Err(PcmError::Disconnected);
    }
    let pairs = g.edges().iter().map(|&(i, j)| (i + 1, j + 1)).collect();
    Ok(FillingPattern { n: g.n(), pairs })
}

/// A recommended pattern with the trade-off data behind it.
#[derive(Debug, Clone)]
pub struct Recommendation {
    pub n: usize,
    pub chosen_k: usize,
    pub expected_d: u32,
    pub pattern: FillingPattern,
    pub c: CompletionRatio,
    pub comparisons: usize,
    pub source: PatternSource,
    pub rationale: String,
}

/// Where the recommended pattern came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternSource {
    Catalog,
    /// Census optimum with the lexicographically smallest canonical form.
    CensusOptimum,
    /// Complete graph (diameter 1 requested or forced).
    Complete,
}

/// Request limits: a diameter cap (default 3) and an optional budget on
/// the number of comparisons.
#[derive(Debug, Clone, Copy, Default)]
pub struct RecommendTarget {
    pub max_diameter: Option<u32>,
    pub max_comparisons: Option<usize>,
    /// Serve the census optimum with the smallest canonical form instead
    /// of the catalog example.
    pub census_optimum: bool,
}

/// Minimal diameter achievable by a connected k-(quasi-)regular graph on
/// n vertices, for k in 3..=5, per the census results.
fn d_min_table(n: usize, k: usize) -> Option<u32> {
    if k >= n {
        return None;
    }
    if k == n - 1 {
        return Some(1); // complete graph
    }
    match k {
        3 => match n {
            4 => Some(1),
            5..=10 => Some(2),
            11..=20 => Some(3),
            _ => None,
        },
        4 => match n {
            5 => Some(1),
            6..=15 => Some(2),
            16..=20 => Some(3),
            _ => None,
        },
        5 => match n {
            6 => Some(1),
            7..=20 => Some(2),
            _ => None,
        },
        _ => None,
    }
}

/// Smallest k in {3,4,5} whose minimal diameter meets the caps; the
/// pattern comes from the catalog (or census, on request).
pub fn recommend(n: usize, target: RecommendTarget) -> Result<Recommendation, PcmError> {
    if !(3..=20).contains(&n) {
        return Err(PcmError::SizeOutOfRange(n));
    }
    let max_d = target.max_diameter.unwrap_or(3);

    let mut frontier = Vec::new();
    for k in [3usize, 4, 5] {
        let Some(d) = d_min_table(n, k) else { continue };
        let edges = required_edge_count(n, k).expect("k < n in table");
        frontier.push(FrontierPoint { k, d, edges });
        if d > max_d {
            continue;
        }
        if let Some(cap) = target.max_comparisons {
            if edges > cap {
                continue;
            }
        }
        let (pattern, source) = pattern_for_cell(n, k, d, target.census_optimum);
        let c = completion_ratio(n, k).expect("k < n in table");
        let rec = Recommendation {
            n,
            chosen_k: k,
            expected_d: d,
            comparisons: edges,
            c,
            rationale: rationale_text(n, k, d, edges),
            pattern,
            source,
        };
        debug_assert!(recommendation_is_sound(&rec));
        return Ok(rec);
    }
    Err(PcmError::Unsatisfiable { frontier })
}

fn pattern_for_cell(n: usize, k: usize, d: u32, census_optimum: bool) -> (FillingPattern, PatternSource) {
    if k == n - 1 {
        let g = Graph::complete(n).expect("n in range");
        return (pattern_from_graph(&g).expect("complete graphs are connected"), PatternSource::Complete);
    }
    if census_optimum && !crate::enumerate::cell_infeasible(n, k) {
        let q = CensusQuery { store_optima: true, ..CensusQuery::new(n, k) };
        if let Ok(r) = min_diameter_census(&q) {
            if let Some(first) = r.optima.first() {
                let g = crate::codec::decode_graph6(first.as_str())
                    .expect("canonical forms decode");
                return (
                    pattern_from_graph(&g).expect("census optima are connected"),
                    PatternSource::CensusOptimum,
                );
            }
        }
    }
    let entry: &CatalogEntry = catalog::lookup(n, k).expect("covered cells have entries");
    debug_assert_eq!(entry.d_claimed, d);
    let g = entry.graph();
    (pattern_from_graph(&g).expect("catalog graphs are connected"), PatternSource::Catalog)
}

fn rationale_text(n: usize, k: usize, d: u32, edges: usize) -> String {
    let mode = regularity_for(n, k);
    format!(
        "smallest regularity k={k} reaching diameter {d} on {n} items; \
         {edges} of {} comparisons elicited, every pair linked by at most {d} \
         intermediate steps ({mode} pattern)",
        n * (n - 1) / 2,
    )
}

fn recommendation_is_sound(rec: &Recommendation) -> bool {
    let g = rec.pattern.to_graph();
    let degree_ok = if rec.chosen_k == rec.n - 1 {
        g.is_k_regular(rec.chosen_k)
    } else {
        match regularity_for(rec.n, rec.chosen_k) {
            Regularity::Regular => g.is_k_regular(rec.chosen_k),
            Regularity::QuasiRegular => g.is_k_quasi_regular(rec.chosen_k),
        }
    };
    g.is_connected()
        && g.diameter() == Some(rec.expected_d)
        && degree_ok
        && rec.pattern.pairs.len() == required_edge_count(rec.n, rec.chosen_k).unwrap()
}

/// Canonical form of the comparison graph behind a mask; handy for
/// comparing elicitation plans regardless of item numbering.
pub fn mask_canonical_form(mask: &PcmMask) -> Result<String, PcmError> {
    let g = graph_from_mask(mask)?;
    Ok(canonical_form(&g).into_string())
}
