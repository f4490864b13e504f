//! Isomorph-free generation of connected k-(quasi-)regular graphs, the
//! minimal-diameter census, and a seeded stochastic search for the cells
//! where exhaustion is out of reach.
//!
//! Generation adds one vertex at a time, connecting it to a subset of the
//! existing vertices, with residual-degree feasibility pruning. Isomorph
//! rejection is by canonical construction path: a child survives only when
//! its new vertex lies in the canonically chosen "last vertex" orbit, so
//! every unlabeled graph is produced exactly once and workers never share a
//! dedup set. Counts are exact and independent of the worker count.

use crate::canonical::{canonical_form_from, canonize_with_generators, CanonicalForm, Encoding};
use crate::graph::{completion_ratio, CompletionRatio, Graph};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use std::collections::HashSet;
use std::fmt;
use std::ops::RangeInclusive;
use std::sync::atomic::{AtomicBool, AtomicU32, AtomicU64, Ordering};
use std::sync::Mutex;

/// Enumeration works on at most 20 vertices.
pub const ENUM_MAX_N: usize = 20;

/// Degree contract of a census cell. Quasi-regular means exactly one vertex
/// of degree `k + 1`, which is forced whenever `n * k` is odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regularity {
    Regular,
    QuasiRegular,
}

impl fmt::Display for Regularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regularity::Regular => write!(f, "regular"),
            Regularity::QuasiRegular => write!(f, "quasi-regular"),
        }
    }
}

/// Mode dictated by parity: quasi-regular iff `n * k` is odd.
pub fn regularity_for(n: usize, k: usize) -> Regularity {
    if n * k % 2 == 1 {
        Regularity::QuasiRegular
    } else {
        Regularity::Regular
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CensusError {
    SizeOutOfRange(usize),
    DegreeOutOfRange { k: usize, n: usize },
    /// Requested mode contradicts the parity of `n * k`.
    ParityMismatch { n: usize, k: usize, requested: Regularity },
}

impl fmt::Display for CensusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusError::SizeOutOfRange(n) => {
                write!(f, "vertex count {n} outside enumeration range 2..={ENUM_MAX_N}")
            }
            CensusError::DegreeOutOfRange { k, n } => {
                write!(f, "degree {k} not feasible on {n} vertices")
            }
            CensusError::ParityMismatch { n, k, requested } => {
                write!(f, "{requested} mode impossible for n={n}, k={k} (n*k parity)")
            }
        }
    }
}

impl std::error::Error for CensusError {}

fn validate(n: usize, k: usize, mode: Option<Regularity>) -> Result<Regularity, CensusError> {
    if !(2..=ENUM_MAX_N).contains(&n) {
        return Err(CensusError::SizeOutOfRange(n));
    }
    let auto = regularity_for(n, k);
    if let Some(m) = mode {
        if m != auto {
            return Err(CensusError::ParityMismatch { n, k, requested: m });
        }
    }
    let limit = match auto {
        Regularity::Regular => n - 1,
        Regularity::QuasiRegular => n - 2, // the special vertex needs degree k+1 <= n-1
    };
    if k > limit {
        return Err(CensusError::DegreeOutOfRange { k, n });
    }
    Ok(auto)
}

// ---------------------------------------------------------------------------
// generation state
// ---------------------------------------------------------------------------

#[derive(Clone, Copy)]
struct Partial {
    m: usize,
    rows: [u64; ENUM_MAX_N],
    deg: [u8; ENUM_MAX_N],
}

impl Partial {
    fn seed() -> Self {
        Partial { m: 1, rows: [0; ENUM_MAX_N], deg: [0; ENUM_MAX_N] }
    }

    /// Add vertex `m` adjacent to the vertices in `mask`.
    fn child(&self, mask: u32) -> Self {
        let mut c = *self;
        let v = c.m;
        let mut bits = mask;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            c.rows[u] |= 1 << v;
            c.rows[v] |= 1 << u;
            c.deg[u] += 1;
            c.deg[v] += 1;
        }
        c.m = v + 1;
        c
    }

    fn is_connected(&self) -> bool {
        let mut seen = 1u64;
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
        seen.count_ones() as usize == self.m
    }

    fn to_graph(self) -> Graph {
        Graph::from_rows(self.m, &self.rows[..self.m])
    }

    /// Exact diameter when connected and `<= cap`, else `None`.
    fn diameter_capped(&self, cap: u32) -> Option<u32> {
        let mut max = 0u32;
        for start in 0..self.m {
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
            if seen.count_ones() as usize != self.m || level > cap {
                return None;
            }
            max = max.max(level);
        }
        Some(max)
    }

    /// Diameter plus the number of ordered vertex pairs at that distance;
    /// `None` when disconnected. The pair count orders equal-diameter
    /// states for the stochastic walk.
    fn diameter_potential(&self) -> Option<(u32, u32)> {
        let mut max = 0u32;
        let mut worst_pairs = 0u32;
        for start in 0..self.m {
            let mut seen = 1u64 << start;
            let mut frontier = seen;
            let mut level = 0u32;
            let mut last = frontier;
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
                    last = frontier;
                }
            }
            if seen.count_ones() as usize != self.m {
                return None;
            }
            if level > max {
                max = level;
                worst_pairs = last.count_ones();
            } else if level == max {
                worst_pairs += last.count_ones();
            }
        }
        Some((max, worst_pairs))
    }
}

struct Ctx {
    n: usize,
    k: usize,
    quasi: bool,
    budget: Option<u64>,
    nodes: AtomicU64,
    stopped: AtomicBool,
}

impl Ctx {
    /// Count one examined candidate; false once the budget is exhausted.
    fn tick(&self) -> bool {
        let c = self.nodes.fetch_add(1, Ordering::Relaxed);
        if let Some(b) = self.budget {
            if c >= b {
                self.stopped.store(true, Ordering::Relaxed);
                return false;
            }
        }
        true
    }

    fn stopped(&self) -> bool {
        self.stopped.load(Ordering::Relaxed)
    }
}

// ---------------------------------------------------------------------------
// candidate neighbor sets for the next vertex
// ---------------------------------------------------------------------------

/// Enumerate the feasible neighbor sets for the next vertex. Every check is
/// a necessary condition for completability to the target degree multiset,
/// so no graph on a canonical construction path is ever pruned.
fn candidate_sets(ctx: &Ctx, pg: &Partial, out: &mut Vec<u32>) {
    out.clear();
    let n = ctx.n;
    let k = ctx.k as u8;
    let m = pg.m;
    let future = n - m - 1; // vertices still to come after the new one

    let special_used = ctx.quasi && pg.deg[..m].iter().any(|&d| d == k + 1);
    let bonus_free = ctx.quasi && !special_used;

    // Vertices whose deficit equals the number of remaining vertices must
    // take an edge to every one of them, including the new vertex.
    let mut must = 0u32;
    let mut optional: Vec<u8> = Vec::with_capacity(m);
    for v in 0..m {
        let d = pg.deg[v];
        if d < k {
            let deficit = (k - d) as usize;
            if deficit > future + 1 {
                return; // already unsatisfiable
            }
            if deficit == future + 1 {
                must |= 1 << v;
            } else {
                optional.push(v as u8);
            }
        }
    }
    let must_size = must.count_ones() as usize;

    // Feasibility after hypothetically adding the new vertex with the given
    // back-edges. `bonus_spent` records that this step placed the single
    // degree-(k+1) vertex of quasi mode.
    let check = |mask: u32, new_deg: u8, bonus_spent: bool| -> bool {
        let future = future as i64;
        let kk = k as i64;
        let mut rmin: i64 = 0;
        let mut deficient: i64 = 0;
        for v in 0..m {
            let d = pg.deg[v] + (mask >> v & 1) as u8;
            if d < k {
                let r = (k - d) as i64;
                if r > future {
                    return false;
                }
                rmin += r;
                deficient += 1;
            }
        }
        if new_deg < k {
            let r = kk - new_deg as i64;
            if r > future {
                return false;
            }
            rmin += r;
            deficient += 1;
        }
        let bonus = i64::from(bonus_free && !bonus_spent);
        // the future side supplies at most future*k edges, +1 if it hosts
        // the quasi bonus
        if rmin > future * kk + bonus {
            return false;
        }
        // each future vertex needs k distinct neighbors among currently
        // deficient vertices, one possible bonus host, and its peers
        if future >= 1 && deficient + bonus + (future - 1) < kk {
            return false;
        }
        // parity of the future-internal degree sum; a pending bonus must
        // land somewhere and flips it
        if (future * kk - rmin - bonus).rem_euclid(2) != 0 {
            return false;
        }
        true
    };

    // Subsets of `optional` sized within [min_size, cap] counting the
    // pre-selected `base`, each passed through the feasibility check.
    let dfs = |base: u32, base_size: usize, cap: usize, min_size: usize, bonus_spent: bool, out: &mut Vec<u32>| {
        if base_size > cap {
            return;
        }
        let mut stack: Vec<(usize, u32, usize)> = vec![(0, base, base_size)];
        while let Some((idx, mask, size)) = stack.pop() {
            if size == cap || idx == optional.len() {
                if size >= min_size && check(mask, size as u8, bonus_spent) {
                    out.push(mask);
                }
                continue;
            }
            stack.push((idx + 1, mask, size));
            stack.push((idx + 1, mask | 1 << optional[idx], size + 1));
        }
    };

    // new vertex ends with at most k back-edges; bonus stays unplaced
    dfs(must, must_size, k as usize, 0, false, out);
    if bonus_free {
        // the new vertex itself is the degree-(k+1) vertex
        if (k as usize) < m {
            dfs(must, must_size, k as usize + 1, k as usize + 1, true, out);
        }
        // one old vertex at degree k takes the bonus edge
        for v in 0..m {
            if pg.deg[v] == k {
                dfs(must | 1 << v, must_size + 1, k as usize, 0, true, out);
            }
        }
    }

    out.sort_unstable();
}

// ---------------------------------------------------------------------------
// canonical-construction-path acceptance
// ---------------------------------------------------------------------------

/// Cheap per-vertex invariant: degree and sorted neighbor degrees, packed
/// so larger keys compare greater. Degrees are at most 6, so 3 bits each.
fn vertex_keys(pg: &Partial, keys: &mut [u32; ENUM_MAX_N]) {
    for v in 0..pg.m {
        let mut nd = [0u8; 8];
        let mut cnt = 0usize;
        let mut bits = pg.rows[v];
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if cnt < 8 {
                nd[cnt] = pg.deg[u];
            }
            cnt += 1;
        }
        let filled = cnt.min(8);
        nd[..filled].sort_unstable_by(|a, b| b.cmp(a));
        let mut key = (pg.deg[v] as u32) << 24;
        for (i, &d) in nd[..filled].iter().enumerate() {
            key |= (d as u32) << (21 - 3 * i);
        }
        keys[v] = key;
    }
}

struct Accepted {
    child: Partial,
    encoding: Encoding,
    positions: Vec<usize>,
    gens: Vec<Vec<usize>>,
}

/// Keep the child only if its new vertex lies in the canonical deletion
/// orbit: the orbit of the maximal-canonical-position vertex among the
/// vertices of maximal invariant key.
fn accept(child: &Partial) -> Option<Accepted> {
    let new_v = child.m - 1;
    let mut keys = [0u32; ENUM_MAX_N];
    vertex_keys(child, &mut keys);
    let max_key = *keys[..child.m].iter().max().unwrap();
    if keys[new_v] != max_key {
        return None;
    }
    let (canon, gens) = canonize_with_generators(child.m, &child.rows[..child.m]);
    let target = (0..child.m)
        .filter(|&v| keys[v] == max_key)
        .max_by_key(|&v| canon.positions[v])
        .unwrap();
    if canon.orbit[new_v] != canon.orbit[target] {
        return None;
    }
    Some(Accepted { child: *child, encoding: canon.encoding, positions: canon.positions, gens })
}

fn apply_perm_mask(mask: u32, perm: &[usize]) -> u32 {
    let mut out = 0u32;
    let mut bits = mask;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        out |= 1 << perm[v];
    }
    out
}

/// One representative candidate mask per orbit under the parent's
/// automorphism group. Purely an optimization: leftover duplicates would
/// still be caught by the sibling dedup in `accepted_children`.
fn orbit_filter(cands: &mut Vec<u32>, gens: &[Vec<usize>]) {
    if gens.is_empty() || cands.len() <= 1 {
        return;
    }
    let index: HashSet<u32> = cands.iter().copied().collect();
    let mut covered: HashSet<u32> = HashSet::with_capacity(cands.len());
    let mut reps = Vec::with_capacity(cands.len());
    let mut queue = Vec::new();
    for &c in cands.iter() {
        if covered.contains(&c) {
            continue;
        }
        reps.push(c);
        queue.clear();
        queue.push(c);
        covered.insert(c);
        while let Some(mask) = queue.pop() {
            for g in gens {
                let img = apply_perm_mask(mask, g);
                if index.contains(&img) && covered.insert(img) {
                    queue.push(img);
                }
            }
        }
    }
    *cands = reps;
}

fn accepted_children(ctx: &Ctx, pg: &Partial, gens: &[Vec<usize>]) -> Vec<Accepted> {
    let mut cands = Vec::new();
    candidate_sets(ctx, pg, &mut cands);
    orbit_filter(&mut cands, gens);
    let mut out: Vec<Accepted> = Vec::new();
    let mut seen: Vec<Encoding> = Vec::new();
    for mask in cands {
        if !ctx.tick() {
            break;
        }
        let child = pg.child(mask);
        if let Some(acc) = accept(&child) {
            if seen.contains(&acc.encoding) {
                continue;
            }
            seen.push(acc.encoding);
            out.push(acc);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// search drivers
// ---------------------------------------------------------------------------

/// How deep parallel task spawning reaches into the search tree.
const PAR_SPAWN_DEPTH: usize = 8;

fn run_seq(ctx: &Ctx, pg: &Partial, gens: &[Vec<usize>], sink: &mut dyn FnMut(&Accepted)) {
    for acc in accepted_children(ctx, pg, gens) {
        if ctx.stopped() {
            return;
        }
        if acc.child.m == ctx.n {
            if acc.child.is_connected() {
                sink(&acc);
            }
        } else {
            run_seq(ctx, &acc.child, &acc.gens, sink);
        }
    }
}

fn run_par<S>(ctx: &Ctx, pg: &Partial, gens: &[Vec<usize>], sink: &S)
where
    S: Fn(&Accepted) + Sync,
{
    let children = accepted_children(ctx, pg, gens);
    if ctx.stopped() {
        return;
    }
    if pg.m < PAR_SPAWN_DEPTH.min(ctx.n.saturating_sub(1)) && children.len() > 1 {
        rayon::scope(|s| {
            for acc in children {
                s.spawn(move |_| {
                    if acc.child.m == ctx.n {
                        if acc.child.is_connected() {
                            sink(&acc);
                        }
                    } else {
                        run_par(ctx, &acc.child, &acc.gens, sink);
                    }
                });
            }
        });
    } else {
        let mut adapter = |acc: &Accepted| sink(acc);
        for acc in children {
            if ctx.stopped() {
                return;
            }
            if acc.child.m == ctx.n {
                if acc.child.is_connected() {
                    adapter(&acc);
                }
            } else {
                run_seq(ctx, &acc.child, &acc.gens, &mut adapter);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// census
// ---------------------------------------------------------------------------

/// Census request for one `(n, k)` cell.
#[derive(Clone, Debug)]
pub struct CensusQuery {
    pub n: usize,
    pub k: usize,
    /// `None` selects the mode by parity (the only feasible choice).
    pub mode: Option<Regularity>,
    /// Keep the canonical forms of the minimal-diameter graphs.
    pub store_optima: bool,
    /// Node budget: candidates examined before giving up.
    pub budget: Option<u64>,
    /// Worker threads; `None` uses the global pool, `Some(1)` forces a
    /// sequential run.
    pub jobs: Option<usize>,
}

impl CensusQuery {
    pub fn new(n: usize, k: usize) -> Self {
        CensusQuery { n, k, mode: None, store_optima: false, budget: None, jobs: None }
    }
}

/// Census outcome. Counts are exact whenever `exhausted` is true.
#[derive(Clone, Debug)]
pub struct CensusResult {
    pub n: usize,
    pub k: usize,
    pub mode: Regularity,
    /// Non-isomorphic connected graphs meeting the degree contract.
    pub total_connected: u64,
    /// Minimal diameter over those graphs; `None` if none were found.
    pub d_min: Option<u32>,
    /// Number of graphs attaining `d_min`.
    pub optima_count: u64,
    /// Canonical forms of the optima, sorted; filled on request.
    pub optima: Vec<CanonicalForm>,
    pub exhausted: bool,
    /// Candidates examined.
    pub nodes: u64,
    pub completion: CompletionRatio,
}

struct CensusAgg {
    store_optima: bool,
    total_connected: AtomicU64,
    incumbent: AtomicU32,
    best: Mutex<BestSet>,
}

struct BestSet {
    d_min: u32,
    count: u64,
    optima: Vec<CanonicalForm>,
}

impl CensusAgg {
    fn visit(&self, acc: &Accepted) {
        self.total_connected.fetch_add(1, Ordering::Relaxed);
        let cap = self.incumbent.load(Ordering::Relaxed);
        // a graph discarded here has diameter above the final minimum,
        // because the incumbent never sits below it
        let Some(diam) = acc.child.diameter_capped(cap) else {
            return;
        };
        let mut best = self.best.lock().unwrap();
        if diam > best.d_min {
            return;
        }
        if diam < best.d_min {
            best.d_min = diam;
            best.count = 0;
            best.optima.clear();
            self.incumbent.store(diam, Ordering::Relaxed);
        }
        best.count += 1;
        if self.store_optima {
            best.optima.push(canonical_form_from(&acc.child.to_graph(), &acc.positions));
        }
    }
}

/// Enumerate the cell and report the minimal diameter and its attainers.
pub fn min_diameter_census(q: &CensusQuery) -> Result<CensusResult, CensusError> {
    let mode = validate(q.n, q.k, q.mode)?;
    let ctx = Ctx {
        n: q.n,
        k: q.k,
        quasi: mode == Regularity::QuasiRegular,
        budget: q.budget,
        nodes: AtomicU64::new(0),
        stopped: AtomicBool::new(false),
    };
    let agg = CensusAgg {
        store_optima: q.store_optima,
        total_connected: AtomicU64::new(0),
        incumbent: AtomicU32::new(u32::MAX),
        best: Mutex::new(BestSet { d_min: u32::MAX, count: 0, optima: Vec::new() }),
    };
    let seed = Partial::seed();

    match q.jobs {
        Some(1) => {
            let mut sink = |acc: &Accepted| agg.visit(acc);
            run_seq(&ctx, &seed, &[], &mut sink);
        }
        Some(j) => {
            let pool =
                rayon::ThreadPoolBuilder::new().num_threads(j).build().expect("thread pool");
            pool.install(|| run_par(&ctx, &seed, &[], &|acc: &Accepted| agg.visit(acc)));
        }
        None => run_par(&ctx, &seed, &[], &|acc: &Accepted| agg.visit(acc)),
    }

    let best = agg.best.into_inner().unwrap();
    let mut optima = best.optima;
    optima.sort_unstable();
    Ok(CensusResult {
        n: q.n,
        k: q.k,
        mode,
        total_connected: agg.total_connected.into_inner(),
        d_min: if best.count > 0 { Some(best.d_min) } else { None },
        optima_count: best.count,
        optima,
        exhausted: !ctx.stopped(),
        nodes: ctx.nodes.into_inner(),
        completion: completion_ratio(q.n, q.k).expect("validated"),
    })
}

/// Stats of a plain enumeration run.
#[derive(Clone, Copy, Debug)]
pub struct EnumStats {
    /// Isomorphism classes of connected graphs delivered.
    pub classes_connected: u64,
    /// Candidates examined.
    pub nodes: u64,
    pub exhausted: bool,
}

/// Stream one representative per isomorphism class of connected graphs
/// with the cell's degree contract. Sequential; the census wraps the same
/// machinery with workers.
pub fn enumerate_degree_constrained<F>(
    n: usize,
    k: usize,
    mode: Option<Regularity>,
    budget: Option<u64>,
    mut visit: F,
) -> Result<EnumStats, CensusError>
where
    F: FnMut(&Graph),
{
    let mode = validate(n, k, mode)?;
    let ctx = Ctx {
        n,
        k,
        quasi: mode == Regularity::QuasiRegular,
        budget,
        nodes: AtomicU64::new(0),
        stopped: AtomicBool::new(false),
    };
    let mut connected = 0u64;
    let mut sink = |acc: &Accepted| {
        connected += 1;
        visit(&acc.child.to_graph());
    };
    let seed = Partial::seed();
    run_seq(&ctx, &seed, &[], &mut sink);
    let exhausted = !ctx.stopped();
    Ok(EnumStats { classes_connected: connected, nodes: ctx.nodes.into_inner(), exhausted })
}

// ---------------------------------------------------------------------------
// stochastic search
// ---------------------------------------------------------------------------

/// Seeded random search for graphs meeting a diameter target.
#[derive(Clone, Debug)]
pub struct SearchQuery {
    pub n: usize,
    pub k: usize,
    pub mode: Option<Regularity>,
    pub target_d: u32,
    /// Random starts (pairing-model constructions).
    pub attempts: u64,
    /// Stop once this many distinct classes are found.
    pub distinct_goal: Option<usize>,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    /// Distinct canonical forms meeting the target, sorted.
    pub found: Vec<CanonicalForm>,
    pub attempts_used: u64,
    /// Successful attempts, including rediscoveries.
    pub successes: u64,
}

/// Random simple graph with the given degree sequence by the pairing
/// model, retrying until the pairing has no loops or doubled edges.
fn random_degree_graph(rng: &mut StdRng, n: usize, degrees: &[u8]) -> Option<Partial> {
    let mut stubs: Vec<u8> = Vec::new();
    for (v, &d) in degrees.iter().enumerate() {
        for _ in 0..d {
            stubs.push(v as u8);
        }
    }
    'retry: for _ in 0..200 {
        stubs.shuffle(rng);
        let mut pg = Partial { m: n, rows: [0; ENUM_MAX_N], deg: [0; ENUM_MAX_N] };
        for pair in stubs.chunks_exact(2) {
            let (a, b) = (pair[0] as usize, pair[1] as usize);
            if a == b || pg.rows[a] >> b & 1 == 1 {
                continue 'retry;
            }
            pg.rows[a] |= 1 << b;
            pg.rows[b] |= 1 << a;
            pg.deg[a] += 1;
            pg.deg[b] += 1;
        }
        return Some(pg);
    }
    None
}

/// Degree-preserving double edge swaps. A swap is kept when the pair
/// (diameter, count of maximum-distance pairs) does not increase
/// lexicographically, so the diameter itself never increases and equal-
/// diameter states drift toward fewer worst pairs. True once the diameter
/// reaches the target.
fn improve_diameter(rng: &mut StdRng, pg: &mut Partial, target: u32, swap_budget: u32) -> bool {
    let mut cur = match pg.diameter_potential() {
        Some(p) => p,
        None => return false, // disconnected start; caller retries
    };
    if cur.0 <= target {
        return true;
    }
    let mut edges: Vec<(u8, u8)> = Vec::new();
    for v in 0..pg.m {
        let mut bits = pg.rows[v] & !((1u64 << (v + 1)) - 1);
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            edges.push((v as u8, u as u8));
        }
    }
    for _ in 0..swap_budget {
        let i = rng.random_range(0..edges.len());
        let j = rng.random_range(0..edges.len());
        if i == j {
            continue;
        }
        let (a, b) = (edges[i].0 as usize, edges[i].1 as usize);
        let (c, d) = (edges[j].0 as usize, edges[j].1 as usize);
        if a == c || a == d || b == c || b == d {
            continue;
        }
        let (x, y, z, w) = if rng.random_bool(0.5) { (a, c, b, d) } else { (a, d, b, c) };
        if pg.rows[x] >> y & 1 == 1 || pg.rows[z] >> w & 1 == 1 {
            continue;
        }
        pg.rows[a] &= !(1 << b);
        pg.rows[b] &= !(1 << a);
        pg.rows[c] &= !(1 << d);
        pg.rows[d] &= !(1 << c);
        pg.rows[x] |= 1 << y;
        pg.rows[y] |= 1 << x;
        pg.rows[z] |= 1 << w;
        pg.rows[w] |= 1 << z;
        match pg.diameter_potential() {
            Some(next) if next <= cur => {
                cur = next;
                edges[i] = (x.min(y) as u8, x.max(y) as u8);
                edges[j] = (z.min(w) as u8, z.max(w) as u8);
                if cur.0 <= target {
                    return true;
                }
            }
            _ => {
                // potential grew or the graph disconnected: revert
                pg.rows[x] &= !(1 << y);
                pg.rows[y] &= !(1 << x);
                pg.rows[z] &= !(1 << w);
                pg.rows[w] &= !(1 << z);
                pg.rows[a] |= 1 << b;
                pg.rows[b] |= 1 << a;
                pg.rows[c] |= 1 << d;
                pg.rows[d] |= 1 << c;
            }
        }
    }
    false
}

/// Random construction plus swap improvement, deduplicated by canonical
/// form. Every reported graph is re-verified against the degree contract,
/// connectivity, and the diameter target before it is emitted.
pub fn stochastic_low_diameter_search(q: &SearchQuery) -> Result<SearchOutcome, CensusError> {
    let mode = validate(q.n, q.k, q.mode)?;
    let mut rng = StdRng::seed_from_u64(q.seed);
    let mut degrees = vec![q.k as u8; q.n];
    if mode == Regularity::QuasiRegular {
        degrees[0] = q.k as u8 + 1;
    }
    let swap_budget = 80 * q.n as u32;

    let mut found: HashSet<CanonicalForm> = HashSet::new();
    let mut successes = 0u64;
    let mut attempts_used = 0u64;
    for _ in 0..q.attempts {
        attempts_used += 1;
        let Some(mut pg) = random_degree_graph(&mut rng, q.n, &degrees) else {
            continue;
        };
        if !improve_diameter(&mut rng, &mut pg, q.target_d, swap_budget) {
            continue;
        }
        let g = pg.to_graph();
        let degree_ok = match mode {
            Regularity::Regular => g.is_k_regular(q.k),
            Regularity::QuasiRegular => g.is_k_quasi_regular(q.k),
        };
        if !degree_ok || !g.is_connected() {
            continue;
        }
        match g.diameter() {
            Some(d) if d <= q.target_d => {}
            _ => continue,
        }
        successes += 1;
        found.insert(crate::canonical::canonical_form(&g));
        if let Some(goal) = q.distinct_goal {
            if found.len() >= goal {
                break;
            }
        }
    }
    let mut found: Vec<CanonicalForm> = found.into_iter().collect();
    found.sort_unstable();
    Ok(SearchOutcome { found, attempts_used, successes })
}

// ---------------------------------------------------------------------------
// summary table
// ---------------------------------------------------------------------------

/// Count claim for a summary cell: exact when the census exhausted the
/// cell, a lower bound otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountClaim {
    Exact(u64),
    AtLeast(u64),
}

impl fmt::Display for CountClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountClaim::Exact(c) => write!(f, "{c}"),
            CountClaim::AtLeast(c) => write!(f, ">={c}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SummaryRow {
    pub n: usize,
    pub k: usize,
    pub mode: Regularity,
    pub d_min: Option<u32>,
    pub count: CountClaim,
    pub c: CompletionRatio,
}

#[derive(Clone, Debug)]
pub struct SummaryOptions {
    /// Node budget per exhaustive cell.
    pub budget: Option<u64>,
    pub jobs: Option<usize>,
    /// Run the `(n >= 16, k = 5)` cells exhaustively instead of sampling.
    pub force_exhaustive: bool,
    pub stochastic_seed: u64,
    pub stochastic_attempts: u64,
}

impl Default for SummaryOptions {
    fn default() -> Self {
        SummaryOptions {
            budget: Some(100_000_000),
            jobs: None,
            force_exhaustive: false,
            stochastic_seed: 0x5eed,
            stochastic_attempts: 20_000,
        }
    }
}

/// Whether a cell is out of exhaustive reach at desk scale.
pub fn cell_infeasible(n: usize, k: usize) -> bool {
    k == 5 && n >= 16
}

/// Run every `(n, k)` cell and report the minimal diameter, the count of
/// optima (exact or lower bound), and the completion ratio.
pub fn summary_table(
    n_range: RangeInclusive<usize>,
    ks: &[usize],
    opts: &SummaryOptions,
) -> Vec<SummaryRow> {
    let mut rows = Vec::new();
    for n in n_range {
        for &k in ks {
            if validate(n, k, None).is_err() {
                continue;
            }
            let mode = regularity_for(n, k);
            let c = completion_ratio(n, k).expect("validated");
            if cell_infeasible(n, k) && !opts.force_exhaustive {
                let q = SearchQuery {
                    n,
                    k,
                    mode: None,
                    target_d: 2,
                    attempts: opts.stochastic_attempts,
                    distinct_goal: None,
                    seed: opts.stochastic_seed,
                };
                let out = stochastic_low_diameter_search(&q).expect("validated");
                let (d_min, count) = if out.found.is_empty() {
                    (None, CountClaim::AtLeast(0))
                } else {
                    (Some(2), CountClaim::AtLeast(out.found.len() as u64))
                };
                rows.push(SummaryRow { n, k, mode, d_min, count, c });
            } else {
                let q = CensusQuery {
                    n,
                    k,
                    mode: None,
                    store_optima: false,
                    budget: opts.budget,
                    jobs: opts.jobs,
                };
                let r = min_diameter_census(&q).expect("validated");
                let count = if r.exhausted {
                    CountClaim::Exact(r.optima_count)
                } else {
                    CountClaim::AtLeast(r.optima_count)
                };
                rows.push(SummaryRow { n, k, mode, d_min: r.d_min, count, c });
            }
        }
    }
    rows
}

/// Text rendering of the summary rows.
pub fn render_summary(rows: &[SummaryRow]) -> String {
    let mut out = String::from("n  k  mode           d_min  count   c\n");
    for r in rows {
        let d = r.d_min.map_or("-".to_string(), |d| d.to_string());
        out.push_str(&format!(
            "{:<2} {:<2} {:<14} {:<6} {:<7} {}\n",
            r.n,
            r.k,
            r.mode.to_string(),
            d,
            r.count.to_string(),
            r.c
        ));
    }
    out
}
