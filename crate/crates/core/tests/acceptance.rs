//! Acceptance suite: every reproduction target runs at its stated
//! tolerance (all exact) and prints one pass/fail line per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! lines; the census behind criterion 3 enumerates 805k+ classes and
//! takes several minutes.

use regdiam_core::canonical::{are_isomorphic, canonical_form};
use regdiam_core::catalog::{self, G6Status};
use regdiam_core::codec::{decode_graph6, encode_graph6};
use regdiam_core::enumerate::{
    min_diameter_census, stochastic_low_diameter_search, CensusQuery, SearchQuery,
};
use regdiam_core::graph::{completion_ratio, moore_bound, Graph};
use regdiam_core::pcm::{recommend, RecommendTarget};

fn census(n: usize, k: usize) -> regdiam_core::enumerate::CensusResult {
    min_diameter_census(&CensusQuery::new(n, k)).expect("valid cell")
}

struct Criterion {
    label: &'static str,
    failures: Vec<String>,
}

impl Criterion {
    fn new(label: &'static str) -> Self {
        Criterion { label, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: &str) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("{}: PASS", self.label);
        } else {
            println!("{}: FAIL — {}", self.label, self.failures.join("; "));
            panic!("{} failed: {}", self.label, self.failures.join("; "));
        }
    }
}

#[test]
fn criterion_1_cubic_diameter_two_cells() {
    let mut c = Criterion::new("criterion 1 (k=3 diameter-2 cells, n=5..10)");
    let expected_ratios: [(usize, u64, u64); 6] =
        [(5, 8, 10), (6, 9, 15), (7, 11, 21), (8, 12, 28), (9, 14, 36), (10, 15, 45)];
    for (n, num, den) in expected_ratios {
        let r = census(n, 3);
        c.check(r.exhausted, &format!("({n},3) not exhausted"));
        c.check(r.d_min == Some(2), &format!("({n},3) d_min={:?}, want 2", r.d_min));
        c.check(
            (r.completion.numerator, r.completion.denominator) == (num, den),
            &format!("({n},3) c={} want {num}/{den}", r.completion),
        );
        // optima counts as the reference tables claim
        let count_ok = match n {
            // the reference claims ">= 2"; the cell is provably unique: the
            // degree multiset (4,3,3,3,3) forces K5 minus a perfect
            // matching on the four cubic vertices (complement argument)
            5 => r.optima_count >= 2,
            6 => r.optima_count == 2,
            7 => r.optima_count >= 2,
            8 => r.optima_count == 2,
            9 => r.optima_count >= 1,
            10 => r.optima_count == 1,
            _ => unreachable!(),
        };
        c.check(count_ok, &format!("({n},3) optima_count={}", r.optima_count));
    }
    // the unique (10,3) optimum is the Petersen graph
    let q = CensusQuery { store_optima: true, ..CensusQuery::new(10, 3) };
    let r = min_diameter_census(&q).unwrap();
    let petersen = canonical_form(&catalog::lookup(10, 3).unwrap().graph());
    c.check(r.optima == vec![petersen], "(10,3) optimum is not the Petersen graph");
    c.finish();
}

#[test]
fn criterion_2_cubic_diameter_three_cells() {
    let mut c = Criterion::new("criterion 2 (k=3 diameter-3 cells, n=11..20)");
    for (n, want) in [(12usize, 34u64), (14, 34), (16, 14)] {
        let r = census(n, 3);
        c.check(r.exhausted, &format!("({n},3) not exhausted"));
        c.check(r.d_min == Some(3), &format!("({n},3) d_min={:?}, want 3", r.d_min));
        c.check(
            r.optima_count == want,
            &format!("({n},3) optima_count={}, want {want}", r.optima_count),
        );
    }
    for n in [11usize, 13] {
        let r = census(n, 3);
        c.check(r.d_min == Some(3), &format!("({n},3) d_min={:?}, want 3", r.d_min));
        c.check(
            r.optima_count >= 34,
            &format!("({n},3) optima_count={}, want >=34", r.optima_count),
        );
    }
    // n=18, 20: desk-budget alternative — the catalog entries carry d=3
    // and the Moore bound rules out d=2 (3-regular d=2 caps n at 10)
    c.check(moore_bound(3, 2) == 10, "Moore bound for (3,2) is not 10");
    for n in [18usize, 20] {
        let e = catalog::lookup(n, 3).unwrap();
        let g = e.graph();
        c.check(g.is_k_regular(3), &format!("({n},3) catalog entry not 3-regular"));
        c.check(g.diameter() == Some(3), &format!("({n},3) catalog entry diameter != 3"));
        c.check(
            moore_bound(3, 2) < n as u64,
            &format!("Moore bound does not exclude d=2 at n={n}"),
        );
    }
    c.finish();
}

#[test]
fn criterion_3_quartic_diameter_two_cells() {
    let mut c = Criterion::new("criterion 3 (k=4 diameter-2 cells, n=11..15)");
    for (n, want) in [(11usize, 37u64), (12, 26), (13, 10), (14, 1)] {
        let r = census(n, 4);
        c.check(r.exhausted, &format!("({n},4) not exhausted"));
        c.check(r.d_min == Some(2), &format!("({n},4) d_min={:?}, want 2", r.d_min));
        c.check(
            r.optima_count == want,
            &format!("({n},4) optima_count={}, want {want}", r.optima_count),
        );
    }
    // counts must not depend on the worker count
    let jobs1 = min_diameter_census(&CensusQuery { jobs: Some(1), ..CensusQuery::new(12, 4) })
        .unwrap();
    let jobs2 = min_diameter_census(&CensusQuery { jobs: Some(2), ..CensusQuery::new(12, 4) })
        .unwrap();
    c.check(
        jobs1.total_connected == jobs2.total_connected
            && jobs1.optima_count == jobs2.optima_count,
        "(12,4) counts differ across --jobs",
    );
    // the heavy cell: every connected 4-regular graph on 15 vertices
    let r = census(15, 4);
    c.check(r.exhausted, "(15,4) not exhausted");
    c.check(
        r.total_connected == 805_491,
        &format!("(15,4) total_connected={}, want 805491", r.total_connected),
    );
    c.check(r.d_min == Some(2), &format!("(15,4) d_min={:?}, want 2", r.d_min));
    c.check(r.optima_count == 1, &format!("(15,4) optima_count={}, want 1", r.optima_count));
    c.finish();
}

#[test]
fn criterion_4_quintic_cells_at_desk_scale() {
    let mut c = Criterion::new("criterion 4 (k=5 diameter-2 cells, n=16..20)");
    for n in 16..=20 {
        let e = catalog::lookup(n, 5).unwrap();
        let g = e.graph();
        let degree_ok =
            if n * 5 % 2 == 0 { g.is_k_regular(5) } else { g.is_k_quasi_regular(5) };
        c.check(degree_ok, &format!("({n},5) catalog entry degree contract"));
        c.check(g.is_connected(), &format!("({n},5) catalog entry disconnected"));
        c.check(g.diameter() == Some(2), &format!("({n},5) catalog entry diameter != 2"));
    }
    let out = stochastic_low_diameter_search(&SearchQuery {
        n: 16,
        k: 5,
        mode: None,
        target_d: 2,
        attempts: 100_000,
        distinct_goal: None,
        seed: 1,
    })
    .unwrap();
    c.check(
        out.found.len() >= 3,
        &format!("(16,5) search found {} distinct, want >=3", out.found.len()),
    );
    let clebsch = canonical_form(&catalog::lookup(16, 5).unwrap().graph());
    c.check(
        out.found.contains(&clebsch),
        &format!(
            "(16,5) search found {} distinct diameter-2 classes but none isomorphic to the \
             Clebsch entry (sampling weight ~1/1920 of a typical class over millions of classes)",
            out.found.len()
        ),
    );
    c.finish();
}

#[test]
fn criterion_5_catalog_integrity() {
    let mut c = Criterion::new("criterion 5 (catalog integrity, 26 entries)");
    let report = catalog::verify_catalog();
    c.check(report.entries.len() == 26, "expected 26 entries");
    for r in &report.entries {
        c.check(r.pass, &format!("entry ({},{}) fails structural checks", r.n, r.k));
        c.check(
            r.g6_status != G6Status::Mismatch,
            &format!("entry ({},{}) graph6 not isomorphic to edge list", r.n, r.k),
        );
    }
    // the two entries with documented print defects are reported with raw
    // and reconciled data
    let andrasfai = catalog::lookup(11, 4).unwrap();
    c.check(andrasfai.corrected, "(11,4) not flagged corrected");
    c.check(andrasfai.raw_edges.contains(&(3, 16)), "(11,4) raw print defect not preserved");
    c.check(andrasfai.edges.contains(&(3, 6)), "(11,4) reconciliation missing");
    let a4n19 = catalog::lookup(19, 5).unwrap();
    c.check(a4n19.note.is_some(), "(19,5) reconciliation status not reported");
    c.check(
        a4n19.raw_edges == a4n19.edges,
        "(19,5) edge list and adjacency matrix reconciliation changed the graph",
    );
    c.finish();
}

#[test]
fn criterion_6_codec_round_trips() {
    let mut c = Criterion::new("criterion 6 (graph6 round-trips)");
    for e in catalog::entries() {
        let decoded = decode_graph6(e.graph6).unwrap();
        c.check(
            encode_graph6(&decoded) == e.graph6,
            &format!("({},{}) string round-trip not byte-exact", e.n, e.k),
        );
    }
    let mut state = 0x853c49e6748fea9bu64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for i in 0..10_000 {
        let n = (next() % 20 + 1) as usize;
        let mut g = Graph::new(n).unwrap();
        for a in 0..n {
            for b in a + 1..n {
                if next() % 2 == 0 {
                    g.add_edge(a, b).unwrap();
                }
            }
        }
        if decode_graph6(&encode_graph6(&g)).unwrap() != g {
            c.check(false, &format!("random graph {i} (n={n}) not bit-exact"));
            break;
        }
    }
    c.finish();
}

/// Labeled 3-regular graphs by DFS over the C(n,2) edge slots in fixed
/// order, degree-capped and completability-pruned; connected ones are
/// bucketed by canonical form. Independent of the census generator.
fn brute_force_cubic_classes(n: usize) -> usize {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    let mut deg = vec![0usize; n];
    // remaining[v] = how many undecided slots still touch v
    let mut remaining = vec![n - 1; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut classes = std::collections::HashSet::new();

    fn dfs(
        idx: usize,
        pairs: &[(usize, usize)],
        deg: &mut [usize],
        remaining: &mut [usize],
        edges: &mut Vec<(usize, usize)>,
        classes: &mut std::collections::HashSet<regdiam_core::CanonicalForm>,
        n: usize,
    ) {
        if idx == pairs.len() {
            if deg.iter().all(|&d| d == 3) {
                let g = Graph::from_edges(n, edges).unwrap();
                if g.is_connected() {
                    classes.insert(canonical_form(&g));
                }
            }
            return;
        }
        let (i, j) = pairs[idx];
        remaining[i] -= 1;
        remaining[j] -= 1;
        // skip the slot
        if deg[i] + remaining[i] >= 3 && deg[j] + remaining[j] >= 3 {
            dfs(idx + 1, pairs, deg, remaining, edges, classes, n);
        }
        // take the slot
        if deg[i] < 3 && deg[j] < 3 {
            deg[i] += 1;
            deg[j] += 1;
            edges.push((i, j));
            dfs(idx + 1, pairs, deg, remaining, edges, classes, n);
            edges.pop();
            deg[i] -= 1;
            deg[j] -= 1;
        }
        remaining[i] += 1;
        remaining[j] += 1;
    }

    dfs(0, &pairs, &mut deg, &mut remaining, &mut edges, &mut classes, n);
    classes.len()
}

#[test]
fn criterion_7_oracle_equivalence() {
    let mut c = Criterion::new("criterion 7 (independent oracles)");
    for (n, want) in [(4usize, 1usize), (6, 2), (8, 5)] {
        let brute = brute_force_cubic_classes(n);
        c.check(brute == want, &format!("brute force ({n},3) = {brute}, want {want}"));
        let r = census(n, 3);
        c.check(
            r.total_connected == want as u64,
            &format!("census ({n},3) = {}, want {want}", r.total_connected),
        );
    }

    // isomorphism decisions against the all-permutations oracle
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        let mut all = Vec::new();
        let mut arr: Vec<usize> = (0..n).collect();
        fn rec(k: usize, arr: &mut Vec<usize>, all: &mut Vec<Vec<usize>>) {
            if k <= 1 {
                all.push(arr.clone());
                return;
            }
            for i in 0..k {
                rec(k - 1, arr, all);
                if k % 2 == 0 {
                    arr.swap(i, k - 1);
                } else {
                    arr.swap(0, k - 1);
                }
            }
        }
        rec(n, &mut arr, &mut all);
        all
    }
    struct Rng(u64);
    impl Rng {
        fn next(&mut self) -> u64 {
            self.0 ^= self.0 << 13;
            self.0 ^= self.0 >> 7;
            self.0 ^= self.0 << 17;
            self.0
        }
        fn graph(&mut self, n: usize) -> Graph {
            let mut g = Graph::new(n).unwrap();
            for a in 0..n {
                for b in a + 1..n {
                    if self.next() % 100 < 45 {
                        g.add_edge(a, b).unwrap();
                    }
                }
            }
            g
        }
    }
    let mut rng = Rng(0x2b992ddfa23249d6);
    let mut disagreements = 0;
    for trial in 0..1000 {
        let n = (trial % 6) + 2; // 2..=7
        let a = rng.graph(n);
        let b = if trial % 2 == 0 {
            let mut p: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                p.swap(i, (rng.next() % (i as u64 + 1)) as usize);
            }
            a.permuted(&p)
        } else {
            rng.graph(n)
        };
        let fast = are_isomorphic(&a, &b);
        let slow = permutations(n).iter().any(|p| a.permuted(p) == b);
        if fast != slow {
            disagreements += 1;
        }
    }
    c.check(disagreements == 0, &format!("{disagreements} oracle disagreements"));
    c.finish();
}

#[test]
fn criterion_8_formula_checks() {
    let mut c = Criterion::new("criterion 8 (formulas vs printed values)");
    for n in 3..=20usize {
        let d = Graph::cycle(n).unwrap().diameter();
        c.check(d == Some(n as u32 / 2), &format!("diameter(C_{n}) = {d:?}, want {}", n / 2));
    }
    // every completion ratio the reference tables print
    let printed: [(usize, usize, u64, u64); 26] = [
        (5, 3, 8, 10), (6, 3, 9, 15), (7, 3, 11, 21), (8, 3, 12, 28),
        (9, 3, 14, 36), (10, 3, 15, 45),
        (11, 3, 17, 55), (12, 3, 18, 66), (13, 3, 20, 78), (14, 3, 21, 91),
        (15, 3, 23, 105), (16, 3, 24, 120), (17, 3, 26, 136), (18, 3, 27, 153),
        (19, 3, 29, 171), (20, 3, 30, 190),
        (11, 4, 22, 55), (12, 4, 24, 66), (13, 4, 26, 78), (14, 4, 28, 91), (15, 4, 30, 105),
        (16, 5, 40, 120), (17, 5, 43, 136), (18, 5, 45, 153), (19, 5, 48, 171), (20, 5, 50, 190),
    ];
    for (n, k, num, den) in printed {
        let got = completion_ratio(n, k).unwrap();
        c.check(
            (got.numerator, got.denominator) == (num, den),
            &format!("c({n},{k}) = {got}, want {num}/{den}"),
        );
    }
    c.finish();
}

#[test]
fn criterion_9_recommendation_policy() {
    let mut c = Criterion::new("criterion 9 (recommendation policy)");
    for n in 5..=20usize {
        let want_k = match n {
            5..=10 => 3,
            11..=15 => 4,
            _ => 5,
        };
        let rec =
            recommend(n, RecommendTarget { max_diameter: Some(2), ..Default::default() })
                .unwrap();
        c.check(
            rec.chosen_k == want_k,
            &format!("recommend({n}, d<=2) chose k={}, want {want_k}", rec.chosen_k),
        );
        c.check(rec.expected_d == 2, &format!("recommend({n}, d<=2) d={}", rec.expected_d));
    }
    let rec = recommend(20, RecommendTarget { max_diameter: Some(3), ..Default::default() })
        .unwrap();
    c.check(
        rec.comparisons == 30,
        &format!("recommend(20, d<=3) needs {} comparisons, want 30", rec.comparisons),
    );
    c.finish();
}

#[test]
fn search_and_catalog_cross_check() {
    // the (20,5) catalog pattern is reachable: the entry itself verifies
    // and a short seeded search finds at least one diameter-2 class
    let out = stochastic_low_diameter_search(&SearchQuery {
        n: 20,
        k: 5,
        mode: None,
        target_d: 2,
        attempts: 3_000,
        distinct_goal: Some(1),
        seed: 5,
    })
    .unwrap();
    assert!(!out.found.is_empty(), "(20,5) search found no diameter-2 graph");
    for form in &out.found {
        let g = decode_graph6(form.as_str()).unwrap();
        assert!(g.is_k_regular(5) && g.diameter() == Some(2));
    }
    // census optima for exhausted cells contain the catalog entry's class
    for (n, k) in [(10usize, 3usize), (12, 3), (14, 4)] {
        let q = CensusQuery { store_optima: true, ..CensusQuery::new(n, k) };
        let r = min_diameter_census(&q).unwrap();
        let entry_form = canonical_form(&catalog::lookup(n, k).unwrap().graph());
        assert!(
            r.optima.contains(&entry_form),
            "catalog ({n},{k}) entry missing from census optima"
        );
        let entry_graph = catalog::lookup(n, k).unwrap().graph();
        let decoded = decode_graph6(entry_form.as_str()).unwrap();
        assert!(are_isomorphic(&entry_graph, &decoded));
    }
}
