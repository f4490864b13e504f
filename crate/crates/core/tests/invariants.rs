//! Property tests for the structural invariants: codec round-trips,
//! relabeling invariance of the canonical form, and pattern/mask
//! conversions.

use proptest::prelude::*;
use regdiam_core::canonical::canonical_form;
use regdiam_core::codec::{decode_graph6, encode_graph6, format_edge_list, parse_edge_list};
use regdiam_core::graph::Graph;
use regdiam_core::pcm::{graph_from_mask, pattern_from_graph};

/// Arbitrary graph on 1..=20 vertices from an edge-presence bit source.
fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=20, proptest::collection::vec(any::<bool>(), 190)).prop_map(|(n, bits)| {
        let mut g = Graph::new(n).unwrap();
        let mut idx = 0;
        for i in 0..n {
            for j in i + 1..n {
                if bits[idx] {
                    g.add_edge(i, j).unwrap();
                }
                idx += 1;
            }
        }
        g
    })
}

fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph()) {
        let encoded = encode_graph6(&g);
        prop_assert_eq!(decode_graph6(&encoded).unwrap(), g.clone());
        // and the string side: re-encoding is byte identical
        prop_assert_eq!(encode_graph6(&decode_graph6(&encoded).unwrap()), encoded);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph()) {
        let text = format_edge_list(&g);
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(
        (g, perm) in arb_graph().prop_flat_map(|g| {
            let n = g.n();
            (Just(g), arb_permutation(n))
        })
    ) {
        prop_assert_eq!(canonical_form(&g.permuted(&perm)), canonical_form(&g));
    }

    #[test]
    fn relabeling_preserves_metrics(
        (g, perm) in arb_graph().prop_flat_map(|g| {
            let n = g.n();
            (Just(g), arb_permutation(n))
        })
    ) {
        let h = g.permuted(&perm);
        let mut dg = g.degree_sequence();
        let mut dh = h.degree_sequence();
        dg.sort_unstable();
        dh.sort_unstable();
        prop_assert_eq!(dg, dh);
        prop_assert_eq!(g.is_connected(), h.is_connected());
        prop_assert_eq!(g.diameter(), h.diameter());
    }

    #[test]
    fn pattern_mask_graph_round_trip(g in arb_graph()) {
        if g.is_connected() && g.n() >= 2 {
            let pattern = pattern_from_graph(&g).unwrap();
            let back = graph_from_mask(&pattern.to_mask()).unwrap();
            prop_assert_eq!(back, g);
        }
    }
}
