mod common;

use proptest::prelude::*;

use common::{connected_from, orbit, orbit_min};
use matchstick::{automorphism_count, canonical_form, canonical_graph, enumerate_connected, Graph};

fn graph_and_perm() -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (2usize..=10).prop_flat_map(|v| {
        (
            prop::collection::vec(any::<u64>(), v - 1),
            prop::collection::vec((0..v, 0..v), 0..10),
            Just((0..v).collect::<Vec<usize>>()).prop_shuffle(),
        )
            .prop_map(move |(parents, extra, perm)| (connected_from(v, &parents, &extra), perm))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn relabeling_keeps_the_key((g, perm) in graph_and_perm()) {
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(canonical_graph(&g), canonical_graph(&h));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn canonical_graph_is_isomorphic((g, _) in graph_and_perm()) {
        let c = canonical_graph(&g);
        prop_assert_eq!(c.degree_sequence(), g.degree_sequence());
        prop_assert_eq!(c.edge_count(), g.edge_count());
        if g.vertex_count() <= 7 {
            prop_assert_eq!(orbit_min(&c), orbit_min(&g));
        }
    }

    #[test]
    fn orbit_times_stabilizer_is_factorial((g, _) in graph_and_perm()) {
        prop_assume!(g.vertex_count() <= 7);
        let factorial: u64 = (1..=g.vertex_count() as u64).product();
        prop_assert_eq!(orbit(&g).len() as u64 * automorphism_count(&g), factorial);
    }
}

#[test]
fn orbit_stabilizer_over_enumerated_classes() {
    for n in 1..=6 {
        for g in enumerate_connected(n).unwrap() {
            let factorial: u64 = (1..=g.vertex_count() as u64).product();
            assert_eq!(orbit(&g).len() as u64 * automorphism_count(&g), factorial, "{g}");
        }
    }
}

#[test]
fn equal_keys_mean_equal_degree_sequences() {
    // Distinct classes may share a degree sequence, never the reverse.
    for n in 1..=8 {
        for g in enumerate_connected(n).unwrap() {
            let key = canonical_form(&g);
            assert_eq!(key.graph().degree_sequence(), g.degree_sequence());
        }
    }
}
