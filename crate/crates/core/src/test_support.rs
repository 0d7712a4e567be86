use proptest::prelude::*;

use crate::graph::Graph;

/// Arbitrary simple graph on up to `max_n` vertices.
pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut it = bits.into_iter();
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}
