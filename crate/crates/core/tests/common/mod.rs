#![allow(dead_code)]

use hypcover_core::Graph;
use proptest::prelude::*;

/// Minimum cover size by enumerating every subset. Independent of the
/// crate's solvers; only usable for n ≤ ~20.
pub fn exhaustive_vc_size(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20, "oracle is exponential");
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut best = n;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        if edges
            .iter()
            .all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1)
        {
            best = size;
        }
    }
    best
}

/// G(n, p) drawn by proptest.
pub fn gnp(max_n: usize, probs: &'static [f64]) -> impl Strategy<Value = Graph> {
    (1..=max_n, prop::sample::select(probs)).prop_flat_map(|(n, p)| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(prop::bool::weighted(p), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges).0
        })
    })
}

pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).0
}
