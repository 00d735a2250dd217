//! Sampling hyperbolic random graphs.
//!
//! Randomness comes from a single [`ChaCha8Rng`] stream seeded with
//! `seed_from_u64(seed)`. Vertex `i` consumes exactly two `f64` draws in id
//! order: first its angle, then the uniform variate fed to the radial
//! quantile.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{
    angular_distance, connection_angle, radial_quantile_unchecked, within_connection_range,
    ModelParams, PolarPoint, EDGE_TOLERANCE,
};
use crate::graph::{subgraph_min_radius, Graph, InducedSubgraph};
use crate::Result;

/// Above this many vertices [`generate`] switches to angular pruning.
pub const ALL_PAIRS_LIMIT: usize = 2_000;

/// How [`build_edges_with`] enumerates candidate pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EdgeStrategy {
    /// Test every pair.
    #[default]
    AllPairs,
    /// Sort by angle and only test pairs inside the smaller-radius endpoint's
    /// connection window. Produces the same edge set as `AllPairs`.
    AngularPruning,
}

/// A generated graph with the coordinates it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphSample {
    pub params: ModelParams,
    pub seed: u64,
    pub coords: Vec<PolarPoint>,
    pub graph: Graph,
}

impl GraphSample {
    pub fn radius(&self) -> f64 {
        self.params.radius()
    }

    /// Induced subgraph on vertices with radius at least `r`.
    pub fn subgraph_min_radius(&self, r: f64) -> InducedSubgraph {
        subgraph_min_radius(&self.graph, &self.coords, r).expect("sample coordinates are aligned")
    }
}

/// Draws the coordinates of `params.n()` vertices.
pub fn sample_coordinates(params: &ModelParams, seed: u64) -> Vec<PolarPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (alpha, radius) = (params.alpha(), params.radius());
    (0..params.n())
        .map(|_| {
            let phi = TAU * rng.gen::<f64>();
            let u: f64 = rng.gen();
            PolarPoint::new(radial_quantile_unchecked(u, alpha, radius), phi)
        })
        .collect()
}

/// Connects every pair at hyperbolic distance at most `radius`, testing all pairs.
pub fn build_edges(coords: &[PolarPoint], radius: f64) -> Graph {
    build_edges_with(coords, radius, EdgeStrategy::AllPairs)
}

pub fn build_edges_with(coords: &[PolarPoint], radius: f64, strategy: EdgeStrategy) -> Graph {
    let adj = match strategy {
        EdgeStrategy::AllPairs => all_pairs(coords, radius),
        EdgeStrategy::AngularPruning => pruned(coords, radius),
    };
    Graph::from_sorted_adjacency(adj)
}

fn all_pairs(coords: &[PolarPoint], radius: f64) -> Vec<Vec<usize>> {
    let n = coords.len();
    let mut adj = vec![Vec::new(); n];
    for u in 0..n {
        for v in (u + 1)..n {
            if within_connection_range(coords[u], coords[v], radius) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
    }
    // Pushes happen in increasing order of the partner id already.
    adj
}

fn pruned(coords: &[PolarPoint], radius: f64) -> Vec<Vec<usize>> {
    let n = coords.len();
    let mut adj = vec![Vec::new(); n];
    if n < 2 {
        return adj;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| coords[a].phi.total_cmp(&coords[b].phi).then(a.cmp(&b)));
    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }

    // Every edge is found from the endpoint that is smaller in (radius, id):
    // its partner lies within θ(r_u, r_v) ≤ θ(r_u, r_u) of it.
    let threshold = radius + EDGE_TOLERANCE;
    let owns = |u: usize, v: usize| (coords[u].r, u) < (coords[v].r, v);
    for u in 0..n {
        let window = connection_angle(coords[u].r, coords[u].r, threshold) + 1e-9;
        let consider = |v: usize, adj: &mut Vec<Vec<usize>>| {
            if owns(u, v) && within_connection_range(coords[u], coords[v], radius) {
                adj[u].push(v);
                adj[v].push(u);
            }
        };
        if window >= PI {
            for v in 0..n {
                if v != u {
                    consider(v, &mut adj);
                }
            }
            continue;
        }
        let start = position[u];
        for step in 1..n {
            let v = order[(start + step) % n];
            if angular_distance(coords[u].phi, coords[v].phi) > window {
                break;
            }
            consider(v, &mut adj);
        }
        for step in 1..n {
            let v = order[(start + n - step) % n];
            if angular_distance(coords[u].phi, coords[v].phi) > window {
                break;
            }
            consider(v, &mut adj);
        }
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }
    adj
}

/// Samples coordinates and connects them.
pub fn generate(params: &ModelParams, seed: u64) -> Result<GraphSample> {
    let coords = sample_coordinates(params, seed);
    let strategy = if coords.len() <= ALL_PAIRS_LIMIT {
        EdgeStrategy::AllPairs
    } else {
        EdgeStrategy::AngularPruning
    };
    let graph = build_edges_with(&coords, params.radius(), strategy);
    Ok(GraphSample {
        params: *params,
        seed,
        coords,
        graph,
    })
}
