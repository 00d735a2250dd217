//! The dominance reduction rule.
//!
//! `u` dominates a neighbor `v` when `N(v) \ {u} ⊆ N(u)`; a dominant vertex
//! belongs to some minimum vertex cover. Two modes are provided:
//!
//! * [`dominant_vertices`] evaluates the predicate once on the original
//!   graph. This is the measurement used by the experiments and carries no
//!   optimality guarantee when all of its vertices are taken at once (both
//!   endpoints of an isolated edge dominate each other).
//! * [`reduce_dominance_exhaustive`] applies the rule one vertex at a time,
//!   re-evaluating after every deletion, and is safe for exact solving.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graph::{Graph, InducedSubgraph, VertexSet};

/// `N(small) ⊆ N(big) ∪ {skip}` for sorted slices.
fn subset_except(small: &[usize], big: &[usize], skip: usize) -> bool {
    if small.len() > big.len() + 1 {
        return false;
    }
    // Binary search wins when the hub side is much larger.
    if big.len() > 16 * small.len().max(1) {
        return small
            .iter()
            .all(|&x| x == skip || big.binary_search(&x).is_ok());
    }
    let mut j = 0;
    for &x in small {
        if x == skip {
            continue;
        }
        while j < big.len() && big[j] < x {
            j += 1;
        }
        if j == big.len() || big[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// `true` iff `{u, v}` is an edge and `N(v) \ {u} ⊆ N(u)`.
pub fn dominates(g: &Graph, u: usize, v: usize) -> bool {
    u != v && g.has_edge(u, v) && subset_except(g.neighbors(v), g.neighbors(u), u)
}

/// Lowest-id neighbor dominated by `u`, if any.
pub fn dominated_witness(g: &Graph, u: usize) -> Option<usize> {
    let nu = g.neighbors(u);
    nu.iter()
        .copied()
        .find(|&v| subset_except(g.neighbors(v), nu, u))
}

/// All vertices that dominate some neighbor in `g`, evaluated without removals.
pub fn dominant_vertices(g: &Graph) -> VertexSet {
    VertexSet::from_iter(
        g.n(),
        g.vertices().filter(|&u| dominated_witness(g, u).is_some()),
    )
}

/// One application of the rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceEntry {
    pub vertex: usize,
    pub witness: usize,
    /// 0-based application index.
    pub step: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct KernelResult {
    /// What is left, with ids mapped back to the input graph.
    pub reduced: InducedSubgraph,
    /// Vertices taken by the rule; some minimum cover contains all of them.
    pub forced_cover: VertexSet,
    /// Vertices deleted because they became isolated; never needed in a cover.
    pub removed_isolated: VertexSet,
    pub trace: Vec<TraceEntry>,
}

/// Working copy of a graph that supports vertex deletion.
struct Shrinking {
    adj: Vec<Vec<usize>>,
    alive: Vec<bool>,
}

impl Shrinking {
    fn new(g: &Graph) -> Self {
        Shrinking {
            adj: g.vertices().map(|v| g.neighbors(v).to_vec()).collect(),
            alive: alloc::vec![true; g.n()],
        }
    }

    fn witness(&self, u: usize) -> Option<usize> {
        let nu = &self.adj[u];
        nu.iter()
            .copied()
            .find(|&v| subset_except(&self.adj[v], nu, u))
    }

    /// Deletes `x` and returns its former neighbors.
    fn delete(&mut self, x: usize) -> Vec<usize> {
        let nbrs = core::mem::take(&mut self.adj[x]);
        for &y in &nbrs {
            if let Ok(pos) = self.adj[y].binary_search(&x) {
                self.adj[y].remove(pos);
            }
        }
        self.alive[x] = false;
        nbrs
    }
}

/// Exhaustive sequential kernelization.
///
/// Repeats until nothing changes: delete isolated vertices, then take the
/// lowest-id vertex that is currently dominant into the cover and delete it.
/// Guarantees `opt(g) = |forced_cover| + opt(reduced)`.
pub fn reduce_dominance_exhaustive(g: &Graph) -> KernelResult {
    let n = g.n();
    let mut work = Shrinking::new(g);
    let mut forced = VertexSet::new(n);
    let mut isolated = VertexSet::new(n);
    let mut trace = Vec::new();

    for v in g.vertices() {
        if g.degree(v) == 0 {
            work.alive[v] = false;
            isolated.insert(v);
        }
    }

    // Invariant: a live vertex outside `candidates` is not dominant.
    let mut candidates: BTreeSet<usize> = g.vertices().filter(|&v| work.alive[v]).collect();
    while let Some(u) = candidates.pop_first() {
        if !work.alive[u] {
            continue;
        }
        let Some(witness) = work.witness(u) else {
            continue;
        };
        trace.push(TraceEntry {
            vertex: u,
            witness,
            step: trace.len(),
        });
        forced.insert(u);
        let nbrs = work.delete(u);
        // Dominance of w can only change if N(w) or the neighborhood of one of
        // w's neighbors changed, i.e. w is within distance two of u.
        for &y in &nbrs {
            if work.adj[y].is_empty() {
                work.alive[y] = false;
                isolated.insert(y);
                candidates.remove(&y);
                continue;
            }
            candidates.insert(y);
            for &z in &work.adj[y] {
                candidates.insert(z);
            }
        }
    }

    let remaining: Vec<usize> = g.vertices().filter(|&v| work.alive[v]).collect();
    KernelResult {
        reduced: g.induced_on_sorted(remaining),
        forced_cover: forced,
        removed_isolated: isolated,
        trace,
    }
}

/// Share of high-degree vertices that are dominant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DominanceStats {
    /// Vertices with degree strictly above the threshold.
    pub high_degree: usize,
    /// How many of those are in [`dominant_vertices`].
    pub dominant: usize,
    /// `100 · dominant / high_degree`; 100 when there are no high-degree vertices.
    pub percentage: f64,
    /// Set when `high_degree == 0` and the percentage is vacuous.
    pub vacuous: bool,
}

pub fn dominance_stats(g: &Graph, degree_threshold: f64) -> DominanceStats {
    let dominant = dominant_vertices(g);
    dominance_stats_with(g, &dominant, degree_threshold)
}

/// Same as [`dominance_stats`] with a precomputed dominant set.
pub fn dominance_stats_with(g: &Graph, dominant: &VertexSet, degree_threshold: f64) -> DominanceStats {
    let high: Vec<usize> = g
        .vertices()
        .filter(|&v| g.degree(v) as f64 > degree_threshold)
        .collect();
    let dom = high.iter().filter(|&&v| dominant.contains(v)).count();
    if high.is_empty() {
        return DominanceStats {
            high_degree: 0,
            dominant: 0,
            percentage: 100.0,
            vacuous: true,
        };
    }
    DominanceStats {
        high_degree: high.len(),
        dominant: dom,
        percentage: 100.0 * dom as f64 / high.len() as f64,
        vacuous: false,
    }
}
