//! Exact minimum vertex cover.
//!
//! [`vc_hybrid`] is the full pipeline: dominance kernel, components,
//! decomposition, then DP or branch-and-reduce per component.
//! [`vc_brute_force`] and [`vc_tree_dp`] are the building blocks, exposed for
//! testing and for callers that already hold a decomposition.

pub mod brute;
pub mod dp;
pub mod hybrid;

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::decomposition::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph, VertexSet};
use crate::monitor::Unbounded;

pub use brute::{branch_and_bound, BranchConfig, BRUTE_FORCE_LIMIT};
pub use dp::DEFAULT_WIDTH_CAP;
pub use hybrid::{vc_hybrid, Embedding, HybridConfig};

/// Which stage put a vertex into the cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stage {
    Kernel,
    Dp,
    Branch,
    Brute,
    Greedy,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::Kernel => "kernel",
            Stage::Dp => "dp",
            Stage::Branch => "branch",
            Stage::Brute => "brute",
            Stage::Greedy => "greedy",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SolveStats {
    /// Vertices taken by the kernel.
    pub kernel_forced: usize,
    /// Vertices left after kernelization.
    pub kernel_remaining: usize,
    pub components: usize,
    pub largest_component: usize,
    /// Largest decomposition width handed to the DP; −1 if it never ran.
    pub max_width: isize,
    pub dp_components: usize,
    pub branch_components: usize,
    /// Search nodes spent in branching stages.
    pub branch_nodes: u64,
    /// Components finished greedily because they exceeded a cap.
    pub degraded_components: usize,
    /// Monitor time spent per stage, in seconds.
    pub kernel_secs: f64,
    pub decomposition_secs: f64,
    pub solve_secs: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoverResult {
    pub cover: VertexSet,
    /// Set only when every stage that contributed was exact.
    pub optimal: bool,
    /// Stage that selected each vertex; `None` for vertices not in the cover.
    pub provenance: Vec<Option<Stage>>,
    pub stats: SolveStats,
}

impl CoverResult {
    pub fn size(&self) -> usize {
        self.cover.len()
    }

    pub(crate) fn new(n: usize, optimal: bool) -> Self {
        CoverResult {
            cover: VertexSet::new(n),
            optimal,
            provenance: vec![None; n],
            stats: SolveStats {
                max_width: -1,
                ..SolveStats::default()
            },
        }
    }

    pub(crate) fn add(&mut self, v: usize, stage: Stage) {
        self.cover.insert(v);
        self.provenance[v] = Some(stage);
    }

    /// Number of cover vertices attributed to `stage`.
    pub fn count_by(&self, stage: Stage) -> usize {
        self.provenance.iter().filter(|&&p| p == Some(stage)).count()
    }
}

/// Max-degree greedy cover, lowest id on ties.
pub(crate) fn greedy_cover_vec(g: &Graph) -> Vec<usize> {
    greedy_until(g, 0).0
}

/// Greedy phase: repeatedly takes a maximum-degree vertex (lowest id on ties)
/// while the maximum degree exceeds `k`. Returns the chosen vertices in
/// order and the residual degrees (0 for removed vertices).
pub(crate) fn greedy_until(g: &Graph, k: usize) -> (Vec<usize>, Vec<usize>, Vec<bool>) {
    let n = g.n();
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut queue: BTreeSet<(Reverse<usize>, usize)> =
        g.vertices().map(|v| (Reverse(degree[v]), v)).collect();
    let mut chosen = Vec::new();
    while let Some(&(Reverse(d), v)) = queue.first() {
        if d <= k || d == 0 {
            break;
        }
        queue.pop_first();
        chosen.push(v);
        removed[v] = true;
        degree[v] = 0;
        for &w in g.neighbors(v) {
            if removed[w] {
                continue;
            }
            queue.remove(&(Reverse(degree[w]), w));
            degree[w] -= 1;
            queue.insert((Reverse(degree[w]), w));
        }
    }
    (chosen, degree, removed)
}

/// Exact cover by branching. Every connected component must have at most
/// [`BRUTE_FORCE_LIMIT`] vertices.
pub fn vc_brute_force(g: &Graph) -> Result<CoverResult> {
    let comps = connected_components(g);
    if let Some(big) = comps.iter().find(|c| c.len() > BRUTE_FORCE_LIMIT) {
        return Err(Error::SizeGuard {
            size: big.len(),
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let mut result = CoverResult::new(g.n(), true);
    result.stats.components = comps.len();
    for comp in comps {
        result.stats.largest_component = result.stats.largest_component.max(comp.len());
        if comp.len() < 2 {
            continue;
        }
        let sub = g.induced_on_sorted(comp);
        let (cover, nodes) = branch_and_bound(&sub.graph, BranchConfig::default(), &Unbounded)?;
        result.stats.branch_nodes += nodes;
        for v in cover {
            result.add(sub.to_parent[v], Stage::Brute);
        }
    }
    Ok(result)
}

/// Exact cover from a tree decomposition of `g` with width at most `width_cap`.
pub fn vc_tree_dp(g: &Graph, td: &TreeDecomposition, width_cap: usize) -> Result<CoverResult> {
    let cover = dp::tree_dp_cover(g, td, width_cap, &Unbounded)?;
    let mut result = CoverResult::new(g.n(), true);
    result.stats.max_width = td.width();
    result.stats.dp_components = 1;
    for v in cover {
        result.add(v, Stage::Dp);
    }
    Ok(result)
}
