//! Greedy approximations.
//!
//! [`greedy_vc`] takes a maximum-degree vertex (lowest id on ties) until no
//! edge is left. [`adaptive_greedy_vc`] stops the greedy phase once every
//! remaining degree is at most `k` and solves the leftover components
//! exactly: paths and cycles in closed form for `k ≤ 2`, branch-and-reduce
//! for larger `k` up to a size cap.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{connected_components, verify_cover, Graph};
use crate::monitor::Unbounded;
use crate::solver::{branch_and_bound, greedy_until, BranchConfig, CoverResult, Stage};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ApproxConfig {
    /// Degree at which the greedy phase stops; 0 is plain greedy.
    pub k: usize,
    /// Largest component solved exactly when `k ≥ 3`.
    pub component_cap: usize,
    /// Largest path or cycle solved in closed form when `k ≤ 2`.
    pub linear_cap: usize,
    /// Search-node budget per exactly solved component.
    pub node_budget: Option<u64>,
}

impl ApproxConfig {
    pub fn new(k: usize) -> Self {
        ApproxConfig {
            k,
            ..ApproxConfig::default()
        }
    }
}

impl Default for ApproxConfig {
    fn default() -> Self {
        ApproxConfig {
            k: 0,
            component_cap: 100,
            linear_cap: 10_000,
            node_budget: Some(1_000_000),
        }
    }
}

/// Max-degree greedy. Never flagged optimal.
pub fn greedy_vc(g: &Graph) -> CoverResult {
    let mut r = adaptive_greedy_vc(g, &ApproxConfig::new(0));
    r.optimal = false;
    r
}

/// Vertices of a connected graph with maximum degree 2 in path or cycle
/// order, plus whether it is a cycle.
fn walk_path_or_cycle(g: &Graph) -> (Vec<usize>, bool) {
    let start = g.vertices().find(|&v| g.degree(v) <= 1).unwrap_or(0);
    let mut order = Vec::with_capacity(g.n());
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        order.push(cur);
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev);
        match next {
            Some(w) if w != start && order.len() < g.n() => {
                prev = cur;
                cur = w;
            }
            _ => break,
        }
    }
    let is_cycle = g.n() >= 3 && g.vertices().all(|v| g.degree(v) == 2);
    (order, is_cycle)
}

/// Optimal cover of a path (`⌊L/2⌋`) or cycle (`⌈L/2⌉`), as local ids.
fn path_or_cycle_cover(g: &Graph) -> Vec<usize> {
    let (order, is_cycle) = walk_path_or_cycle(g);
    let mut cover: Vec<usize> = order.iter().skip(1).step_by(2).copied().collect();
    if is_cycle && order.len() % 2 == 1 {
        cover.push(order[0]);
    }
    cover
}

/// k-adaptive greedy.
///
/// The cover is flagged optimal only when the greedy phase took nothing and
/// every component was solved exactly. `stats.largest_component` is the size
/// of the largest component with an edge left after the greedy phase;
/// `stats.degraded_components` counts components finished greedily because
/// they exceeded a cap or budget.
pub fn adaptive_greedy_vc(g: &Graph, config: &ApproxConfig) -> CoverResult {
    let (prefix, _, removed) = greedy_until(g, config.k);
    let mut result = CoverResult::new(g.n(), prefix.is_empty());
    for &v in &prefix {
        result.add(v, Stage::Greedy);
    }

    let rest = g.induced_by(|v| !removed[v]);
    for comp in connected_components(&rest.graph) {
        if comp.len() < 2 {
            continue;
        }
        result.stats.components += 1;
        result.stats.largest_component = result.stats.largest_component.max(comp.len());
        let sub = rest.graph.induced_on_sorted(comp);
        let lift = |v: usize| rest.to_parent[sub.to_parent[v]];

        let exact = if config.k <= 2 {
            (sub.graph.n() <= config.linear_cap).then(|| (path_or_cycle_cover(&sub.graph), Stage::Dp))
        } else if sub.graph.n() <= config.component_cap {
            let cfg = BranchConfig {
                reduce_dominance: true,
                node_budget: config.node_budget,
            };
            branch_and_bound(&sub.graph, cfg, &Unbounded)
                .ok()
                .map(|(cover, nodes)| {
                    result.stats.branch_nodes += nodes;
                    (cover, Stage::Brute)
                })
        } else {
            None
        };
        match exact {
            Some((cover, stage)) => {
                for v in cover {
                    result.add(lift(v), stage);
                }
            }
            None => {
                result.stats.degraded_components += 1;
                result.optimal = false;
                for v in greedy_until(&sub.graph, 0).0 {
                    result.add(lift(v), Stage::Greedy);
                }
            }
        }
    }
    result
}

/// `|approx| / |exact|`, 1 when both are empty.
pub fn approximation_ratio(g: &Graph, approx: &CoverResult, exact: &CoverResult) -> Result<f64> {
    if !exact.optimal {
        return Err(Error::Precondition("the exact cover is not flagged optimal".into()));
    }
    for (name, r) in [("approximate", approx), ("exact", exact)] {
        if !verify_cover(g, &r.cover) {
            return Err(Error::Precondition(format!("the {name} set is not a vertex cover")));
        }
    }
    if approx.size() == 0 && exact.size() == 0 {
        return Ok(1.0);
    }
    Ok(approx.size() as f64 / exact.size() as f64)
}
