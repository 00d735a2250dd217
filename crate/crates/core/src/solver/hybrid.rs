//! Kernel, decompose, solve.

use alloc::vec::Vec;

use super::{brute, dp, CoverResult, Stage};
use crate::decomposition::{
    elimination_td, path_decomposition_from_arcs, path_decomposition_from_arcs_cut,
    validate_path_decomposition, ArcModel, EliminationHeuristic, TreeDecomposition,
};
use crate::error::{Error, Result};
use crate::generator::GraphSample;
use crate::geometry::PolarPoint;
use crate::graph::{connected_components, Graph};
use crate::kernel::reduce_dominance_exhaustive;
use crate::monitor::Monitor;

/// Coordinates of the input graph's vertices in a disk of radius `radius`.
#[derive(Debug, Clone, Copy)]
pub struct Embedding<'a> {
    pub coords: &'a [PolarPoint],
    pub radius: f64,
}

impl<'a> Embedding<'a> {
    pub fn of(sample: &'a GraphSample) -> Self {
        Embedding {
            coords: &sample.coords,
            radius: sample.radius(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HybridConfig {
    /// Components whose best decomposition is wider go to branch-and-reduce.
    pub width_cap: usize,
    /// Search-node budget shared by all branch-and-reduce calls.
    pub node_budget: Option<u64>,
    pub heuristic: EliminationHeuristic,
    /// With coordinates, also try the elimination heuristic and keep the
    /// narrower decomposition.
    pub compare_elimination: bool,
}

impl Default for HybridConfig {
    fn default() -> Self {
        HybridConfig {
            width_cap: dp::DEFAULT_WIDTH_CAP,
            node_budget: None,
            heuristic: EliminationHeuristic::MinDegree,
            compare_elimination: true,
        }
    }
}

/// Geometric path decomposition of a component, trying the cut at 0 and at
/// a least-covered angle. `None` if the arcs do not decompose the component,
/// which happens when the coordinates do not generate its edges.
fn geometric_td(sub: &Graph, parents: &[usize], emb: &Embedding<'_>) -> Option<TreeDecomposition> {
    let model = ArcModel::from_points(
        parents.iter().enumerate().map(|(i, &p)| (i, emb.coords[p])),
        emb.radius,
    );
    let at_zero = path_decomposition_from_arcs(&model);
    let best_cut = path_decomposition_from_arcs_cut(&model, model.min_overlap_angle());
    let pd = if best_cut.width() < at_zero.width() {
        best_cut
    } else {
        at_zero
    };
    validate_path_decomposition(sub, &pd)
        .is_valid()
        .then(|| pd.into_tree())
}

/// Exact minimum vertex cover.
///
/// 1. Exhaustive dominance kernel.
/// 2. Connected components of what is left.
/// 3. Per component, a decomposition: the arc path decomposition when
///    coordinates are given (and, by default, the elimination heuristic as
///    well, keeping the narrower), otherwise the elimination heuristic.
/// 4. DP when the width is within the cap, branch-and-reduce otherwise.
pub fn vc_hybrid(
    g: &Graph,
    embedding: Option<Embedding<'_>>,
    config: &HybridConfig,
    monitor: &dyn Monitor,
) -> Result<CoverResult> {
    let n = g.n();
    if let Some(emb) = &embedding {
        if emb.coords.len() != n {
            return Err(Error::MissingCoordinates {
                coords: emb.coords.len(),
                vertices: n,
            });
        }
    }
    let mut result = CoverResult::new(n, true);
    let t0 = monitor.elapsed_secs();

    let kernel = reduce_dominance_exhaustive(g);
    for v in kernel.forced_cover.iter() {
        result.add(v, Stage::Kernel);
    }
    let reduced = &kernel.reduced;
    result.stats.kernel_forced = kernel.forced_cover.len();
    result.stats.kernel_remaining = reduced.graph.n();
    let t1 = monitor.elapsed_secs();
    result.stats.kernel_secs = t1 - t0;

    let comps = connected_components(&reduced.graph);
    result.stats.components = comps.len();
    let mut nodes_left = config.node_budget;
    for comp in comps {
        result.stats.largest_component = result.stats.largest_component.max(comp.len());
        if comp.len() < 2 {
            continue;
        }
        if monitor.should_stop() {
            return Err(Error::Interrupted);
        }
        let sub = reduced.graph.induced_on_sorted(comp);
        let parents: Vec<usize> = sub.to_parent.iter().map(|&i| reduced.to_parent[i]).collect();

        let d0 = monitor.elapsed_secs();
        let geometric = embedding
            .as_ref()
            .and_then(|emb| geometric_td(&sub.graph, &parents, emb));
        let td = match geometric {
            Some(geo) if !config.compare_elimination => geo,
            Some(geo) => {
                let elim = elimination_td(&sub.graph, config.heuristic, monitor)?;
                if elim.width() < geo.width() {
                    elim
                } else {
                    geo
                }
            }
            None => elimination_td(&sub.graph, config.heuristic, monitor)?,
        };
        let d1 = monitor.elapsed_secs();
        result.stats.decomposition_secs += d1 - d0;

        let width = td.width();
        if width <= config.width_cap as isize {
            result.stats.max_width = result.stats.max_width.max(width);
            result.stats.dp_components += 1;
            for v in dp::tree_dp_cover(&sub.graph, &td, config.width_cap, monitor)? {
                result.add(parents[v], Stage::Dp);
            }
        } else {
            result.stats.branch_components += 1;
            let cfg = brute::BranchConfig {
                reduce_dominance: true,
                node_budget: nodes_left,
            };
            let (cover, nodes) =
                brute::branch_and_bound(&sub.graph, cfg, monitor).map_err(|e| match e {
                    Error::BudgetExhausted { .. } => Error::BudgetExhausted {
                        budget: config.node_budget.unwrap_or(0),
                    },
                    other => other,
                })?;
            result.stats.branch_nodes += nodes;
            nodes_left = nodes_left.map(|b| b.saturating_sub(nodes));
            for v in cover {
                result.add(parents[v], Stage::Branch);
            }
        }
        result.stats.solve_secs += monitor.elapsed_secs() - d1;
    }
    Ok(result)
}
