//! Circular-arc supergraph and the path decomposition read off its arcs.
//!
//! Vertex `v` gets the arc `[φ(v) − h(v), φ(v) + h(v)]` with
//! `h(v) = θ(r(v), r(v))`. Adjacent vertices have intersecting arcs, so any
//! decomposition of the arc graph is one of the original graph.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::{PI, TAU};

use super::PathDecomposition;
use crate::error::{Error, Result};
use crate::generator::GraphSample;
use crate::geometry::{connection_angle, normalize_angle, PolarPoint};
use crate::graph::VertexSet;

/// A closed arc on the circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Arc {
    pub center: f64,
    /// Clamped to π; an arc with half-width π is the full circle.
    pub half_width: f64,
}

impl Arc {
    pub fn new(center: f64, half_width: f64) -> Self {
        Arc {
            center: normalize_angle(center),
            half_width: half_width.clamp(0.0, PI),
        }
    }

    pub fn is_full(&self) -> bool {
        self.half_width >= PI
    }

    /// Start angle in `[0, 2π)`.
    pub fn start(&self) -> f64 {
        normalize_angle(self.center - self.half_width)
    }

    /// End angle measured from the start, so it can exceed 2π.
    pub fn end_unwrapped(&self) -> f64 {
        self.start() + 2.0 * self.half_width
    }

    /// Whether the arc runs through angle 0 from below. Arcs that merely
    /// start at 0 do not count.
    pub fn covers_zero(&self) -> bool {
        self.is_full() || self.end_unwrapped() >= TAU
    }

    pub fn contains(&self, angle: f64) -> bool {
        if self.is_full() {
            return true;
        }
        let a = normalize_angle(angle);
        let s = self.start();
        let e = self.end_unwrapped();
        (a >= s && a <= e) || (a + TAU >= s && a + TAU <= e)
    }

    fn rotated(&self, by: f64) -> Arc {
        Arc::new(self.center - by, self.half_width)
    }
}

/// One arc per vertex; `labels[i]` names the vertex owning `arcs[i]`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ArcModel {
    pub arcs: Vec<Arc>,
    pub labels: Vec<usize>,
}

impl ArcModel {
    /// Arcs for labelled points in a disk of radius `radius`.
    pub fn from_points<I>(points: I, radius: f64) -> Self
    where
        I: IntoIterator<Item = (usize, PolarPoint)>,
    {
        let mut model = ArcModel::default();
        for (label, p) in points {
            model.labels.push(label);
            model
                .arcs
                .push(Arc::new(p.phi, connection_angle(p.r, p.r, radius)));
        }
        model
    }

    /// Arcs given directly by `[start, end]` in radians, labelled `0..`.
    pub fn from_bounds(bounds: &[(f64, f64)]) -> Self {
        ArcModel {
            arcs: bounds
                .iter()
                .map(|&(s, e)| Arc::new((s + e) / 2.0, (e - s) / 2.0))
                .collect(),
            labels: (0..bounds.len()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Largest number of arcs sharing a point; touching endpoints count.
    pub fn max_overlap(&self) -> usize {
        let sweep = Sweep::new(self);
        let mut count = sweep.base;
        let mut best = count;
        for ev in &sweep.events {
            if ev.is_start {
                count += 1;
                best = best.max(count);
            } else {
                count -= 1;
            }
        }
        best
    }

    /// An angle covered by as few arcs as possible.
    pub fn min_overlap_angle(&self) -> f64 {
        let sweep = Sweep::new(self);
        let mut count = sweep.base;
        // Gap before the first event starts at 0.
        let mut best = (count, 0.0, sweep.events.first().map_or(TAU, |e| e.angle));
        for (i, ev) in sweep.events.iter().enumerate() {
            if ev.is_start {
                count += 1;
            } else {
                count -= 1;
            }
            let next = sweep.events.get(i + 1).map_or(TAU, |e| e.angle);
            if count < best.0 && next > ev.angle {
                best = (count, ev.angle, next);
            }
        }
        (best.1 + best.2) / 2.0
    }
}

#[derive(Debug, Clone, Copy)]
struct Event {
    angle: f64,
    is_start: bool,
    arc: usize,
}

/// Endpoint events of the arcs that avoid angle 0, plus the count of those
/// that cover it.
struct Sweep {
    base: usize,
    wrapping: Vec<usize>,
    events: Vec<Event>,
}

impl Sweep {
    fn new(model: &ArcModel) -> Self {
        let mut sweep = Sweep {
            base: 0,
            wrapping: Vec::new(),
            events: Vec::with_capacity(2 * model.len()),
        };
        for (i, arc) in model.arcs.iter().enumerate() {
            if arc.is_full() {
                sweep.base += 1;
                sweep.wrapping.push(i);
                continue;
            }
            let s = arc.start();
            let e = arc.end_unwrapped();
            if arc.covers_zero() {
                // Active from 0 up to its end, then again from its start.
                sweep.base += 1;
                sweep.wrapping.push(i);
                sweep.events.push(Event { angle: e - TAU, is_start: false, arc: i });
                sweep.events.push(Event { angle: s, is_start: true, arc: i });
            } else {
                sweep.events.push(Event { angle: s, is_start: true, arc: i });
                sweep.events.push(Event { angle: e, is_start: false, arc: i });
            }
        }
        // Starts before ends at equal angles.
        sweep.events.sort_by(|a, b| {
            a.angle
                .total_cmp(&b.angle)
                .then_with(|| match (a.is_start, b.is_start) {
                    (true, false) => Ordering::Less,
                    (false, true) => Ordering::Greater,
                    _ => Ordering::Equal,
                })
                .then(a.arc.cmp(&b.arc))
        });
        sweep
    }
}

/// Arc model of a sample, optionally restricted to a vertex subset.
/// Labels are the sample's vertex ids.
pub fn build_arc_model(sample: &GraphSample, restrict_to: Option<&VertexSet>) -> Result<ArcModel> {
    let n = sample.graph.n();
    if sample.coords.len() != n {
        return Err(Error::MissingCoordinates {
            coords: sample.coords.len(),
            vertices: n,
        });
    }
    let radius = sample.radius();
    let keep = |v: &usize| restrict_to.is_none_or(|s| s.contains(*v));
    Ok(ArcModel::from_points(
        (0..n).filter(keep).map(|v| (v, sample.coords[v])),
        radius,
    ))
}

/// Twice the maximum overlap: an upper bound on the interval width of the
/// arc graph, obtained by cutting the circle once.
pub fn interval_width_of_arcs(model: &ArcModel) -> usize {
    2 * model.max_overlap()
}

/// Path decomposition with the circle cut at angle 0.
///
/// Arcs covering 0 join every bag; the others form an interval model and
/// each bag is the set of intervals alive just before an interval ends.
pub fn path_decomposition_from_arcs(model: &ArcModel) -> PathDecomposition {
    let sweep = Sweep::new(model);
    let wrap: Vec<usize> = sweep.wrapping.iter().map(|&i| model.labels[i]).collect();
    let mut bags = Vec::new();
    let mut alive: Vec<usize> = Vec::new();
    let mut fresh = false;
    for ev in &sweep.events {
        if sweep.wrapping.binary_search(&ev.arc).is_ok() {
            continue;
        }
        if ev.is_start {
            alive.push(model.labels[ev.arc]);
            fresh = true;
        } else {
            let label = model.labels[ev.arc];
            if fresh {
                let mut bag = wrap.clone();
                bag.extend_from_slice(&alive);
                bag.sort_unstable();
                bags.push(bag);
                fresh = false;
            }
            if let Some(pos) = alive.iter().position(|&x| x == label) {
                alive.swap_remove(pos);
            }
        }
    }
    if bags.is_empty() && !wrap.is_empty() {
        let mut bag = wrap;
        bag.sort_unstable();
        bags.push(bag);
    }
    PathDecomposition { bags }
}

/// Same as [`path_decomposition_from_arcs`] with the cut at `angle`.
pub fn path_decomposition_from_arcs_cut(model: &ArcModel, angle: f64) -> PathDecomposition {
    let rotated = ArcModel {
        arcs: model.arcs.iter().map(|a| a.rotated(angle)).collect(),
        labels: model.labels.clone(),
    };
    path_decomposition_from_arcs(&rotated)
}
