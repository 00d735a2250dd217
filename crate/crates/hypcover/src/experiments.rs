//! Batch experiments with CSV output.
//!
//! Rows never contain timings, so output is a function of the inputs alone
//! as long as no wall-clock budget fires. Parallel runs keep input order.

use std::io::Write;
use std::time::Duration;

use rayon::prelude::*;

use hypcover_core::approx::{adaptive_greedy_vc, approximation_ratio, greedy_vc, ApproxConfig};
use hypcover_core::decomposition::{build_arc_model, elimination_td, interval_width_of_arcs, EliminationHeuristic};
use hypcover_core::generator::generate;
use hypcover_core::geometry::{high_degree_threshold_for, rho_threshold};
use hypcover_core::kernel::{dominance_stats_with, dominant_vertices};
use hypcover_core::solver::{vc_hybrid, Embedding, HybridConfig, DEFAULT_WIDTH_CAP};
use hypcover_core::{Error, Graph, GraphSample, ModelParams, VertexSet};

use crate::clock::WallClock;
use crate::io::IoError;

pub const TABLE1_HEADER: [&str; 8] = ["network", "easy", "dom", "tw", "greedy", "two_ad", "four_ad", "comp"];

/// Limits for one table row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RowConfig {
    /// Exponent used for the high-degree threshold.
    pub alpha: f64,
    /// Wall-clock limit for the treewidth heuristic.
    pub tw_time: Option<Duration>,
    /// Wall-clock limit for the exact solve.
    pub solve_time: Option<Duration>,
    /// Search-node limit for the exact solve; deterministic.
    pub node_budget: Option<u64>,
    pub width_cap: usize,
}

impl Default for RowConfig {
    fn default() -> Self {
        RowConfig {
            alpha: 0.75,
            tw_time: Some(Duration::from_secs(15 * 60)),
            solve_time: None,
            node_budget: Some(10_000_000),
            width_cap: DEFAULT_WIDTH_CAP,
        }
    }
}

impl RowConfig {
    /// No wall-clock limits: output depends only on the input.
    pub fn deterministic() -> Self {
        RowConfig {
            tw_time: None,
            solve_time: None,
            ..RowConfig::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRow {
    pub network: String,
    /// Whether the exact solve finished within budget.
    pub easy: bool,
    /// Share of high-degree vertices that are dominant, in percent.
    pub dom: f64,
    /// Width of the residual after deleting dominant vertices; −1 when it has
    /// no edge, `None` when the heuristic ran out of time.
    pub tw: Option<isize>,
    pub greedy: Option<f64>,
    pub two_ad: Option<f64>,
    pub four_ad: Option<f64>,
    /// Largest component left after the greedy phase of 4-adaptive greedy.
    pub comp: usize,
}

impl ExperimentRow {
    pub fn record(&self) -> [String; 8] {
        let ratio = |r: Option<f64>| r.map_or_else(String::new, |r| format!("{r:.3}"));
        [
            self.network.clone(),
            self.easy.to_string(),
            format!("{:.0}", self.dom),
            self.tw.map_or_else(String::new, |t| t.to_string()),
            ratio(self.greedy),
            ratio(self.two_ad),
            ratio(self.four_ad),
            self.comp.to_string(),
        ]
    }
}

pub fn run_table1_row(
    network: &str,
    g: &Graph,
    embedding: Option<Embedding<'_>>,
    config: &RowConfig,
) -> Result<ExperimentRow, Error> {
    let dominant = dominant_vertices(g);
    let stats = dominance_stats_with(g, &dominant, high_degree_threshold_for(g.n(), config.alpha));

    let residual = g.without(&dominant);
    let tw = if residual.graph.m() == 0 {
        Some(-1)
    } else {
        let clock = WallClock::new(config.tw_time);
        match elimination_td(&residual.graph, EliminationHeuristic::MinDegree, &clock) {
            Ok(td) => Some(td.width()),
            Err(Error::Interrupted) => None,
            Err(e) => return Err(e),
        }
    };

    let hybrid = HybridConfig {
        width_cap: config.width_cap,
        node_budget: config.node_budget,
        ..HybridConfig::default()
    };
    let clock = WallClock::new(config.solve_time);
    let exact = match vc_hybrid(g, embedding, &hybrid, &clock) {
        Ok(r) => Some(r),
        Err(e) if e.is_resource_limit() => None,
        Err(e) => return Err(e),
    };

    let four = adaptive_greedy_vc(g, &ApproxConfig::new(4));
    let (greedy, two_ad, four_ad) = match &exact {
        Some(exact) => {
            let ratio = |r| approximation_ratio(g, r, exact).map(Some);
            (
                ratio(&greedy_vc(g))?,
                ratio(&adaptive_greedy_vc(g, &ApproxConfig::new(2)))?,
                ratio(&four)?,
            )
        }
        None => (None, None, None),
    };
    Ok(ExperimentRow {
        network: network.to_string(),
        easy: exact.is_some(),
        dom: stats.percentage.round(),
        tw,
        greedy,
        two_ad,
        four_ad,
        comp: four.stats.largest_component,
    })
}

pub fn write_table1_csv<W: Write>(w: W, rows: &[ExperimentRow]) -> Result<(), IoError> {
    let mut csv = csv::Writer::from_writer(w);
    csv.write_record(TABLE1_HEADER)?;
    for row in rows {
        csv.write_record(row.record())?;
    }
    csv.flush()?;
    Ok(())
}

/// Model parameters over a grid of sizes and seeds.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    pub ns: Vec<usize>,
    pub seeds: Vec<u64>,
    pub alpha: f64,
    pub kappa_bar: f64,
}

impl SweepGrid {
    /// `(params, seed)` pairs in row order; `n = 0` is skipped.
    fn runs(&self) -> Result<Vec<(ModelParams, u64)>, Error> {
        let mut out = Vec::new();
        for &n in self.ns.iter().filter(|&&n| n > 0) {
            let p = ModelParams::new(n, self.alpha, self.kappa_bar)?;
            out.extend(self.seeds.iter().map(|&s| (p, s)));
        }
        Ok(out)
    }
}

fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .expect("failed to start worker threads")
}

/// Runs `f` over the grid on `threads` workers, keeping grid order.
fn par_runs<T, F>(grid: &SweepGrid, threads: usize, f: F) -> Result<Vec<T>, Error>
where
    T: Send,
    F: Fn(&GraphSample) -> Result<T, Error> + Sync,
{
    let runs = grid.runs()?;
    pool(threads).install(|| {
        runs.par_iter()
            .map(|(p, seed)| f(&generate(p, *seed)?))
            .collect()
    })
}

/// Whether every vertex inside the inner disk of radius ρ is dominant.
#[derive(Debug, Clone, PartialEq)]
pub struct DominanceRow {
    pub n: usize,
    pub seed: u64,
    pub rho: f64,
    pub inner: usize,
    pub inner_dominant: usize,
    pub fraction: f64,
    pub success: bool,
}

pub fn dominance_row(sample: &GraphSample, c: Option<f64>) -> Result<DominanceRow, Error> {
    let p = &sample.params;
    let c = c.unwrap_or_else(|| hypcover_core::geometry::default_rho_constant(p));
    let rho = rho_threshold(p, c)?;
    let dominant = dominant_vertices(&sample.graph);
    let inner: Vec<usize> = (0..p.n()).filter(|&v| sample.coords[v].r <= rho).collect();
    let inner_dominant = inner.iter().filter(|&&v| dominant.contains(v)).count();
    let fraction = if inner.is_empty() {
        1.0
    } else {
        inner_dominant as f64 / inner.len() as f64
    };
    Ok(DominanceRow {
        n: p.n(),
        seed: sample.seed,
        rho,
        inner: inner.len(),
        inner_dominant,
        fraction,
        success: inner_dominant == inner.len(),
    })
}

/// One row per `(n, seed)`; `c = None` uses the default constant `8/κ̄`.
pub fn sweep_dominance(grid: &SweepGrid, c: Option<f64>, threads: usize) -> Result<Vec<DominanceRow>, Error> {
    par_runs(grid, threads, |s| dominance_row(s, c))
}

pub fn write_dominance_csv<W: Write>(w: W, rows: &[DominanceRow]) -> Result<(), IoError> {
    let mut csv = csv::Writer::from_writer(w);
    csv.write_record(["n", "seed", "rho", "inner", "inner_dominant", "fraction", "success"])?;
    for r in rows {
        csv.write_record([
            r.n.to_string(),
            r.seed.to_string(),
            format!("{:.6}", r.rho),
            r.inner.to_string(),
            r.inner_dominant.to_string(),
            format!("{:.6}", r.fraction),
            r.success.to_string(),
        ])?;
    }
    csv.flush()?;
    Ok(())
}

/// Which subgraph an interval width was measured on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum WidthKind {
    /// Vertices with radius at least ρ.
    OuterBand,
    /// Vertices of degree at most `d`.
    MaxDegree(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct WidthRow {
    pub kind: WidthKind,
    pub n: usize,
    pub seed: u64,
    pub vertices: usize,
    /// Twice the maximum arc overlap.
    pub width: usize,
    /// `ln n`, or `d^(2−2α) + ln n` for the degree-restricted subgraph.
    pub scale: f64,
}

pub fn width_rows(sample: &GraphSample, ds: &[usize]) -> Result<Vec<WidthRow>, Error> {
    let p = &sample.params;
    let n = p.n();
    let ln_n = (n as f64).ln();
    let rho = rho_threshold(p, hypcover_core::geometry::default_rho_constant(p))?;
    let mut rows = Vec::with_capacity(1 + ds.len());
    let mut measure = |kind: WidthKind, keep: VertexSet, scale: f64| -> Result<(), Error> {
        let model = build_arc_model(sample, Some(&keep))?;
        rows.push(WidthRow {
            kind,
            n,
            seed: sample.seed,
            vertices: keep.len(),
            width: interval_width_of_arcs(&model),
            scale,
        });
        Ok(())
    };
    let band = VertexSet::from_iter(n, (0..n).filter(|&v| sample.coords[v].r >= rho));
    measure(WidthKind::OuterBand, band, ln_n)?;
    for &d in ds {
        let low = VertexSet::from_iter(n, (0..n).filter(|&v| sample.graph.degree(v) <= d));
        let scale = (d as f64).powf(2.0 - 2.0 * p.alpha()) + ln_n;
        measure(WidthKind::MaxDegree(d), low, scale)?;
    }
    Ok(rows)
}

pub fn sweep_width(grid: &SweepGrid, ds: &[usize], threads: usize) -> Result<Vec<WidthRow>, Error> {
    Ok(par_runs(grid, threads, |s| width_rows(s, ds))?
        .into_iter()
        .flatten()
        .collect())
}

fn kind_fields(kind: WidthKind) -> (&'static str, String) {
    match kind {
        WidthKind::OuterBand => ("outer_band", String::new()),
        WidthKind::MaxDegree(d) => ("max_degree", d.to_string()),
    }
}

pub fn write_width_csv<W: Write>(w: W, rows: &[WidthRow]) -> Result<(), IoError> {
    let mut csv = csv::Writer::from_writer(w);
    csv.write_record(["kind", "d", "n", "seed", "vertices", "width", "scale", "constant"])?;
    for r in rows {
        let (kind, d) = kind_fields(r.kind);
        csv.write_record([
            kind.to_string(),
            d,
            r.n.to_string(),
            r.seed.to_string(),
            r.vertices.to_string(),
            r.width.to_string(),
            format!("{:.6}", r.scale),
            format!("{:.6}", r.width as f64 / r.scale),
        ])?;
    }
    csv.flush()?;
    Ok(())
}

pub fn median(values: &mut [f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    values.sort_by(f64::total_cmp);
    let m = values.len() / 2;
    Some(if values.len() % 2 == 1 {
        values[m]
    } else {
        0.5 * (values[m - 1] + values[m])
    })
}

/// Median width per `(kind, n)` and the fitted constant `median / scale`.
#[derive(Debug, Clone, PartialEq)]
pub struct WidthSummary {
    pub kind: WidthKind,
    pub n: usize,
    pub runs: usize,
    pub median_width: f64,
    pub scale: f64,
    pub constant: f64,
}

pub fn summarize_widths(rows: &[WidthRow]) -> Vec<WidthSummary> {
    let mut keys: Vec<(WidthKind, usize)> = rows.iter().map(|r| (r.kind, r.n)).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .map(|(kind, n)| {
            let group: Vec<&WidthRow> = rows.iter().filter(|r| r.kind == kind && r.n == n).collect();
            let mut widths: Vec<f64> = group.iter().map(|r| r.width as f64).collect();
            let median_width = median(&mut widths).expect("non-empty group");
            let scale = group[0].scale;
            WidthSummary {
                kind,
                n,
                runs: group.len(),
                median_width,
                scale,
                constant: median_width / scale,
            }
        })
        .collect()
}

pub fn write_width_summary_csv<W: Write>(w: W, rows: &[WidthSummary]) -> Result<(), IoError> {
    let mut csv = csv::Writer::from_writer(w);
    csv.write_record(["kind", "d", "n", "runs", "median_width", "scale", "constant"])?;
    for r in rows {
        let (kind, d) = kind_fields(r.kind);
        csv.write_record([
            kind.to_string(),
            d,
            r.n.to_string(),
            r.runs.to_string(),
            format!("{:.1}", r.median_width),
            format!("{:.6}", r.scale),
            format!("{:.6}", r.constant),
        ])?;
    }
    csv.flush()?;
    Ok(())
}

/// Table rows for generated graphs, one per `(n, seed)`, named `hrg-n<n>-s<seed>`.
pub fn sweep_table1(grid: &SweepGrid, config: &RowConfig, threads: usize) -> Result<Vec<ExperimentRow>, Error> {
    par_runs(grid, threads, |s| {
        let name = format!("hrg-n{}-s{}", s.params.n(), s.seed);
        run_table1_row(&name, &s.graph, Some(Embedding::of(s)), config)
    })
}
