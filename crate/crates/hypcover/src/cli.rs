//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 for usage or input errors, 2 when a width
//! cap, search budget or time limit stops a run.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hypcover_core::approx::{adaptive_greedy_vc, ApproxConfig};
use hypcover_core::decomposition::{
    elimination_td, path_decomposition_from_arcs_cut, ArcModel, EliminationHeuristic,
};
use hypcover_core::generator::generate;
use hypcover_core::geometry::high_degree_threshold_for;
use hypcover_core::kernel::{dominance_stats, reduce_dominance_exhaustive};
use hypcover_core::solver::{vc_hybrid, CoverResult, Embedding, HybridConfig, Stage, DEFAULT_WIDTH_CAP};
use hypcover_core::{Graph, GraphSample, ModelParams};

use crate::clock::WallClock;
use crate::experiments::{
    self, run_table1_row, summarize_widths, RowConfig, SweepGrid,
};
use crate::io::{self, CoordFile, EdgeList, IoError};

#[derive(Debug, Parser)]
#[command(
    name = "hypcover",
    version,
    about = "Vertex cover on hyperbolic random graphs",
    long_about = "Vertex cover on hyperbolic random graphs.\n\n\
        Edge lists hold one 'u v' pair per line ('#' and '%' start comments; a '# vertices <n>' \
        line makes ids literal, otherwise ids are renumbered in sorted order). Coordinate files \
        hold 'id r phi' lines after a '# n= alpha= kappa_bar= R= seed=' header. Cover files hold \
        one vertex id per line after a '# size= optimal=' header."
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample a hyperbolic random graph and write its edges and coordinates.
    Generate(GenerateArgs),
    /// Exact minimum vertex cover: dominance kernel, decomposition, DP or branch-and-reduce.
    Solve(SolveArgs),
    /// Greedy or k-adaptive greedy vertex cover.
    Approx(ApproxArgs),
    /// Per-graph measurements as CSV.
    Analyze(AnalyzeArgs),
    /// Experiments over generated graphs as CSV.
    Sweep(SweepArgs),
    /// Write a tree decomposition in PACE format.
    Decompose(DecomposeArgs),
}

#[derive(Debug, Args)]
struct ModelArgs {
    /// Power-law shape parameter, in (1/2, 1).
    #[arg(long, default_value_t = 0.75)]
    alpha: f64,
    /// Target average degree.
    #[arg(long = "kappa", default_value_t = 8.0)]
    kappa_bar: f64,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    /// Number of vertices.
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    model: ModelArgs,
    /// Seed of the random stream.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Edge list output.
    #[arg(long)]
    out_edges: Option<PathBuf>,
    /// Coordinate file output.
    #[arg(long)]
    out_coords: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Edge list file.
    #[arg(long)]
    edges: PathBuf,
    /// Coordinate file matching the edge list's vertex ids.
    #[arg(long)]
    coords: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Largest decomposition width handed to the DP.
    #[arg(long, default_value_t = DEFAULT_WIDTH_CAP)]
    width_cap: usize,
    /// Search-node budget for branch-and-reduce.
    #[arg(long)]
    budget: Option<u64>,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    time_limit: Option<f64>,
    #[arg(long, value_enum, default_value_t = Heuristic::MinDegree)]
    heuristic: Heuristic,
    /// Cover output file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// CSV of kernel rule applications (step, vertex, witness).
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ApproxArgs {
    #[arg(long)]
    edges: PathBuf,
    /// Greedy stops once every degree is at most k; 0 is plain greedy.
    #[arg(long, default_value_t = 0)]
    k: usize,
    /// Largest component finished exactly when k >= 3.
    #[arg(long, default_value_t = 100)]
    component_cap: usize,
    /// Cover output file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// One row: network,easy,dom,tw,greedy,two_ad,four_ad,comp.
    Table1,
    /// Share of dominant vertices among high-degree and inner-disk vertices.
    Dominance,
    /// Interval widths of the arc supergraphs (needs coordinates).
    Width,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Heuristic {
    MinDegree,
    MinFill,
}

impl From<Heuristic> for EliminationHeuristic {
    fn from(h: Heuristic) -> Self {
        match h {
            Heuristic::MinDegree => EliminationHeuristic::MinDegree,
            Heuristic::MinFill => EliminationHeuristic::MinFill,
        }
    }
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum)]
    mode: Mode,
    /// Exponent for the high-degree threshold when no coordinate header gives one.
    #[arg(long, default_value_t = 0.75)]
    alpha: f64,
    /// Network name for the table row; defaults to the file stem.
    #[arg(long)]
    name: Option<String>,
    /// Search-node budget for the exact solve.
    #[arg(long, default_value_t = 10_000_000)]
    budget: u64,
    /// Time limit in seconds for the treewidth heuristic.
    #[arg(long, default_value_t = 900.0)]
    tw_time_limit: f64,
    /// Inner-disk constant; defaults to 8 / kappa_bar.
    #[arg(long)]
    c: Option<f64>,
    /// Degree caps for the width mode.
    #[arg(long, value_delimiter = ',', default_values_t = [8usize, 16, 32, 64])]
    d: Vec<usize>,
    /// CSV output; stdout if absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepKind {
    Dominance,
    Width,
    Table1,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(value_enum)]
    kind: SweepKind,
    /// Graph sizes.
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    /// Number of seeds per size.
    #[arg(long, default_value_t = 10)]
    seeds: u64,
    /// First seed; seeds are consecutive.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    model: ModelArgs,
    /// Inner-disk constant for the dominance sweep; defaults to 8 / kappa_bar.
    #[arg(long)]
    c: Option<f64>,
    /// Degree caps for the width sweep.
    #[arg(long, value_delimiter = ',', default_values_t = [8usize, 16, 32, 64])]
    d: Vec<usize>,
    /// Search-node budget per exact solve in the table sweep.
    #[arg(long, default_value_t = 10_000_000)]
    budget: u64,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// CSV output; stdout if absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Width sweep only: per-size medians and fitted constants.
    #[arg(long)]
    summary: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct DecomposeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = Heuristic::MinDegree)]
    heuristic: Heuristic,
    /// PACE output; stdout if absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A failed command and the exit code it maps to.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Resource(_) => 2,
        }
    }
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<hypcover_core::Error> for CliError {
    fn from(e: hypcover_core::Error) -> Self {
        if e.is_resource_limit() {
            CliError::Resource(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

type CliResult<T = ()> = Result<T, CliError>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CliResult {
    match cmd {
        Command::Generate(a) => cmd_generate(a, out),
        Command::Solve(a) => cmd_solve(a, out),
        Command::Approx(a) => cmd_approx(a, out),
        Command::Analyze(a) => cmd_analyze(a, out),
        Command::Sweep(a) => cmd_sweep(a, out),
        Command::Decompose(a) => cmd_decompose(a, out),
    }
}

fn create(path: &Path) -> CliResult<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn open(path: &Path) -> CliResult<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Runs `f` on the file at `path`, or on `out` when no path is given.
fn with_output(path: Option<&Path>, out: &mut dyn Write, f: impl FnOnce(&mut dyn Write) -> CliResult) -> CliResult {
    match path {
        Some(p) => {
            let mut w = create(p)?;
            f(&mut w)?;
            w.flush()?;
            Ok(())
        }
        None => f(out),
    }
}

fn read_input(input: &InputArgs) -> CliResult<(EdgeList, Option<CoordFile>)> {
    let edges = io::read_edge_list(open(&input.edges)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", input.edges.display())))?;
    let coords = match &input.coords {
        Some(p) => Some(
            io::read_coords(open(p)?, edges.graph.n())
                .map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?,
        ),
        None => None,
    };
    Ok((edges, coords))
}

fn embedding(coords: &CoordFile) -> CliResult<Embedding<'_>> {
    let radius = coords
        .radius
        .ok_or_else(|| CliError::Input("coordinate file header lacks R=".into()))?;
    Ok(Embedding {
        coords: &coords.coords,
        radius,
    })
}

/// Rebuilds the sample a coordinate file came from.
fn sample_from(edges: &EdgeList, coords: &CoordFile) -> CliResult<GraphSample> {
    let (Some(alpha), Some(kappa)) = (coords.alpha, coords.kappa_bar) else {
        return Err(CliError::Input("coordinate file header lacks alpha= or kappa_bar=".into()));
    };
    Ok(GraphSample {
        params: ModelParams::new(edges.graph.n(), alpha, kappa)?,
        seed: coords.seed.unwrap_or(0),
        coords: coords.coords.clone(),
        graph: edges.graph.clone(),
    })
}

fn cmd_generate(a: GenerateArgs, out: &mut dyn Write) -> CliResult {
    if a.n == 0 {
        // Nothing to sample; the model's radius is undefined here.
        if let Some(p) = &a.out_edges {
            io::write_edge_list(create(p)?, &Graph::empty(0))?;
        }
        if let Some(p) = &a.out_coords {
            let mut w = create(p)?;
            writeln!(
                w,
                "# n=0 alpha={} kappa_bar={} seed={}",
                a.model.alpha, a.model.kappa_bar, a.seed
            )?;
            w.flush()?;
        }
        writeln!(out, "n=0 m=0 avg_degree=0.000 R=undefined")?;
        return Ok(());
    }
    let params = ModelParams::new(a.n, a.model.alpha, a.model.kappa_bar)?;
    let s = generate(&params, a.seed)?;
    if let Some(p) = &a.out_edges {
        let mut w = create(p)?;
        io::write_edge_list(&mut w, &s.graph)?;
        w.flush()?;
    }
    if let Some(p) = &a.out_coords {
        let mut w = create(p)?;
        io::write_coords(&mut w, &s)?;
        w.flush()?;
    }
    writeln!(
        out,
        "n={} m={} avg_degree={:.3} R={:.6}",
        s.graph.n(),
        s.graph.m(),
        s.graph.average_degree(),
        s.radius()
    )?;
    Ok(())
}

fn print_stats(out: &mut dyn Write, r: &CoverResult) -> CliResult {
    let s = &r.stats;
    writeln!(out, "size={}", r.size())?;
    writeln!(out, "optimal={}", r.optimal)?;
    for stage in [Stage::Kernel, Stage::Dp, Stage::Branch, Stage::Brute, Stage::Greedy] {
        let count = r.count_by(stage);
        if count > 0 {
            writeln!(out, "from_{}={count}", stage.name())?;
        }
    }
    writeln!(out, "components={} largest_component={}", s.components, s.largest_component)?;
    writeln!(out, "dp_components={} max_width={}", s.dp_components, s.max_width)?;
    writeln!(out, "branch_components={} branch_nodes={}", s.branch_components, s.branch_nodes)?;
    if s.degraded_components > 0 {
        writeln!(out, "degraded_components={}", s.degraded_components)?;
    }
    writeln!(
        out,
        "time_kernel={:.3}s time_decomposition={:.3}s time_solve={:.3}s",
        s.kernel_secs, s.decomposition_secs, s.solve_secs
    )?;
    Ok(())
}

fn cmd_solve(a: SolveArgs, out: &mut dyn Write) -> CliResult {
    let (edges, coords) = read_input(&a.input)?;
    let g = &edges.graph;
    let emb = coords.as_ref().map(embedding).transpose()?;

    // The kernel is cheap; run it up front so its numbers survive a failed solve.
    let kernel = reduce_dominance_exhaustive(g);
    writeln!(out, "n={} m={}", g.n(), g.m())?;
    writeln!(
        out,
        "kernel_forced={} kernel_remaining={}",
        kernel.forced_cover.len(),
        kernel.reduced.graph.n()
    )?;
    if let Some(p) = &a.trace {
        io::write_kernel_trace(create(p)?, &kernel.trace)?;
    }

    let config = HybridConfig {
        width_cap: a.width_cap,
        node_budget: a.budget,
        heuristic: a.heuristic.into(),
        ..HybridConfig::default()
    };
    let clock = WallClock::new(a.time_limit.map(Duration::from_secs_f64));
    let result = vc_hybrid(g, emb, &config, &clock)?;
    print_stats(out, &result)?;
    if let Some(p) = &a.out {
        let mut w = create(p)?;
        io::write_cover(&mut w, &result, &edges.labels)?;
        w.flush()?;
    }
    Ok(())
}

fn cmd_approx(a: ApproxArgs, out: &mut dyn Write) -> CliResult {
    let edges = io::read_edge_list(open(&a.edges)?)?;
    let config = ApproxConfig {
        k: a.k,
        component_cap: a.component_cap,
        ..ApproxConfig::default()
    };
    let result = adaptive_greedy_vc(&edges.graph, &config);
    print_stats(out, &result)?;
    if let Some(p) = &a.out {
        let mut w = create(p)?;
        io::write_cover(&mut w, &result, &edges.labels)?;
        w.flush()?;
    }
    Ok(())
}

fn cmd_analyze(a: AnalyzeArgs, out: &mut dyn Write) -> CliResult {
    let (edges, coords) = read_input(&a.input)?;
    let g = &edges.graph;
    let alpha = coords.as_ref().and_then(|c| c.alpha).unwrap_or(a.alpha);
    match a.mode {
        Mode::Table1 => {
            let name = a.name.clone().unwrap_or_else(|| {
                a.input
                    .edges
                    .file_stem()
                    .map_or_else(|| "graph".into(), |s| s.to_string_lossy().into_owned())
            });
            let config = RowConfig {
                alpha,
                tw_time: Some(Duration::from_secs_f64(a.tw_time_limit)),
                node_budget: Some(a.budget),
                ..RowConfig::default()
            };
            let emb = coords.as_ref().map(embedding).transpose()?;
            let row = run_table1_row(&name, g, emb, &config)?;
            with_output(a.out.as_deref(), out, |w| Ok(experiments::write_table1_csv(w, &[row])?))
        }
        Mode::Dominance => {
            let stats = dominance_stats(g, high_degree_threshold_for(g.n(), alpha));
            let inner = match &coords {
                Some(c) => Some(experiments::dominance_row(&sample_from(&edges, c)?, a.c)?),
                None => None,
            };
            with_output(a.out.as_deref(), out, |w| {
                let mut csv = csv::Writer::from_writer(w);
                csv.write_record(["high_degree", "dominant", "percentage", "rho", "inner", "inner_dominant", "fraction"])
                    .map_err(IoError::from)?;
                let opt = |f: &dyn Fn(&experiments::DominanceRow) -> String| inner.as_ref().map_or_else(String::new, f);
                csv.write_record([
                    stats.high_degree.to_string(),
                    stats.dominant.to_string(),
                    format!("{:.0}", stats.percentage.round()),
                    opt(&|r| format!("{:.6}", r.rho)),
                    opt(&|r| r.inner.to_string()),
                    opt(&|r| r.inner_dominant.to_string()),
                    opt(&|r| format!("{:.6}", r.fraction)),
                ])
                .map_err(IoError::from)?;
                csv.flush()?;
                Ok(())
            })
        }
        Mode::Width => {
            let c = coords
                .as_ref()
                .ok_or_else(|| CliError::Input("--mode width needs --coords".into()))?;
            let rows = experiments::width_rows(&sample_from(&edges, c)?, &a.d)?;
            with_output(a.out.as_deref(), out, |w| Ok(experiments::write_width_csv(w, &rows)?))
        }
    }
}

fn cmd_sweep(a: SweepArgs, out: &mut dyn Write) -> CliResult {
    let grid = SweepGrid {
        ns: a.n.clone(),
        seeds: (a.seed..a.seed + a.seeds).collect(),
        alpha: a.model.alpha,
        kappa_bar: a.model.kappa_bar,
    };
    match a.kind {
        SweepKind::Dominance => {
            let rows = experiments::sweep_dominance(&grid, a.c, a.threads)?;
            with_output(a.out.as_deref(), out, |w| Ok(experiments::write_dominance_csv(w, &rows)?))
        }
        SweepKind::Width => {
            let rows = experiments::sweep_width(&grid, &a.d, a.threads)?;
            if let Some(p) = &a.summary {
                let mut w = create(p)?;
                experiments::write_width_summary_csv(&mut w, &summarize_widths(&rows))?;
                w.flush()?;
            }
            with_output(a.out.as_deref(), out, |w| Ok(experiments::write_width_csv(w, &rows)?))
        }
        SweepKind::Table1 => {
            let config = RowConfig {
                alpha: a.model.alpha,
                node_budget: Some(a.budget),
                ..RowConfig::deterministic()
            };
            let rows = experiments::sweep_table1(&grid, &config, a.threads)?;
            with_output(a.out.as_deref(), out, |w| Ok(experiments::write_table1_csv(w, &rows)?))
        }
    }
}

fn cmd_decompose(a: DecomposeArgs, out: &mut dyn Write) -> CliResult {
    let (edges, coords) = read_input(&a.input)?;
    let g = &edges.graph;
    let td = match &coords {
        Some(c) => {
            let emb = embedding(c)?;
            let model = ArcModel::from_points(emb.coords.iter().copied().enumerate(), emb.radius);
            path_decomposition_from_arcs_cut(&model, model.min_overlap_angle()).into_tree()
        }
        None => elimination_td(g, a.heuristic.into(), &WallClock::unlimited())?,
    };
    let report = hypcover_core::decomposition::validate_tree_decomposition(g, &td);
    if let Some(v) = report.violations.first() {
        return Err(CliError::Input(format!("coordinates do not match the edges: {v}")));
    }
    with_output(a.out.as_deref(), out, |w| Ok(io::write_pace_td(w, &td, g.n())?))?;
    if a.out.is_some() {
        writeln!(out, "width={}", td.width())?;
    }
    Ok(())
}
