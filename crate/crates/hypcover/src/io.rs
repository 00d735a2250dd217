//! Plain-text file formats.
//!
//! Edge list: one `u v` pair per line, whitespace or comma separated; extra
//! columns are ignored; lines starting with `#` or `%` are comments. A
//! `# vertices <n>` line fixes the vertex count and makes ids literal;
//! otherwise the distinct ids are sorted and renumbered `0..`.
//!
//! Coordinates: `id r phi` per line after a `# n=… alpha=… kappa_bar=… R=…
//! seed=…` header.
//!
//! Cover: `# size=<k> optimal=<bool>` then one id per line.

use std::collections::{BTreeMap, HashMap};
use std::io::{BufRead, Write};

use hypcover_core::decomposition::TreeDecomposition;
use hypcover_core::graph::CleanReport;
use hypcover_core::kernel::TraceEntry;
use hypcover_core::solver::CoverResult;
use hypcover_core::{Graph, GraphSample, PolarPoint, VertexSet};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

fn parse_err(line: usize, msg: impl Into<String>) -> IoError {
    IoError::Parse {
        line,
        msg: msg.into(),
    }
}

fn is_comment(line: &str) -> bool {
    line.is_empty() || line.starts_with('#') || line.starts_with('%')
}

fn fields(line: &str) -> impl Iterator<Item = &str> {
    line.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
}

/// A parsed edge list.
#[derive(Debug, Clone)]
pub struct EdgeList {
    pub graph: Graph,
    /// Original id of each vertex.
    pub labels: Vec<u64>,
    pub cleaned: CleanReport,
}

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<EdgeList, IoError> {
    let mut declared: Option<usize> = None;
    let mut raw = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        let lineno = i + 1;
        if let Some(rest) = line.strip_prefix('#') {
            let mut it = rest.split_whitespace();
            if it.next() == Some("vertices") {
                let n = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| parse_err(lineno, "expected '# vertices <n>'"))?;
                declared = Some(n);
            }
            continue;
        }
        if is_comment(line) {
            continue;
        }
        let mut it = fields(line);
        let mut id = |what: &str| -> Result<u64, IoError> {
            it.next()
                .ok_or_else(|| parse_err(lineno, format!("missing {what} endpoint")))?
                .parse()
                .map_err(|_| parse_err(lineno, format!("{what} endpoint is not a non-negative integer")))
        };
        let u = id("first")?;
        let v = id("second")?;
        raw.push((u, v));
    }

    let (n, labels, edges): (usize, Vec<u64>, Vec<(usize, usize)>) = match declared {
        Some(n) => {
            if let Some(&(u, v)) = raw.iter().find(|&&(u, v)| u.max(v) >= n as u64) {
                return Err(parse_err(0, format!("edge ({u}, {v}) exceeds declared vertex count {n}")));
            }
            let edges = raw.iter().map(|&(u, v)| (u as usize, v as usize)).collect();
            (n, (0..n as u64).collect(), edges)
        }
        None => {
            let mut ids: BTreeMap<u64, usize> = raw.iter().flat_map(|&(u, v)| [(u, 0), (v, 0)]).collect();
            for (i, slot) in ids.values_mut().enumerate() {
                *slot = i;
            }
            let edges = raw.iter().map(|(u, v)| (ids[u], ids[v])).collect();
            (ids.len(), ids.into_keys().collect(), edges)
        }
    };
    let (graph, cleaned) = Graph::from_edges(n, edges);
    Ok(EdgeList {
        graph,
        labels,
        cleaned,
    })
}

pub fn write_edge_list<W: Write>(mut w: W, g: &Graph) -> Result<(), IoError> {
    writeln!(w, "# vertices {}", g.n())?;
    for (u, v) in g.edges() {
        writeln!(w, "{u} {v}")?;
    }
    Ok(())
}

/// Coordinates plus whatever model parameters the header carried.
#[derive(Debug, Clone, Default)]
pub struct CoordFile {
    pub coords: Vec<PolarPoint>,
    pub radius: Option<f64>,
    pub alpha: Option<f64>,
    pub kappa_bar: Option<f64>,
    pub seed: Option<u64>,
}

pub fn write_coords<W: Write>(mut w: W, sample: &GraphSample) -> Result<(), IoError> {
    let p = &sample.params;
    writeln!(
        w,
        "# n={} alpha={} kappa_bar={} R={:.17e} seed={}",
        p.n(),
        p.alpha(),
        p.kappa_bar(),
        p.radius(),
        sample.seed
    )?;
    for (i, c) in sample.coords.iter().enumerate() {
        writeln!(w, "{i} {:.17e} {:.17e}", c.r, c.phi)?;
    }
    Ok(())
}

/// Reads a coordinate file; every id in `0..n` must appear exactly once.
pub fn read_coords<R: BufRead>(reader: R, n: usize) -> Result<CoordFile, IoError> {
    let mut out = CoordFile::default();
    let mut slots: Vec<Option<PolarPoint>> = vec![None; n];
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        let lineno = i + 1;
        if let Some(rest) = line.strip_prefix('#') {
            for kv in rest.split_whitespace() {
                let Some((k, v)) = kv.split_once('=') else {
                    continue;
                };
                let bad = || parse_err(lineno, format!("bad header value {kv}"));
                match k {
                    "R" => out.radius = Some(v.parse().map_err(|_| bad())?),
                    "alpha" => out.alpha = Some(v.parse().map_err(|_| bad())?),
                    "kappa_bar" => out.kappa_bar = Some(v.parse().map_err(|_| bad())?),
                    "seed" => out.seed = Some(v.parse().map_err(|_| bad())?),
                    _ => {}
                }
            }
            continue;
        }
        if is_comment(line) {
            continue;
        }
        let parts: Vec<&str> = fields(line).collect();
        if parts.len() < 3 {
            return Err(parse_err(lineno, "expected 'id r phi'"));
        }
        let id: usize = parts[0]
            .parse()
            .map_err(|_| parse_err(lineno, "bad vertex id"))?;
        let r: f64 = parts[1].parse().map_err(|_| parse_err(lineno, "bad radius"))?;
        let phi: f64 = parts[2].parse().map_err(|_| parse_err(lineno, "bad angle"))?;
        if id >= n {
            return Err(parse_err(lineno, format!("vertex {id} out of range for {n} vertices")));
        }
        if slots[id].replace(PolarPoint { r, phi }).is_some() {
            return Err(parse_err(lineno, format!("vertex {id} listed twice")));
        }
    }
    if let Some(missing) = slots.iter().position(Option::is_none) {
        return Err(parse_err(0, format!("no coordinates for vertex {missing}")));
    }
    out.coords = slots.into_iter().flatten().collect();
    Ok(out)
}

/// Writes the cover using `labels` (the original ids) for each vertex.
pub fn write_cover<W: Write>(mut w: W, result: &CoverResult, labels: &[u64]) -> Result<(), IoError> {
    writeln!(w, "# size={} optimal={}", result.size(), result.optimal)?;
    for v in result.cover.iter() {
        writeln!(w, "{}", labels[v])?;
    }
    Ok(())
}

/// Reads a cover written with the same `labels`.
pub fn read_cover<R: BufRead>(reader: R, labels: &[u64]) -> Result<VertexSet, IoError> {
    let index: HashMap<u64, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let mut set = VertexSet::new(labels.len());
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if is_comment(line) {
            continue;
        }
        let label: u64 = line
            .parse()
            .map_err(|_| parse_err(i + 1, "bad vertex id"))?;
        let v = *index
            .get(&label)
            .ok_or_else(|| parse_err(i + 1, format!("unknown vertex {label}")))?;
        set.insert(v);
    }
    Ok(set)
}

/// PACE `.td` format: `s td <bags> <width+1> <n>`, `b <i> <vertices…>`
/// lines and tree edges, all 1-based.
pub fn write_pace_td<W: Write>(mut w: W, td: &TreeDecomposition, n: usize) -> Result<(), IoError> {
    writeln!(w, "s td {} {} {}", td.bags.len(), td.width() + 1, n)?;
    for (i, bag) in td.bags.iter().enumerate() {
        write!(w, "b {}", i + 1)?;
        for v in bag {
            write!(w, " {}", v + 1)?;
        }
        writeln!(w)?;
    }
    for (i, p) in td.parent.iter().enumerate() {
        if let Some(p) = p {
            writeln!(w, "{} {}", p + 1, i + 1)?;
        }
    }
    Ok(())
}

pub fn write_kernel_trace<W: Write>(w: W, trace: &[TraceEntry]) -> Result<(), IoError> {
    let mut csv = csv::Writer::from_writer(w);
    csv.write_record(["step", "vertex", "witness"])?;
    for t in trace {
        csv.write_record([t.step.to_string(), t.vertex.to_string(), t.witness.to_string()])?;
    }
    csv.flush()?;
    Ok(())
}
