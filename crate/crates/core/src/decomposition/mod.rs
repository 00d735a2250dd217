//! Path and tree decompositions.
//!
//! * [`arcs`]: the circular-arc supergraph of a hyperbolic random graph and
//!   the path decomposition read off its arcs.
//! * [`elimination`]: min-degree / min-fill elimination orderings for graphs
//!   without coordinates.
//!
//! Width is `max bag size − 1`; the decomposition of an empty graph has width
//! −1.

pub mod arcs;
pub mod elimination;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

pub use arcs::{
    build_arc_model, interval_width_of_arcs, path_decomposition_from_arcs,
    path_decomposition_from_arcs_cut, Arc, ArcModel,
};
pub use elimination::{elimination_td, min_degree_elimination_td, EliminationHeuristic};

/// A sequence of bags.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PathDecomposition {
    pub bags: Vec<Vec<usize>>,
}

impl PathDecomposition {
    pub fn width(&self) -> isize {
        max_bag(&self.bags) as isize - 1
    }

    pub fn into_tree(self) -> TreeDecomposition {
        let parent = (0..self.bags.len())
            .map(|i| i.checked_sub(1))
            .collect();
        TreeDecomposition {
            bags: self.bags,
            parent,
        }
    }
}

/// A rooted tree of bags given by parent links; exactly one root.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<usize>>,
    pub parent: Vec<Option<usize>>,
}

impl TreeDecomposition {
    /// One bag holding every vertex.
    pub fn trivial(n: usize) -> Self {
        TreeDecomposition {
            bags: vec![(0..n).collect()],
            parent: vec![None],
        }
    }

    pub fn width(&self) -> isize {
        max_bag(&self.bags) as isize - 1
    }

    pub fn root(&self) -> Option<usize> {
        self.parent.iter().position(Option::is_none)
    }

    /// Children lists derived from the parent links.
    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut ch = vec![Vec::new(); self.bags.len()];
        for (i, p) in self.parent.iter().enumerate() {
            if let Some(p) = *p {
                if p < ch.len() {
                    ch[p].push(i);
                }
            }
        }
        ch
    }
}

fn max_bag(bags: &[Vec<usize>]) -> usize {
    bags.iter().map(Vec::len).max().unwrap_or(0)
}

/// A broken decomposition axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Vertex id outside the graph.
    UnknownVertex { bag: usize, vertex: usize },
    /// The same vertex listed twice in one bag.
    RepeatedVertex { bag: usize, vertex: usize },
    /// Vertex in no bag.
    MissingVertex(usize),
    /// No bag holds both endpoints.
    MissingEdge(usize, usize),
    /// Bags holding the vertex are not contiguous (path) / not connected (tree).
    Disconnected(usize),
    /// Parent links do not form a single rooted tree.
    NotATree(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnknownVertex { bag, vertex } => {
                write!(f, "bag {bag} names unknown vertex {vertex}")
            }
            Violation::RepeatedVertex { bag, vertex } => {
                write!(f, "bag {bag} lists vertex {vertex} twice")
            }
            Violation::MissingVertex(v) => write!(f, "vertex {v} is in no bag"),
            Violation::MissingEdge(u, v) => write!(f, "edge {{{u}, {v}}} is in no bag"),
            Violation::Disconnected(v) => write!(f, "bags containing vertex {v} are not connected"),
            Violation::NotATree(msg) => write!(f, "not a tree: {msg}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn check_bags(g: &Graph, bags: &[Vec<usize>], report: &mut ValidationReport) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut holders = vec![Vec::new(); n];
    let mut last_bag = vec![usize::MAX; n];
    for (b, bag) in bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                report
                    .violations
                    .push(Violation::UnknownVertex { bag: b, vertex: v });
                continue;
            }
            if last_bag[v] == b {
                report
                    .violations
                    .push(Violation::RepeatedVertex { bag: b, vertex: v });
                continue;
            }
            last_bag[v] = b;
            holders[v].push(b);
        }
    }
    for (v, h) in holders.iter().enumerate() {
        if h.is_empty() {
            report.violations.push(Violation::MissingVertex(v));
        }
    }
    // Edge coverage: scan the bags of the endpoint with fewer bags.
    let mut sorted_bags: Vec<Vec<usize>> = bags.to_vec();
    for bag in &mut sorted_bags {
        bag.sort_unstable();
    }
    for (u, v) in g.edges() {
        let (a, b) = if holders[u].len() <= holders[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        let covered = holders[a]
            .iter()
            .any(|&bi| sorted_bags[bi].binary_search(&b).is_ok());
        if !covered {
            report.violations.push(Violation::MissingEdge(u, v));
        }
    }
    holders
}

/// Checks the three axioms with bags read as a path in the given order.
pub fn validate_path_decomposition(g: &Graph, pd: &PathDecomposition) -> ValidationReport {
    let mut report = ValidationReport::default();
    if g.n() > 0 && pd.bags.is_empty() {
        report
            .violations
            .push(Violation::NotATree("no bags".into()));
    }
    let holders = check_bags(g, &pd.bags, &mut report);
    for (v, h) in holders.iter().enumerate() {
        if let (Some(&first), Some(&last)) = (h.first(), h.last()) {
            if last - first + 1 != h.len() {
                report.violations.push(Violation::Disconnected(v));
            }
        }
    }
    report
}

/// Checks the three axioms plus the tree shape of the parent links.
pub fn validate_tree_decomposition(g: &Graph, td: &TreeDecomposition) -> ValidationReport {
    let mut report = ValidationReport::default();
    let k = td.bags.len();
    if td.parent.len() != k {
        report.violations.push(Violation::NotATree(alloc::format!(
            "{} bags but {} parent links",
            k,
            td.parent.len()
        )));
        return report;
    }
    if k == 0 {
        if g.n() > 0 {
            report
                .violations
                .push(Violation::NotATree("no bags".into()));
        }
        return report;
    }
    let roots = td.parent.iter().filter(|p| p.is_none()).count();
    if roots != 1 {
        report
            .violations
            .push(Violation::NotATree(alloc::format!("{roots} roots")));
        return report;
    }
    if let Some(bad) = td.parent.iter().flatten().find(|&&p| p >= k) {
        report
            .violations
            .push(Violation::NotATree(alloc::format!("parent {bad} out of range")));
        return report;
    }
    // Every node must reach the root without revisiting a node.
    let mut state = vec![0u8; k]; // 0 unknown, 1 on current walk, 2 reaches root
    for start in 0..k {
        let mut walk = Vec::new();
        let mut cur = start;
        loop {
            match state[cur] {
                2 => break,
                1 => {
                    report
                        .violations
                        .push(Violation::NotATree("cycle in parent links".into()));
                    return report;
                }
                _ => {}
            }
            state[cur] = 1;
            walk.push(cur);
            match td.parent[cur] {
                Some(p) => cur = p,
                None => break,
            }
        }
        for w in walk {
            state[w] = 2;
        }
    }

    let holders = check_bags(g, &td.bags, &mut report);
    // Bags holding v form a subtree iff exactly one of them has a parent
    // outside the set.
    let mut mark = vec![usize::MAX; k];
    for (v, h) in holders.iter().enumerate() {
        if h.len() <= 1 {
            continue;
        }
        for &b in h {
            mark[b] = v;
        }
        let tops = h
            .iter()
            .filter(|&&b| td.parent[b].is_none_or(|p| mark[p] != v))
            .count();
        if tops != 1 {
            report.violations.push(Violation::Disconnected(v));
        }
    }
    report
}
