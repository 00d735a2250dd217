//! Undirected simple graphs on contiguous ids `0..n`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::geometry::PolarPoint;
use crate::{Error, Result};

/// Undirected simple graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

/// What [`Graph::from_edges`] threw away.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CleanReport {
    pub self_loops: usize,
    pub duplicates: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, dropping self-loops and repeated
    /// edges. Panics if an endpoint is `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> (Self, CleanReport)
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut report = CleanReport::default();
        let mut pushed = 0usize;
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for n = {n}");
            if u == v {
                report.self_loops += 1;
                continue;
            }
            adj[u].push(v);
            adj[v].push(u);
            pushed += 1;
        }
        let mut twice_m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice_m += list.len();
        }
        let m = twice_m / 2;
        report.duplicates = pushed - m;
        (Graph { adj, m }, report)
    }

    /// Takes adjacency lists that are already sorted, symmetric and loop-free.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let g = Graph { adj, m };
        debug_assert!(g.is_well_formed());
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn average_degree(&self) -> f64 {
        if self.n() == 0 {
            0.0
        } else {
            2.0 * self.m as f64 / self.n() as f64
        }
    }

    /// Each edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> core::ops::Range<usize> {
        0..self.n()
    }

    /// Symmetric, sorted, loop-free and duplicate-free adjacency.
    pub fn is_well_formed(&self) -> bool {
        let n = self.n();
        let mut count = 0;
        for (u, list) in self.adj.iter().enumerate() {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            for &v in list {
                if v >= n || v == u || self.adj[v].binary_search(&u).is_err() {
                    return false;
                }
            }
            count += list.len();
        }
        count == 2 * self.m
    }

    /// Subgraph induced by the vertices in `keep`; ids keep their relative order.
    pub fn induced(&self, keep: &VertexSet) -> InducedSubgraph {
        self.induced_by(|v| keep.contains(v))
    }

    /// Subgraph induced by the vertices NOT in `remove`.
    pub fn without(&self, remove: &VertexSet) -> InducedSubgraph {
        self.induced_by(|v| !remove.contains(v))
    }

    pub fn induced_by<F: Fn(usize) -> bool>(&self, keep: F) -> InducedSubgraph {
        let to_parent: Vec<usize> = self.vertices().filter(|&v| keep(v)).collect();
        self.induced_on_sorted(to_parent)
    }

    /// `to_parent` must be strictly increasing.
    pub(crate) fn induced_on_sorted(&self, to_parent: Vec<usize>) -> InducedSubgraph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in to_parent.iter().enumerate() {
            local[v] = i;
        }
        let adj = to_parent
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| (local[w] != usize::MAX)).map(|&w| local[w])
                    .collect()
            })
            .collect();
        InducedSubgraph {
            graph: Graph::from_sorted_adjacency(adj),
            to_parent,
        }
    }
}

/// An induced subgraph together with the map back to parent ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `to_parent[i]` is the parent id of local vertex `i` (strictly increasing).
    pub to_parent: Vec<usize>,
}

impl InducedSubgraph {
    /// Inverse of `to_parent` over a parent graph with `parent_n` vertices.
    pub fn to_local(&self, parent_n: usize) -> Vec<Option<usize>> {
        let mut map = vec![None; parent_n];
        for (i, &p) in self.to_parent.iter().enumerate() {
            map[p] = Some(i);
        }
        map
    }

    /// Translates a set of local vertices into a set over the parent graph.
    pub fn lift(&self, local: &VertexSet, parent_n: usize) -> VertexSet {
        VertexSet::from_iter(parent_n, local.iter().map(|v| self.to_parent[v]))
    }
}

/// Membership set over `0..capacity`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VertexSet {
    bits: Vec<bool>,
    len: usize,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet {
            bits: vec![false; capacity],
            len: 0,
        }
    }

    pub fn full(capacity: usize) -> Self {
        VertexSet {
            bits: vec![true; capacity],
            len: capacity,
        }
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(capacity: usize, items: I) -> Self {
        let mut s = VertexSet::new(capacity);
        for v in items {
            s.insert(v);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.get(v).copied().unwrap_or(false)
    }

    /// Returns `true` if `v` was not yet present.
    pub fn insert(&mut self, v: usize) -> bool {
        let fresh = !self.bits[v];
        self.bits[v] = true;
        self.len += fresh as usize;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let present = self.contains(v);
        if present {
            self.bits[v] = false;
            self.len -= 1;
        }
        present
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().filter_map(|(v, &b)| b.then_some(v))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet {
            bits: self.bits.iter().map(|b| !b).collect(),
            len: self.bits.len() - self.len,
        }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for v in other.iter() {
            self.insert(v);
        }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }
}

/// Induced subgraph on the vertices of degree at most `d`, degrees measured in `g`.
pub fn subgraph_max_degree(g: &Graph, d: usize) -> InducedSubgraph {
    g.induced_by(|v| g.degree(v) <= d)
}

/// Induced subgraph on the vertices of radius at least `r`.
pub fn subgraph_min_radius(g: &Graph, coords: &[PolarPoint], r: f64) -> Result<InducedSubgraph> {
    if coords.len() != g.n() || (g.n() > 0 && coords.is_empty()) {
        return Err(Error::MissingCoordinates {
            coords: coords.len(),
            vertices: g.n(),
        });
    }
    Ok(g.induced_by(|v| coords[v].r >= r))
}

/// Connected components, each sorted ascending, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.push_back(s);
        let mut comp = Vec::new();
        while let Some(u) = queue.pop_front() {
            comp.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// `true` iff every edge has an endpoint in `cover`.
pub fn verify_cover(g: &Graph, cover: &VertexSet) -> bool {
    g.edges().all(|(u, v)| cover.contains(u) || cover.contains(v))
}

/// `true` iff no edge has both endpoints in `set`.
pub fn is_independent(g: &Graph, set: &VertexSet) -> bool {
    g.edges().all(|(u, v)| !(set.contains(u) && set.contains(v)))
}
