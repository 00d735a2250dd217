//! Exhaustive branching search.
//!
//! Branches on a maximum-degree vertex `v`: either `v` is in the cover or
//! all of `N(v)` is. Each node first applies the degree-0/1 rules (and the
//! dominance rule in branch-and-reduce mode), splits into components, and
//! prunes with a maximal-matching lower bound.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monitor::Monitor;

/// Largest component [`super::vc_brute_force`] accepts.
pub const BRUTE_FORCE_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BranchConfig {
    /// Apply the dominance rule at every search node.
    pub reduce_dominance: bool,
    /// Maximum number of search nodes; `None` for unlimited.
    pub node_budget: Option<u64>,
}

/// Fixed-width bitset.
#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Bits::empty(n);
        for v in 0..n {
            b.insert(v);
        }
        b
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn contains(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }

    fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn count_and(&self, other: &Bits) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn subtract(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }

    /// `self ⊆ other ∪ {skip}`.
    fn subset_except(&self, other: &Bits, skip: usize) -> bool {
        self.0.iter().zip(&other.0).enumerate().all(|(i, (a, b))| {
            let mut extra = a & !b;
            if skip / 64 == i {
                extra &= !(1 << (skip % 64));
            }
            extra == 0
        })
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + t)
            })
        })
    }
}

struct Search<'a> {
    adj: Vec<Bits>,
    config: BranchConfig,
    monitor: &'a dyn Monitor,
    nodes: u64,
}

impl Search<'_> {
    fn degree(&self, v: usize, alive: &Bits) -> usize {
        self.adj[v].count_and(alive)
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if let Some(budget) = self.config.node_budget {
            if self.nodes > budget {
                return Err(Error::BudgetExhausted { budget });
            }
        }
        if self.nodes.is_multiple_of(1024) && self.monitor.should_stop() {
            return Err(Error::Interrupted);
        }
        Ok(())
    }

    /// Applies the reduction rules in place and returns the vertices they
    /// put into the cover.
    fn reduce(&self, alive: &mut Bits) -> Vec<usize> {
        let mut taken = Vec::new();
        loop {
            let mut changed = false;
            let verts: Vec<usize> = alive.iter().collect();
            for v in verts {
                if !alive.contains(v) {
                    continue;
                }
                match self.degree(v, alive) {
                    0 => {
                        alive.remove(v);
                        changed = true;
                    }
                    1 => {
                        let u = self.adj[v].and(alive).iter().next().expect("degree one");
                        taken.push(u);
                        alive.remove(u);
                        alive.remove(v);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed && self.config.reduce_dominance {
                let verts: Vec<usize> = alive.iter().collect();
                for u in verts {
                    let nu = self.adj[u].and(alive);
                    if nu.iter().any(|v| self.adj[v].and(alive).subset_except(&nu, u)) {
                        taken.push(u);
                        alive.remove(u);
                        changed = true;
                        break;
                    }
                }
            }
            if !changed {
                return taken;
            }
        }
    }

    fn components(&self, alive: &Bits) -> Vec<Bits> {
        let mut rest = alive.clone();
        let mut out = Vec::new();
        while let Some(s) = rest.first() {
            let mut comp = Bits::empty(self.adj.len());
            comp.insert(s);
            rest.remove(s);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.adj[u].and(&rest).iter() {
                    rest.remove(w);
                    comp.insert(w);
                    stack.push(w);
                }
            }
            out.push(comp);
        }
        out
    }

    /// Size of a greedy maximal matching.
    fn matching_bound(&self, alive: &Bits) -> usize {
        let mut free = alive.clone();
        let mut size = 0;
        for u in alive.iter() {
            if !free.contains(u) {
                continue;
            }
            if let Some(w) = self.adj[u].and(&free).iter().next() {
                free.remove(u);
                free.remove(w);
                size += 1;
            }
        }
        size
    }

    /// A minimum cover of `alive` if one exists with fewer than `limit`
    /// vertices.
    fn solve(&mut self, mut alive: Bits, limit: usize) -> Result<Option<Vec<usize>>> {
        self.tick()?;
        let mut forced = self.reduce(&mut alive);
        if forced.len() >= limit {
            return Ok(None);
        }
        if alive.is_empty() {
            return Ok(Some(forced));
        }
        let limit = limit - forced.len();

        let comps = self.components(&alive);
        if comps.len() > 1 {
            let bounds: Vec<usize> = comps.iter().map(|c| self.matching_bound(c)).collect();
            let mut rest_bound: usize = bounds.iter().sum();
            if rest_bound >= limit {
                return Ok(None);
            }
            let mut used = 0;
            for (c, b) in comps.into_iter().zip(bounds) {
                rest_bound -= b;
                let Some(sub_limit) = limit.checked_sub(used + rest_bound) else {
                    return Ok(None);
                };
                match self.solve_connected(c, sub_limit)? {
                    Some(cover) => {
                        used += cover.len();
                        forced.extend(cover);
                    }
                    None => return Ok(None),
                }
            }
            return Ok(Some(forced));
        }
        match self.solve_connected(alive, limit)? {
            Some(cover) => {
                forced.extend(cover);
                Ok(Some(forced))
            }
            None => Ok(None),
        }
    }

    fn solve_connected(&mut self, alive: Bits, mut limit: usize) -> Result<Option<Vec<usize>>> {
        if self.matching_bound(&alive) >= limit {
            return Ok(None);
        }
        let (v, deg) = alive
            .iter()
            .map(|v| (v, self.degree(v, &alive)))
            .fold((usize::MAX, 0), |best, cur| if cur.1 > best.1 { cur } else { best });

        let mut best = None;
        let mut without_v = alive.clone();
        without_v.remove(v);
        if let Some(mut cover) = self.solve(without_v, limit - 1)? {
            cover.push(v);
            limit = cover.len();
            best = Some(cover);
        }
        if deg < limit {
            let nbrs = self.adj[v].and(&alive);
            let mut rest = alive;
            rest.remove(v);
            rest.subtract(&nbrs);
            if let Some(mut cover) = self.solve(rest, limit - deg)? {
                cover.extend(nbrs.iter());
                best = Some(cover);
            }
        }
        Ok(best)
    }
}

/// Minimum vertex cover by branching, with the search-node count.
pub fn branch_and_bound(
    g: &Graph,
    config: BranchConfig,
    monitor: &dyn Monitor,
) -> Result<(Vec<usize>, u64)> {
    let n = g.n();
    let adj = g
        .vertices()
        .map(|v| {
            let mut b = Bits::empty(n);
            for &w in g.neighbors(v) {
                b.insert(w);
            }
            b
        })
        .collect();
    let mut search = Search {
        adj,
        config,
        monitor,
        nodes: 0,
    };
    let incumbent = super::greedy_cover_vec(g);
    let found = search.solve(Bits::full(n), incumbent.len())?;
    let mut cover = found.unwrap_or(incumbent);
    cover.sort_unstable();
    Ok((cover, search.nodes))
}
