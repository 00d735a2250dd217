//! Tree decompositions from greedy elimination orderings.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monitor::{Monitor, Unbounded};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EliminationHeuristic {
    /// Eliminate a vertex of minimum current degree.
    #[default]
    MinDegree,
    /// Eliminate a vertex whose elimination adds the fewest fill edges.
    MinFill,
}

/// Min-degree decomposition without a time limit.
pub fn min_degree_elimination_td(g: &Graph) -> TreeDecomposition {
    elimination_td(g, EliminationHeuristic::MinDegree, &Unbounded)
        .expect("an unbounded monitor never stops")
}

fn insert_sorted(list: &mut Vec<usize>, x: usize) -> bool {
    match list.binary_search(&x) {
        Ok(_) => false,
        Err(pos) => {
            list.insert(pos, x);
            true
        }
    }
}

fn remove_sorted(list: &mut Vec<usize>, x: usize) {
    if let Ok(pos) = list.binary_search(&x) {
        list.remove(pos);
    }
}

/// Number of missing edges among `nbrs`.
fn fill_in(adj: &[Vec<usize>], nbrs: &[usize]) -> usize {
    let mut missing = 0;
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if adj[a].binary_search(&b).is_err() {
                missing += 1;
            }
        }
    }
    missing
}

/// Eliminates vertices one by one; the bag of `v` is `v` plus its neighbors
/// in the fill graph when it is eliminated, attached below the bag of the
/// first of those neighbors to be eliminated later. Ties go to the lowest id.
///
/// Returns [`Error::Interrupted`] when the monitor asks to stop.
pub fn elimination_td(
    g: &Graph,
    heuristic: EliminationHeuristic,
    monitor: &dyn Monitor,
) -> Result<TreeDecomposition> {
    let n = g.n();
    if n == 0 {
        return Ok(TreeDecomposition::default());
    }
    let mut adj: Vec<Vec<usize>> = g.vertices().map(|v| g.neighbors(v).to_vec()).collect();
    let mut eliminated = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut bags: Vec<Vec<usize>> = vec![Vec::new(); n];

    // Priority queue keyed by the heuristic score.
    let score = |adj: &[Vec<usize>], v: usize| match heuristic {
        EliminationHeuristic::MinDegree => adj[v].len(),
        EliminationHeuristic::MinFill => fill_in(adj, &adj[v]),
    };
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (score(&adj, v), v)).collect();
    let mut current: Vec<usize> = (0..n).map(|v| score(&adj, v)).collect();

    while let Some((_, v)) = queue.pop_first() {
        if order.len() % 64 == 0 && monitor.should_stop() {
            return Err(Error::Interrupted);
        }
        let nbrs = core::mem::take(&mut adj[v]);
        for &a in &nbrs {
            remove_sorted(&mut adj[a], v);
        }
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if insert_sorted(&mut adj[a], b) {
                    insert_sorted(&mut adj[b], a);
                }
            }
        }
        eliminated[v] = true;
        order.push(v);

        // Rescore everything whose score may have moved.
        let mut touched: BTreeSet<usize> = nbrs.iter().copied().collect();
        if heuristic == EliminationHeuristic::MinFill {
            for &a in &nbrs {
                touched.extend(adj[a].iter().copied());
            }
        }
        for w in touched {
            if eliminated[w] {
                continue;
            }
            let s = score(&adj, w);
            if s != current[w] {
                queue.remove(&(current[w], w));
                current[w] = s;
                queue.insert((s, w));
            }
        }

        let mut bag = nbrs;
        bag.push(v);
        bag.sort_unstable();
        bags[v] = bag;
    }

    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    // Bag i of the output is the bag of the i-th eliminated vertex.
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut roots = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let next = bags[v]
            .iter()
            .filter(|&&u| u != v)
            .map(|&u| position[u])
            .min();
        match next {
            Some(p) => parent[i] = Some(p),
            None => roots.push(i),
        }
    }
    // One tree per component; chain the roots together.
    for w in roots.windows(2) {
        parent[w[0]] = Some(w[1]);
    }
    let bags = order.iter().map(|&v| core::mem::take(&mut bags[v])).collect();
    Ok(TreeDecomposition { bags, parent })
}
