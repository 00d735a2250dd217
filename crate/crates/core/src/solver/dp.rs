//! Minimum vertex cover by dynamic programming over a tree decomposition.
//!
//! The decomposition is first turned into a nice one (leaf, introduce,
//! forget, join). Table entries are indexed by a bitmask over the sorted bag:
//! bit `i` set means `bag[i]` is in the cover. A vertex is paid for when it
//! is forgotten, and the choice made there is kept as a backpointer bit so
//! the cover can be rebuilt top-down.

use alloc::vec;
use alloc::vec::Vec;

use crate::decomposition::{validate_tree_decomposition, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monitor::Monitor;

/// Default largest decomposition width the DP accepts.
pub const DEFAULT_WIDTH_CAP: usize = 25;

const INF: u32 = u32::MAX / 4;

#[derive(Debug, Clone, Copy)]
enum Kind {
    Leaf,
    Introduce { child: usize, pos: usize },
    Forget { child: usize, pos: usize },
    Join { left: usize, right: usize },
}

struct Node {
    kind: Kind,
    bag: Vec<usize>,
}

/// Nice decomposition stored children-before-parents.
struct Nice {
    nodes: Vec<Node>,
}

impl Nice {
    fn push(&mut self, kind: Kind, bag: Vec<usize>) -> usize {
        self.nodes.push(Node { kind, bag });
        self.nodes.len() - 1
    }

    /// Walks from node `at` (bag `from`) to bag `to` by forgetting, then
    /// introducing, one vertex at a time.
    fn morph(&mut self, mut at: usize, to: &[usize]) -> usize {
        let from = self.nodes[at].bag.clone();
        for &v in from.iter().filter(|v| to.binary_search(v).is_err()) {
            let mut bag = self.nodes[at].bag.clone();
            let pos = bag.binary_search(&v).expect("vertex in bag");
            bag.remove(pos);
            at = self.push(Kind::Forget { child: at, pos }, bag);
        }
        for &v in to.iter().filter(|v| from.binary_search(v).is_err()) {
            let mut bag = self.nodes[at].bag.clone();
            let pos = bag.binary_search(&v).unwrap_err();
            bag.insert(pos, v);
            at = self.push(Kind::Introduce { child: at, pos }, bag);
        }
        at
    }

    fn build(td: &TreeDecomposition) -> (Nice, usize) {
        let mut nice = Nice { nodes: Vec::new() };
        let bags: Vec<Vec<usize>> = td
            .bags
            .iter()
            .map(|b| {
                let mut b = b.clone();
                b.sort_unstable();
                b
            })
            .collect();
        let children = td.children();
        let root = td.root().expect("validated decomposition has a root");

        // Post-order without recursion.
        let mut order = Vec::with_capacity(bags.len());
        let mut stack = vec![(root, false)];
        while let Some((t, expanded)) = stack.pop() {
            if expanded {
                order.push(t);
            } else {
                stack.push((t, true));
                for &c in &children[t] {
                    stack.push((c, false));
                }
            }
        }

        let mut top = vec![usize::MAX; bags.len()];
        for t in order {
            let mut subtrees = children[t]
                .iter()
                .map(|&c| top[c])
                .collect::<Vec<_>>()
                .into_iter()
                .map(|node| nice.morph(node, &bags[t]))
                .collect::<Vec<_>>();
            let node = if subtrees.is_empty() {
                let leaf = nice.push(Kind::Leaf, Vec::new());
                nice.morph(leaf, &bags[t])
            } else {
                let mut acc = subtrees.remove(0);
                for other in subtrees {
                    acc = nice.push(
                        Kind::Join {
                            left: acc,
                            right: other,
                        },
                        bags[t].clone(),
                    );
                }
                acc
            };
            top[t] = node;
        }
        let root_node = nice.morph(top[root], &[]);
        (nice, root_node)
    }
}

fn insert_bit(mask: usize, pos: usize, bit: usize) -> usize {
    let low = mask & ((1 << pos) - 1);
    low | (bit << pos) | ((mask >> pos) << (pos + 1))
}

fn remove_bit(mask: usize, pos: usize) -> usize {
    let low = mask & ((1 << pos) - 1);
    low | ((mask >> (pos + 1)) << pos)
}

/// Optimal cover of `g` given a valid decomposition of width at most
/// `width_cap`. Returns the cover as sorted vertex ids.
pub fn tree_dp_cover(
    g: &Graph,
    td: &TreeDecomposition,
    width_cap: usize,
    monitor: &dyn Monitor,
) -> Result<Vec<usize>> {
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    let report = validate_tree_decomposition(g, td);
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidDecomposition(alloc::format!("{v}")));
    }
    let width = td.width().max(0) as usize;
    if width > width_cap {
        return Err(Error::WidthCapExceeded {
            width,
            cap: width_cap,
        });
    }

    let (nice, root) = Nice::build(td);
    let mut tables: Vec<Option<Vec<u32>>> = Vec::with_capacity(nice.nodes.len());
    // Backpointers of forget nodes, one bit per mask of the smaller bag.
    let mut choice: Vec<Vec<u64>> = Vec::with_capacity(nice.nodes.len());

    for (i, node) in nice.nodes.iter().enumerate() {
        if i % 256 == 0 && monitor.should_stop() {
            return Err(Error::Interrupted);
        }
        let size = 1usize << node.bag.len();
        let mut picks = Vec::new();
        let table = match node.kind {
            Kind::Leaf => vec![0],
            Kind::Introduce { child, pos } => {
                let old = tables[child].take().expect("child table");
                let v = node.bag[pos];
                let nbr_mask = node
                    .bag
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| g.has_edge(v, w))
                    .fold(0usize, |m, (j, _)| m | (1 << j));
                (0..size)
                    .map(|mask| {
                        let prev = old[remove_bit(mask, pos)];
                        if mask >> pos & 1 == 1 || mask & nbr_mask == nbr_mask {
                            prev
                        } else {
                            INF
                        }
                    })
                    .collect()
            }
            Kind::Forget { child, pos } => {
                let old = tables[child].take().expect("child table");
                picks = vec![0u64; size.div_ceil(64)];
                (0..size)
                    .map(|mask| {
                        let out = old[insert_bit(mask, pos, 0)];
                        let inn = old[insert_bit(mask, pos, 1)].saturating_add(1);
                        if inn < out {
                            picks[mask / 64] |= 1 << (mask % 64);
                            inn
                        } else {
                            out
                        }
                    })
                    .collect()
            }
            Kind::Join { left, right } => {
                let a = tables[left].take().expect("left table");
                let b = tables[right].take().expect("right table");
                a.iter()
                    .zip(&b)
                    .map(|(&x, &y)| x.saturating_add(y).min(INF))
                    .collect()
            }
        };
        tables.push(Some(table));
        choice.push(picks);
    }

    debug_assert!(nice.nodes[root].bag.is_empty());
    let best = tables[root].as_ref().expect("root table")[0];
    debug_assert!(best < INF);

    let mut cover = Vec::with_capacity(best as usize);
    let mut stack = vec![(root, 0usize)];
    while let Some((i, mask)) = stack.pop() {
        match nice.nodes[i].kind {
            Kind::Leaf => {}
            Kind::Introduce { child, pos } => stack.push((child, remove_bit(mask, pos))),
            Kind::Forget { child, pos } => {
                let bit = (choice[i][mask / 64] >> (mask % 64) & 1) as usize;
                if bit == 1 {
                    cover.push(nice.nodes[child].bag[pos]);
                }
                stack.push((child, insert_bit(mask, pos, bit)));
            }
            Kind::Join { left, right } => {
                stack.push((left, mask));
                stack.push((right, mask));
            }
        }
    }
    cover.sort_unstable();
    debug_assert_eq!(cover.len(), best as usize);
    Ok(cover)
}
