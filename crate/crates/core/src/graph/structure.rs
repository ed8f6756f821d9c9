//! Structural queries: cycles, blocks, bipartiteness, forests, matchings.

use std::collections::HashMap;

use num::{BigUint, One, Zero};
use serde::Serialize;

use super::Graph;

/// A simple cycle of length at least three, stored in canonical form: the
/// smallest vertex first, followed by its smaller cycle neighbor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Canonicalizes a closed walk given as a vertex sequence. Returns `None`
    /// for sequences shorter than three or with repeated vertices; adjacency
    /// in a host graph is checked separately with [`Cycle::lies_in`].
    pub fn new(vertices: &[usize]) -> Option<Self> {
        let k = vertices.len();
        if k < 3 {
            return None;
        }
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        let start = (0..k).min_by_key(|&i| vertices[i]).unwrap();
        let next = vertices[(start + 1) % k];
        let prev = vertices[(start + k - 1) % k];
        let out = if next < prev {
            (0..k).map(|i| vertices[(start + i) % k]).collect()
        } else {
            (0..k).map(|i| vertices[(start + k - i) % k]).collect()
        };
        Some(Self { vertices: out })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.vertices.len() % 2 == 0
    }

    /// Consecutive pairs in canonical traversal order, including the closing pair.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    pub fn lies_in(&self, g: &Graph) -> bool {
        self.vertices.iter().all(|&v| v < g.order()) && self.steps().all(|(u, v)| g.has_edge(u, v))
    }
}

/// Every simple cycle of `g` exactly once, sorted by `(length, vertices)`.
///
/// Paths are grown from each root through larger vertices only, so the root
/// is the cycle minimum; the second vertex must be smaller than the last to
/// count each cycle in one direction.
pub fn enumerate_cycles(g: &Graph) -> Vec<Cycle> {
    fn extend(
        g: &Graph,
        root: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Cycle>,
    ) {
        let cur = *path.last().unwrap();
        for &w in g.neighbors(cur) {
            if w == root && path.len() >= 3 && path[1] < cur {
                out.push(Cycle {
                    vertices: path.clone(),
                });
            } else if w > root && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                extend(g, root, path, on_path, out);
                path.pop();
                on_path[w] = false;
            }
        }
    }

    let mut out = Vec::new();
    let mut on_path = vec![false; g.order()];
    for root in 0..g.order() {
        let mut path = vec![root];
        on_path[root] = true;
        extend(g, root, &mut path, &mut on_path, &mut out);
        on_path[root] = false;
    }
    out.sort_unstable_by(|a, b| (a.len(), &a.vertices).cmp(&(b.len(), &b.vertices)));
    out
}

/// A maximal 2-connected subgraph, a bridge, or an isolated vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl Block {
    pub fn is_edge(&self) -> bool {
        self.edges.len() == 1
    }

    pub fn is_cycle(&self) -> bool {
        self.edges.len() >= 3 && self.edges.len() == self.vertices.len()
    }
}

/// Block decomposition by DFS low-link values. Blocks are sorted by their
/// vertex lists.
pub fn blocks(g: &Graph) -> Vec<Block> {
    const UNSEEN: usize = usize::MAX;
    let n = g.order();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();

    fn close_block(edge_stack: &mut Vec<(usize, usize)>, out: &mut Vec<Block>, u: usize, v: usize) {
        let mut edges = Vec::new();
        while let Some(e) = edge_stack.pop() {
            edges.push((e.0.min(e.1), e.0.max(e.1)));
            if e == (u, v) {
                break;
            }
        }
        edges.sort_unstable();
        let mut vertices: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        out.push(Block { vertices, edges });
    }

    for s in 0..n {
        if disc[s] != UNSEEN {
            continue;
        }
        disc[s] = time;
        low[s] = time;
        time += 1;
        if g.degree(s) == 0 {
            out.push(Block {
                vertices: vec![s],
                edges: Vec::new(),
            });
            continue;
        }
        // (vertex, parent, next neighbor position)
        let mut stack = vec![(s, UNSEEN, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (v, parent, i) = *top;
            if i < g.degree(v) {
                top.2 += 1;
                let w = g.neighbors(v)[i];
                if disc[w] == UNSEEN {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        close_block(&mut edge_stack, &mut out, u, v);
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    out
}

/// True iff `g` contains a cycle of even length.
///
/// A graph has no even cycle exactly when every block is a single edge or an
/// odd cycle: a 2-connected block that is not a cycle contains two vertices
/// joined by three internally disjoint paths, two of which close an even cycle.
pub fn has_even_cycle(g: &Graph) -> bool {
    blocks(g)
        .iter()
        .any(|b| b.edges.len() > 1 && !(b.is_cycle() && b.vertices.len() % 2 == 1))
}

/// The two color classes of a proper 2-coloring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

/// 2-coloring with the smallest vertex of every component in `x`, or `None`
/// when `g` has an odd cycle.
pub fn bipartition(g: &Graph) -> Option<Bipartition> {
    let n = g.order();
    let mut color: Vec<Option<bool>> = vec![None; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let c = color[v].unwrap();
            for &w in g.neighbors(v) {
                match color[w] {
                    None => {
                        color[w] = Some(!c);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == c => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let (x, y): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| color[v] == Some(false));
    Some(Bipartition { x, y })
}

pub fn is_forest(g: &Graph) -> bool {
    g.size() + g.components().len() == g.order()
}

/// `counts[r]` is the number of `r`-matchings, for `r = 0..=n/2`.
pub fn matching_counts(g: &Graph) -> Vec<BigUint> {
    // state: the vertices still free to be decided; the lowest one is decided next
    fn count(
        g: &Graph,
        free: &mut Vec<bool>,
        first: usize,
        memo: &mut HashMap<Vec<bool>, Vec<BigUint>>,
    ) -> Vec<BigUint> {
        let Some(v) = (first..free.len()).find(|&v| free[v]) else {
            return vec![BigUint::one()];
        };
        if let Some(hit) = memo.get(&free[v..]) {
            return hit.clone();
        }
        free[v] = false;
        let mut total = count(g, free, v + 1, memo);
        for &w in g.neighbors(v) {
            if w > v && free[w] {
                free[w] = false;
                let sub = count(g, free, v + 1, memo);
                free[w] = true;
                if total.len() < sub.len() + 1 {
                    total.resize(sub.len() + 1, BigUint::zero());
                }
                for (r, c) in sub.into_iter().enumerate() {
                    total[r + 1] += c;
                }
            }
        }
        free[v] = true;
        memo.insert(free[v..].to_vec(), total.clone());
        total
    }

    let mut free = vec![true; g.order()];
    let mut counts = count(g, &mut free, 0, &mut HashMap::new());
    counts.resize(g.order() / 2 + 1, BigUint::zero());
    counts
}

/// Number of `r`-matchings `p(G, r)`.
pub fn count_matchings(g: &Graph, r: usize) -> BigUint {
    matching_counts(g)
        .into_iter()
        .nth(r)
        .unwrap_or_else(BigUint::zero)
}
