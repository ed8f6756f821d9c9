use num::{Signed, Zero};

use super::Graph;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, SkewMatrix};
use crate::rational::{int, Rational};

/// A simple graph with one direction per edge.
///
/// `direction[e] == false` means the edge `(u, v)` (with `u < v`) is the arc
/// `u -> v`; `true` means `v -> u`. Bit `e` of an orientation mask carries the
/// same information.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrientedGraph {
    graph: Graph,
    direction: Vec<bool>,
}

impl OrientedGraph {
    pub fn new(graph: Graph, direction: Vec<bool>) -> Result<Self> {
        if direction.len() != graph.size() {
            return Err(Error::Orientation(format!(
                "{} direction bits for {} edges",
                direction.len(),
                graph.size()
            )));
        }
        Ok(Self { graph, direction })
    }

    /// Orientation whose bit `e` is bit `e` of `mask`.
    pub fn from_mask(graph: Graph, mask: u64) -> Result<Self> {
        let m = graph.size();
        if m > 64 {
            return Err(Error::TooManyEdges(m));
        }
        if m < 64 && mask >> m != 0 {
            return Err(Error::Orientation(format!(
                "mask {mask:#x} has bits beyond the {m} edges"
            )));
        }
        let direction = (0..m).map(|e| mask >> e & 1 == 1).collect();
        Ok(Self { graph, direction })
    }

    /// Orientation mask; `None` when the graph has more than 64 edges.
    pub fn mask(&self) -> Option<u64> {
        if self.direction.len() > 64 {
            return None;
        }
        Some(
            self.direction
                .iter()
                .enumerate()
                .fold(0u64, |acc, (e, &d)| acc | (u64::from(d) << e)),
        )
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn direction(&self) -> &[bool] {
        &self.direction
    }

    /// `(tail, head)` of edge `e`.
    pub fn arc(&self, e: usize) -> (usize, usize) {
        let (u, v) = self.graph.edges()[e];
        if self.direction[e] {
            (v, u)
        } else {
            (u, v)
        }
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.direction.len()).map(|e| self.arc(e))
    }

    /// True if `tail -> head` is an arc.
    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        self.graph
            .edge_index(tail, head)
            .is_some_and(|e| self.arc(e) == (tail, head))
    }

    pub fn reverse_edge(&self, e: usize) -> Result<Self> {
        if e >= self.direction.len() {
            return Err(Error::EdgeIndex {
                index: e,
                edges: self.direction.len(),
            });
        }
        let mut out = self.clone();
        out.direction[e] = !out.direction[e];
        Ok(out)
    }

    pub fn reverse_all(&self) -> Self {
        Self {
            graph: self.graph.clone(),
            direction: self.direction.iter().map(|d| !d).collect(),
        }
    }

    /// Skew adjacency matrix: `+1` at `(i, j)` for an arc `i -> j`, `-1` at
    /// `(j, i)`, zero elsewhere.
    pub fn skew_adjacency(&self) -> SkewMatrix {
        let mut m = Matrix::zeros(self.graph.order());
        for (tail, head) in self.arcs() {
            m.set(tail, head, int(1));
            m.set(head, tail, int(-1));
        }
        SkewMatrix::new(m).expect("constructed skew-symmetric")
    }
}

/// Builds an orientation from explicit arcs: exactly one ordered version of
/// every edge of `g`, in any order.
pub fn orient(g: &Graph, arcs: &[(usize, usize)]) -> Result<OrientedGraph> {
    let mut direction: Vec<Option<bool>> = vec![None; g.size()];
    for &(tail, head) in arcs {
        let e = g.edge_index(tail, head).ok_or_else(|| {
            Error::Orientation(format!("arc {tail}->{head} is not an edge of the graph"))
        })?;
        if direction[e].is_some() {
            return Err(Error::Orientation(format!(
                "edge {{{}, {}}} is oriented more than once",
                tail.min(head),
                tail.max(head)
            )));
        }
        direction[e] = Some(tail > head);
    }
    let direction = direction
        .into_iter()
        .enumerate()
        .map(|(e, d)| {
            d.ok_or_else(|| {
                let (u, v) = g.edges()[e];
                Error::Orientation(format!("edge {{{u}, {v}}} has no arc"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    OrientedGraph::new(g.clone(), direction)
}

/// An orientation with a nonzero exact weight on every arc (in edge order).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedOrientedGraph {
    oriented: OrientedGraph,
    weights: Vec<Rational>,
}

impl WeightedOrientedGraph {
    pub fn new(oriented: OrientedGraph, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != oriented.graph().size() {
            return Err(Error::Orientation(format!(
                "{} weights for {} arcs",
                weights.len(),
                oriented.graph().size()
            )));
        }
        if let Some(e) = weights.iter().position(Zero::is_zero) {
            let (tail, head) = oriented.arc(e);
            return Err(Error::Orientation(format!(
                "arc {tail}->{head} has zero weight"
            )));
        }
        Ok(Self { oriented, weights })
    }

    /// Every arc weighted 1.
    pub fn unit(oriented: OrientedGraph) -> Self {
        let m = oriented.graph().size();
        Self {
            oriented,
            weights: vec![int(1); m],
        }
    }

    pub fn oriented(&self) -> &OrientedGraph {
        &self.oriented
    }

    pub fn graph(&self) -> &Graph {
        self.oriented.graph()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    /// Generalized skew adjacency matrix: `w` at `(i, j)` for an arc `i -> j`
    /// of weight `w`, `-w` at `(j, i)`.
    pub fn generalized_skew_adjacency(&self) -> SkewMatrix {
        let mut m = Matrix::zeros(self.graph().order());
        for (e, (tail, head)) in self.oriented.arcs().enumerate() {
            m.set(tail, head, self.weights[e].clone());
            m.set(head, tail, -self.weights[e].clone());
        }
        SkewMatrix::new(m).expect("constructed skew-symmetric")
    }

    /// The weighted oriented graph associated with a skew-symmetric matrix:
    /// an arc `i -> j` of weight `a[i][j]` for every positive entry.
    pub fn from_skew_matrix(a: &SkewMatrix) -> Self {
        let arcs: Vec<(usize, usize)> = a.positive_entries().collect();
        let g = Graph::new(a.order(), arcs.iter().copied())
            .expect("positive entries of a skew matrix form a simple graph");
        let og = orient(&g, &arcs).expect("one arc per edge");
        let weights = (0..g.size())
            .map(|e| {
                let (tail, head) = og.arc(e);
                let w = a.get(tail, head).clone();
                debug_assert!(w.is_positive());
                w
            })
            .collect();
        Self {
            oriented: og,
            weights,
        }
    }
}
