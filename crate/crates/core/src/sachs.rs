//! Sachs subgraphs and the coefficient formulas built on them.
//!
//! A Sachs subgraph is a vertex-disjoint union of single edges and cycles.
//! For a graph on `n` vertices with `per(xI - A) = sum_k a_k x^(n-k)`:
//!
//! * adjacency matrix: `a_k = (-1)^k sum_{U in U_k} 2^c(U)`
//! * weighted undirected: the same with `prod(U)`, where single edges
//!   contribute `w(e)^2` and cycle edges `w(e)`
//! * skew adjacency of an orientation: `a_k = sum_{U in EU_k} (-1)^(m(U) + c-(U)) 2^c(U)`
//!   over Sachs subgraphs with even cycles only, `c-(U)` counting the oddly
//!   oriented ones; odd `k` give zero
//! * weighted orientation: the skew formula times `prod(U)`

use std::collections::BTreeMap;

use num::{BigInt, One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{enumerate_cycles, Cycle, Graph, OrientedGraph, WeightedOrientedGraph};
use crate::poly::Poly;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SachsSubgraph {
    pub single_edges: Vec<(usize, usize)>,
    pub cycles: Vec<Cycle>,
}

impl SachsSubgraph {
    /// Number of covered vertices, `2 m(U) + sum of cycle lengths`.
    pub fn order(&self) -> usize {
        2 * self.single_edges.len() + self.cycles.iter().map(Cycle::len).sum::<usize>()
    }

    /// `m(U)`.
    pub fn edge_count(&self) -> usize {
        self.single_edges.len()
    }

    /// `c(U)`.
    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CycleParity {
    Evenly,
    Oddly,
}

/// Parity of the arcs agreeing with the canonical traversal of an even cycle.
/// Both traversal directions give the same parity when the length is even.
pub fn cycle_parity(og: &OrientedGraph, c: &Cycle) -> Result<CycleParity> {
    if !c.is_even() {
        return Err(Error::OddCycle(c.len()));
    }
    if !c.lies_in(og.graph()) {
        return Err(Error::Graph(format!(
            "cycle {:?} is not in the graph",
            c.vertices()
        )));
    }
    let agreeing = c.steps().filter(|&(a, b)| og.has_arc(a, b)).count();
    Ok(if agreeing % 2 == 1 {
        CycleParity::Oddly
    } else {
        CycleParity::Evenly
    })
}

#[derive(Clone, Copy, Debug)]
enum Part {
    Edge(usize),
    Cycle(usize),
}

/// Branching enumerator: the lowest undecided vertex is either left
/// uncovered, matched along an edge to an undecided neighbor, or routed
/// through a cycle of which it is the smallest vertex.
struct Walker<'g> {
    g: &'g Graph,
    cycles: Vec<Cycle>,
    by_root: Vec<Vec<usize>>,
}

impl<'g> Walker<'g> {
    fn new(g: &'g Graph, even_only: bool) -> Self {
        let cycles: Vec<Cycle> = enumerate_cycles(g)
            .into_iter()
            .filter(|c| !even_only || c.is_even())
            .collect();
        let mut by_root = vec![Vec::new(); g.order()];
        for (i, c) in cycles.iter().enumerate() {
            by_root[c.vertices()[0]].push(i);
        }
        Self { g, cycles, by_root }
    }

    /// Calls `visit(parts, k)` once per Sachs subgraph; with `target` set,
    /// only subgraphs covering exactly `target` vertices are visited.
    fn walk(&self, target: Option<usize>, visit: &mut dyn FnMut(&[Part], usize)) {
        struct State {
            decided: Vec<bool>,
            covered: usize,
            undecided: usize,
            parts: Vec<Part>,
        }

        fn rec(
            w: &Walker<'_>,
            from: usize,
            target: Option<usize>,
            st: &mut State,
            visit: &mut dyn FnMut(&[Part], usize),
        ) {
            if let Some(t) = target {
                if st.covered > t || st.covered + st.undecided < t {
                    return;
                }
            }
            let Some(v) = (from..st.decided.len()).find(|&v| !st.decided[v]) else {
                visit(&st.parts, st.covered);
                return;
            };

            st.decided[v] = true;
            st.undecided -= 1;
            rec(w, v + 1, target, st, visit);

            for &u in w.g.neighbors(v) {
                if st.decided[u] {
                    continue;
                }
                st.decided[u] = true;
                st.undecided -= 1;
                st.covered += 2;
                st.parts
                    .push(Part::Edge(w.g.edge_index(v, u).expect("neighbor edge")));
                rec(w, v + 1, target, st, visit);
                st.parts.pop();
                st.covered -= 2;
                st.undecided += 1;
                st.decided[u] = false;
            }

            for &ci in &w.by_root[v] {
                let rest = &w.cycles[ci].vertices()[1..];
                if rest.iter().any(|&u| st.decided[u]) {
                    continue;
                }
                for &u in rest {
                    st.decided[u] = true;
                }
                st.undecided -= rest.len();
                st.covered += rest.len() + 1;
                st.parts.push(Part::Cycle(ci));
                rec(w, v + 1, target, st, visit);
                st.parts.pop();
                st.covered -= rest.len() + 1;
                st.undecided += rest.len();
                for &u in rest {
                    st.decided[u] = false;
                }
            }

            st.undecided += 1;
            st.decided[v] = false;
        }

        let n = self.g.order();
        let mut st = State {
            decided: vec![false; n],
            covered: 0,
            undecided: n,
            parts: Vec::new(),
        };
        rec(self, 0, target, &mut st, visit);
    }

    fn materialize(&self, parts: &[Part]) -> SachsSubgraph {
        let mut single_edges = Vec::new();
        let mut cycles = Vec::new();
        for p in parts {
            match *p {
                Part::Edge(e) => single_edges.push(self.g.edges()[e]),
                Part::Cycle(c) => cycles.push(self.cycles[c].clone()),
            }
        }
        single_edges.sort_unstable();
        cycles.sort();
        SachsSubgraph {
            single_edges,
            cycles,
        }
    }
}

/// Sachs subgraphs of `g` covering exactly `size` vertices, optionally
/// restricted to those whose cycles all have even length.
pub fn enumerate_sachs(g: &Graph, even_cycles_only: bool, size: usize) -> Vec<SachsSubgraph> {
    let walker = Walker::new(g, even_cycles_only);
    let mut out = Vec::new();
    walker.walk(Some(size), &mut |parts, _| {
        out.push(walker.materialize(parts))
    });
    out
}

fn pow2(c: usize) -> BigInt {
    BigInt::one() << c
}

/// Runs the walker once over all sizes and sums `term(parts)` into `a_k`.
fn assemble(walker: &Walker<'_>, mut term: impl FnMut(&[Part], usize) -> Option<Rational>) -> Poly {
    let n = walker.g.order();
    let mut coeffs = vec![Rational::zero(); n + 1];
    walker.walk(None, &mut |parts, k| {
        if let Some(t) = term(parts, k) {
            coeffs[k] += t;
        }
    });
    Poly::new(coeffs)
}

fn cycle_count(parts: &[Part]) -> usize {
    parts.iter().filter(|p| matches!(p, Part::Cycle(_))).count()
}

fn signed(value: BigInt, negative: bool) -> Rational {
    Rational::from_integer(if negative { -value } else { value })
}

/// `per(xI - A(G))` from Sachs subgraphs.
pub fn perm_poly_adjacency_sachs(g: &Graph) -> Poly {
    let walker = Walker::new(g, false);
    assemble(&walker, |parts, k| {
        Some(signed(pow2(cycle_count(parts)), k % 2 == 1))
    })
}

/// Cached parities for one orientation: `oddly[c]` for each walker cycle.
fn oddly_flags(walker: &Walker<'_>, og: &OrientedGraph) -> Vec<bool> {
    walker
        .cycles
        .iter()
        .map(|c| cycle_parity(og, c).expect("even cycle of the host graph") == CycleParity::Oddly)
        .collect()
}

/// `per(xI - A_s(G^sigma))` from Sachs subgraphs with even cycles only.
pub fn perm_poly_skew_sachs(og: &OrientedGraph) -> Poly {
    let walker = Walker::new(og.graph(), true);
    let oddly = oddly_flags(&walker, og);
    assemble(&walker, |parts, _| {
        let mut flips = 0;
        let mut c = 0;
        for p in parts {
            match *p {
                Part::Edge(_) => flips += 1,
                Part::Cycle(i) => {
                    c += 1;
                    flips += usize::from(oddly[i]);
                }
            }
        }
        Some(signed(pow2(c), flips % 2 == 1))
    })
}

/// `prod(U)`: single edges contribute `w^2`, cycle edges `w`.
fn weight_product(walker: &Walker<'_>, weights: &[Rational], parts: &[Part]) -> Rational {
    let mut prod = Rational::one();
    for p in parts {
        match *p {
            Part::Edge(e) => prod *= &weights[e] * &weights[e],
            Part::Cycle(i) => {
                for (a, b) in walker.cycles[i].steps() {
                    prod *= &weights[walker.g.edge_index(a, b).expect("cycle edge")];
                }
            }
        }
    }
    prod
}

/// `per(xI - A_s)` for a weighted orientation, with `A_s` its generalized
/// skew adjacency matrix.
pub fn perm_poly_weighted_skew_sachs(wog: &WeightedOrientedGraph) -> Poly {
    let walker = Walker::new(wog.graph(), true);
    let oddly = oddly_flags(&walker, wog.oriented());
    assemble(&walker, |parts, _| {
        let mut flips = 0;
        for p in parts {
            flips += match *p {
                Part::Edge(_) => 1,
                Part::Cycle(i) => usize::from(oddly[i]),
            };
        }
        let base = signed(pow2(cycle_count(parts)), flips % 2 == 1);
        Some(base * weight_product(&walker, wog.weights(), parts))
    })
}

/// `per(xI - A)` for a weighted undirected graph, `weights` in edge order.
pub fn perm_poly_weighted_undirected_sachs(g: &Graph, weights: &[Rational]) -> Result<Poly> {
    if weights.len() != g.size() {
        return Err(Error::Graph(format!(
            "{} weights for {} edges",
            weights.len(),
            g.size()
        )));
    }
    let walker = Walker::new(g, false);
    Ok(assemble(&walker, |parts, k| {
        let base = signed(pow2(cycle_count(parts)), k % 2 == 1);
        Some(base * weight_product(&walker, weights, parts))
    }))
}

/// The skew Sachs expansion of one graph, precomputed so that the permanental
/// polynomial of any orientation (given as an edge bitmask) is a cheap signed
/// sum over cycle-set classes.
///
/// Sachs subgraphs with the same `k` and the same set of even cycles differ
/// only in their single edges; their contributions are merged into one
/// signed weight `sum (-1)^m(U) * 2^c(U)`.
#[derive(Clone, Debug)]
pub struct SkewProfile {
    n: usize,
    /// `(edge mask, forward mask)` for each even cycle.
    cycles: Vec<(u64, u64)>,
    terms: Vec<ProfileTerm>,
    small: bool,
}

#[derive(Clone, Debug)]
struct ProfileTerm {
    k: usize,
    cycles: Vec<usize>,
    weight: BigInt,
    weight_small: i64,
}

impl SkewProfile {
    pub fn new(g: &Graph) -> Result<Self> {
        if g.size() > 64 {
            return Err(Error::TooManyEdges(g.size()));
        }
        let walker = Walker::new(g, true);
        let cycles = walker
            .cycles
            .iter()
            .map(|c| {
                let mut edges = 0u64;
                let mut forward = 0u64;
                for (a, b) in c.steps() {
                    let e = g.edge_index(a, b).expect("cycle edge");
                    edges |= 1 << e;
                    if a < b {
                        forward |= 1 << e;
                    }
                }
                (edges, forward)
            })
            .collect();

        let mut merged: BTreeMap<(usize, Vec<usize>), BigInt> = BTreeMap::new();
        walker.walk(None, &mut |parts, k| {
            let mut m = 0;
            let mut key = Vec::new();
            for p in parts {
                match *p {
                    Part::Edge(_) => m += 1,
                    Part::Cycle(i) => key.push(i),
                }
            }
            key.sort_unstable();
            let c = key.len();
            let contribution = if m % 2 == 1 { -pow2(c) } else { pow2(c) };
            *merged.entry((k, key)).or_insert_with(BigInt::zero) += contribution;
        });

        let terms: Vec<ProfileTerm> = merged
            .into_iter()
            .filter(|(_, w)| !w.is_zero())
            .map(|((k, cycles), weight)| ProfileTerm {
                k,
                cycles,
                weight_small: weight.to_i64().unwrap_or(0),
                weight,
            })
            .collect();
        // i64 accumulation is safe when the absolute weights cannot overflow
        let small = terms
            .iter()
            .try_fold(0i64, |acc, t| {
                t.weight
                    .to_i64()
                    .and_then(|w| acc.checked_add(w.checked_abs()?))
            })
            .is_some();
        Ok(Self {
            n: g.order(),
            cycles,
            terms,
            small,
        })
    }

    /// Coefficients `a_0..a_n` for the orientation with the given bitmask.
    pub fn coefficients(&self, mask: u64) -> Vec<BigInt> {
        let oddly = |ci: usize| {
            let (edges, forward) = self.cycles[ci];
            ((mask ^ forward) & edges).count_ones() % 2 == 1
        };
        let sign_flipped =
            |t: &ProfileTerm| t.cycles.iter().filter(|&&c| oddly(c)).count() % 2 == 1;
        if self.small {
            let mut acc = vec![0i64; self.n + 1];
            for t in &self.terms {
                if sign_flipped(t) {
                    acc[t.k] -= t.weight_small;
                } else {
                    acc[t.k] += t.weight_small;
                }
            }
            acc.into_iter().map(BigInt::from).collect()
        } else {
            let mut acc = vec![BigInt::zero(); self.n + 1];
            for t in &self.terms {
                if sign_flipped(t) {
                    acc[t.k] -= &t.weight;
                } else {
                    acc[t.k] += &t.weight;
                }
            }
            acc
        }
    }

    pub fn poly(&self, mask: u64) -> Poly {
        Poly::new(
            self.coefficients(mask)
                .into_iter()
                .map(Rational::from_integer)
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::orient;
    use crate::permanent::perm_poly_direct;
    use crate::rational::int;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p.into(), d.into())
    }

    /// Brute force over all edge subsets: a subset is a Sachs subgraph made of
    /// single edges when it is a matching; cycles are added from the cycle list.
    fn sachs_count_oracle(g: &Graph, size: usize, even_only: bool) -> usize {
        let cycles: Vec<Cycle> = enumerate_cycles(g)
            .into_iter()
            .filter(|c| !even_only || c.is_even())
            .collect();
        let m = g.size();
        let mut count = 0;
        for emask in 0u32..(1 << m) {
            let edges: Vec<(usize, usize)> = (0..m)
                .filter(|&e| emask >> e & 1 == 1)
                .map(|e| g.edges()[e])
                .collect();
            let mut used = vec![false; g.order()];
            let mut ok = true;
            for &(u, v) in &edges {
                if used[u] || used[v] {
                    ok = false;
                }
                used[u] = true;
                used[v] = true;
            }
            if !ok {
                continue;
            }
            for cmask in 0u32..(1 << cycles.len()) {
                let mut cover = used.clone();
                let mut fine = true;
                let mut k = 2 * edges.len();
                for (i, c) in cycles.iter().enumerate() {
                    if cmask >> i & 1 == 0 {
                        continue;
                    }
                    for &v in c.vertices() {
                        if cover[v] {
                            fine = false;
                        }
                        cover[v] = true;
                    }
                    k += c.len();
                }
                if fine && k == size {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn enumerate_examples() {
        let c4 = Graph::cycle(4);
        let all = enumerate_sachs(&c4, false, 4);
        assert_eq!(all.len(), 3);
        assert_eq!(all.iter().filter(|u| u.cycle_count() == 1).count(), 1);
        assert_eq!(all.iter().filter(|u| u.edge_count() == 2).count(), 2);
        assert_eq!(all.len(), sachs_count_oracle(&c4, 4, false));

        let c3 = Graph::cycle(3);
        assert_eq!(enumerate_sachs(&c3, true, 2).len(), 3);
        assert!(enumerate_sachs(&c3, true, 3).is_empty());
        assert_eq!(enumerate_sachs(&c3, false, 3).len(), 1);
        assert_eq!(enumerate_sachs(&c3, false, 0).len(), 1);
    }

    #[test]
    fn enumerate_matches_subset_oracle() {
        let graphs = [
            Graph::complete(4),
            Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 2)]).unwrap(),
        ];
        for g in &graphs {
            for even in [false, true] {
                for size in 0..=g.order() {
                    let got = enumerate_sachs(g, even, size);
                    assert!(got.iter().all(|u| u.order() == size));
                    assert_eq!(got.len(), sachs_count_oracle(g, size, even), "size {size}");
                }
            }
        }
    }

    #[test]
    fn parity_examples() {
        let c4 = Graph::cycle(4);
        let cyc = enumerate_cycles(&c4).remove(0);
        let cyclic = orient(&c4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(cycle_parity(&cyclic, &cyc).unwrap(), CycleParity::Evenly);
        let one_reversed = orient(&c4, &[(1, 0), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(
            cycle_parity(&one_reversed, &cyc).unwrap(),
            CycleParity::Oddly
        );
        let toward_y = orient(&c4, &[(0, 1), (2, 1), (2, 3), (0, 3)]).unwrap();
        assert_eq!(cycle_parity(&toward_y, &cyc).unwrap(), CycleParity::Evenly);

        let c3 = Graph::cycle(3);
        let tri = enumerate_cycles(&c3).remove(0);
        let og = OrientedGraph::from_mask(c3, 0).unwrap();
        assert_eq!(cycle_parity(&og, &tri).unwrap_err(), Error::OddCycle(3));
    }

    #[test]
    fn parity_is_independent_of_traversal_direction() {
        let c6 = Graph::cycle(6);
        let cyc = enumerate_cycles(&c6).remove(0);
        for mask in 0..64 {
            let og = OrientedGraph::from_mask(c6.clone(), mask).unwrap();
            let forward = cyc.steps().filter(|&(a, b)| og.has_arc(a, b)).count();
            let backward = cyc.steps().filter(|&(a, b)| og.has_arc(b, a)).count();
            assert_eq!(forward % 2, backward % 2);
        }
    }

    #[test]
    fn adjacency_examples() {
        assert_eq!(
            perm_poly_adjacency_sachs(&Graph::complete(2)),
            Poly::from_i64(&[1, 0, 1])
        );
        assert_eq!(
            perm_poly_adjacency_sachs(&Graph::cycle(3)),
            Poly::from_i64(&[1, 0, 3, -2])
        );
        assert_eq!(
            perm_poly_adjacency_sachs(&Graph::cycle(4)),
            Poly::from_i64(&[1, 0, 4, 0, 4])
        );
        assert_eq!(
            perm_poly_adjacency_sachs(&Graph::empty(0)),
            Poly::from_i64(&[1])
        );
    }

    #[test]
    fn skew_examples() {
        let c4 = Graph::cycle(4);
        let oddly = orient(&c4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(
            perm_poly_skew_sachs(&oddly),
            Poly::from_i64(&[1, 0, -4, 0, 0])
        );
        let evenly = orient(&c4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(
            perm_poly_skew_sachs(&evenly),
            Poly::from_i64(&[1, 0, -4, 0, 4])
        );
        for mask in 0..8 {
            let og = OrientedGraph::from_mask(Graph::cycle(3), mask).unwrap();
            assert_eq!(perm_poly_skew_sachs(&og), Poly::from_i64(&[1, 0, -3, 0]));
        }
    }

    #[test]
    fn weighted_skew_examples() {
        let k2 = orient(&Graph::complete(2), &[(0, 1)]).unwrap();
        let w = WeightedOrientedGraph::new(k2, vec![q(3, 2)]).unwrap();
        assert_eq!(
            perm_poly_weighted_skew_sachs(&w),
            Poly::new(vec![int(1), int(0), q(-9, 4)])
        );

        let og = OrientedGraph::from_mask(Graph::complete(4), 0b101101).unwrap();
        assert_eq!(
            perm_poly_weighted_skew_sachs(&WeightedOrientedGraph::unit(og.clone())),
            perm_poly_skew_sachs(&og)
        );

        let c4 = orient(&Graph::cycle(4), &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let w = WeightedOrientedGraph::new(c4, vec![int(1), int(2), int(3), int(4)]).unwrap();
        let direct = perm_poly_direct(w.generalized_skew_adjacency().as_matrix());
        assert_eq!(perm_poly_weighted_skew_sachs(&w), direct);
    }

    #[test]
    fn weighted_undirected_examples() {
        let w = q(-5, 3);
        let p = perm_poly_weighted_undirected_sachs(&Graph::complete(2), std::slice::from_ref(&w))
            .unwrap();
        assert_eq!(p, Poly::new(vec![int(1), int(0), &w * &w]));

        let k4 = Graph::complete(4);
        let ones = vec![int(1); k4.size()];
        assert_eq!(
            perm_poly_weighted_undirected_sachs(&k4, &ones).unwrap(),
            perm_poly_adjacency_sachs(&k4)
        );

        let (a, b, c) = (int(2), q(1, 3), int(-7));
        let p = perm_poly_weighted_undirected_sachs(
            &Graph::cycle(3),
            &[a.clone(), b.clone(), c.clone()],
        )
        .unwrap();
        assert_eq!(*p.coeff(3), -(int(2) * &a * &b * &c));
        assert_eq!(*p.coeff(2), &a * &a + &b * &b + &c * &c);
        assert!(perm_poly_weighted_undirected_sachs(&Graph::cycle(3), &[a]).is_err());
    }

    #[test]
    fn profile_matches_direct_formula() {
        let graphs = [
            Graph::complete(5),
            Graph::cycle(6),
            Graph::new(
                6,
                [
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 0),
                    (1, 4),
                    (4, 5),
                    (5, 2),
                    (0, 4),
                ],
            )
            .unwrap(),
        ];
        for g in graphs {
            let profile = SkewProfile::new(&g).unwrap();
            for mask in 0..(1u64 << g.size()).min(300) {
                let og = OrientedGraph::from_mask(g.clone(), mask).unwrap();
                assert_eq!(profile.poly(mask), perm_poly_skew_sachs(&og), "mask {mask}");
            }
        }
    }
}
