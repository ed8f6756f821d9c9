//! Orientation enumeration, the toward-Y construction, and exhaustive or
//! sampled orientation sweeps that check the orientation properties on one
//! graph at a time.
//!
//! Orientations are identified by bitmasks: bit `e` set means edge
//! `(u, v)`, `u < v`, is directed `v -> u`. Every sweep is deterministic:
//! masks are scanned in increasing order in fixed batches, and the smallest
//! failing mask of the first failing batch is reported, whatever the thread
//! count.

use std::collections::HashMap;
use std::sync::Mutex;

use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    bipartition, has_even_cycle, is_forest, write_graph6, Bipartition, Graph, OrientedGraph,
};
use crate::poly::{char_poly, check_i_relation, matching_polynomial, multiset_equal, roots, Poly};
use crate::rational::Rational;
use crate::sachs::{perm_poly_adjacency_sachs, SkewProfile};

pub const DEFAULT_BUDGET: u64 = 1 << 20;
pub const DEFAULT_SEED: u64 = 0x5eed_2024;
/// Root-matching tolerance for the forest check.
pub const DEFAULT_ROOT_TOLERANCE: f64 = 1e-8;

const CHUNK: u64 = 1 << 12;
const CHUNKS_PER_BATCH: u64 = 64;

/// All `2^m` orientations in increasing mask order.
pub fn all_orientations(g: &Graph) -> Result<impl Iterator<Item = OrientedGraph> + '_> {
    let m = g.size();
    if m >= 64 {
        return Err(Error::TooManyEdges(m));
    }
    Ok((0..1u64 << m).map(move |mask| {
        OrientedGraph::from_mask(g.clone(), mask).expect("mask within edge count")
    }))
}

pub fn reverse_edge(og: &OrientedGraph, e: usize) -> Result<OrientedGraph> {
    og.reverse_edge(e)
}

/// Directs every edge from `bip.x` to `bip.y`.
pub fn toward_y_orientation(g: &Graph, bip: &Bipartition) -> Result<OrientedGraph> {
    let n = g.order();
    let mut in_x = vec![None; n];
    for (part, side) in [(&bip.x, true), (&bip.y, false)] {
        for &v in part {
            if v >= n {
                return Err(Error::NotBipartition(format!("vertex {v} out of range")));
            }
            if in_x[v].replace(side).is_some() {
                return Err(Error::NotBipartition(format!("vertex {v} listed twice")));
            }
        }
    }
    if let Some(v) = in_x.iter().position(Option::is_none) {
        return Err(Error::NotBipartition(format!("vertex {v} not listed")));
    }
    let direction = g
        .edges()
        .iter()
        .map(|&(u, v)| match (in_x[u], in_x[v]) {
            (Some(true), Some(false)) => Ok(false),
            (Some(false), Some(true)) => Ok(true),
            _ => Err(Error::NotBipartition(format!(
                "edge ({u}, {v}) inside one part"
            ))),
        })
        .collect::<Result<Vec<bool>>>()?;
    OrientedGraph::new(g.clone(), direction)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    /// Every orientation has the same permanental polynomial.
    SamePoly,
    /// Every orientation has the matching polynomial as its permanental polynomial.
    MatchingEq,
    /// Some orientation satisfies the i-relation with the undirected graph.
    BipartiteI,
    /// Every orientation satisfies the i-relation, and its per-spectrum equals
    /// the adjacency spectrum.
    Forest,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::SamePoly => "same-poly",
            Property::MatchingEq => "matching-eq",
            Property::BipartiteI => "bipartite-i",
            Property::Forest => "forest",
        }
    }

    /// Whether the property is predicted to hold on `g` from its structure.
    pub fn predicted(self, g: &Graph) -> bool {
        match self {
            Property::SamePoly | Property::MatchingEq => !has_even_cycle(g),
            Property::BipartiteI => bipartition(g).is_some(),
            Property::Forest => is_forest(g),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Refuted,
    SampledHolds,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Refuted => "refuted",
            Verdict::SampledHolds => "sampled-holds",
        }
    }
}

/// Two orientations (or one, compared against a polynomial of the
/// undirected graph when `bits_b` is `None`) and their differing polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub bits_a: u64,
    pub bits_b: Option<u64>,
    pub poly_a: Poly,
    pub poly_b: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrientationReport {
    pub graph6: String,
    pub property: Property,
    pub verdict: Verdict,
    pub examined: u64,
    pub witness: Option<Witness>,
    pub seed: Option<u64>,
}

impl OrientationReport {
    pub fn is_refuted(&self) -> bool {
        self.verdict == Verdict::Refuted
    }

    /// Whether the verdict agrees with the structural prediction for `g`.
    pub fn consistent_with_prediction(&self, g: &Graph) -> bool {
        self.property.predicted(g) != self.is_refuted()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepOptions {
    /// Largest number of orientations swept exhaustively; above it a sample
    /// of this size is drawn.
    pub budget: u64,
    pub seed: u64,
    /// Scan only masks below `2^(m-1)`. Reversing every arc negates the skew
    /// adjacency matrix and leaves the permanental polynomial unchanged, so
    /// the result is the same either way.
    pub reversal_symmetry: bool,
    /// Distance allowed between matched roots in the forest check.
    pub root_tolerance: f64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            seed: DEFAULT_SEED,
            reversal_symmetry: true,
            root_tolerance: DEFAULT_ROOT_TOLERANCE,
        }
    }
}

impl SweepOptions {
    pub fn with_budget(budget: u64) -> Self {
        Self {
            budget,
            ..Self::default()
        }
    }
}

enum Plan {
    Exhaustive { scan: u64, total: u64 },
    Sampled { masks: Vec<u64>, seed: u64 },
}

struct Outcome {
    hit: Option<u64>,
    examined: u64,
    seed: Option<u64>,
}

impl Outcome {
    fn sampled(&self) -> bool {
        self.seed.is_some()
    }
}

fn plan(m: usize, opts: &SweepOptions) -> Plan {
    let budget = opts.budget.max(1);
    if m < 64 && 1u64 << m <= budget {
        let total = 1u64 << m;
        let scan = if opts.reversal_symmetry && m > 0 {
            total / 2
        } else {
            total
        };
        return Plan::Exhaustive { scan, total };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let masks = (0..budget)
        .map(|_| {
            if m >= 64 {
                rng.gen::<u64>()
            } else {
                rng.gen_range(0..1u64 << m)
            }
        })
        .collect();
    Plan::Sampled {
        masks,
        seed: opts.seed,
    }
}

/// Smallest `i < len` with `hit(i)`. Batches run in order; the chunks of a
/// batch run in parallel and the batch minimum is taken afterwards.
fn first_hit(len: u64, hit: impl Fn(u64) -> bool + Sync) -> Option<u64> {
    let batch = CHUNK * CHUNKS_PER_BATCH;
    let mut start = 0;
    while start < len {
        let end = (start + batch).min(len);
        let found = (0..(end - start).div_ceil(CHUNK))
            .into_par_iter()
            .filter_map(|c| {
                let lo = start + c * CHUNK;
                (lo..(lo + CHUNK).min(end)).find(|&i| hit(i))
            })
            .min();
        if found.is_some() {
            return found;
        }
        start = end;
    }
    None
}

fn run(plan: Plan, hit: impl Fn(u64) -> bool + Sync) -> Outcome {
    match plan {
        Plan::Exhaustive { scan, total } => {
            let found = first_hit(scan, &hit);
            Outcome {
                hit: found,
                examined: found.map_or(total, |b| b + 1),
                seed: None,
            }
        }
        Plan::Sampled { masks, seed } => {
            let found = first_hit(masks.len() as u64, |i| hit(masks[i as usize]));
            Outcome {
                hit: found.map(|i| masks[i as usize]),
                examined: found.map_or(masks.len() as u64, |i| i + 1),
                seed: Some(seed),
            }
        }
    }
}

fn integer_coeffs(p: &Poly) -> Vec<BigInt> {
    p.coeffs()
        .iter()
        .map(|c| {
            assert!(
                c.is_integer(),
                "graph polynomial with a fractional coefficient"
            );
            c.to_integer()
        })
        .collect()
}

fn poly_of(coeffs: Vec<BigInt>) -> Poly {
    Poly::new(coeffs.into_iter().map(Rational::from_integer).collect())
}

struct Sweep {
    graph6: String,
    profile: SkewProfile,
}

impl Sweep {
    fn new(g: &Graph) -> Result<Self> {
        Ok(Self {
            graph6: write_graph6(g),
            profile: SkewProfile::new(g)?,
        })
    }

    fn report(
        &self,
        property: Property,
        outcome: &Outcome,
        witness: impl FnOnce(u64) -> Witness,
    ) -> OrientationReport {
        let (verdict, witness) = match outcome.hit {
            Some(b) => (Verdict::Refuted, Some(witness(b))),
            None if outcome.sampled() => (Verdict::SampledHolds, None),
            None => (Verdict::Holds, None),
        };
        OrientationReport {
            graph6: self.graph6.clone(),
            property,
            verdict,
            examined: outcome.examined,
            witness,
            seed: outcome.seed,
        }
    }
}

/// Checks that every orientation shares one permanental polynomial, comparing
/// against the orientation with mask 0. A refutation witness is the
/// lexicographically smallest differing pair `(0, b)`.
pub fn verify_all_orientations_same(g: &Graph, opts: &SweepOptions) -> Result<OrientationReport> {
    let sweep = Sweep::new(g)?;
    let base = sweep.profile.coefficients(0);
    let outcome = run(plan(g.size(), opts), |b| {
        sweep.profile.coefficients(b) != base
    });
    Ok(sweep.report(Property::SamePoly, &outcome, |b| Witness {
        bits_a: 0,
        bits_b: Some(b),
        poly_a: poly_of(base.clone()),
        poly_b: sweep.profile.poly(b),
    }))
}

/// Checks `pi(G^sigma) = mu(G)` for every examined orientation.
pub fn verify_matching_equality(g: &Graph, opts: &SweepOptions) -> Result<OrientationReport> {
    let sweep = Sweep::new(g)?;
    let mu = matching_polynomial(g);
    let target = integer_coeffs(&mu);
    let outcome = run(plan(g.size(), opts), |b| {
        sweep.profile.coefficients(b) != target
    });
    Ok(sweep.report(Property::MatchingEq, &outcome, |b| Witness {
        bits_a: b,
        bits_b: None,
        poly_a: sweep.profile.poly(b),
        poly_b: mu.clone(),
    }))
}

/// Looks for an orientation satisfying the i-relation. For a bipartite graph
/// the toward-Y orientation is tried first; otherwise orientations are swept
/// until one satisfies it. A refutation carries mask 0 against the
/// undirected polynomial. A sampled search that finds nothing is also
/// reported as refuted, with the seed recorded.
pub fn verify_bipartite_i_relation(g: &Graph, opts: &SweepOptions) -> Result<OrientationReport> {
    let sweep = Sweep::new(g)?;
    let pg = perm_poly_adjacency_sachs(g);
    let satisfies = |b: u64| check_i_relation(&pg, &sweep.profile.poly(b)).expect("same degree");

    if let Some(bip) = bipartition(g) {
        let toward_y = toward_y_orientation(g, &bip)?;
        let mask = toward_y.mask().expect("at most 64 edges");
        if satisfies(mask) {
            return Ok(OrientationReport {
                graph6: sweep.graph6,
                property: Property::BipartiteI,
                verdict: Verdict::Holds,
                examined: 1,
                witness: None,
                seed: None,
            });
        }
    }

    let outcome = run(plan(g.size(), opts), satisfies);
    let refutation = || Witness {
        bits_a: 0,
        bits_b: None,
        poly_a: sweep.profile.poly(0),
        poly_b: pg.clone(),
    };
    let (verdict, witness) = match outcome.hit {
        Some(_) => (Verdict::Holds, None),
        None => (Verdict::Refuted, Some(refutation())),
    };
    Ok(OrientationReport {
        graph6: sweep.graph6,
        property: Property::BipartiteI,
        verdict,
        examined: outcome.examined,
        witness,
        seed: outcome.seed,
    })
}

/// Checks every examined orientation for the i-relation and for
/// `roots(pi(G^sigma)) = roots(det(xI - A(G)))` within `opts.root_tolerance`.
/// A root-finder failure counts as a mismatch.
pub fn verify_forest_relation(g: &Graph, opts: &SweepOptions) -> Result<OrientationReport> {
    let sweep = Sweep::new(g)?;
    let pg = perm_poly_adjacency_sachs(g);
    let phi = char_poly(&g.adjacency_matrix());
    let tol = opts.root_tolerance;
    let spectrum = roots(&phi, crate::poly::DEFAULT_TOLERANCE);

    let root_cache: Mutex<HashMap<Vec<BigInt>, bool>> = Mutex::new(HashMap::new());
    let roots_match = |coeffs: &Vec<BigInt>, p: &Poly| {
        if let Some(&known) = root_cache.lock().unwrap().get(coeffs) {
            return known;
        }
        let ok = match (&spectrum, roots(p, crate::poly::DEFAULT_TOLERANCE)) {
            (Ok(s), Ok(r)) => multiset_equal(&r, s, tol).unwrap_or(false),
            _ => false,
        };
        root_cache.lock().unwrap().insert(coeffs.clone(), ok);
        ok
    };
    let i_relation = |p: &Poly| check_i_relation(&pg, p).expect("same degree");

    let outcome = run(plan(g.size(), opts), |b| {
        let coeffs = sweep.profile.coefficients(b);
        let p = poly_of(coeffs.clone());
        !i_relation(&p) || !roots_match(&coeffs, &p)
    });
    Ok(sweep.report(Property::Forest, &outcome, |b| {
        let poly_a = sweep.profile.poly(b);
        let poly_b = if i_relation(&poly_a) {
            phi.clone()
        } else {
            pg.clone()
        };
        Witness {
            bits_a: b,
            bits_b: None,
            poly_a,
            poly_b,
        }
    }))
}

pub fn verify(property: Property, g: &Graph, opts: &SweepOptions) -> Result<OrientationReport> {
    match property {
        Property::SamePoly => verify_all_orientations_same(g, opts),
        Property::MatchingEq => verify_matching_equality(g, opts),
        Property::BipartiteI => verify_bipartite_i_relation(g, opts),
        Property::Forest => verify_forest_relation(g, opts),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_cycles, orient};
    use crate::sachs::{cycle_parity, perm_poly_skew_sachs, CycleParity};

    fn opts() -> SweepOptions {
        SweepOptions::default()
    }

    fn bowtie() -> Graph {
        Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap()
    }

    fn star3() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(all_orientations(&Graph::complete(2)).unwrap().count(), 2);
        assert_eq!(all_orientations(&Graph::cycle(3)).unwrap().count(), 8);
        let empty: Vec<_> = all_orientations(&Graph::empty(3)).unwrap().collect();
        assert_eq!(empty.len(), 1);
        let masks: Vec<u64> = all_orientations(&Graph::cycle(3))
            .unwrap()
            .map(|og| og.mask().unwrap())
            .collect();
        assert_eq!(masks, (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn reversal() {
        let k2 = Graph::complete(2);
        let a = OrientedGraph::from_mask(k2.clone(), 0).unwrap();
        let b = reverse_edge(&a, 0).unwrap();
        assert_eq!(b.mask(), Some(1));
        assert_eq!(reverse_edge(&b, 0).unwrap(), a);
        assert!(reverse_edge(&a, 1).is_err());

        let c4 = Graph::cycle(4);
        let cyc = enumerate_cycles(&c4).remove(0);
        let evenly = orient(&c4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(cycle_parity(&evenly, &cyc).unwrap(), CycleParity::Evenly);
        let flipped = reverse_edge(&evenly, 2).unwrap();
        assert_eq!(cycle_parity(&flipped, &cyc).unwrap(), CycleParity::Oddly);
    }

    #[test]
    fn toward_y_examples() {
        let c4 = Graph::cycle(4);
        let bip = Bipartition {
            x: vec![0, 2],
            y: vec![1, 3],
        };
        let og = toward_y_orientation(&c4, &bip).unwrap();
        assert_eq!(og, orient(&c4, &[(0, 1), (2, 1), (2, 3), (0, 3)]).unwrap());

        let k2 = toward_y_orientation(
            &Graph::complete(2),
            &Bipartition {
                x: vec![0],
                y: vec![1],
            },
        )
        .unwrap();
        assert_eq!(k2.arcs().collect::<Vec<_>>(), vec![(0, 1)]);

        let p3 = Graph::path(3);
        let og = toward_y_orientation(
            &p3,
            &Bipartition {
                x: vec![0, 2],
                y: vec![1],
            },
        )
        .unwrap();
        assert_eq!(og, orient(&p3, &[(0, 1), (2, 1)]).unwrap());

        let bad = Bipartition {
            x: vec![0, 1],
            y: vec![2, 3],
        };
        assert!(matches!(
            toward_y_orientation(&c4, &bad),
            Err(Error::NotBipartition(_))
        ));
        let missing = Bipartition {
            x: vec![0],
            y: vec![1, 3],
        };
        assert!(toward_y_orientation(&c4, &missing).is_err());
        let tri = Bipartition {
            x: vec![0],
            y: vec![1, 2],
        };
        assert!(toward_y_orientation(&Graph::cycle(3), &tri).is_err());
    }

    #[test]
    fn same_poly_examples() {
        let r = verify_all_orientations_same(&Graph::cycle(3), &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.examined, 8);
        assert!(r.witness.is_none() && r.seed.is_none());

        let r = verify_all_orientations_same(&Graph::cycle(4), &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::Refuted);
        let w = r.witness.unwrap();
        assert_eq!(w.bits_a, 0);
        let b = w.bits_b.unwrap();
        assert_eq!(r.examined, b + 1);
        let polys = [w.poly_a, w.poly_b];
        assert!(polys.contains(&Poly::from_i64(&[1, 0, -4, 0, 0])));
        assert!(polys.contains(&Poly::from_i64(&[1, 0, -4, 0, 4])));
        // replaying the witness masks reproduces the polynomials
        let c4 = Graph::cycle(4);
        assert_eq!(
            perm_poly_skew_sachs(&OrientedGraph::from_mask(c4.clone(), 0).unwrap()),
            polys[0]
        );
        assert_eq!(
            perm_poly_skew_sachs(&OrientedGraph::from_mask(c4, b).unwrap()),
            polys[1]
        );

        let tree = Graph::new(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(
            verify_all_orientations_same(&tree, &opts())
                .unwrap()
                .verdict,
            Verdict::Holds
        );
    }

    #[test]
    fn reversal_symmetry_does_not_change_reports() {
        let graphs = [
            Graph::cycle(4),
            Graph::complete(5),
            bowtie(),
            Graph::cycle(6),
            star3(),
        ];
        for g in &graphs {
            for p in [
                Property::SamePoly,
                Property::MatchingEq,
                Property::BipartiteI,
                Property::Forest,
            ] {
                let halved = verify(p, g, &opts()).unwrap();
                let full = verify(
                    p,
                    g,
                    &SweepOptions {
                        reversal_symmetry: false,
                        ..opts()
                    },
                )
                .unwrap();
                assert_eq!(halved, full, "{p:?}");
            }
        }
    }

    #[test]
    fn matching_examples() {
        let r = verify_matching_equality(&Graph::cycle(3), &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        let r = verify_matching_equality(&Graph::cycle(4), &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::Refuted);
        let w = r.witness.unwrap();
        assert_eq!(w.bits_b, None);
        assert_eq!(w.poly_b, Poly::from_i64(&[1, 0, -4, 0, 2]));
        // mask 0 already fails: it orients the 4-cycle oddly
        assert_eq!((w.bits_a, r.examined), (0, 1));
        assert_eq!(w.poly_a, Poly::from_i64(&[1, 0, -4, 0, 0]));
        let evenly = orient(&Graph::cycle(4), &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_ne!(perm_poly_skew_sachs(&evenly), w.poly_b);
        let r = verify_matching_equality(&bowtie(), &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.examined, 64);
    }

    #[test]
    fn bipartite_examples() {
        for g in [Graph::cycle(4), Graph::path(3), Graph::cycle(6)] {
            let r = verify_bipartite_i_relation(&g, &opts()).unwrap();
            assert_eq!(r.verdict, Verdict::Holds);
            assert_eq!(r.examined, 1);
        }
        let r = verify_bipartite_i_relation(&Graph::cycle(3), &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::Refuted);
        assert_eq!(r.examined, 8);
        assert_eq!(
            r.witness.as_ref().unwrap().poly_b,
            Poly::from_i64(&[1, 0, 3, -2])
        );
        assert!(r.consistent_with_prediction(&Graph::cycle(3)));
    }

    #[test]
    fn forest_examples() {
        let r = verify_forest_relation(&Graph::path(3), &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        let r = verify_forest_relation(&star3(), &opts()).unwrap();
        assert_eq!((r.verdict, r.examined), (Verdict::Holds, 8));
        let r = verify_forest_relation(&Graph::cycle(4), &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::Refuted);
        let w = r.witness.unwrap();
        assert_eq!(w.poly_a, Poly::from_i64(&[1, 0, -4, 0, 0]));
        assert_eq!(w.poly_b, Poly::from_i64(&[1, 0, 4, 0, 4]));
    }

    #[test]
    fn sampling_is_seeded() {
        let g = Graph::complete(6);
        let small = SweepOptions::with_budget(64);
        let a = verify_all_orientations_same(&g, &small).unwrap();
        let b = verify_all_orientations_same(&g, &small).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.seed, Some(DEFAULT_SEED));
        assert_eq!(a.verdict, Verdict::Refuted);

        let tree = Graph::path(12);
        let r = verify_all_orientations_same(&tree, &SweepOptions::with_budget(100)).unwrap();
        assert_eq!((r.verdict, r.examined), (Verdict::SampledHolds, 100));
    }

    #[test]
    fn json_schema() {
        let r = verify_all_orientations_same(&Graph::cycle(4), &opts()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(
            keys,
            ["examined", "graph6", "property", "seed", "verdict", "witness"]
        );
        assert_eq!(v["property"], "same-poly");
        assert_eq!(v["verdict"], "refuted");
        assert_eq!(
            v["witness"]["poly_a"],
            serde_json::json!(["1", "0", "-4", "0", "0"])
        );
        assert!(v["seed"].is_null());
    }
}
