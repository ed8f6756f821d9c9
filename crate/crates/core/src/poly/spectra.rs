//! Coefficient-level spectrum relations and numeric multiset comparison.

use num::complex::Complex64;
use num::Zero;

use super::{Poly, RootMultiset};
use crate::error::{Error, Result};

/// True iff every odd-indexed coefficient `a_k` is exactly zero. For the
/// permanental polynomial of a graph this holds iff the graph is bipartite.
pub fn bipartite_by_odd_coeffs(p: &Poly) -> bool {
    p.coeffs().iter().skip(1).step_by(2).all(Zero::is_zero)
}

/// Exact coefficient test for `S_p(oriented) = i * S_p(graph)`:
/// odd `a_k` vanish in both, `a_k` agree for `k = 0 mod 4` and are opposite
/// for `k = 2 mod 4`.
pub fn check_i_relation(pg: &Poly, pgs: &Poly) -> Result<bool> {
    if pg.degree() != pgs.degree() {
        return Err(Error::DegreeMismatch(pg.degree(), pgs.degree()));
    }
    Ok(pg
        .coeffs()
        .iter()
        .zip(pgs.coeffs())
        .enumerate()
        .all(|(k, (a, b))| match k % 4 {
            0 => a == b,
            2 => *a == -b,
            _ => a.is_zero() && b.is_zero(),
        }))
}

/// Multiplies every root by `i`.
pub fn scale_spectrum_by_i(a: &RootMultiset) -> RootMultiset {
    let i = Complex64::new(0.0, 1.0);
    RootMultiset::new(a.as_slice().iter().map(|z| z * i).collect())
}

/// True iff the two multisets can be perfectly matched with every pair within
/// distance `tol`. Decided exactly on the threshold graph by augmenting
/// paths, so the answer is symmetric in its arguments.
pub fn multiset_equal(a: &RootMultiset, b: &RootMultiset, tol: f64) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch(a.len(), b.len()));
    }
    let (xs, ys) = (a.as_slice(), b.as_slice());
    let n = xs.len();
    let adj: Vec<Vec<usize>> = xs
        .iter()
        .map(|x| (0..n).filter(|&j| (x - ys[j]).norm() <= tol).collect())
        .collect();

    fn augment(
        u: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for &v in &adj[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if owner[v].is_none_or(|w| augment(w, adj, seen, owner)) {
                owner[v] = Some(u);
                return true;
            }
        }
        false
    }

    let mut owner = vec![None; n];
    for u in 0..n {
        let mut seen = vec![false; n];
        if !augment(u, &adj, &mut seen, &mut owner) {
            return Ok(false);
        }
    }
    Ok(true)
}
