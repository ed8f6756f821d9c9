use num::{One, Zero};

use super::Poly;
use crate::matrix::Matrix;
use crate::rational::Rational;

/// `det(xI - A)` by Berkowitz's division-free recursion.
///
/// Peeling the leading row and column off `[[a, R], [C, M]]`, the
/// characteristic vector of the whole matrix is a lower-triangular Toeplitz
/// matrix with first column `1, -a, -RC, -RMC, -RM^2C, ...` applied to the
/// characteristic vector of `M`.
pub fn char_poly(a: &Matrix) -> Poly {
    let n = a.order();
    let mut p = vec![Rational::one()];
    for r in (0..n).rev() {
        let s = n - r;
        let mut t = Vec::with_capacity(s + 1);
        t.push(Rational::one());
        t.push(-a.get(r, r).clone());
        let mut u: Vec<Rational> = (r + 1..n).map(|i| a.get(i, r).clone()).collect();
        for _ in 2..=s {
            let rc = (r + 1..n)
                .zip(&u)
                .fold(Rational::zero(), |acc, (j, uj)| acc + a.get(r, j) * uj);
            t.push(-rc);
            u = (r + 1..n)
                .map(|i| {
                    (r + 1..n)
                        .zip(&u)
                        .fold(Rational::zero(), |acc, (j, uj)| acc + a.get(i, j) * uj)
                })
                .collect();
        }
        let next: Vec<Rational> = (0..=s)
            .map(|i| (0..s.min(i + 1)).fold(Rational::zero(), |acc, j| acc + &t[i - j] * &p[j]))
            .collect();
        p = next;
    }
    Poly::new(p)
}
