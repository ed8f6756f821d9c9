//! Numerical root extraction.
//!
//! The polynomial is first split exactly into square-free factors (Yun's
//! algorithm over the rationals), so every factor handed to the floating-point
//! stage has simple roots. Each factor is then solved with Ehrlich-Aberth
//! simultaneous iteration from a deterministic starting circle, and roots are
//! repeated according to their exact multiplicity.

use std::cmp::Ordering;
use std::f64::consts::TAU;

use num::complex::Complex64;
use num::{One, Zero};
use serde::{Serialize, Serializer};

use super::Poly;
use crate::error::{Error, Result};
use crate::rational::{to_f64, Rational};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
const DEFAULT_MAX_ITERATIONS: usize = 200;

#[derive(Clone, Copy, Debug)]
pub struct RootOptions {
    /// Residual bound: every root satisfies `|p(z)| <= tolerance * (1 + max|a_k|)`.
    pub tolerance: f64,
    /// Aberth updates allowed per root.
    pub max_iterations: usize,
}

impl Default for RootOptions {
    fn default() -> Self {
        Self {
            tolerance: DEFAULT_TOLERANCE,
            max_iterations: DEFAULT_MAX_ITERATIONS,
        }
    }
}

/// Roots with multiplicity, kept sorted by `(re, im)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootMultiset(Vec<Complex64>);

impl RootMultiset {
    pub fn new(mut values: Vec<Complex64>) -> Self {
        for z in &mut values {
            // -0.0 would sort before 0.0
            z.re += 0.0;
            z.im += 0.0;
        }
        values.sort_by(cmp_complex);
        Self(values)
    }

    pub fn from_real(values: &[f64]) -> Self {
        Self::new(values.iter().map(|&re| Complex64::new(re, 0.0)).collect())
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest absolute imaginary part, 0 for an empty set.
    pub fn max_imag(&self) -> f64 {
        self.0.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
    }
}

fn cmp_complex(a: &Complex64, b: &Complex64) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

impl Serialize for RootMultiset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Pair {
            re: f64,
            im: f64,
        }
        let pairs: Vec<Pair> = self.0.iter().map(|z| Pair { re: z.re, im: z.im }).collect();
        pairs.serialize(s)
    }
}

pub fn roots(p: &Poly, tolerance: f64) -> Result<RootMultiset> {
    roots_with(
        p,
        RootOptions {
            tolerance,
            ..RootOptions::default()
        },
    )
}

pub fn roots_with(p: &Poly, opts: RootOptions) -> Result<RootMultiset> {
    assert!(opts.tolerance > 0.0, "tolerance must be positive");
    if p.coeff(0).is_zero() {
        return Err(Error::Dimension(
            "leading coefficient a_0 is zero; the root count is undefined".into(),
        ));
    }
    let ascending: Vec<Rational> = p.coeffs().iter().rev().cloned().collect();
    let mut out = Vec::with_capacity(p.degree());
    let mut iterations = 0;
    for (factor, multiplicity) in square_free_factors(&ascending) {
        let (found, used) = factor_roots(&factor, opts)?;
        iterations = iterations.max(used);
        for z in found {
            out.extend(std::iter::repeat_n(z, multiplicity));
        }
    }
    debug_assert_eq!(out.len(), p.degree());

    let coeffs: Vec<f64> = p.coeffs().iter().map(to_f64).collect();
    let scale = 1.0 + coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let bound = opts.tolerance * scale;
    if out.iter().any(|&z| horner(&coeffs, z).0.norm() > bound) {
        return Err(Error::NoConvergence {
            iterations,
            best: RootMultiset::new(out).0,
        });
    }
    Ok(RootMultiset::new(out))
}

/// `p` and `p'` at `z`, coefficients highest power first.
fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut value = Complex64::zero();
    let mut deriv = Complex64::zero();
    for &c in coeffs {
        deriv = deriv * z + value;
        value = value * z + c;
    }
    (value, deriv)
}

/// Roots of a square-free factor given in ascending order.
fn factor_roots(factor: &[Rational], opts: RootOptions) -> Result<(Vec<Complex64>, usize)> {
    let degree = factor.len() - 1;
    if degree == 0 {
        return Ok((Vec::new(), 0));
    }
    if degree == 1 {
        let root = -(&factor[0] / &factor[1]);
        return Ok((vec![Complex64::new(to_f64(&root), 0.0)], 0));
    }
    let lead = &factor[degree];
    let monic: Vec<f64> = factor.iter().rev().map(|c| to_f64(&(c / lead))).collect();

    let radius = 1.0 + monic[1..].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<Complex64> = (0..degree)
        .map(|j| Complex64::from_polar(radius, TAU * j as f64 / degree as f64 + 0.4))
        .collect();
    let mut done = vec![false; degree];
    let mut sweeps = 0;
    while sweeps < opts.max_iterations && done.iter().any(|d| !d) {
        sweeps += 1;
        for j in 0..degree {
            if done[j] {
                continue;
            }
            let (value, deriv) = horner(&monic, z[j]);
            if value.is_zero() {
                done[j] = true;
                continue;
            }
            let newton = value / deriv;
            let repulsion: Complex64 = (0..degree)
                .filter(|&k| k != j)
                .map(|k| (z[j] - z[k]).inv())
                .sum();
            let step = newton / (Complex64::one() - newton * repulsion);
            if !step.is_finite() {
                continue;
            }
            z[j] -= step;
            if step.norm() <= 4.0 * f64::EPSILON * (1.0 + z[j].norm()) {
                done[j] = true;
            }
        }
    }

    // Newton polish and error estimates for the real/complex split
    let mut err = vec![0.0; degree];
    for j in 0..degree {
        for _ in 0..2 {
            let (value, deriv) = horner(&monic, z[j]);
            if value.is_zero() || deriv.is_zero() {
                break;
            }
            let step = value / deriv;
            if step.is_finite() {
                z[j] -= step;
                err[j] = step.norm();
            }
        }
    }
    Ok((enforce_conjugates(z, &err), sweeps))
}

/// Snaps roots within their error estimate of the real axis, then pairs the
/// remaining roots into exact conjugates.
fn enforce_conjugates(mut z: Vec<Complex64>, err: &[f64]) -> Vec<Complex64> {
    for (zj, &e) in z.iter_mut().zip(err) {
        let slack = (16.0 * e).max(1e-12 * (1.0 + zj.norm()));
        if zj.im.abs() <= slack {
            zj.im = 0.0;
        }
    }
    let upper: Vec<usize> = (0..z.len()).filter(|&j| z[j].im > 0.0).collect();
    let mut lower: Vec<usize> = (0..z.len()).filter(|&j| z[j].im < 0.0).collect();
    if upper.len() != lower.len() {
        return z;
    }
    for j in upper {
        let target = z[j].conj();
        let (pos, _) = lower
            .iter()
            .enumerate()
            .min_by(|a, b| {
                (z[*a.1] - target)
                    .norm()
                    .total_cmp(&(z[*b.1] - target).norm())
            })
            .expect("equal counts");
        let k = lower.swap_remove(pos);
        let re = (z[j].re + z[k].re) / 2.0;
        let im = (z[j].im - z[k].im) / 2.0;
        z[j] = Complex64::new(re, im);
        z[k] = Complex64::new(re, -im);
    }
    z
}

// ---- exact dense polynomial helpers, ascending coefficient order ----

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    if p.is_empty() {
        p.push(Rational::zero());
    }
    p
}

fn is_zero_poly(p: &[Rational]) -> bool {
    p.iter().all(Zero::is_zero)
}

fn derivative(p: &[Rational]) -> Vec<Rational> {
    if p.len() <= 1 {
        return vec![Rational::zero()];
    }
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(i.into()))
            .collect(),
    )
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len().max(b.len());
    trim(
        (0..len)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_default();
                let y = b.get(i).cloned().unwrap_or_default();
                x - y
            })
            .collect(),
    )
}

/// Quotient and remainder of `a / b`, `b` nonzero.
fn div_rem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return (vec![Rational::zero()], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() > db && !is_zero_poly(&rem) {
        let shift = rem.len() - 1 - db;
        let factor = rem.last().unwrap() / &lead;
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] -= &factor * c;
        }
        quot[shift] = factor;
        rem.pop();
        rem = trim(rem);
        if rem.len() - 1 < db {
            break;
        }
    }
    (trim(quot), rem)
}

fn monic(p: Vec<Rational>) -> Vec<Rational> {
    let p = trim(p);
    let lead = p.last().unwrap().clone();
    if lead.is_zero() {
        return p;
    }
    p.into_iter().map(|c| c / &lead).collect()
}

fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !is_zero_poly(&y) {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    monic(x)
}

fn exact_div(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (q, r) = div_rem(a, b);
    debug_assert!(is_zero_poly(&r), "inexact polynomial division");
    q
}

/// Yun's square-free decomposition: pairs `(factor, multiplicity)` whose
/// product (with multiplicities) is the monic version of `p`.
fn square_free_factors(p: &[Rational]) -> Vec<(Vec<Rational>, usize)> {
    let a = monic(p.to_vec());
    if a.len() <= 1 {
        return Vec::new();
    }
    let b = derivative(&a);
    let c = gcd(&a, &b);
    let mut w = exact_div(&a, &c);
    let mut y = exact_div(&b, &c);
    let mut z = sub(&y, &derivative(&w));
    let mut out = Vec::new();
    let mut i = 1;
    while w.len() > 1 {
        let g = gcd(&w, &z);
        if g.len() > 1 {
            out.push((g.clone(), i));
        }
        w = exact_div(&w, &g);
        y = exact_div(&z, &g);
        z = sub(&y, &derivative(&w));
        i += 1;
    }
    out
}
