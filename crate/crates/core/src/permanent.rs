//! Exact permanent engines.
//!
//! Four independent routes to the same number: the defining permutation sum,
//! Ryser's inclusion-exclusion formula, the even-cycle permutation sum that is
//! valid for skew-symmetric matrices, and a cycle-cover expansion of the
//! associated weighted digraph. `perm_poly_direct` assembles `per(xI - A)`
//! from principal subpermanents and serves as the reference for the Sachs
//! formulas.

use std::sync::OnceLock;

use num::{BigInt, One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::{Matrix, SkewMatrix};
use crate::poly::Poly;
use crate::rational::{denominator_lcm, Rational};

/// Largest order `permanent_naive` will expand (10! = 3 628 800 terms).
pub const NAIVE_LIMIT: usize = 10;

/// Gray-code steps per parallel work item in Ryser's sum.
const RYSER_CHUNK_BITS: u32 = 14;

/// `sum over all permutations of prod a[i][pi(i)]`, with zero entries pruned.
pub fn permanent_naive(a: &Matrix) -> Result<Rational> {
    let n = a.order();
    if n > NAIVE_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: NAIVE_LIMIT,
        });
    }
    fn rec(a: &Matrix, row: usize, used: &mut [bool], acc: &Rational, total: &mut Rational) {
        if row == a.order() {
            *total += acc;
            return;
        }
        for col in 0..a.order() {
            let entry = a.get(row, col);
            if used[col] || entry.is_zero() {
                continue;
            }
            used[col] = true;
            rec(a, row + 1, used, &(acc * entry), total);
            used[col] = false;
        }
    }
    let mut total = Rational::zero();
    rec(a, 0, &mut vec![false; n], &Rational::one(), &mut total);
    Ok(total)
}

/// Ryser's formula with Gray-code column subsets:
/// `per A = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} a_ij`.
///
/// Rows are scaled to integers first, so the sum itself is exact integer
/// arithmetic (machine words while they suffice, big integers after).
pub fn permanent_ryser(a: &Matrix) -> Rational {
    ryser_self_test();
    let scaled = ScaledMatrix::new(a);
    let all: Vec<usize> = (0..a.order()).collect();
    scaled.permanent_of(&all)
}

fn ryser_self_test() {
    static CHECK: OnceLock<()> = OnceLock::new();
    CHECK.get_or_init(|| {
        let j2 = ScaledMatrix::new(&Matrix::from_i64_rows(&[vec![1, 1], vec![1, 1]]).unwrap());
        let value = j2.permanent_of(&[0, 1]);
        assert_eq!(
            value,
            Rational::from_integer(2.into()),
            "Ryser sign convention broken: per(J_2) != 2"
        );
    });
}

/// Sum over permutations whose cycles all have even length. For a
/// skew-symmetric matrix this equals the permanent: permutations with an odd
/// cycle cancel in pairs by reversing one odd cycle.
pub fn permanent_skew_even(a: &Matrix) -> Result<Rational> {
    SkewMatrix::new(a.clone())?;
    if a.order() % 2 == 1 {
        return Ok(Rational::zero());
    }
    Ok(cycle_sum(a, |len| len % 2 == 0))
}

/// Permanent as the total weight of all spanning cycle covers of the digraph
/// with arc weights `a[i][j]`; diagonal entries are loops (1-cycles).
pub fn permanent_cycle_cover(a: &Matrix) -> Rational {
    cycle_sum(a, |_| true)
}

/// Builds permutations cycle by cycle, each cycle opened at the smallest
/// unused index; `closes(len)` decides which cycle lengths are allowed.
fn cycle_sum(a: &Matrix, closes: impl Fn(usize) -> bool + Copy) -> Rational {
    struct Walk<'a, F> {
        a: &'a Matrix,
        used: Vec<bool>,
        total: Rational,
        closes: F,
    }

    impl<F: Fn(usize) -> bool + Copy> Walk<'_, F> {
        fn open(&mut self, acc: Rational) {
            let Some(start) = self.used.iter().position(|u| !u) else {
                self.total += acc;
                return;
            };
            self.used[start] = true;
            self.extend(start, start, 1, acc);
            self.used[start] = false;
        }

        fn extend(&mut self, start: usize, cur: usize, len: usize, acc: Rational) {
            let back = self.a.get(cur, start);
            if (self.closes)(len) && !back.is_zero() {
                self.open(&acc * back);
            }
            for next in 0..self.a.order() {
                let w = self.a.get(cur, next);
                if self.used[next] || w.is_zero() {
                    continue;
                }
                self.used[next] = true;
                self.extend(start, next, len + 1, &acc * w);
                self.used[next] = false;
            }
        }
    }

    let mut walk = Walk {
        a,
        used: vec![false; a.order()],
        total: Rational::zero(),
        closes,
    };
    walk.open(Rational::one());
    walk.total
}

/// `per(xI - A)` with `a_k = (-1)^k * (sum of all k x k principal
/// subpermanents)`. Subsets of each size are visited in colex order and each
/// subpermanent is computed with Ryser's formula.
pub fn perm_poly_direct(a: &Matrix) -> Poly {
    ryser_self_test();
    let n = a.order();
    assert!(n < 64, "perm_poly_direct supports order < 64");
    let scaled = ScaledMatrix::new(a);
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(Rational::one());
    for k in 1..=n {
        let subsets = colex_subsets(n, k);
        let sum: Rational = subsets
            .par_iter()
            .map(|&mask| {
                let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                scaled.permanent_of(&idx)
            })
            .reduce(Rational::zero, |x, y| x + y);
        coeffs.push(if k % 2 == 0 { sum } else { -sum });
    }
    Poly::new(coeffs)
}

/// All `k`-element subsets of `0..n` as bitmasks in colex (= increasing
/// integer) order.
fn colex_subsets(n: usize, k: usize) -> Vec<u64> {
    if k == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut mask: u64 = (1u64 << k) - 1;
    let limit = 1u64 << n;
    while mask < limit {
        out.push(mask);
        // Gosper's hack: next integer with the same popcount
        let low = mask & mask.wrapping_neg();
        let ripple = mask + low;
        mask = ripple | (((mask ^ ripple) >> 2) / low);
    }
    out
}

/// Integer form of a rational matrix: `a[i][j] = ints[i][j] / row_scale[i]`.
struct ScaledMatrix {
    n: usize,
    ints: Entries,
    row_scale: Vec<BigInt>,
}

enum Entries {
    /// Every partial row sum fits comfortably in an `i64`.
    Small(Vec<i64>),
    Big(Vec<BigInt>),
}

impl ScaledMatrix {
    fn new(a: &Matrix) -> Self {
        let n = a.order();
        let mut row_scale = Vec::with_capacity(n);
        let mut big = Vec::with_capacity(n * n);
        for i in 0..n {
            let row = a.row(i);
            let l = denominator_lcm(row);
            for v in row {
                big.push((v * Rational::from_integer(l.clone())).to_integer());
            }
            row_scale.push(l);
        }
        let cap = (1i64 << 62) / (n.max(1) as i64);
        let small: Option<Vec<i64>> = big
            .iter()
            .map(|v| v.to_i64().filter(|x| x.unsigned_abs() <= cap as u64))
            .collect();
        let ints = match small {
            Some(v) => Entries::Small(v),
            None => Entries::Big(big),
        };
        Self { n, ints, row_scale }
    }

    /// Permanent of the principal submatrix on `idx`.
    fn permanent_of(&self, idx: &[usize]) -> Rational {
        let k = idx.len();
        if k == 0 {
            return Rational::one();
        }
        let raw = match &self.ints {
            Entries::Small(v) => {
                let sub: Vec<i64> = idx
                    .iter()
                    .flat_map(|&i| idx.iter().map(move |&j| v[i * self.n + j]))
                    .collect();
                ryser_small(&sub, k)
            }
            Entries::Big(v) => {
                let sub: Vec<BigInt> = idx
                    .iter()
                    .flat_map(|&i| idx.iter().map(move |&j| v[i * self.n + j].clone()))
                    .collect();
                ryser_big(&sub, k)
            }
        };
        let denom: BigInt = idx.iter().map(|&i| &self.row_scale[i]).product();
        Rational::new(raw, denom)
    }
}

fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

/// Ryser over `i64` row sums with checked `i128` products and accumulation,
/// spilling into big integers on overflow.
fn ryser_small(a: &[i64], n: usize) -> BigInt {
    let steps = 1u64 << n;
    let chunk_bits = RYSER_CHUNK_BITS.min(n as u32);
    let chunk = 1u64 << chunk_bits;
    let chunks = steps / chunk;

    let run = |c: u64| -> BigInt {
        let lo = c * chunk;
        let hi = lo + chunk;
        let mut sums = vec![0i64; n];
        let mut set = gray(lo);
        for j in (0..n).filter(|&j| set >> j & 1 == 1) {
            for i in 0..n {
                sums[i] += a[i * n + j];
            }
        }
        let mut acc = Accumulator::default();
        if lo != 0 {
            acc.add_term(&sums, set.count_ones());
        }
        for step in lo + 1..hi {
            let j = step.trailing_zeros() as usize;
            let bit = 1u64 << j;
            if set & bit == 0 {
                for i in 0..n {
                    sums[i] += a[i * n + j];
                }
            } else {
                for i in 0..n {
                    sums[i] -= a[i * n + j];
                }
            }
            set ^= bit;
            acc.add_term(&sums, set.count_ones());
        }
        acc.finish()
    };

    let total: BigInt = if chunks == 1 {
        run(0)
    } else {
        (0..chunks).into_par_iter().map(run).sum()
    };
    if n % 2 == 1 {
        -total
    } else {
        total
    }
}

#[derive(Default)]
struct Accumulator {
    small: i128,
    big: BigInt,
}

impl Accumulator {
    fn add_term(&mut self, sums: &[i64], size: u32) {
        let negative = size % 2 == 1;
        match product_i128(sums) {
            Some(p) => {
                let p = if negative { -p } else { p };
                match self.small.checked_add(p) {
                    Some(s) => self.small = s,
                    None => {
                        self.big += BigInt::from(self.small) + BigInt::from(p);
                        self.small = 0;
                    }
                }
            }
            None => {
                let p: BigInt = sums.iter().map(|&s| BigInt::from(s)).product();
                if negative {
                    self.big -= p;
                } else {
                    self.big += p;
                }
            }
        }
    }

    fn finish(self) -> BigInt {
        self.big + BigInt::from(self.small)
    }
}

fn product_i128(values: &[i64]) -> Option<i128> {
    let mut p: i128 = 1;
    for &v in values {
        if v == 0 {
            return Some(0);
        }
        p = p.checked_mul(i128::from(v))?;
    }
    Some(p)
}

fn ryser_big(a: &[BigInt], n: usize) -> BigInt {
    let mut sums = vec![BigInt::zero(); n];
    let mut set = 0u64;
    let mut total = BigInt::zero();
    for step in 1..(1u64 << n) {
        let j = step.trailing_zeros() as usize;
        let bit = 1u64 << j;
        if set & bit == 0 {
            for i in 0..n {
                sums[i] += &a[i * n + j];
            }
        } else {
            for i in 0..n {
                sums[i] -= &a[i * n + j];
            }
        }
        set ^= bit;
        let term: BigInt = sums.iter().product();
        if set.count_ones() % 2 == 1 {
            total -= term;
        } else {
            total += term;
        }
    }
    if n % 2 == 1 {
        -total
    } else {
        total
    }
}
