//! Dense square matrices over exact rationals.

use std::fmt;

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};

/// Square matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![Rational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, Rational::from_integer(1.into()));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        Ok(Self { n, entries })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| Rational::from_integer(v.into()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn neg(&self) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|v| -v).collect(),
        }
    }

    /// Principal submatrix on the given (sorted) index set.
    pub fn principal(&self, indices: &[usize]) -> Self {
        Self::from_fn(indices.len(), |i, j| {
            self.get(indices[i], indices[j]).clone()
        })
    }

    /// `P A P^T` where `perm[i]` is the new position of row/column `i`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(perm[i], perm[j], self.get(i, j).clone());
            }
        }
        out
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.first_skew_violation().is_none()
    }

    fn first_skew_violation(&self) -> Option<(usize, usize)> {
        for i in 0..self.n {
            for j in i..self.n {
                if *self.get(i, j) != -self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|v| v.is_integer())
    }

    /// Parses the matrix text format: the order `n` on the first line, then
    /// `n` rows of whitespace-separated entries (integers, decimals or `p/q`).
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (first_no, first) = lines.next().ok_or(Error::Parse {
            line: 1,
            reason: "empty matrix input".into(),
        })?;
        let n: usize = first.parse().map_err(|_| Error::Parse {
            line: first_no,
            reason: format!("expected matrix order, found {first:?}"),
        })?;
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let (line, row) = lines.next().ok_or(Error::Parse {
                line: first_no + rows.len() + 1,
                reason: format!("expected {n} rows, found {}", rows.len()),
            })?;
            let parsed = row
                .split_whitespace()
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()
                .map_err(|e| Error::Parse {
                    line,
                    reason: e.to_string(),
                })?;
            if parsed.len() != n {
                return Err(Error::Parse {
                    line,
                    reason: format!("expected {n} entries, found {}", parsed.len()),
                });
            }
            rows.push(parsed);
        }
        if let Some((line, extra)) = lines.next() {
            return Err(Error::Parse {
                line,
                reason: format!("unexpected trailing content {extra:?}"),
            });
        }
        Self::from_rows(rows)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// A matrix with zero diagonal and `a[j][i] == -a[i][j]`, checked on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewMatrix(Matrix);

impl SkewMatrix {
    pub fn new(m: Matrix) -> Result<Self> {
        match m.first_skew_violation() {
            None => Ok(Self(m)),
            Some((row, col)) => Err(Error::NotSkew { row, col }),
        }
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        self.0.get(i, j)
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    /// Pairs `(i, j)` with `a[i][j] > 0`, the arcs of the associated oriented graph.
    pub fn positive_entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order();
        (0..n)
            .flat_map(move |i| (0..n).map(move |j| (i, j)))
            .filter(move |&(i, j)| self.get(i, j).is_positive())
    }
}

impl AsRef<Matrix> for SkewMatrix {
    fn as_ref(&self) -> &Matrix {
        &self.0
    }
}

impl fmt::Display for SkewMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
