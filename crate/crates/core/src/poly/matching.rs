use std::collections::HashMap;

use num::{BigInt, One, Zero};

use super::Poly;
use crate::graph::Graph;
use crate::rational::Rational;

/// Matching polynomial `mu(G, x) = sum_r (-1)^r p(G, r) x^(n-2r)`, computed by
/// the vertex recurrence `mu(G) = x mu(G - v) - sum_{w ~ v} mu(G - v - w)`
/// memoized on the remaining vertex set.
pub fn matching_polynomial(g: &Graph) -> Poly {
    // polynomials are top-indexed coefficient vectors of length |remaining| + 1
    fn mu(
        g: &Graph,
        alive: &mut Vec<bool>,
        first: usize,
        memo: &mut HashMap<Vec<bool>, Vec<BigInt>>,
    ) -> Vec<BigInt> {
        let Some(v) = (first..alive.len()).find(|&v| alive[v]) else {
            return vec![BigInt::one()];
        };
        if let Some(hit) = memo.get(&alive[v..]) {
            return hit.clone();
        }
        alive[v] = false;
        let mut out = mu(g, alive, v + 1, memo);
        out.push(BigInt::zero());
        for &w in g.neighbors(v) {
            if alive[w] {
                alive[w] = false;
                let sub = mu(g, alive, v + 1, memo);
                alive[w] = true;
                let offset = out.len() - sub.len();
                for (i, c) in sub.into_iter().enumerate() {
                    out[offset + i] -= c;
                }
            }
        }
        alive[v] = true;
        memo.insert(alive[v..].to_vec(), out.clone());
        out
    }

    let mut alive = vec![true; g.order()];
    let coeffs = mu(g, &mut alive, 0, &mut HashMap::new());
    Poly::new(coeffs.into_iter().map(Rational::from_integer).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::matching_counts;

    #[test]
    fn small_examples() {
        assert_eq!(
            matching_polynomial(&Graph::complete(2)),
            Poly::from_i64(&[1, 0, -1])
        );
        assert_eq!(
            matching_polynomial(&Graph::cycle(3)),
            Poly::from_i64(&[1, 0, -3, 0])
        );
        assert_eq!(
            matching_polynomial(&Graph::cycle(4)),
            Poly::from_i64(&[1, 0, -4, 0, 2])
        );
        assert_eq!(matching_polynomial(&Graph::empty(0)), Poly::from_i64(&[1]));
        assert_eq!(
            matching_polynomial(&Graph::empty(2)),
            Poly::from_i64(&[1, 0, 0])
        );
    }

    #[test]
    fn agrees_with_matching_counts() {
        for g in [Graph::complete(6), Graph::cycle(7), Graph::path(8)] {
            let mu = matching_polynomial(&g);
            let counts = matching_counts(&g);
            for k in 0..=g.order() {
                let expected = if k % 2 == 1 {
                    BigInt::zero()
                } else {
                    let c = BigInt::from(counts[k / 2].clone());
                    if (k / 2) % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                };
                assert_eq!(*mu.coeff(k), Rational::from_integer(expected));
            }
        }
    }
}
