#![allow(dead_code)]

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewperm::graph::{parse_graph6, Graph, OrientedGraph, WeightedOrientedGraph};
use skewperm::{Matrix, Poly, Rational};

pub fn data_path(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

pub fn catalog_lines(name: &str) -> Vec<String> {
    std::fs::read_to_string(data_path(name))
        .expect("catalog file")
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(String::from)
        .collect()
}

pub fn catalog(name: &str) -> Vec<Graph> {
    catalog_lines(name)
        .iter()
        .map(|l| parse_graph6(l).expect("catalog graph6"))
        .collect()
}

/// Connected graphs on at most `n` vertices, one per isomorphism class.
pub fn connected_up_to(n: usize) -> Vec<Graph> {
    catalog("connected_n1-7.g6")
        .into_iter()
        .filter(|g| g.order() <= n)
        .collect()
}

pub fn trees_up_to(n: usize) -> Vec<Graph> {
    catalog("trees_n1-8.g6")
        .into_iter()
        .filter(|g| g.order() <= n)
        .collect()
}

/// Every labeled graph on `n` vertices.
pub fn all_labeled(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            Graph::new(n, edges).unwrap()
        })
        .collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_mask(rng: &mut ChaCha8Rng, m: usize) -> u64 {
    if m == 0 {
        0
    } else {
        rng.gen_range(0..1u64 << m)
    }
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let mut p = 0;
    while p == 0 {
        p = rng.gen_range(-9i64..=9);
    }
    Rational::new(p.into(), rng.gen_range(1i64..=6).into())
}

pub fn random_weighted(rng: &mut ChaCha8Rng, n: usize) -> WeightedOrientedGraph {
    let g = random_graph(rng, n, 0.55);
    let mask = random_mask(rng, g.size());
    let weights = (0..g.size()).map(|_| random_rational(rng)).collect();
    WeightedOrientedGraph::new(OrientedGraph::from_mask(g, mask).unwrap(), weights).unwrap()
}

pub fn random_skew_int(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Matrix {
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let v = rng.gen_range(-bound..=bound);
            rows[i][j] = v;
            rows[j][i] = -v;
        }
    }
    Matrix::from_i64_rows(&rows).unwrap()
}

pub fn random_int_matrix(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Matrix {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|_| (0..n).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect();
    Matrix::from_i64_rows(&rows).unwrap()
}

/// `per(xI - A)` by summing over all permutations with polynomial entries.
/// Coefficients are accumulated lowest power first and reversed at the end.
pub fn perm_poly_oracle(a: &Matrix) -> Poly {
    let n = a.order();
    let mut total = vec![Rational::zero(); n + 1];
    let mut perm: Vec<usize> = (0..n).collect();

    fn visit(a: &Matrix, perm: &mut Vec<usize>, k: usize, total: &mut [Rational]) {
        let n = perm.len();
        if k == n {
            // product of (x [i == p(i)] - a_{i p(i)}) as an ascending polynomial
            let mut acc = vec![Rational::one()];
            for (i, &j) in perm.iter().enumerate() {
                let c = -a.get(i, j).clone();
                let mut next = vec![Rational::zero(); acc.len() + 1];
                for (d, v) in acc.iter().enumerate() {
                    next[d] += v * &c;
                    if i == j {
                        next[d + 1] += v;
                    }
                }
                acc = next;
            }
            for (d, v) in acc.into_iter().enumerate() {
                if d < total.len() {
                    total[d] += v;
                }
            }
            return;
        }
        for i in k..n {
            perm.swap(k, i);
            visit(a, perm, k + 1, total);
            perm.swap(k, i);
        }
    }

    visit(a, &mut perm, 0, &mut total);
    total.reverse();
    Poly::new(total)
}

/// Permanent straight from the definition.
pub fn permanent_oracle(a: &Matrix) -> Rational {
    let p = perm_poly_oracle(a);
    let n = a.order();
    // per(xI - A) at x = 0 is per(-A) = (-1)^n per(A)
    let c = p.coeff(n).clone();
    if n % 2 == 0 {
        c
    } else {
        -c
    }
}
