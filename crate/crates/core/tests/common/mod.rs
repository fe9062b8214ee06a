#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symconf::intlin::IntMatrix;

pub fn mat(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(rows).unwrap()
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Determinant by cofactor expansion, independent of the library's
/// elimination code.
pub fn det_cofactor(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let sub: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * det_cofactor(&sub);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// All maximal minors, by cofactor expansion over every column subset.
pub fn maximal_minors(a: &IntMatrix) -> Vec<BigInt> {
    use itertools::Itertools;
    let d = a.rows();
    (0..a.cols())
        .combinations(d)
        .map(|cols| {
            let m: Vec<Vec<BigInt>> = (0..d)
                .map(|i| cols.iter().map(|&j| a.get(i, j).clone()).collect())
                .collect();
            det_cofactor(&m)
        })
        .collect()
}

pub fn gcd_of_minors(a: &IntMatrix) -> BigInt {
    maximal_minors(a).iter().fold(BigInt::zero(), |g, m| g.gcd(m))
}

pub fn full_rank(a: &IntMatrix) -> bool {
    maximal_minors(a).iter().any(|m| !m.is_zero())
}

/// Seeded corpus of full-row-rank matrices with `d <= 4`, `n <= 7` and
/// entries in `[-3, 3]`.
pub fn random_corpus(count: usize, seed: u64) -> Vec<IntMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let d = rng.random_range(1..=4usize);
        let n = rng.random_range(d..=7usize);
        let data: Vec<BigInt> = (0..d * n).map(|_| BigInt::from(rng.random_range(-3..=3i64))).collect();
        let a = IntMatrix::new(d, n, data).unwrap();
        if full_rank(&a) {
            out.push(a);
        }
    }
    out
}

/// Seeded corpus of unimodular matrices: random `0/±1` matrices with
/// `d <= 3`, `n <= 5`, kept when the minor oracle agrees.
pub fn unimodular_corpus(count: usize, seed: u64) -> Vec<IntMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let d = rng.random_range(1..=3usize);
        let n = rng.random_range(d..=5usize);
        let data: Vec<BigInt> = (0..d * n).map(|_| BigInt::from(rng.random_range(-1..=1i64))).collect();
        let a = IntMatrix::new(d, n, data).unwrap();
        let minors: Vec<BigInt> = maximal_minors(&a).into_iter().filter(|m| !m.is_zero()).map(|m| m.magnitude().clone().into()).collect();
        if !minors.is_empty() && minors.iter().all(|m| m == &minors[0]) {
            out.push(a);
        }
    }
    out
}

/// Random connected bipartite graph with parts `1..=p` and `p+1..=p+q`:
/// a random spanning tree across the parts plus random extra edges.
pub fn random_bipartite(rng: &mut ChaCha8Rng, max_side: usize) -> symconf::graphs::Graph {
    let p = rng.random_range(1..=max_side);
    let q = rng.random_range(1..=max_side);
    let n = p + q;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut reached = vec![false; n + 1];
    reached[1] = true;
    let mut count = 1;
    while count < n {
        let i = rng.random_range(1..=p);
        let j = rng.random_range(p + 1..=n);
        if reached[i] != reached[j] {
            reached[i] = true;
            reached[j] = true;
            count += 1;
            edges.push((i, j));
        }
    }
    for i in 1..=p {
        for j in p + 1..=n {
            if !edges.contains(&(i, j)) && rng.random_bool(0.3) {
                edges.push((i, j));
            }
        }
    }
    symconf::graphs::Graph::new(n, edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Facets of a full-dimensional integer polytope by trying every hyperplane
/// through `dim` affinely independent points.
pub fn brute_force_facets(points: &[Vec<BigInt>], dim: usize) -> std::collections::BTreeSet<(Vec<BigInt>, BigInt)> {
    let mut out = std::collections::BTreeSet::new();
    for subset in itertools::Itertools::combinations(0..points.len(), dim) {
        let p0 = &points[subset[0]];
        let diffs: Vec<Vec<BigInt>> = subset[1..]
            .iter()
            .map(|&i| points[i].iter().zip(p0).map(|(a, b)| a - b).collect())
            .collect();
        // normal by cofactors of the (dim-1) x dim difference matrix
        let mut normal: Vec<BigInt> = (0..dim)
            .map(|k| {
                let minor: Vec<Vec<BigInt>> = diffs
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, x)| x.clone()).collect())
                    .collect();
                let m = det_cofactor(&minor);
                if k % 2 == 0 { m } else { -m }
            })
            .collect();
        if normal.iter().all(Zero::is_zero) {
            continue;
        }
        let g = normal.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        for x in normal.iter_mut() {
            *x /= &g;
        }
        let dot = |p: &Vec<BigInt>| -> BigInt { normal.iter().zip(p).map(|(a, b)| a * b).sum() };
        let rhs = dot(p0);
        let values: Vec<BigInt> = points.iter().map(dot).collect();
        if values.iter().all(|v| v <= &rhs) {
            out.insert((normal.clone(), rhs));
        } else if values.iter().all(|v| v >= &rhs) {
            out.insert((normal.iter().map(|x| -x).collect(), -rhs));
        }
    }
    out
}
