use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::IntMatrix;

/// Fraction-free (Bareiss) determinant, with an `i128` fast path that falls
/// back to `BigInt` on overflow.
pub fn determinant(m: &IntMatrix) -> BigInt {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    if let Some(rows) = m.to_i64_rows() {
        let rows: Vec<Vec<i128>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(i128::from).collect())
            .collect();
        if let Some(d) = det_i128(rows) {
            return BigInt::from(d);
        }
    }
    let rows: Vec<Vec<BigInt>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    det_bigint(rows)
}

pub(crate) fn det_i128(mut a: Vec<Vec<i128>>) -> Option<i128> {
    let n = a.len();
    if n == 0 {
        return Some(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(s) => {
                    a.swap(k, s);
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j]
                    .checked_mul(a[k][k])?
                    .checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = num / prev;
            }
        }
        prev = a[k][k];
    }
    a[n - 1][n - 1].checked_mul(sign)
}

pub(crate) fn det_bigint(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut negate = false;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(s) => {
                    a.swap(k, s);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant of the square submatrix on the given columns.
pub fn minor(m: &IntMatrix, cols: &[usize]) -> BigInt {
    determinant(&m.select_columns(cols))
}

/// Rank by fraction-free elimination.
pub fn rank(m: &IntMatrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let g = a[r][c].gcd(&a[i][c]);
            let fr = &a[i][c] / &g;
            let fi = &a[r][c] / &g;
            for j in c..cols {
                let v = &a[i][j] * &fi - &a[r][j] * &fr;
                a[i][j] = v;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Number of `k`-subsets of an `n`-set, saturating.
pub fn binomial_count(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Calls `f` with each column subset of size `rows` and its minor, in
/// lexicographic subset order. Stops early when `f` returns `false`.
pub fn for_each_maximal_minor(m: &IntMatrix, mut f: impl FnMut(&[usize], &BigInt) -> bool) {
    let d = m.rows();
    if d > m.cols() {
        return;
    }
    let small = m.to_i64_columns();
    for cols in (0..m.cols()).combinations(d) {
        let det = match &small {
            Some(c) => {
                let sub: Vec<Vec<i128>> = (0..d)
                    .map(|i| cols.iter().map(|&j| i128::from(c[j][i])).collect())
                    .collect();
                match det_i128(sub) {
                    Some(v) => BigInt::from(v),
                    None => minor(m, &cols),
                }
            }
            None => minor(m, &cols),
        };
        if !f(&cols, &det) {
            return;
        }
    }
}
