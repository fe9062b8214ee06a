use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Column-style Hermite normal form `h = a * transform`.
///
/// `h` is in lower echelon form: pivot `k` sits at `(pivots[k].0, k)`, is
/// positive, every column after the last pivot is zero, and entries to the
/// left of a pivot in its row are reduced into `[0, pivot)`. When `a` has
/// full row rank the pivots are the diagonal and `h = [B | O]`.
#[derive(Clone, Debug)]
pub struct HnfResult {
    pub h: IntMatrix,
    /// The square block `B`, present only when rank equals the row count.
    pub b: Option<IntMatrix>,
    pub transform: IntMatrix,
    pub rank: usize,
    /// `(row, column)` of each pivot; column `k` carries pivot `k`.
    pub pivots: Vec<(usize, usize)>,
}

/// Returns `(g, x, y)` with `g = gcd(a, b) > 0` and `x*a + y*b = g`.
/// Both inputs must not be zero at once.
fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// `col[dst] += factor * col[src]` on both the working matrix and transform.
fn add_col_multiple(m: &mut IntMatrix, dst: usize, src: usize, factor: &BigInt) {
    if factor.is_zero() {
        return;
    }
    for i in 0..m.rows() {
        let s = m.get(i, src);
        if !s.is_zero() {
            let delta = s * factor;
            *m.entry_mut(i, dst) += delta;
        }
    }
}

/// Replaces columns `(k, j)` by `(x*ck + y*cj, -b*ck + a*cj)`; the 2x2 matrix
/// `[[x, -b], [y, a]]` has determinant `x*a + y*b = 1`.
fn combine(m: &mut IntMatrix, k: usize, j: usize, x: &BigInt, y: &BigInt, a: &BigInt, b: &BigInt) {
    for i in 0..m.rows() {
        let ck = m.get(i, k).clone();
        let cj = m.get(i, j).clone();
        if ck.is_zero() && cj.is_zero() {
            continue;
        }
        m.set(i, k, x * &ck + y * &cj);
        m.set(i, j, a * &cj - b * &ck);
    }
}

pub fn hnf(a: &IntMatrix) -> HnfResult {
    let (d, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = IntMatrix::identity(n);
    let mut pivots = Vec::new();
    let mut k = 0;
    for i in 0..d {
        if k == n {
            break;
        }
        for j in k + 1..n {
            if h.get(i, j).is_zero() {
                continue;
            }
            let (g, x, y) = ext_gcd(h.get(i, k), h.get(i, j));
            let ak = h.get(i, k) / &g;
            let bj = h.get(i, j) / &g;
            combine(&mut h, k, j, &x, &y, &ak, &bj);
            combine(&mut u, k, j, &x, &y, &ak, &bj);
        }
        if h.get(i, k).is_zero() {
            continue;
        }
        if h.get(i, k).is_negative() {
            h.negate_column(k);
            u.negate_column(k);
        }
        let p = h.get(i, k).clone();
        for c in 0..k {
            let q = h.get(i, c).div_floor(&p);
            if !q.is_zero() {
                let neg = -q;
                add_col_multiple(&mut h, c, k, &neg);
                add_col_multiple(&mut u, c, k, &neg);
            }
        }
        pivots.push((i, k));
        k += 1;
    }
    let rank = pivots.len();
    let b = (rank == d).then(|| h.select_columns(&(0..d).collect::<Vec<_>>()));
    HnfResult {
        h,
        b,
        transform: u,
        rank,
        pivots,
    }
}

impl HnfResult {
    pub fn block(&self) -> Result<&IntMatrix> {
        self.b.as_ref().ok_or(Error::RankDeficient {
            rank: self.rank,
            rows: self.h.rows(),
        })
    }

    /// Coefficients `w` over the pivot columns with `h * w = x`, or `None`
    /// when `x` is outside the column lattice.
    pub fn solve_in_h(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(x.len(), self.h.rows());
        let mut w: Vec<BigInt> = Vec::with_capacity(self.rank);
        for (k, &(r, _)) in self.pivots.iter().enumerate() {
            let mut rem = x[r].clone();
            for (c, wc) in w.iter().enumerate() {
                let e = self.h.get(r, c);
                if !e.is_zero() {
                    rem -= e * wc;
                }
            }
            let p = self.h.get(r, k);
            let (q, rest) = rem.div_rem(p);
            if !rest.is_zero() {
                return None;
            }
            w.push(q);
        }
        for (r, xr) in x.iter().enumerate() {
            let v: BigInt = w.iter().enumerate().map(|(c, wc)| self.h.get(r, c) * wc).sum();
            if &v != xr {
                return None;
            }
        }
        Some(w)
    }

    /// Integer `z` with `a * z = x`, or `None` when `x` is not in `ZA`.
    pub fn solve(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        let w = self.solve_in_h(x)?;
        let n = self.transform.rows();
        Some(
            (0..n)
                .map(|i| {
                    w.iter()
                        .enumerate()
                        .map(|(c, wc)| self.transform.get(i, c) * wc)
                        .sum()
                })
                .collect(),
        )
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.solve_in_h(x).is_some()
    }

    /// Basis of the integer kernel: the transform columns past the rank.
    pub fn kernel_columns(&self) -> Vec<Vec<BigInt>> {
        (self.rank..self.transform.cols())
            .map(|j| self.transform.column(j))
            .collect()
    }

    /// Product of the pivots: the lattice index when rank is full.
    pub fn pivot_product(&self) -> BigInt {
        self.pivots
            .iter()
            .enumerate()
            .map(|(k, &(r, _))| self.h.get(r, k).clone())
            .fold(BigInt::one(), |acc, p| acc * p)
    }
}

/// Canonical basis (HNF echelon columns) of the lattice spanned by `vectors`
/// in `Z^dim`. Equal lattices yield equal output.
pub fn canonical_lattice_basis(vectors: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    if vectors.is_empty() || dim == 0 {
        return Vec::new();
    }
    let m = IntMatrix::from_columns(vectors).expect("vectors share a length");
    let r = hnf(&m);
    (0..r.rank).map(|k| r.h.column(k)).collect()
}
