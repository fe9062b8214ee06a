//! Exact integer linear algebra: Hermite normal form, maximal minors,
//! lattice indices and unimodularity.
//!
//! Everything here works on [`IntMatrix`] with `BigInt` entries. Minors use
//! fraction-free elimination, so nothing is ever rounded.

mod hnf;
mod matrix;
mod minors;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use hnf::{canonical_lattice_basis, hnf, HnfResult};
pub use matrix::{bigint_json, IntMatrix};
pub use minors::{binomial_count, determinant, for_each_maximal_minor, minor, rank};

use crate::error::{Error, Result};

/// Above this many column subsets `gcd_maximal_minors` switches from
/// enumeration to the HNF determinant.
pub const DEFAULT_MINOR_ENUMERATION_LIMIT: u64 = 100_000;

/// The index `[Z^d : ZA]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(BigInt),
    /// `ZA` has rank below `d`.
    Infinite,
}

impl LatticeIndex {
    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            LatticeIndex::Finite(v) => Some(v),
            LatticeIndex::Infinite => None,
        }
    }
}

impl fmt::Display for LatticeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeIndex::Finite(v) => write!(f, "{v}"),
            LatticeIndex::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unimodularity {
    pub unimodular: bool,
    /// Common absolute value of the nonzero maximal minors; zero when the
    /// matrix is not unimodular.
    pub delta: BigInt,
}

/// gcd of all `d x d` minors, `d = rows`. Zero iff rank is below `d`.
pub fn gcd_maximal_minors(a: &IntMatrix) -> BigInt {
    gcd_maximal_minors_with(a, DEFAULT_MINOR_ENUMERATION_LIMIT)
}

pub fn gcd_maximal_minors_with(a: &IntMatrix, enumeration_limit: u64) -> BigInt {
    if a.rows() > a.cols() {
        return BigInt::zero();
    }
    if binomial_count(a.cols(), a.rows()) <= enumeration_limit {
        let mut g = BigInt::zero();
        for_each_maximal_minor(a, |_, m| {
            g = g.gcd(m);
            !g.is_one()
        });
        g
    } else {
        let r = hnf(a);
        if r.rank < a.rows() {
            BigInt::zero()
        } else {
            r.pivot_product()
        }
    }
}

pub fn lattice_index(a: &IntMatrix) -> LatticeIndex {
    let r = hnf(a);
    if r.rank < a.rows() {
        LatticeIndex::Infinite
    } else {
        let idx = r.pivot_product();
        debug_assert!(
            binomial_count(a.cols(), a.rows()) > 2_000
                || idx == gcd_maximal_minors(a),
            "HNF determinant disagrees with the gcd of maximal minors"
        );
        LatticeIndex::Finite(idx)
    }
}

fn require_full_row_rank(a: &IntMatrix) -> Result<()> {
    let r = rank(a);
    if r < a.rows() {
        return Err(Error::RankDeficient {
            rank: r,
            rows: a.rows(),
        });
    }
    Ok(())
}

/// Decides whether all nonzero maximal minors share one absolute value.
pub fn is_unimodular(a: &IntMatrix) -> Result<Unimodularity> {
    require_full_row_rank(a)?;
    let mut delta: Option<BigInt> = None;
    let mut ok = true;
    for_each_maximal_minor(a, |_, m| {
        if m.is_zero() {
            return true;
        }
        let v = m.abs();
        match &delta {
            None => delta = Some(v),
            Some(d) if *d == v => {}
            Some(_) => ok = false,
        }
        ok
    });
    Ok(match (ok, delta) {
        (true, Some(d)) => Unimodularity {
            unimodular: true,
            delta: d,
        },
        _ => Unimodularity {
            unimodular: false,
            delta: BigInt::zero(),
        },
    })
}

/// Splits `a = b * a_prime` with `b` the HNF block, so that `a_prime` is
/// integral and its columns generate `Z^d`.
pub fn lattice_normalize(a: &IntMatrix) -> Result<(IntMatrix, IntMatrix)> {
    let r = hnf(a);
    let b = r.block()?.clone();
    let d = a.rows();
    let mut a_prime = IntMatrix::zeros_unchecked(d, a.cols());
    for j in 0..a.cols() {
        let col = a.column(j);
        let w = r
            .solve_in_h(&col)
            .expect("every column of A lies in ZA = ZB");
        for (i, wi) in w.into_iter().enumerate() {
            a_prime.set(i, j, wi);
        }
    }
    Ok((b, a_prime))
}

/// Basis of `{u in Z^n : a u = 0}` in canonical (HNF) form.
pub fn kernel_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let r = hnf(a);
    canonical_lattice_basis(&r.kernel_columns(), a.cols())
}

/// Solves the lower-triangular system `b x = y` over the rationals and
/// returns `x` only if it is integral.
pub fn solve_lower_triangular(b: &IntMatrix, y: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = b.rows();
    let mut x: Vec<BigInt> = Vec::with_capacity(n);
    for i in 0..n {
        let mut rem = y[i].clone();
        for (j, xj) in x.iter().enumerate() {
            rem -= b.get(i, j) * xj;
        }
        let (q, r) = rem.div_rem(b.get(i, i));
        if !r.is_zero() {
            return None;
        }
        x.push(q);
    }
    Some(x)
}

pub(crate) fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub(crate) fn unit_vector(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::one();
    v
}
