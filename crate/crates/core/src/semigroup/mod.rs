//! Graded pieces of the affine monoid `Z≥0 A` of a configuration: Hilbert
//! functions and h-vectors, normality with witnesses, and decompositions of
//! degree-`N` points into columns.

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::configs::Configuration;
use crate::error::{Error, Result};
use crate::intlin::{bigint_json, hnf, rank};
use crate::polytope::{PolytopeLimits, PolytopeRep, DEFAULT_SCAN_BUDGET};

/// Default cap on the size of a single degree slice.
pub const DEFAULT_POINT_BUDGET: u64 = 16_000_000;
/// Highest degree the streaming Hilbert computation will reach.
pub const DEFAULT_HILBERT_MAX_DEGREE: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SemigroupOptions {
    pub point_budget: u64,
    pub scan_budget: u64,
    pub limits: PolytopeLimits,
}

impl Default for SemigroupOptions {
    fn default() -> Self {
        SemigroupOptions {
            point_budget: DEFAULT_POINT_BUDGET,
            scan_budget: DEFAULT_SCAN_BUDGET,
            limits: PolytopeLimits::default(),
        }
    }
}

/// Mixed-radix packing of bounded integer vectors into `u128` keys. Adding
/// a vector is adding a constant to the key as long as no coordinate leaves
/// its range, so shifted sorted slices stay sorted.
#[derive(Clone, Debug)]
struct Codec {
    low: Vec<i64>,
    high: Vec<i64>,
    place: Vec<i128>,
}

impl Codec {
    /// Codec for all sums of at most `max_degree` columns.
    fn new(columns: &[Vec<i64>], rows: usize, max_degree: u32) -> Result<Self> {
        let n = i64::from(max_degree);
        let mut low = Vec::with_capacity(rows);
        let mut high = Vec::with_capacity(rows);
        let mut place = Vec::with_capacity(rows);
        let mut p: i128 = 1;
        for i in 0..rows {
            let mn = columns.iter().map(|c| c[i]).min().unwrap_or(0).min(0);
            let mx = columns.iter().map(|c| c[i]).max().unwrap_or(0).max(0);
            let (lo, hi) = (
                mn.checked_mul(n).ok_or(Error::Overflow("slice coordinates"))?,
                mx.checked_mul(n).ok_or(Error::Overflow("slice coordinates"))?,
            );
            low.push(lo);
            high.push(hi);
            place.push(p);
            p = p
                .checked_mul(i128::from(hi - lo + 1))
                .filter(|&v| v < (1i128 << 126))
                .ok_or(Error::Overflow("slice key packing"))?;
        }
        Ok(Codec { low, high, place })
    }

    fn encode(&self, x: &[i64]) -> Option<u128> {
        let mut k: i128 = 0;
        for (i, &v) in x.iter().enumerate() {
            if v < self.low[i] || v > self.high[i] {
                return None;
            }
            k += i128::from(v - self.low[i]) * self.place[i];
        }
        Some(k as u128)
    }

    fn decode(&self, key: u128) -> Vec<i64> {
        let mut k = key as i128;
        let mut out = vec![0; self.low.len()];
        for i in (0..self.low.len()).rev() {
            let q = k / self.place[i];
            k -= q * self.place[i];
            out[i] = q as i64 + self.low[i];
        }
        out
    }

    /// Key offset of adding `c`.
    fn shift(&self, c: &[i64]) -> i128 {
        c.iter().zip(&self.place).map(|(&v, &p)| i128::from(v) * p).sum()
    }
}

fn int_columns(c: &Configuration) -> Result<Vec<Vec<i64>>> {
    let mut cols = c
        .matrix
        .to_i64_columns()
        .ok_or(Error::Overflow("matrix entries"))?;
    cols.sort();
    cols.dedup();
    Ok(cols)
}

/// `prev + columns`, sorted and deduplicated.
fn next_slice(prev: &[u128], shifts: &[i128], budget: u64) -> Result<Vec<u128>> {
    let mut out: Vec<u128> = Vec::with_capacity(prev.len() * 2);
    let streams = shifts
        .iter()
        .map(|&s| prev.iter().map(move |&k| (k as i128 + s) as u128));
    for k in streams.kmerge().dedup() {
        if out.len() as u64 >= budget {
            return Err(Error::ResourceLimit {
                what: "degree slice points",
                limit: budget,
            });
        }
        out.push(k);
    }
    Ok(out)
}

/// All sums of `N` columns for `N <= max_degree`.
#[derive(Clone, Debug)]
pub struct DegreeSlices {
    pub config: Configuration,
    pub max_degree: u32,
    codec: Codec,
    slices: Vec<Vec<u128>>,
}

impl DegreeSlices {
    pub fn len(&self, n: u32) -> usize {
        self.slices[n as usize].len()
    }

    pub fn is_empty(&self, n: u32) -> bool {
        self.slices[n as usize].is_empty()
    }

    /// Points of degree `n` in lexicographic order.
    pub fn slice(&self, n: u32) -> Vec<Vec<i64>> {
        let mut pts: Vec<Vec<i64>> = self.slices[n as usize]
            .iter()
            .map(|&k| self.codec.decode(k))
            .collect();
        pts.sort();
        pts
    }

    pub fn contains(&self, n: u32, x: &[i64]) -> bool {
        self.codec
            .encode(x)
            .is_some_and(|k| self.slices[n as usize].binary_search(&k).is_ok())
    }
}

pub fn degree_slices(c: &Configuration, max_degree: u32) -> Result<DegreeSlices> {
    degree_slices_with(c, max_degree, DEFAULT_POINT_BUDGET)
}

pub fn degree_slices_with(c: &Configuration, max_degree: u32, point_budget: u64) -> Result<DegreeSlices> {
    let cols = int_columns(c)?;
    let codec = Codec::new(&cols, c.matrix.rows(), max_degree.max(1))?;
    let shifts: Vec<i128> = cols.iter().map(|col| codec.shift(col)).collect();
    let zero = codec.encode(&vec![0; c.matrix.rows()]).expect("zero is in range");
    let mut slices = vec![vec![zero]];
    for _ in 0..max_degree {
        let next = next_slice(slices.last().expect("nonempty"), &shifts, point_budget)?;
        slices.push(next);
    }
    Ok(DegreeSlices {
        config: c.clone(),
        max_degree,
        codec,
        slices,
    })
}

/// Hilbert function values and the h-vector `(1 - t)^k H(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// `H(0), H(1), ...`
    pub values: Vec<u64>,
    pub krull_dim: usize,
    /// Trailing zeros trimmed.
    pub h_vector: Vec<i64>,
    /// False when a budget stopped the computation before the differences
    /// settled; `values` are then exact but `h_vector` may be truncated.
    pub stabilized: bool,
    /// Why the computation stopped early, if it did.
    pub stopped_by: Option<String>,
}

impl HilbertData {
    pub fn is_palindromic(&self) -> bool {
        is_palindromic(&self.h_vector)
    }

    pub fn h_sum(&self) -> i64 {
        self.h_vector.iter().sum()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "values": self.values,
            "krull_dim": self.krull_dim,
            "h_vector": self.h_vector,
            "stabilized": self.stabilized,
            "stopped_by": self.stopped_by,
            "palindromic": self.is_palindromic(),
        })
    }
}

pub fn is_palindromic(h: &[i64]) -> bool {
    h.iter().eq(h.iter().rev())
}

/// `k`-fold backward difference of `values` at index `i`.
fn h_entry(values: &[u64], k: usize, i: usize) -> i64 {
    let mut binom: i128 = 1;
    let mut acc: i128 = 0;
    for j in 0..=k.min(i) {
        let term = binom * i128::from(values[i - j]);
        acc += if j % 2 == 0 { term } else { -term };
        binom = binom * (k - j) as i128 / (j + 1) as i128;
    }
    acc as i64
}

/// Number of zero differences that ends the computation, and the extra
/// degrees computed to confirm them.
const ZERO_RUN: usize = 3;
const CONFIRM: usize = 2;

pub fn hilbert_h_vector(c: &Configuration) -> Result<HilbertData> {
    hilbert_h_vector_with(c, DEFAULT_HILBERT_MAX_DEGREE, DEFAULT_POINT_BUDGET)
}

/// Streams slice sizes degree by degree until three consecutive zero
/// differences hold for two more degrees, the degree cap is reached, or a
/// slice outgrows the point budget.
pub fn hilbert_h_vector_with(c: &Configuration, max_degree: u32, point_budget: u64) -> Result<HilbertData> {
    let krull_dim = rank(&c.matrix);
    let cols = int_columns(c)?;
    // wide matrices may not pack up to the cap; lower it until they do
    let mut cap = max_degree.max(1);
    let codec = loop {
        match Codec::new(&cols, c.matrix.rows(), cap) {
            Ok(codec) => break codec,
            Err(e) if cap == 1 => return Err(e),
            Err(_) => cap /= 2,
        }
    };
    let max_degree = cap.min(max_degree);
    let shifts: Vec<i128> = cols.iter().map(|col| codec.shift(col)).collect();
    let mut slice = vec![codec.encode(&vec![0; c.matrix.rows()]).expect("zero is in range")];
    let mut values: Vec<u64> = vec![1];
    let mut h: Vec<i64> = vec![1];
    let mut stopped_by = None;
    let mut stabilized = false;
    let settled = |h: &[i64]| -> bool {
        let need = ZERO_RUN + CONFIRM;
        h.len() > need && h[h.len() - need..].iter().all(|&x| x == 0)
    };
    while !settled(&h) {
        if values.len() as u32 > max_degree {
            stopped_by = Some(format!("degree cap {max_degree}"));
            break;
        }
        match next_slice(&slice, &shifts, point_budget) {
            Ok(next) => slice = next,
            Err(e @ Error::ResourceLimit { .. }) => {
                stopped_by = Some(e.to_string());
                break;
            }
            Err(e) => return Err(e),
        }
        values.push(slice.len() as u64);
        h.push(h_entry(&values, krull_dim, values.len() - 1));
        log::debug!("H({}) = {}", values.len() - 1, slice.len());
    }
    if stopped_by.is_none() {
        stabilized = true;
    }
    while h.len() > 1 && h.last() == Some(&0) {
        h.pop();
    }
    Ok(HilbertData {
        values,
        krull_dim,
        h_vector: h,
        stabilized,
        stopped_by,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Normality {
    /// No violation in degrees `1..=up_to`; not a proof of normality.
    Normal { up_to: u32 },
    /// The lexicographically smallest violation at the smallest degree.
    NonNormal { witness: Vec<BigInt>, degree: u32 },
}

impl Normality {
    pub fn is_normal(&self) -> bool {
        matches!(self, Normality::Normal { .. })
    }

    pub fn to_json(&self) -> Value {
        match self {
            Normality::Normal { up_to } => json!({ "verdict": "normal", "up_to": up_to }),
            Normality::NonNormal { witness, degree } => json!({
                "verdict": "nonnormal",
                "witness": witness.iter().map(bigint_json).collect::<Vec<_>>(),
                "degree": degree,
            }),
        }
    }
}

/// Compares lattice points of `N Conv(A)` in `ZA` against the monoid's
/// degree-`N` slice.
struct NormalityScan {
    polytope: PolytopeRep,
    lattice: crate::intlin::HnfResult,
    options: SemigroupOptions,
}

impl NormalityScan {
    fn new(c: &Configuration, options: SemigroupOptions) -> Result<Self> {
        let points = c.matrix.columns();
        let origin = points
            .first()
            .cloned()
            .ok_or_else(|| Error::Invalid("configuration has no columns".into()))?;
        let polytope = PolytopeRep::with_origin(points, &origin, options.limits)?;
        Ok(NormalityScan {
            polytope,
            lattice: hnf(&c.matrix),
            options,
        })
    }

    /// Points of `ZA ∩ n Conv(A)` missing from `slice`, sorted.
    fn violations(&self, slices: &DegreeSlices, n: u32) -> Result<Vec<Vec<BigInt>>> {
        let sf = &self.polytope.standard;
        let nb = BigInt::from(n);
        let base: Vec<BigInt> = sf.origin.iter().map(|o| o * &nb).collect();
        let mut out = Vec::new();
        for w in self.polytope.dilated_lattice_points(u64::from(n), self.options.scan_budget)? {
            let mut x = base.clone();
            for (c, col) in w.iter().zip(&sf.basis) {
                for (xi, bi) in x.iter_mut().zip(col) {
                    *xi += c * bi;
                }
            }
            if !self.lattice.contains(&x) {
                continue;
            }
            let xi: Vec<i64> = x
                .iter()
                .map(ToPrimitive::to_i64)
                .collect::<Option<_>>()
                .ok_or(Error::Overflow("lattice point coordinates"))?;
            if !slices.contains(n, &xi) {
                out.push(x);
            }
        }
        out.sort();
        Ok(out)
    }
}

pub fn normality_check(c: &Configuration, max_degree: u32) -> Result<Normality> {
    normality_check_with(c, max_degree, SemigroupOptions::default())
}

pub fn normality_check_with(c: &Configuration, max_degree: u32, options: SemigroupOptions) -> Result<Normality> {
    let scan = NormalityScan::new(c, options)?;
    let slices = degree_slices_with(c, max_degree, options.point_budget)?;
    for n in 1..=max_degree {
        if let Some(w) = scan.violations(&slices, n)?.into_iter().next() {
            return Ok(Normality::NonNormal { witness: w, degree: n });
        }
    }
    Ok(Normality::Normal { up_to: max_degree })
}

/// Every point of `ZA ∩ n Conv(A)` outside `Z≥0 A`, sorted.
pub fn violations_at_degree(c: &Configuration, n: u32, options: SemigroupOptions) -> Result<Vec<Vec<BigInt>>> {
    let scan = NormalityScan::new(c, options)?;
    let slices = degree_slices_with(c, n, options.point_budget)?;
    scan.violations(&slices, n)
}

/// Writes `alpha` as a sum of `n` columns, listed in column order. Each
/// step keeps the remainder inside the monoid, so the search never reaches
/// a dead end.
pub fn decompose(c: &Configuration, alpha: &[BigInt], n: u32) -> Result<Vec<Vec<BigInt>>> {
    if alpha.len() != c.matrix.rows() {
        return Err(Error::Invalid("alpha has the wrong length".into()));
    }
    if c.degree_of(alpha) != BigRational::from_integer(BigInt::from(n)) {
        return Err(Error::Invalid(format!("alpha does not have degree {n}")));
    }
    let a: Vec<i64> = alpha
        .iter()
        .map(ToPrimitive::to_i64)
        .collect::<Option<_>>()
        .ok_or(Error::Overflow("alpha"))?;
    let slices = degree_slices(c, n)?;
    if !slices.contains(n, &a) {
        return Err(Error::NotDecomposable { degree: n as usize });
    }
    // columns in matrix order, so the center of `A±` is tried first
    let mut cols: Vec<Vec<i64>> = Vec::new();
    for col in c.matrix.to_i64_columns().ok_or(Error::Overflow("matrix entries"))? {
        if !cols.contains(&col) {
            cols.push(col);
        }
    }
    let mut rest = a;
    let mut out = Vec::with_capacity(n as usize);
    let mut start = 0;
    for k in (1..=n).rev() {
        let (j, col) = cols
            .iter()
            .enumerate()
            .skip(start)
            .find(|(_, col)| {
                let r: Vec<i64> = rest.iter().zip(col.iter()).map(|(x, y)| x - y).collect();
                slices.contains(k - 1, &r)
            })
            .expect("a monoid point of degree k has a column summand");
        for (x, y) in rest.iter_mut().zip(col) {
            *x -= y;
        }
        out.push(col.iter().map(|&v| BigInt::from(v)).collect());
        start = j;
    }
    debug_assert!(rest.iter().all(|x| x.is_zero()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configs::central_symmetrize;
    use crate::intlin::IntMatrix;

    fn config(rows: &[&[i64]]) -> Configuration {
        Configuration::new(IntMatrix::from_rows(rows).unwrap()).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn codec_round_trips() {
        let cols = vec![vec![1, -2], vec![0, 3]];
        let codec = Codec::new(&cols, 2, 4).unwrap();
        for x in [[0, 0], [4, -8], [-0, 12], [3, 5]] {
            assert_eq!(codec.decode(codec.encode(&x).unwrap()), x.to_vec());
        }
        assert!(codec.encode(&[5, 0]).is_none());
        let k = codec.encode(&[1, 1]).unwrap();
        assert_eq!((k as i128 + codec.shift(&[1, -2])) as u128, codec.encode(&[2, -1]).unwrap());
    }

    #[test]
    fn single_column_slices() {
        let s = degree_slices(&config(&[&[2], &[1]]), 3).unwrap();
        assert_eq!(s.slice(3), vec![vec![6, 3]]);
        assert_eq!(s.slice(0), vec![vec![0, 0]]);
    }

    #[test]
    fn identity_csc_slices_and_h_vector() {
        let csc = central_symmetrize(&IntMatrix::from_rows(&[&[1, 0], &[0, 1]]).unwrap());
        let c = csc.configuration();
        assert_eq!(degree_slices(&c, 1).unwrap().len(1), 5);
        let h = hilbert_h_vector(&c).unwrap();
        assert_eq!(h.h_vector, vec![1, 2, 1]);
        assert!(h.stabilized && h.is_palindromic());
        assert_eq!(h.krull_dim, 3);
    }

    #[test]
    fn polynomial_ring_has_trivial_h_vector() {
        let h = hilbert_h_vector(&config(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap();
        assert_eq!(h.h_vector, vec![1]);
        assert_eq!(h.values[..4], [1, 3, 6, 10]);
    }

    #[test]
    fn point_budget_stops_hilbert() {
        let csc = central_symmetrize(&IntMatrix::from_rows(&[&[1, 0], &[0, 1]]).unwrap());
        let h = hilbert_h_vector_with(&csc.configuration(), 64, 10).unwrap();
        assert!(!h.stabilized);
        assert!(h.stopped_by.is_some());
    }

    #[test]
    fn nonnormal_example() {
        let csc = central_symmetrize(&IntMatrix::from_rows(&[&[2, 1, 0], &[0, 1, 2]]).unwrap());
        let v = normality_check(&csc.configuration(), 2).unwrap();
        assert_eq!(
            v,
            Normality::NonNormal {
                witness: big(&[-1, 1, 1]),
                degree: 1
            }
        );
        let all = violations_at_degree(&csc.configuration(), 1, SemigroupOptions::default()).unwrap();
        assert!(all.contains(&big(&[1, -1, 1])));
    }

    #[test]
    fn normal_example() {
        let csc = central_symmetrize(&IntMatrix::from_rows(&[&[1, 0], &[0, 1]]).unwrap());
        assert_eq!(
            normality_check(&csc.configuration(), 4).unwrap(),
            Normality::Normal { up_to: 4 }
        );
    }

    #[test]
    fn decompositions() {
        let csc = central_symmetrize(&IntMatrix::from_rows(&[&[1, 0], &[0, 1]]).unwrap());
        let c = csc.configuration();
        assert_eq!(decompose(&c, &big(&[1, 0, 1]), 1).unwrap(), vec![big(&[1, 0, 1])]);
        assert_eq!(
            decompose(&c, &big(&[0, 0, 2]), 2).unwrap(),
            vec![big(&[0, 0, 1]), big(&[0, 0, 1])]
        );
        let parts = decompose(&c, &big(&[2, -1, 3]), 3).unwrap();
        assert_eq!(parts.len(), 3);
        assert!(matches!(
            decompose(&c, &big(&[3, 0, 2]), 2),
            Err(Error::NotDecomposable { degree: 2 })
        ));
    }
}
