//! Exact geometry of lattice polytopes `Conv(P)` given by generating points:
//! standard forms, facets, vertices, duals, Fano verdicts and pulling
//! triangulations.

mod hull;
mod triangulation;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::configs::CscMatrix;
use crate::error::{Error, Result};
use crate::intlin::{bigint_json, canonical_lattice_basis, hnf, kernel_basis, rank, unit_vector, HnfResult, IntMatrix};

pub use triangulation::{pulling_triangulation, pulling_triangulation_with, Triangulation};

pub const DEFAULT_MAX_DIM: usize = 8;
pub const DEFAULT_MAX_POINTS: usize = 60;
/// Default cap on bounding-box candidates in lattice-point scans.
pub const DEFAULT_SCAN_BUDGET: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolytopeLimits {
    pub max_dim: usize,
    pub max_points: usize,
}

impl Default for PolytopeLimits {
    fn default() -> Self {
        PolytopeLimits {
            max_dim: DEFAULT_MAX_DIM,
            max_points: DEFAULT_MAX_POINTS,
        }
    }
}

/// Affine dimension of the points: the rank of their differences.
pub fn affine_dim(points: &[Vec<BigInt>]) -> usize {
    let Some(first) = points.first() else {
        return 0;
    };
    let diffs: Vec<Vec<BigInt>> = points[1..].iter().map(|p| sub(p, first)).collect();
    if diffs.is_empty() {
        return 0;
    }
    rank(&IntMatrix::from_rows(&diffs).expect("points share a length"))
}

fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// An affine lattice isomorphism `psi(x) = w` with `x = origin + basis * w`,
/// from the lattice points of an affine span onto `Z^dim`. The basis is the
/// canonical basis of `span ∩ Z^m`, so a full-dimensional input with origin
/// zero gives the identity, and `A±` centered at `e_{d+1}` gives deletion of
/// the last coordinate.
#[derive(Clone, Debug)]
pub struct StandardForm {
    pub origin: Vec<BigInt>,
    /// Basis columns in `Z^m`.
    pub basis: Vec<Vec<BigInt>>,
    h: Option<HnfResult>,
}

impl StandardForm {
    /// Standard form of the affine span of `points`, centered at `origin`.
    pub fn new(points: &[Vec<BigInt>], origin: &[BigInt]) -> Result<Self> {
        let m = origin.len();
        if points.iter().any(|p| p.len() != m) {
            return Err(Error::Invalid("points and origin differ in length".into()));
        }
        let diffs: Vec<Vec<BigInt>> = points
            .iter()
            .map(|p| sub(p, origin))
            .filter(|d| d.iter().any(|x| !x.is_zero()))
            .collect();
        let basis = if diffs.is_empty() {
            Vec::new()
        } else {
            let annihilator = kernel_basis(&IntMatrix::from_rows(&diffs)?);
            if annihilator.is_empty() {
                canonical_lattice_basis(&(0..m).map(|i| unit_vector(m, i)).collect::<Vec<_>>(), m)
            } else {
                let saturated = kernel_basis(&IntMatrix::from_rows(&annihilator)?);
                canonical_lattice_basis(&saturated, m)
            }
        };
        if basis.len() != affine_dim(points) {
            return Err(Error::Invalid("origin is outside the affine span of the points".into()));
        }
        let h = (!basis.is_empty()).then(|| hnf(&IntMatrix::from_columns(&basis).expect("uniform")));
        Ok(StandardForm {
            origin: origin.to_vec(),
            basis,
            h,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.origin.len()
    }

    /// Coordinates of `x`, or `None` if `x` is not a lattice point of the span.
    pub fn apply(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        let d = sub(x, &self.origin);
        match &self.h {
            None => d.iter().all(Zero::is_zero).then(Vec::new),
            Some(h) => h.solve_in_h(&d),
        }
    }

    /// Coordinates of a rational point, or `None` off the affine span.
    pub fn apply_rational(&self, x: &[BigRational]) -> Option<Vec<BigRational>> {
        let den = x.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
        let scaled: Vec<BigInt> = x
            .iter()
            .zip(&self.origin)
            .map(|(q, o)| (q * BigRational::from_integer(den.clone())).to_integer() - o * &den)
            .collect();
        let shifted: Vec<BigInt> = scaled.iter().zip(&self.origin).map(|(s, o)| s + o).collect();
        // the span lattice is saturated, so an integral vector of the span is
        // an integral combination of the basis
        let w = self.apply(&shifted)?;
        Some(w.into_iter().map(|c| BigRational::new(c, den.clone())).collect())
    }

    pub fn lift(&self, w: &[BigInt]) -> Vec<BigInt> {
        let mut x = self.origin.clone();
        for (c, col) in w.iter().zip(&self.basis) {
            for (xi, bi) in x.iter_mut().zip(col) {
                *xi += c * bi;
            }
        }
        x
    }

    pub fn is_identity(&self) -> bool {
        let m = self.ambient_dim();
        self.dim() == m
            && self.origin.iter().all(Zero::is_zero)
            && self.basis.iter().enumerate().all(|(i, c)| c == &unit_vector(m, i))
    }

    /// True when the map is deletion of the last coordinate.
    pub fn is_last_coordinate_deletion(&self) -> bool {
        let m = self.ambient_dim();
        self.dim() + 1 == m && self.basis.iter().enumerate().all(|(i, c)| c == &unit_vector(m, i))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "origin": self.origin.iter().map(bigint_json).collect::<Vec<_>>(),
            "basis": self.basis.iter().map(|c| c.iter().map(bigint_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// The inequality `<normal, w> <= rhs` in standard-form coordinates, with
/// `(normal, rhs)` primitive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub rhs: BigInt,
}

impl Facet {
    /// `rhs - <normal, w>`, nonnegative exactly on the facet's half-space.
    pub fn slack(&self, w: &[BigInt]) -> BigInt {
        &self.rhs - dot(&self.normal, w)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "normal": self.normal.iter().map(bigint_json).collect::<Vec<_>>(),
            "rhs": bigint_json(&self.rhs),
        })
    }
}

/// `Conv(points)` with its standard form and exact facets.
#[derive(Clone, Debug)]
pub struct PolytopeRep {
    /// Generators in ambient coordinates, possibly with non-vertices.
    pub points: Vec<Vec<BigInt>>,
    pub standard: StandardForm,
    /// Generators in standard-form coordinates.
    pub coords: Vec<Vec<BigInt>>,
    pub dim: usize,
    pub facets: Vec<Facet>,
}

impl PolytopeRep {
    /// Origin zero when the points are full-dimensional, else the first point.
    pub fn new(points: Vec<Vec<BigInt>>) -> Result<Self> {
        Self::with_limits(points, PolytopeLimits::default())
    }

    pub fn with_limits(points: Vec<Vec<BigInt>>, limits: PolytopeLimits) -> Result<Self> {
        let first = points
            .first()
            .ok_or_else(|| Error::Invalid("a polytope needs at least one point".into()))?;
        let m = first.len();
        let origin = if affine_dim(&points) == m {
            vec![BigInt::zero(); m]
        } else {
            first.clone()
        };
        Self::with_origin(points, &origin, limits)
    }

    /// Polytope in the standard form centered at `origin`, which must be an
    /// integer point of the affine span.
    pub fn with_origin(points: Vec<Vec<BigInt>>, origin: &[BigInt], limits: PolytopeLimits) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Invalid("a polytope needs at least one point".into()));
        }
        if points.len() > limits.max_points {
            return Err(Error::SizeLimit {
                what: "polytope points",
                actual: points.len() as u64,
                limit: limits.max_points as u64,
            });
        }
        let standard = StandardForm::new(&points, origin)?;
        let dim = standard.dim();
        if dim > limits.max_dim {
            return Err(Error::SizeLimit {
                what: "polytope dimension",
                actual: dim as u64,
                limit: limits.max_dim as u64,
            });
        }
        let coords: Vec<Vec<BigInt>> = points
            .iter()
            .map(|p| standard.apply(p).expect("points lie in their own span"))
            .collect();
        let facets = hull::facets_dd(&coords, dim)?
            .into_iter()
            .map(|(normal, rhs)| Facet { normal, rhs })
            .collect();
        Ok(PolytopeRep {
            points,
            standard,
            coords,
            dim,
            facets,
        })
    }

    /// Facets in standard-form coordinates.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Indices of the generators lying on a facet.
    pub fn facet_points(&self, facet: &Facet) -> Vec<usize> {
        (0..self.coords.len())
            .filter(|&i| facet.slack(&self.coords[i]).is_zero())
            .collect()
    }

    /// Indices of generators that are vertices, first occurrence only.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for (i, w) in self.coords.iter().enumerate() {
            if out.iter().any(|&j| &self.coords[j] == w) {
                continue;
            }
            let tight: Vec<Vec<BigInt>> = self
                .facets
                .iter()
                .filter(|f| f.slack(w).is_zero())
                .map(|f| f.normal.clone())
                .collect();
            let full = if self.dim == 0 {
                true
            } else {
                !tight.is_empty() && rank(&IntMatrix::from_rows(&tight).expect("uniform")) == self.dim
            };
            if full {
                out.push(i);
            }
        }
        out
    }

    /// Strict interior membership (relative to the affine span) of a point
    /// in ambient coordinates.
    pub fn interior_contains(&self, x: &[BigRational]) -> bool {
        self.standard_point(x)
            .is_some_and(|w| self.facets.iter().all(|f| rational_slack(f, &w).is_positive()))
    }

    /// Closed membership of a point in ambient coordinates.
    pub fn contains(&self, x: &[BigRational]) -> bool {
        self.standard_point(x)
            .is_some_and(|w| self.facets.iter().all(|f| !rational_slack(f, &w).is_negative()))
    }

    fn standard_point(&self, x: &[BigRational]) -> Option<Vec<BigRational>> {
        if x.len() != self.standard.ambient_dim() {
            return None;
        }
        self.standard.apply_rational(x)
    }

    /// True when the standard-form origin is an interior point.
    pub fn origin_interior(&self) -> bool {
        self.facets.iter().all(|f| f.rhs.is_positive())
    }

    /// Vertices `normal / rhs` of the dual polytope, one per facet. Requires
    /// the origin in the interior.
    pub fn dual_vertices(&self) -> Result<Vec<Vec<BigRational>>> {
        if !self.origin_interior() {
            return Err(Error::PreconditionViolated(
                "the origin is not an interior point".into(),
            ));
        }
        Ok(self
            .facets
            .iter()
            .map(|f| {
                f.normal
                    .iter()
                    .map(|c| BigRational::new(c.clone(), f.rhs.clone()))
                    .collect()
            })
            .collect())
    }

    /// Lattice points of `n * Conv` in standard-form coordinates (the
    /// dilation is about the origin), in lexicographic order.
    pub fn dilated_lattice_points(&self, n: u64, scan_budget: u64) -> Result<Vec<Vec<BigInt>>> {
        let nb = BigInt::from(n);
        let mut lo = Vec::with_capacity(self.dim);
        let mut hi = Vec::with_capacity(self.dim);
        for k in 0..self.dim {
            let (mn, mx) = self
                .coords
                .iter()
                .map(|w| &w[k])
                .fold((None::<&BigInt>, None::<&BigInt>), |(a, b), v| {
                    (Some(a.map_or(v, |a| a.min(v))), Some(b.map_or(v, |b| b.max(v))))
                });
            let to_i64 = |v: BigInt| {
                v.to_i64().ok_or(Error::Overflow("lattice point scan bound"))
            };
            lo.push(to_i64(mn.expect("nonempty") * &nb)?);
            hi.push(to_i64(mx.expect("nonempty") * &nb)?);
        }
        let size = lo
            .iter()
            .zip(&hi)
            .try_fold(1u64, |acc, (l, h)| acc.checked_mul((h - l + 1) as u64));
        match size {
            Some(s) if s <= scan_budget => {}
            s => {
                return Err(Error::SizeLimit {
                    what: "lattice point scan box",
                    actual: s.unwrap_or(u64::MAX),
                    limit: scan_budget,
                })
            }
        }
        let facets: Vec<(Vec<i64>, i64)> = self
            .facets
            .iter()
            .map(|f| {
                let normal = f.normal.iter().map(ToPrimitive::to_i64).collect::<Option<Vec<_>>>();
                let rhs = (&f.rhs * &nb).to_i64();
                normal.zip(rhs).ok_or(Error::Overflow("facet coefficients"))
            })
            .collect::<Result<_>>()?;
        let mut out = Vec::new();
        if self.dim == 0 {
            out.push(Vec::new());
            return Ok(out);
        }
        let mut w = lo.clone();
        loop {
            let inside = facets.iter().all(|(nm, b)| {
                let s: i64 = nm.iter().zip(&w).map(|(a, x)| a * x).sum();
                s <= *b
            });
            if inside {
                out.push(w.iter().map(|&x| BigInt::from(x)).collect());
            }
            let mut k = self.dim;
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                if w[k] < hi[k] {
                    w[k] += 1;
                    for j in k + 1..self.dim {
                        w[j] = lo[j];
                    }
                    break;
                }
            }
        }
    }

    /// Fano and Gorenstein-Fano verdicts with reasons.
    pub fn fano_verdict(&self) -> Result<FanoVerdict> {
        self.fano_verdict_with(DEFAULT_SCAN_BUDGET)
    }

    pub fn fano_verdict_with(&self, scan_budget: u64) -> Result<FanoVerdict> {
        let mut reasons = Vec::new();
        let origin_interior = self.origin_interior();
        if !origin_interior {
            reasons.push(FanoReason::OriginNotInterior);
        }
        let interior: Vec<Vec<BigInt>> = self
            .dilated_lattice_points(1, scan_budget)?
            .into_iter()
            .filter(|w| self.facets.iter().all(|f| f.slack(w).is_positive()))
            .collect();
        let extra: Vec<Vec<BigInt>> = interior
            .into_iter()
            .filter(|w| w.iter().any(|x| !x.is_zero()))
            .map(|w| self.standard.lift(&w))
            .collect();
        if !extra.is_empty() {
            reasons.push(FanoReason::ExtraInteriorPoints(extra));
        }
        let fano = reasons.is_empty();
        let dual_vertices = if origin_interior {
            self.dual_vertices()?
        } else {
            Vec::new()
        };
        let non_integral: Vec<usize> = dual_vertices
            .iter()
            .enumerate()
            .filter(|(_, v)| v.iter().any(|q| !q.is_integer()))
            .map(|(i, _)| i)
            .collect();
        if !non_integral.is_empty() {
            reasons.push(FanoReason::NonIntegralDualVertices(non_integral));
        }
        Ok(FanoVerdict {
            fano,
            gorenstein_fano: origin_interior && reasons.is_empty(),
            origin_interior,
            dual_vertices,
            reasons,
        })
    }

    pub fn to_json(&self) -> Value {
        let vec_json = |v: &Vec<BigInt>| v.iter().map(bigint_json).collect::<Vec<_>>();
        json!({
            "dimension": self.dim,
            "points": self.points.iter().map(vec_json).collect::<Vec<_>>(),
            "vertices": self.vertices().iter().map(|&i| vec_json(&self.points[i])).collect::<Vec<_>>(),
            "standard_form": self.standard.to_json(),
            "facets": self.facets.iter().map(Facet::to_json).collect::<Vec<_>>(),
        })
    }
}

fn rational_slack(f: &Facet, w: &[BigRational]) -> BigRational {
    let s: BigRational = f
        .normal
        .iter()
        .zip(w)
        .map(|(c, x)| x * BigRational::from_integer(c.clone()))
        .sum();
    BigRational::from_integer(f.rhs.clone()) - s
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FanoReason {
    OriginNotInterior,
    /// Interior lattice points other than the origin, in ambient coordinates.
    ExtraInteriorPoints(Vec<Vec<BigInt>>),
    /// Facets whose dual vertex is not integral.
    NonIntegralDualVertices(Vec<usize>),
}

impl FanoReason {
    pub fn to_json(&self) -> Value {
        match self {
            FanoReason::OriginNotInterior => json!({ "kind": "origin_not_interior" }),
            FanoReason::ExtraInteriorPoints(pts) => json!({
                "kind": "extra_interior_points",
                "points": pts.iter().map(|p| p.iter().map(bigint_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
            }),
            FanoReason::NonIntegralDualVertices(idx) => json!({
                "kind": "non_integral_dual_vertices",
                "facets": idx,
            }),
        }
    }
}

#[derive(Clone, Debug)]
pub struct FanoVerdict {
    /// The origin is the unique interior lattice point.
    pub fano: bool,
    /// Fano with an integral dual polytope.
    pub gorenstein_fano: bool,
    pub origin_interior: bool,
    pub dual_vertices: Vec<Vec<BigRational>>,
    pub reasons: Vec<FanoReason>,
}

impl FanoVerdict {
    pub fn to_json(&self) -> Value {
        json!({
            "fano": self.fano,
            "gorenstein_fano": self.gorenstein_fano,
            "origin_interior": self.origin_interior,
            "dual_vertices": self.dual_vertices.iter().map(|v| v.iter().map(|q| q.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "reasons": self.reasons.iter().map(FanoReason::to_json).collect::<Vec<_>>(),
        })
    }
}

/// `Conv(A±)` in the standard form centered at the center column.
pub fn csc_polytope(csc: &CscMatrix) -> Result<PolytopeRep> {
    csc_polytope_with(csc, PolytopeLimits::default())
}

pub fn csc_polytope_with(csc: &CscMatrix, limits: PolytopeLimits) -> Result<PolytopeRep> {
    let points = csc.matrix.columns();
    let center = points[0].clone();
    PolytopeRep::with_origin(points, &center, limits)
}

/// True iff the origin is interior and every dual vertex is integral.
pub fn is_gorenstein_fano(p: &PolytopeRep) -> Result<bool> {
    Ok(p.fano_verdict()?.gorenstein_fano)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configs::central_symmetrize;

    fn pts(v: &[&[i64]]) -> Vec<Vec<BigInt>> {
        v.iter().map(|p| p.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    fn q(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn square_has_four_facets_and_is_gorenstein_fano() {
        let p = PolytopeRep::new(pts(&[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1]])).unwrap();
        assert!(p.standard.is_identity());
        assert_eq!(p.dim, 2);
        assert_eq!(p.facets.len(), 4);
        assert!(p.interior_contains(&q(&[0, 0])));
        assert!(!p.interior_contains(&q(&[1, 1])));
        assert!(p.contains(&q(&[1, 1])));
        assert_eq!(p.vertices(), vec![0, 1, 2, 3]);
        assert!(is_gorenstein_fano(&p).unwrap());
    }

    #[test]
    fn affine_dims() {
        assert_eq!(affine_dim(&pts(&[&[3, 4]])), 0);
        assert_eq!(affine_dim(&pts(&[&[0, 0, 1], &[1, 0, 1], &[2, 0, 1]])), 1);
    }

    #[test]
    fn identity_csc_is_last_coordinate_deletion() {
        let csc = central_symmetrize(&mat(&[&[1, 0], &[0, 1]]));
        let p = csc_polytope(&csc).unwrap();
        assert!(p.standard.is_last_coordinate_deletion());
        assert_eq!(p.coords, pts(&[&[0, 0], &[1, 0], &[0, 1], &[-1, 0], &[0, -1]]));
        assert_eq!(p.facets.len(), 4);
        assert_eq!(p.vertices(), vec![1, 2, 3, 4]);
        assert!(p.interior_contains(&q(&[0, 0, 1])));
        assert!(!p.interior_contains(&q(&[1, 0, 1])));
        assert!(!p.interior_contains(&q(&[0, 0, 2])));
    }

    #[test]
    fn lower_dimensional_span_round_trips() {
        // a triangle in the plane x + y + z = 1
        let points = pts(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let p = PolytopeRep::new(points.clone()).unwrap();
        assert_eq!(p.dim, 2);
        for x in -2..=2 {
            for y in -2..=2 {
                let w = vec![BigInt::from(x), BigInt::from(y)];
                let lifted = p.standard.lift(&w);
                assert_eq!(p.standard.apply(&lifted), Some(w));
            }
        }
        assert_eq!(p.standard.apply(&[1.into(), 1.into(), 1.into()]), None);
        assert_eq!(p.facets.len(), 3);
    }

    #[test]
    fn fano_examples() {
        let a = central_symmetrize(&mat(&[&[1, 1], &[1, -1]]));
        let v = csc_polytope(&a).unwrap().fano_verdict().unwrap();
        assert!(v.gorenstein_fano && v.fano);
        let off = PolytopeRep::new(pts(&[&[1, 1], &[2, 1], &[1, 2]])).unwrap();
        let v = off.fano_verdict().unwrap();
        assert!(!v.gorenstein_fano);
        assert_eq!(v.reasons[0], FanoReason::OriginNotInterior);
    }

    #[test]
    fn dilated_points_of_square() {
        let p = PolytopeRep::new(pts(&[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1]])).unwrap();
        assert_eq!(p.dilated_lattice_points(1, 100).unwrap().len(), 9);
        assert_eq!(p.dilated_lattice_points(2, 100).unwrap().len(), 25);
        assert!(p.dilated_lattice_points(10, 100).is_err());
    }

    #[test]
    fn size_limits() {
        let limits = PolytopeLimits { max_dim: 1, max_points: 60 };
        let err = PolytopeRep::with_limits(pts(&[&[0, 0], &[1, 0], &[0, 1]]), limits).unwrap_err();
        assert!(matches!(err, Error::SizeLimit { .. }));
    }
}
