//! Facets of a full-dimensional polytope by the double description method
//! on the homogenized cone, in exact integer arithmetic.
//!
//! A facet `<n, x> <= b` of `Conv(P)` is an extreme ray `(-n, b)` of the
//! dual cone `{ a : <a, (p, 1)> >= 0 for all p }`. Rays are added one
//! constraint at a time; two rays are combined only when they are adjacent,
//! tested combinatorially on their sets of tight constraints.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::intlin::{determinant, IntMatrix};

#[derive(Clone)]
struct Ray {
    a: Vec<BigInt>,
    /// Tight constraints among those processed, as a bitset.
    zeros: Vec<u64>,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    v
}

fn set_bit(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn popcount(a: &[u64]) -> usize {
    a.iter().map(|w| w.count_ones() as usize).sum()
}

/// Indices of `dim + 1` affinely independent points, greedily in order.
pub(crate) fn affine_basis(points: &[Vec<BigInt>]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (i, p) in points.iter().enumerate() {
        let mut h = p.clone();
        h.push(1.into());
        let mut trial = rows.clone();
        trial.push(h);
        let m = IntMatrix::from_rows(&trial).expect("uniform rows");
        if crate::intlin::rank(&m) == trial.len() {
            rows = trial;
            chosen.push(i);
        }
    }
    chosen
}

/// Facets `(normal, rhs)` with `<normal, p> <= rhs` for all points, each
/// primitive, sorted. The points must affinely span `Z^dim`.
pub(crate) fn facets_dd(points: &[Vec<BigInt>], dim: usize) -> Result<Vec<(Vec<BigInt>, BigInt)>> {
    let cons: Vec<Vec<BigInt>> = points
        .iter()
        .map(|p| {
            let mut h = p.clone();
            h.push(1.into());
            h
        })
        .collect();
    let m = cons.len();
    let words = m.div_ceil(64);
    let base = affine_basis(points);
    if base.len() != dim + 1 {
        return Err(Error::Invalid("points are not full-dimensional".into()));
    }
    if dim == 0 {
        return Ok(Vec::new());
    }

    // initial simplicial cone: rays are the columns of the adjugate
    let v0 = IntMatrix::from_rows(&base.iter().map(|&i| cons[i].clone()).collect::<Vec<_>>())
        .expect("square");
    let det = determinant(&v0);
    let sign = if det.is_negative() { -1 } else { 1 };
    let mut rays: Vec<Ray> = Vec::new();
    for j in 0..=dim {
        // ray a_j with <cons[base[i]], a_j> = 0 for i != j, > 0 for i = j
        let mut a = Vec::with_capacity(dim + 1);
        for c in 0..=dim {
            // cofactor C_{j,c} of v0
            let rows: Vec<usize> = (0..=dim).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..=dim).filter(|&k| k != c).collect();
            let minor = if rows.is_empty() {
                BigInt::from(1)
            } else {
                determinant(&v0.select_rows(&rows).select_columns(&cols))
            };
            let s = if (j + c) % 2 == 0 { sign } else { -sign };
            a.push(minor * s);
        }
        rays.push(Ray {
            a: primitive(a),
            zeros: vec![0; words],
        });
    }
    let mut order: Vec<usize> = base.clone();
    order.extend((0..m).filter(|i| !base.contains(i)));
    for r in rays.iter_mut() {
        for &i in &base {
            if dot(&r.a, &cons[i]).is_zero() {
                set_bit(&mut r.zeros, i);
            }
        }
    }

    for &k in &order[dim + 1..] {
        let vals: Vec<BigInt> = rays.iter().map(|r| dot(&r.a, &cons[k])).collect();
        let (mut pos, mut neg, mut zero) = (Vec::new(), Vec::new(), Vec::new());
        for (idx, v) in vals.iter().enumerate() {
            if v.is_positive() {
                pos.push(idx);
            } else if v.is_negative() {
                neg.push(idx);
            } else {
                zero.push(idx);
            }
        }
        let mut next: Vec<Ray> = Vec::new();
        for &p in &pos {
            next.push(rays[p].clone());
        }
        for &z in &zero {
            let mut r = rays[z].clone();
            set_bit(&mut r.zeros, k);
            next.push(r);
        }
        for &p in &pos {
            for &q in &neg {
                let common: Vec<u64> = rays[p]
                    .zeros
                    .iter()
                    .zip(&rays[q].zeros)
                    .map(|(x, y)| x & y)
                    .collect();
                if popcount(&common) + 2 < dim + 1 {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(t, r)| t == p || t == q || !subset(&common, &r.zeros));
                if !adjacent {
                    continue;
                }
                let (vp, vq) = (&vals[p], &vals[q]);
                let a: Vec<BigInt> = rays[q]
                    .a
                    .iter()
                    .zip(&rays[p].a)
                    .map(|(x, y)| vp * x - vq * y)
                    .collect();
                let mut zeros = common;
                set_bit(&mut zeros, k);
                next.push(Ray {
                    a: primitive(a),
                    zeros,
                });
            }
        }
        rays = next;
    }

    let mut out: Vec<(Vec<BigInt>, BigInt)> = rays
        .into_iter()
        .map(|r| {
            let rhs = r.a[dim].clone();
            let normal = r.a[..dim].iter().map(|x| -x).collect();
            (normal, rhs)
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}
