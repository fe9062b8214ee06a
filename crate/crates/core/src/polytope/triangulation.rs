use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use super::{hull, PolytopeLimits, StandardForm};
use crate::configs::CscMatrix;
use crate::error::{Error, Result};
use crate::intlin::{bigint_json, determinant, lattice_index, rank};
use crate::toric::TermOrder;

/// Maximal simplices as sorted column indices, with normalized volumes
/// `[Z A± : Z sigma]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    pub simplices: Vec<Vec<usize>>,
    pub volumes: Vec<BigInt>,
}

impl Triangulation {
    pub fn total_volume(&self) -> BigInt {
        self.volumes.iter().sum()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "simplices": self.simplices,
            "volumes": self.volumes.iter().map(bigint_json).collect::<Vec<_>>(),
            "total_volume": bigint_json(&self.total_volume()),
        })
    }
}

pub fn pulling_triangulation(csc: &CscMatrix, order: &TermOrder) -> Result<Triangulation> {
    pulling_triangulation_with(csc, order, PolytopeLimits::default())
}

/// Pulling triangulation of `Conv(A±)`: pull the smallest point under the
/// order's variable ranking, then recurse on the facets that miss it.
pub fn pulling_triangulation_with(
    csc: &CscMatrix,
    order: &TermOrder,
    limits: PolytopeLimits,
) -> Result<Triangulation> {
    let n = csc.matrix.cols();
    if order.nvars() != n {
        return Err(Error::Invalid(format!(
            "order has {} variables but A± has {n} columns",
            order.nvars()
        )));
    }
    if !order.is_revlex() || order.smallest_variable() != Some(0) {
        return Err(Error::PreconditionViolated(
            "pulling needs a revlex order with the center variable smallest".into(),
        ));
    }
    let d = csc.base.rows();
    let r = rank(&csc.base);
    if r < d {
        return Err(Error::RankDeficient { rank: r, rows: d });
    }
    if n > limits.max_points {
        return Err(Error::SizeLimit {
            what: "polytope points",
            actual: n as u64,
            limit: limits.max_points as u64,
        });
    }
    if d > limits.max_dim {
        return Err(Error::SizeLimit {
            what: "polytope dimension",
            actual: d as u64,
            limit: limits.max_dim as u64,
        });
    }
    let columns = csc.matrix.columns();
    let mut rank_of = vec![0; n];
    for (pos, &v) in order.variable_order.iter().enumerate() {
        rank_of[v] = pos;
    }
    // drop repeated columns, keeping the one pulled first
    let mut by_rank: Vec<usize> = order.variable_order.clone();
    let mut kept: Vec<usize> = Vec::new();
    for v in by_rank.drain(..) {
        if let Some(&w) = kept.iter().find(|&&w| columns[w] == columns[v]) {
            log::warn!("column {v} repeats column {w}; ignored for triangulation");
        } else {
            kept.push(v);
        }
    }
    kept.sort_unstable();

    let mut simplices = Vec::new();
    pull(&columns, &rank_of, kept, d, &mut Vec::new(), &mut simplices)?;
    for s in simplices.iter_mut() {
        s.sort_unstable();
    }
    simplices.sort();

    let index = lattice_index(&csc.matrix)
        .finite()
        .cloned()
        .expect("full row rank");
    let volumes = simplices
        .iter()
        .map(|s| determinant(&csc.matrix.select_columns(s)).abs() / &index)
        .collect();
    Ok(Triangulation { simplices, volumes })
}

fn pull(
    columns: &[Vec<BigInt>],
    rank_of: &[usize],
    face: Vec<usize>,
    dim: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) -> Result<()> {
    if face.len() == dim + 1 {
        let mut s = prefix.clone();
        s.extend(&face);
        out.push(s);
        return Ok(());
    }
    let v = *face
        .iter()
        .min_by_key(|&&i| rank_of[i])
        .expect("nonempty face");
    let points: Vec<Vec<BigInt>> = face.iter().map(|&i| columns[i].clone()).collect();
    let sf = StandardForm::new(&points, &columns[v])?;
    debug_assert_eq!(sf.dim(), dim);
    let coords: Vec<Vec<BigInt>> = points
        .iter()
        .map(|p| sf.apply(p).expect("face points lie in the span"))
        .collect();
    let facets = hull::facets_dd(&coords, dim)?;
    prefix.push(v);
    for (normal, rhs) in facets {
        let slack = |w: &Vec<BigInt>| -> BigInt {
            &rhs - normal.iter().zip(w).map(|(a, x)| a * x).sum::<BigInt>()
        };
        let tight: Vec<usize> = face
            .iter()
            .zip(&coords)
            .filter(|(_, w)| slack(w).is_zero())
            .map(|(&i, _)| i)
            .collect();
        if !tight.contains(&v) {
            pull(columns, rank_of, tight, dim - 1, prefix, out)?;
        }
    }
    prefix.pop();
    Ok(())
}
