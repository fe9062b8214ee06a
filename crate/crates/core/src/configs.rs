//! Configurations, the centrally symmetric construction `A±`, and the
//! incidence configurations of graphs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::intlin::{determinant, rank, IntMatrix};

/// A matrix whose columns all lie on the hyperplane `<c, x> = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    pub matrix: IntMatrix,
    pub certificate: Vec<BigRational>,
}

impl Configuration {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        let certificate = is_configuration(&matrix).ok_or(Error::NotConfiguration)?;
        Ok(Configuration {
            matrix,
            certificate,
        })
    }

    /// Degree of an integer vector in the grading given by the certificate.
    pub fn degree_of(&self, v: &[BigInt]) -> BigRational {
        self.certificate
            .iter()
            .zip(v)
            .map(|(c, x)| c * BigRational::from_integer(x.clone()))
            .sum()
    }
}

/// Solves `<c, a_j> = 1` for all columns exactly. Free unknowns are set to
/// zero, so the certificate is the one with the fewest nonzero pivots.
pub fn is_configuration(a: &IntMatrix) -> Option<Vec<BigRational>> {
    let (d, n) = (a.rows(), a.cols());
    // rows of the system are columns of `a`, augmented with 1
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|j| {
            let mut row: Vec<BigRational> = (0..d)
                .map(|i| BigRational::from_integer(a.get(i, j).clone()))
                .collect();
            row.push(BigRational::one());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..d {
        let Some(p) = (r..n).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..n {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for k in 0..=d {
                    let sub = &f * &m[r][k];
                    m[i][k] -= sub;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[d].is_zero()) {
        return None;
    }
    let mut c = vec![BigRational::zero(); d];
    for (i, &col) in pivots.iter().enumerate() {
        c[col] = m[i][d].clone();
    }
    Some(c)
}

/// Role of a column of `A±`; indices refer to columns of the base matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ColumnRole {
    Center,
    Plus(usize),
    Minus(usize),
}

/// The centrally symmetric configuration
///
/// ```text
///        [ 0  A  -A ]
/// A±  =  [ 1  1   1 ]
/// ```
///
/// with columns ordered center, plus block, minus block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CscMatrix {
    pub base: IntMatrix,
    pub matrix: IntMatrix,
    pub column_roles: Vec<ColumnRole>,
}

impl CscMatrix {
    pub fn base_cols(&self) -> usize {
        self.base.cols()
    }

    /// Column index of a role.
    pub fn column_of(&self, role: ColumnRole) -> usize {
        let n = self.base.cols();
        match role {
            ColumnRole::Center => 0,
            ColumnRole::Plus(i) => 1 + i,
            ColumnRole::Minus(i) => 1 + n + i,
        }
    }

    /// Configuration with certificate `e_{d+1}`.
    pub fn configuration(&self) -> Configuration {
        let d = self.base.rows();
        let mut certificate = vec![BigRational::zero(); d + 1];
        certificate[d] = BigRational::one();
        Configuration {
            matrix: self.matrix.clone(),
            certificate,
        }
    }
}

pub fn central_symmetrize(a: &IntMatrix) -> CscMatrix {
    let (d, n) = (a.rows(), a.cols());
    let mut m = IntMatrix::zeros_unchecked(d + 1, 2 * n + 1);
    for j in 0..=2 * n {
        m.set(d, j, BigInt::one());
    }
    for i in 0..d {
        for j in 0..n {
            let v = a.get(i, j);
            m.set(i, 1 + j, v.clone());
            m.set(i, 1 + n + j, -v);
        }
    }
    let mut column_roles = vec![ColumnRole::Center];
    column_roles.extend((0..n).map(ColumnRole::Plus));
    column_roles.extend((0..n).map(ColumnRole::Minus));
    CscMatrix {
        base: a.clone(),
        matrix: m,
        column_roles,
    }
}

fn incidence(g: &Graph, sign: i32) -> Result<IntMatrix> {
    if g.edges().is_empty() {
        return Err(Error::Invalid("graph has no edges".into()));
    }
    let mut m = IntMatrix::zeros_unchecked(g.vertex_count(), g.edges().len());
    for (k, &(i, j)) in g.edges().iter().enumerate() {
        m.set(i - 1, k, BigInt::one());
        m.set(j - 1, k, BigInt::from(sign));
    }
    Ok(m)
}

/// Columns `e_i + e_j`, one per edge in edge order.
pub fn graph_config_rho(g: &Graph) -> Result<IntMatrix> {
    incidence(g, 1)
}

/// Columns `e_i - e_j` (`i < j`), one per edge in edge order.
pub fn graph_config_mu(g: &Graph) -> Result<IntMatrix> {
    incidence(g, -1)
}

/// Deletes the redundant row of `A_G` for a bipartite graph: the row of the
/// highest-numbered vertex in the second part of the breadth-first
/// bipartition.
pub fn delete_bipartite_row(g: &Graph, a: &IntMatrix) -> Result<IntMatrix> {
    let parts = g.bipartition().ok_or(Error::NotBipartite)?;
    let drop = *parts
        .part2
        .iter()
        .max()
        .ok_or_else(|| Error::Invalid("second part is empty".into()))?;
    let keep: Vec<usize> = (0..a.rows()).filter(|&i| i != drop - 1).collect();
    Ok(a.select_rows(&keep))
}

/// `A_G` with the redundant row removed when `G` is bipartite; this is the
/// full-row-rank form used for unimodularity questions on connected graphs.
pub fn graph_config_rho_reduced(g: &Graph) -> Result<IntMatrix> {
    let a = graph_config_rho(g)?;
    if g.bipartition().is_some() {
        delete_bipartite_row(g, &a)
    } else {
        Ok(a)
    }
}

/// The two maximal minors of `A±` that differ by a factor of two,
/// witnessing that `A±` is never unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorPair {
    /// Columns of the base matrix forming a nonsingular square block `A'`.
    pub base_columns: Vec<usize>,
    pub base_det: BigInt,
    /// Center plus the plus-columns of `A'`; minor `(-1)^d det A'`.
    pub first_columns: Vec<usize>,
    pub first_minor: BigInt,
    /// The minus- and plus-column of the first column of `A'`, then the
    /// remaining plus-columns; minor `(-1)^d 2 det A'`.
    pub second_columns: Vec<usize>,
    pub second_minor: BigInt,
}

pub fn non_unimodularity_witness(a: &IntMatrix) -> Result<MinorPair> {
    let d = a.rows();
    let r = rank(a);
    if r < d {
        return Err(Error::RankDeficient { rank: r, rows: d });
    }
    let mut found = None;
    crate::intlin::for_each_maximal_minor(a, |cols, det| {
        if det.is_zero() {
            true
        } else {
            found = Some((cols.to_vec(), det.clone()));
            false
        }
    });
    let (cols, base_det) = found.expect("full rank matrix has a nonzero minor");
    let csc = central_symmetrize(a);
    let mut first_columns = vec![0];
    first_columns.extend(cols.iter().map(|&c| csc.column_of(ColumnRole::Plus(c))));
    let mut second_columns = vec![csc.column_of(ColumnRole::Minus(cols[0]))];
    second_columns.extend(cols.iter().map(|&c| csc.column_of(ColumnRole::Plus(c))));
    let first_minor = determinant(&csc.matrix.select_columns(&first_columns));
    let second_minor = determinant(&csc.matrix.select_columns(&second_columns));
    debug_assert_eq!(first_minor.abs(), base_det.abs());
    debug_assert_eq!(second_minor.abs(), base_det.abs() * 2);
    Ok(MinorPair {
        base_columns: cols,
        base_det,
        first_columns,
        first_minor,
        second_columns,
        second_minor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn certificates() {
        let path_mu = IntMatrix::from_rows(&[[1, 0], [-1, 1], [0, -1]]).unwrap();
        assert_eq!(
            is_configuration(&path_mu).unwrap(),
            vec![q(2, 1), q(1, 1), q(0, 1)]
        );
        let tri_mu = IntMatrix::from_rows(&[[1, 1, 0], [-1, 0, 1], [0, -1, -1]]).unwrap();
        assert!(is_configuration(&tri_mu).is_none());
        let tri_rho = IntMatrix::from_rows(&[[1, 1, 0], [1, 0, 1], [0, 1, 1]]).unwrap();
        assert_eq!(is_configuration(&tri_rho).unwrap(), vec![q(1, 2); 3]);
    }

    #[test]
    fn symmetrize_layout() {
        let a = IntMatrix::identity(2);
        let c = central_symmetrize(&a);
        let want =
            IntMatrix::from_rows(&[[0, 1, 0, -1, 0], [0, 0, 1, 0, -1], [1, 1, 1, 1, 1]]).unwrap();
        assert_eq!(c.matrix, want);
        assert_eq!(c.column_roles[3], ColumnRole::Minus(0));
        let one = central_symmetrize(&IntMatrix::from_rows(&[[2]]).unwrap());
        assert_eq!(
            one.matrix,
            IntMatrix::from_rows(&[[0, 2, -2], [1, 1, 1]]).unwrap()
        );
        let cfg = c.configuration();
        assert_eq!(is_configuration(&cfg.matrix).unwrap(), cfg.certificate);
    }

    #[test]
    fn minor_pair_for_identity() {
        let w = non_unimodularity_witness(&IntMatrix::identity(2)).unwrap();
        assert_eq!(w.first_minor, BigInt::from(1));
        assert_eq!(w.second_minor, BigInt::from(2));
        assert_eq!(w.second_columns, vec![3, 1, 2]);
    }
}
