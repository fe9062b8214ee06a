//! The explicit quadratic Gröbner basis of `I_{A±}` for the signed
//! incidence configuration of a chordal bipartite graph satisfying
//! condition (*).

use super::{GroebnerBasis, Monomial, TermOrder};
use crate::configs::{central_symmetrize, graph_config_mu, ColumnRole, CscMatrix};
use crate::error::{Error, Result};
use crate::graphs::{is_chordal_bipartite, satisfies_star_condition, Bipartition, Graph};
use crate::toric::Binomial;

/// The binomial families, the reduced basis they interreduce to, the
/// configuration they live on and the variable names `z`, `x_{i,k}`,
/// `y_{i,k}` indexed by column of `A±`.
///
/// The families can repeat a lead (`x_il y_jl` arises for every `k < l`),
/// so they form a Gröbner basis that is reduced only after dropping those
/// repeats and reducing trails.
#[derive(Clone, Debug)]
pub struct Theorem42Basis {
    pub families: GroebnerBasis,
    pub basis: GroebnerBasis,
    pub csc: CscMatrix,
    pub names: Vec<String>,
}

/// Builds the binomial families
///
/// ```text
/// x_ik y_ik - z^2
/// x_il x_jk - x_ik x_jl      x_il y_jl - x_ik y_jk      y_jl x_jk - x_ik y_il
/// x_jl y_jk - y_ik x_il      y_il x_jl - y_ik x_jk      y_il y_jk - y_ik y_jl
/// ```
///
/// the second group over all `i < j`, `k < l` with the four edges
/// `{i,k'}, {i,l'}, {j,k'}, {j,l'}` present. Here `x_ik` is the column
/// `e_i - e_k'` of `A±` and `y_ik` its negative; labels come from `parts`.
/// The order is revlex with `z < y_11 < x_11 < y_12 < ... < x_pq` over the
/// existing edges.
pub fn theorem42_basis(g: &Graph, parts: &Bipartition) -> Result<Theorem42Basis> {
    if !g.is_connected() {
        return Err(Error::PreconditionViolated("graph is not connected".into()));
    }
    parts.validate(g).map_err(|e| match e {
        Error::NotBipartite => Error::PreconditionViolated("graph is not bipartite".into()),
        other => other,
    })?;
    if !is_chordal_bipartite(g)? {
        return Err(Error::PreconditionViolated(
            "graph has a chordless cycle of length at least 6".into(),
        ));
    }
    if !satisfies_star_condition(g, parts)? {
        return Err(Error::PreconditionViolated(
            "labelling violates condition (*)".into(),
        ));
    }
    let (p, q) = (parts.part1.len(), parts.part2.len());
    let a = graph_config_mu(g)?;
    let csc = central_symmetrize(&a);
    let nv = csc.matrix.cols();

    // edge index and x/y columns per label pair
    let mut x = vec![vec![None; q]; p];
    let mut y = vec![vec![None; q]; p];
    let mut names = vec![String::new(); nv];
    names[0] = "z".to_string();
    for (e, &(u, w)) in g.edges().iter().enumerate() {
        let (i, k) = match (
            parts.part1.iter().position(|&v| v == u),
            parts.part2.iter().position(|&v| v == w),
        ) {
            (Some(i), Some(k)) => (i, k),
            _ => (
                parts.part1.iter().position(|&v| v == w).expect("validated"),
                parts.part2.iter().position(|&v| v == u).expect("validated"),
            ),
        };
        // column e_u - e_w is the plus column; x_ik is e_i - e_k'
        let part1_first = parts.part1[i] == u;
        let (xc, yc) = if part1_first {
            (ColumnRole::Plus(e), ColumnRole::Minus(e))
        } else {
            (ColumnRole::Minus(e), ColumnRole::Plus(e))
        };
        let (xc, yc) = (csc.column_of(xc), csc.column_of(yc));
        x[i][k] = Some(xc);
        y[i][k] = Some(yc);
        names[xc] = format!("x_{{{},{}}}", i + 1, k + 1);
        names[yc] = format!("y_{{{},{}}}", i + 1, k + 1);
    }

    let mut smallest_to_largest = vec![0];
    for i in 0..p {
        for k in 0..q {
            if let (Some(xc), Some(yc)) = (x[i][k], y[i][k]) {
                smallest_to_largest.push(yc);
                smallest_to_largest.push(xc);
            }
        }
    }
    let order = TermOrder::revlex_with_ordering(smallest_to_largest)?;

    let mono = |vars: &[usize]| {
        let mut e = vec![0u32; nv];
        for &v in vars {
            e[v] += 1;
        }
        Monomial::new(e)
    };
    let mut elements = Vec::new();
    for i in 0..p {
        for k in 0..q {
            if let (Some(xc), Some(yc)) = (x[i][k], y[i][k]) {
                elements.push(Binomial::new(mono(&[xc, yc]), mono(&[0, 0])));
            }
        }
    }
    for i in 0..p {
        for j in i + 1..p {
            for k in 0..q {
                for l in k + 1..q {
                    let (Some(xik), Some(xil), Some(xjk), Some(xjl)) =
                        (x[i][k], x[i][l], x[j][k], x[j][l])
                    else {
                        continue;
                    };
                    let (yik, yil, yjk, yjl) = (
                        y[i][k].unwrap(),
                        y[i][l].unwrap(),
                        y[j][k].unwrap(),
                        y[j][l].unwrap(),
                    );
                    for (lead, trail) in [
                        ([xil, xjk], [xik, xjl]),
                        ([xil, yjl], [xik, yjk]),
                        ([yjl, xjk], [xik, yil]),
                        ([xjl, yjk], [yik, xil]),
                        ([yil, xjl], [yik, xjk]),
                        ([yil, yjk], [yik, yjl]),
                    ] {
                        elements.push(Binomial::new(mono(&lead), mono(&trail)));
                    }
                }
            }
        }
    }
    let families = GroebnerBasis {
        elements,
        order,
        reduced: false,
    };
    let basis = families.interreduce();
    Ok(Theorem42Basis {
        families,
        basis,
        csc,
        names,
    })
}
