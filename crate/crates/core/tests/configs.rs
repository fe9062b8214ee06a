mod common;

use common::{det_cofactor, mat, random_bipartite, random_corpus, rng};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use symconf::configs::*;
use symconf::graphs::{complete, cycle, path, wheel, Graph};
use symconf::intlin::{is_unimodular, IntMatrix};
use symconf::toric::kernel_lattice;

fn minor(m: &IntMatrix, cols: &[usize]) -> BigInt {
    let rows: Vec<Vec<BigInt>> = (0..m.rows()).map(|i| cols.iter().map(|&j| m.get(i, j).clone()).collect()).collect();
    det_cofactor(&rows)
}

#[test]
fn symmetrized_matrices_are_never_unimodular() {
    for a in random_corpus(200, 29) {
        let csc = central_symmetrize(&a);
        assert!(!is_unimodular(&csc.matrix).unwrap().unimodular, "{a}");
        let w = non_unimodularity_witness(&a).unwrap();
        let base = minor(&a, &w.base_columns);
        assert!(!base.is_zero());
        assert_eq!(minor(&csc.matrix, &w.first_columns).abs(), base.abs());
        assert_eq!(minor(&csc.matrix, &w.second_columns).abs(), base.abs() * 2);
        assert_eq!(w.first_minor, minor(&csc.matrix, &w.first_columns));
        assert_eq!(w.second_minor, minor(&csc.matrix, &w.second_columns));
    }
}

#[test]
fn symmetrized_layout() {
    let csc = central_symmetrize(&mat(&[&[2, 1, 0], &[0, 1, 2]]));
    assert_eq!(
        csc.matrix,
        mat(&[&[0, 2, 1, 0, -2, -1, 0], &[0, 0, 1, 2, 0, -1, -2], &[1, 1, 1, 1, 1, 1, 1]])
    );
    assert_eq!(csc.column_roles[0], ColumnRole::Center);
    assert_eq!(csc.column_of(ColumnRole::Minus(1)), 5);
    let c = csc.configuration();
    for j in 0..7 {
        assert_eq!(c.degree_of(&csc.matrix.column(j)), BigRational::from_integer(1.into()));
    }
}

#[test]
fn configuration_certificates() {
    assert!(is_configuration(&graph_config_mu(&complete(3)).unwrap()).is_none());
    let c = is_configuration(&graph_config_mu(&path(3)).unwrap()).unwrap();
    let a = graph_config_mu(&path(3)).unwrap();
    for j in 0..a.cols() {
        let s: BigRational = (0..a.rows()).map(|i| &c[i] * BigRational::from_integer(a.get(i, j).clone())).sum();
        assert_eq!(s, BigRational::from_integer(1.into()));
    }
    assert!(is_configuration(&mat(&[&[1, 2, 3]])).is_none());
    assert!(Configuration::new(graph_config_rho(&wheel(5)).unwrap()).is_ok());
}

/// Every square submatrix has determinant in {-1, 0, 1}.
fn totally_unimodular(a: &IntMatrix) -> bool {
    use itertools::Itertools;
    for k in 1..=a.rows().min(a.cols()) {
        for rows in (0..a.rows()).combinations(k) {
            for cols in (0..a.cols()).combinations(k) {
                let m: Vec<Vec<BigInt>> = rows.iter().map(|&i| cols.iter().map(|&j| a.get(i, j).clone()).collect()).collect();
                if det_cofactor(&m).abs() > BigInt::from(1) {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn directed_incidence_is_totally_unimodular() {
    for g in [complete(4), wheel(5), cycle(5)] {
        assert!(totally_unimodular(&graph_config_mu(&g).unwrap()));
    }
    assert!(!totally_unimodular(&graph_config_rho(&cycle(3)).unwrap()));
}

#[test]
fn bipartite_kernels_agree() {
    let mut r = rng(31);
    for _ in 0..50 {
        let g = random_bipartite(&mut r, 4);
        let rho = central_symmetrize(&graph_config_rho(&g).unwrap());
        let mu = central_symmetrize(&graph_config_mu(&g).unwrap());
        assert_eq!(kernel_lattice(&rho.matrix), kernel_lattice(&mu.matrix), "{g}");
    }
}

#[test]
fn bipartite_kernels_agree_after_reorienting() {
    // a relabeled bipartite graph whose edges do not all point from the
    // first part to the second
    let g = Graph::new(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
    let parts = g.bipartition().unwrap();
    let rho = central_symmetrize(&graph_config_rho(&g).unwrap());
    let mu = central_symmetrize(&graph_config_mu(&g).unwrap());
    let n = g.edges().len();
    let mut perm: Vec<usize> = (0..=2 * n).collect();
    for (k, &(i, _)) in g.edges().iter().enumerate() {
        if !parts.part1.contains(&i) {
            perm.swap(1 + k, 1 + n + k);
        }
    }
    let mu_swapped = mu.matrix.select_columns(&perm);
    assert_eq!(kernel_lattice(&rho.matrix), kernel_lattice(&mu_swapped));
    assert_ne!(kernel_lattice(&rho.matrix), kernel_lattice(&mu.matrix));
}

#[test]
fn bipartite_row_deletion() {
    let g = cycle(6);
    let a = graph_config_rho_reduced(&g).unwrap();
    assert_eq!(a.rows(), 5);
    assert!(is_unimodular(&a).unwrap().unimodular);
    assert_eq!(graph_config_rho_reduced(&complete(3)).unwrap().rows(), 3);
    assert!(delete_bipartite_row(&complete(3), &graph_config_rho(&complete(3)).unwrap()).is_err());
}

#[test]
fn gorenstein_examples_deltas() {
    let a = is_unimodular(&mat(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])).unwrap();
    let b = is_unimodular(&mat(&[&[1, 1, 0], &[1, 0, 1], &[1, 1, 1]])).unwrap();
    assert_eq!((a.delta, b.delta), (BigInt::from(2), BigInt::from(1)));
}
