mod common;

use std::collections::BTreeSet;

use common::{big, brute_force_facets, mat, unimodular_corpus};
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;
use symconf::configs::*;
use symconf::graphs::*;
use symconf::intlin::{hnf, is_unimodular, IntMatrix};
use symconf::semigroup::*;

fn columns_i64(a: &IntMatrix) -> Vec<Vec<i64>> {
    a.to_i64_columns().unwrap()
}

/// Distinct sums of `n` columns with repetition.
fn brute_force_slice(a: &IntMatrix, n: usize) -> BTreeSet<Vec<i64>> {
    let cols = columns_i64(a);
    (0..cols.len())
        .combinations_with_replacement(n)
        .map(|pick| {
            let mut s = vec![0; a.rows()];
            for j in pick {
                for (x, c) in s.iter_mut().zip(&cols[j]) {
                    *x += c;
                }
            }
            s
        })
        .collect()
}

/// Membership in `n Conv(A)` for a configuration whose last row is all ones
/// and whose other rows have full rank, by brute-force facets.
fn in_dilated_hull(a: &IntMatrix, x: &[BigInt], n: i64) -> bool {
    let d = a.rows() - 1;
    let points: Vec<Vec<BigInt>> = a.columns().into_iter().map(|c| c[..d].to_vec()).collect();
    brute_force_facets(&points, d).iter().all(|(normal, rhs)| {
        let s: BigInt = normal.iter().zip(x).map(|(a, b)| a * b).sum();
        s <= rhs * BigInt::from(n)
    })
}

fn two_triangles() -> Graph {
    Graph::from_edges(&[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (4, 6)]).unwrap()
}

fn rho_pm(g: &Graph) -> Configuration {
    central_symmetrize(&graph_config_rho(g).unwrap()).configuration()
}

#[test]
fn slices_are_iterated_minkowski_sums() {
    let cases = [
        central_symmetrize(&mat(&[&[2, 1, 0], &[0, 1, 2]])).configuration(),
        central_symmetrize(&mat(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])).configuration(),
        rho_pm(&wheel(4)),
    ];
    for c in cases {
        let slices = degree_slices(&c, 3).unwrap();
        for n in 0..=3u32 {
            let expected = brute_force_slice(&c.matrix, n as usize);
            let got: BTreeSet<Vec<i64>> = slices.slice(n).into_iter().collect();
            assert_eq!(got, expected, "degree {n}");
            assert!(expected.iter().all(|x| slices.contains(n, x)));
        }
        let h = hilbert_h_vector(&c).unwrap();
        for n in 0..=3usize {
            assert_eq!(h.values[n], brute_force_slice(&c.matrix, n).len() as u64);
        }
    }
}

#[test]
fn unimodular_corpus_is_normal_and_gorenstein() {
    for a in unimodular_corpus(40, 83) {
        let c = central_symmetrize(&a).configuration();
        let bound = 2 * c.matrix.rows() as u32;
        assert_eq!(normality_check(&c, bound).unwrap(), Normality::Normal { up_to: bound }, "{a:?}");
        let delta = is_unimodular(&a).unwrap().delta;
        if delta.is_one() {
            let h = hilbert_h_vector(&c).unwrap();
            assert!(h.stabilized && h.is_palindromic(), "{a:?} {:?}", h.h_vector);
        }
    }
}

#[test]
fn wheel_h_vectors() {
    let h4 = hilbert_h_vector(&rho_pm(&wheel(4))).unwrap();
    assert_eq!(h4.h_vector, vec![1, 8, 14, 8, 1]);
    assert_eq!(h4.krull_dim, 5);
    let h5 = hilbert_h_vector(&rho_pm(&wheel(5))).unwrap();
    assert_eq!(h5.h_vector, vec![1, 11, 32, 32, 11, 1]);
    assert!(h4.stabilized && h5.stabilized);
}

#[test]
fn normality_passes_to_the_configuration_itself() {
    // K[A] is a combinatorial pure subring of K[A±]
    for n in 3..=5 {
        for g in connected_graph_classes(n).unwrap() {
            let rho = graph_config_rho(&g).unwrap();
            let plus = central_symmetrize(&rho).configuration();
            if normality_check(&plus, 2).unwrap().is_normal() {
                let c = Configuration::new(rho).unwrap();
                assert!(normality_check(&c, 2).unwrap().is_normal(), "{g:?}");
            }
        }
    }
    let g = two_triangles();
    assert!(normality_check(&Configuration::new(graph_config_rho(&g).unwrap()).unwrap(), 3)
        .unwrap()
        .is_normal());
}

#[test]
fn gorenstein_converse_example() {
    let c = central_symmetrize(&mat(&[&[0, 1, 1, 1], &[1, 0, 1, -1]])).configuration();
    assert!(!is_unimodular(&mat(&[&[0, 1, 1, 1], &[1, 0, 1, -1]])).unwrap().unimodular);
    let bound = 2 * c.matrix.rows() as u32;
    assert_eq!(normality_check(&c, bound).unwrap(), Normality::Normal { up_to: bound });
    let h = hilbert_h_vector(&c).unwrap();
    assert!(h.stabilized && h.is_palindromic(), "{:?}", h.h_vector);
}

/// Checks a claimed witness without the library's scan: in `ZA`, in
/// `n Conv(A)`, and not a sum of `n` columns.
fn assert_witness(a: &IntMatrix, x: &[i64], n: usize) {
    let xb = big(x);
    assert!(hnf(a).contains(&xb), "{x:?} not in ZA");
    assert!(in_dilated_hull(a, &xb, n as i64), "{x:?} not in the dilated hull");
    assert!(!brute_force_slice(a, n).contains(x), "{x:?} is a sum of columns");
    for m in 1..n {
        let lower: Vec<Vec<BigInt>> = violations_at_degree(&Configuration::new(a.clone()).unwrap(), m as u32, SemigroupOptions::default()).unwrap();
        assert!(lower.is_empty(), "violation below degree {n}");
    }
}

#[test]
fn nonnormality_witnesses() {
    let opts = SemigroupOptions::default();

    let c = central_symmetrize(&mat(&[&[2, 1, 0], &[0, 1, 2]])).configuration();
    assert_witness(&c.matrix, &[1, -1, 1], 1);
    assert!(violations_at_degree(&c, 1, opts).unwrap().contains(&big(&[1, -1, 1])));
    assert!(matches!(normality_check(&c, 4).unwrap(), Normality::NonNormal { degree: 1, .. }));
    let base = Configuration::new(mat(&[&[2, 1, 0], &[0, 1, 2]])).unwrap();
    assert_eq!(normality_check(&base, 6).unwrap(), Normality::Normal { up_to: 6 });

    let tetra = Configuration::new(mat(&[
        &[0, 1, 1, 0, -1],
        &[0, 1, 0, 1, -1],
        &[0, 0, 1, 1, -1],
        &[1, 1, 1, 1, 1],
    ]))
    .unwrap();
    assert_witness(&tetra.matrix, &[1, 1, 1, 2], 2);
    assert_eq!(
        normality_check(&tetra, 4).unwrap(),
        Normality::NonNormal { witness: big(&[1, 1, 1, 2]), degree: 2 }
    );

    let c = rho_pm(&two_triangles());
    let alpha = [1, 1, 1, -1, -1, -1, 3];
    assert_witness(&c.matrix, &alpha, 3);
    assert!(violations_at_degree(&c, 3, opts).unwrap().contains(&big(&alpha)));
    assert!(matches!(normality_check(&c, 3).unwrap(), Normality::NonNormal { degree: 3, .. }));
    assert!(decompose(&c, &big(&alpha), 3).is_err());
}

#[test]
fn decomposition_of_a_wheel_point() {
    let c = rho_pm(&wheel(4));
    let cols = columns_i64(&c.matrix);
    let alpha: Vec<i64> = (0..c.matrix.rows()).map(|i| cols[1][i] + cols[4][i] + cols[12][i]).collect();
    let parts = decompose(&c, &big(&alpha), 3).unwrap();
    assert_eq!(parts.len(), 3);
    let sum: Vec<BigInt> = (0..c.matrix.rows()).map(|i| parts.iter().map(|p| &p[i]).sum()).collect();
    assert_eq!(sum, big(&alpha));
    let all = c.matrix.columns();
    assert!(parts.iter().all(|p| all.contains(p)));
    assert!(brute_force_slice(&c.matrix, 3).contains(&alpha));
}
