mod common;

use common::{mat, random_corpus, rng, unimodular_corpus};
use rand::Rng;
use symconf::configs::*;
use symconf::graphs::*;
use symconf::intlin::IntMatrix;
use symconf::toric::*;

fn binomial(lead: &[u32], trail: &[u32]) -> Binomial {
    Binomial::new(Monomial::new(lead.to_vec()), Monomial::new(trail.to_vec()))
}

/// Normal form of a monomial by repeated lead replacement, written
/// without the library's reducer.
fn naive_normal_form(u: &[u32], basis: &[Binomial]) -> Vec<u32> {
    let mut u = u.to_vec();
    'outer: loop {
        for b in basis {
            let (l, t) = (b.lead.exponents(), b.trail.exponents());
            if l.iter().zip(&u).all(|(a, x)| a <= x) {
                for k in 0..u.len() {
                    u[k] = u[k] - l[k] + t[k];
                }
                continue 'outer;
            }
        }
        return u;
    }
}

fn image(a: &IntMatrix, u: &[u32]) -> Vec<i64> {
    let cols = a.to_i64_columns().unwrap();
    let mut out = vec![0; a.rows()];
    for (j, &e) in u.iter().enumerate() {
        for (o, c) in out.iter_mut().zip(&cols[j]) {
            *o += c * i64::from(e);
        }
    }
    out
}

/// Monomials of one fiber share a normal form; different fibers do not.
fn assert_normal_forms_separate_fibers(a: &IntMatrix, gb: &GroebnerBasis, degree: u32) {
    use std::collections::HashMap;
    let n = a.cols();
    let mut by_image: HashMap<Vec<i64>, Vec<u32>> = HashMap::new();
    let mut by_form: HashMap<Vec<u32>, Vec<i64>> = HashMap::new();
    let mut e = vec![0u32; n];
    fn rec(k: usize, left: u32, e: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if k + 1 == e.len() {
            e[k] = left;
            f(e);
            return;
        }
        for x in 0..=left {
            e[k] = x;
            rec(k + 1, left - x, e, f);
        }
    }
    if n == 0 {
        return;
    }
    rec(0, degree, &mut e, &mut |u: &[u32]| {
        let img = image(a, u);
        let nf = naive_normal_form(u, &gb.elements);
        if let Some(prev) = by_image.get(&img) {
            assert_eq!(prev, &nf, "fiber {img:?} has two normal forms");
        } else {
            by_image.insert(img.clone(), nf.clone());
        }
        if let Some(prev) = by_form.get(&nf) {
            assert_eq!(prev, &img, "normal form shared across fibers");
        } else {
            by_form.insert(nf, img);
        }
    });
}

#[test]
fn gorenstein_example_ideals() {
    let target = [
        binomial(&[2, 0, 0, 0, 0, 0, 0], &[0, 1, 0, 0, 1, 0, 0]),
        binomial(&[2, 0, 0, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 1, 0]),
        binomial(&[2, 0, 0, 0, 0, 0, 0], &[0, 0, 0, 1, 0, 0, 1]),
    ];
    for a in [mat(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]), mat(&[&[1, 1, 0], &[1, 0, 1], &[1, 1, 1]])] {
        let csc = central_symmetrize(&a);
        let order = TermOrder::grevlex(7);
        let gb = toric_ideal_gb(&csc.matrix, &order).unwrap();
        assert!(same_ideal(&gb, &target).unwrap());
        let generated = binomial_ideal_gb(&target, &order, 100_000).unwrap();
        for b in &gb.elements {
            assert!(generated.contains(b));
        }
        assert_normal_forms_separate_fibers(&csc.matrix, &gb, 3);
    }
}

#[test]
fn tie_graph_ideal_is_one_cubic() {
    let tie = Graph::from_edges(&[(1, 5), (3, 5), (1, 3), (2, 5), (4, 5), (2, 4)]).unwrap();
    let a = graph_config_rho(&tie).unwrap();
    let gb = toric_ideal_gb(&a, &TermOrder::grlex(6)).unwrap();
    assert_eq!(gb.elements, vec![binomial(&[1, 1, 0, 0, 0, 1], &[0, 0, 1, 1, 1, 0])]);
    // the same binomial under grevlex leads with the other term
    let gb = toric_ideal_gb(&a, &TermOrder::grevlex(6)).unwrap();
    assert_eq!(gb.elements, vec![binomial(&[0, 0, 1, 1, 1, 0], &[1, 1, 0, 0, 0, 1])]);
}

#[test]
fn split_apex_preserves_the_toric_ideal() {
    let tie = Graph::from_edges(&[(1, 5), (3, 5), (1, 3), (2, 5), (4, 5), (2, 4)]).unwrap();
    let split = split_apex(&tie, 5).unwrap();
    let a = graph_config_rho(&tie).unwrap();
    let a_split = graph_config_rho(&split).unwrap();
    assert_eq!(kernel_lattice(&a), kernel_lattice(&a_split));
    let order = TermOrder::grevlex(6);
    assert_eq!(toric_ideal_gb(&a, &order).unwrap(), toric_ideal_gb(&a_split, &order).unwrap());
}

#[test]
fn random_corpus_bases_verify() {
    let mut r = rng(59);
    // wide matrices with large entries have reduced bases far beyond test scale
    for a in random_corpus(60, 61).into_iter().filter(|a| a.cols() <= 6 && a.rows() <= 2) {
        let csc = central_symmetrize(&a);
        let base = a.cols();
        let order = if r.random_bool(0.5) { TermOrder::center_smallest(base) } else { TermOrder::grevlex(2 * base + 1) };
        let opts = GbOptions { spair_budget: 20_000, verify: false };
        let gb = match toric_ideal_gb_with(&csc.matrix, &order, &opts) {
            Ok(gb) => gb,
            Err(e) if e.is_resource_limit() => continue,
            Err(e) => panic!("{e}"),
        };
        check_reduced_gb(&gb, &csc.matrix).unwrap();
        assert_normal_forms_separate_fibers(&csc.matrix, &gb, 2);
    }
}

#[test]
fn non_configurations_are_homogenized() {
    let a = mat(&[&[1, 2, 3]]);
    let gb = toric_ideal_gb(&a, &TermOrder::grevlex(3)).unwrap();
    check_reduced_gb(&gb, &a).unwrap();
    assert!(gb.contains(&binomial(&[2, 0, 0], &[0, 1, 0])));
    assert!(gb.contains(&binomial(&[1, 1, 0], &[0, 0, 1])));
}

#[test]
fn unimodular_matrices_give_squarefree_initial_ideals() {
    for a in unimodular_corpus(60, 67) {
        let csc = central_symmetrize(&a);
        let gb = toric_ideal_gb(&csc.matrix, &TermOrder::center_smallest(a.cols())).unwrap();
        assert!(is_squarefree(&initial_ideal(&gb)), "{a}");
    }
}

#[test]
fn squarefree_sweep_up_to_five_vertices() {
    for n in 2..=5 {
        for g in connected_graph_classes(n).unwrap() {
            let e = g.edges().len();
            let mu = central_symmetrize(&graph_config_mu(&g).unwrap());
            let gb = toric_ideal_gb(&mu.matrix, &TermOrder::center_smallest(e)).unwrap();
            assert!(is_squarefree(&initial_ideal(&gb)), "{g}");
            if find_disjoint_odd_cycles(&g).unwrap().is_none() {
                let rho = central_symmetrize(&graph_config_rho(&g).unwrap());
                let gb = toric_ideal_gb(&rho.matrix, &TermOrder::center_smallest(e)).unwrap();
                assert!(is_squarefree(&initial_ideal(&gb)), "{g}");
            }
        }
    }
}

#[test]
fn theorem42_fixtures() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/theorem42_graphs.txt")).unwrap();
    let graphs = parse_graph_list(&text).unwrap();
    assert!(graphs.len() >= 10);
    for g in graphs {
        let parts = g.bipartition().unwrap();
        let t = theorem42_basis(&g, &parts).unwrap();
        check_reduced_gb(&t.basis, &t.csc.matrix).unwrap();
        check_groebner_basis(&t.families, &t.csc.matrix).unwrap();
        let engine = toric_ideal_gb(&t.csc.matrix, &t.basis.order).unwrap();
        assert_eq!(engine.elements, t.basis.elements, "{g}");
        assert!(t.basis.elements.iter().all(|b| b.degree() == 2));
    }
}

#[test]
fn bipartite_bases_coincide() {
    let mut r = rng(71);
    for _ in 0..15 {
        let g = common::random_bipartite(&mut r, 3);
        let e = g.edges().len();
        let rho = central_symmetrize(&graph_config_rho(&g).unwrap());
        let mu = central_symmetrize(&graph_config_mu(&g).unwrap());
        let order = TermOrder::center_smallest(e);
        assert_eq!(toric_ideal_gb(&rho.matrix, &order).unwrap(), toric_ideal_gb(&mu.matrix, &order).unwrap());
    }
}

#[test]
fn generator_degrees_of_the_tie_graph() {
    let tie = Graph::from_edges(&[(1, 5), (3, 5), (1, 3), (2, 5), (4, 5), (2, 4)]).unwrap();
    let a = graph_config_rho(&tie).unwrap();
    let degs = minimal_generator_degrees(&a, 3).unwrap();
    assert_eq!(degs.into_iter().filter(|&(_, c)| c > 0).collect::<Vec<_>>(), vec![(3, 1)]);
    let mu = central_symmetrize(&graph_config_mu(&tie).unwrap());
    let degs = minimal_generator_degrees(&mu.matrix, 3).unwrap();
    assert!(degs.iter().all(|(&d, &c)| d == 2 || c == 0));
    let rho = central_symmetrize(&a);
    let degs = minimal_generator_degrees(&rho.matrix, 3).unwrap();
    assert!(degs[&3] > 0);
}

#[test]
fn budget_exhaustion_reports_a_partial_basis() {
    let a = central_symmetrize(&graph_config_rho(&wheel(5)).unwrap());
    let opts = GbOptions { spair_budget: 5, verify: false };
    match toric_ideal_gb_with(&a.matrix, &TermOrder::center_smallest(8), &opts) {
        Err(symconf::Error::SPairBudget { budget, partial }) => {
            assert_eq!(budget, 5);
            assert!(!partial.reduced);
        }
        other => panic!("expected a budget error, got {other:?}"),
    }
}
