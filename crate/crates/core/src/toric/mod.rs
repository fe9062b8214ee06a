//! Toric ideals: binomials, term orders, Gröbner bases of lattice ideals,
//! initial ideals and generation degrees.
//!
//! The coefficient field never matters for toric ideals, so everything is
//! done on exponent vectors.

mod buchberger;
mod fibers;
mod monomial;
mod order;
mod theorem42;

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

pub use buchberger::reduce_binomial;
pub use fibers::{
    fiber_count, minimal_generator_degrees, minimal_generator_degrees_with,
    DEFAULT_MONOMIAL_BUDGET,
};
pub use monomial::{Binomial, Monomial, MonomialDisplay};
pub use order::{OrderKind, TermOrder};
pub use theorem42::{theorem42_basis, Theorem42Basis};

use self::buchberger::{buchberger, to_binomials, Raw};
use self::fibers::{check_monomial_budget, for_each_monomial, Images};
use crate::configs::is_configuration;
use crate::error::{Error, Result};
use crate::intlin::{canonical_lattice_basis, is_zero_vec, kernel_basis, IntMatrix};

pub const DEFAULT_SPAIR_BUDGET: u64 = 2_000_000;

#[derive(Clone, Debug)]
pub struct GbOptions {
    /// Total number of S-pairs reduced across all phases.
    pub spair_budget: u64,
    /// Run [`check_reduced_gb`] on the result.
    pub verify: bool,
}

impl Default for GbOptions {
    fn default() -> Self {
        GbOptions {
            spair_budget: DEFAULT_SPAIR_BUDGET,
            verify: cfg!(debug_assertions),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub elements: Vec<Binomial>,
    pub order: TermOrder,
    pub reduced: bool,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn max_degree(&self) -> u64 {
        self.elements.iter().map(Binomial::degree).max().unwrap_or(0)
    }

    /// Ideal membership of a binomial, by normal forms of both terms.
    pub fn contains(&self, b: &Binomial) -> bool {
        let (l, t) = reduce_binomial(b, &self.elements);
        l == t
    }

    /// The reduced basis of the same ideal, assuming `self` is a Gröbner
    /// basis: drops elements whose lead is divisible by another lead (ties
    /// keep the first), then replaces each trail by its normal form.
    pub fn interreduce(&self) -> GroebnerBasis {
        let els = &self.elements;
        let mut keep: Vec<Binomial> = Vec::new();
        for (i, b) in els.iter().enumerate() {
            let redundant = els
                .iter()
                .enumerate()
                .any(|(j, o)| j != i && o.lead.divides(&b.lead) && (o.lead != b.lead || j < i));
            if !redundant {
                keep.push(b.clone());
            }
        }
        let mut out: Vec<Binomial> = keep
            .iter()
            .map(|b| {
                let (_, t) = reduce_binomial(&Binomial::new(b.lead.clone(), b.trail.clone()), &keep);
                Binomial::new(b.lead.clone(), t)
            })
            .filter(|b| b.lead != b.trail)
            .collect();
        out.sort_by(|a, b| self.order.cmp(a.lead.exponents(), b.lead.exponents()));
        GroebnerBasis {
            elements: out,
            order: self.order.clone(),
            reduced: true,
        }
    }

    /// One binomial per line, e.g. `x1^2*x3 - x2*x4`.
    pub fn to_text(&self, names: &[String]) -> String {
        let mut s = String::new();
        for b in &self.elements {
            let _ = writeln!(s, "{}", binomial_text(b, names));
        }
        s
    }

    pub fn to_json(&self, names: &[String]) -> Value {
        let elements: Vec<Value> = self
            .elements
            .iter()
            .map(|b| {
                json!({
                    "lead": b.lead.exponents(),
                    "trail": b.trail.exponents(),
                    "text": binomial_text(b, names),
                })
            })
            .collect();
        json!({
            "order": order_json(&self.order),
            "reduced": self.reduced,
            "elements": elements,
        })
    }
}

pub fn binomial_text(b: &Binomial, names: &[String]) -> String {
    format!(
        "{} - {}",
        MonomialDisplay {
            monomial: &b.lead,
            names
        },
        MonomialDisplay {
            monomial: &b.trail,
            names
        }
    )
}

pub fn order_json(order: &TermOrder) -> Value {
    let kind = match order.kind {
        OrderKind::GradedRevLex => "grevlex",
        OrderKind::GradedLex => "grlex",
        OrderKind::RevLexWithOrdering => "revlex",
    };
    json!({ "kind": kind, "smallest_to_largest": order.variable_order })
}

/// `x1, ..., xn`.
pub fn plain_variable_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// `x0, ..., x2n` for a centrally symmetric configuration built from a
/// matrix with `base_cols` columns; `x0` is the center.
pub fn csc_variable_names(base_cols: usize) -> Vec<String> {
    (0..=2 * base_cols).map(|i| format!("x{i}")).collect()
}

/// Canonical basis of `ker A` (see [`kernel_basis`]).
pub fn kernel_lattice(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    kernel_basis(a)
}

fn to_i64(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter().map(|x| x.to_i64().ok_or(Error::Overflow("matrix entries"))).collect()
}

fn split(u: &[i64]) -> Result<(Vec<u32>, Vec<u32>)> {
    let (p, n) = Monomial::split_signed(u)?;
    Ok((p.into_inner(), n.into_inner()))
}

/// `[A 0; 1 ... 1 1]`, a configuration with the same kernel up to the
/// homogenizing coordinate.
fn homogenize(a: &IntMatrix) -> IntMatrix {
    let (d, n) = (a.rows(), a.cols());
    let mut h = IntMatrix::zeros_unchecked(d + 1, n + 1);
    for i in 0..d {
        for j in 0..n {
            h.set(i, j, a.get(i, j).clone());
        }
    }
    for j in 0..=n {
        h.set(d, j, 1.into());
    }
    h
}

/// Row operations bringing a lattice basis to the form `e_c + (terms off
/// the pivot columns)` for one column `c` per row, using only pivots of
/// absolute value one. Returns the new basis and the pivot columns, or
/// `None` if some row has no unit pivot left (or on overflow).
fn unit_pivot_basis(basis: &[Vec<i64>]) -> Option<(Vec<Vec<i64>>, Vec<usize>)> {
    let mut rows = basis.to_vec();
    let r = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    let mut used = vec![false; n];
    let mut pivots = Vec::with_capacity(r);
    for k in 0..r {
        let (i, c) = (k..r)
            .flat_map(|i| (0..n).map(move |c| (i, c)))
            .find(|&(i, c)| !used[c] && rows[i][c].abs() == 1)?;
        rows.swap(k, i);
        if rows[k][c] < 0 {
            for x in rows[k].iter_mut() {
                *x = -*x;
            }
        }
        for i in 0..r {
            let f = rows[i][c];
            if i == k || f == 0 {
                continue;
            }
            for j in 0..n {
                rows[i][j] = rows[i][j].checked_sub(f.checked_mul(rows[k][j])?)?;
            }
        }
        used[c] = true;
        pivots.push(c);
    }
    Some((rows, pivots))
}

/// Graded revlex with `v` smallest and the others in descending index.
fn saturation_order(nvars: usize, v: usize) -> TermOrder {
    let mut perm = vec![v];
    perm.extend((0..nvars).rev().filter(|&k| k != v));
    TermOrder::revlex_with_ordering(perm).expect("valid permutation")
}

fn sort_canonical(raw: &mut Raw, order: &TermOrder) {
    raw.sort_by(|a, b| order.cmp(&a.0, &b.0).then_with(|| order.cmp(&a.1, &b.1)));
}

fn partial_basis(mut raw: Raw, order: &TermOrder, nvars: usize) -> GroebnerBasis {
    for (l, t) in raw.iter_mut() {
        l.truncate(nvars);
        t.truncate(nvars);
        if order.cmp(l, t) == Ordering::Less {
            std::mem::swap(l, t);
        }
    }
    raw.retain(|(l, t)| l != t);
    sort_canonical(&mut raw, order);
    GroebnerBasis {
        elements: to_binomials(raw),
        order: order.clone(),
        reduced: false,
    }
}

pub fn toric_ideal_gb(a: &IntMatrix, order: &TermOrder) -> Result<GroebnerBasis> {
    toric_ideal_gb_with(a, order, &GbOptions::default())
}

/// Reduced Gröbner basis of `I_A`.
///
/// Starts from the lattice basis ideal of `ker A`, saturates it one variable
/// at a time (each step a revlex basis with that variable smallest, after
/// which its powers are divided out), then completes under `order`.
/// Matrices that are not configurations are homogenized first.
pub fn toric_ideal_gb_with(a: &IntMatrix, order: &TermOrder, opts: &GbOptions) -> Result<GroebnerBasis> {
    let n = a.cols();
    if order.nvars() != n {
        return Err(Error::Invalid(format!(
            "order has {} variables, matrix has {n} columns",
            order.nvars()
        )));
    }
    if (0..n).any(|j| is_zero_vec(&a.column(j))) {
        return Err(Error::PreconditionViolated("matrix has a zero column".into()));
    }
    let homogeneous = is_configuration(a).is_some();
    let work = if homogeneous { a.clone() } else { homogenize(a) };
    let nv = work.cols();

    let basis: Vec<Vec<i64>> = kernel_basis(&work)
        .iter()
        .map(|u| to_i64(u))
        .collect::<Result<_>>()?;
    let (basis, unit_columns) = match unit_pivot_basis(&basis) {
        Some((b, cols)) => (b, cols),
        None => (basis, Vec::new()),
    };
    let mut gens: Raw = Vec::new();
    for u in &basis {
        gens.push(split(u)?);
    }
    let mut left = opts.spair_budget;
    let budget_error = |raw: Raw| Error::SPairBudget {
        budget: opts.spair_budget,
        partial: Box::new(partial_basis(raw, order, n)),
    };

    // With an identity block on the columns `unit_columns`, localizing at
    // the remaining variables turns the lattice basis ideal into a Laurent
    // polynomial ring, so saturating those variables already gives I_A.
    let mut saturated = vec![false; nv];
    for &c in &unit_columns {
        saturated[c] = true;
    }
    for v in 0..nv {
        if saturated[v] {
            continue;
        }
        if gens.iter().all(|(l, t)| l[v] == 0 && t[v] == 0) {
            saturated[v] = true;
            continue;
        }
        let sat_order = saturation_order(nv, v);
        let run = buchberger(gens, &sat_order, saturated.clone(), left)?;
        left -= run.spairs;
        if !run.complete {
            return Err(budget_error(run.basis));
        }
        gens = run
            .basis
            .into_iter()
            .map(|(mut l, mut t)| {
                let k = l[v].min(t[v]);
                l[v] -= k;
                t[v] -= k;
                (l, t)
            })
            .collect();
        saturated[v] = true;
        log::debug!("saturated x{v}: {} generators", gens.len());
    }
    if !homogeneous {
        for (l, t) in gens.iter_mut() {
            l.truncate(n);
            t.truncate(n);
        }
        gens.retain(|(l, t)| l != t);
    }

    let run = buchberger(gens, order, vec![true; n], left)?;
    if !run.complete {
        return Err(budget_error(run.basis));
    }
    let gb = GroebnerBasis {
        elements: to_binomials(run.basis),
        order: order.clone(),
        reduced: true,
    };
    if opts.verify {
        if let Err(reason) = check_reduced_gb(&gb, a) {
            return Err(Error::Invalid(format!(
                "computed basis failed verification: {reason}"
            )));
        }
    }
    Ok(gb)
}

/// Gröbner basis of the ideal generated by arbitrary binomials, without
/// any saturation. Used to compare ideals given by explicit generators.
pub fn binomial_ideal_gb(gens: &[Binomial], order: &TermOrder, spair_budget: u64) -> Result<GroebnerBasis> {
    let raw: Raw = gens
        .iter()
        .filter(|b| b.lead != b.trail)
        .map(|b| (b.lead.exponents().to_vec(), b.trail.exponents().to_vec()))
        .collect();
    let run = buchberger(raw, order, vec![false; order.nvars()], spair_budget)?;
    let gb = GroebnerBasis {
        elements: to_binomials(run.basis),
        order: order.clone(),
        reduced: run.complete,
    };
    if !run.complete {
        return Err(Error::SPairBudget {
            budget: spair_budget,
            partial: Box::new(gb),
        });
    }
    Ok(gb)
}

/// True if `gens` and the basis `gb` generate the same ideal: every
/// generator reduces to zero modulo `gb`, and every element of `gb`
/// reduces to zero modulo a Gröbner basis of `gens`.
pub fn same_ideal(gb: &GroebnerBasis, gens: &[Binomial]) -> Result<bool> {
    if !gens.iter().all(|g| gb.contains(g)) {
        return Ok(false);
    }
    let other = binomial_ideal_gb(gens, &gb.order, DEFAULT_SPAIR_BUDGET)?;
    Ok(gb.elements.iter().all(|g| other.contains(g)))
}

/// Minimal generators of the initial ideal: the leads, minimized.
pub fn initial_ideal(gb: &GroebnerBasis) -> Vec<Monomial> {
    let leads: Vec<&Monomial> = gb.elements.iter().map(|b| &b.lead).collect();
    let mut out: Vec<Monomial> = Vec::new();
    for (i, m) in leads.iter().enumerate() {
        let redundant = leads
            .iter()
            .enumerate()
            .any(|(j, o)| j != i && o.divides(m) && (*o != *m || j < i));
        if !redundant {
            out.push((*m).clone());
        }
    }
    out
}

pub fn is_squarefree(monomials: &[Monomial]) -> bool {
    monomials.iter().all(Monomial::is_squarefree)
}

pub fn verify_reduced_gb(candidate: &GroebnerBasis, a: &IntMatrix) -> bool {
    check_reduced_gb(candidate, a).is_ok()
}

/// Independent check that `candidate` is the reduced Gröbner basis of
/// `I_A` for its order. Returns the first failed condition.
///
/// Checks kernel membership, orientation, reducedness and canonical order,
/// that every S-pair reduces to zero, that the exponent vectors generate
/// `ker A`, and for configurations that the standard monomials match the
/// fibers in every degree up to the maximal degree plus one (degrees whose
/// monomial count exceeds [`DEFAULT_MONOMIAL_BUDGET`] are skipped).
pub fn check_reduced_gb(candidate: &GroebnerBasis, a: &IntMatrix) -> std::result::Result<(), String> {
    check_basis(candidate, a, true)
}

/// Like [`check_reduced_gb`] without the reducedness and sorting
/// conditions: `candidate` is some Gröbner basis of `I_A`.
pub fn check_groebner_basis(candidate: &GroebnerBasis, a: &IntMatrix) -> std::result::Result<(), String> {
    check_basis(candidate, a, false)
}

fn check_basis(candidate: &GroebnerBasis, a: &IntMatrix, reduced: bool) -> std::result::Result<(), String> {
    let n = a.cols();
    let order = &candidate.order;
    if order.nvars() != n {
        return Err("order and matrix disagree on the number of variables".into());
    }
    let images = Images::new(a).map_err(|e| e.to_string())?;
    let els = &candidate.elements;
    for (k, b) in els.iter().enumerate() {
        if b.lead.nvars() != n || b.trail.nvars() != n {
            return Err(format!("element {k} has the wrong number of variables"));
        }
        let (il, it) = (images.image(b.lead.exponents()), images.image(b.trail.exponents()));
        if il.map_err(|e| e.to_string())? != it.map_err(|e| e.to_string())? {
            return Err(format!("element {k} is not in the kernel"));
        }
        if order.cmp(b.lead.exponents(), b.trail.exponents()) != Ordering::Greater {
            return Err(format!("element {k} is not oriented by the order"));
        }
    }
    if reduced {
        check_reducedness(els, order)?;
    }
    for i in 0..els.len() {
        for j in i + 1..els.len() {
            let (bi, bj) = (&els[i], &els[j]);
            let l = bi.lead.lcm(&bj.lead);
            let s = Binomial::new(
                l.checked_div(&bi.lead)
                    .and_then(|q| q.checked_mul(&bi.trail).ok())
                    .ok_or("exponent overflow")?,
                l.checked_div(&bj.lead)
                    .and_then(|q| q.checked_mul(&bj.trail).ok())
                    .ok_or("exponent overflow")?,
            );
            let (x, y) = reduce_binomial(&s, els);
            if x != y {
                return Err(format!("S-pair ({i}, {j}) does not reduce to zero"));
            }
        }
    }
    let vectors: Vec<Vec<BigInt>> = els
        .iter()
        .map(|b| b.vector().into_iter().map(BigInt::from).collect())
        .collect();
    if canonical_lattice_basis(&vectors, n) != kernel_basis(a) {
        return Err("exponent vectors do not generate the kernel lattice".into());
    }
    if is_configuration(a).is_some() {
        let top = candidate.max_degree() as u32 + 1;
        for t in 1..=top {
            if check_monomial_budget(n, t, DEFAULT_MONOMIAL_BUDGET).is_err() {
                log::warn!("degree {t} slice check skipped: too many monomials");
                break;
            }
            let mut fibers = rustc_hash::FxHashSet::default();
            let mut standard = 0u64;
            let mut err = None;
            for_each_monomial(n, t, |u| {
                match images.image(u) {
                    Ok(v) => {
                        fibers.insert(v);
                    }
                    Err(e) => {
                        err = Some(e);
                        return false;
                    }
                }
                if !els.iter().any(|b| {
                    b.lead.exponents().iter().zip(u).all(|(x, y)| x <= y)
                }) {
                    standard += 1;
                }
                true
            });
            if let Some(e) = err {
                return Err(e.to_string());
            }
            if standard != fibers.len() as u64 {
                return Err(format!(
                    "degree {t}: {standard} standard monomials but {} fibers",
                    fibers.len()
                ));
            }
        }
    }
    Ok(())
}

fn check_reducedness(els: &[Binomial], order: &TermOrder) -> std::result::Result<(), String> {
    for (i, bi) in els.iter().enumerate() {
        for (j, bj) in els.iter().enumerate() {
            if i == j {
                continue;
            }
            if bj.lead.divides(&bi.lead) {
                return Err(format!("lead of element {j} divides lead of element {i}"));
            }
            if bj.lead.divides(&bi.trail) {
                return Err(format!("trail of element {i} is reducible by element {j}"));
            }
        }
    }
    for w in els.windows(2) {
        if order.cmp(w[0].lead.exponents(), w[1].lead.exponents()) != Ordering::Less {
            return Err("elements are not sorted by lead".into());
        }
    }
    Ok(())
}
