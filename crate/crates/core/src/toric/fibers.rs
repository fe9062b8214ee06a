//! Degree-by-degree fiber enumeration for graded toric ideals.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use crate::configs::is_configuration;
use crate::error::{Error, Result};
use crate::intlin::{binomial_count, IntMatrix};

/// Default cap on the number of monomials enumerated in one degree.
pub const DEFAULT_MONOMIAL_BUDGET: u64 = 1_000_000;

/// Calls `f` on every exponent vector of total degree `degree`, in
/// lexicographically decreasing order. Stops early if `f` returns false.
pub(crate) fn for_each_monomial(nvars: usize, degree: u32, mut f: impl FnMut(&[u32]) -> bool) {
    if nvars == 0 {
        if degree == 0 {
            f(&[]);
        }
        return;
    }
    let mut e = vec![0u32; nvars];
    e[0] = degree;
    loop {
        if !f(&e) {
            return;
        }
        // next composition: move one unit from the last nonzero entry
        // before the tail to its right neighbour, collecting the tail
        let last = nvars - 1;
        let tail = e[last];
        e[last] = 0;
        let Some(k) = (0..last).rev().find(|&k| e[k] > 0) else {
            return;
        };
        e[k] -= 1;
        e[k + 1] = tail + 1;
    }
}

pub(crate) fn check_monomial_budget(nvars: usize, degree: u32, budget: u64) -> Result<()> {
    let count = binomial_count(nvars + degree as usize - 1, degree as usize);
    if count > budget {
        return Err(Error::ResourceLimit {
            what: "monomials per degree",
            limit: budget,
        });
    }
    Ok(())
}

/// Columns of `a` as machine integers, for hashing images `A u`.
pub(crate) struct Images {
    cols: Vec<Vec<i64>>,
    rows: usize,
}

impl Images {
    pub fn new(a: &IntMatrix) -> Result<Self> {
        let cols = a.to_i64_columns().ok_or(Error::Overflow("matrix entries"))?;
        Ok(Images {
            cols,
            rows: a.rows(),
        })
    }

    pub fn image(&self, u: &[u32]) -> Result<Vec<i64>> {
        let mut out = vec![0i64; self.rows];
        for (j, &e) in u.iter().enumerate() {
            if e == 0 {
                continue;
            }
            for (o, &c) in out.iter_mut().zip(&self.cols[j]) {
                *o = c
                    .checked_mul(i64::from(e))
                    .and_then(|p| o.checked_add(p))
                    .ok_or(Error::Overflow("matrix entries"))?;
            }
        }
        Ok(out)
    }
}

/// Number of distinct images `A u` over monomials `u` of total degree `t`,
/// i.e. the Hilbert function of `K[A]` in degree `t` for a configuration.
pub fn fiber_count(a: &IntMatrix, t: u32, monomial_budget: u64) -> Result<u64> {
    check_monomial_budget(a.cols(), t, monomial_budget)?;
    let images = Images::new(a)?;
    let mut seen: FxHashMap<Vec<i64>, ()> = FxHashMap::default();
    let mut err = None;
    for_each_monomial(a.cols(), t, |u| match images.image(u) {
        Ok(v) => {
            seen.insert(v, ());
            true
        }
        Err(e) => {
            err = Some(e);
            false
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(seen.len() as u64),
    }
}

/// Counts minimal generators of `I_A` per degree, up to `max_degree`.
/// Degrees with no generators are omitted.
pub fn minimal_generator_degrees(a: &IntMatrix, max_degree: u32) -> Result<BTreeMap<u32, u64>> {
    minimal_generator_degrees_with(a, max_degree, DEFAULT_MONOMIAL_BUDGET)
}

/// Inside a fiber of degree `t`, the binomials coming from lower degrees
/// connect exactly the monomials sharing a variable; each extra connected
/// component needs one new generator.
pub fn minimal_generator_degrees_with(
    a: &IntMatrix,
    max_degree: u32,
    monomial_budget: u64,
) -> Result<BTreeMap<u32, u64>> {
    if is_configuration(a).is_none() {
        return Err(Error::NotConfiguration);
    }
    let n = a.cols();
    if n > 128 {
        return Err(Error::SizeLimit {
            what: "variables",
            actual: n as u64,
            limit: 128,
        });
    }
    let images = Images::new(a)?;
    let mut out = BTreeMap::new();
    for t in 1..=max_degree {
        check_monomial_budget(n, t, monomial_budget)?;
        let mut fibers: FxHashMap<Vec<i64>, Vec<u128>> = FxHashMap::default();
        let mut err = None;
        for_each_monomial(n, t, |u| {
            let mask = u
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u128, |m, (i, _)| m | (1u128 << i));
            match images.image(u) {
                Ok(v) => {
                    fibers.entry(v).or_default().push(mask);
                    true
                }
                Err(e) => {
                    err = Some(e);
                    false
                }
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        let count: u64 = fibers
            .values()
            .filter(|f| f.len() > 1)
            .map(|f| components(f) as u64 - 1)
            .sum();
        if count > 0 {
            out.insert(t, count);
        }
    }
    Ok(out)
}

fn components(masks: &[u128]) -> usize {
    let mut comps: Vec<u128> = Vec::new();
    for &m in masks {
        let mut merged = m;
        comps.retain(|&c| {
            if c & m != 0 {
                merged |= c;
                false
            } else {
                true
            }
        });
        comps.push(merged);
    }
    comps.len()
}
