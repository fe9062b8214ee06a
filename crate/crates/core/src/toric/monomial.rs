use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector of a monomial `x^u`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    /// Positive and negative parts of an integer vector.
    pub fn split_signed(u: &[i64]) -> Result<(Monomial, Monomial)> {
        let conv = |x: i64| u32::try_from(x).map_err(|_| Error::Overflow("exponents"));
        let pos = u.iter().map(|&x| conv(x.max(0))).collect::<Result<_>>()?;
        let neg = u.iter().map(|&x| conv((-x).max(0))).collect::<Result<_>>()?;
        Ok((Monomial(pos), Monomial(neg)))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow("exponents")))
            .collect::<Result<_>>()
            .map(Monomial)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<_>>()
            .map(Monomial)
    }

    pub(crate) fn into_inner(self) -> Vec<u32> {
        self.0
    }
}

/// A pure difference binomial `x^lead - x^trail`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Binomial {
    pub lead: Monomial,
    pub trail: Monomial,
}

impl Binomial {
    pub fn new(lead: Monomial, trail: Monomial) -> Self {
        Binomial { lead, trail }
    }

    /// Binomial `x^{u+} - x^{u-}` for an integer vector `u`.
    pub fn from_vector(u: &[i64]) -> Result<Self> {
        let (lead, trail) = Monomial::split_signed(u)?;
        Ok(Binomial { lead, trail })
    }

    /// Exponent difference `lead - trail`.
    pub fn vector(&self) -> Vec<i64> {
        self.lead
            .exponents()
            .iter()
            .zip(self.trail.exponents())
            .map(|(&a, &b)| i64::from(a) - i64::from(b))
            .collect()
    }

    pub fn nvars(&self) -> usize {
        self.lead.nvars()
    }

    pub fn degree(&self) -> u64 {
        self.lead.degree().max(self.trail.degree())
    }

    pub fn is_primitive(&self) -> bool {
        self.lead.is_coprime(&self.trail)
    }

    /// Swaps the terms if needed so that `lead > trail` in `order`.
    pub fn oriented(self, order: &super::TermOrder) -> Binomial {
        if order.cmp(self.lead.exponents(), self.trail.exponents()) == Ordering::Less {
            Binomial {
                lead: self.trail,
                trail: self.lead,
            }
        } else {
            self
        }
    }
}

/// Writes monomials as `x1^2*x3`, naming variable `i` through `names`.
pub struct MonomialDisplay<'a> {
    pub monomial: &'a Monomial,
    pub names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.monomial.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&self.names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}
