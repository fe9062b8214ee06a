use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum OrderKind {
    /// Graded reverse lexicographic with `x0 > x1 > ... > x{n-1}`.
    GradedRevLex,
    /// Graded lexicographic with `x0 > x1 > ... > x{n-1}`.
    GradedLex,
    /// Graded reverse lexicographic with an explicit variable ranking.
    RevLexWithOrdering,
}

/// A graded monomial order. Degree ties are broken by `variable_order`,
/// listed from the smallest variable to the largest.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct TermOrder {
    pub kind: OrderKind,
    pub variable_order: Vec<usize>,
}

impl TermOrder {
    pub fn grevlex(nvars: usize) -> Self {
        TermOrder {
            kind: OrderKind::GradedRevLex,
            variable_order: (0..nvars).rev().collect(),
        }
    }

    pub fn grlex(nvars: usize) -> Self {
        TermOrder {
            kind: OrderKind::GradedLex,
            variable_order: (0..nvars).rev().collect(),
        }
    }

    /// Graded revlex where `smallest_to_largest[0]` is the smallest variable.
    pub fn revlex_with_ordering(smallest_to_largest: Vec<usize>) -> Result<Self> {
        let n = smallest_to_largest.len();
        let mut seen = vec![false; n];
        for &v in &smallest_to_largest {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Invalid(
                    "variable ordering is not a permutation".into(),
                ));
            }
        }
        Ok(TermOrder {
            kind: OrderKind::RevLexWithOrdering,
            variable_order: smallest_to_largest,
        })
    }

    /// Revlex on the variables of a centrally symmetric configuration with
    /// `2 * base_cols + 1` columns: the center variable `x0` is smallest,
    /// the rest rank `x1 > x2 > ... > x{2n}`.
    pub fn center_smallest(base_cols: usize) -> Self {
        let n = 2 * base_cols + 1;
        let mut v = vec![0];
        v.extend((1..n).rev());
        TermOrder::revlex_with_ordering(v).expect("valid permutation")
    }

    pub fn nvars(&self) -> usize {
        self.variable_order.len()
    }

    pub fn is_revlex(&self) -> bool {
        !matches!(self.kind, OrderKind::GradedLex)
    }

    pub fn smallest_variable(&self) -> Option<usize> {
        self.variable_order.first().copied()
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
        let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
        da.cmp(&db).then_with(|| self.tie_break(a, b))
    }

    pub(crate) fn tie_break(&self, a: &[u32], b: &[u32]) -> Ordering {
        if self.is_revlex() {
            // the smallest differing variable decides, larger exponent loses
            for &v in &self.variable_order {
                if a[v] != b[v] {
                    return b[v].cmp(&a[v]);
                }
            }
        } else {
            for &v in self.variable_order.iter().rev() {
                if a[v] != b[v] {
                    return a[v].cmp(&b[v]);
                }
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_vs_grlex() {
        // x0*x1*x5 vs x2*x3*x4
        let a = [1, 1, 0, 0, 0, 1];
        let b = [0, 0, 1, 1, 1, 0];
        assert_eq!(TermOrder::grevlex(6).cmp(&a, &b), Ordering::Less);
        assert_eq!(TermOrder::grlex(6).cmp(&a, &b), Ordering::Greater);
    }

    #[test]
    fn degree_first() {
        let o = TermOrder::grevlex(2);
        assert_eq!(o.cmp(&[0, 2], &[1, 0]), Ordering::Greater);
    }

    #[test]
    fn center_smallest_layout() {
        let o = TermOrder::center_smallest(2);
        assert_eq!(o.variable_order, vec![0, 4, 3, 2, 1]);
        // x0^2 < x1*x3 since x0 is the smallest variable
        assert_eq!(o.cmp(&[2, 0, 0, 0, 0], &[0, 1, 0, 1, 0]), Ordering::Less);
    }

    #[test]
    fn bad_permutation_rejected() {
        assert!(TermOrder::revlex_with_ordering(vec![0, 0, 1]).is_err());
        assert!(TermOrder::revlex_with_ordering(vec![0, 3]).is_err());
    }
}
