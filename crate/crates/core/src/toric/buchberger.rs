//! Buchberger completion specialised to pure difference binomials.
//!
//! Binomials are kept as two exponent vectors. Pairs are handled with the
//! Gebauer–Möller update and selected by lowest lcm degree. Common factors
//! of the two terms are cancelled only in variables the caller marks as
//! saturated, because dividing is valid exactly when the ideal is
//! saturated in those variables.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use super::{Binomial, Monomial, TermOrder};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub(crate) struct Elem {
    pub lead: Vec<u32>,
    pub trail: Vec<u32>,
    mask: u64,
}

impl Elem {
    fn new(lead: Vec<u32>, trail: Vec<u32>) -> Self {
        let mask = mask_of(&lead);
        Elem { lead, trail, mask }
    }
}

fn mask_of(m: &[u32]) -> u64 {
    m.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u64, |acc, (i, _)| acc | (1u64 << (i % 64)))
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

fn degree(a: &[u32]) -> u64 {
    a.iter().map(|&e| u64::from(e)).sum()
}

/// `m / d * t`, with `d | m` assumed.
fn replace(m: &[u32], d: &[u32], t: &[u32]) -> Result<Vec<u32>> {
    m.iter()
        .zip(d)
        .zip(t)
        .map(|((&a, &b), &c)| (a - b).checked_add(c).ok_or(Error::Overflow("exponents")))
        .collect()
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Vec<u32>,
    live: bool,
}

pub(crate) struct Engine<'o> {
    order: &'o TermOrder,
    cancel: Vec<bool>,
    pub elems: Vec<Elem>,
    /// Indices of elements whose leads are minimal generators so far.
    basis: Vec<usize>,
    pairs: Vec<Pair>,
    queue: BinaryHeap<Reverse<(u64, usize)>>,
    spairs: u64,
    budget: u64,
}

impl<'o> Engine<'o> {
    pub fn new(order: &'o TermOrder, cancel: Vec<bool>, budget: u64) -> Self {
        Engine {
            order,
            cancel,
            elems: Vec::new(),
            basis: Vec::new(),
            pairs: Vec::new(),
            queue: BinaryHeap::new(),
            spairs: 0,
            budget,
        }
    }

    pub fn spairs_used(&self) -> u64 {
        self.spairs
    }

    fn cancel_common(&self, a: &mut [u32], b: &mut [u32]) {
        for v in 0..a.len() {
            if self.cancel[v] {
                let c = a[v].min(b[v]);
                a[v] -= c;
                b[v] -= c;
            }
        }
    }

    fn find_reducer(&self, m: &[u32]) -> Option<usize> {
        let mask = mask_of(m);
        self.basis.iter().copied().find(|&k| {
            let e = &self.elems[k];
            e.mask & !mask == 0 && divides(&e.lead, m)
        })
    }

    /// Top-reduces `a - b` against the current basis. Returns the oriented
    /// remainder, or `None` when it vanishes.
    fn normal_form(&self, mut a: Vec<u32>, mut b: Vec<u32>) -> Result<Option<(Vec<u32>, Vec<u32>)>> {
        loop {
            self.cancel_common(&mut a, &mut b);
            match self.order.cmp(&a, &b) {
                Ordering::Equal => return Ok(None),
                Ordering::Less => std::mem::swap(&mut a, &mut b),
                Ordering::Greater => {}
            }
            match self.find_reducer(&a) {
                None => return Ok(Some((a, b))),
                Some(k) => {
                    let e = &self.elems[k];
                    a = replace(&a, &e.lead, &e.trail)?;
                }
            }
        }
    }

    /// Adds a generator, reducing it first.
    pub fn add_generator(&mut self, lead: Vec<u32>, trail: Vec<u32>) -> Result<()> {
        if let Some((l, t)) = self.normal_form(lead, trail)? {
            self.insert(l, t);
        }
        Ok(())
    }

    fn push_pair(&mut self, i: usize, j: usize, l: Vec<u32>) {
        let idx = self.pairs.len();
        self.queue.push(Reverse((degree(&l), idx)));
        self.pairs.push(Pair {
            i,
            j,
            lcm: l,
            live: true,
        });
    }

    /// Gebauer–Möller update for a new element.
    fn insert(&mut self, lead: Vec<u32>, trail: Vec<u32>) {
        let h = self.elems.len();
        self.elems.push(Elem::new(lead, trail));
        let hl = self.elems[h].lead.clone();

        // candidate pairs (h, g)
        let cands: Vec<(usize, Vec<u32>, bool)> = self
            .basis
            .iter()
            .map(|&g| {
                let gl = &self.elems[g].lead;
                (g, lcm(&hl, gl), coprime(&hl, gl))
            })
            .collect();
        let mut keep = vec![false; cands.len()];
        for (a, (_, la, cop)) in cands.iter().enumerate() {
            if *cop {
                keep[a] = true;
                continue;
            }
            // drop (h, g1) if another candidate's lcm properly divides it,
            // or divides it and comes earlier (one representative per lcm)
            let dominated = cands.iter().enumerate().any(|(b, (_, lb, _))| {
                b != a && divides(lb, la) && (lb != la || b < a)
            });
            keep[a] = !dominated;
        }
        // among kept candidates, pairs with coprime leads are useless
        let fresh: Vec<(usize, Vec<u32>)> = cands
            .into_iter()
            .zip(keep)
            .filter(|((_, _, cop), k)| *k && !*cop)
            .map(|((g, l, _), _)| (g, l))
            .collect();

        // old pairs made redundant by h
        for p in self.pairs.iter_mut().filter(|p| p.live) {
            if divides(&hl, &p.lcm) {
                let li = lcm(&self.elems[p.i].lead, &hl);
                let lj = lcm(&self.elems[p.j].lead, &hl);
                if li != p.lcm && lj != p.lcm {
                    p.live = false;
                }
            }
        }
        for (g, l) in fresh {
            self.push_pair(g, h, l);
        }
        let elems = &self.elems;
        self.basis.retain(|&g| !divides(&hl, &elems[g].lead));
        self.basis.push(h);
    }

    /// Runs the pair queue to completion. Returns `false` if the S-pair
    /// budget ran out first.
    pub fn complete(&mut self) -> Result<bool> {
        while let Some(Reverse((_, idx))) = self.queue.pop() {
            if !self.pairs[idx].live {
                continue;
            }
            self.pairs[idx].live = false;
            if self.spairs >= self.budget {
                return Ok(false);
            }
            self.spairs += 1;
            let (i, j) = (self.pairs[idx].i, self.pairs[idx].j);
            let l = &self.pairs[idx].lcm;
            let (ei, ej) = (&self.elems[i], &self.elems[j]);
            let a = replace(l, &ei.lead, &ei.trail)?;
            let b = replace(l, &ej.lead, &ej.trail)?;
            if let Some((lead, trail)) = self.normal_form(a, b)? {
                self.insert(lead, trail);
            }
        }
        Ok(true)
    }

    /// Elements with minimal, pairwise non-divisible leads.
    pub fn minimal_elements(&self) -> Vec<Elem> {
        self.basis.iter().map(|&k| self.elems[k].clone()).collect()
    }

    /// Reduced basis: minimal leads, fully reduced trails, sorted by lead.
    pub fn reduced(&self) -> Result<Vec<(Vec<u32>, Vec<u32>)>> {
        let mut out = Vec::with_capacity(self.basis.len());
        for &k in &self.basis {
            let e = &self.elems[k];
            let mut trail = e.trail.clone();
            while let Some(r) = self.find_reducer(&trail) {
                let g = &self.elems[r];
                trail = replace(&trail, &g.lead, &g.trail)?;
            }
            let mut lead = e.lead.clone();
            self.cancel_common(&mut lead, &mut trail);
            out.push((lead, trail));
        }
        out.sort_by(|a, b| self.order.cmp(&a.0, &b.0).then_with(|| self.order.cmp(&a.1, &b.1)));
        Ok(out)
    }
}

pub(crate) type Raw = Vec<(Vec<u32>, Vec<u32>)>;

pub(crate) struct Run {
    pub basis: Raw,
    pub spairs: u64,
    /// False when the budget ran out; `basis` is then only partial.
    pub complete: bool,
}

/// Plain Buchberger on binomial generators; returns the reduced basis.
/// `cancel` marks variables in which the generated ideal is saturated.
pub(crate) fn buchberger(
    generators: impl IntoIterator<Item = (Vec<u32>, Vec<u32>)>,
    order: &TermOrder,
    cancel: Vec<bool>,
    budget: u64,
) -> Result<Run> {
    let mut gens: Vec<(Vec<u32>, Vec<u32>)> = generators
        .into_iter()
        .map(|(a, b)| {
            if order.cmp(&a, &b) == Ordering::Less {
                (b, a)
            } else {
                (a, b)
            }
        })
        .collect();
    gens.sort_by(|x, y| order.cmp(&x.0, &y.0));
    let mut engine = Engine::new(order, cancel, budget);
    for (a, b) in gens {
        engine.add_generator(a, b)?;
    }
    let complete = engine.complete()?;
    let basis = if complete {
        engine.reduced()?
    } else {
        engine
            .minimal_elements()
            .into_iter()
            .map(|e| (e.lead, e.trail))
            .collect()
    };
    Ok(Run {
        basis,
        spairs: engine.spairs_used(),
        complete,
    })
}

/// Reduces `x^a - x^b` modulo a Gröbner basis (both terms fully), returning
/// the normal forms of the two terms. The binomial lies in the ideal iff
/// they coincide.
pub fn reduce_binomial(b: &Binomial, basis: &[Binomial]) -> (Monomial, Monomial) {
    let reduce = |m: &Monomial| -> Monomial {
        let mut cur = m.exponents().to_vec();
        'outer: loop {
            for g in basis {
                if divides(g.lead.exponents(), &cur) {
                    cur = cur
                        .iter()
                        .zip(g.lead.exponents())
                        .zip(g.trail.exponents())
                        .map(|((&a, &l), &t)| a - l + t)
                        .collect();
                    continue 'outer;
                }
            }
            break;
        }
        Monomial::new(cur)
    };
    (reduce(&b.lead), reduce(&b.trail))
}

pub(crate) fn to_binomials(raw: Vec<(Vec<u32>, Vec<u32>)>) -> Vec<Binomial> {
    raw.into_iter()
        .map(|(l, t)| Binomial::new(Monomial::new(l), Monomial::new(t)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twisted_cubic() {
        // ideal of the twisted cubic (s^3, s^2 t, s t^2, t^3), grevlex
        let order = TermOrder::grevlex(4);
        let gens = vec![
            (vec![0, 2, 0, 0], vec![1, 0, 1, 0]),
            (vec![0, 0, 2, 0], vec![0, 1, 0, 1]),
            (vec![0, 1, 1, 0], vec![1, 0, 0, 1]),
        ];
        let gb = buchberger(gens, &order, vec![true; 4], u64::MAX).unwrap().basis;
        assert_eq!(gb.len(), 3);
        let leads: Vec<_> = gb.iter().map(|g| g.0.clone()).collect();
        assert!(leads.contains(&vec![0, 2, 0, 0]));
        assert!(leads.contains(&vec![0, 1, 1, 0]));
        assert!(leads.contains(&vec![0, 0, 2, 0]));
    }

    #[test]
    fn new_elements_appear() {
        // <x^2 - y, x y - 1> in grlex x > y: adds y^2 - x
        let order = TermOrder::grlex(2);
        let gens = vec![(vec![2, 0], vec![0, 1]), (vec![1, 1], vec![0, 0])];
        let gb = buchberger(gens, &order, vec![true; 2], u64::MAX).unwrap().basis;
        let gb = to_binomials(gb);
        let target = Binomial::new(Monomial::new(vec![0, 2]), Monomial::new(vec![1, 0]));
        let (l, t) = reduce_binomial(&target, &gb);
        assert_eq!(l, t);
        assert!(gb.iter().any(|g| g.lead.exponents() == [0, 2]));
    }

    #[test]
    fn budget_is_enforced() {
        let order = TermOrder::grevlex(4);
        let gens = vec![
            (vec![0, 2, 0, 0], vec![1, 0, 1, 0]),
            (vec![0, 1, 1, 0], vec![1, 0, 0, 1]),
        ];
        let run = buchberger(gens, &order, vec![true; 4], 0).unwrap();
        assert!(!run.complete);
    }
}
