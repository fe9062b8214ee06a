//! Exhaustive chordless-cycle search.
//!
//! Two vertex-disjoint odd cycles exist iff two vertex-disjoint chordless
//! odd cycles exist (a chord splits an odd cycle into a shorter odd cycle
//! and an even one), and the same reduction applies to unbridged pairs, so
//! every search below runs over chordless cycles only.

use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug)]
pub struct CycleLimits {
    pub max_vertices: usize,
    pub max_cycles: u64,
}

impl Default for CycleLimits {
    fn default() -> Self {
        CycleLimits {
            max_vertices: 16,
            max_cycles: 1_000_000,
        }
    }
}

/// Two odd cycles given as vertex sequences.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddCyclePair {
    pub cycle1: Vec<usize>,
    pub cycle2: Vec<usize>,
    pub disjoint: bool,
}

fn check_size(g: &Graph, limits: &CycleLimits) -> Result<()> {
    let limit = limits.max_vertices.min(63);
    if g.vertex_count() > limit {
        return Err(Error::SizeLimit {
            what: "vertices",
            actual: g.vertex_count() as u64,
            limit: limit as u64,
        });
    }
    Ok(())
}

/// All chordless cycles, each listed once starting at its smallest vertex
/// and continuing towards the smaller of its two neighbours. Sorted by
/// length, then lexicographically.
pub fn chordless_cycles(g: &Graph, limits: &CycleLimits) -> Result<Vec<Vec<usize>>> {
    check_size(g, limits)?;
    let nb = g.neighbor_masks();
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut path = Vec::new();
    for s in 1..=n {
        path.clear();
        path.push(s);
        extend(&nb, s, &mut path, 1u64 << s, &mut out, limits.max_cycles)?;
    }
    out.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// `path` is an induced path starting at `s` whose other vertices are all
/// greater than `s`.
fn extend(
    nb: &[u64],
    s: usize,
    path: &mut Vec<usize>,
    on_path: u64,
    out: &mut Vec<Vec<usize>>,
    budget: u64,
) -> Result<()> {
    let end = *path.last().unwrap();
    // path vertices other than s and end: a new vertex must avoid them
    let interior = on_path & !(1u64 << s) & !(1u64 << end);
    let above_s = !((1u64 << (s + 1)) - 1);
    let mut cand = nb[end] & above_s & !on_path;
    while cand != 0 {
        let w = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if nb[w] & interior != 0 {
            continue;
        }
        if path.len() >= 2 && nb[w] & (1u64 << s) != 0 {
            // w is adjacent to s: either it closes a cycle or it would be a chord
            if path[1] < w {
                let mut c = path.clone();
                c.push(w);
                out.push(c);
                if out.len() as u64 > budget {
                    return Err(Error::ResourceLimit {
                        what: "cycles",
                        limit: budget,
                    });
                }
            }
            continue;
        }
        path.push(w);
        extend(nb, s, path, on_path | (1u64 << w), out, budget)?;
        path.pop();
    }
    Ok(())
}

fn mask(c: &[usize]) -> u64 {
    c.iter().fold(0, |m, &v| m | (1u64 << v))
}

fn odd_chordless(g: &Graph, limits: &CycleLimits) -> Result<Vec<Vec<usize>>> {
    Ok(chordless_cycles(g, limits)?
        .into_iter()
        .filter(|c| c.len() % 2 == 1)
        .collect())
}

pub fn find_disjoint_odd_cycles(g: &Graph) -> Result<Option<OddCyclePair>> {
    find_disjoint_odd_cycles_with(g, &CycleLimits::default())
}

/// A pair of vertex-disjoint chordless odd cycles, or `None`. The pair is
/// the first in the (length, lexicographic) order of the first cycle, then
/// of the second.
pub fn find_disjoint_odd_cycles_with(g: &Graph, limits: &CycleLimits) -> Result<Option<OddCyclePair>> {
    let odd = odd_chordless(g, limits)?;
    let masks: Vec<u64> = odd.iter().map(|c| mask(c)).collect();
    for i in 0..odd.len() {
        for j in i + 1..odd.len() {
            if masks[i] & masks[j] == 0 {
                return Ok(Some(OddCyclePair {
                    cycle1: odd[i].clone(),
                    cycle2: odd[j].clone(),
                    disjoint: true,
                }));
            }
        }
    }
    Ok(None)
}

pub fn disjoint_odd_cycles_bridged(g: &Graph) -> Result<bool> {
    disjoint_odd_cycles_bridged_with(g, &CycleLimits::default())
}

/// True iff every pair of vertex-disjoint odd cycles is joined by an edge.
pub fn disjoint_odd_cycles_bridged_with(g: &Graph, limits: &CycleLimits) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::PreconditionViolated("graph is not connected".into()));
    }
    let nb = g.neighbor_masks();
    let odd = odd_chordless(g, limits)?;
    let masks: Vec<u64> = odd.iter().map(|c| mask(c)).collect();
    let reach: Vec<u64> = odd
        .iter()
        .map(|c| c.iter().fold(0, |m, &v| m | nb[v]))
        .collect();
    for i in 0..odd.len() {
        for j in i + 1..odd.len() {
            if masks[i] & masks[j] == 0 && reach[i] & masks[j] == 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn is_chordal_bipartite(g: &Graph) -> Result<bool> {
    is_chordal_bipartite_with(g, &CycleLimits::default())
}

/// Bipartite and without chordless cycles of length at least six.
pub fn is_chordal_bipartite_with(g: &Graph, limits: &CycleLimits) -> Result<bool> {
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    Ok(chordless_cycles(g, limits)?.iter().all(|c| c.len() < 6))
}
