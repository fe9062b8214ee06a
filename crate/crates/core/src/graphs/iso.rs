//! Isomorphism classes of small graphs by brute-force canonical forms.

use itertools::Itertools;

use super::Graph;
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`connected_graph_classes`].
pub const MAX_CLASS_VERTICES: usize = 6;

fn slots(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

fn slot_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![usize::MAX; n + 1]; n + 1];
    for (k, (i, j)) in slots(n).into_iter().enumerate() {
        idx[i][j] = k;
        idx[j][i] = k;
    }
    idx
}

/// For each vertex permutation, the induced permutation of edge slots.
fn slot_permutations(n: usize) -> Vec<Vec<usize>> {
    let s = slots(n);
    let idx = slot_index(n);
    (1..=n)
        .permutations(n)
        .map(|p| s.iter().map(|&(i, j)| idx[p[i - 1]][p[j - 1]]).collect())
        .collect()
}

fn permute(mask: u32, perm: &[usize]) -> u32 {
    let mut out = 0;
    let mut m = mask;
    while m != 0 {
        let k = m.trailing_zeros() as usize;
        m &= m - 1;
        out |= 1 << perm[k];
    }
    out
}

fn graph_of(n: usize, mask: u32) -> Graph {
    let edges = slots(n)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| mask & (1 << k) != 0)
        .map(|(_, e)| e);
    Graph::new(n, edges).expect("valid slots")
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_CLASS_VERTICES {
        return Err(Error::SizeLimit {
            what: "vertices",
            actual: n as u64,
            limit: MAX_CLASS_VERTICES as u64,
        });
    }
    Ok(())
}

/// Canonical representative: among all relabellings, the one whose edge
/// set, read as a bitmask over `(1,2), (1,3), ..., (n-1,n)`, is smallest.
/// Edges are listed in that slot order.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let n = g.vertex_count();
    check_size(n)?;
    let idx = slot_index(n);
    let mask = g.edges().iter().fold(0u32, |m, &(i, j)| m | (1 << idx[i][j]));
    let best = slot_permutations(n)
        .iter()
        .map(|p| permute(mask, p))
        .min()
        .unwrap_or(0);
    Ok(graph_of(n, best))
}

/// Canonical representatives of all connected graphs on `n` vertices, in
/// increasing order of their bitmask.
pub fn connected_graph_classes(n: usize) -> Result<Vec<Graph>> {
    check_size(n)?;
    let perms = slot_permutations(n);
    let total = n * n.saturating_sub(1) / 2;
    let mut out = Vec::new();
    for mask in 0u32..(1 << total) {
        // the canonical form is the minimum, so any smaller image rules it out
        if perms.iter().any(|p| permute(mask, p) < mask) {
            continue;
        }
        let g = graph_of(n, mask);
        if g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}

/// One graph per line: `n: i-j i-j ...`, `#` comments.
pub fn write_graph_list(graphs: &[Graph]) -> String {
    let mut s = String::new();
    for g in graphs {
        s.push_str(&g.vertex_count().to_string());
        s.push(':');
        for (a, b) in g.edges() {
            s.push_str(&format!(" {a}-{b}"));
        }
        s.push('\n');
    }
    s
}

pub fn parse_graph_list(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (n, rest) = line
            .split_once(':')
            .ok_or_else(|| Error::parse(no + 1, "expected `n: edges`"))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| Error::parse(no + 1, "bad vertex count"))?;
        let mut edges = Vec::new();
        for tok in rest.split_whitespace() {
            let (a, b) = tok
                .split_once('-')
                .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
                .ok_or_else(|| Error::parse(no + 1, format!("bad edge {tok:?}")))?;
            edges.push((a, b));
        }
        out.push(Graph::new(n, edges).map_err(|e| Error::parse(no + 1, e.to_string()))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{cycle, path};

    #[test]
    fn known_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| connected_graph_classes(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn canonical_forms_identify_relabellings() {
        let a = cycle(5);
        let b = a.relabel(&[0, 3, 1, 5, 2, 4]);
        assert_ne!(a.edges(), b.edges());
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&path(5)).unwrap());
    }

    #[test]
    fn list_round_trip() {
        let gs = connected_graph_classes(4).unwrap();
        assert_eq!(parse_graph_list(&write_graph_list(&gs)).unwrap(), gs);
    }
}
