//! Finite simple graphs and the graph-theoretic criteria used by the toric
//! constructions: bipartiteness, odd cycles, chordal bipartite graphs,
//! condition (*) and apex splitting.

mod apex;
mod cycles;
mod families;
mod iso;

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub use apex::{merge_split_rows, split_apex};
pub use cycles::{
    chordless_cycles, disjoint_odd_cycles_bridged, disjoint_odd_cycles_bridged_with,
    find_disjoint_odd_cycles, find_disjoint_odd_cycles_with, is_chordal_bipartite,
    is_chordal_bipartite_with, CycleLimits, OddCyclePair,
};
pub use families::{complete, complete_bipartite, complete_multipartite, cycle, path, wheel, Family};
pub use iso::{canonical_form, connected_graph_classes, parse_graph_list, write_graph_list};

/// Simple graph on vertices `1..=vertex_count`. Edges are stored as
/// `(i, j)` with `i < j`, in the order they were given; that order fixes the
/// column order of the incidence configurations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

/// A bipartition with labelled parts: `part1[k]` carries label `k + 1` and
/// `part2[k]` carries label `(k + 1)'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub part1: Vec<usize>,
    pub part2: Vec<usize>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out = Vec::new();
        let mut seen = rustc_hash::FxHashSet::default();
        for (a, b) in edges {
            if a == b {
                return Err(Error::Invalid(format!("loop at vertex {a}")));
            }
            let e = (a.min(b), a.max(b));
            if e.0 == 0 || e.1 > vertex_count {
                return Err(Error::Invalid(format!(
                    "edge {{{a},{b}}} uses a vertex outside 1..={vertex_count}"
                )));
            }
            if !seen.insert(e) {
                return Err(Error::Invalid(format!("duplicate edge {{{a},{b}}}")));
            }
            out.push(e);
        }
        Ok(Graph {
            vertex_count,
            edges: out,
        })
    }

    /// Vertex count is the largest label used.
    pub fn from_edges(edges: &[(usize, usize)]) -> Result<Self> {
        let n = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
        Graph::new(n, edges.iter().copied())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Adjacency lists, sorted, indexed by vertex label (index 0 unused).
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count + 1];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in adj.iter_mut() {
            l.sort_unstable();
        }
        adj
    }

    /// Neighbourhood bitmasks (bit `v` for vertex `v`); needs at most 63
    /// vertices.
    pub(crate) fn neighbor_masks(&self) -> Vec<u64> {
        assert!(self.vertex_count < 64);
        let mut m = vec![0u64; self.vertex_count + 1];
        for &(a, b) in &self.edges {
            m[a] |= 1 << b;
            m[b] |= 1 << a;
        }
        m
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count + 1];
        let mut stack = vec![1];
        seen[1] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertex_count
    }

    /// Breadth-first 2-colouring, each component rooted at its lowest
    /// vertex, which goes to `part1`. `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let adj = self.adjacency();
        let mut color: Vec<Option<bool>> = vec![None; self.vertex_count + 1];
        for root in 1..=self.vertex_count {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for &w in &adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let part1 = (1..=self.vertex_count).filter(|&v| color[v] == Some(false)).collect();
        let part2 = (1..=self.vertex_count).filter(|&v| color[v] == Some(true)).collect();
        Some(Bipartition { part1, part2 })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// The graph with vertex `v` removed and the labels above it shifted
    /// down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let shift = |x: usize| if x > v { x - 1 } else { x };
        Graph {
            vertex_count: self.vertex_count - 1,
            edges: self
                .edges
                .iter()
                .filter(|&&(a, b)| a != v && b != v)
                .map(|&(a, b)| (shift(a), shift(b)))
                .collect(),
        }
    }

    /// Applies a relabelling `perm[old] = new` (index 0 unused), keeping
    /// the edge order.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        Graph {
            vertex_count: self.vertex_count,
            edges: self
                .edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (perm[a], perm[b]);
                    (x.min(y), x.max(y))
                })
                .collect(),
        }
    }

    /// Reads the `i j` per line format with `#` comments and an optional
    /// `vertices k` header.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut declared = None;
        let mut edges = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks[0] == "vertices" {
                if toks.len() != 2 || declared.is_some() || !edges.is_empty() {
                    return Err(Error::parse(no + 1, "misplaced or malformed vertices header"));
                }
                declared = Some(
                    toks[1]
                        .parse::<usize>()
                        .map_err(|e| Error::parse(no + 1, e.to_string()))?,
                );
                continue;
            }
            if toks.len() != 2 {
                return Err(Error::parse(no + 1, "expected two vertex labels"));
            }
            let mut ends = [0usize; 2];
            for (k, t) in toks.iter().enumerate() {
                ends[k] = t
                    .parse::<usize>()
                    .map_err(|e| Error::parse(no + 1, format!("bad vertex {t:?}: {e}")))?;
                if ends[k] == 0 {
                    return Err(Error::parse(no + 1, "vertex labels start at 1"));
                }
            }
            if ends[0] == ends[1] {
                return Err(Error::parse(no + 1, "loops are not allowed"));
            }
            edges.push((ends[0], ends[1]));
        }
        let max = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
        let n = match declared {
            Some(k) if k < max => {
                return Err(Error::Invalid(format!(
                    "vertices {k} declared but label {max} used"
                )))
            }
            Some(k) => k,
            None => max,
        };
        Graph::new(n, edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices {}", self.vertex_count)?;
        for (a, b) in &self.edges {
            writeln!(f, "{a} {b}")?;
        }
        Ok(())
    }
}

impl Bipartition {
    /// Checks that the parts cover the vertices of `g` disjointly and that
    /// every edge crosses.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut side = vec![0u8; g.vertex_count() + 1];
        for (s, part) in [(1u8, &self.part1), (2u8, &self.part2)] {
            for &v in part {
                if v == 0 || v > g.vertex_count() || side[v] != 0 {
                    return Err(Error::Invalid(format!("vertex {v} misplaced in bipartition")));
                }
                side[v] = s;
            }
        }
        if side[1..].iter().any(|&s| s == 0) {
            return Err(Error::Invalid("bipartition misses a vertex".into()));
        }
        if g.edges().iter().any(|&(a, b)| side[a] == side[b]) {
            return Err(Error::NotBipartite);
        }
        Ok(())
    }
}

/// Condition (*): for labels `i < j` in the first part and `k < l` in the
/// second, edges `{i,l'}`, `{j,k'}`, `{j,l'}` force the edge `{i,k'}`.
pub fn satisfies_star_condition(g: &Graph, parts: &Bipartition) -> Result<bool> {
    parts.validate(g)?;
    let (p1, p2) = (&parts.part1, &parts.part2);
    for i in 0..p1.len() {
        for j in i + 1..p1.len() {
            for k in 0..p2.len() {
                for l in k + 1..p2.len() {
                    if g.has_edge(p1[i], p2[l])
                        && g.has_edge(p1[j], p2[k])
                        && g.has_edge(p1[j], p2[l])
                        && !g.has_edge(p1[i], p2[k])
                    {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
