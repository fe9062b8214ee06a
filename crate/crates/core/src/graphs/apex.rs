use super::Graph;
use crate::error::{Error, Result};
use crate::intlin::IntMatrix;

/// Splits a vertex `v` lying on every odd cycle into two copies, giving a
/// bipartite graph on one more vertex with the same toric ideal.
///
/// Labels `v` and `d` (the last vertex) are swapped first. With `V1, V2`
/// the breadth-first bipartition of `G - d`, each edge `{i, d}` stays put
/// when `i` is in `V1` and becomes `{i, d + 1}` otherwise. Edge order is
/// preserved, so the incidence configurations keep their column order.
pub fn split_apex(g: &Graph, v: usize) -> Result<Graph> {
    let d = g.vertex_count();
    if v == 0 || v > d {
        return Err(Error::Invalid(format!("vertex {v} is not in the graph")));
    }
    if !g.is_connected() {
        return Err(Error::PreconditionViolated("graph is not connected".into()));
    }
    if g.is_bipartite() {
        return Err(Error::PreconditionViolated(
            "graph is already bipartite".into(),
        ));
    }
    let h = swap_to_last(g, v);
    let rest = h.remove_vertex(d);
    let parts = rest
        .bipartition()
        .ok_or(Error::ApexNotUniversalForOddCycles { vertex: v })?;
    let mut in_v1 = vec![false; d + 1];
    for &u in &parts.part1 {
        in_v1[u] = true;
    }
    let edges = h.edges().iter().map(|&(a, b)| {
        if b == d && !in_v1[a] {
            (a, d + 1)
        } else {
            (a, b)
        }
    });
    Graph::new(d + 1, edges)
}

/// Swaps the labels `v` and `vertex_count`.
pub(crate) fn swap_to_last(g: &Graph, v: usize) -> Graph {
    let d = g.vertex_count();
    let mut perm: Vec<usize> = (0..=d).collect();
    perm.swap(v, d);
    g.relabel(&perm)
}

/// Adds the last row to the one before it and drops the last row; this
/// turns `A_{G'}` for a split graph back into `A_G`.
pub fn merge_split_rows(a: &IntMatrix) -> Result<IntMatrix> {
    let r = a.rows();
    if r < 2 {
        return Err(Error::Invalid("need at least two rows".into()));
    }
    let mut out = a.select_rows(&(0..r - 1).collect::<Vec<_>>());
    for j in 0..a.cols() {
        let s = a.get(r - 2, j) + a.get(r - 1, j);
        out.set(r - 2, j, s);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configs::graph_config_rho;
    use crate::graphs::cycle;

    #[test]
    fn triangle_becomes_square() {
        let g = split_apex(&cycle(3), 3).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert!(g.is_bipartite());
        assert_eq!(g.edges().len(), 3);
        let c = crate::graphs::chordless_cycles(&g, &Default::default()).unwrap();
        // the recipe yields the path 3-1-2-4, which has the same (zero) toric ideal
        assert!(c.is_empty(), "{c:?}");
    }

    #[test]
    fn tie_graph() {
        let g = Graph::from_edges(&[(1, 5), (3, 5), (1, 3), (2, 5), (4, 5), (2, 4)]).unwrap();
        let s = split_apex(&g, 5).unwrap();
        assert_eq!(
            s.edges(),
            &[(1, 5), (3, 6), (1, 3), (2, 5), (4, 6), (2, 4)]
        );
        let back = merge_split_rows(&graph_config_rho(&s).unwrap()).unwrap();
        assert_eq!(back, graph_config_rho(&g).unwrap());
    }

    #[test]
    fn preconditions() {
        assert!(split_apex(&cycle(4), 1).is_err());
        let two = Graph::from_edges(&[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (4, 6)]).unwrap();
        assert!(matches!(
            split_apex(&two, 1),
            Err(Error::ApexNotUniversalForOddCycles { vertex: 1 })
        ));
    }
}
