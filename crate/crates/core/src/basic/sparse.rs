use crate::colouring::TotalColouring;
use crate::edge_colouring::edge_colour_bipartite;
use crate::graph::{Edge, Graph};
use crate::path_extension::{extend_path, PathPrecolouring};
use crate::recognition::{is_sparse, reduce};

use super::{Anchor, BasicError};

/// 4-total-colouring of a 2-connected sparse graph of maximum degree 3.
///
/// Branch vertices get colour 1, the reduced graph is edge-coloured with
/// `{2, 3, 4}`, and each branch is filled in by path extension. With an
/// anchor, the edge colouring is seeded so that `ua` and `ub` get 2 and 3.
pub fn colour_sparse(g: &Graph, anchor: Option<&Anchor>) -> Result<TotalColouring, BasicError> {
    if g.max_degree() > 3 {
        return Err(BasicError::DegreeTooLarge(g.max_degree()));
    }
    if g.is_cycle() {
        return Err(BasicError::IsCycle);
    }
    if !g.is_two_connected() {
        return Err(BasicError::NotTwoConnected);
    }
    if !is_sparse(g) {
        return Err(BasicError::NotSparse);
    }
    if let Some(anchor) = anchor {
        anchor.validate(g)?;
    }
    let reduced = reduce(g).map_err(|e| BasicError::Internal(e.to_string()))?;
    let seeds: Vec<(Edge, u8)> = match anchor {
        Some(an) => vec![(an.ua(), 2), (an.ub(), 3)],
        None => Vec::new(),
    };
    let edges = edge_colour_bipartite(&reduced.graph, &[2, 3, 4], &seeds)
        .map_err(|e| BasicError::Internal(e.to_string()))?;

    let mut c = TotalColouring::new(4);
    for branch in &reduced.branches {
        let r = &branch.reduced;
        let path = &branch.original;
        let boundary = [1, edges[&Edge::new(r[0], r[1])], edges[&Edge::new(r[1], r[2])], 1];
        let seq = extend_path(&PathPrecolouring::new(path.len(), boundary))?;
        for (i, &v) in path.iter().enumerate() {
            c.set_vertex(v, seq[2 * i]);
            if i + 1 < path.len() {
                c.set_edge(Edge::new(v, path[i + 1]), seq[2 * i + 1]);
            }
        }
    }
    debug_assert!(anchor.is_none_or(|an| an.holds(&c)));
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::Vertex;
    use crate::oracle::check_total_colouring;

    #[test]
    fn subdivided_k4() {
        let g = families::subdivided_k4();
        let c = colour_sparse(&g, None).unwrap();
        assert!(check_total_colouring(&g, &c, 4).unwrap().is_valid());
        for v in 0..4 {
            assert_eq!(c.vertex(Vertex(v)), Some(1));
        }
    }

    #[test]
    fn anchored_theta() {
        let g = families::theta(&[2, 3, 3]);
        let anchor = Anchor::new(Vertex(2), Vertex(0), Vertex(1));
        let c = colour_sparse(&g, Some(&anchor)).unwrap();
        assert!(anchor.holds(&c));
        assert!(check_total_colouring(&g, &c, 4).unwrap().is_valid());
    }

    #[test]
    fn preconditions() {
        assert_eq!(colour_sparse(&families::cycle(7), None), Err(BasicError::IsCycle));
        assert_eq!(colour_sparse(&families::petersen(), None), Err(BasicError::NotSparse));
        assert_eq!(colour_sparse(&families::star(3), None), Err(BasicError::NotTwoConnected));
    }
}
