//! Branches and reduced graphs.
//!
//! A branch vertex has degree at least 3; a branch is a path between branch
//! vertices whose interior vertices have degree 2. A 2-connected graph that
//! is not a cycle is edge-partitioned by its branches.

use std::collections::BTreeSet;

use crate::graph::{Edge, Graph, Vertex};

use super::RecognitionError;

/// Branch vertices, ascending.
pub fn branch_vertices(g: &Graph) -> BTreeSet<Vertex> {
    g.vertices().filter(|&v| g.deg(v) >= 3).collect()
}

/// Every branch of `g`, oriented from its smaller endpoint, sorted.
///
/// Requires every vertex to have degree 2 or more and at least one branch
/// vertex on every cycle of degree-2 vertices; walks that end elsewhere are
/// reported as an error.
pub fn branches(g: &Graph) -> Result<Vec<Vec<Vertex>>, RecognitionError> {
    let mut out = Vec::new();
    for x in branch_vertices(g) {
        for &first in g.nbrs(x) {
            let mut path = vec![x, first];
            let mut prev = x;
            let mut cur = first;
            while g.deg(cur) == 2 {
                let next = *g.nbrs(cur).iter().find(|&&w| w != prev).unwrap();
                prev = cur;
                cur = next;
                path.push(cur);
                if cur == x && g.deg(cur) < 3 {
                    break;
                }
            }
            if g.deg(cur) < 2 {
                return Err(RecognitionError::NotTwoConnected);
            }
            if cur == x {
                // A closed walk through one branch vertex: that vertex is a cutvertex.
                return Err(RecognitionError::NotTwoConnected);
            }
            if x < cur {
                out.push(path);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// A reduced branch and the original branch it stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchMap {
    pub reduced: Vec<Vertex>,
    pub original: Vec<Vertex>,
}

/// Graph with every branch of length at least 3 shortened to length 2.
///
/// The middle vertex of a shortened branch keeps the id of the branch's
/// second vertex.
#[derive(Clone, Debug)]
pub struct ReducedGraph {
    pub graph: Graph,
    pub branches: Vec<BranchMap>,
}

impl ReducedGraph {
    /// The branch whose reduced image contains `e`.
    pub fn branch_of_edge(&self, e: Edge) -> Option<&BranchMap> {
        self.branches.iter().find(|b| {
            b.reduced.windows(2).any(|w| Edge::new(w[0], w[1]) == e)
        })
    }

    /// Rebuilds the original graph from the branch map.
    pub fn expand(&self) -> Graph {
        let mut g = Graph::new();
        for v in self.graph.vertices() {
            if self.graph.deg(v) >= 3 {
                g.add_vertex(v);
            }
        }
        for b in &self.branches {
            for w in b.original.windows(2) {
                g.add_edge(w[0], w[1]).expect("branches are edge-disjoint");
            }
        }
        g
    }
}

/// Shortens every branch of length at least 3 to length 2.
pub fn reduce(g: &Graph) -> Result<ReducedGraph, RecognitionError> {
    if g.is_cycle() {
        return Err(RecognitionError::IsCycle);
    }
    if !g.is_two_connected() {
        return Err(RecognitionError::NotTwoConnected);
    }
    let mut graph = Graph::new();
    let mut maps = Vec::new();
    for original in branches(g)? {
        let reduced = if original.len() > 3 {
            vec![original[0], original[1], *original.last().unwrap()]
        } else {
            original.clone()
        };
        for w in reduced.windows(2) {
            graph.add_edge(w[0], w[1]).expect("branches are edge-disjoint");
        }
        maps.push(BranchMap { reduced, original });
    }
    Ok(ReducedGraph { graph, branches: maps })
}
