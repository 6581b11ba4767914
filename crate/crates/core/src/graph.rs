//! Simple undirected graphs with stable vertex ids.
//!
//! Every enumeration order in the crate derives from the ascending order of
//! [`Vertex`] ids, so results are reproducible run to run.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Opaque vertex id.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vertex(pub u32);

impl Vertex {
    /// First id of the range reserved for synthetic vertices (markers,
    /// contraction vertices). Parsed input never uses this range.
    pub const SYNTHETIC_BASE: u32 = 1 << 31;

    pub fn is_synthetic(self) -> bool {
        self.0 >= Self::SYNTHETIC_BASE
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_synthetic() {
            write!(f, "s{}", self.0 - Self::SYNTHETIC_BASE)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Unordered vertex pair, stored with the smaller id first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    lo: Vertex,
    hi: Vertex,
}

impl Edge {
    /// Builds the unordered pair `{a, b}`. `a` and `b` must differ.
    pub fn new(a: Vertex, b: Vertex) -> Edge {
        debug_assert_ne!(a, b, "loop edge");
        if a < b {
            Edge { lo: a, hi: b }
        } else {
            Edge { lo: b, hi: a }
        }
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.lo, self.hi)
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }

    /// The endpoint that is not `v`, if `v` is an endpoint.
    pub fn other(self, v: Vertex) -> Option<Vertex> {
        if v == self.lo {
            Some(self.hi)
        } else if v == self.hi {
            Some(self.lo)
        } else {
            None
        }
    }

    /// True when the two edges share exactly one endpoint.
    pub fn is_adjacent_to(self, other: Edge) -> bool {
        self != other
            && (self.contains(other.lo) || self.contains(other.hi))
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A vertex or an edge of a graph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Element {
    Vertex(Vertex),
    Edge(Edge),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "vertex {v}"),
            Element::Edge(e) => write!(f, "edge {e}"),
        }
    }
}

/// Provenance of a vertex that does not come from the input graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexLabel {
    /// Marker of a 2-cutset block, adjacent to `a` and `b`.
    Marker { a: Vertex, b: Vertex },
    /// Result of identifying `a` and `b`.
    Contracted { a: Vertex, b: Vertex },
    /// Interior vertex created by subdividing an edge.
    Subdivision,
    /// Degree-2 vertex added next to a cutset to carry an anchor precolouring.
    Anchor { a: Vertex, b: Vertex },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("unknown edge {0}")]
    UnknownEdge(Edge),
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("parallel edge {0}")]
    ParallelEdge(Edge),
    #[error("vertex {0} already present")]
    DuplicateVertex(Vertex),
    #[error("vertices {0} and {1} are adjacent")]
    Adjacent(Vertex, Vertex),
    #[error("adjacency of {0} is not symmetric")]
    Asymmetric(Vertex),
}

/// Simple undirected graph.
///
/// Values are immutable in practice: every structural operation returns a
/// new graph. Labels record the provenance of synthetic vertices.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
    labels: BTreeMap<Vertex, VertexLabel>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.adj.keys().collect::<Vec<_>>())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    pub fn new() -> Graph {
        Graph::default()
    }

    /// Builds a graph from an edge list over raw ids. Loops and repeated
    /// edges are rejected.
    pub fn from_edges<I>(edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut g = Graph::new();
        for (a, b) in edges {
            g.add_edge(Vertex(a), Vertex(b))?;
        }
        Ok(g)
    }

    /// Adds `v`; returns false when it was already present.
    pub fn add_vertex(&mut self, v: Vertex) -> bool {
        if self.adj.contains_key(&v) {
            return false;
        }
        self.adj.insert(v, BTreeSet::new());
        true
    }

    /// Adds the edge `ab`, inserting missing endpoints.
    pub fn add_edge(&mut self, a: Vertex, b: Vertex) -> Result<(), GraphError> {
        if a == b {
            return Err(GraphError::Loop(a));
        }
        if self.has_edge(a, b) {
            return Err(GraphError::ParallelEdge(Edge::new(a, b)));
        }
        self.adj.entry(a).or_default().insert(b);
        self.adj.entry(b).or_default().insert(a);
        Ok(())
    }

    pub fn remove_edge(&mut self, e: Edge) -> Result<(), GraphError> {
        let (a, b) = e.endpoints();
        if !self.has_edge(a, b) {
            return Err(GraphError::UnknownEdge(e));
        }
        self.adj.get_mut(&a).unwrap().remove(&b);
        self.adj.get_mut(&b).unwrap().remove(&a);
        Ok(())
    }

    pub fn remove_vertex(&mut self, v: Vertex) -> Result<(), GraphError> {
        let nbrs = self.adj.remove(&v).ok_or(GraphError::UnknownVertex(v))?;
        for u in nbrs {
            self.adj.get_mut(&u).unwrap().remove(&v);
        }
        self.labels.remove(&v);
        Ok(())
    }

    pub fn set_label(&mut self, v: Vertex, label: VertexLabel) {
        self.labels.insert(v, label);
    }

    pub fn label(&self, v: Vertex) -> Option<&VertexLabel> {
        self.labels.get(&v)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Number of elements (vertices plus edges).
    pub fn element_count(&self) -> usize {
        self.vertex_count() + self.edge_count()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.adj.get(&a).is_some_and(|n| n.contains(&b))
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        let (a, b) = e.endpoints();
        self.has_edge(a, b)
    }

    /// Vertices in ascending id order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.adj.keys().copied().collect()
    }

    /// Edges in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().flat_map(|(&v, nbrs)| {
            nbrs.range(v..)
                .filter(move |&&u| u != v)
                .map(move |&u| Edge::new(v, u))
        })
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.vertices()
            .map(Element::Vertex)
            .chain(self.edges().map(Element::Edge))
    }

    pub fn neighbors(&self, v: Vertex) -> Result<&BTreeSet<Vertex>, GraphError> {
        self.adj.get(&v).ok_or(GraphError::UnknownVertex(v))
    }

    /// Neighbourhood of a vertex known to be present.
    ///
    /// Panics if `v` is not in the graph.
    pub fn nbrs(&self, v: Vertex) -> &BTreeSet<Vertex> {
        &self.adj[&v]
    }

    pub fn degree(&self, v: Vertex) -> Result<usize, GraphError> {
        self.neighbors(v).map(BTreeSet::len)
    }

    pub fn deg(&self, v: Vertex) -> usize {
        self.adj[&v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).min().unwrap_or(0)
    }

    /// Edges incident to `v`, ascending.
    pub fn incident_edges(&self, v: Vertex) -> impl Iterator<Item = Edge> + '_ {
        self.adj[&v].iter().map(move |&u| Edge::new(v, u))
    }

    /// A fresh id from the synthetic range, larger than every id in use.
    pub fn fresh_vertex(&self) -> Vertex {
        let next = self.adj.keys().next_back().map_or(0, |v| v.0 + 1);
        Vertex(next.max(Vertex::SYNTHETIC_BASE))
    }

    /// Re-checks the simple-graph invariants.
    pub fn validate(&self) -> Result<(), GraphError> {
        for (&v, nbrs) in &self.adj {
            if nbrs.contains(&v) {
                return Err(GraphError::Loop(v));
            }
            for u in nbrs {
                match self.adj.get(u) {
                    None => return Err(GraphError::UnknownVertex(*u)),
                    Some(back) if !back.contains(&v) => return Err(GraphError::Asymmetric(v)),
                    _ => {}
                }
            }
        }
        Ok(())
    }

    /// Connected components, each sorted, listed by smallest vertex id.
    pub fn connected_components(&self) -> Vec<BTreeSet<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for &u in &self.adj[&v] {
                    if seen.insert(u) {
                        queue.push_back(u);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Cut vertices of the graph, ascending.
    pub fn articulation_points(&self) -> BTreeSet<Vertex> {
        let dense = self.to_dense();
        dense
            .articulation_points()
            .into_iter()
            .map(|i| dense.ids[i])
            .collect()
    }

    /// Connected, at least 3 vertices, no cutvertex.
    pub fn is_two_connected(&self) -> bool {
        self.vertex_count() >= 3 && self.is_connected() && self.to_dense().articulation_points().is_empty()
    }

    /// Subgraph induced by `keep`; ids and labels are preserved.
    pub fn induced_subgraph<'a, I>(&self, keep: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = &'a Vertex>,
    {
        let keep: BTreeSet<Vertex> = keep.into_iter().copied().collect();
        if let Some(&v) = keep.iter().find(|v| !self.adj.contains_key(v)) {
            return Err(GraphError::UnknownVertex(v));
        }
        let adj = keep
            .iter()
            .map(|&v| {
                let nbrs = self.adj[&v].intersection(&keep).copied().collect();
                (v, nbrs)
            })
            .collect();
        let labels = self
            .labels
            .iter()
            .filter(|(v, _)| keep.contains(v))
            .map(|(v, l)| (*v, l.clone()))
            .collect();
        Ok(Graph { adj, labels })
    }

    /// Graph minus a set of vertices.
    pub fn without<'a, I>(&self, drop: I) -> Graph
    where
        I: IntoIterator<Item = &'a Vertex>,
    {
        let drop: BTreeSet<Vertex> = drop.into_iter().copied().collect();
        let keep: Vec<Vertex> = self.vertices().filter(|v| !drop.contains(v)).collect();
        self.induced_subgraph(&keep).expect("subset of own vertices")
    }

    /// Identifies the non-adjacent vertices `a` and `b` into `new_id`,
    /// adjacent to `N(a) ∪ N(b)`.
    pub fn contract_pair(&self, a: Vertex, b: Vertex, new_id: Vertex) -> Result<Graph, GraphError> {
        let na = self.neighbors(a)?.clone();
        let nb = self.neighbors(b)?.clone();
        if a == b {
            return Err(GraphError::Loop(a));
        }
        if na.contains(&b) {
            return Err(GraphError::Adjacent(a, b));
        }
        if self.has_vertex(new_id) {
            return Err(GraphError::DuplicateVertex(new_id));
        }
        let mut g = self.clone();
        g.remove_vertex(a)?;
        g.remove_vertex(b)?;
        g.add_vertex(new_id);
        for u in na.union(&nb) {
            g.add_edge(new_id, *u)?;
        }
        g.set_label(new_id, VertexLabel::Contracted { a, b });
        Ok(g)
    }

    /// Replaces `uv` by the path `u - new_id - v`.
    pub fn subdivide_edge(&self, e: Edge, new_id: Vertex) -> Result<Graph, GraphError> {
        if !self.contains_edge(e) {
            return Err(GraphError::UnknownEdge(e));
        }
        if self.has_vertex(new_id) {
            return Err(GraphError::DuplicateVertex(new_id));
        }
        let (u, v) = e.endpoints();
        let mut g = self.clone();
        g.remove_edge(e)?;
        g.add_edge(u, new_id)?;
        g.add_edge(new_id, v)?;
        g.set_label(new_id, VertexLabel::Subdivision);
        Ok(g)
    }

    /// Renames vertices through `f`, which must be injective on the vertex set.
    pub fn map_vertices(&self, mut f: impl FnMut(Vertex) -> Vertex) -> Graph {
        let mut g = Graph::new();
        let image: BTreeMap<Vertex, Vertex> = self.vertices().map(|v| (v, f(v))).collect();
        for &w in image.values() {
            g.add_vertex(w);
        }
        for e in self.edges() {
            let (a, b) = e.endpoints();
            g.add_edge(image[&a], image[&b]).expect("injective renaming");
        }
        for (v, l) in &self.labels {
            g.set_label(image[v], l.clone());
        }
        g
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adj.values().all(|s| s.len() + 1 == n)
    }

    /// Connected 2-regular graph on at least 3 vertices.
    pub fn is_cycle(&self) -> bool {
        self.vertex_count() >= 3 && self.adj.values().all(|s| s.len() == 2) && self.is_connected()
    }

    /// Proper 2-colouring as `side[v]`, or `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<BTreeMap<Vertex, bool>> {
        let mut side = BTreeMap::new();
        for start in self.vertices() {
            if side.contains_key(&start) {
                continue;
            }
            side.insert(start, false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let s = side[&v];
                for &u in &self.adj[&v] {
                    match side.get(&u) {
                        Some(&t) if t == s => return None,
                        Some(_) => {}
                        None => {
                            side.insert(u, !s);
                            queue.push_back(u);
                        }
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn to_dense(&self) -> Dense {
        let ids: Vec<Vertex> = self.vertices().collect();
        let adj = ids
            .iter()
            .map(|v| {
                self.adj[v]
                    .iter()
                    .map(|u| ids.binary_search(u).expect("symmetric adjacency"))
                    .collect()
            })
            .collect();
        Dense { ids, adj }
    }
}

/// Index-based snapshot of a graph for the hot loops.
#[derive(Clone, Debug)]
pub struct Dense {
    /// `ids[i]` is the vertex behind index `i`; ascending.
    pub ids: Vec<Vertex>,
    pub adj: Vec<Vec<usize>>,
}

impl Dense {
    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn index(&self, v: Vertex) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(&j)
    }

    /// Iterative Tarjan low-link.
    pub fn articulation_points(&self) -> Vec<usize> {
        let n = self.len();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbour position)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            while let Some(&mut (v, parent, ref mut pos)) = stack.last_mut() {
                if *pos < self.adj[v].len() {
                    let u = self.adj[v][*pos];
                    *pos += 1;
                    if u == parent {
                        continue;
                    }
                    if disc[u] == usize::MAX {
                        disc[u] = timer;
                        low[u] = timer;
                        timer += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((u, v, 0));
                    } else {
                        low[v] = low[v].min(disc[u]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if p != root && low[v] >= disc[p] {
                            is_cut[p] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&i| is_cut[i]).collect()
    }

    /// Components of the graph restricted to indices with `alive[i]`.
    pub fn components_where(&self, alive: &[bool]) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if !alive[s] || comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = Vec::new();
            comp[s] = id;
            stack.push(s);
            while let Some(v) = stack.pop() {
                members.push(v);
                for &u in &self.adj[v] {
                    if alive[u] && comp[u] == usize::MAX {
                        comp[u] = id;
                        stack.push(u);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn v(i: u32) -> Vertex {
        Vertex(i)
    }

    #[test]
    fn degree_examples() {
        let p = families::petersen();
        assert!(p.vertices().all(|x| p.degree(x) == Ok(3)));
        let mut single = Graph::new();
        single.add_vertex(v(7));
        assert_eq!(single.degree(v(7)), Ok(0));
        let star = families::star(3);
        assert_eq!(star.degree(v(0)), Ok(3));
        assert_eq!(star.degree(v(99)), Err(GraphError::UnknownVertex(v(99))));
    }

    #[test]
    fn components() {
        assert_eq!(families::petersen().connected_components().len(), 1);
        assert_eq!(families::petersen().connected_components()[0].len(), 10);
        let two = Graph::from_edges([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let comps = two.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 3));
        assert_eq!(comps[0].first(), Some(&v(0)));
        assert!(Graph::new().connected_components().is_empty());
    }

    #[test]
    fn two_connectivity() {
        assert!(families::cycle(5).is_two_connected());
        assert!(!families::path(3).is_two_connected());
        assert!(families::heawood().is_two_connected());
        assert!(families::petersen().is_two_connected());
        assert!(!families::complete(2).is_two_connected());
        let bowtie = Graph::from_edges([(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(bowtie.articulation_points(), BTreeSet::from([v(0)]));
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = families::complete(4);
        let tri = k4.induced_subgraph(&[v(0), v(1), v(2)]).unwrap();
        assert_eq!(tri, families::complete(3));
        let p = families::petersen();
        let outer = p.induced_subgraph(&[v(0), v(1), v(2), v(3), v(4)]).unwrap();
        assert_eq!(outer, families::cycle(5));
        let all = p.vertex_set();
        assert_eq!(p.induced_subgraph(&all).unwrap(), p);
        assert_eq!(
            p.induced_subgraph(&[v(0), v(42)]),
            Err(GraphError::UnknownVertex(v(42)))
        );
    }

    #[test]
    fn contract_examples() {
        // u=0 - a=1, b=2 - w=3
        let g = Graph::from_edges([(0, 1), (2, 3)]).unwrap();
        let c = g.contract_pair(v(1), v(2), v(9)).unwrap();
        assert_eq!(c, {
            let mut h = Graph::from_edges([(0, 9), (9, 3)]).unwrap();
            h.set_label(v(9), VertexLabel::Contracted { a: v(1), b: v(2) });
            h
        });
        // C6 a-1-2-b-3-4-a with a=10, b=20
        let c6 = Graph::from_edges([(10, 1), (1, 2), (2, 20), (20, 3), (3, 4), (4, 10)]).unwrap();
        let x = c6.contract_pair(v(10), v(20), v(99)).unwrap();
        assert_eq!(x.vertex_count(), 5);
        assert_eq!(x.edge_count(), 6);
        assert_eq!(x.articulation_points(), BTreeSet::from([v(99)]));
        assert!(x.has_edge(v(1), v(2)) && x.has_edge(v(3), v(4)));
        let k2 = families::complete(2);
        assert_eq!(
            k2.contract_pair(v(0), v(1), v(5)),
            Err(GraphError::Adjacent(v(0), v(1)))
        );
        assert_eq!(
            c6.contract_pair(v(10), v(20), v(3)),
            Err(GraphError::DuplicateVertex(v(3)))
        );
    }

    #[test]
    fn subdivide_examples() {
        let k2 = families::complete(2);
        let p3 = k2.subdivide_edge(Edge::new(v(0), v(1)), v(2)).unwrap();
        assert_eq!(p3.vertex_count(), 3);
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(p3.deg(v(2)), 2);
        let c4 = families::cycle(3).subdivide_edge(Edge::new(v(0), v(1)), v(3)).unwrap();
        assert!(c4.is_cycle() && c4.vertex_count() == 4);
        let c5 = c4.subdivide_edge(Edge::new(v(1), v(2)), v(4)).unwrap();
        assert!(c5.is_cycle() && c5.vertex_count() == 5);
        assert_eq!(
            k2.subdivide_edge(Edge::new(v(0), v(5)), v(6)),
            Err(GraphError::UnknownEdge(Edge::new(v(0), v(5))))
        );
    }

    #[test]
    fn rejects_loops_and_parallel_edges() {
        assert_eq!(Graph::from_edges([(1, 1)]), Err(GraphError::Loop(v(1))));
        assert_eq!(
            Graph::from_edges([(1, 2), (2, 1)]),
            Err(GraphError::ParallelEdge(Edge::new(v(1), v(2))))
        );
    }

    #[test]
    fn fresh_ids_are_synthetic() {
        let g = families::petersen();
        let f = g.fresh_vertex();
        assert!(f.is_synthetic());
        let mut h = g.clone();
        h.add_edge(f, v(0)).unwrap();
        assert!(h.fresh_vertex() > f);
    }
}
