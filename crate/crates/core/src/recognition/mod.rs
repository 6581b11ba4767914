//! Class membership: squares, unichords, sparse and strongly 2-bipartite
//! graphs, 2-extensions of the Petersen and Heawood graphs.

use std::fmt;

use thiserror::Error;

use crate::decomposition;
use crate::graph::{Dense, Edge, Graph, Vertex};

pub mod extension;
pub mod iso;
pub mod reduce;

pub use extension::{match_2extension, Base, BranchImage, Embedding};
pub use reduce::{branch_vertices, branches, reduce, BranchMap, ReducedGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecognitionError {
    #[error("graph is empty")]
    Empty,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph is a cycle")]
    IsCycle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    Complete,
    Cycle,
    Sparse,
    Strongly2Bipartite,
    PetersenExtension,
    HeawoodExtension,
    Decomposable,
    Unknown,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ClassLabel::Complete => "complete",
            ClassLabel::Cycle => "cycle",
            ClassLabel::Sparse => "sparse",
            ClassLabel::Strongly2Bipartite => "strongly-2-bipartite",
            ClassLabel::PetersenExtension => "petersen-extension",
            ClassLabel::HeawoodExtension => "heawood-extension",
            ClassLabel::Decomposable => "decomposable",
            ClassLabel::Unknown => "unknown",
        };
        f.write_str(name)
    }
}

/// The lexicographically least induced 4-cycle `(v1, v2, v3, v4)`, with `v1`
/// its smallest vertex and `v2 < v4`.
pub fn find_square(g: &Graph) -> Option<[Vertex; 4]> {
    for v1 in g.vertices() {
        for &v2 in g.nbrs(v1).range(v1..) {
            for &v3 in g.nbrs(v2).range(v1..) {
                if v3 == v1 || g.has_edge(v1, v3) {
                    continue;
                }
                let found = g
                    .nbrs(v3)
                    .range(v2..)
                    .find(|&&v4| v4 != v2 && g.has_edge(v4, v1) && !g.has_edge(v2, v4));
                if let Some(&v4) = found {
                    return Some([v1, v2, v3, v4]);
                }
            }
        }
    }
    None
}

pub fn is_square_free(g: &Graph) -> bool {
    find_square(g).is_none()
}

/// Depth-first search for an induced cycle through `u` and `v` in `g - uv`.
struct CycleSearch<'a> {
    d: &'a Dense,
    u: usize,
    v: usize,
    path: Vec<usize>,
    on_path: Vec<bool>,
    /// How many of `path[1..len-1]` are adjacent to each vertex.
    near: Vec<u32>,
}

impl CycleSearch<'_> {
    fn adjacent(&self, x: usize, y: usize) -> bool {
        self.d.has_edge(x, y) && !((x == self.u && y == self.v) || (x == self.v && y == self.u))
    }

    fn free(&self, w: usize) -> bool {
        !self.on_path[w] && self.near[w] == 0
    }

    /// Whether `v` can still be reached from the path end through vertices
    /// that are free and not adjacent to `u`.
    fn target_reachable(&self) -> bool {
        if self.on_path[self.v] {
            return true;
        }
        let n = self.d.len();
        let mut seen = vec![false; n];
        let mut stack = vec![*self.path.last().unwrap()];
        while let Some(x) = stack.pop() {
            for &w in &self.d.adj[x] {
                if w == self.v && self.adjacent(x, w) && self.free(w) {
                    return true;
                }
                if !seen[w] && self.free(w) && !self.adjacent(w, self.u) && self.adjacent(x, w) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }

    fn push(&mut self, w: usize) {
        if self.path.len() >= 2 {
            let last = *self.path.last().unwrap();
            for &x in &self.d.adj[last] {
                self.near[x] += 1;
            }
        }
        self.path.push(w);
        self.on_path[w] = true;
    }

    fn pop(&mut self) {
        let w = self.path.pop().unwrap();
        self.on_path[w] = false;
        if self.path.len() >= 2 {
            let last = *self.path.last().unwrap();
            for &x in &self.d.adj[last] {
                self.near[x] -= 1;
            }
        }
    }

    fn run(&mut self) -> bool {
        if !self.target_reachable() {
            return false;
        }
        let end = *self.path.last().unwrap();
        let candidates: Vec<usize> = self.d.adj[end].clone();
        for w in candidates {
            if !self.adjacent(end, w) || !self.free(w) {
                continue;
            }
            if self.adjacent(w, self.u) {
                // Closing the cycle here; anything longer would have a chord at u.
                if self.path.len() >= 3 && (self.on_path[self.v] || w == self.v) {
                    self.push(w);
                    return true;
                }
                continue;
            }
            self.push(w);
            if self.run() {
                return true;
            }
            self.pop();
        }
        false
    }
}

/// An induced cycle of `g - uv` through `u` and `v`, as a vertex sequence
/// starting at `u`.
pub fn induced_cycle_avoiding_edge(g: &Graph, u: Vertex, v: Vertex) -> Option<Vec<Vertex>> {
    let d = g.to_dense();
    let (ui, vi) = (d.index(u)?, d.index(v)?);
    let n = d.len();
    let mut search = CycleSearch {
        d: &d,
        u: ui,
        v: vi,
        path: Vec::new(),
        on_path: vec![false; n],
        near: vec![0; n],
    };
    search.push(ui);
    let firsts: Vec<usize> = d.adj[ui].iter().copied().filter(|&w| w != vi).collect();
    for p1 in firsts {
        search.push(p1);
        if search.run() {
            return Some(search.path.iter().map(|&i| d.ids[i]).collect());
        }
        search.pop();
    }
    None
}

/// Whether `uv` is the unique chord of some cycle.
pub fn is_unichord(g: &Graph, e: Edge) -> bool {
    let (u, v) = e.endpoints();
    g.contains_edge(e) && g.deg(u) >= 3 && g.deg(v) >= 3 && induced_cycle_avoiding_edge(g, u, v).is_some()
}

/// The least edge that is the unique chord of some cycle.
///
/// Exponential in the worst case. Only edges between vertices of degree at
/// least 3 can be chords, which keeps sparse-ish inputs cheap.
pub fn find_unichord(g: &Graph) -> Option<Edge> {
    g.edges().find(|&e| is_unichord(g, e))
}

pub fn is_unichord_free(g: &Graph) -> bool {
    find_unichord(g).is_none()
}

/// No two vertices of degree at least 3 are adjacent.
pub fn is_sparse(g: &Graph) -> bool {
    g.edges().all(|e| {
        let (a, b) = e.endpoints();
        g.deg(a) < 3 || g.deg(b) < 3
    })
}

/// Square-free, bipartite, with one side of degree-2 vertices and the other
/// of vertices of degree at least 3 (per component).
pub fn is_strongly_2_bipartite(g: &Graph) -> bool {
    if g.is_empty() {
        return false;
    }
    let Some(sides) = g.bipartition() else {
        return false;
    };
    for comp in g.connected_components() {
        let side_ok = |side: bool, test: &dyn Fn(usize) -> bool| {
            comp.iter().filter(|v| sides[v] == side).all(|&v| test(g.deg(v)))
        };
        let two = |d: usize| d == 2;
        let big = |d: usize| d >= 3;
        let ok = (side_ok(false, &two) && side_ok(true, &big)) || (side_ok(true, &two) && side_ok(false, &big));
        if !ok {
            return false;
        }
    }
    is_square_free(g)
}

/// Which basic class `g` falls in, checked in a fixed order: complete,
/// cycle, strongly 2-bipartite, sparse, Petersen or Heawood 2-extension,
/// decomposable, unknown.
pub fn classify_basic(g: &Graph) -> Result<ClassLabel, RecognitionError> {
    if g.is_empty() {
        return Err(RecognitionError::Empty);
    }
    if !g.is_connected() {
        return Err(RecognitionError::Disconnected);
    }
    if g.is_complete() {
        return Ok(ClassLabel::Complete);
    }
    if g.is_cycle() {
        return Ok(ClassLabel::Cycle);
    }
    if is_strongly_2_bipartite(g) {
        return Ok(ClassLabel::Strongly2Bipartite);
    }
    if is_sparse(g) {
        return Ok(ClassLabel::Sparse);
    }
    let two_connected = g.is_two_connected();
    if two_connected {
        if match_2extension(g, Base::Petersen).is_some() {
            return Ok(ClassLabel::PetersenExtension);
        }
        if match_2extension(g, Base::Heawood).is_some() {
            return Ok(ClassLabel::HeawoodExtension);
        }
    }
    let decomposable = if !two_connected {
        true
    } else {
        matches!(decomposition::find_proper_2_cutset_min_x(g), Ok(Some(_)))
            || decomposition::find_proper_1_join(g).is_some()
    };
    Ok(if decomposable {
        ClassLabel::Decomposable
    } else {
        ClassLabel::Unknown
    })
}

/// Whether `g` is square-free and unichord-free.
pub fn is_in_class(g: &Graph) -> bool {
    is_square_free(g) && is_unichord_free(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn v(i: u32) -> Vertex {
        Vertex(i)
    }

    #[test]
    fn squares() {
        assert_eq!(find_square(&families::cycle(4)), Some([v(0), v(1), v(2), v(3)]));
        assert_eq!(find_square(&families::petersen()), None);
        assert_eq!(find_square(&families::complete(4)), None);
        assert!(find_square(&families::complete_bipartite(2, 3)).is_some());
    }

    #[test]
    fn unichords() {
        let mut g = Graph::from_edges([(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)]).unwrap();
        assert_eq!(find_unichord(&g), Some(Edge::new(v(1), v(3))));
        g.add_edge(v(2), v(4)).unwrap();
        assert_eq!(find_unichord(&g), None);
        assert_eq!(find_unichord(&families::petersen()), None);
        assert_eq!(find_unichord(&families::heawood()), None);
        assert_eq!(find_unichord(&families::complete(4)), None);
    }

    #[test]
    fn sparse_and_bipartite_predicates() {
        let sk4 = families::subdivided_k4();
        assert!(is_sparse(&sk4));
        assert!(!is_sparse(&families::petersen()));
        assert!(is_sparse(&families::cycle(7)));
        assert!(is_strongly_2_bipartite(&sk4));
        assert!(!is_strongly_2_bipartite(&families::cycle(6)));
        assert!(!is_strongly_2_bipartite(&families::complete_bipartite(2, 3)));
    }

    #[test]
    fn classification() {
        assert_eq!(classify_basic(&families::complete(4)), Ok(ClassLabel::Complete));
        assert_eq!(classify_basic(&families::theta(&[3, 3, 3])), Ok(ClassLabel::Sparse));
        assert_eq!(classify_basic(&families::cycle(5)), Ok(ClassLabel::Cycle));
        assert_eq!(classify_basic(&families::subdivided_k4()), Ok(ClassLabel::Strongly2Bipartite));
        assert_eq!(classify_basic(&families::petersen()), Ok(ClassLabel::PetersenExtension));
        assert_eq!(classify_basic(&families::heawood()), Ok(ClassLabel::HeawoodExtension));
        assert_eq!(classify_basic(&families::double_theta()), Ok(ClassLabel::Decomposable));
        let mut two = families::path(2);
        two.add_vertex(v(9));
        assert_eq!(classify_basic(&two), Err(RecognitionError::Disconnected));
    }
}
