//! 4-total-colourings of the basic classes: graphs of maximum degree 2,
//! sparse graphs and 2-extensions of the Petersen and Heawood graphs.
//!
//! The last two accept an optional [`Anchor`], a degree-2 vertex `u` with
//! neighbours `a`, `b` of degree 3 whose elements must get
//! `(a, b, ua, ub) = (1, 1, 2, 3)`.

use std::fmt;

use thiserror::Error;

use crate::colouring::{Colour, TotalColouring};
use crate::graph::{Edge, Graph, Vertex};
use crate::oracle::OracleError;
use crate::path_extension::PathError;
use crate::recognition::Base;

mod extension;
pub mod patterns;
mod sparse;

pub use extension::{colour_2extension, colour_2extension_traced, ExtensionRoute};
pub use patterns::{pattern_table, PatternEntry, PatternTable, Property};
pub use sparse::colour_sparse;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BasicError {
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph is a cycle")]
    IsCycle,
    #[error("graph is not sparse")]
    NotSparse,
    #[error("maximum degree {0} exceeds 3")]
    DegreeTooLarge(usize),
    #[error("graph has maximum degree above 2")]
    NotLowDegree,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid anchor: {0}")]
    BadAnchor(String),
    #[error("embedding does not describe this graph: {0}")]
    BadEmbedding(String),
    #[error("no colouring of the {base} extension with deletion set of size {deleted} could be placed")]
    Unplaced { base: Base, deleted: usize },
    #[error("path extension failed: {0}")]
    Path(#[from] PathError),
    #[error("oracle: {0}")]
    Oracle(#[from] OracleError),
    #[error("pattern table: {0}")]
    Table(String),
    #[error("internal: {0}")]
    Internal(String),
}

/// Degree-2 vertex `u` with neighbours `a` and `b` of degree 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Anchor {
    pub u: Vertex,
    pub a: Vertex,
    pub b: Vertex,
}

impl Anchor {
    pub const COLOURS: [Colour; 4] = [1, 1, 2, 3];

    pub fn new(u: Vertex, a: Vertex, b: Vertex) -> Anchor {
        Anchor { u, a, b }
    }

    pub fn validate(&self, g: &Graph) -> Result<(), BasicError> {
        let bad = |m: String| Err(BasicError::BadAnchor(m));
        if !g.has_vertex(self.u) || !g.has_vertex(self.a) || !g.has_vertex(self.b) {
            return bad("vertex not in graph".into());
        }
        if self.a == self.b {
            return bad("a and b coincide".into());
        }
        if g.deg(self.u) != 2 || !g.has_edge(self.u, self.a) || !g.has_edge(self.u, self.b) {
            return bad(format!("{} must have exactly the neighbours {} and {}", self.u, self.a, self.b));
        }
        if g.deg(self.a) != 3 || g.deg(self.b) != 3 {
            return bad(format!("{} and {} must have degree 3", self.a, self.b));
        }
        Ok(())
    }

    pub fn ua(&self) -> Edge {
        Edge::new(self.u, self.a)
    }

    pub fn ub(&self) -> Edge {
        Edge::new(self.u, self.b)
    }

    /// Whether `c` gives the anchor its required colours.
    pub fn holds(&self, c: &TotalColouring) -> bool {
        [c.vertex(self.a), c.vertex(self.b), c.edge(self.ua()), c.edge(self.ub())] == Anchor::COLOURS.map(Some)
    }

    /// The anchor colours as a fixed partial colouring.
    pub fn as_colouring(&self) -> TotalColouring {
        let mut c = TotalColouring::new(4);
        c.set_vertex(self.a, 1);
        c.set_vertex(self.b, 1);
        c.set_edge(self.ua(), 2);
        c.set_edge(self.ub(), 3);
        c
    }
}

impl fmt::Display for Anchor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "anchor {} between {} and {}", self.u, self.a, self.b)
    }
}

/// Relabels `c` so that the anchor gets its required colours, given that
/// `a` and `b` already share a colour.
pub(crate) fn relabel_to_anchor(c: &TotalColouring, anchor: &Anchor) -> Option<TotalColouring> {
    let ca = c.vertex(anchor.a)?;
    if c.vertex(anchor.b)? != ca {
        return None;
    }
    let perm = crate::colouring::Relabel::extending(
        4,
        &[(ca, 1), (c.edge(anchor.ua())?, 2), (c.edge(anchor.ub())?, 3)],
    )?;
    Some(c.relabelled(&perm))
}

/// Colours along a walk `v0, e01, v1, ...`, smallest colour avoiding the two
/// previous entries.
fn greedy_sequence(len: usize) -> Vec<Colour> {
    let mut seq: Vec<Colour> = Vec::with_capacity(len);
    for i in 0..len {
        let c = (1..=4)
            .find(|c| !(i >= 1 && seq[i - 1] == *c) && !(i >= 2 && seq[i - 2] == *c))
            .unwrap();
        seq.push(c);
    }
    seq
}

/// Cyclic sequence of length `len` with entries at cyclic distance at most 2
/// distinct: `123` repeated when `len` is a multiple of 3, otherwise blocks
/// `1234` and `123`.
fn cyclic_sequence(len: usize) -> Vec<Colour> {
    let fours = match len % 3 {
        0 => 0,
        1 => 1,
        _ => 2,
    };
    let threes = (len - 4 * fours) / 3;
    let mut seq = Vec::with_capacity(len);
    for _ in 0..fours {
        seq.extend([1, 2, 3, 4]);
    }
    for _ in 0..threes {
        seq.extend([1, 2, 3]);
    }
    seq
}

/// Total colouring of a connected graph of maximum degree at most 2.
///
/// Paths get at most 3 colours; cycles get 3 when their length is a
/// multiple of 3 and 4 otherwise.
pub fn colour_low_degree(g: &Graph) -> Result<TotalColouring, BasicError> {
    if g.max_degree() > 2 {
        return Err(BasicError::NotLowDegree);
    }
    if !g.is_connected() {
        return Err(BasicError::Disconnected);
    }
    let mut c = TotalColouring::new(4);
    let Some(first) = g.vertices().next() else {
        return Ok(c);
    };
    let cyclic = g.is_cycle();
    let start = if cyclic {
        first
    } else {
        g.vertices().find(|&v| g.deg(v) <= 1).unwrap()
    };
    let mut walk = vec![start];
    let mut prev = None;
    let mut cur = start;
    loop {
        let next = g.nbrs(cur).iter().copied().find(|&w| Some(w) != prev && w != start);
        match next {
            Some(w) => {
                walk.push(w);
                prev = Some(cur);
                cur = w;
            }
            None => break,
        }
    }
    let n = walk.len();
    let seq = if cyclic {
        cyclic_sequence(2 * n)
    } else {
        greedy_sequence(2 * n - 1)
    };
    for (i, &v) in walk.iter().enumerate() {
        c.set_vertex(v, seq[2 * i]);
        if i + 1 < n {
            c.set_edge(Edge::new(v, walk[i + 1]), seq[2 * i + 1]);
        } else if cyclic {
            c.set_edge(Edge::new(v, walk[0]), seq[2 * i + 1]);
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::oracle::check_total_colouring;

    #[test]
    fn low_degree_graphs() {
        for n in 3..=13 {
            let g = families::cycle(n);
            let c = colour_low_degree(&g).unwrap();
            assert!(check_total_colouring(&g, &c, 4).unwrap().is_valid(), "C{n}");
            let expected = if n % 3 == 0 { 3 } else { 4 };
            assert_eq!(c.colours_used(), expected, "C{n}");
        }
        for n in 1..=7 {
            let g = families::path(n);
            let c = colour_low_degree(&g).unwrap();
            assert!(check_total_colouring(&g, &c, 3).unwrap().is_valid(), "P{n}");
        }
        assert_eq!(colour_low_degree(&families::star(3)), Err(BasicError::NotLowDegree));
    }

    #[test]
    fn anchor_validation() {
        let g = families::theta(&[2, 3, 3]);
        // theta ids: hubs 0 and 1, the length-2 branch middle is 2
        Anchor::new(Vertex(2), Vertex(0), Vertex(1)).validate(&g).unwrap();
        assert!(Anchor::new(Vertex(0), Vertex(2), Vertex(1)).validate(&g).is_err());
        assert!(Anchor::new(Vertex(2), Vertex(0), Vertex(0)).validate(&g).is_err());
    }
}
