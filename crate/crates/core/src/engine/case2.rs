//! Local completions around `y` when `y` is adjacent to both `a'` and `b'`.
//!
//! After colouring `G[Y - y]`, the elements left are `a'`, `b'` (recoloured),
//! `y`, its edges, and the anchor `a = b = 1`, `aa' = 2`, `bb' = 3`. For `y`
//! of degree 2 the answer depends only on the colours `(c1, c2, c3, c4)` of
//! `a'a''`, `b'b''`, `a''`, `b''`, so it is tabulated once by brute force.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::colouring::{palette_permutations, Colour, Relabel, TotalColouring};
use crate::graph::{Edge, Element, Graph, Vertex};

/// Palette permutation for `G[Y - y]` and the colours of the new elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Completion {
    pub perm: Relabel,
    pub a1: Colour,
    pub b1: Colour,
    pub y: Colour,
    pub a1y: Colour,
    pub b1y: Colour,
}

/// Which of the three situations of the colour argument a tuple is in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubCase {
    /// `c1 = c2`.
    EqualEdges,
    /// `c1 != c2`, `c3 != c4`.
    DistinctEnds,
    /// `c1 != c2`, `c3 = c4`.
    EqualEnds,
}

impl SubCase {
    pub fn of([c1, c2, c3, c4]: [Colour; 4]) -> SubCase {
        if c1 == c2 {
            SubCase::EqualEdges
        } else if c3 != c4 {
            SubCase::DistinctEnds
        } else {
            SubCase::EqualEnds
        }
    }
}

fn fits(t: [Colour; 4], a1: Colour, b1: Colour, y: Colour, a1y: Colour, b1y: Colour) -> bool {
    let [c1, c2, c3, c4] = t;
    let a_ok = ![1, 2, c1, c3, y, a1y].contains(&a1) && c1 != 2 && a1y != 2 && a1y != c1;
    let b_ok = ![1, 3, c2, c4, y, b1y].contains(&b1) && c2 != 3 && b1y != 3 && b1y != c2;
    let y_ok = a1y != b1y && y != a1y && y != b1y;
    a_ok && b_ok && y_ok
}

fn solve(t: [Colour; 4]) -> Option<Completion> {
    for perm in palette_permutations(4) {
        let p = t.map(|c| perm.apply(c));
        for a1 in 1..=4 {
            for b1 in 1..=4 {
                for y in 1..=4 {
                    for a1y in 1..=4 {
                        for b1y in 1..=4 {
                            if fits(p, a1, b1, y, a1y, b1y) {
                                return Some(Completion { perm, a1, b1, y, a1y, b1y });
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// Every proper tuple `(c1, c2, c3, c4)`, i.e. `c1 != c3` and `c2 != c4`,
/// with its first completion in lexicographic order.
pub fn completion_table() -> &'static BTreeMap<[Colour; 4], Completion> {
    static TABLE: OnceLock<BTreeMap<[Colour; 4], Completion>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = BTreeMap::new();
        for c1 in 1..=4 {
            for c2 in 1..=4 {
                for c3 in (1..=4).filter(|&c| c != c1) {
                    for c4 in (1..=4).filter(|&c| c != c2) {
                        let t = [c1, c2, c3, c4];
                        let done = solve(t).expect("every boundary tuple has a completion");
                        table.insert(t, done);
                    }
                }
            }
        }
        table
    })
}

/// Colours of the elements touching `el` in `h`.
fn neighbours(h: &Graph, el: Element) -> Vec<Element> {
    match el {
        Element::Vertex(v) => h
            .nbrs(v)
            .iter()
            .map(|&w| Element::Vertex(w))
            .chain(h.incident_edges(v).map(Element::Edge))
            .collect(),
        Element::Edge(e) => {
            let (a, b) = e.endpoints();
            let mut out = vec![Element::Vertex(a), Element::Vertex(b)];
            for end in [a, b] {
                out.extend(h.incident_edges(end).filter(|&f| f != e).map(Element::Edge));
            }
            out
        }
    }
}

fn backtrack(h: &Graph, c: &mut TotalColouring, unknown: &[Element]) -> bool {
    let Some((&el, rest)) = unknown.split_first() else {
        return true;
    };
    let near = neighbours(h, el);
    for col in 1..=4 {
        if near.iter().any(|&n| c.get(n) == Some(col)) {
            continue;
        }
        c.set(el, col);
        if backtrack(h, c, rest) {
            return true;
        }
    }
    c.clear(el);
    false
}

/// Finds a palette permutation of `partial` and colours for `unknown` so that
/// `fixed` holds and the result is a proper total colouring of `h`.
///
/// `partial` must colour every element of `h` outside `unknown` and `fixed`.
pub fn complete_locally(
    h: &Graph,
    partial: &TotalColouring,
    fixed: &[(Element, Colour)],
    unknown: &[Element],
) -> Option<TotalColouring> {
    for perm in palette_permutations(4) {
        let mut c = partial.relabelled(&perm);
        for &(el, col) in fixed {
            c.set(el, col);
        }
        let clash = fixed
            .iter()
            .any(|&(el, col)| neighbours(h, el).iter().any(|&n| c.get(n) == Some(col)));
        if clash {
            continue;
        }
        if backtrack(h, &mut c, unknown) {
            return Some(c);
        }
    }
    None
}

/// Anchor elements `(a, b, aa', bb')` at their required colours.
pub fn anchor_elements(a: Vertex, b: Vertex, a1: Vertex, b1: Vertex) -> [(Element, Colour); 4] {
    [
        (Element::Vertex(a), 1),
        (Element::Vertex(b), 1),
        (Element::Edge(Edge::new(a, a1)), 2),
        (Element::Edge(Edge::new(b, b1)), 3),
    ]
}
