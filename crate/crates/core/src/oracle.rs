//! Exact machinery: the total-colouring checker, the total chromatic number
//! by backtracking, and constrained search used to derive fixtures.
//!
//! Everything here is exponential and meant for small graphs; the element
//! budget guards against accidental use on large inputs.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::colouring::{Colour, TotalColouring};
use crate::graph::{Edge, Element, Graph, Vertex};

/// Default bound on `|V| + |E|` for exact searches.
pub const DEFAULT_BUDGET: usize = 36;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{elements} elements exceed the search budget of {budget}")]
    OverBudget { elements: usize, budget: usize },
    #[error("colouring does not cover {0}")]
    MissingElement(Element),
    #[error("colouring references {0}, which is not in the graph")]
    UnknownElement(Element),
}

/// One broken constraint of a total colouring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    AdjacentVertices { a: Vertex, b: Vertex, colour: Colour },
    AdjacentEdges { e: Edge, f: Edge, colour: Colour },
    Incident { v: Vertex, e: Edge, colour: Colour },
    OutOfPalette { element: Element, colour: Colour },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::AdjacentVertices { a, b, colour } => {
                write!(f, "adjacent vertices {a} and {b} share colour {colour}")
            }
            Violation::AdjacentEdges { e, f: g, colour } => {
                write!(f, "adjacent edges {e} and {g} share colour {colour}")
            }
            Violation::Incident { v, e, colour } => {
                write!(f, "vertex {v} and incident edge {e} share colour {colour}")
            }
            Violation::OutOfPalette { element, colour } => {
                write!(f, "{element} has colour {colour} outside the palette")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `c` is a proper total colouring of `g` with colours in `1..=k`.
///
/// Errors when `c` misses an element of `g` or colours something that is
/// not in `g`; otherwise reports every violation in a deterministic order.
pub fn check_total_colouring(g: &Graph, c: &TotalColouring, k: Colour) -> Result<CheckReport, OracleError> {
    for (el, _) in c.entries() {
        let present = match el {
            Element::Vertex(v) => g.has_vertex(v),
            Element::Edge(e) => g.contains_edge(e),
        };
        if !present {
            return Err(OracleError::UnknownElement(el));
        }
    }
    let colour = |el: Element| c.get(el).ok_or(OracleError::MissingElement(el));
    let mut violations = Vec::new();
    for v in g.vertices() {
        let cv = colour(Element::Vertex(v))?;
        if cv == 0 || cv > k {
            violations.push(Violation::OutOfPalette { element: Element::Vertex(v), colour: cv });
        }
        for &u in g.nbrs(v).range(v..) {
            if colour(Element::Vertex(u))? == cv {
                violations.push(Violation::AdjacentVertices { a: v, b: u, colour: cv });
            }
        }
        let incident: Vec<Edge> = g.incident_edges(v).collect();
        for (i, &e) in incident.iter().enumerate() {
            let ce = colour(Element::Edge(e))?;
            if ce == cv {
                violations.push(Violation::Incident { v, e, colour: cv });
            }
            for &f in &incident[i + 1..] {
                if colour(Element::Edge(f))? == ce {
                    violations.push(Violation::AdjacentEdges { e, f, colour: ce });
                }
            }
        }
    }
    for e in g.edges() {
        let ce = colour(Element::Edge(e))?;
        if ce == 0 || ce > k {
            violations.push(Violation::OutOfPalette { element: Element::Edge(e), colour: ce });
        }
    }
    Ok(CheckReport { violations })
}

/// The conflict graph on elements: two elements conflict when they are
/// adjacent or incident.
#[derive(Clone, Debug)]
pub struct TotalGraph {
    pub elements: Vec<Element>,
    pub conflicts: Vec<Vec<usize>>,
    index: HashMap<Element, usize>,
}

impl TotalGraph {
    pub fn new(g: &Graph) -> TotalGraph {
        let elements: Vec<Element> = g.elements().collect();
        let index: HashMap<Element, usize> = elements.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let mut conflicts = vec![Vec::new(); elements.len()];
        let mut link = |a: Element, b: Element| {
            let (i, j) = (index[&a], index[&b]);
            conflicts[i].push(j);
            conflicts[j].push(i);
        };
        for v in g.vertices() {
            for &u in g.nbrs(v).range(v..) {
                link(Element::Vertex(v), Element::Vertex(u));
            }
            let incident: Vec<Edge> = g.incident_edges(v).collect();
            for (i, &e) in incident.iter().enumerate() {
                link(Element::Vertex(v), Element::Edge(e));
                for &f in &incident[i + 1..] {
                    link(Element::Edge(e), Element::Edge(f));
                }
            }
        }
        TotalGraph { elements, conflicts, index }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, el: Element) -> Option<usize> {
        self.index.get(&el).copied()
    }

    pub fn vertex(&self, v: Vertex) -> usize {
        self.index[&Element::Vertex(v)]
    }

    pub fn edge(&self, a: Vertex, b: Vertex) -> usize {
        self.index[&Element::Edge(Edge::new(a, b))]
    }
}

/// Pruning rule for [`constrained_search`]. Colours are `0` while unset.
pub trait Filter: Sync {
    /// Whether the partial assignment can still be completed, called right
    /// after `just_set` received its colour.
    fn accept(&self, tg: &TotalGraph, colours: &[Colour], just_set: usize) -> bool;

    /// Final check on a complete assignment.
    fn accept_complete(&self, _tg: &TotalGraph, _colours: &[Colour]) -> bool {
        true
    }

    /// Whether the filter is invariant under palette permutations, which
    /// allows symmetry breaking on untouched colours.
    fn palette_symmetric(&self) -> bool {
        true
    }
}

/// Forbids the pattern `(x, xy, yz, z) = (A, B, A, B)` on chosen length-2 paths.
#[derive(Clone, Debug, Default)]
pub struct NoAbab {
    quads: Vec<[usize; 4]>,
    by_element: HashMap<usize, Vec<usize>>,
}

impl NoAbab {
    /// Watches the given paths `x - y - z`.
    pub fn on_paths(tg: &TotalGraph, paths: &[[Vertex; 3]]) -> NoAbab {
        let mut filter = NoAbab::default();
        for &[x, y, z] in paths {
            let quad = [tg.vertex(x), tg.edge(x, y), tg.edge(y, z), tg.vertex(z)];
            let id = filter.quads.len();
            for el in quad {
                filter.by_element.entry(el).or_default().push(id);
            }
            filter.quads.push(quad);
        }
        filter
    }

    /// Watches every length-2 path of `g`.
    pub fn all_paths(g: &Graph, tg: &TotalGraph) -> NoAbab {
        NoAbab::on_paths(tg, &length_two_paths(g))
    }
}

impl Filter for NoAbab {
    fn accept(&self, _tg: &TotalGraph, colours: &[Colour], just_set: usize) -> bool {
        let Some(ids) = self.by_element.get(&just_set) else {
            return true;
        };
        ids.iter().all(|&id| {
            let [x, xy, yz, z] = self.quads[id].map(|i| colours[i]);
            !(x != 0 && xy != 0 && x == yz && xy == z)
        })
    }
}

/// Every path `x - y - z` with `x < z`, ordered by `(y, x, z)`.
pub fn length_two_paths(g: &Graph) -> Vec<[Vertex; 3]> {
    let mut out = Vec::new();
    for y in g.vertices() {
        let nbrs: Vec<Vertex> = g.nbrs(y).iter().copied().collect();
        for (i, &x) in nbrs.iter().enumerate() {
            for &z in &nbrs[i + 1..] {
                out.push([x, y, z]);
            }
        }
    }
    out
}

/// True when the colours of `(x, xy, yz, z)` avoid the pattern ABAB.
pub fn good_pattern(c: &TotalColouring, [x, y, z]: [Vertex; 3]) -> bool {
    let cx = c.vertex(x);
    let cz = c.vertex(z);
    let cxy = c.edge_between(x, y);
    let cyz = c.edge_between(y, z);
    !(cx == cyz && cxy == cz)
}

fn over_budget(g: &Graph, budget: usize) -> Result<(), OracleError> {
    let elements = g.element_count();
    if elements > budget {
        Err(OracleError::OverBudget { elements, budget })
    } else {
        Ok(())
    }
}

/// Total chromatic number by exhaustive search, for `|V| + |E| <= budget`.
pub fn exact_chi_t(g: &Graph, budget: usize) -> Result<Colour, OracleError> {
    over_budget(g, budget)?;
    if g.is_empty() {
        return Ok(0);
    }
    let mut k = (g.max_degree() + 1) as Colour;
    loop {
        if constrained_search_with_budget(g, &TotalColouring::new(k), k, &[], budget)?.is_some() {
            return Ok(k);
        }
        k += 1;
    }
}

/// A `k`-total-colouring extending `fixed` and accepted by `filter`, if any.
/// Uses the default budget.
pub fn constrained_search(
    g: &Graph,
    fixed: &TotalColouring,
    k: Colour,
    filter: Option<&dyn Filter>,
) -> Result<Option<TotalColouring>, OracleError> {
    let filters: Vec<&dyn Filter> = filter.into_iter().collect();
    constrained_search_with_budget(g, fixed, k, &filters, DEFAULT_BUDGET)
}

/// [`constrained_search`] with several filters and an explicit budget.
pub fn constrained_search_with_budget(
    g: &Graph,
    fixed: &TotalColouring,
    k: Colour,
    filters: &[&dyn Filter],
    budget: usize,
) -> Result<Option<TotalColouring>, OracleError> {
    over_budget(g, budget)?;
    let tg = TotalGraph::new(g);
    let mut colours = vec![0 as Colour; tg.len()];
    for (el, c) in fixed.entries() {
        let i = tg.index_of(el).ok_or(OracleError::UnknownElement(el))?;
        if c == 0 || c > k {
            return Ok(None);
        }
        colours[i] = c;
    }
    let mut search = Search::new(&tg, k, filters, colours);
    if !search.consistent_start() {
        return Ok(None);
    }
    if !search.run() {
        return Ok(None);
    }
    let mut out = TotalColouring::new(k);
    for (i, &el) in tg.elements.iter().enumerate() {
        out.set(el, search.colours[i]);
    }
    Ok(Some(out))
}

struct Search<'a> {
    tg: &'a TotalGraph,
    k: Colour,
    filters: &'a [&'a dyn Filter],
    colours: Vec<Colour>,
    /// `blocked[i][c]`: how many coloured neighbours of `i` use `c`.
    blocked: Vec<[u8; 9]>,
    /// Colours that may be swapped freely: not fixed and not used yet.
    in_use: [u32; 9],
    symmetric: bool,
}

impl<'a> Search<'a> {
    fn new(tg: &'a TotalGraph, k: Colour, filters: &'a [&'a dyn Filter], colours: Vec<Colour>) -> Search<'a> {
        assert!(k <= 8, "palette too large for the oracle");
        let symmetric = filters.iter().all(|f| f.palette_symmetric());
        let mut s = Search {
            tg,
            k,
            filters,
            blocked: vec![[0; 9]; tg.len()],
            in_use: [0; 9],
            symmetric,
            colours: vec![0; tg.len()],
        };
        for (i, &c) in colours.iter().enumerate() {
            if c != 0 {
                s.assign(i, c);
            }
        }
        s
    }

    fn consistent_start(&self) -> bool {
        (0..self.tg.len()).all(|i| {
            let c = self.colours[i];
            c == 0 || self.blocked[i][c as usize] == 0
        }) && (0..self.tg.len())
            .filter(|&i| self.colours[i] != 0)
            .all(|i| self.filters.iter().all(|f| f.accept(self.tg, &self.colours, i)))
    }

    fn assign(&mut self, i: usize, c: Colour) {
        self.colours[i] = c;
        self.in_use[c as usize] += 1;
        for &j in &self.tg.conflicts[i] {
            self.blocked[j][c as usize] += 1;
        }
    }

    fn unassign(&mut self, i: usize) {
        let c = self.colours[i];
        self.colours[i] = 0;
        self.in_use[c as usize] -= 1;
        for &j in &self.tg.conflicts[i] {
            self.blocked[j][c as usize] -= 1;
        }
    }

    fn available(&self, i: usize) -> impl Iterator<Item = Colour> + '_ {
        (1..=self.k).filter(move |&c| self.blocked[i][c as usize] == 0)
    }

    /// Most constrained unset element: fewest options, then most conflicts.
    fn pick(&self) -> Option<usize> {
        let mut best: Option<(usize, usize, usize)> = None;
        for i in 0..self.tg.len() {
            if self.colours[i] != 0 {
                continue;
            }
            let options = self.available(i).count();
            let degree = self.tg.conflicts[i].iter().filter(|&&j| self.colours[j] == 0).count();
            let better = match best {
                None => true,
                Some((o, d, _)) => options < o || (options == o && degree > d),
            };
            if better {
                best = Some((options, degree, i));
            }
        }
        best.map(|(_, _, i)| i)
    }

    fn run(&mut self) -> bool {
        let Some(i) = self.pick() else {
            return self.filters.iter().all(|f| f.accept_complete(self.tg, &self.colours));
        };
        let options: Vec<Colour> = self.available(i).collect();
        let mut fresh_tried = false;
        for c in options {
            if self.symmetric && self.in_use[c as usize] == 0 {
                if fresh_tried {
                    continue;
                }
                fresh_tried = true;
            }
            self.assign(i, c);
            if self.filters.iter().all(|f| f.accept(self.tg, &self.colours, i)) && self.run() {
                return true;
            }
            self.unassign(i);
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn checker_flags_each_kind() {
        let k2 = families::complete(2);
        let (a, b) = (Vertex(0), Vertex(1));
        let mut c = TotalColouring::new(4);
        c.set_vertex(a, 1);
        c.set_vertex(b, 1);
        c.set_edge(Edge::new(a, b), 2);
        let report = check_total_colouring(&k2, &c, 4).unwrap();
        assert_eq!(report.violations, vec![Violation::AdjacentVertices { a, b, colour: 1 }]);

        c.set_vertex(b, 5);
        let report = check_total_colouring(&k2, &c, 4).unwrap();
        assert_eq!(
            report.violations,
            vec![Violation::OutOfPalette { element: Element::Vertex(b), colour: 5 }]
        );

        let mut partial = TotalColouring::new(4);
        partial.set_vertex(a, 1);
        assert_eq!(
            check_total_colouring(&k2, &partial, 4),
            Err(OracleError::MissingElement(Element::Vertex(b)))
        );
    }

    #[test]
    fn small_total_chromatic_numbers() {
        assert_eq!(exact_chi_t(&families::complete(4), DEFAULT_BUDGET), Ok(5));
        assert_eq!(exact_chi_t(&families::cycle(5), DEFAULT_BUDGET), Ok(4));
        assert_eq!(exact_chi_t(&families::cycle(6), DEFAULT_BUDGET), Ok(3));
        assert_eq!(exact_chi_t(&families::star(3), DEFAULT_BUDGET), Ok(4));
        assert_eq!(exact_chi_t(&families::complete(2), DEFAULT_BUDGET), Ok(3));
    }

    #[test]
    fn budget_is_enforced() {
        let g = families::cycle(30);
        assert_eq!(
            exact_chi_t(&g, DEFAULT_BUDGET),
            Err(OracleError::OverBudget { elements: 60, budget: 36 })
        );
    }

    #[test]
    fn k4_has_no_four_total_colouring() {
        let k4 = families::complete(4);
        assert_eq!(constrained_search(&k4, &TotalColouring::new(4), 4, None), Ok(None));
    }

    #[test]
    fn fixed_colours_are_kept() {
        let p3 = families::path(3);
        let mut fixed = TotalColouring::new(4);
        fixed.set_vertex(Vertex(0), 1);
        fixed.set_edge(Edge::new(Vertex(0), Vertex(1)), 2);
        fixed.set_edge(Edge::new(Vertex(1), Vertex(2)), 3);
        fixed.set_vertex(Vertex(2), 1);
        let found = constrained_search(&p3, &fixed, 4, None).unwrap().unwrap();
        assert_eq!(found.vertex(Vertex(1)), Some(4));
        assert!(check_total_colouring(&p3, &found, 4).unwrap().is_valid());
    }

    #[test]
    fn abab_filter_prunes() {
        // On P3 with x=1, xy=2, forcing z=2 leaves only yz=1 or others; the
        // filter must reject yz=1.
        let p3 = families::path(3);
        let tg = TotalGraph::new(&p3);
        let filter = NoAbab::all_paths(&p3, &tg);
        let mut fixed = TotalColouring::new(3);
        fixed.set_vertex(Vertex(0), 1);
        fixed.set_edge(Edge::new(Vertex(0), Vertex(1)), 2);
        fixed.set_vertex(Vertex(2), 2);
        // With 3 colours: y must be 3, yz must avoid 2,3 so yz = 1: ABAB.
        assert_eq!(constrained_search(&p3, &fixed, 3, Some(&filter)), Ok(None));
        assert!(constrained_search(&p3, &fixed, 3, None).unwrap().is_some());
    }
}
