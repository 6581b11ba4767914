//! The recursive 4-total-colouring algorithm.
//!
//! A connected graph is coloured by the first rule that applies: maximum
//! degree 2, a cutvertex, sparse, a 2-extension, or a proper 2-cutset
//! `{a, b}` with `|X|` minimal. At the cutset the `X` side plus a marker
//! `u` is an anchored basic graph; the `Y` side is coloured recursively so
//! that `a = b = 1`, `aa' = 2`, `bb' = 3`, and the two halves are glued.

use std::collections::BTreeSet;

use log::{debug, warn};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::basic::{colour_2extension_traced, colour_low_degree, colour_sparse, Anchor, BasicError};
use crate::colouring::{palette_permutations, Colour, Relabel, TotalColouring};
use crate::decomposition::{find_1_cutset, find_proper_2_cutset_min_x, DecompositionError, Split1, Split2};
use crate::graph::{Edge, Element, Graph, GraphError, Vertex, VertexLabel};
use crate::oracle::{self, check_total_colouring, OracleError};
use crate::recognition::{find_square, find_unichord, is_sparse, match_2extension, Base};

pub mod case2;
mod tree;

pub use tree::{CutsetInfo, DecompositionTree, Rule};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("maximum degree {0} exceeds 3")]
    DegreeTooLarge(usize),
    #[error("graph contains the square {}", fmt_square(.0))]
    Square([Vertex; 4]),
    #[error("graph contains the unichord {0}")]
    Unichord(Edge),
    #[error("no rule applies to a block with {vertices} vertices: {reason}")]
    NoRule { vertices: usize, reason: String },
    #[error("produced colouring is invalid: {0}")]
    Invalid(String),
    #[error(transparent)]
    Basic(#[from] BasicError),
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("thread pool: {0}")]
    Pool(String),
}

fn fmt_square(s: &[Vertex; 4]) -> String {
    format!("{} {} {} {}", s[0], s[1], s[2], s[3])
}

impl EngineError {
    /// Whether the input is outside the class the algorithm is for.
    pub fn is_class_violation(&self) -> bool {
        matches!(self, EngineError::DegreeTooLarge(_) | EngineError::Square(_) | EngineError::Unichord(_))
    }
}

#[derive(Clone, Debug)]
pub struct EngineOptions {
    /// Inputs with at most this many vertices get the full membership test;
    /// larger ones are only checked for squares.
    pub max_exact: usize,
    /// Skip the membership test.
    pub trust_class: bool,
    /// Threads used across connected components.
    pub jobs: usize,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            max_exact: 40,
            trust_class: false,
            jobs: 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiagnosticKind {
    /// A structural fact the recursion relies on did not hold.
    Assertion,
    /// A block was coloured by search instead of its rule.
    Fallback,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    pub message: String,
}

#[derive(Clone, Debug)]
pub struct Coloured {
    pub colouring: TotalColouring,
    pub tree: DecompositionTree,
    pub diagnostics: Vec<Diagnostic>,
}

/// Result for a graph with a `K4` component, which needs 5 colours.
#[derive(Clone, Debug)]
pub struct K4Report {
    pub chi_t: Colour,
    pub colouring: TotalColouring,
    pub tree: DecompositionTree,
    pub diagnostics: Vec<Diagnostic>,
}

#[derive(Clone, Debug)]
pub enum Outcome {
    Coloured(Coloured),
    K4(K4Report),
}

impl Outcome {
    pub fn colouring(&self) -> &TotalColouring {
        match self {
            Outcome::Coloured(c) => &c.colouring,
            Outcome::K4(k) => &k.colouring,
        }
    }

    pub fn tree(&self) -> &DecompositionTree {
        match self {
            Outcome::Coloured(c) => &c.tree,
            Outcome::K4(k) => &k.tree,
        }
    }

    pub fn diagnostics(&self) -> &[Diagnostic] {
        match self {
            Outcome::Coloured(c) => &c.diagnostics,
            Outcome::K4(k) => &k.diagnostics,
        }
    }

    /// Size of the palette the colouring uses.
    pub fn palette(&self) -> Colour {
        match self {
            Outcome::Coloured(_) => 4,
            Outcome::K4(k) => k.chi_t,
        }
    }

    pub fn is_k4(&self) -> bool {
        matches!(self, Outcome::K4(_))
    }
}

/// Total colouring of `g` with the default options.
pub fn total_colour(g: &Graph) -> Result<Outcome, EngineError> {
    total_colour_with(g, &EngineOptions::default())
}

/// Total colouring of a {square, unichord}-free graph of maximum degree at
/// most 3, with 4 colours unless some component is `K4`.
///
/// The result is always checked; an invalid colouring is an error, never a
/// return value.
pub fn total_colour_with(g: &Graph, opts: &EngineOptions) -> Result<Outcome, EngineError> {
    g.validate()?;
    if g.max_degree() > 3 {
        return Err(EngineError::DegreeTooLarge(g.max_degree()));
    }
    if !opts.trust_class {
        check_class(g, opts)?;
    }
    let parts: Vec<Graph> = g
        .connected_components()
        .iter()
        .map(|c| g.induced_subgraph(c.iter()))
        .collect::<Result<_, _>>()?;
    let results: Vec<Result<Part, EngineError>> = if opts.jobs > 1 && parts.len() > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| EngineError::Pool(e.to_string()))?;
        pool.install(|| parts.par_iter().map(colour_component).collect())
    } else {
        parts.iter().map(colour_component).collect()
    };

    let mut colouring = TotalColouring::new(4);
    let mut trees = Vec::new();
    let mut diagnostics = Vec::new();
    let mut k4 = false;
    for r in results {
        let part = r?;
        colouring.absorb(&part.colouring);
        trees.push(part.tree);
        diagnostics.extend(part.diagnostics);
        k4 |= part.k4;
    }
    let palette = if k4 { 5 } else { 4 };
    colouring.set_palette(palette);
    let report = check_total_colouring(g, &colouring, palette)?;
    if !report.is_valid() {
        return Err(EngineError::Invalid(format!("{:?}", report.violations)));
    }
    let tree = if trees.len() == 1 {
        trees.pop().unwrap()
    } else {
        DecompositionTree::leaf(g, Rule::Components, "").with_children(trees)
    };
    Ok(if k4 {
        Outcome::K4(K4Report {
            chi_t: 5,
            colouring,
            tree,
            diagnostics,
        })
    } else {
        Outcome::Coloured(Coloured {
            colouring,
            tree,
            diagnostics,
        })
    })
}

fn check_class(g: &Graph, opts: &EngineOptions) -> Result<(), EngineError> {
    if let Some(sq) = find_square(g) {
        return Err(EngineError::Square(sq));
    }
    if g.vertex_count() <= opts.max_exact {
        if let Some(e) = find_unichord(g) {
            return Err(EngineError::Unichord(e));
        }
    }
    Ok(())
}

fn is_k4(g: &Graph) -> bool {
    g.vertex_count() == 4 && g.is_complete()
}

struct Part {
    colouring: TotalColouring,
    tree: DecompositionTree,
    diagnostics: Vec<Diagnostic>,
    k4: bool,
}

fn colour_component(g: &Graph) -> Result<Part, EngineError> {
    if is_k4(g) {
        let c = oracle::constrained_search(g, &TotalColouring::new(5), 5, None)?
            .ok_or_else(|| EngineError::Invalid("K4 has no 5-total-colouring".into()))?;
        return Ok(Part {
            colouring: c,
            tree: DecompositionTree::leaf(g, Rule::K4, "5 colours"),
            diagnostics: Vec::new(),
            k4: true,
        });
    }
    let mut run = Run::default();
    let (colouring, tree) = colour_block(g, &mut run)?;
    Ok(Part {
        colouring,
        tree,
        diagnostics: run.diagnostics,
        k4: false,
    })
}

#[derive(Default)]
struct Run {
    diagnostics: Vec<Diagnostic>,
}

impl Run {
    fn note(&mut self, kind: DiagnosticKind, message: String) {
        warn!("{message}");
        self.diagnostics.push(Diagnostic { kind, message });
    }
}

type Step = (TotalColouring, DecompositionTree);

fn no_rule(g: &Graph, reason: impl Into<String>) -> EngineError {
    EngineError::NoRule {
        vertices: g.vertex_count(),
        reason: reason.into(),
    }
}

/// Colours a connected block, recording the recursion.
fn colour_block(g: &Graph, run: &mut Run) -> Result<Step, EngineError> {
    if g.max_degree() <= 2 {
        return Ok((colour_low_degree(g)?, DecompositionTree::leaf(g, Rule::LowDegree, "")));
    }
    if is_k4(g) {
        run.note(DiagnosticKind::Assertion, "K4 reached inside the recursion".into());
        return Err(no_rule(g, "K4 block"));
    }
    if let Some(split) = find_1_cutset(g)? {
        return one_cutset(g, &split, run);
    }
    if is_sparse(g) {
        return Ok((colour_sparse(g, None)?, DecompositionTree::leaf(g, Rule::Sparse, "")));
    }
    for base in [Base::Petersen, Base::Heawood] {
        if let Some(emb) = match_2extension(g, base) {
            let (c, route) = colour_2extension_traced(g, &emb, None)?;
            if route.is_fallback() {
                run.note(
                    DiagnosticKind::Fallback,
                    format!("{base} extension on {} vertices coloured by {route}", g.vertex_count()),
                );
            }
            let detail = format!("{base}, {} deleted, {route}", emb.deleted.len());
            return Ok((c, DecompositionTree::leaf(g, Rule::Extension, detail)));
        }
    }
    if let Some(split) = find_proper_2_cutset_min_x(g)? {
        return two_cutset(g, &split, run);
    }
    run.note(
        DiagnosticKind::Assertion,
        format!("no rule applies to a 2-connected block on {} vertices", g.vertex_count()),
    );
    search(g, run, "no rule applies")
}

fn search(g: &Graph, run: &mut Run, why: &str) -> Result<Step, EngineError> {
    if g.element_count() > oracle::DEFAULT_BUDGET {
        return Err(no_rule(g, why));
    }
    let c = oracle::constrained_search(g, &TotalColouring::new(4), 4, None)?.ok_or_else(|| no_rule(g, why))?;
    run.note(DiagnosticKind::Fallback, format!("block on {} vertices coloured by search", g.vertex_count()));
    Ok((c, DecompositionTree::leaf(g, Rule::Search, why)))
}

/// Colours at `v` (vertex first, then its edges) in `g`.
fn at_vertex(g: &Graph, c: &TotalColouring, v: Vertex) -> (Colour, Vec<Colour>) {
    let edges = g.incident_edges(v).filter_map(|e| c.edge(e)).collect();
    (c.vertex(v).unwrap_or(0), edges)
}

fn one_cutset(g: &Graph, split: &Split1, run: &mut Run) -> Result<Step, EngineError> {
    let v = split.v;
    let mut xs = split.x.clone();
    xs.insert(v);
    let mut ys = split.y.clone();
    ys.insert(v);
    let gx = g.induced_subgraph(xs.iter())?;
    let gy = g.induced_subgraph(ys.iter())?;
    let (cx, tx) = colour_block(&gx, run)?;
    let (cy, ty) = colour_block(&gy, run)?;

    let (vx, ex) = at_vertex(&gx, &cx, v);
    let px = Relabel::extending(4, &[(vx, 1)]).ok_or_else(|| no_rule(g, "cutvertex uncoloured"))?;
    let ex: Vec<Colour> = ex.iter().map(|&c| px.apply(c)).collect();
    let (vy, ey) = at_vertex(&gy, &cy, v);
    let py = palette_permutations(4)
        .into_iter()
        .find(|p| p.apply(vy) == 1 && ey.iter().all(|&c| !ex.contains(&p.apply(c))))
        .ok_or_else(|| no_rule(g, format!("cannot merge at cutvertex {v}")))?;
    let mut c = cx.relabelled(&px);
    c.absorb(&cy.relabelled(&py));
    let tree = DecompositionTree::leaf(g, Rule::OneCutset, format!("at {v}")).with_children(vec![tx, ty]);
    Ok((c, tree))
}

fn only(set: Vec<Vertex>) -> Option<Vertex> {
    match set[..] {
        [v] => Some(v),
        _ => None,
    }
}

fn two_cutset(g: &Graph, s: &Split2, run: &mut Run) -> Result<Step, EngineError> {
    let (a, b) = (s.a, s.b);
    let side = |v: Vertex, part: &BTreeSet<Vertex>| -> Vec<Vertex> {
        g.nbrs(v).iter().copied().filter(|w| part.contains(w)).collect()
    };
    let (ax, bx) = (side(a, &s.x), side(b, &s.x));
    if ax.len() < 2 || bx.len() < 2 {
        run.note(
            DiagnosticKind::Assertion,
            format!("{s}: a and b need two neighbours in X, have {} and {}", ax.len(), bx.len()),
        );
    }
    let (Some(a1), Some(b1)) = (only(side(a, &s.y)), only(side(b, &s.y))) else {
        run.note(DiagnosticKind::Assertion, format!("{s}: a or b has several neighbours in Y"));
        return search(g, run, "cutset vertices with several neighbours in Y");
    };
    if a1 == b1 {
        run.note(DiagnosticKind::Assertion, format!("{s}: a' = b' = {a1}"));
        return search(g, run, "a' = b'");
    }

    let (cx, tx) = colour_x_side(g, s, run)?;
    let common = s
        .y
        .iter()
        .copied()
        .find(|&y| y != a1 && y != b1 && g.has_edge(y, a1) && g.has_edge(y, b1));
    let (cy, rule, detail, mut children) = match common {
        None => {
            let (c, t) = contract_side(g, s, a1, b1, run)?;
            (c, Rule::TwoCutsetContract, String::new(), vec![t])
        }
        Some(y) => {
            let (c, detail, ts) = common_neighbour_side(g, s, a1, b1, y, run)?;
            (c, Rule::TwoCutsetCommonNeighbour, detail, ts)
        }
    };
    let mut c = cx;
    c.absorb(&cy);
    let info = CutsetInfo {
        a,
        b,
        x: s.x.iter().copied().collect(),
        y: s.y.iter().copied().collect(),
        a_in_x: ax.len(),
        b_in_x: bx.len(),
        a1,
        b1,
        x_side: tx.rule,
    };
    children.insert(0, tx);
    let mut tree = DecompositionTree::leaf(g, rule, detail).with_children(children);
    tree.cutset = Some(info);
    Ok((c, tree))
}

/// Colours `G[X + {a, b}]` through `G_X`, the same graph plus a marker `u`
/// adjacent to `a` and `b`, anchored at `u`.
fn colour_x_side(g: &Graph, s: &Split2, run: &mut Run) -> Result<Step, EngineError> {
    let mut keep = s.x.clone();
    keep.insert(s.a);
    keep.insert(s.b);
    let inner = g.induced_subgraph(keep.iter())?;
    let u = inner.fresh_vertex();
    let mut gx = inner.clone();
    gx.add_vertex(u);
    gx.add_edge(u, s.a)?;
    gx.add_edge(u, s.b)?;
    gx.set_label(u, VertexLabel::Anchor { a: s.a, b: s.b });
    let anchor = Anchor::new(u, s.a, s.b);

    let (c, tree) = if is_sparse(&gx) && gx.is_two_connected() && !gx.is_cycle() {
        let c = colour_sparse(&gx, Some(&anchor))?;
        (c, DecompositionTree::leaf(&gx, Rule::Sparse, format!("{anchor}")))
    } else if let Some(emb) = [Base::Petersen, Base::Heawood]
        .into_iter()
        .find_map(|base| match_2extension(&gx, base))
    {
        let (c, route) = colour_2extension_traced(&gx, &emb, Some(&anchor))?;
        if route.is_fallback() {
            run.note(
                DiagnosticKind::Fallback,
                format!("{} extension X side of {s} coloured by {route}", emb.base),
            );
        }
        let detail = format!("{}, {} deleted, {route}, {anchor}", emb.base, emb.deleted.len());
        (c, DecompositionTree::leaf(&gx, Rule::Extension, detail))
    } else {
        run.note(
            DiagnosticKind::Assertion,
            format!("X side of {s} is neither sparse nor a 2-extension"),
        );
        if gx.element_count() > oracle::DEFAULT_BUDGET {
            return Err(no_rule(&gx, "X side is not basic"));
        }
        let c = oracle::constrained_search(&gx, &anchor.as_colouring(), 4, None)?
            .ok_or_else(|| no_rule(&gx, "X side has no anchored colouring"))?;
        (c, DecompositionTree::leaf(&gx, Rule::Search, format!("{anchor}")))
    };
    debug_assert!(anchor.holds(&c));
    Ok((c.restricted_to(&inner), tree))
}

/// Case where no vertex of `Y` sees both `a'` and `b'`: identify `a` and `b`
/// in `G[Y + {a, b}]`, colour, and split the identified vertex again.
fn contract_side(
    g: &Graph,
    s: &Split2,
    a1: Vertex,
    b1: Vertex,
    run: &mut Run,
) -> Result<Step, EngineError> {
    let mut keep = s.y.clone();
    keep.insert(s.a);
    keep.insert(s.b);
    let h = g.induced_subgraph(keep.iter())?;
    let w = h.fresh_vertex();
    let gy = h.contract_pair(s.a, s.b, w)?;
    if is_k4(&gy) {
        run.note(DiagnosticKind::Assertion, format!("{s}: contracted Y side is K4"));
        return Err(no_rule(&gy, "contracted Y side is K4"));
    }
    let (c, tree) = colour_block(&gy, run)?;
    let (cw, cwa, cwb) = (
        c.vertex(w),
        c.edge_between(w, a1),
        c.edge_between(w, b1),
    );
    let (Some(cw), Some(cwa), Some(cwb)) = (cw, cwa, cwb) else {
        return Err(no_rule(&gy, "contracted vertex left uncoloured"));
    };
    let perm = Relabel::extending(4, &[(cw, 1), (cwa, 2), (cwb, 3)])
        .ok_or_else(|| no_rule(&gy, "contracted vertex colours clash"))?;
    let mut out = c.relabelled(&perm);
    out.remove_vertex(w);
    for (el, col) in case2::anchor_elements(s.a, s.b, a1, b1) {
        out.set(el, col);
    }
    Ok((out, tree))
}

/// Case where `y` in `Y` is adjacent to both `a'` and `b'`: colour
/// `G[Y - y]`, then recolour `a'`, `b'` and colour `y` and its edges.
fn common_neighbour_side(
    g: &Graph,
    s: &Split2,
    a1: Vertex,
    b1: Vertex,
    y: Vertex,
    run: &mut Run,
) -> Result<(TotalColouring, String, Vec<DecompositionTree>), EngineError> {
    if g.deg(a1) != 3 || g.deg(b1) != 3 || g.has_edge(a1, b1) {
        run.note(
            DiagnosticKind::Assertion,
            format!("{s}: a' and b' must have degree 3 and be non-adjacent"),
        );
    }
    let mut rest = s.y.clone();
    rest.remove(&y);
    let h2 = g.induced_subgraph(rest.iter())?;
    let mut partial = TotalColouring::new(4);
    let mut trees = Vec::new();
    for comp in h2.connected_components() {
        let part = h2.induced_subgraph(comp.iter())?;
        let (c, t) = colour_block(&part, run)?;
        partial.absorb(&c);
        trees.push(t);
    }

    let mut keep = s.y.clone();
    keep.insert(s.a);
    keep.insert(s.b);
    let h = g.induced_subgraph(keep.iter())?;
    let third = |v: Vertex| only(h2.nbrs(v).iter().copied().collect());
    let fixed = case2::anchor_elements(s.a, s.b, a1, b1);

    if let (Some(a2), Some(b2)) = (third(a1), third(b1)) {
        if h.deg(y) == 2 && a2 != b2 && !g.has_edge(a1, b1) {
            let colour = |el: Element| partial.get(el).unwrap_or(0);
            let t = [
                colour(Element::Edge(Edge::new(a1, a2))),
                colour(Element::Edge(Edge::new(b1, b2))),
                colour(Element::Vertex(a2)),
                colour(Element::Vertex(b2)),
            ];
            if let Some(done) = case2::completion_table().get(&t) {
                let mut c = partial.relabelled(&done.perm);
                for (el, col) in fixed {
                    c.set(el, col);
                }
                c.set_vertex(a1, done.a1);
                c.set_vertex(b1, done.b1);
                c.set_vertex(y, done.y);
                c.set_edge(Edge::new(a1, y), done.a1y);
                c.set_edge(Edge::new(b1, y), done.b1y);
                if check_total_colouring(&h, &c, 4)?.is_valid() {
                    let sub = case2::SubCase::of(t);
                    return Ok((c, format!("y = {y}, {sub:?}"), trees));
                }
                run.note(
                    DiagnosticKind::Assertion,
                    format!("{s}: table completion for {t:?} is not proper"),
                );
            }
        }
    }

    // y of degree 3, or an unexpected shape: search the few elements
    // around y directly.
    debug!("local completion at y = {y} of degree {}", h.deg(y));
    partial.clear(Element::Vertex(a1));
    partial.clear(Element::Vertex(b1));
    let mut unknown = vec![Element::Vertex(a1), Element::Vertex(b1), Element::Vertex(y)];
    unknown.extend(h.incident_edges(y).map(Element::Edge));
    let c = case2::complete_locally(&h, &partial, &fixed, &unknown)
        .ok_or_else(|| no_rule(&h, format!("no completion around y = {y}")))?;
    if !check_total_colouring(&h, &c, 4)?.is_valid() {
        return Err(EngineError::Invalid(format!("local completion around {y} is not proper")));
    }
    Ok((c, format!("y = {y}, local search"), trees))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn colour_ok(g: &Graph) -> Outcome {
        let out = total_colour(g).unwrap();
        let k = out.palette();
        assert!(check_total_colouring(g, out.colouring(), k).unwrap().is_valid());
        assert!(out.diagnostics().is_empty(), "{:?}", out.diagnostics());
        out
    }

    #[test]
    fn basic_inputs() {
        for g in [
            families::petersen(),
            families::heawood(),
            families::subdivided_k4(),
            families::cycle(7),
            families::path(5),
            families::theta(&[2, 3, 3]),
        ] {
            assert!(!colour_ok(&g).is_k4());
        }
    }

    #[test]
    fn k4_needs_five() {
        let out = colour_ok(&families::complete(4));
        assert!(out.is_k4());
        assert_eq!(out.palette(), 5);
    }

    #[test]
    fn two_cutset_recursion() {
        let g = families::double_theta();
        let out = colour_ok(&g);
        let cut = out.tree().walk().into_iter().find_map(|n| n.cutset.clone()).unwrap();
        assert_eq!((cut.a, cut.b), (Vertex(0), Vertex(1)));
        assert!(cut.a_in_x >= 2 && cut.b_in_x >= 2);
    }

    #[test]
    fn cutvertex_and_components() {
        // two triangles joined by a bridge, plus an isolated triangle
        let g = Graph::from_edges([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (10, 11), (11, 12), (12, 10)])
            .unwrap();
        let out = colour_ok(&g);
        assert_eq!(out.tree().rule, Rule::Components);
    }

    #[test]
    fn class_violations() {
        let square = families::cycle(4);
        // C4 has maximum degree 2 but is itself a square
        assert!(matches!(total_colour(&square), Err(EngineError::Square(_))));
        let k5 = families::complete(5);
        assert_eq!(total_colour(&k5).unwrap_err(), EngineError::DegreeTooLarge(4));
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = Graph::from_edges(
            families::petersen()
                .edges()
                .map(|e| (e.endpoints().0 .0, e.endpoints().1 .0))
                .chain(families::heawood().edges().map(|e| (e.endpoints().0 .0 + 100, e.endpoints().1 .0 + 100))),
        )
        .unwrap();
        let seq = total_colour(&g).unwrap();
        let opts = EngineOptions {
            jobs: 2,
            ..EngineOptions::default()
        };
        let par = total_colour_with(&g, &opts).unwrap();
        assert_eq!(seq.colouring(), par.colouring());
    }
}
