use std::fmt;
use std::ops::ControlFlow;

use log::debug;

use crate::colouring::{Colour, TotalColouring};
use crate::graph::{Edge, Graph, Vertex};
use crate::oracle::{self, Filter, NoAbab, TotalGraph};
use crate::path_extension::{extend_path, PathPrecolouring};
use crate::recognition::{self, iso, Base, BranchImage, Embedding};

use super::{colour_low_degree, colour_sparse, pattern_table, relabel_to_anchor, Anchor, BasicError};

/// How a 2-extension colouring was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtensionRoute {
    /// Graph of maximum degree 2.
    LowDegree,
    /// A stored table colouring, moved onto the remainder by an isomorphism.
    Table(String),
    /// Re-matched against the Petersen graph.
    ViaPetersen(Box<ExtensionRoute>),
    /// The graph turned out sparse.
    Sparse,
    /// Constrained search on the remainder.
    ReducedSearch,
    /// Exact search on the whole graph.
    WholeGraphSearch,
}

impl fmt::Display for ExtensionRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtensionRoute::LowDegree => f.write_str("low-degree"),
            ExtensionRoute::Table(name) => write!(f, "table {name}"),
            ExtensionRoute::ViaPetersen(inner) => write!(f, "via petersen, {inner}"),
            ExtensionRoute::Sparse => f.write_str("sparse"),
            ExtensionRoute::ReducedSearch => f.write_str("remainder search"),
            ExtensionRoute::WholeGraphSearch => f.write_str("whole-graph search"),
        }
    }
}

impl ExtensionRoute {
    /// Whether this route is outside the table-and-extension argument.
    pub fn is_fallback(&self) -> bool {
        match self {
            ExtensionRoute::WholeGraphSearch => true,
            ExtensionRoute::ViaPetersen(inner) => inner.is_fallback(),
            _ => false,
        }
    }
}

/// 4-total-colouring of a 2-connected 2-extension of the Petersen or
/// Heawood graph, honouring `anchor` when given.
pub fn colour_2extension(g: &Graph, emb: &Embedding, anchor: Option<&Anchor>) -> Result<TotalColouring, BasicError> {
    colour_2extension_traced(g, emb, anchor).map(|(c, _)| c)
}

/// Colours of the branch `x, xp1, p1, ..., z` as one sequence.
fn sequence(c: &TotalColouring, path: &[Vertex]) -> Option<Vec<Colour>> {
    let mut seq = Vec::with_capacity(2 * path.len() - 1);
    for (i, &v) in path.iter().enumerate() {
        seq.push(c.vertex(v)?);
        if i + 1 < path.len() {
            seq.push(c.edge(Edge::new(v, path[i + 1]))?);
        }
    }
    Some(seq)
}

/// Colour sequence for the lengthened branch, keeping the remainder colours
/// outside a window that path extension can refill.
fn fill_branch(b: &BranchImage, rc: &TotalColouring) -> Option<Vec<Colour>> {
    let seq = sequence(rc, &b.base_path)?;
    let len = b.base_path.len() - 1;
    for i in 0..len.saturating_sub(1) {
        for j in i + 2..=len {
            let boundary = [seq[2 * i], seq[2 * i + 1], seq[2 * j - 1], seq[2 * j]];
            let k = j - i + 1 + b.extra();
            if let Ok(window) = extend_path(&PathPrecolouring::new(k, boundary)) {
                let mut out = seq[..2 * i].to_vec();
                out.extend(window);
                out.extend(&seq[2 * j + 1..]);
                return Some(out);
            }
        }
    }
    None
}

/// The branch of the remainder carrying the anchor, as `[a', u', b']`.
fn anchor_image(emb: &Embedding, anchor: &Anchor) -> Option<[Vertex; 3]> {
    emb.branches.iter().find_map(|b| {
        (b.path.len() == 3 && b.path[1] == anchor.u && b.base_path.len() == 3)
            .then(|| [b.base_path[0], b.base_path[1], b.base_path[2]])
    })
}

/// Lifts a colouring of the remainder to `g`, or `None` if some lengthened
/// branch has no usable window or the anchor ends disagree.
fn place(g: &Graph, emb: &Embedding, rc: &TotalColouring, anchor: Option<&Anchor>) -> Option<TotalColouring> {
    if let Some(an) = anchor {
        let [a, _, b] = anchor_image(emb, an)?;
        if rc.vertex(a)? != rc.vertex(b)? {
            return None;
        }
    }
    let mut c = TotalColouring::new(4);
    for b in &emb.branches {
        let seq = if b.extra() == 0 {
            sequence(rc, &b.base_path)?
        } else {
            fill_branch(b, rc)?
        };
        for (i, &v) in b.path.iter().enumerate() {
            c.set_vertex(v, seq[2 * i]);
            if i + 1 < b.path.len() {
                c.set_edge(Edge::new(v, b.path[i + 1]), seq[2 * i + 1]);
            }
        }
    }
    let c = match anchor {
        Some(an) => relabel_to_anchor(&c, an)?,
        None => c,
    };
    debug_assert!(oracle::check_total_colouring(g, &c, 4).is_ok_and(|r| r.is_valid()));
    Some(c)
}

fn check_embedding(g: &Graph, emb: &Embedding) -> Result<(), BasicError> {
    let bad = |m: &str| Err(BasicError::BadEmbedding(m.to_string()));
    let mut edges = 0;
    for b in &emb.branches {
        if b.path.len() < b.base_path.len() || b.base_path.len() < 2 {
            return bad("branch shorter than its remainder image");
        }
        for w in b.path.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return bad("branch path leaves the graph");
            }
            edges += 1;
        }
    }
    if edges != g.edge_count() {
        return bad("branches do not partition the edges");
    }
    Ok(())
}

/// Tries every way of laying a stored colouring onto the remainder.
fn from_table(g: &Graph, emb: &Embedding, anchor: Option<&Anchor>) -> Option<(TotalColouring, String)> {
    let table = pattern_table();
    let remainder = emb.remainder();
    let mut found = None;
    let mut attempt = |entry_graph: &Graph, entry: &TotalColouring, target: &Graph, name: &str| {
        iso::for_each_isomorphism(entry_graph, target, |phi| {
            let moved = entry.map_vertices(|v| phi[&v]).restricted_to(&remainder);
            match place(g, emb, &moved, anchor) {
                Some(c) => {
                    found = Some((c, name.to_string()));
                    ControlFlow::Break(())
                }
                None => ControlFlow::Continue(()),
            }
        });
        found.is_some()
    };
    match emb.base {
        Base::Petersen if emb.deleted.is_empty() => {
            let entry = table.get("petersen")?;
            attempt(&entry.graph(), &entry.colouring, &remainder, &entry.name);
        }
        Base::Petersen => {
            // The one-deletion colouring has no ABAB on any length-2 path, so
            // its restriction serves every deeper deletion.
            let entry = table.get("petersen-1")?;
            let eg = entry.graph();
            for &s in &emb.deleted {
                let q = emb.base.graph().without([s].iter());
                if attempt(&eg, &entry.colouring, &q, &entry.name) {
                    break;
                }
            }
        }
        Base::Heawood => {
            for entry in table.entries.iter().filter(|e| e.base == Base::Heawood && e.deleted.len() == emb.deleted.len()) {
                if attempt(&entry.graph(), &entry.colouring, &remainder, &entry.name) {
                    break;
                }
            }
        }
    }
    found
}

/// Constrained search on the remainder: anchor fixed, no ABAB on length-2
/// stretches of lengthened branches.
fn from_reduced_search(g: &Graph, emb: &Embedding, anchor: Option<&Anchor>) -> Result<Option<TotalColouring>, BasicError> {
    let remainder = emb.remainder();
    let mut fixed = TotalColouring::new(4);
    if let Some(an) = anchor {
        let Some([a, u, b]) = anchor_image(emb, an) else {
            return Ok(None);
        };
        fixed = Anchor::new(u, a, b).as_colouring();
    }
    let paths: Vec<[Vertex; 3]> = emb
        .branches
        .iter()
        .filter(|b| b.extra() > 0)
        .flat_map(|b| b.base_path.windows(3).map(|w| [w[0], w[1], w[2]]).collect::<Vec<_>>())
        .collect();
    let tg = TotalGraph::new(&remainder);
    let filter = NoAbab::on_paths(&tg, &paths);
    let filters: [&dyn Filter; 1] = [&filter];
    let found = oracle::constrained_search_with_budget(&remainder, &fixed, 4, &filters, oracle::DEFAULT_BUDGET)?;
    Ok(found.and_then(|rc| place(g, emb, &rc, anchor)))
}

/// As [`colour_2extension`], also reporting the route taken.
///
/// Order: stored colourings moved by isomorphisms; for Heawood extensions
/// not in the table, the Petersen extension or sparse colouring the graph
/// falls into; a constrained search on the remainder; finally, for at most
/// 36 elements, an exact search on the graph itself.
pub fn colour_2extension_traced(
    g: &Graph,
    emb: &Embedding,
    anchor: Option<&Anchor>,
) -> Result<(TotalColouring, ExtensionRoute), BasicError> {
    if g.max_degree() > 3 {
        return Err(BasicError::DegreeTooLarge(g.max_degree()));
    }
    if let Some(an) = anchor {
        an.validate(g)?;
    }
    if g.max_degree() <= 2 {
        return Ok((colour_low_degree(g)?, ExtensionRoute::LowDegree));
    }
    if !g.is_two_connected() {
        return Err(BasicError::NotTwoConnected);
    }
    check_embedding(g, emb)?;
    if let Some((c, name)) = from_table(g, emb, anchor) {
        return Ok((c, ExtensionRoute::Table(name)));
    }
    if emb.base == Base::Heawood {
        if let Some(pe) = recognition::match_2extension(g, Base::Petersen) {
            debug!("heawood extension with {} deletions rerouted to petersen", emb.deleted.len());
            let (c, route) = colour_2extension_traced(g, &pe, anchor)?;
            return Ok((c, ExtensionRoute::ViaPetersen(Box::new(route))));
        }
        if recognition::is_sparse(g) {
            return Ok((colour_sparse(g, anchor)?, ExtensionRoute::Sparse));
        }
    }
    if let Some(c) = from_reduced_search(g, emb, anchor)? {
        return Ok((c, ExtensionRoute::ReducedSearch));
    }
    if g.element_count() <= oracle::DEFAULT_BUDGET {
        let fixed = anchor.map(Anchor::as_colouring).unwrap_or_else(|| TotalColouring::new(4));
        if let Some(c) = oracle::constrained_search(g, &fixed, 4, None)? {
            return Ok((c, ExtensionRoute::WholeGraphSearch));
        }
    }
    Err(BasicError::Unplaced {
        base: emb.base,
        deleted: emb.deleted.len(),
    })
}
