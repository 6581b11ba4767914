//! Cutsets, extremal proper 2-cutsets, decomposition blocks and proper
//! 1-joins.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::dot::DotTree;
use crate::graph::{Dense, Graph, GraphError, Vertex, VertexLabel};
use crate::recognition::{self, ClassLabel};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompositionError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("invalid split: {0}")]
    InvalidSplit(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn invalid(msg: impl Into<String>) -> DecompositionError {
    DecompositionError::InvalidSplit(msg.into())
}

/// `V = X + Y + {v}` with no edge between `X` and `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split1 {
    pub v: Vertex,
    pub x: BTreeSet<Vertex>,
    pub y: BTreeSet<Vertex>,
}

impl Split1 {
    pub fn validate(&self, g: &Graph) -> Result<(), DecompositionError> {
        if self.x.is_empty() || self.y.is_empty() {
            return Err(invalid("empty side"));
        }
        check_partition(g, &[self.v], &self.x, &self.y)?;
        no_cross_edges(g, &self.x, &self.y)
    }
}

impl fmt::Display for Split1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1-cutset {} X={} Y={}", self.v, fmt_set(&self.x), fmt_set(&self.y))
    }
}

/// A proper 2-cutset `{a, b}` with sides `X` and `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split2 {
    pub a: Vertex,
    pub b: Vertex,
    pub x: BTreeSet<Vertex>,
    pub y: BTreeSet<Vertex>,
}

impl Split2 {
    pub fn validate(&self, g: &Graph) -> Result<(), DecompositionError> {
        if self.a == self.b || g.has_edge(self.a, self.b) {
            return Err(invalid("a and b must be distinct and non-adjacent"));
        }
        if self.x.len() < 2 || self.y.len() < 2 {
            return Err(invalid("each side needs at least two vertices"));
        }
        check_partition(g, &[self.a, self.b], &self.x, &self.y)?;
        no_cross_edges(g, &self.x, &self.y)?;
        for side in [&self.x, &self.y] {
            let mut keep = side.clone();
            keep.insert(self.a);
            keep.insert(self.b);
            let h = g.induced_subgraph(keep.iter())?;
            if !has_path(&h, self.a, self.b) {
                return Err(invalid("a side has no ab-path"));
            }
            if is_ab_path(&h, self.a, self.b) {
                return Err(invalid("a side is an ab-path"));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Split2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "proper 2-cutset {{{}, {}}} X={} Y={}",
            self.a,
            self.b,
            fmt_set(&self.x),
            fmt_set(&self.y)
        )
    }
}

/// A proper 1-join: all edges between stable sets `A` and `B`, no other
/// edge between `X` and `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split1Join {
    pub x: BTreeSet<Vertex>,
    pub y: BTreeSet<Vertex>,
    pub a: BTreeSet<Vertex>,
    pub b: BTreeSet<Vertex>,
}

impl Split1Join {
    pub fn validate(&self, g: &Graph) -> Result<(), DecompositionError> {
        check_partition(g, &[], &self.x, &self.y)?;
        if self.a.len() < 2 || self.b.len() < 2 {
            return Err(invalid("A and B need at least two vertices"));
        }
        if !self.a.is_subset(&self.x) || !self.b.is_subset(&self.y) {
            return Err(invalid("A must lie in X and B in Y"));
        }
        for set in [&self.a, &self.b] {
            if set.iter().any(|&p| set.iter().any(|&q| g.has_edge(p, q))) {
                return Err(invalid("A and B must be stable"));
            }
        }
        for &p in &self.x {
            for &q in &self.y {
                let wanted = self.a.contains(&p) && self.b.contains(&q);
                if g.has_edge(p, q) != wanted {
                    return Err(invalid(format!("edge {p}-{q} breaks the join")));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Split1Join {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "proper 1-join A={} B={} X={} Y={}",
            fmt_set(&self.a),
            fmt_set(&self.b),
            fmt_set(&self.x),
            fmt_set(&self.y)
        )
    }
}

fn fmt_set(s: &BTreeSet<Vertex>) -> String {
    let parts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn check_partition(
    g: &Graph,
    cut: &[Vertex],
    x: &BTreeSet<Vertex>,
    y: &BTreeSet<Vertex>,
) -> Result<(), DecompositionError> {
    let mut all: BTreeSet<Vertex> = cut.iter().copied().collect();
    if all.len() != cut.len() {
        return Err(invalid("repeated cut vertex"));
    }
    for v in x.iter().chain(y) {
        if !all.insert(*v) {
            return Err(invalid(format!("{v} appears twice")));
        }
    }
    if all != g.vertex_set() {
        return Err(invalid("sides do not cover the vertex set"));
    }
    Ok(())
}

fn no_cross_edges(g: &Graph, x: &BTreeSet<Vertex>, y: &BTreeSet<Vertex>) -> Result<(), DecompositionError> {
    for &v in x {
        if let Some(w) = g.nbrs(v).iter().find(|w| y.contains(w)) {
            return Err(invalid(format!("edge {v}-{w} crosses the cut")));
        }
    }
    Ok(())
}

fn has_path(h: &Graph, a: Vertex, b: Vertex) -> bool {
    h.connected_components().iter().any(|c| c.contains(&a) && c.contains(&b))
}

fn is_ab_path(h: &Graph, a: Vertex, b: Vertex) -> bool {
    h.is_connected()
        && h.edge_count() + 1 == h.vertex_count()
        && h.deg(a) == 1
        && h.deg(b) == 1
        && h.vertices().all(|v| v == a || v == b || h.deg(v) == 2)
}

/// The least cutvertex, with `X` the component of `g - v` holding the least
/// vertex and `Y` the rest.
pub fn find_1_cutset(g: &Graph) -> Result<Option<Split1>, DecompositionError> {
    if !g.is_connected() {
        return Err(DecompositionError::Disconnected);
    }
    let Some(&v) = g.articulation_points().iter().next() else {
        return Ok(None);
    };
    let rest = g.without([v].iter());
    let mut comps = rest.connected_components().into_iter();
    let x = comps.next().expect("cutvertex leaves two components");
    let y = comps.flatten().collect();
    Ok(Some(Split1 { v, x, y }))
}

/// Side checks on dense indices, shared by the enumerator.
struct SplitScan<'a> {
    d: &'a Dense,
}

impl SplitScan<'_> {
    /// Whether `side + {a, b}` has an ab-path and is not itself one. In a
    /// 2-connected graph every component of `g - {a, b}` touches both, so the
    /// path always exists; it is still checked.
    fn side_ok(&self, side: &[usize], a: usize, b: usize) -> bool {
        let mut inside = vec![false; self.d.len()];
        for &v in side {
            inside[v] = true;
        }
        inside[a] = true;
        inside[b] = true;
        let deg = |v: usize| self.d.adj[v].iter().filter(|&&w| inside[w]).count();
        let edges: usize = side.iter().map(|&v| deg(v)).sum::<usize>() + deg(a) + deg(b);
        let edges = edges / 2;
        let comps = self.d.components_where(&inside);
        let joined = comps.iter().any(|c| c.contains(&a) && c.contains(&b));
        if !joined {
            return false;
        }
        let path = comps.len() == 1
            && edges + 1 == side.len() + 2
            && deg(a) == 1
            && deg(b) == 1
            && side.iter().all(|&v| deg(v) == 2);
        !path
    }

    /// Valid splits at the pair `{a, b}`.
    fn splits_at(&self, a: usize, b: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
        let n = self.d.len();
        let mut alive = vec![true; n];
        alive[a] = false;
        alive[b] = false;
        let comps = self.d.components_where(&alive);
        let m = comps.len();
        if !(2..=16).contains(&m) {
            return Vec::new();
        }
        let mut out = Vec::new();
        for mask in 1..(1u32 << m) - 1 {
            let mut x = Vec::new();
            let mut y = Vec::new();
            for (i, c) in comps.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    x.extend(c);
                } else {
                    y.extend(c);
                }
            }
            if x.len() < 2 || y.len() < 2 {
                continue;
            }
            if self.side_ok(&x, a, b) && self.side_ok(&y, a, b) {
                out.push((x, y));
            }
        }
        out
    }
}

/// Every proper 2-cutset split of a 2-connected graph.
pub fn all_proper_2_cutsets(g: &Graph) -> Result<Vec<Split2>, DecompositionError> {
    if !g.is_two_connected() {
        return Err(DecompositionError::NotTwoConnected);
    }
    let d = g.to_dense();
    let scan = SplitScan { d: &d };
    let mut out = Vec::new();
    for a in 0..d.len() {
        for b in a + 1..d.len() {
            if d.has_edge(a, b) {
                continue;
            }
            for (x, y) in scan.splits_at(a, b) {
                out.push(Split2 {
                    a: d.ids[a],
                    b: d.ids[b],
                    x: x.into_iter().map(|i| d.ids[i]).collect(),
                    y: y.into_iter().map(|i| d.ids[i]).collect(),
                });
            }
        }
    }
    Ok(out)
}

/// The proper 2-cutset split with `|X|` least, ties broken by the sorted
/// contents of `X`, then by `(a, b)`.
pub fn find_proper_2_cutset_min_x(g: &Graph) -> Result<Option<Split2>, DecompositionError> {
    let all = all_proper_2_cutsets(g)?;
    Ok(all.into_iter().min_by(|s, t| {
        (s.x.len(), &s.x, s.a, s.b).cmp(&(t.x.len(), &t.x, t.a, t.b))
    }))
}

/// The two blocks of a proper 2-cutset split.
#[derive(Clone, Debug)]
pub struct Blocks {
    pub gx: Graph,
    pub gy: Graph,
    pub marker: Vertex,
    /// Whether the marker is a vertex of `g` rather than a fresh one.
    pub reused: bool,
}

/// Blocks `G_X` and `G_Y`, each with a marker adjacent to exactly `a, b`.
///
/// A vertex of `g` whose neighbourhood is `{a, b}` is reused as the marker
/// in both blocks; otherwise a fresh labelled vertex is added.
pub fn build_blocks_2cutset(g: &Graph, s: &Split2) -> Result<Blocks, DecompositionError> {
    s.validate(g)?;
    let pair: BTreeSet<Vertex> = [s.a, s.b].into();
    let existing = g
        .nbrs(s.a)
        .iter()
        .copied()
        .find(|&c| *g.nbrs(c) == pair);
    let block = |side: &BTreeSet<Vertex>, marker: Vertex, fresh: bool| -> Result<Graph, DecompositionError> {
        let mut keep = side.clone();
        keep.insert(s.a);
        keep.insert(s.b);
        if !fresh {
            keep.insert(marker);
        }
        let mut h = g.induced_subgraph(keep.iter())?;
        if fresh {
            h.add_edge(marker, s.a)?;
            h.add_edge(marker, s.b)?;
            h.set_label(marker, VertexLabel::Marker { a: s.a, b: s.b });
        }
        Ok(h)
    };
    let (marker, fresh) = match existing {
        Some(c) => (c, false),
        None => (g.fresh_vertex(), true),
    };
    Ok(Blocks {
        gx: block(&s.x, marker, fresh)?,
        gy: block(&s.y, marker, fresh)?,
        marker,
        reused: !fresh,
    })
}

/// Every induced square, as `(v1, v2, v3, v4)` with `v1` least and `v2 < v4`.
fn all_squares(g: &Graph) -> Vec<[Vertex; 4]> {
    let mut out = Vec::new();
    for v1 in g.vertices() {
        for &v2 in g.nbrs(v1).range(v1..) {
            for &v3 in g.nbrs(v2).range(v1..) {
                if v3 == v1 || g.has_edge(v1, v3) {
                    continue;
                }
                for &v4 in g.nbrs(v3).range(v2..) {
                    if v4 != v2 && g.has_edge(v4, v1) && !g.has_edge(v2, v4) {
                        out.push([v1, v2, v3, v4]);
                    }
                }
            }
        }
    }
    out
}

/// Tries to complete `(A, B)` to a 1-join by sending each component of `g`
/// minus the `A-B` edges to the side of the set it contains.
fn join_from(g: &Graph, a: &BTreeSet<Vertex>, b: &BTreeSet<Vertex>) -> Option<Split1Join> {
    let stable = |s: &BTreeSet<Vertex>| s.iter().all(|&p| s.iter().all(|&q| !g.has_edge(p, q)));
    if !stable(a) || !stable(b) || !a.iter().all(|&p| b.iter().all(|&q| g.has_edge(p, q))) {
        return None;
    }
    let mut h = g.clone();
    for &p in a {
        for &q in b {
            h.remove_edge(crate::graph::Edge::new(p, q)).ok()?;
        }
    }
    let mut x = BTreeSet::new();
    let mut y = BTreeSet::new();
    for comp in h.connected_components() {
        let has_a = comp.iter().any(|v| a.contains(v));
        let has_b = comp.iter().any(|v| b.contains(v));
        match (has_a, has_b) {
            (true, false) => x.extend(comp),
            (false, true) => y.extend(comp),
            _ => return None,
        }
    }
    let split = Split1Join {
        x,
        y,
        a: a.clone(),
        b: b.clone(),
    };
    split.validate(g).ok().map(|_| split)
}

/// Some proper 1-join, seeded from the induced squares of `g`.
///
/// Each square gives seeds `A ⊇ {v1, v3}`, `B ⊇ {v2, v4}`, tried both as
/// the full common neighbourhoods and as the bare square. Exponential in the
/// number of squares at worst; meant for diagnostics. Square-free graphs
/// have no proper 1-join.
pub fn find_proper_1_join(g: &Graph) -> Option<Split1Join> {
    for [v1, v2, v3, v4] in all_squares(g) {
        let common = |p: Vertex, q: Vertex| -> BTreeSet<Vertex> { g.nbrs(p).intersection(g.nbrs(q)).copied().collect() };
        let seeds = [
            (common(v2, v4), common(v1, v3)),
            ([v1, v3].into(), [v2, v4].into()),
        ];
        for (a, b) in seeds {
            if let Some(split) = join_from(g, &a, &b) {
                return Some(split);
            }
        }
    }
    None
}

/// One node of a structural decomposition.
#[derive(Clone, Debug)]
pub enum DecompositionKind {
    Basic(ClassLabel),
    OneCutset(Split1),
    TwoCutset(Split2),
    OneJoin(Split1Join),
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub graph: Graph,
    pub kind: DecompositionKind,
    pub children: Vec<Decomposition>,
}

impl Decomposition {
    pub fn to_dot(&self) -> String {
        let mut tree = DotTree::new("decomposition");
        self.emit(&mut tree, None);
        tree.finish()
    }

    fn emit(&self, tree: &mut DotTree, parent: Option<usize>) {
        let label = match &self.kind {
            DecompositionKind::Basic(c) => format!("{c}"),
            DecompositionKind::OneCutset(s) => format!("1-cutset at {}", s.v),
            DecompositionKind::TwoCutset(s) => format!("2-cutset {{{}, {}}}", s.a, s.b),
            DecompositionKind::OneJoin(_) => "1-join".to_string(),
        };
        let id = tree.node(&format!("{label}\\n|V|={}", self.graph.vertex_count()), parent);
        for child in &self.children {
            child.emit(tree, Some(id));
        }
    }
}

/// Decomposes `g` recursively along 1-cutsets and extremal proper
/// 2-cutsets. Proper 1-joins are reported but not split further.
pub fn decompose(g: &Graph) -> Result<Decomposition, DecompositionError> {
    if !g.is_connected() {
        return Err(DecompositionError::Disconnected);
    }
    let leaf = |kind| Decomposition {
        graph: g.clone(),
        kind,
        children: Vec::new(),
    };
    if g.vertex_count() <= 2 {
        return Ok(leaf(DecompositionKind::Basic(ClassLabel::Complete)));
    }
    if let Some(s) = find_1_cutset(g)? {
        let mut children = Vec::new();
        for side in [&s.x, &s.y] {
            let mut keep = side.clone();
            keep.insert(s.v);
            children.push(decompose(&g.induced_subgraph(keep.iter())?)?);
        }
        return Ok(Decomposition {
            graph: g.clone(),
            kind: DecompositionKind::OneCutset(s),
            children,
        });
    }
    let basic = recognition::classify_basic(g).unwrap_or(ClassLabel::Unknown);
    if !matches!(basic, ClassLabel::Decomposable | ClassLabel::Unknown) {
        return Ok(leaf(DecompositionKind::Basic(basic)));
    }
    if let Some(s) = find_proper_2_cutset_min_x(g)? {
        let blocks = build_blocks_2cutset(g, &s)?;
        let children = vec![decompose(&blocks.gx)?, decompose(&blocks.gy)?];
        return Ok(Decomposition {
            graph: g.clone(),
            kind: DecompositionKind::TwoCutset(s),
            children,
        });
    }
    if let Some(j) = find_proper_1_join(g) {
        return Ok(leaf(DecompositionKind::OneJoin(j)));
    }
    Ok(leaf(DecompositionKind::Basic(basic)))
}
