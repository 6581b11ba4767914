use std::fmt;

use serde::Serialize;

use crate::dot::DotTree;
use crate::graph::{Graph, Vertex};

/// The rule applied at a node of the recursion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Disjoint union of independently coloured components.
    Components,
    LowDegree,
    /// `K4`, coloured with 5 colours.
    K4,
    #[serde(rename = "1-cutset")]
    OneCutset,
    Sparse,
    #[serde(rename = "2-extension")]
    Extension,
    /// Proper 2-cutset where `a` and `b` are identified on the `Y` side.
    #[serde(rename = "2-cutset-contract")]
    TwoCutsetContract,
    /// Proper 2-cutset where `a'` and `b'` have a common neighbour `y`.
    #[serde(rename = "2-cutset-common-neighbour")]
    TwoCutsetCommonNeighbour,
    /// Exact search used because no structural rule applied.
    Search,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Rule::Components => "components",
            Rule::LowDegree => "low-degree",
            Rule::K4 => "k4",
            Rule::OneCutset => "1-cutset",
            Rule::Sparse => "sparse",
            Rule::Extension => "2-extension",
            Rule::TwoCutsetContract => "2-cutset-contract",
            Rule::TwoCutsetCommonNeighbour => "2-cutset-common-neighbour",
            Rule::Search => "search",
        };
        f.write_str(s)
    }
}

/// What was checked at a proper 2-cutset `{a, b}` with sides `X`, `Y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutsetInfo {
    pub a: Vertex,
    pub b: Vertex,
    pub x: Vec<Vertex>,
    pub y: Vec<Vertex>,
    pub a_in_x: usize,
    pub b_in_x: usize,
    /// Neighbours of `a` and `b` in `Y`.
    pub a1: Vertex,
    pub b1: Vertex,
    /// Rule that coloured the `X` side.
    pub x_side: Rule,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionTree {
    pub rule: Rule,
    pub vertices: usize,
    pub edges: usize,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cutset: Option<CutsetInfo>,
    pub children: Vec<DecompositionTree>,
    /// The graph handled at this node.
    #[serde(skip)]
    pub graph: Graph,
}

impl DecompositionTree {
    pub fn leaf(g: &Graph, rule: Rule, detail: impl Into<String>) -> DecompositionTree {
        DecompositionTree {
            rule,
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            detail: detail.into(),
            cutset: None,
            children: Vec::new(),
            graph: g.clone(),
        }
    }

    pub fn with_children(mut self, children: Vec<DecompositionTree>) -> DecompositionTree {
        self.children = children;
        self
    }

    /// Pre-order traversal.
    pub fn walk(&self) -> Vec<&DecompositionTree> {
        fn go<'a>(node: &'a DecompositionTree, out: &mut Vec<&'a DecompositionTree>) {
            out.push(node);
            for c in &node.children {
                go(c, out);
            }
        }
        let mut out = Vec::new();
        go(self, &mut out);
        out
    }

    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(DecompositionTree::depth).max().unwrap_or(0)
    }

    fn label(&self) -> String {
        let mut s = format!("{} |V|={} |E|={}", self.rule, self.vertices, self.edges);
        if let Some(cut) = &self.cutset {
            s.push_str(&format!(" {{{}, {}}} |X|={}", cut.a, cut.b, cut.x.len()));
        }
        if !self.detail.is_empty() {
            s.push_str(&format!(" ({})", self.detail));
        }
        s
    }

    pub fn to_dot(&self) -> String {
        fn go(node: &DecompositionTree, parent: Option<usize>, out: &mut DotTree) {
            let id = out.node(&node.label(), parent);
            for c in &node.children {
                go(c, Some(id), out);
            }
        }
        let mut out = DotTree::new("recursion");
        go(self, None, &mut out);
        out.finish()
    }
}

impl fmt::Display for DecompositionTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(node: &DecompositionTree, indent: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            writeln!(f, "{:indent$}{}", "", node.label(), indent = 2 * indent)?;
            node.children.iter().try_for_each(|c| go(c, indent + 1, f))
        }
        go(self, 0, f)
    }
}
