//! Minimal Graphviz output for trees.

use std::fmt::Write;

pub struct DotTree {
    out: String,
    next: usize,
}

impl DotTree {
    pub fn new(name: &str) -> DotTree {
        let mut out = String::new();
        writeln!(out, "digraph {name} {{").unwrap();
        writeln!(out, "  node [shape=box];").unwrap();
        DotTree { out, next: 0 }
    }

    /// Adds a node under `parent` and returns its id.
    pub fn node(&mut self, label: &str, parent: Option<usize>) -> usize {
        let id = self.next;
        self.next += 1;
        let label = label.replace('"', "\\\"");
        writeln!(self.out, "  n{id} [label=\"{label}\"];").unwrap();
        if let Some(p) = parent {
            writeln!(self.out, "  n{p} -> n{id};").unwrap();
        }
        id
    }

    pub fn finish(mut self) -> String {
        self.out.push_str("}\n");
        self.out
    }
}
