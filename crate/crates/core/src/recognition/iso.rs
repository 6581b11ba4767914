//! Backtracking isomorphism for small graphs.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use crate::graph::{Dense, Graph, Vertex};

pub type VertexMap = BTreeMap<Vertex, Vertex>;

struct Matcher<'a> {
    g: &'a Dense,
    h: &'a Dense,
    order: Vec<usize>,
    /// For `order[i]`, an earlier vertex in the order adjacent to it.
    anchor: Vec<Option<usize>>,
    image: Vec<usize>,
    used: Vec<bool>,
    g_profile: Vec<Vec<usize>>,
    h_profile: Vec<Vec<usize>>,
}

/// Sorted neighbour degrees, a cheap per-vertex invariant.
fn profile(d: &Dense) -> Vec<Vec<usize>> {
    (0..d.len())
        .map(|i| {
            let mut p: Vec<usize> = d.adj[i].iter().map(|&j| d.adj[j].len()).collect();
            p.sort_unstable();
            p
        })
        .collect()
}

/// Vertex order where each vertex after the first of its component has an
/// earlier neighbour.
fn bfs_order(d: &Dense) -> (Vec<usize>, Vec<Option<usize>>) {
    let n = d.len();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut anchor = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        order.push(s);
        anchor.push(None);
        let mut head = order.len() - 1;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &u in &d.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    order.push(u);
                    anchor.push(Some(v));
                }
            }
        }
    }
    (order, anchor)
}

impl Matcher<'_> {
    fn run(&mut self, depth: usize, visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) -> ControlFlow<()> {
        if depth == self.order.len() {
            let mut by_g = vec![0; self.g.len()];
            for (i, &x) in self.order.iter().enumerate() {
                by_g[x] = self.image[i];
            }
            return visit(&by_g);
        }
        let x = self.order[depth];
        let candidates: Vec<usize> = match self.anchor[depth] {
            Some(a) => {
                let pos = self.order.iter().position(|&o| o == a).unwrap();
                self.h.adj[self.image[pos]].clone()
            }
            None => (0..self.h.len()).collect(),
        };
        for y in candidates {
            if self.used[y] || self.g_profile[x] != self.h_profile[y] {
                continue;
            }
            let consistent = (0..depth).all(|i| {
                let (gx, hy) = (self.order[i], self.image[i]);
                self.g.has_edge(x, gx) == self.h.has_edge(y, hy)
            });
            if !consistent {
                continue;
            }
            self.used[y] = true;
            self.image[depth] = y;
            let flow = self.run(depth + 1, visit);
            self.used[y] = false;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Calls `visit` on every isomorphism `g -> h` until it breaks.
pub fn for_each_isomorphism(g: &Graph, h: &Graph, mut visit: impl FnMut(&VertexMap) -> ControlFlow<()>) {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return;
    }
    let gd = g.to_dense();
    let hd = h.to_dense();
    let (g_profile, h_profile) = (profile(&gd), profile(&hd));
    let mut gp = g_profile.clone();
    let mut hp = h_profile.clone();
    gp.sort();
    hp.sort();
    if gp != hp {
        return;
    }
    let (order, anchor) = bfs_order(&gd);
    let n = gd.len();
    let mut matcher = Matcher {
        g: &gd,
        h: &hd,
        order,
        anchor,
        image: vec![0; n],
        used: vec![false; n],
        g_profile,
        h_profile,
    };
    let _ = matcher.run(0, &mut |by_g: &[usize]| {
        let map: VertexMap = by_g.iter().enumerate().map(|(x, &y)| (gd.ids[x], hd.ids[y])).collect();
        visit(&map)
    });
}

pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<VertexMap> {
    let mut found = None;
    for_each_isomorphism(g, h, |m| {
        found = Some(m.clone());
        ControlFlow::Break(())
    });
    found
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// All automorphisms, in the enumeration order of the search.
pub fn automorphisms(g: &Graph) -> Vec<VertexMap> {
    let mut out = Vec::new();
    for_each_isomorphism(g, g, |m| {
        out.push(m.clone());
        ControlFlow::Continue(())
    });
    out
}
