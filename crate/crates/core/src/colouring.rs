//! Total colourings and palette relabelling.

use std::collections::BTreeMap;

use crate::graph::{Edge, Element, Graph, Vertex};

/// Colours are `1..=palette`.
pub type Colour = u8;

/// Assignment of colours to the elements of a graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TotalColouring {
    palette: Colour,
    vertices: BTreeMap<Vertex, Colour>,
    edges: BTreeMap<Edge, Colour>,
}

impl TotalColouring {
    pub fn new(palette: Colour) -> TotalColouring {
        TotalColouring {
            palette,
            ..Default::default()
        }
    }

    pub fn palette(&self) -> Colour {
        self.palette
    }

    pub fn set_palette(&mut self, palette: Colour) {
        self.palette = palette;
    }

    pub fn set_vertex(&mut self, v: Vertex, c: Colour) {
        self.vertices.insert(v, c);
    }

    pub fn set_edge(&mut self, e: Edge, c: Colour) {
        self.edges.insert(e, c);
    }

    pub fn set(&mut self, el: Element, c: Colour) {
        match el {
            Element::Vertex(v) => self.set_vertex(v, c),
            Element::Edge(e) => self.set_edge(e, c),
        }
    }

    pub fn vertex(&self, v: Vertex) -> Option<Colour> {
        self.vertices.get(&v).copied()
    }

    pub fn edge(&self, e: Edge) -> Option<Colour> {
        self.edges.get(&e).copied()
    }

    /// Colour of the edge `ab`.
    pub fn edge_between(&self, a: Vertex, b: Vertex) -> Option<Colour> {
        self.edge(Edge::new(a, b))
    }

    pub fn get(&self, el: Element) -> Option<Colour> {
        match el {
            Element::Vertex(v) => self.vertex(v),
            Element::Edge(e) => self.edge(e),
        }
    }

    pub fn vertex_colours(&self) -> impl Iterator<Item = (Vertex, Colour)> + '_ {
        self.vertices.iter().map(|(v, c)| (*v, *c))
    }

    pub fn edge_colours(&self) -> impl Iterator<Item = (Edge, Colour)> + '_ {
        self.edges.iter().map(|(e, c)| (*e, *c))
    }

    /// All assigned elements with their colours, vertices first.
    pub fn entries(&self) -> impl Iterator<Item = (Element, Colour)> + '_ {
        self.vertex_colours()
            .map(|(v, c)| (Element::Vertex(v), c))
            .chain(self.edge_colours().map(|(e, c)| (Element::Edge(e), c)))
    }

    pub fn len(&self) -> usize {
        self.vertices.len() + self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Unassigns a single element.
    pub fn clear(&mut self, el: Element) {
        match el {
            Element::Vertex(v) => {
                self.vertices.remove(&v);
            }
            Element::Edge(e) => {
                self.edges.remove(&e);
            }
        }
    }

    pub fn remove_vertex(&mut self, v: Vertex) {
        self.vertices.remove(&v);
        self.edges.retain(|e, _| !e.contains(v));
    }

    /// Number of distinct colours in use.
    pub fn colours_used(&self) -> usize {
        let mut seen = [false; 256];
        for (_, c) in self.entries() {
            seen[c as usize] = true;
        }
        seen.iter().filter(|&&s| s).count()
    }

    /// Applies a palette relabelling to every element.
    pub fn relabelled(&self, perm: &Relabel) -> TotalColouring {
        TotalColouring {
            palette: self.palette,
            vertices: self.vertices.iter().map(|(v, c)| (*v, perm.apply(*c))).collect(),
            edges: self.edges.iter().map(|(e, c)| (*e, perm.apply(*c))).collect(),
        }
    }

    /// Keeps only the elements present in `g`.
    pub fn restricted_to(&self, g: &Graph) -> TotalColouring {
        TotalColouring {
            palette: self.palette,
            vertices: self
                .vertices
                .iter()
                .filter(|(v, _)| g.has_vertex(**v))
                .map(|(v, c)| (*v, *c))
                .collect(),
            edges: self
                .edges
                .iter()
                .filter(|(e, _)| g.contains_edge(**e))
                .map(|(e, c)| (*e, *c))
                .collect(),
        }
    }

    /// Copies every assignment of `other` into `self`, overwriting.
    pub fn absorb(&mut self, other: &TotalColouring) {
        self.vertices.extend(other.vertices.iter().map(|(v, c)| (*v, *c)));
        self.edges.extend(other.edges.iter().map(|(e, c)| (*e, *c)));
        self.palette = self.palette.max(other.palette);
    }

    /// Renames the vertices of the coloured elements through `f`.
    pub fn map_vertices(&self, f: impl Fn(Vertex) -> Vertex) -> TotalColouring {
        TotalColouring {
            palette: self.palette,
            vertices: self.vertices.iter().map(|(v, c)| (f(*v), *c)).collect(),
            edges: self
                .edges
                .iter()
                .map(|(e, c)| {
                    let (a, b) = e.endpoints();
                    (Edge::new(f(a), f(b)), *c)
                })
                .collect(),
        }
    }
}

/// A permutation of the palette `1..=k`, `k <= 8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Relabel {
    map: [Colour; 9],
}

impl Relabel {
    pub fn identity() -> Relabel {
        let mut map = [0; 9];
        for (i, m) in map.iter_mut().enumerate() {
            *m = i as Colour;
        }
        Relabel { map }
    }

    /// Builds the permutation sending `i + 1` to `images[i]`.
    pub fn from_images(images: &[Colour]) -> Relabel {
        let mut r = Relabel::identity();
        for (i, &c) in images.iter().enumerate() {
            r.map[i + 1] = c;
        }
        r
    }

    pub fn apply(&self, c: Colour) -> Colour {
        self.map[c as usize]
    }

    pub fn inverse(&self) -> Relabel {
        let mut r = Relabel::identity();
        for c in 1..9 {
            r.map[self.map[c] as usize] = c as Colour;
        }
        r
    }

    /// Smallest permutation (lexicographic on images) of `1..=k` honouring
    /// every `(from, to)` requirement, or `None` if they conflict.
    pub fn extending(k: Colour, required: &[(Colour, Colour)]) -> Option<Relabel> {
        let mut images = vec![0; k as usize];
        let mut used = vec![false; k as usize + 1];
        for &(from, to) in required {
            let slot = &mut images[from as usize - 1];
            if *slot != 0 && *slot != to {
                return None;
            }
            if *slot == 0 {
                if used[to as usize] {
                    return None;
                }
                used[to as usize] = true;
                *slot = to;
            }
        }
        let mut free = (1..=k).filter(|c| !used[*c as usize]);
        for slot in images.iter_mut() {
            if *slot == 0 {
                *slot = free.next()?;
            }
        }
        Some(Relabel::from_images(&images))
    }
}

/// All permutations of `1..=k` in lexicographic order of their image lists.
pub fn palette_permutations(k: Colour) -> Vec<Relabel> {
    fn rec(k: Colour, prefix: &mut Vec<Colour>, used: &mut [bool], out: &mut Vec<Relabel>) {
        if prefix.len() == k as usize {
            out.push(Relabel::from_images(prefix));
            return;
        }
        for c in 1..=k {
            if !used[c as usize] {
                used[c as usize] = true;
                prefix.push(c);
                rec(k, prefix, used, out);
                prefix.pop();
                used[c as usize] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(k, &mut Vec::new(), &mut vec![false; k as usize + 1], &mut out);
    out
}
