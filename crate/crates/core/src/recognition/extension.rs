//! Matching a graph as a 2-extension of the Petersen or Heawood graph.
//!
//! A 2-extension of a base graph deletes a vertex set `S` from it and then
//! subdivides edges incident to a degree-2 vertex of what remains. Every
//! subset `S` that leaves a 2-connected remainder is precomputed per base;
//! matching then compares branch structure: branch vertices correspond,
//! length-1 branches stay length 1 and longer branches may only grow.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use crate::families;
use crate::graph::{Graph, Vertex};

use super::reduce::{branch_vertices, branches};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Base {
    Petersen,
    Heawood,
}

impl Base {
    pub fn graph(self) -> Graph {
        match self {
            Base::Petersen => families::petersen(),
            Base::Heawood => families::heawood(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Base::Petersen => "petersen",
            Base::Heawood => "heawood",
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A branch of the remainder and the branch of `g` it became.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchImage {
    /// Path in `base - deleted`.
    pub base_path: Vec<Vertex>,
    /// Path in `g`, with endpoints the images of `base_path`'s endpoints.
    pub path: Vec<Vertex>,
}

impl BranchImage {
    /// Subdivision vertices added on this branch.
    pub fn extra(&self) -> usize {
        self.path.len() - self.base_path.len()
    }
}

#[derive(Clone, Debug)]
pub struct Embedding {
    pub base: Base,
    pub deleted: BTreeSet<Vertex>,
    /// Branch vertices of the remainder to branch vertices of `g`.
    pub vertex_map: BTreeMap<Vertex, Vertex>,
    /// For a cycle remainder this holds one closed branch whose paths start
    /// and end at the same vertex.
    pub branches: Vec<BranchImage>,
}

impl Embedding {
    /// `base - deleted`.
    pub fn remainder(&self) -> Graph {
        self.base.graph().without(self.deleted.iter())
    }

    /// Number of subdivisions per remainder edge. Each lengthened branch has
    /// all of its new vertices put on its first edge, which is incident to a
    /// degree-2 vertex because the branch had length at least 2.
    pub fn subdivision_counts(&self) -> BTreeMap<(Vertex, Vertex), usize> {
        self.branches
            .iter()
            .filter(|b| b.extra() > 0)
            .map(|b| ((b.base_path[0], b.base_path[1]), b.extra()))
            .collect()
    }

    /// Rebuilds the extension from the remainder and the subdivision counts.
    pub fn rebuild(&self) -> Graph {
        let mut g = self.remainder();
        for ((a, b), count) in self.subdivision_counts() {
            let mut prev = a;
            g.remove_edge(crate::graph::Edge::new(a, b)).expect("remainder edge");
            for _ in 0..count {
                let s = g.fresh_vertex();
                g.add_edge(prev, s).unwrap();
                prev = s;
            }
            g.add_edge(prev, b).unwrap();
        }
        g
    }
}

#[derive(Clone, Debug)]
enum Shape {
    Cycle(usize),
    Branched {
        branch_vertices: Vec<Vertex>,
        /// Sorted branches, oriented from the smaller endpoint.
        branches: Vec<Vec<Vertex>>,
        short: usize,
    },
}

#[derive(Clone, Debug)]
struct Candidate {
    deleted: BTreeSet<Vertex>,
    shape: Shape,
}

fn candidates(base: Base) -> &'static [Candidate] {
    static TABLES: OnceLock<[Vec<Candidate>; 2]> = OnceLock::new();
    let tables = TABLES.get_or_init(|| [enumerate(Base::Petersen), enumerate(Base::Heawood)]);
    match base {
        Base::Petersen => &tables[0],
        Base::Heawood => &tables[1],
    }
}

/// Every deletion set leaving a 2-connected remainder, smallest first.
fn enumerate(base: Base) -> Vec<Candidate> {
    let g = base.graph();
    let vs: Vec<Vertex> = g.vertices().collect();
    let n = vs.len();
    let mut masks: Vec<u32> = (0..1u32 << n).collect();
    masks.sort_by_key(|m| (m.count_ones(), m.reverse_bits()));
    let mut out = Vec::new();
    for mask in masks {
        if n - (mask.count_ones() as usize) < 3 {
            continue;
        }
        let deleted: BTreeSet<Vertex> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| vs[i]).collect();
        let rest = g.without(deleted.iter());
        if !rest.is_two_connected() {
            continue;
        }
        let shape = if rest.is_cycle() {
            Shape::Cycle(rest.vertex_count())
        } else {
            let branches = branches(&rest).expect("2-connected non-cycle");
            let short = branches.iter().filter(|b| b.len() == 2).count();
            Shape::Branched {
                branch_vertices: branch_vertices(&rest).into_iter().collect(),
                branches,
                short,
            }
        };
        out.push(Candidate { deleted, shape });
    }
    out
}

/// Closed walk around a cycle graph from its least vertex towards its
/// smaller neighbour.
fn cycle_walk(g: &Graph) -> Vec<Vertex> {
    let start = g.vertices().next().unwrap();
    let mut walk = vec![start];
    let mut prev = start;
    let mut cur = *g.nbrs(start).iter().next().unwrap();
    while cur != start {
        walk.push(cur);
        let next = *g.nbrs(cur).iter().find(|&&w| w != prev).unwrap();
        prev = cur;
        cur = next;
    }
    walk.push(start);
    walk
}

type PairKey = (Vertex, Vertex);

fn key(a: Vertex, b: Vertex) -> PairKey {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Branch indices between each pair of branch vertices.
fn by_pair(branches: &[Vec<Vertex>]) -> BTreeMap<PairKey, Vec<usize>> {
    let mut out: BTreeMap<PairKey, Vec<usize>> = BTreeMap::new();
    for (i, b) in branches.iter().enumerate() {
        out.entry(key(b[0], *b.last().unwrap())).or_default().push(i);
    }
    for list in out.values_mut() {
        list.sort_by_key(|&i| (branches[i].len(), i));
    }
    out
}

/// Sorted lengths can be paired: length 1 with length 1, longer with at
/// least as long.
fn lengths_compatible(h: &[usize], g: &[usize]) -> bool {
    if h.len() != g.len() {
        return false;
    }
    let mut hs = h.to_vec();
    let mut gs = g.to_vec();
    hs.sort_unstable();
    gs.sort_unstable();
    hs.iter().zip(&gs).all(|(&x, &y)| if x == 1 { y == 1 } else { y >= x })
}

struct BranchMatcher<'a> {
    h_branches: &'a [Vec<Vertex>],
    g_branches: &'a [Vec<Vertex>],
    h_pairs: BTreeMap<PairKey, Vec<usize>>,
    g_pairs: BTreeMap<PairKey, Vec<usize>>,
    h_order: Vec<Vertex>,
    h_nbrs: BTreeMap<Vertex, BTreeSet<Vertex>>,
    g_nbrs: BTreeMap<Vertex, BTreeSet<Vertex>>,
    g_vertices: Vec<Vertex>,
    map: BTreeMap<Vertex, Vertex>,
    used: BTreeSet<Vertex>,
}

impl BranchMatcher<'_> {
    fn lengths(branches: &[Vec<Vertex>], pairs: &BTreeMap<PairKey, Vec<usize>>, a: Vertex, b: Vertex) -> Vec<usize> {
        pairs
            .get(&key(a, b))
            .map(|ids| ids.iter().map(|&i| branches[i].len() - 1).collect())
            .unwrap_or_default()
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.h_order.len() {
            return true;
        }
        let x = self.h_order[depth];
        let mapped_nbr = self.h_nbrs[&x].iter().find(|n| self.map.contains_key(n)).copied();
        let options: Vec<Vertex> = match mapped_nbr {
            Some(n) => self.g_nbrs[&self.map[&n]].iter().copied().collect(),
            None => self.g_vertices.clone(),
        };
        for y in options {
            if self.used.contains(&y) || self.g_nbrs[&y].len() != self.h_nbrs[&x].len() {
                continue;
            }
            let ok = self.map.iter().all(|(&hx, &gy)| {
                let hl = Self::lengths(self.h_branches, &self.h_pairs, x, hx);
                let gl = Self::lengths(self.g_branches, &self.g_pairs, y, gy);
                lengths_compatible(&hl, &gl)
            });
            if !ok {
                continue;
            }
            self.map.insert(x, y);
            self.used.insert(y);
            if self.run(depth + 1) {
                return true;
            }
            self.map.remove(&x);
            self.used.remove(&y);
        }
        false
    }

    /// Pairs up branches once all branch vertices are mapped.
    fn images(&self) -> Vec<BranchImage> {
        let mut out = Vec::new();
        for (&(a, b), h_ids) in &self.h_pairs {
            let (ga, gb) = (self.map[&a], self.map[&b]);
            let g_ids = &self.g_pairs[&key(ga, gb)];
            for (&hi, &gi) in h_ids.iter().zip(g_ids) {
                let base_path = self.h_branches[hi].clone();
                let mut path = self.g_branches[gi].clone();
                if path[0] != self.map[&base_path[0]] {
                    path.reverse();
                }
                out.push(BranchImage { base_path, path });
            }
        }
        out
    }
}

fn branch_adjacency(branches: &[Vec<Vertex>]) -> BTreeMap<Vertex, BTreeSet<Vertex>> {
    let mut out: BTreeMap<Vertex, BTreeSet<Vertex>> = BTreeMap::new();
    for b in branches {
        let (x, z) = (b[0], *b.last().unwrap());
        out.entry(x).or_default().insert(z);
        out.entry(z).or_default().insert(x);
    }
    out
}

/// BFS order over the branch multigraph, so each vertex after the first has
/// an earlier neighbour.
fn bfs_order(nbrs: &BTreeMap<Vertex, BTreeSet<Vertex>>) -> Vec<Vertex> {
    let mut order = Vec::new();
    let mut seen = BTreeSet::new();
    for &s in nbrs.keys() {
        if !seen.insert(s) {
            continue;
        }
        order.push(s);
        let mut head = order.len() - 1;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for &y in &nbrs[&x] {
                if seen.insert(y) {
                    order.push(y);
                }
            }
        }
    }
    order
}

/// An embedding of `g` as a 2-extension of `base`, trying deletion sets in
/// order of size.
///
/// `g` should be 2-connected; anything else, or a maximum degree above 3,
/// gives `None`.
pub fn match_2extension(g: &Graph, base: Base) -> Option<Embedding> {
    if g.vertex_count() < 3 || g.max_degree() > 3 || !g.is_two_connected() {
        return None;
    }
    if g.is_cycle() {
        let n = g.vertex_count();
        let cand = candidates(base).iter().find(|c| matches!(c.shape, Shape::Cycle(len) if len <= n))?;
        let rest = base.graph().without(cand.deleted.iter());
        return Some(Embedding {
            base,
            deleted: cand.deleted.clone(),
            vertex_map: BTreeMap::new(),
            branches: vec![BranchImage {
                base_path: cycle_walk(&rest),
                path: cycle_walk(g),
            }],
        });
    }
    let g_branches = branches(g).ok()?;
    let g_bv: Vec<Vertex> = branch_vertices(g).into_iter().collect();
    let g_short = g_branches.iter().filter(|b| b.len() == 2).count();
    let g_nbrs = branch_adjacency(&g_branches);
    let g_pairs = by_pair(&g_branches);
    for cand in candidates(base) {
        let Shape::Branched { branch_vertices: h_bv, branches: h_branches, short } = &cand.shape else {
            continue;
        };
        if h_bv.len() != g_bv.len() || h_branches.len() != g_branches.len() || *short != g_short {
            continue;
        }
        let h_nbrs = branch_adjacency(h_branches);
        let mut matcher = BranchMatcher {
            h_branches,
            g_branches: &g_branches,
            h_pairs: by_pair(h_branches),
            g_pairs: g_pairs.clone(),
            h_order: bfs_order(&h_nbrs),
            h_nbrs,
            g_nbrs: g_nbrs.clone(),
            g_vertices: g_bv.clone(),
            map: BTreeMap::new(),
            used: BTreeSet::new(),
        };
        if matcher.run(0) {
            return Some(Embedding {
                base,
                deleted: cand.deleted.clone(),
                vertex_map: matcher.map.clone(),
                branches: matcher.images(),
            });
        }
    }
    None
}
