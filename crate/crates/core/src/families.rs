//! Named graphs used as basic classes, fixtures and test corpus.

use crate::graph::{Graph, Vertex};

/// Petersen graph. Ids 0..=4 are the outer cycle `a1..a5`, 5..=9 the inner
/// cycle `b1..b5`; the spokes are `a1b1, a2b4, a3b2, a4b5, a5b3`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 1) % 5));
    }
    // a_i b_j pairs, 1-based in the usual drawing.
    for (a, b) in [(1, 1), (2, 4), (3, 2), (4, 5), (5, 3)] {
        edges.push((a - 1, 5 + b - 1));
    }
    Graph::from_edges(edges).expect("static edge list")
}

/// Heawood graph on ids 0..=13: the Hamiltonian cycle plus seven chords.
pub fn heawood() -> Graph {
    let mut edges: Vec<(u32, u32)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    for (a, b) in [(1, 10), (2, 7), (3, 12), (4, 9), (5, 14), (6, 11), (8, 13)] {
        edges.push((a - 1, b - 1));
    }
    Graph::from_edges(edges).expect("static edge list")
}

pub fn complete(n: u32) -> Graph {
    let mut g = Graph::new();
    for i in 0..n {
        g.add_vertex(Vertex(i));
        for j in 0..i {
            g.add_edge(Vertex(j), Vertex(i)).unwrap();
        }
    }
    g
}

pub fn cycle(n: u32) -> Graph {
    assert!(n >= 3);
    Graph::from_edges((0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// Path on `n` vertices `0 - 1 - ... - (n-1)`.
pub fn path(n: u32) -> Graph {
    let mut g = Graph::new();
    g.add_vertex(Vertex(0));
    for i in 1..n {
        g.add_edge(Vertex(i - 1), Vertex(i)).unwrap();
    }
    g
}

/// `K_{1,k}` with centre 0.
pub fn star(k: u32) -> Graph {
    Graph::from_edges((1..=k).map(|i| (0, i))).unwrap()
}

/// `K_{m,n}` with sides `0..m` and `m..m+n`.
pub fn complete_bipartite(m: u32, n: u32) -> Graph {
    let mut edges = Vec::new();
    for i in 0..m {
        for j in 0..n {
            edges.push((i, m + j));
        }
    }
    Graph::from_edges(edges).unwrap()
}

/// Two hubs 0 and 1 joined by internally disjoint paths of the given lengths.
/// Interior vertices are numbered from 2 upward, path by path.
pub fn theta(lengths: &[u32]) -> Graph {
    let mut g = Graph::new();
    let mut next = 2;
    for &len in lengths {
        assert!(len >= 1);
        let mut prev = 0;
        for _ in 1..len {
            g.add_edge(Vertex(prev), Vertex(next)).unwrap();
            prev = next;
            next += 1;
        }
        g.add_edge(Vertex(prev), Vertex(1)).unwrap();
    }
    g
}

/// `K4` with every edge subdivided once. Originals are 0..=3.
pub fn subdivided_k4() -> Graph {
    let mut edges = Vec::new();
    let mut next = 4;
    for i in 0..4 {
        for j in (i + 1)..4 {
            edges.push((i, next));
            edges.push((next, j));
            next += 1;
        }
    }
    Graph::from_edges(edges).unwrap()
}

/// A 12-vertex graph with a proper 2-cutset `{a, b} = {0, 1}`.
///
/// X-side: `a-u1-v1-b`, `a-u2-v2-b` (ids 2..=5). Y-side: `a-a'`, `b'-b`
/// and two paths `a'-y1-y2-b'`, `a'-y3-y4-b'` with `a' = 6`, `b' = 11`.
pub fn double_theta() -> Graph {
    Graph::from_edges([
        (0, 2),
        (2, 3),
        (3, 1),
        (0, 4),
        (4, 5),
        (5, 1),
        (0, 6),
        (6, 7),
        (7, 8),
        (8, 11),
        (6, 9),
        (9, 10),
        (10, 11),
        (11, 1),
    ])
    .unwrap()
}
