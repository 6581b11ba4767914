#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use totalcol::families;
use totalcol::graph::{Edge, Graph, Vertex};
use totalcol::recognition::is_in_class;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random loopless cubic multigraph on `k` vertices (k even) by the
/// configuration model.
pub fn cubic_multigraph(rng: &mut impl Rng, k: u32) -> Vec<(u32, u32)> {
    assert!(k >= 2 && k.is_multiple_of(2));
    loop {
        let mut stubs: Vec<u32> = (0..k).flat_map(|v| [v, v, v]).collect();
        stubs.shuffle(rng);
        let pairs: Vec<(u32, u32)> = stubs.chunks(2).map(|p| (p[0], p[1])).collect();
        if pairs.iter().all(|(a, b)| a != b) {
            return pairs;
        }
    }
}

/// Replaces each multigraph edge `i` by a path with `subdiv[i]` interior
/// vertices, numbered from `k`.
pub fn subdivide(k: u32, edges: &[(u32, u32)], subdiv: &[usize]) -> Option<Graph> {
    let mut next = k;
    let mut out = Vec::new();
    for (&(a, b), &s) in edges.iter().zip(subdiv) {
        let mut prev = a;
        for _ in 0..s {
            out.push((prev, next));
            prev = next;
            next += 1;
        }
        out.push((prev, b));
    }
    Graph::from_edges(out).ok()
}

/// Random 2-connected square-free sparse graph with about `n` vertices.
pub fn random_sparse(rng: &mut impl Rng, n: u32) -> Graph {
    let k = ((n / 4).max(2) + 1) & !1;
    loop {
        let edges = cubic_multigraph(rng, k);
        let extra = n.saturating_sub(k + edges.len() as u32) as usize;
        let mut subdiv = vec![1usize; edges.len()];
        for _ in 0..extra {
            let i = rng.gen_range(0..edges.len());
            subdiv[i] += 1;
        }
        let Some(g) = subdivide(k, &edges, &subdiv) else {
            continue;
        };
        if g.is_two_connected() && is_in_class(&g) {
            return g;
        }
    }
}

/// Random 2-connected 2-extension of the Petersen (`heawood = false`) or
/// Heawood graph with between 1 and `max_deleted` deleted vertices.
pub fn random_extension(rng: &mut impl Rng, heawood: bool, max_deleted: usize) -> Graph {
    let base = if heawood {
        families::heawood()
    } else {
        families::petersen()
    };
    let verts: Vec<Vertex> = base.vertices().collect();
    loop {
        let d = rng.gen_range(1..=max_deleted.max(1));
        let deleted: Vec<Vertex> = verts.choose_multiple(rng, d).copied().collect();
        let mut g = base.without(deleted.iter());
        if !g.is_two_connected() || g.is_cycle() {
            continue;
        }
        let stretchable: Vec<Edge> = g
            .edges()
            .filter(|e| {
                let (a, b) = e.endpoints();
                g.deg(a) == 2 || g.deg(b) == 2
            })
            .collect();
        let mut next = 100;
        for e in stretchable {
            let (a, b) = e.endpoints();
            let s = rng.gen_range(0..=3);
            if s == 0 {
                continue;
            }
            g.remove_edge(e).unwrap();
            let mut prev = a;
            for _ in 0..s {
                g.add_edge(prev, Vertex(next)).unwrap();
                prev = Vertex(next);
                next += 1;
            }
            g.add_edge(prev, b).unwrap();
        }
        return g;
    }
}

/// Random subcubic graph from a cubic multigraph on `k` vertices with each
/// edge subdivided 0 to 2 times, kept only when it is simple, 2-connected
/// and in the class.
pub fn random_subdivided_cubic(rng: &mut impl Rng, k: u32, tries: usize) -> Option<Graph> {
    for _ in 0..tries {
        let edges = cubic_multigraph(rng, k);
        let subdiv: Vec<usize> = edges.iter().map(|_| rng.gen_range(0..=2)).collect();
        let Some(g) = subdivide(k, &edges, &subdiv) else {
            continue;
        };
        if g.max_degree() == 3 && g.is_two_connected() && is_in_class(&g) {
            return Some(g);
        }
    }
    None
}

/// Heawood minus two vertices, in the shape that is not a Petersen
/// extension (`petersen_shape = false`) or the one that is.
pub fn heawood_minus_two(petersen_shape: bool) -> Graph {
    use totalcol::recognition::{match_2extension, Base};
    let h = families::heawood();
    (1..14)
        .map(|j| h.without([Vertex(0), Vertex(j)].iter()))
        .filter(|g| g.is_two_connected())
        .find(|g| match_2extension(g, Base::Petersen).is_some() == petersen_shape)
        .expect("both shapes occur")
}

/// Random decomposable class member with at most `max_n` vertices.
pub fn random_decomposable(rng: &mut impl Rng, k: u32, max_n: usize) -> Graph {
    use totalcol::recognition::{classify_basic, ClassLabel};
    loop {
        if let Some(g) = random_subdivided_cubic(rng, k, 500) {
            if g.vertex_count() <= max_n && classify_basic(&g) == Ok(ClassLabel::Decomposable) {
                return g;
            }
        }
    }
}

/// Named corpus of connected class members of maximum degree 3.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = vec![
        ("petersen".into(), families::petersen()),
        ("heawood".into(), families::heawood()),
        ("petersen-1".into(), families::petersen().without([Vertex(0)].iter())),
        ("heawood-1".into(), families::heawood().without([Vertex(0)].iter())),
        ("heawood-2 petersen shape".into(), heawood_minus_two(true)),
        ("heawood-2 other shape".into(), heawood_minus_two(false)),
        ("heawood-3".into(), families::heawood().without([Vertex(0), Vertex(1), Vertex(2)].iter())),
        ("subdivided k4".into(), families::subdivided_k4()),
        ("double theta".into(), families::double_theta()),
    ];
    for lengths in [[2, 3, 3], [3, 3, 3], [2, 3, 4], [2, 4, 4], [3, 4, 5]] {
        out.push((format!("theta {lengths:?}"), families::theta(&lengths)));
    }
    let mut r = rng(2024);
    for n in [12, 20, 50, 100, 150, 200] {
        out.push((format!("random sparse n={n}"), random_sparse(&mut r, n)));
    }
    for i in 0..4 {
        out.push((format!("random petersen extension {i}"), random_extension(&mut r, false, 2)));
        out.push((format!("random heawood extension {i}"), random_extension(&mut r, true, 3)));
    }
    for i in 0..6 {
        out.push((format!("random decomposable small {i}"), random_decomposable(&mut r, 6, 14)));
    }
    for i in 0..4 {
        out.push((format!("random decomposable {i}"), random_decomposable(&mut r, 10, 40)));
    }
    out
}
