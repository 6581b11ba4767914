//! Δ-edge-colouring of bipartite graphs by alternating-path recolouring.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::colouring::Colour;
use crate::graph::{Edge, Graph};

pub type EdgeColouring = BTreeMap<Edge, Colour>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeColourError {
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("palette has {palette} colours but the maximum degree is {degree}")]
    PaletteTooSmall { palette: usize, degree: usize },
    #[error("palette lists colour {0} twice")]
    DuplicatePaletteColour(Colour),
    #[error("seed edge {0} is not in the graph")]
    UnknownSeedEdge(Edge),
    #[error("seeded edges do not share a common vertex")]
    SeedNotLocal,
    #[error("seeded edges {0} and {1} both ask for colour {2}")]
    SeedConflict(Edge, Edge, Colour),
    #[error("seed colour {0} is not in the palette")]
    SeedOutsidePalette(Colour),
}

fn validate_seeds(g: &Graph, palette: &[Colour], seeds: &[(Edge, Colour)]) -> Result<(), EdgeColourError> {
    for (i, &(e, c)) in seeds.iter().enumerate() {
        if !g.contains_edge(e) {
            return Err(EdgeColourError::UnknownSeedEdge(e));
        }
        if !palette.contains(&c) {
            return Err(EdgeColourError::SeedOutsidePalette(c));
        }
        if let Some(&(f, _)) = seeds[..i].iter().find(|(_, d)| *d == c) {
            return Err(EdgeColourError::SeedConflict(f, e, c));
        }
    }
    if let Some(&(first, _)) = seeds.first() {
        let (a, b) = first.endpoints();
        let local = |v| seeds.iter().all(|(e, _)| e.contains(v));
        if !local(a) && !local(b) {
            return Err(EdgeColourError::SeedNotLocal);
        }
    }
    Ok(())
}

/// Properly edge-colours the bipartite graph `g` with `Δ(g)` colours taken
/// from `palette`.
///
/// `seeds` pins colours on edges that all share one vertex. The colouring is
/// built on abstract colour classes first; the classes are then matched to
/// palette colours so that every seeded edge lands on its requested colour.
pub fn edge_colour_bipartite(
    g: &Graph,
    palette: &[Colour],
    seeds: &[(Edge, Colour)],
) -> Result<EdgeColouring, EdgeColourError> {
    if !g.is_bipartite() {
        return Err(EdgeColourError::NotBipartite);
    }
    for (i, c) in palette.iter().enumerate() {
        if palette[..i].contains(c) {
            return Err(EdgeColourError::DuplicatePaletteColour(*c));
        }
    }
    let degree = g.max_degree();
    if palette.len() < degree {
        return Err(EdgeColourError::PaletteTooSmall { palette: palette.len(), degree });
    }
    validate_seeds(g, palette, seeds)?;

    let dense = g.to_dense();
    let n = dense.len();
    // mate[v][c]: neighbour joined to v by the edge of class c.
    let mut mate = vec![vec![None::<usize>; degree]; n];
    for e in g.edges() {
        let (a, b) = e.endpoints();
        let (u, v) = (dense.index(a).unwrap(), dense.index(b).unwrap());
        let free_at = |x: usize, mate: &Vec<Vec<Option<usize>>>| {
            (0..degree).find(|&c| mate[x][c].is_none()).expect("degree bound")
        };
        let alpha = free_at(u, &mate);
        let beta = free_at(v, &mate);
        if mate[v][alpha].is_some() {
            // Swap alpha/beta along the alternating path from v. It cannot
            // reach u in a bipartite graph.
            let mut walk = vec![v];
            let mut colour = alpha;
            let mut x = v;
            while let Some(y) = mate[x][colour] {
                walk.push(y);
                x = y;
                colour = if colour == alpha { beta } else { alpha };
            }
            let mut colour = alpha;
            for pair in walk.windows(2) {
                mate[pair[0]][colour] = None;
                mate[pair[1]][colour] = None;
                colour = if colour == alpha { beta } else { alpha };
            }
            let mut colour = beta;
            for pair in walk.windows(2) {
                mate[pair[0]][colour] = Some(pair[1]);
                mate[pair[1]][colour] = Some(pair[0]);
                colour = if colour == alpha { beta } else { alpha };
            }
        }
        debug_assert!(mate[u][alpha].is_none() && mate[v][alpha].is_none());
        mate[u][alpha] = Some(v);
        mate[v][alpha] = Some(u);
    }

    let class_of = |e: Edge| {
        let (a, b) = e.endpoints();
        let (u, v) = (dense.index(a).unwrap(), dense.index(b).unwrap());
        (0..degree).find(|&c| mate[u][c] == Some(v)).expect("every edge coloured")
    };
    let mut assignment: Vec<Option<Colour>> = vec![None; degree];
    for &(e, c) in seeds {
        assignment[class_of(e)] = Some(c);
    }
    let taken: Vec<Colour> = assignment.iter().flatten().copied().collect();
    let mut spare = palette.iter().copied().filter(|c| !taken.contains(c));
    for slot in assignment.iter_mut() {
        if slot.is_none() {
            *slot = spare.next();
        }
    }
    Ok(g.edges().map(|e| (e, assignment[class_of(e)].unwrap())).collect())
}

/// True when no two edges sharing a vertex have the same colour.
pub fn is_proper_edge_colouring(g: &Graph, colouring: &EdgeColouring) -> bool {
    g.vertices().all(|v| {
        let mut seen = Vec::new();
        g.incident_edges(v).all(|e| match colouring.get(&e) {
            Some(c) if !seen.contains(c) => {
                seen.push(*c);
                true
            }
            _ => false,
        })
    })
}
