mod common;

use proptest::prelude::*;

use totalcol::colouring::palette_permutations;
use totalcol::engine::total_colour;
use totalcol::graph::{Graph, Vertex};
use totalcol::io::{parse_edge_list, parse_graph6, write_edge_list, write_graph6, Names};
use totalcol::oracle::check_total_colouring;
use totalcol::path_extension::{extend_path, is_proper_sequence, PathError, PathPrecolouring};

fn boundary() -> impl Strategy<Value = [u8; 4]> {
    prop::array::uniform4(1u8..=4)
}

fn small_graph() -> impl Strategy<Value = Graph> {
    prop::collection::vec((0u32..12, 0u32..12), 0..30).prop_map(|pairs| {
        let mut g = Graph::new();
        for (a, b) in pairs {
            if a != b && !g.has_edge(Vertex(a), Vertex(b)) {
                g.add_edge(Vertex(a), Vertex(b)).unwrap();
            }
        }
        g
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn path_extension_meets_its_boundary(k in 3usize..24, b in boundary()) {
        let p = PathPrecolouring::new(k, b);
        match p.validate() {
            Ok(()) => {
                let seq = extend_path(&p).unwrap();
                prop_assert_eq!(seq.len(), 2 * k - 1);
                prop_assert!(is_proper_sequence(&seq));
                prop_assert_eq!([seq[0], seq[1], seq[2 * k - 3], seq[2 * k - 2]], b);
            }
            Err(e) => prop_assert_eq!(extend_path(&p), Err::<Vec<u8>, PathError>(e)),
        }
    }

    #[test]
    fn random_sparse_graphs_colour(seed in any::<u64>(), n in 8u32..120) {
        let g = common::random_sparse(&mut common::rng(seed), n);
        let out = total_colour(&g).unwrap();
        prop_assert!(check_total_colouring(&g, out.colouring(), 4).unwrap().is_valid());
        prop_assert!(out.diagnostics().is_empty());
    }

    #[test]
    fn random_extensions_colour(seed in any::<u64>(), heawood in any::<bool>()) {
        let g = common::random_extension(&mut common::rng(seed), heawood, 3);
        let out = total_colour(&g).unwrap();
        prop_assert!(check_total_colouring(&g, out.colouring(), 4).unwrap().is_valid());
        prop_assert!(out.diagnostics().is_empty());
    }

    #[test]
    fn relabelling_keeps_colourings_proper(seed in any::<u64>(), which in 0usize..24) {
        let g = common::random_sparse(&mut common::rng(seed), 30);
        let c = total_colour(&g).unwrap().colouring().clone();
        let perm = palette_permutations(4)[which];
        prop_assert!(check_total_colouring(&g, &c.relabelled(&perm), 4).unwrap().is_valid());
    }

    #[test]
    fn edge_lists_round_trip(g in small_graph()) {
        let names = Names::numeric(&g);
        let (h, _) = parse_edge_list(&write_edge_list(&g, &names)).unwrap();
        prop_assert_eq!(g, h);
    }

    #[test]
    fn graph6_round_trips(g in small_graph()) {
        // graph6 renumbers vertices 0..n in ascending order
        let ids: Vec<_> = g.vertices().collect();
        let h = parse_graph6(&write_graph6(&g)).unwrap();
        let renumbered = g.map_vertices(|v| Vertex(ids.iter().position(|&w| w == v).unwrap() as u32));
        prop_assert_eq!(renumbered, h);
    }
}

#[test]
fn decomposable_graphs_colour() {
    let mut r = common::rng(99);
    for k in [6, 8, 10, 12] {
        for _ in 0..10 {
            let g = common::random_decomposable(&mut r, k, 60);
            let out = total_colour(&g).unwrap();
            assert!(check_total_colouring(&g, out.colouring(), 4).unwrap().is_valid());
            assert!(out.diagnostics().is_empty(), "{:?}", out.diagnostics());
        }
    }
}
