mod common;

use totalcol::engine::{total_colour, total_colour_with, EngineError, EngineOptions, Rule};
use totalcol::families;
use totalcol::graph::Graph;
use totalcol::oracle::check_total_colouring;

/// C8 with the chord 0-4: two 5-cycles, no square, and 0-4 is a unichord.
fn c8_with_chord() -> Graph {
    Graph::from_edges([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 0), (0, 4)]).unwrap()
}

fn disjoint_union(parts: &[Graph]) -> Graph {
    let mut edges = Vec::new();
    for (i, g) in parts.iter().enumerate() {
        let shift = 1000 * i as u32;
        edges.extend(g.edges().map(|e| {
            let (a, b) = e.endpoints();
            (a.0 + shift, b.0 + shift)
        }));
    }
    Graph::from_edges(edges).unwrap()
}

#[test]
fn corpus_is_coloured_without_diagnostics() {
    for (name, g) in common::corpus() {
        let out = total_colour(&g).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(check_total_colouring(&g, out.colouring(), 4).unwrap().is_valid(), "{name}");
        assert!(out.diagnostics().is_empty(), "{name}: {:?}", out.diagnostics());
    }
}

#[test]
fn both_cutset_cases_occur() {
    let mut seen = (false, false);
    for (_, g) in common::corpus() {
        for node in total_colour(&g).unwrap().tree().walk() {
            seen.0 |= node.rule == Rule::TwoCutsetContract;
            seen.1 |= node.rule == Rule::TwoCutsetCommonNeighbour;
        }
    }
    let mut r = common::rng(11);
    for _ in 0..200 {
        if seen.1 {
            break;
        }
        let g = common::random_decomposable(&mut r, 8, 30);
        for node in total_colour(&g).unwrap().tree().walk() {
            seen.1 |= node.rule == Rule::TwoCutsetCommonNeighbour;
        }
    }
    assert_eq!(seen, (true, true));
}

#[test]
fn output_is_deterministic() {
    let parts: Vec<Graph> = common::corpus().into_iter().take(12).map(|(_, g)| g).collect();
    let g = disjoint_union(&parts);
    let first = total_colour(&g).unwrap();
    let again = total_colour(&g).unwrap();
    assert_eq!(first.colouring(), again.colouring());
    let parallel = total_colour_with(
        &g,
        &EngineOptions {
            jobs: 4,
            ..EngineOptions::default()
        },
    )
    .unwrap();
    assert_eq!(first.colouring(), parallel.colouring());
    assert_eq!(first.tree().rule, Rule::Components);
    assert_eq!(first.tree().children.len(), 12);
}

#[test]
fn k4_component_makes_the_graph_type_two() {
    let g = disjoint_union(&[families::petersen(), families::complete(4)]);
    let out = total_colour(&g).unwrap();
    assert!(out.is_k4());
    assert_eq!(out.palette(), 5);
    assert!(check_total_colouring(&g, out.colouring(), 5).unwrap().is_valid());
}

#[test]
fn non_members_are_refused() {
    assert!(matches!(total_colour(&families::complete_bipartite(3, 3)), Err(EngineError::Square(_))));
    let err = total_colour(&c8_with_chord()).unwrap_err();
    assert!(matches!(err, EngineError::Unichord(_)), "{err}");
    assert!(err.is_class_violation());
    assert_eq!(total_colour(&families::star(4)).unwrap_err(), EngineError::DegreeTooLarge(4));
}

#[test]
fn trusted_inputs_are_still_checked() {
    let opts = EngineOptions {
        trust_class: true,
        ..EngineOptions::default()
    };
    for g in [c8_with_chord(), families::complete_bipartite(3, 3)] {
        match total_colour_with(&g, &opts) {
            Ok(out) => assert!(check_total_colouring(&g, out.colouring(), 4).unwrap().is_valid()),
            Err(e) => assert!(!matches!(e, EngineError::Invalid(_)), "{e}"),
        }
    }
}

#[test]
fn unichord_scan_is_limited_by_size() {
    let opts = EngineOptions {
        max_exact: 5,
        ..EngineOptions::default()
    };
    let result = total_colour_with(&c8_with_chord(), &opts);
    assert!(!matches!(result, Err(EngineError::Unichord(_))));
}

#[test]
fn recursion_tree_renders() {
    let out = total_colour(&families::double_theta()).unwrap();
    let dot = out.tree().to_dot();
    assert!(dot.starts_with("digraph recursion {"));
    assert!(dot.contains("->"));
    let json = serde_json::to_value(out.tree()).unwrap();
    assert_eq!(json["rule"], "2-cutset-contract");
    assert!(out.tree().depth() >= 2);
    assert!(out.tree().to_string().lines().count() >= 2);
}
