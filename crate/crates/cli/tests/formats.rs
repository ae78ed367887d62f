//! Round trips through the text formats.

use locdom::generators::{random_connected, CnfInstance, Literal};
use locdom::Graph;
use locdom_cli::format::{parse_dimacs, parse_graph, write_dimacs, write_graph};
use proptest::prelude::*;

proptest! {
    #[test]
    fn graphs_round_trip(n in 2usize..30, p in 0.0f64..1.0, seed: u64) {
        let g = random_connected(n, p, seed).unwrap();
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn arbitrary_edge_sets_round_trip(n in 1usize..12, mask: u64) {
        let pairs: Vec<(usize, usize)> =
            (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> (i % 64) & 1 == 1).map(|(_, &e)| e);
        let g = Graph::new(n, edges).unwrap();
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn formulas_round_trip(
        vars in 1usize..5,
        raw in prop::collection::vec(prop::array::uniform3((1usize..5, any::<bool>())), 1..6),
    ) {
        let clauses: Vec<[Literal; 3]> = raw
            .iter()
            .map(|c| c.map(|(v, neg)| {
                let v = (v - 1) % vars + 1;
                if neg { Literal::neg(v) } else { Literal::pos(v) }
            }))
            .collect();
        let f = CnfInstance::new(vars, clauses).unwrap();
        prop_assert_eq!(parse_dimacs(&write_dimacs(&f)).unwrap(), f);
    }
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let g = parse_graph("# header follows\n\n3 1\n# an edge\n1 3\n").unwrap();
    assert!(g.has_edge(1, 3));
    let f = parse_dimacs("c x\n\np cnf 1 1\nc mid\n1 -1 1 0\n").unwrap();
    assert_eq!(f.clauses().len(), 1);
}

#[test]
fn empty_graph_has_a_header_only() {
    let g = parse_graph("0 0\n").unwrap();
    assert_eq!(g.order(), 0);
    assert_eq!(write_graph(&g), "0 0\n");
}
