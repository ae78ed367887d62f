//! Deliberately broken inputs must be caught.

use locdom::colour::{build_colour_graph, verify_structure, ColourGraph, ColouredEdge, Property};
use locdom::generators::path;
use locdom::paths::{RecurrenceTerm, STANDARD_TERMS};
use locdom::VertexSet;
use locdom_cli::cli::run;
use locdom_cli::reproduce::{criterion_by_id, Suite};

fn corrupted() -> Vec<RecurrenceTerm> {
    let mut terms = STANDARD_TERMS.to_vec();
    terms[2].weight = 2;
    terms
}

#[test]
fn corrupted_recurrence_fails_the_counting_criteria() {
    let suite = Suite::new(1).with_recurrence(corrupted());
    for id in [3, 4] {
        let outcome = suite.run(criterion_by_id(id).unwrap());
        assert!(
            !outcome.passed,
            "criterion {id} should fail: {}",
            outcome.line()
        );
    }
    assert!(suite.run(criterion_by_id(1).unwrap()).passed);
}

#[test]
fn corrupted_recurrence_exits_1() {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(
        [
            "ld",
            "reproduce-all",
            "--only",
            "paths",
            "--corrupt-recurrence",
        ],
        &mut out,
        &mut err,
    );
    assert_eq!(code, 1);
    assert!(String::from_utf8(out).unwrap().contains("criterion.3=fail"));
}

#[test]
fn dropped_recurrence_term_is_caught() {
    let terms = STANDARD_TERMS[..3].to_vec();
    let suite = Suite::new(1).with_recurrence(terms);
    assert!(!suite.run(criterion_by_id(3).unwrap()).passed);
}

#[test]
fn same_colour_edges_at_one_vertex_fail_property_iii() {
    let g = path(10).unwrap();
    let code: VertexSet = [2, 4, 7, 9].into_iter().collect();
    let cg = build_colour_graph(&g, code).unwrap();
    // recolour edge 1-3 (colour 4) to colour 2, the colour of edge 1-2's partner 0-1
    let edges = cg.edges().iter().map(|&e| {
        if (e.x, e.y) == (1, 3) {
            ColouredEdge::new(1, 3, 2)
        } else {
            e
        }
    });
    let bad = ColourGraph::from_edges(cg.order(), edges.collect::<Vec<_>>());
    let report = verify_structure(&bad, &g, code);
    assert!(!report.passed(Property::DistinctAtEndpoint));
    assert!(verify_structure(&cg, &g, code).all_passed());
}
