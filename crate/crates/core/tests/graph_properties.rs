//! Invariants of graphs and codes on random inputs.

use std::collections::BTreeSet;

use locdom::generators::{all_graphs, random_connected};
use locdom::solver::{
    enumerate_minimum_ld_codes, gamma_ld, lower_bound_information, twin_lower_bound,
};
use locdom::subsets::k_subsets;
use locdom::{is_ld_code, Graph, VertexSet};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>(), any::<u64>()).prop_map(|(n, a, b)| {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        let edges = pairs.into_iter().enumerate().filter(|(i, _)| {
            let word = if *i < 64 { a } else { b };
            word >> (i % 64) & 1 == 1
        });
        Graph::new(n, edges.map(|(_, e)| e)).unwrap()
    })
}

/// Edge sets of all simple cycles, by brute force over vertex sequences.
fn cycles(g: &Graph) -> BTreeSet<BTreeSet<(usize, usize)>> {
    fn extend(
        g: &Graph,
        start: usize,
        walk: &mut Vec<usize>,
        out: &mut BTreeSet<BTreeSet<(usize, usize)>>,
    ) {
        let last = *walk.last().unwrap();
        for &w in g.neighbours(last) {
            if w == start && walk.len() >= 3 {
                let mut edges: BTreeSet<(usize, usize)> = walk
                    .windows(2)
                    .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
                    .collect();
                edges.insert((start.min(last), start.max(last)));
                out.insert(edges);
            } else if w > start && !walk.contains(&w) {
                walk.push(w);
                extend(g, start, walk, out);
                walk.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    for v in g.vertices() {
        extend(g, v, &mut vec![v], &mut out);
    }
    out
}

#[test]
fn cactus_test_matches_cycle_enumeration() {
    for n in 1..=6 {
        for g in all_graphs(n).unwrap() {
            let cs: Vec<_> = cycles(&g).into_iter().collect();
            let disjoint = cs
                .iter()
                .enumerate()
                .all(|(i, a)| cs[i + 1..].iter().all(|b| a.is_disjoint(b)));
            assert_eq!(g.is_cactus(), disjoint, "{g:?}");
        }
    }
}

#[test]
fn bipartite_test_matches_odd_cycle_enumeration() {
    for g in all_graphs(6).unwrap() {
        let odd = cycles(&g).iter().any(|c| c.len() % 2 == 1);
        assert_eq!(g.is_bipartite(), !odd, "{g:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn supersets_of_codes_are_codes(g in arb_graph(12), extra: u64) {
        let census = enumerate_minimum_ld_codes(&g).unwrap();
        let all = VertexSet::full(g.order());
        for &code in &census.codes {
            let bigger = code.union(VertexSet::from_bits(extra).intersection(all));
            prop_assert!(is_ld_code(&g, bigger).unwrap());
        }
    }

    #[test]
    fn census_is_complete_and_minimum(g in arb_graph(9)) {
        let census = enumerate_minimum_ld_codes(&g).unwrap();
        let n = g.order();
        let brute: Vec<VertexSet> = k_subsets(n, census.gamma)
            .filter(|&s| is_ld_code(&g, s).unwrap())
            .collect();
        let mut listed = census.codes.clone();
        listed.sort();
        let mut brute_sorted = brute.clone();
        brute_sorted.sort();
        prop_assert_eq!(listed, brute_sorted);
        if census.gamma > 1 {
            prop_assert!(k_subsets(n, census.gamma - 1).all(|s| !is_ld_code(&g, s).unwrap()));
        }
    }

    #[test]
    fn lower_bounds_hold(g in arb_graph(14)) {
        let gamma = gamma_ld(&g).unwrap();
        prop_assert!(gamma >= lower_bound_information(g.order()));
        prop_assert!(gamma >= twin_lower_bound(&g));
    }

    #[test]
    fn components_partition_the_vertices(g in arb_graph(20)) {
        let comps = g.connected_components();
        prop_assert_eq!(comps.iter().map(Vec::len).sum::<usize>(), g.order());
        let gamma: usize = comps
            .iter()
            .map(|c| gamma_ld(&g.induced(c.iter().copied()).unwrap().graph).unwrap())
            .sum();
        prop_assert_eq!(gamma, gamma_ld(&g).unwrap());
    }

    #[test]
    fn deleting_in_two_steps_is_deleting_once(g in arb_graph(12), a in 1usize..13, b in 1usize..13) {
        prop_assume!(a != b && a <= g.order() && b <= g.order());
        let once = g.delete_vertices([a, b]).unwrap();
        let first = g.delete_vertices([a]).unwrap();
        let local_b = first.local_label(b).unwrap();
        let second = first.graph.delete_vertices([local_b]).unwrap();
        prop_assert_eq!(&once.graph, &second.graph);
        for v in once.graph.vertices() {
            prop_assert_eq!(
                once.parent_label(v),
                first.parent_label(second.parent_label(v))
            );
        }
    }

    #[test]
    fn random_connected_graphs_are_connected(n in 2usize..40, p in 0.0f64..0.3, seed: u64) {
        let g = random_connected(n, p, seed).unwrap();
        prop_assert!(g.is_connected());
        prop_assert_eq!(g.order(), n);
    }
}
