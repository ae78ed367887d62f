//! Colour graphs of locating-dominating codes.
//!
//! For a code `S`, the colour graph lives on `V(G)` plus an auxiliary vertex
//! (label `0`) whose I-set is always empty. Two vertices `x, y` outside
//! `S ∖ {u}` are joined by an edge of colour `u ∈ S` when their I-sets under
//! `S ∖ {u}` coincide, i.e. `u` is the only codeword telling them apart (or,
//! for an edge to the auxiliary vertex, the only codeword dominating `x`).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::code::ld_bits;
use crate::forced::classify_oracle;
use crate::solver::gamma_ld;
use crate::{Error, Graph, Result, VertexSet};

mod verify;

pub use verify::{
    verify_structure, verify_structure_with, Property, PropertyCheck, StructureReport,
};

/// Label of the auxiliary vertex.
pub const AUX: usize = 0;

/// An edge `{x, y}` with `x < y` (label `0` is the auxiliary vertex).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColouredEdge {
    pub x: usize,
    pub y: usize,
    pub colour: usize,
}

impl ColouredEdge {
    pub fn new(a: usize, b: usize, colour: usize) -> Self {
        ColouredEdge {
            x: a.min(b),
            y: a.max(b),
            colour,
        }
    }

    pub fn touches(&self, v: usize) -> bool {
        self.x == v || self.y == v
    }

    pub fn other(&self, v: usize) -> usize {
        if self.x == v {
            self.y
        } else {
            self.x
        }
    }

    /// Both endpoints outside `code` (the auxiliary vertex never is a codeword).
    pub fn avoids(&self, code: VertexSet) -> bool {
        !code.contains(self.x) && !code.contains(self.y)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColourGraph {
    order: usize,
    edges: Vec<ColouredEdge>,
}

impl ColourGraph {
    /// Assemble a colour graph from raw edges, e.g. to build test fixtures.
    /// Edges are sorted; nothing else is checked.
    pub fn from_edges(order: usize, edges: impl IntoIterator<Item = ColouredEdge>) -> Self {
        let mut edges: Vec<ColouredEdge> = edges
            .into_iter()
            .map(|e| ColouredEdge::new(e.x, e.y, e.colour))
            .collect();
        edges.sort_unstable();
        ColourGraph { order, edges }
    }

    /// Order of the underlying graph (the auxiliary vertex is extra).
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edges(&self) -> &[ColouredEdge] {
        &self.edges
    }

    pub fn edges_of_colour(&self, u: usize) -> impl Iterator<Item = &ColouredEdge> + '_ {
        self.edges.iter().filter(move |e| e.colour == u)
    }

    /// Edges of `G_S - S`.
    pub fn inner_edges(&self, code: VertexSet) -> impl Iterator<Item = &ColouredEdge> + '_ {
        self.edges.iter().filter(move |e| e.avoids(code))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }
}

/// Build `G_S` by evaluating the defining condition for every colour and pair.
pub fn build_colour_graph(g: &Graph, code: VertexSet) -> Result<ColourGraph> {
    g.check_set(code)?;
    if code.is_empty() {
        return Err(Error::EmptyCode);
    }
    let closed = g.closed_sets();
    if !ld_bits(closed, code.bits()) {
        return Err(Error::NotLdCode);
    }
    let mut edges = Vec::new();
    for u in code {
        let rest = code.difference(VertexSet::singleton(u));
        // (label, I-set under S - u) for everything outside S - u, aux included
        let outside: Vec<(usize, VertexSet)> = core::iter::once((AUX, VertexSet::EMPTY))
            .chain(
                g.vertices()
                    .filter(|&x| !rest.contains(x))
                    .map(|x| (x, closed[x - 1].intersection(rest))),
            )
            .collect();
        for (i, &(x, ix)) in outside.iter().enumerate() {
            for &(y, iy) in &outside[i + 1..] {
                if ix == iy {
                    edges.push(ColouredEdge::new(x, y, u));
                }
            }
        }
    }
    Ok(ColourGraph::from_edges(g.order(), edges))
}

/// For each codeword: (edges of that colour in `G_S`, edges of that colour in `G_S - S`).
pub fn colour_edge_counts(cg: &ColourGraph, code: VertexSet) -> BTreeMap<usize, (usize, usize)> {
    let mut counts: BTreeMap<usize, (usize, usize)> = code.iter().map(|u| (u, (0, 0))).collect();
    for e in cg.edges() {
        let entry = counts.entry(e.colour).or_insert((0, 0));
        entry.0 += 1;
        if e.avoids(code) {
            entry.1 += 1;
        }
    }
    counts
}

/// A vertex `u` such that `S[v ← u]` is still locating-dominating, for a
/// codeword `v` with fewer than two colour-`v` edges in `G_S - S`.
///
/// The candidate is read off the colour-`v` edges by the case analysis below
/// and then checked, so a returned witness is always valid. Returns `None`
/// when `v` has at least two such edges (no witness is promised then) or if
/// the candidate fails the check.
pub fn swap_witness(g: &Graph, code: VertexSet, v: usize) -> Result<Option<usize>> {
    g.check_set(code)?;
    g.check_vertex(v)?;
    if g.order() < 2 {
        return Err(Error::InvalidParameter("swap witness needs n >= 2".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !code.contains(v) {
        return Err(Error::NotInCode(v));
    }
    let closed = g.closed_sets();
    if code.is_empty() || !ld_bits(closed, code.bits()) {
        return Err(Error::NotLdCode);
    }
    if let Some(u) = code.iter().find(|&u| {
        let rest = code.difference(VertexSet::singleton(u));
        !rest.is_empty() && ld_bits(closed, rest.bits())
    }) {
        return Err(Error::NotMinimal(u));
    }

    let cg = build_colour_graph(g, code)?;
    let own: Vec<ColouredEdge> = cg.edges_of_colour(v).copied().collect();
    let inner: Vec<ColouredEdge> = own.iter().copied().filter(|e| e.avoids(code)).collect();
    if inner.len() >= 2 {
        return Ok(None);
    }
    let adjacent = |a: usize, b: usize| a != AUX && b != AUX && g.has_edge(a, b);
    // Orient an inner edge so its first end is the endpoint adjacent to v.
    let orient = |e: &ColouredEdge| {
        if adjacent(v, e.x) {
            (e.x, e.y)
        } else {
            (e.y, e.x)
        }
    };

    let candidate = match (own.len(), inner.first()) {
        (0, _) => return Err(Error::NotMinimal(v)),
        // a single edge xy between non-codewords: take its v-neighbour
        (1, Some(e)) => Some(orient(e).0),
        // a single edge v-x with x a true vertex: take x
        (1, None) if own[0].other(v) != AUX => Some(own[0].other(v)),
        // a single edge to the auxiliary vertex: v has no codeword neighbours
        (1, None) => g.neighbours(v).first().copied(),
        (2, Some(e)) => {
            let z = own
                .iter()
                .find(|f| f.touches(v))
                .map(|f| f.other(v))
                .expect("second colour-v edge is incident with v");
            if e.x == AUX || e.y == AUX {
                let x = if e.x == AUX { e.y } else { e.x };
                if z != AUX && adjacent(x, z) {
                    Some(z)
                } else {
                    Some(x)
                }
            } else {
                let (x, y) = orient(e);
                if z == AUX {
                    Some(x)
                } else {
                    match (adjacent(z, x), adjacent(z, y)) {
                        (true, true) => Some(y),
                        (false, false) => Some(x),
                        _ => Some(z),
                    }
                }
            }
        }
        (_, Some(e)) => {
            let (x, y) = orient(e);
            if adjacent(x, y) {
                Some(y)
            } else {
                Some(x)
            }
        }
        // two edges both at v would force a third between their ends
        (_, None) => None,
    };
    Ok(candidate
        .filter(|&u| u != AUX && !code.contains(u) && ld_bits(closed, code.swap(v, u).bits())))
}

/// How [`two_edge_subgraph`] picks two edges per colour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeSelection {
    /// The two lexicographically smallest edges.
    Lexicographic,
    /// Two edges chosen by a seeded shuffle.
    Seeded(u64),
}

/// Edge-induced subgraph of `G_S - S` with exactly two edges per chosen colour.
#[derive(Debug, Clone)]
pub struct TwoEdgeSubgraph {
    pub edges: Vec<ColouredEdge>,
    /// Plain graph on the edges' endpoints; vertex `i + 1` is colour-graph label `labels[i]`.
    pub graph: Graph,
    pub labels: Vec<usize>,
    pub bipartite: bool,
    pub cactus_components: bool,
    pub components: usize,
    /// `|V| >= 3/4 |E| + cc`, vacuously true when `|V| < 4`.
    pub bound_holds: bool,
}

impl TwoEdgeSubgraph {
    pub fn vertex_count(&self) -> usize {
        self.graph.order()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.size()
    }

    /// `|V| = 3/4 |E| + cc` exactly.
    pub fn bound_tight(&self) -> bool {
        4 * self.vertex_count() == 3 * self.edge_count() + 4 * self.components
    }

    pub fn all_hold(&self) -> bool {
        self.bipartite && self.cactus_components && self.bound_holds
    }
}

pub fn two_edge_subgraph(
    cg: &ColourGraph,
    code: VertexSet,
    colours: VertexSet,
    selection: EdgeSelection,
) -> Result<TwoEdgeSubgraph> {
    if let Some(u) = colours.difference(code).min_vertex() {
        return Err(Error::NotInCode(u));
    }
    let mut rng = match selection {
        EdgeSelection::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        EdgeSelection::Lexicographic => None,
    };
    let mut edges = Vec::with_capacity(2 * colours.len());
    for u in colours {
        let mut pool: Vec<ColouredEdge> = cg
            .inner_edges(code)
            .filter(|e| e.colour == u)
            .copied()
            .collect();
        if pool.len() < 2 {
            return Err(Error::InsufficientEdges {
                colour: u,
                found: pool.len(),
            });
        }
        if let Some(rng) = rng.as_mut() {
            pool.shuffle(rng);
        }
        edges.extend_from_slice(&pool[..2]);
    }
    edges.sort_unstable();

    let mut labels: Vec<usize> = edges.iter().flat_map(|e| [e.x, e.y]).collect();
    labels.sort_unstable();
    labels.dedup();
    let local = |l: usize| labels.binary_search(&l).expect("endpoint is listed") + 1;
    let graph = Graph::new(labels.len(), edges.iter().map(|e| (local(e.x), local(e.y))))?;
    let components = graph.connected_components().len();
    let vertices = graph.order();
    Ok(TwoEdgeSubgraph {
        bipartite: graph.is_bipartite(),
        cactus_components: graph.is_cactus(),
        bound_holds: vertices < 4 || 4 * vertices >= 3 * graph.size() + 4 * components,
        components,
        edges,
        graph,
        labels,
    })
}

/// Forced-vertex count against the bounds `k <= 2/3 (n - γ)`, `k <= 2n/5`
/// and `γ <= n - 3` (the last only claimed when `k >= 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsReport {
    pub order: usize,
    pub gamma: usize,
    pub forced: usize,
    pub two_thirds_holds: bool,
    pub two_fifths_holds: bool,
    pub gamma_room_holds: bool,
    pub two_thirds_tight: bool,
    pub two_fifths_tight: bool,
}

impl BoundsReport {
    /// Nothing is asserted without forced vertices.
    pub fn asserted(&self) -> bool {
        self.forced >= 1
    }

    pub fn holds(&self) -> bool {
        !self.asserted()
            || (self.two_thirds_holds && self.two_fifths_holds && self.gamma_room_holds)
    }

    /// `2(n - γ) - 3k`, the slack of the first bound scaled by 3.
    pub fn two_thirds_slack(&self) -> isize {
        2 * (self.order as isize - self.gamma as isize) - 3 * self.forced as isize
    }

    /// `2n - 5k`.
    pub fn two_fifths_slack(&self) -> isize {
        2 * self.order as isize - 5 * self.forced as isize
    }
}

pub fn check_forced_bounds(g: &Graph) -> Result<BoundsReport> {
    if g.order() < 2 {
        return Err(Error::InvalidParameter(
            "bounds need a nontrivial graph".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let gamma = gamma_ld(g)?;
    let k = classify_oracle(g)?.forced.len();
    let n = g.order();
    Ok(BoundsReport {
        order: n,
        gamma,
        forced: k,
        two_thirds_holds: 3 * k <= 2 * (n - gamma),
        two_fifths_holds: 5 * k <= 2 * n,
        gamma_room_holds: gamma + 3 <= n,
        two_thirds_tight: 3 * k == 2 * (n - gamma),
        two_fifths_tight: 5 * k == 2 * n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{broom, path, star};
    use crate::solver::enumerate_minimum_ld_codes;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn p10_colour_graph() {
        let g = path(10).unwrap();
        let s = set(&[2, 4, 7, 9]);
        let cg = build_colour_graph(&g, s).unwrap();
        let counts = colour_edge_counts(&cg, s);
        for u in s {
            assert_eq!(counts[&u].1, 2, "colour {u}");
        }
        let h = two_edge_subgraph(&cg, s, s, EdgeSelection::Lexicographic).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count(), h.components), (7, 8, 1));
        assert!(h.all_hold());
        assert!(h.bound_tight());
    }

    #[test]
    fn k2_colour_graph_is_a_triangle() {
        let g = path(2).unwrap();
        let cg = build_colour_graph(&g, set(&[1])).unwrap();
        assert_eq!(
            cg.edges(),
            &[
                ColouredEdge::new(0, 1, 1),
                ColouredEdge::new(0, 2, 1),
                ColouredEdge::new(1, 2, 1)
            ]
        );
    }

    #[test]
    fn isolated_codeword_links_to_aux() {
        // v_2 and v_4 in P_10 have no codeword neighbours under {2,4,7,9}
        let cg = build_colour_graph(&path(10).unwrap(), set(&[2, 4, 7, 9])).unwrap();
        assert!(cg.edges().contains(&ColouredEdge::new(AUX, 2, 2)));
        assert!(cg.edges().contains(&ColouredEdge::new(AUX, 9, 9)));
    }

    #[test]
    fn rejects_non_codes() {
        assert_eq!(
            build_colour_graph(&path(3).unwrap(), set(&[2])),
            Err(Error::NotLdCode)
        );
    }

    #[test]
    fn non_minimal_code_may_have_empty_colours() {
        let cg = build_colour_graph(&path(3).unwrap(), VertexSet::full(3)).unwrap();
        let counts = colour_edge_counts(&cg, VertexSet::full(3));
        assert!(counts.values().any(|c| c.0 == 0));
    }

    #[test]
    fn swap_witnesses() {
        assert_eq!(
            swap_witness(&path(2).unwrap(), set(&[1]), 1).unwrap(),
            Some(2)
        );
        let p10 = path(10).unwrap();
        assert_eq!(swap_witness(&p10, set(&[2, 4, 7, 9]), 2).unwrap(), None);
        // P_4 with S = {1, 3}: exhaustive search over swaps decides the answer
        let p4 = path(4).unwrap();
        let s = set(&[1, 3]);
        let exists = [2, 4]
            .iter()
            .any(|&u| crate::is_ld_code(&p4, s.swap(3, u)).unwrap());
        let w = swap_witness(&p4, s, 3).unwrap();
        assert_eq!(w.is_some(), exists);
        if let Some(u) = w {
            assert!(crate::is_ld_code(&p4, s.swap(3, u)).unwrap());
        }
        assert_eq!(
            swap_witness(&p10, VertexSet::full(10), 1),
            Err(Error::NotMinimal(1))
        );
    }

    #[test]
    fn star_leaves_are_swappable() {
        let g = star(3).unwrap();
        let s = set(&[2, 3, 4]);
        for v in s {
            let u = swap_witness(&g, s, v)
                .unwrap()
                .expect("leaf codewords swap with the centre");
            assert!(crate::is_ld_code(&g, s.swap(v, u)).unwrap());
        }
    }

    #[test]
    fn two_edge_subgraph_edge_cases() {
        let g = path(10).unwrap();
        let s = set(&[2, 4, 7, 9]);
        let cg = build_colour_graph(&g, s).unwrap();
        let empty =
            two_edge_subgraph(&cg, s, VertexSet::EMPTY, EdgeSelection::Lexicographic).unwrap();
        assert_eq!(empty.vertex_count(), 0);
        assert!(empty.all_hold());
        assert_eq!(
            two_edge_subgraph(&cg, s, set(&[3]), EdgeSelection::Lexicographic).unwrap_err(),
            Error::NotInCode(3)
        );
        let b = broom(14, 3).unwrap();
        let census = enumerate_minimum_ld_codes(&b).unwrap();
        let forced = set(&[2, 4, 7, 9, 12, 14]);
        for &code in &census.codes {
            let cg = build_colour_graph(&b, code).unwrap();
            for sel in [EdgeSelection::Lexicographic, EdgeSelection::Seeded(7)] {
                assert!(two_edge_subgraph(&cg, code, forced, sel)
                    .unwrap()
                    .all_hold());
            }
        }
    }

    #[test]
    fn bounds() {
        let r = check_forced_bounds(&path(10).unwrap()).unwrap();
        assert_eq!(r.forced, 4);
        assert!(r.holds() && r.two_fifths_tight);
        let r = check_forced_bounds(&star(3).unwrap()).unwrap();
        assert_eq!(r.forced, 0);
        assert!(!r.asserted() && r.holds());
        for (m, t) in [(1, 1), (1, 2)] {
            let r = check_forced_bounds(&broom(5 * m + 4, t).unwrap()).unwrap();
            assert!(r.holds() && r.two_thirds_tight, "m={m} t={t}");
        }
        assert_eq!(
            check_forced_bounds(&Graph::empty(3)),
            Err(Error::Disconnected)
        );
        assert!(check_forced_bounds(&path(1).unwrap()).is_err());
    }
}
