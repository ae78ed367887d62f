//! Structural checks on a colour graph.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{ColourGraph, ColouredEdge, AUX};
use crate::{Graph, VertexSet};

/// Longest trail examined for the walk property.
pub const DEFAULT_WALK_LENGTH: usize = 8;
/// Number of trail prefixes examined before the walk check stops.
pub const DEFAULT_WALK_BUDGET: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    /// No pair of vertices carries two edges.
    SingleColour,
    /// no edge joins two codewords.
    NoCodewordPairs,
    /// an edge at codeword `u` has colour `u`.
    CodewordColour,
    /// inner edges sharing an endpoint differ in colour.
    DistinctAtEndpoint,
    /// exactly one end of an inner `u`-edge is a neighbour of `u`.
    OneEndAdjacent,
    /// two sides of a `u`-triangle through `u` force the third.
    TriangleClosure,
    /// at most two edges at each codeword.
    CodewordDegree,
    /// `G_S - S` is bipartite and every cycle has even colour counts.
    EvenCycles,
    /// trails with even colour counts are closed.
    EvenTrailsClosed,
}

impl Property {
    pub const ALL: [Property; 9] = [
        Property::SingleColour,
        Property::NoCodewordPairs,
        Property::CodewordColour,
        Property::DistinctAtEndpoint,
        Property::OneEndAdjacent,
        Property::TriangleClosure,
        Property::CodewordDegree,
        Property::EvenCycles,
        Property::EvenTrailsClosed,
    ];

    /// Short name used in reports.
    pub fn name(self) -> &'static str {
        match self {
            Property::SingleColour => "single-colour",
            Property::NoCodewordPairs => "no-codeword-pairs",
            Property::CodewordColour => "codeword-colour",
            Property::DistinctAtEndpoint => "distinct-at-endpoint",
            Property::OneEndAdjacent => "one-end-adjacent",
            Property::TriangleClosure => "triangle-closure",
            Property::CodewordDegree => "codeword-degree",
            Property::EvenCycles => "even-cycles",
            Property::EvenTrailsClosed => "even-trails-closed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCheck {
    pub property: Property,
    pub passed: bool,
    /// First violation found, if any.
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub checks: Vec<PropertyCheck>,
    /// Trail prefixes examined for the walk property.
    pub walks_checked: usize,
    /// Whether the walk budget ran out before every short trail was seen.
    pub walk_budget_exhausted: bool,
}

impl StructureReport {
    pub fn passed(&self, property: Property) -> bool {
        self.checks
            .iter()
            .any(|c| c.property == property && c.passed)
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyCheck> + '_ {
        self.checks.iter().filter(|c| !c.passed)
    }
}

pub fn verify_structure(cg: &ColourGraph, g: &Graph, code: VertexSet) -> StructureReport {
    verify_structure_with(cg, g, code, DEFAULT_WALK_LENGTH, DEFAULT_WALK_BUDGET)
}

/// [`verify_structure`] with an explicit trail length and budget for the trail check.
pub fn verify_structure_with(
    cg: &ColourGraph,
    g: &Graph,
    code: VertexSet,
    walk_length: usize,
    walk_budget: usize,
) -> StructureReport {
    let edges = cg.edges();
    let inner: Vec<ColouredEdge> = cg.inner_edges(code).copied().collect();
    let adjacent = |a: usize, b: usize| {
        a != AUX && b != AUX && a <= g.order() && b <= g.order() && g.has_edge(a, b)
    };
    let mut checks = Vec::with_capacity(Property::ALL.len());
    let mut record = |property, counterexample: Option<String>| {
        checks.push(PropertyCheck {
            property,
            passed: counterexample.is_none(),
            counterexample,
        });
    };

    let mut pairs = BTreeSet::new();
    record(
        Property::SingleColour,
        edges
            .iter()
            .find(|e| !pairs.insert((e.x, e.y)))
            .map(|e| format!("pair {} {} carries more than one edge", e.x, e.y)),
    );

    record(
        Property::NoCodewordPairs,
        edges
            .iter()
            .find(|e| code.contains(e.x) && code.contains(e.y))
            .map(|e| format!("edge {} {} joins codewords", e.x, e.y)),
    );

    record(
        Property::CodewordColour,
        edges
            .iter()
            .find(|e| {
                (code.contains(e.x) && e.colour != e.x) || (code.contains(e.y) && e.colour != e.y)
            })
            .map(|e| format!("edge {} {} at a codeword has colour {}", e.x, e.y, e.colour)),
    );

    let mut at_vertex: BTreeMap<(usize, usize), &ColouredEdge> = BTreeMap::new();
    let mut clash = None;
    for e in &inner {
        for end in [e.x, e.y] {
            if let Some(prev) = at_vertex.insert((end, e.colour), e) {
                clash.get_or_insert(format!(
                    "edges {} {} and {} {} share vertex {} and colour {}",
                    prev.x, prev.y, e.x, e.y, end, e.colour
                ));
            }
        }
    }
    record(Property::DistinctAtEndpoint, clash);

    record(
        Property::OneEndAdjacent,
        inner
            .iter()
            .find(|e| adjacent(e.colour, e.x) == adjacent(e.colour, e.y))
            .map(|e| format!("inner edge {} {} of colour {}", e.x, e.y, e.colour)),
    );

    let has = |a: usize, b: usize, u: usize| {
        let e = ColouredEdge::new(a, b, u);
        edges.binary_search(&e).is_ok()
    };
    let outside: Vec<usize> = (0..=cg.order()).filter(|&x| !code.contains(x)).collect();
    let mut triangle = None;
    'colours: for u in code {
        for (i, &x) in outside.iter().enumerate() {
            for &y in &outside[i + 1..] {
                let present = [has(u, x, u), has(u, y, u), has(x, y, u)];
                if present.iter().filter(|&&p| p).count() == 2 {
                    triangle = Some(format!("colour {u} on {u}, {x}, {y} has exactly two sides"));
                    break 'colours;
                }
            }
        }
    }
    record(Property::TriangleClosure, triangle);

    record(
        Property::CodewordDegree,
        code.iter()
            .find(|&u| cg.degree(u) > 2)
            .map(|u| format!("codeword {u} has {} edges", cg.degree(u))),
    );

    let index = ColourIndex::new(&inner);
    record(
        Property::EvenCycles,
        even_cycles(cg.order(), &inner, &index),
    );

    let mut trails = TrailSearch {
        adjacency: incidence(cg.order(), &inner),
        inner: &inner,
        index: &index,
        used: vec![false; inner.len()],
        max_len: walk_length,
        budget: walk_budget,
        checked: 0,
        violation: None,
    };
    for start in 0..trails.adjacency.len() {
        if trails.violation.is_some() || trails.checked >= trails.budget {
            break;
        }
        trails.extend(start, start, 0, 0);
    }
    let (walks_checked, exhausted) = (trails.checked, trails.checked >= walk_budget);
    record(Property::EvenTrailsClosed, trails.violation);

    StructureReport {
        checks,
        walks_checked,
        walk_budget_exhausted: exhausted,
    }
}

/// Dense bit positions for the colours in use.
struct ColourIndex(Vec<usize>);

impl ColourIndex {
    fn new(edges: &[ColouredEdge]) -> Self {
        let mut colours: Vec<usize> = edges.iter().map(|e| e.colour).collect();
        colours.sort_unstable();
        colours.dedup();
        ColourIndex(colours)
    }

    /// Parity bit of a colour. More than 128 colours cannot come from a real code.
    fn bit(&self, colour: usize) -> u128 {
        let i = self.0.binary_search(&colour).unwrap_or(0);
        1u128 << (i % 128)
    }
}

fn incidence(order: usize, edges: &[ColouredEdge]) -> Vec<Vec<(usize, usize)>> {
    let top = edges.iter().map(|e| e.y).max().unwrap_or(0).max(order);
    let mut adj = vec![Vec::new(); top + 1];
    for (id, e) in edges.iter().enumerate() {
        adj[e.x].push((e.y, id));
        adj[e.y].push((e.x, id));
    }
    adj
}

/// Bipartiteness plus colour parity on a fundamental cycle basis. Parity is
/// additive under symmetric difference, so the basis covers every cycle.
fn even_cycles(order: usize, edges: &[ColouredEdge], index: &ColourIndex) -> Option<String> {
    let adj = incidence(order, edges);
    let mut depth = vec![usize::MAX; adj.len()];
    let mut parity = vec![0u128; adj.len()];
    let mut tree = vec![false; edges.len()];
    for root in 0..adj.len() {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &(y, id) in &adj[x] {
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    parity[y] = parity[x] ^ index.bit(edges[id].colour);
                    tree[id] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    for (id, e) in edges.iter().enumerate() {
        if tree[id] {
            continue;
        }
        if depth[e.x] % 2 == depth[e.y] % 2 {
            return Some(format!("edge {} {} closes an odd cycle", e.x, e.y));
        }
        if parity[e.x] ^ parity[e.y] ^ index.bit(e.colour) != 0 {
            return Some(format!(
                "edge {} {} closes a cycle with an odd colour count",
                e.x, e.y
            ));
        }
    }
    None
}

struct TrailSearch<'a> {
    adjacency: Vec<Vec<(usize, usize)>>,
    inner: &'a [ColouredEdge],
    index: &'a ColourIndex,
    used: Vec<bool>,
    max_len: usize,
    budget: usize,
    checked: usize,
    violation: Option<String>,
}

impl TrailSearch<'_> {
    fn extend(&mut self, start: usize, at: usize, len: usize, parity: u128) {
        if len == self.max_len {
            return;
        }
        for i in 0..self.adjacency[at].len() {
            let (next, id) = self.adjacency[at][i];
            if self.used[id] || self.violation.is_some() || self.checked >= self.budget {
                continue;
            }
            let p = parity ^ self.index.bit(self.inner[id].colour);
            self.checked += 1;
            if p == 0 && next != start {
                self.violation = Some(format!(
                    "trail from {start} to {next} of length {} has even colour counts",
                    len + 1
                ));
                return;
            }
            self.used[id] = true;
            self.extend(start, next, len + 1, p);
            self.used[id] = false;
        }
    }
}
