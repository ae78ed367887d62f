//! Min-forced and min-void vertices.
//!
//! Two independent routes: intersecting/uniting the full census of minimum
//! codes, and a per-vertex test that only looks at `γ^LD(G - v)` and the
//! minimum codes of `G - v` lifted back into `G`.

use crate::code::ld_bits;
use crate::solver::{enumerate_minimum_ld_codes, gamma_ld, MinimumCodeCensus};
use crate::{Error, Graph, Result, VertexSet};

/// Partition of `V(G)` by membership in minimum codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexClassification {
    /// In every minimum code.
    pub forced: VertexSet,
    /// In no minimum code.
    pub void: VertexSet,
    /// Everything else.
    pub free: VertexSet,
}

pub fn classify_oracle(g: &Graph) -> Result<VertexClassification> {
    let census = enumerate_minimum_ld_codes(g)?;
    Ok(classify_census(g.order(), &census))
}

pub(crate) fn classify_census(n: usize, census: &MinimumCodeCensus) -> VertexClassification {
    let all = VertexSet::full(n);
    let forced = census.intersection().intersection(all);
    let void = all.difference(census.union());
    VertexClassification {
        forced,
        void,
        free: all.difference(forced).difference(void),
    }
}

/// `v` is min-forced iff it is isolated, or deleting it raises `γ^LD`, or
/// deleting it keeps `γ^LD` and no minimum code of `G - v` both dominates
/// `v` and separates it from every other non-codeword of `G`.
pub fn is_min_forced_characterization(g: &Graph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    if g.is_isolated(v) {
        return Ok(true);
    }
    characterize_with_gamma(g, v, gamma_ld(g)?)
}

fn characterize_with_gamma(g: &Graph, v: usize, gamma: usize) -> Result<bool> {
    if g.is_isolated(v) {
        return Ok(true);
    }
    let minus = g.delete_vertices([v])?;
    let census = enumerate_minimum_ld_codes(&minus.graph)?;
    if census.gamma != gamma {
        // A drop in γ^LD only happens for isolated vertices when v is forced.
        return Ok(census.gamma > gamma);
    }
    let closed = g.closed_sets();
    for &local in &census.codes {
        let code = minus.lift(local);
        let iset_v = closed[v - 1].intersection(code);
        if iset_v.is_empty() {
            continue;
        }
        let collides = g
            .vertices()
            .filter(|&w| w != v && !code.contains(w))
            .any(|w| closed[w - 1].intersection(code) == iset_v);
        if !collides {
            // `code` is a minimum LD-code of G avoiding v.
            return Ok(false);
        }
    }
    Ok(true)
}

/// The forced set computed vertex by vertex through the characterization.
pub fn classify_by_characterization(g: &Graph) -> Result<VertexSet> {
    let gamma = gamma_ld(g)?;
    let mut forced = VertexSet::EMPTY;
    for v in g.vertices() {
        if characterize_with_gamma(g, v, gamma)? {
            forced.insert(v);
        }
    }
    Ok(forced)
}

/// True iff no swap `S[v ← u]` with `u ∉ S` is locating-dominating.
pub fn is_non_swappable(g: &Graph, code: VertexSet, v: usize) -> Result<bool> {
    g.check_set(code)?;
    g.check_vertex(v)?;
    if !code.contains(v) {
        return Err(Error::NotInCode(v));
    }
    let closed = g.closed_sets();
    if !ld_bits(closed, code.bits()) {
        return Err(Error::NotLdCode);
    }
    Ok(g.vertices()
        .filter(|&u| !code.contains(u))
        .all(|u| !ld_bits(closed, code.swap(v, u).bits())))
}
