//! I-sets and the locating-dominating predicates.

use alloc::vec::Vec;

use crate::{Error, Graph, Result, VertexSet};

/// `I(S; v) = S ∩ N[v]`, the codewords that see `v`.
pub fn i_set(g: &Graph, code: VertexSet, v: usize) -> Result<VertexSet> {
    g.check_set(code)?;
    Ok(code.intersection(g.closed_neighbourhood(v)?))
}

/// True iff every non-codeword has a nonempty I-set and these I-sets are
/// pairwise distinct. The empty code is rejected.
pub fn is_ld_code(g: &Graph, code: VertexSet) -> Result<bool> {
    g.check_set(code)?;
    if code.is_empty() {
        return Err(Error::EmptyCode);
    }
    Ok(ld_bits(g.closed_sets(), code.bits()))
}

/// Locating-domination check over raw closed-neighbourhood masks.
pub(crate) fn ld_bits(closed: &[VertexSet], code: u64) -> bool {
    let mut seen: Vec<u64> = Vec::with_capacity(closed.len());
    for (i, nb) in closed.iter().enumerate() {
        if code & (1u64 << i) != 0 {
            continue;
        }
        let iset = nb.bits() & code;
        if iset == 0 || seen.contains(&iset) {
            return false;
        }
        seen.push(iset);
    }
    true
}

/// LD*-property on the path `v_1 … v_n`: every non-codeword other than `v_n`
/// is dominated and separated from the other non-codewords in `v_1 … v_{n-1}`.
/// The last vertex may still be a codeword. The empty code is allowed.
pub fn is_ld_star_code(n: usize, code: VertexSet) -> Result<bool> {
    if n == 0 || n > 64 {
        return Err(Error::InvalidParameter(alloc::format!(
            "path length {n} outside 1..=64"
        )));
    }
    if let Some(v) = code.max_vertex().filter(|&v| v > n) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: n,
        });
    }
    Ok(ld_star_bits(n, code.bits()))
}

pub(crate) fn ld_star_bits(n: usize, code: u64) -> bool {
    let mut seen: Vec<u64> = Vec::with_capacity(n);
    for i in 0..n - 1 {
        if code & (1u64 << i) != 0 {
            continue;
        }
        let nb = (0b111u128 << i >> 1) as u64;
        let iset = nb & code;
        if iset == 0 || seen.contains(&iset) {
            return false;
        }
        seen.push(iset);
    }
    true
}
