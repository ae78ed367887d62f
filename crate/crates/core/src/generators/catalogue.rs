//! Every graph of a given small order, one per isomorphism class.
//!
//! Graphs of order `n` are grown from those of order `n - 1` by adding a
//! vertex with every possible neighbourhood, then deduplicated by a canonical
//! certificate. The certificate comes from individualisation-refinement: the
//! vertex partition is refined by neighbour counts until stable, a vertex of
//! the first non-singleton cell is individualised, and the smallest adjacency
//! encoding over all resulting discrete orderings is kept.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Graph, Result};

/// Largest order the catalogue will build.
pub const MAX_ORDER: usize = 9;

/// All graphs of order `n` up to isomorphism, sorted by certificate.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(certificates(n)?.into_iter().map(|c| decode(n, c)).collect())
}

/// All connected graphs of order `n` up to isomorphism.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}

fn certificates(n: usize) -> Result<Vec<u64>> {
    if !(1..=MAX_ORDER).contains(&n) {
        return Err(Error::InvalidParameter(alloc::format!(
            "catalogue order must be in 1..={MAX_ORDER}, got {n}"
        )));
    }
    let mut level = vec![0u64];
    for order in 2..=n {
        let mut next = BTreeSet::new();
        for &cert in &level {
            let mut adj = unpack(order - 1, cert);
            adj.push(0);
            for mask in 0u32..1 << (order - 1) {
                adj[order - 1] = mask;
                for (i, row) in adj.iter_mut().enumerate().take(order - 1) {
                    *row = (*row & !(1 << (order - 1))) | (((mask >> i) & 1) << (order - 1));
                }
                next.insert(canonical(&adj));
            }
        }
        level = next.into_iter().collect();
    }
    Ok(level)
}

/// Bit index of the pair `i < j` in the upper-triangle encoding.
#[inline]
fn pair_bit(n: usize, i: usize, j: usize) -> usize {
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn encode(adj: &[u32], perm: &[usize]) -> u64 {
    let n = adj.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            if adj[perm[i]] & (1 << perm[j]) != 0 {
                code |= 1u64 << pair_bit(n, i, j);
            }
        }
    }
    code
}

fn unpack(n: usize, cert: u64) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    for i in 0..n {
        for j in i + 1..n {
            if cert & (1u64 << pair_bit(n, i, j)) != 0 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

fn decode(n: usize, cert: u64) -> Graph {
    let adj = unpack(n, cert);
    let edges = (0..n).flat_map(|i| {
        let row = adj[i];
        (i + 1..n)
            .filter(move |&j| row & (1 << j) != 0)
            .map(move |j| (i + 1, j + 1))
    });
    Graph::new(n, edges).expect("certificate encodes a simple graph")
}

/// Canonical certificate: equal for two adjacency bitmask lists iff the graphs are isomorphic.
pub(crate) fn canonical(adj: &[u32]) -> u64 {
    let n = adj.len();
    let start = refine(adj, vec![(0..n).collect()]);
    let mut best = u64::MAX;
    search(adj, start, &mut best);
    best
}

fn search(adj: &[u32], cells: Vec<Vec<usize>>, best: &mut u64) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let perm: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        *best = (*best).min(encode(adj, &perm));
        return;
    };
    for &v in &cells[target] {
        let mut split = cells.clone();
        let rest: Vec<usize> = split[target].iter().copied().filter(|&w| w != v).collect();
        split[target] = vec![v];
        split.insert(target + 1, rest);
        search(adj, refine(adj, split), best);
    }
}

/// Split cells by neighbour counts into every cell until nothing changes.
/// Subcells are ordered by their count signature, so the result only depends
/// on the graph structure and the input partition, never on vertex names.
fn refine(adj: &[u32], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u32> = cells
            .iter()
            .map(|c| c.iter().fold(0u32, |m, &v| m | 1 << v))
            .collect();
        let mut next = Vec::with_capacity(cells.len());
        let mut changed = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (adj[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut group = vec![keyed[0].1];
            for w in keyed.windows(2) {
                if w[0].0 != w[1].0 {
                    next.push(core::mem::take(&mut group));
                    changed = true;
                }
                group.push(w[1].1);
            }
            next.push(group);
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}
