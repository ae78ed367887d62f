//! Named graph families, random connected graphs, the 3-SAT reduction graph
//! and a catalogue of small graphs up to isomorphism.

use alloc::format;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Graph, Result};

pub mod catalogue;
pub mod reduction;

pub use catalogue::{all_graphs, connected_graphs};
pub use reduction::{sat_reduction, verify_reduction, CnfInstance, Literal, ReductionGraph, Role};

fn param(msg: alloc::string::String) -> Error {
    Error::InvalidParameter(msg)
}

/// `P_n`: `v_i ~ v_{i+1}`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(param(format!("path needs n >= 1, got {n}")));
    }
    Graph::new(n, (1..n).map(|i| (i, i + 1)))
}

/// `C_n`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(param(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (1..n).map(|i| (i, i + 1)).chain([(1, n)]))
}

/// `K_{1,leaves}` with centre 1 and leaves `2..=leaves + 1`.
pub fn star(leaves: usize) -> Result<Graph> {
    if leaves == 0 {
        return Err(param("star needs at least one leaf".into()));
    }
    Graph::new(leaves + 1, (2..=leaves + 1).map(|v| (1, v)))
}

/// Broom `G_{s,t}`: path `1..=s` with `t` pendants `s+1..=s+t` on vertex `s`.
pub fn broom(s: usize, t: usize) -> Result<Graph> {
    if s == 0 || t == 0 {
        return Err(param(format!("broom needs s, t >= 1, got s={s} t={t}")));
    }
    Graph::new(
        s + t,
        (1..s)
            .map(|i| (i, i + 1))
            .chain((s + 1..=s + t).map(|u| (s, u))),
    )
}

/// The graph with an independent set `1..=h` and one further vertex per
/// nonempty `T ⊆ {1..h}`, adjacent exactly to `T`. The vertex for `T` has
/// label `h + mask(T)`, where bit `i - 1` of the mask stands for vertex `i`.
pub fn min_void_extremal(h: usize) -> Result<Graph> {
    if !(2..=6).contains(&h) {
        return Err(param(format!(
            "min_void_extremal needs 2 <= h <= 6, got {h}"
        )));
    }
    let n = h + (1 << h) - 1;
    let edges = (1usize..1 << h).flat_map(|mask| {
        (1..=h)
            .filter(move |i| mask & (1 << (i - 1)) != 0)
            .map(move |i| (i, h + mask))
    });
    Graph::new(n, edges)
}

/// Connected graph on `n` vertices from a seed: a uniformly shuffled random
/// recursive tree, plus every other pair independently with probability `p`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(2..=64).contains(&n) {
        return Err(param(format!(
            "random_connected needs 2 <= n <= 64, got {n}"
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(param(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut labels: Vec<usize> = (1..=n).collect();
    labels.shuffle(&mut rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (u, v) = (labels[i], labels[j]);
        edges.push((u.min(v), u.max(v)));
    }
    for u in 1..=n {
        for v in u + 1..=n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}
