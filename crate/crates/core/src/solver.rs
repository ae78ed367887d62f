//! Exact location-domination number and enumeration of all minimum codes.
//!
//! The graph is split into connected components. Each component is searched
//! independently by a depth-first sweep that decides vertices in BFS order;
//! a vertex is checked as soon as its whole closed neighbourhood has been
//! decided, which prunes undominated or colliding non-codewords early. The
//! sweep starts at the larger of the counting bound and the twin bound and
//! increases the target cardinality until a code exists.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::code::ld_star_bits;
use crate::subsets::k_subsets;
use crate::{Error, Graph, Induced, Result, VertexSet, SOLVER_LIMIT};

/// Every minimum locating-dominating code of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimumCodeCensus {
    pub gamma: usize,
    /// Duplicate-free, in lexicographic order of the sorted label lists.
    pub codes: Vec<VertexSet>,
}

impl MinimumCodeCensus {
    pub fn count(&self) -> usize {
        self.codes.len()
    }

    /// Vertices in every minimum code.
    pub fn intersection(&self) -> VertexSet {
        self.codes
            .iter()
            .fold(VertexSet::from_bits(u64::MAX), |acc, &c| {
                acc.intersection(c)
            })
    }

    /// Vertices in at least one minimum code.
    pub fn union(&self) -> VertexSet {
        self.codes
            .iter()
            .fold(VertexSet::EMPTY, |acc, &c| acc.union(c))
    }
}

fn check_solver_input(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.order() > SOLVER_LIMIT {
        return Err(Error::TooLarge {
            order: g.order(),
            limit: SOLVER_LIMIT,
        });
    }
    Ok(())
}

/// Smallest `k` with `n <= 2^k - 1 + k`: a code of size `k` can separate at
/// most `2^k - 1` non-codewords.
pub fn lower_bound_information(n: usize) -> usize {
    (0usize..)
        .find(|&k| k >= 64 || (1u128 << k) - 1 + k as u128 >= n as u128)
        .unwrap_or(64)
}

/// In a class of `t` mutually twin vertices at least `t - 1` are codewords.
pub fn twin_lower_bound(g: &Graph) -> usize {
    g.twin_classes().iter().map(|c| c.len() - 1).sum()
}

/// `γ^LD(G)`.
pub fn gamma_ld(g: &Graph) -> Result<usize> {
    check_solver_input(g)?;
    let mut total = 0;
    for comp in components(g)? {
        let search = ComponentSearch::new(&comp.graph);
        total += (search.start_bound()..=comp.graph.order())
            .find(|&k| search.run(k, true).is_some())
            .expect("the full vertex set is always a code");
    }
    Ok(total)
}

/// `γ^LD(G)` and every code attaining it.
pub fn enumerate_minimum_ld_codes(g: &Graph) -> Result<MinimumCodeCensus> {
    check_solver_input(g)?;
    let mut gamma = 0;
    let mut codes = vec![VertexSet::EMPTY];
    for comp in components(g)? {
        let search = ComponentSearch::new(&comp.graph);
        let (k, local) = (search.start_bound()..=comp.graph.order())
            .find_map(|k| {
                let found = search.run(k, false)?;
                Some((k, found))
            })
            .expect("the full vertex set is always a code");
        gamma += k;
        let lifted: Vec<VertexSet> = local.into_iter().map(|c| comp.lift(c)).collect();
        codes = codes
            .iter()
            .flat_map(|&a| lifted.iter().map(move |&b| a.union(b)))
            .collect();
    }
    codes.sort_unstable();
    codes.dedup();
    Ok(MinimumCodeCensus { gamma, codes })
}

/// `γ^LD*(P_n) = ⌈2(n-1)/5⌉`.
pub fn gamma_ld_star(n: usize) -> usize {
    (2 * n.saturating_sub(1)).div_ceil(5)
}

/// Smallest LD*-code in `P_n` by exhaustive search (the empty set included).
pub fn gamma_ld_star_exact(n: usize) -> Result<usize> {
    if !(1..=30).contains(&n) {
        return Err(Error::InvalidParameter(alloc::format!(
            "LD* search needs 1 <= n <= 30, got {n}"
        )));
    }
    Ok((0..=n)
        .find(|&k| k_subsets(n, k).any(|s| ld_star_bits(n, s.bits())))
        .expect("the full vertex set is an LD*-code"))
}

fn components(g: &Graph) -> Result<Vec<Induced>> {
    g.connected_components()
        .into_iter()
        .map(|c| g.induced(c))
        .collect()
}

/// Search state for one connected component (at most 64 vertices).
struct ComponentSearch {
    n: usize,
    /// Closed neighbourhoods indexed by search position, as position bitmasks.
    closed: Vec<u64>,
    /// `closing[p]`: positions whose closed neighbourhood is fully decided once position `p` is.
    closing: Vec<Vec<usize>>,
    /// Search position to component label.
    label: Vec<usize>,
    start: usize,
}

impl ComponentSearch {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let order = bfs_order(g);
        let mut pos = vec![0usize; n + 1];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p;
        }
        let closed: Vec<u64> = order
            .iter()
            .map(|&v| {
                g.neighbours(v)
                    .iter()
                    .fold(1u64 << pos[v], |acc, &w| acc | 1u64 << pos[w])
            })
            .collect();
        let mut closing = vec![Vec::new(); n];
        for (p, nb) in closed.iter().enumerate() {
            let last = 63 - nb.leading_zeros() as usize;
            closing[last].push(p);
        }
        let start = lower_bound_information(n).max(twin_lower_bound(g)).max(1);
        ComponentSearch {
            n,
            closed,
            closing,
            label: order,
            start,
        }
    }

    fn start_bound(&self) -> usize {
        self.start
    }

    /// All codes of size exactly `k` (or just the first one when `first_only`),
    /// as component-label sets. `None` when there is none.
    fn run(&self, k: usize, first_only: bool) -> Option<Vec<VertexSet>> {
        let mut state = SearchState {
            target: k,
            first_only,
            found: Vec::new(),
            isets: Vec::with_capacity(self.n),
        };
        self.dfs(&mut state, 0, 0, 0);
        if state.found.is_empty() {
            return None;
        }
        Some(
            state
                .found
                .into_iter()
                .map(|bits| {
                    (0..self.n)
                        .filter(|&p| bits & (1u64 << p) != 0)
                        .map(|p| self.label[p])
                        .collect()
                })
                .collect(),
        )
    }

    /// Returns true when the search should stop.
    fn dfs(&self, st: &mut SearchState, pos: usize, code: u64, count: usize) -> bool {
        if pos == self.n {
            st.found.push(code);
            return st.first_only;
        }
        let remaining = self.n - pos;
        for include in [true, false] {
            let count = count + include as usize;
            if count > st.target || count + remaining - 1 < st.target {
                continue;
            }
            let code = if include { code | 1u64 << pos } else { code };
            let mark = st.isets.len();
            let ok = self.closing[pos].iter().all(|&x| {
                if code & (1u64 << x) != 0 {
                    return true;
                }
                let iset = self.closed[x] & code;
                if iset == 0 || st.isets.contains(&iset) {
                    return false;
                }
                st.isets.push(iset);
                true
            });
            if ok && self.dfs(st, pos + 1, code, count) {
                return true;
            }
            st.isets.truncate(mark);
        }
        false
    }
}

struct SearchState {
    target: usize,
    first_only: bool,
    found: Vec<u64>,
    isets: Vec<u64>,
}

/// BFS from a minimum-degree vertex; keeps neighbourhoods contiguous on
/// path-like graphs so they close early.
fn bfs_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut seen = vec![false; n + 1];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    let mut starts: Vec<usize> = g.vertices().collect();
    starts.sort_by_key(|&v| g.degree(v));
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in g.neighbours(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}
