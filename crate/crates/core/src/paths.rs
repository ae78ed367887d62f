//! Counting minimum locating-dominating codes of paths.
//!
//! `A(n, k)` is the number of LD*-codes of size `k` in `P_n`: codes that
//! dominate and separate every vertex except possibly the last one. The
//! empty set counts here (so `A(1, 0) = 1`), although it is never an
//! LD-code. `C(n)`, the number of minimum LD-codes of `P_n`, is a sum of
//! three `A` values, and both have closed forms on residues mod 5.
//!
//! Three independent routes to `C(n)` are provided: the recurrence
//! ([`c_of_n`]), the polynomials ([`c_closed_form`]) and the exact solver
//! ([`brute_count`]).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::code::ld_star_bits;
use crate::generators::path;
use crate::solver::enumerate_minimum_ld_codes;
use crate::subsets::k_subsets;
use crate::{Error, Result};

/// Largest path the solver-based count accepts.
pub const BRUTE_COUNT_LIMIT: usize = 25;
/// Largest path the LD*-subset count accepts.
pub const BRUTE_STAR_LIMIT: usize = 22;

/// One term `weight · A(n - n_back, k - k_back)` of the recurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecurrenceTerm {
    pub n_back: usize,
    pub k_back: usize,
    pub weight: u64,
}

impl RecurrenceTerm {
    pub const fn new(n_back: usize, k_back: usize) -> Self {
        RecurrenceTerm {
            n_back,
            k_back,
            weight: 1,
        }
    }
}

/// `A(n,k) = A(n-1,k-1) + A(n-2,k-1) + A(n-4,k-2) + A(n-5,k-2)` for `n >= 6`.
pub const STANDARD_TERMS: [RecurrenceTerm; 4] = [
    RecurrenceTerm::new(1, 1),
    RecurrenceTerm::new(2, 1),
    RecurrenceTerm::new(4, 2),
    RecurrenceTerm::new(5, 2),
];

/// Memoised table of `A(n, k)`.
///
/// Cells are computed on demand: a query near the lower boundary only
/// touches cells near the boundary, whose values stay small, while full rows
/// would overflow `u64` once `n` passes about 66.
///
/// The recurrence terms can be replaced, which is how the test suite checks
/// that a corrupted recurrence is actually detected.
#[derive(Debug, Clone)]
pub struct CountTable {
    terms: Vec<RecurrenceTerm>,
    memo: BTreeMap<(usize, usize), u64>,
}

impl Default for CountTable {
    fn default() -> Self {
        Self::new()
    }
}

impl CountTable {
    pub fn new() -> Self {
        Self::with_terms(STANDARD_TERMS.to_vec())
    }

    pub fn with_terms(terms: Vec<RecurrenceTerm>) -> Self {
        CountTable {
            terms,
            memo: BTreeMap::new(),
        }
    }

    pub fn terms(&self) -> &[RecurrenceTerm] {
        &self.terms
    }

    /// `A(n, k)`; zero for `n = 0` or `k > n`.
    pub fn a_value(&mut self, n: usize, k: usize) -> u64 {
        // explicit stack, so long paths cannot exhaust the call stack
        let mut stack = vec![(n, k)];
        while let Some(&(n, k)) = stack.last() {
            if self.memo.contains_key(&(n, k)) {
                stack.pop();
                continue;
            }
            match self.direct(n, k) {
                Some(v) => {
                    self.memo.insert((n, k), v);
                    stack.pop();
                }
                None => {
                    let missing: Vec<(usize, usize)> = self
                        .predecessors(n, k)
                        .filter(|&(_, cell)| {
                            !self.memo.contains_key(&cell) && self.direct(cell.0, cell.1).is_none()
                        })
                        .map(|(_, cell)| cell)
                        .collect();
                    if missing.is_empty() {
                        let v = self.predecessors(n, k).fold(0u64, |acc, (w, (pn, pk))| {
                            let a = match self.direct(pn, pk) {
                                Some(v) => v,
                                None => self.memo[&(pn, pk)],
                            };
                            acc.checked_add(w.checked_mul(a).expect("A(n,k) overflows u64"))
                                .expect("A(n,k) overflows u64")
                        });
                        self.memo.insert((n, k), v);
                        stack.pop();
                    } else {
                        stack.extend(missing);
                    }
                }
            }
        }
        self.direct(n, k).unwrap_or_else(|| self.memo[&(n, k)])
    }

    /// Cells of the recurrence for `(n, k)` with their weights; terms
    /// reaching below `n = 1` or `k = 0` contribute nothing.
    fn predecessors(&self, n: usize, k: usize) -> impl Iterator<Item = (u64, (usize, usize))> + '_ {
        self.terms
            .iter()
            .filter(move |t| t.n_back < n && t.k_back <= k)
            .map(move |t| (t.weight, (n - t.n_back, k - t.k_back)))
    }

    /// Values that need no recurrence: out of range, below the boundary,
    /// the named base cases and the short paths.
    fn direct(&self, n: usize, k: usize) -> Option<u64> {
        if n == 0 || k > n || k < star_lower_bound(n) {
            return Some(0);
        }
        match (n, k) {
            (1, 0) => Some(1),
            (2, 1) | (3, 1) => Some(2),
            (4, 2) => Some(5),
            (5, 2) => Some(4),
            _ if n <= 5 => Some(count_ld_star(n, k)),
            _ => None,
        }
    }

    /// `C(n)`: the constants 1, 2, 3, 4 for `n <= 4`, otherwise
    /// `A(n-1, c-1) + A(n-3, c-2) + A(n-4, c-2)` with `c = ⌈2n/5⌉`.
    pub fn c_of_n(&mut self, n: usize) -> u64 {
        match n {
            0 => 0,
            1..=4 => n as u64,
            _ => {
                let c = (2 * n).div_ceil(5);
                self.a_value(n - 1, c - 1) + self.a_value(n - 3, c - 2) + self.a_value(n - 4, c - 2)
            }
        }
    }
}

/// `⌈2(n-1)/5⌉`: no LD*-code of `P_n` is smaller.
pub fn star_lower_bound(n: usize) -> usize {
    (2 * n.saturating_sub(1)).div_ceil(5)
}

pub fn a_value(n: usize, k: usize) -> u64 {
    CountTable::new().a_value(n, k)
}

pub fn c_of_n(n: usize) -> u64 {
    CountTable::new().c_of_n(n)
}

/// `Σ coeffs[i] · m^i / denominator`, asserting exact division.
fn poly(m: u64, coeffs: &[u64], denominator: u64) -> u64 {
    let value = coeffs.iter().rev().fold(0u64, |acc, &c| {
        acc.checked_mul(m)
            .and_then(|a| a.checked_add(c))
            .expect("polynomial overflows u64")
    });
    assert_eq!(
        value % denominator,
        0,
        "polynomial value {value} not divisible by {denominator}"
    );
    value / denominator
}

/// Closed form of `A(n, k)` on the five shapes
/// `(5m+1, 2m)`, `(5m+3, 2m+1)`, `(5m, 2m)`, `(5m+2, 2m+1)`, `(5m+4, 2m+2)`
/// with `m >= 1`; `None` elsewhere.
pub fn a_closed_form(n: usize, k: usize) -> Option<u64> {
    let (m, r) = (n / 5, n % 5);
    if m == 0 {
        return None;
    }
    let expected_k = match r {
        0 | 1 => 2 * m,
        2 | 3 => 2 * m + 1,
        _ => 2 * m + 2,
    };
    if k != expected_k {
        return None;
    }
    let m = m as u64;
    Some(match r {
        1 => 1,
        3 => m + 2,
        0 => poly(m, &[2, 5, 1], 2),
        2 => poly(m, &[12, 29, 12, 1], 6),
        _ => poly(m, &[120, 230, 131, 22, 1], 24),
    })
}

/// Closed form of `C(n)` for `n >= 5`.
pub fn c_closed_form(n: usize) -> Result<u64> {
    if n < 5 {
        return Err(Error::InvalidParameter(format!(
            "closed form needs n >= 5, got {n}"
        )));
    }
    let m = (n / 5) as u64;
    Ok(match n % 5 {
        0 => 1,
        1 => poly(m, &[6, 29, 12, 1], 6),
        2 => m + 2,
        3 => poly(m, &[72, 206, 131, 22, 1], 24),
        _ => poly(m, &[8, 7, 1], 2),
    })
}

/// `C(n)` from the exact solver on `P_n`.
pub fn brute_count(n: usize) -> Result<u64> {
    if !(1..=BRUTE_COUNT_LIMIT).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "brute count needs 1 <= n <= {BRUTE_COUNT_LIMIT}, got {n}"
        )));
    }
    Ok(enumerate_minimum_ld_codes(&path(n)?)?.count() as u64)
}

/// `A(n, k)` by testing every `k`-subset of `V(P_n)`.
pub fn brute_count_ld_star(n: usize, k: usize) -> Result<u64> {
    if !(1..=BRUTE_STAR_LIMIT).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "LD* brute count needs 1 <= n <= {BRUTE_STAR_LIMIT}, got {n}"
        )));
    }
    Ok(count_ld_star(n, k))
}

fn count_ld_star(n: usize, k: usize) -> u64 {
    k_subsets(n, k)
        .filter(|s| ld_star_bits(n, s.bits()))
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_values() {
        assert_eq!(a_value(1, 0), 1);
        assert_eq!(a_value(2, 1), 2);
        assert_eq!(a_value(3, 1), 2);
        assert_eq!(a_value(4, 2), 5);
        assert_eq!(a_value(5, 2), 4);
        assert_eq!(a_value(6, 2), 1);
        assert_eq!(a_value(10, 4), 8);
        assert_eq!(a_value(2, 0), 0);
    }

    #[test]
    fn c_values() {
        assert_eq!(c_of_n(10), 1);
        assert_eq!(c_of_n(7), 3);
        assert_eq!(c_of_n(9), 8);
        assert_eq!(c_of_n(8), 18);
        assert_eq!(c_closed_form(8).unwrap(), 18);
        assert_eq!(c_closed_form(11).unwrap(), 20);
        assert_eq!(c_closed_form(12).unwrap(), 4);
        assert_eq!(c_closed_form(15).unwrap(), 1);
        assert!(c_closed_form(4).is_err());
    }

    #[test]
    fn closed_a_forms() {
        assert_eq!(a_closed_form(10, 4), Some(8));
        assert_eq!(a_closed_form(8, 3), Some(3));
        assert_eq!(a_closed_form(6, 2), Some(1));
        assert_eq!(a_closed_form(6, 3), None);
        assert_eq!(a_closed_form(4, 2), None);
    }

    #[test]
    fn brute_oracles() {
        assert_eq!(brute_count_ld_star(1, 0).unwrap(), 1);
        assert_eq!(brute_count_ld_star(2, 1).unwrap(), 2);
        assert_eq!(brute_count_ld_star(9, 4).unwrap(), a_value(9, 4));
        assert_eq!(brute_count(10).unwrap(), 1);
        assert_eq!(brute_count(2).unwrap(), 2);
        assert!(brute_count(26).is_err());
        assert!(brute_count_ld_star(23, 3).is_err());
    }

    #[test]
    fn small_table_matches_subset_count() {
        let mut t = CountTable::new();
        for n in 1..=12 {
            for k in 0..=n {
                assert_eq!(t.a_value(n, k), count_ld_star(n, k), "A({n},{k})");
            }
        }
    }

    #[test]
    fn corrupted_recurrence_changes_counts() {
        let mut terms = STANDARD_TERMS.to_vec();
        terms[2].weight = 2;
        let mut bad = CountTable::with_terms(terms);
        assert!((5..=15).any(|n| bad.c_of_n(n) != c_closed_form(n).unwrap()));
    }

    #[test]
    fn polynomials_are_integral() {
        for m in 1..200 {
            for r in 0..5 {
                c_closed_form(5 * m + r).unwrap();
                let k = [2 * m, 2 * m, 2 * m + 1, 2 * m + 1, 2 * m + 2][r];
                assert!(a_closed_form(5 * m + r, k).is_some());
            }
        }
    }
}
