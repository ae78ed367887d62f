//! Fixed-size subset enumeration over `{1..n}`.

use crate::VertexSet;

/// Iterates every `k`-subset of `1..=n` in increasing bitmask order (Gosper's hack).
#[derive(Clone, Debug)]
pub struct KSubsets {
    next: Option<u64>,
    limit: u128,
}

pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    assert!(n <= 64, "k_subsets supports n <= 64");
    let next = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some(u64::MAX >> (64 - k))
    };
    KSubsets {
        next,
        limit: 1u128 << n,
    }
}

impl Iterator for KSubsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let c = cur as u128;
            let low = c & c.wrapping_neg();
            let ripple = c + low;
            let succ = (((ripple ^ c) >> 2) / low) | ripple;
            (succ < self.limit).then_some(succ as u64)
        };
        Some(VertexSet::from_bits(cur))
    }
}

/// `n choose k`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}
