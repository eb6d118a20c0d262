//! Binomial coefficients and the colexicographic combinatorial number system.
//!
//! Subsets are sorted slices of 0-based points. The colex rank of
//! `c_1 < c_2 < ... < c_k` is `sum binom(c_i, i)`, which enumerates the
//! k-subsets of `0..n` densely in `0..binom(n, k)` for every `n`.

use alloc::vec::Vec;

/// `binom(n, k)`, or `None` on overflow.
pub fn checked_binomial(n: usize, k: usize) -> Option<usize> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    usize::try_from(acc).ok()
}

/// `binom(n, k)`; panics on overflow.
pub fn binomial(n: usize, k: usize) -> usize {
    checked_binomial(n, k).expect("binomial coefficient overflows usize")
}

pub fn colex_rank(members: &[usize]) -> usize {
    members.iter().enumerate().map(|(i, &c)| binomial(c, i + 1)).sum()
}

/// Inverse of [`colex_rank`] for subsets of size `k`.
pub fn colex_unrank(mut rank: usize, k: usize) -> Vec<usize> {
    let mut out = alloc::vec![0; k];
    for i in (1..=k).rev() {
        // largest c with binom(c, i) <= rank; c >= i - 1
        let mut c = i - 1;
        while binomial(c + 1, i) <= rank {
            c += 1;
        }
        rank -= binomial(c, i);
        out[i - 1] = c;
    }
    out
}

/// All k-subsets of `0..n` in colex order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..binomial(n, k)).map(move |r| colex_unrank(r, k))
}
