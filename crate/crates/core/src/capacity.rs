//! Degree-of-freedom counting against the bit budget of `N` length-`L` strings.

use num_bigint::BigUint;
use num_traits::One;

/// Real degrees of freedom of a normalised `N`-qubit state modulo global
/// phase: `2 + 4 + … + 2^N = 2^(N+1) − 2`.
pub fn dof_count(n: u64) -> BigUint {
    (BigUint::one() << (n + 1)) - 2u32
}

/// Whether `N` strings of length `L` hold fewer bits than the state has
/// degrees of freedom, `2^(N+1) − 2 > L·N`.
pub fn capacity_deficient(n: u64, l: &BigUint) -> bool {
    dof_count(n) > l * n
}

/// Qubit information capacity: the largest `N ≥ 1` with
/// `2^(N+1) − 2 ≤ L·N`, or 0 when even one qubit does not fit (`L = 1`).
///
/// `2^(N+1) − 2 − L·N` is convex in `N`, so the admissible `N` form an
/// interval starting at 1 and a bisection finds its end.
pub fn n_max(l: &BigUint) -> u64 {
    if capacity_deficient(1, l) {
        return 0;
    }
    let bits = l.bits();
    // 2^(N+1) > L·N + 2 once N exceeds bits + log2(bits) + 2.
    let mut hi = bits + 64 - bits.leading_zeros() as u64 + 4;
    debug_assert!(capacity_deficient(hi, l));
    let mut lo = 1;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if capacity_deficient(mid, l) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    lo
}

/// `⌊log₂ L⌋`, the leading-order approximation of [`n_max`].
pub fn floor_log2(l: &BigUint) -> u64 {
    l.bits().saturating_sub(1)
}
