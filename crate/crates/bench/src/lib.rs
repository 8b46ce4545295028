//! Shared fixtures for the benchmark targets.

use cevian_core::{Arrangement, CevianConfig};

/// Equal-division arrangement for divisor `n`.
pub fn equal_arrangement(n: u64) -> Arrangement {
    Arrangement::build(CevianConfig::equal_division(n).expect("n >= 2"))
        .expect("equal divisions are always valid")
}

/// Family-1 members with prime p and prime 2p-1, up to `p_max`.
pub fn family1_divisors(p_max: u64) -> Vec<u64> {
    (2..=p_max)
        .filter(|&p| cevian_core::ceva::is_prime(p) && cevian_core::ceva::is_prime(2 * p - 1))
        .map(|p| p * (2 * p - 1))
        .collect()
}
