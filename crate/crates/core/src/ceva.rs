//! Concurrency arithmetic for equal-division cevians.
//!
//! When every side of the triangle is cut into `n` equal pieces and a cevian
//! is drawn to each cut point, the cevians indexed by `(i, j, k)` (one per
//! vertex) meet in an interior point exactly when
//!
//! ```text
//! i * j * k = (n - i) * (n - j) * (n - k)
//! ```
//!
//! with `1 <= i, j, k <= n-1`. Ordered solution triples therefore biject
//! with interior concurrency points, and counting them counts `d` without
//! any geometry. For fixed `(i, j)` the equation is linear in `k`:
//!
//! ```text
//! k * (ij + (n-i)(n-j)) = n (n-i)(n-j)
//! ```
//!
//! so the whole solution set falls out of an O(n^2) divisibility scan.
//!
//! How the solution count depends on `n` is wide open; it vanishes on prime
//! powers `p^m` with `p` odd, equals `3n - 5` on powers of two, and two
//! composite families look empirically nonempty: `n = p(2p-1)` with `p` and
//! `2p-1` prime, and `n = p^2(2p+1)` with `p` a Sophie Germain prime (i.e.
//! `2p+1` prime as well). [`scan_family`] probes those families.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// An ordered solution of the concurrency equation for divisor `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CevaSolution {
    pub n: u64,
    pub i: u64,
    pub j: u64,
    pub k: u64,
}

impl CevaSolution {
    /// Exact check of `ijk = (n-i)(n-j)(n-k)` with all indices in range.
    pub fn is_valid(&self) -> bool {
        let CevaSolution { n, i, j, k } = *self;
        let in_range = |v: u64| (1..n).contains(&v);
        in_range(i)
            && in_range(j)
            && in_range(k)
            && i as u128 * j as u128 * k as u128
                == (n - i) as u128 * (n - j) as u128 * (n - k) as u128
    }
}

impl fmt::Display for CevaSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.i, self.j, self.k)
    }
}

/// Upper bound on `n` keeping `n^3` inside u128 arithmetic.
const MAX_DIVISOR: u64 = 6_900_000_000_000;

fn check_divisor(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "equal division needs n >= 2, got {n}"
        )));
    }
    if n > MAX_DIVISOR {
        return Err(Error::Overflow(format!("n^3 for n={n}")));
    }
    Ok(())
}

/// For fixed `(i, j)`, the unique `k` solving the concurrency equation, if
/// it is integral. `k` is automatically in `[1, n-1]` whenever the division
/// is exact, but the range check stays as a guard.
fn solve_k(n: u64, i: u64, j: u64) -> Option<u64> {
    let num = n as u128 * (n - i) as u128 * (n - j) as u128;
    let den = i as u128 * j as u128 + (n - i) as u128 * (n - j) as u128;
    if !num.is_multiple_of(den) {
        return None;
    }
    let k = (num / den) as u64;
    (1..n).contains(&k).then_some(k)
}

/// Number of ordered triples `(i, j, k)` solving the concurrency equation
/// for divisor `n`; equals the geometric `d` of the equal-division
/// configuration.
pub fn count_concurrencies(n: u64) -> Result<u64> {
    check_divisor(n)?;
    let mut count = 0;
    for i in 1..n {
        for j in 1..n {
            if solve_k(n, i, j).is_some() {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// All ordered solutions for divisor `n`, ascending by `(i, j)`.
pub fn concurrency_solutions(n: u64) -> Result<Vec<CevaSolution>> {
    check_divisor(n)?;
    let mut solutions = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if let Some(k) = solve_k(n, i, j) {
                let sol = CevaSolution { n, i, j, k };
                debug_assert!(sol.is_valid());
                solutions.push(sol);
            }
        }
    }
    Ok(solutions)
}

/// Whether any triple of equal-division cevians meets inside the triangle.
pub fn has_concurrency(n: u64) -> Result<bool> {
    Ok(find_witness(n)?.is_some())
}

/// First solution found for divisor `n`, searching indices near the median
/// first. Solutions of even `n` cluster around `i = n/2`, so this order
/// exits early on the interesting composites; it changes which witness is
/// reported, never whether one exists.
pub fn find_witness(n: u64) -> Result<Option<CevaSolution>> {
    check_divisor(n)?;
    let mut order: Vec<u64> = (1..n).collect();
    order.sort_by_key(|&i| (n.abs_diff(2 * i), i));
    for &i in &order {
        for &j in &order {
            if let Some(k) = solve_k(n, i, j) {
                let sol = CevaSolution { n, i, j, k };
                debug_assert!(sol.is_valid());
                return Ok(Some(sol));
            }
        }
    }
    Ok(None)
}

/// Closed-form concurrency count for prime-power divisors `q = p^m`: zero
/// for odd `p`, and `3q - 5` for `p = 2` (each of the three medians carries
/// `q - 1` mirror pairs, and the all-median point is shared by all three).
pub fn equal_division_d(p: u64, m: u32) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::Precondition(format!(
            "prime-power exponent must be at least 1, got {m}"
        )));
    }
    if p != 2 {
        return Ok(0);
    }
    let q = checked_pow(2, m)?;
    q.checked_mul(3)
        .and_then(|t| t.checked_sub(5))
        .ok_or_else(|| Error::Overflow(format!("3*2^{m} - 5")))
}

/// `d(n)` for every `n` in `n_lo..=n_hi`, computed in parallel and merged
/// in ascending order.
pub fn d_sequence(n_lo: u64, n_hi: u64) -> Result<Vec<u64>> {
    if n_lo < 2 || n_lo > n_hi {
        return Err(Error::Precondition(format!(
            "need 2 <= n_lo <= n_hi, got {n_lo}..={n_hi}"
        )));
    }
    (n_lo..=n_hi)
        .into_par_iter()
        .map(count_concurrencies)
        .collect()
}

/// Odd divisors up to `limit` admitting a concurrency, ascending. Odd prime
/// powers never appear; the first entry is 15.
pub fn odd_positive_list(limit: u64) -> Vec<u64> {
    (3..=limit)
        .into_par_iter()
        .filter(|n| n % 2 == 1 && has_concurrency(*n).expect("n >= 3"))
        .collect()
}

/// The two composite families that empirically always admit a concurrency.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjectureFamily {
    /// `n = p(2p-1)` with `p` and `2p-1` both prime.
    PTimesTwoPMinusOne,
    /// `n = p^2(2p+1)` with `p` a Sophie Germain prime.
    PSquaredTimesTwoPPlusOne,
}

impl ConjectureFamily {
    /// The second prime the family requires alongside `p`.
    pub fn companion(self, p: u64) -> Option<u64> {
        match self {
            ConjectureFamily::PTimesTwoPMinusOne => p.checked_mul(2)?.checked_sub(1),
            ConjectureFamily::PSquaredTimesTwoPPlusOne => p.checked_mul(2)?.checked_add(1),
        }
    }

    /// The divisor the family assigns to `p`.
    pub fn divisor(self, p: u64) -> Option<u64> {
        let companion = self.companion(p)?;
        match self {
            ConjectureFamily::PTimesTwoPMinusOne => p.checked_mul(companion),
            ConjectureFamily::PSquaredTimesTwoPPlusOne => {
                p.checked_mul(p)?.checked_mul(companion)
            }
        }
    }
}

impl fmt::Display for ConjectureFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConjectureFamily::PTimesTwoPMinusOne => "p(2p-1)",
            ConjectureFamily::PSquaredTimesTwoPPlusOne => "p^2(2p+1)",
        })
    }
}

/// One scanned family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRecord {
    pub p: u64,
    pub n: u64,
    pub companion_prime: u64,
    pub has_solution: bool,
    pub witness: Option<CevaSolution>,
    /// Full ordered-solution count; only computed on request.
    pub solution_count: Option<u64>,
}

/// Scan a family over all qualifying primes `p <= p_max`, in ascending `p`.
/// Existence uses the early-exit witness search; `count_all` additionally
/// runs the full count per member. Members are evaluated in parallel and
/// merged in order, so output is identical to a serial run.
pub fn scan_family(family: ConjectureFamily, p_max: u64, count_all: bool) -> Vec<ScanRecord> {
    let qualifying: Vec<(u64, u64, u64)> = (2..=p_max)
        .filter(|&p| is_prime(p))
        .filter_map(|p| {
            let companion = family.companion(p)?;
            let n = family.divisor(p)?;
            is_prime(companion).then_some((p, companion, n))
        })
        .collect();
    qualifying
        .into_par_iter()
        .map(|(p, companion_prime, n)| {
            let witness = find_witness(n).expect("family divisor is >= 6");
            let solution_count =
                count_all.then(|| count_concurrencies(n).expect("family divisor is >= 6"));
            ScanRecord {
                p,
                n,
                companion_prime,
                has_solution: witness.is_some(),
                witness,
                solution_count,
            }
        })
        .collect()
}

/// Deterministic primality for the full u64 range: small-prime filter, then
/// a Miller-Rabin round per witness in a base set known to be exact below
/// 3.3 * 10^24.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Decompose `n` as `p^m` with `p` prime, if possible.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    if is_prime(n) {
        return Some((n, 1));
    }
    for m in 2..=63 {
        let p = integer_root(n, m);
        if p < 2 {
            break;
        }
        if checked_pow(p, m) == Ok(n) && is_prime(p) {
            return Some((p, m));
        }
    }
    None
}

/// Largest `r` with `r^m <= n`.
fn integer_root(n: u64, m: u32) -> u64 {
    let mut lo = 1u64;
    let mut hi = 1u64 << (64 / m).min(63);
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        match mid.checked_pow(m) {
            Some(v) if v <= n => lo = mid,
            _ => hi = mid - 1,
        }
    }
    lo
}

pub(crate) fn checked_pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp)
        .ok_or_else(|| Error::Overflow(format!("{base}^{exp}")))
}
