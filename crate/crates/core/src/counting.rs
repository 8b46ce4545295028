//! Closed-form triangle counts.
//!
//! The central formula: drawing `a`, `b`, `c` cevians from the vertices of a
//! triangle produces
//!
//! ```text
//! C(a+b+c+3, 3) - C(a+2, 3) - C(b+2, 3) - C(c+2, 3) - d
//! ```
//!
//! triangles, where `d` is the number of interior points at which three
//! cevians meet. Every triple of segments either bounds a triangle or meets
//! in a single point, so the count is the number of triples minus the
//! concurrent ones: `a+2` segments pass through vertex A (likewise B, C),
//! and each interior meeting point accounts for exactly one further triple.
//!
//! `d` cannot be recovered from `a`, `b`, `c` alone, so [`count_triangles`]
//! takes it as an input and records where it came from. The specializations
//! ([`two_vertex_count`], [`symmetric_count`], [`equal_division_count`])
//! fill in `d` for families where it is known. All counts are
//! arbitrary-precision; the divisions by 2 and 6 in the closed forms are
//! checked to be exact.

use std::fmt;

use num::bigint::{BigInt, BigUint};
use num::{Integer, Signed, Zero};

use crate::ceva;
use crate::error::{Error, Result};

/// Where a concurrency count `d` came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DProvenance {
    /// Counted from exact segment geometry.
    Geometric,
    /// Derived from the concurrency equation `ijk = (n-i)(n-j)(n-k)`.
    CevaEquation,
    /// Forced to zero because some vertex has no cevians.
    StructuralZero,
    /// Supplied by the caller.
    UserSupplied,
}

impl fmt::Display for DProvenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DProvenance::Geometric => "geometric",
            DProvenance::CevaEquation => "ceva-equation",
            DProvenance::StructuralZero => "structural-zero",
            DProvenance::UserSupplied => "user-supplied",
        })
    }
}

/// A full counting result: the inputs, the concurrency count with its
/// provenance, and the triangle total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u64,
    pub d_provenance: DProvenance,
    pub triangle_count: BigUint,
}

/// `C(n, 3) = n(n-1)(n-2)/6`, zero for `n < 3`.
pub fn binom3(n: u64) -> BigUint {
    if n < 3 {
        return BigUint::zero();
    }
    let n = BigUint::from(n);
    let prod = &n * (&n - 1u32) * (&n - 2u32);
    exact_div(prod, 6u32)
}

/// `C(n, 2) = n(n-1)/2`, zero for `n < 2`.
pub fn binom2(n: u64) -> BigUint {
    if n < 2 {
        return BigUint::zero();
    }
    let n = BigUint::from(n);
    exact_div(&n * (&n - 1u32), 2u32)
}

fn exact_div(value: BigUint, divisor: u32) -> BigUint {
    let (q, r) = value.div_rem(&BigUint::from(divisor));
    assert!(r.is_zero(), "division by {divisor} must be exact");
    q
}

fn exact_div_signed(value: BigInt, divisor: u32) -> BigUint {
    let (q, r) = value.div_rem(&BigInt::from(divisor));
    assert!(r.is_zero(), "division by {divisor} must be exact");
    assert!(!q.is_negative(), "count must be nonnegative");
    q.to_biguint().expect("nonnegative")
}

fn check_d(a: u32, b: u32, c: u32, d: u64) -> Result<()> {
    if a.min(b).min(c) == 0 && d != 0 {
        return Err(Error::StructuralZero { a, b, c, d });
    }
    let max = a as u128 * b as u128 * c as u128;
    if u128::from(d) > max {
        return Err(Error::ConcurrencyBound { d, max });
    }
    Ok(())
}

/// The general count for `a`, `b`, `c` cevians and `d` interior triple
/// points, with the provenance of `d` recorded as [`DProvenance::UserSupplied`]
/// (or [`DProvenance::StructuralZero`] when some vertex is bare).
///
/// `d` must satisfy the structural constraints: zero whenever
/// `min(a,b,c) = 0`, and never more than `a*b*c`.
pub fn count_triangles(a: u32, b: u32, c: u32, d: u64) -> Result<CountReport> {
    let provenance = if a.min(b).min(c) == 0 {
        DProvenance::StructuralZero
    } else {
        DProvenance::UserSupplied
    };
    count_triangles_with(a, b, c, d, provenance)
}

/// [`count_triangles`] with an explicit provenance for `d`.
pub fn count_triangles_with(
    a: u32,
    b: u32,
    c: u32,
    d: u64,
    d_provenance: DProvenance,
) -> Result<CountReport> {
    check_d(a, b, c, d)?;
    let total = binom3(a as u64 + b as u64 + c as u64 + 3);
    let corrections =
        binom3(a as u64 + 2) + binom3(b as u64 + 2) + binom3(c as u64 + 2) + BigUint::from(d);
    debug_assert!(corrections <= total);
    Ok(CountReport {
        a,
        b,
        c,
        d,
        d_provenance,
        triangle_count: total - corrections,
    })
}

/// Count when only two vertices carry cevians: `(a+1)(b+1)(a+b+2)/2`.
///
/// With `c = 0` no interior triple can form, so `d = 0` automatically and
/// the general formula collapses to this product. For `a = b = n` it is the
/// perfect cube `(n+1)^3`.
pub fn two_vertex_count(a: u32, b: u32) -> BigUint {
    let (a, b) = (BigUint::from(a), BigUint::from(b));
    let prod = (&a + 1u32) * (&b + 1u32) * (&a + &b + 2u32);
    exact_div(prod, 2u32)
}

/// Count for the mirror-symmetric family: `n` cevians from A, their mirror
/// images from B, and the median from C. Each mirror pair meets its twin on
/// the median, so `d = n` and the total is `(n+3)(n+1)^2`.
pub fn symmetric_count(n: u32) -> BigUint {
    let n = BigUint::from(n);
    (&n + 3u32) * (&n + 1u32) * (&n + 1u32)
}

/// Count for the equal-division family at a prime power `q = p^m`, with
/// `q - 1` cevians per vertex cutting each side into `q` equal pieces.
///
/// For odd `p` no three cevians meet inside (`d = 0`) and the count is
/// `(8q^3 - 9q^2 + 3q)/2`; for `p = 2` exactly `d = 3q - 5` triples meet
/// (each through a median) and the count is `(8q^3 - 9q^2 - 3q + 10)/2`.
pub fn equal_division_count(p: u64, m: u32) -> Result<CountReport> {
    let d = ceva::equal_division_d(p, m)?;
    let q = ceva::checked_pow(p, m)?;
    let side = u32::try_from(q - 1)
        .map_err(|_| Error::Overflow(format!("cevian count q-1 for q={q}")))?;

    let qb = BigInt::from(q);
    let q2 = &qb * &qb;
    let q3 = &q2 * &qb;
    let count = if p == 2 {
        exact_div_signed(8 * &q3 - 9 * &q2 - 3 * &qb + 10, 2)
    } else {
        exact_div_signed(8 * &q3 - 9 * &q2 + 3 * &qb, 2)
    };

    let report = CountReport {
        a: side,
        b: side,
        c: side,
        d,
        d_provenance: DProvenance::CevaEquation,
        triangle_count: count,
    };
    check_d(report.a, report.b, report.c, report.d)?;
    Ok(report)
}

/// Term-by-term breakdown of the fan-and-parallels count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanBreakdown {
    /// Lines through the apex, the two triangle sides included.
    pub apex_lines: u64,
    /// Lines parallel to the base, the base included.
    pub parallel_lines: u64,
    pub total_triples: BigUint,
    pub apex_concurrent: BigUint,
    pub all_parallel: BigUint,
    pub parallel_pair_with_apex: BigUint,
    pub triangle_count: BigUint,
}

/// Triangles in a fan figure: `p` lines through the apex (the two sides
/// included) and `r` lines parallel to the base (the base included).
///
/// Overcount and correct: of the `C(p+r, 3)` line triples, `C(p, 3)` meet at
/// the apex, `C(r, 3)` are three parallels, and `C(r, 2) * p` pair two
/// parallels with an apex line; everything else bounds a triangle, giving
///
/// ```text
/// C(p+r, 3) - C(p, 3) - C(r, 3) - C(r, 2) * p
/// ```
pub fn fan_parallel_count(apex_lines: u64, parallel_lines: u64) -> Result<FanBreakdown> {
    if apex_lines < 2 {
        return Err(Error::Precondition(format!(
            "a fan figure needs at least the 2 triangle sides through the apex, got {apex_lines}"
        )));
    }
    if parallel_lines < 1 {
        return Err(Error::Precondition(format!(
            "a fan figure needs at least the base line, got {parallel_lines}"
        )));
    }
    let total_triples = binom3(apex_lines + parallel_lines);
    let apex_concurrent = binom3(apex_lines);
    let all_parallel = binom3(parallel_lines);
    let parallel_pair_with_apex = binom2(parallel_lines) * BigUint::from(apex_lines);
    let corrections = &apex_concurrent + &all_parallel + &parallel_pair_with_apex;
    debug_assert!(corrections <= total_triples);
    Ok(FanBreakdown {
        apex_lines,
        parallel_lines,
        triangle_count: &total_triples - corrections,
        total_triples,
        apex_concurrent,
        all_parallel,
        parallel_pair_with_apex,
    })
}
