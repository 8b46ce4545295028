//! Error type shared across the crate.

use thiserror::Error;

use crate::geom::{Rational, Vertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A fraction string could not be parsed as `num/den`.
    #[error("invalid fraction {input:?}: {reason}")]
    BadFraction { input: String, reason: String },

    /// Segment construction with coinciding endpoints.
    #[error("segment {label} is degenerate: both endpoints are {at}")]
    DegenerateSegment { label: String, at: String },

    /// The three reference vertices are collinear.
    #[error("reference triangle is degenerate: vertices are collinear")]
    DegenerateTriangle,

    /// Two collinear segments share more than one point. A valid cevian
    /// arrangement never produces this, so it signals a malformed config.
    #[error("segments {first} and {second} are collinear and overlap")]
    CollinearOverlap { first: String, second: String },

    /// A cevian foot parameter outside the open interval (0,1).
    #[error("cevian foot {foot} from vertex {vertex} must lie strictly between 0 and 1")]
    FootOutOfRange { vertex: Vertex, foot: Rational },

    /// Two cevians from the same vertex with the same foot.
    #[error("duplicate cevian foot {foot} from vertex {vertex}")]
    DuplicateFoot { vertex: Vertex, foot: Rational },

    /// d > 0 requires at least one cevian from every vertex: an interior
    /// triple always uses one A-, one B-, and one C-cevian.
    #[error(
        "d must be 0 when a=0, b=0, or c=0 (an interior meeting point needs one cevian \
         from each vertex); got a={a}, b={b}, c={c}, d={d}"
    )]
    StructuralZero { a: u32, b: u32, c: u32, d: u64 },

    /// d exceeds the number of (A,B,C) cevian triples.
    #[error("d={d} exceeds a*b*c={max}: each interior point uses a distinct cevian triple")]
    ConcurrencyBound { d: u64, max: u128 },

    /// A prime was required.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// A triple of segment ids was repeated or out of range.
    #[error("invalid segment triple: {0}")]
    InvalidTriple(String),

    /// Generic precondition violation (small-integer bounds and the like).
    #[error("{0}")]
    Precondition(String),

    /// The enumerator's guard rail: refuse huge arrangements.
    #[error(
        "arrangement has {segments} segments, above the enumeration guard of {limit}; \
         raise the limit to force the run"
    )]
    SegmentLimit { segments: usize, limit: usize },

    /// Integer overflow while forming an argument (e.g. p^m).
    #[error("integer overflow computing {0}")]
    Overflow(String),

    /// Violation of an internal geometric invariant; indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
