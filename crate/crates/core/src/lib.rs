//! Exact counting of triangles in cevian arrangements.
//!
//! A cevian runs from a vertex of a triangle to a point strictly inside the
//! opposite side. Drawing `a`, `b`, `c` cevians from the three vertices
//! carves the picture into pieces, and the number of triangles visible in
//! it is
//!
//! ```text
//! C(a+b+c+3, 3) - C(a+2, 3) - C(b+2, 3) - C(c+2, 3) - d
//! ```
//!
//! where `d` is the number of interior points at which three cevians meet.
//! This crate computes both sides of that story and keeps them honest
//! against each other:
//!
//! - [`geom`]: exact rational points, segments and intersection predicates;
//!   no floating point anywhere, so concurrency detection has no tolerance
//!   knobs to get wrong.
//! - [`arrangement`]: cevian configurations realized in a reference
//!   triangle, and geometric computation of `d`.
//! - [`counting`]: the closed-form counts, including the two-vertex cube
//!   law, the mirror-symmetric family, equal-division prime-power counts
//!   and the fan-and-parallels figure.
//! - [`oracle`]: the brute-force triple enumerator used as ground truth.
//! - [`ceva`]: the concurrency equation `ijk = (n-i)(n-j)(n-k)`, its
//!   solution counts and sequences, and scans over two prime families.
//!
//! Counts are arbitrary precision (`BigUint`); geometry is `BigRational`.

pub mod arrangement;
pub mod ceva;
pub mod counting;
pub mod error;
pub mod geom;
pub mod oracle;

pub use arrangement::{Arrangement, CevianConfig, ConcurrencyPoint};
pub use ceva::{CevaSolution, ConjectureFamily, ScanRecord};
pub use counting::{CountReport, DProvenance, FanBreakdown};
pub use error::{Error, Result};
pub use geom::{Point2, Rational, Segment, SegmentId, SegmentLabel, Side, Vertex};
pub use oracle::{FanTally, OracleOptions, OracleReport, TripleClass, TripleTally};
