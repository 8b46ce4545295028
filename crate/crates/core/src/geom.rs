//! Exact rational plane primitives: points, labeled segments, orientation,
//! and closed-segment intersection.
//!
//! All coordinates are arbitrary-precision rationals and every predicate is
//! an exact sign or equality test. There is no floating point and no epsilon
//! anywhere in this module, which is what makes interior concurrency
//! detection decidable: three segments either meet in a common point or they
//! do not, and we can always tell which.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used for all coordinates and foot parameters.
///
/// `BigRational` keeps values canonical: the denominator is positive and
/// numerator/denominator are coprime after every construction and arithmetic
/// operation, so structural equality is value equality.
pub type Rational = BigRational;

/// Rational from a pair of machine integers. Panics if `den == 0`; intended
/// for literals in code and tests. Use [`parse_rational`] for external input.
pub fn rational(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse `"num/den"` or a bare integer `"num"` into a canonical rational.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let bad = |reason: &str| Error::BadFraction {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let s = input.trim();
    if s.is_empty() {
        return Err(bad("empty string"));
    }
    let mut parts = s.splitn(2, '/');
    let num_str = parts.next().unwrap().trim();
    let num = BigInt::from_str(num_str).map_err(|_| bad("numerator is not an integer"))?;
    match parts.next() {
        None => Ok(BigRational::from_integer(num)),
        Some(den_str) => {
            let den =
                BigInt::from_str(den_str.trim()).map_err(|_| bad("denominator is not an integer"))?;
            if den.is_zero() {
                return Err(bad("denominator is zero"));
            }
            Ok(BigRational::new(num, den))
        }
    }
}

/// A triangle corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    A,
    B,
    C,
}

impl Vertex {
    pub const ALL: [Vertex; 3] = [Vertex::A, Vertex::B, Vertex::C];

    pub fn index(self) -> usize {
        match self {
            Vertex::A => 0,
            Vertex::B => 1,
            Vertex::C => 2,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Vertex::A => "A",
            Vertex::B => "B",
            Vertex::C => "C",
        })
    }
}

/// A triangle side, named by its endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Ab,
    Bc,
    Ca,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::Ab, Side::Bc, Side::Ca];
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Ab => "AB",
            Side::Bc => "BC",
            Side::Ca => "CA",
        })
    }
}

/// Identity of a segment within an arrangement: a side, or the `index`-th
/// cevian from a vertex (indices follow ascending foot order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SegmentLabel {
    Side(Side),
    Cevian { from: Vertex, index: usize },
}

impl fmt::Display for SegmentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SegmentLabel::Side(s) => write!(f, "{s}"),
            SegmentLabel::Cevian { from, index } => write!(f, "{from}{index}"),
        }
    }
}

impl FromStr for SegmentLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "AB" => return Ok(SegmentLabel::Side(Side::Ab)),
            "BC" => return Ok(SegmentLabel::Side(Side::Bc)),
            "CA" => return Ok(SegmentLabel::Side(Side::Ca)),
            _ => {}
        }
        let err = || Error::Precondition(format!("unknown segment label {s:?}"));
        let (head, tail) = s.split_at(s.len().min(1));
        let from = match head {
            "A" => Vertex::A,
            "B" => Vertex::B,
            "C" => Vertex::C,
            _ => return Err(err()),
        };
        let index: usize = tail.parse().map_err(|_| err())?;
        Ok(SegmentLabel::Cevian { from, index })
    }
}

/// Index of a segment in an arrangement's canonical segment list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SegmentId(pub usize);

impl fmt::Display for SegmentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A point with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point2 { x, y }
    }

    /// Point with integer coordinates.
    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2::new(rational(x, 1), rational(y, 1))
    }

    /// The affine combination `(1-t)*self + t*other`.
    pub fn lerp(&self, other: &Point2, t: &Rational) -> Point2 {
        let s = Rational::one() - t;
        Point2::new(&s * &self.x + t * &other.x, &s * &self.y + t * &other.y)
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Sign of the cross product `(q - p) x (r - p)`.
///
/// Returns `+1` for a counterclockwise turn, `-1` for clockwise, and `0`
/// exactly when the three points are collinear.
pub fn orientation(p: &Point2, q: &Point2, r: &Point2) -> i8 {
    let cross = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    if cross.is_zero() {
        0
    } else if cross.is_positive() {
        1
    } else {
        -1
    }
}

/// A closed line segment with distinct endpoints and an identity label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub start: Point2,
    pub end: Point2,
    pub label: SegmentLabel,
}

impl Segment {
    pub fn new(start: Point2, end: Point2, label: SegmentLabel) -> Result<Self> {
        if start == end {
            return Err(Error::DegenerateSegment {
                label: label.to_string(),
                at: start.to_string(),
            });
        }
        Ok(Segment { start, end, label })
    }

    /// Exact membership test for the closed segment.
    pub fn contains(&self, p: &Point2) -> bool {
        if orientation(&self.start, &self.end, p) != 0 {
            return false;
        }
        within(&self.start.x, &self.end.x, &p.x) && within(&self.start.y, &self.end.y, &p.y)
    }
}

fn within(a: &Rational, b: &Rational, v: &Rational) -> bool {
    if a <= b {
        a <= v && v <= b
    } else {
        b <= v && v <= a
    }
}

/// Outcome of intersecting two collinear closed segments.
enum CollinearMeet {
    Disjoint,
    Point(Point2),
    Overlap,
}

/// The unique common point of two closed segments, if exactly one exists.
///
/// Endpoints count: segments sharing an endpoint meet there. Two collinear
/// segments overlapping in more than a point are rejected with
/// [`Error::CollinearOverlap`] -- a valid cevian arrangement never produces
/// them, so hitting this error means the configuration upstream is broken.
pub fn segment_intersection(s1: &Segment, s2: &Segment) -> Result<Option<Point2>> {
    match closed_intersection(&s1.start, &s1.end, &s2.start, &s2.end) {
        CollinearMeet::Disjoint => Ok(None),
        CollinearMeet::Point(p) => Ok(Some(p)),
        CollinearMeet::Overlap => Err(Error::CollinearOverlap {
            first: s1.label.to_string(),
            second: s2.label.to_string(),
        }),
    }
}

/// Closed-segment intersection on raw endpoints, for figures whose segments
/// are not part of an [`Segment`]-labeled arrangement.
pub(crate) fn closed_intersection_raw(
    p1: &Point2,
    q1: &Point2,
    p2: &Point2,
    q2: &Point2,
) -> Result<Option<Point2>> {
    match closed_intersection(p1, q1, p2, q2) {
        CollinearMeet::Disjoint => Ok(None),
        CollinearMeet::Point(p) => Ok(Some(p)),
        CollinearMeet::Overlap => Err(Error::CollinearOverlap {
            first: format!("{p1}-{q1}"),
            second: format!("{p2}-{q2}"),
        }),
    }
}

fn closed_intersection(p1: &Point2, q1: &Point2, p2: &Point2, q2: &Point2) -> CollinearMeet {
    let d1 = (&q1.x - &p1.x, &q1.y - &p1.y);
    let d2 = (&q2.x - &p2.x, &q2.y - &p2.y);
    let w = (&p2.x - &p1.x, &p2.y - &p1.y);

    let denom = &d1.0 * &d2.1 - &d1.1 * &d2.0;
    if denom.is_zero() {
        // Parallel. Collinear iff w is parallel to d1 as well.
        if !(&w.0 * &d1.1 - &w.1 * &d1.0).is_zero() {
            return CollinearMeet::Disjoint;
        }
        // Collinear: project s2's endpoints onto s1's parameterization.
        let len2 = &d1.0 * &d1.0 + &d1.1 * &d1.1;
        let t_of = |p: &Point2| ((&p.x - &p1.x) * &d1.0 + (&p.y - &p1.y) * &d1.1) / &len2;
        let (t0, t1) = (t_of(p2), t_of(q2));
        let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
        let start = lo.max(Rational::zero());
        let end = hi.min(Rational::one());
        return match start.cmp(&end) {
            std::cmp::Ordering::Greater => CollinearMeet::Disjoint,
            std::cmp::Ordering::Equal => CollinearMeet::Point(Point2::new(
                &p1.x + &start * &d1.0,
                &p1.y + &start * &d1.1,
            )),
            std::cmp::Ordering::Less => CollinearMeet::Overlap,
        };
    }

    // General position: solve p1 + t*d1 = p2 + u*d2 and require both
    // parameters in [0, 1].
    let t = (&w.0 * &d2.1 - &w.1 * &d2.0) / &denom;
    let u = (&w.0 * &d1.1 - &w.1 * &d1.0) / &denom;
    let unit = Rational::zero()..=Rational::one();
    if unit.contains(&t) && unit.contains(&u) {
        CollinearMeet::Point(Point2::new(&p1.x + &t * &d1.0, &p1.y + &t * &d1.1))
    } else {
        CollinearMeet::Disjoint
    }
}
