//! Brute-force triangle enumeration over segment triples: the independent
//! ground truth the closed-form counts are checked against.
//!
//! In a cevian arrangement every pair of segments meets in exactly one
//! point (inside the triangle or at a corner), so a triple of segments
//! either bounds a triangle or passes through a single common point. A
//! triple counts as a triangle exactly when its three pairwise intersection
//! points exist and are pairwise distinct; no polygon containment is ever
//! computed. Enumeration is cubic in the segment count and guarded by a
//! limit, since this is a verifier, not the production counting path.

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::geom::{closed_intersection_raw, rational, Point2, Rational, SegmentId, Vertex};

/// Largest arrangement the enumerator accepts by default.
pub const DEFAULT_SEGMENT_LIMIT: usize = 60;

/// Knobs for [`enumerate_triangles_with`].
#[derive(Clone, Copy, Debug)]
pub struct OracleOptions {
    /// Refuse arrangements with more segments than this.
    pub segment_limit: usize,
    /// Also return the triangle-bounding triples, in lexicographic id order.
    pub collect_triples: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            segment_limit: DEFAULT_SEGMENT_LIMIT,
            collect_triples: false,
        }
    }
}

/// How a triple of segments sits in the arrangement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleClass {
    /// Three pairwise intersection points, all distinct.
    Triangle,
    /// All three segments pass through the named corner.
    ConcurrentAtVertex(Vertex),
    /// All three segments pass through one interior point.
    ConcurrentInterior,
}

/// Classification totals over all `C(segments, 3)` triples.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TripleTally {
    pub triangles: u64,
    /// Triples through A, B, C respectively.
    pub at_vertex: [u64; 3],
    pub interior: u64,
}

impl TripleTally {
    pub fn total(&self) -> u64 {
        self.triangles + self.at_vertex.iter().sum::<u64>() + self.interior
    }
}

/// Result of a full enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub triangle_count: u64,
    pub tally: TripleTally,
    pub triples: Option<Vec<[SegmentId; 3]>>,
}

/// Enumerate with default options.
pub fn enumerate_triangles(arr: &Arrangement) -> Result<OracleReport> {
    enumerate_triangles_with(arr, OracleOptions::default())
}

/// Walk every segment triple and classify it.
///
/// Deterministic: triples are visited (and collected) in ascending id
/// order, and the tally is an order-independent sum.
pub fn enumerate_triangles_with(arr: &Arrangement, opts: OracleOptions) -> Result<OracleReport> {
    let n = arr.segment_count();
    if n > opts.segment_limit {
        return Err(Error::SegmentLimit {
            segments: n,
            limit: opts.segment_limit,
        });
    }

    // Pairwise intersections up front; each pair must meet exactly once.
    let mut meets: Vec<Vec<Point2>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(i);
        for j in 0..i {
            let p = pair_meet(arr, j, i)?;
            row.push(p);
        }
        meets.push(row);
    }
    let meet = |lo: usize, hi: usize| &meets[hi][lo];

    let mut tally = TripleTally::default();
    let mut triples = opts.collect_triples.then(Vec::new);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let class = classify_points(arr, meet(i, j), meet(i, k), meet(j, k));
                match class {
                    TripleClass::Triangle => {
                        tally.triangles += 1;
                        if let Some(list) = triples.as_mut() {
                            list.push([SegmentId(i), SegmentId(j), SegmentId(k)]);
                        }
                    }
                    TripleClass::ConcurrentAtVertex(v) => tally.at_vertex[v.index()] += 1,
                    TripleClass::ConcurrentInterior => tally.interior += 1,
                }
            }
        }
    }

    Ok(OracleReport {
        triangle_count: tally.triangles,
        tally,
        triples,
    })
}

/// Classify a single triple of distinct segment ids.
pub fn classify_triple(arr: &Arrangement, ids: [SegmentId; 3]) -> Result<TripleClass> {
    let [i, j, k] = ids;
    if i == j || j == k || i == k {
        return Err(Error::InvalidTriple(format!("repeated id in ({i}, {j}, {k})")));
    }
    for id in ids {
        if id.0 >= arr.segment_count() {
            return Err(Error::InvalidTriple(format!(
                "id {id} out of range for {} segments",
                arr.segment_count()
            )));
        }
    }
    let pij = pair_meet(arr, i.0, j.0)?;
    let pik = pair_meet(arr, i.0, k.0)?;
    let pjk = pair_meet(arr, j.0, k.0)?;
    Ok(classify_points(arr, &pij, &pik, &pjk))
}

fn pair_meet(arr: &Arrangement, i: usize, j: usize) -> Result<Point2> {
    let s1 = &arr.segments()[i];
    let s2 = &arr.segments()[j];
    crate::geom::segment_intersection(s1, s2)?.ok_or_else(|| {
        Error::Internal(format!(
            "segments {} and {} do not intersect; impossible in a cevian arrangement",
            s1.label, s2.label
        ))
    })
}

fn classify_points(arr: &Arrangement, pij: &Point2, pik: &Point2, pjk: &Point2) -> TripleClass {
    if pij != pik || pij != pjk {
        // coincidence of any two forces all three, so one mismatch means
        // three distinct corners
        debug_assert!(pij != pik && pij != pjk && pik != pjk);
        return TripleClass::Triangle;
    }
    for v in Vertex::ALL {
        if arr.vertex(v) == pij {
            return TripleClass::ConcurrentAtVertex(v);
        }
    }
    debug_assert!(arr.is_interior(pij));
    TripleClass::ConcurrentInterior
}

/// Tally of line triples in a fan figure (`p` lines through the apex
/// including the two sides, `r` lines parallel to the base including the
/// base itself).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FanTally {
    pub triangles: u64,
    pub apex_concurrent: u64,
    pub all_parallel: u64,
    pub parallel_pair_with_apex: u64,
}

impl FanTally {
    pub fn total(&self) -> u64 {
        self.triangles + self.apex_concurrent + self.all_parallel + self.parallel_pair_with_apex
    }
}

/// Brute-force classification of every line triple in a fan figure, built
/// from exact coordinates: apex at the origin, base from (-1,1) to (1,1),
/// apex lines fanning to equally spaced base points, parallels as chords at
/// heights j/r. The same triangle test as for cevian arrangements applies;
/// the two non-triangle failure modes here are a shared apex and a missing
/// intersection between parallels.
pub fn enumerate_fan(apex_lines: u64, parallel_lines: u64) -> Result<FanTally> {
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
    let p = usize::try_from(apex_lines).expect("fan size fits usize");
    let r = usize::try_from(parallel_lines).expect("fan size fits usize");
    if p + r > DEFAULT_SEGMENT_LIMIT {
        return Err(Error::SegmentLimit {
            segments: p + r,
            limit: DEFAULT_SEGMENT_LIMIT,
        });
    }

    let apex = Point2::from_ints(0, 0);
    // (endpoints, is_parallel) per line
    let mut lines: Vec<(Point2, Point2, bool)> = Vec::with_capacity(p + r);
    for i in 0..p {
        let x = rational(-1, 1) + rational(2, 1) * rational(i as i64, (p - 1) as i64);
        lines.push((apex.clone(), Point2::new(x, rational(1, 1)), false));
    }
    for j in 1..=r {
        let h: Rational = rational(j as i64, r as i64);
        lines.push((
            Point2::new(-h.clone(), h.clone()),
            Point2::new(h.clone(), h),
            true,
        ));
    }

    let mut tally = FanTally::default();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            for k in j + 1..lines.len() {
                let triple = [&lines[i], &lines[j], &lines[k]];
                let mut points = Vec::with_capacity(3);
                let mut missing = false;
                for (x, y) in [(0, 1), (0, 2), (1, 2)] {
                    let (a, b) = (triple[x], triple[y]);
                    match closed_intersection_raw(&a.0, &a.1, &b.0, &b.1)? {
                        Some(pt) => points.push(pt),
                        None => missing = true,
                    }
                }
                let parallels = triple.iter().filter(|l| l.2).count();
                if missing {
                    // only parallels fail to meet
                    debug_assert!(parallels >= 2);
                    if parallels == 3 {
                        tally.all_parallel += 1;
                    } else {
                        tally.parallel_pair_with_apex += 1;
                    }
                } else if points[0] == points[1] && points[1] == points[2] {
                    debug_assert_eq!(points[0], apex);
                    tally.apex_concurrent += 1;
                } else {
                    tally.triangles += 1;
                }
            }
        }
    }
    Ok(tally)
}
