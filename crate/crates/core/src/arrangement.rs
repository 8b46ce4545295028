//! Cevian configurations and their realization as exact segment
//! arrangements, including detection of interior points where three cevians
//! meet.
//!
//! A configuration stores one foot-parameter list per vertex. The parameter
//! `t` places a foot at `(1-t)*start + t*end` of the opposite side, with the
//! sides traversed B->C (for A-cevians), C->A (for B-cevians) and A->B (for
//! C-cevians). Under these conventions the classical concurrency criterion
//! takes its cleanest form: cevians with parameters `t_a`, `t_b`, `t_c` meet
//! in one interior point exactly when
//!
//! ```text
//! t_a/(1-t_a) * t_b/(1-t_b) * t_c/(1-t_c) = 1
//! ```
//!
//! which is `(BD/DC)(CE/EA)(AF/FB) = 1` in the usual naming of the feet.
//! Incidence is affine-invariant, so every count computed here is
//! independent of the reference triangle; the default is the right isoceles
//! triangle (0,0), (1,0), (0,1), which keeps all intersection coordinates
//! rational. [`Arrangement::build_in`] accepts any other rational triangle,
//! mainly so tests can confirm the invariance.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::geom::{
    orientation, segment_intersection, Point2, Rational, Segment, SegmentId, SegmentLabel, Side,
    Vertex,
};

/// Foot-parameter lists for the cevians drawn from each vertex.
///
/// Lists are kept sorted ascending; every parameter is strictly between 0
/// and 1 and appears at most once per vertex, so `a`, `b`, `c` are exactly
/// the numbers of distinct cevians.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CevianConfig {
    feet: [Vec<Rational>; 3],
}

impl CevianConfig {
    /// Validating constructor: feet may arrive in any order, but each value
    /// must lie in the open interval (0,1) and repeats are rejected.
    pub fn new(
        feet_from_a: Vec<Rational>,
        feet_from_b: Vec<Rational>,
        feet_from_c: Vec<Rational>,
    ) -> Result<Self> {
        let mut feet = [feet_from_a, feet_from_b, feet_from_c];
        for (list, vertex) in feet.iter_mut().zip(Vertex::ALL) {
            list.sort();
            for foot in list.iter() {
                if !(foot > &Rational::zero() && foot < &Rational::one()) {
                    return Err(Error::FootOutOfRange {
                        vertex,
                        foot: foot.clone(),
                    });
                }
            }
            for pair in list.windows(2) {
                if pair[0] == pair[1] {
                    return Err(Error::DuplicateFoot {
                        vertex,
                        foot: pair[0].clone(),
                    });
                }
            }
        }
        Ok(CevianConfig { feet })
    }

    /// The bare triangle: no cevians at all.
    pub fn empty() -> Self {
        CevianConfig {
            feet: [Vec::new(), Vec::new(), Vec::new()],
        }
    }

    /// `n-1` cevians per vertex whose feet cut the opposite side into `n`
    /// pieces of equal length (feet at i/n for i = 1..n-1).
    pub fn equal_division(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition(format!(
                "equal division needs n >= 2, got {n}"
            )));
        }
        let feet: Vec<Rational> = (1..n)
            .map(|i| Rational::new(i.into(), n.into()))
            .collect();
        Ok(CevianConfig {
            feet: [feet.clone(), feet.clone(), feet],
        })
    }

    /// Foot parameters of the cevians from `vertex`, ascending.
    pub fn feet(&self, vertex: Vertex) -> &[Rational] {
        &self.feet[vertex.index()]
    }

    /// Cevian counts `(a, b, c)`.
    pub fn counts(&self) -> (u32, u32, u32) {
        let n = |v: Vertex| {
            u32::try_from(self.feet[v.index()].len()).expect("cevian count fits in u32")
        };
        (n(Vertex::A), n(Vertex::B), n(Vertex::C))
    }

    /// Total number of segments the realized arrangement will have.
    pub fn segment_count(&self) -> usize {
        3 + self.feet.iter().map(Vec::len).sum::<usize>()
    }

    /// The concurrency product `prod t/(1-t)` over one foot from each
    /// vertex. Equal to 1 exactly when the three cevians meet in a point;
    /// used as an independent cross-check of the geometric detection.
    pub fn ceva_product(&self, a_index: usize, b_index: usize, c_index: usize) -> Rational {
        let ratio = |v: Vertex, i: usize| {
            let t = &self.feet[v.index()][i];
            t / (Rational::one() - t)
        };
        ratio(Vertex::A, a_index) * ratio(Vertex::B, b_index) * ratio(Vertex::C, c_index)
    }
}

/// An interior point together with the one cevian per vertex passing
/// through it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcurrencyPoint {
    pub location: Point2,
    /// Segment ids of the A-, B-, and C-cevian through the point, in that
    /// order.
    pub cevians: [SegmentId; 3],
}

/// A configuration realized as labeled segments in a concrete triangle.
///
/// The segment list is canonical: sides AB, BC, CA first, then the
/// A-cevians, B-cevians and C-cevians in ascending foot order. A config
/// with counts `(a, b, c)` therefore realizes exactly `a + b + c + 3`
/// segments. [`SegmentId`]s index into this list.
#[derive(Clone, Debug)]
pub struct Arrangement {
    vertices: [Point2; 3],
    segments: Vec<Segment>,
    config: CevianConfig,
}

impl Arrangement {
    /// Realize `config` in the reference triangle (0,0), (1,0), (0,1).
    pub fn build(config: CevianConfig) -> Result<Self> {
        Self::build_in(
            config,
            [
                Point2::from_ints(0, 0),
                Point2::from_ints(1, 0),
                Point2::from_ints(0, 1),
            ],
        )
    }

    /// Realize `config` in an arbitrary nondegenerate rational triangle.
    pub fn build_in(config: CevianConfig, vertices: [Point2; 3]) -> Result<Self> {
        let [a, b, c] = &vertices;
        if orientation(a, b, c) == 0 {
            return Err(Error::DegenerateTriangle);
        }

        let mut segments = Vec::with_capacity(config.segment_count());
        segments.push(Segment::new(a.clone(), b.clone(), SegmentLabel::Side(Side::Ab))?);
        segments.push(Segment::new(b.clone(), c.clone(), SegmentLabel::Side(Side::Bc))?);
        segments.push(Segment::new(c.clone(), a.clone(), SegmentLabel::Side(Side::Ca))?);

        // Opposite side of each vertex, traversed in the fixed direction:
        // A -> (B,C), B -> (C,A), C -> (A,B).
        let side_of = |v: Vertex| match v {
            Vertex::A => (b, c),
            Vertex::B => (c, a),
            Vertex::C => (a, b),
        };
        for vertex in Vertex::ALL {
            let (from, to) = side_of(vertex);
            let origin = &vertices[vertex.index()];
            for (index, t) in config.feet(vertex).iter().enumerate() {
                let foot = from.lerp(to, t);
                segments.push(Segment::new(
                    origin.clone(),
                    foot,
                    SegmentLabel::Cevian { from: vertex, index },
                )?);
            }
        }

        Ok(Arrangement {
            vertices,
            segments,
            config,
        })
    }

    pub fn vertices(&self) -> &[Point2; 3] {
        &self.vertices
    }

    pub fn vertex(&self, v: Vertex) -> &Point2 {
        &self.vertices[v.index()]
    }

    pub fn config(&self) -> &CevianConfig {
        &self.config
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn segment(&self, id: SegmentId) -> Option<&Segment> {
        self.segments.get(id.0)
    }

    pub fn segment_count(&self) -> usize {
        self.segments.len()
    }

    /// Cevian counts `(a, b, c)`.
    pub fn counts(&self) -> (u32, u32, u32) {
        self.config.counts()
    }

    /// Ids of the cevians from `vertex`, in ascending foot order.
    pub fn cevian_ids(&self, vertex: Vertex) -> impl Iterator<Item = SegmentId> {
        let (a, b, _) = self.counts();
        let start = 3 + match vertex {
            Vertex::A => 0,
            Vertex::B => a as usize,
            Vertex::C => a as usize + b as usize,
        };
        let len = self.config.feet(vertex).len();
        (start..start + len).map(SegmentId)
    }

    /// Look a segment up by its label.
    pub fn id_of_label(&self, label: SegmentLabel) -> Option<SegmentId> {
        match label {
            SegmentLabel::Side(Side::Ab) => Some(SegmentId(0)),
            SegmentLabel::Side(Side::Bc) => Some(SegmentId(1)),
            SegmentLabel::Side(Side::Ca) => Some(SegmentId(2)),
            SegmentLabel::Cevian { from, index } => {
                if index < self.config.feet(from).len() {
                    self.cevian_ids(from).nth(index)
                } else {
                    None
                }
            }
        }
    }

    /// Exact test for a point strictly inside the triangle.
    pub fn is_interior(&self, p: &Point2) -> bool {
        let [a, b, c] = &self.vertices;
        let sign = orientation(a, b, c);
        orientation(a, b, p) == sign && orientation(b, c, p) == sign && orientation(c, a, p) == sign
    }

    /// All interior points where one cevian from each vertex meets.
    ///
    /// Walks every (A-cevian, B-cevian) pair; the pair meets in exactly one
    /// interior point, and each C-cevian is tested for passing through it.
    /// Two cevians from one vertex share only that vertex, so a point can
    /// carry at most one cevian per vertex and the triple per point is
    /// unique. Output order follows ascending (A-index, B-index), which is
    /// canonical because foot lists are sorted.
    pub fn concurrency_points(&self) -> Vec<ConcurrencyPoint> {
        let mut points = Vec::new();
        for a_id in self.cevian_ids(Vertex::A) {
            let a_seg = &self.segments[a_id.0];
            for b_id in self.cevian_ids(Vertex::B) {
                let b_seg = &self.segments[b_id.0];
                let meet = segment_intersection(a_seg, b_seg)
                    .expect("cevians are never collinear")
                    .expect("cevians from different vertices always intersect");
                debug_assert!(self.is_interior(&meet));
                for c_id in self.cevian_ids(Vertex::C) {
                    if self.segments[c_id.0].contains(&meet) {
                        points.push(ConcurrencyPoint {
                            location: meet,
                            cevians: [a_id, b_id, c_id],
                        });
                        break;
                    }
                }
            }
        }
        points
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rational;

    fn medians() -> CevianConfig {
        CevianConfig::new(
            vec![rational(1, 2)],
            vec![rational(1, 2)],
            vec![rational(1, 2)],
        )
        .unwrap()
    }

    #[test]
    fn median_config_realizes_six_segments() {
        let arr = Arrangement::build(medians()).unwrap();
        assert_eq!(arr.segment_count(), 6);
        // the A-cevian runs from (0,0) to the midpoint of BC
        let a0 = arr
            .id_of_label("A0".parse().unwrap())
            .and_then(|id| arr.segment(id))
            .unwrap();
        assert_eq!(a0.start, Point2::from_ints(0, 0));
        assert_eq!(a0.end, Point2::new(rational(1, 2), rational(1, 2)));
    }

    #[test]
    fn empty_config_is_just_the_sides() {
        let arr = Arrangement::build(CevianConfig::empty()).unwrap();
        assert_eq!(arr.segment_count(), 3);
        assert_eq!(arr.counts(), (0, 0, 0));
        assert!(arr.concurrency_points().is_empty());
    }

    #[test]
    fn equal_division_feet() {
        let cfg = CevianConfig::equal_division(2).unwrap();
        assert_eq!(cfg.feet(Vertex::A), &[rational(1, 2)]);

        let cfg = CevianConfig::equal_division(3).unwrap();
        assert_eq!(cfg.feet(Vertex::B), &[rational(1, 3), rational(2, 3)]);
        assert_eq!(Arrangement::build(cfg).unwrap().segment_count(), 9);

        let cfg = CevianConfig::equal_division(4).unwrap();
        assert_eq!(
            cfg.feet(Vertex::C),
            &[rational(1, 4), rational(1, 2), rational(3, 4)]
        );

        assert!(CevianConfig::equal_division(1).is_err());
        assert!(CevianConfig::equal_division(0).is_err());
    }

    #[test]
    fn validation_names_the_offending_entry() {
        let err = CevianConfig::new(vec![rational(3, 2)], vec![], vec![]).unwrap_err();
        assert_eq!(
            err,
            Error::FootOutOfRange {
                vertex: Vertex::A,
                foot: rational(3, 2)
            }
        );
        assert!(err.to_string().contains("3/2"));

        for bad in [rational(0, 1), rational(1, 1), rational(-1, 3)] {
            assert!(CevianConfig::new(vec![], vec![bad], vec![]).is_err());
        }

        // 2/4 reduces to 1/2, so this is a duplicate
        let err =
            CevianConfig::new(vec![], vec![], vec![rational(1, 2), rational(2, 4)]).unwrap_err();
        assert_eq!(
            err,
            Error::DuplicateFoot {
                vertex: Vertex::C,
                foot: rational(1, 2)
            }
        );
    }

    #[test]
    fn feet_are_sorted_on_construction() {
        let cfg = CevianConfig::new(
            vec![rational(3, 4), rational(1, 4), rational(1, 2)],
            vec![],
            vec![],
        )
        .unwrap();
        assert_eq!(
            cfg.feet(Vertex::A),
            &[rational(1, 4), rational(1, 2), rational(3, 4)]
        );
    }

    #[test]
    fn medians_meet_once_at_the_centroid() {
        let arr = Arrangement::build(medians()).unwrap();
        let points = arr.concurrency_points();
        assert_eq!(points.len(), 1);
        assert_eq!(
            points[0].location,
            Point2::new(rational(1, 3), rational(1, 3))
        );
        let labels: Vec<String> = points[0]
            .cevians
            .iter()
            .map(|id| arr.segment(*id).unwrap().label.to_string())
            .collect();
        assert_eq!(labels, ["A0", "B0", "C0"]);
    }

    #[test]
    fn equal_thirds_have_no_interior_triple() {
        let arr = Arrangement::build(CevianConfig::equal_division(3).unwrap()).unwrap();
        assert!(arr.concurrency_points().is_empty());
    }

    #[test]
    fn non_unit_ceva_product_means_no_triple() {
        let cfg = CevianConfig::new(
            vec![rational(1, 2)],
            vec![rational(1, 2)],
            vec![rational(1, 3)],
        )
        .unwrap();
        // cross-check the product first: 1 * 1 * (1/3)/(2/3) = 1/2
        assert_eq!(cfg.ceva_product(0, 0, 0), rational(1, 2));
        let arr = Arrangement::build(cfg).unwrap();
        assert!(arr.concurrency_points().is_empty());
    }

    #[test]
    fn unit_ceva_product_means_triple() {
        // t_a = 1/3, t_b = 1/2 force t_c: (1/2)(1)(t/(1-t)) = 1 => t = 2/3
        let cfg = CevianConfig::new(
            vec![rational(1, 3)],
            vec![rational(1, 2)],
            vec![rational(2, 3)],
        )
        .unwrap();
        assert_eq!(cfg.ceva_product(0, 0, 0), rational(1, 1));
        let arr = Arrangement::build(cfg).unwrap();
        assert_eq!(arr.concurrency_points().len(), 1);
    }

    #[test]
    fn segment_count_matches_config() {
        for (fa, fb, fc) in [
            (vec![rational(1, 3)], vec![], vec![]),
            (
                vec![rational(1, 3), rational(1, 2)],
                vec![rational(2, 5)],
                vec![rational(1, 7), rational(6, 7)],
            ),
        ] {
            let cfg = CevianConfig::new(fa, fb, fc).unwrap();
            let (a, b, c) = cfg.counts();
            let arr = Arrangement::build(cfg).unwrap();
            assert_eq!(
                arr.segment_count(),
                (a + b + c + 3) as usize,
                "segment count must be a+b+c+3"
            );
        }
    }

    #[test]
    fn collinear_reference_triangle_is_rejected() {
        let e = Arrangement::build_in(
            CevianConfig::empty(),
            [
                Point2::from_ints(0, 0),
                Point2::from_ints(1, 1),
                Point2::from_ints(2, 2),
            ],
        );
        assert!(matches!(e, Err(Error::DegenerateTriangle)));
    }

    #[test]
    fn cevian_ids_partition_the_tail() {
        let arr = Arrangement::build(CevianConfig::equal_division(4).unwrap()).unwrap();
        let ids: Vec<usize> = Vertex::ALL
            .into_iter()
            .flat_map(|v| arr.cevian_ids(v).map(|id| id.0))
            .collect();
        assert_eq!(ids, (3..12).collect::<Vec<_>>());
        let label = arr.segment(SegmentId(7)).unwrap().label;
        assert_eq!(label.to_string(), "B1");
        assert_eq!(arr.id_of_label(label), Some(SegmentId(7)));
    }
}
