//! Deterministic SVG rendering.
//!
//! The reference triangle maps to a fixed 1000x1000 viewport as a right
//! isoceles triangle. Coordinates stay exact rationals through the viewport
//! transform and are only converted to decimals (6 places, ties away from
//! zero) at write time, so identical inputs always produce byte-identical
//! files. Nothing rendered here ever feeds back into counting.

use std::fmt::Write as _;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Signed;

use cevian_core::geom::{rational, segment_intersection};
use cevian_core::oracle::{self, OracleOptions};
use cevian_core::{Arrangement, Point2, Rational, SegmentId, SegmentLabel};

use crate::commands::CliError;

const SIDE_STROKE: &str = "#1f2937";
const CEVIAN_STROKE: &str = "#2563eb";
const POINT_FILL: &str = "#dc2626";
const SHADE_FILL: &str = "#fde047";
const HIGHLIGHT_STROKE: &str = "#b45309";

/// What to emphasize in the figure.
pub enum Highlight {
    None,
    /// One shaded sub-figure per counted triangle, in a grid.
    AllTriangles,
    /// Shade the triangle bounded by three named segments.
    Triple([SegmentId; 3]),
}

impl Highlight {
    pub fn parse(text: &str, arr: &Arrangement) -> Result<Self, CliError> {
        match text {
            "none" => Ok(Highlight::None),
            "all-triangles" => Ok(Highlight::AllTriangles),
            other => {
                let list = other
                    .strip_prefix("triple:")
                    .or_else(|| other.strip_prefix("triple="))
                    .ok_or_else(|| {
                        CliError::Validation(format!(
                            "--highlight must be none, all-triangles, or \
                             triple:<seg>,<seg>,<seg>; got {other:?}"
                        ))
                    })?;
                let parts: Vec<&str> = list.split(',').map(str::trim).collect();
                if parts.len() != 3 {
                    return Err(CliError::Validation(format!(
                        "triple highlight needs exactly 3 segments, got {}",
                        parts.len()
                    )));
                }
                let mut ids = [SegmentId(0); 3];
                for (slot, token) in ids.iter_mut().zip(parts) {
                    *slot = resolve_segment(arr, token)?;
                }
                Ok(Highlight::Triple(ids))
            }
        }
    }
}

/// A segment named either by numeric id or by label (AB, BC, CA, A0, ...).
fn resolve_segment(arr: &Arrangement, token: &str) -> Result<SegmentId, CliError> {
    if let Ok(index) = token.parse::<usize>() {
        return if index < arr.segment_count() {
            Ok(SegmentId(index))
        } else {
            Err(CliError::Validation(format!(
                "segment id {index} out of range; the arrangement has {} segments",
                arr.segment_count()
            )))
        };
    }
    let label: SegmentLabel = token.parse()?;
    arr.id_of_label(label).ok_or_else(|| {
        CliError::Validation(format!("no segment {token} in this arrangement"))
    })
}

pub fn render(arr: &Arrangement, highlight: &Highlight, limit: usize) -> Result<String, CliError> {
    match highlight {
        Highlight::None => Ok(render_single(arr, None)),
        Highlight::Triple(ids) => {
            let corners = triple_corners(arr, *ids)?;
            Ok(render_single(arr, Some((*ids, corners))))
        }
        Highlight::AllTriangles => render_grid(arr, limit),
    }
}

/// Viewport placement: rational-in, rational-out.
struct Frame {
    origin_x: Rational,
    origin_y: Rational,
    scale: Rational,
}

impl Frame {
    fn map(&self, p: &Point2) -> (Rational, Rational) {
        (
            &self.origin_x + &p.x * &self.scale,
            &self.origin_y - &p.y * &self.scale,
        )
    }
}

/// Fixed-point decimal with 6 places, rounding ties away from zero.
fn dec6(r: &Rational) -> String {
    let scaled = (r * BigRational::from_integer(BigInt::from(1_000_000))).round();
    let v = scaled.to_integer();
    let sign = if v.is_negative() { "-" } else { "" };
    let abs = v.magnitude();
    let int = abs / 1_000_000u32;
    let frac = abs % 1_000_000u32;
    format!("{sign}{int}.{frac:06}")
}

fn svg_open(out: &mut String) {
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" \
         viewBox=\"0 0 1000 1000\">\n",
    );
    out.push_str("<rect width=\"1000\" height=\"1000\" fill=\"#ffffff\"/>\n");
}

fn line_element(out: &mut String, frame: &Frame, arr: &Arrangement, id: usize, stroke: &str, width: &str) {
    let seg = &arr.segments()[id];
    let (x1, y1) = frame.map(&seg.start);
    let (x2, y2) = frame.map(&seg.end);
    writeln!(
        out,
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{stroke}\" stroke-width=\"{width}\"/>",
        dec6(&x1),
        dec6(&y1),
        dec6(&x2),
        dec6(&y2)
    )
    .expect("writing to String cannot fail");
}

fn polygon_element(out: &mut String, frame: &Frame, corners: &[Point2; 3]) {
    let points = corners
        .iter()
        .map(|p| {
            let (x, y) = frame.map(p);
            format!("{},{}", dec6(&x), dec6(&y))
        })
        .collect::<Vec<_>>()
        .join(" ");
    writeln!(
        out,
        "<polygon points=\"{points}\" fill=\"{SHADE_FILL}\" fill-opacity=\"0.75\"/>"
    )
    .expect("writing to String cannot fail");
}

fn draw_arrangement(
    out: &mut String,
    frame: &Frame,
    arr: &Arrangement,
    emphasized: Option<[SegmentId; 3]>,
    base_width: &str,
    emphasis_width: &str,
) {
    for id in 0..arr.segment_count() {
        let emphasized_here = emphasized.is_some_and(|ids| ids.contains(&SegmentId(id)));
        let (stroke, width) = if emphasized_here {
            (HIGHLIGHT_STROKE, emphasis_width)
        } else if id < 3 {
            (SIDE_STROKE, base_width)
        } else {
            (CEVIAN_STROKE, base_width)
        };
        line_element(out, frame, arr, id, stroke, width);
    }
}

/// The three pairwise intersection corners of a triangle-bounding triple.
fn triple_corners(arr: &Arrangement, ids: [SegmentId; 3]) -> Result<[Point2; 3], CliError> {
    let class = oracle::classify_triple(arr, ids)?;
    if class != cevian_core::TripleClass::Triangle {
        return Err(CliError::Validation(format!(
            "segments {}, {}, {} do not bound a triangle (classified {:?})",
            ids[0], ids[1], ids[2], class
        )));
    }
    let meet = |a: SegmentId, b: SegmentId| -> Point2 {
        segment_intersection(&arr.segments()[a.0], &arr.segments()[b.0])
            .expect("valid arrangements have no overlaps")
            .expect("every pair of segments intersects")
    };
    Ok([
        meet(ids[0], ids[1]),
        meet(ids[0], ids[2]),
        meet(ids[1], ids[2]),
    ])
}

fn render_single(arr: &Arrangement, shaded: Option<([SegmentId; 3], [Point2; 3])>) -> String {
    let frame = Frame {
        origin_x: rational(60, 1),
        origin_y: rational(940, 1),
        scale: rational(880, 1),
    };
    let mut out = String::new();
    svg_open(&mut out);
    if let Some((_, corners)) = &shaded {
        polygon_element(&mut out, &frame, corners);
    }
    draw_arrangement(
        &mut out,
        &frame,
        arr,
        shaded.as_ref().map(|(ids, _)| *ids),
        "2",
        "3",
    );
    for point in arr.concurrency_points() {
        let (cx, cy) = frame.map(&point.location);
        writeln!(
            out,
            "<circle cx=\"{}\" cy=\"{}\" r=\"6\" fill=\"{POINT_FILL}\"/>",
            dec6(&cx),
            dec6(&cy)
        )
        .expect("writing to String cannot fail");
    }
    out.push_str("</svg>\n");
    out
}

fn render_grid(arr: &Arrangement, limit: usize) -> Result<String, CliError> {
    let opts = OracleOptions {
        segment_limit: limit,
        collect_triples: true,
    };
    let report = oracle::enumerate_triangles_with(arr, opts)?;
    let triples = report.triples.expect("collect_triples was requested");

    let cols = ceil_sqrt(triples.len().max(1));
    let cell = rational(1000, 1) / rational(cols as i64, 1);
    let inner = &cell * rational(2, 25); // 8% margin inside each cell

    let mut out = String::new();
    svg_open(&mut out);
    for (index, ids) in triples.iter().enumerate() {
        let corners = triple_corners(arr, *ids)?;
        let col = (index % cols) as i64;
        let row = (index / cols) as i64;
        let frame = Frame {
            origin_x: &cell * rational(col, 1) + &inner,
            origin_y: &cell * rational(row + 1, 1) - &inner,
            scale: &cell - rational(2, 1) * &inner,
        };
        polygon_element(&mut out, &frame, &corners);
        draw_arrangement(&mut out, &frame, arr, Some(*ids), "1", "1.5");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn ceil_sqrt(n: usize) -> usize {
    let mut c = 1;
    while c * c < n {
        c += 1;
    }
    c
}
