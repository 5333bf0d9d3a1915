//! SVG rendering of a polygon, its chords and its regions.

use std::fmt::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cycles::{Cycle, Verdict};
use crate::exactgeom::{Point2, PolygonSpec, Rational};
use crate::regions::RegionInfo;

const VIEW: i64 = 1000;
const MARGIN: i64 = 50;
const DEFINITE_FILL: &str = "#cfe3f7";
const INDEFINITE_FILL: &str = "#f7d4cf";
const HIGHLIGHT_FILL: &str = "#f2c14e";

/// `r` rounded half away from zero to eight decimals.
pub fn decimal8(r: &Rational) -> String {
    let scale = BigInt::from(10u64.pow(8));
    let scaled = r * Rational::from_integer(scale.clone());
    let two = BigInt::from(2);
    let twice = scaled.numer() * &two;
    let den = scaled.denom() * &two;
    // floor((2|x| + 1) / 2) on the magnitude
    let (q, _) = (twice.abs() + scaled.denom()).div_rem(&den);
    let neg = r.is_negative() && !q.is_zero();
    let (int, frac) = q.div_rem(&scale);
    format!("{}{}.{:0>8}", if neg { "-" } else { "" }, int, frac.to_string())
}

/// Maps polygon coordinates into the viewBox, keeping the aspect ratio and
/// flipping y.
struct Frame {
    min_x: Rational,
    max_y: Rational,
    scale: Rational,
}

impl Frame {
    fn fit(points: &[Point2]) -> Frame {
        let min_x = points.iter().map(|p| p.x.clone()).min().unwrap();
        let max_x = points.iter().map(|p| p.x.clone()).max().unwrap();
        let min_y = points.iter().map(|p| p.y.clone()).min().unwrap();
        let max_y = points.iter().map(|p| p.y.clone()).max().unwrap();
        let span = (&max_x - &min_x).max(&max_y - &min_y);
        let span = if span.is_zero() { Rational::one() } else { span };
        Frame { min_x, max_y, scale: Rational::from_integer((VIEW - 2 * MARGIN).into()) / span }
    }

    fn map(&self, p: &Point2) -> (String, String) {
        let m = Rational::from_integer(MARGIN.into());
        let x = (&p.x - &self.min_x) * &self.scale + &m;
        let y = (&self.max_y - &p.y) * &self.scale + &m;
        (decimal8(&x), decimal8(&y))
    }

    fn path(&self, points: &[Point2]) -> String {
        points
            .iter()
            .map(|p| {
                let (x, y) = self.map(p);
                format!("{x},{y}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Regions filled by verdict (or highlighted when their cycle is `highlight`),
/// all chords, the outline, vertex labels and optionally cycle labels.
pub fn render(poly: &PolygonSpec, regions: &[RegionInfo], cycle_labels: bool, highlight: Option<&Cycle>) -> String {
    let frame = Frame::fit(poly.vertices());
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {VIEW} {VIEW}" width="{VIEW}" height="{VIEW}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="{VIEW}" height="{VIEW}" fill="white"/>"#).unwrap();
    for r in regions {
        let fill = if highlight == Some(&r.cycle) {
            HIGHLIGHT_FILL
        } else if r.classification.verdict == Verdict::Definite {
            DEFINITE_FILL
        } else {
            INDEFINITE_FILL
        };
        writeln!(
            out,
            r#"<polygon points="{}" fill="{fill}" stroke="none"><title>{}</title></polygon>"#,
            frame.path(&r.corners),
            r.cycle
        )
        .unwrap();
    }
    for chord in poly.diagonals() {
        let (x1, y1) = frame.map(poly.vertex(chord.i));
        let (x2, y2) = frame.map(poly.vertex(chord.j));
        writeln!(out, r##"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#555" stroke-width="1"/>"##).unwrap();
    }
    writeln!(out, r#"<polygon points="{}" fill="none" stroke="black" stroke-width="2"/>"#, frame.path(poly.vertices()))
        .unwrap();
    for (k, v) in poly.vertices().iter().enumerate() {
        let (x, y) = frame.map(v);
        writeln!(out, r#"<text x="{x}" y="{y}" font-size="18" fill="black">{}</text>"#, k + 1).unwrap();
    }
    if cycle_labels {
        for r in regions {
            let (x, y) = frame.map(&r.representative);
            writeln!(
                out,
                r#"<text x="{x}" y="{y}" font-size="7" text-anchor="middle" fill="black">{}</text>"#,
                r.cycle.compact()
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}
