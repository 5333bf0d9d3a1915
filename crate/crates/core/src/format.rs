//! JSON encodings with exact rational coordinates.
//!
//! A vertex is written `[x_num, x_den, y_num, y_den]` with decimal strings in
//! lowest terms. Polygon files are `{"n": .., "vertices": [..]}`; any other
//! keys are ignored on input, so a region report can be read back as a
//! polygon.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::arrangements::PointArrangement;
use crate::error::{Error, Result};
use crate::exactgeom::{Point2, PolygonSpec, Rational};
use crate::regions::{region_count_formula, RegionInfo};

pub fn encode_point(p: &Point2) -> [String; 4] {
    [p.x.numer().to_string(), p.x.denom().to_string(), p.y.numer().to_string(), p.y.denom().to_string()]
}

fn parse_rational(num: &str, den: &str, at: &str) -> Result<Rational> {
    let num: BigInt = num.trim().parse().map_err(|_| Error::Parse(format!("{at}: bad numerator {num:?}")))?;
    let den: BigInt = den.trim().parse().map_err(|_| Error::Parse(format!("{at}: bad denominator {den:?}")))?;
    if den.is_zero() || den.is_negative() {
        return Err(Error::Parse(format!("{at}: denominator must be positive")));
    }
    let r = Rational::new(num.clone(), den.clone());
    if r.numer() != &num || r.denom() != &den {
        return Err(Error::Parse(format!("{at}: {num}/{den} is not in lowest terms")));
    }
    Ok(r)
}

pub fn decode_point(v: &[String; 4], at: &str) -> Result<Point2> {
    Ok(Point2::new(parse_rational(&v[0], &v[1], at)?, parse_rational(&v[2], &v[3], at)?))
}

#[derive(Deserialize)]
struct VertexFile {
    n: usize,
    vertices: Vec<[String; 4]>,
}

fn parse_vertex_file(text: &str) -> Result<Vec<Point2>> {
    let file: VertexFile = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
    if file.vertices.len() != file.n {
        return Err(Error::Parse(format!("n is {} but {} vertices are listed", file.n, file.vertices.len())));
    }
    file.vertices.iter().enumerate().map(|(k, v)| decode_point(v, &format!("vertex {}", k + 1))).collect()
}

pub fn polygon_to_json(poly: &PolygonSpec) -> Value {
    points_to_json(poly.vertices())
}

pub fn points_to_json(points: &[Point2]) -> Value {
    json!({ "n": points.len(), "vertices": points.iter().map(encode_point).collect::<Vec<_>>() })
}

/// Reads a polygon and checks convexity; genericity is left to the caller.
pub fn polygon_from_json(text: &str) -> Result<PolygonSpec> {
    PolygonSpec::new(parse_vertex_file(text)?)
}

pub fn arrangement_from_json(text: &str) -> Result<PointArrangement> {
    PointArrangement::new(parse_vertex_file(text)?)
}

#[derive(Serialize)]
struct RegionEntry {
    cycle: String,
    classification: String,
    evidence: String,
    sides: usize,
    representative: [String; 4],
}

/// The region report. It carries the polygon's vertices, so it doubles as a
/// polygon file.
pub fn region_report_json(poly: &PolygonSpec, regions: &[RegionInfo]) -> Value {
    let entries: Vec<RegionEntry> = regions
        .iter()
        .map(|r| RegionEntry {
            cycle: r.cycle.to_string(),
            classification: r.classification.verdict.to_string(),
            evidence: r.classification.to_string(),
            sides: r.side_count,
            representative: encode_point(&r.representative),
        })
        .collect();
    json!({
        "n": poly.n(),
        "region_count": regions.len(),
        "formula_count": region_count_formula(poly.n()),
        "vertices": poly.vertices().iter().map(encode_point).collect::<Vec<_>>(),
        "regions": entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::{random_generic_polygon, rat};

    #[test]
    fn polygon_round_trip() {
        let poly = random_generic_polygon(6, 3).unwrap();
        let text = polygon_to_json(&poly).to_string();
        assert_eq!(polygon_from_json(&text).unwrap(), poly);
    }

    #[test]
    fn negative_coordinates_encode_sign_in_numerator() {
        let p = Point2::new(rat(-3, 4), rat(6, 8));
        assert_eq!(encode_point(&p), ["-3", "4", "3", "4"].map(String::from));
    }

    #[test]
    fn rejects_unreduced_and_mismatched() {
        let bad = r#"{"n": 3, "vertices": [["0","1","0","1"],["2","2","0","1"],["0","1","1","1"]]}"#;
        assert!(matches!(polygon_from_json(bad), Err(Error::Parse(_))));
        let short = r#"{"n": 4, "vertices": [["0","1","0","1"],["1","1","0","1"],["0","1","1","1"]]}"#;
        assert!(matches!(polygon_from_json(short), Err(Error::Parse(_))));
        assert!(matches!(polygon_from_json("{"), Err(Error::Parse(_))));
    }
}
