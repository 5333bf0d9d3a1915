//! Exact rational plane geometry.
//!
//! Every predicate here is a sign decision on an exact determinant; there is
//! no floating point on any decision path. Floats only appear in
//! [`random_generic_polygon`] to spread sample parameters before they are
//! snapped to a rational grid.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::Sub;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Retry budget used by the random generators unless overridden.
pub const DEFAULT_RETRY_BUDGET: usize = 1000;

/// Builds `num / den` in lowest terms. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2::new(rat(x, 1), rat(y, 1))
    }

    pub fn origin() -> Self {
        Point2::new(Rational::zero(), Rational::zero())
    }

    pub fn scale(&self, k: &Rational) -> Point2 {
        Point2::new(&self.x * k, &self.y * k)
    }

    pub fn neg(&self) -> Point2 {
        Point2::new(-&self.x, -&self.y)
    }

    pub fn add(&self, other: &Point2) -> Point2 {
        Point2::new(&self.x + &other.x, &self.y + &other.y)
    }

    /// Lossy conversion, for rendering only.
    pub fn to_f64(&self) -> (f64, f64) {
        (rational_to_f64(&self.x), rational_to_f64(&self.y))
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Sub for &Point2 {
    type Output = Point2;

    fn sub(self, rhs: &Point2) -> Point2 {
        Point2::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// z-component of `u × v`.
pub fn cross(u: &Point2, v: &Point2) -> Rational {
    &u.x * &v.y - &u.y * &v.x
}

pub fn dot(u: &Point2, v: &Point2) -> Rational {
    &u.x * &v.x + &u.y * &v.y
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }

    fn of(r: &Rational) -> Self {
        if r.is_positive() {
            Orientation::CounterClockwise
        } else if r.is_negative() {
            Orientation::Clockwise
        } else {
            Orientation::Collinear
        }
    }
}

/// Sign of `det(b - a, c - a)`.
pub fn orient(a: &Point2, b: &Point2, c: &Point2) -> Orientation {
    Orientation::of(&cross(&(b - a), &(c - a)))
}

/// Which half of the full turn a nonzero direction falls in: `0` for angles
/// in `[0, π)`, `1` for `[π, 2π)`.
fn half_turn_index(v: &Point2) -> u8 {
    if v.y.is_positive() || (v.y.is_zero() && v.x.is_positive()) {
        0
    } else {
        1
    }
}

/// Compares two nonzero directions by their anticlockwise angle in `[0, 2π)`.
pub fn cmp_direction(u: &Point2, v: &Point2) -> Ordering {
    half_turn_index(u).cmp(&half_turn_index(v)).then_with(|| Rational::zero().cmp(&cross(u, v)))
}

/// Compares two nonzero directions as undirected lines, by angle modulo a
/// half-turn in `[0, π)`.
pub fn cmp_line_direction(u: &Point2, v: &Point2) -> Ordering {
    let u = if half_turn_index(u) == 0 { u.clone() } else { u.neg() };
    let v = if half_turn_index(v) == 0 { v.clone() } else { v.neg() };
    Rational::zero().cmp(&cross(&u, &v))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub a: Point2,
    pub b: Point2,
}

impl Segment {
    pub fn new(a: Point2, b: Point2) -> Self {
        Segment { a, b }
    }
}

/// The crossing point of two segments whose open interiors cross
/// transversally. Touching at an endpoint, collinear overlap, and disjoint
/// segments all give `None`.
pub fn proper_intersection(s1: &Segment, s2: &Segment) -> Option<Point2> {
    let (a, b, c, d) = (&s1.a, &s1.b, &s2.a, &s2.b);
    let o1 = orient(a, b, c).sign() * orient(a, b, d).sign();
    let o2 = orient(c, d, a).sign() * orient(c, d, b).sign();
    if o1 >= 0 || o2 >= 0 {
        return None;
    }
    let ab = b - a;
    let cd = d - c;
    let t = cross(&(c - a), &cd) / cross(&ab, &cd);
    Some(a.add(&ab.scale(&t)))
}

/// True iff every cyclic consecutive triple turns strictly anticlockwise.
pub fn is_strictly_convex_acw(vertices: &[Point2]) -> bool {
    let n = vertices.len();
    n >= 3
        && (0..n).all(|k| {
            orient(&vertices[k], &vertices[(k + 1) % n], &vertices[(k + 2) % n]) == Orientation::CounterClockwise
        })
}

/// True iff `q` lies in the open interior of triangle `abc` (either
/// orientation), decided by three orientation signs.
pub fn strictly_inside_triangle(a: &Point2, b: &Point2, c: &Point2, q: &Point2) -> bool {
    let s1 = orient(a, b, q).sign();
    let s2 = orient(b, c, q).sign();
    let s3 = orient(c, a, q).sign();
    s1 != 0 && s1 == s2 && s2 == s3
}

/// A side or diagonal `P_i P_j` with 1-based labels `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chord {
    pub i: usize,
    pub j: usize,
}

impl Chord {
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "chord endpoints must differ");
        Chord { i: a.min(b), j: a.max(b) }
    }

    pub fn is_side(&self, n: usize) -> bool {
        self.j - self.i == 1 || (self.i == 1 && self.j == n)
    }

    pub fn shares_endpoint(&self, other: &Chord) -> bool {
        self.i == other.i || self.i == other.j || self.j == other.i || self.j == other.j
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}P{}", self.i, self.j)
    }
}

/// A strictly convex polygon `P_1 … P_n`, listed anticlockwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonSpec {
    vertices: Vec<Point2>,
}

impl PolygonSpec {
    /// Validates strict anticlockwise convexity. Genericity is a separate
    /// check, see [`is_generic`].
    pub fn new(vertices: Vec<Point2>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidPolygon(format!("need at least 3 vertices, got {}", vertices.len())));
        }
        if !is_strictly_convex_acw(&vertices) {
            return Err(Error::InvalidPolygon("vertices are not strictly convex in anticlockwise order".into()));
        }
        Ok(PolygonSpec { vertices })
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    /// Vertex `P_label`, 1-based.
    pub fn vertex(&self, label: usize) -> &Point2 {
        &self.vertices[label - 1]
    }

    pub fn chords(&self) -> impl Iterator<Item = Chord> + '_ {
        let n = self.n();
        (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| Chord { i, j }))
    }

    pub fn diagonals(&self) -> impl Iterator<Item = Chord> + '_ {
        let n = self.n();
        self.chords().filter(move |c| !c.is_side(n))
    }

    pub fn segment(&self, chord: Chord) -> Segment {
        Segment::new(self.vertex(chord.i).clone(), self.vertex(chord.j).clone())
    }
}

/// A proper crossing of two diagonals.
#[derive(Clone, Debug)]
pub struct Crossing {
    pub point: Point2,
    pub chords: (Chord, Chord),
}

/// All proper pairwise diagonal crossings, one entry per chord pair.
pub fn diagonal_crossings(poly: &PolygonSpec) -> Vec<Crossing> {
    let diagonals: Vec<Chord> = poly.diagonals().collect();
    let segments: Vec<Segment> = diagonals.iter().map(|&d| poly.segment(d)).collect();
    let mut out = Vec::new();
    for a in 0..diagonals.len() {
        for b in a + 1..diagonals.len() {
            if diagonals[a].shares_endpoint(&diagonals[b]) {
                continue;
            }
            if let Some(point) = proper_intersection(&segments[a], &segments[b]) {
                out.push(Crossing { point, chords: (diagonals[a], diagonals[b]) });
            }
        }
    }
    out
}

/// Groups crossings by point and returns the first point through which three
/// chords with an empty common index set pass, together with those chords.
pub fn find_concurrency(crossings: &[Crossing]) -> Option<(Point2, Vec<Chord>)> {
    let mut through: HashMap<&Point2, BTreeSet<Chord>> = HashMap::new();
    for c in crossings {
        let set = through.entry(&c.point).or_default();
        set.insert(c.chords.0);
        set.insert(c.chords.1);
    }
    let mut hits: Vec<(Point2, Vec<Chord>)> = through
        .into_iter()
        .filter_map(|(p, set)| {
            let chords: Vec<Chord> = set.into_iter().collect();
            has_index_disjoint_triple(&chords).then(|| (p.clone(), chords))
        })
        .collect();
    hits.sort();
    hits.into_iter().next()
}

fn has_index_disjoint_triple(chords: &[Chord]) -> bool {
    let k = chords.len();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                let common = [chords[a].i, chords[a].j]
                    .into_iter()
                    .filter(|&x| (x == chords[b].i || x == chords[b].j) && (x == chords[c].i || x == chords[c].j))
                    .count();
                if common == 0 {
                    return true;
                }
            }
        }
    }
    false
}

/// True iff no interior point lies on three chords whose index pairs have an
/// empty triple intersection.
pub fn is_generic(poly: &PolygonSpec) -> bool {
    find_concurrency(&diagonal_crossings(poly)).is_none()
}

/// The rational point `((1 - t²)/(1 + t²), 2t/(1 + t²))` on the unit circle.
pub fn circle_point(t: &Rational) -> Point2 {
    let one = Rational::one();
    let t2 = t * t;
    let den = &one + &t2;
    Point2::new((&one - &t2) / &den, (t + t) / &den)
}

/// Snaps `x` to the grid `k / den`.
pub fn snap(x: f64, den: i64) -> Rational {
    rat((x * den as f64).round() as i64, den)
}

pub const PARAM_GRID: i64 = 1 << 16;
pub const RADIUS_GRID: i64 = 1 << 20;

/// A generic polygon close to the regular `n`-gon: vertex `k` sits near angle
/// `2π(k - 1)/n` (offset by half a step so no parameter is at infinity), with
/// radius wobble of at most `1/4096`.
pub fn near_regular_polygon(n: usize, seed: u64) -> Result<PolygonSpec> {
    if n < 3 {
        return Err(Error::InvalidPolygon(format!("need at least 3 vertices, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let step = std::f64::consts::TAU / n as f64;
    let params: Vec<Rational> = (0..n)
        .map(|k| {
            let theta = -std::f64::consts::PI + step * (k as f64 + 0.5);
            snap((theta / 2.0).tan(), PARAM_GRID)
        })
        .collect();
    for _ in 0..DEFAULT_RETRY_BUDGET {
        let vertices: Vec<Point2> = params
            .iter()
            .map(|t| circle_point(t).scale(&rat(RADIUS_GRID + rng.gen_range(-256..=256), RADIUS_GRID)))
            .collect();
        if !is_strictly_convex_acw(&vertices) {
            continue;
        }
        let poly = PolygonSpec { vertices };
        if is_generic(&poly) {
            return Ok(poly);
        }
    }
    Err(Error::RetryBudgetExhausted(DEFAULT_RETRY_BUDGET))
}

/// A random strictly convex polygon with generic diagonals, deterministic in
/// `(n, seed)`. See [`random_generic_polygon_with_budget`].
pub fn random_generic_polygon(n: usize, seed: u64) -> Result<PolygonSpec> {
    random_generic_polygon_with_budget(n, seed, DEFAULT_RETRY_BUDGET)
}

/// Samples `n` sorted angles, maps them to rational points on the unit circle
/// through the tan-half-angle parametrization and scales each by its own
/// radius close to 1. Attempts that are not strictly convex or not generic
/// are discarded and resampled.
pub fn random_generic_polygon_with_budget(n: usize, seed: u64, budget: usize) -> Result<PolygonSpec> {
    if n < 3 {
        return Err(Error::InvalidPolygon(format!("need at least 3 vertices, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        let mut params: Vec<Rational> = (0..n)
            .map(|_| {
                // Stay clear of the antipode of (1, 0), where t blows up.
                let theta: f64 = rng.gen_range(-3.0..3.0);
                snap((theta / 2.0).tan(), PARAM_GRID)
            })
            .collect();
        params.sort();
        params.dedup();
        if params.len() != n {
            continue;
        }
        let vertices: Vec<Point2> = params
            .iter()
            .map(|t| {
                let radius = rat(RADIUS_GRID + rng.gen_range(-2048..=2048), RADIUS_GRID);
                circle_point(t).scale(&radius)
            })
            .collect();
        if !is_strictly_convex_acw(&vertices) {
            continue;
        }
        let poly = PolygonSpec { vertices };
        if is_generic(&poly) {
            return Ok(poly);
        }
    }
    Err(Error::RetryBudgetExhausted(budget))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point2 {
        Point2::from_ints(x, y)
    }

    #[test]
    fn orient_examples() {
        assert_eq!(orient(&p(0, 0), &p(1, 0), &p(0, 1)).sign(), 1);
        assert_eq!(orient(&p(0, 0), &p(1, 1), &p(2, 2)).sign(), 0);
        assert_eq!(orient(&p(0, 0), &p(0, 1), &p(1, 0)).sign(), -1);
    }

    #[test]
    fn intersection_examples() {
        let cross = proper_intersection(&Segment::new(p(0, 0), p(2, 2)), &Segment::new(p(0, 2), p(2, 0)));
        assert_eq!(cross, Some(p(1, 1)));
        assert!(proper_intersection(&Segment::new(p(0, 0), p(1, 0)), &Segment::new(p(0, 1), p(1, 1))).is_none());
        assert!(proper_intersection(&Segment::new(p(0, 0), p(1, 1)), &Segment::new(p(1, 1), p(2, 0))).is_none());
        // T-junction: an endpoint touching the other's interior is not proper.
        assert!(proper_intersection(&Segment::new(p(0, 0), p(2, 0)), &Segment::new(p(1, 0), p(1, 1))).is_none());
        // Collinear overlap.
        assert!(proper_intersection(&Segment::new(p(0, 0), p(2, 0)), &Segment::new(p(1, 0), p(3, 0))).is_none());
    }

    #[test]
    fn convexity_examples() {
        let square = vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)];
        assert!(is_strictly_convex_acw(&square));
        let mut cw = square.clone();
        cw.reverse();
        assert!(!is_strictly_convex_acw(&cw));
        assert!(!is_strictly_convex_acw(&[p(0, 0), p(1, 0), p(2, 0), p(0, 1)]));
        assert!(PolygonSpec::new(cw).is_err());
        assert!(PolygonSpec::new(vec![p(0, 0), p(1, 0)]).is_err());
    }

    #[test]
    fn chord_sides() {
        assert!(Chord::new(1, 2).is_side(5));
        assert!(Chord::new(5, 1).is_side(5));
        assert!(!Chord::new(1, 3).is_side(5));
        assert!(!Chord::new(2, 5).is_side(5));
    }

    #[test]
    fn quadrilateral_is_generic() {
        let poly = PolygonSpec::new(vec![p(0, 0), p(3, 0), p(4, 5), p(-1, 2)]).unwrap();
        assert!(is_generic(&poly));
        assert_eq!(diagonal_crossings(&poly).len(), 1);
    }

    /// Exact regular hexagon model: the unit-circle points at parameters
    /// t = tan(k·30°) are irrational, so use the affinely equivalent hexagon
    /// (±2, 0), (±1, ±1). Its three long diagonals still meet at the origin.
    #[test]
    fn affine_regular_hexagon_is_not_generic() {
        let hex = vec![p(2, 0), p(1, 1), p(-1, 1), p(-2, 0), p(-1, -1), p(1, -1)];
        let poly = PolygonSpec::new(hex).unwrap();
        let long: Vec<Segment> =
            [(1, 4), (2, 5), (3, 6)].iter().map(|&(i, j)| poly.segment(Chord::new(i, j))).collect();
        // Brute force: all three pairwise crossings coincide.
        let a = proper_intersection(&long[0], &long[1]).unwrap();
        let b = proper_intersection(&long[1], &long[2]).unwrap();
        let c = proper_intersection(&long[0], &long[2]).unwrap();
        assert_eq!(a, Point2::origin());
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert!(!is_generic(&poly));
        let (point, chords) = find_concurrency(&diagonal_crossings(&poly)).unwrap();
        assert_eq!(point, Point2::origin());
        assert_eq!(chords, vec![Chord::new(1, 4), Chord::new(2, 5), Chord::new(3, 6)]);
    }

    #[test]
    fn random_polygons() {
        let tri = random_generic_polygon(3, 11).unwrap();
        assert_eq!(tri.n(), 3);
        assert!(is_generic(&tri));
        for seed in 0..5 {
            let hex = random_generic_polygon(6, seed).unwrap();
            let crossings = diagonal_crossings(&hex);
            assert_eq!(crossings.len(), 15);
            let distinct: BTreeSet<&Point2> = crossings.iter().map(|c| &c.point).collect();
            assert_eq!(distinct.len(), 15);
        }
        assert_eq!(random_generic_polygon(8, 99).unwrap(), random_generic_polygon(8, 99).unwrap());
        assert_ne!(random_generic_polygon(8, 1).unwrap(), random_generic_polygon(8, 2).unwrap());
        assert!(random_generic_polygon(2, 0).is_err());
    }

    #[test]
    fn zero_budget_fails() {
        assert!(matches!(random_generic_polygon_with_budget(5, 0, 0), Err(Error::RetryBudgetExhausted(0))));
    }

    #[test]
    fn direction_order() {
        let dirs = [p(1, 0), p(1, 1), p(0, 1), p(-1, 1), p(-1, 0), p(-1, -1), p(0, -1), p(1, -1)];
        for a in 0..dirs.len() {
            for b in 0..dirs.len() {
                assert_eq!(cmp_direction(&dirs[a], &dirs[b]), a.cmp(&b));
                assert_eq!(cmp_line_direction(&dirs[a], &dirs[b]), (a % 4).cmp(&(b % 4)));
            }
        }
    }
}
