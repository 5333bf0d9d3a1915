//! The subdivision of a convex polygon by all of its sides and diagonals.
//!
//! Every chord is split at its crossings with the other diagonals, the pieces
//! become twin half-edges, outgoing half-edges are sorted by exact angle
//! around each node, and faces are traced with `next = rotate_cw(twin)`.
//! Faces with positive signed area are the regions; the single clockwise face
//! is the outside.

use std::collections::{BTreeSet, HashMap};

use num_traits::{Signed, Zero};

use crate::arrangements::line_order;
use crate::cycles::{classify, contains_subcycle_ikj, is_two_standard, swap_adjacent, Classification, Cycle};
use crate::error::{Error, Result};
use crate::exactgeom::{
    cmp_direction, cross, diagonal_crossings, dot, find_concurrency, orient, strictly_inside_triangle, Chord,
    Orientation, Point2, PolygonSpec, Rational,
};

/// `(n - 1)(n - 2)(n² - 3n + 12) / 24`.
pub fn region_count_formula(n: usize) -> u64 {
    let n = n as u64;
    (n - 1) * (n - 2) * (n * n - 3 * n + 12) / 24
}

#[derive(Clone, Debug)]
pub struct HalfEdge {
    pub origin: usize,
    pub twin: usize,
    pub next: usize,
    pub face: usize,
    /// The side or diagonal this piece lies on.
    pub chord: Chord,
}

#[derive(Clone, Debug)]
pub struct Face {
    /// Half-edges in boundary order (anticlockwise for bounded faces).
    pub half_edges: Vec<usize>,
    pub bounded: bool,
}

#[derive(Clone, Debug)]
pub struct ChordArrangement {
    n: usize,
    /// Polygon vertices first (node `k` is `P_{k+1}`), then crossings.
    pub nodes: Vec<Point2>,
    pub half_edges: Vec<HalfEdge>,
    pub faces: Vec<Face>,
}

impl ChordArrangement {
    pub fn polygon_size(&self) -> usize {
        self.n
    }

    pub fn crossing_count(&self) -> usize {
        self.nodes.len() - self.n
    }

    pub fn edge_count(&self) -> usize {
        self.half_edges.len() / 2
    }

    pub fn degree(&self, node: usize) -> usize {
        self.half_edges.iter().filter(|h| h.origin == node).count()
    }

    pub fn bounded_faces(&self) -> impl Iterator<Item = (usize, &Face)> {
        self.faces.iter().enumerate().filter(|(_, f)| f.bounded)
    }

    pub fn bounded_face_count(&self) -> usize {
        self.bounded_faces().count()
    }

    /// Corner points of a face in boundary order.
    pub fn face_corners(&self, face: usize) -> Vec<Point2> {
        self.faces[face].half_edges.iter().map(|&h| self.nodes[self.half_edges[h].origin].clone()).collect()
    }

    /// `V - E + F` over all faces, including the outer one.
    pub fn euler_characteristic(&self) -> i64 {
        self.nodes.len() as i64 - self.edge_count() as i64 + self.faces.len() as i64
    }
}

fn signed_area2(points: &[Point2]) -> Rational {
    let k = points.len();
    (0..k).fold(Rational::zero(), |acc, a| acc + cross(&points[a], &points[(a + 1) % k]))
}

/// Builds the half-edge structure of the polygon's chord arrangement.
/// Fails with [`Error::NonGeneric`] when three diagonals meet at one point.
pub fn build_arrangement(poly: &PolygonSpec) -> Result<ChordArrangement> {
    let n = poly.n();
    let crossings = diagonal_crossings(poly);

    let mut nodes: Vec<Point2> = poly.vertices().to_vec();
    let mut node_of: HashMap<Point2, usize> = HashMap::new();
    let mut on_chord: HashMap<Chord, Vec<usize>> = poly.chords().map(|c| (c, vec![c.i - 1, c.j - 1])).collect();
    for crossing in &crossings {
        if node_of.contains_key(&crossing.point) {
            let detail = match find_concurrency(&crossings) {
                Some((p, chords)) => {
                    let names: Vec<String> = chords.iter().map(|c| c.to_string()).collect();
                    format!("{} meet at {p}", names.join(", "))
                }
                None => format!("repeated crossing at {}", crossing.point),
            };
            return Err(Error::NonGeneric(detail));
        }
        let id = nodes.len();
        nodes.push(crossing.point.clone());
        node_of.insert(crossing.point.clone(), id);
        on_chord.get_mut(&crossing.chords.0).unwrap().push(id);
        on_chord.get_mut(&crossing.chords.1).unwrap().push(id);
    }

    let mut half_edges: Vec<HalfEdge> = Vec::new();
    let mut chords: Vec<Chord> = on_chord.keys().copied().collect();
    chords.sort();
    for chord in chords {
        let mut ids = on_chord.remove(&chord).unwrap();
        let a = poly.vertex(chord.i).clone();
        let dir = poly.vertex(chord.j) - &a;
        ids.sort_by_cached_key(|&id| dot(&(&nodes[id] - &a), &dir));
        for pair in ids.windows(2) {
            let h = half_edges.len();
            half_edges.push(HalfEdge { origin: pair[0], twin: h + 1, next: usize::MAX, face: usize::MAX, chord });
            half_edges.push(HalfEdge { origin: pair[1], twin: h, next: usize::MAX, face: usize::MAX, chord });
        }
    }

    // Outgoing half-edges around every node, anticlockwise.
    let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
    for (h, he) in half_edges.iter().enumerate() {
        outgoing[he.origin].push(h);
    }
    let target = |h: usize| half_edges[half_edges[h].twin].origin;
    let mut slot = vec![0; half_edges.len()];
    for (node, out) in outgoing.iter_mut().enumerate() {
        out.sort_by(|&a, &b| cmp_direction(&(&nodes[target(a)] - &nodes[node]), &(&nodes[target(b)] - &nodes[node])));
        for (k, &h) in out.iter().enumerate() {
            slot[h] = k;
        }
    }
    for h in 0..half_edges.len() {
        let twin = half_edges[h].twin;
        let around = &outgoing[half_edges[twin].origin];
        half_edges[h].next = around[(slot[twin] + around.len() - 1) % around.len()];
    }

    let mut faces = Vec::new();
    for start in 0..half_edges.len() {
        if half_edges[start].face != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut boundary = Vec::new();
        let mut h = start;
        loop {
            half_edges[h].face = id;
            boundary.push(h);
            h = half_edges[h].next;
            if h == start {
                break;
            }
        }
        let corners: Vec<Point2> = boundary.iter().map(|&h| nodes[half_edges[h].origin].clone()).collect();
        faces.push(Face { half_edges: boundary, bounded: signed_area2(&corners).is_positive() });
    }

    Ok(ChordArrangement { n, nodes, half_edges, faces })
}

/// The line cycle of an interior point `q` with respect to the polygon
/// vertices, as a cycle starting at 1.
pub fn line_cycle_of_point(poly: &PolygonSpec, q: &Point2) -> Cycle {
    let labels = line_order(q, poly.vertices().iter().enumerate().map(|(k, p)| (k + 1, p)));
    Cycle::new(&labels).expect("line order is a permutation")
}

#[derive(Clone, Debug)]
pub struct RegionInfo {
    pub face_id: usize,
    /// Vertex centroid of the face; strictly inside because faces are convex.
    pub representative: Point2,
    pub corners: Vec<Point2>,
    pub cycle: Cycle,
    pub classification: Classification,
    pub side_count: usize,
}

fn centroid(points: &[Point2]) -> Point2 {
    let k = Rational::from_integer((points.len() as i64).into());
    let sx = points.iter().fold(Rational::zero(), |acc, p| acc + &p.x);
    let sy = points.iter().fold(Rational::zero(), |acc, p| acc + &p.y);
    Point2::new(sx / &k, sy / k)
}

/// One entry per bounded face of an already built arrangement, sorted by
/// cycle.
pub fn regions_of(arr: &ChordArrangement, poly: &PolygonSpec) -> Result<Vec<RegionInfo>> {
    let mut out = Vec::with_capacity(arr.bounded_face_count());
    for (face_id, face) in arr.bounded_faces() {
        let corners = arr.face_corners(face_id);
        let representative = centroid(&corners);
        let cycle = line_cycle_of_point(poly, &representative);
        let classification = classify(&cycle)?;
        out.push(RegionInfo {
            face_id,
            representative,
            corners,
            cycle,
            classification,
            side_count: face.half_edges.len(),
        });
    }
    out.sort_by(|a, b| a.cycle.cmp(&b.cycle));
    Ok(out)
}

pub fn enumerate_regions(poly: &PolygonSpec) -> Result<Vec<RegionInfo>> {
    regions_of(&build_arrangement(poly)?, poly)
}

pub fn occurring_cycles(poly: &PolygonSpec) -> Result<BTreeSet<Cycle>> {
    Ok(enumerate_regions(poly)?.into_iter().map(|r| r.cycle).collect())
}

/// The region whose open interior contains `q`, if any.
pub fn region_containing<'a>(regions: &'a [RegionInfo], q: &Point2) -> Option<&'a RegionInfo> {
    regions.iter().find(|r| {
        let k = r.corners.len();
        (0..k).all(|a| orient(&r.corners[a], &r.corners[(a + 1) % k], q) == Orientation::CounterClockwise)
    })
}

/// Across every interior edge on chord `P_iP_j`, the two faces' cycles have
/// `i` and `j` adjacent and differ by swapping them.
pub fn neighbor_swap_check(arr: &ChordArrangement, regions: &[RegionInfo]) -> bool {
    let by_face: HashMap<usize, &Cycle> = regions.iter().map(|r| (r.face_id, &r.cycle)).collect();
    arr.half_edges.iter().all(|he| {
        let twin = &arr.half_edges[he.twin];
        let (Some(left), Some(right)) = (by_face.get(&he.face), by_face.get(&twin.face)) else {
            return true;
        };
        let (i, j) = (he.chord.i, he.chord.j);
        left.are_adjacent(i, j)
            && right.are_adjacent(i, j)
            && swap_adjacent(left, i, j).map(|c| c == **right).unwrap_or(false)
    })
}

/// For every region and every triple `i < j < k`: the representative lies
/// inside triangle `P_iP_jP_k` (orientation signs) iff the cycle contains
/// `(i k j)`.
pub fn triangle_containment_coherent(poly: &PolygonSpec, regions: &[RegionInfo]) -> bool {
    let n = poly.n();
    regions.iter().all(|r| {
        (1..=n).all(|i| {
            (i + 1..=n).all(|j| {
                (j + 1..=n).all(|k| {
                    let inside =
                        strictly_inside_triangle(poly.vertex(i), poly.vertex(j), poly.vertex(k), &r.representative);
                    inside == contains_subcycle_ikj(&r.cycle, i, j, k)
                })
            })
        })
    })
}

/// Every region cycle is two-standard and no two regions share a cycle.
pub fn cycles_distinct_and_two_standard(regions: &[RegionInfo]) -> bool {
    let distinct: BTreeSet<&Cycle> = regions.iter().map(|r| &r.cycle).collect();
    distinct.len() == regions.len() && regions.iter().all(|r| is_two_standard(&r.cycle))
}
