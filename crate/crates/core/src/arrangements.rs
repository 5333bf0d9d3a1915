//! Labelled point arrangements: line cycles, point cycles, convex-hull
//! membership and isomorphism search.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactgeom::{cmp_direction, cmp_line_direction, orient, Orientation, Point2};

/// Default upper bound on `n` for the permutation search.
pub const DEFAULT_ISO_BOUND: usize = 8;

/// Labelled points `P_1 … P_n`, no three collinear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointArrangement {
    points: Vec<Point2>,
}

impl PointArrangement {
    pub fn new(points: Vec<Point2>) -> Result<Self> {
        let n = points.len();
        if n < 3 {
            return Err(Error::InvalidArrangement(format!("need at least 3 points, got {n}")));
        }
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if orient(&points[a], &points[b], &points[c]) == Orientation::Collinear {
                        return Err(Error::InvalidArrangement(format!(
                            "points {}, {}, {} are collinear",
                            a + 1,
                            b + 1,
                            c + 1
                        )));
                    }
                }
            }
        }
        Ok(PointArrangement { points })
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    pub fn point(&self, label: usize) -> &Point2 {
        &self.points[label - 1]
    }

    /// Applies `f` to every point; the result must still be in general
    /// position.
    pub fn map_points(&self, f: impl Fn(&Point2) -> Point2) -> Result<Self> {
        PointArrangement::new(self.points.iter().map(f).collect())
    }
}

/// A cyclic order of labels around an anchor, rotated so the smallest label
/// comes first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LabelCycle {
    pub anchor: usize,
    pub labels: Vec<usize>,
}

impl LabelCycle {
    pub fn new(anchor: usize, mut labels: Vec<usize>) -> Self {
        if let Some(start) = labels.iter().enumerate().min_by_key(|(_, &v)| v).map(|(i, _)| i) {
            labels.rotate_left(start);
        }
        LabelCycle { anchor, labels }
    }

    /// The inverse cycle: same labels, opposite traversal.
    pub fn reversed(&self) -> LabelCycle {
        let mut labels = self.labels.clone();
        labels.reverse();
        LabelCycle::new(self.anchor, labels)
    }

    /// Conjugation `π σ π⁻¹`: every label `k` (and the anchor) becomes
    /// `perm[k]`.
    pub fn relabel(&self, perm: &[usize]) -> LabelCycle {
        LabelCycle::new(perm[self.anchor], self.labels.iter().map(|&k| perm[k]).collect())
    }
}

impl fmt::Display for LabelCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(" "))
    }
}

/// Orders labelled points around `center` with `cmp`, anticlockwise.
fn cyclic_order<'a>(
    center: &Point2,
    others: impl Iterator<Item = (usize, &'a Point2)>,
    cmp: fn(&Point2, &Point2) -> Ordering,
) -> Vec<usize> {
    let mut dirs: Vec<(usize, Point2)> = others.map(|(label, p)| (label, p - center)).collect();
    dirs.sort_by(|a, b| cmp(&a.1, &b.1));
    dirs.into_iter().map(|(label, _)| label).collect()
}

/// Anticlockwise order in which the lines through `center` and each point
/// are met (directions taken modulo a half-turn).
pub fn line_order<'a>(center: &Point2, others: impl Iterator<Item = (usize, &'a Point2)>) -> Vec<usize> {
    cyclic_order(center, others, cmp_line_direction)
}

/// Anticlockwise order of the rays from `center` to each point.
pub fn ray_order<'a>(center: &Point2, others: impl Iterator<Item = (usize, &'a Point2)>) -> Vec<usize> {
    cyclic_order(center, others, cmp_direction)
}

fn others(arr: &PointArrangement, i: usize) -> impl Iterator<Item = (usize, &Point2)> {
    arr.points.iter().enumerate().map(|(k, p)| (k + 1, p)).filter(move |&(k, _)| k != i)
}

pub fn line_cycle_at(arr: &PointArrangement, i: usize) -> LabelCycle {
    LabelCycle::new(i, line_order(arr.point(i), others(arr, i)))
}

pub fn point_cycle_at(arr: &PointArrangement, i: usize) -> LabelCycle {
    LabelCycle::new(i, ray_order(arr.point(i), others(arr, i)))
}

pub fn line_cycles(arr: &PointArrangement) -> Vec<LabelCycle> {
    (1..=arr.n()).map(|i| line_cycle_at(arr, i)).collect()
}

pub fn point_cycles(arr: &PointArrangement) -> Vec<LabelCycle> {
    (1..=arr.n()).map(|i| point_cycle_at(arr, i)).collect()
}

/// A point is on the hull boundary iff its line and point cycles agree.
pub fn on_hull_boundary(arr: &PointArrangement, i: usize) -> bool {
    line_cycle_at(arr, i) == point_cycle_at(arr, i)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IsoKind {
    Preserving,
    Reversing,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoResult {
    pub kind: IsoKind,
    /// `permutation[i - 1] = π(i)`.
    pub permutation: Option<Vec<usize>>,
}

impl fmt::Display for IsoResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.kind, &self.permutation) {
            (IsoKind::None, _) | (_, None) => f.write_str("none"),
            (kind, Some(p)) => {
                let parts: Vec<String> = p.iter().map(|v| v.to_string()).collect();
                let name = if *kind == IsoKind::Preserving { "preserving" } else { "reversing" };
                write!(f, "{name} pi={}", parts.join(","))
            }
        }
    }
}

/// Checks `σ²_{π(i)} = π σ¹_i π⁻¹` for every `i` (or the same against the
/// inverses of `σ²` when `reversed`). `perm` is 1-based with `perm[0]`
/// unused.
pub fn conjugation_holds(first: &[LabelCycle], second: &[LabelCycle], perm: &[usize], reversed: bool) -> bool {
    first.iter().all(|sigma| {
        let image = sigma.relabel(perm);
        let target = &second[perm[sigma.anchor] - 1];
        if reversed {
            image == target.reversed()
        } else {
            image == *target
        }
    })
}

/// Rearranges `p` into the next permutation in lexicographic order.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Searches permutations in lexicographic order, identity first; for each
/// one the preserving condition is tried before the reversing one.
pub fn find_isomorphism(a1: &PointArrangement, a2: &PointArrangement) -> Result<IsoResult> {
    find_isomorphism_with_bound(a1, a2, DEFAULT_ISO_BOUND)
}

pub fn find_isomorphism_with_bound(a1: &PointArrangement, a2: &PointArrangement, bound: usize) -> Result<IsoResult> {
    if a1.n() != a2.n() {
        return Err(Error::SizeMismatch(a1.n(), a2.n()));
    }
    let n = a1.n();
    if n > bound {
        return Err(Error::TooLarge { n, bound });
    }
    let first = line_cycles(a1);
    let second = line_cycles(a2);
    let mut perm: Vec<usize> = (0..=n).collect();
    loop {
        for (reversed, kind) in [(false, IsoKind::Preserving), (true, IsoKind::Reversing)] {
            if conjugation_holds(&first, &second, &perm, reversed) {
                return Ok(IsoResult { kind, permutation: Some(perm[1..].to_vec()) });
            }
        }
        if !next_permutation(&mut perm[1..]) {
            return Ok(IsoResult { kind: IsoKind::None, permutation: None });
        }
    }
}

/// The definition of isomorphism checked directly: for every four labels,
/// one lies inside the triangle of the other three in `a1` iff the same holds
/// for their images in `a2`.
pub fn preserves_triangle_incidence(a1: &PointArrangement, a2: &PointArrangement, perm: &[usize]) -> bool {
    use crate::exactgeom::strictly_inside_triangle as inside;
    let n = a1.n();
    let p = |arr: &PointArrangement, k: usize| arr.point(k).clone();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for d in 1..=n {
                    if d == a || d == b || d == c {
                        continue;
                    }
                    let before = inside(&p(a1, a), &p(a1, b), &p(a1, c), &p(a1, d));
                    let after = inside(&p(a2, perm[a]), &p(a2, perm[b]), &p(a2, perm[c]), &p(a2, perm[d]));
                    if before != after {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Whether `q` is inside triangle `abc`, read off the cycles of `q` in the
/// four-point arrangement. With the triangle labelled anticlockwise as 1, 2,
/// 3, the point is inside iff its line cycle is `(1 3 2)` and differs from
/// its point cycle. The line cycle alone is not enough: it is also `(1 3 2)`
/// when `q` is outside and vertex 1 lies inside triangle `q 2 3`.
pub fn point_in_triangle_via_cycle(q: &Point2, a: &Point2, b: &Point2, c: &Point2) -> Result<bool> {
    let arr = PointArrangement::new(vec![a.clone(), b.clone(), c.clone(), q.clone()])?;
    let (p2, p3) = match orient(a, b, c) {
        Orientation::CounterClockwise => (2, 3),
        _ => (3, 2),
    };
    let cycle = line_cycle_at(&arr, 4);
    Ok(cycle.labels == [1, p3, p2] && cycle != point_cycle_at(&arr, 4))
}

/// A pair of four-point arrangements whose point cycles agree label by label
/// although the identity map is not an isomorphism.
#[derive(Clone, Debug)]
pub struct PointCycleImpostor {
    pub first: PointArrangement,
    pub second: PointArrangement,
}

/// Exhausts four-point configurations on the integer grid `0..=size` and
/// returns the first pair (in enumeration order) with identical point cycles
/// at every label but different interior-of-triangle incidences.
pub fn search_point_cycle_impostor(size: i64) -> Option<PointCycleImpostor> {
    use std::collections::HashMap;
    let grid: Vec<Point2> = (0..=size).flat_map(|x| (0..=size).map(move |y| Point2::from_ints(x, y))).collect();
    let m = grid.len();
    let identity: Vec<usize> = (0..=4).collect();
    let mut seen: HashMap<Vec<LabelCycle>, Vec<PointArrangement>> = HashMap::new();
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                for d in 0..m {
                    let pts = vec![grid[a].clone(), grid[b].clone(), grid[c].clone(), grid[d].clone()];
                    let Ok(arr) = PointArrangement::new(pts) else { continue };
                    let key = point_cycles(&arr);
                    let bucket = seen.entry(key).or_default();
                    if let Some(other) = bucket.iter().find(|o| !preserves_triangle_incidence(o, &arr, &identity)) {
                        return Some(PointCycleImpostor { first: other.clone(), second: arr });
                    }
                    // Every stored arrangement now shares this incidence class.
                    if bucket.is_empty() {
                        bucket.push(arr);
                    }
                }
            }
        }
    }
    None
}
