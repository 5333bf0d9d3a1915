//! Oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use diagcycles::arrangements::PointArrangement;
use diagcycles::exactgeom::{orient, Orientation, Point2};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random integer points in `[-40, 40]^2`, resampled until no three are
/// collinear.
pub fn random_arrangement(rng: &mut ChaCha8Rng, n: usize) -> PointArrangement {
    loop {
        let pts: Vec<Point2> =
            (0..n).map(|_| Point2::from_ints(rng.gen_range(-40..=40), rng.gen_range(-40..=40))).collect();
        if let Ok(a) = PointArrangement::new(pts) {
            return a;
        }
    }
}

/// Jarvis march; returns the 1-based labels on the hull.
pub fn gift_wrap(points: &[Point2]) -> BTreeSet<usize> {
    let n = points.len();
    let start = (0..n).min_by(|&a, &b| (&points[a].x, &points[a].y).cmp(&(&points[b].x, &points[b].y))).unwrap();
    let mut hull = BTreeSet::new();
    let mut current = start;
    loop {
        hull.insert(current + 1);
        let mut next = (current + 1) % n;
        for k in 0..n {
            if k != current && orient(&points[current], &points[next], &points[k]) == Orientation::Clockwise {
                next = k;
            }
        }
        current = next;
        if current == start {
            return hull;
        }
    }
}
