//! Explicit polygons containing a region with a prescribed cycle.
//!
//! The anchor point sits at the origin. Written position `p` of the cycle gets
//! a direction angle near `πp/n`; labels of the first row are placed along
//! that direction and labels of the second row opposite to it. Lines through
//! the origin then meet the vertices in the written order, and vertex angles
//! increase with the label.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cycles::{enumerate_two_standard, standard_decomposition, Cycle};
use crate::error::{Error, Result};
use crate::exactgeom::{
    circle_point, is_generic, is_strictly_convex_acw, rat, snap, Point2, PolygonSpec, DEFAULT_RETRY_BUDGET, PARAM_GRID,
    RADIUS_GRID,
};
use crate::regions::{enumerate_regions, region_containing};

/// Largest radius wobble, in units of `1 / RADIUS_GRID` (about 1/500).
const RADIUS_WOBBLE: i64 = RADIUS_GRID / 500;

/// Direction parameters `t_p = tan(θ_p / 2)` for written positions `p`, with
/// `θ_p = π(p + u_p)/n`, `u_0 = 0` and `|u_p| ≤ 1/4`.
fn direction_params(n: usize, rng: &mut ChaCha8Rng) -> Vec<crate::exactgeom::Rational> {
    (0..n)
        .map(|p| {
            let jitter = if p == 0 { 0.0 } else { rng.gen_range(-0.25..=0.25) };
            let theta = std::f64::consts::PI * (p as f64 + jitter) / n as f64;
            snap((theta / 2.0).tan(), PARAM_GRID)
        })
        .collect()
}

/// Ray angles of the block rule as multiples of π/n, one per label. Strictly
/// increasing in the label for every two-standard cycle.
pub fn block_rule_slots(c: &Cycle) -> Vec<usize> {
    let d = standard_decomposition(c);
    let l = d.first_row_end();
    let n = c.n();
    let pos = c.positions();
    (1..=n).map(|j| if j <= l { pos[j] } else { pos[j] + n }).collect()
}

pub fn realize_cycle(c: &Cycle, seed: u64) -> Result<PolygonSpec> {
    realize_cycle_with_budget(c, seed, DEFAULT_RETRY_BUDGET)
}

/// A generic convex polygon with a region whose cycle is `c`; the region
/// contains the origin.
pub fn realize_cycle_with_budget(c: &Cycle, seed: u64, budget: usize) -> Result<PolygonSpec> {
    let d = standard_decomposition(c);
    if d.count() != 2 {
        return Err(Error::NotTwoStandard(c.to_string()));
    }
    let l = d.first_row_end();
    let n = c.n();
    let pos = c.positions();
    let origin = Point2::origin();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        let params = direction_params(n, &mut rng);
        let vertices: Vec<Point2> = (1..=n)
            .map(|j| {
                let radius = rat(RADIUS_GRID + rng.gen_range(-RADIUS_WOBBLE..=RADIUS_WOBBLE), RADIUS_GRID);
                let v = circle_point(&params[pos[j]]).scale(&radius);
                if j <= l {
                    v
                } else {
                    v.neg()
                }
            })
            .collect();
        if !is_strictly_convex_acw(&vertices) {
            continue;
        }
        let poly = PolygonSpec::new(vertices)?;
        if !is_generic(&poly) {
            continue;
        }
        let regions = enumerate_regions(&poly)?;
        match region_containing(&regions, &origin) {
            Some(r) if r.cycle == *c => return Ok(poly),
            Some(r) => {
                return Err(Error::RealizationFailed(format!("{c} (origin region has cycle {})", r.cycle)));
            }
            // The origin is on a chord; resample.
            None => continue,
        }
    }
    Err(Error::RetryBudgetExhausted(budget))
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub total: usize,
    pub realized: usize,
}

/// Realizes and verifies every two-standard `n`-cycle.
pub fn realization_sweep(n: usize, seed: u64) -> Result<SweepReport> {
    let cycles = enumerate_two_standard(n);
    cycles
        .par_iter()
        .map(|c| realize_cycle(c, seed).map_err(|e| Error::RealizationFailed(format!("{c}: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport { n, total: cycles.len(), realized: cycles.len() })
}
