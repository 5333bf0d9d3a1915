//! Acceptance checks, one line per criterion. All tolerances are zero: every
//! comparison is an exact count or set equality.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use diagcycles::arrangements::{
    find_isomorphism, on_hull_boundary, point_cycles, preserves_triangle_incidence, search_point_cycle_impostor,
    IsoKind,
};
use diagcycles::cycles::{
    classify, contains_indefinite_pattern, enumerate_two_standard, exceptional_cycle, gen_distance_two,
    two_standard_count, Cycle,
};
use diagcycles::exactgeom::{random_generic_polygon, rat, Point2};
use diagcycles::harness::{
    census_report, empirical_validate, exclusive_pairs, exclusivity_check, extension_audit, orbit_audit,
    side_count_witnesses, trial_seeds,
};
use diagcycles::realize::realization_sweep;
use diagcycles::regions::{
    build_arrangement, cycles_distinct_and_two_standard, neighbor_swap_check, region_count_formula, regions_of,
    triangle_containment_coherent,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

mod common;
use common::{gift_wrap, random_arrangement};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, detail: String) -> Check {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn lib<T>(r: diagcycles::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn region_counts() -> Check {
    let mut seen = Vec::new();
    for n in 3..=9 {
        let bad: Vec<u64> = trial_seeds(1000 + n as u64, 20)
            .into_par_iter()
            .filter(|&s| {
                let poly = random_generic_polygon(n, s).unwrap();
                build_arrangement(&poly).unwrap().bounded_face_count() as u64 != region_count_formula(n)
            })
            .collect();
        if !bad.is_empty() {
            return Err(format!("n={n} seeds {bad:?} disagree with {}", region_count_formula(n)));
        }
        seen.push(region_count_formula(n).to_string());
    }
    Ok(format!("n=3..9 x20 polygons, faces = {}", seen.join(",")))
}

fn census() -> Check {
    let got: Vec<usize> = (4..=14).map(|n| enumerate_two_standard(n).len()).collect();
    let want: Vec<usize> = (4..=14).map(|n| two_standard_count(n) as usize).collect();
    let pinned = vec![4, 11, 26, 57, 120, 247, 502, 1013, 2036, 4083, 8178];
    ensure(got == want && got == pinned, format!("n=4..14 {got:?}"))
}

fn classifier_agreement() -> Check {
    for n in 5..=10 {
        let free: BTreeSet<Cycle> =
            enumerate_two_standard(n).into_iter().filter(|c| contains_indefinite_pattern(c).is_none()).collect();
        let mut expected = gen_distance_two(n);
        if n == 7 {
            expected.insert(exceptional_cycle());
        }
        if free != expected {
            let diff: Vec<String> = free.symmetric_difference(&expected).map(|c| c.to_string()).collect();
            return Err(format!("n={n} differs on {diff:?}"));
        }
    }
    Ok("n=5..10 pattern-free = moves (+ 1526374 at n=7)".into())
}

fn definite_counts() -> Check {
    let sizes: Vec<usize> = (6..=10).map(|n| gen_distance_two(n).len()).collect();
    let formula: Vec<usize> = (6..=10).map(|n| 2 * n * n - 8 * n).collect();
    let c7 = lib(census_report(7))?;
    let pairs_indefinite =
        exclusive_pairs(7).iter().all(|(a, b)| [a, b].iter().all(|c| matches!(classify(c), Ok(k) if !k.is_definite())));
    ensure(
        sizes == formula
            && sizes == [24, 42, 64, 90, 120]
            && c7.definite == 43
            && c7.indefinite == 14
            && pairs_indefinite,
        format!(
            "distance-two {sizes:?}; n=7 definite={} indefinite={} pairs indefinite={pairs_indefinite}",
            c7.definite, c7.indefinite
        ),
    )
}

fn octagon_orbits() -> Check {
    let a = lib(orbit_audit())?;
    ensure(
        a.passed(),
        format!(
            "{} orbits sizes={:?} distance-two={} indefinite={} items matched={} {:?}",
            a.orbit_count,
            a.orbit_sizes.iter().collect::<BTreeSet<_>>(),
            a.distance_two_orbits,
            a.indefinite_orbits,
            a.items.iter().filter(|i| i.list_is_orbit).count(),
            a.violations
        ),
    )
}

fn empirical() -> Check {
    let mut parts = Vec::new();
    for n in [6, 7, 8] {
        let r = lib(empirical_validate(n, 50, 6000 + n as u64))?;
        if !r.passed() {
            return Err(format!("n={n}: {:?}", r.violations));
        }
        parts.push(format!("n={n} {}+{}", r.definite_count, r.indefinite_count));
    }
    Ok(format!("50 polygons each, {} (definite+indefinite), no violations", parts.join(", ")))
}

fn exclusivity() -> Check {
    let mut parts = Vec::new();
    for n in [6, 7] {
        let r = lib(exclusivity_check(n, 100, 7000 + n as u64))?;
        if !r.passed() {
            return Err(format!("n={n}: {:?}", r.violations));
        }
        parts.push(format!("n={n} {} pair(s)", r.pairs.len()));
    }
    Ok(format!("100 polygons each, {}, exactly one member present", parts.join(", ")))
}

fn realization() -> Check {
    let mut total = 0;
    for n in 4..=8 {
        let r = lib(realization_sweep(n, 8000))?;
        if r.realized != r.total {
            return Err(format!("n={n}: {}/{}", r.realized, r.total));
        }
        total += r.realized;
    }
    ensure(total == 218, format!("{total}/218 realized and verified"))
}

fn region_structure() -> Check {
    let mut polygons = 0;
    for n in 4..=7 {
        for s in trial_seeds(9000 + n as u64, 20) {
            let poly = random_generic_polygon(n, s).unwrap();
            let arr = build_arrangement(&poly).unwrap();
            let regions = lib(regions_of(&arr, &poly))?;
            if !cycles_distinct_and_two_standard(&regions) {
                return Err(format!("n={n} seed={s}: repeated or non-two-standard cycle"));
            }
            if !neighbor_swap_check(&arr, &regions) {
                return Err(format!("n={n} seed={s}: neighbour swap fails"));
            }
            if !triangle_containment_coherent(&poly, &regions) {
                return Err(format!("n={n} seed={s}: triangle containment incoherent"));
            }
            polygons += 1;
        }
    }
    Ok(format!("{polygons} polygons n=4..7, all regions x all triples"))
}

fn arrangement_invariants() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10_000);
    for trial in 0..200 {
        let arr = random_arrangement(&mut rng, 6 + trial % 3);
        let hull = gift_wrap(arr.points());
        if (1..=arr.n()).any(|i| on_hull_boundary(&arr, i) != hull.contains(&i)) {
            return Err(format!("hull disagreement in arrangement {trial}"));
        }
    }
    let mut done = [0usize; 2];
    while done[0] < 50 || done[1] < 50 {
        let arr = random_arrangement(&mut rng, 6);
        let m: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-5..=5));
        let det = m[0] * m[3] - m[1] * m[2];
        let slot = usize::from(det < 0);
        if det == 0 || done[slot] >= 50 {
            continue;
        }
        let image = arr
            .map_points(|p| {
                Point2::new(&p.x * rat(m[0], 1) + &p.y * rat(m[1], 1), &p.x * rat(m[2], 1) + &p.y * rat(m[3], 1))
            })
            .unwrap();
        let iso = lib(find_isomorphism(&arr, &image))?;
        let want = if det > 0 { IsoKind::Preserving } else { IsoKind::Reversing };
        if iso.kind != want {
            return Err(format!("affine map {m:?} gave {iso}"));
        }
        done[slot] += 1;
    }
    let imp = search_point_cycle_impostor(3).ok_or("no point-cycle impostor on the grid")?;
    let identity: Vec<usize> = (0..=4).collect();
    ensure(
        point_cycles(&imp.first) == point_cycles(&imp.second)
            && !preserves_triangle_incidence(&imp.first, &imp.second, &identity),
        "200 hulls agree; 50+50 affine images PRESERVING/REVERSING; point-cycle impostor found".into(),
    )
}

fn extension() -> Check {
    let mut parts = Vec::new();
    for n in [8, 9] {
        let a = lib(extension_audit(n))?;
        if !a.passed() {
            return Err(format!("n={n}: {:?}", a.counterexamples));
        }
        parts.push(format!(
            "n={n} checked={} counterexamples=0 (excluded pairs: {} failures of {})",
            a.checked,
            a.excluded_failures.len(),
            a.excluded_checked
        ));
    }
    Ok(parts.join("; "))
}

fn side_counts() -> Check {
    let found = lib(side_count_witnesses(&[5, 7], 500))?;
    let describe: Vec<String> = found.values().map(|w| format!("{} sides ({})", w.sides, w.source)).collect();
    ensure(found.contains_key(&5) && found.contains_key(&7), format!("region 1526374: {}", describe.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("region-count formula", region_counts),
        ("two-standard census", census),
        ("classifier agreement", classifier_agreement),
        ("definite counts", definite_counts),
        ("octagon orbit audit", octagon_orbits),
        ("empirical dichotomy", empirical),
        ("mutual exclusivity", exclusivity),
        ("realization sweep", realization),
        ("region-cycle structure", region_structure),
        ("arrangement invariants", arrangement_invariants),
        ("extension audit", extension),
        ("side-count variability", side_counts),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (status, detail) = match check() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("{status} {:>2} {name} [tol=0, exact] {detail} ({:.1}s)", k + 1, start.elapsed().as_secs_f64());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
