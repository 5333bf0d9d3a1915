//! Campaigns that check the combinatorial classification against actual
//! polygons.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cycles::{
    classify, cyclic_relabel_orbit, diagonal_distance, enumerate_two_standard, exceptional_cycle, gen_distance_two,
    is_two_standard, orbits, qualifying_pairs, Cycle, Verdict,
};
use crate::error::Result;
use crate::exactgeom::{near_regular_polygon, random_generic_polygon, PolygonSpec};
use crate::realize::realize_cycle;
use crate::regions::{enumerate_regions, occurring_cycles, region_count_formula};

fn parse(s: &str) -> Cycle {
    let digits: Vec<usize> = s.chars().map(|ch| ch.to_digit(10).unwrap() as usize).collect();
    Cycle::new(&digits).unwrap()
}

/// The hexagon's mutually exclusive pair.
pub const HEXAGON_PAIR: (&str, &str) = ("145236", "125634");

/// The seven mutually exclusive heptagon pairs; pair `k` ignores label `k`.
pub const HEPTAGON_PAIRS: [(&str, &str); 7] = [
    ("1523674", "1256347"),
    ("1526347", "1236745"),
    ("1263745", "1562347"),
    ("1562374", "1267345"),
    ("1526734", "1456237"),
    ("1452637", "1256734"),
    ("1256374", "1452367"),
];

pub fn exclusive_pairs(n: usize) -> Vec<(Cycle, Cycle)> {
    match n {
        6 => vec![(parse(HEXAGON_PAIR.0), parse(HEXAGON_PAIR.1))],
        7 => HEPTAGON_PAIRS.iter().map(|(a, b)| (parse(a), parse(b))).collect(),
        _ => Vec::new(),
    }
}

/// The fifteen relabelling orbits of two-standard octagon cycles as listed
/// in the classification of the octagon case. Items 1 to 8 are distance two,
/// items 9 to 15 indefinite.
pub const OCTAGON_ORBITS: [[&str; 8]; 15] = [
    ["13456782", "13245678", "12435678", "12354678", "12346578", "12345768", "12345687", "18234567"],
    ["14567823", "13425678", "12453678", "12356478", "12346758", "12345786", "17234568", "12834567"],
    ["15678234", "13452678", "12456378", "12356748", "12346785", "16234578", "12734568", "12384567"],
    ["16782345", "13456278", "12456738", "12356784", "15234678", "12634578", "12374568", "12348567"],
    ["17823456", "13456728", "12456783", "14235678", "12534678", "12364578", "12347568", "12345867"],
    ["14567283", "14256783", "14253678", "12536478", "12364758", "12347586", "17234586", "17283456"],
    ["15672834", "14526783", "14256378", "12536748", "12364785", "16234758", "12734586", "17238456"],
    ["16728345", "14562783", "14256738", "12536784", "15236478", "12634758", "12374586", "17234856"],
    ["12563478", "12367458", "12347856", "16723458", "12783456", "14567238", "12567834", "14523678"],
    ["12563748", "12367485", "16234785", "16273458", "12738456", "15672384", "15267834", "14526378"],
    ["12567348", "12367845", "15623478", "12673458", "12378456", "15672348", "12678345", "14562378"],
    ["12567384", "15236784", "15263478", "12637458", "12374856", "16723485", "16278345", "14562738"],
    ["12563784", "15236748", "12634785", "16237458", "12734856", "16723845", "15627834", "14526738"],
    ["12637485", "16237485", "16273485", "16273845", "15627384", "15267384", "15263784", "15263748"],
    ["12673845", "15623784", "15267348", "12637845", "15623748", "12673485", "16237845", "15627348"],
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub n: usize,
    pub cycles: usize,
    pub regions: u64,
    pub definite: usize,
    pub indefinite: usize,
    pub distance_two: usize,
}

impl fmt::Display for CensusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cycles={} regions={} definite={} indefinite={}",
            self.cycles, self.regions, self.definite, self.indefinite
        )
    }
}

pub fn census_report(n: usize) -> Result<CensusReport> {
    let cycles = enumerate_two_standard(n);
    let mut definite = 0;
    for c in &cycles {
        if classify(c)?.is_definite() {
            definite += 1;
        }
    }
    let distance_two = cycles.iter().filter(|c| matches!(diagonal_distance(c), Ok(d) if d.value() == Some(2))).count();
    Ok(CensusReport {
        n,
        cycles: cycles.len(),
        regions: region_count_formula(n),
        definite,
        indefinite: cycles.len() - definite,
        distance_two,
    })
}

/// Seeds of the sampled polygons, one per trial, derived from `seed`.
pub fn trial_seeds(seed: u64, trials: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials).map(|_| rng.next_u64()).collect()
}

fn sample(n: usize, trials: usize, seed: u64) -> Result<Vec<(u64, BTreeSet<Cycle>)>> {
    trial_seeds(seed, trials)
        .into_par_iter()
        .map(|s| Ok((s, occurring_cycles(&random_generic_polygon(n, s)?)?)))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CycleOccurrence {
    pub cycle: Cycle,
    pub verdict: Verdict,
    /// Number of sampled polygons containing the cycle.
    pub present_in: usize,
    /// Seed of a sampled polygon lacking the cycle.
    pub absence_witness: Option<u64>,
    /// Seed for which the constructive realization contains the cycle.
    pub realized_with: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub formula_count: u64,
    pub census_count: usize,
    pub definite_count: usize,
    pub indefinite_count: usize,
    pub occurrences: Vec<CycleOccurrence>,
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "n={} trials={} seed={} regions={} cycles={} definite={} indefinite={}",
            self.n,
            self.trials,
            self.seed,
            self.formula_count,
            self.census_count,
            self.definite_count,
            self.indefinite_count
        )?;
        for o in &self.occurrences {
            let absent = o.absence_witness.map_or("-".to_string(), |s| s.to_string());
            let realized = o.realized_with.map_or("-".to_string(), |s| s.to_string());
            writeln!(
                f,
                "{:<12} {:<10} present={}/{} absent_seed={} realized_seed={}",
                o.cycle.compact(),
                o.verdict.to_string(),
                o.present_in,
                self.trials,
                absent,
                realized
            )?;
        }
        for v in &self.violations {
            writeln!(f, "VIOLATION {v}")?;
        }
        write!(f, "{}", if self.passed() { "ok" } else { "FAILED" })
    }
}

/// Samples `trials` random generic polygons and checks that definite cycles
/// are always present, that each indefinite cycle is missing from some sample
/// and realizable, and that region counts match the formula.
pub fn empirical_validate(n: usize, trials: usize, seed: u64) -> Result<ValidationReport> {
    let cycles = enumerate_two_standard(n);
    let verdicts: Vec<Verdict> = cycles.iter().map(|c| classify(c).map(|k| k.verdict)).collect::<Result<_>>()?;
    let samples = sample(n, trials, seed)?;
    let formula = region_count_formula(n);
    let mut violations = Vec::new();
    for (s, occ) in &samples {
        if occ.len() as u64 != formula {
            violations.push(format!("polygon seed {s}: {} regions, expected {formula}", occ.len()));
        }
    }
    let occurrences: Vec<CycleOccurrence> = cycles
        .par_iter()
        .zip(verdicts.par_iter())
        .map(|(c, &verdict)| {
            let present_in = samples.iter().filter(|(_, occ)| occ.contains(c)).count();
            let absence_witness = samples.iter().find(|(_, occ)| !occ.contains(c)).map(|(s, _)| *s);
            let realized_with =
                if verdict == Verdict::Indefinite { realize_cycle(c, seed).ok().map(|_| seed) } else { None };
            CycleOccurrence { cycle: c.clone(), verdict, present_in, absence_witness, realized_with }
        })
        .collect();
    for o in &occurrences {
        match o.verdict {
            Verdict::Definite if o.present_in != trials => violations.push(format!(
                "definite {} missing from polygon seed {}",
                o.cycle,
                o.absence_witness.unwrap()
            )),
            Verdict::Indefinite if o.absence_witness.is_none() => {
                violations.push(format!("indefinite {} present in every sample", o.cycle))
            }
            Verdict::Indefinite if o.realized_with.is_none() => {
                violations.push(format!("indefinite {} could not be realized", o.cycle))
            }
            _ => {}
        }
    }
    let definite_count = verdicts.iter().filter(|&&v| v == Verdict::Definite).count();
    Ok(ValidationReport {
        n,
        trials,
        seed,
        formula_count: formula,
        census_count: cycles.len(),
        definite_count,
        indefinite_count: cycles.len() - definite_count,
        occurrences,
        violations,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ExclusivityReport {
    pub n: usize,
    pub trials: usize,
    pub pairs: Vec<(Cycle, Cycle)>,
    /// Per pair: how many samples contained the first, the second, both,
    /// neither.
    pub tallies: Vec<[usize; 4]>,
    pub violations: Vec<String>,
}

impl ExclusivityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// No exclusive pair is ever co-present, and every sample contains exactly
/// one member of each pair. Pairs are known for `n = 6, 7` only.
pub fn exclusivity_check(n: usize, trials: usize, seed: u64) -> Result<ExclusivityReport> {
    let pairs = exclusive_pairs(n);
    let samples = sample(n, trials, seed)?;
    let mut tallies = vec![[0usize; 4]; pairs.len()];
    let mut violations = Vec::new();
    for (a, b) in &pairs {
        for c in [a, b] {
            if classify(c)?.is_definite() {
                violations.push(format!("pair member {c} is classified definite"));
            }
        }
    }
    for (s, occ) in &samples {
        for (k, (a, b)) in pairs.iter().enumerate() {
            let slot = match (occ.contains(a), occ.contains(b)) {
                (true, false) => 0,
                (false, true) => 1,
                (true, true) => 2,
                (false, false) => 3,
            };
            tallies[k][slot] += 1;
            if slot == 2 {
                violations.push(format!("{a} and {b} both present in polygon seed {s}"));
            }
            if slot == 3 {
                violations.push(format!("neither {a} nor {b} present in polygon seed {s}"));
            }
        }
    }
    Ok(ExclusivityReport { n, trials, pairs, tallies, violations })
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitItem {
    pub item: usize,
    pub representative: Cycle,
    /// Index of the computed orbit containing the representative.
    pub orbit: usize,
    pub distance_two: bool,
    pub indefinite: bool,
    pub list_is_orbit: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitAudit {
    pub orbit_count: usize,
    pub orbit_sizes: Vec<usize>,
    pub distance_two_orbits: usize,
    pub indefinite_orbits: usize,
    pub items: Vec<OrbitItem>,
    pub violations: Vec<String>,
}

impl OrbitAudit {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Splits the two-standard octagon cycles into relabelling orbits and
/// matches them against [`OCTAGON_ORBITS`].
pub fn orbit_audit() -> Result<OrbitAudit> {
    let t8 = enumerate_two_standard(8);
    let computed = orbits(&t8);
    let mut violations = Vec::new();
    let dist2 = |c: &Cycle| matches!(diagonal_distance(c), Ok(d) if d.value() == Some(2));
    let mut distance_two_orbits = 0;
    let mut indefinite_orbits = 0;
    for orbit in &computed {
        if orbit.iter().all(dist2) {
            distance_two_orbits += 1;
        } else if orbit.iter().all(|c| matches!(classify(c), Ok(k) if !k.is_definite())) {
            indefinite_orbits += 1;
        } else {
            violations.push(format!("orbit of {} is mixed", orbit.iter().next().unwrap()));
        }
    }
    let mut items = Vec::new();
    let mut seen = BTreeSet::new();
    for (k, list) in OCTAGON_ORBITS.iter().enumerate() {
        let item = k + 1;
        let listed: BTreeSet<Cycle> = list.iter().map(|s| parse(s)).collect();
        let representative = parse(list[0]);
        let orbit = computed.iter().position(|o| o.contains(&representative)).unwrap_or(usize::MAX);
        let distance_two = listed.iter().all(|c| is_two_standard(c) && dist2(c));
        let indefinite = listed.iter().all(|c| matches!(classify(c), Ok(k) if !k.is_definite()));
        let list_is_orbit = cyclic_relabel_orbit(&representative) == listed;
        let expect_definite = item <= 8;
        if expect_definite && !distance_two {
            violations.push(format!("item {item} is not entirely distance two"));
        }
        if !expect_definite && !indefinite {
            violations.push(format!("item {item} is not entirely indefinite"));
        }
        if !list_is_orbit {
            violations.push(format!("item {item} is not a single relabelling orbit"));
        }
        if !seen.insert(orbit) {
            violations.push(format!("item {item} repeats orbit {orbit}"));
        }
        items.push(OrbitItem { item, representative, orbit, distance_two, indefinite, list_is_orbit });
    }
    let orbit_sizes: Vec<usize> = computed.iter().map(|o| o.len()).collect();
    if computed.len() != 15 || orbit_sizes.iter().any(|&s| s != 8) {
        violations.push(format!("expected 15 orbits of size 8, got sizes {orbit_sizes:?}"));
    }
    if distance_two_orbits != 8 || indefinite_orbits != 7 {
        violations.push(format!("{distance_two_orbits} distance-two and {indefinite_orbits} indefinite orbits"));
    }
    Ok(OrbitAudit {
        orbit_count: computed.len(),
        orbit_sizes,
        distance_two_orbits,
        indefinite_orbits,
        items,
        violations,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtensionAudit {
    pub n: usize,
    /// Insertions of `n` covered by the statement (the pair stays adjacent).
    pub checked: usize,
    pub counterexamples: Vec<String>,
    /// Insertions splitting the pair, which the statement does not cover.
    pub split: usize,
    /// Same check for the excluded pairs; failures here are expected and
    /// listed for reference only.
    pub excluded_checked: usize,
    pub excluded_failures: Vec<String>,
}

impl ExtensionAudit {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Inserts `n` into every distance-two `(n-1)`-cycle at every slot and checks
/// that the result has distance two whenever it is two-standard and the pair
/// `{i - 1, i + 1}` (qualifying before the insertion, `i` not in
/// `{1, 2, n - 2, n - 1}`) is still adjacent.
pub fn extension_audit(n: usize) -> Result<ExtensionAudit> {
    let m = n - 1;
    let mut report = ExtensionAudit {
        n,
        checked: 0,
        counterexamples: Vec::new(),
        split: 0,
        excluded_checked: 0,
        excluded_failures: Vec::new(),
    };
    for c in gen_distance_two(m) {
        for i in 1..=m {
            let lo = (i + m - 2) % m + 1;
            let hi = i % m + 1;
            if !qualifying_pairs(&c)?.contains(&(lo.min(hi), lo.max(hi))) {
                continue;
            }
            let excluded = [1, 2, m - 1, m].contains(&i);
            for slot in 1..=m {
                let mut seq = c.entries().to_vec();
                seq.insert(slot, n);
                let extended = Cycle::new(&seq)?;
                if !is_two_standard(&extended) {
                    continue;
                }
                if !extended.are_adjacent(lo, hi) {
                    report.split += 1;
                    continue;
                }
                let ok = diagonal_distance(&extended)?.value() == Some(2);
                let line = format!("{c} + {n} -> {extended} (i={i})");
                if excluded {
                    report.excluded_checked += 1;
                    if !ok {
                        report.excluded_failures.push(line);
                    }
                } else {
                    report.checked += 1;
                    if !ok {
                        report.counterexamples.push(line);
                    }
                }
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct SideCountWitness {
    pub polygon: PolygonSpec,
    pub sides: usize,
    pub source: String,
}

fn sides_of(poly: &PolygonSpec, c: &Cycle) -> Result<Option<usize>> {
    Ok(enumerate_regions(poly)?.into_iter().find(|r| r.cycle == *c).map(|r| r.side_count))
}

/// Heptagons in which the region of `(1 5 2 6 3 7 4)` has each requested
/// number of sides: the near-regular heptagon first, then random samples
/// with seeds `0..search`.
pub fn side_count_witnesses(wanted: &[usize], search: u64) -> Result<BTreeMap<usize, SideCountWitness>> {
    let c = exceptional_cycle();
    let mut found = BTreeMap::new();
    let regular = near_regular_polygon(7, 0)?;
    if let Some(sides) = sides_of(&regular, &c)? {
        if wanted.contains(&sides) {
            found.insert(sides, SideCountWitness { polygon: regular, sides, source: "near-regular".into() });
        }
    }
    for s in 0..search {
        if wanted.iter().all(|w| found.contains_key(w)) {
            break;
        }
        let poly = random_generic_polygon(7, s)?;
        if let Some(sides) = sides_of(&poly, &c)? {
            if wanted.contains(&sides) && !found.contains_key(&sides) {
                found.insert(sides, SideCountWitness { polygon: poly, sides, source: format!("random seed {s}") });
            }
        }
    }
    Ok(found)
}
