//! Combinatorics of n-cycles written in one-line cyclic notation.
//!
//! A [`Cycle`] is stored rotated so that it starts at 1, i.e. as
//! `(1, a_2, …, a_n)`. Everything in this module is pure and works on labels
//! `1..=n` only; the geometric meaning of a cycle (the order in which a point
//! inside a region sees the lines to the polygon vertices) lives in
//! [`crate::regions`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// An n-cycle `(1, a_2, …, a_n)` over the labels `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle(Vec<usize>);

impl Cycle {
    /// Rotates a permutation of `1..=n` so that it starts at 1.
    pub fn new(seq: &[usize]) -> Result<Self> {
        canonicalize(seq)
    }

    /// The monotone cycle `(1, 2, …, n)`.
    pub fn identity(n: usize) -> Self {
        Cycle((1..=n).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// `positions()[k]` is the 0-based index of label `k` in the written
    /// cycle; index 0 is unused.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.n() + 1];
        for (idx, &v) in self.0.iter().enumerate() {
            pos[v] = idx;
        }
        pos
    }

    /// Cyclic successor of label `k`.
    fn successor_of(&self, pos: &[usize], k: usize) -> usize {
        self.0[(pos[k] + 1) % self.n()]
    }

    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        let n = self.n();
        if i == j || i == 0 || j == 0 || i > n || j > n {
            return false;
        }
        let pos = self.positions();
        self.successor_of(&pos, i) == j || self.successor_of(&pos, j) == i
    }

    /// Concatenated digits, e.g. `145236`. Only unambiguous for `n <= 9`.
    pub fn compact(&self) -> String {
        self.0.iter().map(|v| v.to_string()).collect()
    }

    /// Applies the label map `k ↦ perm[k]` (1-based, `perm[0]` unused).
    pub fn relabel(&self, perm: &[usize]) -> Cycle {
        let seq: Vec<usize> = self.0.iter().map(|&k| perm[k]).collect();
        rotate_to_one(seq)
    }

    /// Applies the shift `k ↦ (k mod n) + 1`, `times` times.
    pub fn shift_labels(&self, times: usize) -> Cycle {
        let n = self.n();
        let seq: Vec<usize> = self.0.iter().map(|&k| (k - 1 + times) % n + 1).collect();
        rotate_to_one(seq)
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Cycle {
    type Err = Error;

    /// Whitespace-separated labels, e.g. `"1 4 5 2 3 6"`.
    fn from_str(s: &str) -> Result<Self> {
        let seq = s
            .split_whitespace()
            .enumerate()
            .map(|(idx, tok)| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("token {} ({tok:?}) is not a positive integer", idx + 1)))
            })
            .collect::<Result<Vec<usize>>>()?;
        canonicalize(&seq)
    }
}

impl Serialize for Cycle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn rotate_to_one(mut seq: Vec<usize>) -> Cycle {
    let start = seq.iter().position(|&v| v == 1).expect("label 1 present");
    seq.rotate_left(start);
    Cycle(seq)
}

/// Validates that `seq` is a permutation of `1..=n` and rotates it to start
/// at 1.
pub fn canonicalize(seq: &[usize]) -> Result<Cycle> {
    let n = seq.len();
    if n == 0 {
        return Err(Error::InvalidCycle("empty sequence".into()));
    }
    let mut seen = vec![false; n + 1];
    for (idx, &v) in seq.iter().enumerate() {
        if v == 0 || v > n {
            return Err(Error::InvalidCycle(format!("entry {v} at position {} is outside 1..={n}", idx + 1)));
        }
        if seen[v] {
            return Err(Error::InvalidCycle(format!("entry {v} at position {} is repeated", idx + 1)));
        }
        seen[v] = true;
    }
    Ok(rotate_to_one(seq.to_vec()))
}

/// The unique consecutive standard row structure of a cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StandardDecomposition {
    /// Inclusive label intervals `[start, end]`, in increasing order.
    pub rows: Vec<(usize, usize)>,
}

impl StandardDecomposition {
    /// Number of rows, the `i` of an i-standard cycle.
    pub fn count(&self) -> usize {
        self.rows.len()
    }

    /// Last label of the first row.
    pub fn first_row_end(&self) -> usize {
        self.rows[0].1
    }

    pub fn row_of(&self, label: usize) -> usize {
        self.rows.iter().position(|&(lo, hi)| lo <= label && label <= hi).expect("label covered by rows")
    }

    /// Rebuilds the written cycle from the rows and the label positions;
    /// used to check that the decomposition is faithful.
    pub fn interlace(&self, positions: &[usize]) -> Vec<usize> {
        let n: usize = self.rows.iter().map(|&(lo, hi)| hi - lo + 1).sum();
        let mut out = vec![0; n];
        for &(lo, hi) in &self.rows {
            for k in lo..=hi {
                out[positions[k]] = k;
            }
        }
        out
    }
}

impl fmt::Display for StandardDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.rows.iter().map(|&(lo, hi)| if lo == hi { lo.to_string() } else { format!("{lo}-{hi}") }).collect();
        f.write_str(&parts.join(" | "))
    }
}

/// Scans `k = 2..=n`: `k` extends the current row iff it is written to the
/// right of `k - 1`, otherwise it opens a new row.
pub fn standard_decomposition(c: &Cycle) -> StandardDecomposition {
    let n = c.n();
    let pos = c.positions();
    let mut rows = vec![(1, 1)];
    for k in 2..=n {
        if pos[k] > pos[k - 1] {
            rows.last_mut().unwrap().1 = k;
        } else {
            rows.push((k, k));
        }
    }
    StandardDecomposition { rows }
}

pub fn is_two_standard(c: &Cycle) -> bool {
    standard_decomposition(c).count() == 2
}

fn require_two_standard(c: &Cycle) -> Result<StandardDecomposition> {
    let d = standard_decomposition(c);
    if d.count() == 2 {
        Ok(d)
    } else {
        Err(Error::NotTwoStandard(c.to_string()))
    }
}

/// `|T_n| = 2^(n-1) - n`.
pub fn two_standard_count(n: usize) -> u64 {
    (1u64 << (n - 1)) - n as u64
}

/// All two-standard consecutive n-cycles, sorted lexicographically.
///
/// For a split `1..=l | l+1..=n` the cycle is fixed by which of the
/// positions `2..=n` hold the first-row labels `2..=l`; every choice except
/// "first row entirely first" puts `l + 1` left of `l` and is counted.
pub fn enumerate_two_standard(n: usize) -> Vec<Cycle> {
    let mut out = Vec::with_capacity(two_standard_count(n.max(1)) as usize);
    if n < 3 {
        return out;
    }
    let slots = n - 1;
    for mask in 0u32..(1u32 << slots) {
        let l = 1 + mask.count_ones() as usize;
        let mut seq = Vec::with_capacity(n);
        seq.push(1);
        let (mut low, mut high) = (2, l + 1);
        for bit in 0..slots {
            if mask & (1 << bit) != 0 {
                seq.push(low);
                low += 1;
            } else {
                seq.push(high);
                high += 1;
            }
        }
        let c = Cycle(seq);
        if is_two_standard(&c) {
            out.push(c);
        }
    }
    out.sort();
    out
}

/// Minimal cyclic label distance between a cycle-adjacent pair that is not a
/// polygon side and whose transposition is again two-standard consecutive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DiagonalDistance {
    Finite { value: usize, witness: (usize, usize) },
    Infinite,
}

impl DiagonalDistance {
    pub fn value(&self) -> Option<usize> {
        match self {
            DiagonalDistance::Finite { value, .. } => Some(*value),
            DiagonalDistance::Infinite => None,
        }
    }
}

/// Cyclic label distance `min((i - j) mod n, (j - i) mod n)`.
pub fn label_distance(n: usize, i: usize, j: usize) -> usize {
    let d = (i + n - j) % n;
    d.min(n - d)
}

/// The qualifying pairs `{i, j}` (with `i < j`) of a two-standard cycle:
/// adjacent in the cycle, not a side, and swapping them gives another
/// two-standard cycle (the cycle of the region across that diagonal).
///
/// Away from label 1 this is the same as asking for `i` and `j` to sit in
/// different rows. A pair wrapping past 1 can lie in one row and still swap
/// to a two-standard cycle, e.g. `{7, 1}` in `(1 2 3 8 4 5 6 7)`.
pub fn qualifying_pairs(c: &Cycle) -> Result<Vec<(usize, usize)>> {
    require_two_standard(c)?;
    let n = c.n();
    let mut out: Vec<(usize, usize)> = (0..n)
        .map(|idx| {
            let (a, b) = (c.0[idx], c.0[(idx + 1) % n]);
            (a.min(b), a.max(b))
        })
        .filter(|&(i, j)| label_distance(n, i, j) != 1 && swap_adjacent(c, i, j).is_ok_and(|s| is_two_standard(&s)))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Smallest distance over [`qualifying_pairs`]; ties go to the
/// lexicographically smallest pair.
pub fn diagonal_distance(c: &Cycle) -> Result<DiagonalDistance> {
    let n = c.n();
    Ok(qualifying_pairs(c)?
        .into_iter()
        .map(|(i, j)| (label_distance(n, i, j), (i, j)))
        .min()
        .map_or(DiagonalDistance::Infinite, |(value, witness)| DiagonalDistance::Finite { value, witness }))
}

/// Moving `element` forward around the circle `(1 2 … n)` so that it lands
/// right after the `steps`-th element following it, optionally followed by
/// swapping its former neighbours `element - 1` and `element + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MoveDerivation {
    pub element: usize,
    pub steps: usize,
    pub swapped: bool,
}

/// Replays a move on `(1 2 … n)`. `steps` ranges over `1..=n-2`: from just
/// after `element + 1` to just before `element - 1`.
pub fn apply_move(n: usize, mv: MoveDerivation) -> Cycle {
    assert!(n >= 3, "moves need n >= 3");
    assert!((1..=n).contains(&mv.element), "element out of range");
    assert!((1..=n - 2).contains(&mv.steps), "steps out of range");
    let i = mv.element;
    // The circle with `i` removed, read from `i + 1` round to `i - 1`.
    let mut seq: Vec<usize> = (1..n).map(|k| (i - 1 + k) % n + 1).collect();
    seq.insert(mv.steps, i);
    if mv.swapped {
        // `i - 1` is now last and `i + 1` first: cyclic neighbours.
        let last = seq.len() - 1;
        seq.swap(0, last);
    }
    rotate_to_one(seq)
}

/// Every move (and swapped move) in a fixed order: by element, steps, then
/// unswapped before swapped.
pub fn all_moves(n: usize) -> impl Iterator<Item = MoveDerivation> {
    (1..=n).flat_map(move |element| {
        (1..=n - 2).flat_map(move |steps| {
            [false, true].into_iter().map(move |swapped| MoveDerivation { element, steps, swapped })
        })
    })
}

/// All cycles reachable from `(1 2 … n)` by one move, with or without the
/// neighbour swap.
pub fn gen_distance_two(n: usize) -> BTreeSet<Cycle> {
    all_moves(n).map(|mv| apply_move(n, mv)).collect()
}

/// The first move (in [`all_moves`] order) that produces `c`.
pub fn derive_move(c: &Cycle) -> Option<MoveDerivation> {
    let n = c.n();
    if n < 3 {
        return None;
    }
    all_moves(n).find(|&mv| apply_move(n, mv) == *c)
}

/// The two local shapes whose presence makes a cycle indefinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum IndefinitePattern {
    P145236,
    P125634,
}

impl IndefinitePattern {
    pub const ALL: [IndefinitePattern; 2] = [IndefinitePattern::P145236, IndefinitePattern::P125634];

    pub fn ranks(self) -> [usize; 6] {
        match self {
            IndefinitePattern::P145236 => [1, 4, 5, 2, 3, 6],
            IndefinitePattern::P125634 => [1, 2, 5, 6, 3, 4],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            IndefinitePattern::P145236 => "145236",
            IndefinitePattern::P125634 => "125634",
        }
    }
}

/// Six written positions whose values, read cyclically from their minimum,
/// are order-isomorphic to an indefinite pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PatternWitness {
    /// 1-based positions `i_1 < … < i_6` in the written cycle.
    pub positions: [usize; 6],
    pub pattern: IndefinitePattern,
    /// Offset `j` in `0..6` of the minimum among the six values.
    pub rotation: usize,
}

/// Rank pattern of six values read cyclically from their minimum, together
/// with the offset of that minimum.
fn normalized_ranks(values: &[usize; 6]) -> ([usize; 6], usize) {
    let rotation = (0..6).min_by_key(|&t| values[t]).unwrap();
    let mut ranks = [0; 6];
    for t in 0..6 {
        let v = values[(rotation + t) % 6];
        ranks[t] = 1 + values.iter().filter(|&&w| w < v).count();
    }
    (ranks, rotation)
}

/// Checks one 6-subset of 1-based positions.
pub fn pattern_at(c: &Cycle, positions: [usize; 6]) -> Option<PatternWitness> {
    let values = positions.map(|p| c.0[p - 1]);
    let (ranks, rotation) = normalized_ranks(&values);
    IndefinitePattern::ALL.into_iter().find(|pat| pat.ranks() == ranks).map(|pattern| PatternWitness {
        positions,
        pattern,
        rotation,
    })
}

/// Lexicographically first 6-subset of positions carrying an indefinite
/// pattern.
pub fn contains_indefinite_pattern(c: &Cycle) -> Option<PatternWitness> {
    let n = c.n();
    if n < 6 {
        return None;
    }
    let mut idx = [1, 2, 3, 4, 5, 6];
    loop {
        if let Some(w) = pattern_at(c, idx) {
            return Some(w);
        }
        // Next combination in lexicographic order.
        let mut k = 6;
        loop {
            if k == 0 {
                return None;
            }
            k -= 1;
            if idx[k] < n - (5 - k) {
                break;
            }
        }
        idx[k] += 1;
        for t in k + 1..6 {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

/// The exceptional definite heptagon cycle `(1 5 2 6 3 7 4)`.
pub fn exceptional_cycle() -> Cycle {
    Cycle(vec![1, 5, 2, 6, 3, 7, 4])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Definite,
    Indefinite,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Definite => "definite",
            Verdict::Indefinite => "indefinite",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Evidence {
    Move(MoveDerivation),
    Exceptional,
    Pattern(PatternWitness),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub verdict: Verdict,
    pub evidence: Evidence,
}

impl Classification {
    pub fn is_definite(&self) -> bool {
        self.verdict == Verdict::Definite
    }

    /// Replays the evidence against `c`.
    pub fn validate(&self, c: &Cycle) -> bool {
        match (self.verdict, self.evidence) {
            (Verdict::Definite, Evidence::Move(mv)) => apply_move(c.n(), mv) == *c,
            (Verdict::Definite, Evidence::Exceptional) => *c == exceptional_cycle(),
            (Verdict::Indefinite, Evidence::Pattern(w)) => {
                w.positions.windows(2).all(|p| p[0] < p[1])
                    && w.positions[5] <= c.n()
                    && pattern_at(c, w.positions) == Some(w)
            }
            _ => false,
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.evidence {
            Evidence::Move(mv) => {
                write!(f, "definite move element={} steps={} swapped={}", mv.element, mv.steps, mv.swapped)
            }
            Evidence::Exceptional => f.write_str("definite exceptional"),
            Evidence::Pattern(w) => {
                let pos: Vec<String> = w.positions.iter().map(|p| p.to_string()).collect();
                write!(f, "indefinite pattern={} positions={}", w.pattern.name(), pos.join(","))
            }
        }
    }
}

/// Indefinite iff an indefinite pattern occurs. A pattern-free cycle must be
/// reachable by a move or be the exceptional heptagon cycle; anything else is
/// reported as [`Error::ClassifierDisagreement`].
pub fn classify(c: &Cycle) -> Result<Classification> {
    require_two_standard(c)?;
    if let Some(w) = contains_indefinite_pattern(c) {
        return Ok(Classification { verdict: Verdict::Indefinite, evidence: Evidence::Pattern(w) });
    }
    if *c == exceptional_cycle() {
        return Ok(Classification { verdict: Verdict::Definite, evidence: Evidence::Exceptional });
    }
    match derive_move(c) {
        Some(mv) => Ok(Classification { verdict: Verdict::Definite, evidence: Evidence::Move(mv) }),
        None => Err(Error::ClassifierDisagreement(c.to_string())),
    }
}

/// Transposes the cyclically adjacent labels `i` and `j`.
pub fn swap_adjacent(c: &Cycle, i: usize, j: usize) -> Result<Cycle> {
    if !c.are_adjacent(i, j) {
        return Err(Error::NotAdjacent { cycle: c.to_string(), i, j });
    }
    let pos = c.positions();
    let mut seq = c.0.clone();
    seq.swap(pos[i], pos[j]);
    Ok(rotate_to_one(seq))
}

/// True iff `i`, `k`, `j` occur in this cyclic order, for `i < j < k`.
pub fn contains_subcycle_ikj(c: &Cycle, i: usize, j: usize, k: usize) -> bool {
    assert!(1 <= i && i < j && j < k && k <= c.n(), "need 1 <= i < j < k <= n");
    let pos = c.positions();
    let n = c.n();
    let from_i = |x: usize| (pos[x] + n - pos[i]) % n;
    from_i(k) < from_i(j)
}

/// Orbit of `c` under the relabelling `k ↦ (k mod n) + 1`.
pub fn cyclic_relabel_orbit(c: &Cycle) -> BTreeSet<Cycle> {
    (0..c.n()).map(|t| c.shift_labels(t)).collect()
}

/// Partition of a set of n-cycles into relabelling orbits, each orbit sorted,
/// orbits ordered by their smallest member.
pub fn orbits(cycles: &[Cycle]) -> Vec<BTreeSet<Cycle>> {
    let mut remaining: BTreeSet<Cycle> = cycles.iter().cloned().collect();
    let mut out = Vec::new();
    while let Some(first) = remaining.iter().next().cloned() {
        let orbit = cyclic_relabel_orbit(&first);
        for c in &orbit {
            remaining.remove(c);
        }
        out.push(orbit);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(v: &[usize]) -> Cycle {
        Cycle::new(v).unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(cyc(&[3, 6, 1, 4, 5, 2]).entries(), &[1, 4, 5, 2, 3, 6]);
        assert_eq!(cyc(&[1, 2, 3]).entries(), &[1, 2, 3]);
        assert_eq!(cyc(&[2, 1]).entries(), &[1, 2]);
        assert!(matches!(Cycle::new(&[1, 1, 2]), Err(Error::InvalidCycle(_))));
        assert!(matches!(Cycle::new(&[1, 4, 2]), Err(Error::InvalidCycle(_))));
        assert!(matches!(Cycle::new(&[0, 1]), Err(Error::InvalidCycle(_))));
        assert!(Cycle::new(&[]).is_err());
    }

    #[test]
    fn parse_and_display() {
        let c: Cycle = "4 5 2 3 6 1".parse().unwrap();
        assert_eq!(c.to_string(), "1 4 5 2 3 6");
        assert_eq!(c.compact(), "145236");
        assert!("1 x 2".parse::<Cycle>().is_err());
        assert!("1 2 2".parse::<Cycle>().is_err());
    }

    #[test]
    fn decomposition_examples() {
        let d = standard_decomposition(&Cycle::identity(6));
        assert_eq!(d.rows, vec![(1, 6)]);
        let d = standard_decomposition(&cyc(&[1, 4, 5, 2, 3]));
        assert_eq!(d.rows, vec![(1, 3), (4, 5)]);
        assert_eq!(d.first_row_end(), 3);
        assert_eq!(d.to_string(), "1-3 | 4-5");
        let d = standard_decomposition(&cyc(&[1, 5, 2, 6, 3, 7, 4]));
        assert_eq!(d.rows, vec![(1, 4), (5, 7)]);
        let d = standard_decomposition(&cyc(&[1, 4, 3, 2]));
        assert_eq!(d.rows, vec![(1, 2), (3, 3), (4, 4)]);
        assert_eq!(d.to_string(), "1-2 | 3 | 4");
    }

    #[test]
    fn two_standard_examples() {
        assert!(!is_two_standard(&Cycle::identity(4)));
        assert!(is_two_standard(&cyc(&[1, 4, 5, 2, 3, 6])));
        assert!(!is_two_standard(&cyc(&[1, 4, 3, 2])));
    }

    #[test]
    fn enumerate_n4() {
        let got: Vec<String> = enumerate_two_standard(4).iter().map(|c| c.compact()).collect();
        assert_eq!(got, vec!["1243", "1324", "1342", "1423"]);
        assert_eq!(enumerate_two_standard(6).len(), 26);
        assert_eq!(enumerate_two_standard(8).len(), 120);
        assert_eq!(enumerate_two_standard(3).len(), 1);
    }

    #[test]
    fn distance_examples() {
        assert_eq!(
            diagonal_distance(&cyc(&[1, 3, 4, 5, 2, 6])).unwrap(),
            DiagonalDistance::Finite { value: 2, witness: (1, 3) }
        );
        assert_eq!(diagonal_distance(&cyc(&[1, 4, 5, 2, 3, 6])).unwrap().value(), Some(3));
        assert_eq!(diagonal_distance(&cyc(&[1, 5, 2, 6, 3, 7, 4])).unwrap().value(), Some(3));
        // Same-row pairs wrapping past 1.
        assert_eq!(
            diagonal_distance(&cyc(&[1, 2, 3, 8, 4, 5, 6, 7])).unwrap(),
            DiagonalDistance::Finite { value: 2, witness: (1, 7) }
        );
        assert_eq!(diagonal_distance(&cyc(&[1, 4, 5, 2, 6, 7, 8, 3])).unwrap().value(), Some(2));
        assert!(matches!(diagonal_distance(&Cycle::identity(5)), Err(Error::NotTwoStandard(_))));
    }

    #[test]
    fn empty_qualifying_set_is_infinite() {
        // The triangle's only region: every pair is a side.
        assert_eq!(diagonal_distance(&cyc(&[1, 3, 2])).unwrap(), DiagonalDistance::Infinite);
    }

    #[test]
    fn moves_match_worked_lists() {
        let mv = |element, steps, swapped| apply_move(6, MoveDerivation { element, steps, swapped }).compact();
        let move1: Vec<String> = (1..=4).map(|s| mv(1, s, false)).collect();
        assert_eq!(move1, ["134562", "145623", "156234", "162345"]);
        let move1_swap: Vec<String> = (1..=4).map(|s| mv(1, s, true)).collect();
        assert_eq!(move1_swap, ["134526", "145263", "152634", "126345"]);
        let move6_swap: Vec<String> = (1..=4).map(|s| mv(6, s, true)).collect();
        assert_eq!(move6_swap, ["156234", "152634", "152364", "152346"]);
        assert_eq!(gen_distance_two(6).len(), 24);
        assert_eq!(gen_distance_two(7).len(), 42);
        assert_eq!(gen_distance_two(8).len(), 64);
    }

    #[test]
    fn pattern_examples() {
        let c = cyc(&[1, 5, 2, 6, 3, 7, 4, 8]);
        let at = pattern_at(&c, [1, 2, 4, 5, 7, 8]).unwrap();
        assert_eq!(at.pattern, IndefinitePattern::P145236);
        assert_eq!(at.rotation, 0);
        assert!(contains_indefinite_pattern(&c).is_some());

        let c = cyc(&[1, 5, 2, 6, 3, 7, 8, 4]);
        let at = pattern_at(&c, [2, 3, 5, 6, 7, 8]).unwrap();
        assert_eq!(at.pattern, IndefinitePattern::P125634);
        assert_eq!(at.rotation, 1);

        assert!(contains_indefinite_pattern(&cyc(&[1, 3, 4, 5, 6, 2])).is_none());
        assert!(contains_indefinite_pattern(&cyc(&[1, 4, 2, 3])).is_none());
    }

    #[test]
    fn classify_examples() {
        let c = classify(&cyc(&[1, 4, 5, 2, 3, 6])).unwrap();
        assert_eq!(c.verdict, Verdict::Indefinite);
        let c = classify(&cyc(&[1, 5, 2, 6, 3, 7, 4])).unwrap();
        assert_eq!(c.evidence, Evidence::Exceptional);
        let target = cyc(&[1, 3, 4, 5, 2, 6]);
        let c = classify(&target).unwrap();
        assert!(matches!(c.evidence, Evidence::Move(_)));
        assert!(c.validate(&target));
        assert!(!c.validate(&cyc(&[1, 4, 5, 2, 3, 6])));
        assert!(classify(&Cycle::identity(6)).is_err());
        let c = classify(&cyc(&[1, 2, 5, 6, 3, 4])).unwrap();
        assert_eq!(c.to_string(), "indefinite pattern=125634 positions=1,2,3,4,5,6");
    }

    #[test]
    fn swap_examples() {
        let c = cyc(&[1, 4, 5, 2, 3, 6]);
        assert_eq!(swap_adjacent(&c, 2, 5).unwrap().compact(), "142536");
        assert_eq!(swap_adjacent(&cyc(&[1, 2, 3]), 1, 2).unwrap().compact(), "132");
        // Wrap-around neighbours.
        assert_eq!(swap_adjacent(&c, 6, 1).unwrap().compact(), "164523");
        assert!(matches!(swap_adjacent(&c, 1, 5), Err(Error::NotAdjacent { .. })));
    }

    #[test]
    fn subcycle_examples() {
        assert!(contains_subcycle_ikj(&cyc(&[1, 4, 5, 2, 3, 6]), 1, 2, 4));
        assert!(!contains_subcycle_ikj(&Cycle::identity(5), 1, 3, 5));
        assert!(contains_subcycle_ikj(&cyc(&[1, 3, 2]), 1, 2, 3));
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(cyclic_relabel_orbit(&cyc(&[1, 2, 5, 6, 3, 4, 7, 8])).len(), 8);
        assert_eq!(cyclic_relabel_orbit(&Cycle::identity(7)).len(), 1);
        let os = orbits(&enumerate_two_standard(8));
        assert_eq!(os.len(), 15);
        assert!(os.iter().all(|o| o.len() == 8));
    }
}
