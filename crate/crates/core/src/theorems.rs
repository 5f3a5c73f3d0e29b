//! Closed-form enumeration of every arrow in `K(L_n)`.
//!
//! Double arrows come from three families (types A/B, type C, type D↔IV);
//! single down-arrows from two (type C into IV, and types A/B/D into IV);
//! single up-arrows are the conjugates of the single down-arrows.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::context::{arrows_via_covers, ArrowRelations};
use crate::error::Error;
use crate::irreducible::{
    classify_join_type, classify_meet_type, join_irreducibles, meet_irreducibles, TypeLabel,
};
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArrowKind {
    Double,
    DownOnly,
    UpOnly,
}

impl ArrowKind {
    /// Glyph used in listings and csv tables.
    pub fn glyph(self) -> &'static str {
        match self {
            ArrowKind::Double => "<->",
            ArrowKind::DownOnly => "<-",
            ArrowKind::UpOnly => "->",
        }
    }
}

impl fmt::Display for ArrowKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.glyph())
    }
}

/// Which closed-form family produced an arrow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremSource {
    /// `((k+1)^b, k^l) ⇕ (n-b-l, 1^(b+l))`.
    AB,
    /// `(k, 1^(n-k)) ⇕ ((k-1)^t, r)`.
    C,
    /// Type D with every admissible `t <= min(k-1, d+1)`.
    CD,
    /// Type A/B into IV; covered by [`TheoremSource::ABCDdownIV`] at `d = 0`.
    ABDownIV,
    /// `(k, 1^d) ↙ (k-1, t^c, r)`.
    Cdown1,
    /// Type D into IV; covered by [`TheoremSource::ABCDdownIV`] at `d >= 1`.
    CDdown,
    /// `((k+1)^b, k^l, 1^d) ↙ (a, t^(b+l-1), d+1)` for `d+1 < t <= k-1`.
    ABCDdownIV,
    DualCdown1,
    DualABCDdownIV,
}

impl TheoremSource {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremSource::AB => "AB",
            TheoremSource::C => "C",
            TheoremSource::CD => "CD",
            TheoremSource::ABDownIV => "ABDownIV",
            TheoremSource::Cdown1 => "Cdown1",
            TheoremSource::CDdown => "CDdown",
            TheoremSource::ABCDdownIV => "ABCDdownIV",
            TheoremSource::DualCdown1 => "DualCdown1",
            TheoremSource::DualABCDdownIV => "DualABCDdownIV",
        }
    }

    fn dual(self) -> Self {
        match self {
            TheoremSource::Cdown1 => TheoremSource::DualCdown1,
            TheoremSource::ABCDdownIV | TheoremSource::ABDownIV | TheoremSource::CDdown => {
                TheoremSource::DualABCDdownIV
            }
            TheoremSource::DualCdown1 => TheoremSource::Cdown1,
            TheoremSource::DualABCDdownIV => TheoremSource::ABCDdownIV,
            other => other,
        }
    }
}

impl fmt::Display for TheoremSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One theorem instance that yields an arrow, with the parameters it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub source: TheoremSource,
    pub params: Vec<(&'static str, u32)>,
}

/// An arrow predicted by the closed-form families. Arrows reachable through
/// several families carry all of their provenances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictedArrow {
    pub g: Partition,
    pub m: Partition,
    pub kind: ArrowKind,
    pub provenance: Vec<Provenance>,
}

impl PredictedArrow {
    /// The first (lowest-ordered) source tag.
    pub fn source(&self) -> TheoremSource {
        self.provenance[0].source
    }
}

fn runs(runs: &[(u32, u32)]) -> Partition {
    Partition::from_runs(runs)
}

/// Collects raw theorem instances, merging duplicates by `(g, m)`.
struct Collector {
    kind: ArrowKind,
    map: BTreeMap<(Partition, Partition), Vec<Provenance>>,
}

impl Collector {
    fn new(kind: ArrowKind) -> Self {
        Self { kind, map: BTreeMap::new() }
    }

    fn push(&mut self, g: Partition, m: Partition, source: TheoremSource, params: &[(&'static str, u32)]) {
        debug_assert_eq!(g.n(), m.n());
        let entry = self.map.entry((g, m)).or_default();
        let prov = Provenance { source, params: params.to_vec() };
        if !entry.contains(&prov) {
            entry.push(prov);
            entry.sort_by_key(|p| p.source);
        }
    }

    fn finish(self) -> Vec<PredictedArrow> {
        let kind = self.kind;
        self.map
            .into_iter()
            .map(|((g, m), provenance)| PredictedArrow { g, m, kind, provenance })
            .collect()
    }
}

/// All double arrows of `K(L_n)`, sorted by `(g, m)`.
pub fn double_arrows(n: u32) -> Vec<PredictedArrow> {
    let mut out = Collector::new(ArrowKind::Double);
    if n < 2 {
        return out.finish();
    }

    // Types A/B: for each width s = b + l < n, the least partition of width s.
    for s in 1..n {
        let (k, b) = (n / s, n % s);
        let l = s - b;
        let a = n - s;
        let g = runs(&[(k + 1, b), (k, l)]);
        let m = runs(&[(a, 1), (1, s)]);
        out.push(g, m, TheoremSource::AB, &[("k", k), ("b", b), ("l", l), ("a", a)]);
    }

    // Hooks (k, 1^(n-k)) for 2 <= k <= n.
    for k in 2..=n {
        let (t, r) = (n / (k - 1), n % (k - 1));
        let g = runs(&[(k, 1), (1, n - k)]);
        let m = runs(&[(k - 1, t), (r, 1)]);
        out.push(g, m, TheoremSource::C, &[("k", k), ("t", t), ("r", r)]);
    }

    // Type D against type IV.
    for_each_type_d(n, |k, b, l, d| {
        let g = runs(&[(k + 1, b), (k, l), (1, d)]);
        for t in 2..=(k - 1).min(d + 1) {
            let a = b + (b + l) * (k - t) + t - 1;
            let (c, r) = ((n - a) / t, (n - a) % t);
            let m = runs(&[(a, 1), (t, c), (r, 1)]);
            debug_assert!(c >= b + l && a > t);
            out.push(
                g.clone(),
                m,
                TheoremSource::CD,
                &[("k", k), ("b", b), ("l", l), ("d", d), ("t", t), ("a", a), ("c", c), ("r", r)],
            );
        }
    });
    out.finish()
}

/// Calls `f(k, b, l, d)` for every type-D parameter tuple with
/// `n = b(k+1) + lk + d`, `k >= 3`, `l, d >= 1`, `b + l >= 2`.
fn for_each_type_d(n: u32, mut f: impl FnMut(u32, u32, u32, u32)) {
    for k in 3..n {
        for b in 0..=n / (k + 1) {
            let after_b = n - (k + 1) * b;
            for l in 1..=after_b / k {
                let d = after_b - k * l;
                if d >= 1 && b + l >= 2 {
                    f(k, b, l, d);
                }
            }
        }
    }
}

/// Calls `f(k, b, l, d)` for every `n = b(k+1) + lk + d` with `b, d >= 0`,
/// `l >= 1`, `b + l >= 3` and `k >= d + 3`.
fn for_each_abcd_down(n: u32, mut f: impl FnMut(u32, u32, u32, u32)) {
    for d in 0..n {
        for k in d + 3..=n {
            for b in 0..=(n - d) / (k + 1) {
                let rest = n - d - (k + 1) * b;
                if rest.is_multiple_of(k) {
                    let l = rest / k;
                    if l >= 1 && b + l >= 3 {
                        f(k, b, l, d);
                    }
                }
            }
        }
    }
}

/// Calls `f(k, d, t, c, r)` for hooks `(k, 1^d)` with `k >= 4`,
/// `2 <= t <= k-2`, `2t <= d+1`, and `d + 1 = ct + r`.
fn for_each_cdown1(n: u32, mut f: impl FnMut(u32, u32, u32, u32, u32)) {
    for k in 4..n {
        let d = n - k;
        for t in 2..=k - 2 {
            if 2 * t > d + 1 {
                break;
            }
            f(k, d, t, (d + 1) / t, (d + 1) % t);
        }
    }
}

/// All down-arrows that are not up-arrows, sorted by `(g, m)`.
pub fn single_down_arrows(n: u32) -> Vec<PredictedArrow> {
    let mut out = Collector::new(ArrowKind::DownOnly);

    for_each_cdown1(n, |k, d, t, c, r| {
        let g = runs(&[(k, 1), (1, d)]);
        let m = runs(&[(k - 1, 1), (t, c), (r, 1)]);
        out.push(g, m, TheoremSource::Cdown1, &[("k", k), ("d", d), ("t", t), ("c", c), ("r", r)]);
    });

    for_each_abcd_down(n, |k, b, l, d| {
        let g = runs(&[(k + 1, b), (k, l), (1, d)]);
        for t in d + 2..k {
            let a = b + (b + l) * (k - t) + t - 1;
            let m = runs(&[(a, 1), (t, b + l - 1), (d + 1, 1)]);
            debug_assert!(a >= t + 2);
            out.push(
                g.clone(),
                m,
                TheoremSource::ABCDdownIV,
                &[("k", k), ("b", b), ("l", l), ("d", d), ("t", t), ("a", a)],
            );
        }
    });
    out.finish()
}

/// All up-arrows that are not down-arrows: `m* ↗ g*` for each single `g ↙ m`.
pub fn single_up_arrows(n: u32) -> Vec<PredictedArrow> {
    let mut out = Collector::new(ArrowKind::UpOnly);
    for arrow in single_down_arrows(n) {
        let (g, m) = (arrow.m.conjugate(), arrow.g.conjugate());
        for p in arrow.provenance {
            out.push(g.clone(), m.clone(), p.source.dual(), &p.params);
        }
    }
    let out = out.finish();
    debug_assert_eq!(
        out.iter().map(|a| (&a.g, &a.m)).collect::<Vec<_>>(),
        single_up_arrows_direct(n).iter().map(|a| (&a.g, &a.m)).collect::<Vec<_>>(),
        "conjugated down-arrows disagree with the dual formulas at n = {n}"
    );
    out
}

/// Single up-arrows evaluated from the dual formulas themselves rather than by
/// conjugation. Kept as an independent cross-check of [`single_up_arrows`].
pub fn single_up_arrows_direct(n: u32) -> Vec<PredictedArrow> {
    let mut out = Collector::new(ArrowKind::UpOnly);

    for_each_cdown1(n, |k, d, t, c, r| {
        let kappa = c + 1;
        let g = runs(&[(kappa + 1, r), (kappa, t - r), (1, k - 1 - t)]);
        let m = runs(&[(d + 1, 1), (1, k - 1)]);
        out.push(g, m, TheoremSource::DualCdown1, &[("k", k), ("d", d), ("t", t), ("c", c), ("r", r)]);
    });

    for_each_abcd_down(n, |k, b, l, d| {
        let kappa = b + l;
        let m = runs(&[(kappa + d, 1), (kappa, k - 1), (b, 1)]);
        for t in d + 2..k {
            let a = b + kappa * (k - t) + t - 1;
            let g = runs(&[(kappa + 1, d + 1), (kappa, t - d - 1), (1, a - t)]);
            out.push(
                g,
                m.clone(),
                TheoremSource::DualABCDdownIV,
                &[("k", k), ("b", b), ("l", l), ("d", d), ("t", t), ("a", a)],
            );
        }
    });
    out.finish()
}

/// Every predicted arrow: doubles, then down-only, then up-only.
pub fn all_predicted(n: u32) -> Vec<PredictedArrow> {
    let mut all = double_arrows(n);
    all.extend(single_down_arrows(n));
    all.extend(single_up_arrows(n));
    all
}

/// The predicted arrows in index form against the standard context's orderings.
pub fn predicted_arrows(n: u32) -> Result<ArrowRelations, Error> {
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let objects: Vec<Partition> = join_irreducibles(n).into_iter().map(|i| i.partition).collect();
    let attributes: Vec<Partition> = meet_irreducibles(n).into_iter().map(|i| i.partition).collect();
    let locate = |a: &PredictedArrow| {
        let g = objects.binary_search(&a.g).expect("predicted object is join-irreducible");
        let m = attributes.binary_search(&a.m).expect("predicted attribute is meet-irreducible");
        (g, m)
    };
    let double: BTreeSet<_> = double_arrows(n).iter().map(locate).collect();
    let down_only: BTreeSet<_> = single_down_arrows(n).iter().map(locate).collect();
    let up_only: BTreeSet<_> = single_up_arrows(n).iter().map(locate).collect();
    let down = double.union(&down_only).copied().collect();
    let up = double.union(&up_only).copied().collect();
    Ok(ArrowRelations { down, up, double })
}

/// One row of the first-occurrence table: a type pattern and the least `n`
/// at which it shows up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PatternRow {
    pub join: TypeLabel,
    pub kind: ArrowKind,
    pub meet: TypeLabel,
    pub first_n: u32,
    pub witness: (&'static [u32], &'static [u32]),
    pub source: TheoremSource,
}

macro_rules! row {
    ($j:ident, $k:ident, $m:ident, $n:expr, $g:expr, $mm:expr, $s:ident) => {
        PatternRow {
            join: TypeLabel::$j,
            kind: ArrowKind::$k,
            meet: TypeLabel::$m,
            first_n: $n,
            witness: (&$g, &$mm),
            source: TheoremSource::$s,
        }
    };
}

/// The sixteen type patterns with their published first occurrences.
pub const PATTERN_TABLE: [PatternRow; 16] = [
    row!(A, Double, I, 2, [2], [1, 1], AB),
    row!(B, Double, I, 3, [2, 1], [1, 1, 1], AB),
    row!(A, Double, II, 3, [3], [2, 1], AB),
    row!(A, Double, III, 4, [2, 2], [2, 1, 1], AB),
    row!(B, Double, III, 5, [2, 2, 1], [2, 1, 1, 1], AB),
    row!(C, Double, I, 4, [3, 1], [2, 2], C),
    row!(C, Double, II, 5, [3, 1, 1], [2, 2, 1], C),
    row!(D, Double, IV, 7, [3, 3, 1], [3, 2, 2], CD),
    row!(C, DownOnly, IV, 7, [4, 1, 1, 1], [3, 2, 2], Cdown1),
    row!(A, DownOnly, IV, 9, [3, 3, 3], [4, 2, 2, 1], ABCDdownIV),
    row!(B, DownOnly, IV, 10, [4, 3, 3], [5, 2, 2, 1], ABCDdownIV),
    row!(D, DownOnly, IV, 13, [4, 4, 4, 1], [5, 3, 3, 2], ABCDdownIV),
    row!(D, UpOnly, III, 7, [3, 3, 1], [4, 1, 1, 1], DualCdown1),
    row!(D, UpOnly, I, 9, [4, 3, 1, 1], [3, 3, 3], DualABCDdownIV),
    row!(D, UpOnly, II, 10, [4, 3, 1, 1, 1], [3, 3, 3, 1], DualABCDdownIV),
    row!(D, UpOnly, IV, 13, [4, 4, 3, 1, 1], [4, 3, 3, 3], DualABCDdownIV),
];

/// Observed first occurrence of one pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstOccurrence {
    pub row: PatternRow,
    /// Least `n <= max_n` with an arrow of this pattern.
    pub first_n: Option<u32>,
    /// All witnesses at `first_n`, sorted by `(g, m)`.
    pub witnesses: Vec<(Partition, Partition)>,
}

impl FirstOccurrence {
    /// The descending-lex-first witness at `first_n`.
    pub fn witness(&self) -> Option<&(Partition, Partition)> {
        self.witnesses.first()
    }

    fn published_witness(&self) -> (Partition, Partition) {
        let (g, m) = self.row.witness;
        (Partition::from_canonical(g.to_vec()), Partition::from_canonical(m.to_vec()))
    }

    pub fn threshold_matches(&self) -> bool {
        self.first_n == Some(self.row.first_n)
    }

    /// Whether the published witness is among the witnesses at the first `n`.
    pub fn published_witness_found(&self) -> bool {
        self.witnesses.contains(&self.published_witness())
    }

    /// Whether the tiebreak picks a different witness than the published one.
    pub fn tiebreak_diverges(&self) -> bool {
        self.witness() != Some(&self.published_witness())
    }
}

/// Least `n` (up to `max_n`) at which each of the sixteen type patterns occurs,
/// computed from the cover characterisation of the arrows.
pub fn first_occurrence_report(max_n: u32) -> Result<Vec<FirstOccurrence>, Error> {
    if max_n < 13 {
        return Err(Error::TooSmall { n: max_n, min: 13 });
    }
    let mut report: Vec<FirstOccurrence> = PATTERN_TABLE
        .iter()
        .map(|&row| FirstOccurrence { row, first_n: None, witnesses: Vec::new() })
        .collect();

    for n in 2..=max_n {
        if report.iter().all(|r| r.first_n.is_some()) {
            break;
        }
        let joins = join_irreducibles(n);
        let meets = meet_irreducibles(n);
        let arrows = arrows_via_covers(n)?;
        let mut seen: BTreeMap<(TypeLabel, ArrowKind, TypeLabel), Vec<(Partition, Partition)>> =
            BTreeMap::new();
        let mut record = |pairs: &mut dyn Iterator<Item = &(usize, usize)>, kind: ArrowKind| {
            for &(g, m) in pairs {
                let key = (joins[g].type_label(), kind, meets[m].type_label());
                seen.entry(key)
                    .or_default()
                    .push((joins[g].partition.clone(), meets[m].partition.clone()));
            }
        };
        record(&mut arrows.double.iter(), ArrowKind::Double);
        record(&mut arrows.down_only(), ArrowKind::DownOnly);
        record(&mut arrows.up_only(), ArrowKind::UpOnly);

        for entry in report.iter_mut().filter(|r| r.first_n.is_none()) {
            if let Some(w) = seen.get(&(entry.row.join, entry.row.kind, entry.row.meet)) {
                let mut w = w.clone();
                w.sort();
                entry.first_n = Some(n);
                entry.witnesses = w;
            }
        }
    }
    Ok(report)
}

/// The type labels of an arrow's endpoints.
pub fn pattern_of(arrow: &PredictedArrow) -> Option<(TypeLabel, TypeLabel)> {
    Some((classify_join_type(&arrow.g)?.label(), classify_meet_type(&arrow.m)?.label()))
}
