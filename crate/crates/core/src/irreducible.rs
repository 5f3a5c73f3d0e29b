//! Completely join- and meet-irreducible partitions and their four-type
//! taxonomies.
//!
//! Join side, with `(v^c)` meaning `c` copies of `v`:
//!
//! | type | shape                        | ranges                              |
//! |------|------------------------------|-------------------------------------|
//! | A    | `(k^l)`                      | `k >= 2, l >= 1`                    |
//! | B    | `(k^b, (k-1)^l)`             | `k >= 2, b >= 1, l >= 1`            |
//! | C    | `(k, 1^d)`                   | `k >= 3, d >= 1`                    |
//! | D    | `((k+1)^b, k^l, 1^d)`        | `k >= 3, l, d >= 1, b + l >= 2`     |
//!
//! Meet side:
//!
//! | type | shape                        | ranges                              |
//! |------|------------------------------|-------------------------------------|
//! | I    | `(t^c)`                      | `t >= 1, c >= 2`                    |
//! | II   | `(t^c, r)`                   | `t > r >= 1, c >= 1`                |
//! | III  | `(a, 1^c)`                   | `a >= 2, c >= 2`                    |
//! | IV   | `(a, t^c, r)`                | `a > t > r >= 0, t >= 2, c >= 2`    |
//!
//! Conjugation maps A, B, C, D onto I, II, III, IV respectively.

use alloc::vec::Vec;
use core::fmt;

use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Join,
    Meet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    I,
    II,
    III,
    IV,
}

impl TypeLabel {
    pub fn kind(self) -> Kind {
        match self {
            TypeLabel::A | TypeLabel::B | TypeLabel::C | TypeLabel::D => Kind::Join,
            _ => Kind::Meet,
        }
    }

    /// The label on the other side of conjugation.
    pub fn dual(self) -> Self {
        match self {
            TypeLabel::A => TypeLabel::I,
            TypeLabel::B => TypeLabel::II,
            TypeLabel::C => TypeLabel::III,
            TypeLabel::D => TypeLabel::IV,
            TypeLabel::I => TypeLabel::A,
            TypeLabel::II => TypeLabel::B,
            TypeLabel::III => TypeLabel::C,
            TypeLabel::IV => TypeLabel::D,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TypeLabel::A => "A",
            TypeLabel::B => "B",
            TypeLabel::C => "C",
            TypeLabel::D => "D",
            TypeLabel::I => "I",
            TypeLabel::II => "II",
            TypeLabel::III => "III",
            TypeLabel::IV => "IV",
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A matched template together with its defining parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Template {
    A { k: u32, l: u32 },
    B { k: u32, b: u32, l: u32 },
    C { k: u32, d: u32 },
    D { k: u32, b: u32, l: u32, d: u32 },
    I { t: u32, c: u32 },
    II { t: u32, c: u32, r: u32 },
    III { a: u32, c: u32 },
    IV { a: u32, t: u32, c: u32, r: u32 },
}

impl Template {
    pub fn label(&self) -> TypeLabel {
        match self {
            Template::A { .. } => TypeLabel::A,
            Template::B { .. } => TypeLabel::B,
            Template::C { .. } => TypeLabel::C,
            Template::D { .. } => TypeLabel::D,
            Template::I { .. } => TypeLabel::I,
            Template::II { .. } => TypeLabel::II,
            Template::III { .. } => TypeLabel::III,
            Template::IV { .. } => TypeLabel::IV,
        }
    }

    /// Whether the parameters lie in the template's admissible range.
    pub fn is_valid(&self) -> bool {
        match *self {
            Template::A { k, l } => k >= 2 && l >= 1,
            Template::B { k, b, l } => k >= 2 && b >= 1 && l >= 1,
            Template::C { k, d } => k >= 3 && d >= 1,
            Template::D { k, b, l, d } => k >= 3 && l >= 1 && d >= 1 && b + l >= 2,
            Template::I { t, c } => t >= 1 && c >= 2,
            Template::II { t, c, r } => t > r && r >= 1 && c >= 1,
            Template::III { a, c } => a >= 2 && c >= 2,
            Template::IV { a, t, c, r } => a > t && t > r && t >= 2 && c >= 2,
        }
    }

    /// Named parameters in a fixed order, for reports.
    pub fn params(&self) -> Vec<(&'static str, u32)> {
        match *self {
            Template::A { k, l } => [("k", k), ("l", l)].to_vec(),
            Template::B { k, b, l } => [("k", k), ("b", b), ("l", l)].to_vec(),
            Template::C { k, d } => [("k", k), ("d", d)].to_vec(),
            Template::D { k, b, l, d } => [("k", k), ("b", b), ("l", l), ("d", d)].to_vec(),
            Template::I { t, c } => [("t", t), ("c", c)].to_vec(),
            Template::II { t, c, r } => [("t", t), ("c", c), ("r", r)].to_vec(),
            Template::III { a, c } => [("a", a), ("c", c)].to_vec(),
            Template::IV { a, t, c, r } => [("a", a), ("t", t), ("c", c), ("r", r)].to_vec(),
        }
    }

    /// The partition this template instance describes.
    pub fn partition(&self) -> Partition {
        match *self {
            Template::A { k, l } => Partition::from_runs(&[(k, l)]),
            Template::B { k, b, l } => Partition::from_runs(&[(k, b), (k - 1, l)]),
            Template::C { k, d } => Partition::from_runs(&[(k, 1), (1, d)]),
            Template::D { k, b, l, d } => Partition::from_runs(&[(k + 1, b), (k, l), (1, d)]),
            Template::I { t, c } => Partition::from_runs(&[(t, c)]),
            Template::II { t, c, r } => Partition::from_runs(&[(t, c), (r, 1)]),
            Template::III { a, c } => Partition::from_runs(&[(a, 1), (1, c)]),
            Template::IV { a, t, c, r } => Partition::from_runs(&[(a, 1), (t, c), (r, 1)]),
        }
    }

    /// The unique lower cover (join side) or upper cover (meet side), in closed form.
    pub fn unique_cover(&self) -> Partition {
        match *self {
            // brick falls from the cliff at the end
            Template::A { k, l } => Partition::from_runs(&[(k, l - 1), (k - 1, 1), (1, 1)]),
            // (2^b, 1^l): the brick slips across the step at position b
            Template::B { k: 2, b, l } => Partition::from_runs(&[(2, b - 1), (1, l + 2)]),
            Template::B { k, b, l } => {
                Partition::from_runs(&[(k, b), (k - 1, l - 1), (k - 2, 1), (1, 1)])
            }
            Template::C { k, d } => Partition::from_runs(&[(k - 1, 1), (2, 1), (1, d - 1)]),
            Template::D { k, b, l, d } => {
                Partition::from_runs(&[(k + 1, b), (k, l - 1), (k - 1, 1), (2, 1), (1, d - 1)])
            }
            Template::I { t, c } => Partition::from_runs(&[(t + 1, 1), (t, c - 2), (t - 1, 1)]),
            Template::II { t, c: 1, r } => Partition::from_runs(&[(t + 1, 1), (r - 1, 1)]),
            Template::II { t, c, r } => {
                Partition::from_runs(&[(t + 1, 1), (t, c - 2), (t - 1, 1), (r, 1)])
            }
            Template::III { a, c } => Partition::from_runs(&[(a, 1), (2, 1), (1, c - 2)]),
            Template::IV { a, t, c, r } => {
                Partition::from_runs(&[(a, 1), (t + 1, 1), (t, c - 2), (t - 1, 1), (r, 1)])
            }
        }
    }

    /// The template of the conjugate partition.
    pub fn conjugate(&self) -> Template {
        // Read the conjugate's shape back through the matchers; the duality of the
        // type pairs guarantees a match on the other side.
        let q = self.partition().conjugate();
        let found = match self.label().kind() {
            Kind::Join => classify_meet_type(&q),
            Kind::Meet => classify_join_type(&q),
        };
        found.expect("conjugate of an irreducible is irreducible of the dual kind")
    }
}

fn runs(p: &Partition) -> Vec<(u32, u32)> {
    let mut out: Vec<(u32, u32)> = Vec::new();
    for &x in p.parts() {
        match out.last_mut() {
            Some((v, c)) if *v == x => *c += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

fn match_a(r: &[(u32, u32)]) -> Option<Template> {
    match *r {
        [(k, l)] if k >= 2 => Some(Template::A { k, l }),
        _ => None,
    }
}

fn match_b(r: &[(u32, u32)]) -> Option<Template> {
    match *r {
        [(k, b), (k1, l)] if k1 + 1 == k => Some(Template::B { k, b, l }),
        _ => None,
    }
}

fn match_c(r: &[(u32, u32)]) -> Option<Template> {
    match *r {
        [(k, 1), (1, d)] if k >= 3 => Some(Template::C { k, d }),
        _ => None,
    }
}

fn match_d(r: &[(u32, u32)]) -> Option<Template> {
    match *r {
        [(k, l), (1, d)] if k >= 3 && l >= 2 => Some(Template::D { k, b: 0, l, d }),
        [(k1, b), (k, l), (1, d)] if k >= 3 && k1 == k + 1 => Some(Template::D { k, b, l, d }),
        _ => None,
    }
}

fn match_i(r: &[(u32, u32)]) -> Option<Template> {
    match *r {
        [(t, c)] if c >= 2 => Some(Template::I { t, c }),
        _ => None,
    }
}

fn match_ii(r: &[(u32, u32)]) -> Option<Template> {
    match *r {
        [(t, c), (r, 1)] => Some(Template::II { t, c, r }),
        _ => None,
    }
}

fn match_iii(r: &[(u32, u32)]) -> Option<Template> {
    match *r {
        [(a, 1), (1, c)] if a >= 2 && c >= 2 => Some(Template::III { a, c }),
        _ => None,
    }
}

fn match_iv(r: &[(u32, u32)]) -> Option<Template> {
    match *r {
        [(a, 1), (t, c), (r, 1)] if t >= 2 && c >= 2 => Some(Template::IV { a, t, c, r }),
        [(a, 1), (t, c)] if t >= 2 && c >= 2 => Some(Template::IV { a, t, c, r: 0 }),
        _ => None,
    }
}

type Matcher = fn(&[(u32, u32)]) -> Option<Template>;

fn classify(p: &Partition, matchers: [Matcher; 4]) -> Option<Template> {
    let r = runs(p);
    let mut found = None;
    for m in matchers {
        if let Some(t) = m(&r) {
            debug_assert!(found.is_none(), "type templates overlap on {p}");
            debug_assert!(t.is_valid());
            found = Some(t);
            if !cfg!(debug_assertions) {
                break;
            }
        }
    }
    found
}

/// The join-side template matching `p`, or `None` if `p` is not completely join-irreducible.
pub fn classify_join_type(p: &Partition) -> Option<Template> {
    classify(p, [match_a, match_b, match_c, match_d])
}

/// The meet-side template matching `p`, or `None` if `p` is not completely meet-irreducible.
pub fn classify_meet_type(p: &Partition) -> Option<Template> {
    classify(p, [match_i, match_ii, match_iii, match_iv])
}

/// An irreducible partition with its type, parameters and unique cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibleInfo {
    pub partition: Partition,
    pub template: Template,
    pub unique_cover: Partition,
}

impl IrreducibleInfo {
    pub fn from_template(template: Template) -> Self {
        debug_assert!(template.is_valid());
        Self { partition: template.partition(), unique_cover: template.unique_cover(), template }
    }

    pub fn kind(&self) -> Kind {
        self.template.label().kind()
    }

    pub fn type_label(&self) -> TypeLabel {
        self.template.label()
    }
}

/// All completely join-irreducible partitions of `n`, descending lexicographic.
///
/// Generated from the four templates directly, without building `L_n`.
pub fn join_irreducibles(n: u32) -> Vec<IrreducibleInfo> {
    let mut out = Vec::new();
    // A: n = k l
    for l in 1..=n {
        if n.is_multiple_of(l) && n / l >= 2 {
            out.push(Template::A { k: n / l, l });
        }
    }
    // B: n = k b + (k-1) l
    for k in 2..=n {
        for b in 1..=n / k {
            let rest = n - k * b;
            if rest > 0 && rest.is_multiple_of(k - 1) {
                out.push(Template::B { k, b, l: rest / (k - 1) });
            }
        }
    }
    // C: n = k + d
    for k in 3..n {
        out.push(Template::C { k, d: n - k });
    }
    // D: n = (k+1) b + k l + d
    for k in 3..n {
        for b in 0..=n / (k + 1) {
            let after_b = n - (k + 1) * b;
            for l in 1..=after_b / k {
                let d = after_b - k * l;
                if d >= 1 && b + l >= 2 {
                    out.push(Template::D { k, b, l, d });
                }
            }
        }
    }
    finish(out)
}

/// All completely meet-irreducible partitions of `n`, descending lexicographic.
pub fn meet_irreducibles(n: u32) -> Vec<IrreducibleInfo> {
    let mut out = Vec::new();
    // I: n = t c
    for c in 2..=n {
        if n.is_multiple_of(c) {
            out.push(Template::I { t: n / c, c });
        }
    }
    // II: n = t c + r
    for t in 2..=n {
        for c in 1..=n / t {
            let r = n - t * c;
            if r >= 1 && r < t {
                out.push(Template::II { t, c, r });
            }
        }
    }
    // III: n = a + c
    for c in 2..n {
        if n - c >= 2 {
            out.push(Template::III { a: n - c, c });
        }
    }
    // IV: n = a + t c + r
    for t in 2..n {
        for c in 2..=n / t {
            for r in 0..t {
                let used = t * c + r;
                if used < n && n - used > t {
                    out.push(Template::IV { a: n - used, t, c, r });
                }
            }
        }
    }
    finish(out)
}

fn finish(templates: Vec<Template>) -> Vec<IrreducibleInfo> {
    let mut out: Vec<IrreducibleInfo> =
        templates.into_iter().map(IrreducibleInfo::from_template).collect();
    out.sort_by(|x, y| x.partition.cmp(&y.partition));
    debug_assert!(out.windows(2).all(|w| w[0].partition != w[1].partition));
    out
}
