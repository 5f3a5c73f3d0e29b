//! Per-`n` verification: the three arrow computations against each other,
//! the 1×1 closure count, and the structural properties of the arrows.

use std::collections::BTreeMap;
use std::fmt;

use domlat_core::closure::count_1x1_closures;
use domlat_core::context::{arrows_bruteforce, arrows_via_covers, standard_context};
use domlat_core::irreducible::{join_irreducibles, meet_irreducibles};
use domlat_core::theorems::predicted_arrows;
use domlat_core::{ArrowRelations, TypeLabel};
use rayon::prelude::*;

use crate::error::CliError;
use crate::range::NRange;

pub const DEFAULT_BF_CAP: u32 = 25;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub n: u32,
    pub checks: Vec<Check>,
    pub doubles: usize,
    pub down_only: usize,
    pub up_only: usize,
    /// `(found, 2n-4)` for `n >= 3`.
    pub closures_1x1: Option<(usize, usize)>,
    /// Whether the definitional brute force was run (`n <= bf_cap`).
    pub bruteforce: bool,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "n={} {status} doubles={} down_only={} up_only={}",
            self.n, self.doubles, self.down_only, self.up_only
        )?;
        if let Some((found, expected)) = self.closures_1x1 {
            write!(f, " 1x1_closures={found} expected={expected}")?;
        }
        if !self.bruteforce {
            f.write_str(" oracle=covers")?;
        }
        let failed: Vec<&str> = self.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect();
        if !failed.is_empty() {
            write!(f, " failed={}", failed.join(","))?;
        }
        Ok(())
    }
}

/// Every A/B/C object and every I/II/III attribute has exactly one double-arrow partner.
pub fn double_bijection(joins: &[TypeLabel], meets: &[TypeLabel], arrows: &ArrowRelations) -> bool {
    use TypeLabel::*;
    let mut per_g: BTreeMap<usize, usize> = BTreeMap::new();
    let mut per_m: BTreeMap<usize, usize> = BTreeMap::new();
    for &(g, m) in &arrows.double {
        *per_g.entry(g).or_default() += 1;
        *per_m.entry(m).or_default() += 1;
    }
    let objects_ok = joins
        .iter()
        .enumerate()
        .filter(|(_, l)| matches!(l, A | B | C))
        .all(|(g, _)| per_g.get(&g) == Some(&1));
    let attributes_ok = meets
        .iter()
        .enumerate()
        .filter(|(_, l)| matches!(l, I | II | III))
        .all(|(m, _)| per_m.get(&m) == Some(&1));
    objects_ok && attributes_ok
}

/// D⇕ only with IV and A/B/C⇕ only with I/II/III; down-only arrows end at IV;
/// up-only arrows start at D.
pub fn type_segregation(joins: &[TypeLabel], meets: &[TypeLabel], arrows: &ArrowRelations) -> bool {
    use TypeLabel::*;
    let doubles = arrows.double.iter().all(|&(g, m)| (joins[g] == D) == (meets[m] == IV));
    let downs = arrows.down_only().all(|&(_, m)| meets[m] == IV);
    let ups = arrows.up_only().all(|&(g, _)| joins[g] == D);
    doubles && downs && ups
}

/// No arrow of any kind between B and II, or between C and III.
pub fn forbidden_pairs(joins: &[TypeLabel], meets: &[TypeLabel], arrows: &ArrowRelations) -> bool {
    use TypeLabel::*;
    arrows.down.iter().chain(&arrows.up).all(|&(g, m)| {
        !matches!((joins[g], meets[m]), (B, II) | (C, III))
    })
}

pub fn verify_n(n: u32, bf_cap: u32) -> Result<VerifyReport, CliError> {
    let joins: Vec<TypeLabel> = join_irreducibles(n).iter().map(|i| i.type_label()).collect();
    let meets: Vec<TypeLabel> = meet_irreducibles(n).iter().map(|i| i.type_label()).collect();
    let covers = arrows_via_covers(n)?;
    let predicted = predicted_arrows(n)?;
    let mut checks = Vec::new();
    let bruteforce = n <= bf_cap;
    if bruteforce {
        let brute = arrows_bruteforce(&standard_context(n)?);
        checks.push(Check { name: "covers==bruteforce", passed: covers == brute });
        checks.push(Check { name: "theorems==bruteforce", passed: predicted == brute });
    } else {
        checks.push(Check { name: "theorems==covers", passed: predicted == covers });
    }
    let closures_1x1 = if n >= 3 {
        let found = count_1x1_closures(n)?;
        let expected = 2 * n as usize - 4;
        checks.push(Check { name: "1x1_closures", passed: found == expected });
        Some((found, expected))
    } else {
        None
    };
    checks.push(Check { name: "bijection", passed: n < 3 || double_bijection(&joins, &meets, &covers) });
    checks.push(Check { name: "segregation", passed: type_segregation(&joins, &meets, &covers) });
    checks.push(Check { name: "forbidden_pairs", passed: forbidden_pairs(&joins, &meets, &covers) });
    Ok(VerifyReport {
        n,
        checks,
        doubles: covers.double.len(),
        down_only: covers.down_only().count(),
        up_only: covers.up_only().count(),
        closures_1x1,
        bruteforce,
    })
}

/// Runs [`verify_n`] over `range` in parallel; reports come back ordered by `n`.
pub fn verify_range(range: NRange, bf_cap: u32, threads: Option<usize>) -> Result<Vec<VerifyReport>, CliError> {
    if range.start < 2 {
        return Err(domlat_core::Error::TooSmall { n: range.start, min: 2 }.into());
    }
    let run = || range.iter().collect::<Vec<_>>().into_par_iter().map(|n| verify_n(n, bf_cap)).collect();
    match threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| CliError::usage(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    }
}
