//! Plain-text arrow lists: `<g> <kind> <m> [source]`, one per line.

use std::collections::BTreeMap;
use std::fmt::Write;

use domlat_core::theorems::{all_predicted, ArrowKind, PredictedArrow};
use domlat_core::{ArrowRelations, FormalContext, Partition};

/// The arrows of `ctx` sorted by object then attribute, each with its kind.
pub fn classify(arrows: &ArrowRelations) -> Vec<(usize, usize, ArrowKind)> {
    let mut out: Vec<(usize, usize, ArrowKind)> = arrows
        .double
        .iter()
        .map(|&(g, m)| (g, m, ArrowKind::Double))
        .chain(arrows.down_only().map(|&(g, m)| (g, m, ArrowKind::DownOnly)))
        .chain(arrows.up_only().map(|&(g, m)| (g, m, ArrowKind::UpOnly)))
        .collect();
    out.sort_unstable();
    out
}

pub fn write_arrows(ctx: &FormalContext, arrows: &ArrowRelations) -> String {
    let mut out = String::new();
    for (g, m, kind) in classify(arrows) {
        let _ = writeln!(out, "{} {} {}", ctx.objects()[g], kind, ctx.attributes()[m]);
    }
    out
}

/// Theorem predictions with the first source tag of each arrow.
pub fn write_predicted(n: u32) -> String {
    let mut sorted: BTreeMap<(Partition, Partition), PredictedArrow> = BTreeMap::new();
    for a in all_predicted(n) {
        sorted.insert((a.g.clone(), a.m.clone()), a);
    }
    let mut out = String::new();
    for a in sorted.values() {
        let _ = writeln!(out, "{} {} {} {}", a.g, a.kind, a.m, a.source());
    }
    out
}
