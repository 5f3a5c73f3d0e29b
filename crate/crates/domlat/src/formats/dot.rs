//! Graphviz rendering of `L_n`.
//!
//! Cover edges are solid and point downwards. Up-arrows are dashed green with
//! open heads, down-arrows dashed red with filled heads; a double arrow is one
//! edge carrying both heads. Node shape encodes irreducibility.

use std::fmt::Write;

use domlat_core::theorems::ArrowKind;
use domlat_core::{ArrowRelations, FormalContext, PartitionLattice};

use crate::formats::listing::classify;

fn shape(join: bool, meet: bool) -> &'static str {
    match (join, meet) {
        (true, true) => "diamond",
        (true, false) => "box",
        (false, true) => "invtriangle",
        (false, false) => "ellipse",
    }
}

/// `arrows`, when given, are indexed against `ctx`, whose objects and
/// attributes must be elements of `lattice`.
pub fn write_dot(
    lattice: &PartitionLattice,
    arrows: Option<(&FormalContext, &ArrowRelations)>,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph L{} {{", lattice.n());
    out.push_str("  rankdir=TB;\n  node [fontname=\"Helvetica\"];\n");
    for (i, p) in lattice.elements().iter().enumerate() {
        let s = shape(lattice.is_join_irreducible(i), lattice.is_meet_irreducible(i));
        let _ = writeln!(out, "  n{i} [label=\"{p}\", shape={s}];");
    }
    for (upper, lower) in lattice.cover_edges() {
        let _ = writeln!(out, "  n{upper} -> n{lower} [style=solid, arrowhead=none];");
    }
    if let Some((ctx, arrows)) = arrows {
        let node = |p| lattice.index_of(p).expect("irreducible is a lattice element");
        for (g, m, kind) in classify(arrows) {
            let (gi, mi) = (node(&ctx.objects()[g]), node(&ctx.attributes()[m]));
            // Every arrow edge runs g -> m; the down-arrow end sits at g.
            let attrs = match kind {
                ArrowKind::UpOnly => "color=green, arrowhead=empty",
                ArrowKind::DownOnly => "color=red, dir=back, arrowtail=normal",
                ArrowKind::Double => {
                    "color=\"green:red\", dir=both, arrowhead=empty, arrowtail=normal, penwidth=2"
                }
            };
            let _ = writeln!(out, "  n{gi} -> n{mi} [style=dashed, constraint=false, {attrs}];");
        }
    }
    out.push_str("}\n");
    out
}
