use std::collections::{BTreeMap, BTreeSet};

use domlat_core::context::{arrows_bruteforce, arrows_via_covers, standard_context};
use domlat_core::irreducible::{join_irreducibles, meet_irreducibles};
use domlat_core::theorems::{
    double_arrows, predicted_arrows, single_down_arrows, single_up_arrows,
    single_up_arrows_direct, ArrowKind,
};
use domlat_core::{ArrowRelations, FormalContext, Partition, TypeLabel};

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.iter().copied()).unwrap()
}

fn labels(n: u32) -> (Vec<TypeLabel>, Vec<TypeLabel>) {
    (
        join_irreducibles(n).iter().map(|i| i.type_label()).collect(),
        meet_irreducibles(n).iter().map(|i| i.type_label()).collect(),
    )
}

/// Conjugates every pair and swaps the direction of the arrows.
fn conjugate_relations(ctx: &FormalContext, arrows: &ArrowRelations) -> ArrowRelations {
    let flip = |set: &BTreeSet<(usize, usize)>| -> BTreeSet<(usize, usize)> {
        set.iter()
            .map(|&(g, m)| {
                let g2 = ctx.object_index(&ctx.attributes()[m].conjugate()).unwrap();
                let m2 = ctx.attribute_index(&ctx.objects()[g].conjugate()).unwrap();
                (g2, m2)
            })
            .collect()
    };
    ArrowRelations::from_down_up(flip(&arrows.up), flip(&arrows.down))
}

#[test]
fn three_methods_agree() {
    for n in 2..=20 {
        let ctx = standard_context(n).unwrap();
        let brute = arrows_bruteforce(&ctx);
        assert_eq!(arrows_via_covers(n).unwrap(), brute, "covers, n={n}");
        assert_eq!(predicted_arrows(n).unwrap(), brute, "theorems, n={n}");
    }
}

#[test]
fn arrows_lie_on_non_incident_cells() {
    for n in 2..=20 {
        let ctx = standard_context(n).unwrap();
        let arrows = arrows_via_covers(n).unwrap();
        for &(g, m) in arrows.down.iter().chain(&arrows.up) {
            assert!(!ctx.incident(g, m));
        }
        assert_eq!(
            arrows.double,
            arrows.down.intersection(&arrows.up).copied().collect::<BTreeSet<_>>()
        );
    }
}

#[test]
fn conjugation_duality() {
    for n in 2..=15 {
        let ctx = standard_context(n).unwrap();
        let brute = arrows_bruteforce(&ctx);
        assert_eq!(conjugate_relations(&ctx, &brute), brute, "n={n}");
    }
}

#[test]
fn predictions_are_self_dual() {
    for n in 2..=20 {
        let ctx = standard_context(n).unwrap();
        let predicted = predicted_arrows(n).unwrap();
        assert_eq!(conjugate_relations(&ctx, &predicted), predicted, "n={n}");
    }
}

#[test]
fn every_object_and_attribute_has_an_arrow() {
    for n in 3..=15 {
        let arrows = arrows_via_covers(n).unwrap();
        let joins = join_irreducibles(n).len();
        let meets = meet_irreducibles(n).len();
        let with_down: BTreeSet<usize> = arrows.down.iter().map(|&(g, _)| g).collect();
        let with_up: BTreeSet<usize> = arrows.up.iter().map(|&(_, m)| m).collect();
        assert_eq!(with_down.len(), joins, "n={n}");
        assert_eq!(with_up.len(), meets, "n={n}");
    }
}

#[test]
fn clarified_and_reduced() {
    for n in 2..=12 {
        assert!(standard_context(n).unwrap().check_clarified_reduced());
    }
}

#[test]
fn double_arrow_bijection() {
    use TypeLabel::*;
    for n in 3..=20 {
        let (jl, ml) = labels(n);
        let arrows = arrows_via_covers(n).unwrap();
        let mut per_object: BTreeMap<usize, usize> = BTreeMap::new();
        let mut per_attribute: BTreeMap<usize, usize> = BTreeMap::new();
        for &(g, m) in &arrows.double {
            if matches!(jl[g], A | B | C) {
                *per_object.entry(g).or_default() += 1;
            }
            if matches!(ml[m], I | II | III) {
                *per_attribute.entry(m).or_default() += 1;
            }
        }
        for (g, label) in jl.iter().enumerate().filter(|(_, l)| matches!(l, A | B | C)) {
            assert_eq!(per_object.get(&g), Some(&1), "n={n} object of type {label}");
        }
        for (m, label) in ml.iter().enumerate().filter(|(_, l)| matches!(l, I | II | III)) {
            assert_eq!(per_attribute.get(&m), Some(&1), "n={n} attribute of type {label}");
        }
    }
}

#[test]
fn type_segregation() {
    use TypeLabel::*;
    for n in 2..=20 {
        let (jl, ml) = labels(n);
        let arrows = arrows_via_covers(n).unwrap();
        for &(g, m) in &arrows.double {
            match jl[g] {
                D => assert_eq!(ml[m], IV, "n={n}"),
                _ => assert!(matches!(ml[m], I | II | III), "n={n}"),
            }
        }
        for &(_, m) in arrows.down_only() {
            assert_eq!(ml[m], IV, "n={n}");
        }
        for &(g, _) in arrows.up_only() {
            assert_eq!(jl[g], D, "n={n}");
        }
    }
}

#[test]
fn forbidden_pairs() {
    use TypeLabel::*;
    for n in 2..=20 {
        let (jl, ml) = labels(n);
        let arrows = arrows_via_covers(n).unwrap();
        for &(g, m) in arrows.down.iter().chain(&arrows.up) {
            assert!(!(jl[g] == B && ml[m] == II), "n={n}: B to II");
            assert!(!(jl[g] == C && ml[m] == III), "n={n}: C to III");
        }
    }
}

#[test]
fn no_single_arrows_below_seven() {
    for n in 2..7 {
        assert!(single_down_arrows(n).is_empty());
        assert!(single_up_arrows(n).is_empty());
        let arrows = arrows_via_covers(n).unwrap();
        assert_eq!(arrows.down, arrows.double);
        assert_eq!(arrows.up, arrows.double);
    }
    assert_eq!(single_down_arrows(7).len(), 1);
    assert_eq!(single_up_arrows(7).len(), 1);
}

#[test]
fn dual_formulas_match_conjugation() {
    for n in 2..=40 {
        let key = |v: Vec<domlat_core::theorems::PredictedArrow>| -> BTreeSet<(Partition, Partition)> {
            v.into_iter().map(|a| (a.g, a.m)).collect()
        };
        assert_eq!(key(single_up_arrows(n)), key(single_up_arrows_direct(n)), "n={n}");
    }
}

#[test]
fn predicted_kinds_are_consistent() {
    for n in 2..=25 {
        for a in double_arrows(n) {
            assert_eq!(a.kind, ArrowKind::Double);
        }
        for a in single_down_arrows(n) {
            assert_eq!(a.kind, ArrowKind::DownOnly);
        }
        for a in single_up_arrows(n) {
            assert_eq!(a.kind, ArrowKind::UpOnly);
        }
    }
}

#[test]
fn multi_partner_instances() {
    let partners = |v: Vec<domlat_core::theorems::PredictedArrow>, g: &Partition| -> BTreeSet<Partition> {
        v.into_iter().filter(|a| &a.g == g).map(|a| a.m).collect()
    };
    assert_eq!(
        partners(double_arrows(10), &p(&[4, 4, 1, 1])),
        [p(&[4, 3, 3]), p(&[5, 2, 2, 1])].into()
    );
    let mut hook = vec![7];
    hook.extend([1; 9]);
    assert_eq!(
        partners(single_down_arrows(16), &p(&hook)),
        [p(&[6, 5, 5]), p(&[6, 4, 4, 2]), p(&[6, 3, 3, 3, 1]), p(&[6, 2, 2, 2, 2, 2])].into()
    );
    assert_eq!(
        partners(single_down_arrows(15), &p(&[5, 5, 5])),
        [p(&[10, 2, 2, 1]), p(&[8, 3, 3, 1]), p(&[6, 4, 4, 1])].into()
    );
}

#[test]
fn scales_to_sixty_without_brute_force() {
    let covers = arrows_via_covers(60).unwrap();
    assert_eq!(predicted_arrows(60).unwrap(), covers);
}
