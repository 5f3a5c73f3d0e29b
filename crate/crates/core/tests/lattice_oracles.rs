use std::collections::BTreeSet;

use domlat_core::irreducible::{
    classify_join_type, classify_meet_type, join_irreducibles, meet_irreducibles,
};
use domlat_core::lattice::{
    enumerate_partitions, largest_with_max_height, largest_with_min_length, least_with_max_length,
    partition_count,
};
use domlat_core::{Kind, Partition, PartitionLattice};
use proptest::prelude::*;

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.iter().copied()).unwrap()
}

fn leq(a: &Partition, b: &Partition) -> bool {
    a.dominance_leq(b).unwrap()
}

/// Pairs `(upper, lower)` of the transitive reduction, by exhaustive search.
fn brute_covers(all: &[Partition]) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for (i, a) in all.iter().enumerate() {
        for (j, b) in all.iter().enumerate() {
            if i == j || !leq(b, a) {
                continue;
            }
            let between = all
                .iter()
                .any(|c| c != a && c != b && leq(b, c) && leq(c, a));
            if !between {
                out.insert((i, j));
            }
        }
    }
    out
}

#[test]
fn partition_counts_follow_the_recurrence() {
    let small = [1u64, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176];
    for (n, &c) in small.iter().enumerate() {
        assert_eq!(partition_count(n as u32), c);
    }
    assert_eq!(partition_count(60), 966_467);
    for n in 0..=40 {
        assert_eq!(enumerate_partitions(n, 60).unwrap().len() as u64, partition_count(n), "n={n}");
    }
    assert!(enumerate_partitions(61, 60).is_err());
}

#[test]
fn enumeration_is_sorted_and_distinct() {
    for n in 0..=20 {
        let all = enumerate_partitions(n, 60).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]), "n={n}");
        assert!(all.iter().all(|q| q.n() == n));
    }
}

#[test]
fn covers_are_the_transitive_reduction() {
    for n in 1..=10 {
        let lat = PartitionLattice::new(n, 15).unwrap();
        let oracle = brute_covers(lat.elements());
        let edges: BTreeSet<(usize, usize)> = lat.cover_edges().collect();
        assert_eq!(edges, oracle, "n={n}");
        for (i, q) in lat.elements().iter().enumerate() {
            let from_rules: BTreeSet<Partition> = q.lower_covers().into_iter().collect();
            let from_lattice: BTreeSet<Partition> =
                lat.lower_covers_of(i).iter().map(|&j| lat.elements()[j].clone()).collect();
            assert_eq!(from_rules, from_lattice);
            let up: BTreeSet<Partition> = q.upper_covers().into_iter().collect();
            let up_lattice: BTreeSet<Partition> =
                lat.upper_covers_of(i).iter().map(|&j| lat.elements()[j].clone()).collect();
            assert_eq!(up, up_lattice);
        }
    }
}

#[test]
fn cover_closure_is_dominance() {
    for n in 1..=10 {
        let lat = PartitionLattice::new(n, 15).unwrap();
        let len = lat.len();
        // Elements are in a linear extension, so one backward sweep closes reachability.
        let mut below: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); len];
        for i in (0..len).rev() {
            let mut set: BTreeSet<usize> = [i].into();
            for &j in lat.lower_covers_of(i) {
                assert!(j > i, "cover edge goes against the extension");
                set.extend(below[j].iter().copied());
            }
            below[i] = set;
        }
        for (set, a) in below.iter().zip(lat.elements()) {
            for (j, b) in lat.elements().iter().enumerate() {
                assert_eq!(set.contains(&j), leq(b, a), "n={n}");
            }
        }
    }
}

#[test]
fn top_and_bottom() {
    for n in 1..=15 {
        let lat = PartitionLattice::new(n, 15).unwrap();
        assert_eq!(lat.top(), &p(&[n]));
        assert_eq!(lat.bottom(), &p(&vec![1; n as usize]));
    }
    assert!(PartitionLattice::new(16, 15).is_err());
}

#[test]
fn cover_count_matches_taxonomy() {
    for n in 1..=12 {
        let lat = PartitionLattice::new(n, 15).unwrap();
        let joins = join_irreducibles(n);
        let meets = meet_irreducibles(n);
        let ji: BTreeSet<Partition> = joins.iter().map(|i| i.partition.clone()).collect();
        let mi: BTreeSet<Partition> = meets.iter().map(|i| i.partition.clone()).collect();
        let by_count_j: BTreeSet<Partition> = (0..lat.len())
            .filter(|&i| lat.is_join_irreducible(i))
            .map(|i| lat.elements()[i].clone())
            .collect();
        let by_count_m: BTreeSet<Partition> = (0..lat.len())
            .filter(|&i| lat.is_meet_irreducible(i))
            .map(|i| lat.elements()[i].clone())
            .collect();
        assert_eq!(ji, by_count_j, "n={n} join side");
        assert_eq!(mi, by_count_m, "n={n} meet side");
        assert_eq!(ji.len(), joins.len());
        for info in &joins {
            let i = lat.index_of(&info.partition).unwrap();
            let cover = &lat.elements()[lat.lower_covers_of(i)[0]];
            assert_eq!(&info.unique_cover, cover);
            assert_eq!(info.kind(), Kind::Join);
        }
        for info in &meets {
            let i = lat.index_of(&info.partition).unwrap();
            let cover = &lat.elements()[lat.upper_covers_of(i)[0]];
            assert_eq!(&info.unique_cover, cover);
            assert_eq!(info.kind(), Kind::Meet);
        }
        for (i, q) in lat.elements().iter().enumerate() {
            assert_eq!(classify_join_type(q).is_some(), lat.is_join_irreducible(i));
            assert_eq!(classify_meet_type(q).is_some(), lat.is_meet_irreducible(i));
        }
    }
}

#[test]
fn closed_form_covers_match_transition_rules() {
    for n in 2..=30 {
        for info in join_irreducibles(n) {
            assert_eq!(info.partition.lower_covers(), vec![info.unique_cover.clone()], "{}", info.partition);
            assert!(info.template.is_valid());
            assert_eq!(info.template.partition(), info.partition);
        }
        for info in meet_irreducibles(n) {
            assert_eq!(info.partition.upper_covers(), vec![info.unique_cover.clone()], "{}", info.partition);
            assert!(info.template.is_valid());
        }
    }
}

#[test]
fn type_duality() {
    for n in 2..=20 {
        let joins = join_irreducibles(n);
        let meets = meet_irreducibles(n);
        assert_eq!(joins.len(), meets.len());
        for info in &joins {
            let c = info.partition.conjugate();
            let t = classify_meet_type(&c).expect("conjugate of a join-irreducible is meet-irreducible");
            assert_eq!(t.label(), info.type_label().dual());
            assert_eq!(info.template.conjugate(), t);
        }
        for info in &meets {
            let c = info.partition.conjugate();
            let t = classify_join_type(&c).expect("conjugate of a meet-irreducible is join-irreducible");
            assert_eq!(t.label(), info.type_label().dual());
        }
    }
}

fn greatest_lower_bound(all: &[Partition], a: &Partition, b: &Partition) -> Partition {
    let lower: Vec<&Partition> = all.iter().filter(|c| leq(c, a) && leq(c, b)).collect();
    let glb: Vec<&&Partition> = lower.iter().filter(|c| lower.iter().all(|d| leq(d, c))).collect();
    assert_eq!(glb.len(), 1);
    (*glb[0]).clone()
}

fn least_upper_bound(all: &[Partition], a: &Partition, b: &Partition) -> Partition {
    let upper: Vec<&Partition> = all.iter().filter(|c| leq(a, c) && leq(b, c)).collect();
    let lub: Vec<&&Partition> = upper.iter().filter(|c| upper.iter().all(|d| leq(c, d))).collect();
    assert_eq!(lub.len(), 1);
    (*lub[0]).clone()
}

#[test]
fn meet_and_join_are_the_brute_force_bounds() {
    for n in 1..=12 {
        let all = enumerate_partitions(n, 60).unwrap();
        for a in &all {
            for b in &all {
                assert_eq!(a.meet(b).unwrap(), greatest_lower_bound(&all, a, b), "meet {a} {b}");
                assert_eq!(a.join(b).unwrap(), least_upper_bound(&all, a, b), "join {a} {b}");
            }
        }
    }
    assert_eq!(p(&[4, 3]).meet(&p(&[5, 1, 1])).unwrap(), p(&[4, 2, 1]));
    assert_eq!(p(&[4, 3]).join(&p(&[5, 1, 1])).unwrap(), p(&[5, 2]));
}

fn triple() -> impl Strategy<Value = (Partition, Partition, Partition)> {
    (1u32..=10).prop_flat_map(|n| {
        let all = enumerate_partitions(n, 60).unwrap();
        let len = all.len();
        (0..len, 0..len, 0..len)
            .prop_map(move |(i, j, k)| (all[i].clone(), all[j].clone(), all[k].clone()))
    })
}

proptest! {
    #[test]
    fn lattice_laws((a, b, c) in triple()) {
        prop_assert_eq!(a.meet(&b).unwrap(), b.meet(&a).unwrap());
        prop_assert_eq!(a.join(&b).unwrap(), b.join(&a).unwrap());
        prop_assert_eq!(
            a.meet(&b).unwrap().meet(&c).unwrap(),
            a.meet(&b.meet(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.join(&b).unwrap().join(&c).unwrap(),
            a.join(&b.join(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.meet(&a.join(&b).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(a.join(&a.meet(&b).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(a.meet(&a).unwrap(), a.clone());
    }
}

#[test]
fn top_chain() {
    for n in 2..=30u32 {
        let top = p(&[n]);
        let second = p(&[n - 1, 1]);
        assert_eq!(top.lower_covers(), vec![second.clone()]);
        assert_eq!(classify_join_type(&top).unwrap().label().kind(), Kind::Join);
        assert!(classify_meet_type(&second).is_some());
        if n >= 3 {
            assert!(classify_join_type(&second).is_some());
        }
        if n >= 4 {
            let third = p(&[n - 2, 2]);
            assert_eq!(second.lower_covers(), vec![third.clone()]);
            assert!(classify_meet_type(&third).is_some());
        }
    }
}

#[test]
fn bounded_partitions_are_extremal() {
    for n in 1..=12 {
        let all = enumerate_partitions(n, 60).unwrap();
        for l in 1..=n {
            let big = largest_with_min_length(n, l);
            assert!(big.length() >= l);
            assert!(all.iter().filter(|q| q.length() >= l).all(|q| leq(q, &big)));

            let tall = largest_with_max_height(n, l);
            assert!(tall.height() <= l);
            assert!(all.iter().filter(|q| q.height() <= l).all(|q| leq(q, &tall)));

            let flat = least_with_max_length(n, l);
            assert!(flat.length() <= l);
            assert!(all.iter().filter(|q| q.length() <= l).all(|q| leq(&flat, q)));
        }
    }
}
