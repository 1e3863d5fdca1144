use nacomp::partition::all_partitions;
use nacomp::{Partition, PointSet};
use proptest::prelude::*;

fn partition(n: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..n, n).prop_map(Partition::from_labels)
}

fn triple() -> impl Strategy<Value = (Partition, Partition, Partition)> {
    (1usize..=7).prop_flat_map(|n| (partition(n), partition(n), partition(n)))
}

/// Brute-force refinement: every pair related in `p` is related in `q`.
fn refines_pairwise(p: &Partition, q: &Partition) -> bool {
    let n = p.size();
    (0..n).all(|x| (0..n).all(|y| !p.same_block(x, y) || q.same_block(x, y)))
}

proptest! {
    #[test]
    fn meet_and_join_are_bounds((p, q, r) in triple()) {
        let m = p.meet(&q).unwrap();
        let j = p.join(&q).unwrap();
        prop_assert!(m.refines(&p).unwrap() && m.refines(&q).unwrap());
        prop_assert!(p.refines(&j).unwrap() && q.refines(&j).unwrap());
        if r.refines(&p).unwrap() && r.refines(&q).unwrap() {
            prop_assert!(r.refines(&m).unwrap());
        }
        if p.refines(&r).unwrap() && q.refines(&r).unwrap() {
            prop_assert!(j.refines(&r).unwrap());
        }
    }

    #[test]
    fn lattice_identities((p, q, r) in triple()) {
        prop_assert_eq!(p.meet(&q).unwrap(), q.meet(&p).unwrap());
        prop_assert_eq!(p.join(&q).unwrap(), q.join(&p).unwrap());
        prop_assert_eq!(p.meet(&p).unwrap(), p.clone());
        prop_assert_eq!(p.join(&p).unwrap(), p.clone());
        prop_assert_eq!(
            p.meet(&q).unwrap().meet(&r).unwrap(),
            p.meet(&q.meet(&r).unwrap()).unwrap()
        );
        prop_assert_eq!(
            p.join(&q).unwrap().join(&r).unwrap(),
            p.join(&q.join(&r).unwrap()).unwrap()
        );
        prop_assert_eq!(p.meet(&p.join(&q).unwrap()).unwrap(), p.clone());
        prop_assert_eq!(p.join(&p.meet(&q).unwrap()).unwrap(), p.clone());
    }

    #[test]
    fn refinement_matches_pairwise_definition((p, q, _r) in triple()) {
        prop_assert_eq!(p.refines(&q).unwrap(), refines_pairwise(&p, &q));
        prop_assert_eq!(p.refines(&q).unwrap(), p.meet(&q).unwrap() == p);
        prop_assert_eq!(p.refines(&q).unwrap(), p.join(&q).unwrap() == q);
    }

    #[test]
    fn bounds_and_canonical_form((p, _q, _r) in triple()) {
        let n = p.size();
        prop_assert!(Partition::discrete(n).refines(&p).unwrap());
        prop_assert!(p.refines(&Partition::one_block(n)).unwrap());
        let relabelled = Partition::from_labels(p.labels().iter().map(|&l| 100 - l as usize));
        prop_assert_eq!(&relabelled, &p);
        let blocks: Vec<Vec<usize>> = p.blocks().iter().map(|b| b.iter().collect()).collect();
        prop_assert_eq!(Partition::from_blocks(n, &blocks).unwrap(), p.clone());
        let union = p.blocks().iter().fold(PointSet::empty(n), |acc, b| acc.union(b));
        prop_assert!(union.is_full());
    }

    #[test]
    fn pullback_preserves_order((p, q, _r) in triple(), seed in prop::collection::vec(0usize..64, 1..6)) {
        let n = p.size();
        let table: Vec<usize> = seed.iter().map(|s| s % n).collect();
        if p.refines(&q).unwrap() {
            prop_assert!(p.pullback(&table).refines(&q.pullback(&table)).unwrap());
        }
        prop_assert_eq!(
            p.meet(&q).unwrap().pullback(&table),
            p.pullback(&table).meet(&q.pullback(&table)).unwrap()
        );
    }

    #[test]
    fn coarsenings_are_exactly_the_coarser_partitions((p, _q, _r) in (1usize..=5).prop_flat_map(|n| (partition(n), partition(n), partition(n)))) {
        let coarser: Vec<Partition> = all_partitions(p.size())
            .unwrap()
            .into_iter()
            .filter(|q| p.refines(q).unwrap())
            .collect();
        let mut listed = p.coarsenings().unwrap();
        listed.sort();
        let mut expected = coarser;
        expected.sort();
        prop_assert_eq!(listed, expected);
    }
}

#[test]
fn partition_lattice_is_not_distributive() {
    // partition lattices of 3 or more points are not distributive
    let parts = all_partitions(3).unwrap();
    let failure = parts.iter().any(|p| {
        parts.iter().any(|q| {
            parts
                .iter()
                .any(|r| p.meet(&q.join(r).unwrap()).unwrap() != p.meet(q).unwrap().join(&p.meet(r).unwrap()).unwrap())
        })
    });
    assert!(failure);
}

#[test]
fn exhaustive_laws_on_four_points() {
    let parts = all_partitions(4).unwrap();
    for p in &parts {
        for q in &parts {
            let m = p.meet(q).unwrap();
            let j = p.join(q).unwrap();
            assert_eq!(p.refines(q).unwrap(), refines_pairwise(p, q));
            // meet is the greatest lower bound among all partitions
            let lower: Vec<&Partition> = parts
                .iter()
                .filter(|r| r.refines(p).unwrap() && r.refines(q).unwrap())
                .collect();
            assert!(lower.iter().all(|r| r.refines(&m).unwrap()));
            assert!(lower.contains(&&m));
            let upper: Vec<&Partition> = parts
                .iter()
                .filter(|r| p.refines(r).unwrap() && q.refines(r).unwrap())
                .collect();
            assert!(upper.iter().all(|r| j.refines(r).unwrap()));
            assert!(upper.contains(&&j));
        }
    }
}
