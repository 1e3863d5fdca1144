//! The zeta-closure operator and a brute-force regular-closure oracle.
//!
//! `x ∈ ζ_X(M)` iff for every two stack members `E1`, `E2` that coincide on
//! `M`, the set `E1[x] ∩ E2[x] ∩ M` is nonempty. The oracle instead
//! quantifies over pairs of uniformly continuous maps into a discrete space
//! and keeps the points where every pair agreeing on `M` agrees.

use crate::error::{Error, Result};
use crate::morphism::is_uniformly_continuous;
use crate::partition::{Carrier, Partition};
use crate::pointset::PointSet;
use crate::space::NaSpace;

/// Largest space the regular-closure oracle will enumerate maps on.
pub const ORACLE_BOUND: usize = 5;

/// Two stack members that coincide on `M` and jointly cut `point` off from
/// `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub point: usize,
    pub first: Partition,
    pub second: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureReport {
    pub input: PointSet,
    pub closure: PointSet,
    /// One witness per excluded point, in point order.
    pub witnesses: Vec<Witness>,
}

impl ClosureReport {
    pub fn is_closed(&self) -> bool {
        self.closure == self.input
    }

    pub fn is_dense(&self) -> bool {
        self.closure.is_full()
    }
}

fn check_subset(space: &NaSpace, subset: &PointSet) -> Result<()> {
    if subset.universe() != space.size() {
        return Err(Error::CarrierMismatch {
            left: space.size(),
            right: subset.universe(),
        });
    }
    Ok(())
}

/// Does some `m ∈ M` share blocks with `x` in both partitions?
fn meets_through(first: &Partition, second: &Partition, x: usize, subset: &PointSet) -> bool {
    subset.iter().any(|m| first.same_block(m, x) && second.same_block(m, x))
}

pub fn zeta_closure(space: &NaSpace, subset: &PointSet) -> Result<ClosureReport> {
    check_subset(space, subset)?;
    let members = space.stack_members()?.members;
    let traces: Vec<Partition> = members.iter().map(|p| p.restrict(subset)).collect();

    // Unordered pairs suffice: the exclusion condition is symmetric.
    let mut pairs = Vec::new();
    for i in 0..members.len() {
        for j in i..members.len() {
            if traces[i] == traces[j] {
                pairs.push((i, j));
            }
        }
    }

    let mut closure = subset.clone();
    let mut witnesses = Vec::new();
    for x in 0..space.size() {
        if subset.contains(x) {
            continue;
        }
        let cut = pairs
            .iter()
            .find(|&&(i, j)| !meets_through(&members[i], &members[j], x, subset));
        match cut {
            Some(&(i, j)) => witnesses.push(Witness {
                point: x,
                first: members[i].clone(),
                second: members[j].clone(),
            }),
            None => closure.insert(x),
        }
    }
    Ok(ClosureReport {
        input: subset.clone(),
        closure,
        witnesses,
    })
}

pub fn is_zeta_dense(space: &NaSpace, subset: &PointSet) -> Result<bool> {
    Ok(zeta_closure(space, subset)?.is_dense())
}

pub fn is_zeta_closed(space: &NaSpace, subset: &PointSet) -> Result<bool> {
    Ok(zeta_closure(space, subset)?.is_closed())
}

/// Every table `0..domain → 0..codomain`, in odometer order (last point
/// fastest).
pub(crate) fn all_tables(domain: usize, codomain: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (codomain as u64).checked_pow(domain as u32);
    let total = if codomain == 0 && domain > 0 { Some(0) } else { total };
    let total = total.expect("function space too large to enumerate");
    (0..total).map(move |mut code| {
        let mut table = vec![0; domain];
        for slot in table.iter_mut().rev() {
            *slot = (code % codomain as u64) as usize;
            code /= codomain as u64;
        }
        table
    })
}

/// Agreement sets of all pairs of uniformly continuous maps from a space
/// into the discrete space on `|X| + 2` points.
///
/// `x ∈ reg(M)` iff every pair agreeing on `M` agrees at `x`, i.e. `x`
/// lies in every agreement set containing `M`.
#[derive(Clone, Debug)]
pub struct RegularClosureOracle {
    size: usize,
    /// Bitmasks of agreement sets, deduplicated.
    agreement_sets: Vec<u32>,
}

impl RegularClosureOracle {
    pub fn new(space: &NaSpace) -> Result<Self> {
        let n = space.size();
        if n > ORACLE_BOUND {
            return Err(Error::BoundExceeded {
                what: "regular-closure oracle",
                size: n,
                bound: ORACLE_BOUND,
            });
        }
        let target = NaSpace::discrete(Carrier::indexed(n + 2));
        let maps: Vec<Vec<usize>> = all_tables(n, n + 2)
            .filter(|t| is_uniformly_continuous(t, space, &target))
            .collect();
        let mut seen = vec![false; 1 << n];
        for f in &maps {
            for g in &maps {
                let mask = (0..n).filter(|&x| f[x] == g[x]).fold(0u32, |m, x| m | 1 << x);
                seen[mask as usize] = true;
            }
        }
        Ok(RegularClosureOracle {
            size: n,
            agreement_sets: (0..1u32 << n).filter(|&m| seen[m as usize]).collect(),
        })
    }

    pub fn closure(&self, subset: &PointSet) -> PointSet {
        let m = subset.iter().fold(0u32, |acc, x| acc | 1 << x);
        let closed = self
            .agreement_sets
            .iter()
            .filter(|&&a| a & m == m)
            .fold((1u32 << self.size) - 1, |acc, &a| acc & a);
        PointSet::from_points(self.size, (0..self.size).filter(|x| closed >> x & 1 == 1))
    }
}

pub fn regular_closure_oracle(space: &NaSpace, subset: &PointSet) -> Result<PointSet> {
    check_subset(space, subset)?;
    Ok(RegularClosureOracle::new(space)?.closure(subset))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(n: usize, v: &[usize]) -> PointSet {
        PointSet::from_points(n, v.iter().copied())
    }

    /// Ordered pairs, no trace grouping: the definition read literally.
    fn zeta_literal(space: &NaSpace, m: &PointSet) -> PointSet {
        let members = space.stack_members().unwrap().members;
        let coincide = |a: &Partition, b: &Partition| {
            m.iter()
                .all(|x| m.iter().all(|y| a.same_block(x, y) == b.same_block(x, y)))
        };
        let mut out = PointSet::empty(space.size());
        for x in 0..space.size() {
            let adherent = members.iter().all(|e1| {
                members.iter().all(|e2| {
                    !coincide(e1, e2)
                        || e1
                            .block_of(x)
                            .unwrap()
                            .intersection(&e2.block_of(x).unwrap())
                            .intersects(m)
                })
            });
            if adherent {
                out.insert(x);
            }
        }
        out
    }

    #[test]
    fn tri_examples() {
        let tri = fixtures::tri();
        let r = zeta_closure(&tri, &set(3, &[0, 2])).unwrap();
        assert_eq!(r.closure, set(3, &[0, 2]));
        assert!(r.is_closed() && !r.is_dense());
        let w = &r.witnesses[0];
        assert_eq!(w.point, 1);
        let p1 = Partition::from_blocks(3, &[vec![0], vec![1, 2]]).unwrap();
        let p2 = Partition::from_blocks(3, &[vec![0, 1], vec![2]]).unwrap();
        let pair = [w.first.clone(), w.second.clone()];
        assert!(pair.contains(&p1) && pair.contains(&p2));
        assert!(!meets_through(&w.first, &w.second, 1, &set(3, &[0, 2])));

        assert_eq!(zeta_closure(&tri, &set(3, &[0])).unwrap().closure, set(3, &[0]));
        let full = zeta_closure(&tri, &PointSet::full(3)).unwrap();
        assert!(full.is_closed() && full.is_dense());
    }

    #[test]
    fn closure_of_empty_set_is_empty() {
        for space in [fixtures::tri(), fixtures::dsc3(), fixtures::glue4(), fixtures::point()] {
            let r = zeta_closure(&space, &PointSet::empty(space.size())).unwrap();
            assert!(r.closure.is_empty());
            assert_eq!(r.witnesses.len(), space.size());
        }
    }

    #[test]
    fn oracle_examples() {
        let tri = fixtures::tri();
        assert_eq!(regular_closure_oracle(&tri, &set(3, &[0, 2])).unwrap(), set(3, &[0, 2]));
        assert_eq!(
            regular_closure_oracle(&tri, &PointSet::full(3)).unwrap(),
            PointSet::full(3)
        );
        let ind = NaSpace::indiscrete(Carrier::indexed(2));
        assert_eq!(regular_closure_oracle(&ind, &set(2, &[0])).unwrap(), PointSet::full(2));
        let big = NaSpace::discrete(Carrier::indexed(6));
        assert!(regular_closure_oracle(&big, &set(6, &[0])).is_err());
    }

    #[test]
    fn agrees_with_literal_definition() {
        for space in [fixtures::tri(), fixtures::dsc3(), fixtures::glue4()] {
            for m in PointSet::all_subsets(space.size()) {
                assert_eq!(zeta_closure(&space, &m).unwrap().closure, zeta_literal(&space, &m));
            }
        }
    }

    #[test]
    fn witnesses_certify_exclusion() {
        let space = fixtures::glue4();
        for m in PointSet::all_subsets(4) {
            let r = zeta_closure(&space, &m).unwrap();
            assert!(m.is_subset(&r.closure));
            for w in &r.witnesses {
                assert!(!r.closure.contains(w.point));
                assert_eq!(w.first.restrict(&m), w.second.restrict(&m));
                assert!(!meets_through(&w.first, &w.second, w.point, &m));
            }
        }
    }

    #[test]
    fn tables_enumeration() {
        assert_eq!(all_tables(2, 3).count(), 9);
        assert_eq!(all_tables(0, 3).count(), 1);
        assert_eq!(all_tables(2, 3).nth(1).unwrap(), vec![0, 1]);
    }
}
