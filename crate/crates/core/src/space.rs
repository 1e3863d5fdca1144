//! Non-Archimedean spaces on finite carriers.
//!
//! A structure is an up-closed family of partitions (a stack). On a finite
//! carrier it is the up-closure of its minimal elements, so [`NaSpace`]
//! stores only that antichain. The one-block partition is always a member
//! and is never listed as a generator: the indiscrete space has no
//! generators at all.

use crate::error::{Error, Result};
use crate::partition::{Carrier, Partition};
use crate::pointset::PointSet;

/// Largest carrier a materialized product may have.
pub const MAX_PRODUCT_SIZE: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NaSpace {
    carrier: Carrier,
    generators: Vec<Partition>,
}

/// Every member of a stack, canonically sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StackView {
    pub members: Vec<Partition>,
}

impl StackView {
    pub fn contains(&self, q: &Partition) -> bool {
        self.members.binary_search(q).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Reduces a family of partitions to the antichain of its minimal elements,
/// dropping the one-block partition and duplicates.
fn minimal_antichain(mut parts: Vec<Partition>) -> Vec<Partition> {
    parts.retain(|p| !p.is_one_block());
    parts.sort();
    parts.dedup();
    let keep: Vec<bool> = parts
        .iter()
        .map(|p| !parts.iter().any(|q| q != p && q.refines_unchecked(p)))
        .collect();
    parts
        .into_iter()
        .zip(keep)
        .filter_map(|(p, k)| k.then_some(p))
        .collect()
}

impl NaSpace {
    /// The space whose stack is the up-closure of `parts` (plus the one-block
    /// partition).
    pub fn new(carrier: Carrier, parts: Vec<Partition>) -> Result<Self> {
        for p in &parts {
            if p.size() != carrier.size() {
                return Err(Error::CarrierMismatch {
                    left: carrier.size(),
                    right: p.size(),
                });
            }
        }
        Ok(NaSpace {
            carrier,
            generators: minimal_antichain(parts),
        })
    }

    pub fn discrete(carrier: Carrier) -> Self {
        let n = carrier.size();
        NaSpace {
            carrier,
            generators: minimal_antichain(vec![Partition::discrete(n)]),
        }
    }

    pub fn indiscrete(carrier: Carrier) -> Self {
        NaSpace {
            carrier,
            generators: Vec::new(),
        }
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn names(&self) -> &[String] {
        self.carrier.names()
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn generators(&self) -> &[Partition] {
        &self.generators
    }

    /// Same stack, ignoring point labels.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.size() == other.size() && self.generators == other.generators
    }

    /// Same space with different point labels.
    pub fn relabel(&self, carrier: Carrier) -> Result<Self> {
        if carrier.size() != self.size() {
            return Err(Error::CarrierMismatch {
                left: self.size(),
                right: carrier.size(),
            });
        }
        Ok(NaSpace {
            carrier,
            generators: self.generators.clone(),
        })
    }

    pub fn stack_members(&self) -> Result<StackView> {
        let mut members = vec![Partition::one_block(self.size())];
        for g in &self.generators {
            members.extend(g.coarsenings()?);
        }
        members.sort();
        members.dedup();
        Ok(StackView { members })
    }

    pub fn contains(&self, q: &Partition) -> Result<bool> {
        if q.size() != self.size() {
            return Err(Error::CarrierMismatch {
                left: self.size(),
                right: q.size(),
            });
        }
        Ok(self.contains_unchecked(q))
    }

    pub(crate) fn contains_unchecked(&self, q: &Partition) -> bool {
        q.is_one_block() || self.generators.iter().any(|g| g.refines_unchecked(q))
    }

    /// Meet of all generators: the finest relation the stack can separate by.
    pub fn generator_meet(&self) -> Partition {
        self.generators
            .iter()
            .fold(Partition::one_block(self.size()), |acc, g| acc.meet_unchecked(g))
    }

    /// Any two distinct points differ in some member of the stack.
    ///
    /// A member separating `x` and `y` exists iff a generator does (members
    /// are coarser than generators), and the generators jointly separate all
    /// pairs iff their meet is discrete.
    pub fn is_t0(&self) -> bool {
        self.generator_meet().is_discrete()
    }

    /// First pair of points (in index order) that no member separates.
    pub fn t0_violation(&self) -> Option<(usize, usize)> {
        let meet = self.generator_meet();
        (0..self.size())
            .flat_map(|x| (x + 1..self.size()).map(move |y| (x, y)))
            .find(|&(x, y)| meet.same_block(x, y))
    }

    pub fn require_t0(&self) -> Result<()> {
        match self.t0_violation() {
            Some((x, y)) => Err(Error::NotT0(x, y)),
            None => Ok(()),
        }
    }

    /// Coarsest structure on `carrier` making every `(table, space)` map
    /// uniformly continuous. Preimages of generators suffice: pulling back is
    /// monotone, so preimages of coarser members land in the up-closure.
    pub fn initial_structure(carrier: Carrier, maps: &[(&[usize], &NaSpace)]) -> Result<Self> {
        let mut parts = Vec::new();
        for (table, space) in maps {
            check_total(table, carrier.size(), space.size())?;
            parts.extend(space.generators.iter().map(|g| g.pullback(table)));
        }
        NaSpace::new(carrier, parts)
    }

    pub fn subspace(&self, subset: &PointSet) -> Result<Self> {
        if subset.universe() != self.size() {
            return Err(Error::CarrierMismatch {
                left: self.size(),
                right: subset.universe(),
            });
        }
        if subset.is_empty() {
            return Err(Error::Validation("subspace of an empty subset".into()));
        }
        let inclusion: Vec<usize> = subset.iter().collect();
        let carrier = Carrier::new(inclusion.iter().map(|&x| self.carrier.name(x).to_string()))?;
        NaSpace::initial_structure(carrier, &[(&inclusion, self)])
    }
}

pub(crate) fn check_total(table: &[usize], domain: usize, codomain: usize) -> Result<()> {
    if table.len() != domain {
        return Err(Error::Validation(format!(
            "function has {} entries for a domain of {domain} points",
            table.len()
        )));
    }
    if let Some(&y) = table.iter().find(|&&y| y >= codomain) {
        return Err(Error::Validation(format!(
            "function value {y} outside a codomain of {codomain} points"
        )));
    }
    Ok(())
}

/// A materialized product with its projections.
#[derive(Clone, Debug)]
pub struct Product {
    pub space: NaSpace,
    /// `projections[k][t]` is the `k`-th coordinate of tuple `t`.
    pub projections: Vec<Vec<usize>>,
}

impl Product {
    /// Point index of a coordinate tuple (row-major, first factor most
    /// significant).
    pub fn index_of(&self, coords: &[usize]) -> usize {
        let mut idx = 0;
        for (k, &c) in coords.iter().enumerate() {
            let width = self.factor_size(k);
            idx = idx * width + c;
        }
        idx
    }

    fn factor_size(&self, k: usize) -> usize {
        self.projections[k].iter().max().map_or(1, |m| m + 1)
    }
}

/// Cartesian product with the initial structure for the projections.
/// Tuples are indexed row-major in factor order; labels join coordinates
/// with `,`.
pub fn product(factors: &[&NaSpace]) -> Result<Product> {
    if factors.is_empty() {
        return Err(Error::Validation("product of no factors".into()));
    }
    let size = factors.iter().try_fold(1usize, |acc, f| {
        acc.checked_mul(f.size()).filter(|&s| s <= MAX_PRODUCT_SIZE)
    });
    let Some(size) = size else {
        return Err(Error::BoundExceeded {
            what: "product carrier",
            size: factors
                .iter()
                .map(|f| f.size())
                .product::<usize>()
                .max(MAX_PRODUCT_SIZE + 1),
            bound: MAX_PRODUCT_SIZE,
        });
    };

    let mut projections = vec![Vec::with_capacity(size); factors.len()];
    let mut names = Vec::with_capacity(size);
    let mut coords = vec![0usize; factors.len()];
    for _ in 0..size {
        for (k, &c) in coords.iter().enumerate() {
            projections[k].push(c);
        }
        let label: Vec<&str> = coords.iter().zip(factors).map(|(&c, f)| f.carrier.name(c)).collect();
        names.push(label.join(","));
        // odometer, last factor fastest
        for k in (0..factors.len()).rev() {
            coords[k] += 1;
            if coords[k] < factors[k].size() {
                break;
            }
            coords[k] = 0;
        }
    }
    let carrier = Carrier::new(names)?;
    let maps: Vec<(&[usize], &NaSpace)> = projections
        .iter()
        .zip(factors)
        .map(|(p, f)| (p.as_slice(), *f))
        .collect();
    let space = NaSpace::initial_structure(carrier, &maps)?;
    Ok(Product { space, projections })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn p(n: usize, blocks: &[&[usize]]) -> Partition {
        Partition::from_blocks(n, blocks).unwrap()
    }

    #[test]
    fn make_space_normalizes() {
        let c = Carrier::indexed(3);
        let s = NaSpace::new(c.clone(), vec![p(3, &[&[0], &[1, 2]]), Partition::one_block(3)]).unwrap();
        assert_eq!(s.generators(), &[p(3, &[&[0], &[1, 2]])]);

        let ind = NaSpace::new(Carrier::indexed(2), vec![]).unwrap();
        assert!(ind.generators().is_empty());
        assert_eq!(ind.stack_members().unwrap().members, vec![Partition::one_block(2)]);

        let both = NaSpace::new(c, vec![p(3, &[&[0], &[1, 2]]), p(3, &[&[0, 1], &[2]])]).unwrap();
        assert_eq!(both.generators().len(), 2);
        assert!(NaSpace::new(Carrier::indexed(2), vec![Partition::discrete(3)]).is_err());
    }

    #[test]
    fn stack_member_examples() {
        let tri = fixtures::tri();
        let members = tri.stack_members().unwrap().members;
        assert_eq!(
            members,
            vec![Partition::one_block(3), p(3, &[&[0, 1], &[2]]), p(3, &[&[0], &[1, 2]]),]
        );
        assert_eq!(fixtures::dsc3().stack_members().unwrap().len(), 5);
        let ind = NaSpace::indiscrete(Carrier::indexed(4));
        assert_eq!(ind.stack_members().unwrap().members, vec![Partition::one_block(4)]);
    }

    #[test]
    fn contains_examples() {
        let tri = fixtures::tri();
        assert!(tri.contains(&Partition::one_block(3)).unwrap());
        assert!(!tri.contains(&Partition::discrete(3)).unwrap());
        let dsc = fixtures::dsc3();
        for q in crate::partition::all_partitions(3).unwrap() {
            assert!(dsc.contains(&q).unwrap());
        }
        assert!(tri.contains(&Partition::discrete(2)).is_err());
    }

    #[test]
    fn discrete_and_indiscrete() {
        let d = NaSpace::discrete(Carrier::indexed(2));
        assert_eq!(d.stack_members().unwrap().len(), 2);
        let i = NaSpace::indiscrete(Carrier::indexed(2));
        assert_eq!(i.stack_members().unwrap().len(), 1);
        let c1 = Carrier::indexed(1);
        assert_eq!(NaSpace::discrete(c1.clone()), NaSpace::indiscrete(c1));
    }

    #[test]
    fn t0_examples() {
        assert!(fixtures::tri().is_t0());
        let glue = fixtures::glue4();
        assert!(!glue.is_t0());
        assert_eq!(glue.t0_violation(), Some((2, 3)));
        assert!(!NaSpace::indiscrete(Carrier::indexed(2)).is_t0());
        assert!(NaSpace::indiscrete(Carrier::indexed(1)).is_t0());
    }

    #[test]
    fn initial_structure_examples() {
        let c = Carrier::indexed(3);
        let tri = fixtures::tri();
        assert_eq!(
            NaSpace::initial_structure(c.clone(), &[]).unwrap(),
            NaSpace::indiscrete(c.clone())
        );
        let id = [0, 1, 2];
        assert_eq!(NaSpace::initial_structure(c, &[(&id, &tri)]).unwrap(), tri);
        let incl = [0, 1];
        let sub = NaSpace::initial_structure(Carrier::indexed(2), &[(&incl, &tri)]).unwrap();
        assert_eq!(sub.generators(), &[Partition::discrete(2)]);
        assert!(NaSpace::initial_structure(Carrier::indexed(2), &[(&[0, 5][..], &tri)]).is_err());
        assert!(NaSpace::initial_structure(Carrier::indexed(2), &[(&[0][..], &tri)]).is_err());
    }

    #[test]
    fn subspace_examples() {
        let tri = fixtures::tri();
        let s = tri.subspace(&PointSet::from_points(3, [0, 1])).unwrap();
        assert_eq!(s.generators(), &[Partition::discrete(2)]);
        assert_eq!(tri.subspace(&PointSet::full(3)).unwrap(), tri);
        let ind = NaSpace::indiscrete(Carrier::indexed(3));
        let sub = ind.subspace(&PointSet::from_points(3, [0, 2])).unwrap();
        assert!(sub.generators().is_empty());
        assert_eq!(sub.names(), &["0".to_string(), "2".to_string()]);
        assert!(tri.subspace(&PointSet::empty(3)).is_err());
    }

    #[test]
    fn product_examples() {
        let tri = fixtures::tri();
        let single = product(&[&tri]).unwrap();
        assert!(single.space.same_structure(&tri));

        let d2 = NaSpace::discrete(Carrier::indexed(2));
        let sq = product(&[&d2, &d2]).unwrap();
        assert_eq!(sq.space.size(), 4);
        assert_eq!(sq.space.names()[1], "0,1");
        assert_eq!(sq.index_of(&[1, 0]), 2);
        let rows = p(4, &[&[0, 1], &[2, 3]]);
        let cols = p(4, &[&[0, 2], &[1, 3]]);
        assert!(sq.space.contains(&rows).unwrap());
        assert!(sq.space.contains(&cols).unwrap());
        assert!(!sq.space.contains(&Partition::discrete(4)).unwrap());
        assert!(sq.space.is_t0());

        let big = NaSpace::discrete(Carrier::indexed(8));
        assert!(matches!(
            product(&[&big, &big, &big, &big, &big]),
            Err(Error::BoundExceeded { .. })
        ));
    }
}
