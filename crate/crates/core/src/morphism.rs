//! Uniformly continuous maps and the special-morphism predicates.

use crate::closure;
use crate::error::{Error, Result};
use crate::partition::{Carrier, Partition};
use crate::pointset::PointSet;
use crate::space::{self, check_total, NaSpace, Product};

/// `f^{-1}(Q)`: the partition of the domain into nonempty fibres of block
/// membership.
pub fn preimage_partition(table: &[usize], q: &Partition) -> Result<Partition> {
    if let Some(&y) = table.iter().find(|&&y| y >= q.size()) {
        return Err(Error::CarrierMismatch {
            left: q.size(),
            right: y + 1,
        });
    }
    Ok(q.pullback(table))
}

/// The first generator of `codomain` whose preimage is missing from the
/// domain stack, if any.
///
/// Checking generators is enough: if `G ≺ Q` then `f^{-1}(G) ≺ f^{-1}(Q)`,
/// and the domain stack is up-closed.
pub fn uc_violation<'a>(table: &[usize], domain: &NaSpace, codomain: &'a NaSpace) -> Option<&'a Partition> {
    codomain
        .generators()
        .iter()
        .find(|g| !domain.contains_unchecked(&g.pullback(table)))
}

/// Whether a total function is uniformly continuous. Non-total tables are
/// reported as not continuous.
pub fn is_uniformly_continuous(table: &[usize], domain: &NaSpace, codomain: &NaSpace) -> bool {
    check_total(table, domain.size(), codomain.size()).is_ok() && uc_violation(table, domain, codomain).is_none()
}

/// Full-stack form of uniform continuity: every member of the codomain
/// stack pulls back into the domain stack.
pub fn is_uniformly_continuous_full(table: &[usize], domain: &NaSpace, codomain: &NaSpace) -> Result<bool> {
    check_total(table, domain.size(), codomain.size())?;
    let members = domain.stack_members()?;
    Ok(codomain
        .stack_members()?
        .members
        .iter()
        .all(|q| members.contains(&q.pullback(table))))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UcMap {
    domain: NaSpace,
    codomain: NaSpace,
    table: Vec<usize>,
}

impl UcMap {
    pub fn new(domain: NaSpace, codomain: NaSpace, table: Vec<usize>) -> Result<Self> {
        check_total(&table, domain.size(), codomain.size())?;
        if let Some(g) = uc_violation(&table, &domain, &codomain) {
            return Err(Error::NotUniformlyContinuous {
                generator: g.display_with(codomain.names()).to_string(),
            });
        }
        Ok(UcMap {
            domain,
            codomain,
            table,
        })
    }

    pub fn identity(space: NaSpace) -> Self {
        let table = (0..space.size()).collect();
        UcMap {
            domain: space.clone(),
            codomain: space,
            table,
        }
    }

    pub fn domain(&self) -> &NaSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &NaSpace {
        &self.codomain
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &UcMap) -> Result<UcMap> {
        if !self.codomain.same_structure(&next.domain) {
            return Err(Error::Validation("composition: codomain and domain differ".into()));
        }
        let table = self.table.iter().map(|&y| next.table[y]).collect();
        UcMap::new(self.domain.clone(), next.codomain.clone(), table)
    }

    pub fn image(&self) -> PointSet {
        PointSet::from_points(self.codomain.size(), self.table.iter().copied())
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.domain.size()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().is_full()
    }

    pub fn preimage(&self, q: &Partition) -> Result<Partition> {
        preimage_partition(&self.table, q)
    }

    /// Injective and initial: the domain stack is exactly the one pulled
    /// back from the codomain.
    pub fn is_embedding(&self) -> bool {
        if !self.is_injective() {
            return false;
        }
        match NaSpace::initial_structure(self.domain.carrier().clone(), &[(&self.table, &self.codomain)]) {
            Ok(initial) => initial.same_structure(&self.domain),
            Err(_) => false,
        }
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_surjective() && self.is_embedding()
    }

    /// Epimorphisms of Hausdorff spaces are the zeta-dense maps.
    pub fn is_epimorphism(&self) -> Result<bool> {
        self.domain.require_t0()?;
        self.codomain.require_t0()?;
        closure::is_zeta_dense(&self.codomain, &self.image())
    }

    /// Extremal monomorphisms of Hausdorff spaces are the zeta-closed
    /// embeddings.
    pub fn is_extremal_mono(&self) -> Result<bool> {
        self.domain.require_t0()?;
        self.codomain.require_t0()?;
        Ok(self.is_embedding() && closure::is_zeta_closed(&self.codomain, &self.image())?)
    }

    /// Whether the map is final for its codomain structure: the codomain
    /// stack is everything whose preimage lies in the domain stack.
    pub fn is_final(&self) -> Result<bool> {
        let domain_members = self.domain.stack_members()?;
        for q in crate::partition::all_partitions(self.codomain.size())? {
            let pulled_in = domain_members.contains(&q.pullback(&self.table));
            if pulled_in != self.codomain.contains_unchecked(&q) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The embedding of a Hausdorff space into the product of discrete spaces
/// indexed by all of its stack members.
#[derive(Clone, Debug)]
pub struct CogeneratorEmbedding {
    /// Stack members, in the order of the product factors.
    pub members: Vec<Partition>,
    pub product: Product,
    pub map: UcMap,
}

/// `x ↦ ([x]_P)_P` into `Π_{P ∈ β_X} D_P`. Factor points are the blocks of
/// `P`, labelled by the name of their minimum point.
pub fn cogenerator_embedding(space: &NaSpace) -> Result<CogeneratorEmbedding> {
    space.require_t0()?;
    let members = space.stack_members()?.members;
    let factors: Vec<NaSpace> = members
        .iter()
        .map(|p| {
            let carrier = Carrier::new(p.representatives().iter().map(|&r| space.names()[r].clone()))?;
            Ok(NaSpace::discrete(carrier))
        })
        .collect::<Result<_>>()?;
    let refs: Vec<&NaSpace> = factors.iter().collect();
    let product = space::product(&refs)?;
    let table = (0..space.size())
        .map(|x| {
            let coords: Vec<usize> = members.iter().map(|p| p.label(x)).collect();
            product.index_of(&coords)
        })
        .collect();
    let map = UcMap::new(space.clone(), product.space.clone(), table)?;
    Ok(CogeneratorEmbedding { members, product, map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn p(n: usize, blocks: &[&[usize]]) -> Partition {
        Partition::from_blocks(n, blocks).unwrap()
    }

    #[test]
    fn uc_examples() {
        let (tri, d2) = (fixtures::tri(), fixtures::d2());
        assert!(is_uniformly_continuous(&[0, 1, 1], &tri, &d2));
        assert!(!is_uniformly_continuous(&[0, 1, 0], &tri, &d2));
        assert!(is_uniformly_continuous(&[1, 1, 1], &tri, &d2));
        assert!(!is_uniformly_continuous(&[1, 1], &tri, &d2));
        let err = UcMap::new(tri.clone(), d2.clone(), vec![0, 1, 0]).unwrap_err();
        assert_eq!(
            err,
            Error::NotUniformlyContinuous {
                generator: "u | v".into()
            }
        );
    }

    #[test]
    fn preimage_examples() {
        let q = p(2, &[&[0], &[1]]);
        assert_eq!(preimage_partition(&[1, 1, 1], &q).unwrap(), Partition::one_block(3));
        let r = p(3, &[&[0], &[1, 2]]);
        assert_eq!(preimage_partition(&[0, 1, 2], &r).unwrap(), r);
        assert_eq!(preimage_partition(&[0, 1, 1], &q).unwrap(), r);
        assert!(preimage_partition(&[0, 2], &q).is_err());
    }

    #[test]
    fn embedding_examples() {
        let tri = fixtures::tri();
        let sub = tri.subspace(&PointSet::from_points(3, [0, 2])).unwrap();
        let incl = UcMap::new(sub, tri.clone(), vec![0, 2]).unwrap();
        assert!(incl.is_embedding());
        let id = UcMap::new(fixtures::dsc3(), tri.clone(), vec![0, 1, 2]).unwrap();
        assert!(!id.is_embedding());
        assert!(UcMap::identity(tri).is_embedding());
    }

    #[test]
    fn epi_and_extremal_mono_examples() {
        let tri = fixtures::tri();
        let sub = tri.subspace(&PointSet::from_points(3, [0, 2])).unwrap();
        let incl = UcMap::new(sub, tri.clone(), vec![0, 2]).unwrap();
        assert!(!incl.is_epimorphism().unwrap());
        assert!(incl.is_extremal_mono().unwrap());

        let surj = UcMap::new(fixtures::dsc3(), tri.clone(), vec![0, 1, 2]).unwrap();
        assert!(surj.is_epimorphism().unwrap());
        assert!(UcMap::identity(tri).is_extremal_mono().unwrap());
        let glue = fixtures::glue4();
        assert!(UcMap::identity(glue).is_epimorphism().is_err());
    }

    #[test]
    fn composition() {
        let (tri, d2) = (fixtures::tri(), fixtures::d2());
        let f = UcMap::new(tri.clone(), d2.clone(), vec![0, 1, 1]).unwrap();
        let g = UcMap::new(d2.clone(), d2.clone(), vec![1, 0]).unwrap();
        assert_eq!(f.then(&g).unwrap().table(), &[1, 0, 0]);
        assert!(g.then(&f).is_err());
    }

    #[test]
    fn cogenerator_examples() {
        let tri = fixtures::tri();
        let emb = cogenerator_embedding(&tri).unwrap();
        assert_eq!(emb.product.space.size(), 4);
        assert!(emb.map.is_embedding());

        let one = cogenerator_embedding(&fixtures::point()).unwrap();
        assert!(one.map.is_isomorphism());

        let dsc = cogenerator_embedding(&fixtures::dsc3()).unwrap();
        assert_eq!(dsc.members.len(), 5);
        assert_eq!(dsc.product.space.size(), 24);
        assert!(dsc.map.is_embedding());

        assert!(cogenerator_embedding(&fixtures::glue4()).is_err());
    }

    #[test]
    fn finality() {
        let tri = fixtures::tri();
        let f = UcMap::new(tri.clone(), fixtures::d2(), vec![0, 1, 1]).unwrap();
        assert!(f.is_final().unwrap());
        let g = UcMap::new(fixtures::dsc3(), tri, vec![0, 1, 2]).unwrap();
        assert!(!g.is_final().unwrap());
    }
}
