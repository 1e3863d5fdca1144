//! Intersection-closed stacks: minimal Cauchy filters and their pairing
//! with order-preserving choice functions.
//!
//! On a finite carrier every filter is principal, so a filter is kept as its
//! generating set. A filter is Cauchy when it contains a block of every
//! stack member, i.e. its generating set fits inside one block of each
//! member.

use crate::completion::{enumerate_choice_functions, ChoiceFunction};
use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::space::NaSpace;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetFilter {
    /// Generating set; the filter is every superset of it.
    pub generator: PointSet,
    /// `z_G` for each generator `G` of the space, for display.
    pub blocks: Vec<PointSet>,
}

impl SetFilter {
    pub fn contains(&self, set: &PointSet) -> bool {
        self.generator.is_subset(set)
    }
}

/// Every pair of generators has its meet in the stack. Enough for all
/// members, since meets of coarser partitions are coarser.
pub fn is_intersection_closed(space: &NaSpace) -> bool {
    let gens = space.generators();
    gens.iter().enumerate().all(|(i, g)| {
        gens[i + 1..]
            .iter()
            .all(|h| space.contains_unchecked(&g.meet_unchecked(h)))
    })
}

fn require_uniform(space: &NaSpace) -> Result<()> {
    if !is_intersection_closed(space) {
        return Err(Error::NotIntersectionClosed);
    }
    space.require_t0()
}

fn filter_from_blocks(blocks: Vec<PointSet>, size: usize) -> SetFilter {
    let generator = blocks.iter().fold(PointSet::full(size), |acc, b| acc.intersection(b));
    SetFilter { generator, blocks }
}

/// `F`: the filter generated by the chosen blocks.
pub fn filter_of_choice(space: &NaSpace, f: &ChoiceFunction) -> Result<SetFilter> {
    require_uniform(space)?;
    if !f.is_valid_for(space) {
        return Err(Error::Validation(
            "not an order-preserving choice function of this space".into(),
        ));
    }
    let blocks = (0..space.generators().len())
        .map(|i| f.generator_block(space, i))
        .collect();
    Ok(filter_from_blocks(blocks, space.size()))
}

/// `G`: reads off, for each generator, the unique block containing the
/// filter's generating set.
pub fn choice_of_filter(space: &NaSpace, filter: &SetFilter) -> Result<ChoiceFunction> {
    require_uniform(space)?;
    let any = filter
        .generator
        .first()
        .ok_or_else(|| Error::Validation("improper filter (empty generating set)".into()))?;
    let assignment = space
        .generators()
        .iter()
        .map(|g| {
            let block = g.label(any);
            if filter.generator.iter().all(|x| g.label(x) == block) {
                Ok(block as u32)
            } else {
                Err(Error::Validation("filter is not Cauchy".into()))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ChoiceFunction::from_assignment(assignment))
}

/// All minimal Cauchy filters, obtained through `F` and sorted.
pub fn minimal_cauchy_filters(space: &NaSpace) -> Result<Vec<SetFilter>> {
    require_uniform(space)?;
    let mut out = enumerate_choice_functions(space)?
        .iter()
        .map(|f| filter_of_choice(space, f))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// Definition-level enumeration: principal filters on nonempty sets that
/// meet every member in a block, keeping the inclusion-minimal filters
/// (maximal generating sets). Returns generating sets, sorted.
pub fn minimal_cauchy_filters_oracle(space: &NaSpace) -> Result<Vec<PointSet>> {
    let members = space.stack_members()?.members;
    let blocks: Vec<Vec<PointSet>> = members.iter().map(|m| m.blocks()).collect();
    let cauchy: Vec<PointSet> = PointSet::all_subsets(space.size())
        .filter(|s| !s.is_empty())
        .filter(|s| blocks.iter().all(|bs| bs.iter().any(|b| s.is_subset(b))))
        .collect();
    let mut minimal: Vec<PointSet> = cauchy
        .iter()
        .filter(|s| !cauchy.iter().any(|t| t != *s && s.is_subset(t)))
        .cloned()
        .collect();
    minimal.sort();
    Ok(minimal)
}

/// The filter converges to `x` when its generating set lies in every
/// neighbourhood block of `x`.
pub fn filter_converges(space: &NaSpace, filter: &SetFilter, x: usize) -> Result<bool> {
    require_uniform(space)?;
    if x >= space.size() {
        return Err(Error::Validation(format!("unknown point {x}")));
    }
    Ok(space.generators().iter().all(|g| {
        let block = g.label(x);
        filter.generator.iter().all(|y| g.label(y) == block)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn intersection_closed_examples() {
        assert!(!is_intersection_closed(&fixtures::tri()));
        assert!(is_intersection_closed(&fixtures::dsc3()));
        assert!(is_intersection_closed(&fixtures::glue4()));
    }

    #[test]
    fn filters_of_dsc3() {
        let dsc = fixtures::dsc3();
        let filters = minimal_cauchy_filters(&dsc).unwrap();
        assert_eq!(filters.len(), 3);
        let oracle = minimal_cauchy_filters_oracle(&dsc).unwrap();
        let gens: Vec<PointSet> = filters.iter().map(|f| f.generator.clone()).collect();
        assert_eq!(gens, oracle);
        for x in 0..3 {
            let f = ChoiceFunction::of_point(&dsc, x);
            let filter = filter_of_choice(&dsc, &f).unwrap();
            assert_eq!(filter.generator, PointSet::singleton(3, x));
            assert_eq!(choice_of_filter(&dsc, &filter).unwrap(), f);
            for y in 0..3 {
                assert_eq!(filter_converges(&dsc, &filter, y).unwrap(), x == y);
            }
        }
    }

    #[test]
    fn one_point_space() {
        let pt = fixtures::point();
        let filters = minimal_cauchy_filters(&pt).unwrap();
        assert_eq!(filters.len(), 1);
        assert!(filter_converges(&pt, &filters[0], 0).unwrap());
    }

    #[test]
    fn rejected_inputs() {
        assert!(matches!(
            minimal_cauchy_filters(&fixtures::glue4()),
            Err(Error::NotT0(..))
        ));
        assert_eq!(
            minimal_cauchy_filters(&fixtures::tri()).unwrap_err(),
            Error::NotIntersectionClosed
        );
        let dsc = fixtures::dsc3();
        let improper = SetFilter {
            generator: PointSet::empty(3),
            blocks: vec![],
        };
        assert!(choice_of_filter(&dsc, &improper).is_err());
        let wide = SetFilter {
            generator: PointSet::full(3),
            blocks: vec![],
        };
        assert!(choice_of_filter(&dsc, &wide).is_err());
    }
}
