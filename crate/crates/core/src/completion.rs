//! Order-preserving choice functions and the completion they build.
//!
//! A choice function picks one block of every stack member, monotonically
//! along refinement. On a finite stack it is determined by its values on the
//! generators: for any member `Q` there is a generator `G ≺ Q`, and the value
//! at `Q` must be the block of `Q` containing the block chosen at `G`. The
//! only constraint between generators is agreement at their join, because
//! any common coarsening of `G` and `H` is coarser than `G ∨ H`.

use std::collections::HashSet;

use crate::closure;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::morphism::{cogenerator_embedding, is_uniformly_continuous, CogeneratorEmbedding, UcMap};
use crate::partition::{Carrier, Partition};
use crate::pointset::PointSet;
use crate::space::NaSpace;

/// Refuse to materialize more choice functions than this.
pub const MAX_CHOICE_FUNCTIONS: usize = 1 << 16;

/// A point of the completion, stored as the block index chosen at each
/// generator of the space (in generator order).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChoiceFunction {
    assignment: Vec<u32>,
}

impl ChoiceFunction {
    pub fn from_assignment(assignment: Vec<u32>) -> Self {
        ChoiceFunction { assignment }
    }

    pub fn assignment(&self) -> &[u32] {
        &self.assignment
    }

    /// `f_x`, choosing the block of `x` everywhere.
    pub fn of_point(space: &NaSpace, x: usize) -> Self {
        ChoiceFunction {
            assignment: space.generators().iter().map(|g| g.label(x) as u32).collect(),
        }
    }

    /// Checks shape and join-consistency against `space`.
    pub fn is_valid_for(&self, space: &NaSpace) -> bool {
        let gens = space.generators();
        self.assignment.len() == gens.len()
            && self
                .assignment
                .iter()
                .zip(gens)
                .all(|(&a, g)| (a as usize) < g.num_blocks())
            && Joins::new(space).consistent(&self.assignment)
    }

    /// Block chosen at generator `i`.
    pub fn generator_block(&self, space: &NaSpace, i: usize) -> PointSet {
        space.generators()[i].block(self.assignment[i] as usize)
    }

    /// Value at an arbitrary stack member, or `None` if `q` is not a member.
    pub fn value_at(&self, space: &NaSpace, q: &Partition) -> Option<PointSet> {
        if q.size() != space.size() {
            return None;
        }
        if q.is_one_block() {
            return Some(PointSet::full(space.size()));
        }
        let (i, g) = space
            .generators()
            .iter()
            .enumerate()
            .find(|(_, g)| g.refines_unchecked(q))?;
        let rep = g.representatives()[self.assignment[i] as usize];
        Some(q.block(q.label(rep)))
    }

    /// `∩_P f(P)`.
    pub fn limit_set(&self, space: &NaSpace) -> PointSet {
        (0..self.assignment.len()).fold(PointSet::full(space.size()), |acc, i| {
            acc.intersection(&self.generator_block(space, i))
        })
    }

    /// The limit point when the intersection of chosen blocks is a single
    /// point. In a T0 space the intersection has at most one point; use
    /// [`ChoiceFunction::limit_set`] to inspect it on other spaces.
    pub fn limit(&self, space: &NaSpace) -> Option<usize> {
        let set = self.limit_set(space);
        (set.len() == 1).then(|| set.first().unwrap())
    }

    /// Human-readable form, e.g. `({0}, {2})`.
    pub fn describe(&self, space: &NaSpace) -> String {
        let parts: Vec<String> = (0..self.assignment.len())
            .map(|i| {
                let block: Vec<&str> = self
                    .generator_block(space, i)
                    .iter()
                    .map(|x| space.carrier().name(x))
                    .collect();
                format!("{{{}}}", block.join(","))
            })
            .collect();
        format!("({})", parts.join(", "))
    }
}

/// For each pair of generators, where each of their blocks lands in the
/// join.
struct Joins {
    // (i, j, block of G_i -> block of join, block of G_j -> block of join)
    pairs: Vec<(usize, usize, Vec<u32>, Vec<u32>)>,
}

impl Joins {
    fn new(space: &NaSpace) -> Self {
        let gens = space.generators();
        let mut pairs = Vec::new();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                let join = gens[i].join_unchecked(&gens[j]);
                let into =
                    |g: &Partition| -> Vec<u32> { g.representatives().iter().map(|&r| join.label(r) as u32).collect() };
                pairs.push((i, j, into(&gens[i]), into(&gens[j])));
            }
        }
        Joins { pairs }
    }

    fn consistent(&self, assignment: &[u32]) -> bool {
        self.pairs
            .iter()
            .all(|(i, j, mi, mj)| mi[assignment[*i] as usize] == mj[assignment[*j] as usize])
    }

    /// Consistency of position `k` against every earlier position.
    fn consistent_prefix(&self, assignment: &[u32], k: usize) -> bool {
        self.pairs
            .iter()
            .filter(|(_, j, _, _)| *j == k)
            .all(|(i, j, mi, mj)| mi[assignment[*i] as usize] == mj[assignment[*j] as usize])
    }
}

/// All order-preserving choice functions, in lexicographic assignment order.
pub fn enumerate_choice_functions(space: &NaSpace) -> Result<Vec<ChoiceFunction>> {
    let gens = space.generators();
    let joins = Joins::new(space);
    let mut out = Vec::new();
    let mut assignment = vec![0u32; gens.len()];

    fn rec(
        k: usize,
        gens: &[Partition],
        joins: &Joins,
        assignment: &mut Vec<u32>,
        out: &mut Vec<ChoiceFunction>,
    ) -> Result<()> {
        if k == gens.len() {
            if out.len() == MAX_CHOICE_FUNCTIONS {
                return Err(Error::BoundExceeded {
                    what: "choice-function enumeration",
                    size: MAX_CHOICE_FUNCTIONS + 1,
                    bound: MAX_CHOICE_FUNCTIONS,
                });
            }
            out.push(ChoiceFunction::from_assignment(assignment.clone()));
            return Ok(());
        }
        for b in 0..gens[k].num_blocks() as u32 {
            assignment[k] = b;
            if joins.consistent_prefix(assignment, k) {
                rec(k + 1, gens, joins, assignment, out)?;
            }
        }
        Ok(())
    }

    rec(0, gens, &joins, &mut assignment, &mut out)?;
    Ok(out)
}

/// Brute-force counterpart of [`enumerate_choice_functions`]: assigns a
/// block to every stack member, keeps the monotone assignments and projects
/// them onto the generators.
pub fn choice_functions_oracle(space: &NaSpace) -> Result<Vec<ChoiceFunction>> {
    let members = space.stack_members()?.members;
    let k = members.len();
    let below: Vec<Vec<usize>> = (0..k)
        .map(|q| {
            (0..k)
                .filter(|&p| p != q && members[p].refines_unchecked(&members[q]))
                .collect()
        })
        .collect();
    let above: Vec<Vec<usize>> = (0..k)
        .map(|p| {
            (0..k)
                .filter(|&q| q != p && members[p].refines_unchecked(&members[q]))
                .collect()
        })
        .collect();
    let reps: Vec<Vec<usize>> = members.iter().map(|m| m.representatives()).collect();
    // f(P) ⊆ f(Q) for P ≺ Q: the representative of f(P) lies in f(Q)
    let fits = |p: usize, bp: usize, q: usize, bq: usize| members[q].label(reps[p][bp]) == bq;

    let mut full = Vec::new();
    let mut choice = vec![usize::MAX; k];
    fn rec(
        i: usize,
        members: &[Partition],
        below: &[Vec<usize>],
        above: &[Vec<usize>],
        fits: &dyn Fn(usize, usize, usize, usize) -> bool,
        choice: &mut Vec<usize>,
        full: &mut Vec<Vec<usize>>,
    ) {
        if i == members.len() {
            full.push(choice.clone());
            return;
        }
        for b in 0..members[i].num_blocks() {
            let ok = below[i].iter().filter(|&&p| p < i).all(|&p| fits(p, choice[p], i, b))
                && above[i].iter().filter(|&&q| q < i).all(|&q| fits(i, b, q, choice[q]));
            if ok {
                choice[i] = b;
                rec(i + 1, members, below, above, fits, choice, full);
                choice[i] = usize::MAX;
            }
        }
    }
    rec(0, &members, &below, &above, &fits, &mut choice, &mut full);

    let gen_pos: Vec<usize> = space
        .generators()
        .iter()
        .map(|g| members.binary_search(g).expect("generator is a member"))
        .collect();
    let mut out: Vec<ChoiceFunction> = full
        .iter()
        .map(|c| ChoiceFunction::from_assignment(gen_pos.iter().map(|&p| c[p] as u32).collect()))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completeness {
    pub complete: bool,
    /// A choice function without a limit, when incomplete.
    pub witness: Option<ChoiceFunction>,
}

/// Every order-preserving choice function converges.
pub fn is_complete(space: &NaSpace) -> Result<Completeness> {
    space.require_t0()?;
    let witness = enumerate_choice_functions(space)?
        .into_iter()
        .find(|f| f.limit_set(space).is_empty());
    Ok(Completeness {
        complete: witness.is_none(),
        witness,
    })
}

#[derive(Clone, Debug)]
pub struct CompletionResult {
    pub source: NaSpace,
    pub hat_space: NaSpace,
    /// Choice function behind each point of `hat_space`, in carrier order.
    pub points: Vec<ChoiceFunction>,
    pub j: UcMap,
    /// Indices in `hat_space` of points outside `j(X)`.
    pub new_points: Vec<usize>,
}

impl CompletionResult {
    /// `Ê` for a stack member `q` of the source: points of the completion
    /// related when they choose the same block of `q`.
    pub fn hat_of(&self, q: &Partition) -> Option<Partition> {
        let mut labels = Vec::with_capacity(self.points.len());
        for f in &self.points {
            let block = f.value_at(&self.source, q)?;
            labels.push(q.label(block.first()?));
        }
        Some(Partition::from_labels(labels))
    }

    pub fn index_of(&self, f: &ChoiceFunction) -> Option<usize> {
        self.points.iter().position(|g| g == f)
    }
}

fn fresh_label(taken: &HashSet<String>, base: String) -> String {
    let mut label = base;
    while taken.contains(&label) {
        label.push('\'');
    }
    label
}

/// Builds `X̂`: all order-preserving choice functions, structured by the
/// hats of the generators of `X`. Hats of coarser members are coarser
/// (`E ⊆ E'` gives `Ê ⊆ Ê'`), so they are already in the up-closure.
pub fn complete(space: &NaSpace) -> Result<CompletionResult> {
    space.require_t0()?;
    let all = enumerate_choice_functions(space)?;
    let n = space.size();
    let mut points: Vec<ChoiceFunction> = (0..n).map(|x| ChoiceFunction::of_point(space, x)).collect();
    let image: HashSet<&ChoiceFunction> = points.iter().collect();
    let extra: Vec<ChoiceFunction> = all.iter().filter(|f| !image.contains(f)).cloned().collect();
    points.extend(extra);

    let mut taken: HashSet<String> = space.names().iter().cloned().collect();
    let mut names: Vec<String> = space.names().to_vec();
    for f in &points[n..] {
        let reps: Vec<&str> = space
            .generators()
            .iter()
            .zip(f.assignment())
            .map(|(g, &a)| space.carrier().name(g.representatives()[a as usize]))
            .collect();
        let label = fresh_label(&taken, format!("<{}>", reps.join("/")));
        taken.insert(label.clone());
        names.push(label);
    }

    let hats = (0..space.generators().len())
        .map(|i| Partition::from_labels(points.iter().map(|f| f.assignment()[i] as usize)))
        .collect();
    let hat_space = NaSpace::new(Carrier::new(names)?, hats)?;
    let j = UcMap::new(space.clone(), hat_space.clone(), (0..n).collect())?;
    let new_points = (n..points.len()).collect();
    let result = CompletionResult {
        source: space.clone(),
        hat_space,
        points,
        j,
        new_points,
    };
    if !result.hat_space.is_t0() || !result.j.is_embedding() {
        return Err(Error::Validation("completion lost T0 or initiality".into()));
    }
    Ok(result)
}

/// Monotone tuples of `Π_{P ∈ β_X} D_P`, together with the materialized
/// product they live in.
#[derive(Clone, Debug)]
pub struct OrderCompatible {
    pub embedding: CogeneratorEmbedding,
    pub points: PointSet,
}

pub fn order_compatible_points(space: &NaSpace) -> Result<OrderCompatible> {
    let embedding = cogenerator_embedding(space)?;
    let members = &embedding.members;
    let reps: Vec<Vec<usize>> = members.iter().map(|m| m.representatives()).collect();
    let order: Vec<(usize, usize)> = (0..members.len())
        .flat_map(|p| (0..members.len()).map(move |q| (p, q)))
        .filter(|&(p, q)| p != q && members[p].refines_unchecked(&members[q]))
        .collect();
    let size = embedding.product.space.size();
    let proj = &embedding.product.projections;
    let points = PointSet::from_points(
        size,
        (0..size).filter(|&t| {
            order
                .iter()
                .all(|&(p, q)| members[q].label(reps[p][proj[p][t]]) == proj[q][t])
        }),
    );
    Ok(OrderCompatible { embedding, points })
}

/// `û: X̂ → Y`, `f ↦ lim f_u`, where `f_u(P)` is the block of `P` containing
/// `u(f(u^{-1}(P)))`.
pub fn extend(completion: &CompletionResult, u: &UcMap) -> Result<UcMap> {
    let source = &completion.source;
    if !u.domain().same_structure(source) {
        return Err(Error::Validation("map domain is not the completed space".into()));
    }
    let target = u.codomain();
    target.require_t0()?;
    if !is_complete(target)?.complete {
        return Err(Error::Incomplete);
    }
    let pulled: Vec<Partition> = target.generators().iter().map(|g| g.pullback(u.table())).collect();
    let mut table = Vec::with_capacity(completion.points.len());
    for f in &completion.points {
        let assignment = target
            .generators()
            .iter()
            .zip(&pulled)
            .map(|(g, pre)| {
                let block = f
                    .value_at(source, pre)
                    .ok_or_else(|| Error::Validation("preimage outside the domain stack".into()))?;
                Ok(g.label(u.apply(block.first().expect("blocks are nonempty"))) as u32)
            })
            .collect::<Result<Vec<_>>>()?;
        let f_u = ChoiceFunction::from_assignment(assignment);
        let limit = f_u
            .limit(target)
            .ok_or_else(|| Error::Validation("induced choice function has no limit".into()))?;
        table.push(limit);
    }
    UcMap::new(completion.hat_space.clone(), target.clone(), table)
}

/// Outcome of a bounded injectivity search.
#[derive(Clone, Debug)]
pub struct InjectivityReport {
    pub injective: bool,
    /// `(v, f)`: a zeta-dense embedding and a map along which no extension
    /// exists.
    pub witness: Option<(UcMap, UcMap)>,
    /// Number of `(v, f)` pairs examined.
    pub checked: usize,
}

/// Zeta-dense embeddings `v: A → B` between T0 spaces with `|A| ≤ bound`
/// and `|A| ≤ |B| ≤ |A| + 1`.
///
/// One extra point is all a refutation needs: for an incomplete `X`, the
/// subspace of `X̂` on `j(X)` and one new point is a dense extension along
/// which the identity of `X` cannot be extended.
pub fn dense_embeddings(bound: usize) -> Result<Vec<UcMap>> {
    let mut spaces: Vec<Vec<NaSpace>> = vec![Vec::new()];
    for n in 1..=bound + 1 {
        spaces.push(enumerate::all_spaces(n, true)?.collect());
    }
    let mut out = Vec::new();
    for a_size in 1..=bound {
        for a in &spaces[a_size] {
            for b in spaces[a_size..=a_size + 1].iter().flatten() {
                for table in injective_tables(a_size, b.size()) {
                    if !is_uniformly_continuous(&table, a, b) {
                        continue;
                    }
                    let v = UcMap::new(a.clone(), b.clone(), table)?;
                    if v.is_embedding() && closure::is_zeta_dense(b, &v.image())? {
                        out.push(v);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn injective_tables(domain: usize, codomain: usize) -> impl Iterator<Item = Vec<usize>> {
    closure::all_tables(domain, codomain).filter(move |t| {
        let mut seen = vec![false; codomain];
        t.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    })
}

/// Searches for a UC `f'` with `f' ∘ v = f`.
pub fn find_extension(v: &UcMap, f: &UcMap) -> Option<UcMap> {
    let b = v.codomain();
    let target = f.codomain();
    let mut fixed = vec![None; b.size()];
    for (a, &y) in v.table().iter().enumerate() {
        fixed[y] = Some(f.apply(a));
    }
    let free: Vec<usize> = (0..b.size()).filter(|&y| fixed[y].is_none()).collect();
    closure::all_tables(free.len(), target.size()).find_map(|vals| {
        let mut table: Vec<usize> = fixed.iter().map(|v| v.unwrap_or(0)).collect();
        for (&y, &val) in free.iter().zip(&vals) {
            table[y] = val;
        }
        UcMap::new(b.clone(), target.clone(), table).ok()
    })
}

/// Bounded check that `space` is injective with respect to zeta-dense
/// embeddings: every UC map out of the domain of a searched embedding
/// extends along it. Sound as a refuter; confirms only up to the bound.
pub fn is_injective_within(space: &NaSpace, bound: usize) -> Result<InjectivityReport> {
    let catalog = dense_embeddings(bound)?;
    is_injective_along(space, &catalog)
}

/// [`is_injective_within`] over a precomputed embedding catalog.
pub fn is_injective_along(space: &NaSpace, embeddings: &[UcMap]) -> Result<InjectivityReport> {
    space.require_t0()?;
    let mut checked = 0;
    for v in embeddings {
        let a = v.domain();
        for table in enumerate::all_functions(a, space, true)? {
            let f = UcMap::new(a.clone(), space.clone(), table)?;
            checked += 1;
            if find_extension(v, &f).is_none() {
                return Ok(InjectivityReport {
                    injective: false,
                    witness: Some((v.clone(), f)),
                    checked,
                });
            }
        }
    }
    Ok(InjectivityReport {
        injective: true,
        witness: None,
        checked,
    })
}

#[derive(Clone, Debug)]
pub struct InducedMap {
    pub source: CompletionResult,
    pub target: CompletionResult,
    /// `X̂ → Ŷ`, the extension of `j_Y ∘ v` along `j_X`.
    pub map: UcMap,
}

pub fn induced_completion_map(v: &UcMap) -> Result<InducedMap> {
    let source = complete(v.domain())?;
    let target = complete(v.codomain())?;
    let into_hat = UcMap::new(
        v.domain().clone(),
        target.hat_space.clone(),
        v.table().iter().map(|&y| target.j.apply(y)).collect(),
    )?;
    let map = extend(&source, &into_hat)?;
    Ok(InducedMap { source, target, map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn cf(v: &[u32]) -> ChoiceFunction {
        ChoiceFunction::from_assignment(v.to_vec())
    }

    #[test]
    fn tri_choice_functions() {
        let tri = fixtures::tri();
        // generators sorted: {01|2} (labels 0,0,1) then {0|12} (labels 0,1,1)
        let fns = enumerate_choice_functions(&tri).unwrap();
        assert_eq!(fns.len(), 4);
        let described: Vec<String> = fns.iter().map(|f| f.describe(&tri)).collect();
        assert!(described.contains(&"({2}, {0})".to_string()));
        assert_eq!(fns, choice_functions_oracle(&tri).unwrap());
    }

    #[test]
    fn dsc3_and_indiscrete_choice_functions() {
        assert_eq!(enumerate_choice_functions(&fixtures::dsc3()).unwrap().len(), 3);
        let ind = NaSpace::indiscrete(Carrier::indexed(3));
        assert_eq!(enumerate_choice_functions(&ind).unwrap(), vec![cf(&[])]);
    }

    #[test]
    fn limits() {
        let tri = fixtures::tri();
        // blocks: gen0 = {01|2}, gen1 = {0|12}
        assert_eq!(cf(&[0, 0]).limit(&tri), Some(0));
        assert_eq!(cf(&[1, 0]).limit(&tri), None);
        assert!(cf(&[1, 0]).limit_set(&tri).is_empty());
        for x in 0..3 {
            assert_eq!(ChoiceFunction::of_point(&tri, x).limit(&tri), Some(x));
        }
        // non-T0: the whole intersection is reported
        let glue = fixtures::glue4();
        let f = ChoiceFunction::of_point(&glue, 2);
        assert_eq!(f.limit(&glue), None);
        assert_eq!(f.limit_set(&glue), PointSet::from_points(4, [2, 3]));
    }

    #[test]
    fn completeness_examples() {
        let r = is_complete(&fixtures::tri()).unwrap();
        assert!(!r.complete);
        assert_eq!(r.witness.unwrap().describe(&fixtures::tri()), "({2}, {0})");
        assert!(is_complete(&fixtures::dsc3()).unwrap().complete);
        assert!(is_complete(&fixtures::point()).unwrap().complete);
        assert!(matches!(is_complete(&fixtures::glue4()), Err(Error::NotT0(2, 3))));
    }

    #[test]
    fn completion_of_tri() {
        let tri = fixtures::tri();
        let c = complete(&tri).unwrap();
        assert_eq!(c.hat_space.size(), 4);
        assert_eq!(c.new_points, vec![3]);
        assert_eq!(c.hat_space.names()[3], "<2/0>");
        // hat of {0|12}: {j0, ω | j1, j2}; hat of {01|2}: {j0, j1 | j2, ω}
        let p1 = Partition::from_blocks(3, &[vec![0], vec![1, 2]]).unwrap();
        let p2 = Partition::from_blocks(3, &[vec![0, 1], vec![2]]).unwrap();
        assert_eq!(
            c.hat_of(&p1).unwrap(),
            Partition::from_blocks(4, &[vec![0, 3], vec![1, 2]]).unwrap()
        );
        assert_eq!(
            c.hat_of(&p2).unwrap(),
            Partition::from_blocks(4, &[vec![0, 1], vec![2, 3]]).unwrap()
        );
        assert!(c.j.is_embedding());
        assert!(closure::is_zeta_dense(&c.hat_space, &c.j.image()).unwrap());
        assert!(is_complete(&c.hat_space).unwrap().complete);
    }

    #[test]
    fn completion_of_complete_spaces_is_iso() {
        for s in [fixtures::dsc3(), fixtures::point()] {
            let c = complete(&s).unwrap();
            assert!(c.j.is_isomorphism());
            assert!(c.new_points.is_empty());
        }
        assert!(complete(&fixtures::glue4()).is_err());
    }

    #[test]
    fn order_compatible_examples() {
        let tri = fixtures::tri();
        let oc = order_compatible_points(&tri).unwrap();
        assert_eq!(oc.points.len(), 4);
        assert!(oc.points.is_full());
        assert!(oc.embedding.map.image().is_subset(&oc.points));
        let dsc = order_compatible_points(&fixtures::dsc3()).unwrap();
        assert_eq!(dsc.points, dsc.embedding.map.image());
    }

    #[test]
    fn extension_examples() {
        let tri = fixtures::tri();
        let c = complete(&tri).unwrap();
        let u = UcMap::new(tri.clone(), fixtures::dsc3(), vec![0, 1, 1]).unwrap();
        let ext = extend(&c, &u).unwrap();
        assert_eq!(ext.apply(3), 0);
        for x in 0..3 {
            assert_eq!(ext.apply(c.j.apply(x)), u.apply(x));
        }
        let id_ext = extend(&c, &c.j).unwrap();
        assert_eq!(id_ext.table(), &[0, 1, 2, 3]);

        let to_tri = UcMap::identity(tri.clone());
        assert_eq!(extend(&c, &to_tri).unwrap_err(), Error::Incomplete);
    }

    #[test]
    fn injectivity_examples() {
        let catalog = dense_embeddings(3).unwrap();
        assert!(is_injective_along(&fixtures::dsc3(), &catalog).unwrap().injective);
        assert!(is_injective_along(&fixtures::point(), &catalog).unwrap().injective);
        let tri = is_injective_along(&fixtures::tri(), &catalog).unwrap();
        assert!(!tri.injective);
        let (v, f) = tri.witness.unwrap();
        assert!(find_extension(&v, &f).is_none());
        assert_eq!(v.codomain().size(), v.domain().size() + 1);
    }

    #[test]
    fn dense_embeddings_with_small_codomains_are_isomorphisms() {
        // With at most three points on both sides there is nothing to
        // refute: every dense embedding is an isomorphism.
        let catalog = dense_embeddings(3).unwrap();
        assert!(catalog
            .iter()
            .filter(|v| v.codomain().size() <= 3)
            .all(|v| v.is_isomorphism()));
        assert!(catalog.iter().any(|v| !v.is_isomorphism()));
    }

    #[test]
    fn induced_maps() {
        let tri = fixtures::tri();
        let id = induced_completion_map(&UcMap::identity(tri.clone())).unwrap();
        assert_eq!(id.map.table(), &[0, 1, 2, 3]);
        let sub = tri.subspace(&PointSet::from_points(3, [0, 2])).unwrap();
        let incl = UcMap::new(sub, tri, vec![0, 2]).unwrap();
        let r = induced_completion_map(&incl).unwrap();
        assert_eq!(r.source.hat_space.size(), 2);
        assert_eq!(r.target.hat_space.size(), 4);
        assert!(!r.map.is_isomorphism());
    }
}
