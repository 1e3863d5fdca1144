//! Property suites over exhaustive and sampled instances.
//!
//! Each suite stops at its first counterexample and reports it as a `.nas`
//! document. Instances on up to `exhaustive_to` points are enumerated
//! exhaustively; larger carriers up to `max_carrier` are sampled with
//! [`sample_spaces`]. Suites that cannot afford a size skip it and say so.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::closure::{self, RegularClosureOracle};
use crate::completion::{
    choice_functions_oracle, complete, dense_embeddings, enumerate_choice_functions, extend, find_extension,
    induced_completion_map, is_complete, is_injective_along, order_compatible_points,
};
use crate::enumerate::{all_functions, all_spaces, sample_spaces, InstanceBudget, EXHAUSTIVE_BOUND};
use crate::error::{Error, Result};
use crate::format::{emit, Document};
use crate::morphism::{is_uniformly_continuous, is_uniformly_continuous_full, UcMap};
use crate::partition::Carrier;
use crate::pointset::PointSet;
use crate::space::NaSpace;
use crate::uniform::{
    choice_of_filter, filter_converges, filter_of_choice, is_intersection_closed, minimal_cauchy_filters,
    minimal_cauchy_filters_oracle,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    ClosureOracle,
    ClosureLaws,
    Morphisms,
    Representation,
    Completion,
    Cogenerator,
    Injectivity,
    Firmness,
    Cauchy,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::ClosureOracle,
        Suite::ClosureLaws,
        Suite::Morphisms,
        Suite::Representation,
        Suite::Completion,
        Suite::Cogenerator,
        Suite::Injectivity,
        Suite::Firmness,
        Suite::Cauchy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ClosureOracle => "closure-oracle",
            Suite::ClosureLaws => "closure-laws",
            Suite::Morphisms => "morphisms",
            Suite::Representation => "representation",
            Suite::Completion => "completion",
            Suite::Cogenerator => "cogenerator",
            Suite::Injectivity => "injectivity",
            Suite::Firmness => "firmness",
            Suite::Cauchy => "cauchy",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct Counterexample {
    pub message: String,
    pub document: Document,
}

impl Counterexample {
    pub fn to_nas(&self) -> String {
        emit(&self.document)
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub instances: usize,
    pub checks: usize,
    pub notes: Vec<String>,
    pub failure: Option<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    /// One deterministic summary line.
    pub fn summary(&self) -> String {
        let status = if self.passed() { "ok" } else { "FAIL" };
        let mut line = format!(
            "{:<15} {:<4} instances={} checks={}",
            self.suite.name(),
            status,
            self.instances,
            self.checks
        );
        for note in &self.notes {
            line.push_str("; ");
            line.push_str(note);
        }
        line
    }
}

enum Stop {
    Found(Counterexample),
    Error(Error),
}

impl From<Error> for Stop {
    fn from(e: Error) -> Self {
        Stop::Error(e)
    }
}

type Step = std::result::Result<(), Stop>;

#[derive(Default)]
struct Tally {
    instances: usize,
    checks: usize,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, message: impl FnOnce() -> String, doc: impl FnOnce() -> Document) -> Step {
        self.checks += 1;
        if ok {
            Ok(())
        } else {
            Err(Stop::Found(Counterexample {
                message: message(),
                document: doc(),
            }))
        }
    }
}

fn doc_of(spaces: &[(&str, &NaSpace)], maps: &[(&str, &str, &str, &UcMap)]) -> Document {
    let mut doc = Document::default();
    for (name, space) in spaces {
        // names are distinct literals at every call site
        doc.add_space(name, (*space).clone()).expect("distinct space names");
    }
    for (name, dom, cod, map) in maps {
        doc.add_map(name, dom, cod, (*map).clone()).expect("declared spaces");
    }
    doc
}

fn space_doc(space: &NaSpace) -> Document {
    doc_of(&[("X", space)], &[])
}

fn map_doc(map: &UcMap) -> Document {
    doc_of(&[("X", map.domain()), ("Y", map.codomain())], &[("u", "X", "Y", map)])
}

fn set_text(space: &NaSpace, set: &PointSet) -> String {
    let names: Vec<&str> = set.iter().map(|x| space.names()[x].as_str()).collect();
    format!("{{{}}}", names.join(","))
}

/// Exhaustive spaces up to `exhaustive_to`, then samples up to
/// `max_carrier`, all capped at `cap` points.
fn instances(budget: &InstanceBudget, t0_only: bool, cap: usize, tally: &mut Tally) -> Result<Vec<NaSpace>> {
    let mut out = Vec::new();
    let exhaustive = budget.exhaustive_to.min(EXHAUSTIVE_BOUND);
    for n in 1..=exhaustive.min(cap) {
        out.extend(all_spaces(n, t0_only)?);
    }
    for n in exhaustive + 1..=budget.max_carrier.min(cap) {
        out.extend(sample_spaces(n, budget).filter(|s| !t0_only || s.is_t0()));
    }
    if budget.max_carrier > cap {
        tally.notes.push(format!("sizes above {cap} skipped"));
    }
    Ok(out)
}

/// All spaces (or T0 spaces) of at most `n` points, exhaustively.
fn small_spaces(n: usize, t0_only: bool) -> Result<Vec<NaSpace>> {
    let mut out = Vec::new();
    for k in 1..=n.min(EXHAUSTIVE_BOUND) {
        out.extend(all_spaces(k, t0_only)?);
    }
    Ok(out)
}

fn uc_maps(domain: &NaSpace, codomain: &NaSpace) -> Result<Vec<UcMap>> {
    all_functions(domain, codomain, true)?
        .map(|t| UcMap::new(domain.clone(), codomain.clone(), t))
        .collect()
}

/// Largest carrier for the suites that pair up spaces exhaustively.
const PAIRWISE_BOUND: usize = 3;

fn pairwise_spaces(budget: &InstanceBudget, tally: &mut Tally) -> Result<Vec<NaSpace>> {
    if budget.max_carrier > PAIRWISE_BOUND {
        tally.notes.push(format!("sizes above {PAIRWISE_BOUND} skipped"));
    }
    small_spaces(budget.exhaustive_to.min(PAIRWISE_BOUND), true)
}

pub fn run_suite(suite: Suite, budget: &InstanceBudget) -> Result<SuiteReport> {
    let mut tally = Tally::default();
    let step = match suite {
        Suite::ClosureOracle => closure_oracle(budget, &mut tally),
        Suite::ClosureLaws => closure_laws(budget, &mut tally),
        Suite::Morphisms => morphisms(budget, &mut tally),
        Suite::Representation => representation(budget, &mut tally),
        Suite::Completion => completion(budget, &mut tally),
        Suite::Cogenerator => cogenerator(budget, &mut tally),
        Suite::Injectivity => injectivity(budget, &mut tally),
        Suite::Firmness => firmness(budget, &mut tally),
        Suite::Cauchy => cauchy(budget, &mut tally),
    };
    let failure = match step {
        Ok(()) => None,
        Err(Stop::Found(c)) => Some(c),
        Err(Stop::Error(e)) => return Err(e),
    };
    Ok(SuiteReport {
        suite,
        instances: tally.instances,
        checks: tally.checks,
        notes: tally.notes,
        failure,
    })
}

pub fn run(suites: &[Suite], budget: &InstanceBudget) -> Result<Vec<SuiteReport>> {
    suites.iter().map(|&s| run_suite(s, budget)).collect()
}

/// zeta-closure equals the regular closure computed from maps into a
/// discrete space.
fn closure_oracle(budget: &InstanceBudget, t: &mut Tally) -> Step {
    for space in instances(budget, false, 4, t)? {
        t.instances += 1;
        let oracle = RegularClosureOracle::new(&space)?;
        for m in PointSet::all_subsets(space.size()) {
            let zeta = closure::zeta_closure(&space, &m)?.closure;
            let reg = oracle.closure(&m);
            t.check(
                zeta == reg,
                || {
                    format!(
                        "zeta-closure of {} is {} but the regular closure is {}",
                        set_text(&space, &m),
                        set_text(&space, &zeta),
                        set_text(&space, &reg)
                    )
                },
                || space_doc(&space),
            )?;
        }
    }
    Ok(())
}

fn closures_by_mask(space: &NaSpace) -> Result<Vec<PointSet>> {
    PointSet::all_subsets(space.size())
        .map(|m| Ok(closure::zeta_closure(space, &m)?.closure))
        .collect()
}

fn mask_of(set: &PointSet) -> usize {
    set.iter().fold(0, |acc, x| acc | 1 << x)
}

/// Extensive, grounded, monotone, hereditary, and preserved by UC maps.
/// Idempotency is measured, not required.
fn closure_laws(budget: &InstanceBudget, t: &mut Tally) -> Step {
    let targets = small_spaces(budget.exhaustive_to.min(PAIRWISE_BOUND), false)?;
    let target_closures: Vec<Vec<PointSet>> = targets.iter().map(closures_by_mask).collect::<Result<_>>()?;
    let (mut pairs, mut idempotent) = (0usize, 0usize);
    for space in instances(budget, false, 4, t)? {
        t.instances += 1;
        let n = space.size();
        let cl = closures_by_mask(&space)?;
        for (mask, m) in PointSet::all_subsets(n).enumerate() {
            let c = &cl[mask];
            t.check(
                m.is_subset(c),
                || format!("{} is not inside its closure", set_text(&space, &m)),
                || space_doc(&space),
            )?;
            if m.is_empty() {
                t.check(
                    c.is_empty(),
                    || "the closure of the empty set is nonempty".into(),
                    || space_doc(&space),
                )?;
            }
            pairs += 1;
            if cl[mask_of(c)] == *c {
                idempotent += 1;
            }
            for (mask2, n2) in PointSet::all_subsets(n).enumerate() {
                if m.is_subset(&n2) {
                    t.check(
                        c.is_subset(&cl[mask2]),
                        || {
                            format!(
                                "closure is not monotone from {} to {}",
                                set_text(&space, &m),
                                set_text(&space, &n2)
                            )
                        },
                        || space_doc(&space),
                    )?;
                }
                if !n2.is_empty() && m.is_subset(&n2) {
                    // closure inside the subspace on n2 is the trace of the closure in X
                    let sub = space.subspace(&n2)?;
                    let index: Vec<usize> = n2.iter().collect();
                    let inner = PointSet::from_points(index.len(), (0..index.len()).filter(|&i| m.contains(index[i])));
                    let sub_closure = closure::zeta_closure(&sub, &inner)?.closure;
                    let expected =
                        PointSet::from_points(index.len(), (0..index.len()).filter(|&i| c.contains(index[i])));
                    t.check(
                        sub_closure == expected,
                        || {
                            format!(
                                "closure of {} in the subspace on {} is not the trace of its closure",
                                set_text(&space, &m),
                                set_text(&space, &n2)
                            )
                        },
                        || space_doc(&space),
                    )?;
                }
            }
        }
        for (y, ycl) in targets.iter().zip(&target_closures) {
            for u in uc_maps(&space, y)? {
                for (mask, m) in PointSet::all_subsets(n).enumerate() {
                    let image = PointSet::from_points(y.size(), m.iter().map(|x| u.apply(x)));
                    let pushed = PointSet::from_points(y.size(), cl[mask].iter().map(|x| u.apply(x)));
                    t.check(
                        pushed.is_subset(&ycl[mask_of(&image)]),
                        || {
                            format!(
                                "u maps the closure of {} outside the closure of its image",
                                set_text(&space, &m)
                            )
                        },
                        || map_doc(&u),
                    )?;
                }
            }
        }
    }
    t.notes.push(format!("idempotent on {idempotent} of {pairs} subsets"));
    Ok(())
}

/// Does every pair of UC maps `Y → Z` that agree on `f(X)` coincide?
fn epi_oracle(f: &UcMap, probes: &[Vec<UcMap>]) -> bool {
    let image = f.image();
    probes.iter().all(|maps| {
        let mut seen = HashSet::new();
        maps.iter().all(|g| {
            let restricted: Vec<usize> = image.iter().map(|y| g.apply(y)).collect();
            seen.insert(restricted)
        })
    })
}

/// Maps `Y → Z` used to test right cancellation: `Z` ranges over the small
/// T0 spaces and the discrete space on `|Y| + 2` points.
fn epi_probes(y: &NaSpace, small: &[NaSpace]) -> Result<Vec<Vec<UcMap>>> {
    let wide = NaSpace::discrete(Carrier::indexed(y.size() + 2));
    small
        .iter()
        .chain(std::iter::once(&wide))
        .map(|z| uc_maps(y, z))
        .collect()
}

fn mono_oracle(f: &UcMap, sources: &[Vec<UcMap>]) -> bool {
    sources.iter().all(|maps| {
        let mut seen = HashSet::new();
        maps.iter()
            .all(|g| seen.insert(g.table().iter().map(|&x| f.apply(x)).collect::<Vec<_>>()))
    })
}

/// Epimorphisms are zeta-dense maps, monomorphisms are injective, extremal
/// monomorphisms are zeta-closed embeddings, UC maps compose.
fn morphisms(budget: &InstanceBudget, t: &mut Tally) -> Step {
    let small = pairwise_spaces(budget, t)?;
    let probes: Vec<Vec<Vec<UcMap>>> = small.iter().map(|y| epi_probes(y, &small)).collect::<Result<_>>()?;
    // maps[i][j]: UC maps small[i] → small[j]
    let maps: Vec<Vec<Vec<UcMap>>> = small
        .iter()
        .map(|x| small.iter().map(|y| uc_maps(x, y)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let into: Vec<Vec<Vec<UcMap>>> = (0..small.len())
        .map(|x| (0..small.len()).map(|w| maps[w][x].clone()).collect())
        .collect();
    let mut epi_cache: HashMap<(usize, usize, Vec<usize>), bool> = HashMap::new();

    for (xi, x) in small.iter().enumerate() {
        t.instances += 1;
        let id = UcMap::identity(x.clone());
        t.check(
            is_uniformly_continuous(id.table(), x, x),
            || "identity is not UC".into(),
            || space_doc(x),
        )?;
        for (yi, _) in small.iter().enumerate() {
            for f in &maps[xi][yi] {
                let epi = f.is_epimorphism()?;
                t.check(
                    epi == epi_oracle(f, &probes[yi]),
                    || format!("zeta-density says epi = {epi}, right cancellation disagrees"),
                    || map_doc(f),
                )?;
                let mono = mono_oracle(f, &into[xi]);
                t.check(
                    mono == f.is_injective(),
                    || format!("injective = {}, left cancellation disagrees", f.is_injective()),
                    || map_doc(f),
                )?;

                // extremal: mono, and every factorization through an epi has
                // that epi an isomorphism
                let mut extremal = mono;
                if mono {
                    'search: for (wi, _) in small.iter().enumerate() {
                        for e in &maps[xi][wi] {
                            let e_epi = *epi_cache
                                .entry((xi, wi, e.table().to_vec()))
                                .or_insert_with(|| epi_oracle(e, &probes[wi]));
                            if !e_epi || e.is_isomorphism() {
                                continue;
                            }
                            if maps[wi][yi]
                                .iter()
                                .any(|m| e.table().iter().map(|&w| m.apply(w)).eq(f.table().iter().copied()))
                            {
                                extremal = false;
                                break 'search;
                            }
                        }
                    }
                }
                let claimed = f.is_extremal_mono()?;
                t.check(
                    claimed == extremal,
                    || format!("extremal mono = {claimed}, factorization search says {extremal}"),
                    || map_doc(f),
                )?;

                if f.is_surjective() && f.is_final()? {
                    t.check(epi, || "surjective final map is not epi".into(), || map_doc(f))?;
                    t.check(
                        f.is_isomorphism() || !claimed,
                        || "surjective final non-iso map is an extremal mono".into(),
                        || map_doc(f),
                    )?;
                }

                for (zi, _) in small.iter().enumerate() {
                    for g in &maps[yi][zi] {
                        let composed = f.then(g);
                        t.check(
                            composed.is_ok(),
                            || "composite of UC maps is not UC".into(),
                            || {
                                doc_of(
                                    &[("X", f.domain()), ("Y", f.codomain()), ("Z", g.codomain())],
                                    &[("f", "X", "Y", f), ("g", "Y", "Z", g)],
                                )
                            },
                        )?;
                    }
                }
            }
        }
    }
    Ok(())
}

/// Compact representations agree with their definition-level expansions.
fn representation(budget: &InstanceBudget, t: &mut Tally) -> Step {
    let targets = small_spaces(budget.exhaustive_to.min(PAIRWISE_BOUND), false)?;
    for space in instances(budget, false, 4, t)? {
        t.instances += 1;
        let fast = enumerate_choice_functions(&space)?;
        let slow = choice_functions_oracle(&space)?;
        t.check(
            fast == slow,
            || {
                format!(
                    "{} choice functions enumerated, oracle finds {}",
                    fast.len(),
                    slow.len()
                )
            },
            || space_doc(&space),
        )?;
        for y in &targets {
            for table in all_functions(&space, y, false)? {
                let quick = is_uniformly_continuous(&table, &space, y);
                let full = is_uniformly_continuous_full(&table, &space, y)?;
                t.check(
                    quick == full,
                    || format!("generator test says UC = {quick} for {table:?}, full stack says {full}"),
                    || doc_of(&[("X", &space), ("Y", y)], &[]),
                )?;
            }
        }
        if space.is_t0() {
            let c = complete(&space)?;
            let hats = space
                .stack_members()?
                .members
                .iter()
                .map(|q| {
                    c.hat_of(q)
                        .ok_or_else(|| Error::Validation("member outside stack".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            let full = NaSpace::new(c.hat_space.carrier().clone(), hats)?;
            t.check(
                full.same_structure(&c.hat_space),
                || "hats of generators and hats of all members generate different stacks".into(),
                || space_doc(&space),
            )?;
        }
    }
    Ok(())
}

/// `X̂` is a T0 complete space with `j` a dense embedding; complete spaces
/// are fixed; maps into complete spaces extend uniquely.
fn completion(budget: &InstanceBudget, t: &mut Tally) -> Step {
    let targets: Vec<NaSpace> = small_spaces(budget.exhaustive_to.min(PAIRWISE_BOUND), true)?
        .into_iter()
        .filter(|y| is_complete(y).is_ok_and(|c| c.complete))
        .collect();
    let mut extension_skips = 0usize;
    for space in instances(budget, true, 4, t)? {
        t.instances += 1;
        let n = space.size();
        let c = complete(&space)?;
        let doc = || space_doc(&space);
        t.check(
            is_complete(&c.hat_space)?.complete,
            || "completion is not complete".into(),
            doc,
        )?;
        t.check(c.j.is_embedding(), || "j is not an embedding".into(), doc)?;
        t.check(
            closure::is_zeta_dense(&c.hat_space, &c.j.image())?,
            || "j(X) is not zeta-dense".into(),
            doc,
        )?;
        if is_complete(&space)?.complete {
            t.check(c.new_points.is_empty(), || "complete space gained points".into(), doc)?;
        }
        t.check(
            complete(&c.hat_space)?.new_points.is_empty(),
            || "completing twice adds points".into(),
            doc,
        )?;
        for (i, f) in c.points.iter().enumerate() {
            let expected = (i < n).then_some(i);
            t.check(
                f.limit(&space) == expected,
                || format!("point {} has limit {:?}", c.hat_space.names()[i], f.limit(&space)),
                doc,
            )?;
        }
        for y in &targets {
            let free = c.new_points.len() as u32;
            if (y.size() as u64).checked_pow(free).is_none_or(|c| c > 4096) {
                extension_skips += 1;
                continue;
            }
            for u in uc_maps(&space, y)? {
                let hat_u = extend(&c, &u)?;
                t.check(
                    (0..n).all(|x| hat_u.apply(x) == u.apply(x)),
                    || "extension does not restrict to u".into(),
                    || map_doc(&u),
                )?;
                let count = closure::all_tables(c.new_points.len(), y.size())
                    .filter(|vals| {
                        let table: Vec<usize> = u.table().iter().copied().chain(vals.iter().copied()).collect();
                        is_uniformly_continuous(&table, &c.hat_space, y)
                    })
                    .count();
                t.check(
                    count == 1,
                    || format!("{count} UC extensions of u to the completion"),
                    || map_doc(&u),
                )?;
            }
        }
    }
    if extension_skips > 0 {
        t.notes
            .push(format!("extension uniqueness skipped {extension_skips} pairs"));
    }
    Ok(())
}

/// Order-compatible tuples are exactly the zeta-closure of the diagonal
/// image in the product of discrete quotients.
fn cogenerator(budget: &InstanceBudget, t: &mut Tally) -> Step {
    let mut too_big = 0usize;
    for space in instances(budget, true, 4, t)? {
        let oc = match order_compatible_points(&space) {
            Ok(oc) => oc,
            Err(Error::BoundExceeded { .. }) => {
                too_big += 1;
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        t.instances += 1;
        let product = &oc.embedding.product.space;
        let doc = || space_doc(&space);
        t.check(
            oc.embedding.map.is_embedding(),
            || "diagonal map is not an embedding".into(),
            doc,
        )?;
        let zeta = closure::zeta_closure(product, &oc.embedding.map.image())?.closure;
        t.check(
            zeta == oc.points,
            || {
                format!(
                    "closure of the image has {} points, {} tuples are order-compatible",
                    zeta.len(),
                    oc.points.len()
                )
            },
            doc,
        )?;
        let hat = complete(&space)?.hat_space.size();
        t.check(
            oc.points.len() == hat,
            || {
                format!(
                    "{} order-compatible tuples but {hat} completion points",
                    oc.points.len()
                )
            },
            doc,
        )?;
    }
    if too_big > 0 {
        t.notes
            .push(format!("{too_big} spaces with oversized products skipped"));
    }
    Ok(())
}

/// A T0 space is complete iff it is injective for zeta-dense embeddings.
fn injectivity(budget: &InstanceBudget, t: &mut Tally) -> Step {
    let bound = budget.exhaustive_to.min(PAIRWISE_BOUND);
    let spaces = pairwise_spaces(budget, t)?;
    let catalog = dense_embeddings(bound)?;
    t.notes.push(format!(
        "{} dense embeddings, domains up to {bound} points",
        catalog.len()
    ));
    for space in spaces {
        t.instances += 1;
        let report = is_injective_along(&space, &catalog)?;
        let complete = is_complete(&space)?.complete;
        t.check(
            report.injective == complete,
            || format!("complete = {complete} but injective = {}", report.injective),
            || space_doc(&space),
        )?;
        if let Some((v, f)) = &report.witness {
            t.check(
                v.is_embedding() && closure::is_zeta_dense(v.codomain(), &v.image())? && find_extension(v, f).is_none(),
                || "injectivity witness does not certify failure".into(),
                || {
                    doc_of(
                        &[("A", v.domain()), ("B", v.codomain()), ("X", &space)],
                        &[("v", "A", "B", v), ("f", "A", "X", f)],
                    )
                },
            )?;
        }
    }
    Ok(())
}

/// `v̂` is an isomorphism iff `v` is a zeta-dense embedding.
fn firmness(budget: &InstanceBudget, t: &mut Tally) -> Step {
    let small = pairwise_spaces(budget, t)?;
    for x in &small {
        t.instances += 1;
        for y in &small {
            for v in uc_maps(x, y)? {
                let dense_embedding = v.is_embedding() && closure::is_zeta_dense(y, &v.image())?;
                let iso = induced_completion_map(&v)?.map.is_isomorphism();
                t.check(
                    iso == dense_embedding,
                    || format!("dense embedding = {dense_embedding} but induced map iso = {iso}"),
                    || map_doc(&v),
                )?;
            }
        }
    }
    Ok(())
}

/// Choice functions and minimal Cauchy filters correspond on intersection-
/// closed T0 spaces; intersection-closed spaces never have divergent choice
/// functions.
fn cauchy(budget: &InstanceBudget, t: &mut Tally) -> Step {
    let mut closed_non_t0 = 0usize;
    for space in instances(budget, false, 4, t)? {
        if !is_intersection_closed(&space) {
            continue;
        }
        t.instances += 1;
        let doc = || space_doc(&space);
        let fns = enumerate_choice_functions(&space)?;
        for f in &fns {
            t.check(
                !f.limit_set(&space).is_empty(),
                || format!("choice function {} has no limit", f.describe(&space)),
                doc,
            )?;
        }
        if !space.is_t0() {
            closed_non_t0 += 1;
            continue;
        }
        let filters = minimal_cauchy_filters(&space)?;
        let generators: Vec<PointSet> = filters.iter().map(|f| f.generator.clone()).collect();
        let oracle = minimal_cauchy_filters_oracle(&space)?;
        t.check(
            generators == oracle,
            || {
                format!(
                    "{} filters from choice functions, {} by definition",
                    generators.len(),
                    oracle.len()
                )
            },
            doc,
        )?;
        let members = space.stack_members()?.members;
        for f in &fns {
            let filter = filter_of_choice(&space, f)?;
            t.check(
                choice_of_filter(&space, &filter)? == *f,
                || "G(F(f)) differs from f".into(),
                doc,
            )?;
            for x in 0..space.size() {
                let converges = filter_converges(&space, &filter, x)?;
                t.check(
                    converges == (f.limit(&space) == Some(x)),
                    || format!("filter convergence to {} disagrees with the limit", space.names()[x]),
                    doc,
                )?;
            }
            for p in &members {
                for q in &members {
                    let (zp, zq) = (f.value_at(&space, p), f.value_at(&space, q));
                    let zpq = f.value_at(&space, &p.meet_unchecked(q));
                    let ok = match (zp, zq, zpq) {
                        (Some(a), Some(b), Some(c)) => a.intersection(&b) == c,
                        _ => false,
                    };
                    t.check(ok, || "choice at a meet is not the intersection".into(), doc)?;
                }
            }
        }
        for filter in &filters {
            let f = choice_of_filter(&space, filter)?;
            t.check(
                filter_of_choice(&space, &f)? == *filter,
                || "F(G(F)) differs from F".into(),
                doc,
            )?;
        }
    }
    t.notes
        .push(format!("{closed_non_t0} non-T0 intersection-closed spaces"));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
        assert_eq!(Suite::from_name("nope"), None);
    }

    #[test]
    fn counterexamples_reparse() {
        let tri = crate::fixtures::tri();
        let mut t = Tally::default();
        let Err(Stop::Found(c)) = t.check(false, || "forced".into(), || space_doc(&tri)) else {
            panic!("check did not stop");
        };
        let doc = crate::format::parse(&c.to_nas()).unwrap();
        assert_eq!(doc.space("X"), Some(&tri));
        let u = UcMap::new(tri.clone(), crate::fixtures::dsc3(), vec![0, 1, 1]).unwrap();
        let doc = crate::format::parse(&emit(&map_doc(&u))).unwrap();
        assert_eq!(doc.map("u").unwrap().map, u);
    }

    #[test]
    fn small_budget_passes() {
        let budget = InstanceBudget::new(3, 2, 5, 7).unwrap();
        for report in run(&Suite::ALL, &budget).unwrap() {
            assert!(report.passed(), "{}", report.summary());
            assert!(report.checks > 0, "{}", report.summary());
        }
    }
}
