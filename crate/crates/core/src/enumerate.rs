//! Exhaustive and seeded generation of small instances.
//!
//! # Sampling generator
//!
//! [`sample_spaces`] draws from SplitMix64, pinned here so that any
//! implementation can reproduce a run from its seed:
//!
//! ```text
//! state <- state + 0x9E3779B97F4A7C15          (wrapping)
//! z <- state
//! z <- (z xor (z >> 30)) * 0xBF58476D1CE4E5B9  (wrapping)
//! z <- (z xor (z >> 27)) * 0x94D049BB133111EB  (wrapping)
//! return z xor (z >> 31)
//! ```
//!
//! Each sampled space on `n` points takes `k = 1 + next() % 3` candidate
//! generators; candidate `i` labels point `x` (in order) with
//! `next() % n`, and the labelling is canonicalized. The space is the
//! up-closure of the candidates.

use crate::closure::all_tables;
use crate::error::{Error, Result};
use crate::morphism::is_uniformly_continuous;
use crate::partition::{all_partitions, Carrier, Partition};
use crate::space::NaSpace;

/// Largest carrier [`all_spaces`] will enumerate.
pub const EXHAUSTIVE_BOUND: usize = 4;

/// Largest function space [`all_functions`] will enumerate.
pub const MAX_FUNCTIONS: u64 = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InstanceBudget {
    pub max_carrier: usize,
    pub exhaustive_to: usize,
    pub sample_count: usize,
    pub seed: u64,
}

impl InstanceBudget {
    pub fn new(max_carrier: usize, exhaustive_to: usize, sample_count: usize, seed: u64) -> Result<Self> {
        if exhaustive_to > max_carrier {
            return Err(Error::Validation(format!(
                "exhaustive_to ({exhaustive_to}) exceeds max_carrier ({max_carrier})"
            )));
        }
        Ok(InstanceBudget {
            max_carrier,
            exhaustive_to,
            sample_count,
            seed,
        })
    }
}

impl Default for InstanceBudget {
    fn default() -> Self {
        InstanceBudget {
            max_carrier: 4,
            exhaustive_to: 3,
            sample_count: 200,
            seed: 42,
        }
    }
}

/// One space per stack on `0..n`, i.e. per antichain of non-top partitions,
/// ordered by the bitmask of chosen partitions (in partition order).
pub fn all_spaces(n: usize, t0_only: bool) -> Result<impl Iterator<Item = NaSpace>> {
    if n == 0 || n > EXHAUSTIVE_BOUND {
        return Err(Error::BoundExceeded {
            what: "space enumeration",
            size: n,
            bound: EXHAUSTIVE_BOUND,
        });
    }
    let parts: Vec<Partition> = all_partitions(n)?.into_iter().filter(|p| !p.is_one_block()).collect();
    let comparable: Vec<u32> = parts
        .iter()
        .map(|p| {
            parts.iter().enumerate().fold(0u32, |acc, (j, q)| {
                if p != q && (p.refines_unchecked(q) || q.refines_unchecked(p)) {
                    acc | 1 << j
                } else {
                    acc
                }
            })
        })
        .collect();
    let carrier = Carrier::indexed(n);
    Ok((0u32..1 << parts.len()).filter_map(move |mask| {
        let chosen = (0..parts.len()).filter(|i| mask >> i & 1 == 1);
        if chosen.clone().any(|i| comparable[i] & mask != 0) {
            return None;
        }
        let gens = chosen.map(|i| parts[i].clone()).collect();
        let space = NaSpace::new(carrier.clone(), gens).expect("partitions on carrier");
        (!t0_only || space.is_t0()).then_some(space)
    }))
}

/// All tables `X → Y` in odometer order, optionally only the uniformly
/// continuous ones.
pub fn all_functions<'a>(
    domain: &'a NaSpace,
    codomain: &'a NaSpace,
    uc_only: bool,
) -> Result<impl Iterator<Item = Vec<usize>> + 'a> {
    let count = (codomain.size() as u64).checked_pow(domain.size() as u32);
    if count.is_none_or(|c| c > MAX_FUNCTIONS) {
        return Err(Error::BoundExceeded {
            what: "function enumeration",
            size: count.map_or(usize::MAX, |c| c as usize),
            bound: MAX_FUNCTIONS as usize,
        });
    }
    Ok(all_tables(domain.size(), codomain.size())
        .filter(move |t| !uc_only || is_uniformly_continuous(t, domain, codomain)))
}

/// SplitMix64.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

/// `budget.sample_count` pseudo-random spaces on `n` points, reproducible
/// from `budget.seed`.
pub fn sample_spaces(n: usize, budget: &InstanceBudget) -> impl Iterator<Item = NaSpace> {
    assert!(n >= 1, "sampling spaces on an empty carrier");
    let mut rng = SplitMix64::new(budget.seed);
    let carrier = Carrier::indexed(n);
    (0..budget.sample_count).map(move |_| {
        let k = 1 + rng.below(3);
        let parts = (0..k)
            .map(|_| Partition::from_labels((0..n).map(|_| rng.below(n))))
            .collect();
        NaSpace::new(carrier.clone(), parts).expect("partitions on carrier")
    })
}
