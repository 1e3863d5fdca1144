//! Partitions of finite carriers and their refinement lattice.
//!
//! A partition is stored as a restricted growth string: `labels[x]` is the
//! index of the block containing point `x`, and blocks are numbered in order
//! of their minimum element. That makes the representation canonical, so
//! derived equality, hashing and ordering are all structural.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::pointset::PointSet;

/// Default ceiling on the size of sets whose partitions we enumerate.
/// Bell(8) = 4140.
pub const DEFAULT_ENUMERATION_BOUND: usize = 8;

/// Partition-enumeration bound, overridable through `NAC_MAX_BELL`.
pub fn enumeration_bound() -> usize {
    static BOUND: OnceLock<usize> = OnceLock::new();
    *BOUND.get_or_init(|| {
        std::env::var("NAC_MAX_BELL")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_ENUMERATION_BOUND)
    })
}

/// Point labels of a finite set. Points are addressed by index everywhere
/// else; labels only matter at the I/O boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Carrier {
    names: Vec<String>,
}

impl Carrier {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::Validation("carrier must have at least one point".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for name in &names {
            validate_label(name)?;
            if !seen.insert(name.as_str()) {
                return Err(Error::Validation(format!("duplicate point label `{name}`")));
            }
        }
        Ok(Carrier { names })
    }

    /// Carrier labelled `0`, `1`, ..., `n-1`.
    pub fn indexed(n: usize) -> Self {
        assert!(n >= 1, "carrier must have at least one point");
        Carrier {
            names: (0..n).map(|i| i.to_string()).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

fn validate_label(name: &str) -> Result<()> {
    let bad = name.is_empty() || name == "->" || name.chars().any(|c| c.is_whitespace() || matches!(c, '|' | '#'));
    if bad {
        return Err(Error::Validation(format!("invalid point label `{name}`")));
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    labels: Vec<u32>,
    blocks: u32,
}

impl Partition {
    /// Canonicalizes an arbitrary block labelling.
    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Self {
        let mut remap: HashMap<usize, u32> = HashMap::new();
        let mut out = Vec::new();
        for l in labels {
            let next = remap.len() as u32;
            out.push(*remap.entry(l).or_insert(next));
        }
        Partition {
            blocks: remap.len() as u32,
            labels: out,
        }
    }

    /// Builds a partition from explicit blocks, checking that they are
    /// nonempty, disjoint and cover `0..n`.
    pub fn from_blocks<B: AsRef<[usize]>>(n: usize, blocks: &[B]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            let block = block.as_ref();
            if block.is_empty() {
                return Err(Error::Validation("empty block".into()));
            }
            for &x in block {
                if x >= n {
                    return Err(Error::Validation(format!("unknown point {x}")));
                }
                if labels[x] != usize::MAX {
                    return Err(Error::Validation(format!("point {x} appears in two blocks")));
                }
                labels[x] = b;
            }
        }
        if let Some(x) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::Validation(format!("point {x} is in no block")));
        }
        Ok(Self::from_labels(labels))
    }

    /// Every point in its own block (the diagonal relation).
    pub fn discrete(n: usize) -> Self {
        Partition {
            labels: (0..n as u32).collect(),
            blocks: n as u32,
        }
    }

    /// A single block (the full relation).
    pub fn one_block(n: usize) -> Self {
        Partition {
            labels: vec![0; n],
            blocks: u32::from(n > 0),
        }
    }

    /// Number of points of the underlying carrier.
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks as usize
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Index of the block containing `x`. Panics if `x` is out of range.
    pub fn label(&self, x: usize) -> usize {
        self.labels[x] as usize
    }

    pub fn same_block(&self, x: usize, y: usize) -> bool {
        self.labels[x] == self.labels[y]
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks as usize == self.labels.len()
    }

    pub fn is_one_block(&self) -> bool {
        self.blocks <= 1
    }

    pub fn block_of(&self, x: usize) -> Result<PointSet> {
        if x >= self.size() {
            return Err(Error::Validation(format!(
                "point {x} is not in a carrier of {} points",
                self.size()
            )));
        }
        Ok(self.block(self.label(x)))
    }

    /// The block with canonical index `b`.
    pub fn block(&self, b: usize) -> PointSet {
        PointSet::from_points(self.size(), (0..self.size()).filter(|&x| self.labels[x] as usize == b))
    }

    pub fn blocks(&self) -> Vec<PointSet> {
        let mut out = vec![PointSet::empty(self.size()); self.num_blocks()];
        for (x, &l) in self.labels.iter().enumerate() {
            out[l as usize].insert(x);
        }
        out
    }

    /// Minimum point of each block, in block order.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = Vec::with_capacity(self.num_blocks());
        for (x, &l) in self.labels.iter().enumerate() {
            if l as usize == reps.len() {
                reps.push(x);
            }
        }
        reps
    }

    fn check_same_carrier(&self, other: &Self) -> Result<()> {
        if self.size() != other.size() {
            return Err(Error::CarrierMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(())
    }

    /// `self ≺ other`: every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Self) -> Result<bool> {
        self.check_same_carrier(other)?;
        Ok(self.refines_unchecked(other))
    }

    pub(crate) fn refines_unchecked(&self, other: &Self) -> bool {
        if self.blocks < other.blocks {
            return false;
        }
        let mut image = vec![u32::MAX; self.num_blocks()];
        for (p, q) in self.labels.iter().zip(&other.labels) {
            let slot = &mut image[*p as usize];
            if *slot == u32::MAX {
                *slot = *q;
            } else if *slot != *q {
                return false;
            }
        }
        true
    }

    /// Greatest lower bound: nonempty pairwise intersections of blocks.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check_same_carrier(other)?;
        Ok(self.meet_unchecked(other))
    }

    pub(crate) fn meet_unchecked(&self, other: &Self) -> Self {
        let width = other.num_blocks().max(1);
        Self::from_labels(
            self.labels
                .iter()
                .zip(&other.labels)
                .map(|(&p, &q)| p as usize * width + q as usize),
        )
    }

    /// Least upper bound: connected components of the union of both relations.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_same_carrier(other)?;
        Ok(self.join_unchecked(other))
    }

    pub(crate) fn join_unchecked(&self, other: &Self) -> Self {
        let n = self.size();
        let mut dsu = Dsu::new(n);
        for part in [self, other] {
            let reps = part.representatives();
            for x in 0..n {
                dsu.union(x, reps[part.label(x)]);
            }
        }
        Self::from_labels((0..n).map(|x| dsu.find(x)))
    }

    /// The trace of this partition on `subset`, as a partition of
    /// `0..subset.len()` indexed in ascending point order.
    pub fn restrict(&self, subset: &PointSet) -> Self {
        Self::from_labels(subset.iter().map(|x| self.label(x)))
    }

    /// Partition of a domain whose blocks are the nonempty fibres of
    /// `x ↦ block of table[x]`.
    pub fn pullback(&self, table: &[usize]) -> Self {
        Self::from_labels(table.iter().map(|&y| self.label(y)))
    }

    /// Every partition `Q` with `self ≺ Q`, in canonical order.
    pub fn coarsenings(&self) -> Result<Vec<Self>> {
        let mut out: Vec<Self> = all_partitions(self.num_blocks())?
            .into_iter()
            .map(|outer| Self::from_labels(self.labels.iter().map(|&l| outer.label(l as usize))))
            .collect();
        out.sort();
        Ok(out)
    }

    /// Renders the partition with the given point names, e.g. `0 1 | 2`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplayWith { part: self, names }
    }
}

struct DisplayWith<'a> {
    part: &'a Partition,
    names: &'a [String],
}

impl fmt::Display for DisplayWith<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (b, block) in self.part.blocks().iter().enumerate() {
            if b > 0 {
                f.write_str(" | ")?;
            }
            for (i, x) in block.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                f.write_str(&self.names[x])?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (b, block) in self.blocks().iter().enumerate() {
            if b > 0 {
                f.write_str("|")?;
            }
            for x in block {
                write!(f, "{x}")?;
            }
        }
        f.write_str("}")
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// All set partitions of `0..n` in restricted-growth-string order.
pub fn all_partitions(n: usize) -> Result<Vec<Partition>> {
    let bound = enumeration_bound();
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "partition enumeration",
            size: n,
            bound,
        });
    }
    let mut out = Vec::new();
    let mut rgs = vec![0u32; n];
    // `max` is the number of blocks opened so far; label `max` opens a new one
    fn rec(i: usize, max: u32, rgs: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == rgs.len() {
            out.push(Partition {
                labels: rgs.clone(),
                blocks: max,
            });
            return;
        }
        for l in 0..=max {
            rgs[i] = l;
            rec(i + 1, max.max(l + 1), rgs, out);
        }
    }
    if n == 0 {
        out.push(Partition::one_block(0));
    } else {
        rec(1, 1, &mut rgs, &mut out);
    }
    Ok(out)
}
