//! Fixed-universe bitsets of point indices.

use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

/// A subset of `0..universe`.
///
/// Ordering is lexicographic on the sorted element lists, so `{0,2} < {1}`
/// and `{0} < {0,1}`. Sets over different universes compare by universe
/// size first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    universe: usize,
    words: Vec<u64>,
}

impl PointSet {
    pub fn empty(universe: usize) -> Self {
        PointSet {
            universe,
            words: vec![0; universe.div_ceil(WORD)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for x in 0..universe {
            s.insert(x);
        }
        s
    }

    pub fn singleton(universe: usize, x: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(x);
        s
    }

    /// Builds a set from indices; panics if any index is outside the universe.
    pub fn from_points<I: IntoIterator<Item = usize>>(universe: usize, points: I) -> Self {
        let mut s = Self::empty(universe);
        for x in points {
            s.insert(x);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, x: usize) {
        assert!(x < self.universe, "point {x} outside universe {}", self.universe);
        self.words[x / WORD] |= 1 << (x % WORD);
    }

    pub fn remove(&mut self, x: usize) {
        if x < self.universe {
            self.words[x / WORD] &= !(1 << (x % WORD));
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.universe && self.words[x / WORD] & (1 << (x % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word: 0,
            bits: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        PointSet {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        PointSet {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        PointSet {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
        }
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.universe == other.universe && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// All subsets of `0..universe`, ordered by their bitmask value.
    /// Only meant for small universes.
    pub fn all_subsets(universe: usize) -> impl Iterator<Item = PointSet> {
        assert!(universe < 32, "subset enumeration over {universe} points");
        (0u64..(1u64 << universe))
            .map(move |mask| PointSet::from_points(universe, (0..universe).filter(|i| mask >> i & 1 == 1)))
    }
}

impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe
            .cmp(&other.universe)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

pub struct Iter<'a> {
    set: &'a PointSet,
    word: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let tz = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * WORD + tz);
            }
            self.word += 1;
            if self.word >= self.set.words.len() {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = PointSet::from_points(70, [0, 3, 65]);
        let b = PointSet::from_points(70, [3, 65, 69]);
        assert_eq!(a.len(), 3);
        assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), vec![3, 65]);
        assert_eq!(a.union(&b).len(), 4);
        assert_eq!(a.difference(&b).iter().collect::<Vec<_>>(), vec![0]);
        assert!(a.intersects(&b));
        assert!(!a.is_subset(&b));
        assert!(a.intersection(&b).is_subset(&a));
    }

    #[test]
    fn lexicographic_order() {
        let s = |v: &[usize]| PointSet::from_points(4, v.iter().copied());
        assert!(s(&[0, 2]) < s(&[1]));
        assert!(s(&[0]) < s(&[0, 1]));
        assert!(s(&[]) < s(&[0]));
    }

    #[test]
    fn subsets_count() {
        assert_eq!(PointSet::all_subsets(3).count(), 8);
        assert!(PointSet::all_subsets(0).next().unwrap().is_empty());
    }
}
