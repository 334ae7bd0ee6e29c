//! Small sets of numbered points, stored as a 64-bit mask.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A set of point indices in `1..=63`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet(u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn from_bits(bits: u64) -> Self {
        PointSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// The open interval `(lo, hi)` of integers.
    pub fn open(lo: usize, hi: usize) -> Self {
        if hi <= lo + 1 {
            return Self::EMPTY;
        }
        let upper = if hi >= 64 { u64::MAX } else { (1u64 << hi) - 1 };
        let lower = (1u64 << (lo + 1)) - 1;
        PointSet(upper & !lower)
    }

    pub fn singleton(i: usize) -> Self {
        PointSet(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i > 0 && i < 64);
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    pub fn with(mut self, i: usize) -> Self {
        self.insert(i);
        self
    }

    pub fn union(self, other: Self) -> Self {
        PointSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        PointSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        PointSet(self.0 & !other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Image under `i -> total + 1 - i`.
    pub fn mirror(self, total: usize) -> Self {
        self.iter().map(|i| total + 1 - i).collect()
    }

    /// Every subset of `self`, in increasing order of the bit mask.
    pub fn subsets(self) -> impl Iterator<Item = PointSet> {
        let full = self.0;
        let mut cur: Option<u64> = Some(0);
        std::iter::from_fn(move || {
            let s = cur?;
            cur = if s == full { None } else { Some(((s | !full).wrapping_add(1)) & full) };
            Some(PointSet(s))
        })
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = PointSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for PointSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for PointSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if let Some(bad) = v.iter().find(|&&i| i == 0 || i > 63) {
            return Err(serde::de::Error::custom(format!("point {bad} out of range")));
        }
        Ok(v.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn open_interval() {
        assert_eq!(PointSet::open(1, 4).to_vec(), vec![2, 3]);
        assert!(PointSet::open(2, 3).is_empty());
        assert!(PointSet::open(3, 3).is_empty());
        assert_eq!(PointSet::open(0, 3).to_vec(), vec![1, 2]);
    }

    #[test]
    fn subsets_enumerates_all() {
        let s: PointSet = [2, 5, 7].into_iter().collect();
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(PointSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn mirror_is_involution() {
        let s: PointSet = [1, 3, 4].into_iter().collect();
        assert_eq!(s.mirror(6).to_vec(), vec![3, 4, 6]);
        assert_eq!(s.mirror(6).mirror(6), s);
    }
}
