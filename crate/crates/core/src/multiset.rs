//! Finite multisets with additive union and containment-checked difference.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::region::HookPair;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("difference is undefined: {missing} is not contained in the minuend")]
pub struct NotContained {
    pub missing: String,
}

/// Multiset over an ordered element type. Zero counts are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multiset<T: Ord> {
    counts: BTreeMap<T, usize>,
}

/// Multiset of leg lengths.
pub type LegMultiset = Multiset<usize>;
/// Multiset of `(arm, leg)` pairs.
pub type HookPairMultiset = Multiset<HookPair>;

impl<T: Ord> Default for Multiset<T> {
    fn default() -> Self {
        Multiset {
            counts: BTreeMap::new(),
        }
    }
}

impl<T: Ord + Clone> Multiset<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, item: T) {
        self.insert_many(item, 1);
    }

    pub fn insert_many(&mut self, item: T, count: usize) {
        if count > 0 {
            *self.counts.entry(item).or_insert(0) += count;
        }
    }

    pub fn count(&self, item: &T) -> usize {
        self.counts.get(item).copied().unwrap_or(0)
    }

    /// Total multiplicity.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Distinct elements with their multiplicities, ascending.
    pub fn iter(&self) -> impl Iterator<Item = (&T, usize)> {
        self.counts.iter().map(|(k, &v)| (k, v))
    }

    /// Additive union `self ⊎ other`.
    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (item, count) in other.iter() {
            out.insert_many(item.clone(), count);
        }
        out
    }

    pub fn contains_all(&self, other: &Self) -> bool {
        other.iter().all(|(item, count)| self.count(item) >= count)
    }

    /// `self ∖ other`; fails unless `other ⊆ self`.
    pub fn difference(&self, other: &Self) -> Result<Self, NotContained>
    where
        T: fmt::Debug,
    {
        let mut out = self.clone();
        for (item, count) in other.iter() {
            match out.counts.get_mut(item) {
                Some(have) if *have >= count => {
                    *have -= count;
                    if *have == 0 {
                        out.counts.remove(item);
                    }
                }
                _ => {
                    return Err(NotContained {
                        missing: format!("{item:?} x{count}"),
                    })
                }
            }
        }
        Ok(out)
    }

    /// Elements by which `self` exceeds `other` (truncated difference).
    pub fn excess_over(&self, other: &Self) -> Self {
        let mut out = Self::new();
        for (item, count) in self.iter() {
            out.insert_many(item.clone(), count.saturating_sub(other.count(item)));
        }
        out
    }
}

impl LegMultiset {
    /// `[[N]] = {0, 1, …, N−1}`.
    pub fn interval(n: usize) -> Self {
        (0..n).collect()
    }
}

impl<T: Ord + Clone> FromIterator<T> for Multiset<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut out = Self::new();
        for item in iter {
            out.insert(item);
        }
        out
    }
}

impl<T: Ord + fmt::Debug> fmt::Debug for Multiset<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.counts.iter()).finish()
    }
}

/// How one distinct element is flattened into a serialized row.
pub trait MultisetRow {
    fn row(&self, count: usize) -> Vec<usize>;
}

impl MultisetRow for usize {
    fn row(&self, count: usize) -> Vec<usize> {
        vec![*self, count]
    }
}

impl MultisetRow for HookPair {
    fn row(&self, count: usize) -> Vec<usize> {
        vec![self.arm, self.leg, count]
    }
}

/// Serialized as sorted `[value, count]` or `[arm, leg, count]` rows.
impl<T: Ord + MultisetRow> Serialize for Multiset<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.counts.len()))?;
        for (item, &count) in &self.counts {
            seq.serialize_element(&item.row(count))?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intervals() {
        assert_eq!(LegMultiset::interval(3), [0, 1, 2].into_iter().collect());
        assert!(LegMultiset::interval(0).is_empty());
        assert_eq!(LegMultiset::interval(1).total(), 1);
    }

    #[test]
    fn union_and_difference() {
        let a: LegMultiset = [0, 1, 1, 2].into_iter().collect();
        let b: LegMultiset = [1, 3].into_iter().collect();
        let u = a.union(&b);
        assert_eq!(u.total(), 6);
        assert_eq!(u.count(&1), 3);
        assert_eq!(u.difference(&b).unwrap(), a);
        assert!(a.difference(&b).is_err());
        assert_eq!(a.excess_over(&b), [0, 1, 2].into_iter().collect());
        assert!(!a.difference(&a).unwrap().counts.values().any(|&c| c == 0));
    }

    #[test]
    fn serializes_sorted_rows() {
        let legs: LegMultiset = [2, 0, 2].into_iter().collect();
        assert_eq!(serde_json::to_string(&legs).unwrap(), "[[0,1],[2,2]]");
        let pairs: HookPairMultiset = [HookPair::new(1, 0), HookPair::new(0, 0)]
            .into_iter()
            .collect();
        assert_eq!(serde_json::to_string(&pairs).unwrap(), "[[0,0,1],[1,0,1]]");
    }
}
