use std::borrow::Borrow;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Dense item identifier assigned by [`crate::ItemDictionary`].
pub type ItemId = u32;

/// A nonempty, strictly ascending sequence of item identifiers.
///
/// Ordering is lexicographic over the identifiers, which for itemsets of
/// equal length is the order both miners rely on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Itemset(Vec<ItemId>);

/// Sorts and deduplicates `raw` into an [`Itemset`].
pub fn canonicalize(raw: &[ItemId]) -> Result<Itemset> {
    Itemset::new(raw.to_vec())
}

impl Itemset {
    pub fn new(mut items: Vec<ItemId>) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::EmptyItemset);
        }
        items.sort_unstable();
        items.dedup();
        Ok(Itemset(items))
    }

    /// Wraps `items` without sorting. Callers guarantee canonical order.
    pub(crate) fn from_sorted(items: Vec<ItemId>) -> Self {
        debug_assert!(!items.is_empty());
        debug_assert!(items.windows(2).all(|w| w[0] < w[1]));
        Itemset(items)
    }

    pub fn items(&self) -> &[ItemId] {
        &self.0
    }

    pub fn into_items(self) -> Vec<ItemId> {
        self.0
    }

    /// Everything but the last item.
    pub fn prefix(&self) -> &[ItemId] {
        &self.0[..self.0.len() - 1]
    }

    pub fn last_item(&self) -> ItemId {
        self.0[self.0.len() - 1]
    }

    /// True when every item of `self` occurs in the sorted slice `haystack`.
    pub fn is_subset_of(&self, haystack: &[ItemId]) -> bool {
        contains_sorted(haystack, &self.0)
    }
}

/// Two-pointer subset test over strictly ascending slices. Gives up as soon
/// as fewer haystack items remain than needle items.
pub(crate) fn contains_sorted(haystack: &[ItemId], needle: &[ItemId]) -> bool {
    let (n, m) = (haystack.len(), needle.len());
    let mut at = 0;
    for (j, &wanted) in needle.iter().enumerate() {
        loop {
            if n - at < m - j {
                return false;
            }
            let item = haystack[at];
            at += 1;
            if item == wanted {
                break;
            }
            if item > wanted {
                return false;
            }
        }
    }
    true
}

impl Deref for Itemset {
    type Target = [ItemId];

    fn deref(&self) -> &[ItemId] {
        &self.0
    }
}

impl Borrow<[ItemId]> for Itemset {
    fn borrow(&self) -> &[ItemId] {
        &self.0
    }
}

impl TryFrom<Vec<ItemId>> for Itemset {
    type Error = Error;

    fn try_from(items: Vec<ItemId>) -> Result<Self> {
        Itemset::new(items)
    }
}

impl fmt::Display for Itemset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, item) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{item}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonicalize_sorts_and_dedupes() {
        assert_eq!(canonicalize(&[2, 0, 2, 1]).unwrap().items(), &[0, 1, 2]);
        assert_eq!(canonicalize(&[3]).unwrap().items(), &[3]);
        assert_eq!(canonicalize(&[4, 0]).unwrap().items(), &[0, 4]);
    }

    #[test]
    fn canonicalize_rejects_empty() {
        assert!(matches!(canonicalize(&[]), Err(Error::EmptyItemset)));
    }

    #[test]
    fn subset_test_edges() {
        assert!(contains_sorted(&[0, 1, 4], &[0, 4]));
        assert!(contains_sorted(&[0, 1, 4], &[0, 1, 4]));
        assert!(!contains_sorted(&[0, 1, 4], &[2]));
        assert!(!contains_sorted(&[0, 1], &[0, 1, 2]));
        assert!(!contains_sorted(&[], &[0]));
        assert!(contains_sorted(&[3], &[]));
    }

    proptest! {
        #[test]
        fn canonicalize_is_idempotent(raw in prop::collection::vec(0u32..20, 1..12)) {
            let once = canonicalize(&raw).unwrap();
            let twice = canonicalize(once.items()).unwrap();
            prop_assert_eq!(&once, &twice);
            prop_assert!(once.windows(2).all(|w| w[0] < w[1]));
        }

        #[test]
        fn subset_test_matches_naive(
            hay in prop::collection::btree_set(0u32..16, 0..10),
            needle in prop::collection::btree_set(0u32..16, 0..6),
        ) {
            let hay: Vec<_> = hay.into_iter().collect();
            let needle: Vec<_> = needle.into_iter().collect();
            let naive = needle.iter().all(|x| hay.contains(x));
            prop_assert_eq!(contains_sorted(&hay, &needle), naive);
        }
    }
}
