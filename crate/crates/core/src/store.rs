//! Prefix-keyed storage of one frequent level.
//!
//! A `k`-itemset is split into its first `k - 1` items (the key) and its last
//! item. All itemsets sharing a key are grouped, and the group stores the
//! ascending set of last items ("tails"). For `k = 1` the key is empty and
//! there is a single group holding every frequent item.
//!
//! Groups iterate in ascending key order, so flattening the store gives the
//! itemsets back in lexicographic order.

use indexmap::IndexMap;
use rustc_hash::FxBuildHasher;

use crate::error::{Error, Result};
use crate::itemset::{ItemId, Itemset};
use crate::level::{FrequentLevel, TokenCount};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixedItemsetStore {
    k: usize,
    groups: IndexMap<Vec<ItemId>, Vec<ItemId>, FxBuildHasher>,
    itemsets: usize,
}

impl PrefixedItemsetStore {
    /// Groups the itemsets of `level` by their `k - 1` prefix.
    pub fn from_level(level: &FrequentLevel) -> Self {
        let mut groups: IndexMap<Vec<ItemId>, Vec<ItemId>, FxBuildHasher> = IndexMap::default();
        let mut current: Option<(&[ItemId], Vec<ItemId>)> = None;
        // Sorted input means equal prefixes are adjacent.
        for itemset in level.itemsets() {
            let prefix = itemset.prefix();
            match &mut current {
                Some((p, tails)) if *p == prefix => tails.push(itemset.last_item()),
                _ => {
                    if let Some((p, tails)) = current.take() {
                        groups.insert(p.to_vec(), tails);
                    }
                    current = Some((prefix, vec![itemset.last_item()]));
                }
            }
        }
        if let Some((p, tails)) = current {
            groups.insert(p.to_vec(), tails);
        }
        PrefixedItemsetStore {
            k: level.k(),
            groups,
            itemsets: level.len(),
        }
    }

    /// Builds a store from explicit `(prefix, tails)` groups, checking every
    /// structural invariant. Tails are sorted; groups are ordered by prefix.
    pub fn from_groups<I>(k: usize, groups: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<ItemId>, Vec<ItemId>)>,
    {
        if k == 0 {
            return Err(Error::InvalidStore("k must be at least 1".into()));
        }
        let mut map: IndexMap<Vec<ItemId>, Vec<ItemId>, FxBuildHasher> = IndexMap::default();
        let mut itemsets = 0;
        for (prefix, mut tails) in groups {
            if prefix.len() != k - 1 {
                return Err(Error::InvalidStore(format!(
                    "prefix {prefix:?} has {} items, expected {}",
                    prefix.len(),
                    k - 1
                )));
            }
            if !prefix.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidStore(format!(
                    "prefix {prefix:?} is not ascending"
                )));
            }
            tails.sort_unstable();
            tails.dedup();
            if tails.is_empty() {
                return Err(Error::InvalidStore(format!(
                    "prefix {prefix:?} has no tails"
                )));
            }
            if let Some(&last) = prefix.last() {
                if tails[0] <= last {
                    return Err(Error::InvalidStore(format!(
                        "tail {} does not follow prefix {prefix:?}",
                        tails[0]
                    )));
                }
            }
            itemsets += tails.len();
            if map.insert(prefix.clone(), tails).is_some() {
                return Err(Error::InvalidStore(format!("duplicate prefix {prefix:?}")));
            }
        }
        map.sort_unstable_keys();
        Ok(PrefixedItemsetStore {
            k,
            groups: map,
            itemsets,
        })
    }

    /// Size of the itemsets represented.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of itemsets represented.
    pub fn len(&self) -> usize {
        self.itemsets
    }

    pub fn is_empty(&self) -> bool {
        self.itemsets == 0
    }

    pub fn group_count(&self) -> usize {
        self.groups.len()
    }

    /// `(prefix, tails)` pairs in ascending prefix order.
    pub fn groups(&self) -> impl Iterator<Item = (&[ItemId], &[ItemId])> + '_ {
        self.groups
            .iter()
            .map(|(p, t)| (p.as_slice(), t.as_slice()))
    }

    pub fn tails(&self, prefix: &[ItemId]) -> Option<&[ItemId]> {
        self.groups.get(prefix).map(Vec::as_slice)
    }

    /// Prefix lookup followed by a binary search of the tails. `itemset` must
    /// have exactly `k` items.
    pub(crate) fn contains_unchecked(&self, itemset: &[ItemId]) -> bool {
        let (last, prefix) = itemset.split_last().expect("nonempty itemset");
        self.groups
            .get(prefix)
            .is_some_and(|tails| tails.binary_search(last).is_ok())
    }

    pub fn contains(&self, itemset: &[ItemId]) -> Result<bool> {
        if itemset.len() != self.k {
            return Err(Error::LevelMismatch {
                expected: self.k,
                found: itemset.len(),
            });
        }
        Ok(self.contains_unchecked(itemset))
    }

    /// Flattens the store back into its itemsets, lexicographically sorted.
    pub fn itemsets(&self) -> Vec<Itemset> {
        let mut out = Vec::with_capacity(self.itemsets);
        for (prefix, tails) in self.groups() {
            for &tail in tails {
                let mut items = Vec::with_capacity(self.k);
                items.extend_from_slice(prefix);
                items.push(tail);
                out.push(Itemset::from_sorted(items));
            }
        }
        out
    }
}

/// Membership test of a full `k`-itemset in `store`.
pub fn store_contains(store: &PrefixedItemsetStore, candidate: &Itemset) -> Result<bool> {
    store.contains(candidate.items())
}

impl From<&FrequentLevel> for PrefixedItemsetStore {
    fn from(level: &FrequentLevel) -> Self {
        PrefixedItemsetStore::from_level(level)
    }
}

impl TokenCount for PrefixedItemsetStore {
    fn token_count(&self) -> usize {
        self.groups
            .values()
            .map(|tails| self.k - 1 + tails.len())
            .sum()
    }
}
