use crate::error::{Error, Result};
use crate::itemset::{ItemId, Itemset};

/// All frequent `k`-itemsets with their support counts, in ascending
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrequentLevel {
    k: usize,
    entries: Vec<(Itemset, u64)>,
}

impl FrequentLevel {
    pub fn empty(k: usize) -> Self {
        FrequentLevel {
            k,
            entries: Vec::new(),
        }
    }

    /// Sorts `entries` and checks sizes and uniqueness.
    pub fn from_entries(k: usize, mut entries: Vec<(Itemset, u64)>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidLevel("k must be at least 1".into()));
        }
        if let Some((bad, _)) = entries.iter().find(|(s, _)| s.len() != k) {
            return Err(Error::InvalidLevel(format!(
                "{bad} does not have {k} items"
            )));
        }
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        if let Some(w) = entries.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidLevel(format!("duplicate itemset {}", w[0].0)));
        }
        Ok(FrequentLevel { k, entries })
    }

    /// Entries already sorted, unique and of size `k`.
    pub(crate) fn from_sorted(k: usize, entries: Vec<(Itemset, u64)>) -> Self {
        debug_assert!(entries.iter().all(|(s, _)| s.len() == k));
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        FrequentLevel { k, entries }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(Itemset, u64)] {
        &self.entries
    }

    pub fn itemsets(&self) -> impl Iterator<Item = &Itemset> + '_ {
        self.entries.iter().map(|(s, _)| s)
    }

    pub fn support(&self, itemset: &[ItemId]) -> Option<u64> {
        self.entries
            .binary_search_by(|(s, _)| s.items().cmp(itemset))
            .ok()
            .map(|i| self.entries[i].1)
    }

    pub fn contains(&self, itemset: &[ItemId]) -> bool {
        self.support(itemset).is_some()
    }
}

/// Number of item identifiers needed to write a collection of itemsets down.
pub trait TokenCount {
    fn token_count(&self) -> usize;
}

impl TokenCount for FrequentLevel {
    fn token_count(&self) -> usize {
        self.k * self.entries.len()
    }
}
