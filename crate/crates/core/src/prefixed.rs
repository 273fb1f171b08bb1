//! Apriori over prefix-keyed levels.
//!
//! Each frequent level is regrouped into a [`PrefixedItemsetStore`]. Joining
//! then needs no prefix comparisons: every pair of tails `a < b` in a group
//! yields the candidate `prefix + [a, b]`. Its two join parents, `prefix + [a]`
//! and `prefix + [b]`, are frequent by construction, so the only subsets that
//! can be missing from the level are the ones containing both `a` and `b`.
//! Those are the subsets formed by deleting one of the prefix items.

use crate::database::TransactionDatabase;
use crate::itemset::{ItemId, Itemset};
use crate::level::FrequentLevel;
use crate::metrics::LevelMetrics;
use crate::mining::{mine_levelwise, CandidateGenerator, MineOptions, MiningResult};
use crate::store::PrefixedItemsetStore;
use crate::threshold::SupportThreshold;

/// Pairs the tails of each group. One comparison is counted per tail pair
/// enumerated; no prefix is ever compared.
pub fn join_prefixed(store: &PrefixedItemsetStore, metrics: &mut LevelMetrics) -> Vec<Itemset> {
    let mut out = Vec::new();
    let mut pairs = 0u64;
    for (prefix, tails) in store.groups() {
        for (i, &a) in tails.iter().enumerate() {
            for &b in &tails[i + 1..] {
                pairs += 1;
                let mut items = Vec::with_capacity(prefix.len() + 2);
                items.extend_from_slice(prefix);
                items.push(a);
                items.push(b);
                out.push(Itemset::from_sorted(items));
            }
        }
    }
    metrics.join_item_comparisons += pairs;
    out
}

/// The `k`-subsets of a `(k+1)`-candidate that contain both of its last two
/// items, i.e. the candidate with one of its first `k - 1` items removed.
/// Candidates of size 2 or less have nothing to check.
pub fn subsets_to_check(candidate: &Itemset) -> Vec<Itemset> {
    let n = candidate.len();
    if n < 3 {
        return Vec::new();
    }
    (0..n - 2)
        .map(|skip| {
            let mut items = Vec::with_capacity(n - 1);
            items.extend_from_slice(&candidate[..skip]);
            items.extend_from_slice(&candidate[skip + 1..]);
            Itemset::from_sorted(items)
        })
        .collect()
}

/// Keeps candidates whose [`subsets_to_check`] are all in `store`.
pub fn prune_prefixed(
    candidates: Vec<Itemset>,
    store: &PrefixedItemsetStore,
    metrics: &mut LevelMetrics,
) -> Vec<Itemset> {
    prune_prefixed_traced(candidates, store, metrics, |_, _| {})
}

/// As [`prune_prefixed`], reporting each probed subset and whether it was
/// found. Probing of a candidate stops at its first missing subset.
pub fn prune_prefixed_traced<F>(
    candidates: Vec<Itemset>,
    store: &PrefixedItemsetStore,
    metrics: &mut LevelMetrics,
    mut trace: F,
) -> Vec<Itemset>
where
    F: FnMut(&[ItemId], bool),
{
    let mut lookups = 0u64;
    let mut subset = Vec::with_capacity(store.k());

    let kept = candidates
        .into_iter()
        .filter(|candidate| {
            let n = candidate.len();
            debug_assert_eq!(n, store.k() + 1);
            (0..n.saturating_sub(2)).all(|skip| {
                subset.clear();
                subset.extend_from_slice(&candidate[..skip]);
                subset.extend_from_slice(&candidate[skip + 1..]);
                lookups += 1;
                let found = store.contains_unchecked(&subset);
                trace(&subset, found);
                found
            })
        })
        .collect();

    metrics.prune_subset_lookups += lookups;
    kept
}

struct PrefixedGenerator;

impl CandidateGenerator for PrefixedGenerator {
    fn candidates(&mut self, level: &FrequentLevel, metrics: &mut LevelMetrics) -> Vec<Itemset> {
        let store = PrefixedItemsetStore::from_level(level);
        let joined = join_prefixed(&store, metrics);
        metrics.candidates_generated += joined.len() as u64;
        let pruned = prune_prefixed(joined, &store, metrics);
        metrics.candidates_after_prune += pruned.len() as u64;
        pruned
    }
}

/// Level-wise Apriori using the prefixed store for join and prune. Produces
/// the same levels as [`crate::mine_classical`].
pub fn mine_prefixed(
    db: &TransactionDatabase,
    threshold: SupportThreshold,
    max_k: Option<usize>,
) -> MiningResult {
    mine_prefixed_with(db, threshold, &MineOptions::with_max_k(max_k))
}

pub fn mine_prefixed_with(
    db: &TransactionDatabase,
    threshold: SupportThreshold,
    options: &MineOptions,
) -> MiningResult {
    mine_levelwise(db, threshold, options, &mut PrefixedGenerator)
}
