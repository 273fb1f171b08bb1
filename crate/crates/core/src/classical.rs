//! Textbook Apriori: join every pair of a level, probe every subset of each
//! candidate, then count.
//!
//! This is the baseline the prefixed miner is measured against, so it stays
//! deliberately plain: the join examines all `m(m-1)/2` pairs of a level with
//! `m` itemsets, and pruning probes all `k + 1` subsets of a candidate until
//! the first miss.

use rustc_hash::FxHashSet;

use crate::database::TransactionDatabase;
use crate::itemset::{ItemId, Itemset};
use crate::level::FrequentLevel;
use crate::metrics::LevelMetrics;
use crate::mining::{mine_levelwise, CandidateGenerator, MineOptions, MiningResult};
use crate::threshold::SupportThreshold;

/// Joins every pair `l1 < l2` of `level` that agrees on the first `k - 1`
/// items, emitting `l1 + [l2[k]]`.
///
/// Each pair is compared position by position and abandoned at the first
/// differing prefix item. Every identifier test counts as one comparison.
pub fn join_classical(level: &FrequentLevel, metrics: &mut LevelMetrics) -> Vec<Itemset> {
    let k = level.k();
    let sets: Vec<&[ItemId]> = level.itemsets().map(|s| s.items()).collect();
    let mut comparisons = 0u64;
    let mut out = Vec::new();

    for (i, first) in sets.iter().enumerate() {
        for second in &sets[i + 1..] {
            let mut joinable = true;
            for p in 0..k - 1 {
                comparisons += 1;
                if first[p] != second[p] {
                    joinable = false;
                    break;
                }
            }
            if !joinable {
                continue;
            }
            comparisons += 1;
            if first[k - 1] != second[k - 1] {
                let mut items = Vec::with_capacity(k + 1);
                items.extend_from_slice(first);
                items.push(second[k - 1]);
                out.push(Itemset::from_sorted(items));
            }
        }
    }

    metrics.join_item_comparisons += comparisons;
    out
}

/// Keeps the candidates whose every `k`-subset is in `level`.
///
/// Subsets are probed in order of the deleted position (first item first)
/// and probing stops at the first subset that is missing.
pub fn prune_classical(
    candidates: Vec<Itemset>,
    level: &FrequentLevel,
    metrics: &mut LevelMetrics,
) -> Vec<Itemset> {
    let known: FxHashSet<&[ItemId]> = level.itemsets().map(|s| s.items()).collect();
    let mut lookups = 0u64;
    let mut subset = Vec::with_capacity(level.k());

    let kept = candidates
        .into_iter()
        .filter(|candidate| {
            (0..candidate.len()).all(|skip| {
                subset.clear();
                subset.extend_from_slice(&candidate[..skip]);
                subset.extend_from_slice(&candidate[skip + 1..]);
                lookups += 1;
                known.contains(subset.as_slice())
            })
        })
        .collect();

    metrics.prune_subset_lookups += lookups;
    kept
}

struct ClassicalGenerator;

impl CandidateGenerator for ClassicalGenerator {
    fn candidates(&mut self, level: &FrequentLevel, metrics: &mut LevelMetrics) -> Vec<Itemset> {
        let joined = join_classical(level, metrics);
        metrics.candidates_generated += joined.len() as u64;
        let pruned = prune_classical(joined, level, metrics);
        metrics.candidates_after_prune += pruned.len() as u64;
        pruned
    }
}

/// Level-wise classical Apriori, single-threaded.
pub fn mine_classical(
    db: &TransactionDatabase,
    threshold: SupportThreshold,
    max_k: Option<usize>,
) -> MiningResult {
    mine_classical_with(db, threshold, &MineOptions::with_max_k(max_k))
}

pub fn mine_classical_with(
    db: &TransactionDatabase,
    threshold: SupportThreshold,
    options: &MineOptions,
) -> MiningResult {
    mine_levelwise(db, threshold, options, &mut ClassicalGenerator)
}
