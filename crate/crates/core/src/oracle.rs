//! Brute-force ground truth for the Apriori miners.
//!
//! Every subset of the item universe is enumerated as a bitmask and counted
//! against every transaction. Nothing here uses joins, pruning or the
//! downward-closure property.

use std::collections::BTreeMap;
use std::time::Instant;

use crate::database::TransactionDatabase;
use crate::error::{Error, Result};
use crate::itemset::{ItemId, Itemset};
use crate::level::FrequentLevel;
use crate::metrics::{LevelMetrics, MiningMetrics};
use crate::mining::{elapsed_ms, MiningResult};
use crate::threshold::SupportThreshold;

/// Largest item universe the oracle will enumerate.
pub const MAX_UNIVERSE: usize = 20;

/// Mines by enumerating all `2^n` subsets of the `n` dictionary items, up to
/// size `max_k`.
pub fn mine_bruteforce(
    db: &TransactionDatabase,
    threshold: SupportThreshold,
    max_k: usize,
) -> Result<MiningResult> {
    let n = db.dictionary().len();
    if n > MAX_UNIVERSE {
        return Err(Error::UniverseTooLarge {
            items: n,
            limit: MAX_UNIVERSE,
        });
    }
    let started = Instant::now();
    let masks: Vec<u32> = db
        .transactions()
        .iter()
        .map(|t| t.items.iter().fold(0u32, |m, &i| m | (1 << i)))
        .collect();

    let mut by_size: BTreeMap<usize, Vec<(Itemset, u64)>> = BTreeMap::new();
    let mut tested = vec![0u64; max_k + 1];
    for subset in 1u32..(1u32 << n) {
        let size = subset.count_ones() as usize;
        if size > max_k {
            continue;
        }
        tested[size] += 1;
        let support = masks.iter().filter(|&&t| t & subset == subset).count() as u64;
        if threshold.admits(support) {
            let items: Vec<ItemId> = (0..n as ItemId)
                .filter(|&i| subset & (1 << i) != 0)
                .collect();
            by_size
                .entry(size)
                .or_default()
                .push((Itemset::new(items).expect("nonempty mask"), support));
        }
    }

    let mut metrics = MiningMetrics::default();
    for (k, &count) in tested.iter().enumerate().skip(1) {
        metrics.levels.push(LevelMetrics {
            k,
            containment_tests: count * masks.len() as u64,
            db_scans: count,
            candidates_generated: count,
            candidates_after_prune: count,
            ..LevelMetrics::new(k)
        });
    }
    if let Some(first) = metrics.levels.first_mut() {
        first.wall_time_ms = elapsed_ms(started);
    }

    let levels = by_size
        .into_iter()
        .map(|(k, entries)| FrequentLevel::from_entries(k, entries))
        .collect::<Result<Vec<_>>>()?;
    Ok(MiningResult {
        levels,
        metrics,
        threshold,
    })
}

/// Differences between two mining results. `missing` holds itemsets only in
/// the first result, `extra` those only in the second.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiffReport {
    pub missing: Vec<(Itemset, u64)>,
    pub extra: Vec<(Itemset, u64)>,
    pub count_mismatches: Vec<(Itemset, u64, u64)>,
}

impl DiffReport {
    pub fn is_empty(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.count_mismatches.is_empty()
    }
}

/// Symmetric difference of two results over every level, including counts.
pub fn compare_results(a: &MiningResult, b: &MiningResult) -> DiffReport {
    let index = |r: &MiningResult| -> BTreeMap<(usize, Itemset), u64> {
        r.entries()
            .map(|(s, c)| ((s.len(), s.clone()), *c))
            .collect()
    };
    let left = index(a);
    let right = index(b);
    let mut report = DiffReport::default();
    for ((_, set), &count) in &left {
        match right.get(&(set.len(), set.clone())) {
            None => report.missing.push((set.clone(), count)),
            Some(&other) if other != count => {
                report.count_mismatches.push((set.clone(), count, other))
            }
            Some(_) => {}
        }
    }
    for ((len, set), &count) in &right {
        if !left.contains_key(&(*len, set.clone())) {
            report.extra.push((set.clone(), count));
        }
    }
    report
}
