//! Support counting shared by every Apriori miner in this crate.
//!
//! Each call is one pass over the transactions. Every candidate is tested
//! against every transaction, so `containment_tests` grows by
//! `|transactions| * |candidates|` per pass. The transaction is loaded into a
//! bitmap once. Adjacent candidates sharing a prefix are tested together: the
//! prefix bits are checked once, then each candidate's last item.

use std::thread;

use crate::database::{Transaction, TransactionDatabase};
use crate::itemset::{ItemId, Itemset};
use crate::level::FrequentLevel;
use crate::metrics::LevelMetrics;
use crate::threshold::SupportThreshold;

/// Counts every item in one scan and keeps those meeting `threshold`.
pub fn generate_l1(
    db: &TransactionDatabase,
    threshold: SupportThreshold,
    metrics: &mut LevelMetrics,
) -> FrequentLevel {
    let mut counts = vec![0u64; db.dictionary().len()];
    for t in db.transactions() {
        for &item in &t.items {
            counts[item as usize] += 1;
        }
    }
    metrics.db_scans += 1;
    metrics.candidates_generated += counts.len() as u64;
    metrics.candidates_after_prune += counts.len() as u64;
    let entries = counts
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| threshold.admits(c))
        .map(|(item, c)| (Itemset::from_sorted(vec![item as u32]), c))
        .collect();
    FrequentLevel::from_sorted(1, entries)
}

/// Counts the support of each `k`-candidate and keeps those meeting
/// `threshold`. The result is sorted regardless of candidate order.
pub fn count_support(
    db: &TransactionDatabase,
    k: usize,
    candidates: &[Itemset],
    threshold: SupportThreshold,
    metrics: &mut LevelMetrics,
) -> FrequentLevel {
    count_support_parallel(db, k, candidates, threshold, 1, metrics)
}

/// As [`count_support`], splitting the transactions over up to `threads`
/// workers. Counts and counters are summed, so the output does not depend
/// on `threads`.
pub fn count_support_parallel(
    db: &TransactionDatabase,
    k: usize,
    candidates: &[Itemset],
    threshold: SupportThreshold,
    threads: usize,
    metrics: &mut LevelMetrics,
) -> FrequentLevel {
    assert!(
        candidates.iter().all(|c| c.len() == k),
        "count_support expects {k}-candidates"
    );
    let transactions = db.transactions();
    let threads = threads.max(1).min(transactions.len().max(1));
    // Contiguous k-strided copy of the candidates keeps the inner loop in cache.
    let flat: Vec<ItemId> = candidates.iter().flat_map(|c| c.iter().copied()).collect();
    let flat = flat.as_slice();
    let universe = db.dictionary().len();

    let counts = if k == 0 {
        vec![0u64; candidates.len()]
    } else if threads == 1 {
        count_chunk(transactions, flat, k, universe)
    } else {
        let chunk = transactions.len().div_ceil(threads);
        thread::scope(|scope| {
            let workers: Vec<_> = transactions
                .chunks(chunk)
                .map(|part| scope.spawn(move || count_chunk(part, flat, k, universe)))
                .collect();
            let mut total = vec![0u64; candidates.len()];
            for worker in workers {
                let partial = worker.join().expect("counting worker panicked");
                for (t, p) in total.iter_mut().zip(partial) {
                    *t += p;
                }
            }
            total
        })
    };

    metrics.db_scans += 1;
    metrics.containment_tests += (transactions.len() * candidates.len()) as u64;

    let mut entries: Vec<(Itemset, u64)> = candidates
        .iter()
        .zip(counts)
        .filter(|&(_, c)| threshold.admits(c))
        .map(|(s, c)| (s.clone(), c))
        .collect();
    if !entries.windows(2).all(|w| w[0].0 < w[1].0) {
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        entries.dedup_by(|a, b| a.0 == b.0);
    }
    FrequentLevel::from_sorted(k, entries)
}

/// Runs of adjacent candidates with the same `k - 1` prefix, as index ranges.
fn prefix_runs(flat: &[ItemId], k: usize) -> Vec<(usize, usize)> {
    let n = flat.len() / k;
    let prefix = |i: usize| &flat[i * k..i * k + k - 1];
    let mut runs = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || prefix(i) != prefix(start) {
            runs.push((start, i));
            start = i;
        }
    }
    runs
}

fn count_chunk(
    transactions: &[Transaction],
    flat: &[ItemId],
    k: usize,
    universe: usize,
) -> Vec<u64> {
    let mut counts = vec![0u64; flat.len() / k];
    let runs = prefix_runs(flat, k);
    let mut bits = vec![0u64; universe.div_ceil(64).max(1)];
    let bit = |bits: &[u64], item: ItemId| (bits[(item >> 6) as usize] >> (item & 63)) & 1;
    for t in transactions {
        if t.items.len() < k {
            continue;
        }
        for &item in &t.items {
            bits[(item >> 6) as usize] |= 1 << (item & 63);
        }
        for &(start, end) in &runs {
            let prefix = &flat[start * k..start * k + k - 1];
            if prefix.iter().fold(1, |hit, &item| hit & bit(&bits, item)) == 0 {
                continue;
            }
            for (i, count) in counts[start..end].iter_mut().enumerate() {
                *count += bit(&bits, flat[(start + i) * k + k - 1]);
            }
        }
        for &item in &t.items {
            bits[(item >> 6) as usize] = 0;
        }
    }
    counts
}
