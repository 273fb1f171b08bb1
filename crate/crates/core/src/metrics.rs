use serde::{Deserialize, Serialize};

/// Work done by one pass of a miner.
///
/// Pass `k` produces the frequent `k`-itemsets. Pass 1 is the initial item
/// count; pass `k >= 2` joins and prunes level `k - 1` and then counts the
/// surviving `k`-candidates.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct LevelMetrics {
    pub k: usize,
    /// Single item-identifier tests made while joining.
    pub join_item_comparisons: u64,
    /// Membership probes into the previous level while pruning.
    pub prune_subset_lookups: u64,
    /// Transaction-versus-candidate subset tests while counting.
    pub containment_tests: u64,
    pub db_scans: u64,
    pub candidates_generated: u64,
    pub candidates_after_prune: u64,
    pub wall_time_ms: f64,
}

impl LevelMetrics {
    pub fn new(k: usize) -> Self {
        LevelMetrics {
            k,
            ..Default::default()
        }
    }

    /// Adds the counters of `other` into `self`; `k` and wall time are kept.
    pub fn absorb_counters(&mut self, other: &LevelMetrics) {
        self.join_item_comparisons += other.join_item_comparisons;
        self.prune_subset_lookups += other.prune_subset_lookups;
        self.containment_tests += other.containment_tests;
        self.db_scans += other.db_scans;
        self.candidates_generated += other.candidates_generated;
        self.candidates_after_prune += other.candidates_after_prune;
    }

    /// Join comparisons plus prune lookups: the part of a pass that differs
    /// between the two miners.
    pub fn candidate_work(&self) -> u64 {
        self.join_item_comparisons + self.prune_subset_lookups
    }

    /// Same record with the wall time zeroed, for comparing runs.
    pub fn counters_only(&self) -> LevelMetrics {
        LevelMetrics {
            wall_time_ms: 0.0,
            ..self.clone()
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct MiningMetrics {
    pub levels: Vec<LevelMetrics>,
}

impl MiningMetrics {
    pub fn pass(&self, k: usize) -> Option<&LevelMetrics> {
        self.levels.iter().find(|m| m.k == k)
    }

    pub fn totals(&self) -> LevelMetrics {
        let mut total = LevelMetrics::new(0);
        for level in &self.levels {
            total.absorb_counters(level);
            total.wall_time_ms += level.wall_time_ms;
        }
        total
    }
}
