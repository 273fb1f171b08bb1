use std::time::Instant;

use crate::counting::{count_support_parallel, generate_l1};
use crate::database::TransactionDatabase;
use crate::itemset::{ItemId, Itemset};
use crate::level::FrequentLevel;
use crate::metrics::{LevelMetrics, MiningMetrics};
use crate::threshold::SupportThreshold;

/// Frequent levels `L1, L2, ...` in order, each nonempty, plus per-pass
/// metrics. Mining stops at the first empty level, which is not stored.
#[derive(Clone, Debug, PartialEq)]
pub struct MiningResult {
    pub levels: Vec<FrequentLevel>,
    pub metrics: MiningMetrics,
    pub threshold: SupportThreshold,
}

impl MiningResult {
    pub fn level(&self, k: usize) -> Option<&FrequentLevel> {
        self.levels.iter().find(|l| l.k() == k)
    }

    pub fn itemset_count(&self) -> usize {
        self.levels.iter().map(FrequentLevel::len).sum()
    }

    pub fn support(&self, itemset: &[ItemId]) -> Option<u64> {
        self.level(itemset.len())?.support(itemset)
    }

    /// True when both results hold the same itemsets with the same counts.
    pub fn same_itemsets(&self, other: &MiningResult) -> bool {
        self.levels == other.levels
    }

    /// Every frequent itemset with its support, level by level.
    pub fn entries(&self) -> impl Iterator<Item = &(Itemset, u64)> + '_ {
        self.levels.iter().flat_map(|l| l.entries())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MineOptions {
    /// Largest itemset size to mine; `None` mines until a level is empty.
    pub max_k: Option<usize>,
    /// Workers used for support counting.
    pub threads: usize,
}

impl Default for MineOptions {
    fn default() -> Self {
        MineOptions {
            max_k: None,
            threads: 1,
        }
    }
}

impl MineOptions {
    pub fn with_max_k(max_k: Option<usize>) -> Self {
        MineOptions {
            max_k,
            ..Default::default()
        }
    }
}

/// Candidate generation for one pass: join plus prune of a frequent level.
/// The miners differ only here.
pub(crate) trait CandidateGenerator {
    fn candidates(&mut self, level: &FrequentLevel, metrics: &mut LevelMetrics) -> Vec<Itemset>;
}

/// The level-wise loop shared by the Apriori miners.
pub(crate) fn mine_levelwise<G: CandidateGenerator>(
    db: &TransactionDatabase,
    threshold: SupportThreshold,
    options: &MineOptions,
    generator: &mut G,
) -> MiningResult {
    let mut metrics = MiningMetrics::default();
    let mut levels = Vec::new();

    let started = Instant::now();
    let mut pass = LevelMetrics::new(1);
    let mut current = generate_l1(db, threshold, &mut pass);
    pass.wall_time_ms = elapsed_ms(started);
    metrics.levels.push(pass);

    while !current.is_empty() {
        let k = current.k() + 1;
        let done = options.max_k.is_some_and(|max| k > max);
        levels.push(current);
        if done {
            break;
        }
        let started = Instant::now();
        let mut pass = LevelMetrics::new(k);
        let previous = levels.last().expect("just pushed");
        let candidates = generator.candidates(previous, &mut pass);
        current = count_support_parallel(db, k, &candidates, threshold, options.threads, &mut pass);
        pass.wall_time_ms = elapsed_ms(started);
        metrics.levels.push(pass);
    }

    MiningResult {
        levels,
        metrics,
        threshold,
    }
}

pub(crate) fn elapsed_ms(started: Instant) -> f64 {
    started.elapsed().as_secs_f64() * 1e3
}
