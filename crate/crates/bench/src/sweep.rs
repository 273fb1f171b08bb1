//! Timed side-by-side runs of the classical and prefixed miners.

use std::io::Write;
use std::time::Instant;

use apriori_core::{
    compare_results, mine_classical_with, mine_prefixed_with, LevelMetrics, MineOptions,
    MiningResult, SupportThreshold, TransactionDatabase,
};

use crate::error::CliError;

/// Column layout of every sweep report.
pub const HEADER: [&str; 8] = [
    "varied_param",
    "classical_ms",
    "improved_ms",
    "improvement_pct",
    "classical_join_cmp",
    "prefix_join_cmp",
    "classical_prune_lookups",
    "prefix_prune_lookups",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    /// Timed runs per miner; the minimum is reported.
    pub repeats: usize,
    pub threads: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            repeats: 3,
            threads: 1,
        }
    }
}

/// One sweep point. Times are in milliseconds rounded to microseconds, and
/// `improvement_pct` is computed from the rounded times.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub varied_param: String,
    pub classical_ms: f64,
    pub improved_ms: f64,
    pub improvement_pct: f64,
    pub classical: LevelMetrics,
    pub prefix: LevelMetrics,
    pub itemsets: usize,
}

impl BenchRow {
    fn new(varied_param: String, classical: &Timed, prefix: &Timed) -> Self {
        let classical_ms = round_to(classical.best_ms, 3);
        let improved_ms = round_to(prefix.best_ms, 3);
        BenchRow {
            varied_param,
            classical_ms,
            improved_ms,
            improvement_pct: round_to(improvement_pct(classical_ms, improved_ms), 2),
            classical: classical.result.metrics.totals(),
            prefix: prefix.result.metrics.totals(),
            itemsets: prefix.result.itemset_count(),
        }
    }

    pub fn record(&self) -> [String; 8] {
        [
            self.varied_param.clone(),
            format!("{:.3}", self.classical_ms),
            format!("{:.3}", self.improved_ms),
            format!("{:.2}", self.improvement_pct),
            self.classical.join_item_comparisons.to_string(),
            self.prefix.join_item_comparisons.to_string(),
            self.classical.prune_subset_lookups.to_string(),
            self.prefix.prune_subset_lookups.to_string(),
        ]
    }
}

/// `(classical - improved) / classical * 100`, or 0 when classical took no
/// measurable time. Negative values are kept.
pub fn improvement_pct(classical_ms: f64, improved_ms: f64) -> f64 {
    if classical_ms <= 0.0 {
        0.0
    } else {
        (classical_ms - improved_ms) / classical_ms * 100.0
    }
}

fn round_to(value: f64, places: i32) -> f64 {
    let scale = 10f64.powi(places);
    (value * scale).round() / scale
}

struct Timed {
    best_ms: f64,
    result: MiningResult,
}

/// Runs both miners `repeats` times, alternating which goes first, and
/// fails if their frequent itemsets differ.
pub fn run_point(
    db: &TransactionDatabase,
    threshold: SupportThreshold,
    varied_param: String,
    config: &SweepConfig,
) -> Result<BenchRow, CliError> {
    let options = MineOptions {
        max_k: None,
        threads: config.threads,
    };
    let mut classical: Option<Timed> = None;
    let mut prefix: Option<Timed> = None;

    let time = |slot: &mut Option<Timed>, run: &dyn Fn() -> MiningResult| {
        let started = Instant::now();
        let result = run();
        let ms = started.elapsed().as_secs_f64() * 1e3;
        match slot {
            Some(t) => t.best_ms = t.best_ms.min(ms),
            None => {
                *slot = Some(Timed {
                    best_ms: ms,
                    result,
                })
            }
        }
    };
    let run_classical = || mine_classical_with(db, threshold, &options);
    let run_prefix = || mine_prefixed_with(db, threshold, &options);

    for repeat in 0..config.repeats.max(1) {
        if repeat % 2 == 0 {
            time(&mut classical, &run_classical);
            time(&mut prefix, &run_prefix);
        } else {
            time(&mut prefix, &run_prefix);
            time(&mut classical, &run_classical);
        }
    }
    let (classical, prefix) = (classical.expect("ran"), prefix.expect("ran"));

    let diff = compare_results(&classical.result, &prefix.result);
    if !diff.is_empty() {
        return Err(CliError::Mismatch(format!(
            "at {varied_param}: {} missing, {} extra, {} count mismatches",
            diff.missing.len(),
            diff.extra.len(),
            diff.count_mismatches.len()
        )));
    }
    Ok(BenchRow::new(varied_param, &classical, &prefix))
}

/// Fixed database, one row per threshold, in the order given.
pub fn support_sweep(
    db: &TransactionDatabase,
    thresholds: &[(String, SupportThreshold)],
    config: &SweepConfig,
) -> Result<Vec<BenchRow>, CliError> {
    thresholds
        .iter()
        .map(|(label, threshold)| run_point(db, *threshold, label.clone(), config))
        .collect()
}

/// Fixed percentage threshold over growing prefixes of `db`.
pub fn size_sweep(
    db: &TransactionDatabase,
    sizes: &[usize],
    min_sup_pct: f64,
    config: &SweepConfig,
) -> Result<Vec<BenchRow>, CliError> {
    if let Some(&too_big) = sizes.iter().find(|&&s| s > db.len()) {
        return Err(CliError::Usage(format!(
            "size {too_big} exceeds the {} transactions available",
            db.len()
        )));
    }
    sizes
        .iter()
        .map(|&size| {
            let head = db.truncated(size);
            let threshold = SupportThreshold::percent(min_sup_pct, size)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            run_point(&head, threshold, size.to_string(), config)
        })
        .collect()
}

pub fn write_rows<W: Write>(rows: &[BenchRow], sink: W) -> Result<(), CliError> {
    let mut csv = csv::Writer::from_writer(sink);
    csv.write_record(HEADER)?;
    for row in rows {
        csv.write_record(row.record())?;
    }
    csv.flush()?;
    Ok(())
}
