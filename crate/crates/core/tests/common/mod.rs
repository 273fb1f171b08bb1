#![allow(dead_code)]

use std::path::PathBuf;

use apriori_core::io::{parse_transactions, TransactionFormat};
use apriori_core::{ItemId, MiningResult, SupportThreshold, TransactionDatabase};

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn example() -> TransactionDatabase {
    let file = std::fs::File::open(data("example.csv")).unwrap();
    parse_transactions(file, TransactionFormat::Csv).unwrap()
}

pub fn abs(n: u64) -> SupportThreshold {
    SupportThreshold::absolute(n).unwrap()
}

/// Level `k` of `result` as `(labels joined, count)` pairs.
pub fn labelled(result: &MiningResult, db: &TransactionDatabase, k: usize) -> Vec<(String, u64)> {
    let dict = db.dictionary();
    result
        .level(k)
        .map(|level| {
            level
                .entries()
                .iter()
                .map(|(set, c)| {
                    let s: String = set
                        .iter()
                        .map(|&i: &ItemId| dict.label(i).unwrap())
                        .collect();
                    (s, *c)
                })
                .collect()
        })
        .unwrap_or_default()
}

pub fn pairs(raw: &[(&str, u64)]) -> Vec<(String, u64)> {
    raw.iter().map(|(s, c)| (s.to_string(), *c)).collect()
}
