use std::io::{Read, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::database::ItemDictionary;
use crate::error::{Error, Result};
use crate::itemset::Itemset;
use crate::level::FrequentLevel;
use crate::metrics::MiningMetrics;
use crate::mining::MiningResult;
use crate::threshold::SupportThreshold;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResultFormat {
    Json,
    Csv,
}

impl FromStr for ResultFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ResultFormat::Json),
            "csv" => Ok(ResultFormat::Csv),
            other => Err(Error::Parse {
                line: 0,
                message: format!("unknown result format {other:?}"),
            }),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ResultDoc {
    threshold: SupportThreshold,
    levels: Vec<LevelDoc>,
    metrics: MiningMetrics,
}

#[derive(Serialize, Deserialize)]
struct LevelDoc {
    k: usize,
    entries: Vec<EntryDoc>,
}

#[derive(Serialize, Deserialize)]
struct EntryDoc {
    items: Vec<String>,
    count: u64,
}

/// Writes `result` with item labels from `dictionary`.
///
/// JSON is a single object `{threshold, levels, metrics}`, pretty-printed.
/// CSV has the header `k,itemset,count`, one row per itemset, with labels
/// joined by `;`.
pub fn write_result<W: Write>(
    result: &MiningResult,
    dictionary: &ItemDictionary,
    format: ResultFormat,
    mut sink: W,
) -> Result<()> {
    let labels = |set: &Itemset| -> Result<Vec<String>> {
        set.iter()
            .map(|&id| {
                dictionary
                    .label(id)
                    .map(str::to_string)
                    .ok_or_else(|| Error::UnknownLabel(format!("#{id}")))
            })
            .collect()
    };
    match format {
        ResultFormat::Json => {
            let levels = result
                .levels
                .iter()
                .map(|level| {
                    let entries = level
                        .entries()
                        .iter()
                        .map(|(set, count)| {
                            Ok(EntryDoc {
                                items: labels(set)?,
                                count: *count,
                            })
                        })
                        .collect::<Result<_>>()?;
                    Ok(LevelDoc {
                        k: level.k(),
                        entries,
                    })
                })
                .collect::<Result<_>>()?;
            let doc = ResultDoc {
                threshold: result.threshold,
                levels,
                metrics: result.metrics.clone(),
            };
            serde_json::to_writer_pretty(&mut sink, &doc)?;
            writeln!(sink)?;
            sink.flush()?;
        }
        ResultFormat::Csv => {
            let mut csv = csv::Writer::from_writer(sink);
            csv.write_record(["k", "itemset", "count"])?;
            for level in &result.levels {
                for (set, count) in level.entries() {
                    let k = level.k().to_string();
                    let items = labels(set)?.join(";");
                    let count = count.to_string();
                    csv.write_record([k.as_str(), items.as_str(), count.as_str()])?;
                }
            }
            csv.flush()?;
        }
    }
    Ok(())
}

/// Reads a JSON result written by [`write_result`], mapping labels back
/// through `dictionary`.
pub fn read_result_json<R: Read>(reader: R, dictionary: &ItemDictionary) -> Result<MiningResult> {
    let doc: ResultDoc = serde_json::from_reader(reader)?;
    let levels = doc
        .levels
        .into_iter()
        .map(|level| {
            let entries = level
                .entries
                .into_iter()
                .map(|e| Ok((Itemset::new(dictionary.encode(&e.items)?)?, e.count)))
                .collect::<Result<Vec<_>>>()?;
            FrequentLevel::from_entries(level.k, entries)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MiningResult {
        levels,
        metrics: doc.metrics,
        threshold: doc.threshold,
    })
}
