use std::io::{BufRead, BufReader, Read, Write};
use std::str::FromStr;

use crate::database::{encode_database, TransactionDatabase};
use crate::error::{Error, Result};

/// On-disk transaction layouts.
///
/// * `Fimi`: one transaction per line, items separated by whitespace. The
///   transaction id is the 1-based line number.
/// * `Csv`: first cell is the transaction id, every further nonempty cell is
///   an item. A leading `tid,...` header row is skipped.
///
/// Blank lines are ignored in both.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransactionFormat {
    Fimi,
    Csv,
}

impl FromStr for TransactionFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fimi" => Ok(TransactionFormat::Fimi),
            "csv" => Ok(TransactionFormat::Csv),
            other => Err(Error::Parse {
                line: 0,
                message: format!("unknown transaction format {other:?}"),
            }),
        }
    }
}

pub fn parse_transactions<R: Read>(
    reader: R,
    format: TransactionFormat,
) -> Result<TransactionDatabase> {
    let rows = match format {
        TransactionFormat::Fimi => parse_fimi(reader)?,
        TransactionFormat::Csv => parse_csv(reader)?,
    };
    Ok(encode_database(rows))
}

fn parse_fimi<R: Read>(reader: R) -> Result<Vec<(String, Vec<String>)>> {
    let mut rows = Vec::new();
    for (i, line) in BufReader::new(reader).lines().enumerate() {
        let line = line.map_err(|e| Error::Parse {
            line: i as u64 + 1,
            message: e.to_string(),
        })?;
        let items: Vec<String> = line.split_whitespace().map(str::to_string).collect();
        if items.is_empty() {
            continue;
        }
        rows.push(((i + 1).to_string(), items));
    }
    Ok(rows)
}

fn parse_csv<R: Read>(reader: R) -> Result<Vec<(String, Vec<String>)>> {
    let mut csv = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(reader);
    let mut rows = Vec::new();
    for (i, record) in csv.records().enumerate() {
        let record = record.map_err(|e| Error::Parse {
            line: e.position().map_or(i as u64 + 1, |p| p.line()),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(i as u64 + 1, |p| p.line());
        if record.iter().all(|cell| cell.trim().is_empty()) {
            continue;
        }
        let tid = record.get(0).unwrap_or_default().trim();
        if rows.is_empty() && tid.eq_ignore_ascii_case("tid") {
            continue;
        }
        if tid.is_empty() {
            return Err(Error::Parse {
                line,
                message: "missing transaction id in first column".into(),
            });
        }
        let items = record
            .iter()
            .skip(1)
            .map(str::trim)
            .filter(|cell| !cell.is_empty())
            .map(str::to_string)
            .collect();
        rows.push((tid.to_string(), items));
    }
    Ok(rows)
}

/// Writes `db` with item labels. FIMI output drops transaction ids and
/// cannot represent empty transactions.
pub fn write_transactions<W: Write>(
    db: &TransactionDatabase,
    format: TransactionFormat,
    sink: W,
) -> Result<()> {
    let dict = db.dictionary();
    let label = |id: u32| dict.label(id).expect("database ids are valid");
    match format {
        TransactionFormat::Fimi => {
            let mut sink = std::io::BufWriter::new(sink);
            for t in db.transactions() {
                let line: Vec<&str> = t.items.iter().map(|&i| label(i)).collect();
                writeln!(sink, "{}", line.join(" "))?;
            }
            sink.flush()?;
        }
        TransactionFormat::Csv => {
            let mut csv = csv::WriterBuilder::new().flexible(true).from_writer(sink);
            for t in db.transactions() {
                let mut row = vec![t.tid.as_str()];
                row.extend(t.items.iter().map(|&i| label(i)));
                csv.write_record(&row)?;
            }
            csv.flush()?;
        }
    }
    Ok(())
}
