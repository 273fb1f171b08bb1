use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::itemset::ItemId;

/// Maps external item labels to dense identifiers.
///
/// Labels are kept in lexicographic order so that identifier order and label
/// order agree; itemsets sorted by identifier read in dictionary order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ItemDictionary {
    labels: Vec<String>,
    id_of: HashMap<String, ItemId>,
}

impl ItemDictionary {
    /// Builds a dictionary from any collection of labels; duplicates collapse.
    pub fn from_labels<I, S>(labels: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let sorted: BTreeSet<String> = labels.into_iter().map(Into::into).collect();
        let labels: Vec<String> = sorted.into_iter().collect();
        let id_of = labels
            .iter()
            .enumerate()
            .map(|(i, label)| (label.clone(), i as ItemId))
            .collect();
        ItemDictionary { labels, id_of }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn id(&self, label: &str) -> Option<ItemId> {
        self.id_of.get(label).copied()
    }

    pub fn label(&self, id: ItemId) -> Option<&str> {
        self.labels.get(id as usize).map(String::as_str)
    }

    /// Encodes labels into a canonical id list. Unknown labels are an error.
    pub fn encode<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<ItemId>> {
        let mut ids = labels
            .iter()
            .map(|l| {
                self.id(l.as_ref())
                    .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        ids.sort_unstable();
        ids.dedup();
        Ok(ids)
    }
}

/// One row of the database. `items` is ascending and duplicate-free; it may
/// be empty, in which case the transaction supports nothing but still counts
/// towards the database size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transaction {
    pub tid: String,
    pub items: Vec<ItemId>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TransactionDatabase {
    dictionary: ItemDictionary,
    transactions: Vec<Transaction>,
}

impl TransactionDatabase {
    /// Validates that every transaction is canonical and refers to known items.
    pub fn new(dictionary: ItemDictionary, transactions: Vec<Transaction>) -> Result<Self> {
        for t in &transactions {
            if !t.items.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidLevel(format!(
                    "transaction {} is not strictly ascending",
                    t.tid
                )));
            }
            if let Some(&bad) = t.items.iter().find(|&&i| i as usize >= dictionary.len()) {
                return Err(Error::InvalidLevel(format!(
                    "transaction {} refers to unknown item id {bad}",
                    t.tid
                )));
            }
        }
        Ok(TransactionDatabase {
            dictionary,
            transactions,
        })
    }

    pub fn dictionary(&self) -> &ItemDictionary {
        &self.dictionary
    }

    pub fn transactions(&self) -> &[Transaction] {
        &self.transactions
    }

    pub fn len(&self) -> usize {
        self.transactions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transactions.is_empty()
    }

    /// The first `n` transactions, keeping the full dictionary.
    pub fn truncated(&self, n: usize) -> TransactionDatabase {
        TransactionDatabase {
            dictionary: self.dictionary.clone(),
            transactions: self.transactions[..n.min(self.transactions.len())].to_vec(),
        }
    }
}

/// Encodes labelled transactions. The dictionary is every distinct label in
/// lexicographic order; duplicate labels inside a transaction are dropped and
/// transaction order is preserved.
pub fn encode_database<I, T, L, S>(raw: I) -> TransactionDatabase
where
    I: IntoIterator<Item = (T, L)>,
    T: Into<String>,
    L: IntoIterator<Item = S>,
    S: Into<String>,
{
    let rows: Vec<(String, Vec<String>)> = raw
        .into_iter()
        .map(|(tid, labels)| (tid.into(), labels.into_iter().map(Into::into).collect()))
        .collect();
    let dictionary = ItemDictionary::from_labels(rows.iter().flat_map(|(_, l)| l.iter().cloned()));
    let transactions = rows
        .into_iter()
        .map(|(tid, labels)| {
            let items = dictionary
                .encode(&labels)
                .expect("dictionary built from these labels");
            Transaction { tid, items }
        })
        .collect();
    TransactionDatabase {
        dictionary,
        transactions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_encodes_with_sorted_dictionary() {
        let db = encode_database(vec![
            ("T1", vec!["A", "B", "E"]),
            ("T2", vec!["B", "D"]),
            ("T3", vec!["B", "C"]),
        ]);
        assert_eq!(db.dictionary().labels(), &["A", "B", "C", "D", "E"]);
        assert_eq!(db.transactions()[0].items, vec![0, 1, 4]);
        assert_eq!(db.transactions()[0].tid, "T1");
        for (i, label) in db.dictionary().labels().iter().enumerate() {
            assert_eq!(db.dictionary().id(label), Some(i as ItemId));
        }
    }

    #[test]
    fn empty_input_gives_empty_database() {
        let db = encode_database(Vec::<(String, Vec<String>)>::new());
        assert!(db.is_empty());
        assert!(db.dictionary().is_empty());
    }

    #[test]
    fn duplicate_labels_collapse() {
        let db = encode_database(vec![("t", vec!["B", "B", "A"])]);
        assert_eq!(db.dictionary().labels(), &["A", "B"]);
        assert_eq!(db.transactions()[0].items, vec![0, 1]);
    }

    #[test]
    fn new_rejects_unknown_ids() {
        let dict = ItemDictionary::from_labels(["A"]);
        let bad = vec![Transaction {
            tid: "x".into(),
            items: vec![0, 3],
        }];
        assert!(TransactionDatabase::new(dict, bad).is_err());
    }

    #[test]
    fn truncation_keeps_dictionary() {
        let db = encode_database(vec![("1", vec!["A"]), ("2", vec!["B"])]);
        let head = db.truncated(1);
        assert_eq!(head.len(), 1);
        assert_eq!(head.dictionary().len(), 2);
        assert_eq!(db.truncated(10).len(), 2);
    }
}
