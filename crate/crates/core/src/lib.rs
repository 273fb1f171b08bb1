//! Frequent-itemset mining with two interchangeable Apriori miners.
//!
//! [`classical`] implements the textbook join / prune / count loop. [`prefixed`]
//! keeps each frequent level in a [`PrefixedItemsetStore`] (prefix of the first
//! `k - 1` items mapped to the set of possible last items), joins by pairing
//! tails inside a group and only checks the subsets that can actually be missing.
//!
//! Both miners share [`counting::count_support`] and record the same
//! [`MiningMetrics`] counters, so their join and prune work can be compared
//! independently of the machine. [`oracle`] is a brute-force miner used as
//! ground truth in tests.
//!
//! ```
//! use apriori_core::{encode_database, mine_classical, mine_prefixed, SupportThreshold};
//!
//! let db = encode_database(vec![
//!     ("t1", vec!["bread", "milk"]),
//!     ("t2", vec!["bread", "milk", "eggs"]),
//!     ("t3", vec!["milk", "eggs"]),
//! ]);
//! let threshold = SupportThreshold::absolute(2).unwrap();
//! let classical = mine_classical(&db, threshold, None);
//! let prefixed = mine_prefixed(&db, threshold, None);
//! assert!(classical.same_itemsets(&prefixed));
//! assert_eq!(prefixed.levels.len(), 2);
//! ```

pub mod classical;
pub mod counting;
pub mod database;
pub mod error;
pub mod io;
pub mod itemset;
pub mod level;
pub mod metrics;
pub mod mining;
pub mod oracle;
pub mod prefixed;
pub mod store;
pub mod threshold;

pub use classical::{join_classical, mine_classical, mine_classical_with, prune_classical};
pub use counting::{count_support, count_support_parallel, generate_l1};
pub use database::{encode_database, ItemDictionary, Transaction, TransactionDatabase};
pub use error::{Error, Result};
pub use itemset::{canonicalize, ItemId, Itemset};
pub use level::{FrequentLevel, TokenCount};
pub use metrics::{LevelMetrics, MiningMetrics};
pub use mining::{MineOptions, MiningResult};
pub use oracle::{compare_results, mine_bruteforce, DiffReport};
pub use prefixed::{
    join_prefixed, mine_prefixed, mine_prefixed_with, prune_prefixed, prune_prefixed_traced,
    subsets_to_check,
};
pub use store::{store_contains, PrefixedItemsetStore};
pub use threshold::{SupportThreshold, ThresholdOrigin};
