//! Transaction files, synthetic databases and result serialization.

mod result;
mod synthetic;
mod transactions;

pub use result::{read_result_json, write_result, ResultFormat};
pub use synthetic::{generate_synthetic, Popularity, SyntheticSpec};
pub use transactions::{parse_transactions, write_transactions, TransactionFormat};
