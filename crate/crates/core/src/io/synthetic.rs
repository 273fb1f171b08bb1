//! Seeded synthetic transaction databases.
//!
//! Generation, per transaction:
//!
//! 1. Draw a length `1 + G` where `G` is geometric with success probability
//!    `1 / mean_length`, so the unclamped mean is `mean_length`. The length is
//!    clamped to `n_items`. Means below 1 behave as 1.
//! 2. Draw that many distinct items from the popularity weights by weighted
//!    sampling without replacement: each item gets the key `ln(u) / w` for a
//!    fresh uniform `u`, and the items with the largest keys are taken.
//!
//! Item `i` has weight 1 under `uniform` and `1 / (i + 1)^s` under `zipf:s`,
//! and is labelled `I{i}`. The RNG is ChaCha8 seeded from `seed`, so output
//! depends only on the spec.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Geometric};

use crate::database::{encode_database, TransactionDatabase};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Popularity {
    Uniform,
    Zipf { exponent: f64 },
}

impl FromStr for Popularity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "uniform" {
            return Ok(Popularity::Uniform);
        }
        let exponent = s
            .strip_prefix("zipf:")
            .and_then(|e| e.parse::<f64>().ok())
            .ok_or_else(|| {
                Error::Spec(format!("unknown popularity {s:?}; use uniform or zipf:S"))
            })?;
        Ok(Popularity::Zipf { exponent })
    }
}

impl fmt::Display for Popularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Popularity::Uniform => write!(f, "uniform"),
            Popularity::Zipf { exponent } => write!(f, "zipf:{exponent}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SyntheticSpec {
    pub n_transactions: usize,
    pub n_items: usize,
    pub mean_length: f64,
    pub popularity: Popularity,
    pub seed: u64,
}

impl SyntheticSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n_items == 0 {
            return Err(Error::Spec("n_items must be at least 1".into()));
        }
        if !(self.mean_length > 0.0 && self.mean_length.is_finite()) {
            return Err(Error::Spec(format!(
                "mean_length must be positive, got {}",
                self.mean_length
            )));
        }
        if self.mean_length > self.n_items as f64 {
            return Err(Error::Spec(format!(
                "mean_length {} exceeds n_items {}",
                self.mean_length, self.n_items
            )));
        }
        if let Popularity::Zipf { exponent } = self.popularity {
            if !(exponent > 0.0 && exponent.is_finite()) {
                return Err(Error::Spec(format!(
                    "zipf exponent must be positive, got {exponent}"
                )));
            }
        }
        Ok(())
    }

    fn weights(&self) -> Vec<f64> {
        match self.popularity {
            Popularity::Uniform => vec![1.0; self.n_items],
            Popularity::Zipf { exponent } => (0..self.n_items)
                .map(|i| 1.0 / ((i + 1) as f64).powf(exponent))
                .collect(),
        }
    }
}

/// Parses `n=10000,items=100,mean=8,dist=zipf:1.0,seed=42`. `dist` defaults
/// to uniform and `seed` to 0.
impl FromStr for SyntheticSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut n = None;
        let mut items = None;
        let mut mean = None;
        let mut popularity = Popularity::Uniform;
        let mut seed = 0u64;
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Spec(format!("expected key=value, got {part:?}")))?;
            let bad = |what: &str| Error::Spec(format!("invalid {what}: {value:?}"));
            match key.trim() {
                "n" => n = Some(value.parse().map_err(|_| bad("n"))?),
                "items" => items = Some(value.parse().map_err(|_| bad("items"))?),
                "mean" => mean = Some(value.parse().map_err(|_| bad("mean"))?),
                "dist" => popularity = value.parse()?,
                "seed" => seed = value.parse().map_err(|_| bad("seed"))?,
                other => return Err(Error::Spec(format!("unknown key {other:?}"))),
            }
        }
        let spec = SyntheticSpec {
            n_transactions: n.ok_or_else(|| Error::Spec("missing n".into()))?,
            n_items: items.ok_or_else(|| Error::Spec("missing items".into()))?,
            mean_length: mean.ok_or_else(|| Error::Spec("missing mean".into()))?,
            popularity,
            seed,
        };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn generate_synthetic(spec: &SyntheticSpec) -> Result<TransactionDatabase> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let success = (1.0 / spec.mean_length).min(1.0);
    let extra_length = Geometric::new(success).map_err(|e| Error::Spec(e.to_string()))?;
    let weights = spec.weights();
    let labels: Vec<String> = (0..spec.n_items).map(|i| format!("I{i}")).collect();

    let mut keyed: Vec<(f64, usize)> = Vec::with_capacity(spec.n_items);
    let mut rows = Vec::with_capacity(spec.n_transactions);
    for t in 0..spec.n_transactions {
        let length = (1 + extra_length.sample(&mut rng)).min(spec.n_items as u64) as usize;
        keyed.clear();
        for (i, &w) in weights.iter().enumerate() {
            // 1 - u lies in (0, 1], keeping the log finite.
            let u: f64 = 1.0 - rng.random::<f64>();
            keyed.push((u.ln() / w, i));
        }
        if length < keyed.len() {
            keyed.select_nth_unstable_by(length, |a, b| b.0.total_cmp(&a.0));
        }
        let items: Vec<&str> = keyed[..length]
            .iter()
            .map(|&(_, i)| labels[i].as_str())
            .collect();
        rows.push((format!("T{}", t + 1), items));
    }
    Ok(encode_database(rows))
}
