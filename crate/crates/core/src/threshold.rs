use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How a [`SupportThreshold`] was specified. Percent thresholds keep the
/// percentage (e.g. `2.0` for 2%) for reporting.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdOrigin {
    Absolute,
    Percent(f64),
}

/// Minimum support as an absolute transaction count. An itemset is frequent
/// when its support is at least `absolute`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SupportThreshold {
    absolute: u64,
    origin: ThresholdOrigin,
}

impl SupportThreshold {
    pub fn absolute(count: u64) -> Result<Self> {
        if count == 0 {
            return Err(Error::InvalidThreshold(
                "absolute support must be at least 1".into(),
            ));
        }
        Ok(SupportThreshold {
            absolute: count,
            origin: ThresholdOrigin::Absolute,
        })
    }

    /// `percent` of `n_transactions`, rounded up and never below 1.
    pub fn percent(percent: f64, n_transactions: usize) -> Result<Self> {
        if !(percent > 0.0 && percent <= 100.0) {
            return Err(Error::InvalidThreshold(format!(
                "percent support must be in (0, 100], got {percent}"
            )));
        }
        // Multiply before dividing so integral percentages stay exact, then
        // absorb the representation error of fractional ones.
        let exact = percent * n_transactions as f64 / 100.0;
        let absolute = (exact - exact.max(1.0) * 1e-12).ceil().max(1.0) as u64;
        Ok(SupportThreshold {
            absolute,
            origin: ThresholdOrigin::Percent(percent),
        })
    }

    /// Parses `"600"` as an absolute count or `"2%"` as a percentage of
    /// `n_transactions`.
    pub fn parse(text: &str, n_transactions: usize) -> Result<Self> {
        let text = text.trim();
        if let Some(pct) = text.strip_suffix('%') {
            let value: f64 = pct
                .trim()
                .parse()
                .map_err(|_| Error::InvalidThreshold(format!("not a percentage: {text:?}")))?;
            Self::percent(value, n_transactions)
        } else {
            let value: u64 = text
                .parse()
                .map_err(|_| Error::InvalidThreshold(format!("not a count: {text:?}")))?;
            Self::absolute(value)
        }
    }

    pub fn count(&self) -> u64 {
        self.absolute
    }

    pub fn origin(&self) -> ThresholdOrigin {
        self.origin
    }

    pub fn admits(&self, support: u64) -> bool {
        support >= self.absolute
    }
}
