//! Extended edge weights: exact non-negative integers plus an explicit infinity.
//!
//! Finite weights are raw integer units. The meaning of one unit is fixed by
//! the `scale` of the instance file the weight came from (a weight of `1.5`
//! at scale `10` is stored as `15`). Arithmetic never touches the scale.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("weight overflow: {0} + {1} exceeds u64")]
pub struct WeightOverflow(pub u64, pub u64);

/// A non-negative exact weight or `Infinite`.
///
/// The derived order puts every `Finite` value below `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtWeight {
    Finite(u64),
    Infinite,
}

impl ExtWeight {
    pub const ZERO: ExtWeight = ExtWeight::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, ExtWeight::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtWeight::Finite(w) => Some(w),
            ExtWeight::Infinite => None,
        }
    }

    /// Exact addition. Anything plus `Infinite` is `Infinite`.
    pub fn checked_add(self, other: ExtWeight) -> Result<ExtWeight, WeightOverflow> {
        match (self, other) {
            (ExtWeight::Finite(a), ExtWeight::Finite(b)) => a
                .checked_add(b)
                .map(ExtWeight::Finite)
                .ok_or(WeightOverflow(a, b)),
            _ => Ok(ExtWeight::Infinite),
        }
    }

    /// Exact sum of an iterator of weights.
    pub fn sum<I>(weights: I) -> Result<ExtWeight, WeightOverflow>
    where
        I: IntoIterator<Item = ExtWeight>,
    {
        weights
            .into_iter()
            .try_fold(ExtWeight::ZERO, ExtWeight::checked_add)
    }
}

impl Default for ExtWeight {
    fn default() -> Self {
        ExtWeight::ZERO
    }
}

impl From<u64> for ExtWeight {
    fn from(w: u64) -> Self {
        ExtWeight::Finite(w)
    }
}

impl PartialEq<u64> for ExtWeight {
    fn eq(&self, other: &u64) -> bool {
        *self == ExtWeight::Finite(*other)
    }
}

impl PartialOrd<u64> for ExtWeight {
    fn partial_cmp(&self, other: &u64) -> Option<Ordering> {
        Some(self.cmp(&ExtWeight::Finite(*other)))
    }
}

/// Raw units; use [`crate::io::format_weight`] for scaled output.
impl fmt::Display for ExtWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtWeight::Finite(w) => write!(f, "{w}"),
            ExtWeight::Infinite => f.write_str("inf"),
        }
    }
}
