use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use super::GraphError;

/// A vertex weight: a finite nonnegative real or `Infinite`.
///
/// `Infinite` marks vertices that may never be placed in a feedback set
/// (the `in` halves of split network vertices).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Weight {
    Finite(f64),
    Infinite,
}

impl Weight {
    pub const ZERO: Weight = Weight::Finite(0.0);

    /// Validates a finite weight. Negative, NaN and infinite floats are rejected.
    pub fn new(value: f64) -> Result<Self, GraphError> {
        if value.is_finite() && value >= 0.0 {
            Ok(Weight::Finite(value))
        } else {
            Err(GraphError::InvalidWeight(value))
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Weight::Finite(_))
    }

    /// The weight as an `f64`, with `Infinite` mapped to `f64::INFINITY`.
    pub fn value(self) -> f64 {
        match self {
            Weight::Finite(v) => v,
            Weight::Infinite => f64::INFINITY,
        }
    }

    pub fn finite_value(self) -> Option<f64> {
        match self {
            Weight::Finite(v) => Some(v),
            Weight::Infinite => None,
        }
    }

    /// Subtracts a charge, clamping at zero. `Infinite` absorbs the charge.
    pub fn discharge(self, amount: f64) -> Weight {
        match self {
            Weight::Finite(v) => {
                let rest = v - amount;
                debug_assert!(
                    rest >= -1e-9 * v.max(1.0),
                    "weight {v} overdrawn by charge {amount}"
                );
                Weight::Finite(rest.max(0.0))
            }
            Weight::Infinite => Weight::Infinite,
        }
    }
}

impl Default for Weight {
    fn default() -> Self {
        Weight::ZERO
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Weight::Finite(a), Weight::Finite(b)) => a.partial_cmp(b),
            (Weight::Finite(_), Weight::Infinite) => Some(Ordering::Less),
            (Weight::Infinite, Weight::Finite(_)) => Some(Ordering::Greater),
            (Weight::Infinite, Weight::Infinite) => Some(Ordering::Equal),
        }
    }
}

impl Add for Weight {
    type Output = Weight;

    fn add(self, rhs: Weight) -> Weight {
        match (self, rhs) {
            (Weight::Finite(a), Weight::Finite(b)) => Weight::Finite(a + b),
            _ => Weight::Infinite,
        }
    }
}

impl Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::ZERO, Add::add)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Finite(v) => write!(f, "{v}"),
            Weight::Infinite => f.write_str("inf"),
        }
    }
}

/// Compares the ratios `w1/d1` and `w2/d2` by cross-multiplication.
///
/// Degrees must be positive. An `Infinite` weight loses against every finite
/// one; two infinite ratios compare equal.
pub fn cmp_ratio(w1: Weight, d1: usize, w2: Weight, d2: usize) -> Ordering {
    match (w1, w2) {
        (Weight::Finite(a), Weight::Finite(b)) => (a * d2 as f64).total_cmp(&(b * d1 as f64)),
        (Weight::Finite(_), Weight::Infinite) => Ordering::Less,
        (Weight::Infinite, Weight::Finite(_)) => Ordering::Greater,
        (Weight::Infinite, Weight::Infinite) => Ordering::Equal,
    }
}
