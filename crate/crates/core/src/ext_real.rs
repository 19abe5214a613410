//! Non-negative extended reals, the common codomain of every function here.

use crate::error::{OlError, Result};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul};

/// A value in `[0, ∞]`.
///
/// Arithmetic is total under the conventions `0 · ∞ = 0`, `c / 0 = ∞` for
/// `c > 0`, `1 / ∞ = 0`, and `0 / 0 = 0`. Negative values and NaN are not
/// representable, so the order is total.
#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExtReal(f64);

impl ExtReal {
    pub const ZERO: ExtReal = ExtReal(0.0);
    pub const ONE: ExtReal = ExtReal(1.0);
    pub const INFINITY: ExtReal = ExtReal(f64::INFINITY);

    /// Wraps a non-negative float, rejecting NaN and negatives.
    pub fn new(x: f64) -> Result<Self> {
        if x.is_nan() || x < 0.0 {
            return Err(OlError::InvalidValue(x));
        }
        // normalize -0.0
        Ok(ExtReal(x + 0.0))
    }

    /// Wraps a float that is non-negative up to round-off. Tiny negative
    /// values from cancellation clamp to zero; anything else panics, which
    /// indicates a bug rather than bad user input.
    pub fn clamped(x: f64) -> Self {
        if x >= 0.0 {
            ExtReal(x)
        } else if x > -1e-9 {
            ExtReal(0.0)
        } else {
            panic!("internal value escaped [0, inf]: {x}");
        }
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    pub fn is_infinite(self) -> bool {
        self.0.is_infinite()
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0.0
    }

    pub fn as_f64(self) -> f64 {
        self.0
    }

    /// Reciprocal with `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(self) -> Self {
        if self.0 == 0.0 {
            ExtReal::INFINITY
        } else if self.0.is_infinite() {
            ExtReal::ZERO
        } else {
            ExtReal(1.0 / self.0)
        }
    }

    /// `self^e` for a finite real exponent, with `0^e = ∞` when `e < 0`,
    /// `x^0 = 1`, and `∞^e = 0` when `e < 0`.
    pub fn powf(self, e: f64) -> Self {
        if e == 0.0 {
            return ExtReal::ONE;
        }
        if self.0 == 0.0 {
            return if e > 0.0 { ExtReal::ZERO } else { ExtReal::INFINITY };
        }
        if self.0.is_infinite() {
            return if e > 0.0 { ExtReal::INFINITY } else { ExtReal::ZERO };
        }
        ExtReal(self.0.powf(e))
    }

    pub fn min(self, other: Self) -> Self {
        if self.0 <= other.0 {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self.0 >= other.0 {
            self
        } else {
            other
        }
    }

    /// Relative distance, `∞` against a finite value is `∞`; two infinities
    /// agree exactly.
    pub fn rel_diff(self, other: Self) -> f64 {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => 0.0,
            (true, false) | (false, true) => f64::INFINITY,
            (false, false) => {
                let scale = self.0.abs().max(other.0.abs()).max(1e-300);
                (self.0 - other.0).abs() / scale
            }
        }
    }
}

impl Eq for ExtReal {}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl Add for ExtReal {
    type Output = ExtReal;
    fn add(self, rhs: Self) -> Self {
        ExtReal(self.0 + rhs.0)
    }
}

impl Mul for ExtReal {
    type Output = ExtReal;
    fn mul(self, rhs: Self) -> Self {
        // 0 * inf = 0, the integrand-product convention
        if self.0 == 0.0 || rhs.0 == 0.0 {
            ExtReal(0.0)
        } else {
            ExtReal(self.0 * rhs.0)
        }
    }
}

impl Div for ExtReal {
    type Output = ExtReal;
    fn div(self, rhs: Self) -> Self {
        if self.0 == 0.0 {
            // 0/x = 0 for every x, including 0/0 = 0
            ExtReal(0.0)
        } else if rhs.0 == 0.0 {
            ExtReal::INFINITY
        } else if rhs.0.is_infinite() {
            if self.0.is_infinite() {
                // inf/inf: keep total; dominated by numerator
                ExtReal::INFINITY
            } else {
                ExtReal(0.0)
            }
        } else {
            ExtReal(self.0 / rhs.0)
        }
    }
}

impl fmt::Debug for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl From<ExtReal> for f64 {
    fn from(x: ExtReal) -> f64 {
        x.0
    }
}
