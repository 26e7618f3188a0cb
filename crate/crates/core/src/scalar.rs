use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::str::FromStr;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point coordinate type used throughout the pose pipeline: `f32` or `f64`.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + FromStr + Display + Debug + Default + Sum + Send + Sync + 'static
{
    /// Converts an `f64` constant into this scalar type.
    fn lit(value: f64) -> Self {
        Self::from_f64(value).expect("f64 constant representable in scalar type")
    }

    /// Parses a decimal token (plain or scientific notation).
    fn parse_decimal(token: &str) -> Option<Self> {
        token.parse().ok()
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Scalar for T where
    T: Float
        + FromPrimitive
        + ToPrimitive
        + FromStr
        + Display
        + Debug
        + Default
        + Sum
        + Send
        + Sync
        + 'static
{
}
