//! Scalar abstraction shared by every numerical routine in the crate.
//!
//! All kernels, factorizations and generators are written once against
//! [`Real`] and instantiated for `f32`, `f64` and the double-double
//! [`DoubleDouble`](crate::dd::DoubleDouble).

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point type usable by the solver stack.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Unit roundoff of the arithmetic (half the spacing of numbers near 1).
    fn unit_roundoff() -> Self;

    /// Converts an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    /// Converts a count or index.
    #[inline]
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("integer representable in scalar type")
    }

    /// Lossy conversion to `f64` for reporting.
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Threshold above which backward recurrences are rescaled.
    #[inline]
    fn rescale_threshold() -> Self {
        Self::max_value().sqrt()
    }
}

impl Real for f32 {
    fn unit_roundoff() -> Self {
        f32::EPSILON * 0.5
    }
}

impl Real for f64 {
    fn unit_roundoff() -> Self {
        f64::EPSILON * 0.5
    }
}
