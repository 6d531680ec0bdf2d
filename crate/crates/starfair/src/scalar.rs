//! Scalar abstraction for the numeric core.

use num_traits::{Float as NumFloat, FloatConst, FromPrimitive, NumAssign};

/// Floating-point scalar the math core is generic over: `f32` or `f64`.
pub trait Float:
    NumFloat
    + FloatConst
    + FromPrimitive
    + NumAssign
    + Default
    + std::fmt::Debug
    + std::fmt::Display
    + std::iter::Sum
    + Send
    + Sync
    + 'static
{
    /// Cast an `f64` constant into this scalar type.
    #[inline]
    fn cast(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 constant")
    }
}

impl Float for f32 {}
impl Float for f64 {}
