//! Scalar abstraction: the whole crate is generic over the underlying
//! real floating-point type.

use core::fmt::Debug;
use num_traits::{Float, FromPrimitive, NumAssign};

/// Real scalar the library is generic over: `f32` or `f64`.
pub trait Real: Float + FromPrimitive + NumAssign + Debug + Send + Sync + 'static {}

impl<T> Real for T where T: Float + FromPrimitive + NumAssign + Debug + Send + Sync + 'static {}

/// Shorthand for converting an `f64` constant into the scalar type.
#[inline]
pub(crate) fn tf<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("constant representable in scalar type")
}

/// Convert a usize index into the scalar type.
#[inline]
pub(crate) fn tu<T: Real>(n: usize) -> T {
    T::from_usize(n).expect("index representable in scalar type")
}
