//! Scalar abstraction for the exact arithmetic layers.
//!
//! Everything downstream only needs field arithmetic, sign information and
//! conversion from machine integers, so the bound is assembled from
//! `num-traits`. The crate instantiates it at [`crate::Rat`]; `f64` also
//! satisfies the bound for quick numeric experiments, with no exactness
//! guarantees.

use num_traits::{FromPrimitive, Num, Signed};
use std::fmt::{Debug, Display};

/// Field scalar: exact rationals in production, any `num-traits` field-like
/// type in principle.
pub trait Scalar: Num + Signed + FromPrimitive + Clone + Debug + Display + 'static {
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("scalar conversion from i64")
    }
}

impl<T> Scalar for T where T: Num + Signed + FromPrimitive + Clone + Debug + Display + 'static {}
