//! Coefficient fields.
//!
//! Every ring in this crate is an algebra over a field of exact scalars. The
//! field is a type parameter so the same arithmetic can run over
//! arbitrary-precision rationals (the default) or a fixed-width ratio type.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, Signed};

/// An exact field of characteristic zero.
///
/// Implementations must be exact: `a + b - b == a` for every pair of values.
/// Floating point types satisfy the trait bounds but not this contract and
/// must not be used.
pub trait Scalar:
    Clone + PartialEq + Debug + Display + Num + Signed + FromPrimitive + Send + Sync + 'static
{
    fn from_int(k: i64) -> Self {
        Self::from_i64(k).expect("every i64 is representable")
    }
}

impl<T> Scalar for T where
    T: Clone + PartialEq + Debug + Display + Num + Signed + FromPrimitive + Send + Sync + 'static
{
}

pub(crate) fn factorial<S: Scalar>(n: usize) -> S {
    (1..=n).fold(S::one(), |acc, k| acc * S::from_int(k as i64))
}
