//! Exact symbolic computation of preadjoints, symmetric determinants and
//! symmetric characteristic polynomials of square matrices over
//! noncommutative rings, together with machine checks of the Cayley-Hamilton
//! identities they satisfy.
//!
//! The algebra is generic over an exact scalar field (see [`Scalar`]); the
//! aliases at the crate root fix it to arbitrary-precision rationals.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod charpoly;
pub mod ideal;
pub mod job;
pub mod linalg;
pub mod matrix;
pub mod oracle;
pub mod parse;
pub mod perm;
pub mod poly;
pub mod random;
pub mod ring;
pub mod scalar;
pub mod verify;
pub mod word;

pub use algebra::Ring;
pub use ring::{RingDescriptor, RingError, RingKind};
pub use scalar::Scalar;
pub use word::Word;

/// Arbitrary-precision rational scalars.
pub type Rational = num_rational::BigRational;
/// Ring element with rational coefficients.
pub type Element = ring::RingElement<Rational>;
/// Square matrix over [`Element`].
pub type Matrix = matrix::Matrix<Element>;
