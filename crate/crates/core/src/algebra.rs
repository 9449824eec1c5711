//! The ring interface shared by ring elements, matrices and central
//! polynomials.
//!
//! Values carry their own context (ring descriptor, matrix size) so that
//! zeros and units can be built without global state. The `_ref` methods
//! panic when the two operands have different contexts; callers that accept
//! untrusted operands go through the checked functions of each module.

use std::fmt::Debug;

pub trait Ring: Clone + PartialEq + Debug + Send + Sync + Sized {
    type Ctx: Clone + PartialEq + Debug + Send + Sync;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    /// The image of the integer `k` under `Z -> R`.
    fn from_int(ctx: &Self::Ctx, k: i64) -> Self;

    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.negate())
    }

    fn scale_int(&self, k: i64) -> Self {
        Self::from_int(&self.ctx(), k).mul_ref(self)
    }

    /// Sum of an iterator of values in context `ctx`.
    fn sum<'a, I>(ctx: &Self::Ctx, items: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
        Self: 'a,
    {
        items
            .into_iter()
            .fold(Self::zero(ctx), |acc, x| acc.add_ref(x))
    }

    /// Ordered product `a_1 a_2 ... a_k`; the empty product is `1`.
    fn product<'a, I>(ctx: &Self::Ctx, items: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
        Self: 'a,
    {
        items
            .into_iter()
            .fold(Self::one(ctx), |acc, x| acc.mul_ref(x))
    }

    fn commutator(&self, rhs: &Self) -> Self {
        self.mul_ref(rhs).sub_ref(&rhs.mul_ref(self))
    }
}
