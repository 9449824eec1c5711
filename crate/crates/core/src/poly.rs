//! Polynomials in a central indeterminate `x`.
//!
//! `x` is never a ring generator: a polynomial is just its coefficient
//! sequence, and multiplication convolves coefficients without moving `x`
//! past anything. With matrix coefficients this is `M_n(R)[x]`, which is
//! identified with `M_n(R[x])` through [`CentralPoly::to_entrywise`].

use std::fmt;

use crate::algebra::Ring;
use crate::matrix::{Matrix, MatrixError};

/// `c_0 + c_1 x + ... + c_d x^d` with trailing zero coefficients stripped.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<R: Ring> {
    ctx: R::Ctx,
    coeffs: Vec<R>,
}

/// A polynomial with square matrix coefficients.
pub type CentralPoly<R> = Poly<Matrix<R>>;

impl<R: Ring> Poly<R> {
    pub fn new(ctx: &R::Ctx, mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(R::is_zero) {
            coeffs.pop();
        }
        Self {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    pub fn constant(c: R) -> Self {
        let ctx = c.ctx();
        Self::new(&ctx, vec![c])
    }

    /// `c x^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let ctx = c.ctx();
        let mut coeffs = vec![R::zero(&ctx); k];
        coeffs.push(c);
        Self::new(&ctx, coeffs)
    }

    pub fn coeff_ctx(&self) -> &R::Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| R::zero(&self.ctx))
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `x = 0`.
    pub fn constant_term(&self) -> R {
        self.coeff(0)
    }

    /// `sum_k a^k c_k`: substitute `a` for `x`, powers placed on the left.
    pub fn eval_left(&self, a: &R) -> R {
        let mut acc = R::zero(&self.ctx);
        let mut pow = R::one(&self.ctx);
        for c in &self.coeffs {
            acc = acc.add_ref(&pow.mul_ref(c));
            pow = pow.mul_ref(a);
        }
        acc
    }

    /// `sum_k c_k a^k`: substitute `a` for `x`, powers placed on the right.
    pub fn eval_right(&self, a: &R) -> R {
        let mut acc = R::zero(&self.ctx);
        let mut pow = R::one(&self.ctx);
        for c in &self.coeffs {
            acc = acc.add_ref(&c.mul_ref(&pow));
            pow = pow.mul_ref(a);
        }
        acc
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| f(&self.coeff(k), &other.coeff(k))).collect();
        Self::new(&self.ctx, coeffs)
    }

    fn convolve(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(&self.ctx, Vec::new());
        }
        let mut out = vec![R::zero(&self.ctx); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Self::new(&self.ctx, out)
    }
}

impl<R: Ring> Ring for Poly<R> {
    type Ctx = R::Ctx;

    fn ctx(&self) -> R::Ctx {
        self.ctx.clone()
    }

    fn zero(ctx: &R::Ctx) -> Self {
        Self::new(ctx, Vec::new())
    }

    fn one(ctx: &R::Ctx) -> Self {
        Self::new(ctx, vec![R::one(ctx)])
    }

    fn from_int(ctx: &R::Ctx, k: i64) -> Self {
        Self::new(ctx, vec![R::from_int(ctx, k)])
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        assert!(self.ctx == rhs.ctx, "polynomial coefficient rings differ");
        self.zip_with(rhs, R::add_ref)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        assert!(self.ctx == rhs.ctx, "polynomial coefficient rings differ");
        self.convolve(rhs)
    }

    fn negate(&self) -> Self {
        Self::new(&self.ctx, self.coeffs.iter().map(R::negate).collect())
    }

    fn scale_int(&self, k: i64) -> Self {
        Self::new(&self.ctx, self.coeffs.iter().map(|c| c.scale_int(k)).collect())
    }
}

impl<R: Ring> CentralPoly<R> {
    /// `xI - A`.
    pub fn x_i_minus(a: &Matrix<R>) -> Self {
        let shape = a.shape();
        Self::new(&shape, vec![a.negate(), Matrix::one(&shape)])
    }

    /// Product of two matrix polynomials; `x` commutes with every coefficient.
    pub fn cpoly_mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.ctx.n != other.ctx.n {
            return Err(MatrixError::DimensionMismatch {
                left: self.ctx.n,
                right: other.ctx.n,
            });
        }
        if self.ctx.ring != other.ctx.ring {
            return Err(MatrixError::RingMismatch);
        }
        Ok(self.convolve(other))
    }

    /// The same object viewed as a matrix whose entries are polynomials.
    pub fn to_entrywise(&self) -> Matrix<Poly<R>> {
        let shape = &self.ctx;
        Matrix::from_fn(&shape.ring, shape.n, |i, j| {
            Poly::new(
                &shape.ring,
                self.coeffs.iter().map(|m| m.get(i, j).clone()).collect(),
            )
        })
    }

    /// Inverse of [`CentralPoly::to_entrywise`].
    pub fn from_entrywise(m: &Matrix<Poly<R>>) -> Self {
        let n = m.n();
        let ring = m.ring().clone();
        let len = m.entries().iter().map(|p| p.coeffs.len()).max().unwrap_or(0);
        let coeffs = (0..len)
            .map(|k| Matrix::from_fn(&ring, n, |i, j| m.get(i, j).coeff(k)))
            .collect();
        Self::new(&crate::matrix::MatrixShape { ring, n }, coeffs)
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Element, RingDescriptor};

    fn int_matrix(rows: &[Vec<i64>]) -> Matrix<Element> {
        Matrix::from_integers(&RingDescriptor::rational(), rows).unwrap()
    }

    #[test]
    fn x_minus_zero() {
        let q = RingDescriptor::rational();
        let p = CentralPoly::x_i_minus(&Matrix::<Element>::zero(&q, 2));
        assert_eq!(p.degree(), Some(1));
        assert!(p.coeff(0).is_zero());
        assert_eq!(p.coeff(1), Matrix::identity(&q, 2));
    }

    #[test]
    fn x_minus_scalar_and_evaluation_at_zero() {
        let r = RingDescriptor::free(1);
        let a = Matrix::from_rows(&r, vec![vec![Element::generator(&r, 1).unwrap()]]).unwrap();
        let p = CentralPoly::x_i_minus(&a);
        assert_eq!(p.constant_term(), a.negate());
        assert_eq!(p.to_entrywise().get(0, 0).to_string(), "(-x1) + (1)*x");
    }

    #[test]
    fn difference_of_squares_over_rationals() {
        let a = int_matrix(&[vec![1, 2], vec![3, 4]]);
        let shape = a.shape();
        let minus = CentralPoly::x_i_minus(&a);
        let plus = Poly::new(&shape, vec![a.clone(), Matrix::one(&shape)]);
        let prod = minus.cpoly_mul(&plus).unwrap();
        let expected = Poly::new(&shape, vec![a.mat_power(2).negate(), Matrix::zero(&shape.ring, 2), Matrix::one(&shape)]);
        assert_eq!(prod, expected);
        assert_eq!(prod.cpoly_mul(&Poly::one(&shape)).unwrap(), prod);
    }

    #[test]
    fn entrywise_round_trip() {
        let a = int_matrix(&[vec![1, 0], vec![5, -2]]);
        let p = CentralPoly::x_i_minus(&a);
        assert_eq!(CentralPoly::from_entrywise(&p.to_entrywise()), p);
    }

    #[test]
    fn substitution_kills_linear_factor() {
        // (xI - A) Q(x) vanishes under left substitution x -> A
        let r = RingDescriptor::free(4);
        let a = Matrix::from_fn(&r, 2, |i, j| Element::generator(&r, 2 * i + j + 1).unwrap());
        let shape = a.shape();
        let q = Poly::new(&shape, vec![a.mat_power(2), a.clone(), Matrix::one(&shape)]);
        let lhs = CentralPoly::x_i_minus(&a).cpoly_mul(&q).unwrap();
        assert!(lhs.eval_left(&a).is_zero());
        let rhs = q.cpoly_mul(&CentralPoly::x_i_minus(&a)).unwrap();
        assert!(rhs.eval_right(&a).is_zero());
    }
}
