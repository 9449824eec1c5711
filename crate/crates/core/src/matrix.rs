//! Square matrices over any [`Ring`].

use std::fmt;

use thiserror::Error;

use crate::algebra::Ring;
use crate::linalg;
use crate::ring::{center_contains, RingElement};
use crate::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {left}x{left} vs {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrices are over different rings")]
    RingMismatch,
    #[error("matrix must have at least one row")]
    Empty,
    #[error("row {row} has {len} entries, expected {n}")]
    Ragged { row: usize, len: usize, n: usize },
    #[error("conjugating matrix has a non-central entry at ({row}, {col})")]
    NonCentral { row: usize, col: usize },
    #[error("conjugating matrix entry ({row}, {col}) is central but not a scalar; only scalar matrices are inverted")]
    NonScalar { row: usize, col: usize },
    #[error("conjugating matrix is not invertible")]
    NotInvertible,
}

/// Ring and size of a matrix. This is the context of `Matrix` as a ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixShape<C> {
    pub ring: C,
    pub n: usize,
}

/// An `n x n` matrix, entries stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<R: Ring> {
    ring: R::Ctx,
    n: usize,
    entries: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    /// Builds a matrix from a function of the (0-based) row and column.
    pub fn from_fn(ring: &R::Ctx, n: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        assert!(n > 0, "matrices have at least one row");
        let entries: Vec<R> = (0..n * n).map(|k| f(k / n, k % n)).collect();
        debug_assert!(entries.iter().all(|e| &e.ctx() == ring));
        Self {
            ring: ring.clone(),
            n,
            entries,
        }
    }

    pub fn from_rows(ring: &R::Ctx, rows: Vec<Vec<R>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        if n == 0 {
            return Err(MatrixError::Empty);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(MatrixError::Ragged {
                    row: i,
                    len: row.len(),
                    n,
                });
            }
            for e in row {
                if &e.ctx() != ring {
                    return Err(MatrixError::RingMismatch);
                }
                entries.push(e);
            }
        }
        Ok(Self {
            ring: ring.clone(),
            n,
            entries,
        })
    }

    pub fn zero(ring: &R::Ctx, n: usize) -> Self {
        Self::from_fn(ring, n, |_, _| R::zero(ring))
    }

    pub fn identity(ring: &R::Ctx, n: usize) -> Self {
        Self::scalar(ring, n, &R::one(ring))
    }

    /// `c * I`.
    pub fn scalar(ring: &R::Ctx, n: usize, c: &R) -> Self {
        Self::from_fn(ring, n, |i, j| if i == j { c.clone() } else { R::zero(ring) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &R::Ctx {
        &self.ring
    }

    pub fn shape(&self) -> MatrixShape<R::Ctx> {
        MatrixShape {
            ring: self.ring.clone(),
            n: self.n,
        }
    }

    /// Entry in row `i`, column `j` (0-based).
    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[R]> {
        self.entries.chunks(self.n)
    }

    pub fn map<T: Ring>(&self, ring: &T::Ctx, f: impl Fn(&R) -> T) -> Matrix<T> {
        Matrix {
            ring: ring.clone(),
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(R::is_zero)
    }

    fn check(&self, other: &Self) -> Result<(), MatrixError> {
        if self.n != other.n {
            return Err(MatrixError::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        if self.ring != other.ring {
            return Err(MatrixError::RingMismatch);
        }
        Ok(())
    }

    pub fn mat_add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn mat_sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check(other)?;
        Ok(self.add_unchecked(&other.negate_entries()))
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// `c * A`, each entry multiplied by `c` on the left.
    pub fn scale_left(&self, c: &R) -> Result<Self, MatrixError> {
        if c.ctx() != self.ring {
            return Err(MatrixError::RingMismatch);
        }
        Ok(self.map(&self.ring, |e| c.mul_ref(e)))
    }

    /// `A * c`, each entry multiplied by `c` on the right.
    pub fn scale_right(&self, c: &R) -> Result<Self, MatrixError> {
        if c.ctx() != self.ring {
            return Err(MatrixError::RingMismatch);
        }
        Ok(self.map(&self.ring, |e| e.mul_ref(c)))
    }

    /// Sum of the diagonal entries.
    pub fn mat_trace(&self) -> R {
        R::sum(&self.ring, (0..self.n).map(|i| self.get(i, i)))
    }

    /// `A^k` by repeated multiplication; `A^0 = I`.
    pub fn mat_power(&self, k: usize) -> Self {
        let mut acc = Self::identity(&self.ring, self.n);
        for _ in 0..k {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// `[A^0, A^1, ..., A^k]`.
    pub fn powers(&self, k: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(k + 1);
        out.push(Self::identity(&self.ring, self.n));
        for i in 0..k {
            let next = out[i].mul_unchecked(self);
            out.push(next);
        }
        out
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        Self {
            ring: self.ring.clone(),
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.n;
        Self::from_fn(&self.ring, n, |i, j| {
            (0..n).fold(R::zero(&self.ring), |acc, k| {
                acc.add_ref(&self.get(i, k).mul_ref(other.get(k, j)))
            })
        })
    }

    fn negate_entries(&self) -> Self {
        self.map(&self.ring, R::negate)
    }

    fn assert_compatible(&self, other: &Self) {
        if let Err(e) = self.check(other) {
            panic!("{e}");
        }
    }
}

impl<R: Ring> Ring for Matrix<R> {
    type Ctx = MatrixShape<R::Ctx>;

    fn ctx(&self) -> Self::Ctx {
        self.shape()
    }

    fn zero(ctx: &Self::Ctx) -> Self {
        Matrix::zero(&ctx.ring, ctx.n)
    }

    fn one(ctx: &Self::Ctx) -> Self {
        Matrix::identity(&ctx.ring, ctx.n)
    }

    fn from_int(ctx: &Self::Ctx, k: i64) -> Self {
        Matrix::scalar(&ctx.ring, ctx.n, &R::from_int(&ctx.ring, k))
    }

    fn is_zero(&self) -> bool {
        Matrix::is_zero(self)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.assert_compatible(rhs);
        self.add_unchecked(rhs)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.assert_compatible(rhs);
        self.mul_unchecked(rhs)
    }

    fn negate(&self) -> Self {
        self.negate_entries()
    }

    fn scale_int(&self, k: i64) -> Self {
        self.map(&self.ring, |e| e.scale_int(k))
    }
}

impl<S: Scalar> Matrix<RingElement<S>> {
    /// `G A G^{-1}` for an invertible `G` with scalar entries.
    ///
    /// Entries of `G` must be central; of the central elements only scalars
    /// are accepted, so that `G^{-1}` can be computed over the scalar field.
    pub fn conjugate(&self, g: &Self) -> Result<Self, MatrixError> {
        self.check(g)?;
        let g_inv = g.central_inverse()?;
        Ok(g.mul_unchecked(self).mul_unchecked(&g_inv))
    }

    /// Inverse of a matrix with scalar entries.
    pub fn central_inverse(&self) -> Result<Self, MatrixError> {
        let n = self.n;
        let mut dense = vec![Vec::with_capacity(n); n];
        for i in 0..n {
            for j in 0..n {
                let e = self.get(i, j);
                if !center_contains(e) {
                    return Err(MatrixError::NonCentral { row: i, col: j });
                }
                let c = e.as_scalar().ok_or(MatrixError::NonScalar { row: i, col: j })?;
                dense[i].push(c);
            }
        }
        let inv = linalg::invert(&dense).ok_or(MatrixError::NotInvertible)?;
        Ok(Self::from_fn(&self.ring, n, |i, j| {
            RingElement::scalar(&self.ring, inv[i][j].clone())
        }))
    }

    /// Matrix with scalar entries given as integers.
    pub fn from_integers(ring: &crate::RingDescriptor, rows: &[Vec<i64>]) -> Result<Self, MatrixError> {
        Self::from_rows(
            ring,
            rows.iter()
                .map(|r| r.iter().map(|&k| RingElement::integer(ring, k)).collect())
                .collect(),
        )
    }

    /// Largest monomial degree among the entries.
    pub fn max_degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(RingElement::degree).max()
    }

    pub fn term_count(&self) -> usize {
        self.entries.iter().map(RingElement::term_count).sum()
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            f.write_str("[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Element, RingDescriptor};

    fn gen(r: &RingDescriptor, i: usize) -> Element {
        Element::generator(r, i).unwrap()
    }

    fn generic(r: &RingDescriptor, n: usize) -> Matrix<Element> {
        Matrix::from_fn(r, n, |i, j| gen(r, i * n + j + 1))
    }

    #[test]
    fn identity_is_a_unit() {
        let r = RingDescriptor::free(9);
        let a = generic(&r, 3);
        let i = Matrix::identity(&r, 3);
        assert_eq!(i.mat_mul(&a).unwrap(), a);
        assert_eq!(a.mat_mul(&i).unwrap(), a);
    }

    #[test]
    fn left_and_right_scaling_differ() {
        let r = RingDescriptor::free(2);
        let a = Matrix::from_rows(&r, vec![vec![gen(&r, 1)]]).unwrap();
        let c = gen(&r, 2);
        assert_ne!(a.scale_left(&c).unwrap(), a.scale_right(&c).unwrap());
    }

    #[test]
    fn trace_and_powers() {
        let q = RingDescriptor::rational();
        assert_eq!(Matrix::<Element>::identity(&q, 3).mat_trace(), Element::integer(&q, 3));
        let r = RingDescriptor::free(4);
        assert_eq!(generic(&r, 2).mat_trace(), &gen(&r, 1) + &gen(&r, 4));

        let nil = Matrix::<Element>::from_integers(&q, &[vec![0, 1], vec![0, 0]]).unwrap();
        assert_eq!(nil.mat_power(0), Matrix::identity(&q, 2));
        assert_eq!(nil.mat_power(1), nil);
        assert!(nil.mat_power(2).is_zero());
    }

    #[test]
    fn trace_of_products_is_not_cyclic() {
        // A = x1 E12, B = x2 E21: tr(AB) = x1 x2, tr(BA) = x2 x1
        let r = RingDescriptor::free(2);
        let z = Element::zero(&r);
        let a = Matrix::from_rows(&r, vec![vec![z.clone(), gen(&r, 1)], vec![z.clone(), z.clone()]]).unwrap();
        let b = Matrix::from_rows(&r, vec![vec![z.clone(), z.clone()], vec![gen(&r, 2), z]]).unwrap();
        let diff = &a.mat_mul(&b).unwrap().mat_trace() - &b.mat_mul(&a).unwrap().mat_trace();
        assert_eq!(diff.to_string(), "x1*x2 - x2*x1");
    }

    #[test]
    fn mismatches_are_errors() {
        let r = RingDescriptor::free(4);
        assert_eq!(
            generic(&r, 2).mat_mul(&Matrix::identity(&r, 1)),
            Err(MatrixError::DimensionMismatch { left: 2, right: 1 })
        );
        let other = RingDescriptor::free(5);
        assert_eq!(
            generic(&r, 2).mat_add(&Matrix::identity(&other, 2)),
            Err(MatrixError::RingMismatch)
        );
        assert_eq!(
            Matrix::<Element>::from_rows(&r, vec![vec![gen(&r, 1)], vec![]]),
            Err(MatrixError::Ragged { row: 0, len: 1, n: 2 })
        );
    }

    #[test]
    fn conjugation() {
        let r = RingDescriptor::free(4);
        let a = generic(&r, 2);
        assert_eq!(a.conjugate(&Matrix::identity(&r, 2)).unwrap(), a);

        let p = Matrix::<Element>::from_integers(&r, &[vec![0, 1], vec![1, 0]]).unwrap();
        let c = a.conjugate(&p).unwrap();
        assert_eq!(c.get(0, 0), a.get(1, 1));
        assert_eq!(c.get(0, 1), a.get(1, 0));

        let not_central = Matrix::from_rows(&r, vec![vec![gen(&r, 1), Element::zero(&r)], vec![Element::zero(&r), Element::one(&r)]]).unwrap();
        assert_eq!(a.conjugate(&not_central), Err(MatrixError::NonCentral { row: 0, col: 0 }));
        let singular = Matrix::<Element>::from_integers(&r, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(a.conjugate(&singular), Err(MatrixError::NotInvertible));

        let g = RingDescriptor::grassmann(4);
        let v12 = &gen(&g, 1) * &gen(&g, 2);
        let central = Matrix::from_rows(&g, vec![vec![v12, Element::zero(&g)], vec![Element::zero(&g), Element::one(&g)]]).unwrap();
        assert_eq!(
            Matrix::identity(&g, 2).conjugate(&central),
            Err(MatrixError::NonScalar { row: 0, col: 0 })
        );
    }

    #[test]
    fn rational_conjugation_preserves_grassmann_trace() {
        let r = RingDescriptor::grassmann(4);
        let a = Matrix::from_fn(&r, 2, |i, j| {
            let k = i * 2 + j + 1;
            &gen(&r, k) + &(&gen(&r, 1 + k % 4) * &gen(&r, 1 + (k + 1) % 4))
        });
        let g = Matrix::<Element>::from_integers(&r, &[vec![2, 1], vec![1, 1]]).unwrap();
        assert_eq!(a.conjugate(&g).unwrap().mat_trace(), a.mat_trace());
    }
}
