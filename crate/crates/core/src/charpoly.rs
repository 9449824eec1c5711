//! Preadjoint, left/right/symmetric determinants and the symmetric
//! characteristic polynomial, for matrices over any (noncommutative) ring.
//!
//! The preadjoint `A* = [a*_{r,s}]` of an `n x n` matrix is
//!
//! ```text
//! a*_{r,s} = sum over tau, rho in S_n with tau(s) = s, rho(s) = r of
//!            sgn(rho) * prod_{k != s, in increasing k} a_{tau(k), rho(tau(k))}
//! ```
//!
//! The factor order is the order of `k`; nothing here assumes entries
//! commute. Over a commutative ring `A* = (n-1)! adj(A)`.
//!
//! The symmetric characteristic polynomial `p(x) = tr((xI-A)*(xI-A))` is
//! obtained by running the same preadjoint code on the matrix `xI - A`
//! whose entries are polynomials in the central indeterminate `x`.

use crate::algebra::Ring;
use crate::matrix::{Matrix, MatrixShape};
use crate::perm::{factorial, Permutation};
use crate::poly::{CentralPoly, Poly};
use crate::ring::{CommutatorTest, RingElement};
use crate::Scalar;

/// Preadjoint together with the number of `(tau, rho)` pairs summed.
#[derive(Clone, Debug)]
pub struct PreadjointTerms<R: Ring> {
    pub matrix: Matrix<R>,
    /// Number of pairs summed in each column; always `(n-1)! * n!`.
    pub pairs_per_column: usize,
}

pub fn preadjoint<R: Ring>(a: &Matrix<R>) -> Matrix<R> {
    preadjoint_terms(a).matrix
}

pub fn preadjoint_terms<R: Ring>(a: &Matrix<R>) -> PreadjointTerms<R> {
    let n = a.n();
    let ring = a.ring();
    let perms = Permutation::all(n);
    let mut columns: Vec<Vec<R>> = Vec::with_capacity(n);
    let mut pairs_per_column = 0;
    for s in 0..n {
        let taus: Vec<&Permutation> = perms.iter().filter(|t| t.apply(s) == s).collect();
        let mut column = Vec::with_capacity(n);
        let mut pairs = 0;
        for r in 0..n {
            let mut entry = R::zero(ring);
            for rho in perms.iter().filter(|p| p.apply(s) == r) {
                let sign = rho.sign();
                for tau in &taus {
                    let mut term = R::one(ring);
                    for k in (0..n).filter(|&k| k != s) {
                        let row = tau.apply(k);
                        term = term.mul_ref(a.get(row, rho.apply(row)));
                    }
                    entry = if sign > 0 {
                        entry.add_ref(&term)
                    } else {
                        entry.sub_ref(&term)
                    };
                    pairs += 1;
                }
            }
            column.push(entry);
        }
        assert_eq!(
            pairs,
            factorial(n - 1) * factorial(n),
            "preadjoint column enumerated the wrong number of permutation pairs"
        );
        pairs_per_column = pairs;
        columns.push(column);
    }
    PreadjointTerms {
        matrix: Matrix::from_fn(ring, n, |r, s| columns[s][r].clone()),
        pairs_per_column,
    }
}

/// `tr(A* A)`.
pub fn ldet<R: Ring>(a: &Matrix<R>) -> R {
    preadjoint(a).mul_ref(a).mat_trace()
}

/// `tr(A A*)`.
pub fn rdet<R: Ring>(a: &Matrix<R>) -> R {
    a.mul_ref(&preadjoint(a)).mat_trace()
}

/// Symmetric determinant, the common value of `ldet` and `rdet`; computed as
/// `ldet`.
pub fn sdet<R: Ring>(a: &Matrix<R>) -> R {
    ldet(a)
}

/// `xI - A` as a matrix with polynomial entries.
fn x_i_minus_entrywise<R: Ring>(a: &Matrix<R>) -> Matrix<Poly<R>> {
    CentralPoly::x_i_minus(a).to_entrywise()
}

/// Coefficients `lambda_0, ..., lambda_n` of `p(x) = sdet(xI - A)`.
pub fn symmetric_charpoly<R: Ring>(a: &Matrix<R>) -> Vec<R> {
    let m = x_i_minus_entrywise(a);
    let p = sdet(&m);
    let lambda: Vec<R> = (0..=a.n()).map(|k| p.coeff(k)).collect();
    assert_leading(a, &lambda);
    lambda
}

fn assert_leading<R: Ring>(a: &Matrix<R>, lambda: &[R]) {
    let expected = R::from_int(a.ring(), factorial(a.n()) as i64);
    assert!(
        lambda[a.n()] == expected,
        "leading coefficient of the symmetric characteristic polynomial is not n!"
    );
}

/// The data of the decomposition
///
/// ```text
/// n (xI-A)(xI-A)* = p(x) I + C_0 + C_1 x + ... + C_n x^n
/// n (xI-A)*(xI-A) = p(x) I + D_0 + D_1 x + ... + D_n x^n
/// ```
#[derive(Clone, Debug, PartialEq)]
pub struct CharPolyResult<R: Ring> {
    pub lambda: Vec<R>,
    pub c: Vec<Matrix<R>>,
    pub d: Vec<Matrix<R>>,
}

pub fn decompose_thm22<R: Ring>(a: &Matrix<R>) -> CharPolyResult<R> {
    let n = a.n();
    let m = x_i_minus_entrywise(a);
    let m_star = preadjoint(&m);
    let left_product = m_star.mul_ref(&m);
    let p = left_product.mat_trace();
    let lambda: Vec<R> = (0..=n).map(|k| p.coeff(k)).collect();
    assert_leading(a, &lambda);

    let right = CentralPoly::from_entrywise(&m.mul_ref(&m_star).scale_int(n as i64));
    let left = CentralPoly::from_entrywise(&left_product.scale_int(n as i64));
    // products of degree-1 polynomials with preadjoint entries of degree n-1
    assert!(right.degree().is_some_and(|d| d <= n));
    assert!(left.degree().is_some_and(|d| d <= n));

    let residual = |prod: &CentralPoly<R>| -> Vec<Matrix<R>> {
        (0..=n)
            .map(|k| prod.coeff(k).sub_ref(&Matrix::scalar(a.ring(), n, &lambda[k])))
            .collect()
    };
    let c = residual(&right);
    let d = residual(&left);
    CharPolyResult { lambda, c, d }
}

/// Which side of the decomposition a matrix comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    C,
    D,
}

/// An entry of some `C_i` or `D_i` outside the commutator subgroup.
#[derive(Clone, Debug, PartialEq)]
pub struct EntryViolation {
    pub side: Side,
    pub index: usize,
    pub row: usize,
    pub col: usize,
}

impl<R: Ring> CharPolyResult<R> {
    pub fn n(&self) -> usize {
        self.lambda.len() - 1
    }

    /// `p(x) I + sum_i C_i x^i`, which should equal `n (xI-A)(xI-A)*`.
    pub fn reconstruct_right(&self) -> CentralPoly<R> {
        self.reconstruct(&self.c)
    }

    /// `p(x) I + sum_i D_i x^i`, which should equal `n (xI-A)*(xI-A)`.
    pub fn reconstruct_left(&self) -> CentralPoly<R> {
        self.reconstruct(&self.d)
    }

    fn reconstruct(&self, residual: &[Matrix<R>]) -> CentralPoly<R> {
        let shape = residual[0].shape();
        let coeffs = residual
            .iter()
            .zip(&self.lambda)
            .map(|(c, l)| c.add_ref(&Matrix::scalar(&shape.ring, shape.n, l)))
            .collect();
        Poly::new(&shape, coeffs)
    }

    pub fn shape(&self) -> MatrixShape<R::Ctx> {
        self.c[0].shape()
    }
}

impl<S: Scalar> CharPolyResult<RingElement<S>> {
    /// Entries of the `C_i` and `D_i` that are not sums of commutators.
    pub fn commutator_violations(&self, test: &CommutatorTest<S>) -> Vec<EntryViolation> {
        let mut out = Vec::new();
        for (side, mats) in [(Side::C, &self.c), (Side::D, &self.d)] {
            for (index, m) in mats.iter().enumerate() {
                let n = m.n();
                for row in 0..n {
                    for col in 0..n {
                        if !test.contains(m.get(row, col)) {
                            out.push(EntryViolation {
                                side,
                                index,
                                row,
                                col,
                            });
                        }
                    }
                }
            }
        }
        out
    }
}
