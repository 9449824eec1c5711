//! Classical determinant, adjugate and characteristic polynomial by cofactor
//! expansion, for matrices over a commutative ring.
//!
//! This is an independent route used to cross-check the preadjoint machinery
//! in the commutative case, where
//! `A* = (n-1)! adj(A)`, `sdet(A) = n! det(A)` and
//! `p(x) = n! det(xI - A)`.

use rand::Rng;

use crate::algebra::Ring;
use crate::charpoly::{preadjoint, sdet, symmetric_charpoly};
use crate::matrix::Matrix;
use crate::perm::factorial;
use crate::poly::{CentralPoly, Poly};
use crate::random::rng;
use crate::ring::{RingDescriptor, RingElement};
use crate::Scalar;

fn minor<R: Ring>(a: &Matrix<R>, row: usize, col: usize) -> Matrix<R> {
    let n = a.n();
    Matrix::from_fn(a.ring(), n - 1, |i, j| {
        let i = if i >= row { i + 1 } else { i };
        let j = if j >= col { j + 1 } else { j };
        a.get(i, j).clone()
    })
}

/// Laplace expansion along the first row.
pub fn cofactor_det<R: Ring>(a: &Matrix<R>) -> R {
    let n = a.n();
    if n == 1 {
        return a.get(0, 0).clone();
    }
    (0..n).fold(R::zero(a.ring()), |acc, j| {
        let term = a.get(0, j).mul_ref(&cofactor_det(&minor(a, 0, j)));
        if j % 2 == 0 {
            acc.add_ref(&term)
        } else {
            acc.sub_ref(&term)
        }
    })
}

/// Transpose of the cofactor matrix.
pub fn classical_adjugate<R: Ring>(a: &Matrix<R>) -> Matrix<R> {
    let n = a.n();
    if n == 1 {
        return Matrix::identity(a.ring(), 1);
    }
    Matrix::from_fn(a.ring(), n, |i, j| {
        let c = cofactor_det(&minor(a, j, i));
        if (i + j) % 2 == 0 {
            c
        } else {
            c.negate()
        }
    })
}

/// Coefficients of `det(xI - A)`, constant term first.
pub fn classical_charpoly<R: Ring>(a: &Matrix<R>) -> Vec<R> {
    let det: Poly<R> = cofactor_det(&CentralPoly::x_i_minus(a).to_entrywise());
    (0..=a.n()).map(|k| det.coeff(k)).collect()
}

/// Which commutative identity failed in an oracle trial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleFailure {
    pub trial: usize,
    pub n: usize,
    pub what: &'static str,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleSummary {
    pub trials: usize,
    pub failures: Vec<OracleFailure>,
}

impl OracleSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compares preadjoint, symmetric determinant and symmetric characteristic
/// polynomial of `a` against `(n-1)! adj`, `n! det` and `n! det(xI - A)`.
pub fn check_commutative<S: Scalar>(a: &Matrix<RingElement<S>>) -> Vec<&'static str> {
    assert!(a.ring().kind().is_commutative(), "oracle needs a commutative ring");
    let n = a.n();
    let nf = factorial(n) as i64;
    let mut failed = Vec::new();
    if preadjoint(a) != classical_adjugate(a).scale_int(factorial(n - 1) as i64) {
        failed.push("preadjoint");
    }
    if sdet(a) != cofactor_det(a).scale_int(nf) {
        failed.push("sdet");
    }
    let lambda = symmetric_charpoly(a);
    let classical = classical_charpoly(a);
    if lambda.iter().zip(&classical).any(|(l, c)| l != &c.scale_int(nf)) {
        failed.push("charpoly");
    }
    failed
}

/// Runs [`check_commutative`] on `trials` random integer matrices of size `n`
/// with entries in `[-bound, bound]`.
pub fn commutative_oracle<S: Scalar>(n: usize, trials: usize, seed: u64, bound: i64) -> OracleSummary {
    let ring = RingDescriptor::rational();
    let mut g = rng(seed);
    let mut summary = OracleSummary {
        trials,
        failures: Vec::new(),
    };
    for trial in 0..trials {
        let a: Matrix<RingElement<S>> = Matrix::from_fn(&ring, n, |_, _| {
            RingElement::integer(&ring, g.gen_range(-bound..=bound))
        });
        for what in check_commutative(&a) {
            summary.failures.push(OracleFailure { trial, n, what });
        }
    }
    summary
}
