use std::time::Instant;

use super::bijection::{delta_map, star_pairs, theta_map, u_term, v_term};
use super::report::{Check, Claim, Residual, Stats, VerificationReport};
use crate::algebra::Ring;
use crate::charpoly::{decompose_thm22, preadjoint_terms, symmetric_charpoly, CharPolyResult};
use crate::matrix::{Matrix, MatrixError};
use crate::perm::Permutation;
use crate::ring::{CommutatorTest, RingElement};
use crate::scalar;
use crate::Scalar;

type M<S> = Matrix<RingElement<S>>;

/// `tr(A*A) - tr(AA*)`, plus the summand-by-summand pairing
/// `u(rho, tau, s) = v(rho, theta(tau, s))`.
pub fn verify_prop21<S: Scalar>(a: &M<S>) -> VerificationReport<S> {
    let start = Instant::now();
    let n = a.n();
    let terms = preadjoint_terms(a);
    let star = terms.matrix.mul_ref(a).mat_trace();
    let other = a.mul_ref(&terms.matrix).mat_trace();
    let residual = &star - &other;

    let pairs = star_pairs(n);
    let bijective = pairs.iter().all(|p| {
        let image = theta_map(p);
        image.tau().apply(image.s()) == image.s() && &delta_map(&image) == p
    });
    let mut correspondences = 0;
    let mut mismatches = 0;
    for rho in Permutation::all(n) {
        for pair in &pairs {
            correspondences += 1;
            if u_term(a, &rho, pair) != v_term(a, &rho, &theta_map(pair)) {
                mismatches += 1;
            }
        }
    }

    let mut stats = Stats::default();
    stats.count("pairs_per_column", terms.pairs_per_column);
    stats.count("term_correspondences", correspondences);
    stats.count("mismatched_terms", mismatches);
    stats.max_degree = star.degree();
    stats.elapsed = start.elapsed();
    let checks = vec![
        Check {
            name: "theta-bijection".into(),
            passed: bijective,
            detail: format!("theta/delta mutually inverse on all {} pairs of S_n*", pairs.len()),
        },
        Check {
            name: "term-correspondence".into(),
            passed: mismatches == 0,
            detail: format!("{} of {correspondences} summands paired", correspondences - mismatches),
        },
    ];
    VerificationReport::new(Claim::Prop21, Residual::Element(residual), checks, stats)
}

fn lambda_identity<S: Scalar>(a: &M<S>, l: &RingElement<S>) -> M<S> {
    Matrix::scalar(a.ring(), a.n(), l)
}

fn leading_check<S: Scalar>(dec: &CharPolyResult<RingElement<S>>) -> Check {
    let n = dec.n();
    let lead = &dec.lambda[n];
    let expected: S = scalar::factorial(n);
    Check {
        name: "leading-coefficient".into(),
        passed: *lead == RingElement::scalar(lead.ring(), expected.clone()),
        detail: format!("lambda_{n} = {lead}, n! = {expected}"),
    }
}

pub fn verify_thm22<S: Scalar>(a: &M<S>) -> VerificationReport<S> {
    verify_thm22_with(a, &decompose_thm22(a))
}

/// Evaluates `sum_i A^i (lambda_i I + C_i)` and `sum_i (lambda_i I + D_i) A^i`
/// for a given decomposition, which may be deliberately corrupted.
pub fn verify_thm22_with<S: Scalar>(a: &M<S>, dec: &CharPolyResult<RingElement<S>>) -> VerificationReport<S> {
    let start = Instant::now();
    let n = a.n();
    let powers = a.powers(n);
    let mut right = Matrix::zero(a.ring(), n);
    let mut left = Matrix::zero(a.ring(), n);
    for i in 0..=n {
        let l = lambda_identity(a, &dec.lambda[i]);
        right = right.add_ref(&powers[i].mul_ref(&l.add_ref(&dec.c[i])));
        left = left.add_ref(&l.add_ref(&dec.d[i]).mul_ref(&powers[i]));
    }

    let test = CommutatorTest::new(a.ring());
    let violations = dec.commutator_violations(&test);
    let checks = vec![
        leading_check(dec),
        Check {
            name: "commutator-entries".into(),
            passed: violations.is_empty(),
            detail: format!(
                "{} of {} entries of C_i, D_i outside [R,R]",
                violations.len(),
                2 * (n + 1) * n * n
            ),
        },
    ];
    let mut stats = Stats::default();
    stats.count("summands", 2 * (n + 1));
    stats.max_degree = dec
        .lambda
        .iter()
        .filter_map(RingElement::degree)
        .chain(dec.c.iter().chain(&dec.d).filter_map(Matrix::max_degree))
        .max();
    stats.elapsed = start.elapsed();
    let residual = Residual::Parts(vec![
        ("right".into(), Residual::Matrix(right)),
        ("left".into(), Residual::Matrix(left)),
    ]);
    VerificationReport::new(Claim::Thm22, residual, checks, stats)
}

/// `sum_{0 <= i,j <= n} A^i (lambda_i lambda_j) A^j`, summed term by term.
pub fn sandwich_lhs<S: Scalar>(a: &M<S>, lambda: &[RingElement<S>]) -> M<S> {
    let n = a.n();
    let powers = a.powers(n);
    let mut acc = Matrix::zero(a.ring(), n);
    for i in 0..=n {
        for j in 0..=n {
            let c = &lambda[i] * &lambda[j];
            let term = powers[i].scale_right(&c).unwrap().mul_ref(&powers[j]);
            acc = acc.add_ref(&term);
        }
    }
    acc
}

pub fn verify_thm31<S: Scalar>(a: &M<S>) -> VerificationReport<S> {
    let start = Instant::now();
    let lambda = symmetric_charpoly(a);
    let mut report = verify_thm31_with(a, &lambda);
    report.stats.elapsed = start.elapsed();
    report
}

/// Sandwich identity with coefficients `c_{i,j} = lambda_i lambda_j` taken
/// from `lambda`.
pub fn verify_thm31_with<S: Scalar>(a: &M<S>, lambda: &[RingElement<S>]) -> VerificationReport<S> {
    let start = Instant::now();
    let n = a.n();
    let residual = sandwich_lhs(a, lambda);
    let c_nn = &lambda[n] * &lambda[n];
    let expected = scalar::factorial::<S>(n) * scalar::factorial::<S>(n);
    let checks = vec![Check {
        name: "c_nn".into(),
        passed: c_nn == RingElement::scalar(c_nn.ring(), expected.clone()),
        detail: format!("c_{{{n},{n}}} = {c_nn}, (n!)^2 = {expected}"),
    }];
    let mut stats = Stats::default();
    stats.count("summands", (n + 1) * (n + 1));
    stats.count("residual_terms", residual.term_count());
    stats.max_degree = residual.max_degree();
    stats.elapsed = start.elapsed();
    VerificationReport::new(Claim::Thm31, Residual::Matrix(residual), checks, stats)
}

/// Compares the symmetric characteristic coefficients of `A` and `G A G^-1`.
pub fn verify_invariance<S: Scalar>(a: &M<S>, g: &M<S>) -> Result<VerificationReport<S>, MatrixError> {
    let start = Instant::now();
    let conj = a.conjugate(g)?;
    let before = symmetric_charpoly(a);
    let after = symmetric_charpoly(&conj);
    let parts = before
        .iter()
        .zip(&after)
        .enumerate()
        .map(|(i, (x, y))| (format!("lambda_{i}"), Residual::Element(y - x)))
        .collect();
    let mut stats = Stats::default();
    stats.count("coefficients", before.len());
    stats.max_degree = before.iter().filter_map(RingElement::degree).max();
    stats.elapsed = start.elapsed();
    Ok(VerificationReport::new(Claim::Invariance, Residual::Parts(parts), Vec::new(), stats))
}

pub fn sandwich_product_identity<S: Scalar>(a: &M<S>) -> VerificationReport<S> {
    sandwich_product_identity_with(a, &decompose_thm22(a))
}

/// `sum A^i lambda_i lambda_j A^j - sum A^i C_i D_j A^j`, both sides computed
/// separately.
pub fn sandwich_product_identity_with<S: Scalar>(
    a: &M<S>,
    dec: &CharPolyResult<RingElement<S>>,
) -> VerificationReport<S> {
    let start = Instant::now();
    let n = a.n();
    let lhs = sandwich_lhs(a, &dec.lambda);
    let powers = a.powers(n);
    let mut rhs = Matrix::zero(a.ring(), n);
    for i in 0..=n {
        let left = powers[i].mul_ref(&dec.c[i]);
        for j in 0..=n {
            rhs = rhs.add_ref(&left.mul_ref(&dec.d[j]).mul_ref(&powers[j]));
        }
    }
    let mut stats = Stats::default();
    stats.count("summand_pairs", (n + 1) * (n + 1));
    stats.count("lhs_nonzero_entries", lhs.entries().iter().filter(|e| !e.is_zero()).count());
    stats.max_degree = lhs.max_degree();
    stats.elapsed = start.elapsed();
    VerificationReport::new(Claim::SandwichProduct, Residual::Matrix(lhs.sub_ref(&rhs)), Vec::new(), stats)
}
