//! Seeded generation of test elements, matrices and conjugators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::Matrix;
use crate::ring::{RingDescriptor, RingElement, RingKind};
use crate::word::Word;
use crate::Scalar;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shape of random elements: up to `max_terms` monomials of degree at most
/// `max_degree`, integer coefficients with `|c| <= coeff_bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomParams {
    pub max_terms: usize,
    pub max_degree: usize,
    pub coeff_bound: i64,
}

impl Default for RandomParams {
    fn default() -> Self {
        Self {
            max_terms: 2,
            max_degree: 2,
            coeff_bound: 3,
        }
    }
}

/// Default generator count for randomized runs over `kind`.
pub fn default_generators(kind: RingKind) -> usize {
    match kind {
        RingKind::Rational | RingKind::UpperTriangular2 => 0,
        RingKind::Grassmann => 4,
        RingKind::CommutativePoly | RingKind::FreeAlgebra => 3,
    }
}

fn coeff<S: Scalar, G: Rng>(rng: &mut G, bound: i64, nonzero: bool) -> S {
    loop {
        let c = rng.gen_range(-bound..=bound);
        if c != 0 || !nonzero {
            return S::from_int(c);
        }
    }
}

pub fn random_element<S: Scalar, G: Rng>(
    ring: &RingDescriptor,
    rng: &mut G,
    params: &RandomParams,
) -> RingElement<S> {
    let b = params.coeff_bound;
    match ring.kind() {
        RingKind::Rational => RingElement::scalar(ring, coeff(rng, b, false)),
        RingKind::UpperTriangular2 => RingElement::triangular(
            ring,
            coeff(rng, b, false),
            coeff(rng, b, false),
            coeff(rng, b, false),
        )
        .unwrap(),
        RingKind::CommutativePoly | RingKind::FreeAlgebra | RingKind::Grassmann => {
            let k = ring.generator_count();
            let terms = rng.gen_range(1..=params.max_terms.max(1));
            let monomials = (0..terms).map(|_| {
                let word = if k == 0 {
                    Word::empty()
                } else if ring.kind() == RingKind::Grassmann {
                    let mask: u32 = rng.gen_range(0..1u32 << k.min(16));
                    Word::from_letters((0..k as u16).filter(|i| mask >> i & 1 == 1).map(|i| i + 1))
                } else {
                    let deg = rng.gen_range(0..=params.max_degree);
                    Word::from_letters((0..deg).map(|_| rng.gen_range(1..=k as u16)))
                };
                (word, coeff(rng, b, true))
            });
            let monomials: Vec<(Word, S)> = monomials.collect();
            RingElement::from_terms(ring, monomials).unwrap()
        }
    }
}

pub fn random_matrix<S: Scalar, G: Rng>(
    ring: &RingDescriptor,
    n: usize,
    rng: &mut G,
    params: &RandomParams,
) -> Matrix<RingElement<S>> {
    Matrix::from_fn(ring, n, |_, _| random_element(ring, rng, params))
}

/// `[[x1, ..., xn], [x_{n+1}, ...], ...]` with `n^2` distinct generators of a
/// free algebra.
pub fn generic_matrix<S: Scalar>(n: usize) -> Matrix<RingElement<S>> {
    generic_matrix_in(&RingDescriptor::free(n * n), n)
}

/// Generic matrix over any ring with at least `n^2` generators.
pub fn generic_matrix_in<S: Scalar>(ring: &RingDescriptor, n: usize) -> Matrix<RingElement<S>> {
    Matrix::from_fn(ring, n, |i, j| RingElement::generator(ring, i * n + j + 1).unwrap())
}

pub fn random_permutation_matrix<S: Scalar, G: Rng>(
    ring: &RingDescriptor,
    n: usize,
    rng: &mut G,
) -> Matrix<RingElement<S>> {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Matrix::from_fn(ring, n, |i, j| {
        RingElement::integer(ring, (images[i] == j) as i64)
    })
}

/// Integer matrix with determinant `+-1`, built from random elementary row
/// operations and a random row permutation.
pub fn random_unimodular<S: Scalar, G: Rng>(
    ring: &RingDescriptor,
    n: usize,
    rng: &mut G,
) -> Matrix<RingElement<S>> {
    let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
    if n > 1 {
        for _ in 0..2 * n {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let f = rng.gen_range(-2..=2);
            for c in 0..n {
                m[i][c] += f * m[j][c];
            }
        }
        m.shuffle(rng);
    }
    if rng.gen_bool(0.5) {
        for x in m[0].iter_mut() {
            *x = -*x;
        }
    }
    Matrix::from_integers(ring, &m).unwrap()
}
