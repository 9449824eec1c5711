//! Commutator subgroup and centre membership.

use std::collections::BTreeMap;

use super::{RingDescriptor, RingElement, RingKind};
use crate::linalg::{Echelon, SparseVec};
use crate::word::Word;
use crate::Scalar;

/// Decides membership in `[R,R]`, the additive subgroup spanned by all
/// commutators `rs - sr`.
///
/// * rational and commutative polynomial rings: `[R,R] = 0`;
/// * free algebra: an element is a sum of commutators iff, for every class of
///   words up to cyclic rotation, its coefficients sum to zero;
/// * Grassmann and upper triangular rings: membership in the span of the
///   commutators of basis elements, found by exact elimination.
///
/// Building the span is the expensive part, so a `CommutatorTest` is meant to
/// be reused across many elements of the same ring.
#[derive(Clone, Debug)]
pub struct CommutatorTest<S> {
    ring: RingDescriptor,
    span: Option<Echelon<S>>,
}

impl<S: Scalar> CommutatorTest<S> {
    pub fn new(ring: &RingDescriptor) -> Self {
        let span = match ring.kind() {
            RingKind::Grassmann | RingKind::UpperTriangular2 => {
                let basis = finite_basis::<S>(ring);
                let mut ech = Echelon::new();
                for (i, a) in basis.iter().enumerate() {
                    for b in &basis[i + 1..] {
                        let c = &(a * b) - &(b * a);
                        if !c.is_zero() {
                            ech.insert(coordinates(&c));
                        }
                    }
                }
                Some(ech)
            }
            _ => None,
        };
        Self {
            ring: ring.clone(),
            span,
        }
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    /// Dimension of `[R,R]` for the finite-dimensional rings.
    pub fn span_dimension(&self) -> Option<usize> {
        self.span.as_ref().map(Echelon::rank)
    }

    pub fn contains(&self, a: &RingElement<S>) -> bool {
        assert_eq!(a.ring(), &self.ring, "ring mismatch");
        match self.ring.kind() {
            RingKind::Rational | RingKind::CommutativePoly => a.is_zero(),
            RingKind::FreeAlgebra => cyclic_sums_vanish(a),
            RingKind::Grassmann | RingKind::UpperTriangular2 => self
                .span
                .as_ref()
                .expect("span is built for finite-dimensional rings")
                .contains(coordinates(a)),
        }
    }
}

/// One-shot `[R,R]` membership. Prefer [`CommutatorTest`] for repeated
/// queries.
pub fn is_in_commutator_subgroup<S: Scalar>(a: &RingElement<S>) -> bool {
    CommutatorTest::new(a.ring()).contains(a)
}

fn cyclic_sums_vanish<S: Scalar>(a: &RingElement<S>) -> bool {
    let mut sums: BTreeMap<Word, S> = BTreeMap::new();
    for (w, c) in a.terms().expect("free algebra elements have terms") {
        let e = sums.entry(w.min_rotation()).or_insert_with(S::zero);
        *e = e.clone() + c.clone();
    }
    sums.values().all(|c| c.is_zero())
}

/// A vector-space basis of a finite-dimensional ring.
fn finite_basis<S: Scalar>(ring: &RingDescriptor) -> Vec<RingElement<S>> {
    match ring.kind() {
        RingKind::Grassmann => {
            let k = ring.generator_count();
            assert!(k <= 16, "Grassmann basis enumeration is limited to 16 generators");
            (0u32..1 << k)
                .map(|mask| {
                    let w = Word::from_letters((0..k as u16).filter(|i| mask >> i & 1 == 1).map(|i| i + 1));
                    RingElement::monomial(ring, w, S::one()).unwrap()
                })
                .collect()
        }
        RingKind::UpperTriangular2 => {
            let (o, z) = (S::one(), S::zero());
            vec![
                RingElement::triangular(ring, o.clone(), z.clone(), z.clone()).unwrap(),
                RingElement::triangular(ring, z.clone(), o.clone(), z.clone()).unwrap(),
                RingElement::triangular(ring, z.clone(), z, o).unwrap(),
            ]
        }
        _ => panic!("{} is not finite-dimensional", ring.kind()),
    }
}

/// Coordinates in the basis of [`finite_basis`].
fn coordinates<S: Scalar>(a: &RingElement<S>) -> SparseVec<S> {
    if let Some(t) = a.triangular_parts() {
        return t
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x.clone()))
            .collect();
    }
    a.terms()
        .unwrap()
        .iter()
        .map(|(w, c)| {
            let mask = w.letters().iter().fold(0usize, |m, &l| m | 1 << (l - 1));
            (mask, c.clone())
        })
        .collect()
}

/// Whether `a` commutes with every element of its ring.
///
/// It suffices to test a generating set: the generators for the presented
/// kinds, and the matrix units `e11, e12, e22` for the upper triangular ring.
pub fn center_contains<S: Scalar>(a: &RingElement<S>) -> bool {
    let ring = a.ring();
    let generators: Vec<RingElement<S>> = match ring.kind() {
        RingKind::Rational | RingKind::CommutativePoly => return true,
        RingKind::FreeAlgebra | RingKind::Grassmann => (1..=ring.generator_count())
            .map(|i| RingElement::generator(ring, i).unwrap())
            .collect(),
        RingKind::UpperTriangular2 => finite_basis(ring),
    };
    generators.iter().all(|g| (a * g) == (g * a))
}
