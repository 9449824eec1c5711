use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{RingDescriptor, RingError, RingKind};
use crate::algebra::Ring;
use crate::word::Word;
use crate::Scalar;

#[derive(Clone, Debug, PartialEq)]
enum Payload<S> {
    /// Sparse coefficient map keyed by canonical monomials. Used by every kind
    /// except the upper triangular matrices.
    Terms(BTreeMap<Word, S>),
    /// `[[p, q], [0, r]]` stored as `[p, q, r]`.
    Triangular([S; 3]),
}

/// An element of one of the supported rings, kept in canonical form.
///
/// No stored coefficient is zero, so equality of values is equality of ring
/// elements.
#[derive(Clone, Debug, PartialEq)]
pub struct RingElement<S> {
    ring: RingDescriptor,
    payload: Payload<S>,
}

impl<S: Scalar> RingElement<S> {
    pub fn zero(ring: &RingDescriptor) -> Self {
        let payload = match ring.kind() {
            RingKind::UpperTriangular2 => Payload::Triangular([S::zero(), S::zero(), S::zero()]),
            _ => Payload::Terms(BTreeMap::new()),
        };
        Self {
            ring: ring.clone(),
            payload,
        }
    }

    pub fn one(ring: &RingDescriptor) -> Self {
        Self::scalar(ring, S::one())
    }

    /// The scalar `c` times the unit of `ring`.
    pub fn scalar(ring: &RingDescriptor, c: S) -> Self {
        let payload = match ring.kind() {
            RingKind::UpperTriangular2 => Payload::Triangular([c.clone(), S::zero(), c]),
            _ => {
                let mut terms = BTreeMap::new();
                if !c.is_zero() {
                    terms.insert(Word::empty(), c);
                }
                Payload::Terms(terms)
            }
        };
        Self {
            ring: ring.clone(),
            payload,
        }
    }

    pub fn integer(ring: &RingDescriptor, k: i64) -> Self {
        Self::scalar(ring, S::from_int(k))
    }

    /// The generator with 1-based index `index`.
    pub fn generator(ring: &RingDescriptor, index: usize) -> Result<Self, RingError> {
        let index = check_index(ring, index)?;
        Self::monomial(ring, Word::letter(index), S::one())
    }

    /// `coeff` times the product of the letters of `word`, taken in order.
    pub fn monomial(ring: &RingDescriptor, word: Word, coeff: S) -> Result<Self, RingError> {
        if ring.kind() == RingKind::UpperTriangular2 && !word.is_empty() {
            return Err(RingError::WrongKind {
                expected: RingKind::FreeAlgebra,
                found: ring.kind(),
            });
        }
        for &l in word.letters() {
            check_index(ring, l as usize)?;
        }
        let mut out = Self::zero(ring);
        if let Some((w, c)) = normalize_monomial(ring.kind(), word, coeff) {
            out.terms_mut().insert(w, c);
        }
        Ok(out)
    }

    /// Sum of monomials, each normalized for the ring.
    pub fn from_terms<I>(ring: &RingDescriptor, terms: I) -> Result<Self, RingError>
    where
        I: IntoIterator<Item = (Word, S)>,
    {
        let mut acc = Self::zero(ring);
        for (w, c) in terms {
            acc = &acc + &Self::monomial(ring, w, c)?;
        }
        Ok(acc)
    }

    /// The upper triangular matrix `[[p, q], [0, r]]`.
    pub fn triangular(ring: &RingDescriptor, p: S, q: S, r: S) -> Result<Self, RingError> {
        if ring.kind() != RingKind::UpperTriangular2 {
            return Err(RingError::WrongKind {
                expected: RingKind::UpperTriangular2,
                found: ring.kind(),
            });
        }
        Ok(Self {
            ring: ring.clone(),
            payload: Payload::Triangular([p, q, r]),
        })
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    /// Coefficient map for the kinds presented by generators (and the
    /// rationals, where only the empty word occurs).
    pub fn terms(&self) -> Option<&BTreeMap<Word, S>> {
        match &self.payload {
            Payload::Terms(t) => Some(t),
            Payload::Triangular(_) => None,
        }
    }

    pub fn triangular_parts(&self) -> Option<&[S; 3]> {
        match &self.payload {
            Payload::Triangular(t) => Some(t),
            Payload::Terms(_) => None,
        }
    }

    /// The scalar `c` when `self = c * 1`.
    pub fn as_scalar(&self) -> Option<S> {
        match &self.payload {
            Payload::Terms(t) => match t.len() {
                0 => Some(S::zero()),
                1 => t.get(&Word::empty()).cloned(),
                _ => None,
            },
            Payload::Triangular([p, q, r]) => (q.is_zero() && p == r).then(|| p.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.payload {
            Payload::Terms(t) => t.is_empty(),
            Payload::Triangular(t) => t.iter().all(|c| c.is_zero()),
        }
    }

    /// Number of stored nonzero coefficients.
    pub fn term_count(&self) -> usize {
        match &self.payload {
            Payload::Terms(t) => t.len(),
            Payload::Triangular(t) => t.iter().filter(|c| !c.is_zero()).count(),
        }
    }

    /// Largest monomial degree, `None` for zero. Triangular elements have
    /// degree 0.
    pub fn degree(&self) -> Option<usize> {
        match &self.payload {
            Payload::Terms(t) => t.keys().map(Word::degree).max(),
            Payload::Triangular(_) => (!self.is_zero()).then_some(0),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let payload = match &self.payload {
            Payload::Terms(t) => Payload::Terms(
                t.iter()
                    .map(|(w, x)| (w.clone(), x.clone() * c.clone()))
                    .collect(),
            ),
            Payload::Triangular(t) => Payload::Triangular(t.clone().map(|x| x * c.clone())),
        };
        Self {
            ring: self.ring.clone(),
            payload,
        }
    }

    fn terms_mut(&mut self) -> &mut BTreeMap<Word, S> {
        match &mut self.payload {
            Payload::Terms(t) => t,
            Payload::Triangular(_) => unreachable!("triangular elements have no term map"),
        }
    }

    fn assert_same_ring(&self, other: &Self) {
        assert!(
            self.ring == other.ring,
            "ring mismatch: {} vs {}",
            self.ring,
            other.ring
        );
    }

    fn add_impl(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let payload = match (&self.payload, &other.payload) {
            (Payload::Terms(a), Payload::Terms(b)) => {
                let (big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
                let mut out = big.clone();
                for (w, c) in small {
                    add_term(&mut out, w, c.clone());
                }
                Payload::Terms(out)
            }
            (Payload::Triangular(a), Payload::Triangular(b)) => Payload::Triangular([
                a[0].clone() + b[0].clone(),
                a[1].clone() + b[1].clone(),
                a[2].clone() + b[2].clone(),
            ]),
            _ => unreachable!("payload kind follows the descriptor"),
        };
        Self {
            ring: self.ring.clone(),
            payload,
        }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let payload = match (&self.payload, &other.payload) {
            (Payload::Terms(a), Payload::Terms(b)) => {
                let mut out = BTreeMap::new();
                for (wa, ca) in a {
                    for (wb, cb) in b {
                        let c = ca.clone() * cb.clone();
                        match self.ring.kind() {
                            RingKind::Rational | RingKind::FreeAlgebra => {
                                add_term(&mut out, &wa.concat(wb), c)
                            }
                            RingKind::CommutativePoly => add_term(&mut out, &wa.merge_sorted(wb), c),
                            RingKind::Grassmann => {
                                if let Some((w, flip)) = wa.wedge(wb) {
                                    add_term(&mut out, &w, if flip { -c } else { c });
                                }
                            }
                            RingKind::UpperTriangular2 => unreachable!(),
                        }
                    }
                }
                Payload::Terms(out)
            }
            (Payload::Triangular([p, q, r]), Payload::Triangular([p2, q2, r2])) => {
                Payload::Triangular([
                    p.clone() * p2.clone(),
                    p.clone() * q2.clone() + q.clone() * r2.clone(),
                    r.clone() * r2.clone(),
                ])
            }
            _ => unreachable!("payload kind follows the descriptor"),
        };
        Self {
            ring: self.ring.clone(),
            payload,
        }
    }

    fn neg_impl(&self) -> Self {
        self.scale(&-S::one())
    }

    /// Split into homogeneous components by multidegree (generator content).
    pub fn multihomogeneous_components(&self) -> BTreeMap<Vec<u32>, Self> {
        let mut out: BTreeMap<Vec<u32>, Self> = BTreeMap::new();
        if let Some(t) = self.terms() {
            let k = self.ring.generator_count();
            for (w, c) in t {
                out.entry(w.content(k))
                    .or_insert_with(|| Self::zero(&self.ring))
                    .terms_mut()
                    .insert(w.clone(), c.clone());
            }
        }
        out
    }
}

fn check_index(ring: &RingDescriptor, index: usize) -> Result<u16, RingError> {
    if index == 0 || index > ring.generator_count() {
        return Err(RingError::GeneratorOutOfRange {
            index,
            count: ring.generator_count(),
        });
    }
    Ok(index as u16)
}

fn normalize_monomial<S: Scalar>(kind: RingKind, word: Word, coeff: S) -> Option<(Word, S)> {
    if coeff.is_zero() {
        return None;
    }
    match kind {
        RingKind::Rational | RingKind::FreeAlgebra | RingKind::UpperTriangular2 => {
            Some((word, coeff))
        }
        RingKind::CommutativePoly => {
            if word.is_sorted() {
                return Some((word, coeff));
            }
            let mut letters = word.letters().to_vec();
            letters.sort_unstable();
            Some((Word::from_letters(letters), coeff))
        }
        RingKind::Grassmann => {
            if word.is_strictly_increasing() {
                return Some((word, coeff));
            }
            // multiply out letter by letter
            let mut acc = Word::empty();
            let mut negative = false;
            for &l in word.letters() {
                let (w, flip) = acc.wedge(&Word::letter(l))?;
                acc = w;
                negative ^= flip;
            }
            Some((acc, if negative { -coeff } else { coeff }))
        }
    }
}

fn add_term<S: Scalar>(map: &mut BTreeMap<Word, S>, w: &Word, c: S) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(w) {
        Some(x) => {
            *x = x.clone() + c;
            if x.is_zero() {
                map.remove(w);
            }
        }
        None => {
            map.insert(w.clone(), c);
        }
    }
}

impl<S: Scalar> Ring for RingElement<S> {
    type Ctx = RingDescriptor;

    fn ctx(&self) -> RingDescriptor {
        self.ring.clone()
    }

    fn zero(ctx: &RingDescriptor) -> Self {
        RingElement::zero(ctx)
    }

    fn one(ctx: &RingDescriptor) -> Self {
        RingElement::one(ctx)
    }

    fn from_int(ctx: &RingDescriptor, k: i64) -> Self {
        RingElement::integer(ctx, k)
    }

    fn is_zero(&self) -> bool {
        RingElement::is_zero(self)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.add_impl(rhs)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul_impl(rhs)
    }

    fn negate(&self) -> Self {
        self.neg_impl()
    }

    fn scale_int(&self, k: i64) -> Self {
        self.scale(&S::from_int(k))
    }
}

impl<S: Scalar> Add for &RingElement<S> {
    type Output = RingElement<S>;
    fn add(self, rhs: Self) -> RingElement<S> {
        self.add_impl(rhs)
    }
}

impl<S: Scalar> Sub for &RingElement<S> {
    type Output = RingElement<S>;
    fn sub(self, rhs: Self) -> RingElement<S> {
        self.add_impl(&rhs.neg_impl())
    }
}

impl<S: Scalar> Mul for &RingElement<S> {
    type Output = RingElement<S>;
    fn mul(self, rhs: Self) -> RingElement<S> {
        self.mul_impl(rhs)
    }
}

impl<S: Scalar> Neg for &RingElement<S> {
    type Output = RingElement<S>;
    fn neg(self) -> RingElement<S> {
        self.neg_impl()
    }
}

impl<S: Scalar> Add for RingElement<S> {
    type Output = RingElement<S>;
    fn add(self, rhs: Self) -> RingElement<S> {
        self.add_impl(&rhs)
    }
}

impl<S: Scalar> Sub for RingElement<S> {
    type Output = RingElement<S>;
    fn sub(self, rhs: Self) -> RingElement<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Mul for RingElement<S> {
    type Output = RingElement<S>;
    fn mul(self, rhs: Self) -> RingElement<S> {
        self.mul_impl(&rhs)
    }
}

impl<S: Scalar> Neg for RingElement<S> {
    type Output = RingElement<S>;
    fn neg(self) -> RingElement<S> {
        self.neg_impl()
    }
}

/// Canonical text form, readable back by the element parser.
///
/// Monomials are printed in increasing degree-lexicographic order, repeated
/// adjacent letters are collapsed into powers and products are written with
/// an explicit `*`. Triangular elements print as `u(p,q,r)`.
impl<S: Scalar> fmt::Display for RingElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.payload {
            Payload::Triangular([p, q, r]) => write!(f, "u({p},{q},{r})"),
            Payload::Terms(t) if t.is_empty() => f.write_str("0"),
            Payload::Terms(t) => {
                let prefix = self.ring.generator_prefix();
                for (i, (w, c)) in t.iter().enumerate() {
                    let negative = c.is_negative();
                    match (i, negative) {
                        (0, true) => f.write_str("-")?,
                        (0, false) => {}
                        (_, true) => f.write_str(" - ")?,
                        (_, false) => f.write_str(" + ")?,
                    }
                    let magnitude = c.abs();
                    if w.is_empty() {
                        write!(f, "{magnitude}")?;
                        continue;
                    }
                    if !magnitude.is_one() {
                        write!(f, "{magnitude}*")?;
                    }
                    write!(f, "{}", w.display(prefix))?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;

    type E = RingElement<BigRational>;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn gen(r: &RingDescriptor, i: usize) -> E {
        E::generator(r, i).unwrap()
    }

    #[test]
    fn rational_addition() {
        let r = RingDescriptor::rational();
        let a = E::scalar(&r, q(1, 2));
        let b = E::scalar(&r, q(1, 3));
        assert_eq!(&a + &b, E::scalar(&r, q(5, 6)));
    }

    #[test]
    fn free_cancellation() {
        let r = RingDescriptor::free(2);
        let w = &gen(&r, 1) * &gen(&r, 2);
        let sum = &w + &(-&w);
        assert!(sum.is_zero());
        assert_eq!(sum.terms().unwrap().len(), 0);
    }

    #[test]
    fn grassmann_relations() {
        let r = RingDescriptor::grassmann(4);
        let (v1, v2) = (gen(&r, 1), gen(&r, 2));
        let v12 = &v1 * &v2;
        assert_eq!(v12, E::monomial(&r, Word::from_letters([1, 2]), q(1, 1)).unwrap());
        assert_eq!(&v2 * &v1, -&v12);
        assert!((&v1 * &v1).is_zero());
        assert!((&(&v1 * &v2) + &(&v2 * &v1)).is_zero());
    }

    #[test]
    fn triangular_product() {
        let r = RingDescriptor::upper_triangular();
        let t = |p, qq, rr| E::triangular(&r, q(p, 1), q(qq, 1), q(rr, 1)).unwrap();
        assert_eq!(&t(1, 1, 0) * &t(0, 1, 1), t(0, 2, 0));
    }

    #[test]
    fn free_product_is_concatenation() {
        let r = RingDescriptor::free(2);
        let p = &gen(&r, 1) * &gen(&r, 2);
        let terms = p.terms().unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms.get(&Word::from_letters([1, 2])), Some(&q(1, 1)));
    }

    #[test]
    fn commutative_monomials_sort() {
        let r = RingDescriptor::commutative(3);
        assert_eq!(&gen(&r, 3) * &gen(&r, 1), &gen(&r, 1) * &gen(&r, 3));
    }

    #[test]
    fn display_forms() {
        let r = RingDescriptor::free(4);
        let x = |i| gen(&r, i);
        let e = &(&(&x(1) * &x(2)) - &(&x(2) * &x(1))) + &E::scalar(&r, q(-3, 4));
        assert_eq!(e.to_string(), "-3/4 + x1*x2 - x2*x1");
        let sq = &(&x(3) * &x(3)) * &x(1);
        assert_eq!(sq.scale(&q(2, 1)).to_string(), "2*x3^2*x1");
        assert_eq!(E::zero(&r).to_string(), "0");
        let u = RingDescriptor::upper_triangular();
        let t = E::triangular(&u, q(1, 2), q(0, 1), q(-1, 1)).unwrap();
        assert_eq!(t.to_string(), "u(1/2,0,-1)");
    }

    #[test]
    fn out_of_range_generators() {
        let r = RingDescriptor::free(2);
        assert!(matches!(
            E::generator(&r, 3),
            Err(RingError::GeneratorOutOfRange { index: 3, count: 2 })
        ));
        assert!(E::generator(&r, 0).is_err());
    }

    #[test]
    #[should_panic(expected = "ring mismatch")]
    fn operators_reject_mixed_rings() {
        let a = E::one(&RingDescriptor::free(2));
        let b = E::one(&RingDescriptor::free(3));
        let _ = &a + &b;
    }
}
