use std::collections::{BTreeMap, BTreeSet};

use nc_cayley::parse::parse_element;
use nc_cayley::random::{default_generators, random_element, rng, RandomParams};
use nc_cayley::ring::{is_in_commutator_subgroup, CommutatorTest, RingElement};
use nc_cayley::{Element, Rational, Ring, RingDescriptor, RingKind, Word};
use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng as _;

fn kind() -> impl Strategy<Value = RingKind> {
    prop::sample::select(RingKind::ALL.to_vec())
}

fn ring_of(kind: RingKind) -> RingDescriptor {
    RingDescriptor::of_kind(kind, default_generators(kind))
}

fn elements<const K: usize>(kind: RingKind, seed: u64) -> [Element; K] {
    let ring = ring_of(kind);
    let mut g = rng(seed);
    std::array::from_fn(|_| random_element(&ring, &mut g, &RandomParams::default()))
}

/// Spanned by `[a,b]`: sums of random commutators, sometimes perturbed.
fn commutator_sum(ring: &RingDescriptor, seed: u64, perturb: bool) -> Element {
    let mut g = rng(seed);
    let p = RandomParams::default();
    let count = g.gen_range(1..=3);
    let mut acc = Element::zero(ring);
    for _ in 0..count {
        let a: Element = random_element(ring, &mut g, &p);
        let b = random_element(ring, &mut g, &p);
        acc = acc.add_ref(&a.commutator(&b).scale_int(g.gen_range(-2..=2)));
    }
    if perturb {
        acc = acc.add_ref(&random_element(ring, &mut g, &p));
    }
    acc
}

/// Independent description of `[R,R]` for each ring.
fn brute_force_membership(e: &Element) -> bool {
    match e.ring().kind() {
        RingKind::Rational | RingKind::CommutativePoly => e.is_zero(),
        RingKind::UpperTriangular2 => {
            let [p, _, r] = e.triangular_parts().unwrap();
            p.is_zero() && r.is_zero()
        }
        // [e_S, e_T] is 2 e_S e_T for odd disjoint S, T and zero otherwise, so
        // the span is all blades of even degree at least 2.
        RingKind::Grassmann => e.terms().unwrap().keys().all(|w| w.degree() >= 2 && w.degree() % 2 == 0),
        // uv - vu: words and their rotations; sum over each rotation orbit.
        RingKind::FreeAlgebra => {
            let mut orbits: BTreeMap<BTreeSet<Word>, Rational> = BTreeMap::new();
            for (w, c) in e.terms().unwrap() {
                let l = w.letters();
                let orbit = (0..l.len().max(1))
                    .map(|k| Word::from_letters(l[k..].iter().chain(&l[..k]).copied()))
                    .collect();
                *orbits.entry(orbit).or_insert_with(Rational::zero) += c;
            }
            orbits.values().all(Zero::is_zero)
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(kind in kind(), seed in any::<u64>()) {
        let [a, b, c] = elements::<3>(kind, seed);
        let ring = a.ring().clone();
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        prop_assert_eq!(a.add_ref(&b).mul_ref(&c), a.mul_ref(&c).add_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.add_ref(&b), b.add_ref(&a));
        prop_assert_eq!(a.mul_ref(&Element::one(&ring)), a.clone());
        prop_assert_eq!(Element::one(&ring).mul_ref(&a), a.clone());
        prop_assert!(a.sub_ref(&a).is_zero());
        prop_assert_eq!(a.add_ref(&Element::zero(&ring)), a.clone());
        if kind.is_commutative() {
            prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        }
    }

    #[test]
    fn commutator_identities(kind in kind(), seed in any::<u64>()) {
        let [a, b, c] = elements::<3>(kind, seed);
        prop_assert_eq!(a.commutator(&b), b.commutator(&a).negate());
        let jacobi = a.commutator(&b.commutator(&c))
            .add_ref(&b.commutator(&c.commutator(&a)))
            .add_ref(&c.commutator(&a.commutator(&b)));
        prop_assert!(jacobi.is_zero());
    }

    #[test]
    fn upper_triangular_commutator_products_vanish(seed in any::<u64>()) {
        let [a, b, c, d] = elements::<4>(RingKind::UpperTriangular2, seed);
        prop_assert!(a.commutator(&b).mul_ref(&c.commutator(&d)).is_zero());
    }

    #[test]
    fn grassmann_is_lie_nilpotent(seed in any::<u64>()) {
        let [a, b, c] = elements::<3>(RingKind::Grassmann, seed);
        prop_assert!(a.commutator(&b).commutator(&c).is_zero());
    }

    #[test]
    fn grassmann_generators_anticommute(i in 1usize..=6, j in 1usize..=6) {
        let r = RingDescriptor::grassmann(6);
        let vi = Element::generator(&r, i).unwrap();
        let vj = Element::generator(&r, j).unwrap();
        prop_assert!(vi.mul_ref(&vj).add_ref(&vj.mul_ref(&vi)).is_zero());
        prop_assert!(vi.mul_ref(&vi).is_zero());
    }

    #[test]
    fn printed_elements_parse_back(kind in kind(), seed in any::<u64>()) {
        let [a] = elements::<1>(kind, seed);
        let text = a.to_string();
        let back: Element = parse_element(a.ring(), &text).unwrap();
        prop_assert_eq!(back, a, "{}", text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn commutator_subgroup_matches_brute_force(kind in kind(), seed in any::<u64>(), mode in 0u8..3) {
        let ring = ring_of(kind);
        let e = match mode {
            0 => elements::<1>(kind, seed)[0].clone(),
            1 => commutator_sum(&ring, seed, false),
            _ => commutator_sum(&ring, seed, true),
        };
        let expected = brute_force_membership(&e);
        if mode == 1 {
            prop_assert!(expected, "{}", e);
        }
        prop_assert_eq!(is_in_commutator_subgroup(&e), expected, "{}", e);
        prop_assert_eq!(CommutatorTest::new(&ring).contains(&e), expected);
    }
}

#[test]
fn commutator_span_dimensions() {
    assert_eq!(CommutatorTest::<Rational>::new(&RingDescriptor::grassmann(4)).span_dimension(), Some(7));
    assert_eq!(CommutatorTest::<Rational>::new(&RingDescriptor::upper_triangular()).span_dimension(), Some(1));
}

#[test]
fn grassmann_witness() {
    let r = RingDescriptor::grassmann(4);
    let e = |s: &str| -> Element { parse_element(&r, s).unwrap() };
    assert_eq!(e("[v1,v2]*[v3,v4]"), e("4*v1*v2*v3*v4"));
    assert!(!e("[v1,v2]*[v3,v4]").is_zero());
}

#[test]
fn generic_payloads_with_small_ratios() {
    // the core is generic over the scalar; exercise a non-default one
    type Small = num_rational::Ratio<i64>;
    let r = RingDescriptor::free(2);
    let a: RingElement<Small> = parse_element(&r, "1/2*x1 + x2").unwrap();
    let b: RingElement<Small> = parse_element(&r, "x1 - 2/3").unwrap();
    assert_eq!(a.mul_ref(&b).to_string(), "-1/3*x1 - 2/3*x2 + 1/2*x1^2 + x2*x1");
}
