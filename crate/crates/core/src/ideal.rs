//! Membership in the two-sided ideal of the free algebra generated by all
//! products of two commutators, `[a,b][c,d]`.
//!
//! The ideal is spanned by the elements `m1 [w1,w2][w3,w4] m2` with `m1, m2`
//! words and `w1..w4` nonempty words, and it is graded by multidegree. A
//! homogeneous target is split into multihomogeneous components; for each
//! component the spanning elements of that multidegree are enumerated and the
//! component is reduced against their echelon form. A positive answer comes
//! with the combination of spanning elements that reproduces the target.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::linalg::{Echelon, SparseVec};
use crate::matrix::Matrix;
use crate::ring::{RingDescriptor, RingElement, RingKind};
use crate::verify::sandwich_lhs;
use crate::word::Word;
use crate::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("ideal membership is decided in the free algebra, not in {0}")]
    NotFreeAlgebra(RingKind),
    #[error("target is not homogeneous (degrees {0:?})")]
    NotHomogeneous(Vec<usize>),
}

/// `m1 [w1, w2][w3, w4] m2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealGenerator {
    pub left: Word,
    pub factors: [Word; 4],
    pub right: Word,
}

impl IdealGenerator {
    /// The four signed words of the expansion.
    fn expansion(&self) -> [(Word, i64); 4] {
        let [w1, w2, w3, w4] = &self.factors;
        let word = |a: &Word, b: &Word, c: &Word, d: &Word| {
            self.left
                .concat(a)
                .concat(b)
                .concat(c)
                .concat(d)
                .concat(&self.right)
        };
        [
            (word(w1, w2, w3, w4), 1),
            (word(w1, w2, w4, w3), -1),
            (word(w2, w1, w3, w4), -1),
            (word(w2, w1, w4, w3), 1),
        ]
    }

    pub fn expand<S: Scalar>(&self, ring: &RingDescriptor) -> RingElement<S> {
        RingElement::from_terms(
            ring,
            self.expansion().into_iter().map(|(w, c)| (w, S::from_int(c))),
        )
        .expect("generator words lie in the ring")
    }

    pub fn display(&self, prefix: &str) -> String {
        let w = |w: &Word| -> String {
            if w.is_empty() {
                return "1".into();
            }
            w.display(prefix).to_string()
        };
        let [a, b, c, d] = &self.factors;
        let mut out = String::new();
        if !self.left.is_empty() {
            out.push_str(&w(&self.left));
            out.push('*');
        }
        out.push_str(&format!("[{},{}]*[{},{}]", w(a), w(b), w(c), w(d)));
        if !self.right.is_empty() {
            out.push('*');
            out.push_str(&w(&self.right));
        }
        out
    }
}

/// `target = sum_k c_k g_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate<S> {
    pub terms: Vec<(S, IdealGenerator)>,
}

impl<S: Scalar> Certificate<S> {
    pub fn expand(&self, ring: &RingDescriptor) -> RingElement<S> {
        self.terms.iter().fold(RingElement::zero(ring), |acc, (c, g)| {
            &acc + &g.expand::<S>(ring).scale(c)
        })
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// A homogeneous free-algebra element whose membership is to be decided.
#[derive(Clone, Debug)]
pub struct IdealMembershipInstance<S: Scalar> {
    target: RingElement<S>,
    degree: usize,
    generator_count: usize,
}

impl<S: Scalar> IdealMembershipInstance<S> {
    pub fn new(target: RingElement<S>) -> Result<Self, IdealError> {
        let ring = target.ring();
        if ring.kind() != RingKind::FreeAlgebra {
            return Err(IdealError::NotFreeAlgebra(ring.kind()));
        }
        let degrees: Vec<usize> = target
            .terms()
            .unwrap()
            .keys()
            .map(Word::degree)
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        if degrees.len() > 1 {
            return Err(IdealError::NotHomogeneous(degrees));
        }
        Ok(Self {
            generator_count: ring.generator_count(),
            degree: degrees.first().copied().unwrap_or(0),
            target,
        })
    }

    pub fn target(&self) -> &RingElement<S> {
        &self.target
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }
}

#[derive(Clone, Debug)]
pub struct Membership<S> {
    pub member: bool,
    pub certificate: Option<Certificate<S>>,
    /// Spanning elements enumerated, summed over components.
    pub spanning_elements: usize,
    /// Dimension of the ideal's components that were built, summed.
    pub rank: usize,
}

impl<S: Scalar> fmt::Display for Membership<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.member {
            let len = self.certificate.as_ref().map_or(0, Certificate::len);
            write!(f, "member ({len} certificate terms)")
        } else {
            write!(f, "not a member")
        }
    }
}

pub fn ideal_membership<S: Scalar>(instance: &IdealMembershipInstance<S>) -> Membership<S> {
    let ring = instance.target.ring();
    let mut terms = Vec::new();
    let mut spanning_elements = 0;
    let mut rank = 0;
    for (content, component) in instance.target.multihomogeneous_components() {
        let mut graded = GradedComponent::new(&content);
        let found = graded.certify(&component);
        spanning_elements += graded.generators.len();
        rank += graded.echelon.rank();
        match found {
            Some(cert) => terms.extend(cert),
            None => {
                return Membership {
                    member: false,
                    certificate: None,
                    spanning_elements,
                    rank,
                }
            }
        }
    }
    let certificate = Certificate { terms };
    debug_assert!(certificate.expand(ring) == instance.target);
    Membership {
        member: true,
        certificate: Some(certificate),
        spanning_elements,
        rank,
    }
}

/// The part of the ideal with one fixed multidegree.
struct GradedComponent<S> {
    letters: Vec<u16>,
    columns: HashMap<Word, usize>,
    generators: Vec<IdealGenerator>,
    echelon: Echelon<S>,
}

impl<S: Scalar> GradedComponent<S> {
    fn new(content: &[u32]) -> Self {
        let letters: Vec<u16> = content
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| std::iter::repeat_n(i as u16 + 1, c as usize))
            .collect();
        Self {
            letters,
            columns: HashMap::new(),
            generators: Vec::new(),
            echelon: Echelon::new(),
        }
    }

    fn column(&mut self, w: Word) -> usize {
        let next = self.columns.len();
        *self.columns.entry(w).or_insert(next)
    }

    fn vector(&mut self, element: &RingElement<S>) -> SparseVec<S> {
        element
            .terms()
            .unwrap()
            .iter()
            .map(|(w, c)| (self.column(w.clone()), c.clone()))
            .collect()
    }

    /// Builds the spanning set and returns the certificate of `target`, or
    /// `None` when it is not in the span.
    fn certify(&mut self, target: &RingElement<S>) -> Option<Vec<(S, IdealGenerator)>> {
        let d = self.letters.len();
        if d < 4 {
            return None;
        }
        let target_vec = self.vector(target);
        let mut seen: HashSet<Vec<(usize, i64)>> = HashSet::new();
        let mut letters = self.letters.clone();
        let mut since_check = 0;
        loop {
            for cuts in compositions(d) {
                let g = split(&letters, &cuts);
                let mut v: BTreeMap<usize, i64> = BTreeMap::new();
                for (w, c) in g.expansion() {
                    let col = self.column(w);
                    *v.entry(col).or_insert(0) += c;
                }
                v.retain(|_, c| *c != 0);
                let Some(&lead) = v.values().next() else { continue };
                let key: Vec<(usize, i64)> = v
                    .iter()
                    .map(|(&k, &c)| (k, if lead < 0 { -c } else { c }))
                    .collect();
                if !seen.insert(key) {
                    continue;
                }
                self.generators.push(g);
                let vec = v.into_iter().map(|(k, c)| (k, S::from_int(c))).collect();
                if self.echelon.insert(vec) {
                    since_check += 1;
                    if since_check >= 64 {
                        since_check = 0;
                        if let Some(cert) = self.try_certificate(&target_vec) {
                            return Some(cert);
                        }
                    }
                }
            }
            if !next_permutation(&mut letters) {
                break;
            }
        }
        self.try_certificate(&target_vec)
    }

    fn try_certificate(&self, target: &SparseVec<S>) -> Option<Vec<(S, IdealGenerator)>> {
        let red = self.echelon.reduce(target.clone());
        if !red.residual.is_empty() {
            return None;
        }
        Some(
            red.combination
                .into_iter()
                .map(|(g, c)| (c, self.generators[g].clone()))
                .collect(),
        )
    }
}

/// Lengths `(l0, l1, l2, l3, l4, l5)` summing to `d` with `l1..l4 >= 1`.
fn compositions(d: usize) -> Vec<[usize; 6]> {
    let mut out = Vec::new();
    if d < 4 {
        return out;
    }
    let free = d - 4;
    for l0 in 0..=free {
        for a in 0..=free - l0 {
            for b in 0..=free - l0 - a {
                for c in 0..=free - l0 - a - b {
                    for e in 0..=free - l0 - a - b - c {
                        let l5 = free - l0 - a - b - c - e;
                        out.push([l0, a + 1, b + 1, c + 1, e + 1, l5]);
                    }
                }
            }
        }
    }
    out
}

fn split(letters: &[u16], cuts: &[usize; 6]) -> IdealGenerator {
    let mut pos = 0;
    let mut parts: Vec<Word> = cuts
        .iter()
        .map(|&len| {
            let w = Word::from_letters(letters[pos..pos + len].iter().copied());
            pos += len;
            w
        })
        .collect();
    let right = parts.pop().unwrap();
    let left = parts.remove(0);
    IdealGenerator {
        left,
        factors: [parts[0].clone(), parts[1].clone(), parts[2].clone(), parts[3].clone()],
        right,
    }
}

fn next_permutation(p: &mut [u16]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Certification of one multihomogeneous piece of a residual entry.
#[derive(Clone, Debug)]
pub struct ComponentCertification<S: Scalar> {
    pub row: usize,
    pub col: usize,
    pub component: RingElement<S>,
    pub membership: Membership<S>,
}

/// Splits every entry of the sandwich residual `sum A^i lambda_i lambda_j A^j`
/// of a free-algebra matrix into multihomogeneous components and decides
/// membership of each.
pub fn certify_sandwich_residual<S: Scalar>(
    a: &Matrix<RingElement<S>>,
) -> Result<Vec<ComponentCertification<S>>, IdealError> {
    if a.ring().kind() != RingKind::FreeAlgebra {
        return Err(IdealError::NotFreeAlgebra(a.ring().kind()));
    }
    let lambda = crate::charpoly::symmetric_charpoly(a);
    let residual = sandwich_lhs(a, &lambda);
    let n = a.n();
    let mut out = Vec::new();
    for row in 0..n {
        for col in 0..n {
            for (_, component) in residual.get(row, col).multihomogeneous_components() {
                let instance = IdealMembershipInstance::new(component.clone())?;
                out.push(ComponentCertification {
                    row,
                    col,
                    membership: ideal_membership(&instance),
                    component,
                });
            }
        }
    }
    Ok(out)
}
