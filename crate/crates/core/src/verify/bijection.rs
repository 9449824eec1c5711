//! The pairing of summands behind `tr(A*A) = tr(AA*)`.
//!
//! Both traces are sums over `rho in S_n` and `(tau, s)` in
//! `S_n* = {(tau, s) : tau(s) = s}`. A summand of `tr(A*A)` multiplies the
//! entries `a_{t, rho(t)}` along the row sequence
//! `tau(1), ..., tau(s-1), tau(s+1), ..., tau(n), s`; a summand
//! `v(rho, alpha, p)` of `tr(AA*)` uses the row sequence
//! `p, alpha(1), ..., alpha(p-1), alpha(p+1), ..., alpha(n)`. Each row
//! sequence (any arrangement of `1..n`) arises from exactly one pair on each
//! side, which gives the bijection `theta_map` / `delta_map`.
//!
//! `theta_literal` / `delta_literal` build the maps from the source/target
//! sequences `(tau(1), 1, 2, ..., n without tau(1)) -> (tau without s, s)` and
//! `(1, ..., n without alpha(n), alpha(n)) -> (p, alpha without p)` with the
//! second components `tau(1)` and `alpha(n)`. They agree with the bijection
//! except when `s = 1` (for theta) or `p = n` (for delta), where they leave
//! `S_n*` or fail to invert each other.

use std::fmt;

use thiserror::Error;

use crate::algebra::Ring;
use crate::matrix::Matrix;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("pair ({tau}, {s}) is not in S_n*: tau does not fix s")]
    NotInStar { tau: Permutation, s: usize },
    #[error("fixed point {s} out of range for n = {n}")]
    OutOfRange { s: usize, n: usize },
}

/// A pair `(tau, s)` with `tau(s) = s`. Points are 0-based; `Display` is
/// 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationPair {
    tau: Permutation,
    s: usize,
}

impl PermutationPair {
    pub fn new(tau: Permutation, s: usize) -> Result<Self, BijectionError> {
        if s >= tau.len() {
            return Err(BijectionError::OutOfRange { s, n: tau.len() });
        }
        if tau.apply(s) != s {
            return Err(BijectionError::NotInStar { tau, s: s + 1 });
        }
        Ok(Self { tau, s })
    }

    pub fn tau(&self) -> &Permutation {
        &self.tau
    }

    /// The fixed point (0-based).
    pub fn s(&self) -> usize {
        self.s
    }

    pub fn n(&self) -> usize {
        self.tau.len()
    }

    /// Rows in the order used by a summand of `tr(A*A)`: `tau` without `s`,
    /// then `s`.
    pub fn u_rows(&self) -> Vec<usize> {
        let mut rows: Vec<usize> = (0..self.n())
            .filter(|&k| k != self.s)
            .map(|k| self.tau.apply(k))
            .collect();
        rows.push(self.s);
        rows
    }

    /// Rows in the order used by a summand of `tr(AA*)`: `p`, then `alpha`
    /// without `p`.
    pub fn v_rows(&self) -> Vec<usize> {
        let mut rows = vec![self.s];
        rows.extend(
            (0..self.n())
                .filter(|&k| k != self.s)
                .map(|k| self.tau.apply(k)),
        );
        rows
    }
}

impl fmt::Debug for PermutationPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.tau, self.s + 1)
    }
}

impl fmt::Display for PermutationPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// All of `S_n*`, ordered by `s` then `tau` lexicographically.
pub fn star_pairs(n: usize) -> Vec<PermutationPair> {
    let perms = Permutation::all(n);
    (0..n)
        .flat_map(|s| {
            perms
                .iter()
                .filter(move |t| t.apply(s) == s)
                .map(move |t| PermutationPair { tau: t.clone(), s })
        })
        .collect()
}

fn without(n: usize, skip: usize) -> impl Iterator<Item = usize> {
    (0..n).filter(move |&k| k != skip)
}

/// `(tau, s) -> (alpha, p)` with `v(rho, alpha, p) = u(rho, tau, s)` for all
/// `rho`.
pub fn theta_map(pair: &PermutationPair) -> PermutationPair {
    let n = pair.n();
    let rows = pair.u_rows();
    let p = rows[0];
    let source: Vec<usize> = std::iter::once(p).chain(without(n, p)).collect();
    let alpha = Permutation::from_two_line(&source, &rows).expect("row sequence is a permutation");
    PermutationPair { tau: alpha, s: p }
}

/// Inverse of [`theta_map`].
pub fn delta_map(pair: &PermutationPair) -> PermutationPair {
    let n = pair.n();
    let rows = pair.v_rows();
    let s = rows[n - 1];
    let source: Vec<usize> = without(n, s).chain(std::iter::once(s)).collect();
    let tau = Permutation::from_two_line(&source, &rows).expect("row sequence is a permutation");
    PermutationPair { tau, s }
}

/// The source/target construction with second component `tau(1)`. The
/// result need not satisfy `alpha(p) = p`, so it is returned unpaired.
pub fn theta_literal(pair: &PermutationPair) -> (Permutation, usize) {
    let n = pair.n();
    let t1 = pair.tau.apply(0);
    let source: Vec<usize> = std::iter::once(t1).chain(without(n, t1)).collect();
    let theta = Permutation::from_two_line(&source, &pair.u_rows()).unwrap();
    (theta, t1)
}

/// The source/target construction with second component `alpha(n)`.
/// `None` when the target sequence repeats a point, which happens when
/// `alpha(p) != p`.
pub fn delta_literal(alpha: &Permutation, p: usize) -> Option<(Permutation, usize)> {
    let n = alpha.len();
    let an = alpha.apply(n - 1);
    let source: Vec<usize> = without(n, an).chain(std::iter::once(an)).collect();
    let mut target = vec![p];
    target.extend(without(n, p).map(|k| alpha.apply(k)));
    let delta = Permutation::from_two_line(&source, &target)?;
    Some((delta, an))
}

/// `u(rho, tau, s)`: the ordered product of `a_{t, rho(t)}` along
/// [`PermutationPair::u_rows`].
pub fn u_term<R: Ring>(a: &Matrix<R>, rho: &Permutation, pair: &PermutationPair) -> R {
    row_product(a, rho, &pair.u_rows())
}

/// `v(rho, alpha, p)`: the ordered product along
/// [`PermutationPair::v_rows`].
pub fn v_term<R: Ring>(a: &Matrix<R>, rho: &Permutation, pair: &PermutationPair) -> R {
    row_product(a, rho, &pair.v_rows())
}

fn row_product<R: Ring>(a: &Matrix<R>, rho: &Permutation, rows: &[usize]) -> R {
    rows.iter().fold(R::one(a.ring()), |acc, &t| {
        acc.mul_ref(a.get(t, rho.apply(t)))
    })
}

/// Counts from an exhaustive run over `S_n*`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BijectionSummary {
    pub n: usize,
    pub pairs: usize,
    /// `theta_map` output outside `S_n*`.
    pub theta_not_in_star: usize,
    /// `delta_map(theta_map(x)) != x`.
    pub delta_theta_mismatch: usize,
    /// `theta_map(delta_map(x)) != x`.
    pub theta_delta_mismatch: usize,
    /// `alpha(n) != s` where `(alpha, p) = theta_map(tau, s)`.
    pub theta_endpoint_failures: Vec<PermutationPair>,
    /// `tau(1) != p` where `(tau, s) = delta_map(alpha, p)`.
    pub delta_endpoint_failures: Vec<PermutationPair>,
    /// Literal construction: pairs whose `(Theta, tau(1))` leaves `S_n*`.
    pub literal_theta_not_in_star: usize,
    /// Literal construction: `Delta(Theta(tau,s), tau(1)) != tau`.
    pub literal_inverse_failures: usize,
    /// Literal construction: `Theta(tau,s)(n) != s`.
    pub literal_theta_endpoint_failures: usize,
    /// Literal construction: `Delta(alpha,p)(1) != p`.
    pub literal_delta_endpoint_failures: usize,
}

impl BijectionSummary {
    pub fn is_bijection(&self) -> bool {
        self.theta_not_in_star == 0 && self.delta_theta_mismatch == 0 && self.theta_delta_mismatch == 0
    }

    pub fn endpoints_hold(&self) -> bool {
        self.theta_endpoint_failures.is_empty() && self.delta_endpoint_failures.is_empty()
    }
}

pub fn check_bijection(n: usize) -> BijectionSummary {
    let pairs = star_pairs(n);
    let mut out = BijectionSummary {
        n,
        pairs: pairs.len(),
        ..Default::default()
    };
    for pair in &pairs {
        let image = theta_map(pair);
        if image.tau.apply(image.s) != image.s {
            out.theta_not_in_star += 1;
        }
        if &delta_map(&image) != pair {
            out.delta_theta_mismatch += 1;
        }
        if image.tau.apply(n - 1) != pair.s {
            out.theta_endpoint_failures.push(pair.clone());
        }
        let back = delta_map(pair);
        if &theta_map(&back) != pair {
            out.theta_delta_mismatch += 1;
        }
        if back.tau.apply(0) != pair.s {
            out.delta_endpoint_failures.push(pair.clone());
        }

        let (theta, p) = theta_literal(pair);
        if theta.apply(p) != p {
            out.literal_theta_not_in_star += 1;
        }
        if delta_literal(&theta, p).map(|d| d.0).as_ref() != Some(&pair.tau) {
            out.literal_inverse_failures += 1;
        }
        if theta.apply(n - 1) != pair.s {
            out.literal_theta_endpoint_failures += 1;
        }
        let (delta, _) = delta_literal(&pair.tau, pair.s).expect("pair is in S_n*");
        if delta.apply(0) != pair.s {
            out.literal_delta_endpoint_failures += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(tau: &[usize], s: usize) -> PermutationPair {
        PermutationPair::new(Permutation::from_one_line(tau).unwrap(), s - 1).unwrap()
    }

    #[test]
    fn star_sizes() {
        for (n, size) in [(1, 1), (2, 2), (3, 6), (4, 24)] {
            assert_eq!(star_pairs(n).len(), size);
        }
    }

    #[test]
    fn rejects_pairs_outside_star() {
        let t = Permutation::from_one_line(&[2, 1]).unwrap();
        assert!(matches!(PermutationPair::new(t, 0), Err(BijectionError::NotInStar { .. })));
    }

    #[test]
    fn singleton() {
        let p = pair(&[1], 1);
        assert_eq!(theta_map(&p), p);
        assert_eq!(delta_map(&p), p);
    }

    #[test]
    fn n2_exhaustive() {
        // (id, 1) has row sequence (2, 1), so it pairs with (id, 2)
        assert_eq!(theta_map(&pair(&[1, 2], 1)), pair(&[1, 2], 2));
        assert_eq!(theta_map(&pair(&[1, 2], 2)), pair(&[1, 2], 1));
        for p in star_pairs(2) {
            assert_eq!(delta_map(&theta_map(&p)), p);
        }
    }

    #[test]
    fn agrees_with_literal_construction_off_the_boundary() {
        for n in 1..=4 {
            for p in star_pairs(n) {
                if p.s() != 0 {
                    let (theta, t1) = theta_literal(&p);
                    let image = theta_map(&p);
                    assert_eq!((image.tau(), image.s()), (&theta, t1));
                }
                if p.s() != n - 1 {
                    let (delta, an) = delta_literal(p.tau(), p.s()).unwrap();
                    let image = delta_map(&p);
                    assert_eq!((image.tau(), image.s()), (&delta, an));
                }
            }
        }
    }

    #[test]
    fn literal_theta_leaves_star_at_s_equal_one() {
        let (theta, p) = theta_literal(&pair(&[1, 2], 1));
        assert_eq!(theta.one_line(), vec![2, 1]);
        assert_ne!(theta.apply(p), p);
    }

    #[test]
    fn endpoint_counterexample() {
        // tau = [3 2 1], s = 2: rows (3, 1, 2), image (id, 3) with id(3) = 3 != 2
        let image = theta_map(&pair(&[3, 2, 1], 2));
        assert_eq!(image, pair(&[1, 2, 3], 3));
        assert_ne!(image.tau().apply(2), 1);
    }

    #[test]
    fn exhaustive_counts() {
        // frozen from an independent enumeration of the two constructions
        let expected = [(1, 0, 0, 0, 0, 0), (2, 1, 1, 0, 1, 1), (3, 2, 3, 1, 2, 2), (4, 6, 10, 4, 6, 6)];
        for (n, lit_star, lit_inv, lit_end, th_end, de_end) in expected {
            let s = check_bijection(n);
            assert!(s.is_bijection(), "n = {n}");
            assert_eq!(s.literal_theta_not_in_star, lit_star);
            assert_eq!(s.literal_inverse_failures, lit_inv);
            assert_eq!(s.literal_theta_endpoint_failures, lit_end);
            assert_eq!(s.theta_endpoint_failures.len(), th_end);
            assert_eq!(s.delta_endpoint_failures.len(), de_end);
        }
    }
}
