use std::fmt;
use std::time::Duration;

use crate::matrix::Matrix;
use crate::ring::RingElement;
use crate::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    /// `tr(A*A) = tr(AA*)`.
    Prop21,
    /// Left and right Cayley-Hamilton identities with `C_i`, `D_i`.
    Thm22,
    /// `sum_{i,j} A^i lambda_i lambda_j A^j = 0`.
    Thm31,
    /// `lambda_i(G A G^-1) = lambda_i(A)`.
    Invariance,
    /// `sum A^i lambda_i lambda_j A^j = sum A^i C_i D_j A^j`.
    SandwichProduct,
}

impl Claim {
    pub fn name(self) -> &'static str {
        match self {
            Claim::Prop21 => "prop21",
            Claim::Thm22 => "thm22",
            Claim::Thm31 => "thm31",
            Claim::Invariance => "invariance",
            Claim::SandwichProduct => "sandwich-product",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
        })
    }
}

/// What is left of an identity after moving everything to one side.
#[derive(Clone, Debug, PartialEq)]
pub enum Residual<S: Scalar> {
    Element(RingElement<S>),
    Matrix(Matrix<RingElement<S>>),
    Parts(Vec<(String, Residual<S>)>),
}

impl<S: Scalar> Residual<S> {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Element(e) => e.is_zero(),
            Residual::Matrix(m) => m.is_zero(),
            Residual::Parts(parts) => parts.iter().all(|(_, r)| r.is_zero()),
        }
    }
}

impl<S: Scalar> fmt::Display for Residual<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Element(e) => write!(f, "{e}"),
            Residual::Matrix(m) => write!(f, "{m}"),
            Residual::Parts(parts) => {
                for (i, (name, r)) in parts.iter().enumerate() {
                    if i > 0 {
                        writeln!(f)?;
                    }
                    match r {
                        Residual::Matrix(_) | Residual::Parts(_) => write!(f, "{name}:\n{r}")?,
                        Residual::Element(_) => write!(f, "{name} = {r}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

/// A side condition checked along with the main identity, such as the
/// leading coefficient being `n!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Stats {
    /// Named counts (summands, term correspondences, ...), in insertion order.
    pub counts: Vec<(String, usize)>,
    pub max_degree: Option<usize>,
    pub elapsed: Duration,
}

impl Stats {
    pub fn count(&mut self, name: &str, value: usize) {
        self.counts.push((name.to_string(), value));
    }

    pub fn get(&self, name: &str) -> Option<usize> {
        self.counts.iter().find(|(k, _)| k == name).map(|&(_, v)| v)
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport<S: Scalar> {
    pub claim: Claim,
    pub verdict: Verdict,
    pub residual: Option<Residual<S>>,
    pub checks: Vec<Check>,
    pub stats: Stats,
}

impl<S: Scalar> VerificationReport<S> {
    /// The verdict is `Holds` iff the residual is zero and every check
    /// passed.
    pub fn new(claim: Claim, residual: Residual<S>, checks: Vec<Check>, stats: Stats) -> Self {
        let ok = residual.is_zero() && checks.iter().all(|c| c.passed);
        Self {
            claim,
            verdict: if ok { Verdict::Holds } else { Verdict::Violated },
            residual: Some(residual),
            checks,
            stats,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}
