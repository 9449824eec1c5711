//! Exact arithmetic in the supported coefficient rings.
//!
//! Five rings are available, all algebras over an exact scalar field `S`:
//! the scalars themselves, commutative polynomials, the free associative
//! algebra, the Grassmann algebra on finitely many anticommuting generators,
//! and the algebra of 2x2 upper triangular matrices.

mod element;
mod structure;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use element::RingElement;
pub use structure::{center_contains, is_in_commutator_subgroup, CommutatorTest};

/// Largest supported generator count.
pub const MAX_GENERATORS: usize = u16::MAX as usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RingKind {
    #[serde(rename = "rational")]
    Rational,
    #[serde(rename = "commutative-poly")]
    CommutativePoly,
    #[serde(rename = "free-algebra")]
    FreeAlgebra,
    #[serde(rename = "grassmann")]
    Grassmann,
    #[serde(rename = "upper-triangular-2")]
    UpperTriangular2,
}

impl RingKind {
    pub const ALL: [RingKind; 5] = [
        RingKind::Rational,
        RingKind::CommutativePoly,
        RingKind::FreeAlgebra,
        RingKind::Grassmann,
        RingKind::UpperTriangular2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RingKind::Rational => "rational",
            RingKind::CommutativePoly => "commutative-poly",
            RingKind::FreeAlgebra => "free-algebra",
            RingKind::Grassmann => "grassmann",
            RingKind::UpperTriangular2 => "upper-triangular-2",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    /// Whether generators are part of the ring's presentation.
    pub fn has_generators(self) -> bool {
        !matches!(self, RingKind::Rational | RingKind::UpperTriangular2)
    }

    pub fn is_commutative(self) -> bool {
        matches!(self, RingKind::Rational | RingKind::CommutativePoly)
    }

    /// Rings known to satisfy `[x,y][u,v] = 0`.
    pub fn satisfies_commutator_product_identity(self) -> bool {
        matches!(
            self,
            RingKind::Rational | RingKind::CommutativePoly | RingKind::UpperTriangular2
        )
    }

    pub fn default_prefix(self) -> &'static str {
        match self {
            RingKind::Grassmann => "v",
            _ => "x",
        }
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Identifies a coefficient ring: its kind, generator count and the prefix
/// used when reading and printing generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    kind: RingKind,
    generator_count: usize,
    generator_prefix: Arc<str>,
}

impl RingDescriptor {
    pub fn new(kind: RingKind, generator_count: usize, prefix: &str) -> Result<Self, RingError> {
        if !kind.has_generators() && generator_count != 0 {
            return Err(RingError::InvalidDescriptor(format!(
                "{kind} takes no generators, got {generator_count}"
            )));
        }
        if generator_count > MAX_GENERATORS {
            return Err(RingError::InvalidDescriptor(format!(
                "at most {MAX_GENERATORS} generators are supported"
            )));
        }
        if prefix.is_empty()
            || !prefix.chars().all(|c| c.is_ascii_alphabetic() || c == '_')
            || prefix == "u"
        {
            return Err(RingError::InvalidDescriptor(format!(
                "generator prefix {prefix:?} must be alphabetic and not \"u\""
            )));
        }
        Ok(Self {
            kind,
            generator_count,
            generator_prefix: prefix.into(),
        })
    }

    pub fn rational() -> Self {
        Self::new(RingKind::Rational, 0, "x").unwrap()
    }

    pub fn commutative(generators: usize) -> Self {
        Self::new(RingKind::CommutativePoly, generators, "x").unwrap()
    }

    pub fn free(generators: usize) -> Self {
        Self::new(RingKind::FreeAlgebra, generators, "x").unwrap()
    }

    pub fn grassmann(generators: usize) -> Self {
        Self::new(RingKind::Grassmann, generators, "v").unwrap()
    }

    pub fn upper_triangular() -> Self {
        Self::new(RingKind::UpperTriangular2, 0, "x").unwrap()
    }

    /// Descriptor of `kind` with the given generator count (ignored for the
    /// generator-free kinds) and the default prefix.
    pub fn of_kind(kind: RingKind, generators: usize) -> Self {
        let k = if kind.has_generators() { generators } else { 0 };
        Self::new(kind, k, kind.default_prefix()).unwrap()
    }

    pub fn with_prefix(self, prefix: &str) -> Result<Self, RingError> {
        Self::new(self.kind, self.generator_count, prefix)
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn generator_prefix(&self) -> &str {
        &self.generator_prefix
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kind.has_generators() {
            write!(f, "{}({} generators, prefix {})", self.kind, self.generator_count, self.generator_prefix)
        } else {
            write!(f, "{}", self.kind)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("ring mismatch: {left} vs {right}")]
    DescriptorMismatch {
        left: RingDescriptor,
        right: RingDescriptor,
    },
    #[error("generator index {index} out of range 1..={count}")]
    GeneratorOutOfRange { index: usize, count: usize },
    #[error("operation needs a {expected} ring, got {found}")]
    WrongKind { expected: RingKind, found: RingKind },
    #[error("invalid ring descriptor: {0}")]
    InvalidDescriptor(String),
}

fn check_same(a: &RingDescriptor, b: &RingDescriptor) -> Result<(), RingError> {
    if a == b {
        Ok(())
    } else {
        Err(RingError::DescriptorMismatch {
            left: a.clone(),
            right: b.clone(),
        })
    }
}

/// Checked ring addition.
pub fn elem_add<S: crate::Scalar>(
    a: &RingElement<S>,
    b: &RingElement<S>,
) -> Result<RingElement<S>, RingError> {
    check_same(a.ring(), b.ring())?;
    Ok(a + b)
}

/// Checked ring multiplication.
pub fn elem_mul<S: crate::Scalar>(
    a: &RingElement<S>,
    b: &RingElement<S>,
) -> Result<RingElement<S>, RingError> {
    check_same(a.ring(), b.ring())?;
    Ok(a * b)
}

/// Checked commutator `ab - ba`.
pub fn commutator<S: crate::Scalar>(
    a: &RingElement<S>,
    b: &RingElement<S>,
) -> Result<RingElement<S>, RingError> {
    check_same(a.ring(), b.ring())?;
    Ok(&(a * b) - &(b * a))
}
