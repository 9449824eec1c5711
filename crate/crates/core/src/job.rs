//! JSON job descriptions: a ring, a square matrix in text syntax, and options.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::{Matrix, MatrixError};
use crate::parse::{parse_element, ParseError};
use crate::random::{default_generators, generic_matrix_in, random_matrix, rng, RandomParams};
use crate::ring::{RingDescriptor, RingElement, RingError, RingKind};
use crate::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSpec {
    pub kind: RingKind,
    #[serde(default)]
    pub generator_count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator_prefix: Option<String>,
}

impl RingSpec {
    pub fn descriptor(&self) -> Result<RingDescriptor, RingError> {
        let prefix = self
            .generator_prefix
            .as_deref()
            .unwrap_or(self.kind.default_prefix());
        RingDescriptor::new(self.kind, self.generator_count, prefix)
    }
}

impl From<&RingDescriptor> for RingSpec {
    fn from(r: &RingDescriptor) -> Self {
        let prefix = r.generator_prefix();
        Self {
            kind: r.kind(),
            generator_count: r.generator_count(),
            generator_prefix: (r.kind().has_generators() && prefix != r.kind().default_prefix())
                .then(|| prefix.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct JobOptions {
    pub seed: u64,
    pub trials: usize,
    pub format: OutputFormat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobSpec {
    pub ring: RingSpec,
    pub n: usize,
    pub entries: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjugator: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub options: JobOptions,
}

#[derive(Debug, Error)]
pub enum JobError {
    #[error("invalid job JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("n must be at least 1")]
    Empty,
    #[error("{what}: expected {n} rows of {n} entries, row {row} has {len}")]
    Shape {
        what: &'static str,
        n: usize,
        row: usize,
        len: usize,
    },
    #[error("{what}: expected {n} rows, found {rows}")]
    RowCount {
        what: &'static str,
        n: usize,
        rows: usize,
    },
    #[error("{what}[{row}][{col}]: {error}")]
    Entry {
        what: &'static str,
        row: usize,
        col: usize,
        error: ParseError,
    },
    #[error("n = {n} exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

impl JobSpec {
    pub fn from_json(src: &str) -> Result<Self, JobError> {
        Ok(serde_json::from_str(src)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("job specs always serialize")
    }

    pub fn from_matrix<S: Scalar>(a: &Matrix<RingElement<S>>) -> Self {
        Self {
            ring: RingSpec::from(a.ring()),
            n: a.n(),
            entries: rows_as_text(a),
            conjugator: None,
            options: JobOptions::default(),
        }
    }

    /// Generic `n x n` matrix over a free algebra on `n^2` generators.
    pub fn generic(n: usize) -> Self {
        Self::from_matrix(&generic_matrix_in::<crate::Rational>(&RingDescriptor::free(n * n), n))
    }

    /// Random matrix; `generators` defaults per ring kind.
    pub fn random(
        kind: RingKind,
        n: usize,
        seed: u64,
        generators: Option<usize>,
        params: &RandomParams,
    ) -> Result<Self, JobError> {
        let k = generators.unwrap_or_else(|| default_generators(kind));
        let ring = RingDescriptor::new(kind, if kind.has_generators() { k } else { 0 }, kind.default_prefix())?;
        let a = random_matrix::<crate::Rational, _>(&ring, n, &mut rng(seed), params);
        let mut job = Self::from_matrix(&a);
        job.options.seed = seed;
        Ok(job)
    }

    pub fn descriptor(&self) -> Result<RingDescriptor, JobError> {
        Ok(self.ring.descriptor()?)
    }

    pub fn matrix<S: Scalar>(&self) -> Result<Matrix<RingElement<S>>, JobError> {
        let ring = self.descriptor()?;
        parse_matrix(&ring, self.n, &self.entries, "entries")
    }

    pub fn conjugator_matrix<S: Scalar>(&self) -> Result<Option<Matrix<RingElement<S>>>, JobError> {
        let ring = self.descriptor()?;
        self.conjugator
            .as_ref()
            .map(|rows| parse_matrix(&ring, self.n, rows, "conjugator"))
            .transpose()
    }

    pub fn check_limit(&self, limit: usize) -> Result<(), JobError> {
        if self.n > limit {
            Err(JobError::TooLarge { n: self.n, limit })
        } else {
            Ok(())
        }
    }
}

pub fn rows_as_text<S: Scalar>(a: &Matrix<RingElement<S>>) -> Vec<Vec<String>> {
    a.rows().map(|row| row.iter().map(|e| e.to_string()).collect()).collect()
}

fn parse_matrix<S: Scalar>(
    ring: &RingDescriptor,
    n: usize,
    rows: &[Vec<String>],
    what: &'static str,
) -> Result<Matrix<RingElement<S>>, JobError> {
    if n == 0 {
        return Err(JobError::Empty);
    }
    if rows.len() != n {
        return Err(JobError::RowCount { what, n, rows: rows.len() });
    }
    let mut parsed = Vec::with_capacity(n);
    for (row, cells) in rows.iter().enumerate() {
        if cells.len() != n {
            return Err(JobError::Shape { what, n, row, len: cells.len() });
        }
        let mut out = Vec::with_capacity(n);
        for (col, src) in cells.iter().enumerate() {
            out.push(parse_element(ring, src).map_err(|error| JobError::Entry { what, row, col, error })?);
        }
        parsed.push(out);
    }
    Ok(Matrix::from_rows(ring, parsed)?)
}
