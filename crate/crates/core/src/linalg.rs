//! Exact linear algebra over a scalar field: an incremental sparse row
//! echelon form that remembers how each pivot row was built, and dense
//! Gauss-Jordan inversion.

use std::collections::BTreeMap;

use crate::Scalar;

pub type SparseVec<S> = BTreeMap<usize, S>;

#[derive(Clone, Debug)]
struct Row<S> {
    entries: SparseVec<S>,
    /// Coefficients of the inserted vectors that sum to this row.
    combo: SparseVec<S>,
}

/// Row echelon form of the span of a growing list of sparse vectors.
///
/// Every inserted vector gets an origin index (its insertion position). After
/// reduction, a vector in the span is expressed as a combination of origins,
/// which is what makes membership answers certifiable.
#[derive(Clone, Debug, Default)]
pub struct Echelon<S> {
    rows: BTreeMap<usize, Row<S>>,
    inserted: usize,
}

/// Result of reducing a vector against an [`Echelon`].
#[derive(Clone, Debug)]
pub struct Reduction<S> {
    /// What is left after subtracting pivot rows; zero iff the vector is in
    /// the span.
    pub residual: SparseVec<S>,
    /// Coefficients `c_g` with `vector = sum_g c_g * inserted_g + residual`.
    pub combination: SparseVec<S>,
}

impl<S: Scalar> Echelon<S> {
    pub fn new() -> Self {
        Self {
            rows: BTreeMap::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    /// Adds a vector to the spanning list; returns `true` if it raised the
    /// rank.
    pub fn insert(&mut self, vector: SparseVec<S>) -> bool {
        let origin = self.inserted;
        self.inserted += 1;
        let red = self.reduce(vector);
        let Some((&pivot, lead)) = red.residual.iter().next() else {
            return false;
        };
        let inv = S::one() / lead.clone();
        let entries = red
            .residual
            .iter()
            .map(|(&c, x)| (c, x.clone() * inv.clone()))
            .collect();
        // row = (v - combination) / lead
        let mut combo: SparseVec<S> = red
            .combination
            .into_iter()
            .map(|(g, x)| (g, -(x * inv.clone())))
            .collect();
        combo.insert(origin, inv);
        self.rows.insert(pivot, Row { entries, combo });
        true
    }

    pub fn reduce(&self, mut vector: SparseVec<S>) -> Reduction<S> {
        vector.retain(|_, x| !x.is_zero());
        let mut combination = SparseVec::new();
        let mut cursor = 0usize;
        loop {
            let next = vector
                .range(cursor..)
                .find(|(c, _)| self.rows.contains_key(c))
                .map(|(&c, x)| (c, x.clone()));
            let Some((col, coeff)) = next else { break };
            let row = &self.rows[&col];
            axpy(&mut vector, &-coeff.clone(), &row.entries);
            axpy(&mut combination, &coeff, &row.combo);
            cursor = col + 1;
        }
        Reduction {
            residual: vector,
            combination,
        }
    }

    pub fn contains(&self, vector: SparseVec<S>) -> bool {
        self.reduce(vector).residual.is_empty()
    }
}

/// `y += a * x`, dropping cancelled entries.
pub fn axpy<S: Scalar>(y: &mut SparseVec<S>, a: &S, x: &SparseVec<S>) {
    if a.is_zero() {
        return;
    }
    for (&k, v) in x {
        let add = a.clone() * v.clone();
        match y.get_mut(&k) {
            Some(cur) => {
                *cur = cur.clone() + add;
                if cur.is_zero() {
                    y.remove(&k);
                }
            }
            None => {
                y.insert(k, add);
            }
        }
    }
}

/// Inverse of a dense square matrix by Gauss-Jordan elimination, or `None`
/// when it is singular.
pub fn invert<S: Scalar>(m: &[Vec<S>]) -> Option<Vec<Vec<S>>> {
    let n = m.len();
    let mut a: Vec<Vec<S>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { S::one() } else { S::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = S::one() / a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let sub = f.clone() * a[col][c].clone();
                    a[r][c] = a[r][c].clone() - sub;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}
