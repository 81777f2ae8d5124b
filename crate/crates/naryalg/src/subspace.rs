//! Subspaces of `K^p` in canonical reduced row-echelon form.
//!
//! A [`Subspace`] is the currency of every series and ideal computation:
//! because its basis is the canonical reduced form of the row space, two
//! subspaces are equal as sets of vectors iff they are equal field-for-field.

use crate::matrix::Matrix;
use crate::rational::Rational;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubspaceError {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
}

/// A subspace of `K^p`, stored as the nonzero rows of a reduced
/// row-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_rows(ambient, Matrix::identity(ambient).row_vectors())
    }

    /// Canonicalizes the span of the given rows.
    pub fn from_rows(ambient: usize, rows: Vec<Vec<Rational>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == ambient), "ragged rows");
        if rows.is_empty() {
            return Subspace::zero(ambient);
        }
        let (reduced, rank) = Matrix::from_rows(rows).rref();
        let basis = (0..rank).map(|r| reduced.row(r).to_vec()).collect();
        Subspace { ambient, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Column indices (0-based) of the pivots of the reduced basis.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|row| row.iter().position(|x| !x.is_zero()).unwrap())
            .collect()
    }

    /// True iff `v` reduces to zero against the basis.
    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        let mut v = v.to_vec();
        for (row, &pivot) in self.basis.iter().zip(&self.pivot_columns()) {
            if v[pivot].is_zero() {
                continue;
            }
            let factor = v[pivot].clone();
            for (a, b) in v.iter_mut().zip(row) {
                *a -= &factor * b;
            }
        }
        v.iter().all(Zero::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Smallest subspace containing both operands.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, SubspaceError> {
        if self.ambient != other.ambient {
            return Err(SubspaceError::AmbientMismatch(self.ambient, other.ambient));
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Ok(Subspace::from_rows(self.ambient, rows))
    }
}
