//! Dense exact matrices: reduced row echelon form, kernels, determinants,
//! and Jordan block sizes of nilpotent operators.
//!
//! Dimensions in this crate stay small (at most a few dozen), so a dense
//! row-major layout over [`Rational`] is the right trade-off. Pivoting is
//! first-nonzero with deterministic tie-breaking, which makes every reduced
//! form canonical: two row spaces are equal iff their reduced matrices are
//! field-for-field equal.

use crate::rational::{zero_vector, Rational};
use crate::subspace::Subspace;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix is not nilpotent: m^{power} is nonzero")]
    NotNilpotent { power: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// A dense `rows x cols` matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: zero_vector(rows * cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must share a length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let cur = out.get(r, c) + a * b;
                        out.set(r, c, cur);
                    }
                }
            }
        }
        out
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .fold(Rational::zero(), |acc, x| acc + x)
            })
            .collect()
    }

    /// `[a, b] = ab - ba` for square matrices of equal size.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// Flattens row-major into a single vector (for subspace membership of
    /// operator spaces).
    pub fn vectorize(&self) -> Vec<Rational> {
        self.entries.clone()
    }

    /// Reduced row-echelon form together with the rank.
    ///
    /// Pivot choice is the first nonzero entry in the leftmost unfinished
    /// column, scanning top to bottom, so the output is canonical for the
    /// row space.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let found = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero());
            let Some(r0) = found else { continue };
            if r0 != pivot_row {
                for c in 0..m.cols {
                    m.entries.swap(pivot_row * m.cols + c, r0 * m.cols + c);
                }
            }
            let inv = {
                let p = m.get(pivot_row, col).clone();
                p.recip()
            };
            for c in col..m.cols {
                let v = m.get(pivot_row, c) * &inv;
                m.set(pivot_row, c, v);
            }
            for r in 0..m.rows {
                if r == pivot_row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c) - &factor * m.get(pivot_row, c);
                    m.set(r, c, v);
                }
            }
            pivot_row += 1;
        }
        (m, pivot_row)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Exact kernel of the matrix, as a canonical subspace of `K^cols`.
    pub fn nullspace(&self) -> Subspace {
        let (r, rank) = self.rref();
        let mut pivot_of_row = Vec::with_capacity(rank);
        for row in 0..rank {
            let col = (0..r.cols).find(|&c| !r.get(row, c).is_zero()).unwrap();
            pivot_of_row.push(col);
        }
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; r.cols];
            for &c in &pivot_of_row {
                s[c] = true;
            }
            s
        };
        let mut kernel_rows = Vec::new();
        for free in 0..r.cols {
            if pivot_set[free] {
                continue;
            }
            let mut v = zero_vector(r.cols);
            v[free] = Rational::one();
            for (row, &pc) in pivot_of_row.iter().enumerate() {
                v[pc] = -r.get(row, free).clone();
            }
            kernel_rows.push(v);
        }
        Subspace::from_rows(self.cols, kernel_rows)
    }

    /// Exact determinant by fraction elimination; zero for non-square input
    /// is not defined (panics).
    pub fn det(&self) -> Rational {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let found = (col..n).find(|&r| !m.get(r, col).is_zero());
            let Some(r0) = found else {
                return Rational::zero();
            };
            if r0 != col {
                for c in 0..n {
                    m.entries.swap(col * n + c, r0 * n + c);
                }
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            let inv = pivot.recip();
            for r in col + 1..n {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col) * &inv;
                for c in col..n {
                    let v = m.get(r, c) - &factor * m.get(col, c);
                    m.set(r, c, v);
                }
            }
        }
        det
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Rational::one());
        }
        let (red, _) = aug.rref();
        // invertible iff the left block reduces to the identity
        for r in 0..n {
            for c in 0..n {
                let expected = if r == c { Rational::one() } else { Rational::zero() };
                if *red.get(r, c) != expected {
                    return None;
                }
            }
        }
        Some(Matrix::from_fn(n, n, |r, c| red.get(r, n + c).clone()))
    }

    /// Jordan block sizes of a nilpotent square matrix, in non-increasing
    /// order, from the rank sequence `r_k = rank(m^k)`: the number of blocks
    /// of size `>= k` equals `r_{k-1} - r_k`.
    pub fn nilpotent_jordan_blocks(&self) -> Result<Vec<usize>, MatrixError> {
        assert!(self.is_square(), "Jordan blocks of non-square matrix");
        let p = self.rows;
        let mut ranks = vec![p];
        let mut power = self.clone();
        let mut k = 1;
        loop {
            let r = power.rank();
            ranks.push(r);
            if r == 0 {
                break;
            }
            if k >= p {
                return Err(MatrixError::NotNilpotent { power: p });
            }
            power = power.mul(self);
            k += 1;
        }
        // blocks_ge[k] = number of blocks of size >= k, for k = 1..
        let blocks_ge: Vec<usize> = (1..ranks.len()).map(|k| ranks[k - 1] - ranks[k]).collect();
        let mut blocks = Vec::new();
        for k in (1..=blocks_ge.len()).rev() {
            let ge_k = blocks_ge[k - 1];
            let ge_k1 = if k < blocks_ge.len() { blocks_ge[k] } else { 0 };
            for _ in 0..ge_k - ge_k1 {
                blocks.push(k);
            }
        }
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        Ok(blocks)
    }
}
