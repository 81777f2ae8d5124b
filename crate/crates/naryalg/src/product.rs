//! n-ary products given by structure constants.
//!
//! An [`NAryProduct`] is a multilinear map `mu: V^n -> V` on `V = K^p`,
//! stored sparsely: a map from canonical basis index tuples to coefficient
//! vectors in `K^p`. The symmetry tag decides which tuples are canonical and
//! how non-canonical tuples evaluate:
//!
//! - `Skew`: keys are strictly increasing; a permuted tuple picks up the
//!   permutation sign; any repeated index evaluates to zero.
//! - `Symmetric`: keys are non-decreasing; evaluation is permutation
//!   invariant.
//! - `Cyclic` (arity 3 only): keys are the lexicographically least cyclic
//!   rotation; evaluation is invariant under cyclic shifts of the arguments.
//! - `General`: every tuple is stored explicitly; missing keys are zero.
//!
//! One type with a symmetry tag, rather than a type per symmetry, keeps the
//! identity checkers agnostic of the storage details.

use crate::matrix::Matrix;
use crate::rational::{add_vectors, axpy, is_zero_vector, zero_vector, Rational};
use crate::subspace::Subspace;
use itertools::Itertools;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProductError {
    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("tuple {0:?} has a repeated index but a nonzero coefficient")]
    RepeatedIndexNonzero(Vec<usize>),
    #[error("coefficient vector has length {got}, expected {expected}")]
    BadCoefficientLength { expected: usize, got: usize },
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("cyclic symmetry requires arity 3, got {0}")]
    CyclicArity(usize),
    #[error("product is not skew-symmetric")]
    NotSkew,
    #[error("linear map shape {rows}x{cols} does not match dims {target_dim}<-{source_dim}")]
    MapShapeMismatch {
        rows: usize,
        cols: usize,
        source_dim: usize,
        target_dim: usize,
    },
    #[error("matrix is not invertible")]
    NotInvertible,
}

/// Symmetry kind of an n-ary product's structure constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    General,
    Skew,
    Symmetric,
    Cyclic,
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Symmetry::General => "general",
            Symmetry::Skew => "skew",
            Symmetry::Symmetric => "symmetric",
            Symmetry::Cyclic => "cyclic",
        };
        f.write_str(s)
    }
}

impl Symmetry {
    pub fn parse(s: &str) -> Option<Symmetry> {
        match s {
            "general" => Some(Symmetry::General),
            "skew" => Some(Symmetry::Skew),
            "symmetric" => Some(Symmetry::Symmetric),
            "cyclic" => Some(Symmetry::Cyclic),
            _ => None,
        }
    }
}

/// A linear map `K^source -> K^target`, as a `target x source` matrix in the
/// canonical bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    pub source_dim: usize,
    pub target_dim: usize,
    pub matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        LinearMap {
            source_dim: matrix.cols(),
            target_dim: matrix.rows(),
            matrix,
        }
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.apply(v)
    }
}

/// An n-ary product on `K^p` given by sparse structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NAryProduct {
    arity: usize,
    dim: usize,
    symmetry: Symmetry,
    constants: BTreeMap<Vec<usize>, Vec<Rational>>,
}

/// Sorts a tuple and reports the sign of the sorting permutation;
/// `None` if the tuple has a repeated entry.
fn sort_with_sign(tuple: &[usize]) -> Option<(Vec<usize>, i8)> {
    let mut t = tuple.to_vec();
    let mut sign = 1i8;
    // insertion sort, counting swaps
    for i in 1..t.len() {
        let mut j = i;
        while j > 0 && t[j - 1] > t[j] {
            t.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if t.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((t, sign))
    }
}

/// Lexicographically least cyclic rotation of a tuple.
fn min_rotation(tuple: &[usize]) -> Vec<usize> {
    (0..tuple.len())
        .map(|s| {
            let mut r = tuple[s..].to_vec();
            r.extend_from_slice(&tuple[..s]);
            r
        })
        .min()
        .unwrap()
}

impl NAryProduct {
    /// The zero (abelian) product of the given arity and dimension.
    pub fn zero_product(arity: usize, dim: usize, symmetry: Symmetry) -> Self {
        assert!(arity >= 2 && dim >= 1);
        NAryProduct {
            arity,
            dim,
            symmetry,
            constants: BTreeMap::new(),
        }
    }

    /// Builds a skew product: tuples are sorted into strictly increasing
    /// keys, coefficients scaled by the sorting permutation's sign,
    /// duplicates summed. A tuple with a repeated index must carry a zero
    /// coefficient vector.
    pub fn make_skew(
        arity: usize,
        dim: usize,
        raw: &[(Vec<usize>, Vec<Rational>)],
    ) -> Result<Self, ProductError> {
        Self::make(arity, dim, Symmetry::Skew, raw)
    }

    pub fn make_general(
        arity: usize,
        dim: usize,
        raw: &[(Vec<usize>, Vec<Rational>)],
    ) -> Result<Self, ProductError> {
        Self::make(arity, dim, Symmetry::General, raw)
    }

    pub fn make_symmetric(
        arity: usize,
        dim: usize,
        raw: &[(Vec<usize>, Vec<Rational>)],
    ) -> Result<Self, ProductError> {
        Self::make(arity, dim, Symmetry::Symmetric, raw)
    }

    pub fn make_cyclic(
        arity: usize,
        dim: usize,
        raw: &[(Vec<usize>, Vec<Rational>)],
    ) -> Result<Self, ProductError> {
        Self::make(arity, dim, Symmetry::Cyclic, raw)
    }

    /// Shared constructor: canonicalizes keys per the symmetry kind and sums
    /// duplicates; zero coefficient vectors are dropped.
    pub fn make(
        arity: usize,
        dim: usize,
        symmetry: Symmetry,
        raw: &[(Vec<usize>, Vec<Rational>)],
    ) -> Result<Self, ProductError> {
        assert!(arity >= 2 && dim >= 1);
        if symmetry == Symmetry::Cyclic && arity != 3 {
            return Err(ProductError::CyclicArity(arity));
        }
        let mut prod = NAryProduct::zero_product(arity, dim, symmetry);
        for (tuple, coeffs) in raw {
            if tuple.len() != arity {
                return Err(ProductError::ArityMismatch {
                    expected: arity,
                    got: tuple.len(),
                });
            }
            for &i in tuple {
                if i == 0 || i > dim {
                    return Err(ProductError::IndexOutOfRange { index: i, dim });
                }
            }
            if coeffs.len() != dim {
                return Err(ProductError::BadCoefficientLength {
                    expected: dim,
                    got: coeffs.len(),
                });
            }
            let (key, sign) = match symmetry {
                Symmetry::Skew => match sort_with_sign(tuple) {
                    Some(ks) => ks,
                    None => {
                        if is_zero_vector(coeffs) {
                            continue;
                        }
                        return Err(ProductError::RepeatedIndexNonzero(tuple.clone()));
                    }
                },
                Symmetry::Symmetric => {
                    let mut k = tuple.clone();
                    k.sort_unstable();
                    (k, 1)
                }
                Symmetry::Cyclic => (min_rotation(tuple), 1),
                Symmetry::General => (tuple.clone(), 1),
            };
            let mut add = coeffs.clone();
            if sign < 0 {
                for c in &mut add {
                    *c = -c.clone();
                }
            }
            let entry = prod
                .constants
                .entry(key.clone())
                .or_insert_with(|| zero_vector(dim));
            *entry = add_vectors(entry, &add);
            if is_zero_vector(entry) {
                prod.constants.remove(&key);
            }
        }
        Ok(prod)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn is_skew(&self) -> bool {
        self.symmetry == Symmetry::Skew
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.is_empty()
    }

    /// Canonically keyed structure constants.
    pub fn constants(&self) -> &BTreeMap<Vec<usize>, Vec<Rational>> {
        &self.constants
    }

    /// Evaluates the product on basis vectors `e_{idx[0]}, ..., e_{idx[n-1]}`,
    /// resolving the symmetry kind.
    pub fn basis_bracket(&self, idx: &[usize]) -> Result<Vec<Rational>, ProductError> {
        if idx.len() != self.arity {
            return Err(ProductError::ArityMismatch {
                expected: self.arity,
                got: idx.len(),
            });
        }
        for &i in idx {
            if i == 0 || i > self.dim {
                return Err(ProductError::IndexOutOfRange {
                    index: i,
                    dim: self.dim,
                });
            }
        }
        Ok(self.basis_bracket_unchecked(idx))
    }

    fn basis_bracket_unchecked(&self, idx: &[usize]) -> Vec<Rational> {
        match self.symmetry {
            Symmetry::General => self
                .constants
                .get(idx)
                .cloned()
                .unwrap_or_else(|| zero_vector(self.dim)),
            Symmetry::Symmetric => {
                let mut k = idx.to_vec();
                k.sort_unstable();
                self.constants
                    .get(&k)
                    .cloned()
                    .unwrap_or_else(|| zero_vector(self.dim))
            }
            Symmetry::Cyclic => {
                let k = min_rotation(idx);
                self.constants
                    .get(&k)
                    .cloned()
                    .unwrap_or_else(|| zero_vector(self.dim))
            }
            Symmetry::Skew => match sort_with_sign(idx) {
                None => zero_vector(self.dim),
                Some((key, sign)) => match self.constants.get(&key) {
                    None => zero_vector(self.dim),
                    Some(v) if sign > 0 => v.clone(),
                    Some(v) => v.iter().map(|c| -c).collect(),
                },
            },
        }
    }

    /// Full multilinear expansion of the product on arbitrary vectors.
    pub fn bracket(&self, args: &[Vec<Rational>]) -> Result<Vec<Rational>, ProductError> {
        if args.len() != self.arity {
            return Err(ProductError::ArityMismatch {
                expected: self.arity,
                got: args.len(),
            });
        }
        for a in args {
            if a.len() != self.dim {
                return Err(ProductError::BadCoefficientLength {
                    expected: self.dim,
                    got: a.len(),
                });
            }
        }
        let supports: Vec<Vec<usize>> = args
            .iter()
            .map(|a| {
                (1..=self.dim)
                    .filter(|&i| !a[i - 1].is_zero())
                    .collect::<Vec<_>>()
            })
            .collect();
        let mut out = zero_vector(self.dim);
        if supports.iter().any(Vec::is_empty) {
            return Ok(out);
        }
        for combo in supports.iter().map(|s| s.iter().copied()).multi_cartesian_product() {
            let mut coeff = Rational::from_integer(1.into());
            for (a, &i) in args.iter().zip(&combo) {
                coeff *= &a[i - 1];
            }
            let value = self.basis_bracket_unchecked(&combo);
            axpy(&mut out, &coeff, &value);
        }
        Ok(out)
    }

    /// The adjoint operator `v -> mu(args_1, ..., args_{n-1}, v)` as a
    /// `p x p` matrix in the canonical basis.
    pub fn adjoint(&self, args: &[Vec<Rational>]) -> Result<LinearMap, ProductError> {
        if args.len() != self.arity - 1 {
            return Err(ProductError::ArityMismatch {
                expected: self.arity - 1,
                got: args.len(),
            });
        }
        let p = self.dim;
        let mut full_args: Vec<Vec<Rational>> = args.to_vec();
        full_args.push(zero_vector(p));
        let mut m = Matrix::zero(p, p);
        for j in 1..=p {
            let mut e = zero_vector(p);
            e[j - 1] = Rational::from_integer(1.into());
            *full_args.last_mut().unwrap() = e;
            let col = self.bracket(&full_args)?;
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j - 1, v);
            }
        }
        Ok(LinearMap::new(m))
    }

    /// Adjoint of a tuple of basis vectors, by 1-based indices.
    pub fn basis_adjoint(&self, idx: &[usize]) -> Result<LinearMap, ProductError> {
        let args: Vec<Vec<Rational>> = idx
            .iter()
            .map(|&i| {
                let mut e = zero_vector(self.dim);
                e[i - 1] = Rational::from_integer(1.into());
                e
            })
            .collect();
        self.adjoint(&args)
    }

    /// Span of all brackets with one argument drawn from each part.
    pub fn product_subspace(&self, parts: &[Subspace]) -> Result<Subspace, ProductError> {
        if parts.len() != self.arity {
            return Err(ProductError::ArityMismatch {
                expected: self.arity,
                got: parts.len(),
            });
        }
        for part in parts {
            if part.ambient_dim() != self.dim {
                return Err(ProductError::AmbientMismatch(part.ambient_dim(), self.dim));
            }
        }
        if parts.iter().any(|p| p.is_zero()) {
            return Ok(Subspace::zero(self.dim));
        }
        let mut rows = Vec::new();
        for combo in parts
            .iter()
            .map(|p| p.basis().iter())
            .multi_cartesian_product()
        {
            let args: Vec<Vec<Rational>> = combo.into_iter().cloned().collect();
            let value = self.bracket(&args)?;
            if !is_zero_vector(&value) {
                rows.push(value);
            }
        }
        Ok(Subspace::from_rows(self.dim, rows))
    }

    /// True iff `mu(W, ..., W)` is contained in `W`.
    pub fn is_subalgebra(&self, w: &Subspace) -> Result<bool, ProductError> {
        let parts = vec![w.clone(); self.arity];
        let image = self.product_subspace(&parts)?;
        Ok(w.contains_subspace(&image))
    }

    /// True iff `mu(V, ..., I, ..., V)` is contained in `I` for every slot
    /// position. Every slot is checked even for skew products; the
    /// redundancy is cheap and keeps one code path.
    pub fn is_ideal(&self, ideal: &Subspace) -> Result<bool, ProductError> {
        if ideal.ambient_dim() != self.dim {
            return Err(ProductError::AmbientMismatch(
                ideal.ambient_dim(),
                self.dim,
            ));
        }
        let full = Subspace::full(self.dim);
        for slot in 0..self.arity {
            let parts: Vec<Subspace> = (0..self.arity)
                .map(|s| if s == slot { ideal.clone() } else { full.clone() })
                .collect();
            let image = self.product_subspace(&parts)?;
            if !ideal.contains_subspace(&image) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Checks `mu_2 o f^{(x)n} = f o mu_1` on basis tuples.
    pub fn is_morphism(
        src: &NAryProduct,
        dst: &NAryProduct,
        f: &LinearMap,
    ) -> Result<bool, ProductError> {
        if src.arity != dst.arity {
            return Err(ProductError::ArityMismatch {
                expected: src.arity,
                got: dst.arity,
            });
        }
        if f.source_dim != src.dim || f.target_dim != dst.dim {
            return Err(ProductError::MapShapeMismatch {
                rows: f.matrix.rows(),
                cols: f.matrix.cols(),
                source_dim: src.dim,
                target_dim: dst.dim,
            });
        }
        let images: Vec<Vec<Rational>> = (1..=src.dim)
            .map(|j| {
                let mut e = zero_vector(src.dim);
                e[j - 1] = Rational::from_integer(1.into());
                f.apply(&e)
            })
            .collect();
        for tuple in canonical_tuples_for_pair(src, dst) {
            let lhs = {
                let args: Vec<Vec<Rational>> = tuple.iter().map(|&i| images[i - 1].clone()).collect();
                dst.bracket(&args)?
            };
            let rhs = f.apply(&src.basis_bracket(&tuple)?);
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Structure constants in the basis whose vectors are the columns of
    /// `g`: the product `mu'(x_1, ..., x_n) = g^{-1} mu(g x_1, ..., g x_n)`,
    /// with the same symmetry kind.
    pub fn transform(&self, g: &Matrix) -> Result<NAryProduct, ProductError> {
        if g.rows() != self.dim || g.cols() != self.dim {
            return Err(ProductError::AmbientMismatch(g.rows(), self.dim));
        }
        let g_inv = g.inverse().ok_or(ProductError::NotInvertible)?;
        let columns: Vec<Vec<Rational>> = (0..self.dim)
            .map(|j| (0..self.dim).map(|i| g.get(i, j).clone()).collect())
            .collect();
        let mut raw = Vec::new();
        for key in canonical_keys(self.arity, self.dim, self.symmetry) {
            let args: Vec<Vec<Rational>> = key.iter().map(|&i| columns[i - 1].clone()).collect();
            let value = g_inv.apply(&self.bracket(&args)?);
            if !is_zero_vector(&value) {
                raw.push((key, value));
            }
        }
        NAryProduct::make(self.arity, self.dim, self.symmetry, &raw)
    }
}

/// The canonical basis tuples of a given symmetry kind: strictly increasing
/// for skew, non-decreasing for symmetric, minimal rotations for cyclic,
/// everything for general.
pub fn canonical_keys(arity: usize, dim: usize, symmetry: Symmetry) -> Vec<Vec<usize>> {
    match symmetry {
        Symmetry::Skew => (1..=dim).combinations(arity).collect(),
        Symmetry::Symmetric => (1..=dim).combinations_with_replacement(arity).collect(),
        Symmetry::Cyclic => {
            let mut keys: Vec<Vec<usize>> = std::iter::repeat(1..=dim)
                .take(arity)
                .multi_cartesian_product()
                .map(|t| min_rotation(&t))
                .collect();
            keys.sort();
            keys.dedup();
            keys
        }
        Symmetry::General => std::iter::repeat(1..=dim)
            .take(arity)
            .multi_cartesian_product()
            .collect(),
    }
}

/// Tuples sufficient to compare two products of equal arity: the canonical
/// tuples of the shared symmetry when both sides have one, all tuples
/// otherwise.
fn canonical_tuples_for_pair(a: &NAryProduct, b: &NAryProduct) -> Vec<Vec<usize>> {
    let symmetry = if a.symmetry == b.symmetry {
        a.symmetry
    } else {
        Symmetry::General
    };
    canonical_keys(a.arity, a.dim, symmetry)
}
