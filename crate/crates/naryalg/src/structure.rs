//! Structural invariants of skew n-ary algebras: derived and lower central
//! series, nilpotency and solvability, characteristic sequences and filiform
//! detection, derivation algebras, and the rank of the diagonal derivation
//! torus relative to a declared basis.

use crate::matrix::Matrix;
use crate::product::NAryProduct;
use crate::rational::{rat, zero_vector, Rational};
use crate::subspace::Subspace;
use itertools::Itertools;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("algebra is not nilpotent")]
    NotNilpotentAlgebra,
    #[error("adjoint operator is not nilpotent")]
    NotNilpotentOperator,
    #[error("tuple is not independent modulo the derived subspace V^2")]
    DependentVectors,
    #[error("expected {expected} vectors, got {got}")]
    WrongTupleLength { expected: usize, got: usize },
}

/// Which descending series a report describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    /// `V^{(1)} = V`, `V^{(k)} = mu(V^{(k-1)}, V^{(k-1)}, V, ..., V)`.
    Derived,
    /// `V^1 = V`, `V^k = mu(V^{k-1}, V, ..., V)`.
    LowerCentral,
}

/// A computed descending series. Terms strictly decrease in dimension until
/// the series either vanishes (`vanishing_index` is the 1-based index of the
/// zero term) or stabilizes at a nonzero subspace (`stabilized`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub terms: Vec<Subspace>,
    pub stabilized: bool,
    pub vanishing_index: Option<usize>,
}

impl SeriesReport {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    pub fn vanishes(&self) -> bool {
        self.vanishing_index.is_some()
    }
}

fn run_series(prod: &NAryProduct, kind: SeriesKind) -> SeriesReport {
    let p = prod.dim();
    let full = Subspace::full(p);
    let mut terms = vec![full.clone()];
    loop {
        let prev = terms.last().unwrap().clone();
        if prev.is_zero() {
            break;
        }
        let mut parts = vec![full.clone(); prod.arity()];
        parts[0] = prev.clone();
        if kind == SeriesKind::Derived && prod.arity() >= 2 {
            parts[1] = prev.clone();
        }
        let next = prod.product_subspace(&parts).expect("matching dimensions");
        if next == prev {
            return SeriesReport {
                kind,
                terms,
                stabilized: true,
                vanishing_index: None,
            };
        }
        terms.push(next.clone());
        if next.is_zero() {
            break;
        }
    }
    let vanishing_index = Some(terms.len());
    SeriesReport {
        kind,
        terms,
        stabilized: false,
        vanishing_index,
    }
}

pub fn derived_series(prod: &NAryProduct) -> SeriesReport {
    run_series(prod, SeriesKind::Derived)
}

pub fn lower_central_series(prod: &NAryProduct) -> SeriesReport {
    run_series(prod, SeriesKind::LowerCentral)
}

pub fn is_nilpotent(prod: &NAryProduct) -> bool {
    lower_central_series(prod).vanishes()
}

pub fn is_solvable(prod: &NAryProduct) -> bool {
    derived_series(prod).vanishes()
}

/// The subspace `V^2 = mu(V, ..., V)`.
pub fn derived_subspace(prod: &NAryProduct) -> Subspace {
    let full = Subspace::full(prod.dim());
    prod.product_subspace(&vec![full; prod.arity()])
        .expect("matching dimensions")
}

/// `dim V/V^2`, the number of generators of a nilpotent algebra.
pub fn generators_quotient_dim(prod: &NAryProduct) -> usize {
    prod.dim() - derived_subspace(prod).dim()
}

/// Nilpotency of every adjoint operator of strictly increasing basis
/// `(n-1)`-tuples. For nilpotent algebras this is the Engel-type criterion;
/// basis adjoints stand proxy for all adjoints, and agreement with
/// [`is_nilpotent`] is validated per algebra rather than assumed.
pub fn check_kasymov(prod: &NAryProduct) -> bool {
    let p = prod.dim();
    for tuple in (1..=p).combinations(prod.arity() - 1) {
        let ad = prod.basis_adjoint(&tuple).expect("valid indices");
        if ad.matrix.nilpotent_jordan_blocks().is_err() {
            return false;
        }
    }
    true
}

/// The non-increasing Jordan block sizes of an adjoint operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicSequence {
    parts: Vec<usize>,
}

impl CharacteristicSequence {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CharacteristicSequence { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Lexicographic comparison, the order used to maximize over tuples.
    pub fn lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.parts.cmp(&other.parts)
    }

    /// The extremal sequence `(p - n + 1, 1, ..., 1)` of a filiform algebra.
    pub fn filiform_cap(p: usize, n: usize) -> Self {
        let mut parts = vec![p - n + 1];
        parts.extend(std::iter::repeat(1).take(n - 1));
        CharacteristicSequence { parts }
    }
}

impl std::fmt::Display for CharacteristicSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({})",
            self.parts
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

fn check_independent_mod_v2(
    prod: &NAryProduct,
    v2: &Subspace,
    vectors: &[Vec<Rational>],
) -> Result<(), StructureError> {
    let n = prod.arity();
    if vectors.len() != n - 1 {
        return Err(StructureError::WrongTupleLength {
            expected: n - 1,
            got: vectors.len(),
        });
    }
    let mut rows: Vec<Vec<Rational>> = v2.basis().to_vec();
    rows.extend(vectors.iter().cloned());
    let combined = Subspace::from_rows(prod.dim(), rows);
    if combined.dim() != v2.dim() + (n - 1) {
        return Err(StructureError::DependentVectors);
    }
    Ok(())
}

/// Jordan block sizes of `ad(vectors)` for `n-1` vectors independent modulo
/// `V^2`, sorted non-increasing.
pub fn characteristic_tuple(
    prod: &NAryProduct,
    vectors: &[Vec<Rational>],
) -> Result<CharacteristicSequence, StructureError> {
    if !is_nilpotent(prod) {
        return Err(StructureError::NotNilpotentAlgebra);
    }
    let v2 = derived_subspace(prod);
    check_independent_mod_v2(prod, &v2, vectors)?;
    let ad = prod.adjoint(vectors).expect("valid tuple length");
    let blocks = ad
        .matrix
        .nilpotent_jordan_blocks()
        .map_err(|_| StructureError::NotNilpotentOperator)?;
    Ok(CharacteristicSequence::new(blocks))
}

/// Number of pseudo-random candidate tuples drawn (per fixed seed) when
/// maximizing the characteristic sequence.
pub const CHAR_SEQ_RANDOM_TUPLES: usize = 8;

/// The characteristic sequence: the lexicographic maximum of
/// [`characteristic_tuple`] over candidate `(n-1)`-tuples outside `V^2`.
///
/// Candidates are the strictly increasing tuples of standard basis vectors
/// complementary to the pivots of `V^2`, the caller-supplied extras, and
/// [`CHAR_SEQ_RANDOM_TUPLES`] seeded pseudo-random rational tuples. The
/// result is certified when it reaches the theoretical cap
/// `(p - n + 1, 1, ..., 1)` or the algebra is abelian (where every adjoint
/// vanishes); otherwise it is a lower bound for the true maximum.
pub fn characteristic_sequence(
    prod: &NAryProduct,
    extra_candidates: &[Vec<Vec<Rational>>],
    seed: u64,
) -> Result<(CharacteristicSequence, bool), StructureError> {
    if !is_nilpotent(prod) {
        return Err(StructureError::NotNilpotentAlgebra);
    }
    let n = prod.arity();
    let p = prod.dim();
    if prod.is_abelian() {
        return Ok((CharacteristicSequence::new(vec![1; p]), true));
    }
    let v2 = derived_subspace(prod);
    let pivots = v2.pivot_columns();
    let generators: Vec<usize> = (1..=p).filter(|i| !pivots.contains(&(i - 1))).collect();

    let mut candidates: Vec<Vec<Vec<Rational>>> = Vec::new();
    for combo in generators.iter().combinations(n - 1) {
        candidates.push(
            combo
                .into_iter()
                .map(|&i| crate::rational::unit_vector(p, i))
                .collect(),
        );
    }
    candidates.extend(extra_candidates.iter().cloned());

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut drawn = 0;
    while drawn < CHAR_SEQ_RANDOM_TUPLES {
        let tuple: Vec<Vec<Rational>> = (0..n - 1)
            .map(|_| (0..p).map(|_| rat(rng.gen_range(-9..=9))).collect())
            .collect();
        drawn += 1;
        if check_independent_mod_v2(prod, &v2, &tuple).is_ok() {
            candidates.push(tuple);
        }
    }

    let cap = CharacteristicSequence::filiform_cap(p, n);
    let mut best: Option<CharacteristicSequence> = None;
    for tuple in &candidates {
        if check_independent_mod_v2(prod, &v2, tuple).is_err() {
            continue;
        }
        let seq = characteristic_tuple(prod, tuple)?;
        let better = match &best {
            None => true,
            Some(b) => seq.lex_cmp(b) == std::cmp::Ordering::Greater,
        };
        if better {
            best = Some(seq);
        }
        if best.as_ref().unwrap().lex_cmp(&cap) == std::cmp::Ordering::Equal {
            break;
        }
    }
    let best = best.ok_or(StructureError::DependentVectors)?;
    let certified = best.lex_cmp(&cap) == std::cmp::Ordering::Equal;
    Ok((best, certified))
}

/// True iff the characteristic sequence attains the extremal value
/// `(p - n + 1, 1, ..., 1)`.
pub fn is_filiform(prod: &NAryProduct) -> Result<bool, StructureError> {
    let (seq, _) = characteristic_sequence(prod, &[], 0)?;
    let cap = CharacteristicSequence::filiform_cap(prod.dim(), prod.arity());
    Ok(seq.lex_cmp(&cap) == std::cmp::Ordering::Equal)
}

/// Basis of the space of derivations: all `D` with
/// `D(mu(v_1, ..., v_n)) = sum_i mu(v_1, ..., D(v_i), ..., v_n)`,
/// solved as one exact linear system in the `p^2` entries of `D`.
pub fn derivation_algebra(prod: &NAryProduct) -> Vec<Matrix> {
    let p = prod.dim();
    let n = prod.arity();
    let tuples = crate::product::canonical_keys(n, p, prod.symmetry());
    // unknown x_{a,b} = D_{a,b}, flattened row-major
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for tuple in &tuples {
        let value = prod.basis_bracket(tuple).expect("valid indices");
        // one equation per output coordinate r
        let mut eqs = vec![zero_vector(p * p); p];
        // D applied to mu(e_tuple): sum_b value_b * x_{r,b}
        for (b, coeff) in value.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (r, eq) in eqs.iter_mut().enumerate() {
                eq[r * p + b] += coeff;
            }
        }
        // minus sum over slots: mu(..., e_b at slot j, ...)_r * x_{b, tuple_j}
        let mut modified = tuple.clone();
        for j in 0..n {
            let original = modified[j];
            for b in 1..=p {
                modified[j] = b;
                let term = prod.basis_bracket(&modified).expect("valid indices");
                for (r, eq) in eqs.iter_mut().enumerate() {
                    if !term[r].is_zero() {
                        eq[(b - 1) * p + (original - 1)] -= &term[r];
                    }
                }
            }
            modified[j] = original;
        }
        rows.extend(eqs.into_iter().filter(|eq| !eq.iter().all(Zero::is_zero)));
    }
    if rows.is_empty() {
        // no constraints: every linear map is a derivation
        return (0..p * p)
            .map(|k| {
                let mut m = Matrix::zero(p, p);
                m.set(k / p, k % p, rat(1));
                m
            })
            .collect();
    }
    let kernel = Matrix::from_rows(rows).nullspace();
    kernel
        .basis()
        .iter()
        .map(|flat| Matrix::from_fn(p, p, |r, c| flat[r * p + c].clone()))
        .collect()
}

/// True iff the commutator of any two basis derivations stays inside the
/// span of the derivation basis.
pub fn derivations_closed_under_commutator(prod: &NAryProduct) -> bool {
    let basis = derivation_algebra(prod);
    if basis.is_empty() {
        return true;
    }
    let p = prod.dim();
    let span = Subspace::from_rows(p * p, basis.iter().map(Matrix::vectorize).collect());
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            if !span.contains(&a.commutator(b).vectorize()) {
                return false;
            }
        }
    }
    true
}

/// Decides whether some rational combination of the derivation basis is an
/// invertible operator.
///
/// `det(x_1 D_1 + ... + x_k D_k)` is a polynomial of total degree at most
/// `p`, so it vanishes identically iff it vanishes on the principal lattice
/// of the simplex `{x_i >= 0, sum x_i <= p}` (unisolvent for total degree
/// `p`). The lattice is scanned in a fixed order (by total degree, then
/// lexicographically), which makes the decision deterministic and a false
/// negative impossible.
pub fn has_nonsingular_derivation(prod: &NAryProduct) -> bool {
    let basis = derivation_algebra(prod);
    if basis.is_empty() {
        return false;
    }
    let p = prod.dim();
    let k = basis.len();
    for total in 0..=p {
        for point in compositions(total, k) {
            let mut m = Matrix::zero(p, p);
            for (coeff, d) in point.iter().zip(&basis) {
                if *coeff > 0 {
                    m = m.add(&d.scale(&rat(*coeff as i64)));
                }
            }
            if !m.det().is_zero() {
                return true;
            }
        }
    }
    false
}

/// All ways to write `total` as an ordered sum of `k` non-negative parts,
/// lexicographically.
fn compositions(total: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    if k == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, k - 1) {
            let mut v = vec![first];
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

/// The linear system cutting out diagonal derivations in the canonical
/// basis: each nonzero structure constant on key `(i_1, ..., i_n)` with a
/// nonzero component on `e_l` imposes
/// `lambda_{i_1} + ... + lambda_{i_n} = lambda_l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    /// 1-based basis indices labelling the unknowns `lambda_i`.
    pub basis_labels: Vec<usize>,
    /// One row per constraint, columns indexed by the unknowns.
    pub constraint_matrix: Matrix,
    /// `p - rank(constraint_matrix)`: the dimension of the space of
    /// diagonal derivations, i.e. the rank relative to this basis.
    pub solution_dim: usize,
}

impl WeightSystem {
    /// Canonical basis of the solution space of the weight constraints.
    pub fn solution_space(&self) -> Subspace {
        self.constraint_matrix.nullspace()
    }
}

/// Solves for all diagonal maps `f(e_i) = lambda_i e_i` that are
/// derivations of the product, relative to the canonical basis.
pub fn diagonal_derivation_weights(prod: &NAryProduct) -> WeightSystem {
    let p = prod.dim();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (key, value) in prod.constants() {
        for (l0, coeff) in value.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let mut row = zero_vector(p);
            for &i in key {
                row[i - 1] += rat(1);
            }
            row[l0] -= rat(1);
            if !row.iter().all(Zero::is_zero) {
                rows.push(row);
            }
        }
    }
    let constraint_matrix = if rows.is_empty() {
        Matrix::zero(0, p)
    } else {
        Matrix::from_rows(rows)
    };
    let solution_dim = p - constraint_matrix.rank();
    WeightSystem {
        basis_labels: (1..=p).collect(),
        constraint_matrix,
        solution_dim,
    }
}
