//! Decision procedures for the defining identities of n-ary algebras.
//!
//! Every checker either returns `Pass` (or `PassVacuous` when the identity
//! has no independent tuples to bite on) or a [`Witness`]: the first basis
//! tuple, in lexicographic order, where the identity fails, together with
//! the exact nonzero defect vector.
//!
//! Multilinearity makes basis enumeration complete, and where an identity is
//! alternating in a block of arguments the enumeration is restricted to
//! strictly increasing tuples in that block. Checkers never sample; every
//! verdict is a finite exact computation.

use crate::groupalg::shuffles;
use crate::perm::{all_permutations, Permutation};
use crate::product::{NAryProduct, ProductError, Symmetry};
use crate::rational::{axpy, is_zero_vector, sub_vectors, zero_vector, Rational};
use itertools::Itertools;
use num_traits::Zero;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CheckError {
    #[error("identity requires a skew product")]
    NotSkew,
    #[error("identity requires arity {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("permutation degree {got} does not match arity {expected}")]
    PermutationSize { expected: usize, got: usize },
    #[error("internal inconsistency: the two routes for 3-Lie admissibility disagree")]
    InternalInconsistency,
    #[error(transparent)]
    Product(#[from] ProductError),
}

/// A concrete failure of an identity: re-evaluating `identity` at
/// `tuple` reproduces `defect` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub identity: String,
    pub tuple: Vec<usize>,
    pub defect: Vec<Rational>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails at ({}) with defect [{}]",
            self.identity,
            self.tuple
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(" "),
            crate::rational::format_vector(&self.defect)
        )
    }
}

/// Outcome of an identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// The identity holds because no admissible tuple exists (for instance
    /// the sh-Jacobi identity in dimension below `2n - 1`).
    PassVacuous,
    Fail(Witness),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        !matches!(self, Verdict::Fail(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Fail(w) => Some(w),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "PASS"),
            Verdict::PassVacuous => write!(f, "PASS (vacuous)"),
            Verdict::Fail(w) => write!(f, "{w}"),
        }
    }
}

/// Evaluates `mu(e_{rest[0]}, ..., vec at slot, ..., e_{rest[..]})`: the
/// bracket with one vector argument spliced into `slot` (0-based) among
/// basis arguments.
pub(crate) fn bracket_with_vector_at(
    prod: &NAryProduct,
    vec: &[Rational],
    slot: usize,
    rest: &[usize],
) -> Vec<Rational> {
    let p = prod.dim();
    let mut out = zero_vector(p);
    let mut idx = Vec::with_capacity(prod.arity());
    for (j, c) in vec.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        idx.clear();
        idx.extend_from_slice(&rest[..slot]);
        idx.push(j + 1);
        idx.extend_from_slice(&rest[slot..]);
        let value = prod.basis_bracket(&idx).expect("valid indices");
        axpy(&mut out, c, &value);
    }
    out
}

/// The nested evaluation `mu(x_1, ..., x_q, mu(x_{q+1}, ..., x_{q+n}),
/// x_{q+n+1}, ..., x_{2n-1})` on basis indices, with the inner block
/// optionally rearranged before multiplying.
fn nested_eval(prod: &NAryProduct, tuple: &[usize], q: usize, inner_twist: Option<&Permutation>) -> Vec<Rational> {
    let n = prod.arity();
    let mut inner_block: Vec<usize> = tuple[q..q + n].to_vec();
    if let Some(t) = inner_twist {
        inner_block = t.pull(&inner_block);
    }
    let inner = prod.basis_bracket(&inner_block).expect("valid indices");
    let mut rest: Vec<usize> = Vec::with_capacity(n - 1);
    rest.extend_from_slice(&tuple[..q]);
    rest.extend_from_slice(&tuple[q + n..]);
    bracket_with_vector_at(prod, &inner, q, &rest)
}

/// Defect of the Filippov Jacobi identity at basis tuples `u` (n entries)
/// and `v` (n-1 entries):
/// `[[u_1,...,u_n],v_1,...,v_{n-1}] - sum_i [u_1,...,[u_i,v_1,...,v_{n-1}],...,u_n]`.
pub fn filippov_defect(prod: &NAryProduct, u: &[usize], v: &[usize]) -> Vec<Rational> {
    let inner = prod.basis_bracket(u).expect("valid indices");
    let mut defect = bracket_with_vector_at(prod, &inner, 0, v);
    let mut inner_args = Vec::with_capacity(prod.arity());
    for i in 0..u.len() {
        inner_args.clear();
        inner_args.push(u[i]);
        inner_args.extend_from_slice(v);
        let inner_i = prod.basis_bracket(&inner_args).expect("valid indices");
        let rest: Vec<usize> = u
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &x)| x)
            .collect();
        let term = bracket_with_vector_at(prod, &inner_i, i, &rest);
        for (d, t) in defect.iter_mut().zip(&term) {
            *d -= t;
        }
    }
    defect
}

/// Checks the Filippov (n-Lie) Jacobi identity on all strictly increasing
/// basis tuples. The identity is alternating separately in the outer block
/// and in the inner block, so increasing tuples are complete.
pub fn check_filippov(prod: &NAryProduct) -> Result<Verdict, CheckError> {
    if !prod.is_skew() {
        return Err(CheckError::NotSkew);
    }
    let n = prod.arity();
    let p = prod.dim();
    for u in (1..=p).combinations(n) {
        for v in (1..=p).combinations(n - 1) {
            let defect = filippov_defect(prod, &u, &v);
            if !is_zero_vector(&defect) {
                let mut tuple = u.clone();
                tuple.extend_from_slice(&v);
                return Ok(Verdict::Fail(Witness {
                    identity: "filippov".into(),
                    tuple,
                    defect,
                }));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Defect of the n-Leibniz identity at basis tuples `v` (n-1 entries) and
/// `u` (n entries):
/// `mu(v_1,...,v_{n-1},mu(u_1,...,u_n)) - sum_i mu(u_1,...,mu(v_1,...,v_{n-1},u_i),...,u_n)`.
pub fn leibniz_defect(prod: &NAryProduct, v: &[usize], u: &[usize]) -> Vec<Rational> {
    let n = prod.arity();
    let inner = prod.basis_bracket(u).expect("valid indices");
    let mut defect = bracket_with_vector_at(prod, &inner, n - 1, v);
    let mut inner_args = Vec::with_capacity(n);
    for i in 0..u.len() {
        inner_args.clear();
        inner_args.extend_from_slice(v);
        inner_args.push(u[i]);
        let inner_i = prod.basis_bracket(&inner_args).expect("valid indices");
        let rest: Vec<usize> = u
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &x)| x)
            .collect();
        let term = bracket_with_vector_at(prod, &inner_i, i, &rest);
        for (d, t) in defect.iter_mut().zip(&term) {
            *d -= t;
        }
    }
    defect
}

/// Checks the n-Leibniz identity (every adjoint operator is a derivation)
/// on basis tuples; the witness tuple lists the n-1 adjoint arguments first.
pub fn check_n_leibniz(prod: &NAryProduct) -> Verdict {
    let n = prod.arity();
    let p = prod.dim();
    let (v_tuples, u_tuples) = match prod.symmetry() {
        Symmetry::Skew => (
            (1..=p).combinations(n - 1).collect::<Vec<_>>(),
            (1..=p).combinations(n).collect::<Vec<_>>(),
        ),
        Symmetry::Symmetric => (
            (1..=p).combinations_with_replacement(n - 1).collect(),
            (1..=p).combinations_with_replacement(n).collect(),
        ),
        _ => (all_tuples(p, n - 1), all_tuples(p, n)),
    };
    for v in &v_tuples {
        for u in &u_tuples {
            let defect = leibniz_defect(prod, v, u);
            if !is_zero_vector(&defect) {
                let mut tuple = v.clone();
                tuple.extend_from_slice(u);
                return Verdict::Fail(Witness {
                    identity: "n-leibniz".into(),
                    tuple,
                    defect,
                });
            }
        }
    }
    Verdict::Pass
}

/// Defect of the commutativity identity at a basis tuple:
/// `sum over Sigma_n of sign(sigma) * mu(v_{sigma(1)}, ..., v_{sigma(n)})`.
pub fn commutative_defect(prod: &NAryProduct, tuple: &[usize]) -> Vec<Rational> {
    let mut defect = zero_vector(prod.dim());
    for sigma in all_permutations(prod.arity()) {
        let permuted = sigma.pull(tuple);
        let value = prod.basis_bracket(&permuted).expect("valid indices");
        let sign = Rational::from_integer(sigma.sign().into());
        axpy(&mut defect, &sign, &value);
    }
    defect
}

/// Checks commutativity: the sign-weighted sum over all argument
/// permutations vanishes. The sum is alternating in the tuple, so strictly
/// increasing tuples are complete.
pub fn check_commutative(prod: &NAryProduct) -> Verdict {
    let n = prod.arity();
    let p = prod.dim();
    for tuple in (1..=p).combinations(n) {
        let defect = commutative_defect(prod, &tuple);
        if !is_zero_vector(&defect) {
            return Verdict::Fail(Witness {
                identity: "commutative".into(),
                tuple,
                defect,
            });
        }
    }
    Verdict::Pass
}

/// Defect of the sh-Jacobi identity at a strictly increasing basis
/// `(2n-1)`-tuple: the sign-weighted sum over all `(n, n-1)`-shuffles of
/// `mu(mu(x_{s(1)},...,x_{s(n)}), x_{s(n+1)}, ..., x_{s(2n-1)})`.
pub fn sh_jacobi_defect(prod: &NAryProduct, tuple: &[usize]) -> Vec<Rational> {
    let n = prod.arity();
    let mut defect = zero_vector(prod.dim());
    for sigma in shuffles(n, n - 1) {
        let pulled = sigma.pull(tuple);
        let term = nested_eval(prod, &pulled, 0, None);
        let sign = Rational::from_integer(sigma.sign().into());
        axpy(&mut defect, &sign, &term);
    }
    defect
}

/// Checks the sh-Jacobi (Lie n-algebra) identity over strictly increasing
/// basis `(2n-1)`-tuples; vacuous below dimension `2n - 1`.
pub fn check_sh_jacobi(prod: &NAryProduct) -> Result<Verdict, CheckError> {
    if !prod.is_skew() {
        return Err(CheckError::NotSkew);
    }
    let n = prod.arity();
    let p = prod.dim();
    if p < 2 * n - 1 {
        return Ok(Verdict::PassVacuous);
    }
    for tuple in (1..=p).combinations(2 * n - 1) {
        let defect = sh_jacobi_defect(prod, &tuple);
        if !is_zero_vector(&defect) {
            return Ok(Verdict::Fail(Witness {
                identity: "sh-jacobi".into(),
                tuple,
                defect,
            }));
        }
    }
    Ok(Verdict::Pass)
}

fn all_tuples(p: usize, len: usize) -> Vec<Vec<usize>> {
    std::iter::repeat(1..=p)
        .take(len)
        .multi_cartesian_product()
        .collect()
}

/// Sign `(-1)^k` as a rational.
fn neg_pow(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::from_integer(1.into())
    } else {
        Rational::from_integer((-1).into())
    }
}

/// Defect of the sigma-twisted partial associativity identity at a basis
/// `(2n-1)`-tuple: `sum_q (-1)^{q(n-1)} (-1)^{nq eps(sigma)}
/// mu o (I_q (x) (mu o Phi_{sigma^{nq}}) (x) I_{n-q-1})`.
///
/// `Phi_tau` moves the factor in slot `j` to slot `tau(j)`, as in the
/// twisted-associativity definition; the identity permutation recovers the
/// plain partial associativity defect.
pub fn sigma_partial_defect(prod: &NAryProduct, sigma: &Permutation, tuple: &[usize]) -> Vec<Rational> {
    let n = prod.arity();
    let parity = sigma.parity() as usize;
    let mut defect = zero_vector(prod.dim());
    for q in 0..n {
        let twist = sigma.pow((n * q) % lcm_order(sigma));
        // Phi_tau indexes by tau^{-1}
        let twist_inv = twist.inverse();
        let term = nested_eval(prod, tuple, q, Some(&twist_inv));
        let sign = neg_pow(q * (n - 1)) * neg_pow(n * q * parity);
        axpy(&mut defect, &sign, &term);
    }
    defect
}

/// Order of the permutation (for reducing large powers).
fn lcm_order(sigma: &Permutation) -> usize {
    let mut k = 1;
    let mut acc = sigma.clone();
    while !acc.is_identity() {
        acc = sigma.compose(&acc);
        k += 1;
    }
    k
}

/// Checks sigma-partial associativity over all basis `(2n-1)`-tuples.
pub fn check_sigma_partial_assoc(
    prod: &NAryProduct,
    sigma: &Permutation,
) -> Result<Verdict, CheckError> {
    if sigma.degree() != prod.arity() {
        return Err(CheckError::PermutationSize {
            expected: prod.arity(),
            got: sigma.degree(),
        });
    }
    let n = prod.arity();
    let p = prod.dim();
    let name = if sigma.is_identity() {
        "partial-assoc".to_string()
    } else {
        format!("sigma-partial-assoc[sigma={sigma}]")
    };
    for tuple in all_tuples(p, 2 * n - 1) {
        let defect = sigma_partial_defect(prod, sigma, &tuple);
        if !is_zero_vector(&defect) {
            return Ok(Verdict::Fail(Witness {
                identity: name,
                tuple,
                defect,
            }));
        }
    }
    Ok(Verdict::Pass)
}

/// Checks partial associativity: `sum_q (-1)^{q(n-1)}
/// mu o (I_q (x) mu (x) I_{n-q-1}) = 0` on all basis tuples.
pub fn check_partial_assoc(prod: &NAryProduct) -> Verdict {
    check_sigma_partial_assoc(prod, &Permutation::identity(prod.arity()))
        .expect("identity permutation always fits")
}

/// Defect of sigma-total associativity at `(tuple, q)`: the `q = 0`
/// untwisted nesting minus the twisted nesting at `q`.
pub fn sigma_total_defect(
    prod: &NAryProduct,
    sigma: &Permutation,
    tuple: &[usize],
    q: usize,
) -> Vec<Rational> {
    let n = prod.arity();
    let base = nested_eval(prod, tuple, 0, None);
    let twist = sigma.pow((n * q) % lcm_order(sigma));
    let twist_inv = twist.inverse();
    let term = nested_eval(prod, tuple, q, Some(&twist_inv));
    sub_vectors(&base, &term)
}

/// Checks sigma-total associativity: each twisted nesting `q = 1..n-1`
/// must equal the untwisted `q = 0` nesting, on all basis tuples. The
/// witness name records which nesting failed.
pub fn check_sigma_total_assoc(
    prod: &NAryProduct,
    sigma: &Permutation,
) -> Result<Verdict, CheckError> {
    if sigma.degree() != prod.arity() {
        return Err(CheckError::PermutationSize {
            expected: prod.arity(),
            got: sigma.degree(),
        });
    }
    let n = prod.arity();
    let p = prod.dim();
    let base_name = if sigma.is_identity() {
        "total-assoc".to_string()
    } else {
        format!("sigma-total-assoc[sigma={sigma}]")
    };
    for tuple in all_tuples(p, 2 * n - 1) {
        for q in 1..n {
            let defect = sigma_total_defect(prod, sigma, &tuple, q);
            if !is_zero_vector(&defect) {
                return Ok(Verdict::Fail(Witness {
                    identity: format!("{base_name}(q={q})"),
                    tuple,
                    defect,
                }));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Checks total associativity: all nestings of `mu` agree.
pub fn check_total_assoc(prod: &NAryProduct) -> Verdict {
    check_sigma_total_assoc(prod, &Permutation::identity(prod.arity()))
        .expect("identity permutation always fits")
}

/// The skew product whose bracket is the sign-weighted sum of the input
/// product over all argument permutations.
pub fn antisymmetrize(prod: &NAryProduct) -> NAryProduct {
    let n = prod.arity();
    let p = prod.dim();
    let mut raw = Vec::new();
    for key in (1..=p).combinations(n) {
        let mut value = zero_vector(p);
        for sigma in all_permutations(n) {
            let permuted = sigma.pull(&key);
            let term = prod.basis_bracket(&permuted).expect("valid indices");
            let sign = Rational::from_integer(sigma.sign().into());
            axpy(&mut value, &sign, &term);
        }
        if !is_zero_vector(&value) {
            raw.push((key, value));
        }
    }
    NAryProduct::make_skew(n, p, &raw).expect("increasing keys are valid")
}

/// Defect of the explicit 3-Lie admissibility identity at a strictly
/// increasing basis 5-tuple: the sign-weighted sum over `Sigma_5` of the
/// three nesting patterns of the ternary product.
pub fn admissible_defect(prod: &NAryProduct, tuple: &[usize]) -> Vec<Rational> {
    let mut defect = zero_vector(prod.dim());
    for sigma in all_permutations(5) {
        let pulled = sigma.pull(tuple);
        let sign = Rational::from_integer(sigma.sign().into());
        for q in 0..3 {
            let term = nested_eval(prod, &pulled, q, None);
            axpy(&mut defect, &sign, &term);
        }
    }
    defect
}

/// Checks 3-Lie admissibility of a ternary product by two routes: the
/// explicit `Sigma_5` identity, and the sh-Jacobi identity of the
/// antisymmetrized product. The two routes compute the same sums, so any
/// disagreement is an internal error rather than a verdict.
pub fn check_3lie_admissible(prod: &NAryProduct) -> Result<Verdict, CheckError> {
    if prod.arity() != 3 {
        return Err(CheckError::ArityMismatch {
            expected: 3,
            got: prod.arity(),
        });
    }
    let p = prod.dim();
    let skew = antisymmetrize(prod);
    let sh = check_sh_jacobi(&skew)?;
    if p < 5 {
        return match sh {
            Verdict::PassVacuous => Ok(Verdict::PassVacuous),
            _ => Err(CheckError::InternalInconsistency),
        };
    }
    let mut direct = Verdict::Pass;
    for tuple in (1..=p).combinations(5) {
        let defect = admissible_defect(prod, &tuple);
        if !is_zero_vector(&defect) {
            direct = Verdict::Fail(Witness {
                identity: "3lie-admissible".into(),
                tuple,
                defect,
            });
            break;
        }
    }
    let consistent = match (&direct, &sh) {
        (Verdict::Pass, Verdict::Pass) => true,
        (Verdict::Fail(a), Verdict::Fail(b)) => a.tuple == b.tuple && a.defect == b.defect,
        _ => false,
    };
    if !consistent {
        return Err(CheckError::InternalInconsistency);
    }
    Ok(direct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, unit_vector};

    fn filiform4() -> NAryProduct {
        NAryProduct::make_skew(3, 4, &[(vec![1, 2, 3], unit_vector(4, 4))]).unwrap()
    }

    #[test]
    fn filiform_passes_filippov() {
        assert_eq!(check_filippov(&filiform4()).unwrap(), Verdict::Pass);
    }

    #[test]
    fn abelian_passes_everything() {
        let ab = NAryProduct::zero_product(3, 4, Symmetry::Skew);
        assert_eq!(check_filippov(&ab).unwrap(), Verdict::Pass);
        assert_eq!(check_n_leibniz(&ab), Verdict::Pass);
        assert_eq!(check_commutative(&ab), Verdict::Pass);
        assert_eq!(check_partial_assoc(&ab), Verdict::Pass);
        assert_eq!(check_total_assoc(&ab), Verdict::Pass);
    }

    #[test]
    fn filippov_requires_skew() {
        let general = NAryProduct::zero_product(3, 4, Symmetry::General);
        assert_eq!(check_filippov(&general).unwrap_err(), CheckError::NotSkew);
    }

    #[test]
    fn commutative_fails_on_nonzero_skew_products() {
        // the sign-weighted sum over Sigma_n of a skew bracket is n! times
        // the bracket, so it is nonzero exactly where the bracket is
        let prod = filiform4();
        let witness = match check_commutative(&prod) {
            Verdict::Fail(w) => w,
            other => panic!("expected witness, got {other:?}"),
        };
        assert_eq!(witness.tuple, vec![1, 2, 3]);
        assert_eq!(witness.defect, crate::rational::scale_vector(&rat(6), &unit_vector(4, 4)));
    }

    #[test]
    fn symmetric_products_are_commutative() {
        let prod =
            NAryProduct::make_symmetric(2, 2, &[(vec![1, 2], unit_vector(2, 1))]).unwrap();
        assert_eq!(check_commutative(&prod), Verdict::Pass);
    }

    #[test]
    fn sh_jacobi_vacuous_below_2n_minus_1() {
        // dim 4 < 5 admits no independent 5-tuple
        assert_eq!(check_sh_jacobi(&filiform4()).unwrap(), Verdict::PassVacuous);
    }

    #[test]
    fn leibniz_matches_filippov_on_skew_products() {
        for prod in [
            filiform4(),
            NAryProduct::make_skew(3, 3, &[(vec![1, 2, 3], unit_vector(3, 2))]).unwrap(),
            NAryProduct::make_skew(
                3,
                4,
                &[
                    (vec![1, 2, 3], unit_vector(4, 4)),
                    (vec![1, 2, 4], unit_vector(4, 1)),
                ],
            )
            .unwrap(),
        ] {
            assert_eq!(
                check_filippov(&prod).unwrap().is_pass(),
                check_n_leibniz(&prod).is_pass()
            );
        }
    }

    #[test]
    fn ternary_projection_product_fails_partial_assoc() {
        // x . y . z := x on K^2: constants [i j k] -> e_i
        let raw: Vec<(Vec<usize>, Vec<Rational>)> = all_tuples(2, 3)
            .into_iter()
            .map(|t| {
                let lead = t[0];
                (t, unit_vector(2, lead))
            })
            .collect();
        let prod = NAryProduct::make_general(3, 2, &raw).unwrap();
        assert!(matches!(check_partial_assoc(&prod), Verdict::Fail(_)));
    }

    #[test]
    fn antisymmetrize_skew_input_scales_by_factorial() {
        let prod = filiform4();
        let anti = antisymmetrize(&prod);
        let expected = NAryProduct::make_skew(
            3,
            4,
            &[(vec![1, 2, 3], crate::rational::scale_vector(&rat(6), &unit_vector(4, 4)))],
        )
        .unwrap();
        assert_eq!(anti, expected);
    }

    #[test]
    fn antisymmetrize_symmetric_input_is_zero() {
        let prod =
            NAryProduct::make_symmetric(3, 3, &[(vec![1, 2, 3], unit_vector(3, 1))]).unwrap();
        assert!(antisymmetrize(&prod).is_abelian());
    }

    #[test]
    fn admissible_below_dim_5_is_vacuous() {
        let prod = NAryProduct::zero_product(3, 2, Symmetry::General);
        assert_eq!(check_3lie_admissible(&prod).unwrap(), Verdict::PassVacuous);
    }

    #[test]
    fn sigma_checks_with_identity_match_untwisted() {
        let raw: Vec<(Vec<usize>, Vec<Rational>)> = vec![
            (vec![1, 1, 1], unit_vector(2, 1)),
            (vec![1, 2, 1], unit_vector(2, 2)),
        ];
        let prod = NAryProduct::make_general(3, 2, &raw).unwrap();
        let id = Permutation::identity(3);
        assert_eq!(
            check_partial_assoc(&prod).is_pass(),
            check_sigma_partial_assoc(&prod, &id).unwrap().is_pass()
        );
        assert_eq!(
            check_total_assoc(&prod).is_pass(),
            check_sigma_total_assoc(&prod, &id).unwrap().is_pass()
        );
        // and the defects agree term for term on every tuple
        for tuple in all_tuples(2, 5) {
            assert_eq!(
                sigma_partial_defect(&prod, &id, &tuple),
                {
                    let mut d = zero_vector(2);
                    for q in 0..3 {
                        let term = nested_eval(&prod, &tuple, q, None);
                        axpy(&mut d, &neg_pow(q * 2), &term);
                    }
                    d
                }
            );
        }
    }
}
