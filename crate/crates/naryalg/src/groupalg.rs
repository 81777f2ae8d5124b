//! Exact computation in the group algebra `K[Sigma_m]`.
//!
//! The Jacobi identity of an n-Lie algebra can be encoded as one element `v`
//! of `K[Sigma_{2n-1}]`: the identity holds iff the map
//! `mu o (mu (x) I_{n-1})`, precomposed with the slot action of `v`, vanishes.
//! The fully antisymmetrized element `w` encodes the shuffle (sh) Jacobi
//! identity the same way, and the single composition `w o v = alpha(n) w`
//! is the whole proof that n-Lie implies sh-n-Lie. This module builds those
//! elements and verifies the composition identity exactly.

use crate::perm::{all_permutations, Permutation};
use crate::rational::{rat, Rational};
use num_traits::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

/// Full sums over `Sigma_m` are refused beyond this degree; `8!` terms and
/// up would grind without telling the caller anything new.
pub const MAX_FULL_SUM_DEGREE: usize = 7;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupAlgebraError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("full sum over Sigma_{0} refused (cap is Sigma_{MAX_FULL_SUM_DEGREE})")]
    DegreeTooLarge(usize),
    #[error("arity {0} out of the supported range {1}..={2}")]
    ArityOutOfRange(usize, usize, usize),
    #[error("w o v is not proportional to w")]
    NotProportional,
}

/// A formal rational combination of permutations of `{1, ..., m}`.
///
/// No zero coefficients are stored, so equality is canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    degree: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        GroupAlgebraElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(degree: usize) -> Self {
        Self::from_permutation(Permutation::identity(degree))
    }

    pub fn from_permutation(p: Permutation) -> Self {
        let degree = p.degree();
        let mut terms = BTreeMap::new();
        terms.insert(p, rat(1));
        GroupAlgebraElement { degree, terms }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, Rational> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Permutation) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, p: Permutation, c: Rational) {
        assert_eq!(p.degree(), self.degree, "degree mismatch");
        let becomes_zero = {
            let entry = self.terms.entry(p.clone()).or_insert_with(Rational::zero);
            *entry += c;
            entry.is_zero()
        };
        if becomes_zero {
            self.terms.remove(&p);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, GroupAlgebraError> {
        if self.degree != other.degree {
            return Err(GroupAlgebraError::DegreeMismatch(self.degree, other.degree));
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        GroupAlgebraElement {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(p, v)| (p.clone(), v * c))
                .collect(),
        }
    }

    /// Bilinear extension of permutation composition (right-to-left).
    pub fn compose(&self, other: &Self) -> Result<Self, GroupAlgebraError> {
        if self.degree != other.degree {
            return Err(GroupAlgebraError::DegreeMismatch(self.degree, other.degree));
        }
        let mut out = Self::zero(self.degree);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.compose(q), a * b);
            }
        }
        Ok(out)
    }
}

/// All `(n, k)`-shuffles of `Sigma_{n+k}`: permutations increasing on the
/// first `n` slots and on the last `k` slots. Lexicographically ordered;
/// there are exactly `C(n+k, n)` of them.
pub fn shuffles(n: usize, k: usize) -> Vec<Permutation> {
    assert!(n >= 1 && k >= 1);
    let m = n + k;
    use itertools::Itertools;
    (1..=m)
        .combinations(n)
        .map(|first| {
            let rest: Vec<usize> = (1..=m).filter(|v| !first.contains(v)).collect();
            let mut images = first;
            images.extend(rest);
            Permutation::new(images).expect("shuffle is a permutation")
        })
        .collect()
}

/// The element `v` of `K[Sigma_{2n-1}]` that encodes the n-Lie Jacobi
/// identity: writing `F` for `mu o (mu (x) I_{n-1})`, the identity holds iff
/// `sum over the terms of v` of `coeff * F(x_{sigma(1)}, ..., x_{sigma(2n-1)})`
/// vanishes identically.
///
/// `v = Id + sum_{i=1}^{n} (-1)^i sigma_i`, where `sigma_i` sends
/// `1 -> i`, `k -> n+k-1` for `k = 2..n`, and the last `n-1` positions to
/// `1, ..., i-1, i+1, ..., n` in increasing order.
pub fn filippov_vector(n: usize) -> GroupAlgebraElement {
    assert!(n >= 2);
    let m = 2 * n - 1;
    let mut v = GroupAlgebraElement::identity(m);
    for i in 1..=n {
        let mut images = Vec::with_capacity(m);
        images.push(i);
        for k in 2..=n {
            images.push(n + k - 1);
        }
        for j in 1..=n {
            if j != i {
                images.push(j);
            }
        }
        let sigma = Permutation::new(images).expect("valid permutation");
        let sign = if i % 2 == 0 { rat(1) } else { rat(-1) };
        v.add_term(sigma, sign);
    }
    v
}

/// `w = sum over Sigma_m of sign(sigma) * sigma`, the fully antisymmetrized
/// element. Refuses `m > 7`.
pub fn total_antisym_vector(m: usize) -> Result<GroupAlgebraElement, GroupAlgebraError> {
    if m == 0 || m > MAX_FULL_SUM_DEGREE {
        return Err(GroupAlgebraError::DegreeTooLarge(m));
    }
    let mut w = GroupAlgebraElement::zero(m);
    for p in all_permutations(m) {
        let sign = rat(p.sign() as i64);
        w.add_term(p, sign);
    }
    Ok(w)
}

/// Computes `w o v` in `K[Sigma_{2n-1}]`, asserts it is a scalar multiple of
/// `w`, and returns the scalar. The scalar equals `1 - n` for odd `n` and
/// `1 + n` for even `n`.
pub fn verify_wv_identity(n: usize) -> Result<Rational, GroupAlgebraError> {
    if !(2..=4).contains(&n) {
        return Err(GroupAlgebraError::ArityOutOfRange(n, 2, 4));
    }
    let m = 2 * n - 1;
    let w = total_antisym_vector(m)?;
    let v = filippov_vector(n);
    let wv = w.compose(&v)?;
    proportionality_scalar(&wv, &w)
}

/// Builds `v = alpha Id + beta c + gamma c^2` in `K[Sigma_3]` (`c` the
/// 3-cycle), composes with `w`, asserts proportionality and returns the
/// scalar, which equals `alpha + beta + gamma`.
pub fn colored_reduction(
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
) -> Result<Rational, GroupAlgebraError> {
    let c = Permutation::new(vec![2, 3, 1]).unwrap();
    let mut v = GroupAlgebraElement::identity(3).scale(alpha);
    v.add_term(c.clone(), beta.clone());
    v.add_term(c.compose(&c), gamma.clone());
    let w = total_antisym_vector(3)?;
    let wv = w.compose(&v)?;
    proportionality_scalar(&wv, &w)
}

/// The scalar `s` with `x = s * y`, or `NotProportional`.
fn proportionality_scalar(
    x: &GroupAlgebraElement,
    y: &GroupAlgebraElement,
) -> Result<Rational, GroupAlgebraError> {
    if x.is_zero() {
        return Ok(Rational::zero());
    }
    let (p0, c0) = x.terms().iter().next().unwrap();
    let base = y.coefficient(p0);
    if base.is_zero() {
        return Err(GroupAlgebraError::NotProportional);
    }
    let scalar = c0 / &base;
    if *x == y.scale(&scalar) {
        Ok(scalar)
    } else {
        Err(GroupAlgebraError::NotProportional)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shuffle_counts() {
        assert_eq!(shuffles(1, 1).len(), 2);
        assert_eq!(shuffles(2, 1).len(), 3);
        assert_eq!(shuffles(3, 2).len(), 10);
        assert_eq!(shuffles(4, 3).len(), 35);
    }

    #[test]
    fn shuffles_are_exactly_descent_at_n() {
        // sigma is an (n,k)-shuffle iff its descent set is contained in {n}
        for (n, k) in [(2usize, 1usize), (3, 2), (2, 3)] {
            let sh = shuffles(n, k);
            let expected: Vec<Permutation> = all_permutations(n + k)
                .into_iter()
                .filter(|p| p.descents().iter().all(|&d| d == n))
                .collect();
            assert_eq!(sh, expected);
        }
    }

    #[test]
    fn shuffle_order_is_lexicographic() {
        let sh = shuffles(3, 2);
        assert!(sh.windows(2).all(|w| w[0] < w[1]));
        assert!(sh[0].is_identity());
    }

    #[test]
    fn compose_identity_and_inverse() {
        let x = filippov_vector(3);
        let id = GroupAlgebraElement::identity(5);
        assert_eq!(id.compose(&x).unwrap(), x);
        let p = Permutation::new(vec![3, 1, 2, 5, 4]).unwrap();
        let d = GroupAlgebraElement::from_permutation(p.clone());
        let dinv = GroupAlgebraElement::from_permutation(p.inverse());
        assert_eq!(d.compose(&dinv).unwrap(), id);
    }

    #[test]
    fn filippov_vector_term_counts() {
        assert_eq!(filippov_vector(2).num_terms(), 3);
        assert_eq!(filippov_vector(3).num_terms(), 4);
        assert_eq!(filippov_vector(4).num_terms(), 5);
    }

    #[test]
    fn filippov_vector_n2_is_classical_jacobi() {
        // Id - (1 3 2) + (2 3 1): slot actions give
        // [[x1,x2],x3] - [[x1,x3],x2] + [[x2,x3],x1]
        let v = filippov_vector(2);
        assert_eq!(v.coefficient(&Permutation::identity(3)), rat(1));
        assert_eq!(
            v.coefficient(&Permutation::new(vec![1, 3, 2]).unwrap()),
            rat(-1)
        );
        assert_eq!(
            v.coefficient(&Permutation::new(vec![2, 3, 1]).unwrap()),
            rat(1)
        );
    }

    #[test]
    fn antisym_vector_small_cases() {
        let w2 = total_antisym_vector(2).unwrap();
        assert_eq!(w2.coefficient(&Permutation::identity(2)), rat(1));
        assert_eq!(
            w2.coefficient(&Permutation::new(vec![2, 1]).unwrap()),
            rat(-1)
        );

        // w = Id - t12 - t13 - t23 + c + c^2
        let w3 = total_antisym_vector(3).unwrap();
        assert_eq!(w3.num_terms(), 6);
        for (images, coeff) in [
            (vec![1, 2, 3], 1),
            (vec![2, 1, 3], -1),
            (vec![3, 2, 1], -1),
            (vec![1, 3, 2], -1),
            (vec![2, 3, 1], 1),
            (vec![3, 1, 2], 1),
        ] {
            assert_eq!(
                w3.coefficient(&Permutation::new(images).unwrap()),
                rat(coeff)
            );
        }

        let w5 = total_antisym_vector(5).unwrap();
        assert_eq!(w5.num_terms(), 120);
        assert_eq!(w5.coefficient(&Permutation::identity(5)), rat(1));

        assert_eq!(
            total_antisym_vector(8),
            Err(GroupAlgebraError::DegreeTooLarge(8))
        );
    }

    #[test]
    fn w_is_sign_isotypic_on_both_sides() {
        for m in 2..=5 {
            let w = total_antisym_vector(m).unwrap();
            for p in all_permutations(m) {
                let d = GroupAlgebraElement::from_permutation(p.clone());
                let signed = w.scale(&rat(p.sign() as i64));
                assert_eq!(d.compose(&w).unwrap(), signed);
                assert_eq!(w.compose(&d).unwrap(), signed);
            }
        }
    }

    #[test]
    fn wv_scalars() {
        assert_eq!(verify_wv_identity(2).unwrap(), rat(3));
        assert_eq!(verify_wv_identity(3).unwrap(), rat(-2));
        assert_eq!(verify_wv_identity(4).unwrap(), rat(5));
        assert!(verify_wv_identity(5).is_err());
    }

    #[test]
    fn wv_composition_for_n3_reproduces_minus_two_w() {
        let w = total_antisym_vector(5).unwrap();
        let v = filippov_vector(3);
        assert_eq!(w.compose(&v).unwrap(), w.scale(&rat(-2)));
    }

    #[test]
    fn colored_scalars() {
        let r = |a, b, c| colored_reduction(&rat(a), &rat(b), &rat(c)).unwrap();
        assert_eq!(r(1, 1, 1), rat(3));
        assert_eq!(r(1, -1, 0), rat(0));
        assert_eq!(r(2, 3, 5), rat(10));
    }

    #[test]
    fn not_proportional_is_detected() {
        let x = GroupAlgebraElement::identity(3);
        let w = total_antisym_vector(3).unwrap();
        assert_eq!(
            proportionality_scalar(&x, &w),
            Err(GroupAlgebraError::NotProportional)
        );
    }
}
