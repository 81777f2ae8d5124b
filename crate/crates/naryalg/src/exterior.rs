//! Exterior calculus on the dual space.
//!
//! The operator `d` sends each dual basis 1-form `w_l` to the degree-n form
//! whose coefficients are the structure constants, and extends to degree-n
//! forms term-wise by replacing one 1-form factor at a time with its image
//! (all plus signs, following the source convention for odd-degree images).
//! The Maurer-Cartan criterion `d(d w_l) = 0` for every `l` is equivalent to
//! the sh-Jacobi identity: each coefficient of `d(d w_l)` reproduces, up to
//! one global nonzero scalar, the `l`-component of the shuffle sum.

use crate::identities::{check_sh_jacobi, CheckError, Verdict};
use crate::product::NAryProduct;
use crate::rational::Rational;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExteriorError {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("expected a form of degree {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error(transparent)]
    Check(#[from] CheckError),
}

/// A homogeneous alternating form: a map from strictly increasing index
/// tuples to exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExteriorForm {
    ambient: usize,
    degree: usize,
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl ExteriorForm {
    pub fn zero(ambient: usize, degree: usize) -> Self {
        ExteriorForm {
            ambient,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The basis 1-form `w_i`.
    pub fn one_form(ambient: usize, i: usize) -> Self {
        let mut f = ExteriorForm::zero(ambient, 1);
        f.add_term(vec![i], Rational::from_integer(1.into()));
        f
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &[usize]) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c` on a strictly increasing key, dropping the entry if the sum
    /// cancels.
    pub fn add_term(&mut self, key: Vec<usize>, c: Rational) {
        assert_eq!(key.len(), self.degree, "key length must match degree");
        assert!(
            key.windows(2).all(|w| w[0] < w[1]),
            "keys must be strictly increasing"
        );
        if c.is_zero() {
            return;
        }
        let becomes_zero = {
            let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
            *entry += c;
            entry.is_zero()
        };
        if becomes_zero {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExteriorError> {
        if self.ambient != other.ambient {
            return Err(ExteriorError::AmbientMismatch(self.ambient, other.ambient));
        }
        if self.degree != other.degree {
            return Err(ExteriorError::DegreeMismatch {
                expected: self.degree,
                got: other.degree,
            });
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return ExteriorForm::zero(self.ambient, self.degree);
        }
        ExteriorForm {
            ambient: self.ambient,
            degree: self.degree,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Exterior product: degrees add, repeated indices vanish, and merged
    /// keys are sorted with the sign of the sorting permutation.
    pub fn wedge(&self, other: &Self) -> Result<Self, ExteriorError> {
        if self.ambient != other.ambient {
            return Err(ExteriorError::AmbientMismatch(self.ambient, other.ambient));
        }
        let mut out = ExteriorForm::zero(self.ambient, self.degree + other.degree);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut merged: Vec<usize> = ka.clone();
                merged.extend_from_slice(kb);
                let Some((sorted, sign)) = sort_with_sign(&merged) else {
                    continue;
                };
                let coeff = ca * cb * Rational::from_integer(sign.into());
                out.add_term(sorted, coeff);
            }
        }
        Ok(out)
    }

    /// The lexicographically least key carrying a nonzero coefficient.
    pub fn first_key(&self) -> Option<&Vec<usize>> {
        self.terms.keys().next()
    }
}

impl fmt::Display for ExteriorForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let wedge = k
                    .iter()
                    .map(|i| format!("w{i}"))
                    .collect::<Vec<_>>()
                    .join("^");
                format!("{c}*{wedge}")
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

fn sort_with_sign(key: &[usize]) -> Option<(Vec<usize>, i8)> {
    let mut t = key.to_vec();
    let mut sign = 1i8;
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

/// `d w_l`: the degree-n form with coefficient `C^l_{i_1...i_n}` on each
/// strictly increasing tuple, read off the skew structure constants.
pub fn d_one(prod: &NAryProduct, l: usize) -> Result<ExteriorForm, ExteriorError> {
    if !prod.is_skew() {
        return Err(CheckError::NotSkew.into());
    }
    let p = prod.dim();
    if l == 0 || l > p {
        return Err(ExteriorError::IndexOutOfRange { index: l, dim: p });
    }
    let mut form = ExteriorForm::zero(p, prod.arity());
    for (key, value) in prod.constants() {
        let c = &value[l - 1];
        if !c.is_zero() {
            form.add_term(key.clone(), c.clone());
        }
    }
    Ok(form)
}

/// Extends `d` to a degree-n form term-wise:
/// `d(w_{i_1} ^ ... ^ w_{i_n}) = sum_j w_{i_1} ^ ... ^ d(w_{i_j}) ^ ... ^ w_{i_n}`,
/// with all plus signs.
pub fn d_extend(prod: &NAryProduct, form: &ExteriorForm) -> Result<ExteriorForm, ExteriorError> {
    let n = prod.arity();
    let p = prod.dim();
    if form.degree() != n {
        return Err(ExteriorError::DegreeMismatch {
            expected: n,
            got: form.degree(),
        });
    }
    if form.ambient_dim() != p {
        return Err(ExteriorError::AmbientMismatch(form.ambient_dim(), p));
    }
    let d_ones: Vec<ExteriorForm> = (1..=p)
        .map(|i| d_one(prod, i))
        .collect::<Result<_, _>>()?;
    let mut out = ExteriorForm::zero(p, 2 * n - 1);
    for (key, coeff) in form.terms() {
        for j in 0..n {
            // wedge left to right with the j-th factor replaced by d(w_{i_j})
            let mut acc: Option<ExteriorForm> = None;
            for (pos, &i) in key.iter().enumerate() {
                let factor = if pos == j {
                    d_ones[i - 1].clone()
                } else {
                    ExteriorForm::one_form(p, i)
                };
                acc = Some(match acc {
                    None => factor,
                    Some(a) => a.wedge(&factor)?,
                });
            }
            let term = acc.expect("degree n >= 2").scale(coeff);
            out = out.add(&term)?;
        }
    }
    Ok(out)
}

/// Outcome of the Maurer-Cartan check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum McOutcome {
    Pass,
    /// The smallest dual index whose equation fails, with the full defect.
    Fail { index: usize, defect: ExteriorForm },
}

impl McOutcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, McOutcome::Pass)
    }
}

/// Checks the Maurer-Cartan equations `d(d w_l) = 0` for every `l`.
pub fn maurer_cartan_check(prod: &NAryProduct) -> Result<McOutcome, ExteriorError> {
    if !prod.is_skew() {
        return Err(CheckError::NotSkew.into());
    }
    for l in 1..=prod.dim() {
        let ddl = d_extend(prod, &d_one(prod, l)?)?;
        if !ddl.is_zero() {
            return Ok(McOutcome::Fail {
                index: l,
                defect: ddl,
            });
        }
    }
    Ok(McOutcome::Pass)
}

/// The lexicographically least `(2n-1)`-tuple on which some `d(d w_l)` has a
/// nonzero coefficient, for comparison with the sh-Jacobi witness.
pub fn mc_first_defect_tuple(prod: &NAryProduct) -> Result<Option<Vec<usize>>, ExteriorError> {
    let mut best: Option<Vec<usize>> = None;
    for l in 1..=prod.dim() {
        let ddl = d_extend(prod, &d_one(prod, l)?)?;
        if let Some(key) = ddl.first_key() {
            if best.as_ref().is_none_or(|b| key < b) {
                best = Some(key.clone());
            }
        }
    }
    Ok(best)
}

/// The global proportionality scalar between the Maurer-Cartan defects and
/// the sh-Jacobi sums: for every tuple `T` and index `l`, the coefficient of
/// `w_T` in `d(d w_l)` equals `kappa` times the `l`-component of the
/// sh-Jacobi defect at `T`. Returns the scalar (asserting constancy), or
/// `None` when every defect vanishes and no scalar is observable.
pub fn mc_sh_proportionality(prod: &NAryProduct) -> Result<Option<Rational>, ExteriorError> {
    let n = prod.arity();
    let p = prod.dim();
    if p < 2 * n - 1 {
        return Ok(None);
    }
    let mut kappa: Option<Rational> = None;
    use itertools::Itertools;
    let sh_defects: BTreeMap<Vec<usize>, Vec<Rational>> = (1..=p)
        .combinations(2 * n - 1)
        .map(|t| {
            let d = crate::identities::sh_jacobi_defect(prod, &t);
            (t, d)
        })
        .collect();
    for l in 1..=p {
        let ddl = d_extend(prod, &d_one(prod, l)?)?;
        for (tuple, sh) in &sh_defects {
            let mc_coeff = ddl.coefficient(tuple);
            let sh_coeff = &sh[l - 1];
            match (&mc_coeff.is_zero(), &sh_coeff.is_zero()) {
                (true, true) => continue,
                (false, false) => {
                    let ratio = &mc_coeff / sh_coeff;
                    match &kappa {
                        None => kappa = Some(ratio),
                        Some(k) if *k == ratio => {}
                        _ => panic!("Maurer-Cartan/sh-Jacobi proportionality drifted"),
                    }
                }
                _ => panic!("Maurer-Cartan/sh-Jacobi supports disagree"),
            }
        }
    }
    Ok(kappa)
}

/// Convenience: PASS/fail agreement between the Maurer-Cartan check and the
/// sh-Jacobi checker.
pub fn mc_agrees_with_sh(prod: &NAryProduct) -> Result<bool, ExteriorError> {
    let mc = maurer_cartan_check(prod)?;
    let sh = check_sh_jacobi(prod)?;
    Ok(match (&mc, &sh) {
        (McOutcome::Pass, Verdict::Pass | Verdict::PassVacuous) => true,
        (McOutcome::Fail { .. }, Verdict::Fail(w)) => {
            mc_first_defect_tuple(prod)? == Some(w.tuple.clone())
        }
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::product::Symmetry;
    use crate::rational::{rat, unit_vector};

    #[test]
    fn wedge_basics() {
        let p = 4;
        let w1 = ExteriorForm::one_form(p, 1);
        let w2 = ExteriorForm::one_form(p, 2);
        let w12 = w1.wedge(&w2).unwrap();
        assert_eq!(w12.coefficient(&[1, 2]), rat(1));
        let w21 = w2.wedge(&w1).unwrap();
        assert_eq!(w21.coefficient(&[1, 2]), rat(-1));
        assert!(w1.wedge(&w1).unwrap().is_zero());
    }

    #[test]
    fn wedge_graded_commutativity_and_associativity() {
        let p = 5;
        let mut a = ExteriorForm::zero(p, 2);
        a.add_term(vec![1, 3], rat(2));
        a.add_term(vec![2, 4], rat(-1));
        let mut b = ExteriorForm::zero(p, 1);
        b.add_term(vec![2], rat(3));
        b.add_term(vec![5], rat(1));
        let mut c = ExteriorForm::zero(p, 2);
        c.add_term(vec![4, 5], rat(1));

        // a ^ b = (-1)^{2*1} b ^ a
        assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap());
        // odd-degree forms anticommute with themselves' partners of odd degree
        let b2 = ExteriorForm::one_form(p, 1);
        assert_eq!(
            b.wedge(&b2).unwrap(),
            b2.wedge(&b).unwrap().scale(&rat(-1))
        );
        // associativity
        let left = a.wedge(&b).unwrap().wedge(&c).unwrap();
        let right = a.wedge(&b.wedge(&c).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn d_one_of_filiform() {
        let prod =
            NAryProduct::make_skew(3, 4, &[(vec![1, 2, 3], unit_vector(4, 4))]).unwrap();
        for l in 1..=3 {
            assert!(d_one(&prod, l).unwrap().is_zero());
        }
        let d4 = d_one(&prod, 4).unwrap();
        assert_eq!(d4.coefficient(&[1, 2, 3]), rat(1));
        assert_eq!(d4.terms().len(), 1);
    }

    #[test]
    fn d_one_of_abelian_vanishes() {
        let ab = NAryProduct::zero_product(3, 4, Symmetry::Skew);
        for l in 1..=4 {
            assert!(d_one(&ab, l).unwrap().is_zero());
        }
    }

    #[test]
    fn dd_vanishes_on_filiform4() {
        let prod =
            NAryProduct::make_skew(3, 4, &[(vec![1, 2, 3], unit_vector(4, 4))]).unwrap();
        let d4 = d_one(&prod, 4).unwrap();
        assert!(d_extend(&prod, &d4).unwrap().is_zero());
        assert!(maurer_cartan_check(&prod).unwrap().is_pass());
    }

    #[test]
    fn d_extend_rejects_wrong_degree() {
        let prod =
            NAryProduct::make_skew(3, 4, &[(vec![1, 2, 3], unit_vector(4, 4))]).unwrap();
        let err = d_extend(&prod, &ExteriorForm::one_form(4, 1)).unwrap_err();
        assert_eq!(
            err,
            ExteriorError::DegreeMismatch {
                expected: 3,
                got: 1
            }
        );
    }

    #[test]
    fn d_one_is_linear_in_the_constants() {
        // d of a scalar multiple of an algebra is the multiple of d
        let raw = vec![(vec![1, 2, 3], unit_vector(5, 4))];
        let a = NAryProduct::make_skew(3, 5, &raw).unwrap();
        let scaled_raw = vec![(vec![1, 2, 3], crate::rational::scale_vector(&rat(7), &unit_vector(5, 4)))];
        let b = NAryProduct::make_skew(3, 5, &scaled_raw).unwrap();
        assert_eq!(
            d_one(&b, 4).unwrap(),
            d_one(&a, 4).unwrap().scale(&rat(7))
        );
    }
}
