//! Exact multivariate polynomials, Jacobian determinants, and the truncated
//! quotients that carry the polynomial bracket examples.

use crate::rational::{rat, Rational};
use num_traits::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("total degree {got} exceeds the cap {cap}")]
    DegreeOverflow { got: u32, cap: u32 },
    #[error("term of total degree {0} below the quotient floor 3")]
    DegreeBelowFloor(u32),
}

/// A polynomial in `num_vars` variables: a map from exponent vectors to
/// exact coefficients, zero coefficients never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(num_vars: usize) -> Self {
        MultiPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(num_vars: usize, exponents: Vec<u32>, coeff: Rational) -> Self {
        assert_eq!(exponents.len(), num_vars);
        let mut p = MultiPoly::zero(num_vars);
        p.add_term(exponents, coeff);
        p
    }

    /// The variable `x_i` (0-based).
    pub fn variable(num_vars: usize, i: usize) -> Self {
        let mut exps = vec![0; num_vars];
        exps[i] = 1;
        MultiPoly::monomial(num_vars, exps, rat(1))
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: Rational) {
        assert_eq!(exponents.len(), self.num_vars);
        if coeff.is_zero() {
            return;
        }
        let becomes_zero = {
            let entry = self
                .terms
                .entry(exponents.clone())
                .or_insert_with(Rational::zero);
            *entry += coeff;
            entry.is_zero()
        };
        if becomes_zero {
            self.terms.remove(&exponents);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars);
        let mut out = MultiPoly::zero(self.num_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.num_vars);
        }
        MultiPoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Partial derivative with respect to variable `i` (0-based).
    pub fn partial(&self, i: usize) -> Self {
        let mut out = MultiPoly::zero(self.num_vars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut exps = e.clone();
            exps[i] -= 1;
            out.add_term(exps, c * rat(e[i] as i64));
        }
        out
    }

    /// Largest total degree among the stored terms; zero polynomial reports 0.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    /// Keeps only the terms with total degree strictly below `cap`.
    pub fn truncate_above(&self, cap: u32) -> Self {
        MultiPoly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() < cap)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }
}

/// The exact Jacobian determinant of `n` polynomials in `n` variables,
/// antisymmetric in its arguments. Errors if an input or the result exceeds
/// the caller's total-degree cap.
pub fn jacobian_determinant(polys: &[MultiPoly], cap: u32) -> Result<MultiPoly, PolyError> {
    let n = polys.len();
    assert!(n >= 1, "need at least one polynomial");
    for p in polys {
        if p.num_vars() != n {
            return Err(PolyError::VariableMismatch(p.num_vars(), n));
        }
        if p.total_degree() > cap {
            return Err(PolyError::DegreeOverflow {
                got: p.total_degree(),
                cap,
            });
        }
    }
    let det = jacobian_determinant_unbounded(polys);
    if det.total_degree() > cap {
        return Err(PolyError::DegreeOverflow {
            got: det.total_degree(),
            cap,
        });
    }
    Ok(det)
}

/// Laplace expansion of `det(d poly_i / d x_j)` along the first row.
pub(crate) fn jacobian_determinant_unbounded(polys: &[MultiPoly]) -> MultiPoly {
    let n = polys.len();
    let grid: Vec<Vec<MultiPoly>> = polys
        .iter()
        .map(|p| (0..n).map(|j| p.partial(j)).collect())
        .collect();
    poly_det(&grid, &(0..n).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>())
}

fn poly_det(grid: &[Vec<MultiPoly>], rows: &[usize], cols: &[usize]) -> MultiPoly {
    let n = grid.len();
    if rows.len() == 1 {
        return grid[rows[0]][cols[0]].clone();
    }
    let mut out = MultiPoly::zero(n);
    let r = rows[0];
    for (k, &c) in cols.iter().enumerate() {
        if grid[r][c].is_zero() {
            continue;
        }
        let sub_rows: Vec<usize> = rows[1..].to_vec();
        let sub_cols: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&x| x != c)
            .collect();
        let minor = poly_det(grid, &sub_rows, &sub_cols);
        let signed = if k % 2 == 0 {
            grid[r][c].mul(&minor)
        } else {
            grid[r][c].mul(&minor).scale(&rat(-1))
        };
        out = out.add(&signed);
    }
    out
}

/// An element of the quotient `J_r = I_3 / I_r`: a polynomial whose stored
/// terms all have total degree in `3..r`, with multiplication truncating
/// degrees `>= r` to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedPolynomial {
    num_vars: usize,
    truncation: u32,
    poly: MultiPoly,
}

impl TruncatedPolynomial {
    /// Wraps a polynomial, truncating terms of degree `>= r`; a surviving
    /// term of degree below 3 is an error rather than silently dropped.
    pub fn new(poly: MultiPoly, truncation: u32) -> Result<Self, PolyError> {
        assert!(truncation > 3, "quotient requires r > 3");
        let poly = poly.truncate_above(truncation);
        for e in poly.terms().keys() {
            let deg: u32 = e.iter().sum();
            if deg < 3 {
                return Err(PolyError::DegreeBelowFloor(deg));
            }
        }
        Ok(TruncatedPolynomial {
            num_vars: poly.num_vars(),
            truncation,
            poly,
        })
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    /// The truncated Jacobian bracket of `n` class representatives.
    pub fn jacobian_bracket(args: &[TruncatedPolynomial]) -> Result<TruncatedPolynomial, PolyError> {
        let n = args.len();
        assert!(n >= 1);
        let truncation = args[0].truncation;
        for a in args {
            assert_eq!(a.truncation, truncation, "mixed truncations");
            if a.num_vars != n {
                return Err(PolyError::VariableMismatch(a.num_vars, n));
            }
        }
        let polys: Vec<MultiPoly> = args.iter().map(|a| a.poly.clone()).collect();
        let det = jacobian_determinant_unbounded(&polys);
        TruncatedPolynomial::new(det, truncation)
    }
}
