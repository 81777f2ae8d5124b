//! Exact rational scalars.
//!
//! Every quantity in this crate is a [`Rational`]: an arbitrary-precision
//! fraction kept in canonical form (positive denominator, reduced). There is
//! no floating-point mode; equality of computed values is literal equality.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// The unique scalar type: an exact fraction of arbitrary-precision integers.
///
/// Canonical form (reduced, denominator positive) is maintained by the
/// underlying representation, so `==` is exact mathematical equality.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `num/den`.
///
/// Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"a"` or `"a/b"` with optional leading sign.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rational::from_integer(n))
        }
    }
}

/// Renders a vector of rationals as space-separated exact values.
pub fn format_vector(v: &[Rational]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// True if every entry is zero.
pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// The all-zero vector of length `p`.
pub fn zero_vector(p: usize) -> Vec<Rational> {
    vec![Rational::zero(); p]
}

/// The standard basis vector `e_i` (1-based) in dimension `p`.
pub fn unit_vector(p: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vector(p);
    v[i - 1] = Rational::one();
    v
}

/// `v + w`, entrywise.
pub fn add_vectors(v: &[Rational], w: &[Rational]) -> Vec<Rational> {
    v.iter().zip(w).map(|(a, b)| a + b).collect()
}

/// `v - w`, entrywise.
pub fn sub_vectors(v: &[Rational], w: &[Rational]) -> Vec<Rational> {
    v.iter().zip(w).map(|(a, b)| a - b).collect()
}

/// `c * v`.
pub fn scale_vector(c: &Rational, v: &[Rational]) -> Vec<Rational> {
    v.iter().map(|a| c * a).collect()
}

/// Adds `c * w` into `v` in place.
pub fn axpy(v: &mut [Rational], c: &Rational, w: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in v.iter_mut().zip(w) {
        *a += c * b;
    }
}
