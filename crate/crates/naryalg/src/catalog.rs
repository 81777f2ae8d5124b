//! Constructors for every concrete algebra and product in the source
//! material, each returning an [`NAryProduct`] ready for the checkers.

use crate::poly::{MultiPoly, PolyError, TruncatedPolynomial};
use crate::product::{NAryProduct, ProductError, Symmetry};
use crate::rational::{is_zero_vector, rat, unit_vector, zero_vector, Rational};
use itertools::Itertools;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("this construction is defined for arity >= 3")]
    NotDefinedForBinary,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Product(#[from] ProductError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Which of the two n-dimensional n-ary algebras to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimNKind {
    Abelian,
    /// The single bracket `[e_1, ..., e_n] = e_1`.
    E1,
}

/// The abelian (zero bracket) skew algebra of the given arity and dimension.
pub fn abelian(n: usize, p: usize) -> NAryProduct {
    NAryProduct::zero_product(n, p, Symmetry::Skew)
}

/// The `(n+1)`-dimensional simple algebra: each bracket omits one basis
/// vector and returns it with an alternating sign,
/// `[v_1, ..., v-hat_i, ..., v_{n+1}] = (-1)^{n+i} v_i`.
pub fn simple_algebra(n: usize) -> NAryProduct {
    assert!(n >= 2);
    let p = n + 1;
    let mut raw = Vec::new();
    for i in 1..=p {
        let key: Vec<usize> = (1..=p).filter(|&j| j != i).collect();
        let sign = if (n + i) % 2 == 0 { rat(1) } else { rat(-1) };
        let mut value = zero_vector(p);
        value[i - 1] = sign;
        raw.push((key, value));
    }
    NAryProduct::make_skew(n, p, &raw).expect("valid construction")
}

/// The n-dimensional algebra with zero bracket, or with the single bracket
/// `[e_1, ..., e_n] = e_1`.
pub fn dim_n_algebra(n: usize, kind: DimNKind) -> NAryProduct {
    assert!(n >= 2);
    match kind {
        DimNKind::Abelian => abelian(n, n),
        DimNKind::E1 => {
            let key: Vec<usize> = (1..=n).collect();
            NAryProduct::make_skew(n, n, &[(key, unit_vector(n, 1))])
                .expect("valid construction")
        }
    }
}

/// The filiform model of arity `n` and dimension `p >= n + 1`:
/// `[X_1, ..., X_{n-1}, X_i] = X_{i+1}` for `i = n, ..., p-1`.
pub fn filiform_model(n: usize, p: usize) -> NAryProduct {
    assert!(n >= 2 && p >= n + 1);
    let mut raw = Vec::new();
    for i in n..p {
        let mut key: Vec<usize> = (1..n).collect();
        key.push(i);
        raw.push((key, unit_vector(p, i + 1)));
    }
    NAryProduct::make_skew(n, p, &raw).expect("valid construction")
}

/// The two-parameter family covering every 5-dimensional filiform ternary
/// algebra: `[X1,X2,X3] = X4`, `[X1,X2,X4] = X5`, `[X1,X3,X4] = a X5`,
/// `[X2,X3,X4] = b X5`.
pub fn filiform5(a: &Rational, b: &Rational) -> NAryProduct {
    let e5 = unit_vector(5, 5);
    let raw = vec![
        (vec![1, 2, 3], unit_vector(5, 4)),
        (vec![1, 2, 4], e5.clone()),
        (vec![1, 3, 4], crate::rational::scale_vector(a, &e5)),
        (vec![2, 3, 4], crate::rational::scale_vector(b, &e5)),
    ];
    NAryProduct::make_skew(3, 5, &raw).expect("valid construction")
}

/// The non-nilpotent algebra `[X_1, ..., X_n] = X_2` (defined for
/// `n >= 3`; its point is the contrast with the binary case).
pub fn counterexample_algebra(n: usize) -> Result<NAryProduct, CatalogError> {
    if n < 3 {
        return Err(CatalogError::NotDefinedForBinary);
    }
    let key: Vec<usize> = (1..=n).collect();
    Ok(NAryProduct::make_skew(n, n, &[(key, unit_vector(n, 2))])?)
}

/// Monomial exponent vectors of total degree `3..r` in `vars` variables,
/// ordered by total degree and then by exponents with earlier variables
/// first (so `x^3` precedes `x^2 y`).
pub fn jr_monomial_basis(vars: usize, r: u32) -> Vec<Vec<u32>> {
    let mut all = Vec::new();
    for deg in 3..r {
        let mut of_degree: Vec<Vec<u32>> = compositions_u32(deg, vars);
        of_degree.sort_by(|a, b| b.cmp(a));
        all.extend(of_degree);
    }
    all
}

fn compositions_u32(total: u32, k: usize) -> Vec<Vec<u32>> {
    if k == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions_u32(total - first, k - 1) {
            let mut v = vec![first];
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

/// The truncated Jacobian algebra `J_r` on `vars` variables: the quotient of
/// polynomials of degree at least 3 by those of degree at least `r`, with
/// the bracket `[Q_1, ..., Q_n] = Jac(Q_1, ..., Q_n)` computed exactly and
/// then truncated. Terms below degree 3 cannot arise (each partial has
/// degree at least 2), and the constructor would reject them rather than
/// drop them.
pub fn truncated_jacobian_algebra(vars: usize, r: u32) -> Result<NAryProduct, CatalogError> {
    if vars < 2 {
        return Err(CatalogError::BadParams("need at least 2 variables".into()));
    }
    if r <= 3 {
        return Err(CatalogError::BadParams("truncation requires r > 3".into()));
    }
    let basis = jr_monomial_basis(vars, r);
    let p = basis.len();
    if p == 0 {
        return Err(CatalogError::BadParams(
            "empty monomial basis; increase r".into(),
        ));
    }
    let index_of = |exps: &[u32]| basis.iter().position(|b| b == exps);
    let mut raw = Vec::new();
    for key in (1..=p).combinations(vars) {
        let args: Vec<TruncatedPolynomial> = key
            .iter()
            .map(|&i| {
                TruncatedPolynomial::new(
                    MultiPoly::monomial(vars, basis[i - 1].clone(), rat(1)),
                    r,
                )
                .expect("basis monomials respect the degree window")
            })
            .collect();
        let bracket = TruncatedPolynomial::jacobian_bracket(&args)?;
        let mut value = zero_vector(p);
        for (exps, coeff) in bracket.poly().terms() {
            let slot = index_of(exps).expect("bracket stays inside the degree window");
            value[slot] = coeff.clone();
        }
        if !is_zero_vector(&value) {
            raw.push((key, value));
        }
    }
    Ok(NAryProduct::make_skew(vars, p, &raw)?)
}

/// Matrix-unit index helpers for the matrix products: basis vector
/// `(a-1)*cols + b` is the unit `E_{ab}` (1-based `a`, `b`).
fn unit_index(a: usize, b: usize, cols: usize) -> usize {
    (a - 1) * cols + b
}

/// The ternary product `mu(A, B, C) = A . B~ . C` on `rows x cols`
/// matrices, where `B~` flips the index groups (the transpose). The
/// underlying space has dimension `rows * cols`.
pub fn ternary_matrix_product(rows: usize, cols: usize) -> NAryProduct {
    assert!(rows >= 1 && cols >= 1);
    let p = rows * cols;
    let mut raw = Vec::new();
    // E_{a1 b1} (E_{a2 b2})^T E_{a3 b3} = [b1 = b2][a2 = a3] E_{a1 b3}
    for a1 in 1..=rows {
        for b1 in 1..=cols {
            for a2 in 1..=rows {
                for b3 in 1..=cols {
                    let key = vec![
                        unit_index(a1, b1, cols),
                        unit_index(a2, b1, cols),
                        unit_index(a2, b3, cols),
                    ];
                    raw.push((key, unit_vector(p, unit_index(a1, b3, cols))));
                }
            }
        }
    }
    NAryProduct::make_general(3, p, &raw).expect("valid construction")
}

/// The untwisted ternary product `mu(A, B, C) = A . B . C` on square
/// `d x d` matrices; totally associative without any twist.
pub fn ternary_matrix_product_plain(d: usize) -> NAryProduct {
    assert!(d >= 1);
    let p = d * d;
    let mut raw = Vec::new();
    // E_{a1 b1} E_{b1 b2} E_{b2 b3} = E_{a1 b3}
    for a1 in 1..=d {
        for b1 in 1..=d {
            for b2 in 1..=d {
                for b3 in 1..=d {
                    let key = vec![
                        unit_index(a1, b1, d),
                        unit_index(b1, b2, d),
                        unit_index(b2, b3, d),
                    ];
                    raw.push((key, unit_vector(p, unit_index(a1, b3, d))));
                }
            }
        }
    }
    NAryProduct::make_general(3, p, &raw).expect("valid construction")
}

/// Cyclic-orbit representatives of index triples over `{1, ..., d}`,
/// lexicographically least first.
pub fn cyclic_orbit_representatives(d: usize) -> Vec<Vec<usize>> {
    let mut reps: Vec<Vec<usize>> = std::iter::repeat(1..=d)
        .take(3)
        .multi_cartesian_product()
        .map(|t| min_rotation3(&t))
        .collect();
    reps.sort();
    reps.dedup();
    reps
}

fn min_rotation3(t: &[usize]) -> Vec<usize> {
    let rots = [
        vec![t[0], t[1], t[2]],
        vec![t[1], t[2], t[0]],
        vec![t[2], t[0], t[1]],
    ];
    rots.into_iter().min().unwrap()
}

/// The ternary product on cyclic-symmetric tensors of type (2,1) over a
/// `d`-dimensional space. The basis consists of cyclic orbit sums of
/// `e_{ijk}`; the raw contraction
/// `(T.U.V)_{ijk} = sum_l T_{lij} U_{lki} V_{ljk}` composed with the cyclic
/// averaging projector, which makes the product land back in the cyclic
/// subspace and be invariant under cyclic shifts of its three arguments.
pub fn cyclic_tensor_product(d: usize) -> NAryProduct {
    assert!(d >= 1);
    let reps = cyclic_orbit_representatives(d);
    let m = reps.len();
    let orbit_slot = |t: &[usize]| -> usize {
        let r = min_rotation3(t);
        reps.iter().position(|x| *x == r).unwrap()
    };
    // dense entries of an orbit-sum tensor
    let entry = |rep: &[usize], l: usize, i: usize, j: usize| -> bool {
        min_rotation3(&[l, i, j]) == *rep
    };
    let mut raw = Vec::new();
    for key in crate::product::canonical_keys(3, m, Symmetry::Cyclic) {
        let (ta, tb, tc) = (&reps[key[0] - 1], &reps[key[1] - 1], &reps[key[2] - 1]);
        // raw contraction; the orbit coefficient is the average of the raw
        // entries over the orbit (the cyclic projector evaluated at the
        // representative)
        let mut value = zero_vector(m);
        for i in 1..=d {
            for j in 1..=d {
                for k in 1..=d {
                    let mut total = 0i64;
                    for l in 1..=d {
                        if entry(ta, l, i, j) && entry(tb, l, k, i) && entry(tc, l, j, k) {
                            total += 1;
                        }
                    }
                    if total != 0 {
                        let slot = orbit_slot(&[i, j, k]);
                        let orbit_size = if i == j && j == k { 1 } else { 3 };
                        value[slot] += rat(total) / rat(orbit_size);
                    }
                }
            }
        }
        if !is_zero_vector(&value) {
            raw.push((key, value));
        }
    }
    NAryProduct::make_cyclic(3, m, &raw).expect("valid construction")
}

/// The component-wise (diagonal) associative binary product on `K^d`:
/// `e_i . e_j = [i = j] e_i`.
pub fn binary_diagonal(d: usize) -> NAryProduct {
    let raw: Vec<(Vec<usize>, Vec<Rational>)> = (1..=d)
        .map(|i| (vec![i, i], unit_vector(d, i)))
        .collect();
    NAryProduct::make_general(2, d, &raw).expect("valid construction")
}

/// The dual numbers `K[eps]/(eps^2)`: basis `{1, eps}`.
pub fn dual_numbers() -> NAryProduct {
    let raw = vec![
        (vec![1, 1], unit_vector(2, 1)),
        (vec![1, 2], unit_vector(2, 2)),
        (vec![2, 1], unit_vector(2, 2)),
    ];
    NAryProduct::make_general(2, 2, &raw).expect("valid construction")
}

/// A deliberately non-associative binary product on `K^2`:
/// `e1 . e1 = e2`, `e2 . e1 = e1`.
pub fn nonassociative_binary() -> NAryProduct {
    let raw = vec![
        (vec![1, 1], unit_vector(2, 2)),
        (vec![2, 1], unit_vector(2, 1)),
    ];
    NAryProduct::make_general(2, 2, &raw).expect("valid construction")
}

/// The ternary projection product `x . y . z = x` on `K^2`.
pub fn ternary_first_projection() -> NAryProduct {
    let raw: Vec<(Vec<usize>, Vec<Rational>)> = std::iter::repeat(1..=2usize)
        .take(3)
        .multi_cartesian_product()
        .map(|t| {
            let lead = t[0];
            (t, unit_vector(2, lead))
        })
        .collect();
    NAryProduct::make_general(3, 2, &raw).expect("valid construction")
}

/// A nonzero ternary product with vanishing self-insertion:
/// `pi(x, y, z) = x_1 y_1 z_1 e_2` on `K^2`, so every nesting of `pi` in
/// itself hits the annihilated coordinate.
pub fn ternary_nilpotent_cochain() -> NAryProduct {
    NAryProduct::make_general(3, 2, &[(vec![1, 1, 1], unit_vector(2, 2))])
        .expect("valid construction")
}

/// The insertion (pre-Lie) composition of cochains: for `f` of arity `k`
/// and `g` of arity `m` on the same space,
/// `(f . g)(x_1, ..., x_{k+m-1}) = sum_{i=1}^{k} (-1)^{(i-1)(m-1)}
/// f(x_1, ..., g(x_i, ..., x_{i+m-1}), ..., x_{k+m-1})`.
///
/// `f . f = 0` is exactly partial associativity of `f`.
pub fn gerstenhaber_bullet(
    f: &NAryProduct,
    g: &NAryProduct,
) -> Result<NAryProduct, CatalogError> {
    if f.dim() != g.dim() {
        return Err(CatalogError::BadParams(format!(
            "cochains live on different spaces: {} vs {}",
            f.dim(),
            g.dim()
        )));
    }
    let k = f.arity();
    let m = g.arity();
    let p = f.dim();
    let out_arity = k + m - 1;
    let mut raw = Vec::new();
    for tuple in std::iter::repeat(1..=p)
        .take(out_arity)
        .multi_cartesian_product()
    {
        let mut value = zero_vector(p);
        for pos in 0..k {
            let inner = g
                .basis_bracket(&tuple[pos..pos + m])
                .expect("valid indices");
            let mut rest: Vec<usize> = Vec::with_capacity(k - 1);
            rest.extend_from_slice(&tuple[..pos]);
            rest.extend_from_slice(&tuple[pos + m..]);
            let term = crate::identities::bracket_with_vector_at(f, &inner, pos, &rest);
            let sign = if (pos * (m - 1)) % 2 == 0 {
                rat(1)
            } else {
                rat(-1)
            };
            crate::rational::axpy(&mut value, &sign, &term);
        }
        if !is_zero_vector(&value) {
            raw.push((tuple, value));
        }
    }
    Ok(NAryProduct::make_general(out_arity, p, &raw)?)
}

/// The associator of a binary product as a ternary cochain:
/// `A(x, y, z) = mu(mu(x, y), z) - mu(x, mu(y, z))`.
pub fn associator(mu: &NAryProduct) -> Result<NAryProduct, CatalogError> {
    if mu.arity() != 2 {
        return Err(CatalogError::BadParams("associator needs a binary product".into()));
    }
    let p = mu.dim();
    let mut raw = Vec::new();
    for tuple in std::iter::repeat(1..=p).take(3).multi_cartesian_product() {
        let left = {
            let inner = mu.basis_bracket(&tuple[0..2]).expect("valid indices");
            crate::identities::bracket_with_vector_at(mu, &inner, 0, &tuple[2..3])
        };
        let right = {
            let inner = mu.basis_bracket(&tuple[1..3]).expect("valid indices");
            crate::identities::bracket_with_vector_at(mu, &inner, 1, &tuple[0..1])
        };
        let value = crate::rational::sub_vectors(&left, &right);
        if !is_zero_vector(&value) {
            raw.push((tuple, value));
        }
    }
    Ok(NAryProduct::make_general(3, p, &raw)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::{
        check_filippov, check_partial_assoc, check_total_assoc, Verdict,
    };
    use num_traits::Zero;

    #[test]
    fn simple_algebra_signs() {
        // n = 3: [v2,v3,v4] = (-1)^{3+1} v1 = v1, [v1,v3,v4] = -v2, ...
        let a4 = simple_algebra(3);
        assert_eq!(a4.dim(), 4);
        assert_eq!(a4.basis_bracket(&[2, 3, 4]).unwrap(), unit_vector(4, 1));
        assert_eq!(
            a4.basis_bracket(&[1, 3, 4]).unwrap(),
            crate::rational::scale_vector(&rat(-1), &unit_vector(4, 2))
        );
        assert_eq!(
            a4.basis_bracket(&[1, 2, 3]).unwrap(),
            crate::rational::scale_vector(&rat(-1), &unit_vector(4, 4))
        );
    }

    #[test]
    fn simple_algebra_n2_is_cross_product_type() {
        let a3 = simple_algebra(2);
        assert_eq!(check_filippov(&a3).unwrap(), Verdict::Pass);
    }

    #[test]
    fn filiform_model_brackets() {
        let f = filiform_model(3, 5);
        assert_eq!(f.basis_bracket(&[1, 2, 3]).unwrap(), unit_vector(5, 4));
        assert_eq!(f.basis_bracket(&[1, 2, 4]).unwrap(), unit_vector(5, 5));
        assert!(is_zero_vector(&f.basis_bracket(&[1, 3, 4]).unwrap()));
    }

    #[test]
    fn filiform5_at_zero_parameters_is_the_model() {
        assert_eq!(filiform5(&rat(0), &rat(0)), filiform_model(3, 5));
    }

    #[test]
    fn counterexample_rejects_binary() {
        assert_eq!(
            counterexample_algebra(2).unwrap_err(),
            CatalogError::NotDefinedForBinary
        );
        assert!(counterexample_algebra(3).is_ok());
    }

    #[test]
    fn jr_basis_ordering_and_size() {
        let basis = jr_monomial_basis(2, 5);
        assert_eq!(basis.len(), 9);
        assert_eq!(basis[0], vec![3, 0]); // x^3 first
        assert_eq!(basis[3], vec![0, 3]); // then y^3
        assert_eq!(basis[4], vec![4, 0]); // degree 4 block
    }

    #[test]
    fn jr_hand_checked_brackets() {
        let jr = truncated_jacobian_algebra(2, 5).unwrap();
        // [x^3, y^3] = 9 x^2 y^2: basis slots: x^3 = 1, y^3 = 4, x^2y^2 = 7
        let v = jr.basis_bracket(&[1, 4]).unwrap();
        assert_eq!(v[6], rat(9));
        assert_eq!(v.iter().filter(|c| !c.is_zero()).count(), 1);
        // [x^3, x^2 y] = 3 x^4: x^2y = 2, x^4 = 5
        let v = jr.basis_bracket(&[1, 2]).unwrap();
        assert_eq!(v[4], rat(3));
        assert_eq!(v.iter().filter(|c| !c.is_zero()).count(), 1);
        // degree-4 inputs bracket to degree >= 6, truncated away
        assert!(is_zero_vector(&jr.basis_bracket(&[5, 6]).unwrap()));
    }

    #[test]
    fn matrix_products_type_check() {
        let square = ternary_matrix_product(2, 2);
        assert_eq!(square.dim(), 4);
        // mu(I, I, I) = I
        let id = {
            let mut v = zero_vector(4);
            v[unit_index(1, 1, 2) - 1] = rat(1);
            v[unit_index(2, 2, 2) - 1] = rat(1);
            v
        };
        assert_eq!(
            square
                .bracket(&[id.clone(), id.clone(), id.clone()])
                .unwrap(),
            id
        );
        let rect = ternary_matrix_product(2, 3);
        assert_eq!(rect.dim(), 6);
        // a well-typed non-square case: E11 (E11)~ E13 = E13
        let v = rect
            .basis_bracket(&[unit_index(1, 1, 3), unit_index(1, 1, 3), unit_index(1, 3, 3)])
            .unwrap();
        assert_eq!(v, unit_vector(6, unit_index(1, 3, 3)));
    }

    #[test]
    fn plain_matrix_product_is_totally_associative() {
        let prod = ternary_matrix_product_plain(2);
        assert_eq!(check_total_assoc(&prod), Verdict::Pass);
    }

    #[test]
    fn scalar_ternary_product_is_totally_associative() {
        let prod = ternary_matrix_product_plain(1);
        assert_eq!(prod.dim(), 1);
        assert_eq!(check_total_assoc(&prod), Verdict::Pass);
    }

    #[test]
    fn cyclic_orbit_count_is_burnside() {
        // (d^3 + 2d) / 3 orbits
        for d in 1..=3 {
            let reps = cyclic_orbit_representatives(d);
            assert_eq!(reps.len(), (d * d * d + 2 * d) / 3);
        }
        assert_eq!(cyclic_tensor_product(2).dim(), 4);
    }

    #[test]
    fn diagonal_and_dual_numbers_are_associative() {
        assert_eq!(check_partial_assoc(&binary_diagonal(2)), Verdict::Pass);
        assert_eq!(check_total_assoc(&binary_diagonal(2)), Verdict::Pass);
        assert_eq!(check_partial_assoc(&dual_numbers()), Verdict::Pass);
    }

    #[test]
    fn nonassociative_example_fails() {
        assert!(matches!(
            check_partial_assoc(&nonassociative_binary()),
            Verdict::Fail(_)
        ));
    }

    #[test]
    fn bullet_single_insertion_is_composition() {
        // f a 1-cochain... the smallest supported arity here is 2, so check
        // the defining expansion on a binary f and binary g instead
        let f = binary_diagonal(2);
        let g = dual_numbers();
        let fg = gerstenhaber_bullet(&f, &g).unwrap();
        assert_eq!(fg.arity(), 3);
        // (f . g)(x,y,z) = f(g(x,y),z) - f(x,g(y,z))
        for tuple in [[1usize, 1, 1], [1, 2, 1], [2, 1, 2]] {
            let direct = {
                let left = {
                    let inner = g.basis_bracket(&tuple[0..2]).unwrap();
                    crate::identities::bracket_with_vector_at(&f, &inner, 0, &tuple[2..3])
                };
                let right = {
                    let inner = g.basis_bracket(&tuple[1..3]).unwrap();
                    crate::identities::bracket_with_vector_at(&f, &inner, 1, &tuple[0..1])
                };
                crate::rational::sub_vectors(&left, &right)
            };
            assert_eq!(fg.basis_bracket(&tuple).unwrap(), direct);
        }
    }

    #[test]
    fn bullet_of_associative_product_vanishes() {
        for mu in [binary_diagonal(2), dual_numbers()] {
            let b = gerstenhaber_bullet(&mu, &mu).unwrap();
            assert!(b.is_abelian());
        }
    }

    #[test]
    fn bullet_reproduces_the_associator() {
        let mu = nonassociative_binary();
        let b = gerstenhaber_bullet(&mu, &mu).unwrap();
        assert!(!b.is_abelian());
        assert_eq!(b, associator(&mu).unwrap());
    }

    #[test]
    fn ternary_cochain_with_zero_self_insertion() {
        let pi = ternary_nilpotent_cochain();
        let b = gerstenhaber_bullet(&pi, &pi).unwrap();
        assert!(b.is_abelian());
        assert_eq!(check_partial_assoc(&pi), Verdict::Pass);
    }
}
