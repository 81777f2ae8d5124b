//! Regression probe: derivation data of the simple algebra, ideal scans.

use naryalg::catalog;
use naryalg::matrix::Matrix;
use naryalg::structure::*;
use naryalg::subspace::Subspace;

fn main() {
    let a4 = catalog::simple_algebra(3);
    let der = derivation_algebra(&a4);
    println!("dim Der(A_4) = {}", der.len());
    println!("A_4 nonsingular derivation: {}", has_nonsingular_derivation(&a4));
    println!("A_4 closed under commutator: {}", derivations_closed_under_commutator(&a4));

    // inner derivations lie in the span
    let span = Subspace::from_rows(16, der.iter().map(Matrix::vectorize).collect());
    let mut all_inner = true;
    for u in 1..=4usize {
        for v in u + 1..=4 {
            let ad = a4.basis_adjoint(&[u, v]).unwrap();
            if !span.contains(&ad.matrix.vectorize()) {
                all_inner = false;
            }
        }
    }
    println!("A_4 inner maps inside Der: {all_inner}");

    // coordinate subspaces are never proper ideals
    use itertools::Itertools;
    let mut any_proper_ideal = false;
    for k in 1..4usize {
        for combo in (1..=4usize).combinations(k) {
            let sub = Subspace::from_rows(
                4,
                combo
                    .iter()
                    .map(|&i| naryalg::rational::unit_vector(4, i))
                    .collect(),
            );
            if a4.is_ideal(&sub).unwrap() {
                any_proper_ideal = true;
            }
        }
    }
    println!("A_4 has proper coordinate ideal: {any_proper_ideal}");

    let counter = catalog::counterexample_algebra(3).unwrap();
    println!("dim Der(counterexample) = {}", derivation_algebra(&counter).len());

    let f5 = catalog::filiform5(&naryalg::rational::rat(1), &naryalg::rational::rat(2));
    println!("dim Der(filiform5(1,2)) = {}", derivation_algebra(&f5).len());
    let r = naryalg::report::analyze(&f5, 0);
    println!("filiform5(1,2) report:\n{}", r.to_flat());
}
