//! Scratch probe for development; removed before release.

use naryalg::catalog::{self, DimNKind};
use naryalg::exterior::{maurer_cartan_check, mc_agrees_with_sh, mc_sh_proportionality};
use naryalg::identities::*;
use naryalg::perm::Permutation;
use naryalg::product::NAryProduct;
use naryalg::rational::{rat, unit_vector};
use naryalg::sampling;

fn main() {
    for n in 2..=5 {
        let a = catalog::simple_algebra(n);
        println!("A_{}: filippov = {:?}", n + 1, check_filippov(&a).unwrap());
    }
    for n in 2..=5 {
        let e1 = catalog::dim_n_algebra(n, DimNKind::E1);
        println!("e1 dim {n}: filippov = {:?}", check_filippov(&e1).unwrap());
        println!("e1 dim {n}: leibniz = {:?}", check_n_leibniz(&e1));
    }
    let cx = catalog::counterexample_algebra(3).unwrap();
    println!("counterexample(3): filippov = {:?}", check_filippov(&cx).unwrap());

    let f5 = catalog::filiform5(&rat(1), &rat(2));
    println!("filiform5(1,2): filippov = {:?}", check_filippov(&f5).unwrap());
    println!("filiform5(1,2): sh = {:?}", check_sh_jacobi(&f5).unwrap());
    println!("filiform5(1,2): mc agrees sh = {:?}", mc_agrees_with_sh(&f5).unwrap());

    // broken perturbation: add [1,3,5] -> e4
    let mut raw: Vec<(Vec<usize>, Vec<naryalg::Rational>)> = f5
        .constants()
        .iter()
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    raw.push((vec![1, 3, 5], unit_vector(5, 4)));
    let broken = NAryProduct::make_skew(3, 5, &raw).unwrap();
    println!("broken: filippov = {:?}", check_filippov(&broken).unwrap().is_pass());
    println!("broken: sh = {:?}", check_sh_jacobi(&broken).unwrap());
    println!("broken: mc = {:?}", maurer_cartan_check(&broken).unwrap());
    println!("broken: mc agrees sh = {:?}", mc_agrees_with_sh(&broken).unwrap());
    println!("broken: kappa = {:?}", mc_sh_proportionality(&broken).unwrap());

    // filiform models arity 4
    let f46 = catalog::filiform_model(4, 6);
    println!("filiform(4,6): filippov = {:?}", check_filippov(&f46).unwrap());

    // J_r
    for (v, r) in [(2usize, 5u32), (2, 6), (3, 5)] {
        let jr = catalog::truncated_jacobian_algebra(v, r).unwrap();
        println!(
            "J({v},{r}): dim = {}, filippov = {}, nilpotent = {}, kasymov = {}",
            jr.dim(),
            check_filippov(&jr).unwrap().is_pass(),
            naryalg::structure::is_nilpotent(&jr),
            naryalg::structure::check_kasymov(&jr),
        );
    }

    // sigma-associativity of the twisted matrix product
    let m22 = catalog::ternary_matrix_product(2, 2);
    let s1 = Permutation::new(vec![3, 2, 1]).unwrap();
    let id = Permutation::identity(3);
    println!("matrix3(2,2) sigma-total s1 = {:?}", check_sigma_total_assoc(&m22, &s1).unwrap());
    println!("matrix3(2,2) sigma-total id = {:?}", check_sigma_total_assoc(&m22, &id).unwrap().is_pass());
    let m23 = catalog::ternary_matrix_product(2, 3);
    println!("matrix3(2,3) sigma-total s1 = {:?}", check_sigma_total_assoc(&m23, &s1).unwrap());

    // cyclic tensor product
    let ct = catalog::cyclic_tensor_product(2);
    println!("cyclic(2): dim = {}", ct.dim());
    println!("cyclic(2): 3lie-admissible = {:?}", check_3lie_admissible(&ct));
    let anti = antisymmetrize(&ct);
    println!("cyclic(2) antisym: filippov = {:?}", check_filippov(&anti).unwrap());
    let ct3 = catalog::cyclic_tensor_product(3);
    println!("cyclic(3): dim = {}", ct3.dim());
    println!("cyclic(3): 3lie-admissible = {:?}", check_3lie_admissible(&ct3).map(|v| v.is_pass()));

    // partial assoc => 3-lie admissible (paper claim), test on a partially
    // associative ternary product of dim >= 5... use abelian + nilpotent cochain
    let pi = catalog::ternary_nilpotent_cochain();
    println!("pi: partial = {:?}, 3lie = {:?}", check_partial_assoc(&pi).is_pass(), check_3lie_admissible(&pi).map(|v| v.is_pass()));

    // group-algebra equivalence oracle on random products
    let mut rng = sampling::seeded_rng(11);
    let mut agree_v = 0;
    let mut agree_w = 0;
    let total = 30;
    for _ in 0..total {
        let prod = sampling::random_skew_product(&mut rng, 3, 5, 2);
        let v = naryalg::groupalg::filippov_vector(3);
        let w = naryalg::groupalg::total_antisym_vector(5).unwrap();
        let fil = check_filippov(&prod).unwrap().is_pass();
        let sh = check_sh_jacobi(&prod).unwrap().is_pass();
        let v_vanishes = group_vector_vanishes(&prod, &v);
        let w_vanishes = group_vector_vanishes(&prod, &w);
        if fil == v_vanishes {
            agree_v += 1;
        }
        if sh == w_vanishes {
            agree_w += 1;
        }
    }
    println!("group-algebra equivalence: v {agree_v}/{total}, w {agree_w}/{total}");

    // mc/sh agreement + kappa on randoms
    let mut rng = sampling::seeded_rng(13);
    let mut agree = 0;
    let mut kappas = std::collections::BTreeSet::new();
    for i in 0..30 {
        let dim = 5 + (i % 3);
        let prod = sampling::random_skew_product(&mut rng, 3, dim, 2);
        if mc_agrees_with_sh(&prod).unwrap() {
            agree += 1;
        }
        if let Some(k) = mc_sh_proportionality(&prod).unwrap() {
            kappas.insert(k.to_string());
        }
    }
    println!("mc/sh agreement: {agree}/30, kappas = {kappas:?}");
}

/// Whether mu o (mu (x) I_{n-1}) composed with the slot action of the
/// group-algebra element vanishes on all basis tuples.
fn group_vector_vanishes(
    prod: &NAryProduct,
    elem: &naryalg::groupalg::GroupAlgebraElement,
) -> bool {
    use itertools::Itertools;
    let n = prod.arity();
    let p = prod.dim();
    let m = 2 * n - 1;
    for tuple in std::iter::repeat(1..=p).take(m).multi_cartesian_product() {
        let mut acc = naryalg::rational::zero_vector(p);
        for (sigma, coeff) in elem.terms() {
            let pulled = sigma.pull(&tuple);
            let inner = prod.basis_bracket(&pulled[..n]).unwrap();
            let mut args: Vec<Vec<naryalg::Rational>> = vec![inner];
            for &i in &pulled[n..] {
                args.push(unit_vector(p, i));
            }
            let term = prod.bracket(&args).unwrap();
            naryalg::rational::axpy(&mut acc, coeff, &term);
        }
        if !naryalg::rational::is_zero_vector(&acc) {
            return false;
        }
    }
    true
}
