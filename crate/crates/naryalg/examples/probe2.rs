//! Second scratch probe: cyclic tensor variants and sh-breaking perturbations.

use naryalg::catalog;
use naryalg::identities::*;
use naryalg::product::NAryProduct;
use naryalg::rational::{rat, unit_vector};

fn min_rot(t: &[usize]) -> Vec<usize> {
    [
        vec![t[0], t[1], t[2]],
        vec![t[1], t[2], t[0]],
        vec![t[2], t[0], t[1]],
    ]
    .into_iter()
    .min()
    .unwrap()
}

/// Unprojected product on the full d^3-dimensional tensor space:
/// (T.U.V)_{ijk} = sum_l T_{lij} U_{lki} V_{ljk}, basis e_{(l,i,j)} indexed
/// lexicographically.
fn full_tensor_product(d: usize) -> NAryProduct {
    let mut triples = Vec::new();
    for a in 1..=d {
        for b in 1..=d {
            for c in 1..=d {
                triples.push(vec![a, b, c]);
            }
        }
    }
    let slot = |t: &[usize]| triples.iter().position(|x| x == t).unwrap() + 1;
    let p = triples.len();
    let mut raw = Vec::new();
    // mu(e_{t1}, e_{t2}, e_{t3})_{ijk} = sum_l [t1 = (l,i,j)][t2 = (l,k,i)][t3 = (l,j,k)]
    for t1 in &triples {
        let (l, i, j) = (t1[0], t1[1], t1[2]);
        for k in 1..=d {
            let t2 = vec![l, k, i];
            let t3 = vec![l, j, k];
            let key = vec![slot(t1), slot(&t2), slot(&t3)];
            raw.push((key, unit_vector(p, slot(&vec![i, j, k]))));
        }
    }
    NAryProduct::make_general(3, p, &raw).unwrap()
}

/// Orbit-space product with the SUM projection instead of the average.
fn cyclic_sum_product(d: usize) -> NAryProduct {
    let reps = catalog::cyclic_orbit_representatives(d);
    let m = reps.len();
    let orbit_slot = |t: &[usize]| reps.iter().position(|x| *x == min_rot(t)).unwrap();
    let entry = |rep: &[usize], l: usize, i: usize, j: usize| min_rot(&[l, i, j]) == *rep;
    let mut raw = Vec::new();
    for key in naryalg::product::canonical_keys(3, m, naryalg::Symmetry::Cyclic) {
        let (ta, tb, tc) = (&reps[key[0] - 1], &reps[key[1] - 1], &reps[key[2] - 1]);
        let mut value = naryalg::rational::zero_vector(m);
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
                        value[orbit_slot(&[i, j, k])] += rat(total);
                    }
                }
            }
        }
        // sum projection counts each orbit member once; divide by nothing
        // but fix the orbit-size overcount for the basis expansion
        let norm: Vec<naryalg::Rational> = value
            .iter()
            .enumerate()
            .map(|(s, v)| {
                let size = if reps[s][0] == reps[s][1] && reps[s][1] == reps[s][2] {
                    1
                } else {
                    3
                };
                v / rat(size)
            })
            .collect();
        let scaled: Vec<naryalg::Rational> = norm.iter().map(|v| v * rat(3)).collect();
        if !naryalg::rational::is_zero_vector(&scaled) {
            raw.push((key, scaled));
        }
    }
    NAryProduct::make_cyclic(3, m, &raw).unwrap()
}

fn main() {
    // full-space product: is the paper's formula 3-Lie admissible there?
    let full2 = full_tensor_product(2);
    println!("full tensor d=2: dim = {}", full2.dim());
    println!(
        "full tensor d=2: 3lie-admissible = {:?}",
        check_3lie_admissible(&full2).map(|v| v.is_pass())
    );
    let anti = antisymmetrize(&full2);
    println!(
        "full tensor d=2 antisym: filippov = {:?}, nonzero = {}",
        check_filippov(&anti).unwrap().is_pass(),
        !anti.is_abelian()
    );

    // orbit space, averaging projector (the catalog one)
    let ct2 = catalog::cyclic_tensor_product(2);
    let anti2 = antisymmetrize(&ct2);
    println!(
        "cyclic avg d=2: antisym nonzero = {}, filippov = {:?}",
        !anti2.is_abelian(),
        check_filippov(&anti2).unwrap().is_pass()
    );
    println!("cyclic avg d=2 constants: {:?}", ct2.constants().len());

    // orbit space, sum projector, d = 3
    let sum3 = cyclic_sum_product(3);
    println!(
        "cyclic sum d=3: 3lie-admissible = {:?}",
        check_3lie_admissible(&sum3).map(|v| v.is_pass())
    );
    let avg3 = catalog::cyclic_tensor_product(3);
    println!(
        "cyclic avg d=3: 3lie-admissible = {:?}",
        check_3lie_admissible(&avg3).map(|v| v.is_pass())
    );
    let anti3 = antisymmetrize(&avg3);
    println!(
        "cyclic avg d=3 antisym: nonzero = {}, filippov = {:?}",
        !anti3.is_abelian(),
        check_filippov(&anti3).unwrap().is_pass()
    );

    // partially associative product on dim >= 5 is 3-Lie admissible,
    // non-vacuously
    let pi5 = NAryProduct::make_general(3, 5, &[(vec![1, 1, 1], unit_vector(5, 2))]).unwrap();
    println!(
        "pi on K^5: partial = {}, 3lie (non-vacuous) = {:?}",
        check_partial_assoc(&pi5).is_pass(),
        check_3lie_admissible(&pi5).map(|v| v == Verdict::Pass)
    );

    // find sh-breaking perturbations of filiform5
    let f5 = catalog::filiform5(&rat(1), &rat(2));
    for extra in [
        (vec![3, 4, 5], 1usize),
        (vec![2, 4, 5], 1),
        (vec![1, 4, 5], 3),
        (vec![2, 3, 5], 1),
        (vec![1, 3, 5], 2),
    ] {
        let mut raw: Vec<(Vec<usize>, Vec<naryalg::Rational>)> = f5
            .constants()
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        raw.push((extra.0.clone(), unit_vector(5, extra.1)));
        let p = NAryProduct::make_skew(3, 5, &raw).unwrap();
        let sh = check_sh_jacobi(&p).unwrap();
        println!(
            "perturb {:?}->e{}: sh pass = {}, mc agrees = {}",
            extra.0,
            extra.1,
            sh.is_pass(),
            naryalg::exterior::mc_agrees_with_sh(&p).unwrap()
        );
    }
}
