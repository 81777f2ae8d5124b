//! Fourth probe: full validation of cyclic contraction variants.

use naryalg::catalog;
use naryalg::identities::*;
use naryalg::rational::rat;
use naryalg::product::NAryProduct;

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

fn orbit_product_general(d: usize, pattern: [[usize; 3]; 3]) -> NAryProduct {
    let reps = catalog::cyclic_orbit_representatives(d);
    let m = reps.len();
    let orbit_slot = |t: &[usize]| reps.iter().position(|x| *x == min_rot(t)).unwrap();
    let entry = |rep: &[usize], t: &[usize; 3]| min_rot(t) == *rep;
    let mut raw = Vec::new();
    for key in naryalg::product::canonical_keys(3, m, naryalg::Symmetry::General) {
        let tensors = [&reps[key[0] - 1], &reps[key[1] - 1], &reps[key[2] - 1]];
        let mut value = naryalg::rational::zero_vector(m);
        for i in 1..=d {
            for j in 1..=d {
                for k in 1..=d {
                    let mut total = 0i64;
                    for l in 1..=d {
                        let vals = [l, i, j, k];
                        let ok = (0..3).all(|f| {
                            let idx = [
                                vals[pattern[f][0]],
                                vals[pattern[f][1]],
                                vals[pattern[f][2]],
                            ];
                            entry(tensors[f], &idx)
                        });
                        if ok {
                            total += 1;
                        }
                    }
                    if total != 0 {
                        let slot = orbit_slot(&[i, j, k]);
                        let size = if i == j && j == k { 1 } else { 3 };
                        value[slot] += rat(total) / rat(size);
                    }
                }
            }
        }
        if !naryalg::rational::is_zero_vector(&value) {
            raw.push((key, value));
        }
    }
    NAryProduct::make_general(3, m, &raw).unwrap()
}

fn is_arg_cyclic(p: &NAryProduct) -> bool {
    let m = p.dim();
    for key in naryalg::product::canonical_keys(3, m, naryalg::Symmetry::General) {
        let rotated = vec![key[1], key[2], key[0]];
        if p.basis_bracket(&key).unwrap() != p.basis_bracket(&rotated).unwrap() {
            return false;
        }
    }
    true
}

fn report(name: &str, d: usize, pat: [[usize; 3]; 3]) {
    let p = orbit_product_general(d, pat);
    let adm = check_3lie_admissible(&p).map(|v| v.is_pass());
    let anti = antisymmetrize(&p);
    let fil = check_filippov(&anti).unwrap().is_pass();
    println!(
        "{name} d={d}: arg-cyclic = {}, 3lie = {:?}, antisym nonzero = {}, antisym filippov = {}",
        is_arg_cyclic(&p),
        adm,
        !anti.is_abelian(),
        fil
    );
}

fn main() {
    // l=0, i=1, j=2, k=3
    let printed = [[0, 1, 2], [0, 3, 1], [0, 2, 3]];
    let candidate = [[0, 1, 2], [0, 3, 2], [0, 2, 3]]; // U_{lkj}
    for d in 2..=3 {
        report("printed  T_lij U_lki V_ljk", d, printed);
        report("variant  T_lij U_lkj V_ljk", d, candidate);
    }
    // more single-position variants for completeness
    let more: Vec<(&str, [[usize; 3]; 3])> = vec![
        ("T_lik U_lki V_ljk", [[0, 1, 3], [0, 3, 1], [0, 2, 3]]),
        ("T_lij U_lkj V_lik", [[0, 1, 2], [0, 3, 2], [0, 1, 3]]),
        ("T_lij U_lji V_ljk", [[0, 1, 2], [0, 2, 1], [0, 2, 3]]),
        ("T_lij U_ljk V_lki", [[0, 1, 2], [0, 2, 3], [0, 3, 1]]),
        ("T_lij U_lik V_ljk", [[0, 1, 2], [0, 1, 3], [0, 2, 3]]),
    ];
    for (name, pat) in more {
        report(name, 3, pat);
    }
    // and the candidate at d=4 (dim (64+8)/3 = 24) may be slow; try it
    report("variant  T_lij U_lkj V_ljk", 4, candidate);
}
