//! Third probe: index-pattern variants of the cyclic tensor contraction,
//! and a search for sh-breaking two-key perturbations of filiform5.

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

/// Orbit-space product for a general contraction pattern: factor f gets the
/// index triple pattern[f] drawn from (l, i, j, k) coded as 0..=3.
fn orbit_product(d: usize, pattern: [[usize; 3]; 3]) -> NAryProduct {
    let reps = catalog::cyclic_orbit_representatives(d);
    let m = reps.len();
    let orbit_slot = |t: &[usize]| reps.iter().position(|x| *x == min_rot(t)).unwrap();
    let entry = |rep: &[usize], t: &[usize; 3]| min_rot(t) == *rep;
    let mut raw = Vec::new();
    for key in naryalg::product::canonical_keys(3, m, naryalg::Symmetry::Cyclic) {
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
    // the variant patterns need not be argument-cyclic; build as general to
    // stay faithful, keyed on all argument tuples
    let mut raw_general = Vec::new();
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
            raw_general.push((key, value));
        }
    }
    let _ = raw;
    NAryProduct::make_general(3, m, &raw_general).unwrap()
}

fn main() {
    // coded indices: l=0, i=1, j=2, k=3
    // printed pattern: T_{lij} U_{lki} V_{ljk}
    let base = [[0, 1, 2], [0, 3, 1], [0, 2, 3]];
    println!(
        "printed pattern d=3 (general storage): {:?}",
        check_3lie_admissible(&orbit_product(3, base)).map(|v| v.is_pass())
    );
    // transposed variants of each factor's free indices
    let variants: Vec<(&str, [[usize; 3]; 3])> = vec![
        ("U<->V swapped patterns", [[0, 1, 2], [0, 2, 3], [0, 3, 1]]),
        ("T_{lji}", [[0, 2, 1], [0, 3, 1], [0, 2, 3]]),
        ("U_{lik}", [[0, 1, 2], [0, 1, 3], [0, 2, 3]]),
        ("V_{lkj}", [[0, 1, 2], [0, 3, 1], [0, 3, 2]]),
        ("all transposed", [[0, 2, 1], [0, 1, 3], [0, 3, 2]]),
        ("chain l: T_{lij} U_{jlk}... ", [[0, 1, 2], [2, 0, 3], [0, 2, 3]]),
    ];
    for (name, pat) in variants {
        let p = orbit_product(3, pat);
        println!(
            "{name}: 3lie = {:?}",
            check_3lie_admissible(&p).map(|v| v.is_pass())
        );
    }

    // search 2-key perturbations of filiform5 for an sh-jacobi failure
    let f5 = catalog::filiform5(&rat(1), &rat(2));
    use itertools::Itertools;
    let keys: Vec<Vec<usize>> = (1..=5usize).combinations(3).collect();
    let mut found = 0;
    'outer: for k1 in &keys {
        for t1 in 1..=5usize {
            for k2 in &keys {
                for t2 in 1..=5usize {
                    let mut raw: Vec<(Vec<usize>, Vec<naryalg::Rational>)> = f5
                        .constants()
                        .iter()
                        .map(|(k, v)| (k.clone(), v.clone()))
                        .collect();
                    raw.push((k1.clone(), unit_vector(5, t1)));
                    raw.push((k2.clone(), unit_vector(5, t2)));
                    let p = NAryProduct::make_skew(3, 5, &raw).unwrap();
                    if !check_sh_jacobi(&p).unwrap().is_pass() {
                        println!(
                            "sh-breaking perturbation: +[{k1:?}]->e{t1}, +[{k2:?}]->e{t2}"
                        );
                        found += 1;
                        if found >= 5 {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    if found == 0 {
        println!("no 2-key sh-breaking perturbation found");
    }
}
