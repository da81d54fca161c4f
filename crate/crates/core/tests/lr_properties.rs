mod common;

use common::{brute_lr, p, rng};
use lrtables::{lr_coefficient, multi_lr, pieri_column, pieri_row, schur_product, Partition};
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::Rng;

fn all_upto(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(Partition::all_of_size).collect()
}

#[test]
fn lr_coefficient_matches_brute_force() {
    for size in 0..=7 {
        for lambda in Partition::all_of_size(size) {
            for a in 0..=size {
                for mu in Partition::all_of_size(a) {
                    for nu in Partition::all_of_size(size - a) {
                        assert_eq!(
                            lr_coefficient(&lambda, &mu, &nu),
                            BigUint::from(brute_lr(&lambda, &mu, &nu)),
                            "c^{lambda}_{{{mu},{nu}}}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn brute_force_spec_examples() {
    assert_eq!(brute_lr(&p(&[2, 1]), &p(&[1, 1]), &p(&[1])), 1);
    assert_eq!(brute_lr(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
}

#[test]
fn commutativity_and_conjugation_up_to_8() {
    for size in 0..=8 {
        for lambda in Partition::all_of_size(size) {
            let lc = lambda.conjugate();
            for a in 0..=size {
                for mu in Partition::all_of_size(a) {
                    if !lambda.contains(&mu) {
                        continue;
                    }
                    for nu in Partition::all_of_size(size - a) {
                        let c = lr_coefficient(&lambda, &mu, &nu);
                        assert_eq!(c, lr_coefficient(&lambda, &nu, &mu));
                        assert_eq!(c, lr_coefficient(&lc, &mu.conjugate(), &nu.conjugate()));
                    }
                }
            }
        }
    }
}

#[test]
fn homogeneity() {
    let mut rng = rng(7);
    let pool = all_upto(6);
    for _ in 0..500 {
        let lambda = pool.choose(&mut rng).unwrap();
        let mu = pool.choose(&mut rng).unwrap();
        let nu = pool.choose(&mut rng).unwrap();
        if lambda.size() != mu.size() + nu.size() {
            assert_eq!(lr_coefficient(lambda, mu, nu), BigUint::from(0u8));
        }
    }
}

#[test]
fn schur_product_agrees_with_coefficients() {
    for mu in all_upto(4) {
        for nu in all_upto(4) {
            for cap in [None, Some(1), Some(2), Some(3)] {
                let expansion = schur_product(&mu, &nu, cap);
                for (lambda, c) in expansion.iter() {
                    assert_eq!(lambda.size(), mu.size() + nu.size());
                    assert!(lambda.contains(&mu) && lambda.contains(&nu));
                    assert!(cap.is_none_or(|m| lambda.length() <= m));
                    assert_eq!(*c, lr_coefficient(lambda, &mu, &nu));
                }
                // nothing missing
                for lambda in Partition::all_of_size(mu.size() + nu.size()) {
                    if cap.is_none_or(|m| lambda.length() <= m) {
                        assert_eq!(expansion.get(&lambda), lr_coefficient(&lambda, &mu, &nu));
                    }
                }
            }
        }
    }
}

#[test]
fn pieri_agrees_with_schur_product() {
    for mu in all_upto(6) {
        for k in 0..=4 {
            for cap in [None, Some(mu.length()), Some(mu.length() + 1)] {
                assert_eq!(
                    pieri_row(&mu, k, cap),
                    schur_product(&mu, &Partition::row(k), cap),
                    "row {mu} {k} {cap:?}"
                );
                assert_eq!(
                    pieri_column(&mu, k, cap),
                    schur_product(&mu, &Partition::column(k), cap),
                    "column {mu} {k} {cap:?}"
                );
            }
        }
    }
}

#[test]
fn multi_lr_fold_order_independent() {
    let mut rng = rng(11);
    let pool = all_upto(4);
    let mut nonzero = 0;
    for _ in 0..250 {
        let r = rng.gen_range(1..=4);
        let mut factors: Vec<Partition> = (0..r)
            .map(|_| pool.choose(&mut rng).unwrap().clone())
            .collect();
        let total: usize = factors.iter().map(Partition::size).sum();
        let candidates = Partition::all_of_size(total);
        let target = candidates.choose(&mut rng).unwrap().clone();
        let base = multi_lr(&target, &factors);
        // reference: explicit left fold of full Schur products
        let mut acc = lrtables::ExpansionMap::unit(Partition::empty());
        for f in &factors {
            let mut next = lrtables::ExpansionMap::new();
            for (shape, c) in acc.iter() {
                for (lambda, d) in schur_product(shape, f, None) {
                    next.add(lambda, c * d);
                }
            }
            acc = next;
        }
        assert_eq!(base, acc.get(&target));
        if base > BigUint::from(0u8) {
            nonzero += 1;
        }
        for _ in 0..3 {
            factors.shuffle(&mut rng);
            assert_eq!(multi_lr(&target, &factors), base);
        }
    }
    assert!(nonzero > 50, "too few nonzero samples: {nonzero}");
}
