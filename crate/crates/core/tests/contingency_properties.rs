mod common;

use common::{p, permuted, random_margins, rng};
use lrtables::oracle::{oracle_gl_invariants, oracle_gl_invariants_shifted};
use lrtables::{
    count_tables, enumerate_lrct, hom_dimension, lrc_general, lrc_zero, table_norm, Error,
    GlWeight, MarginSpec, Partition, TableSpec,
};
use num_traits::Zero;
use rand::Rng;

fn one_row_margins(a: &[usize], b: &[usize]) -> MarginSpec {
    let pairs: Vec<(Partition, Partition)> = a
        .iter()
        .zip(b)
        .map(|(&x, &y)| (Partition::row(x), Partition::row(y)))
        .collect();
    let n = pairs
        .iter()
        .map(|(x, y)| x.length() + y.length())
        .sum::<usize>()
        .max(1);
    MarginSpec::from_pairs(pairs, n).unwrap()
}

#[test]
fn permutation_and_duality_invariance() {
    let mut rng = rng(11);
    for _ in 0..120 {
        let m = random_margins(&mut rng, 3, 3, 2, 0.8);
        let value = lrc_zero(&m).unwrap();
        assert_eq!(lrc_zero(&permuted(&m, &mut rng)).unwrap(), value, "{m:?}");
        assert_eq!(lrc_zero(&m.dual()).unwrap(), value, "{m:?}");
    }
}

#[test]
fn agrees_with_oracle() {
    let mut rng = rng(23);
    let mut nonzero = 0;
    for _ in 0..120 {
        let m = random_margins(&mut rng, 3, 3, 2, 0.8);
        let value = lrc_zero(&m).unwrap();
        assert_eq!(value, oracle_gl_invariants(&m), "{m:?}");
        nonzero += usize::from(!value.is_zero());
    }
    assert!(nonzero >= 20, "only {nonzero} samples had invariants");
}

#[test]
fn oracle_ignores_extra_determinant_shift() {
    let mut rng = rng(5);
    for _ in 0..80 {
        let m = random_margins(&mut rng, 3, 3, 2, 0.8);
        let extra: Vec<usize> = (0..m.len()).map(|_| rng.gen_range(0..=2)).collect();
        assert_eq!(
            oracle_gl_invariants_shifted(&m, &extra),
            oracle_gl_invariants(&m),
            "{m:?} {extra:?}"
        );
    }
}

#[test]
fn emitted_tables_respect_sizes_and_norms() {
    let mut rng = rng(41);
    for _ in 0..60 {
        let m = random_margins(&mut rng, 3, 3, 2, 1.0);
        let mut total = num_bigint::BigUint::zero();
        for (t, norm) in enumerate_lrct(&m, true) {
            assert!(t.is_hollow());
            let sizes = t.size_table();
            for (i, w) in m.weights().iter().enumerate() {
                assert_eq!(sizes[i].iter().sum::<usize>(), w.plus().size());
                assert_eq!(
                    sizes.iter().map(|row| row[i]).sum::<usize>(),
                    w.minus().size()
                );
            }
            assert!(!norm.is_zero());
            assert_eq!(table_norm(&t, &m).unwrap(), norm);
            total += norm;
        }
        assert_eq!(total, lrc_zero(&m).unwrap());
    }
}

#[test]
fn one_row_margins_count_hollow_tables() {
    for r in 1..=3 {
        let vectors: Vec<Vec<usize>> = (0..4usize.pow(r as u32))
            .map(|code| (0..r).map(|i| code / 4usize.pow(i as u32) % 4).collect())
            .collect();
        for a in &vectors {
            for b in &vectors {
                let expected = count_tables(&TableSpec::new(a.clone(), b.clone()).hollow(true));
                assert_eq!(
                    lrc_zero(&one_row_margins(a, b)).unwrap(),
                    expected,
                    "{a:?} {b:?}"
                );
            }
        }
    }
}

#[test]
fn hom_counts_contingency_tables() {
    for (rows, cols) in [
        (vec![2, 1], vec![1, 1, 1]),
        (vec![3], vec![1, 2]),
        (vec![2, 2], vec![2, 2]),
        (vec![1, 1, 1], vec![1, 1, 1]),
        (vec![3, 1, 2], vec![2, 2, 2]),
    ] {
        let sources: Vec<Partition> = rows.iter().map(|&a| Partition::row(a)).collect();
        let targets: Vec<Partition> = cols.iter().map(|&b| Partition::row(b)).collect();
        let n = rows.len() + cols.len();
        assert_eq!(
            hom_dimension(&sources, &targets, n).unwrap(),
            count_tables(&TableSpec::new(rows.clone(), cols.clone())),
            "{rows:?} {cols:?}"
        );
    }
}

#[test]
fn lrc_general_matches_pieri() {
    let n = 4;
    let v = GlWeight::polynomial(p(&[1]), n).unwrap();
    let vv = MarginSpec::new(vec![v.clone(), v]).unwrap();
    for lambda in [p(&[2]), p(&[1, 1])] {
        let target = GlWeight::polynomial(lambda, n).unwrap();
        assert_eq!(lrc_general(&target, &vv).unwrap(), 1u32.into());
    }
    let target = GlWeight::polynomial(p(&[3]), n).unwrap();
    assert!(lrc_general(&target, &vv).unwrap().is_zero());
}

#[test]
fn refuses_outside_stable_range() {
    let m = MarginSpec::from_pairs(vec![(p(&[1]), p(&[1])); 3], 5).unwrap();
    match lrc_zero(&m) {
        Err(Error::OutsideStableRange { n, threshold, .. }) => assert_eq!((n, threshold), (5, 6)),
        other => panic!("expected a stable-range error, got {other:?}"),
    }
}
