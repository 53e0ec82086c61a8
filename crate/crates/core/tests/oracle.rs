mod common;

use common::*;
use relga::kernel::{blade_product, BladeIndex, Multivector, Signature};

fn check_signature(sig: Signature, metric: &[f64]) {
    let n = sig.blade_count();
    let dim = metric.len();
    let table = sig.table();
    for i in 0..n {
        for j in 0..n {
            let (want_sign, word) =
                naive_word_product(&generators(i, dim), &generators(j, dim), metric);
            let want_index = word_to_index(&word);
            let (a, b) = (
                BladeIndex::new(i as u8, sig).unwrap(),
                BladeIndex::new(j as u8, sig).unwrap(),
            );
            let (sign, result) = blade_product(a, b, sig);
            assert_eq!(
                (sign as f64, result.index()),
                (want_sign, want_index),
                "{sig} {i}*{j}"
            );
            assert_eq!(table.get(a, b), (sign, result));
        }
    }
}

#[test]
fn blade_products_match_naive_expansion() {
    check_signature(Signature::EUCLIDEAN_3, &APS_METRIC);
    check_signature(Signature::SPACETIME, &STA_METRIC);
}

#[test]
fn other_signatures_match_naive_expansion() {
    for (p, q) in [
        (0, 1),
        (1, 0),
        (0, 2),
        (2, 0),
        (1, 1),
        (3, 1),
        (0, 4),
        (2, 2),
    ] {
        let sig = Signature::new(p, q).unwrap();
        let metric: Vec<f64> = (0..p + q).map(|k| if k < p { 1.0 } else { -1.0 }).collect();
        check_signature(sig, &metric);
    }
}

#[test]
fn dense_products_match_naive_expansion() {
    let mut r = rng(11);
    for _ in 0..200 {
        let a: [f64; 16] = uniform(&mut r, 2.0);
        let b: [f64; 16] = uniform(&mut r, 2.0);
        let (ma, mb) = (
            Multivector::new(Signature::SPACETIME, a).unwrap(),
            Multivector::new(Signature::SPACETIME, b).unwrap(),
        );
        let got = ma.geometric_product(&mb).unwrap();
        let want = naive_product(&a, &b, &STA_METRIC);
        for (x, y) in got.coeffs().iter().zip(&want) {
            assert!((x - y).abs() <= 1e-13);
        }
    }
}

#[test]
fn naive_oracle_knows_the_basic_relations() {
    // γ1 γ0 γ1 = γ0 (γ1² = -1, one swap)
    let (s, w) = naive_word_product(&[1, 0], &[1], &STA_METRIC);
    assert_eq!((s, w), (1.0, vec![0]));
    // e3 e2 e1 = -e123
    let (s, w) = naive_word_product(&[2], &[1, 0], &APS_METRIC);
    assert_eq!((s, w), (-1.0, vec![0, 1, 2]));
    // I² = -1 in Cl(1,3)
    let (s, w) = naive_word_product(&[0, 1, 2, 3], &[0, 1, 2, 3], &STA_METRIC);
    assert_eq!((s, w), (-1.0, vec![]));
}
