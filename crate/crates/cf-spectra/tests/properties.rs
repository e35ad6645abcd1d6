//! Cross-module invariants: round trips, parity agreement at scale,
//! reflection/shift/window stability of the spectrum functionals, and
//! algebraic laws of the exact arithmetic under proptest.

use cf_spectra::cf::{canonical_period, eval_periodic, expand_surd, PeriodicCF, Word};
use cf_spectra::exact::{QuadSurd, Rational, SurdSum};
use cf_spectra::spectra::{l_value, m_value, m_value_windowed, BiSeq};
use cf_spectra::verifiers::{run_lambda_window_suite, run_parity_agreement_suite};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;

fn word(letters: &[u32]) -> Word {
    Word::new(letters.to_vec()).unwrap()
}

#[test]
fn roundtrip_200_random_periodic_cfs() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..200 {
        let pre_len = rng.gen_range(0..4);
        let per_len = rng.gen_range(1..=8);
        let pre: Vec<u32> = (0..pre_len).map(|_| rng.gen_range(1..=4)).collect();
        let per: Vec<u32> = (0..per_len).map(|_| rng.gen_range(1..=4)).collect();
        let cf = PeriodicCF::new(rng.gen_range(-2..3), word(&pre), word(&per));
        let value = eval_periodic(&cf);
        let back = eval_periodic(&canonical_period(&expand_surd(&value)));
        assert_eq!(value, back, "cf = {cf}");
    }
}

#[test]
fn parity_rule_agrees_with_exact_order_10k() {
    let rep = run_parity_agreement_suite(10_000, 271828);
    assert!(rep.ok(), "{:?}", rep.failures);
}

#[test]
fn lambda_window_contains_concrete_extensions_1k() {
    let rep = run_lambda_window_suite(1_000, 314159);
    assert!(rep.ok(), "{:?}", rep.failures);
}

fn random_biseq(rng: &mut ChaCha8Rng) -> BiSeq {
    let mk = |rng: &mut ChaCha8Rng, lo: usize| {
        let len = rng.gen_range(lo..=4);
        Word::new((0..len).map(|_| rng.gen_range(1..=4)).collect()).unwrap()
    };
    let left = mk(rng, 1);
    let center = mk(rng, 0);
    let right = mk(rng, 1);
    BiSeq::new(left, center, right).unwrap()
}

#[test]
fn m_value_reflection_invariant_100_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..100 {
        let b = random_biseq(&mut rng);
        let m1 = m_value(&b).unwrap();
        let m2 = m_value(&b.reflect()).unwrap();
        assert_eq!(
            m1.value.compare(&m2.value),
            Ordering::Equal,
            "reflection must preserve the supremum for {b}"
        );
        assert_eq!(m1.attained, m2.attained, "attainedness is mirror-symmetric for {b}");
    }
}

#[test]
fn m_and_l_shift_invariant_100_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    for _ in 0..100 {
        let b = random_biseq(&mut rng);
        let m1 = m_value(&b).unwrap();
        let shifted = b.shift_left();
        let m2 = m_value(&shifted).unwrap();
        assert_eq!(m1.value.compare(&m2.value), Ordering::Equal, "shift: {b}");
        assert_eq!(m1.attained, m2.attained);
        let l1 = l_value(&b).unwrap();
        let l2 = l_value(&b.absorb_right(1)).unwrap();
        assert_eq!(l1.value.compare(&l2.value), Ordering::Equal);
    }
}

#[test]
fn m_value_window_doubling_is_stable_100_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..100 {
        let b = random_biseq(&mut rng);
        let m2 = m_value_windowed(&b, 2).unwrap();
        let m4 = m_value_windowed(&b, 4).unwrap();
        assert_eq!(
            m2.value.compare(&m4.value),
            Ordering::Equal,
            "certified sup must not move when the window doubles: {b}"
        );
        assert_eq!(m2.attained, m4.attained);
        assert_eq!(m2.witness, m4.witness);
    }
}

#[test]
fn pure_periodic_m_equals_l_100_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    for _ in 0..100 {
        let len = rng.gen_range(1..=6);
        let p = Word::new((0..len).map(|_| rng.gen_range(1..=4)).collect()).unwrap();
        let b = BiSeq::purely_periodic(p).unwrap();
        let m = m_value(&b).unwrap();
        let l = l_value(&b).unwrap();
        assert_eq!(m.value.compare(&l.value), Ordering::Equal);
        assert!(m.attained && l.attained);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn qs_sub_self_is_zero(a in -50i64..50, b in -50i64..50, c in 1i64..20, d in 0i64..60) {
        let x = QuadSurd::new(a.into(), b.into(), c.into(), d.into()).unwrap();
        prop_assert!(x.sub(&x).unwrap().is_zero());
    }

    #[test]
    fn qs_mul_inv_is_one(a in -50i64..50, b in -50i64..50, c in 1i64..20, d in 0i64..60) {
        let x = QuadSurd::new(a.into(), b.into(), c.into(), d.into()).unwrap();
        prop_assume!(!x.is_zero());
        let prod = x.mul(&x.inv().unwrap()).unwrap();
        prop_assert_eq!(prod, QuadSurd::one());
    }

    #[test]
    fn qs_floor_brackets(a in -50i64..50, b in -50i64..50, c in 1i64..20, d in 0i64..60) {
        let x = QuadSurd::new(a.into(), b.into(), c.into(), d.into()).unwrap();
        let n = x.floor();
        prop_assert_ne!(x.cmp_rational(&Rational::from(n.clone())), Ordering::Less);
        prop_assert_eq!(
            x.cmp_rational(&Rational::from(n + BigInt::from(1))),
            Ordering::Less
        );
    }

    #[test]
    fn ss_minpoly_annihilates(
        a in -9i64..9, b in -9i64..9, c in 1i64..6, d in 0i64..30,
        e in -9i64..9, f in -9i64..9, g in 1i64..6, h in 0i64..30,
    ) {
        let x = QuadSurd::new(a.into(), b.into(), c.into(), d.into()).unwrap();
        let y = QuadSurd::new(e.into(), f.into(), g.into(), h.into()).unwrap();
        let u = SurdSum::make(&x, &y);
        let poly = u.minpoly().unwrap();
        prop_assert!(poly.len() <= 5);
        let mut acc = SurdSum::zero();
        let mut pow = SurdSum::from_int(1);
        for coef in &poly {
            acc.add_assign(&pow.scale(&Rational::from(coef.clone())));
            pow = pow.mul(&u);
        }
        prop_assert!(acc.is_zero());
    }

    #[test]
    fn ss_compare_agrees_with_refined_midpoints(
        a in -9i64..9, b in -9i64..9, c in 1i64..6, d in 0i64..30,
        e in -9i64..9, f in -9i64..9, g in 1i64..6, h in 0i64..30,
    ) {
        let u = SurdSum::from_quadsurd(&QuadSurd::new(a.into(), b.into(), c.into(), d.into()).unwrap());
        let v = SurdSum::from_quadsurd(&QuadSurd::new(e.into(), f.into(), g.into(), h.into()).unwrap());
        let diff = u.sub(&v);
        let iv = diff.refine(80);
        match u.compare(&v) {
            Ordering::Equal => prop_assert!(diff.is_zero()),
            ord => {
                // once the interval separates from zero it must agree
                if let Some(sign) = iv.definite_sign() {
                    prop_assert_eq!(ord, sign);
                }
            }
        }
    }

    #[test]
    fn ss_order_antisymmetric_transitive(
        vals in proptest::collection::vec((-9i64..9, -9i64..9, 1i64..6, 0i64..30), 3)
    ) {
        let sums: Vec<SurdSum> = vals
            .iter()
            .map(|(a, b, c, d)| {
                SurdSum::from_quadsurd(
                    &QuadSurd::new((*a).into(), (*b).into(), (*c).into(), (*d).into()).unwrap(),
                )
            })
            .collect();
        for x in &sums {
            for y in &sums {
                prop_assert_eq!(x.compare(y), y.compare(x).reverse());
                for z in &sums {
                    if x.compare(y) != Ordering::Greater && y.compare(z) != Ordering::Greater {
                        prop_assert_ne!(x.compare(z), Ordering::Greater);
                    }
                }
            }
        }
    }

    #[test]
    fn mobius_products_unimodular(letters in proptest::collection::vec(1u32..=4, 1..12)) {
        let w = Word::new(letters).unwrap();
        let det = cf_spectra::cf::Mobius::of_word(&w).det();
        prop_assert!(det == BigInt::from(1) || det == BigInt::from(-1));
    }

    #[test]
    fn expand_roundtrips_on_values(
        a in -20i64..20, b in -20i64..20, c in 1i64..15, d in 2i64..40,
    ) {
        let x = QuadSurd::new(a.into(), b.into(), c.into(), d.into()).unwrap();
        prop_assume!(!x.is_rational());
        let cf = expand_surd(&x);
        prop_assert_eq!(eval_periodic(&cf), x);
    }
}
