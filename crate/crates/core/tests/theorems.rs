use num_traits::One;
use proptest::prelude::*;
use xtl::arith::Sampler;
use xtl::qkz::checks::{relation_sz_rhs, sample_w};
use xtl::qkz::{rescaled_y, QkzParams};
use xtl::sixvertex::checks::sample_sv_params;
use xtl::sixvertex::{alpha_minus, partition_enum};
use xtl::theorems::*;
use xtl::tsasm::{genfun, GENFUN_VARS};
use xtl::{brace, bracket, contour, Field, Gq, IntPoly, Integer, Report, Ring};

const SEED: u64 = 11;

fn assert_pass(r: &Report) {
    assert!(r.pass && r.trials > 0, "{}", r.to_json());
}

fn xt(terms: &[(i32, i32, i64)]) -> IntPoly {
    IntPoly::from_terms(&["x", "tau"], terms.iter().map(|&(a, b, c)| (vec![a, b], c.into())))
}

#[test]
fn relation_sz_small() {
    for big_n in 0..=5 {
        assert_pass(&check_relation_sz(big_n, 3, SEED));
    }
}

fn flipped(p: &QkzParams<Gq>, big_n: usize, z: &Gq) -> xtl::Result<Gq> {
    relation_sz_rhs(p, big_n, z).map(|v| -v)
}

#[test]
fn relation_sz_wrong_sign_fails() {
    for big_n in 2..=4 {
        assert!(!check_relation_sz_with(big_n, 2, SEED, flipped).pass);
    }
}

#[test]
fn y_equals_yy_small() {
    for big_n in 0..=6 {
        assert_pass(&check_y_equals_yy(big_n, 2, SEED));
    }
}

#[test]
fn y2_is_a_single_brace() {
    let mut s = Sampler::new(SEED);
    for _ in 0..5 {
        let (p, w) = sample_w(&mut s, 2);
        let expect = brace(&p.s.mul_ref(&p.beta)).unwrap();
        assert_eq!(rescaled_y(&p, 2, &w).unwrap(), expect);
        // −t{b q^{−1/2}} at b = q
        let sv = sv_params_of(&p, 2, b_by_parity).unwrap();
        let yy1 = -sv.t.mul_ref(&brace(&sv.b.checked_div(&sv.s).unwrap()).unwrap());
        assert_eq!(yy1, expect);
    }
}

fn swapped(p: &QkzParams<Gq>, big_n: usize) -> xtl::Result<Gq> {
    b_by_parity(p, big_n + 1)
}

#[test]
fn y_equals_yy_with_swapped_b_fails() {
    for big_n in 2..=5 {
        assert!(!check_y_equals_yy_with(big_n, 2, SEED, swapped).pass, "N={big_n}");
    }
}

#[test]
fn gf_lemma_small() {
    for n in 1..=3 {
        assert_pass(&check_gf_lemma(n, 3, SEED).unwrap());
    }
    assert!(check_gf_lemma(0, 1, SEED).is_err());
}

#[test]
fn gf_lemma_n1_even() {
    // A_TS(5) = t and Z⁻_1(1, 1) = t[q]
    assert_eq!(genfun(2).unwrap(), IntPoly::from_terms(&GENFUN_VARS, [(vec![1, 0], Integer::from(1))]));
    let mut s = Sampler::new(SEED);
    for _ in 0..5 {
        let p = sample_sv_params(&mut s);
        let z = partition_enum(&p, &alpha_minus(1), &[Gq::from(1), Gq::from(1)]).unwrap();
        assert_eq!(z, p.t.mul_ref(&bracket(&p.q).unwrap()));
    }
}

#[test]
fn generating_function_from_partition_function() {
    for big_n in 0..=7 {
        assert_eq!(genfun_from_partition(big_n).unwrap(), genfun(big_n).unwrap(), "N={big_n}");
    }
}

#[test]
fn main_theorem_up_to_eight() {
    for big_n in 0..=8 {
        assert_pass(&check_main_theorem(big_n).unwrap());
    }
}

#[test]
fn main_theorem_n4_by_hand() {
    // x + (1+x+x²)(1+τ)²
    let s4 = xt(&[
        (1, 0, 1),
        (0, 0, 1), (1, 0, 1), (2, 0, 1),
        (0, 1, 2), (1, 1, 2), (2, 1, 2),
        (0, 2, 1), (1, 2, 1), (2, 2, 1),
    ]);
    assert_eq!(contour::sum_components(4), s4);
    // (1+x(x−τ))τ + (1+x)²(1+τ+τ²)
    let quad = xt(&[(0, 0, 1), (2, 0, 1), (1, 1, -1)]);
    let sq = xt(&[(0, 0, 1), (1, 0, 2), (2, 0, 1)]);
    let rhs = quad.mul_ref(&xt(&[(0, 1, 1)])) + sq.mul_ref(&xt(&[(0, 0, 1), (0, 1, 1), (0, 2, 1)]));
    assert_eq!(s4, rhs);
    assert_eq!(main_theorem_rhs(4, &genfun(4).unwrap()).unwrap(), rhs);
    assert_eq!(contour::sum_components(2), xt(&[(0, 0, 1), (1, 0, 1)]));
}

#[test]
fn main_theorem_rejects_wrong_parity() {
    let bad = IntPoly::from_terms(&GENFUN_VARS, [(vec![1, 0], Integer::from(1))]);
    assert!(matches!(main_theorem_rhs(4, &bad), Err(xtl::Error::Internal(_))));
    // a perturbed coefficient breaks the identity
    let a = genfun(5).unwrap() + IntPoly::from_terms(&GENFUN_VARS, [(vec![2, 1], Integer::from(1))]);
    assert_ne!(main_theorem_rhs(5, &a).unwrap(), contour::sum_components(5));
}

#[test]
fn corollaries_up_to_six() {
    for big_n in 0..=6 {
        assert_pass(&check_corollaries(big_n).unwrap());
    }
}

#[test]
fn corollary_values() {
    let s5 = contour::sum_components(5);
    let at: Integer = s5.eval_at::<xtl::Rational>(&[("x", xtl::Rational::one()), ("tau", xtl::Rational::one())]).unwrap().to_integer();
    assert_eq!(at, Integer::from(46));
    assert_eq!(contour::tsasm_count_integral(5), Integer::from(13));
}

#[test]
fn suite_runner() {
    let reports = run_suite(Suite::Main, 4, 1, SEED).unwrap();
    assert_eq!(reports.len(), 5);
    reports.iter().for_each(assert_pass);
    let reports = run_suite(Suite::YEqualsYY, 3, 1, SEED).unwrap();
    assert_eq!(reports.iter().map(|r| r.big_n).collect::<Vec<_>>(), vec![Some(0), Some(1), Some(2), Some(3)]);
    assert_eq!(reports, run_suite(Suite::YEqualsYY, 3, 1, SEED).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn y_equals_yy_any_seed(big_n in 0usize..5, seed in any::<u64>()) {
        let r = check_y_equals_yy(big_n, 1, seed);
        prop_assert!(r.pass, "{}", r.to_json());
    }

    #[test]
    fn gf_lemma_any_seed(n in 1usize..3, seed in any::<u64>()) {
        let r = check_gf_lemma(n, 1, seed).unwrap();
        prop_assert!(r.pass, "{}", r.to_json());
    }
}
