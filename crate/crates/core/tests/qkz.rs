use xtl::arith::Sampler;
use xtl::contour::psi_components;
use xtl::qkz::checks::*;
use xtl::qkz::{gen_sum_z, psi_vector, psi_vector_robust, sample_params, sample_sites, QkzParams};
use xtl::{bracket, Gq, Report};

const SEED: u64 = 42;

fn assert_pass(r: &Report) {
    assert!(r.pass, "{}", r.to_json());
    assert!(r.trials > 0, "{}", r.to_json());
}

#[test]
fn psi_two_sites_matches_closed_form() {
    let mut s = Sampler::new(SEED);
    for _ in 0..10 {
        let p = sample_params(&mut s);
        let z = sample_sites(&mut s, &p, 2);
        let v = psi_vector(&p, &z).unwrap();
        assert_eq!(v.get_tuple(&[1]), bracket(&(p.beta.clone() * z[0].clone())).unwrap());
        assert_eq!(
            v.get_tuple(&[2]),
            -bracket(&(p.q.clone() * p.beta.clone() * z[1].clone())).unwrap()
        );
    }
}

#[test]
fn psi_one_site_is_up() {
    let p = QkzParams::new(Gq::from(2), Gq::from(3)).unwrap();
    let v = psi_vector(&p, &[Gq::from(5)]).unwrap();
    assert_eq!(v.len(), 1);
    assert_eq!(v.get(0), Gq::from(1));
}

#[test]
fn homogeneous_limit_matches_contour_table() {
    // (ψ_N)_a = (−1)^{n'(n'−1)/2} [β]^{−n} [q]^{−n(n−1)−n'(n'−1)} (Ψ_N)_a(1, …, 1)
    let mut s = Sampler::new(SEED + 1);
    for big_n in 2..=5 {
        let table = psi_components(big_n);
        let p = sample_params(&mut s);
        let (x, tau) = p.x_tau().unwrap();
        let v = psi_vector_robust(&p, &vec![Gq::from(1); big_n]).unwrap();
        for (a, poly) in &table.entries {
            let lhs = relation_sz_rhs(&p, big_n, &v.get_tuple(a)).unwrap();
            let rhs = poly.eval_at(&[("x", x.clone()), ("tau", tau.clone())]).unwrap();
            assert_eq!(lhs, rhs, "N={big_n} a={a:?}");
        }
    }
}

#[test]
fn exchange_and_reflection() {
    for big_n in 2..=6 {
        assert_pass(&check_exchange_and_reflection(big_n, 20, SEED));
    }
}

#[test]
fn exchange_negative_control() {
    let mut s = Sampler::new(SEED);
    let p = sample_params(&mut s);
    let z = sample_sites(&mut s, &p, 4);
    let (lhs, rhs) = exchange_sides(&p, &z, 2).unwrap();
    assert_eq!(lhs, rhs);
    assert_ne!(perturb(&lhs), rhs);
}

#[test]
fn psi_reduction() {
    for big_n in 2..=5 {
        assert_pass(&check_psi_reduction(big_n, 4, SEED));
    }
}

#[test]
fn laurent_property() {
    for big_n in 2..=5 {
        assert_pass(&check_laurent_psi(big_n, 4, SEED));
    }
}

#[test]
fn operator_identities() {
    for r in check_operator_identities(20, SEED) {
        assert_pass(&r);
    }
}

#[test]
fn z_properties() {
    for big_n in 2..=5 {
        for r in check_z_properties(big_n, 3, SEED) {
            assert_pass(&r);
        }
    }
}

#[test]
fn relation_sz() {
    for big_n in 0..=5 {
        assert_pass(&check_relation_sz(big_n, 2, SEED));
    }
}

#[test]
fn uniqueness_inputs() {
    for big_n in 2..=4 {
        assert_pass(&check_uniqueness_inputs(big_n, 2, SEED));
    }
}

#[test]
fn z_odd_extra_zero() {
    let p = QkzParams::new(Gq::from_ints(5, 3, 1, 2), Gq::from_ints(1, 3, 2, 1)).unwrap();
    assert_eq!(gen_sum_z(&p, 3, &[p.qp(-1)]).unwrap(), Gq::from(0));
    assert_eq!(gen_sum_z(&p, 2, &[p.s.clone()]).unwrap(), Gq::from(0));
}
