use num_bigint::BigInt;
use num_rational::BigRational;
use xtl::contour::{
    has_nonnegative_coefficients, psi_components, psi_components_at, sum_components,
    sum_components_at, tsasm_count_integral,
};
use xtl::{IntPoly, Ring};

fn x() -> IntPoly {
    IntPoly::var("x")
}
fn t() -> IntPoly {
    IntPoly::var("tau")
}
fn c(k: i64) -> IntPoly {
    IntPoly::from_i64(k)
}

#[test]
fn sums_of_components_small() {
    let s4 = x() + (c(1) + x() + x() * x()) * (c(1) + t()).pow(2);
    assert_eq!(sum_components(4), s4);
    let s5 = x() * (c(1) + t()).pow(2) * (c(2) + c(2) * t() + t() * t())
        + (c(1) + x() * x())
            * (c(1) + c(4) * t() + c(4) * t().pow(2) + c(3) * t().pow(3) + t().pow(4));
    assert_eq!(sum_components(5), s5);
}

#[test]
fn psi4_table() {
    let p = psi_components(4);
    assert_eq!(p.entries.len(), 6);
    assert_eq!(p.get(&[1, 2]).unwrap(), &t());
    assert_eq!(p.get(&[1, 3]).unwrap(), &(c(1) + x() * t() + t() * t()));
    assert_eq!(p.get(&[1, 4]).unwrap(), &(x() * (c(1) + t() * t())));
    assert_eq!(p.get(&[2, 3]).unwrap(), &(x() + t() + x() * x() * t()));
    assert_eq!(p.get(&[2, 4]).unwrap(), &(x() * (x() + t() + x() * t() * t())));
    assert_eq!(p.get(&[3, 4]).unwrap(), &(x() * x() * t()));
}

#[test]
fn first_component_is_a_power_of_tau() {
    for big_n in 1..=8 {
        let p = psi_components(big_n);
        let first: Vec<usize> = (1..=p.shape.n).collect();
        let k = p.shape.n_prime * (p.shape.n_prime - 1) / 2;
        assert_eq!(p.get(&first).unwrap(), &t().pow(k as u32), "N={big_n}");
    }
}

#[test]
fn sum_of_table_matches_sum_integral() {
    for big_n in 0..=8 {
        let table = psi_components(big_n);
        let s = sum_components(big_n);
        assert_eq!(table.sum(), s, "N={big_n}");
        assert!(has_nonnegative_coefficients(&s));
        assert!(table.entries.values().all(has_nonnegative_coefficients));
    }
}

#[test]
fn counting_integral() {
    let got: Vec<BigInt> = (0..=6).map(tsasm_count_integral).collect();
    assert_eq!(got, [1, 1, 1, 2, 4, 13, 46].map(BigInt::from));
}

#[test]
fn count_is_sum_at_x0_tau1() {
    let zero = BigRational::from_integer(0.into());
    let one = BigRational::from_integer(1.into());
    for big_n in 0..=7 {
        assert_eq!(
            sum_components_at(big_n, &zero, &one),
            BigRational::from_integer(tsasm_count_integral(big_n)),
            "N={big_n}"
        );
    }
}

#[test]
fn rational_components_at_tau_one_start_with_one() {
    let one = BigRational::from_integer(1.into());
    let x0 = BigRational::new(1.into(), 3.into());
    for big_n in 1..=9 {
        let v = psi_components_at(big_n, &x0, &one);
        assert_eq!(v.values().next().unwrap(), &one);
    }
}
