use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use xtl::spin::{mask_of_tuple, SpinVector};
use xtl::spinchain::*;
use xtl::IntPoly;

fn r(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

type Dense = Vec<Vec<BigRational>>;

fn kron(a: &Dense, b: &Dense) -> Dense {
    let (n, m) = (a.len(), b.len());
    let mut out = vec![vec![BigRational::zero(); n * m]; n * m];
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                for l in 0..m {
                    out[i * m + k][j * m + l] = &a[i][j] * &b[k][l];
                }
            }
        }
    }
    out
}

fn add(a: &Dense, b: &Dense, c: &BigRational) -> Dense {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + c * y).collect())
        .collect()
}

fn ident(k: usize) -> Dense {
    (0..k).map(|i| (0..k).map(|j| if i == j { r(1, 1) } else { r(0, 1) }).collect()).collect()
}

/// `σ^a_i σ^b_j` as a dense matrix; `σ^x σ^x + σ^y σ^y` is real so `y` is never needed alone.
fn on_sites(n: usize, ops: &[(usize, &Dense)]) -> Dense {
    let mut m = vec![vec![r(1, 1)]];
    for site in 1..=n {
        let f = ops.iter().find(|(s, _)| *s == site).map(|(_, o)| (*o).clone()).unwrap_or_else(|| ident(2));
        m = kron(&m, &f);
    }
    m
}

// dense oracle from Pauli matrices, with σ^xσ^x + σ^yσ^y = 2(σ^+σ^- + σ^-σ^+)
fn dense_h(n: usize, x: &BigRational) -> Dense {
    let sz: Dense = vec![vec![r(1, 1), r(0, 1)], vec![r(0, 1), r(-1, 1)]];
    let sp: Dense = vec![vec![r(0, 1), r(1, 1)], vec![r(0, 1), r(0, 1)]];
    let sm: Dense = vec![vec![r(0, 1), r(0, 1)], vec![r(1, 1), r(0, 1)]];
    let k = 1 << n;
    let mut h = vec![vec![r(0, 1); k]; k];
    for i in 1..n {
        h = add(&h, &on_sites(n, &[(i, &sp), (i + 1, &sm)]), &r(-1, 1));
        h = add(&h, &on_sites(n, &[(i, &sm), (i + 1, &sp)]), &r(-1, 1));
        h = add(&h, &on_sites(n, &[(i, &sz), (i + 1, &sz)]), &r(1, 4));
    }
    let p = (r(1, 2) - x) / r(2, 1);
    let pp = (r(1, 2) - r(1, 1) / x) / r(2, 1);
    h = add(&h, &on_sites(n, &[(1, &sz)]), &p);
    add(&h, &on_sites(n, &[(n, &sz)]), &pp)
}

fn assert_matches_dense(n: usize, x: &BigRational) {
    let sparse = build_hamiltonian(n, x).unwrap();
    let dense = dense_h(n, x);
    for (i, row) in dense.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            assert_eq!(&sparse.get(i as u64, j as u64), v, "N={n} x={x} ({i},{j})");
        }
    }
}

#[test]
fn two_sites_at_x_one() {
    let h = build_hamiltonian(2, &r(1, 1)).unwrap();
    assert_eq!(h.get(0b01, 0b10), r(-1, 1));
    assert_eq!(h.get(0b10, 0b01), r(-1, 1));
    // p = p' = −1/4
    assert_eq!(h.get(0b00, 0b00), r(1, 4) - r(1, 2));
    assert_eq!(h.get(0b11, 0b11), r(1, 4) + r(1, 2));
    assert_eq!(h.get(0b01, 0b01), r(-1, 4));
    assert_eq!(h.entries.len(), 6);
    assert_matches_dense(2, &r(1, 1));
}

#[test]
fn sparse_matches_dense_oracle() {
    for n in 1..=5 {
        for x in [r(1, 1), r(2, 1), r(-3, 7)] {
            assert_matches_dense(n, &x);
        }
    }
}

#[test]
fn symmetric_and_conserves_magnetisation() {
    for n in 1..=8 {
        let h = build_hamiltonian(n, &r(3, 7)).unwrap();
        assert!(h.is_symmetric());
        assert!(h.conserves_magnetisation());
    }
}

#[test]
fn zero_x_is_rejected() {
    assert!(build_hamiltonian(3, &r(0, 1)).is_err());
    assert!(verify_eigenpair(3, &r(0, 1)).is_err());
    assert!(eigenvalue_e(3, &r(0, 1)).is_err());
}

#[test]
fn symbolic_hamiltonian_specialises() {
    let h4 = Hamiltonian::symbolic_times_four(4).unwrap().to_sparse().unwrap();
    let x = r(5, 3);
    let h = build_hamiltonian(4, &x).unwrap();
    for (&(row, col), v) in &h4.entries {
        let at: BigRational = v.eval_at(&[("x", x.clone())]).unwrap();
        assert_eq!(at / r(4, 1), h.get(row, col));
    }
    let nonzero = h.entries.values().filter(|v| !v.is_zero()).count();
    assert_eq!(h4.entries.values().filter(|v: &&IntPoly| !v.is_empty()).count(), nonzero);
}

#[test]
fn eigenpairs_exact() {
    for x in [r(1, 1), r(2, 1), r(1, 3), r(7, 5)] {
        for n in 1..=10 {
            let rep = verify_eigenpair(n, &x).unwrap();
            assert!(rep.pass(), "{}", rep.to_json());
        }
    }
}

#[test]
fn normalisation_n4() {
    let psi = psi_vector_at(4, &r(1, 1));
    assert_eq!(psi.get(mask_of_tuple(4, &[1, 2])), r(1, 1));
    // only two-down words occur
    assert!(psi.iter().all(|(m, _)| m.count_ones() == 2));
}

#[test]
fn sector_restricted_apply_matches_matrix() {
    let x = r(3, 7);
    for n in [6, 9] {
        let psi = psi_vector_at(n, &x);
        let h = Hamiltonian::at(n, &x).unwrap();
        assert_eq!(h.apply(&psi), build_hamiltonian(n, &x).unwrap().apply(&psi));
    }
}

#[test]
fn perturbed_component_fails() {
    let x = r(2, 1);
    let mut psi = psi_vector_at(6, &x);
    psi.add(mask_of_tuple(6, &[2, 5, 6]), BigRational::one());
    let rep = verify_vector(6, &x, &psi).unwrap();
    assert!(!rep.residual_zero);
    assert!(!rep.pass());
    // wrong sector
    let mut psi = psi_vector_at(5, &x);
    psi.add(mask_of_tuple(5, &[1]), r(1, 2));
    assert!(!verify_vector(5, &x, &psi).unwrap().magnetization_ok);
    let zero: SpinVector<BigRational> = SpinVector::zero(4);
    assert!(!verify_vector(4, &x, &zero).unwrap().pass());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn eigenpair_random_rational_x(n in 1usize..8, a in -9i64..10, b in 1i64..10) {
        prop_assume!(a != 0);
        let rep = verify_eigenpair(n, &r(a, b)).unwrap();
        prop_assert!(rep.pass(), "{}", rep.to_json());
    }

    #[test]
    fn hamiltonian_structure(n in 1usize..9, a in -9i64..10, b in 1i64..10) {
        prop_assume!(a != 0);
        let h = build_hamiltonian(n, &r(a, b)).unwrap();
        prop_assert!(h.is_symmetric());
        prop_assert!(h.conserves_magnetisation());
    }
}
