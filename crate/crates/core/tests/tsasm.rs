use std::collections::HashSet;

use proptest::prelude::*;
use xtl::sixvertex::{alpha_minus, alpha_plus, enumerate_configs, SixVertexConfig, TriangularGrid};
use xtl::spin::Spin;
use xtl::tsasm::*;
use xtl::{ChainShape, IntPoly};

fn example_a() -> Vec<Vec<i8>> {
    vec![
        vec![0, 0, 0, 1, 0, 0, 0],
        vec![0, 1, 0, -1, 0, 1, 0],
        vec![0, 0, 0, 1, 0, 0, 0],
        vec![1, -1, 1, -1, 1, -1, 1],
        vec![0, 0, 0, 1, 0, 0, 0],
        vec![0, 1, 0, -1, 0, 1, 0],
        vec![0, 0, 0, 1, 0, 0, 0],
    ]
}

fn example_b() -> Vec<Vec<i8>> {
    vec![
        vec![0, 0, 0, 1, 0, 0, 0],
        vec![0, 0, 1, -1, 1, 0, 0],
        vec![0, 1, -1, 1, -1, 1, 0],
        vec![1, -1, 1, -1, 1, -1, 1],
        vec![0, 1, -1, 1, -1, 1, 0],
        vec![0, 0, 1, -1, 1, 0, 0],
        vec![0, 0, 0, 1, 0, 0, 0],
    ]
}

fn poly(terms: &[(i32, i32, i64)]) -> IntPoly {
    IntPoly::from_terms(&GENFUN_VARS, terms.iter().map(|&(a, b, c)| (vec![a, b], c.into())))
}

// arrays as drawn: rows from top, each row left to right
fn drawn(rows: &[[i8; 10]]) -> HashSet<Vec<Vec<i8>>> {
    rows.iter()
        .map(|flat| {
            let mut out = Vec::new();
            let mut k = 0;
            for len in 1..=4 {
                out.push(flat[k..k + len].to_vec());
                k += len;
            }
            out
        })
        .collect()
}

fn enumerated(big_n: usize) -> HashSet<Vec<Vec<i8>>> {
    enumerate_triangles(big_n).unwrap().into_iter().map(|t| t.rows).collect()
}

#[test]
fn order_seven_examples() {
    assert!(is_tsasm(&example_a()).unwrap());
    assert!(is_tsasm(&example_b()).unwrap());
    let all: HashSet<_> = enumerate_tsasm(3).unwrap().into_iter().map(|m| m.rows().to_vec()).collect();
    assert_eq!(all, [example_a(), example_b()].into_iter().collect());
}

#[test]
fn trivial_validation() {
    assert!(is_tsasm(&[vec![1]]).unwrap());
    assert!(!is_tsasm(&[vec![0, 1], vec![1, 0]]).unwrap());
    assert!(!is_tsasm(&[vec![1, 0], vec![0, 1]]).unwrap());
    assert!(is_tsasm(&[vec![1, 0, 0], vec![0, 1]]).is_err());
    // an ASM that is not symmetric
    let m = vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]];
    assert!(is_asm(&m).unwrap());
    assert!(!is_tsasm(&m).unwrap());
}

#[test]
fn diamond_examples() {
    assert_eq!(diamond_tsasm(3).rows(), example_b().as_slice());
    assert_eq!(diamond_tsasm(0).rows(), &[vec![1]]);
    let t = diamond_tsasm(4).triangle();
    assert_eq!((t.mu(), t.nu()), (2, 2));
    for big_n in 0..=10 {
        let s = ChainShape::new(big_n);
        let d = diamond_tsasm(big_n);
        assert!(is_tsasm(d.rows()).unwrap());
        assert_eq!((d.triangle().mu(), d.triangle().nu()), (s.n, s.n * s.n_prime.saturating_sub(1)));
    }
}

#[test]
fn order_nine_arrays_match_known_list() {
    let known = drawn(&[
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
        [0, 1, 0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, -1, 1, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 1, -1, 1, 0],
    ]);
    assert_eq!(known.len(), 4);
    assert_eq!(enumerated(4), known);
}

#[test]
fn order_eleven_arrays_match_known_list() {
    let known = drawn(&[
        [0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0, 0, -1, 1],
        [1, 0, 0, 1, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 1, -1, 1, 0, 0, 0, 0],
        [0, 1, 0, 1, 0, 0, 0, 0, -1, 1],
        [0, -1, 1, 1, 0, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, -1, 1, 0, 0],
        [0, 1, 0, 0, -1, 1, -1, 1, 0, 0],
        [0, 1, 0, 0, 0, 0, -1, 1, -1, 1],
        [0, 0, 0, 1, 0, 0, -1, 0, 0, 1],
        [0, -1, 1, 0, 0, 0, -1, 1, 0, 0],
        [0, 0, 0, -1, 0, 1, -1, 1, 0, 0],
        [0, 0, 0, -1, 1, 0, -1, 1, -1, 1],
    ]);
    assert_eq!(known.len(), 13);
    assert_eq!(enumerated(5), known);
}

fn config_from_codes(alpha: Vec<Spin>, table: &[[u8; 4]; 4]) -> SixVertexConfig {
    let grid = TriangularGrid::new(2);
    let mut edges = vec![(Spin::Down, Spin::Down); grid.vertex_count()];
    for i in 1..=4 {
        for j in i..=4 {
            edges[grid.index(i, j)] = match table[i - 1][j - 1] {
                1 => (Spin::Up, Spin::Up),
                2 => (Spin::Down, Spin::Down),
                3 => (Spin::Up, Spin::Down),
                _ => (Spin::Down, Spin::Up),
            };
        }
    }
    SixVertexConfig { grid, alpha, edges }
}

#[test]
fn drawn_configurations_map_to_drawn_arrays() {
    // first configuration of each drawn list and the first array of the matching list
    let c = config_from_codes(alpha_minus(2), &[[4, 1, 2, 3], [0, 3, 3, 3], [0, 0, 3, 3], [0, 0, 0, 3]]);
    assert!(c.is_valid());
    assert_eq!(triangle_from_sixvertex(&c).unwrap().rows, vec![vec![0], vec![0, 0], vec![0, 0, 0], vec![0, 0, 1, 0]]);
    let c = config_from_codes(alpha_plus(2), &[[3, 2, 3, 2], [0, 4, 1, 2], [0, 0, 3, 3], [0, 0, 0, 3]]);
    assert!(c.is_valid());
    assert_eq!(triangle_from_sixvertex(&c).unwrap().rows, vec![vec![0], vec![0, 0], vec![0, 0, 1], vec![0, 0, 0, 0]]);
}

#[test]
fn counts() {
    let expect = [1, 1, 1, 2, 4, 13, 46];
    for (big_n, &c) in expect.iter().enumerate() {
        assert_eq!(enumerate_tsasm(big_n).unwrap().len(), c, "N={big_n}");
        assert_eq!(count_tsasm(big_n).unwrap(), c);
    }
}

#[test]
fn outputs_are_distinct_tsasms() {
    for big_n in 0..=7 {
        let all = enumerate_tsasm(big_n).unwrap();
        let set: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        assert!(all.iter().all(|m| is_tsasm(m.rows()).unwrap() && m.order() == 2 * big_n + 1));
    }
}

#[test]
fn generating_functions() {
    assert_eq!(genfun(0).unwrap(), poly(&[(0, 0, 1)]));
    assert_eq!(genfun(1).unwrap(), poly(&[(0, 0, 1)]));
    assert_eq!(genfun(2).unwrap(), poly(&[(1, 0, 1)]));
    assert_eq!(genfun(3).unwrap(), poly(&[(1, 0, 1), (1, 1, 1)]));
    assert_eq!(genfun(4).unwrap(), poly(&[(0, 1, 1), (2, 0, 1), (2, 1, 1), (2, 2, 1)]));
    assert_eq!(
        genfun(5).unwrap(),
        poly(&[(0, 1, 1), (0, 3, 1), (2, 0, 1), (2, 1, 3), (2, 2, 4), (2, 3, 2), (2, 4, 1)])
    );
}

#[test]
fn six_vertex_round_trip() {
    for big_n in 2..=7 {
        let shape = ChainShape::new(big_n);
        let alpha = if shape.is_odd() { alpha_plus(shape.n) } else { alpha_minus(shape.n) };
        for c in enumerate_configs(&alpha).unwrap() {
            let t = triangle_from_sixvertex(&c).unwrap();
            assert_eq!(t.to_sixvertex().unwrap(), c);
            let m = t.to_matrix().unwrap();
            assert_eq!(m.triangle(), t);
        }
    }
}

#[test]
fn wrong_boundary_word_is_rejected() {
    let alpha = vec![Spin::Up, Spin::Up, Spin::Down, Spin::Down];
    for c in enumerate_configs(&alpha).unwrap() {
        assert!(from_sixvertex(&c).is_err());
    }
}

#[test]
fn invariants_up_to_n6() {
    for big_n in 0..=6 {
        for r in check_invariants(big_n).unwrap() {
            assert!(r.pass && r.trials > 0, "{}", r.to_json());
        }
    }
}

#[test]
fn t_zero_vanishes_for_orders_5_7_mod_8() {
    for big_n in [2, 3, 6] {
        let r = check_invariants(big_n).unwrap();
        assert!(r.iter().any(|r| r.property == "tsasm_t_zero_vanishes" && r.pass));
    }
}

#[test]
fn triangular_array_json() {
    let t = diamond_tsasm(4).triangle();
    assert_eq!(t.to_json(), "[[0],[0,0],[1,0,0],[1,-1,1,0]]");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // every triangular shape filled at random either fails cleanly or reconstructs a TSASM with the same array
    #[test]
    fn random_arrays_reconstruct_or_fail(big_n in 2usize..8, seed in any::<u64>()) {
        let shape = ChainShape::new(big_n);
        let mut x = seed;
        let rows: Vec<Vec<i8>> = (0..2 * shape.n)
            .map(|k| (0..=k).map(|_| { x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); ((x >> 33) % 3) as i8 - 1 }).collect())
            .collect();
        let t = TriangularArray::new(shape, rows).unwrap();
        if let Ok(c) = t.to_sixvertex() {
            let m = t.to_matrix().unwrap();
            prop_assert!(is_tsasm(m.rows()).unwrap());
            prop_assert_eq!(m.triangle(), t.clone());
            prop_assert_eq!(triangle_from_sixvertex(&c).unwrap(), t);
        }
    }

    #[test]
    fn transpose_and_reflection_preserve_tsasm(big_n in 0usize..7, pick in any::<prop::sample::Index>()) {
        let all = enumerate_tsasm(big_n).unwrap();
        let m = all[pick.index(all.len())].rows().to_vec();
        let k = m.len();
        let tr: Vec<Vec<i8>> = (0..k).map(|i| (0..k).map(|j| m[j][i]).collect()).collect();
        let fl: Vec<Vec<i8>> = m.iter().rev().cloned().collect();
        prop_assert_eq!(&tr, &m);
        prop_assert_eq!(&fl, &m);
    }
}
