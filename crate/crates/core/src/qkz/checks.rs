//! Checkers for the relations satisfied by |Ψ_N⟩, Z_N and Y_N.
//!
//! Every checker draws exact random points from a seeded [`Sampler`], evaluates
//! both sides of a relation and records the comparison in a [`Report`].


use super::overlap::{chi_covector, half_specialise};
use super::psi::{psi_vector, psi_vector_robust, psi_width_bound};
use super::{
    chi, gen_sum_z, k_matrix, phi, r_check, rescaled_y, sample_params, sample_sites, zeta,
    QkzParams,
};
use crate::arith::{brace, bracket, interpolate, Field, Ring, Sampler};
use crate::contour::sum_components;
use crate::error::Result;
use crate::report::Report;
use crate::verify::{compare_ops, interpolate_in_first, run_trials, stream_id};
use crate::shape::ChainShape;
use crate::spin::{sigma_z, LocalOp, OpProduct, SpinVector};
use crate::Gq;

pub fn fmt_point<F: Field>(p: &QkzParams<F>, name: &str, z: &[F]) -> String {
    let vals: Vec<String> = z.iter().map(|v| v.to_string()).collect();
    format!("s={}, beta={}, {}=[{}]", p.s, p.beta, name, vals.join(", "))
}


// ---------------------------------------------------------------------------
// |Ψ_N⟩

/// `Ř_{i,i+1}(z_i z̄_{i+1})|Ψ_N(…z_i, z_{i+1}…)⟩` and `|Ψ_N(…z_{i+1}, z_i…)⟩`.
pub fn exchange_sides<F: Field>(
    p: &QkzParams<F>,
    z: &[F],
    i: usize,
) -> Result<(SpinVector<F>, SpinVector<F>)> {
    let r = r_check(p, &z[i - 1].checked_div(&z[i])?)?;
    let lhs = r.apply(&[i, i + 1], &psi_vector(p, z)?);
    let mut swapped = z.to_vec();
    swapped.swap(i - 1, i);
    Ok((lhs, psi_vector(p, &swapped)?))
}

/// `K_1(z̄_1)|Ψ_N(z_1, …)⟩` and `|Ψ_N(z̄_1, …)⟩`.
pub fn reflection_sides<F: Field>(
    p: &QkzParams<F>,
    z: &[F],
) -> Result<(SpinVector<F>, SpinVector<F>)> {
    let inv = F::one().checked_div(&z[0])?;
    let lhs = k_matrix(p, &inv)?.apply(&[1], &psi_vector(p, z)?);
    let mut flipped = z.to_vec();
    flipped[0] = inv;
    Ok((lhs, psi_vector(p, &flipped)?))
}

/// Exchange relations for every `i` and the left reflection relation.
pub fn check_exchange_and_reflection(big_n: usize, trials: usize, seed: u64) -> Report {
    let report = Report::new("exchange_and_reflection", Some(big_n));
    run_trials(report, trials, seed, stream_id("exch", big_n), |s, r| {
        let p = sample_params(s);
        let z = sample_sites(s, &p, big_n);
        for i in 1..big_n {
            let (lhs, rhs) = exchange_sides(&p, &z, i)?;
            r.check(|| format!("exchange i={i}, {}", fmt_point(&p, "z", &z)), &lhs, &rhs);
        }
        let (lhs, rhs) = reflection_sides(&p, &z)?;
        r.check(|| format!("reflection, {}", fmt_point(&p, "z", &z)), &lhs, &rhs);
        Ok(())
    })
}

/// Both sides of the reduction relation at `z_{i+1} = q̄ z_i`; the entry
/// `z[i]` (0-based) of the input is overwritten.
pub fn reduction_sides<F: Field>(
    p: &QkzParams<F>,
    z: &[F],
    i: usize,
) -> Result<(SpinVector<F>, SpinVector<F>)> {
    let big_n = z.len();
    let n = big_n / 2;
    let mut z = z.to_vec();
    z[i] = z[i - 1].checked_div(&p.q)?;
    let lhs = psi_vector_robust(p, &z)?;
    let zi = &z[i - 1];
    let q = &p.q;
    let q2 = q.mul_ref(q);
    let mut pre = bracket(&p.beta.mul_ref(zi))?;
    if (n + i + 1) % 2 == 1 {
        pre = -pre;
    }
    for zj in &z[..i - 1] {
        pre = pre
            * bracket(&q.mul_ref(&zi.checked_div(zj)?))?
            * bracket(&q.mul_ref(&zi.mul_ref(zj)))?;
    }
    for zj in &z[i + 1..] {
        pre = pre
            * bracket(&q2.mul_ref(&zj.checked_div(zi)?))?
            * bracket(&q.mul_ref(&zi.mul_ref(zj)))?;
    }
    let mut rest = z[..i - 1].to_vec();
    rest.extend_from_slice(&z[i + 1..]);
    let smaller = psi_vector_robust(p, &rest)?;
    let rhs = smaller.insert_pair(i, &zeta()).scale(&pre);
    Ok((lhs, rhs))
}

pub fn check_psi_reduction(big_n: usize, trials: usize, seed: u64) -> Report {
    let report = Report::new("psi_reduction", Some(big_n));
    run_trials(report, trials, seed, stream_id("red", big_n), |s, r| {
        let p = sample_params(s);
        let z = sample_sites(s, &p, big_n);
        for i in 1..big_n {
            let (lhs, rhs) = reduction_sides(&p, &z, i)?;
            r.check(|| format!("i={i}, {}", fmt_point(&p, "z", &z)), &lhs, &rhs);
        }
        Ok(())
    })
}

/// Each component of `|Ψ_N⟩`, as a function of one `z_k`, is a centred
/// Laurent polynomial of width at most `4(n'−1)` (`k ∉ a`) or `2(2n−1)`
/// (`k ∈ a`).
pub fn check_laurent_psi(big_n: usize, trials: usize, seed: u64) -> Report {
    let report = Report::new("laurent_psi", Some(big_n));
    let shape = ChainShape::new(big_n);
    let outside = 4 * (shape.n_prime as i64 - 1);
    let inside = 2 * (2 * shape.n as i64 - 1);
    run_trials(report, trials, seed, stream_id("laurent", big_n), |s, r| {
        let p = sample_params(s);
        let z = sample_sites(s, &p, big_n);
        let k = s.index(big_n);
        // interpolate on a range wider than the bound so violations show up
        let reach = psi_width_bound(shape) / 2 + 2;
        let mut samples: Vec<(Gq, SpinVector<Gq>)> = Vec::new();
        let mut lambda = 2i64;
        while samples.len() < (2 * reach + 4) as usize {
            let l = Gq::from(lambda);
            lambda += 1;
            let mut pt = z.clone();
            pt[k] = l.clone();
            if let Ok(v) = psi_vector(&p, &pt) {
                samples.push((l, v));
            }
        }
        for (mask, _) in samples[0].1.iter() {
            let a = crate::spin::tuple_of_mask(big_n, mask);
            let series: Vec<(Gq, Gq)> =
                samples.iter().map(|(l, v)| (l.clone(), v.get(mask))).collect();
            let fit = interpolate(-reach, reach, 1, &series)?;
            let bound = if a.contains(&(k + 1)) { inside } else { outside };
            let ok = fit.is_centred() && fit.degree_width().map_or(true, |w| w <= bound);
            r.check(
                || format!("z{} in component {:?}, {}", k + 1, a, fmt_point(&p, "z", &z)),
                &ok,
                &true,
            );
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Ř, K and ⟨χ|

fn ratio<F: Field>(a: &F, b: &F) -> Result<F> {
    a.checked_div(b)
}

/// `Ř23(z1 z̄2) Ř12(z1 z̄3) Ř23(z2 z̄3)` and `Ř12(z2 z̄3) Ř23(z1 z̄3) Ř12(z1 z̄2)`.
pub fn braid_sides<F: Field>(p: &QkzParams<F>, z: &[F]) -> Result<(OpProduct<F>, OpProduct<F>)> {
    let (z1, z2, z3) = (&z[0], &z[1], &z[2]);
    let lhs = OpProduct::new()
        .then(r_check(p, &ratio(z1, z2)?)?, &[2, 3])
        .then(r_check(p, &ratio(z1, z3)?)?, &[1, 2])
        .then(r_check(p, &ratio(z2, z3)?)?, &[2, 3]);
    let rhs = OpProduct::new()
        .then(r_check(p, &ratio(z2, z3)?)?, &[1, 2])
        .then(r_check(p, &ratio(z1, z3)?)?, &[2, 3])
        .then(r_check(p, &ratio(z1, z2)?)?, &[1, 2]);
    Ok((lhs, rhs))
}

/// The boundary Yang–Baxter equation for `Ř` and `K`.
pub fn boundary_sides<F: Field>(
    p: &QkzParams<F>,
    z: &[F],
) -> Result<(OpProduct<F>, OpProduct<F>)> {
    let (z1, z2) = (&z[0], &z[1]);
    let lhs = OpProduct::new()
        .then(r_check(p, &ratio(z1, z2)?)?, &[1, 2])
        .then(k_matrix(p, z1)?, &[1])
        .then(r_check(p, &z1.mul_ref(z2))?, &[1, 2])
        .then(k_matrix(p, z2)?, &[1]);
    let rhs = OpProduct::new()
        .then(k_matrix(p, z2)?, &[1])
        .then(r_check(p, &z1.mul_ref(z2))?, &[1, 2])
        .then(k_matrix(p, z1)?, &[1])
        .then(r_check(p, &ratio(z1, z2)?)?, &[1, 2]);
    Ok((lhs, rhs))
}

/// `⟨χ(w)|⊗⟨χ(z)| Ř23(zw) Ř12(z w̄)` and `⟨χ(z)|⊗⟨χ(w)| Ř23(zw) Ř34(z w̄)`.
pub fn chi_exchange_sides<F: Field>(
    p: &QkzParams<F>,
    z: &F,
    w: &F,
) -> Result<(SpinVector<F>, SpinVector<F>)> {
    let zw = z.mul_ref(w);
    let zwb = z.checked_div(w)?;
    let lhs = OpProduct::new()
        .then(r_check(p, &zw)?, &[2, 3])
        .then(r_check(p, &zwb)?, &[1, 2])
        .apply_left(&chi(p, w)?.tensor(&chi(p, z)?));
    let rhs = OpProduct::new()
        .then(r_check(p, &zw)?, &[2, 3])
        .then(r_check(p, &zwb)?, &[3, 4])
        .apply_left(&chi(p, z)?.tensor(&chi(p, w)?));
    Ok((lhs, rhs))
}

/// `⟨χ(z̄)| Ř(z²)` and `([q̄^{1/2} z̄]/[q̄^{1/2} z]) ⟨χ(z)|`.
pub fn chi_inversion_sides<F: Field>(
    p: &QkzParams<F>,
    z: &F,
) -> Result<(SpinVector<F>, SpinVector<F>)> {
    let zb = F::one().checked_div(z)?;
    let sb = p.sp(-1);
    let lhs = r_check(p, &z.mul_ref(z))?.apply_left(&[1, 2], &chi(p, &zb)?);
    let c = bracket(&sb.mul_ref(&zb))?.checked_div(&bracket(&sb.mul_ref(z))?)?;
    Ok((lhs, chi(p, z)?.scale(&c)))
}

/// `⟨χ(−z)|` and `−⟨χ(z)|(σ^z ⊗ σ^z)`.
pub fn chi_sign_sides<F: Field>(
    p: &QkzParams<F>,
    z: &F,
) -> Result<(SpinVector<F>, SpinVector<F>)> {
    let lhs = chi(p, &-z.clone())?;
    let zz = OpProduct::new().then(sigma_z(), &[1]).then(sigma_z(), &[2]);
    let rhs = zz.apply_left(&chi(p, z)?).scale(&-F::one());
    Ok((lhs, rhs))
}


/// Braid and boundary Yang–Baxter equations for `Ř`/`K`, and the `⟨χ|`
/// identities behind the symmetry, inversion and reflection of `Z_N`.
pub fn check_operator_identities(trials: usize, seed: u64) -> Vec<Report> {
    let mk = |name: &str, tag: &str, f: &(dyn Fn(&QkzParams<Gq>, &[Gq], &mut Report) -> Result<()> + Sync)| {
        run_trials(Report::new(name, None), trials, seed, stream_id(tag, 0), |s, r| {
            let p = sample_params(s);
            let z = sample_sites(s, &p, 3);
            f(&p, &z, r)
        })
    };
    vec![
        mk("braid_ybe", "braid", &|p, z, r| {
            let (l, rr) = braid_sides(p, z)?;
            compare_ops(r, "braid", || fmt_point(p, "z", z), 3, &l, &rr);
            Ok(())
        }),
        mk("boundary_ybe", "bybe", &|p, z, r| {
            let (l, rr) = boundary_sides(p, z)?;
            compare_ops(r, "boundary", || fmt_point(p, "z", z), 2, &l, &rr);
            Ok(())
        }),
        mk("chi_exchange", "chiex", &|p, z, r| {
            let (l, rr) = chi_exchange_sides(p, &z[0], &z[1])?;
            r.check(|| fmt_point(p, "z,w", &z[..2]), &l, &rr);
            Ok(())
        }),
        mk("chi_inversion", "chiinv", &|p, z, r| {
            let (l, rr) = chi_inversion_sides(p, &z[0])?;
            r.check(|| fmt_point(p, "z", &z[..1]), &l, &rr);
            Ok(())
        }),
        mk("chi_sign", "chisign", &|p, z, r| {
            let (l, rr) = chi_sign_sides(p, &z[0])?;
            r.check(|| fmt_point(p, "z", &z[..1]), &l, &rr);
            Ok(())
        }),
    ]
}

// ---------------------------------------------------------------------------
// Z_N and Y_N

/// Draws parameters and `n` generic w-values.
pub fn sample_w(s: &mut Sampler, big_n: usize) -> (QkzParams<Gq>, Vec<Gq>) {
    let p = sample_params(s);
    let w = sample_sites(s, &p, big_n / 2);
    (p, w)
}

fn odd_n(big_n: usize) -> bool {
    big_n % 2 == 1
}

/// `Y_N` at `w_i = i q^{1/2}` and the right-hand side of the first reduction.
pub fn y_reduction2_sides<F: Field>(
    p: &QkzParams<F>,
    big_n: usize,
    w: &[F],
    i: usize,
    imag: F,
) -> Result<(F, F)> {
    let mut pt = w.to_vec();
    pt[i] = imag.mul_ref(&p.s);
    let lhs = rescaled_y(p, big_n, &pt)?;
    let n = big_n / 2;
    let s3 = p.sp(3);
    let mut rhs = brace(&p.s.mul_ref(&p.beta))?;
    if n % 2 == 0 {
        rhs = -rhs;
    }
    if odd_n(big_n) {
        rhs = rhs * brace(&s3)?.checked_div(&brace(&p.s)?)?;
    }
    let mut rest = Vec::new();
    for (j, wj) in w.iter().enumerate() {
        if j == i {
            continue;
        }
        let a = brace(&s3.mul_ref(wj))?;
        let b = brace(&s3.checked_div(wj)?)?;
        rhs = rhs * a.mul_ref(&a) * b.mul_ref(&b);
        rest.push(wj.clone());
    }
    rhs = rhs * rescaled_y(p, big_n - 2, &rest)?;
    Ok((lhs, rhs))
}

/// `f_N(w)`.
pub fn f_n<F: Field>(p: &QkzParams<F>, big_n: usize, w: &F) -> Result<F> {
    let q = &p.q;
    let wb = F::one().checked_div(w)?;
    let q2 = q.mul_ref(q);
    let bq2 = bracket(&q2)?;
    let num = bq2.mul_ref(&bq2)
        * brace(&p.s.mul_ref(w))?
        * brace(&p.sp(3).mul_ref(&wb))?
        * bracket(&p.beta.mul_ref(w))?
        * bracket(&p.beta.mul_ref(q).mul_ref(&wb))?;
    let bs = brace(&p.s)?;
    let tail = if odd_n(big_n) {
        bracket(&q.mul_ref(w))? * bracket(&q2.mul_ref(&wb))?
    } else {
        bracket(w)? * bracket(&q.mul_ref(&wb))?
    };
    Ok(-(num.checked_div(&bs.mul_ref(&bs))? * tail))
}

/// `Y_N` at `w_j = q̄ w_i` and the right-hand side of the second reduction.
pub fn y_reduction4_sides<F: Field>(
    p: &QkzParams<F>,
    big_n: usize,
    w: &[F],
    i: usize,
    j: usize,
) -> Result<(F, F)> {
    let mut pt = w.to_vec();
    pt[j] = w[i].checked_div(&p.q)?;
    let lhs = rescaled_y(p, big_n, &pt)?;
    let wi = &w[i];
    let wib = F::one().checked_div(wi)?;
    let q = &p.q;
    let q2 = q.mul_ref(q);
    let mut prod = F::one();
    let mut rest = Vec::new();
    for (k, wk) in w.iter().enumerate() {
        if k == i || k == j {
            continue;
        }
        let wkb = F::one().checked_div(wk)?;
        prod = prod
            * bracket(&q.mul_ref(wi).mul_ref(wk))?
            * bracket(&q.mul_ref(wi).mul_ref(&wkb))?
            * bracket(&q2.mul_ref(wk).mul_ref(&wib))?
            * bracket(&q2.mul_ref(&wib).mul_ref(&wkb))?;
        rest.push(wk.clone());
    }
    let rhs = f_n(p, big_n, wi)? * prod.mul_ref(&prod) * rescaled_y(p, big_n - 4, &rest)?;
    Ok((lhs, rhs))
}

/// Interpolates `g(w_1)` at `λ = 2, 3, …` on `lo..=hi` (step 1), with a margin
/// so that exceeding the claimed range is detected.

/// All per-property checks of `Z_N` and `Y_N` at `N`.
pub fn check_z_properties(big_n: usize, trials: usize, seed: u64) -> Vec<Report> {
    let n = big_n / 2;
    let mut out = Vec::new();
    // no variables: every property is vacuous
    if n == 0 {
        return out;
    }
    let run = |name: &str, body: &(dyn Fn(&QkzParams<Gq>, &[Gq], &mut Report) -> Result<()> + Sync)| {
        run_trials(
            Report::new(name, Some(big_n)),
            trials,
            seed,
            stream_id(name, big_n),
            |s, r| {
                let (p, w) = sample_w(s, big_n);
                body(&p, &w, r)
            },
        )
    };
    let z = |p: &QkzParams<Gq>, w: &[Gq]| gen_sum_z(p, big_n, w);

    // symmetry is vacuous with a single variable
    if n >= 2 {
        out.push(run("Z_symmetry", &|p, w, r| {
            let base = z(p, w)?;
            for i in 0..n - 1 {
                let mut sw = w.to_vec();
                sw.swap(i, i + 1);
                r.check(|| format!("swap {i}, {}", fmt_point(p, "w", w)), &z(p, &sw)?, &base);
            }
            Ok(())
        }));
    }
    out.push(run("Z_reflection", &|p, w, r| {
        let base = z(p, w)?;
        for i in 0..n {
            let mut m = w.to_vec();
            m[i] = -m[i].clone();
            r.check(|| format!("i={i}, {}", fmt_point(p, "w", w)), &z(p, &m)?, &-base.clone());
        }
        Ok(())
    }));
    out.push(run("Z_inversion", &|p, w, r| {
        let base = z(p, w)?;
        let sb = p.sp(-1);
        for i in 0..n {
            let mut m = w.to_vec();
            m[i] = Gq::from(1) / m[i].clone();
            let lhs = bracket(&sb.mul_ref(&w[i]))? * z(p, &m)?;
            let rhs = bracket(&sb.mul_ref(&m[i]))? * base.clone();
            r.check(|| format!("i={i}, {}", fmt_point(p, "w", w)), &lhs, &rhs);
        }
        Ok(())
    }));
    out.push(run("Z_special_zeros", &|p, w, r| {
        let mut zeros = vec![p.s.clone(), -p.s.clone()];
        if odd_n(big_n) {
            zeros.push(p.qp(-1));
            zeros.push(-p.qp(-1));
        }
        for i in 0..n {
            for v in &zeros {
                let mut m = w.to_vec();
                m[i] = v.clone();
                r.check(|| format!("w{}={v}, {}", i + 1, fmt_point(p, "w", w)), &z(p, &m)?, &Gq::from(0));
            }
        }
        Ok(())
    }));
    out.push(run("Z_degree", &|p, w, r| {
        let reach = 2 * big_n as i64 - 3;
        let fit = interpolate_in_first(-reach, reach, |l| {
            let mut m = w.to_vec();
            m[0] = l.clone();
            z(p, &m)
        })?;
        let ok = fit.is_centred() && fit.degree_width().map_or(true, |d| d <= 2 * reach);
        r.check(|| fmt_point(p, "w", w), &ok, &true);
        Ok(())
    }));
    out.push(run("Y_BC", &|p, w, r| {
        let y = |m: &[Gq]| rescaled_y(p, big_n, m);
        let base = y(w)?;
        let mut m = w.to_vec();
        m[0] = -m[0].clone();
        r.check(|| format!("even, {}", fmt_point(p, "w", w)), &y(&m)?, &base);
        m[0] = Gq::from(1) / w[0].clone();
        r.check(|| format!("inversion, {}", fmt_point(p, "w", w)), &y(&m)?, &base);
        if n >= 2 {
            let mut sw = w.to_vec();
            sw.swap(0, 1);
            r.check(|| format!("symmetric, {}", fmt_point(p, "w", w)), &y(&sw)?, &base);
        }
        let half = 4 * (n as i64 - 1);
        let fit = interpolate_in_first(-half, half, |l| {
            let mut m = w.to_vec();
            m[0] = l.clone();
            y(&m)
        })?;
        let ok = fit.is_centred() && fit.degree_width().map_or(true, |d| d <= 2 * half);
        r.check(|| format!("width, {}", fmt_point(p, "w", w)), &ok, &true);
        Ok(())
    }));
    out.push(run("Y_reduction_2", &|p, w, r| {
        for i in 0..n {
            for imag in [Gq::i(), -Gq::i()] {
                let (lhs, rhs) = y_reduction2_sides(p, big_n, w, i, imag.clone())?;
                r.check(|| format!("w{}={imag}*s, {}", i + 1, fmt_point(p, "w", w)), &lhs, &rhs);
            }
        }
        Ok(())
    }));
    if big_n >= 4 {
        out.push(run("Y_reduction_4", &|p, w, r| {
            for i in 0..n {
                for j in i + 1..n {
                    let (lhs, rhs) = y_reduction4_sides(p, big_n, w, i, j)?;
                    r.check(|| format!("i={i}, j={j}, {}", fmt_point(p, "w", w)), &lhs, &rhs);
                }
            }
            Ok(())
        }));
    }
    out
}

/// `⟨χ(1)⊗…|Ψ_N(1…)⟩ = ⟨φ⊗…⊗φ|Ψ_N(1…)⟩` and `S_N` from `Z_N(1, …, 1)`.
pub fn check_relation_sz(big_n: usize, trials: usize, seed: u64) -> Report {
    let report = Report::new("relation_SZ", Some(big_n));
    let s_poly = sum_components(big_n);
    run_trials(report, trials, seed, stream_id("sz", big_n), |s, r| {
        let p = sample_params(s);
        let ones = vec![Gq::from(1); big_n / 2];
        let zval = gen_sum_z(&p, big_n, &ones)?;
        let lhs = relation_sz_rhs(&p, big_n, &zval)?;
        let (x, tau) = p.x_tau()?;
        let rhs = s_poly.eval_at(&[("x", x), ("tau", tau)])?;
        r.check(|| fmt_point(&p, "w", &ones), &lhs, &rhs);
        if big_n >= 2 {
            let psi = psi_vector_robust(&p, &half_specialise(&ones, odd_n(big_n))?)?;
            let all_phi = (0..big_n).fold(SpinVector::basis(0, 0), |c, _| c.tensor(&phi()));
            let chis = chi_covector(&p, &ones, odd_n(big_n))?;
            r.check(|| format!("chi(1) factorises, {}", fmt_point(&p, "w", &ones)), &chis.dot(&psi), &all_phi.dot(&psi));
        }
        Ok(())
    })
}

/// `(−1)^{n'(n'−1)/2} [β]^{−n} [q]^{−n(n−1)−n'(n'−1)} · Z`.
pub fn relation_sz_rhs<F: Field>(p: &QkzParams<F>, big_n: usize, z: &F) -> Result<F> {
    let sh = ChainShape::new(big_n);
    let (n, np) = (sh.n as i64, sh.n_prime as i64);
    let mut v = z.mul_ref(&bracket(&p.beta)?.powi(-n)?);
    v = v.mul_ref(&bracket(&p.q)?.powi(-(n * (n - 1) + np * (np - 1)))?);
    if (np * (np - 1) / 2) % 2 == 1 {
        v = -v;
    }
    Ok(v)
}

/// Properties (i)–(iv) that single out `Y_N` among families of Laurent
/// polynomials, evaluated on `Y_N` itself.
pub fn check_uniqueness_inputs(big_n: usize, trials: usize, seed: u64) -> Report {
    let mut report = Report::new("uniqueness_inputs", Some(big_n));
    let p = QkzParams::new(Gq::from_ints(3, 2, 1, 2), Gq::from_ints(2, 1, 1, 3)).expect("valid");
    for small in 0..2 {
        let y = rescaled_y::<Gq>(&p, small, &[]);
        match y {
            Ok(v) => report.check(|| format!("Y_{small}"), &v, &Gq::from(1)),
            Err(e) => report.error(format!("Y_{small}"), &e),
        }
    }
    if big_n >= 2 {
        for r in check_z_properties(big_n, trials, seed) {
            if matches!(r.property.as_str(), "Y_BC" | "Y_reduction_2" | "Y_reduction_4") {
                report.merge(r);
            }
        }
    }
    report
}

/// Perturbs one amplitude of `v`, for negative controls.
pub fn perturb<F: Field>(v: &SpinVector<F>) -> SpinVector<F> {
    let mut w = v.clone();
    if let Some((m, _)) = v.iter().next() {
        w.add(m, F::one());
    } else {
        w.add(0, F::one());
    }
    w
}

/// The identity `Ř(z) = LocalOp` at `z = 1`, exposed for tests of the
/// operator conventions.
pub fn r_check_identity<F: Field>(p: &QkzParams<F>) -> Result<bool> {
    Ok(r_check(p, &F::one())? == LocalOp::identity(2))
}
