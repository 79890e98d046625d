//! Randomized checks of the six-vertex identities at exact points.

use super::ops::{det_k, f_big, m_on_all_down, nu};
use super::{
    alpha_minus, alpha_plus, enumerate_configs, k_matrix, m_operator,
    overlap_zz, overlap_zz_expanded, r_check, r_matrix, rescaled_yy, sum_weights, SvParams,
    VertexWeights,
};
use crate::arith::{brace, bracket, Field, Ring, Sampler};
use crate::error::Result;
use crate::qkz::{sample_params, sample_sites, QkzParams};
use crate::report::Report;
use crate::spin::{word_of_mask, LocalOp, OpProduct, Spin, SpinVector};
use crate::verify::{compare_ops, interpolate_in_first, run_trials, stream_id};
use crate::Gq;

pub type RBuilder = fn(&SvParams<Gq>, &Gq) -> Result<LocalOp<Gq>>;

/// Draws `(s, t, b)`; `b` avoids `±q^k` for small `k` like the boundary parameter on the chain side.
pub fn sample_sv_params(s: &mut Sampler) -> SvParams<Gq> {
    loop {
        let qp = sample_params(s);
        let t = s.gaussian();
        if let Ok(p) = SvParams::new(qp.s, t, qp.beta) {
            return p;
        }
    }
}

/// Generic inhomogeneities for `p`.
pub fn sample_sv_sites(s: &mut Sampler, p: &SvParams<Gq>, count: usize) -> Vec<Gq> {
    let qp = QkzParams {
        s: p.s.clone(),
        q: p.q.clone(),
        beta: p.b.clone(),
    };
    sample_sites(s, &qp, count)
}

pub fn fmt_sv_point(p: &SvParams<Gq>, name: &str, z: &[Gq]) -> String {
    let vals: Vec<String> = z.iter().map(|v| v.to_string()).collect();
    format!("s={}, t={}, b={}, {}=[{}]", p.s, p.t, p.b, name, vals.join(", "))
}

/// Which boundary words a dual-route check covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Words {
    All,
    Alternating,
}

/// Partition functions by enumeration against `⟨α|𝕄|↓…↓⟩`.
pub fn check_dual_route(n: usize, words: Words, trials: usize, seed: u64) -> Report {
    let m = 2 * n;
    let alphas: Vec<Vec<Spin>> = match words {
        Words::All => (0..1u64 << m).map(|mask| word_of_mask(m, mask)).collect(),
        Words::Alternating => vec![alpha_plus(n), alpha_minus(n)],
    };
    let configs: Vec<_> = alphas
        .iter()
        .map(|a| enumerate_configs(a).expect("valid word"))
        .collect();
    run_trials(
        Report::new("dual_route", Some(n)),
        trials,
        seed,
        stream_id("dual", n),
        |s, r| {
            let p = sample_sv_params(s);
            let z = sample_sv_sites(s, &p, m);
            let wts = VertexWeights::at(&p, &z)?;
            let v = m_on_all_down(&p, &z)?;
            for (alpha, cs) in alphas.iter().zip(&configs) {
                let lhs = sum_weights(cs, &wts);
                let rhs = v.get(crate::spin::mask_of_word(alpha));
                r.check(
                    || format!("alpha={}, {}", crate::spin::word_to_string(alpha), fmt_sv_point(&p, "z", &z)),
                    &lhs,
                    &rhs,
                );
            }
            Ok(())
        },
    )
}

/// Both sides of `Ř_{12}(zw̄)ℝ_{13}(z)ℝ_{23}(w) = ℝ_{13}(w)ℝ_{23}(z)Ř_{12}(zw̄)`.
pub fn ybe_sides(p: &SvParams<Gq>, z: &Gq, w: &Gq, r: RBuilder) -> Result<(OpProduct<Gq>, OpProduct<Gq>)> {
    let zw = z.checked_div(w)?;
    let rc = permutation_times(p, &zw, r)?;
    let lhs = OpProduct::new()
        .then(rc.clone(), &[1, 2])
        .then(r(p, z)?, &[1, 3])
        .then(r(p, w)?, &[2, 3]);
    let rhs = OpProduct::new()
        .then(r(p, w)?, &[1, 3])
        .then(r(p, z)?, &[2, 3])
        .then(rc, &[1, 2]);
    Ok((lhs, rhs))
}

/// `Ř` built from a given R-matrix builder, so a corrupted `ℝ` corrupts both.
fn permutation_times(p: &SvParams<Gq>, z: &Gq, r: RBuilder) -> Result<LocalOp<Gq>> {
    let arg = -z.checked_div(&p.q)?;
    Ok(crate::spin::permutation()
        .compose(&r(p, &arg)?)
        .scale(&-Gq::from(1)))
}

/// Both sides of the boundary Yang–Baxter equation for `ℝ` and `𝕂`.
pub fn bybe_sides(p: &SvParams<Gq>, z: &Gq, w: &Gq) -> Result<(OpProduct<Gq>, OpProduct<Gq>)> {
    let rc = r_check(p, &z.checked_div(w)?)?;
    let zw = z.mul_ref(w);
    let lhs = OpProduct::new()
        .then(rc.clone(), &[1, 2])
        .then(k_matrix(p, z)?, &[1])
        .then(r_matrix(p, &zw)?, &[1, 2])
        .then(k_matrix(p, w)?, &[2]);
    let rhs = OpProduct::new()
        .then(k_matrix(p, w)?, &[1])
        .then(r_matrix(p, &zw)?, &[1, 2])
        .then(k_matrix(p, z)?, &[2])
        .then(rc, &[1, 2]);
    Ok((lhs, rhs))
}

/// Both sides of `Ř_{i,i+1}(z_i z̄_{i+1})𝕄(…z_i, z_{i+1}…) = 𝕄(…z_{i+1}, z_i…)Ř_{i,i+1}(z_i z̄_{i+1})`.
pub fn rm_sides(p: &SvParams<Gq>, z: &[Gq], i: usize) -> Result<(OpProduct<Gq>, OpProduct<Gq>)> {
    let rc = r_check(p, &z[i - 1].checked_div(&z[i])?)?;
    let mut lhs = OpProduct::new().then(rc.clone(), &[i, i + 1]);
    lhs.factors.extend(m_operator(p, z)?.factors);
    let mut sw = z.to_vec();
    sw.swap(i - 1, i);
    let rhs = m_operator(p, &sw)?.then(rc, &[i, i + 1]);
    Ok((lhs, rhs))
}

/// `(⟨ν(w)|⊗⟨ν(z)|)Ř_{23}(zw)Ř_{12}(zw̄)Ř_{34}(z̄w)Ř_{23}(z̄w̄)` and `r(zw)r(zw̄)⟨ν(z)|⊗⟨ν(w)|`.
pub fn nu_exchange_sides(p: &SvParams<Gq>, z: &Gq, w: &Gq) -> Result<(SpinVector<Gq>, SpinVector<Gq>)> {
    let one = Gq::from(1);
    let zb = one.checked_div(z)?;
    let wb = one.checked_div(w)?;
    let ops = OpProduct::new()
        .then(r_check(p, &z.mul_ref(w))?, &[2, 3])
        .then(r_check(p, &z.mul_ref(&wb))?, &[1, 2])
        .then(r_check(p, &zb.mul_ref(w))?, &[3, 4])
        .then(r_check(p, &zb.mul_ref(&wb))?, &[2, 3]);
    let lhs = ops.apply_left(&nu(p, w)?.tensor(&nu(p, z)?));
    let rr = |x: &Gq| -> Result<Gq> {
        let q2 = p.q.mul_ref(&p.q);
        Ok(bracket(&q2.mul_ref(x))? * bracket(&q2.checked_div(x)?)?)
    };
    let c = rr(&z.mul_ref(w))? * rr(&z.mul_ref(&wb))?;
    let rhs = nu(p, z)?.tensor(&nu(p, w)?).scale(&c);
    Ok((lhs, rhs))
}

fn random_probe(s: &mut Sampler, sites: usize) -> SpinVector<Gq> {
    let mut v = SpinVector::zero(sites);
    for m in 0..1u64 << sites {
        v.add(m, Gq::from(s.index(15) as i64 - 7));
    }
    v
}

fn all_down(sites: usize) -> SpinVector<Gq> {
    SpinVector::basis(sites, (1u64 << sites) - 1)
}

/// Operator identities: YBE, boundary YBE, 𝕄-commutation for `n ≤ 3`, the
/// ⟨ν|-exchange, the inversion identities for Ř and ⟨ν|, and the 𝕂 identities.
pub fn check_yb_identities(trials: usize, seed: u64) -> Vec<Report> {
    let mk = |name: &str, body: &(dyn Fn(&mut Sampler, &mut Report) -> Result<()> + Sync)| {
        run_trials(Report::new(name, None), trials, seed, stream_id(name, 0), |s, r| body(s, r))
    };
    let mut out = vec![
        check_ybe_with(trials, seed, r_matrix),
        mk("sv_boundary_ybe", &|s, r| {
            let p = sample_sv_params(s);
            let z = sample_sv_sites(s, &p, 2);
            let (l, rr) = bybe_sides(&p, &z[0], &z[1])?;
            compare_ops(r, "bybe", || fmt_sv_point(&p, "z,w", &z), 2, &l, &rr);
            Ok(())
        }),
        mk("sv_rm_commutation", &|s, r| {
            let p = sample_sv_params(s);
            for n in 1..=3 {
                let z = sample_sv_sites(s, &p, 2 * n);
                // at n = 3 both sides act on a random probe vector instead of all 64 columns
                let probe = (n == 3).then(|| random_probe(s, 2 * n));
                for i in 1..2 * n {
                    let (l, rr) = rm_sides(&p, &z, i)?;
                    match &probe {
                        Some(v) => r.check(|| format!("i={i}, probe, {}", fmt_sv_point(&p, "z", &z)), &l.apply(v), &rr.apply(v)),
                        None => compare_ops(r, &format!("i={i}"), || fmt_sv_point(&p, "z", &z), 2 * n, &l, &rr),
                    }
                }
            }
            Ok(())
        }),
        mk("sv_nu_exchange", &|s, r| {
            let p = sample_sv_params(s);
            let z = sample_sv_sites(s, &p, 2);
            let (l, rr) = nu_exchange_sides(&p, &z[0], &z[1])?;
            r.check(|| fmt_sv_point(&p, "z,w", &z), &l, &rr);
            Ok(())
        }),
        mk("sv_inversion", &|s, r| {
            let p = sample_sv_params(s);
            let z = sample_sv_sites(s, &p, 1);
            let z2 = z[0].mul_ref(&z[0]);
            let q2 = p.q.mul_ref(&p.q);
            let rc = r_check(&p, &z2)?;
            // Ř(z²)|↓↓⟩ = [q²z̄²]|↓↓⟩
            let lhs = rc.apply(&[1, 2], &all_down(2));
            let rhs = all_down(2).scale(&bracket(&q2.checked_div(&z2)?)?);
            r.check(|| fmt_sv_point(&p, "z", &z), &lhs, &rhs);
            // ⟨ν(z̄)|Ř(z²) = [q²z²]⟨ν(z)|
            let zb = Gq::from(1).checked_div(&z[0])?;
            let lhs = rc.apply_left(&[1, 2], &nu(&p, &zb)?);
            let rhs = nu(&p, &z[0])?.scale(&bracket(&q2.mul_ref(&z2))?);
            r.check(|| fmt_sv_point(&p, "z", &z), &lhs, &rhs);
            Ok(())
        }),
        mk("sv_k_identities", &|s, r| {
            let p = sample_sv_params(s);
            let w = sample_sv_sites(s, &p, 1);
            let one = Gq::from(1);
            // 𝕂(−i q^{−1/2}) = t·I
            let k = k_matrix(&p, &-(Gq::i().checked_div(&p.s)?))?;
            r.check(|| fmt_sv_point(&p, "", &[]), &k, &LocalOp::identity(1).scale(&p.t));
            // 𝕂(w̄)𝕂(−q̄w) = det𝕂(w̄)·I
            let wb = one.checked_div(&w[0])?;
            let prod = k_matrix(&p, &wb)?.compose(&k_matrix(&p, &-(w[0].checked_div(&p.q)?))?);
            let rhs = LocalOp::identity(1).scale(&det_k(&p, &wb)?);
            r.check(|| fmt_sv_point(&p, "w", &w), &prod, &rhs);
            Ok(())
        }),
    ];
    // the chain-side pair Ř, K
    out.extend(
        crate::qkz::checks::check_operator_identities(trials, seed)
            .into_iter()
            .filter(|r| r.property == "braid_ybe" || r.property == "boundary_ybe"),
    );
    out
}

/// The Yang–Baxter equation for a given R-matrix builder; passing a corrupted
/// builder gives a negative control.
pub fn check_ybe_with(trials: usize, seed: u64, r: RBuilder) -> Report {
    run_trials(Report::new("sv_ybe", None), trials, seed, stream_id("sv_ybe", 0), |s, rep| {
        let p = sample_sv_params(s);
        let z = sample_sv_sites(s, &p, 2);
        let (l, rr) = ybe_sides(&p, &z[0], &z[1], r)?;
        compare_ops(rep, "ybe", || fmt_sv_point(&p, "z,w", &z), 3, &l, &rr);
        Ok(())
    })
}

fn drop_indices(w: &[Gq], skip: &[usize]) -> Vec<Gq> {
    w.iter()
        .enumerate()
        .filter(|(k, _)| !skip.contains(k))
        .map(|(_, v)| v.clone())
        .collect()
}

/// `𝕐_n` at `w_i = i q^{1/2}` and the right-hand side of its first reduction.
pub fn yy_reduction_imag_sides(p: &SvParams<Gq>, w: &[Gq], i: usize) -> Result<(Gq, Gq)> {
    let n = w.len();
    let mut pt = w.to_vec();
    pt[i] = Gq::i().mul_ref(&p.s);
    let lhs = rescaled_yy(p, &pt)?;
    let s3 = p.sp(3);
    let mut rhs = p.t.mul_ref(&brace(&p.b.checked_div(&p.s)?)?);
    if n % 2 == 1 {
        rhs = -rhs;
    }
    for (j, wj) in w.iter().enumerate() {
        if j == i {
            continue;
        }
        let a = brace(&s3.mul_ref(wj))?;
        let b = brace(&s3.checked_div(wj)?)?;
        rhs = rhs * a.mul_ref(&a) * b.mul_ref(&b);
    }
    rhs = rhs * rescaled_yy(p, &drop_indices(w, &[i]))?;
    Ok((lhs, rhs))
}

/// `𝕐_n` at `w_j = q̄ w_i` and the right-hand side of the second reduction.
pub fn yy_reduction_pair_sides(p: &SvParams<Gq>, w: &[Gq], i: usize, j: usize) -> Result<(Gq, Gq)> {
    let mut pt = w.to_vec();
    pt[j] = w[i].checked_div(&p.q)?;
    let lhs = rescaled_yy(p, &pt)?;
    let wi = &w[i];
    let wib = Gq::from(1).checked_div(wi)?;
    let q2 = p.q.mul_ref(&p.q);
    let mut prod = Gq::from(1);
    for (k, wk) in w.iter().enumerate() {
        if k == i || k == j {
            continue;
        }
        let wkb = Gq::from(1).checked_div(wk)?;
        prod = prod
            * bracket(&q2.mul_ref(&wib).mul_ref(&wkb))?
            * bracket(&q2.mul_ref(&wib).mul_ref(wk))?
            * bracket(&p.q.mul_ref(wi).mul_ref(wk))?
            * bracket(&p.q.mul_ref(wi).mul_ref(&wkb))?;
    }
    let rhs = f_big(p, wi)? * prod.mul_ref(&prod) * rescaled_yy(p, &drop_indices(w, &[i, j]))?;
    Ok((lhs, rhs))
}

/// Symmetry, inversion, evenness, the word expansion, BC_n symmetry and degree
/// of `𝕐_n`, and both reductions, at `n`.
pub fn check_zz_properties(n: usize, trials: usize, seed: u64) -> Vec<Report> {
    let run = |name: &str, body: &(dyn Fn(&SvParams<Gq>, &[Gq], &mut Report) -> Result<()> + Sync)| {
        run_trials(Report::new(name, Some(n)), trials, seed, stream_id(name, n), |s, r| {
            let p = sample_sv_params(s);
            let w = sample_sv_sites(s, &p, n);
            body(&p, &w, r)
        })
    };
    let pt = |p: &SvParams<Gq>, w: &[Gq]| fmt_sv_point(p, "w", w);
    let mut out = Vec::new();
    if n >= 2 {
        out.push(run("ZZ_symmetry", &|p, w, r| {
            let base = overlap_zz(p, w)?;
            for i in 0..n - 1 {
                let mut sw = w.to_vec();
                sw.swap(i, i + 1);
                r.check(|| format!("swap {i}, {}", pt(p, w)), &overlap_zz(p, &sw)?, &base);
            }
            Ok(())
        }));
    }
    out.push(run("ZZ_inversion", &|p, w, r| {
        let base = overlap_zz(p, w)?;
        let q2 = p.q.mul_ref(&p.q);
        for i in 0..n {
            let w2 = w[i].mul_ref(&w[i]);
            let mut m = w.to_vec();
            m[i] = Gq::from(1).checked_div(&w[i])?;
            let lhs = bracket(&q2.mul_ref(&w2))? * base.clone();
            let rhs = bracket(&q2.checked_div(&w2)?)? * overlap_zz(p, &m)?;
            r.check(|| format!("i={i}, {}", pt(p, w)), &lhs, &rhs);
        }
        Ok(())
    }));
    out.push(run("ZZ_even", &|p, w, r| {
        let base = overlap_zz(p, w)?;
        for i in 0..n {
            let mut m = w.to_vec();
            m[i] = -m[i].clone();
            r.check(|| format!("i={i}, {}", pt(p, w)), &overlap_zz(p, &m)?, &base);
        }
        Ok(())
    }));
    if n <= 3 {
        out.push(run("ZZ_word_expansion", &|p, w, r| {
            r.check(|| pt(p, w), &overlap_zz_expanded(p, w)?, &overlap_zz(p, w)?);
            Ok(())
        }));
    }
    out.push(run("YY_bc_degree", &|p, w, r| {
        let reach = 4 * n.saturating_sub(1) as i64;
        let fit = interpolate_in_first(-reach, reach, |l| {
            let mut m = w.to_vec();
            m[0] = l.clone();
            rescaled_yy(p, &m)
        })?;
        let even = fit.support().map_or(true, |_| {
            (fit.lo..=fit.lo + fit.step * (fit.coeffs.len() as i64 - 1))
                .filter(|k| k % 2 != 0)
                .all(|k| fit.coeff(k) == Gq::from(0))
        });
        let ok = even && fit.is_centred() && fit.degree_width().map_or(true, |d| d <= 2 * reach);
        r.check(|| pt(p, w), &ok, &true);
        let base = rescaled_yy(p, w)?;
        let mut m = w.to_vec();
        m[0] = Gq::from(1).checked_div(&w[0])?;
        r.check(|| format!("inversion, {}", pt(p, w)), &rescaled_yy(p, &m)?, &base);
        Ok(())
    }));
    out.push(run("YY_reduction_imag", &|p, w, r| {
        for i in 0..n {
            let (l, rr) = yy_reduction_imag_sides(p, w, i)?;
            r.check(|| format!("i={i}, {}", pt(p, w)), &l, &rr);
        }
        Ok(())
    }));
    if n >= 2 {
        out.push(run("YY_reduction_pair", &|p, w, r| {
            for i in 0..n {
                for j in i + 1..n {
                    let (l, rr) = yy_reduction_pair_sides(p, w, i, j)?;
                    r.check(|| format!("i={i}, j={j}, {}", pt(p, w)), &l, &rr);
                }
            }
            Ok(())
        }));
    }
    out
}

/// `ℤ_1(w) = t[q^{1/2}]{bq^{−1/2}}[q²w̄²]`.
pub fn zz1_closed_form(p: &SvParams<Gq>, w: &Gq) -> Result<Gq> {
    let q2 = p.q.mul_ref(&p.q);
    Ok(p.t.mul_ref(&bracket(&p.s)?)
        * brace(&p.b.checked_div(&p.s)?)?
        * bracket(&q2.checked_div(&w.mul_ref(w))?)?)
}
