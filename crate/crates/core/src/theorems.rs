//! End-to-end checks linking the chain, the six-vertex model and TSASMs.
//!
//! Each check compares two independently computed sides: contour extraction
//! against configuration enumeration, operator products against closed forms,
//! and so on.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_integer::binomial;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::{brace, bracket, Field, Ring, Sampler};
use crate::contour::{sum_components, tsasm_count_integral};
use crate::error::{internal, usage, Error, Result};
use crate::qkz::checks::{
    check_exchange_and_reflection, check_laurent_psi, check_operator_identities, check_psi_reduction,
    check_z_properties, fmt_point, relation_sz_rhs, sample_w,
};
use crate::qkz::{gen_sum_z, rescaled_y, QkzParams};
use crate::report::Report;
use crate::shape::ChainShape;
use crate::sixvertex::checks::{
    check_dual_route, check_yb_identities, check_zz_properties, fmt_sv_point, sample_sv_params, Words,
};
use crate::sixvertex::{alpha_minus, alpha_plus, partition_enum, partition_enum_homogeneous, rescaled_yy, SvParams};
use crate::spin::Spin;
use crate::tsasm::{count_tsasm, genfun, GENFUN_VARS};
use crate::verify::{run_trials, stream_id};
use crate::{Gq, IntPoly, Integer};

pub type TheoremReport = Report;

/// Attempts per trial before a degenerate sample is reported as an error.
const RESAMPLE_LIMIT: usize = 16;

/// Runs `body` until it returns something other than a domain error.
fn resampled<T>(s: &mut Sampler, mut body: impl FnMut(&mut Sampler) -> Result<T>) -> Result<T> {
    let mut last = None;
    for _ in 0..RESAMPLE_LIMIT {
        match body(s) {
            Err(e @ Error::Domain(_)) => last = Some(e),
            other => return other,
        }
    }
    Err(last.expect("at least one attempt"))
}

pub type SzPrefactor = fn(&QkzParams<Gq>, usize, &Gq) -> Result<Gq>;

/// `S_N(x, τ)` against the rescaled `Z_N(1, …, 1)` at random `(s, β)`.
pub fn check_relation_sz(big_n: usize, trials: usize, seed: u64) -> TheoremReport {
    check_relation_sz_with(big_n, trials, seed, relation_sz_rhs)
}

/// As [`check_relation_sz`] with a replaceable prefactor.
pub fn check_relation_sz_with(big_n: usize, trials: usize, seed: u64, prefactor: SzPrefactor) -> TheoremReport {
    let s_poly = sum_components(big_n);
    let report = Report::new("relation_SZ", Some(big_n));
    run_trials(report, trials, seed, stream_id("thm_sz", big_n), |s, r| {
        let ones = vec![Gq::from(1); big_n / 2];
        let (p, lhs, rhs) = resampled(s, |s| {
            let (p, _) = sample_w(s, big_n);
            let lhs = prefactor(&p, big_n, &gen_sum_z(&p, big_n, &ones)?)?;
            let (x, tau) = p.x_tau()?;
            let rhs: Gq = s_poly.eval_at(&[("x", x), ("tau", tau)])?;
            Ok((p, lhs, rhs))
        })?;
        r.check(|| fmt_point(&p, "w", &ones), &lhs, &rhs);
        Ok(())
    })
}

/// The six-vertex parameters attached to `(s, β)`: `t = −{βs}/{s}` and `b`
/// chosen by `b_of`.
pub fn sv_params_of(p: &QkzParams<Gq>, big_n: usize, b_of: BChoice) -> Result<SvParams<Gq>> {
    let t = -brace(&p.beta.mul_ref(&p.s))?.checked_div(&brace(&p.s)?)?;
    SvParams::new(p.s.clone(), t, b_of(p, big_n)?)
}

pub type BChoice = fn(&QkzParams<Gq>, usize) -> Result<Gq>;

/// `b = q` for even `N`, `q̄` for odd `N`.
pub fn b_by_parity(p: &QkzParams<Gq>, big_n: usize) -> Result<Gq> {
    if big_n % 2 == 0 {
        Ok(p.q.clone())
    } else {
        Gq::from(1).checked_div(&p.q)
    }
}

/// `Y_N(w) = 𝕐_n(w)` under the parameter map.
pub fn check_y_equals_yy(big_n: usize, trials: usize, seed: u64) -> TheoremReport {
    check_y_equals_yy_with(big_n, trials, seed, b_by_parity)
}

pub fn check_y_equals_yy_with(big_n: usize, trials: usize, seed: u64, b_of: BChoice) -> TheoremReport {
    let report = Report::new("Y_equals_YY", Some(big_n));
    run_trials(report, trials, seed, stream_id("thm_yy", big_n), |s, r| {
        let (p, w, lhs, rhs) = resampled(s, |s| {
            let (p, w) = sample_w(s, big_n);
            let sv = sv_params_of(&p, big_n, b_of)?;
            let lhs = rescaled_y(&p, big_n, &w)?;
            let rhs = rescaled_yy(&sv, &w)?;
            Ok((p, w, lhs, rhs))
        })?;
        r.check(|| fmt_point(&p, "w", &w), &lhs, &rhs);
        Ok(())
    })
}

/// The boundary word whose partition function counts TSASMs of order `2N+1`:
/// `α₋` for even `N`, `α₊` for odd `N`.
pub fn gf_boundary(big_n: usize) -> Vec<Spin> {
    let n = big_n / 2;
    if big_n % 2 == 0 {
        alpha_minus(n)
    } else {
        alpha_plus(n)
    }
}

/// `A_TS(2N+1; t, −{q})` against `[q]^{−n(2n−1)}` times the homogeneous
/// partition function, at random `(s, t)` and symbolically, for `N = 2n` and
/// `N = 2n+1`.
pub fn check_gf_lemma(n: usize, trials: usize, seed: u64) -> Result<TheoremReport> {
    if n == 0 {
        return Err(usage("the generating function lemma needs n >= 1"));
    }
    let mut out = Report::new("gf_lemma", None).with_parameters(format!("n={n}"));
    let ones = vec![Gq::from(1); 2 * n];
    let k = (n * (2 * n - 1)) as i64;
    for big_n in [2 * n, 2 * n + 1] {
        let a = genfun(big_n)?;
        let alpha = gf_boundary(big_n);
        let sampled = run_trials(Report::new("gf_lemma", Some(big_n)), trials, seed, stream_id("thm_gf", big_n), |s, r| {
            let p = sample_sv_params(s);
            let tau = -brace(&p.q)?;
            let lhs: Gq = a.eval_at(&[("t", p.t.clone()), ("tau", tau)])?;
            let rhs = partition_enum(&p, &alpha, &ones)?.mul_ref(&bracket(&p.q)?.powi(-k)?);
            r.check(|| fmt_sv_point(&p, "z", &ones), &lhs, &rhs);
            Ok(())
        });
        out.merge(sampled);
        // [q]^{n(2n−1)} A_TS(t, −q − q̄) as a polynomial in (t, q)
        let q_poly = IntPoly::from_terms(&["q"], [(vec![1], Integer::one()), (vec![-1], Integer::one())]);
        let bq = IntPoly::from_terms(&["q"], [(vec![1], Integer::one()), (vec![-1], -Integer::one())]);
        let lhs = a.compose("tau", &-q_poly)?.mul_ref(&bq.pow(k as u32));
        let rhs = partition_enum_homogeneous(&alpha)?;
        out.check(|| format!("symbolic, N={big_n}"), &lhs, &rhs);
    }
    Ok(out)
}

/// `A_TS(2N+1; t, τ)` recovered from the homogeneous partition function alone,
/// by dividing out `[q]^{n(2n−1)}` and rewriting the symmetric remainder in
/// `τ = −{q}`.
pub fn genfun_from_partition(big_n: usize) -> Result<IntPoly> {
    let n = big_n / 2;
    if n == 0 {
        return Ok(IntPoly::constant(&GENFUN_VARS, Integer::one()));
    }
    let z = partition_enum_homogeneous(&gf_boundary(big_n))?;
    let z = z.with_vars(&["t".to_string(), "q".to_string()])?;
    let mut slices: BTreeMap<i32, BTreeMap<i32, Integer>> = BTreeMap::new();
    for (e, c) in z.terms() {
        slices.entry(e[0]).or_default().insert(e[1], c.clone());
    }
    let mut out = IntPoly::zero_in(&GENFUN_VARS);
    for (t_exp, mut p) in slices {
        for _ in 0..n * (2 * n - 1) {
            p = divide_by_bracket(p)?;
        }
        for (tau_exp, c) in symmetric_to_brace_powers(p)? {
            out.add_term(vec![t_exp, tau_exp], c);
        }
    }
    Ok(out)
}

/// Exact quotient of a Laurent polynomial in `q` by `q − q⁻¹`.
fn divide_by_bracket(mut p: BTreeMap<i32, Integer>) -> Result<BTreeMap<i32, Integer>> {
    let lo = p.keys().next().copied().unwrap_or(0);
    let mut quot = BTreeMap::new();
    while let Some((&top, c)) = p.iter().next_back() {
        let c = c.clone();
        if top - 2 < lo {
            return Err(internal("partition function is not divisible by [q]"));
        }
        quot.insert(top - 1, c.clone());
        p.remove(&top);
        let e = p.entry(top - 2).or_insert_with(Integer::zero);
        *e += c;
        if e.is_zero() {
            p.remove(&(top - 2));
        }
    }
    Ok(quot)
}

/// Writes a `q ↔ q⁻¹` symmetric Laurent polynomial as `Σ a_k τ^k` with
/// `τ = −(q + q⁻¹)`.
fn symmetric_to_brace_powers(mut p: BTreeMap<i32, Integer>) -> Result<BTreeMap<i32, Integer>> {
    let mut out = BTreeMap::new();
    while let Some((&d, c)) = p.iter().next_back() {
        let c = c.clone();
        if d < 0 {
            return Err(internal("quotient is not symmetric under q -> 1/q"));
        }
        for k in 0..=d {
            let e = p.entry(d - 2 * k).or_insert_with(Integer::zero);
            *e -= &c * binomial(Integer::from(d), Integer::from(k));
            if e.is_zero() {
                p.remove(&(d - 2 * k));
            }
        }
        out.insert(d, if d % 2 == 0 { c } else { -c });
    }
    Ok(out)
}

/// `Σ c_{μν} (1+x)^μ (1+x(x−τ))^{(n−μ)/2} τ^ν` for the coefficients of `a`.
pub fn main_theorem_rhs(big_n: usize, a: &IntPoly) -> Result<IntPoly> {
    let n = ChainShape::new(big_n).n as i32;
    let vars = ["x", "tau"];
    let one_plus_x = IntPoly::from_terms(&vars, [(vec![0, 0], Integer::one()), (vec![1, 0], Integer::one())]);
    let quad = IntPoly::from_terms(
        &vars,
        [
            (vec![0, 0], Integer::one()),
            (vec![2, 0], Integer::one()),
            (vec![1, 1], -Integer::one()),
        ],
    );
    let a = a.with_vars(&GENFUN_VARS.map(String::from))?;
    let mut out = IntPoly::zero_in(&vars);
    for (e, c) in a.terms() {
        let (mu, nu) = (e[0], e[1]);
        if mu < 0 || nu < 0 || mu > n || (n - mu) % 2 != 0 {
            return Err(internal(format!("term t^{mu} tau^{nu} violates the degree bounds for N={big_n}")));
        }
        let term = one_plus_x
            .pow(mu as u32)
            .mul_ref(&quad.pow(((n - mu) / 2) as u32))
            .mul_ref(&IntPoly::monomial(&vars, &[0, nu], c.clone()));
        out = out + term;
    }
    Ok(out)
}

/// `S_N(x, τ)` from contour extraction against the TSASM generating function
/// from enumeration, as an identity of polynomials.
pub fn check_main_theorem(big_n: usize) -> Result<TheoremReport> {
    let mut r = Report::new("main_theorem", Some(big_n));
    let lhs = sum_components(big_n);
    let rhs = main_theorem_rhs(big_n, &genfun(big_n)?)?;
    r.check(|| "symbolic".into(), &lhs, &rhs);
    Ok(r)
}

/// Largest `N` for which each corollary check runs.
pub const COR_COUNT_MAX: usize = 6;
pub const COR_SUSY_MAX: usize = 5;
pub const COR_SHIFT_MAX: usize = 5;

/// The corollaries at `N`:
/// (a) the `τ = 1` specialisation of the main identity;
/// (b) the contour-integral count and the partition-function count against enumeration, `N ≤ 6`;
/// (c) `S_N(1, 1) = |TSASM(2N+3)|`, `N ≤ 5`;
/// (d) `A_TS(2N+1; 1+τ, τ) = A_TS(2N+3; 1, τ)`, `N ≤ 5`;
/// (e) `S_N(τ, τ) = S_{N+1}(0, τ)`, `N ≤ 5`.
pub fn check_corollaries(big_n: usize) -> Result<TheoremReport> {
    let mut ran = vec!["a"];
    let mut r = Report::new("corollaries", Some(big_n));
    let s = sum_components(big_n);
    let a = genfun(big_n)?;

    let n = ChainShape::new(big_n).n as i32;
    let x = ["x"];
    let at_one = a.substitute("tau", &Integer::one())?.with_vars(&["t".to_string()])?;
    let one_plus_x = IntPoly::from_terms(&x, [(vec![0], Integer::one()), (vec![1], Integer::one())]);
    let quad = IntPoly::from_terms(&x, [(vec![0], Integer::one()), (vec![1], -Integer::one()), (vec![2], Integer::one())]);
    let mut rhs = IntPoly::zero_in(&x);
    for (e, c) in at_one.terms() {
        let mu = e[0];
        if (n - mu) % 2 != 0 || mu > n {
            return Err(internal(format!("t-degree {mu} has the wrong parity for N={big_n}")));
        }
        rhs = rhs + one_plus_x.pow(mu as u32).mul_ref(&quad.pow(((n - mu) / 2) as u32)).scale(c);
    }
    r.check(|| "(a) tau=1".into(), &s.substitute("tau", &Integer::one())?.with_vars(&["x".to_string()])?, &rhs);

    if big_n <= COR_COUNT_MAX {
        ran.push("b");
        let count = Integer::from(count_tsasm(big_n)?);
        r.check(|| "(b) contour integral".into(), &tsasm_count_integral(big_n), &count);
        let from_z: IntPoly = genfun_from_partition(big_n)?;
        let at: Integer = from_z.substitute("t", &Integer::one())?.substitute("tau", &Integer::one())?.constant_term();
        r.check(|| "(b) homogeneous partition function".into(), &at, &count);
    }
    if big_n <= COR_SUSY_MAX {
        ran.push("c");
        let at = s.substitute("x", &Integer::one())?.substitute("tau", &Integer::one())?.constant_term();
        r.check(|| "(c) S_N(1,1)".into(), &at, &Integer::from(count_tsasm(big_n + 1)?));
    }
    if big_n <= COR_SHIFT_MAX {
        ran.extend(["d", "e"]);
        let tau = ["tau"];
        let shift = IntPoly::from_terms(&tau, [(vec![0], Integer::one()), (vec![1], Integer::one())]);
        let lhs = a.compose("t", &shift)?;
        let rhs = genfun(big_n + 1)?.substitute("t", &Integer::one())?;
        r.check(|| "(d) shift".into(), &lhs, &rhs);
        let lhs = s.compose("x", &IntPoly::var("tau"))?;
        let rhs = sum_components(big_n + 1).substitute("x", &Integer::zero())?;
        r.check(|| "(e) S_N at x=tau".into(), &lhs, &rhs);
    }
    Ok(r.with_parameters(ran.join(",")))
}

/// Groups of checks selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Ybe,
    Exchange,
    Reduction,
    Zprops,
    YEqualsYY,
    GfLemma,
    Main,
    Corollaries,
}

impl Suite {
    pub const NAMES: [&'static str; 9] =
        ["all", "ybe", "exchange", "reduction", "zprops", "yandyy", "gflemma", "main", "corollaries"];

    fn parts(self) -> Vec<Suite> {
        use Suite::*;
        match self {
            All => vec![Ybe, Exchange, Reduction, Zprops, YEqualsYY, GfLemma, Main, Corollaries],
            s => vec![s],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        use Suite::*;
        Ok(match s {
            "all" => All,
            "ybe" => Ybe,
            "exchange" => Exchange,
            "reduction" => Reduction,
            "zprops" => Zprops,
            "yandyy" => YEqualsYY,
            "gflemma" => GfLemma,
            "main" => Main,
            "corollaries" => Corollaries,
            _ => return Err(usage(format!("unknown suite {s:?}; expected one of {}", Suite::NAMES.join("|")))),
        })
    }
}

/// Largest `n` for the six-vertex suites, which enumerate configurations.
pub const SV_MAX_N: usize = 3;

type Job = Box<dyn Fn() -> Result<Vec<Report>> + Send + Sync>;

fn jobs_for(suite: Suite, max_n: usize, trials: usize, seed: u64) -> Vec<Job> {
    let per_n = |lo: usize, f: fn(usize, usize, u64) -> Report| -> Vec<Job> {
        (lo..=max_n)
            .map(|big_n| Box::new(move || Ok(vec![f(big_n, trials, seed)])) as Job)
            .collect()
    };
    let sv_max = SV_MAX_N.min(max_n / 2);
    match suite {
        Suite::All => Vec::new(),
        Suite::Ybe => vec![Box::new(move || {
            let mut out = check_yb_identities(trials, seed);
            out.extend(
                check_operator_identities(trials, seed)
                    .into_iter()
                    .filter(|r| r.property.starts_with("chi_")),
            );
            Ok(out)
        })],
        Suite::Exchange => {
            let mut jobs = per_n(1, check_exchange_and_reflection);
            jobs.extend(per_n(1, check_laurent_psi));
            jobs
        }
        Suite::Reduction => per_n(2, check_psi_reduction),
        Suite::Zprops => {
            let mut jobs: Vec<Job> = (2..=max_n)
                .map(|big_n| Box::new(move || Ok(check_z_properties(big_n, trials, seed))) as Job)
                .collect();
            jobs.extend(per_n(0, check_relation_sz));
            jobs.extend(
                (1..=sv_max).map(|n| Box::new(move || Ok(check_zz_properties(n, trials, seed))) as Job),
            );
            jobs
        }
        Suite::YEqualsYY => per_n(0, check_y_equals_yy),
        Suite::GfLemma => (1..=sv_max)
            .map(|n| {
                Box::new(move || Ok(vec![check_dual_route(n, Words::All, trials, seed), check_gf_lemma(n, trials, seed)?]))
                    as Job
            })
            .collect(),
        Suite::Main => (0..=max_n)
            .map(|big_n| Box::new(move || Ok(vec![check_main_theorem(big_n)?])) as Job)
            .collect(),
        Suite::Corollaries => (0..=max_n)
            .map(|big_n| Box::new(move || Ok(vec![check_corollaries(big_n)?])) as Job)
            .collect(),
    }
}

/// Runs a suite for chain lengths up to `max_n`; reports come back in a fixed
/// order regardless of scheduling.
pub fn run_suite(suite: Suite, max_n: usize, trials: usize, seed: u64) -> Result<Vec<TheoremReport>> {
    let jobs: Vec<Job> = suite
        .parts()
        .into_iter()
        .flat_map(|s| jobs_for(s, max_n, trials, seed))
        .collect();
    let results: Vec<Result<Vec<Report>>> = jobs.par_iter().map(|j| j()).collect();
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_division_and_brace_powers() {
        // (q − q⁻¹)(q + q⁻¹) = q² − q⁻²
        let p = BTreeMap::from([(2, Integer::one()), (-2, -Integer::one())]);
        let quot = divide_by_bracket(p).unwrap();
        assert_eq!(quot, BTreeMap::from([(1, Integer::one()), (-1, Integer::one())]));
        // q + q⁻¹ = −τ
        assert_eq!(symmetric_to_brace_powers(quot).unwrap(), BTreeMap::from([(1, -Integer::one())]));
        assert!(divide_by_bracket(BTreeMap::from([(1, Integer::one())])).is_err());
        assert!(symmetric_to_brace_powers(BTreeMap::from([(1, Integer::one())])).is_err());
    }

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert!(name.parse::<Suite>().is_ok());
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
