//! The inhomogeneous vector |Ψ_N⟩, its generalised sums Z_N and Y_N, and the
//! relations they satisfy.

pub mod checks;
pub mod overlap;
pub mod psi;

use crate::arith::{brace, bracket, Field, Ring, Sampler};
use crate::error::{domain, Result};
use crate::spin::{LocalOp, SpinVector};
use crate::Gq;

pub use overlap::{gen_sum_z, rescaled_y, y_divisor};
pub use psi::{big_psi_component, psi_vector, psi_vector_robust};

/// Spectral parameters: `s = q^{1/2}`, `q = s²` and the boundary parameter β.
#[derive(Clone, Debug, PartialEq)]
pub struct QkzParams<F> {
    pub s: F,
    pub q: F,
    pub beta: F,
}

impl<F: Field> QkzParams<F> {
    pub fn new(s: F, beta: F) -> Result<Self> {
        if s.is_zero() || beta.is_zero() {
            return Err(domain("s and beta must be nonzero"));
        }
        let q = s.mul_ref(&s);
        let q2 = q.mul_ref(&q);
        if q2.mul_ref(&q2) == F::one() {
            return Err(domain("q^4 = 1 is excluded"));
        }
        if beta.mul_ref(&beta) == F::one() {
            return Err(domain("beta^2 = 1 is excluded"));
        }
        Ok(QkzParams { s, q, beta })
    }

    /// `q^k` for any integer k.
    pub fn qp(&self, k: i64) -> F {
        self.q.powi(k).expect("q is nonzero")
    }

    /// `s^k = q^{k/2}`.
    pub fn sp(&self, k: i64) -> F {
        self.s.powi(k).expect("s is nonzero")
    }

    /// The homogeneous-limit parameters `x = −[βq]/[β]` and `τ = −{q}`.
    pub fn x_tau(&self) -> Result<(F, F)> {
        let x = -(bracket(&self.beta.mul_ref(&self.q))?.checked_div(&bracket(&self.beta)?)?);
        let tau = -brace(&self.q)?;
        Ok((x, tau))
    }
}

/// `Ř(z)` of the XXZ side.
pub fn r_check<F: Field>(p: &QkzParams<F>, z: &F) -> Result<LocalOp<F>> {
    let den = bracket(&p.q.checked_div(z)?)?;
    if den.is_zero() {
        return Err(domain("R-check denominator [q/z] vanishes"));
    }
    let a = bracket(&p.q.mul_ref(z))?.checked_div(&den)?;
    let b = bracket(&p.q)?.checked_div(&den)?;
    let c = bracket(z)?.checked_div(&den)?;
    let o = F::zero();
    Ok(LocalOp::new(
        2,
        vec![
            a.clone(), o.clone(), o.clone(), o.clone(),
            o.clone(), b.clone(), c.clone(), o.clone(),
            o.clone(), c, b, o.clone(),
            o.clone(), o.clone(), o, a,
        ],
    ))
}

/// `K(z) = diag(1, [βz]/[β z̄])`.
pub fn k_matrix<F: Field>(p: &QkzParams<F>, z: &F) -> Result<LocalOp<F>> {
    let num = bracket(&p.beta.mul_ref(z))?;
    let den = bracket(&p.beta.checked_div(z)?)?;
    if den.is_zero() {
        return Err(domain("K denominator [beta/z] vanishes"));
    }
    Ok(LocalOp::new(
        1,
        vec![F::one(), F::zero(), F::zero(), num.checked_div(&den)?],
    ))
}

/// Two-site covector `⟨χ(w)| = c(⟨↑↑| + ⟨↓↓|) + ⟨↑↓| + ⟨↓↑|` with `c = {sw}/{s}`.
pub fn chi<F: Field>(p: &QkzParams<F>, w: &F) -> Result<SpinVector<F>> {
    let c = brace(&p.s.mul_ref(w))?.checked_div(&brace(&p.s)?)?;
    let mut v = SpinVector::zero(2);
    v.add(0b00, c.clone());
    v.add(0b01, F::one());
    v.add(0b10, F::one());
    v.add(0b11, c);
    Ok(v)
}

/// `⟨φ| = ⟨↑| + ⟨↓|`.
pub fn phi<F: Field>() -> SpinVector<F> {
    SpinVector::product(&[(F::one(), F::one())])
}

/// `|ζ⟩ = |↑↓⟩ − |↓↑⟩`.
pub fn zeta<F: Field>() -> SpinVector<F> {
    let mut v = SpinVector::zero(2);
    v.add(0b01, F::one());
    v.add(0b10, -F::one());
    v
}

/// How a pair of site values can make a residue denominator vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Collision {
    Ratio,
    Product,
}

/// Index pairs `(l, j)`, `l < j`, whose values collide: `z_j/z_l ∈ {±1, ±q^{±1}, ±q^{±2}}`
/// or `z_j z_l ∈ {±1, ±q^{±1}, ±q^{±2}}`. This is the rejection set used for
/// sampling; [`psi::residue_collisions`] is the narrower set the residue
/// formula actually needs.
pub fn generic_collisions<F: Field>(p: &QkzParams<F>, z: &[F]) -> Vec<(usize, usize, Collision)> {
    let mut bad: Vec<F> = Vec::new();
    for k in -2..=2 {
        let qk = p.qp(k);
        bad.push(qk.clone());
        bad.push(-qk);
    }
    let mut out = Vec::new();
    for j in 0..z.len() {
        for l in 0..j {
            let r = z[j].clone() / z[l].clone();
            if bad.contains(&r) {
                out.push((l, j, Collision::Ratio));
            }
            let m = z[j].mul_ref(&z[l]);
            if bad.contains(&m) {
                out.push((l, j, Collision::Product));
            }
        }
    }
    out
}

/// Draws `(s, β)` with a Gaussian-rational `s` and `β`, rejecting excluded values.
pub fn sample_params(sampler: &mut Sampler) -> QkzParams<Gq> {
    loop {
        let s = sampler.gaussian();
        let beta = sampler.gaussian();
        if let Ok(p) = QkzParams::new(s, beta) {
            let b2 = p.beta.mul_ref(&p.beta);
            // also keep [βq^k] and {q^{k/2}β} away from zero for small k
            if (-3..=3).all(|k| b2 != p.qp(k) && b2 != -p.qp(k)) {
                return p;
            }
        }
    }
}

/// Draws `count` site values, none colliding with each other, with ±1 or with
/// small powers of `q^{1/2}`.
pub fn sample_sites(sampler: &mut Sampler, p: &QkzParams<Gq>, count: usize) -> Vec<Gq> {
    loop {
        let z = sampler.gaussians(count);
        if generic_collisions(p, &z).is_empty() && z.iter().all(|w| site_is_generic(p, w)) {
            return z;
        }
    }
}

fn site_is_generic<F: Field>(p: &QkzParams<F>, w: &F) -> bool {
    let w2 = w.mul_ref(w);
    (-6..=6).all(|k| {
        let sk = p.sp(k);
        *w != sk && *w != -sk.clone() && w2 != sk && w2 != -sk
    })
}
