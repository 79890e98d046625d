//! R- and K-matrices of the six-vertex model, the operator 𝕄 and the overlap ℤ_n.

use crate::arith::{brace, bracket, Field};
use crate::error::{domain, usage, Result};
use crate::spin::{mask_of_word, permutation, LocalOp, OpProduct, Spin, SpinVector};

use super::{enumerate_configs, sum_weights, VertexWeights};

/// `s = q^{1/2}`, `q`, the corner weight `t` and the covector parameter `b`.
#[derive(Clone, Debug, PartialEq)]
pub struct SvParams<F> {
    pub s: F,
    pub q: F,
    pub t: F,
    pub b: F,
}

impl<F: Field> SvParams<F> {
    pub fn new(s: F, t: F, b: F) -> Result<Self> {
        if s.is_zero() || b.is_zero() {
            return Err(domain("s and b must be nonzero"));
        }
        let q = s.mul_ref(&s);
        let q2 = q.mul_ref(&q);
        if q2.mul_ref(&q2) == F::one() {
            return Err(domain("q^4 = 1 is excluded"));
        }
        Ok(SvParams { s, q, t, b })
    }

    pub fn qp(&self, k: i64) -> F {
        self.q.powi(k).expect("q is nonzero")
    }

    pub fn sp(&self, k: i64) -> F {
        self.s.powi(k).expect("s is nonzero")
    }
}

/// `ℝ(z)`.
pub fn r_matrix<F: Field>(p: &SvParams<F>, z: &F) -> Result<LocalOp<F>> {
    let a = bracket(&p.q.checked_div(z)?)?;
    let b = bracket(&p.q.mul_ref(z))?;
    let c = -bracket(&p.q.mul_ref(&p.q))?;
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

/// `Ř(z) = −P ℝ(−q̄z)`.
pub fn r_check<F: Field>(p: &SvParams<F>, z: &F) -> Result<LocalOp<F>> {
    let arg = -z.checked_div(&p.q)?;
    Ok(permutation().compose(&r_matrix(p, &arg)?).scale(&-F::one()))
}

/// Off-diagonal entry `{q^{1/2}z}/{q^{1/2}}` of `𝕂(z)`.
fn kappa<F: Field>(p: &SvParams<F>, z: &F) -> Result<F> {
    brace(&p.s.mul_ref(z))?.checked_div(&brace(&p.s)?)
}

/// `𝕂(z)`.
pub fn k_matrix<F: Field>(p: &SvParams<F>, z: &F) -> Result<LocalOp<F>> {
    let k = kappa(p, z)?;
    Ok(LocalOp::new(1, vec![p.t.clone(), k.clone(), k, p.t.clone()]))
}

/// `det 𝕂(z) = t² − ({q^{1/2}z}/{q^{1/2}})²`.
pub fn det_k<F: Field>(p: &SvParams<F>, z: &F) -> Result<F> {
    let k = kappa(p, z)?;
    Ok(p.t.mul_ref(&p.t) - k.mul_ref(&k))
}

/// `𝕄(z_1, …, z_{2n}) = ∏_j 𝕂_j(z_j) ∏_{k>j} ℝ_{j,k}(z_j z_k)`.
pub fn m_operator<F: Field>(p: &SvParams<F>, z: &[F]) -> Result<OpProduct<F>> {
    let m = z.len();
    let mut op = OpProduct::new();
    for j in 1..=m {
        op = op.then(k_matrix(p, &z[j - 1])?, &[j]);
        for k in j + 1..=m {
            op = op.then(r_matrix(p, &z[j - 1].mul_ref(&z[k - 1]))?, &[j, k]);
        }
    }
    Ok(op)
}

/// `𝕄(z)|↓…↓⟩`, whose components are the partition functions for every boundary word.
pub fn m_on_all_down<F: Field>(p: &SvParams<F>, z: &[F]) -> Result<SpinVector<F>> {
    let m = z.len();
    let down = SpinVector::basis(m, (1u64 << m) - 1);
    Ok(m_operator(p, z)?.apply(&down))
}

/// `⟨α|𝕄(z)|↓…↓⟩`.
pub fn partition_algebraic<F: Field>(p: &SvParams<F>, alpha: &[Spin], z: &[F]) -> Result<F> {
    if alpha.len() != z.len() || alpha.is_empty() || alpha.len() % 2 != 0 {
        return Err(usage("need a boundary word and inhomogeneities of equal even length"));
    }
    Ok(m_on_all_down(p, z)?.get(mask_of_word(alpha)))
}

/// `⟨ν(w)| = [q̄bw]⟨↑↓| + [qbw̄]⟨↓↑|`.
pub fn nu<F: Field>(p: &SvParams<F>, w: &F) -> Result<SpinVector<F>> {
    let (ud, du) = nu_coeffs(p, w)?;
    let mut v = SpinVector::zero(2);
    v.add(0b01, ud);
    v.add(0b10, du);
    Ok(v)
}

fn nu_coeffs<F: Field>(p: &SvParams<F>, w: &F) -> Result<(F, F)> {
    let ud = bracket(&p.b.mul_ref(w).checked_div(&p.q)?)?;
    let du = bracket(&p.q.mul_ref(&p.b).checked_div(w)?)?;
    Ok((ud, du))
}

/// `(w_1, w̄_1, …, w_n, w̄_n)`.
pub fn half_specialise<F: Field>(w: &[F]) -> Result<Vec<F>> {
    let mut z = Vec::with_capacity(2 * w.len());
    for v in w {
        z.push(v.clone());
        z.push(F::one().checked_div(v)?);
    }
    Ok(z)
}

/// `ℤ_n(w) = ⟨ν(w_1)⊗…⊗ν(w_n)|𝕄(w_1, w̄_1, …)|↓…↓⟩`, with `ℤ_0 = 1`.
pub fn overlap_zz<F: Field>(p: &SvParams<F>, w: &[F]) -> Result<F> {
    if w.is_empty() {
        return Ok(F::one());
    }
    let v = m_on_all_down(p, &half_specialise(w)?)?;
    let mut cov = SpinVector::basis(0, 0);
    for wi in w {
        cov = cov.tensor(&nu(p, wi)?);
    }
    Ok(cov.dot(&v))
}

/// `ℤ_n` as the sum over the `2^n` boundary words with `α_{2i−1}α_{2i} ∈ {↑↓, ↓↑}`,
/// each partition function computed by enumeration.
pub fn overlap_zz_expanded<F: Field>(p: &SvParams<F>, w: &[F]) -> Result<F> {
    let n = w.len();
    if n == 0 {
        return Ok(F::one());
    }
    let z = half_specialise(w)?;
    let wts = VertexWeights::at(p, &z)?;
    let coeffs: Vec<(F, F)> = w.iter().map(|v| nu_coeffs(p, v)).collect::<Result<_>>()?;
    let mut total = F::zero();
    for bits in 0..1u32 << n {
        let mut alpha = Vec::with_capacity(2 * n);
        let mut c = F::one();
        for (i, (ud, du)) in coeffs.iter().enumerate() {
            if bits >> (n - 1 - i) & 1 == 0 {
                alpha.extend([Spin::Up, Spin::Down]);
                c = c.mul_ref(ud);
            } else {
                alpha.extend([Spin::Down, Spin::Up]);
                c = c.mul_ref(du);
            }
        }
        let zc = sum_weights(&enumerate_configs(&alpha)?, &wts);
        total = total + c.mul_ref(&zc);
    }
    Ok(total)
}

/// `(−1)^{n(n+1)/2} / ([q^{1/2}]^n ∏[q²w̄_i²])`.
pub fn yy_factor<F: Field>(p: &SvParams<F>, w: &[F]) -> Result<F> {
    let n = w.len();
    let mut den = bracket(&p.s)?.powi(n as i64)?;
    for v in w {
        den = den.mul_ref(&bracket(&p.q.mul_ref(&p.q).checked_div(&v.mul_ref(v))?)?);
    }
    if den.is_zero() {
        return Err(domain("[q^2 w^-2] or [q^1/2] vanishes"));
    }
    let sign = if (n * (n + 1) / 2) % 2 == 0 { F::one() } else { -F::one() };
    sign.checked_div(&den)
}

/// `𝕐_n(w)`.
pub fn rescaled_yy<F: Field>(p: &SvParams<F>, w: &[F]) -> Result<F> {
    let f = yy_factor(p, w)?;
    Ok(f * overlap_zz(p, w)?)
}

/// `F(w) = −[q²]²[bw̄][bq̄w]{q^{1/2}w}{q^{3/2}w̄} det 𝕂(w̄)`.
pub fn f_big<F: Field>(p: &SvParams<F>, w: &F) -> Result<F> {
    let wb = F::one().checked_div(w)?;
    let bq2 = bracket(&p.q.mul_ref(&p.q))?;
    let v = bq2.mul_ref(&bq2)
        * bracket(&p.b.mul_ref(&wb))?
        * bracket(&p.b.mul_ref(w).checked_div(&p.q)?)?
        * brace(&p.s.mul_ref(w))?
        * brace(&p.sp(3).mul_ref(&wb))?
        * det_k(p, &wb)?;
    Ok(-v)
}
