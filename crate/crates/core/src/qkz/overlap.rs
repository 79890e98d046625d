//! The generalised sum of components `Z_N` and its rescaling `Y_N`.

use super::psi::{cover, psi_vector, residue_collisions};
use super::{chi, phi, QkzParams};
use crate::arith::interp::eval_on_curve;
use crate::arith::{bracket, Field};
use crate::error::{domain, usage, Result};
use crate::spin::SpinVector;

/// `(w_1, w̄_1, …, w_n, w̄_n)`, followed by `1` for odd N.
pub fn half_specialise<F: Field>(w: &[F], odd: bool) -> Result<Vec<F>> {
    let mut z = Vec::with_capacity(2 * w.len() + 1);
    for v in w {
        z.push(v.clone());
        z.push(F::one().checked_div(v)?);
    }
    if odd {
        z.push(F::one());
    }
    Ok(z)
}

/// `⟨χ(w_1)| ⊗ … ⊗ ⟨χ(w_n)|`, followed by `⟨φ|` for odd N.
pub fn chi_covector<F: Field>(p: &QkzParams<F>, w: &[F], odd: bool) -> Result<SpinVector<F>> {
    let mut c = SpinVector::basis(0, 0);
    for v in w {
        c = c.tensor(&chi(p, v)?);
    }
    if odd {
        c = c.tensor(&phi());
    }
    Ok(c)
}

fn n_of<T>(big_n: usize, w: &[T]) -> Result<()> {
    if w.len() != big_n / 2 {
        return Err(usage(format!("N={big_n} takes {} w-values", big_n / 2)));
    }
    Ok(())
}

fn direct_z<F: Field>(p: &QkzParams<F>, big_n: usize, w: &[F]) -> Result<F> {
    let odd = big_n % 2 == 1;
    let z = half_specialise(w, odd)?;
    if !residue_collisions(p, &z).is_empty() {
        return Err(domain("half-specialised point is a residue collision"));
    }
    let psi = psi_vector(p, &z)?;
    Ok(chi_covector(p, w, odd)?.dot(&psi))
}

/// w-indices that must move to resolve the residue collisions of the
/// half-specialised point.
fn colliding_w<F: Field>(p: &QkzParams<F>, big_n: usize, w: &[F]) -> Result<Vec<usize>> {
    let z = half_specialise(w, big_n % 2 == 1)?;
    let n = w.len();
    let mut pairs = Vec::new();
    for (l, j) in residue_collisions(p, &z) {
        // the trailing z_N = 1 of odd N is fixed; move its partner
        let (a, b) = (l / 2, j / 2);
        match (a < n, b < n) {
            (true, true) => pairs.push((a, b)),
            (true, false) => pairs.push((a, a)),
            (false, true) => pairs.push((b, b)),
            (false, false) => {}
        }
    }
    let mut forced: Vec<usize> = pairs.iter().filter(|(a, b)| a == b).map(|p| p.0).collect();
    let rest: Vec<(usize, usize)> = pairs
        .into_iter()
        .filter(|(a, b)| a != b && !forced.contains(a) && !forced.contains(b))
        .collect();
    forced.extend(cover(&rest));
    forced.sort_unstable();
    forced.dedup();
    Ok(forced)
}

/// `Z_N(w_1, …, w_n)`; `Z_0 = Z_1 = 1`.
///
/// Points where the half-specialised residue formula is singular are handled
/// by moving the offending `w_i` along `w_i λ^{e_i}`: `Z_N` is an odd centred
/// Laurent polynomial of width at most `2(2N−3)` in each `w_i`.
pub fn gen_sum_z<F: Field>(p: &QkzParams<F>, big_n: usize, w: &[F]) -> Result<F> {
    n_of::<F>(big_n, w)?;
    if big_n < 2 {
        return Ok(F::one());
    }
    if w.iter().any(|v| v.is_zero()) {
        return Err(domain("w-values must be nonzero"));
    }
    let moving = colliding_w(p, big_n, w)?;
    if moving.is_empty() {
        return direct_z(p, big_n, w);
    }
    let mut exps = vec![0i64; w.len()];
    for (e, i) in moving.into_iter().enumerate() {
        exps[i] = e as i64 + 1;
    }
    let reach = (2 * big_n as i64 - 3) * exps.iter().sum::<i64>();
    let v = eval_on_curve(w, &exps, -reach, reach, 2, |pt| {
        Ok(vec![direct_z(p, big_n, pt)?])
    })?;
    Ok(v.into_iter().next().expect("one output"))
}

/// `∏[q̄^{1/2} w_i]`, times `∏[q w_i][q w̄_i]` for odd N.
pub fn y_divisor<F: Field>(p: &QkzParams<F>, big_n: usize, w: &[F]) -> Result<F> {
    let sb = p.sp(-1);
    let mut d = F::one();
    for v in w {
        d = d * bracket(&sb.mul_ref(v))?;
        if big_n % 2 == 1 {
            d = d * bracket(&p.q.mul_ref(v))? * bracket(&p.q.checked_div(v)?)?;
        }
    }
    Ok(d)
}

/// `Y_N = Z_N / y_divisor`; a vanishing divisor is a domain error.
pub fn rescaled_y<F: Field>(p: &QkzParams<F>, big_n: usize, w: &[F]) -> Result<F> {
    let d = y_divisor(p, big_n, w)?;
    if d.is_zero() {
        return Err(domain("Y divisor vanishes at this point"));
    }
    gen_sum_z(p, big_n, w)?.checked_div(&d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::brace;
    use crate::Gq;

    fn params() -> QkzParams<Gq> {
        QkzParams::new(Gq::from_ints(3, 2, 1, 3), Gq::from_ints(2, 1, -1, 1)).unwrap()
    }

    #[test]
    fn z2_and_z3_closed_forms() {
        let p = params();
        let w = Gq::from_ints(1, 2, 2, 1);
        let sb = p.sp(-1);
        let base = bracket(&(sb * w.clone())).unwrap() * brace(&(p.s.clone() * p.beta.clone())).unwrap();
        assert_eq!(gen_sum_z(&p, 2, &[w.clone()]).unwrap(), base);
        let z3 = base
            * bracket(&(p.q.clone() * w.clone())).unwrap()
            * bracket(&(p.q.clone() / w.clone())).unwrap()
            * brace(&p.sp(3)).unwrap()
            / brace(&p.s).unwrap();
        assert_eq!(gen_sum_z(&p, 3, &[w]).unwrap(), z3);
    }

    #[test]
    fn conventions() {
        let p = params();
        assert_eq!(gen_sum_z::<Gq>(&p, 0, &[]).unwrap(), Gq::from(1));
        assert_eq!(rescaled_y::<Gq>(&p, 1, &[]).unwrap(), Gq::from(1));
        assert!(gen_sum_z(&p, 4, &[Gq::from(2)]).is_err());
    }

    #[test]
    fn special_zero_through_the_robust_path() {
        let p = params();
        // w = q^{1/2} makes w² = q, a residue collision
        assert_eq!(gen_sum_z(&p, 2, &[p.s.clone()]).unwrap(), Gq::from(0));
        let qb = p.qp(-1);
        assert_eq!(gen_sum_z(&p, 3, &[qb]).unwrap(), Gq::from(0));
    }
}
