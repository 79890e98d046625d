//! Exact reconstruction of a univariate Laurent polynomial from samples.

use super::scalar::Field;
use crate::error::{domain, internal, Result};

/// `Σ_k coeffs[k] · λ^(lo + step·k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSeries<F> {
    pub lo: i64,
    pub step: i64,
    pub coeffs: Vec<F>,
}

impl<F: Field> LaurentSeries<F> {
    pub fn eval(&self, lambda: &F) -> Result<F> {
        let y = lambda.powi(self.step)?;
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(&y) + c.clone();
        }
        Ok(acc.mul_ref(&lambda.powi(self.lo)?))
    }

    /// Smallest and largest exponent with a nonzero coefficient.
    pub fn support(&self) -> Option<(i64, i64)> {
        let first = self.coeffs.iter().position(|c| !c.is_zero())?;
        let last = self.coeffs.iter().rposition(|c| !c.is_zero())?;
        Some((
            self.lo + self.step * first as i64,
            self.lo + self.step * last as i64,
        ))
    }

    pub fn degree_width(&self) -> Option<i64> {
        self.support().map(|(a, b)| b - a)
    }

    pub fn is_centred(&self) -> bool {
        self.support().map_or(true, |(a, b)| a + b == 0)
    }

    pub fn coeff(&self, k: i64) -> F {
        let off = k - self.lo;
        if off < 0 || off % self.step != 0 {
            return F::zero();
        }
        self.coeffs
            .get((off / self.step) as usize)
            .cloned()
            .unwrap_or_else(F::zero)
    }
}

/// Interpolates `f(λ) = Σ c_k λ^k` over exponents `lo, lo+step, …, hi` from
/// `(λ, f(λ))` samples. Exactly `(hi-lo)/step + 1` samples determine the
/// coefficients; any further samples are used to confirm the fit, and a
/// mismatch is reported as a domain error (the assumed exponent range was
/// too small).
pub fn interpolate<F: Field>(
    lo: i64,
    hi: i64,
    step: i64,
    samples: &[(F, F)],
) -> Result<LaurentSeries<F>> {
    if step <= 0 || hi < lo || (hi - lo) % step != 0 {
        return Err(internal(format!("bad exponent range {lo}..={hi} step {step}")));
    }
    let d = ((hi - lo) / step) as usize;
    if samples.len() < d + 1 {
        return Err(internal(format!(
            "need {} samples, got {}",
            d + 1,
            samples.len()
        )));
    }
    let (fit, extra) = samples.split_at(d + 1);
    let mut ys = Vec::with_capacity(d + 1);
    let mut dd = Vec::with_capacity(d + 1);
    for (lambda, value) in fit {
        ys.push(lambda.powi(step)?);
        dd.push(value.mul_ref(&lambda.powi(-lo)?));
    }
    // divided differences in place
    for level in 1..=d {
        for k in (level..=d).rev() {
            let den = ys[k].clone() - ys[k - level].clone();
            if den.is_zero() {
                return Err(domain("interpolation nodes collide"));
            }
            dd[k] = (dd[k].clone() - dd[k - 1].clone()) / den;
        }
    }
    // Newton form to monomial coefficients
    let mut coeffs = vec![dd[d].clone()];
    for k in (0..d).rev() {
        let mut next = vec![F::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] = next[j + 1].clone() + c.clone();
            next[j] = next[j].clone() - c.mul_ref(&ys[k]);
        }
        next[0] = next[0].clone() + dd[k].clone();
        coeffs = next;
    }
    let series = LaurentSeries { lo, step, coeffs };
    for (lambda, value) in extra {
        if series.eval(lambda)? != *value {
            return Err(domain(format!(
                "samples are not a Laurent polynomial supported on {lo}..={hi}"
            )));
        }
    }
    Ok(series)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::scalar::Ring;
    use num_rational::BigRational;
    use num_traits::Zero;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn recovers_centred_polynomial() {
        // f = 3λ^-3 - λ + 5λ^3
        let f = |l: &BigRational| {
            q(3) * l.powi(-3).unwrap() - l.clone() + q(5) * l.powi(3).unwrap()
        };
        let samples: Vec<_> = (2..8).map(|k| (q(k), f(&q(k)))).collect();
        let s = interpolate(-3, 3, 2, &samples[..4]).unwrap();
        assert_eq!(s.support(), Some((-3, 3)));
        assert!(s.is_centred());
        assert_eq!(s.coeff(-1), q(0));
        assert_eq!(s.coeff(1), q(-1));
        assert_eq!(s.eval(&q(11)).unwrap(), f(&q(11)));
        // with slack the extra coefficients vanish
        let wide: Vec<_> = (2..14).map(|k| (q(k), f(&q(k)))).collect();
        let s = interpolate(-5, 5, 1, &wide).unwrap();
        assert_eq!(s.degree_width(), Some(6));
        assert!(s.coeff(4).is_zero());
    }

    #[test]
    fn detects_range_too_small() {
        let samples: Vec<_> = (2..7).map(|k| (q(k), q(k).powi(4).unwrap())).collect();
        assert!(interpolate(0, 2, 1, &samples).is_err());
    }
}

/// Evaluates a vector of Laurent polynomials at `base` when the direct
/// evaluation `f(base)` is unavailable (typically a removable singularity of
/// the formula used by `f`).
///
/// Coordinate `k` is moved along `x_k = base_k·λ^{exps[k]}`; the composite is a
/// Laurent polynomial in λ supported on `lo..=hi` in steps of `step`. It is
/// sampled at λ = 2, 3, … (skipping nodes where `f` fails), reconstructed with
/// two confirming extra samples, and evaluated at λ = 1.
pub fn eval_on_curve<F, G>(
    base: &[F],
    exps: &[i64],
    lo: i64,
    hi: i64,
    step: i64,
    f: G,
) -> Result<Vec<F>>
where
    F: Field,
    G: Fn(&[F]) -> Result<Vec<F>> + Sync,
{
    let needed = ((hi - lo) / step) as usize + 3;
    let mut nodes: Vec<(F, Vec<F>)> = Vec::with_capacity(needed);
    let mut k = 2i64;
    let mut misses = 0usize;
    while nodes.len() < needed {
        let lambda = F::from_i64(k);
        k += 1;
        let mut point = Vec::with_capacity(base.len());
        for (b, &e) in base.iter().zip(exps) {
            point.push(if e == 0 {
                b.clone()
            } else {
                b.mul_ref(&lambda.powi(e)?)
            });
        }
        match f(&point) {
            Ok(v) => nodes.push((lambda, v)),
            Err(crate::error::Error::Domain(_)) => {
                misses += 1;
                if misses > needed + 16 {
                    return Err(domain("too many degenerate interpolation nodes"));
                }
            }
            Err(e) => return Err(e),
        }
    }
    let width = nodes[0].1.len();
    let one = F::one();
    let mut out = Vec::with_capacity(width);
    for c in 0..width {
        let samples: Vec<(F, F)> = nodes
            .iter()
            .map(|(l, v)| (l.clone(), v[c].clone()))
            .collect();
        out.push(interpolate(lo, hi, step, &samples)?.eval(&one)?);
    }
    Ok(out)
}
