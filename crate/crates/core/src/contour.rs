//! The u-variable contour integrals for ψ_N, S_N and |TSASM(2N+1)|.
//!
//! Each integrand is a polynomial P(u_1..u_n) divided by monomials (and, for
//! S_N and the count, by ∏_k (1 − u_1⋯u_k)). The integrals are therefore
//! coefficient reads of P: the geometric expansion of ∏_k 1/(1 − u_1⋯u_k)
//! contributes u_j^{d_j} for every non-increasing d_1 ≥ … ≥ d_n ≥ 0.
//! P is expanded once, densely, with each u_k truncated at the largest
//! exponent any read can touch.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::arith::Ring;
use crate::error::{usage, Result};
use crate::shape::ChainShape;
use crate::IntPoly;

/// Strictly increasing 1-based positions of the down spins.
pub type Tuple = Vec<usize>;

/// Dense polynomial in u_1..u_n with exponent of u_k in `0..=caps[k]`.
struct Dense<R> {
    caps: Vec<usize>,
    strides: Vec<usize>,
    data: Vec<R>,
}

impl<R: Ring> Dense<R> {
    fn one(caps: Vec<usize>) -> Self {
        let mut strides = Vec::with_capacity(caps.len());
        let mut size = 1usize;
        for &c in &caps {
            strides.push(size);
            size *= c + 1;
        }
        let mut data = vec![R::zero(); size];
        data[0] = R::one();
        Dense {
            caps,
            strides,
            data,
        }
    }

    fn index(&self, e: &[usize]) -> Option<usize> {
        let mut idx = 0;
        for (k, &x) in e.iter().enumerate() {
            if x > self.caps[k] {
                return None;
            }
            idx += x * self.strides[k];
        }
        Some(idx)
    }

    fn get(&self, e: &[usize]) -> R {
        self.index(e)
            .map(|i| self.data[i].clone())
            .unwrap_or_else(R::zero)
    }

    /// Multiplies by `Σ c · ∏ u_var^exp`, dropping anything above the caps.
    fn mul_factor(&mut self, terms: &[(Vec<(usize, usize)>, R)]) {
        let mut out = vec![R::zero(); self.data.len()];
        let n = self.caps.len();
        let mut e = vec![0usize; n];
        for idx in 0..self.data.len() {
            if idx > 0 {
                // odometer increment of e in step with idx
                for k in 0..n {
                    if e[k] < self.caps[k] {
                        e[k] += 1;
                        break;
                    }
                    e[k] = 0;
                }
            }
            let a = &self.data[idx];
            if a.is_zero() {
                continue;
            }
            'term: for (mono, c) in terms {
                let mut target = idx;
                for &(var, exp) in mono {
                    if e[var] + exp > self.caps[var] {
                        continue 'term;
                    }
                    target += exp * self.strides[var];
                }
                out[target].add_mul(a, c);
            }
        }
        self.data = out;
    }
}

/// Coefficients of the integrand polynomial P.
///
/// The linear factor is `(lin.0·u_k + lin.1)` (that is `u_k + x` up to scale)
/// and is absent for the counting integral.
struct Integrand<R> {
    lin: Option<(R, R)>,
    /// `(1, τ)` up to scale: factors read `(τ.0 + τ.1·u + τ.0·u²)` etc.
    tau: (R, R),
}

impl<R: Ring> Integrand<R> {
    fn expand(&self, shape: ChainShape, caps: Vec<usize>) -> Dense<R> {
        let n = shape.n;
        let mut p = Dense::one(caps);
        let one = R::one();
        let neg = -R::one();
        let (t0, t1) = (&self.tau.0, &self.tau.1);
        for k in 0..n {
            if let Some((a, b)) = &self.lin {
                p.mul_factor(&[(vec![(k, 1)], a.clone()), (vec![], b.clone())]);
            }
            if shape.eps == 1 {
                p.mul_factor(&[
                    (vec![], t0.clone()),
                    (vec![(k, 1)], t1.clone()),
                    (vec![(k, 2)], t0.clone()),
                ]);
            }
        }
        for i in 0..n {
            for j in i..n {
                let uu = if i == j {
                    vec![(i, 2)]
                } else {
                    vec![(i, 1), (j, 1)]
                };
                p.mul_factor(&[(vec![], one.clone()), (uu, neg.clone())]);
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                p.mul_factor(&[(vec![(j, 1)], one.clone()), (vec![(i, 1)], neg.clone())]);
                p.mul_factor(&[
                    (vec![], t0.clone()),
                    (vec![(j, 1)], t1.clone()),
                    (vec![(i, 1), (j, 1)], t0.clone()),
                ]);
                p.mul_factor(&[
                    (vec![], t1.clone()),
                    (vec![(i, 1)], t0.clone()),
                    (vec![(j, 1)], t0.clone()),
                ]);
            }
        }
        p
    }

    /// Number of factors carrying the τ scale, i.e. the power of `tau.0`
    /// multiplying the true integrand.
    fn tau_factor_count(shape: ChainShape) -> usize {
        shape.n * shape.eps + shape.n * (shape.n.saturating_sub(1))
    }
}

/// All strictly increasing `k`-tuples from `1..=m`, lexicographic.
pub fn tuples(m: usize, k: usize) -> Vec<Tuple> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Tuple, out: &mut Vec<Tuple>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for a in start..=m {
            if m - a + 1 < k - cur.len() {
                break;
            }
            cur.push(a);
            rec(a + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, m, k, &mut Vec::new(), &mut out);
    out
}

/// `E_k = n' + k − 1 − shift` for k = 1..n.
fn sum_exponents(shape: ChainShape, shift: usize) -> Vec<usize> {
    (1..=shape.n).map(|k| shape.n_prime + k - 1 - shift).collect()
}

/// Σ_{d non-increasing, d ≤ E} coeff(P, E − d).
fn geometric_read<R: Ring>(p: &Dense<R>, e: &[usize]) -> R {
    fn rec<R: Ring>(
        p: &Dense<R>,
        e: &[usize],
        k: usize,
        bound: usize,
        c: &mut Vec<usize>,
        acc: &mut R,
    ) {
        if k == e.len() {
            *acc = std::mem::replace(acc, R::zero()) + p.get(c);
            return;
        }
        for d in 0..=bound.min(e[k]) {
            c.push(e[k] - d);
            rec(p, e, k + 1, d, c, acc);
            c.pop();
        }
    }
    let mut acc = R::zero();
    rec(p, e, 0, usize::MAX, &mut Vec::new(), &mut acc);
    acc
}

fn psi_generic<R: Ring>(shape: ChainShape, integrand: &Integrand<R>) -> BTreeMap<Tuple, R> {
    let caps = sum_exponents(shape, 0);
    let p = integrand.expand(shape, caps);
    let mut out = BTreeMap::new();
    for a in tuples(shape.big_n, shape.n) {
        // u_k carries the exponent N − a_{n+1−k}
        let m: Vec<usize> = (0..shape.n).map(|k| shape.big_n - a[shape.n - 1 - k]).collect();
        out.insert(a, p.get(&m));
    }
    out
}

fn symbolic_integrand(with_x: bool) -> Integrand<IntPoly> {
    Integrand {
        lin: with_x.then(|| (IntPoly::one(), IntPoly::var("x"))),
        tau: (IntPoly::one(), IntPoly::var("tau")),
    }
}

fn normalize_xtau(p: IntPoly) -> IntPoly {
    p.with_vars(&["x".to_string(), "tau".to_string()])
        .expect("only x and tau occur")
}

/// The components of |ψ_N⟩ as integer polynomials in x and τ.
#[derive(Clone, Debug, PartialEq)]
pub struct ComponentTable {
    pub shape: ChainShape,
    pub entries: BTreeMap<Tuple, IntPoly>,
}

impl ComponentTable {
    pub fn sum(&self) -> IntPoly {
        self.entries
            .values()
            .fold(IntPoly::zero_in(&["x", "tau"]), |acc, p| acc + p.clone())
    }

    pub fn get(&self, a: &[usize]) -> Option<&IntPoly> {
        self.entries.get(a)
    }

    /// `{"N":…,"components":[{"a":[…],"poly":{…}},…]}`, tuples in increasing order.
    pub fn to_json(&self) -> String {
        let components: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|(a, p)| serde_json::json!({ "a": a, "poly": p }))
            .collect();
        serde_json::json!({ "N": self.shape.big_n, "components": components }).to_string()
    }

    /// One line `a_1 … a_n: polynomial` per component.
    pub fn to_text(&self) -> String {
        self.entries
            .iter()
            .map(|(a, p)| {
                let a: Vec<String> = a.iter().map(|k| k.to_string()).collect();
                format!("{}: {}\n", a.join(" "), p)
            })
            .collect()
    }
}

pub fn psi_components(big_n: usize) -> ComponentTable {
    let shape = ChainShape::new(big_n);
    let entries = psi_generic(shape, &symbolic_integrand(true))
        .into_iter()
        .map(|(a, p)| (a, normalize_xtau(p)))
        .collect();
    ComponentTable { shape, entries }
}

pub fn sum_components(big_n: usize) -> IntPoly {
    let shape = ChainShape::new(big_n);
    let p = symbolic_integrand(true).expand(shape, sum_exponents(shape, 0));
    normalize_xtau(geometric_read(&p, &sum_exponents(shape, 0)))
}

/// |TSASM(2N+1)| from its contour-integral formula.
pub fn tsasm_count_integral(big_n: usize) -> BigInt {
    let shape = ChainShape::new(big_n);
    if shape.n == 0 {
        return BigInt::one();
    }
    let integrand = Integrand {
        lin: None,
        tau: (BigInt::one(), BigInt::one()),
    };
    let e = sum_exponents(shape, 1);
    let p = integrand.expand(shape, e.clone());
    geometric_read(&p, &e)
}

/// Integer data for a rational point: (lin, tau) scaled to integers, and the
/// overall denominator the scaled integrand carries.
fn rational_integrand(
    shape: ChainShape,
    x: &BigRational,
    tau: &BigRational,
) -> (Integrand<BigInt>, BigInt) {
    let (tn, td) = (tau.numer().clone(), tau.denom().clone());
    let (xn, xd) = (x.numer().clone(), x.denom().clone());
    let scale = Ring::powi(&xd, shape.n as i64).expect("nonnegative")
        * Ring::powi(&td, Integrand::<BigInt>::tau_factor_count(shape) as i64).expect("nonnegative");
    (
        Integrand {
            lin: Some((xd, xn)),
            tau: (td, tn),
        },
        scale,
    )
}

/// ψ_N components evaluated at rational `(x, τ)`, computed in integer arithmetic.
pub fn psi_components_at(
    big_n: usize,
    x: &BigRational,
    tau: &BigRational,
) -> BTreeMap<Tuple, BigRational> {
    let shape = ChainShape::new(big_n);
    let (integrand, scale) = rational_integrand(shape, x, tau);
    psi_generic(shape, &integrand)
        .into_iter()
        .map(|(a, v)| (a, BigRational::new(v, scale.clone())))
        .collect()
}

/// S_N at rational `(x, τ)`.
pub fn sum_components_at(big_n: usize, x: &BigRational, tau: &BigRational) -> BigRational {
    let shape = ChainShape::new(big_n);
    let (integrand, scale) = rational_integrand(shape, x, tau);
    let e = sum_exponents(shape, 0);
    let p = integrand.expand(shape, e.clone());
    BigRational::new(geometric_read(&p, &e), scale)
}

/// The rows `N,order,count` of a count table.
pub fn count_table_csv(rows: &[(usize, BigInt)]) -> String {
    let mut s = String::from("N,order,count\n");
    for (big_n, c) in rows {
        s.push_str(&format!("{},{},{}\n", big_n, 2 * big_n + 1, c));
    }
    s
}

/// True iff every coefficient is a nonnegative integer.
pub fn has_nonnegative_coefficients(p: &IntPoly) -> bool {
    p.terms().all(|(_, c)| !c.is_negative())
}

/// Parses a chain length from an order `2N+1`.
pub fn chain_length_of_order(order: usize) -> Result<usize> {
    if order.is_even() || order == 0 {
        return Err(usage(format!("order must be odd and positive, got {order}")));
    }
    Ok((order - 1) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn tuple_enumeration() {
        assert_eq!(tuples(4, 2).len(), 6);
        assert_eq!(tuples(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(tuples(3, 1), vec![vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn small_cases() {
        assert_eq!(sum_components(0), c(1));
        assert_eq!(sum_components(1), c(1));
        assert_eq!(sum_components(2), c(1) + x());
        assert_eq!(sum_components(3), (c(1) + x()) * (c(1) + t()));
        let psi2 = psi_components(2);
        assert_eq!(psi2.get(&[1]).unwrap(), &c(1));
        assert_eq!(psi2.get(&[2]).unwrap(), &x());
        let psi1 = psi_components(1);
        assert_eq!(psi1.entries.len(), 1);
        assert_eq!(psi1.get(&[]).unwrap(), &c(1));
    }

    #[test]
    fn counts_small() {
        let got: Vec<BigInt> = (0..4).map(tsasm_count_integral).collect();
        assert_eq!(got, [1, 1, 1, 2].map(BigInt::from));
    }

    #[test]
    fn rational_evaluation_matches_symbolic() {
        let x0 = BigRational::new(7.into(), 5.into());
        let t0 = BigRational::new((-3).into(), 4.into());
        for big_n in 0..7 {
            let table = psi_components(big_n);
            let num = psi_components_at(big_n, &x0, &t0);
            for (a, p) in &table.entries {
                let v = p
                    .map_coeffs(|c| BigRational::from_integer(c.clone()))
                    .eval_at(&[("x", x0.clone()), ("tau", t0.clone())])
                    .unwrap();
                assert_eq!(num[a], v, "N={big_n} a={a:?}");
            }
            let s = sum_components(big_n)
                .map_coeffs(|c| BigRational::from_integer(c.clone()))
                .eval_at(&[("x", x0.clone()), ("tau", t0.clone())])
                .unwrap();
            assert_eq!(sum_components_at(big_n, &x0, &t0), s);
        }
    }

    #[test]
    fn csv_layout() {
        let s = count_table_csv(&[(0, 1.into()), (3, 2.into())]);
        assert_eq!(s, "N,order,count\n0,1,1\n3,7,2\n");
        assert_eq!(chain_length_of_order(13).unwrap(), 6);
        assert!(chain_length_of_order(12).is_err());
    }
}
