//! `(Ψ_N)_a` by summing residues at `w_i = z_{j_i}`.
//!
//! Each `w_i` contour picks up the simple poles `z_j` with `j ≤ a_i`. The
//! integrand factorises into one-variable and two-variable pieces, so the
//! iterated residue is a sum over injective assignments `i ↦ j_i` of
//! `∏ single(a_i, j_i) · ∏_{i<k} pair(j_i, j_k)`.

use super::QkzParams;
use crate::arith::interp::eval_on_curve;
use crate::arith::{bracket, Field};
use crate::contour::tuples;
use crate::error::{domain, usage, Result};
use crate::shape::ChainShape;
use crate::spin::{mask_of_tuple, SpinVector};

/// Precomputed residue data at one point.
struct Residues<F> {
    big_n: usize,
    prefactor: F,
    // single[a-1][j-1] for j ≤ a
    single: Vec<Vec<F>>,
    // pair[j-1][k-1]
    pair: Vec<Vec<F>>,
}

fn nonzero<F: Field>(v: F, what: impl FnOnce() -> String) -> Result<F> {
    if v.is_zero() {
        Err(domain(what()))
    } else {
        Ok(v)
    }
}

impl<F: Field> Residues<F> {
    fn new(p: &QkzParams<F>, z: &[F]) -> Result<Self> {
        let big_n = z.len();
        let n = big_n / 2;
        if z.iter().any(|v| v.is_zero()) {
            return Err(domain("site values must be nonzero"));
        }
        let q = &p.q;
        let q2 = q.mul_ref(q);
        let ratio = |l: usize, j: usize| z[l].checked_div(&z[j]);
        let bq = bracket(q)?;

        let mut prefactor = (-bq.clone()).powi(n as i64)?;
        for j in 0..big_n {
            for i in 0..j {
                prefactor = prefactor
                    * bracket(&q.mul_ref(&ratio(j, i)?))?
                    * bracket(&q2.mul_ref(&z[i].mul_ref(&z[j])))?;
            }
        }

        // den1[l][j] = [z_l/z_j], den2 = [q z_l/z_j], den3 = [q² z_j z_l]
        let mut den1 = vec![vec![F::zero(); big_n]; big_n];
        let mut den2 = den1.clone();
        let mut den3 = den1.clone();
        for l in 0..big_n {
            for j in 0..big_n {
                let r = ratio(l, j)?;
                den1[l][j] = bracket(&r)?;
                den2[l][j] = bracket(&q.mul_ref(&r))?;
                den3[l][j] = bracket(&q2.mul_ref(&z[l].mul_ref(&z[j])))?;
            }
        }
        let mut base = Vec::with_capacity(big_n);
        for j in 0..big_n {
            let mut d = F::one();
            for l in 0..big_n {
                if l != j {
                    d = d * nonzero(den3[l][j].clone(), || {
                        format!("z{} z{} = ±q^-2", l + 1, j + 1)
                    })?;
                }
            }
            base.push((-bracket(&p.beta.mul_ref(&z[j]))?).checked_div(&d)?);
        }
        let mut single = Vec::with_capacity(big_n);
        for a in 0..big_n {
            let mut row = Vec::with_capacity(a + 1);
            for j in 0..=a {
                let mut d = F::one();
                for l in 0..=a {
                    if l != j {
                        d = d * nonzero(den1[l][j].clone(), || {
                            format!("z{} = ±z{}", l + 1, j + 1)
                        })?;
                    }
                }
                for l in a..big_n {
                    d = d * nonzero(den2[l][j].clone(), || {
                        format!("z{} = ±z{}/q", l + 1, j + 1)
                    })?;
                }
                row.push(base[j].checked_div(&d)?);
            }
            single.push(row);
        }
        let mut pair = vec![vec![F::zero(); big_n]; big_n];
        for j in 0..big_n {
            for k in 0..big_n {
                if j != k {
                    let r = ratio(k, j)?;
                    let m = z[j].mul_ref(&z[k]);
                    pair[j][k] = bracket(&q.mul_ref(&r))?
                        * den1[j][k].clone()
                        * bracket(&q.mul_ref(&m))?
                        * bracket(&q2.mul_ref(&m))?;
                }
            }
        }
        Ok(Residues {
            big_n,
            prefactor,
            single,
            pair,
        })
    }

    /// `∏_{j' ∈ S} pair(j', j)` for every used-set `S` with fewer than `n`
    /// elements and every `j ∉ S`, indexed by `S * N + j`.
    fn pair_products(&self) -> Vec<Option<F>> {
        let big_n = self.big_n;
        let n = big_n / 2;
        let mut out: Vec<Option<F>> = vec![None; (1usize << big_n) * big_n];
        for j in 0..big_n {
            out[j] = Some(F::one());
        }
        for mask in 1usize..1 << big_n {
            if mask.count_ones() as usize >= n {
                continue;
            }
            let low = mask.trailing_zeros() as usize;
            let rest = mask & (mask - 1);
            for j in 0..big_n {
                if mask >> j & 1 == 1 {
                    continue;
                }
                if let Some(prev) = &out[rest * big_n + j] {
                    out[mask * big_n + j] = Some(prev.mul_ref(&self.pair[low][j]));
                }
            }
        }
        out
    }

    /// One DP step: assigns the next integration variable, whose tuple entry is
    /// `a`, to a pole `j < a` not yet used.
    fn extend(&self, state: &[(usize, F)], a: usize, pp: &[Option<F>]) -> Vec<(usize, F)> {
        let big_n = self.big_n;
        let mut next: std::collections::BTreeMap<usize, F> = std::collections::BTreeMap::new();
        for (mask, val) in state {
            for j in 0..a {
                if mask >> j & 1 == 1 {
                    continue;
                }
                let s = &self.single[a - 1][j];
                if s.is_zero() {
                    continue;
                }
                let Some(pj) = &pp[mask * big_n + j] else {
                    continue;
                };
                let term = val.mul_ref(s).mul_ref(pj);
                let slot = next.entry(mask | 1 << j).or_insert_with(F::zero);
                *slot = std::mem::replace(slot, F::zero()) + term;
            }
        }
        next.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    fn finish(&self, state: &[(usize, F)]) -> F {
        let mut total = F::zero();
        for (_, v) in state {
            total = total + v.clone();
        }
        total * self.prefactor.clone()
    }

    fn component(&self, a: &[usize]) -> F {
        let pp = self.pair_products();
        let mut state = vec![(0usize, F::one())];
        for &ai in a {
            state = self.extend(&state, ai, &pp);
        }
        self.finish(&state)
    }

    /// All components, sharing DP states between tuples with a common prefix.
    fn all_components(&self) -> Vec<(Vec<usize>, F)> {
        fn rec<F: Field>(
            r: &Residues<F>,
            pp: &[Option<F>],
            prefix: &mut Vec<usize>,
            state: &[(usize, F)],
            out: &mut Vec<(Vec<usize>, F)>,
        ) {
            let n = r.big_n / 2;
            if prefix.len() == n {
                out.push((prefix.clone(), r.finish(state)));
                return;
            }
            let lo = prefix.last().map_or(1, |&a| a + 1);
            let hi = r.big_n - (n - prefix.len() - 1);
            for a in lo..=hi {
                let next = r.extend(state, a, pp);
                prefix.push(a);
                rec(r, pp, prefix, &next, out);
                prefix.pop();
            }
        }
        let pp = self.pair_products();
        let mut out = Vec::new();
        rec(self, &pp, &mut Vec::new(), &[(0usize, F::one())], &mut out);
        out
    }
}

fn check_tuple(big_n: usize, a: &[usize]) -> Result<()> {
    let n = big_n / 2;
    if a.len() != n {
        return Err(usage(format!("index tuple for N={big_n} must have {n} entries")));
    }
    if a.windows(2).any(|w| w[0] >= w[1]) || a.iter().any(|&k| k == 0 || k > big_n) {
        return Err(usage(format!("indices must satisfy 1 ≤ a1 < … < a{n} ≤ {big_n}")));
    }
    Ok(())
}

/// `(Ψ_N)_a` at a point where the residue formula has no vanishing denominator.
pub fn big_psi_component<F: Field>(p: &QkzParams<F>, z: &[F], a: &[usize]) -> Result<F> {
    if z.len() < 2 {
        return Err(usage("N ≥ 2 is required"));
    }
    check_tuple(z.len(), a)?;
    Ok(Residues::new(p, z)?.component(a))
}

/// `|Ψ_N(z)⟩` via residues; fails with a domain error on pole collisions.
/// `|Ψ_0⟩` is the empty-chain scalar 1 and `|Ψ_1⟩ = |↑⟩`.
pub fn psi_vector<F: Field>(p: &QkzParams<F>, z: &[F]) -> Result<SpinVector<F>> {
    let big_n = z.len();
    if big_n < 2 {
        return Ok(SpinVector::basis(big_n, 0));
    }
    let mut v = SpinVector::zero(big_n);
    for (a, c) in Residues::new(p, z)?.all_components() {
        v.add(mask_of_tuple(big_n, &a), c);
    }
    Ok(v)
}

/// Pairs `(l, j)`, 0-based with `l < j`, at which a residue denominator
/// vanishes: `z_j/z_l ∈ {±1, ±q, ±q̄}` or `z_l z_j = ±q^{-2}`.
pub fn residue_collisions<F: Field>(p: &QkzParams<F>, z: &[F]) -> Vec<(usize, usize)> {
    let qb = p.qp(-1);
    let ratios = [F::one(), -F::one(), p.q.clone(), -p.q.clone(), qb.clone(), -qb];
    let q2b = p.qp(-2);
    let products = [q2b.clone(), -q2b];
    let mut out = Vec::new();
    for j in 0..z.len() {
        for l in 0..j {
            let (Ok(r), m) = (z[j].checked_div(&z[l]), z[j].mul_ref(&z[l])) else {
                continue;
            };
            if ratios.contains(&r) || products.contains(&m) {
                out.push((l, j));
            }
        }
    }
    out
}

/// Greedy vertex cover of a set of index pairs, in order of first appearance.
pub(crate) fn cover(pairs: &[(usize, usize)]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    for &(l, j) in pairs {
        if !chosen.contains(&l) && !chosen.contains(&j) {
            let hits = |v: usize| pairs.iter().filter(|&&(a, b)| a == v || b == v).count();
            chosen.push(if hits(j) >= hits(l) { j } else { l });
        }
    }
    chosen.sort_unstable();
    chosen
}

/// Maximal degree width of a component of `|Ψ_N⟩` in any single `z_k`.
pub fn psi_width_bound(shape: ChainShape) -> i64 {
    let outside = 4 * (shape.n_prime as i64 - 1);
    let inside = 2 * (2 * shape.n as i64 - 1);
    outside.max(inside)
}

/// `|Ψ_N(z)⟩` at any point with nonzero sites, including points where the
/// residue formula is singular (e.g. `z_{i+1} = q̄ z_i`). There the colliding
/// sites are moved along `z_k λ^{e_k}`, the components are reconstructed as
/// Laurent polynomials in λ and evaluated at λ = 1.
pub fn psi_vector_robust<F: Field>(p: &QkzParams<F>, z: &[F]) -> Result<SpinVector<F>> {
    let collisions = residue_collisions(p, z);
    if collisions.is_empty() {
        return psi_vector(p, z);
    }
    let big_n = z.len();
    let mut exps = vec![0i64; big_n];
    for (e, k) in cover(&collisions).into_iter().enumerate() {
        exps[k] = e as i64 + 1;
    }
    let half = psi_width_bound(ChainShape::new(big_n)) / 2 * exps.iter().sum::<i64>();
    let keys = tuples(big_n, big_n / 2);
    let values = eval_on_curve(z, &exps, -half, half, 1, |pt| {
        if !residue_collisions(p, pt).is_empty() {
            return Err(domain("degenerate node"));
        }
        let comps = Residues::new(p, pt)?.all_components();
        debug_assert!(comps.iter().map(|c| &c.0).eq(keys.iter()));
        Ok(comps.into_iter().map(|c| c.1).collect())
    })?;
    let mut v = SpinVector::zero(big_n);
    for (a, c) in keys.iter().zip(values) {
        v.add(mask_of_tuple(big_n, a), c);
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Gq;

    fn g(a: i64, b: i64) -> Gq {
        Gq::from_ints(a, 1, b, 1)
    }

    fn br(v: &Gq) -> Gq {
        bracket(v).unwrap()
    }

    fn point() -> (QkzParams<Gq>, Vec<Gq>) {
        let p = QkzParams::new(Gq::from_ints(3, 2, 1, 3), g(2, -1)).unwrap();
        let z = vec![g(1, 2), Gq::from_ints(-2, 3, 1, 1), g(3, 1)];
        (p, z)
    }

    #[test]
    fn two_sites_closed_form() {
        let (p, z) = point();
        let z = &z[..2];
        assert_eq!(big_psi_component(&p, z, &[1]).unwrap(), br(&(p.beta.clone() * z[0].clone())));
        assert_eq!(
            big_psi_component(&p, z, &[2]).unwrap(),
            -br(&(p.q.clone() * p.beta.clone() * z[1].clone()))
        );
    }

    #[test]
    fn three_sites_closed_forms() {
        let (p, z) = point();
        let q = p.q.clone();
        let (z1, z2, z3) = (z[0].clone(), z[1].clone(), z[2].clone());
        let first = br(&(p.beta.clone() * z1.clone()))
            * br(&(q.clone() * z3.clone() / z2.clone()))
            * br(&(q.clone() * q.clone() * z2.clone() * z3.clone()));
        let last = br(&(q.clone() * p.beta.clone() * z3.clone()))
            * br(&(q.clone() * z2.clone() / z1.clone()))
            * br(&(q.clone() * z1.clone() * z2.clone()));
        let middle = (br(&q) * first.clone()
            - br(&(p.beta.clone() * z2.clone()))
                * br(&(q.clone() * z2.clone() / z1.clone()))
                * br(&(q.clone() * z3.clone() / z1.clone()))
                * br(&(q.clone() * q.clone() * z1.clone() * z3.clone())))
            / br(&(z2.clone() / z1.clone()));
        let v = psi_vector(&p, &z).unwrap();
        assert_eq!(v.get_tuple(&[1]), first);
        assert_eq!(v.get_tuple(&[2]), middle);
        assert_eq!(v.get_tuple(&[3]), last);
    }

    #[test]
    fn robust_path_agrees_with_direct_path() {
        let (p, z) = point();
        assert_eq!(psi_vector_robust(&p, &z).unwrap(), psi_vector(&p, &z).unwrap());
    }

    #[test]
    fn two_site_reduction() {
        let (p, z) = point();
        let z1 = z[0].clone();
        let z2 = z1.clone() / p.q.clone();
        assert!(psi_vector(&p, &[z1.clone(), z2.clone()]).is_err());
        let v = psi_vector_robust(&p, &[z1.clone(), z2]).unwrap();
        let expect = super::super::zeta::<Gq>().scale(&-br(&(p.beta.clone() * z1)));
        assert_eq!(v, expect);
    }

    #[test]
    fn cover_hits_every_pair() {
        let pairs = [(0, 1), (1, 2), (3, 4)];
        let c = cover(&pairs);
        assert!(pairs.iter().all(|(a, b)| c.contains(a) || c.contains(b)));
        assert_eq!(c.len(), 2);
    }
}
