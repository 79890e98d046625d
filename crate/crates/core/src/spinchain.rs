//! The open XXZ chain at `Δ = −1/2` with boundary fields `p = (1/2 − x)/2`,
//! `p′ = (1/2 − 1/x)/2`, and exact checks of its special eigenpair.
//!
//! Basis words use ↑ = 0, ↓ = 1, site 1 as the most significant bit.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{Field, Ring};
use crate::contour::{psi_components_at, sum_components_at};
use crate::error::{domain, usage, Result};
use crate::shape::ChainShape;
use crate::spin::{mask_of_tuple, Mask, SpinVector};
use crate::IntPoly;

/// Largest chain for which the full sparse matrix is materialised.
pub const MAX_MATERIALISED: usize = 16;

fn sign(m: Mask, n_sites: usize, site: usize) -> i64 {
    if (m >> (n_sites - site)) & 1 == 0 {
        1
    } else {
        -1
    }
}

/// Column `m` of `4H`, given `4p = 1 − 2x` and `4p′ = 1 − 2/x`.
fn column4<R: Ring>(big_n: usize, p4: &R, pp4: &R, m: Mask) -> Vec<(Mask, R)> {
    let mut diag = R::zero();
    let mut out = Vec::new();
    for i in 1..big_n {
        let (a, b) = (sign(m, big_n, i), sign(m, big_n, i + 1));
        // −2Δ σ^z σ^z = σ^z σ^z
        diag = diag + R::from_i64(a * b);
        if a != b {
            let flip = m ^ (0b11 << (big_n - i - 1));
            out.push((flip, R::from_i64(-4)));
        }
    }
    diag = diag + p4.mul_ref(&R::from_i64(sign(m, big_n, 1))) + pp4.mul_ref(&R::from_i64(sign(m, big_n, big_n)));
    if !diag.is_zero() {
        out.push((m, diag));
    }
    out
}

/// `H` (or a fixed multiple of it) applied without materialising the matrix.
#[derive(Clone, Debug)]
pub struct Hamiltonian<R> {
    pub big_n: usize,
    p4: R,
    pp4: R,
    scale: R,
}

impl<F: Field> Hamiltonian<F> {
    /// `H` at a point `x ≠ 0`.
    pub fn at(big_n: usize, x: &F) -> Result<Self> {
        if big_n == 0 || big_n > 63 {
            return Err(usage("chain length must be between 1 and 63"));
        }
        if x.is_zero() {
            return Err(domain("x must be nonzero"));
        }
        let two = F::from_i64(2);
        Ok(Hamiltonian {
            big_n,
            p4: F::one() - two.mul_ref(x),
            pp4: F::one() - two.checked_div(x)?,
            scale: F::from_ratio(1, 4),
        })
    }
}

impl Hamiltonian<IntPoly> {
    /// `4H` with entries in `ℤ[x, x⁻¹]`.
    pub fn symbolic_times_four(big_n: usize) -> Result<Self> {
        if big_n == 0 || big_n > 63 {
            return Err(usage("chain length must be between 1 and 63"));
        }
        let x = IntPoly::var("x");
        let two = IntPoly::from_i64(2).with_vars(x.vars())?;
        let one = IntPoly::one().with_vars(x.vars())?;
        Ok(Hamiltonian {
            big_n,
            p4: one.clone() - two.mul_ref(&x),
            pp4: one.clone() - two.mul_ref(&x.try_inv().expect("monomial")),
            scale: one,
        })
    }
}

impl<R: Ring> Hamiltonian<R> {
    pub fn column(&self, m: Mask) -> Vec<(Mask, R)> {
        column4(self.big_n, &self.p4, &self.pp4, m)
            .into_iter()
            .map(|(k, v)| (k, v.mul_ref(&self.scale)))
            .collect()
    }

    pub fn apply(&self, v: &SpinVector<R>) -> SpinVector<R> {
        let cols: Vec<Vec<(Mask, R)>> = v
            .iter()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|(m, c)| self.column(*m).into_iter().map(|(k, h)| (k, h.mul_ref(c))).collect())
            .collect();
        let mut out = SpinVector::zero(self.big_n);
        for col in cols {
            for (k, h) in col {
                out.add(k, h);
            }
        }
        out
    }

    /// The full sparse matrix, for `N ≤ 16`.
    pub fn to_sparse(&self) -> Result<SparseHamiltonian<R>> {
        if self.big_n > MAX_MATERIALISED {
            return Err(usage(format!("refusing to materialise 2^{} rows", self.big_n)));
        }
        let entries = (0..1u64 << self.big_n)
            .into_par_iter()
            .flat_map_iter(|c| self.column(c).into_iter().map(move |(r, v)| ((r, c), v)))
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        Ok(SparseHamiltonian {
            big_n: self.big_n,
            entries,
        })
    }
}

/// An explicit sparse `2^N × 2^N` matrix, keyed by `(row, column)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseHamiltonian<R> {
    pub big_n: usize,
    pub entries: BTreeMap<(Mask, Mask), R>,
}

impl<R: Ring> SparseHamiltonian<R> {
    pub fn get(&self, row: Mask, col: Mask) -> R {
        self.entries.get(&(row, col)).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries.iter().all(|(&(r, c), v)| self.get(c, r) == *v)
    }

    /// Every entry joins words with the same number of ↓.
    pub fn conserves_magnetisation(&self) -> bool {
        self.entries.keys().all(|&(r, c)| r.count_ones() == c.count_ones())
    }

    pub fn apply(&self, v: &SpinVector<R>) -> SpinVector<R> {
        let mut out = SpinVector::zero(self.big_n);
        for (&(r, c), h) in &self.entries {
            let a = v.get(c);
            if !a.is_zero() {
                out.add(r, h.mul_ref(&a));
            }
        }
        out
    }
}

pub fn build_hamiltonian<F: Field>(big_n: usize, x: &F) -> Result<SparseHamiltonian<F>> {
    Hamiltonian::at(big_n, x)?.to_sparse()
}

/// `2M|v⟩`, i.e. each word scaled by `#↑ − #↓`.
pub fn twice_magnetisation<R: Ring>(v: &SpinVector<R>) -> SpinVector<R> {
    let n = v.n_sites() as i64;
    let mut out = SpinVector::zero(v.n_sites());
    for (m, c) in v.iter() {
        let down = m.count_ones() as i64;
        out.add(m, c.mul_ref(&R::from_i64(n - 2 * down)));
    }
    out
}

/// `E = −(3N−1)/4 − (1−x)²/(2x)`.
pub fn eigenvalue_e<F: Field>(big_n: usize, x: &F) -> Result<F> {
    if x.is_zero() {
        return Err(domain("x must be nonzero"));
    }
    let one = F::one();
    let d = one.clone() - x.clone();
    let a = F::from_ratio(3 * big_n as i64 - 1, 4);
    Ok(-a - d.mul_ref(&d).checked_div(&F::from_i64(2).mul_ref(x))?)
}

/// `|ψ_N⟩` at `τ = 1` and rational `x`.
pub fn psi_vector_at(big_n: usize, x: &BigRational) -> SpinVector<BigRational> {
    let one = BigRational::one();
    let mut v = SpinVector::zero(big_n);
    for (a, c) in psi_components_at(big_n, x, &one) {
        v.add(mask_of_tuple(big_n, &a), c);
    }
    v
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EigenReport {
    #[serde(rename = "N")]
    pub big_n: usize,
    pub x: String,
    pub eigenvalue: String,
    pub residual_zero: bool,
    pub magnetization_ok: bool,
    pub normalization_ok: bool,
    pub sum_ok: bool,
}

impl EigenReport {
    pub fn pass(&self) -> bool {
        self.residual_zero && self.magnetization_ok && self.normalization_ok && self.sum_ok
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// Checks `H|ψ⟩ = E|ψ⟩`, `M|ψ⟩ = (ε/2)|ψ⟩`, `ψ_{1,…,n} = 1` and the component sum for a given vector.
pub fn verify_vector(big_n: usize, x: &BigRational, psi: &SpinVector<BigRational>) -> Result<EigenReport> {
    let shape = ChainShape::new(big_n);
    let h = Hamiltonian::at(big_n, x)?;
    let e = eigenvalue_e(big_n, x)?;
    let residual = h.apply(psi).minus(&psi.scale(&e));
    let eps = BigRational::from_i64(shape.eps as i64);
    let mag = twice_magnetisation(psi).minus(&psi.scale(&eps));
    let first: Vec<usize> = (1..=shape.n).collect();
    let total = psi.iter().fold(BigRational::zero(), |acc, (_, c)| acc + c.clone());
    Ok(EigenReport {
        big_n,
        x: x.to_string(),
        eigenvalue: e.to_string(),
        residual_zero: residual.is_zero() && !psi.is_zero(),
        magnetization_ok: mag.is_zero(),
        normalization_ok: psi.get(mask_of_tuple(big_n, &first)).is_one(),
        sum_ok: total == sum_components_at(big_n, x, &BigRational::one()),
    })
}

pub fn verify_eigenpair(big_n: usize, x: &BigRational) -> Result<EigenReport> {
    if big_n == 0 {
        return Err(usage("chain length must be at least 1"));
    }
    if x.is_zero() {
        return Err(domain("x must be nonzero"));
    }
    verify_vector(big_n, x, &psi_vector_at(big_n, x))
}
