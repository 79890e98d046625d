//! Sparse vectors on (ℂ²)^⊗N and local operators acting on them.
//!
//! Basis states are bit masks: site `k` (1-based) is bit `N − k`, set for ↓.
//! Sorting masks therefore sorts spin words lexicographically with ↑ < ↓.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::arith::Ring;

pub type Mask = u64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Spin {
    Up,
    Down,
}

impl Spin {
    pub fn flip(self) -> Spin {
        match self {
            Spin::Up => Spin::Down,
            Spin::Down => Spin::Up,
        }
    }

    pub fn bit(self) -> usize {
        match self {
            Spin::Up => 0,
            Spin::Down => 1,
        }
    }

    pub fn from_bit(b: usize) -> Spin {
        if b & 1 == 0 {
            Spin::Up
        } else {
            Spin::Down
        }
    }

    /// Eigenvalue of σ^z.
    pub fn sz(self) -> i64 {
        match self {
            Spin::Up => 1,
            Spin::Down => -1,
        }
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Spin::Up => "u",
            Spin::Down => "d",
        })
    }
}

/// Spin word from a string over `{u,d,+,-,↑,↓,0,1}`.
pub fn parse_word(s: &str) -> Option<Vec<Spin>> {
    s.chars()
        .map(|c| match c {
            'u' | 'U' | '+' | '↑' | '0' => Some(Spin::Up),
            'd' | 'D' | '-' | '↓' | '1' => Some(Spin::Down),
            _ => None,
        })
        .collect()
}

pub fn word_to_string(w: &[Spin]) -> String {
    w.iter().map(|s| s.to_string()).collect()
}

pub fn mask_of_tuple(n_sites: usize, a: &[usize]) -> Mask {
    a.iter().fold(0, |m, &k| m | 1 << (n_sites - k))
}

pub fn tuple_of_mask(n_sites: usize, m: Mask) -> Vec<usize> {
    (1..=n_sites).filter(|&k| m >> (n_sites - k) & 1 == 1).collect()
}

pub fn mask_of_word(w: &[Spin]) -> Mask {
    w.iter().fold(0, |m, s| (m << 1) | s.bit() as Mask)
}

pub fn word_of_mask(n_sites: usize, m: Mask) -> Vec<Spin> {
    (1..=n_sites)
        .map(|k| Spin::from_bit((m >> (n_sites - k)) as usize))
        .collect()
}

pub fn spin_at(n_sites: usize, m: Mask, site: usize) -> Spin {
    Spin::from_bit((m >> (n_sites - site)) as usize)
}

/// A vector (or, used as a covector, its transpose) with sparse amplitudes.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinVector<R> {
    n_sites: usize,
    amps: BTreeMap<Mask, R>,
}

impl<R: Ring> SpinVector<R> {
    pub fn zero(n_sites: usize) -> Self {
        assert!(n_sites < 64, "at most 63 sites");
        SpinVector {
            n_sites,
            amps: BTreeMap::new(),
        }
    }

    pub fn basis(n_sites: usize, m: Mask) -> Self {
        let mut v = Self::zero(n_sites);
        v.add(m, R::one());
        v
    }

    pub fn basis_word(w: &[Spin]) -> Self {
        Self::basis(w.len(), mask_of_word(w))
    }

    /// Product state `⊗_k (a_k|↑⟩ + b_k|↓⟩)`.
    pub fn product(factors: &[(R, R)]) -> Self {
        let n = factors.len();
        let mut v: SpinVector<R> = SpinVector::basis(0, 0);
        v.n_sites = n;
        for (k, (a, b)) in factors.iter().enumerate() {
            let mut next = BTreeMap::new();
            for (m, c) in &v.amps {
                let up = c.mul_ref(a);
                let down = c.mul_ref(b);
                if !up.is_zero() {
                    next.insert(*m, up);
                }
                if !down.is_zero() {
                    next.insert(m | 1 << (n - 1 - k), down);
                }
            }
            v.amps = next;
        }
        v
    }

    pub fn from_tuples<I>(n_sites: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (Vec<usize>, R)>,
    {
        let mut v = Self::zero(n_sites);
        for (a, c) in entries {
            v.add(mask_of_tuple(n_sites, &a), c);
        }
        v
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn add(&mut self, m: Mask, c: R) {
        if c.is_zero() {
            return;
        }
        let e = self.amps.entry(m).or_insert_with(R::zero);
        *e = std::mem::replace(e, R::zero()) + c;
        if e.is_zero() {
            self.amps.remove(&m);
        }
    }

    pub fn get(&self, m: Mask) -> R {
        self.amps.get(&m).cloned().unwrap_or_else(R::zero)
    }

    pub fn get_tuple(&self, a: &[usize]) -> R {
        self.get(mask_of_tuple(self.n_sites, a))
    }

    pub fn iter(&self) -> impl Iterator<Item = (Mask, &R)> {
        self.amps.iter().map(|(m, c)| (*m, c))
    }

    pub fn iter_tuples(&self) -> impl Iterator<Item = (Vec<usize>, &R)> + '_ {
        self.amps
            .iter()
            .map(|(m, c)| (tuple_of_mask(self.n_sites, *m), c))
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut v = Self::zero(self.n_sites);
        for (m, a) in &self.amps {
            v.add(*m, a.mul_ref(c));
        }
        v
    }

    pub fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.n_sites, other.n_sites);
        let mut v = self.clone();
        for (m, a) in &other.amps {
            v.add(*m, a.clone());
        }
        v
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&-R::one()))
    }

    /// The pairing `⟨self|other⟩` (no conjugation).
    pub fn dot(&self, other: &Self) -> R {
        assert_eq!(self.n_sites, other.n_sites);
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = R::zero();
        for (m, a) in &small.amps {
            if let Some(b) = big.amps.get(m) {
                acc.add_mul(a, b);
            }
        }
        acc
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &Self) -> Self {
        let n = self.n_sites + other.n_sites;
        let mut v = Self::zero(n);
        for (m, a) in &self.amps {
            for (k, b) in &other.amps {
                v.add((m << other.n_sites) | k, a.mul_ref(b));
            }
        }
        v
    }

    /// Inserts a two-site vector at sites `i, i+1`, shifting later sites right.
    pub fn insert_pair(&self, i: usize, pair: &SpinVector<R>) -> Self {
        assert_eq!(pair.n_sites, 2);
        let n = self.n_sites + 2;
        let mut v = Self::zero(n);
        for (m, a) in &self.amps {
            let w = word_of_mask(self.n_sites, *m);
            for (pm, b) in &pair.amps {
                let mut word = w[..i - 1].to_vec();
                word.extend(word_of_mask(2, *pm));
                word.extend_from_slice(&w[i - 1..]);
                v.add(mask_of_word(&word), a.mul_ref(b));
            }
        }
        v
    }

    /// Applies `f` to every amplitude.
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SpinVector<S> {
        let mut v = SpinVector::zero(self.n_sites);
        for (m, a) in &self.amps {
            v.add(*m, f(a));
        }
        v
    }
}

impl<R: Ring> fmt::Display for SpinVector<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .amps
            .iter()
            .map(|(m, c)| format!("({c})|{}>", word_to_string(&word_of_mask(self.n_sites, *m))))
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// A dense operator on `k` tensor factors, row-major in the basis order above.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalOp<R> {
    pub legs: usize,
    pub m: Vec<R>,
}

impl<R: Ring> LocalOp<R> {
    pub fn new(legs: usize, m: Vec<R>) -> Self {
        assert_eq!(m.len(), 1 << (2 * legs));
        LocalOp { legs, m }
    }

    pub fn identity(legs: usize) -> Self {
        let d = 1 << legs;
        let mut m = vec![R::zero(); d * d];
        for k in 0..d {
            m[k * d + k] = R::one();
        }
        LocalOp { legs, m }
    }

    pub fn dim(&self) -> usize {
        1 << self.legs
    }

    pub fn entry(&self, row: usize, col: usize) -> &R {
        &self.m[row * self.dim() + col]
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim();
        let mut m = self.m.clone();
        for r in 0..d {
            for c in 0..d {
                m[c * d + r] = self.m[r * d + c].clone();
            }
        }
        LocalOp { legs: self.legs, m }
    }

    pub fn scale(&self, c: &R) -> Self {
        LocalOp {
            legs: self.legs,
            m: self.m.iter().map(|x| x.mul_ref(c)).collect(),
        }
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.legs, other.legs);
        let d = self.dim();
        let mut m = vec![R::zero(); d * d];
        for r in 0..d {
            for c in 0..d {
                let mut acc = R::zero();
                for k in 0..d {
                    acc.add_mul(self.entry(r, k), other.entry(k, c));
                }
                m[r * d + c] = acc;
            }
        }
        LocalOp { legs: self.legs, m }
    }

    /// Acts on the listed sites (1-based; the first site is the most
    /// significant local index).
    pub fn apply(&self, sites: &[usize], v: &SpinVector<R>) -> SpinVector<R> {
        assert_eq!(sites.len(), self.legs);
        let n = v.n_sites;
        let d = self.dim();
        let shifts: Vec<usize> = sites.iter().map(|&s| n - s).collect();
        let clear: Mask = shifts.iter().fold(0, |m, &s| m | 1 << s);
        let mut out = SpinVector::zero(n);
        for (mask, amp) in &v.amps {
            let col = shifts
                .iter()
                .fold(0usize, |acc, &s| (acc << 1) | ((mask >> s) & 1) as usize);
            for row in 0..d {
                let e = self.entry(row, col);
                if e.is_zero() {
                    continue;
                }
                let mut target = mask & !clear;
                for (k, &s) in shifts.iter().enumerate() {
                    if (row >> (self.legs - 1 - k)) & 1 == 1 {
                        target |= 1 << s;
                    }
                }
                out.add(target, amp.mul_ref(e));
            }
        }
        out
    }

    /// Covector action `⟨v| ↦ ⟨v|·self`.
    pub fn apply_left(&self, sites: &[usize], v: &SpinVector<R>) -> SpinVector<R> {
        self.transpose().apply(sites, v)
    }
}

impl<R: Ring> fmt::Display for LocalOp<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .m
            .chunks(self.dim())
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// A product of placed local operators, written left to right as in `A·B·C`.
#[derive(Clone, Debug)]
pub struct OpProduct<R> {
    pub factors: Vec<(LocalOp<R>, Vec<usize>)>,
}

impl<R: Ring> OpProduct<R> {
    pub fn new() -> Self {
        OpProduct {
            factors: Vec::new(),
        }
    }

    pub fn then(mut self, op: LocalOp<R>, sites: &[usize]) -> Self {
        self.factors.push((op, sites.to_vec()));
        self
    }

    /// Applies the product to a vector (rightmost factor first).
    pub fn apply(&self, v: &SpinVector<R>) -> SpinVector<R> {
        self.factors
            .iter()
            .rev()
            .fold(v.clone(), |acc, (op, sites)| op.apply(sites, &acc))
    }

    /// Applies the product to a covector (leftmost factor first).
    pub fn apply_left(&self, v: &SpinVector<R>) -> SpinVector<R> {
        self.factors
            .iter()
            .fold(v.clone(), |acc, (op, sites)| op.apply_left(sites, &acc))
    }

    /// Columns of the product's matrix on `n_sites` sites.
    pub fn columns(&self, n_sites: usize) -> Vec<SpinVector<R>> {
        (0..1u64 << n_sites)
            .map(|m| self.apply(&SpinVector::basis(n_sites, m)))
            .collect()
    }
}

impl<R: Ring> Default for OpProduct<R> {
    fn default() -> Self {
        Self::new()
    }
}

pub fn sigma_z<R: Ring>() -> LocalOp<R> {
    LocalOp::new(1, vec![R::one(), R::zero(), R::zero(), -R::one()])
}

pub fn permutation<R: Ring>() -> LocalOp<R> {
    let (o, z) = (R::one(), R::zero());
    LocalOp::new(
        2,
        vec![
            o.clone(), z.clone(), z.clone(), z.clone(),
            z.clone(), z.clone(), o.clone(), z.clone(),
            z.clone(), o.clone(), z.clone(), z.clone(),
            z.clone(), z.clone(), z, o,
        ],
    )
}
