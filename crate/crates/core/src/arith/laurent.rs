//! Sparse multivariate Laurent polynomials with exact coefficients.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::scalar::{Field, Ring};
use crate::error::{domain, usage, Result};

pub type Exponents = Vec<i32>;

/// A Laurent polynomial over the ring `C`.
///
/// Variables are identified by name. Binary operations align their operands by
/// name, appending variables missing from the left operand, so values built
/// over different variable lists can be mixed freely.
#[derive(Clone, Debug)]
pub struct MultiLaurent<C> {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, C>,
}

impl<C: Ring> MultiLaurent<C> {
    pub fn zero_in(vars: &[&str]) -> Self {
        MultiLaurent {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: C) -> Self {
        let mut p = Self::zero_in(vars);
        p.add_term(vec![0; vars.len()], c);
        p
    }

    pub fn monomial(vars: &[&str], e: &[i32], c: C) -> Self {
        assert_eq!(vars.len(), e.len(), "exponent vector length");
        let mut p = Self::zero_in(vars);
        p.add_term(e.to_vec(), c);
        p
    }

    /// The polynomial `name` in the single variable `name`.
    pub fn var(name: &str) -> Self {
        Self::monomial(&[name], &[1], C::one())
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I>(vars: &[&str], terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, C)>,
    {
        let mut p = Self::zero_in(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn var_index(&self, var: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| usage(format!("unknown variable {var:?}")))
    }

    /// Adds `c·u^e`, keeping the no-zero-coefficient invariant.
    pub fn add_term(&mut self, e: Exponents, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = std::mem::replace(o.get_mut(), C::zero()) + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Coefficient of the monomial with exponents `e` (in this value's variable order).
    pub fn coeff(&self, e: &[i32]) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> C {
        self.coeff(&vec![0; self.vars.len()])
    }

    /// Re-expresses `self` over `vars`, which must contain all of its variables
    /// that occur with a nonzero exponent.
    pub fn with_vars(&self, vars: &[String]) -> Result<Self> {
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v))
            .collect();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut f = vec![0; vars.len()];
            for (k, &x) in e.iter().enumerate() {
                match map[k] {
                    Some(j) => f[j] = x,
                    None if x == 0 => {}
                    None => {
                        return Err(usage(format!(
                            "variable {:?} missing from target list",
                            self.vars[k]
                        )))
                    }
                }
            }
            terms.insert(f, c.clone());
        }
        Ok(MultiLaurent {
            vars: vars.to_vec(),
            terms,
        })
    }

    fn union_vars(&self, other: &Self) -> Vec<String> {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars
    }

    fn align(&self, other: &Self) -> (Self, Self) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let vars = self.union_vars(other);
        (
            self.with_vars(&vars).expect("superset"),
            other.with_vars(&vars).expect("superset"),
        )
    }

    /// Drops variables that occur in no term.
    pub fn trimmed(&self) -> Self {
        let used: Vec<usize> = (0..self.vars.len())
            .filter(|&k| self.terms.keys().any(|e| e[k] != 0))
            .collect();
        let vars: Vec<String> = used.iter().map(|&k| self.vars[k].clone()).collect();
        self.with_vars(&vars).expect("unused variables only")
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut p = MultiLaurent {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        if c.is_zero() {
            return p;
        }
        for (e, a) in &self.terms {
            p.add_term(e.clone(), a.mul_ref(c));
        }
        p
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let (a, b) = self.align(other);
        let mut acc: HashMap<Exponents, C> = HashMap::with_capacity(a.len() * b.len());
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                acc.entry(e).or_insert_with(C::zero).add_mul(ca, cb);
            }
        }
        MultiLaurent {
            vars: a.vars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = MultiLaurent::constant(&[], C::one());
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Coefficient of `var^k`, as a polynomial in the remaining variables.
    pub fn coeff_extract(&self, var: &str, k: i32) -> Result<Self> {
        let idx = self.var_index(var)?;
        let mut vars = self.vars.clone();
        vars.remove(idx);
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[idx] == k {
                let mut f = e.clone();
                f.remove(idx);
                terms.insert(f, c.clone());
            }
        }
        Ok(MultiLaurent { vars, terms })
    }

    /// `(min, max)` exponent of `var`, or `None` for the zero polynomial.
    pub fn degree_range(&self, var: &str) -> Result<Option<(i32, i32)>> {
        let idx = self.var_index(var)?;
        let mut it = self.terms.keys().map(|e| e[idx]);
        let Some(first) = it.next() else {
            return Ok(None);
        };
        Ok(Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x)))))
    }

    /// Degree width in `var`; `None` stands for −∞ (the zero polynomial).
    pub fn degree_width(&self, var: &str) -> Result<Option<i32>> {
        Ok(self.degree_range(var)?.map(|(lo, hi)| hi - lo))
    }

    pub fn is_centred(&self, var: &str) -> Result<bool> {
        Ok(self.degree_range(var)?.map_or(true, |(lo, hi)| lo + hi == 0))
    }

    /// Maximal total degree in the listed variables.
    pub fn max_degree(&self, var: &str) -> Result<Option<i32>> {
        Ok(self.degree_range(var)?.map(|(_, hi)| hi))
    }

    /// Substitutes a coefficient-ring value for `var`.
    pub fn substitute(&self, var: &str, value: &C) -> Result<Self> {
        let idx = self.var_index(var)?;
        let mut vars = self.vars.clone();
        vars.remove(idx);
        let mut out = MultiLaurent {
            vars,
            terms: BTreeMap::new(),
        };
        let mut powers: HashMap<i32, C> = HashMap::new();
        for (e, c) in &self.terms {
            let k = e[idx];
            let pw = match powers.get(&k) {
                Some(p) => p.clone(),
                None => {
                    let p = value.powi(k as i64).map_err(|_| {
                        domain(format!("{var} = {value} with negative exponent {k}"))
                    })?;
                    powers.insert(k, p.clone());
                    p
                }
            };
            let mut f = e.clone();
            f.remove(idx);
            out.add_term(f, c.mul_ref(&pw));
        }
        Ok(out)
    }

    /// Substitutes a polynomial for `var`. Negative powers need `value` to be a unit.
    pub fn compose(&self, var: &str, value: &Self) -> Result<Self> {
        let idx = self.var_index(var)?;
        let mut rest = self.vars.clone();
        rest.remove(idx);
        let rest_refs: Vec<&str> = rest.iter().map(String::as_str).collect();
        let mut by_power: BTreeMap<i32, Self> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut f = e.clone();
            let k = f.remove(idx);
            by_power
                .entry(k)
                .or_insert_with(|| MultiLaurent::zero_in(&rest_refs))
                .add_term(f, c.clone());
        }
        let mut out = MultiLaurent::zero_in(&rest_refs);
        for (k, coeff) in by_power {
            let pw = Ring::powi(value, k as i64)?;
            out = out + coeff.mul_ref(&pw);
        }
        Ok(out)
    }

    /// Evaluates at an assignment of every variable that occurs.
    pub fn eval_at<F>(&self, point: &[(&str, F)]) -> Result<F>
    where
        F: Field + From<C>,
    {
        let mut values = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            let val = point.iter().find(|(name, _)| name == v).map(|(_, x)| x.clone());
            values.push(val);
        }
        let mut powers: Vec<HashMap<i32, F>> = vec![HashMap::new(); self.vars.len()];
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut term: F = c.clone().into();
            for (k, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let val = values[k]
                    .as_ref()
                    .ok_or_else(|| usage(format!("no value for variable {:?}", self.vars[k])))?;
                let p = match powers[k].get(&x) {
                    Some(p) => p.clone(),
                    None => {
                        let p = val.powi(x as i64).map_err(|_| {
                            domain(format!("{} = 0 with negative exponent", self.vars[k]))
                        })?;
                        powers[k].insert(x, p.clone());
                        p
                    }
                };
                term = term.mul_ref(&p);
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> MultiLaurent<D> {
        let mut out = MultiLaurent {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }
}

impl<C: Ring> PartialEq for MultiLaurent<C> {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (a, b) = self.align(other);
        a.terms == b.terms
    }
}

impl<C: Ring> Add for MultiLaurent<C> {
    type Output = Self;
    fn add(self, other: Self) -> Self {
        let (mut a, b) = if self.vars == other.vars {
            (self, other)
        } else {
            self.align(&other)
        };
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }
}

impl<C: Ring> Neg for MultiLaurent<C> {
    type Output = Self;
    fn neg(self) -> Self {
        MultiLaurent {
            vars: self.vars,
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<C: Ring> Sub for MultiLaurent<C> {
    type Output = Self;
    fn sub(self, other: Self) -> Self {
        self + (-other)
    }
}

impl<C: Ring> Mul for MultiLaurent<C> {
    type Output = Self;
    fn mul(self, other: Self) -> Self {
        self.mul_ref(&other)
    }
}

impl<C: Ring> Zero for MultiLaurent<C> {
    fn zero() -> Self {
        MultiLaurent::zero_in(&[])
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Ring> One for MultiLaurent<C> {
    fn one() -> Self {
        MultiLaurent::constant(&[], C::one())
    }
}

impl<C: Ring> Ring for MultiLaurent<C> {
    fn from_i64(v: i64) -> Self {
        MultiLaurent::constant(&[], C::from_i64(v))
    }

    /// Units are single monomials with a unit coefficient.
    fn try_inv(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        let inv = c.try_inv()?;
        let f: Exponents = e.iter().map(|x| -x).collect();
        Some(MultiLaurent {
            vars: self.vars.clone(),
            terms: BTreeMap::from([(f, inv)]),
        })
    }

    fn mul_ref(&self, other: &Self) -> Self {
        MultiLaurent::mul_ref(self, other)
    }
}

fn needs_parens(s: &str) -> bool {
    s.chars().skip(1).any(|c| c == '+' || c == '-' || c == ' ')
}

impl<C: Ring> fmt::Display for MultiLaurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let mono: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(x, _)| **x != 0)
                .map(|(x, v)| if *x == 1 { v.clone() } else { format!("{v}^{x}") })
                .collect();
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(m) if !needs_parens(m) => (true, m.to_string()),
                _ => (false, cs.clone()),
            };
            let mag = if needs_parens(&mag) { format!("({mag})") } else { mag };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    e: Exponents,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    vars: Vec<String>,
    terms: Vec<JsonTerm>,
}

impl<C: Ring> Serialize for MultiLaurent<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JsonPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| JsonTerm {
                    e: e.clone(),
                    c: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, C> Deserialize<'de> for MultiLaurent<C>
where
    C: Ring + FromStr,
{
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = JsonPoly::deserialize(d)?;
        let vars: Vec<&str> = raw.vars.iter().map(String::as_str).collect();
        let mut p = MultiLaurent::zero_in(&vars);
        for t in raw.terms {
            if t.e.len() != vars.len() {
                return Err(D::Error::custom("exponent vector length mismatch"));
            }
            let c = t
                .c
                .parse::<C>()
                .map_err(|_| D::Error::custom(format!("bad coefficient {:?}", t.c)))?;
            p.add_term(t.e, c);
        }
        Ok(p)
    }
}

impl<C: Ring> MultiLaurent<C> {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}
