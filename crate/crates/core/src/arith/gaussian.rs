//! Exact elements of ℚ(i).
//!
//! Values are kept as `(re + im·i)/den` over big integers with `den > 0` and
//! `gcd(re, im, den) = 1`, so equal values have equal representations. The
//! integers come from malachite, whose subquadratic gcd dominates the cost of
//! long exact computations; conversions to and from `num-bigint` happen only
//! at the API boundary.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use malachite_base::num::arithmetic::traits::{DivExact, Gcd, Sign};
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;
use num_bigint::{BigInt, BigUint, Sign as BigSign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::{Field, Ring};
use crate::error::{usage, Error};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianRational {
    re: Integer,
    im: Integer,
    den: Integer,
}

fn to_mal(x: &BigInt) -> Integer {
    let (sign, digits) = x.to_u64_digits();
    Integer::from_sign_and_abs(sign != BigSign::Minus, Natural::from_limbs_asc(&digits))
}

fn from_mal(x: &Integer) -> BigInt {
    let mut words = Vec::new();
    for limb in x.unsigned_abs_ref().to_limbs_asc() {
        words.push(limb as u32);
        words.push((limb >> 32) as u32);
    }
    let mag = BigUint::new(words);
    if x.sign() == Ordering::Less {
        -BigInt::from(mag)
    } else {
        BigInt::from(mag)
    }
}

fn is_zero_int(x: &Integer) -> bool {
    x.sign() == Ordering::Equal
}

fn int(v: i64) -> Integer {
    Integer::from(v)
}

impl GaussianRational {
    fn normalized(mut re: Integer, mut im: Integer, mut den: Integer) -> Self {
        debug_assert!(den.sign() == Ordering::Greater);
        if is_zero_int(&re) && is_zero_int(&im) {
            return GaussianRational { re, im, den: int(1) };
        }
        let mut g: Natural = re.unsigned_abs_ref().gcd(den.unsigned_abs_ref());
        if g != 1u32 {
            g = g.gcd(im.unsigned_abs_ref());
        }
        if g != 1u32 {
            let g = Integer::from(g);
            re = re.div_exact(&g);
            im = im.div_exact(&g);
            den = den.div_exact(&g);
        }
        GaussianRational { re, im, den }
    }

    pub fn new(re: BigRational, im: BigRational) -> Self {
        let (a, b) = (to_mal(re.numer()), to_mal(re.denom()));
        let (c, d) = (to_mal(im.numer()), to_mal(im.denom()));
        GaussianRational::normalized(&a * &d, &c * &b, &b * &d)
    }

    pub fn real(re: BigRational) -> Self {
        GaussianRational::new(re, BigRational::zero())
    }

    pub fn from_ints(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        GaussianRational::new(
            BigRational::new(re_num.into(), re_den.into()),
            BigRational::new(im_num.into(), im_den.into()),
        )
    }

    pub fn i() -> Self {
        GaussianRational {
            re: int(0),
            im: int(1),
            den: int(1),
        }
    }

    /// Real part.
    pub fn re(&self) -> BigRational {
        BigRational::new(from_mal(&self.re), from_mal(&self.den))
    }

    /// Imaginary part.
    pub fn im(&self) -> BigRational {
        BigRational::new(from_mal(&self.im), from_mal(&self.den))
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -&self.im,
            den: self.den.clone(),
        }
    }

    /// `re² + im²`.
    pub fn norm(&self) -> BigRational {
        let n = &self.re * &self.re + &self.im * &self.im;
        BigRational::new(from_mal(&n), from_mal(&(&self.den * &self.den)))
    }

    pub fn is_real(&self) -> bool {
        is_zero_int(&self.im)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(re: BigRational) -> Self {
        GaussianRational::real(re)
    }
}

impl From<BigInt> for GaussianRational {
    fn from(re: BigInt) -> Self {
        GaussianRational {
            re: to_mal(&re),
            im: int(0),
            den: int(1),
        }
    }
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        GaussianRational {
            re: int(v),
            im: int(0),
            den: int(1),
        }
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::from(0)
    }
    fn is_zero(&self) -> bool {
        is_zero_int(&self.re) && is_zero_int(&self.im)
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::from(1)
    }
}

fn add_parts(x: &GaussianRational, y: &GaussianRational, negate: bool) -> GaussianRational {
    let (yre, yim) = if negate {
        (-&y.re, -&y.im)
    } else {
        (y.re.clone(), y.im.clone())
    };
    if x.den == y.den {
        return GaussianRational::normalized(&x.re + yre, &x.im + yim, x.den.clone());
    }
    let g = Integer::from(x.den.unsigned_abs_ref().gcd(y.den.unsigned_abs_ref()));
    let xs = (&y.den).div_exact(&g);
    let ys = (&x.den).div_exact(&g);
    GaussianRational::normalized(
        &x.re * &xs + yre * &ys,
        &x.im * &xs + yim * &ys,
        &x.den * xs,
    )
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        add_parts(&self, &o, false)
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        add_parts(&self, &o, true)
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational {
            re: -self.re,
            im: -self.im,
            den: self.den,
        }
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        let den = &self.den * &o.den;
        if is_zero_int(&self.im) && is_zero_int(&o.im) {
            return GaussianRational::normalized(&self.re * &o.re, int(0), den);
        }
        GaussianRational::normalized(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
            den,
        )
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

impl Div for GaussianRational {
    type Output = Self;
    /// Panics on division by zero, like the rational types it wraps.
    fn div(self, o: Self) -> Self {
        let inv = o.try_inv().expect("division by zero GaussianRational");
        &self * &inv
    }
}

impl Ring for GaussianRational {
    fn from_i64(v: i64) -> Self {
        v.into()
    }

    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // ((re + im i)/den)^{-1} = den (re − im i)/(re² + im²)
        let n = &self.re * &self.re + &self.im * &self.im;
        Some(GaussianRational::normalized(
            &self.den * &self.re,
            -(&self.den * &self.im),
            n,
        ))
    }

    fn add_mul(&mut self, a: &Self, b: &Self) {
        let p = a * b;
        *self = add_parts(self, &p, false);
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl Field for GaussianRational {}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    /// `a/b`, `c/d*i` or `a/b+c/d*i`; integer parts drop the denominator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re = self.re();
        if self.is_real() {
            return write!(f, "{}", fmt_rational(&re));
        }
        let im_part = self.im();
        let im = fmt_rational(&im_part);
        if re.is_zero() {
            return write!(f, "{im}*i");
        }
        if im_part.is_negative() {
            write!(f, "{}{im}*i", fmt_rational(&re))
        } else {
            write!(f, "{}+{im}*i", fmt_rational(&re))
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let bad = || usage(format!("malformed rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Inverse of `Display`; also accepts `i` and `-i` for the unit.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let Some(body) = s.strip_suffix('i') else {
            return Ok(GaussianRational::real(parse_rational(s)?));
        };
        let body = body.strip_suffix('*').unwrap_or(body);
        // split at the sign that starts the imaginary part (not a leading sign)
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        let (re, im) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => "1",
            "-" => "-1",
            other => other.strip_prefix('+').unwrap_or(other),
        };
        Ok(GaussianRational::new(parse_rational(re)?, parse_rational(im)?))
    }
}
