//! Exact arithmetic over the Gaussian rationals `Q(i)`.
//!
//! Every value is kept in canonical reduced form: both coordinates are
//! [`Rational`]s with a positive denominator coprime to the numerator.
//! Structural equality is therefore numeric equality, and values can be
//! hashed directly.
//!
//! The literal syntax is `[sign] rat [sign rat 'i']` with `rat = int['/'int]`,
//! for example `3/5+4/5i`, `2` or `1/2-1/4i`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Reduced fraction with arbitrary-precision numerator and denominator.
pub type Rational = num_rational::BigRational;

/// Builds a reduced rational from two machine integers.
///
/// Panics if `den == 0`; use [`parse_number`] for untrusted input.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an integral rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// An exact element `x + yi` of `Q(i)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    /// Shorthand for `a/b + (c/d)i` from machine integers.
    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        GaussianRational::new(rat(re_num, re_den), rat(im_num, im_den))
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational::new(re, Rational::zero())
    }

    pub fn from_integer(n: BigInt) -> Self {
        GaussianRational::from_rational(Rational::from_integer(n))
    }

    pub fn zero() -> Self {
        GaussianRational::default()
    }

    pub fn one() -> Self {
        GaussianRational::from_rational(Rational::one())
    }

    pub fn i() -> Self {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    /// `|z|^2 = x^2 + y^2`.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse `z̄ / |z|^2`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sq();
        Ok(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }

    /// Exact quotient, computed by multiplying with the conjugate of `rhs`.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = rhs.norm_sq();
        let num = self * &rhs.conj();
        Ok(GaussianRational::new(num.re / &n, num.im / n))
    }

    /// Multiplies by an integer scalar.
    pub fn scale(&self, k: &BigInt) -> Self {
        let k = Rational::from_integer(k.clone());
        GaussianRational::new(&self.re * &k, &self.im * k)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        GaussianRational::from_rational(int(n))
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        GaussianRational::from_rational(r)
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident, $body:expr) => {
        impl<'a> $imp<&'a GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'a GaussianRational) -> GaussianRational {
                let f: fn(&GaussianRational, &GaussianRational) -> GaussianRational = $body;
                f(self, rhs)
            }
        }
        impl $imp for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $imp<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'a GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| GaussianRational::new(
    &a.re + &b.re,
    &a.im + &b.im
));
forward_binop!(Sub, sub, |a, b| GaussianRational::new(
    &a.re - &b.re,
    &a.im - &b.im
));
forward_binop!(Mul, mul, |a, b| GaussianRational::new(
    &a.re * &b.re - &a.im * &b.im,
    &a.re * &b.im + &a.im * &b.re
));

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

/// Formats a gaussian rational in the literal syntax accepted by [`parse_number`].
pub fn format_number(z: &GaussianRational) -> String {
    z.to_string()
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.re)?;
        if !self.im.is_zero() {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            write!(f, "{}{}i", sign, self.im.abs())?;
        }
        Ok(())
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                Some(false)
            }
            Some(b'-') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected digits"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digit run parses as integer"))
    }

    fn rational(&mut self) -> Result<Rational> {
        let num = self.digits()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.pos;
            let den = self.digits()?;
            if den.is_zero() {
                return Err(Error::parse(at, "zero denominator"));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }
}

/// Parses the literal syntax `[sign] rat [sign rat 'i']`.
///
/// A lone imaginary literal such as `4/5i` is also accepted.
pub fn parse_number(text: &str) -> Result<GaussianRational> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let negate = |neg: Option<bool>, r: Rational| if neg == Some(true) { -r } else { r };

    let first_sign = cur.sign();
    let first = negate(first_sign, cur.rational()?);
    let value = match cur.peek() {
        None => GaussianRational::from_rational(first),
        Some(b'i') => {
            cur.pos += 1;
            GaussianRational::new(Rational::zero(), first)
        }
        Some(b'+') | Some(b'-') => {
            let s = cur.sign();
            let im = negate(s, cur.rational()?);
            if cur.peek() != Some(b'i') {
                return Err(Error::parse(cur.pos, "expected 'i' after imaginary part"));
            }
            cur.pos += 1;
            GaussianRational::new(first, im)
        }
        Some(c) => {
            return Err(Error::parse(
                cur.pos,
                format!("unexpected character {:?}", c as char),
            ))
        }
    };
    if cur.pos != text.len() {
        return Err(Error::parse(cur.pos, "trailing input"));
    }
    Ok(value)
}

impl FromStr for GaussianRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_number(s)
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_number(&s).map_err(de::Error::custom)
    }
}
