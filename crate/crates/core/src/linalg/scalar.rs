//! Gaussian rationals `a + b i` with `a, b` arbitrary-precision rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An element of ℚ(i). Both parts are kept in lowest terms by `BigRational`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse scalar {input:?}: {reason}")]
pub struct ParseScalarError {
    pub input: String,
    pub reason: &'static str,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar { re: BigRational::zero(), im: BigRational::zero() }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn i() -> Self {
        Scalar { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar { re: BigRational::from_integer(BigInt::from(n)), im: BigRational::zero() }
    }

    pub fn gaussian(re: i64, im: i64) -> Self {
        Scalar {
            re: BigRational::from_integer(BigInt::from(re)),
            im: BigRational::from_integer(BigInt::from(im)),
        }
    }

    /// `num / den`, real.
    pub fn frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar { re: self.re.clone(), im: -self.im.clone() }
    }

    /// |z|², always a non-negative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero scalar");
        let n = self.norm_sqr();
        Scalar { re: &self.re / &n, im: -(&self.im / &n) }
    }

    /// Sign of the real part: -1, 0 or 1.
    pub fn real_sign(&self) -> i32 {
        if self.re.is_zero() {
            0
        } else if self.re.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar { re: r, im: BigRational::zero() }
    }
}

fn fmt_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}*i", fmt_rational(&self.re), sign, fmt_rational(&self.im.abs()))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn parse_rational(s: &str, input: &str) -> Result<BigRational, ParseScalarError> {
    let err = |reason| ParseScalarError { input: input.to_string(), reason };
    let s = s.trim();
    if s.is_empty() {
        return Err(err("empty component"));
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = num.strip_prefix('+').unwrap_or(num);
    let n = BigInt::from_str(num).map_err(|_| err("bad numerator"))?;
    let d = BigInt::from_str(den).map_err(|_| err("bad denominator"))?;
    if d.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Accepts `a`, `a/b`, `a/b+c/d*i`, `c/d*i`, `i`, `-i` (whitespace ignored).
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(ParseScalarError { input: input.to_string(), reason: "empty" });
        }
        let Some(body) = s.strip_suffix('i') else {
            return Ok(Scalar { re: parse_rational(&s, input)?, im: BigRational::zero() });
        };
        let body = body.strip_suffix('*').unwrap_or(body);
        // split at the last sign that is not leading
        let split = body
            .char_indices()
            .filter(|&(k, c)| k > 0 && (c == '+' || c == '-'))
            .map(|(k, _)| k)
            .next_back();
        let (re_part, im_part) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im_part {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other, input)?,
        };
        Ok(Scalar { re: parse_rational(re_part, input)?, im })
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(de)?;
        match v {
            serde_json::Value::String(s) => s.parse().map_err(serde::de::Error::custom),
            serde_json::Value::Number(n) if n.is_i64() => Ok(Scalar::from_int(n.as_i64().unwrap())),
            other => Err(serde::de::Error::custom(format!(
                "expected an exact scalar string, found {other}"
            ))),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.im.is_zero() && o.im.is_zero() {
            return Scalar { re: &self.re * &o.re, im: BigRational::zero() };
        }
        Scalar {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        if o.im.is_zero() {
            assert!(!o.re.is_zero(), "division by zero scalar");
            return Scalar { re: &self.re / &o.re, im: &self.im / &o.re };
        }
        self * &o.inv()
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, o: Scalar) {
        self.re += o.re;
        self.im += o.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl SubAssign<Scalar> for Scalar {
    fn sub_assign(&mut self, o: Scalar) {
        self.re -= o.re;
        self.im -= o.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = &*self * o;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for x in iter {
            acc += x;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_roundtrip() {
        let cases = ["1/1", "-1/3", "1/2+3/4*i", "0/1-1/1*i", "5/1"];
        for c in cases {
            let s: Scalar = c.parse().unwrap();
            assert_eq!(s.to_string(), c);
        }
        let s: Scalar = "1/3+0/1*i".parse().unwrap();
        assert_eq!(s, Scalar::frac(1, 3));
        assert_eq!("2/4".parse::<Scalar>().unwrap().to_string(), "1/2");
        assert_eq!("-i".parse::<Scalar>().unwrap(), -Scalar::i());
        assert_eq!("3/2*i".parse::<Scalar>().unwrap(), &Scalar::i() * &Scalar::frac(3, 2));
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("x".parse::<Scalar>().is_err());
    }

    #[test]
    fn field_ops() {
        let a = Scalar::gaussian(1, 2);
        let b = Scalar::gaussian(3, -1);
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(&a * &a.inv(), Scalar::one());
        assert_eq!(a.conj().conj(), a);
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));
    }
}
