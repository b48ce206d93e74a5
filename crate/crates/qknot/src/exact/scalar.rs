//! Exact elements of the real quadratic field Q(√2).

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// `a + b·√2` with `a`, `b` reduced big rationals.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    a: BigRational,
    b: BigRational,
}

const SQRT2: f64 = std::f64::consts::SQRT_2;

impl Scalar {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Scalar { a, b }
    }

    pub fn rational(a: BigRational) -> Self {
        Scalar {
            a,
            b: BigRational::zero(),
        }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn sqrt2() -> Self {
        Scalar {
            a: BigRational::zero(),
            b: BigRational::one(),
        }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    /// Rational part.
    pub fn ra(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient of √2.
    pub fn rb(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.a)
    }

    /// Galois conjugate `a − b√2`.
    pub fn conj(&self) -> Self {
        Scalar {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// Field norm `a² − 2b²`.
    pub fn norm(&self) -> BigRational {
        if self.b.is_zero() {
            return &self.a * &self.a;
        }
        &self.a * &self.a - BigRational::from_integer(BigInt::from(2)) * &self.b * &self.b
    }

    /// Exact sign, decided by comparing `a²` against `2b²` when the parts disagree.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2 = BigRational::from_integer(BigInt::from(2)) * &self.b * &self.b;
        match a2.cmp(&b2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero scalar");
        if self.b.is_zero() {
            return Self::rational(self.a.recip());
        }
        let n = self.norm();
        Scalar {
            a: &self.a / &n,
            b: -(&self.b / &n),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.a) + rat_to_f64(&self.b) * SQRT2
    }

    /// A rational number `r` with `|self| <= r`.
    pub fn abs_upper(&self) -> BigRational {
        // 3/2 > √2
        self.a.abs() + self.b.abs() * BigRational::new(BigInt::from(3), BigInt::from(2))
    }

    /// Square root within the field, if one exists.
    ///
    /// Only handles the cases the toolkit needs: rational squares, and `2·r²`.
    pub fn sqrt_in_field(&self) -> Option<Self> {
        if !self.is_rational() || self.a.is_negative() {
            return None;
        }
        if let Some(r) = rat_sqrt(&self.a) {
            return Some(Self::rational(r));
        }
        let half = &self.a / BigRational::from_integer(BigInt::from(2));
        rat_sqrt(&half).map(|r| Scalar {
            a: BigRational::zero(),
            b: r,
        })
    }
}

fn rat_sqrt(r: &BigRational) -> Option<BigRational> {
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

fn sign_of(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}

pub(crate) fn rat_to_f64(r: &BigRational) -> f64 {
    if let Some(x) = r.to_f64() {
        if x.is_finite() {
            return x;
        }
    }
    // scale both parts down to avoid overflow in very large numerators
    let nb = r.numer().bits() as i64;
    let db = r.denom().bits() as i64;
    let shift = (nb - db).clamp(-1000, 1000);
    let scaled = if shift > 0 {
        BigRational::new(r.numer().clone(), r.denom() << shift as usize)
    } else {
        BigRational::new(r.numer() << (-shift) as usize, r.denom().clone())
    };
    scaled.to_f64().unwrap_or(0.0) * 2f64.powi(shift as i32)
}

/// Rational text: `n` or `n/d`.
pub(crate) fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn parse_rat(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational '{s}'"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return f.write_str(&fmt_rat(&self.a));
        }
        let coef = |b: &BigRational| -> String {
            if b.abs().is_one() {
                String::new()
            } else {
                fmt_rat(&b.abs())
            }
        };
        if self.a.is_zero() {
            let sign = if self.b.is_negative() { "-" } else { "" };
            return write!(f, "{sign}{}√2", coef(&self.b));
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{}{sign}{}√2", fmt_rat(&self.a), coef(&self.b))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `a/b`, `a/b+c/d√2`, `-√2`, `3√2`, and `sqrt2` in place of `√2`.
    fn from_str(text: &str) -> Result<Self, Error> {
        let s: String = text
            .replace("sqrt2", "√2")
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let Some(body) = s.strip_suffix("√2") else {
            return Ok(Scalar::rational(parse_rat(&s)?));
        };
        // split the irrational term off at the last sign that is not leading
        let split = body
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .next_back();
        let (rat, irr) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let irr = irr.strip_suffix('*').unwrap_or(irr);
        let b = match irr {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            t => parse_rat(t.strip_prefix('+').unwrap_or(t))?,
        };
        let a = if rat.is_empty() {
            BigRational::zero()
        } else {
            parse_rat(rat)?
        };
        Ok(Scalar { a, b })
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::rational(r)
    }
}

impl From<&BigRational> for Scalar {
    fn from(r: &BigRational) -> Self {
        Scalar::rational(r.clone())
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar {
            a: &self.a + &o.a,
            b: if self.b.is_zero() && o.b.is_zero() {
                BigRational::zero()
            } else {
                &self.b + &o.b
            },
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar {
            a: &self.a - &o.a,
            b: if self.b.is_zero() && o.b.is_zero() {
                BigRational::zero()
            } else {
                &self.b - &o.b
            },
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.b.is_zero() && o.b.is_zero() {
            return Scalar::rational(&self.a * &o.a);
        }
        if self.b.is_zero() {
            return Scalar {
                a: &self.a * &o.a,
                b: &self.a * &o.b,
            };
        }
        if o.b.is_zero() {
            return Scalar {
                a: &self.a * &o.a,
                b: &self.b * &o.a,
            };
        }
        let two = BigRational::from_integer(BigInt::from(2));
        Scalar {
            a: &self.a * &o.a + two * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        if o.b.is_zero() {
            assert!(!o.a.is_zero(), "division by zero scalar");
            return Scalar {
                a: &self.a / &o.a,
                b: &self.b / &o.a,
            };
        }
        self * &o.inv()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

macro_rules! forward_owned {
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
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        self.a += &o.a;
        if !o.b.is_zero() {
            self.b += &o.b;
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        self.a -= &o.a;
        if !o.b.is_zero() {
            self.b -= &o.b;
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = &*self * o;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::one();
        for x in iter {
            acc *= &x;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    #[test]
    fn sign_by_rationalization() {
        assert_eq!(s("3/2-√2").signum(), 1);
        assert_eq!(s("7/5-√2").signum(), -1);
        assert_eq!(s("-3/2+√2").signum(), -1);
        assert_eq!(s("0").signum(), 0);
        assert_eq!(s("-2√2").signum(), -1);
    }

    #[test]
    fn field_ops() {
        let x = s("1+√2");
        let y = x.inv();
        assert_eq!(&x * &y, Scalar::one());
        assert_eq!(y, s("-1+√2"));
        assert_eq!(Scalar::sqrt2() * Scalar::sqrt2(), Scalar::int(2));
    }

    #[test]
    fn text_round_trip() {
        for t in [
            "0",
            "3",
            "-5/7",
            "1/2+3/4√2",
            "2-√2",
            "√2",
            "-3√2",
            "-1/3-5/2√2",
        ] {
            assert_eq!(s(t).to_string(), t);
        }
        assert_eq!(s("sqrt2"), Scalar::sqrt2());
        assert_eq!(s("2/4+0√2").to_string(), "1/2");
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
    }
}
