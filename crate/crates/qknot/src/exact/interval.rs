//! Closed rational intervals, enough to enclose polynomial values.

use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::poly::HomPoly;
use super::scalar::{rat_to_f64, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn point(x: BigRational) -> Self {
        RatInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "empty interval");
        RatInterval { lo, hi }
    }

    /// Enclosure of a field element (√2 bracketed to 40 digits).
    pub fn from_scalar(x: &Scalar) -> Self {
        let a = RatInterval::point(x.ra().clone());
        if x.is_rational() {
            return a;
        }
        let scale = BigInt::from(10u8).pow(40);
        let root = (BigInt::from(2) * &scale * &scale).sqrt();
        let r2 = RatInterval::new(
            BigRational::new(root.clone(), scale.clone()),
            BigRational::new(root + 1, scale),
        );
        &a + &(&RatInterval::point(x.rb().clone()) * &r2)
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.numer() <= &BigInt::from(0) && self.hi.numer() >= &BigInt::from(0)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (rat_to_f64(&self.lo), rat_to_f64(&self.hi))
    }

    pub fn mid_f64(&self) -> f64 {
        0.5 * (rat_to_f64(&self.lo) + rat_to_f64(&self.hi))
    }
}

impl Add for &RatInterval {
    type Output = RatInterval;
    fn add(self, o: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }
}

impl Mul for &RatInterval {
    type Output = RatInterval;
    fn mul(self, o: &RatInterval) -> RatInterval {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        RatInterval::new(lo, hi)
    }
}

/// Enclose `f(x, 1)` for `x` in the interval.
pub fn eval_form_chart(f: &HomPoly, x: &RatInterval) -> RatInterval {
    let mut acc = RatInterval::point(BigRational::default());
    for c in f.coeffs() {
        acc = &(&acc * x) + &RatInterval::from_scalar(c);
    }
    acc
}
