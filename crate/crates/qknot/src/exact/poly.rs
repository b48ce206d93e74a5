//! Univariate polynomials and binary forms over Q(√2).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::linalg::{det, det_int};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Dense univariate polynomial, ascending powers, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    c: Vec<Scalar>,
}

impl UPoly {
    pub fn new(mut c: Vec<Scalar>) -> Self {
        while c.last().is_some_and(Scalar::is_zero) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn zero() -> Self {
        UPoly { c: vec![] }
    }

    pub fn constant(x: Scalar) -> Self {
        UPoly::new(vec![x])
    }

    /// `x − r`
    pub fn linear_root(r: Scalar) -> Self {
        UPoly::new(vec![-r, Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> Scalar {
        self.c.last().cloned().unwrap_or_default()
    }

    pub fn is_rational(&self) -> bool {
        self.c.iter().all(Scalar::is_rational)
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        UPoly::new(self.c.iter().map(|x| x * k).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead().inv();
        self.scale(&l)
    }

    pub fn derivative(&self) -> Self {
        UPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, x)| x * &Scalar::int(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for k in self.c.iter().rev() {
            acc = &(&acc * x) + k;
        }
        acc
    }

    pub fn eval_rat(&self, x: &BigRational) -> Scalar {
        if self.is_rational() {
            let mut acc = BigRational::default();
            for k in self.c.iter().rev() {
                acc = acc * x + k.ra();
            }
            return Scalar::rational(acc);
        }
        self.eval(&Scalar::rational(x.clone()))
    }

    pub fn eval_c64(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for k in self.c.iter().rev() {
            acc = acc * z + k.to_f64();
        }
        acc
    }

    /// Euclidean division over the field.
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.deg();
        if self.c.len() < d.c.len() {
            return (UPoly::zero(), self.clone());
        }
        let inv = d.lead().inv();
        let mut r = self.c.clone();
        let mut q = vec![Scalar::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let k = &r[i + dd] * &inv;
            if k.is_zero() {
                continue;
            }
            for (j, dj) in d.c.iter().enumerate() {
                let t = &k * dj;
                r[i + j] -= &t;
            }
            q[i] = k;
        }
        r.truncate(dd);
        (UPoly::new(q), UPoly::new(r))
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        self.divrem(d).1
    }

    /// Exact quotient; errors if `d` does not divide `self`.
    pub fn div_exact(&self, d: &UPoly) -> Result<UPoly> {
        let (q, r) = self.divrem(d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Invalid("inexact polynomial division".into()))
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        if self.deg() > 0 && other.deg() > 0 && self.is_rational() && other.is_rational() {
            if let Some(g) = heuristic_gcd(&primitive_ints(self), &primitive_ints(other)) {
                let c = g
                    .into_iter()
                    .map(|x| Scalar::rational(BigRational::from_integer(x)))
                    .collect();
                return UPoly::new(c).monic();
            }
        }
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a
    }

    /// Product of the distinct irreducible factors.
    pub fn squarefree(&self) -> UPoly {
        if self.deg() == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    /// Yun's square-free factorization: `(factor, multiplicity)` with monic,
    /// pairwise coprime, square-free non-constant factors.
    pub fn squarefree_decomposition(&self) -> Vec<(UPoly, usize)> {
        let mut out = vec![];
        if self.deg() == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).unwrap();
        let mut c = df.div_exact(&a0).unwrap();
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if a.deg() > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a).unwrap();
            if b.deg() == 0 {
                break;
            }
            c = d.div_exact(&a).unwrap();
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    pub fn pow(&self, e: u32) -> UPoly {
        let mut acc = UPoly::constant(Scalar::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Lagrange interpolation through `(x_i, y_i)` with distinct `x_i`.
    pub fn interpolate(xs: &[Scalar], ys: &[Scalar]) -> UPoly {
        // Newton divided differences
        let n = xs.len();
        let mut dd: Vec<Scalar> = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                let num = &dd[i] - &dd[i - 1];
                let den = &xs[i] - &xs[i - j];
                dd[i] = &num / &den;
            }
        }
        let mut acc = UPoly::constant(dd[n - 1].clone());
        for i in (0..n - 1).rev() {
            acc = &(&acc * &UPoly::linear_root(xs[i].clone())) + &UPoly::constant(dd[i].clone());
        }
        acc
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly{:?}", self.c)
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::new(
            (0..n)
                .map(|i| match (self.c.get(i), o.c.get(i)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, o: &UPoly) -> UPoly {
        self + &(-o)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.c.iter().map(|x| -x).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![Scalar::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += &(a * b);
            }
        }
        UPoly::new(c)
    }
}

/// Binary form of explicit degree `d`; coefficient `k` multiplies `s^(d−k)·t^k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomPoly {
    c: Vec<Scalar>,
}

impl HomPoly {
    /// Panics on an empty coefficient list.
    pub fn new(c: Vec<Scalar>) -> Self {
        assert!(!c.is_empty(), "a form needs at least one coefficient");
        HomPoly { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        HomPoly::new(c.iter().map(|&x| Scalar::int(x)).collect())
    }

    pub fn zero(d: usize) -> Self {
        HomPoly {
            c: vec![Scalar::zero(); d + 1],
        }
    }

    pub fn constant(x: Scalar) -> Self {
        HomPoly { c: vec![x] }
    }

    pub fn s() -> Self {
        HomPoly::from_ints(&[1, 0])
    }

    pub fn t() -> Self {
        HomPoly::from_ints(&[0, 1])
    }

    /// The linear form `b·s − a·t` vanishing at `[a:b]`.
    pub fn vanishing_at(a: &Scalar, b: &Scalar) -> Self {
        HomPoly::new(vec![b.clone(), -a])
    }

    pub fn degree(&self) -> usize {
        self.c.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> &Scalar {
        &self.c[k]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.c.iter().all(Scalar::is_rational)
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        HomPoly::new(self.c.iter().map(|x| x * k).collect())
    }

    /// Scaled so the first nonzero coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.c.iter().find(|x| !x.is_zero()) {
            Some(l) => self.scale(&l.inv()),
            None => self.clone(),
        }
    }

    /// Multiplicity of the root `[1:0]`, i.e. the power of `t` dividing the form.
    pub fn mult_at_infinity(&self) -> usize {
        self.c.iter().take_while(|x| x.is_zero()).count()
    }

    /// Dehomogenize in the chart `t = 1`: a polynomial in `x = s/t`.
    pub fn chart(&self) -> UPoly {
        UPoly::new(self.c.iter().rev().cloned().collect())
    }

    /// Homogenize a chart polynomial to degree `d` (needs `deg p <= d`).
    pub fn from_chart(p: &UPoly, d: usize) -> Self {
        assert!(
            p.is_zero() || p.deg() <= d,
            "chart polynomial exceeds form degree"
        );
        let mut c = vec![Scalar::zero(); d + 1];
        for (j, x) in p.coeffs().iter().enumerate() {
            c[d - j] = x.clone();
        }
        HomPoly { c }
    }

    pub fn eval(&self, s: &Scalar, t: &Scalar) -> Scalar {
        if t.is_one() {
            return self.chart().eval(s);
        }
        let d = self.degree();
        let mut spow = vec![Scalar::one(); d + 1];
        let mut tpow = vec![Scalar::one(); d + 1];
        for i in 1..=d {
            spow[i] = &spow[i - 1] * s;
            tpow[i] = &tpow[i - 1] * t;
        }
        self.c
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| &(x * &spow[d - k]) * &tpow[k])
            .sum()
    }

    pub fn eval_rat(&self, s: &BigRational, t: &BigRational) -> Scalar {
        self.eval(&Scalar::rational(s.clone()), &Scalar::rational(t.clone()))
    }

    pub fn eval_f64(&self, s: f64, t: f64) -> f64 {
        let d = self.degree() as i32;
        self.c
            .iter()
            .enumerate()
            .map(|(k, x)| x.to_f64() * s.powi(d - k as i32) * t.powi(k as i32))
            .sum()
    }

    pub fn eval_c64(&self, s: Complex64, t: Complex64) -> Complex64 {
        let d = self.degree() as i32;
        self.c
            .iter()
            .enumerate()
            .map(|(k, x)| s.powi(d - k as i32) * t.powi(k as i32) * x.to_f64())
            .sum()
    }

    /// ∂/∂s
    pub fn ds(&self) -> Self {
        let d = self.degree();
        if d == 0 {
            return HomPoly::zero(0);
        }
        HomPoly::new(
            (0..d)
                .map(|k| &self.c[k] * &Scalar::int((d - k) as i64))
                .collect(),
        )
    }

    /// ∂/∂t
    pub fn dt(&self) -> Self {
        let d = self.degree();
        if d == 0 {
            return HomPoly::zero(0);
        }
        HomPoly::new(
            (1..=d)
                .map(|k| &self.c[k] * &Scalar::int(k as i64))
                .collect(),
        )
    }

    /// Swap the roles of `s` and `t`.
    pub fn swap_st(&self) -> Self {
        HomPoly::new(self.c.iter().rev().cloned().collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = HomPoly::constant(Scalar::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `s ← a·s + b·t`, `t ← c·s + d·t`.
    pub fn substitute(&self, a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar) -> Self {
        let n = self.degree();
        let ls = HomPoly::new(vec![a.clone(), b.clone()]);
        let lt = HomPoly::new(vec![c.clone(), d.clone()]);
        let mut sp = vec![HomPoly::constant(Scalar::one())];
        let mut tp = vec![HomPoly::constant(Scalar::one())];
        for i in 1..=n {
            sp.push(&sp[i - 1] * &ls);
            tp.push(&tp[i - 1] * &lt);
        }
        let mut acc = HomPoly::zero(n);
        for (k, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            acc = &acc + &(&sp[n - k] * &tp[k]).scale(x);
        }
        acc
    }

    /// Exact quotient by a nonzero form.
    pub fn div_exact(&self, g: &HomPoly) -> Result<HomPoly> {
        if g.is_zero() {
            return Err(Error::Invalid("division by the zero form".into()));
        }
        if g.degree() > self.degree() {
            if self.is_zero() {
                return Err(Error::Invalid("degree of divisor exceeds dividend".into()));
            }
            return Err(Error::Invalid("inexact form division".into()));
        }
        let n = self.degree() - g.degree();
        if self.is_zero() {
            return Ok(HomPoly::zero(n));
        }
        let mf = self.mult_at_infinity();
        let mg = g.mult_at_infinity();
        if mg > mf {
            return Err(Error::Invalid("inexact form division".into()));
        }
        let q = self.chart().div_exact(&g.chart())?;
        if q.deg() > n {
            return Err(Error::Invalid("inexact form division".into()));
        }
        Ok(HomPoly::from_chart(&q, n))
    }

    /// Monic gcd of two forms (not both zero).
    pub fn gcd(&self, g: &HomPoly) -> Result<HomPoly> {
        match (self.is_zero(), g.is_zero()) {
            (true, true) => Err(Error::Invalid("gcd of two zero forms".into())),
            (true, false) => Ok(g.monic()),
            (false, true) => Ok(self.monic()),
            (false, false) => {
                let m = self.mult_at_infinity().min(g.mult_at_infinity());
                let a = self.chart().gcd(&g.chart());
                Ok(HomPoly::from_chart(&a, a.deg() + m).monic())
            }
        }
    }

    /// Resultant of two forms from the Sylvester matrix of their formal degrees.
    pub fn resultant(&self, g: &HomPoly) -> Result<Scalar> {
        if self.is_zero() || g.is_zero() {
            return Err(Error::Invalid("resultant of a zero form".into()));
        }
        Ok(sylvester_det(&self.c, &g.c))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.c.iter().map(|x| x.to_string()).collect()
    }
}

/// Integer multiple of a rational polynomial with coprime coefficients.
fn primitive_ints(p: &UPoly) -> Vec<BigInt> {
    let den = p.c.iter().fold(BigInt::one(), |l, x| l.lcm(x.ra().denom()));
    let v: Vec<BigInt> =
        p.c.iter()
            .map(|x| x.ra().numer() * (&den / x.ra().denom()))
            .collect();
    primitive(v)
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let g = if v.last().is_some_and(|x| x.is_negative()) {
        -g
    } else {
        g
    };
    if !g.is_zero() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    v
}

fn int_divides(a: &[BigInt], g: &[BigInt]) -> bool {
    let dg = g.len() - 1;
    let lead = &g[dg];
    let mut r = a.to_vec();
    for i in (0..r.len().saturating_sub(dg)).rev() {
        let top = &r[i + dg];
        if top.is_zero() {
            continue;
        }
        let (q, rem) = top.div_rem(lead);
        if !rem.is_zero() {
            return false;
        }
        for (j, x) in g.iter().enumerate() {
            r[i + j] -= &q * x;
        }
    }
    r.iter().all(Zero::is_zero)
}

/// Heuristic gcd of integer polynomials (ascending coefficients): evaluate at
/// a large integer, take the integer gcd and read the digits back, accepting
/// only a candidate that divides both inputs.
fn heuristic_gcd(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let norm = |v: &[BigInt]| v.iter().map(|x| x.abs()).max().unwrap_or_default();
    let mut xi: BigInt = 2 * norm(a).min(norm(b)) + 29;
    let eval = |v: &[BigInt], x: &BigInt| v.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c);
    for _ in 0..6 {
        let mut gamma = eval(a, &xi).gcd(&eval(b, &xi));
        if !gamma.is_zero() {
            let half = &xi / 2;
            let mut g = vec![];
            while !gamma.is_zero() {
                let mut d = gamma.mod_floor(&xi);
                if d > half {
                    d -= &xi;
                }
                gamma = (gamma - &d) / &xi;
                g.push(d);
            }
            let g = primitive(g);
            if g.len() == 1 {
                return Some(vec![BigInt::one()]);
            }
            if int_divides(a, &g) && int_divides(b, &g) {
                return Some(g);
            }
        }
        xi = xi * 73794 / 27011;
    }
    None
}

/// Sylvester determinant for coefficient vectors in the same (descending or
/// ascending) convention.
pub fn sylvester_det(f: &[Scalar], g: &[Scalar]) -> Scalar {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    if size == 0 {
        return Scalar::one();
    }
    if f.iter().chain(g).all(Scalar::is_rational) {
        return sylvester_det_rational(f, g);
    }
    let mut rows = vec![vec![Scalar::zero(); size]; size];
    for i in 0..n {
        for (j, x) in f.iter().enumerate() {
            rows[i][i + j] = x.clone();
        }
    }
    for i in 0..m {
        for (j, x) in g.iter().enumerate() {
            rows[n + i][i + j] = x.clone();
        }
    }
    det(rows)
}

/// Rational case on cleared denominators: `Res(a·f, b·g) = aⁿ bᵐ Res(f, g)`.
fn sylvester_det_rational(f: &[Scalar], g: &[Scalar]) -> Scalar {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let clear = |v: &[Scalar]| {
        let den = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.ra().denom()));
        let ints: Vec<BigInt> = v
            .iter()
            .map(|x| x.ra().numer() * (&den / x.ra().denom()))
            .collect();
        (den, ints)
    };
    let (a, fi) = clear(f);
    let (b, gi) = clear(g);
    let size = m + n;
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    for i in 0..n {
        for (j, x) in fi.iter().enumerate() {
            rows[i][i + j] = x.clone();
        }
    }
    for i in 0..m {
        for (j, x) in gi.iter().enumerate() {
            rows[n + i][i + j] = x.clone();
        }
    }
    let scale = num_traits::pow(a, n) * num_traits::pow(b, m);
    Scalar::rational(BigRational::new(det_int(rows), scale))
}

impl fmt::Debug for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut terms = vec![];
        for (k, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let mono = match (d - k, k) {
                (0, 0) => String::new(),
                (i, 0) => pw("s", i),
                (0, j) => pw("t", j),
                (i, j) => format!("{}{}", pw("s", i), pw("t", j)),
            };
            let coef = x.to_string();
            let coef = if mono.is_empty() {
                format!("({coef})")
            } else if x.is_one() {
                String::new()
            } else if coef == "-1" {
                "-".to_string()
            } else if x.is_rational() {
                coef
            } else {
                format!("({coef})")
            };
            terms.push(format!("{coef}{mono}"));
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = terms[0].clone();
        for t in &terms[1..] {
            if t.starts_with('-') {
                out.push_str(t);
            } else {
                out.push('+');
                out.push_str(t);
            }
        }
        f.write_str(&out)
    }
}

fn pw(v: &str, e: usize) -> String {
    if e == 1 {
        v.to_string()
    } else {
        format!("{v}^{e}")
    }
}

impl Add for &HomPoly {
    type Output = HomPoly;
    fn add(self, o: &HomPoly) -> HomPoly {
        assert_eq!(
            self.degree(),
            o.degree(),
            "adding forms of different degree"
        );
        HomPoly::new(self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &HomPoly {
    type Output = HomPoly;
    fn sub(self, o: &HomPoly) -> HomPoly {
        assert_eq!(
            self.degree(),
            o.degree(),
            "subtracting forms of different degree"
        );
        HomPoly::new(self.c.iter().zip(&o.c).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &HomPoly {
    type Output = HomPoly;
    fn neg(self) -> HomPoly {
        HomPoly::new(self.c.iter().map(|x| -x).collect())
    }
}

impl Mul for &HomPoly {
    type Output = HomPoly;
    fn mul(self, o: &HomPoly) -> HomPoly {
        let mut c = vec![Scalar::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += &(a * b);
                }
            }
        }
        HomPoly::new(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(c: &[i64]) -> HomPoly {
        HomPoly::from_ints(c)
    }

    #[test]
    fn multiply_forms() {
        // (s − t)(s + t) = s² − t²
        assert_eq!(&h(&[1, -1]) * &h(&[1, 1]), h(&[1, 0, -1]));
        // s·(βs − αt)
        let p = &HomPoly::s() * &HomPoly::vanishing_at(&Scalar::int(3), &Scalar::int(2));
        assert_eq!(p, h(&[2, -3, 0]));
    }

    #[test]
    fn gcd_forms() {
        let g = h(&[1, 0, -1]).gcd(&h(&[1, -2, 1])).unwrap();
        assert_eq!(g, h(&[1, -1]));
        let f = h(&[2, 4, 0]);
        assert_eq!(f.gcd(&HomPoly::zero(3)).unwrap(), h(&[1, 2, 0]));
        // shared root at [1:0]: t·s and t²
        assert_eq!(h(&[0, 1, 0]).gcd(&h(&[0, 0, 1])).unwrap(), h(&[0, 1]));
        assert!(HomPoly::zero(1).gcd(&HomPoly::zero(2)).is_err());
    }

    #[test]
    fn resultants() {
        assert_eq!(
            HomPoly::s().resultant(&HomPoly::t()).unwrap(),
            Scalar::one()
        );
        assert_eq!(h(&[1, -1]).resultant(&h(&[1, 1])).unwrap(), Scalar::int(2));
        let f = h(&[1, -1]);
        let g = &f * &h(&[3, 5, 7]);
        assert!(f.resultant(&g).unwrap().is_zero());
    }

    #[test]
    fn derivatives_and_euler() {
        let f = h(&[3, -1, 4, 1]);
        // Euler: s·∂s f + t·∂t f = d·f
        let e = &(&HomPoly::s() * &f.ds()) + &(&HomPoly::t() * &f.dt());
        assert_eq!(e, f.scale(&Scalar::int(3)));
    }

    #[test]
    fn yun_decomposition() {
        let a = UPoly::new(vec![Scalar::int(-1), Scalar::one()]);
        let b = UPoly::new(vec![Scalar::int(2), Scalar::one()]);
        let f = &(&a * &b.pow(2)) * &UPoly::constant(Scalar::int(5));
        let dec = f.squarefree_decomposition();
        assert_eq!(dec, vec![(a, 1), (b, 2)]);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = UPoly::new(vec![
            Scalar::int(1),
            Scalar::frac(1, 2),
            Scalar::int(0),
            Scalar::sqrt2(),
        ]);
        let xs: Vec<Scalar> = (0..4).map(Scalar::int).collect();
        let ys: Vec<Scalar> = xs.iter().map(|x| f.eval(x)).collect();
        assert_eq!(UPoly::interpolate(&xs, &ys), f);
    }
}
