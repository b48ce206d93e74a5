//! Real root isolation (Descartes bisection, or Sturm sequences over Q(√2)), plus
//! numerical complex roots.
//!
//! Roots of a binary form are reported in the chart `t = 1`, as values of
//! `x = s/t`; the root `[1:0]` is flagged separately.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{HomPoly, UPoly};
use super::scalar::{fmt_rat, rat_to_f64, Scalar};

/// Where a root sits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootLoc {
    /// The point `[1:0]`.
    Infinity,
    /// `[x:1]` with `x` known exactly in the field.
    Exact(Scalar),
    /// `[x:1]` with `lo < x < hi`, the only root of the factor in that range.
    Interval { lo: BigRational, hi: BigRational },
    /// A conjugate pair; the box holds the member with positive imaginary part.
    /// Located numerically, so the box is an estimate, not a certificate.
    Complex {
        re: (BigRational, BigRational),
        im: (BigRational, BigRational),
    },
}

/// An isolated root of a binary form together with its defining factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBox {
    /// Square-free factor (as a chart polynomial in `x = s/t`) the root belongs to.
    pub factor: UPoly,
    pub loc: RootLoc,
    pub multiplicity: usize,
}

impl RootBox {
    pub fn infinity(multiplicity: usize) -> Self {
        RootBox {
            factor: UPoly::constant(Scalar::one()),
            loc: RootLoc::Infinity,
            multiplicity,
        }
    }

    pub fn exact(x: Scalar, multiplicity: usize) -> Self {
        RootBox {
            factor: UPoly::linear_root(x.clone()),
            loc: RootLoc::Exact(x),
            multiplicity,
        }
    }

    pub fn is_real(&self) -> bool {
        !matches!(self.loc, RootLoc::Complex { .. })
    }

    /// Midpoint as a homogeneous parameter `(s, t)`.
    pub fn approx(&self) -> (Complex64, Complex64) {
        let one = Complex64::new(1.0, 0.0);
        match &self.loc {
            RootLoc::Infinity => (one, Complex64::new(0.0, 0.0)),
            RootLoc::Exact(x) => (Complex64::new(x.to_f64(), 0.0), one),
            RootLoc::Interval { lo, hi } => (
                Complex64::new(0.5 * (rat_to_f64(lo) + rat_to_f64(hi)), 0.0),
                one,
            ),
            RootLoc::Complex { re, im } => (
                Complex64::new(
                    0.5 * (rat_to_f64(&re.0) + rat_to_f64(&re.1)),
                    0.5 * (rat_to_f64(&im.0) + rat_to_f64(&im.1)),
                ),
                one,
            ),
        }
    }

    /// Exact homogeneous parameter when the root is rational or `[1:0]`.
    pub fn exact_param(&self) -> Option<(Scalar, Scalar)> {
        match &self.loc {
            RootLoc::Infinity => Some((Scalar::one(), Scalar::zero())),
            RootLoc::Exact(x) => Some((x.clone(), Scalar::one())),
            _ => None,
        }
    }

    /// Width of the isolating interval (zero for exact roots).
    pub fn width(&self) -> Option<BigRational> {
        match &self.loc {
            RootLoc::Infinity | RootLoc::Exact(_) => Some(BigRational::zero()),
            RootLoc::Interval { lo, hi } => Some(hi - lo),
            RootLoc::Complex { .. } => None,
        }
    }

    pub fn to_json(&self) -> RootBoxJson {
        let (kind, lo, hi, im) = match &self.loc {
            RootLoc::Infinity => ("infinity", None, None, None),
            RootLoc::Exact(x) => ("exact", Some(x.to_string()), Some(x.to_string()), None),
            RootLoc::Interval { lo, hi } => {
                ("real-algebraic", Some(fmt_rat(lo)), Some(fmt_rat(hi)), None)
            }
            RootLoc::Complex { re, im } => (
                "complex-conjugate-pair",
                Some(fmt_rat(&re.0)),
                Some(fmt_rat(&re.1)),
                Some([fmt_rat(&im.0), fmt_rat(&im.1)]),
            ),
        };
        RootBoxJson {
            kind: kind.to_string(),
            lo,
            hi,
            im,
            multiplicity: self.multiplicity,
            factor: self.factor.coeffs().iter().map(|c| c.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootBoxJson {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lo: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hi: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub im: Option<[String; 2]>,
    pub multiplicity: usize,
    /// Ascending coefficients of the defining factor in `x = s/t`.
    pub factor: Vec<String>,
}

/// Real roots of a form plus the number of complex-conjugate pairs.
#[derive(Clone, Debug)]
pub struct RealRoots {
    pub roots: Vec<RootBox>,
    pub complex_pairs: usize,
}

/// Sturm sequence of a square-free polynomial.
pub fn sturm_sequence(p: &UPoly) -> Vec<UPoly> {
    let mut seq = vec![p.clone(), p.derivative()];
    while !seq.last().unwrap().is_zero() && seq.last().unwrap().deg() > 0 {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        // keep positive-multiple remainders small: normalize magnitude, keep sign
        let l = r.lead();
        let k = l.abs().inv();
        seq.push(-&r.scale(&k));
    }
    seq
}

fn variations_at(seq: &[UPoly], x: &BigRational) -> usize {
    let signs: Vec<i32> = seq
        .iter()
        .map(|p| p.eval_rat(x).signum())
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct roots in `(lo, hi]`.
pub fn count_roots(seq: &[UPoly], lo: &BigRational, hi: &BigRational) -> usize {
    variations_at(seq, lo).saturating_sub(variations_at(seq, hi))
}

/// Rational bound `B` with every real root in `(-B, B)`.
pub fn cauchy_bound(p: &UPoly) -> BigRational {
    let m = p.monic();
    let mut best = BigRational::zero();
    for c in &m.coeffs()[..m.deg()] {
        let a = c.abs_upper();
        if a > best {
            best = a;
        }
    }
    best + BigRational::one()
}

/// Isolate the real roots of a square-free chart polynomial.
///
/// Rational polynomials go through Descartes' rule of signs on integer
/// coefficients; polynomials with `√2` coefficients through a Sturm sequence.
pub fn isolate_squarefree(p: &UPoly) -> Vec<RootLoc> {
    if p.deg() == 0 {
        return vec![];
    }
    let mut out = if p.is_rational() {
        isolate_descartes(p)
    } else {
        isolate_sturm(p)
    };
    out.sort_by(|a, b| loc_key(a).total_cmp(&loc_key(b)));
    out
}

fn isolate_sturm(p: &UPoly) -> Vec<RootLoc> {
    let seq = sturm_sequence(p);
    let b = cauchy_bound(p);
    let mut out = vec![];
    let mut stack = vec![(-b.clone(), b)];
    let two = BigRational::from_integer(BigInt::from(2));
    // (lo, hi]: ±b are never roots; a midpoint root is recorded when found
    while let Some((lo, hi)) = stack.pop() {
        let hi_root = p.eval_rat(&hi).is_zero();
        let n = count_roots(&seq, &lo, &hi) - usize::from(hi_root);
        if n == 0 {
            continue;
        }
        if n == 1 && !hi_root && !p.eval_rat(&lo).is_zero() {
            out.push(RootLoc::Interval { lo, hi });
            continue;
        }
        let mid = (&lo + &hi) / &two;
        if p.eval_rat(&mid).is_zero() {
            out.push(RootLoc::Exact(Scalar::rational(mid.clone())));
        }
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out
}

/// `p(x + 1)`, ascending coefficients.
fn taylor_shift(p: &mut [BigInt]) {
    let n = p.len();
    for i in 0..n.saturating_sub(1) {
        for j in (i..n - 1).rev() {
            let t = p[j + 1].clone();
            p[j] += t;
        }
    }
}

/// Descartes bound on the roots in `(0, 1)`.
fn variations_01(p: &[BigInt]) -> usize {
    let mut q: Vec<BigInt> = p.iter().rev().cloned().collect();
    taylor_shift(&mut q);
    let signs: Vec<bool> = q
        .iter()
        .filter(|x| !x.is_zero())
        .map(|x| x.is_negative())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `2ⁿ p(x/2)`.
fn halve(p: &[BigInt]) -> Vec<BigInt> {
    let n = p.len() - 1;
    p.iter().enumerate().map(|(i, x)| x << (n - i)).collect()
}

/// Exact quotient by `2x − 1`.
fn deflate_half(p: &[BigInt]) -> Vec<BigInt> {
    // p = (2x − 1)·q, so q_{i−1} = (p_i + q_i)/2 from the top down
    let n = p.len() - 1;
    let mut q = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for i in (1..=n).rev() {
        let v: BigInt = (&p[i] + &carry) / 2;
        q[i - 1] = v.clone();
        carry = v;
    }
    q
}

fn primitive_integer(p: &UPoly) -> Vec<BigInt> {
    let den = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |l, x| l.lcm(x.ra().denom()));
    let v: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|x| x.ra().numer() * (&den / x.ra().denom()))
        .collect();
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    v.into_iter().map(|x| x / &g).collect()
}

fn isolate_descartes(p: &UPoly) -> Vec<RootLoc> {
    let mut a = primitive_integer(p);
    let mut out = vec![];
    if a[0].is_zero() {
        out.push(RootLoc::Exact(Scalar::zero()));
        a.remove(0);
    }
    if a.len() < 2 {
        return out;
    }
    let n = a.len() - 1;
    let lead_bits = a[n].bits();
    let top = a.iter().map(|x| x.bits()).max().unwrap_or(0);
    let e = (top + 2).saturating_sub(lead_bits) as usize;
    let bound = BigRational::from_integer(BigInt::one() << e);
    for negative in [false, true] {
        // q(x) = p(±2^e x) on (0, 1)
        let q: Vec<BigInt> = a
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let v = x << (e * i);
                if negative && i % 2 == 1 {
                    -v
                } else {
                    v
                }
            })
            .collect();
        let to_param = |c: &BigInt, k: usize| {
            let x = BigRational::new(c.clone(), BigInt::one() << k) * &bound;
            if negative {
                -x
            } else {
                x
            }
        };
        let mut stack = vec![(q, BigInt::zero(), 0usize)];
        while let Some((mut q, c, k)) = stack.pop() {
            let mid_value = q
                .iter()
                .enumerate()
                .fold(BigInt::zero(), |acc, (i, x)| acc + (x << (q.len() - 1 - i)));
            let mid_root = mid_value.is_zero();
            if mid_root {
                let m = BigInt::from(2) * &c + 1;
                out.push(RootLoc::Exact(Scalar::rational(to_param(&m, k + 1))));
                q = deflate_half(&q);
            }
            if q.len() < 2 {
                continue;
            }
            match variations_01(&q) {
                0 => {}
                // the interval would contain the midpoint root just taken out
                1 if !mid_root => {
                    let (x0, x1) = (to_param(&c, k), to_param(&(&c + 1), k));
                    let (lo, hi) = if negative { (x1, x0) } else { (x0, x1) };
                    out.push(RootLoc::Interval { lo, hi });
                }
                _ => {
                    let left = halve(&q);
                    let mut right = left.clone();
                    taylor_shift(&mut right);
                    stack.push((left, BigInt::from(2) * &c, k + 1));
                    stack.push((right, BigInt::from(2) * &c + 1, k + 1));
                }
            }
        }
    }
    out
}

fn loc_key(l: &RootLoc) -> f64 {
    match l {
        RootLoc::Exact(x) => x.to_f64(),
        RootLoc::Interval { lo, .. } => rat_to_f64(lo),
        _ => 0.0,
    }
}

/// All real projective roots of a form with multiplicities.
///
/// Panics on the zero form.
pub fn real_roots(f: &HomPoly) -> RealRoots {
    assert!(!f.is_zero(), "real roots of the zero form");
    let mut roots = vec![];
    let minf = f.mult_at_infinity();
    let mut real_count = 0;
    if minf > 0 {
        roots.push(RootBox::infinity(minf));
        real_count += minf;
    }
    let chart = f.chart();
    for (factor, mult) in chart.squarefree_decomposition() {
        let locs = if factor.deg() == 1 {
            let c = factor.coeffs();
            vec![RootLoc::Exact(-(&c[0] / &c[1]))]
        } else {
            isolate_squarefree(&factor)
        };
        // irrational roots are defined by the factor without its rational roots
        let mut rest = factor.clone();
        for loc in &locs {
            if let RootLoc::Exact(x) = loc {
                rest = rest
                    .div_exact(&UPoly::linear_root(x.clone()))
                    .expect("exact root");
            }
        }
        let mut locs = locs;
        if rest.is_rational() {
            for loc in locs.iter_mut() {
                if let RootLoc::Interval { lo, hi } = loc {
                    if let Some(r) = small_rational_root(&rest, lo, hi) {
                        let x = Scalar::rational(r);
                        rest = rest
                            .div_exact(&UPoly::linear_root(x.clone()))
                            .expect("exact root");
                        *loc = RootLoc::Exact(x);
                    }
                }
            }
        }
        for loc in locs {
            let factor = match &loc {
                RootLoc::Exact(x) => UPoly::linear_root(x.clone()),
                _ => rest.clone(),
            };
            roots.push(RootBox {
                factor,
                loc,
                multiplicity: mult,
            });
            real_count += mult;
        }
    }
    roots.sort_by(|a, b| order_key(a).partial_cmp(&order_key(b)).unwrap());
    RealRoots {
        roots,
        complex_pairs: (f.degree() - real_count) / 2,
    }
}

/// Simplest rational strictly inside `(lo, hi)`.
pub fn simplest_rational(lo: &BigRational, hi: &BigRational) -> BigRational {
    let a = lo.floor();
    let one = BigRational::one();
    if &(&a + &one) < hi {
        return a + one;
    }
    let (l, h) = (lo - &a, hi - &a);
    if l.is_zero() {
        // simplest in (0, h) with h <= 1 is 1/n
        return a + BigRational::new(BigInt::one(), (h.recip()).floor().to_integer() + 1);
    }
    a + simplest_rational(&h.recip(), &l.recip()).recip()
}

/// The rational root in an isolating interval, if its denominator is at most
/// `2^20`: after shrinking below `2^-40` it is the simplest rational there.
fn small_rational_root(p: &UPoly, lo: &BigRational, hi: &BigRational) -> Option<BigRational> {
    let b = RootBox {
        factor: p.clone(),
        loc: RootLoc::Interval {
            lo: lo.clone(),
            hi: hi.clone(),
        },
        multiplicity: 1,
    };
    for bits in [4usize, 16, 40] {
        let w = BigRational::new(BigInt::one(), BigInt::one() << bits);
        match refine(&b, &w).loc {
            RootLoc::Exact(x) => return Some(x.ra().clone()),
            RootLoc::Interval { lo, hi } => {
                let r = simplest_rational(&lo, &hi);
                if p.eval_rat(&r).is_zero() {
                    return Some(r);
                }
            }
            _ => unreachable!(),
        }
    }
    None
}

fn order_key(r: &RootBox) -> f64 {
    match &r.loc {
        RootLoc::Infinity => f64::INFINITY,
        _ => r.approx().0.re,
    }
}

/// Shrink an isolating interval to width at most `width`.
pub fn refine(b: &RootBox, width: &BigRational) -> RootBox {
    let RootLoc::Interval { lo, hi } = &b.loc else {
        return b.clone();
    };
    let p = &b.factor;
    let two = BigRational::from_integer(BigInt::from(2));
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    let slo = p.eval_rat(&lo).signum();
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / &two;
        let sm = p.eval_rat(&mid).signum();
        if sm == 0 {
            return RootBox {
                factor: UPoly::linear_root(Scalar::rational(mid.clone())),
                loc: RootLoc::Exact(Scalar::rational(mid)),
                multiplicity: b.multiplicity,
            };
        }
        if sm == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RootBox {
        factor: b.factor.clone(),
        loc: RootLoc::Interval { lo, hi },
        multiplicity: b.multiplicity,
    }
}

/// Approximate all complex roots of a chart polynomial (Aberth–Ehrlich, then
/// Newton polishing). Returns `deg p` values.
pub fn complex_roots(p: &UPoly) -> Vec<Complex64> {
    let n = p.deg();
    if n == 0 {
        return vec![];
    }
    let m = p.monic();
    let c: Vec<Complex64> = m
        .coeffs()
        .iter()
        .map(|x| Complex64::new(x.to_f64(), 0.0))
        .collect();
    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut f = Complex64::new(0.0, 0.0);
        let mut df = Complex64::new(0.0, 0.0);
        for k in c.iter().rev() {
            df = df * z + f;
            f = f * z + k;
        }
        (f, df)
    };
    // initial guesses on a circle of the Fujiwara radius
    let radius = (0..n)
        .map(|k| (c[k].norm()).powf(1.0 / (n - k) as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3)
        * 2.0;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let th = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4;
            Complex64::from_polar(radius, th)
        })
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (f, df) = eval(z[i]);
            if f.norm() == 0.0 {
                continue;
            }
            let ratio = f / df;
            let s: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    let d = z[i] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / (1.0 + z[i].norm()));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    for zi in z.iter_mut() {
        for _ in 0..4 {
            let (f, df) = eval(*zi);
            if df.norm() == 0.0 {
                break;
            }
            let step = f / df;
            if !step.is_finite() {
                break;
            }
            *zi -= step;
        }
    }
    z
}

/// One box per complex-conjugate pair of roots of a form, with multiplicity.
///
/// The number of pairs per square-free factor is certified by exact real root
/// isolation;
/// only the locations are numerical.
pub fn complex_pair_roots(f: &HomPoly) -> Vec<RootBox> {
    assert!(!f.is_zero(), "complex roots of the zero form");
    let mut out = vec![];
    for (factor, mult) in f.chart().squarefree_decomposition() {
        let n = factor.deg();
        if n < 2 {
            continue;
        }
        let factor = without_rational_roots(&factor);
        let n = factor.deg();
        if n < 2 {
            continue;
        }
        let nreal = isolate_squarefree(&factor).len();
        let mut z = complex_roots(&factor);
        z.sort_by(|a, b| b.im.abs().total_cmp(&a.im.abs()));
        let mut upper: Vec<Complex64> = z[..n - nreal]
            .iter()
            .filter(|w| w.im > 0.0)
            .cloned()
            .collect();
        upper.sort_by(|a, b| a.re.total_cmp(&b.re));
        for w in upper {
            out.push(RootBox {
                factor: factor.clone(),
                loc: complex_box(&factor, w),
                multiplicity: mult,
            });
        }
    }
    out
}

/// A squarefree polynomial divided by its linear factors over the field.
fn without_rational_roots(p: &UPoly) -> UPoly {
    let mut rest = p.clone();
    for loc in isolate_squarefree(p) {
        let x = match loc {
            RootLoc::Exact(x) => x,
            RootLoc::Interval { lo, hi } if p.is_rational() => {
                match small_rational_root(p, &lo, &hi) {
                    Some(r) => Scalar::rational(r),
                    None => continue,
                }
            }
            _ => continue,
        };
        rest = rest.div_exact(&UPoly::linear_root(x)).expect("exact root");
    }
    rest
}

/// Rational approximation of a float with denominator `2^bits`.
pub fn rat_near(x: f64, bits: u32) -> BigRational {
    let scale = 2f64.powi(bits as i32);
    let n = (x * scale).round();
    let num = BigInt::from(n as i128);
    BigRational::new(num, BigInt::one() << bits as usize)
}

/// Complex root box: Newton inclusion radius `n·|f/f'|` around `z`.
pub fn complex_box(p: &UPoly, z: Complex64) -> RootLoc {
    let n = p.deg().max(1) as f64;
    let f = p.eval_c64(z);
    let df = p.derivative().eval_c64(z);
    let r = (n * f.norm() / df.norm()).max(1e-14 * (1.0 + z.norm()));
    let r = if r.is_finite() { r } else { 1e-6 };
    let bits = 52;
    let z = if z.im < 0.0 { z.conj() } else { z };
    RootLoc::Complex {
        re: (rat_near(z.re - r, bits), rat_near(z.re + r, bits)),
        im: (rat_near(z.im - r, bits), rat_near(z.im + r, bits)),
    }
}

/// Whether the real root box contains the rational `x`.
pub fn is_inside(loc: &RootLoc, x: &BigRational) -> bool {
    match loc {
        RootLoc::Exact(y) => *y == Scalar::rational(x.clone()),
        RootLoc::Interval { lo, hi } => lo < x && x < hi,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(c: &[i64]) -> HomPoly {
        HomPoly::from_ints(c)
    }

    #[test]
    fn roots_of_stu() {
        // s·t·(s − t)
        let f = &(&HomPoly::s() * &HomPoly::t()) * &h(&[1, -1]);
        let rr = real_roots(&f);
        assert_eq!(rr.complex_pairs, 0);
        assert_eq!(rr.roots.len(), 3);
        assert_eq!(rr.roots[2].loc, RootLoc::Infinity);
        assert_eq!(rr.roots[0].loc, RootLoc::Exact(Scalar::zero()));
        assert_eq!(rr.roots[1].loc, RootLoc::Exact(Scalar::one()));
    }

    #[test]
    fn complex_pair_only() {
        let rr = real_roots(&h(&[1, 0, 1]));
        assert!(rr.roots.is_empty());
        assert_eq!(rr.complex_pairs, 1);
    }

    #[test]
    fn refine_sqrt2() {
        let rr = real_roots(&h(&[1, 0, -2]));
        let pos = rr.roots.iter().find(|r| r.approx().0.re > 0.0).unwrap();
        let two = BigRational::from_integer(BigInt::from(2));
        let w = BigRational::new(BigInt::from(1), BigInt::from(1000));
        let b = refine(pos, &w);
        let RootLoc::Interval { lo, hi } = b.loc else {
            panic!("irrational root must stay an interval")
        };
        assert!(&hi - &lo <= w);
        assert!(&lo * &lo < two && &hi * &hi > two);
        let b = refine(pos, &BigRational::new(BigInt::from(1), BigInt::from(10000)));
        let RootLoc::Interval { lo, hi } = b.loc else {
            panic!("irrational root must stay an interval")
        };
        assert!(rat_to_f64(&lo) > 1.414 && rat_to_f64(&hi) < 1.4143);
    }

    #[test]
    fn multiplicities_sum_to_degree() {
        // (s − 2t)² (s² + t²) t
        let f = &(&h(&[1, -2]).pow(2) * &h(&[1, 0, 1])) * &HomPoly::t();
        let rr = real_roots(&f);
        let total: usize = rr.roots.iter().map(|r| r.multiplicity).sum();
        assert_eq!(total + 2 * rr.complex_pairs, 5);
    }

    #[test]
    fn aberth_finds_all() {
        let p = h(&[1, 0, 0, 0, 1]).chart(); // x^4 + 1
        let z = complex_roots(&p);
        assert_eq!(z.len(), 4);
        for r in z {
            assert!((r.powi(4) + 1.0).norm() < 1e-12);
        }
    }
}
