//! Rational curves `[p0:…:p4]` in RP⁴ or in the slice `x0 = 0`.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::interval::{eval_form_chart, RatInterval};
use crate::exact::roots::{complex_pair_roots, real_roots, RootBox, RootLoc};
use crate::exact::{HomPoly, Scalar};
use crate::projective::{ProjPoint, ProjTransform, J};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ambient {
    /// RP³ as the slice `x0 = 0` of RP⁴.
    #[serde(rename = "RP3")]
    Rp3Slice,
    #[serde(rename = "RP4")]
    Rp4,
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ambient::Rp3Slice => "RP3",
            Ambient::Rp4 => "RP4",
        })
    }
}

/// Five equal-degree forms without a common factor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalCurve {
    ambient: Ambient,
    polys: Vec<HomPoly>,
}

impl RationalCurve {
    /// Checked constructor; the forms must already be coprime.
    pub fn new(ambient: Ambient, polys: Vec<HomPoly>) -> Result<Self> {
        let polys = normalize_len(ambient, polys)?;
        let g = common_gcd(&polys)?;
        if g.degree() > 0 {
            return Err(Error::Invalid(format!(
                "coordinates share the factor {g}; reduce first"
            )));
        }
        Ok(RationalCurve { ambient, polys })
    }

    /// Divide out the common factor of the coordinates.
    pub fn reduce(ambient: Ambient, raw: Vec<HomPoly>) -> Result<Self> {
        let polys = normalize_len(ambient, raw)?;
        let g = common_gcd(&polys)?;
        if g.degree() == 0 {
            return Ok(RationalCurve { ambient, polys });
        }
        let polys = polys
            .iter()
            .map(|p| p.div_exact(&g))
            .collect::<Result<Vec<_>>>()?;
        Ok(RationalCurve { ambient, polys })
    }

    /// Curve from integer coefficient rows (one row per coordinate).
    pub fn from_ints(ambient: Ambient, rows: &[&[i64]]) -> Result<Self> {
        let polys = rows.iter().map(|r| HomPoly::from_ints(r)).collect();
        RationalCurve::new(ambient, polys)
    }

    /// Slice curve `[0:q1:q2:q3:q4]`.
    pub fn slice(q: [HomPoly; 4]) -> Result<Self> {
        RationalCurve::new(Ambient::Rp3Slice, q.to_vec())
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn polys(&self) -> &[HomPoly] {
        &self.polys
    }

    pub fn poly(&self, i: usize) -> &HomPoly {
        &self.polys[i]
    }

    pub fn degree(&self) -> usize {
        self.polys[0].degree()
    }

    /// `−p0² + p1² + p2² + p3² − p4²`.
    pub fn quadric_residual(&self) -> Result<HomPoly> {
        if self.ambient != Ambient::Rp4 {
            return Err(Error::Invalid(
                "quadric membership needs an RP4 curve".into(),
            ));
        }
        let mut acc = HomPoly::zero(2 * self.degree());
        for (p, &j) in self.polys.iter().zip(J.iter()) {
            let sq = p * p;
            acc = if j > 0 { &acc + &sq } else { &acc - &sq };
        }
        Ok(acc)
    }

    pub fn on_quadric(&self) -> Result<bool> {
        Ok(self.quadric_residual()?.is_zero())
    }

    /// Exact image of the parameter `[s:t]`.
    pub fn eval(&self, s: &Scalar, t: &Scalar) -> Result<ProjPoint> {
        ProjPoint::new(self.polys.iter().map(|p| p.eval(s, t)).collect())
    }

    pub fn eval_f64(&self, s: f64, t: f64) -> Vec<f64> {
        self.polys.iter().map(|p| p.eval_f64(s, t)).collect()
    }

    pub fn eval_c64(&self, s: Complex64, t: Complex64) -> Vec<Complex64> {
        self.polys.iter().map(|p| p.eval_c64(s, t)).collect()
    }

    /// Image of an isolated root: exact, enclosed, or numerical.
    pub fn eval_root(&self, r: &RootBox) -> CurvePoint {
        eval_forms_root(&self.polys, r)
    }

    /// Parameters whose image is `x`, real and complex.
    ///
    /// They are the common roots of the minors `p_i·x_j − p_j·x_i`.
    pub fn point_params(&self, x: &ProjPoint) -> Vec<RootBox> {
        let xc = x.coords();
        assert_eq!(xc.len(), self.polys.len(), "point dimension mismatch");
        let mut g: Option<HomPoly> = None;
        for i in 0..5 {
            for j in i + 1..5 {
                let m = &self.polys[i].scale(&xc[j]) - &self.polys[j].scale(&xc[i]);
                if m.is_zero() {
                    continue;
                }
                g = Some(match g {
                    None => m.monic(),
                    Some(g) => g.gcd(&m).expect("nonzero"),
                });
                if g.as_ref().unwrap().degree() == 0 {
                    return vec![];
                }
            }
        }
        let Some(g) = g else {
            // every minor vanishes: a constant curve sitting at x
            return vec![];
        };
        let mut out = real_roots(&g).roots;
        out.extend(complex_pair_roots(&g));
        out
    }

    /// Second spanning point of the tangent line at `[s:t]`.
    pub fn tangent_dir(&self, s: &Scalar, t: &Scalar) -> Result<ProjPoint> {
        let v: Vec<Scalar> = self.polys.iter().map(|p| p.eval(s, t)).collect();
        let w: Vec<Scalar> = if !t.is_zero() {
            self.polys.iter().map(|p| p.ds().eval(s, t)).collect()
        } else {
            self.polys.iter().map(|p| p.dt().eval(s, t)).collect()
        };
        let independent =
            (0..5).any(|i| (i + 1..5).any(|j| !(&(&v[i] * &w[j]) - &(&v[j] * &w[i])).is_zero()));
        if !independent {
            return Err(Error::Degenerate(format!(
                "tangent undefined at [{s}:{t}] (singular parameter)"
            )));
        }
        ProjPoint::new(w)
    }

    /// Tangent vector `d/dx c(x, 1)` at a complex chart parameter.
    pub fn tangent_c64(&self, x: Complex64) -> Vec<Complex64> {
        let one = Complex64::new(1.0, 0.0);
        self.polys.iter().map(|p| p.ds().eval_c64(x, one)).collect()
    }

    /// Precompose with a Möbius map.
    pub fn reparam(&self, m: &MobiusMap) -> RationalCurve {
        let [[a, b], [c, d]] = &m.m;
        RationalCurve {
            ambient: self.ambient,
            polys: self
                .polys
                .iter()
                .map(|p| p.substitute(a, b, c, d))
                .collect(),
        }
    }

    /// Same image traversed the other way: `[s:t] → [t:s]`.
    pub fn reversed(&self) -> RationalCurve {
        self.reparam(&MobiusMap::swap())
    }

    /// Negate the last coordinate (an isometry of the quadric and a mirror of RP³).
    pub fn mirror(&self) -> RationalCurve {
        let mut polys = self.polys.clone();
        polys[4] = -&polys[4];
        RationalCurve {
            ambient: self.ambient,
            polys,
        }
    }

    /// Apply a projective transform of RP⁴; the result lives in RP⁴.
    pub fn transform(&self, t: &ProjTransform) -> RationalCurve {
        let m = t.matrix();
        let polys = (0..5)
            .map(|i| {
                let mut acc = HomPoly::zero(self.degree());
                for (k, p) in self.polys.iter().enumerate() {
                    if !m[i][k].is_zero() {
                        acc = &acc + &p.scale(&m[i][k]);
                    }
                }
                acc
            })
            .collect();
        RationalCurve {
            ambient: Ambient::Rp4,
            polys,
        }
    }

    /// Reinterpret as the other ambient; a slice needs `p0 = 0`.
    pub fn with_ambient(&self, ambient: Ambient) -> Result<RationalCurve> {
        if ambient == Ambient::Rp3Slice && !self.polys[0].is_zero() {
            return Err(Error::Invalid("curve is not contained in x0 = 0".into()));
        }
        Ok(RationalCurve {
            ambient,
            polys: self.polys.clone(),
        })
    }

    /// Canonical representative of the projective class: scaled so the first
    /// nonzero coefficient is a positive rational and all coefficients have
    /// coprime integer rational and `√2` parts.
    pub fn canonical(&self) -> RationalCurve {
        let lead = self
            .polys
            .iter()
            .flat_map(|p| p.coeffs())
            .find(|x| !x.is_zero())
            .cloned()
            .unwrap_or_else(Scalar::one);
        let k = lead.inv();
        let polys: Vec<HomPoly> = self.polys.iter().map(|p| p.scale(&k)).collect();
        let parts = polys
            .iter()
            .flat_map(|p| p.coeffs())
            .flat_map(|x| [x.ra(), x.rb()]);
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for r in parts.clone() {
            den = den.lcm(r.denom());
        }
        for r in parts {
            num = num.gcd(&(r.numer() * (&den / r.denom())));
        }
        let k = Scalar::rational(BigRational::new(den, num));
        RationalCurve {
            ambient: self.ambient,
            polys: polys.iter().map(|p| p.scale(&k)).collect(),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.polys.iter().all(HomPoly::is_rational)
    }
}

impl fmt::Display for RationalCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.polys.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(" : "))
    }
}

impl fmt::Debug for RationalCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {self}", self.ambient)
    }
}

/// Image of a root parameter.
#[derive(Clone, Debug)]
pub enum CurvePoint {
    Exact(ProjPoint),
    /// Homogeneous coordinates enclosed in rational intervals.
    Enclosed(Vec<RatInterval>),
    /// Numerical image of a complex parameter.
    Approx(Vec<Complex64>),
}

impl CurvePoint {
    /// Floating-point homogeneous coordinates.
    pub fn approx(&self) -> Vec<Complex64> {
        match self {
            CurvePoint::Exact(p) => p
                .to_f64()
                .into_iter()
                .map(|x| Complex64::new(x, 0.0))
                .collect(),
            CurvePoint::Enclosed(b) => b.iter().map(|i| Complex64::new(i.mid_f64(), 0.0)).collect(),
            CurvePoint::Approx(z) => z.clone(),
        }
    }
}

/// Image of a root parameter under a tuple of coprime forms.
pub fn eval_forms_root(forms: &[HomPoly], r: &RootBox) -> CurvePoint {
    if let Some((s, t)) = r.exact_param() {
        let p = ProjPoint::new(forms.iter().map(|p| p.eval(&s, &t)).collect())
            .expect("coprime forms have no base point");
        return CurvePoint::Exact(p);
    }
    match &r.loc {
        RootLoc::Interval { lo, hi } => {
            let x = RatInterval::new(lo.clone(), hi.clone());
            CurvePoint::Enclosed(forms.iter().map(|p| eval_form_chart(p, &x)).collect())
        }
        _ => {
            let (s, t) = r.approx();
            CurvePoint::Approx(forms.iter().map(|p| p.eval_c64(s, t)).collect())
        }
    }
}

/// Number of parameters (with multiplicity) mapping to the image of `[s:t]`.
pub fn fiber_degree(forms: &[HomPoly], s: &Scalar, t: &Scalar) -> usize {
    let x: Vec<Scalar> = forms.iter().map(|p| p.eval(s, t)).collect();
    let mut g: Option<HomPoly> = None;
    for i in 0..forms.len() {
        for j in i + 1..forms.len() {
            let m = &forms[i].scale(&x[j]) - &forms[j].scale(&x[i]);
            if m.is_zero() {
                continue;
            }
            g = Some(match g {
                None => m.monic(),
                Some(g) => g.gcd(&m).expect("nonzero"),
            });
        }
    }
    g.map_or(0, |g| g.degree())
}

fn normalize_len(ambient: Ambient, mut polys: Vec<HomPoly>) -> Result<Vec<HomPoly>> {
    if polys.is_empty() {
        return Err(Error::Invalid("a curve needs coordinates".into()));
    }
    let d = polys[0].degree();
    if polys.iter().any(|p| p.degree() != d) {
        return Err(Error::Invalid("coordinates must have equal degree".into()));
    }
    match (ambient, polys.len()) {
        (Ambient::Rp3Slice, 4) => polys.insert(0, HomPoly::zero(d)),
        (_, 5) => {}
        (_, n) => {
            return Err(Error::Invalid(format!(
                "{ambient} curve cannot have {n} coordinates"
            )))
        }
    }
    if ambient == Ambient::Rp3Slice && !polys[0].is_zero() {
        return Err(Error::Invalid("slice curve needs x0 = 0".into()));
    }
    if polys.iter().all(HomPoly::is_zero) {
        return Err(Error::Invalid("all coordinates are zero".into()));
    }
    Ok(polys)
}

fn common_gcd(polys: &[HomPoly]) -> Result<HomPoly> {
    let mut g: Option<HomPoly> = None;
    for p in polys.iter().filter(|p| !p.is_zero()) {
        g = Some(match g {
            None => p.monic(),
            Some(g) => g.gcd(p)?,
        });
        if g.as_ref().unwrap().degree() == 0 {
            break;
        }
    }
    g.ok_or_else(|| Error::Invalid("all coordinates are zero".into()))
}

/// `[s:t] ↦ [a·s + b·t : c·s + d·t]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MobiusMap {
    m: [[Scalar; 2]; 2],
}

impl MobiusMap {
    pub fn new(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Result<Self> {
        if (&(&a * &d) - &(&b * &c)).is_zero() {
            return Err(Error::Invalid("Möbius map must be invertible".into()));
        }
        Ok(MobiusMap {
            m: [[a, b], [c, d]],
        })
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        MobiusMap::new(
            Scalar::int(a),
            Scalar::int(b),
            Scalar::int(c),
            Scalar::int(d),
        )
    }

    pub fn identity() -> Self {
        MobiusMap::from_ints(1, 0, 0, 1).unwrap()
    }

    pub fn swap() -> Self {
        MobiusMap::from_ints(0, 1, 1, 0).unwrap()
    }

    pub fn entries(&self) -> &[[Scalar; 2]; 2] {
        &self.m
    }

    pub fn determinant(&self) -> Scalar {
        &(&self.m[0][0] * &self.m[1][1]) - &(&self.m[0][1] * &self.m[1][0])
    }

    pub fn apply(&self, s: &Scalar, t: &Scalar) -> (Scalar, Scalar) {
        let [[a, b], [c, d]] = &self.m;
        (&(a * s) + &(b * t), &(c * s) + &(d * t))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MobiusMap) -> MobiusMap {
        let a = &self.m;
        let b = &other.m;
        let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        MobiusMap {
            m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
        }
    }

    pub fn inverse(&self) -> MobiusMap {
        let [[a, b], [c, d]] = &self.m;
        MobiusMap {
            m: [[d.clone(), -b], [-c, a.clone()]],
        }
    }

    pub fn to_strings(&self) -> [[String; 2]; 2] {
        let f = |x: &Scalar| x.to_string();
        [
            [f(&self.m[0][0]), f(&self.m[0][1])],
            [f(&self.m[1][0]), f(&self.m[1][1])],
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::q32_eval;

    fn deg1() -> RationalCurve {
        RationalCurve::from_ints(Ambient::Rp4, &[&[1, 0], &[0, 0], &[1, 0], &[0, 1], &[0, 1]])
            .unwrap()
    }

    fn deg3() -> RationalCurve {
        RationalCurve::from_ints(
            Ambient::Rp4,
            &[
                &[1, 0, 0, 1],
                &[-1, 0, 0, 1],
                &[0, 0, 0, 0],
                &[0, -1, -1, 0],
                &[0, 1, -1, 0],
            ],
        )
        .unwrap()
    }

    #[test]
    fn quadric_membership() {
        assert!(deg1().on_quadric().unwrap());
        assert!(deg3().on_quadric().unwrap());
        let c =
            RationalCurve::from_ints(Ambient::Rp4, &[&[1, 0], &[0, 1], &[0, 0], &[0, 0], &[0, 0]])
                .unwrap();
        assert!(!c.on_quadric().unwrap());
    }

    #[test]
    fn reduce_divides_common_factor() {
        let s = HomPoly::s();
        let raw: Vec<HomPoly> = deg1().polys().iter().map(|p| &s * p).collect();
        let c = RationalCurve::reduce(Ambient::Rp4, raw).unwrap();
        assert_eq!(c, deg1());
        assert_eq!(
            RationalCurve::reduce(Ambient::Rp4, deg1().polys().to_vec()).unwrap(),
            deg1()
        );
        assert!(RationalCurve::reduce(Ambient::Rp4, vec![HomPoly::zero(1); 5]).is_err());
    }

    #[test]
    fn eval_and_params() {
        let c = deg1();
        let one = Scalar::one();
        let zero = Scalar::zero();
        assert_eq!(
            c.eval(&one, &zero).unwrap(),
            ProjPoint::from_ints(&[1, 0, 1, 0, 0])
        );
        assert_eq!(
            c.eval(&zero, &one).unwrap(),
            ProjPoint::from_ints(&[0, 0, 0, 1, 1])
        );
        let pp = c.point_params(&ProjPoint::from_ints(&[1, 0, 1, 0, 0]));
        assert_eq!(pp.len(), 1);
        assert_eq!(pp[0].loc, RootLoc::Infinity);
        assert!(c
            .point_params(&ProjPoint::from_ints(&[1, 1, 0, 0, 0]))
            .is_empty());
        let x = deg3().eval(&Scalar::int(2), &Scalar::int(-3)).unwrap();
        assert_eq!(q32_eval(&x), Scalar::zero());
        let pp = deg3().point_params(&x);
        assert_eq!(pp.len(), 1);
        assert_eq!(pp[0].loc, RootLoc::Exact(Scalar::frac(-2, 3)));
    }

    #[test]
    fn reparam_swap_and_identity() {
        let c = deg1();
        assert_eq!(c.reparam(&MobiusMap::identity()), c);
        let r = c.reversed();
        let want =
            RationalCurve::from_ints(Ambient::Rp4, &[&[0, 1], &[0, 0], &[0, 1], &[1, 0], &[1, 0]])
                .unwrap();
        assert_eq!(r, want);
        let m = MobiusMap::from_ints(2, 1, -1, 3).unwrap();
        let k = deg3().reparam(&m);
        assert!(k.on_quadric().unwrap());
        let (s, t) = (Scalar::int(5), Scalar::int(7));
        let (ms, mt) = m.apply(&s, &t);
        assert_eq!(k.eval(&s, &t).unwrap(), deg3().eval(&ms, &mt).unwrap());
    }

    #[test]
    fn tangent_and_cusp() {
        let c = deg1();
        let d = c.tangent_dir(&Scalar::one(), &Scalar::one()).unwrap();
        assert_eq!(d, ProjPoint::from_ints(&[1, 0, 1, 0, 0]));
        // [t³ : s³ : 0 : 0 : s²t] has a cusp at [0:1]
        let cusp = RationalCurve::from_ints(
            Ambient::Rp4,
            &[
                &[0, 0, 0, 1],
                &[1, 0, 0, 0],
                &[0, 0, 0, 0],
                &[0, 0, 0, 0],
                &[0, 1, 0, 0],
            ],
        )
        .unwrap();
        assert!(cusp.tangent_dir(&Scalar::zero(), &Scalar::one()).is_err());
    }
}
