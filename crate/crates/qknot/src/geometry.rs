//! Stereographic projection of the quadric from a point, and its inverse.
//!
//! In the canonical frame the center is `[1:1:0:0:0]`, the image hyperplane is
//! `x0 = 0`, the plane at infinity is `x0 = x1 = 0`, and the special conic is
//! `x2² + x3² = x4²` there. A curve on the quadric projects to
//! `[0 : p1 − p0 : p2 : p3 : p4]`; a slice curve `[0:x1:x2:x3:x4]` pulls back to
//! `[x1² + S : −x1² + S : −2x1x2 : −2x1x3 : −2x1x4]` with `S = x2² + x3² − x4²`.

use serde::Serialize;

use crate::curve::{Ambient, RationalCurve};
use crate::error::{Error, Result};
use crate::exact::roots::{count_roots, real_roots, sturm_sequence, RootBox, RootLoc};
use crate::exact::{HomPoly, Scalar};
use crate::projective::{move_to_base, on_quadric, ProjPoint, ProjTransform};
use crate::singular::{NodeKind, NodeReport};

/// A projected curve and how it was obtained.
#[derive(Clone, Debug)]
pub struct Projection {
    /// Slice curve in RP³.
    pub curve: RationalCurve,
    pub center: ProjPoint,
    /// Isometry taking the center to `[1:1:0:0:0]`.
    pub transform: ProjTransform,
    /// The common factor divided out of `[p1 − p0 : p2 : p3 : p4]`.
    pub removed: HomPoly,
    /// Order of contact of the curve with the tangent hyperplane at the center,
    /// for projection from a point of the curve.
    pub contact: Option<usize>,
    pub notes: Vec<String>,
}

fn require_on_quadric(c: &RationalCurve) -> Result<()> {
    if c.ambient() != Ambient::Rp4 {
        return Err(Error::Invalid("projection needs a curve in RP4".into()));
    }
    if !c.on_quadric()? {
        return Err(Error::Invalid("curve does not lie on the quadric".into()));
    }
    Ok(())
}

/// `[0 : p1 − p0 : p2 : p3 : p4]` of a curve already in the canonical frame.
pub fn canonical_image(c: &RationalCurve) -> Vec<HomPoly> {
    let p = c.polys();
    vec![
        HomPoly::zero(c.degree()),
        &p[1] - &p[0],
        p[2].clone(),
        p[3].clone(),
        p[4].clone(),
    ]
}

fn gcd_all(forms: &[HomPoly]) -> HomPoly {
    let mut g: Option<HomPoly> = None;
    for f in forms.iter().filter(|f| !f.is_zero()) {
        g = Some(match g {
            None => f.monic(),
            Some(g) => g.gcd(f).expect("nonzero"),
        });
    }
    g.unwrap_or_else(|| HomPoly::constant(Scalar::one()))
}

/// Multiplicity of the linear form `l` in `f`.
fn multiplicity_of(f: &HomPoly, l: &HomPoly) -> usize {
    let mut f = f.clone();
    let mut m = 0;
    while !f.is_zero() && f.degree() >= 1 {
        match f.div_exact(l) {
            Ok(q) => {
                f = q;
                m += 1;
            }
            Err(_) => break,
        }
    }
    m
}

/// Project from a quadric point that is not on the curve; the degree is kept.
pub fn project_off_curve(c: &RationalCurve, p: &ProjPoint) -> Result<Projection> {
    require_on_quadric(c)?;
    if !on_quadric(p) {
        return Err(Error::NotOnQuadric);
    }
    if !c.point_params(p).is_empty() {
        return Err(Error::OnCurve);
    }
    let t = move_to_base(p)?;
    let raw = canonical_image(&c.transform(&t));
    let removed = gcd_all(&raw);
    let curve = RationalCurve::reduce(Ambient::Rp3Slice, raw)?.canonical();
    if curve.degree() != c.degree() {
        return Err(Error::Degenerate(format!(
            "projection dropped degree {} to {}",
            c.degree(),
            curve.degree()
        )));
    }
    Ok(Projection {
        curve,
        center: p.clone(),
        transform: t,
        removed,
        contact: None,
        notes: vec![],
    })
}

/// Project from the point of the curve at parameter `[s:t]`; the degree drops.
pub fn project_on_curve(c: &RationalCurve, s: &Scalar, t: &Scalar) -> Result<Projection> {
    require_on_quadric(c)?;
    let x = c.eval(s, t)?;
    let fiber = c.point_params(&x);
    let simple = fiber.len() == 1 && fiber[0].multiplicity == 1;
    if !simple {
        return Err(Error::Degenerate(format!(
            "{x} is a singular point of the curve"
        )));
    }
    c.tangent_dir(s, t)?;
    let tr = move_to_base(&x)?;
    let raw = canonical_image(&c.transform(&tr));
    let l = HomPoly::vanishing_at(s, t);
    let contact = multiplicity_of(&raw[1], &l);
    let once = raw
        .iter()
        .map(|f| f.div_exact(&l))
        .collect::<Result<Vec<_>>>()?;
    let extra = gcd_all(&once);
    let removed = &l * &extra;
    let curve = RationalCurve::reduce(Ambient::Rp3Slice, once)?.canonical();
    if curve.degree() == 0 {
        return Err(Error::Degenerate("projection is a single point".into()));
    }
    let mut notes = vec![];
    if contact > 2 {
        notes.push(format!(
            "contact of order {contact} with the tangent hyperplane at the center"
        ));
    }
    if extra.degree() > 0 {
        notes.push(format!("further common factor {extra} divided out"));
    }
    Ok(Projection {
        curve,
        center: x,
        transform: tr,
        removed,
        contact: Some(contact),
        notes,
    })
}

/// Project from a double point (or cusp) of a nodal curve; the degree drops by 2.
pub fn project_from_node(c: &RationalCurve, node: &NodeReport) -> Result<Projection> {
    require_on_quadric(c)?;
    let (x, factor) = match node.kind {
        NodeKind::NonSolitary | NodeKind::Solitary => {
            match (&node.exact_location, &node.pair_factor) {
                (Some(x), Some(q)) => (x.clone(), q.clone()),
                _ => {
                    return Err(Error::Invalid(
                        "node is not known exactly; cannot project from it".into(),
                    ))
                }
            }
        }
        NodeKind::Cusp => {
            let Some((s, t)) = node.params[0].exact_param() else {
                return Err(Error::Invalid("cusp parameter is not exact".into()));
            };
            let l = HomPoly::vanishing_at(&s, &t);
            (c.eval(&s, &t)?, &l * &l)
        }
        NodeKind::Complex => {
            return Err(Error::Invalid(
                "a non-real node is not a projection center".into(),
            ))
        }
    };
    let fiber: usize = c
        .point_params(&x)
        .iter()
        .map(|r| r.multiplicity * if r.is_real() { 1 } else { 2 })
        .sum();
    if fiber < 2 {
        return Err(Error::Invalid(format!(
            "{x} is not a double point of the curve"
        )));
    }
    let tr = move_to_base(&x)?;
    let raw = canonical_image(&c.transform(&tr));
    let divided = raw
        .iter()
        .map(|f| f.div_exact(&factor))
        .collect::<Result<Vec<_>>>()
        .map_err(|_| Error::Invalid("node factor does not divide the projection".into()))?;
    let extra = gcd_all(&divided);
    let curve = RationalCurve::reduce(Ambient::Rp3Slice, divided)?.canonical();
    let mut notes = vec![];
    if extra.degree() > 0 {
        notes.push(format!("further common factor {extra} divided out"));
    }
    Ok(Projection {
        curve,
        center: x,
        transform: tr,
        removed: &factor * &extra,
        contact: None,
        notes,
    })
}

/// Inverse projection result.
#[derive(Clone, Debug)]
pub struct Pullback {
    /// Curve on the quadric, in the canonical frame.
    pub curve: RationalCurve,
    /// Common factor of the raw substitution.
    pub removed: HomPoly,
}

/// Substitute a slice curve into the inverse stereographic map and reduce.
pub fn pullback(c: &RationalCurve) -> Result<Pullback> {
    if c.ambient() != Ambient::Rp3Slice {
        return Err(Error::Invalid("pullback needs a slice curve".into()));
    }
    let q = c.polys();
    let x1sq = &q[1] * &q[1];
    let s = &(&(&q[2] * &q[2]) + &(&q[3] * &q[3])) - &(&q[4] * &q[4]);
    let m2 = Scalar::int(-2);
    let raw = vec![
        &x1sq + &s,
        &s - &x1sq,
        (&q[1] * &q[2]).scale(&m2),
        (&q[1] * &q[3]).scale(&m2),
        (&q[1] * &q[4]).scale(&m2),
    ];
    let removed = gcd_all(&raw);
    let curve = RationalCurve::reduce(Ambient::Rp4, raw)?.canonical();
    Ok(Pullback { curve, removed })
}

/// One real intersection with the plane at infinity.
#[derive(Clone, Debug)]
pub struct InfinityPoint {
    pub param: RootBox,
    pub multiplicity: usize,
    pub on_conic: bool,
}

/// How a slice curve meets the plane at infinity `x1 = 0`.
#[derive(Clone, Debug)]
pub struct InfinityReport {
    pub degree: usize,
    pub real_points: Vec<InfinityPoint>,
    pub complex_pairs: usize,
    /// Distinct intersection points over ℂ.
    pub distinct_points: usize,
    /// Distinct intersection points on the special conic over ℂ.
    pub distinct_on_conic: usize,
    /// `Σ min(μ, ν)` over the roots of `x1`, with `μ` the multiplicity in `x1`
    /// and `ν` in `x2² + x3² − x4²`.
    pub on_conic_multiplicity: usize,
    /// Whether `x1` divides `x2² + x3² − x4²`.
    pub all_on_conic: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct InfinityReportJson {
    pub degree: usize,
    pub distinct_points: usize,
    pub distinct_on_conic: usize,
    pub real_points: usize,
    pub real_on_conic: usize,
    pub complex_pairs: usize,
    pub on_conic_multiplicity: usize,
    pub all_on_conic: bool,
}

impl InfinityReport {
    pub fn real_on_conic(&self) -> usize {
        self.real_points.iter().filter(|p| p.on_conic).count()
    }

    pub fn to_json(&self) -> InfinityReportJson {
        InfinityReportJson {
            degree: self.degree,
            distinct_points: self.distinct_points,
            distinct_on_conic: self.distinct_on_conic,
            real_points: self.real_points.len(),
            real_on_conic: self.real_on_conic(),
            complex_pairs: self.complex_pairs,
            on_conic_multiplicity: self.on_conic_multiplicity,
            all_on_conic: self.all_on_conic,
        }
    }
}

/// `x2² + x3² − x4²` of a slice curve.
pub fn conic_form(c: &RationalCurve) -> HomPoly {
    let q = c.polys();
    &(&(&q[2] * &q[2]) + &(&q[3] * &q[3])) - &(&q[4] * &q[4])
}

/// `Σ min(μ, ν)` by repeated gcd.
pub fn shared_multiplicity(a: &HomPoly, b: &HomPoly) -> usize {
    if b.is_zero() {
        return a.degree();
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut m = 0;
    loop {
        let g = a.gcd(&b).expect("nonzero");
        if g.degree() == 0 {
            return m;
        }
        m += g.degree();
        a = a.div_exact(&g).expect("gcd divides");
        b = b.div_exact(&g).expect("gcd divides");
    }
}

fn squarefree_form(f: &HomPoly) -> HomPoly {
    let inf = f.mult_at_infinity().min(1);
    let sq = f.chart().squarefree();
    HomPoly::from_chart(&sq, sq.deg() + inf)
}

pub fn infinity_analysis(c: &RationalCurve) -> Result<InfinityReport> {
    if c.ambient() != Ambient::Rp3Slice {
        return Err(Error::Invalid(
            "infinity analysis needs a slice curve".into(),
        ));
    }
    let q1 = c.poly(1);
    if q1.is_zero() {
        return Err(Error::Degenerate(
            "curve lies in the plane at infinity".into(),
        ));
    }
    let s = conic_form(c);
    let g = if s.is_zero() { q1.monic() } else { q1.gcd(&s)? };
    let g_sq = squarefree_form(&g);
    let g_chart = g_sq.chart();
    let g_seq = if g_chart.deg() > 0 {
        Some(sturm_sequence(&g_chart))
    } else {
        None
    };
    let roots = real_roots(q1);
    let real_points = roots
        .roots
        .into_iter()
        .map(|r| {
            let on_conic = match &r.loc {
                RootLoc::Infinity => g.mult_at_infinity() > 0,
                RootLoc::Exact(x) => g.eval(x, &Scalar::one()).is_zero(),
                RootLoc::Interval { lo, hi } => g_seq
                    .as_ref()
                    .is_some_and(|seq| count_roots(seq, lo, hi) > 0),
                RootLoc::Complex { .. } => false,
            };
            InfinityPoint {
                multiplicity: r.multiplicity,
                param: r,
                on_conic,
            }
        })
        .collect();
    Ok(InfinityReport {
        degree: c.degree(),
        real_points,
        complex_pairs: roots.complex_pairs,
        distinct_points: squarefree_form(q1).degree(),
        distinct_on_conic: g_sq.degree(),
        on_conic_multiplicity: shared_multiplicity(q1, &s),
        all_on_conic: s.is_zero() || s.div_exact(q1).is_ok(),
    })
}
