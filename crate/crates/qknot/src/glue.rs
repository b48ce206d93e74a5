//! Gluing two knots that meet transversally at one point.
//!
//! In RP³ the meeting point is translated to the affine origin and both curves
//! are reparametrized so the origin sits at `[1:0]` on the first and at `[0:1]`
//! on the second. With `c1 = [P1:P2:P3:P4]` and `c2 = [Q1:Q2:Q3:Q4]` in the
//! chart `x1 = 1`, the glued curve is `[P1Q1 : P2Q1 + P1Q2 : P3Q1 + P1Q3 :
//! P4Q1 + P1Q4]`, i.e. the pointwise sum of the two affine curves. The second
//! curve is first squeezed towards its origin (`[s:t] → [λs:t]`) and shrunk
//! (`x ↦ εx` on the affine part, which fixes the plane at infinity pointwise),
//! and the first `(ε, λ)` for which the result is a knot close to the union of
//! the two inputs is accepted.

use serde::{Deserialize, Serialize};

use crate::curve::{Ambient, MobiusMap, RationalCurve};
use crate::error::{Error, Result};
use crate::exact::linalg::rank;
use crate::exact::{HomPoly, Scalar};
use crate::geometry::{infinity_analysis, project_off_curve, pullback};
use crate::projective::{move_to_base, on_quadric, ProjPoint, ProjTransform};
use crate::singular::{intersection_form, is_knot};

/// Scale factors tried for the second curve, outer loop.
pub fn epsilons() -> Vec<Scalar> {
    (0..=20).map(|k| Scalar::frac(1, 1i64 << k)).collect()
}

/// Concentration factors tried for the second curve, inner loop.
pub fn lambdas() -> Vec<Scalar> {
    [1, 8, 64, 512, 4096]
        .iter()
        .map(|&d| Scalar::frac(1, d))
        .collect()
}

/// Maximum one-sided distance accepted for the union witness.
pub const NEAR_UNION_TOL: f64 = 1e-3;
/// Radius of the ball around the gluing point left out of the witness.
pub const NEAR_UNION_BALL: f64 = 0.1;
const SAMPLES: usize = 720;
const CHART_RADIUS: f64 = 100.0;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Attempt {
    pub epsilon: String,
    pub lambda: String,
    pub outcome: String,
}

/// Everything needed to rebuild a glued curve from its inputs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GlueRecipe {
    pub schema: u32,
    /// Gluing point in the slice `[0:x1:x2:x3:x4]`.
    pub at: Vec<String>,
    /// Translation of RP³ taking the gluing point to the affine origin.
    pub to_origin: Vec<Vec<String>>,
    pub reverse: bool,
    pub reparam_first: [[String; 2]; 2],
    pub reparam_second: [[String; 2]; 2],
    pub lambda: String,
    pub epsilon: String,
    /// Quadric point both knots were projected from, for gluing on the quadric.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub projection_point: Option<Vec<String>>,
    pub near_union_distance: f64,
    pub attempts: Vec<Attempt>,
}

fn exact_simple_param(c: &RationalCurve, x: &ProjPoint, which: &str) -> Result<(Scalar, Scalar)> {
    let pp = c.point_params(x);
    if pp.is_empty() {
        return Err(Error::Invalid(format!(
            "gluing point is not on the {which} curve"
        )));
    }
    if pp.len() != 1 || pp[0].multiplicity != 1 || !pp[0].is_real() {
        return Err(Error::Invalid(format!(
            "gluing point is a singular point of the {which} curve"
        )));
    }
    pp[0].exact_param().ok_or_else(|| {
        Error::Invalid(format!(
            "gluing parameter on the {which} curve is not in the field"
        ))
    })
}

/// Translation `x_i ← x_i − a_i·x1` for `i = 2, 3, 4`.
fn translation(a: &[Scalar; 3], sign: i64) -> ProjTransform {
    let mut m = crate::exact::linalg::identity(5);
    for i in 0..3 {
        m[i + 2][1] = &a[i] * &Scalar::int(-sign);
    }
    ProjTransform::new(m).expect("translations are invertible")
}

fn to_slice(c: &RationalCurve) -> RationalCurve {
    c.with_ambient(Ambient::Rp3Slice).expect("x0 stays zero")
}

/// Inputs normalized for the gluing formula.
struct Prepared {
    first: RationalCurve,
    second: RationalCurve,
    offset: [Scalar; 3],
    m1: MobiusMap,
    m2: MobiusMap,
}

fn prepare(
    c1: &RationalCurve,
    c2: &RationalCurve,
    at: &ProjPoint,
    reverse: bool,
) -> Result<Prepared> {
    for c in [c1, c2] {
        if c.ambient() != Ambient::Rp3Slice {
            return Err(Error::Invalid("gluing in RP3 needs slice curves".into()));
        }
    }
    let x = at.coords();
    if x.len() != 5 || !x[0].is_zero() {
        return Err(Error::Invalid(
            "gluing point must lie in the slice x0 = 0".into(),
        ));
    }
    if x[1].is_zero() {
        return Err(Error::Invalid(
            "gluing point lies in the plane at infinity".into(),
        ));
    }
    let c2 = if reverse { c2.reversed() } else { c2.clone() };
    let (a1, b1) = exact_simple_param(c1, at, "first")?;
    let (a2, b2) = exact_simple_param(&c2, at, "second")?;
    let t1 = c1.tangent_dir(&a1, &b1)?;
    let t2 = c2.tangent_dir(&a2, &b2)?;
    let m = vec![x.to_vec(), t1.coords().to_vec(), t2.coords().to_vec()];
    if rank(&m) < 3 {
        return Err(Error::Invalid(
            "curves are tangent at the gluing point".into(),
        ));
    }
    let inv = x[1].inv();
    let offset = [&x[2] * &inv, &x[3] * &inv, &x[4] * &inv];
    let tr = translation(&offset, 1);
    let m1 = MobiusMap::new(a1.clone(), -&b1, b1.clone(), a1.clone())?;
    let m2 = MobiusMap::new(b2.clone(), a2.clone(), -&a2, b2.clone())?;
    Ok(Prepared {
        first: to_slice(&c1.transform(&tr)).reparam(&m1),
        second: to_slice(&c2.transform(&tr)).reparam(&m2),
        offset,
        m1,
        m2,
    })
}

fn squeeze(second: &RationalCurve, lambda: &Scalar, epsilon: &Scalar) -> RationalCurve {
    let c = second.reparam(
        &MobiusMap::new(
            lambda.clone(),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::one(),
        )
        .unwrap(),
    );
    let mut polys = c.polys().to_vec();
    for p in polys.iter_mut().skip(2) {
        *p = p.scale(epsilon);
    }
    RationalCurve::new(Ambient::Rp3Slice, polys).expect("scaling keeps the forms coprime")
}

/// The gluing formula on normalized inputs (affine origin at `[1:0]` resp. `[0:1]`).
pub fn glue_formula(first: &RationalCurve, second: &RationalCurve) -> Vec<HomPoly> {
    let p = first.polys();
    let q = second.polys();
    let d = p[0].degree() + q[0].degree();
    let mut out = vec![HomPoly::zero(d), &p[1] * &q[1]];
    for i in 2..5 {
        out.push(&(&p[i] * &q[1]) + &(&p[1] * &q[i]));
    }
    out
}

fn affine(v: &[f64]) -> Option<[f64; 3]> {
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if v[1].abs() <= 1e-9 * n {
        return None;
    }
    let a = [v[2] / v[1], v[3] / v[1], v[4] / v[1]];
    let r = (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt();
    (r < CHART_RADIUS).then_some(a)
}

fn grid() -> Vec<(f64, f64)> {
    (0..SAMPLES)
        .map(|k| {
            let th = std::f64::consts::PI * (k as f64 + 0.5) / SAMPLES as f64;
            (th.cos(), th.sin())
        })
        .collect()
}

/// Largest distance from a sampled point of either input (outside the ball
/// around the origin) to the sampled glued curve.
fn near_union(
    first: &RationalCurve,
    squeezed: &RationalCurve,
    glued: &[HomPoly],
    lambda: f64,
) -> f64 {
    let g = grid();
    let eval = |forms: &[HomPoly], s: f64, t: f64| -> Vec<f64> {
        forms.iter().map(|p| p.eval_f64(s, t)).collect()
    };
    let mut gpts = vec![];
    let mut checks = vec![];
    for &(s, t) in &g {
        if let Some(a) = affine(&eval(glued, s, t)) {
            gpts.push(a);
        }
        if let Some(a) = affine(&first.eval_f64(s, t)) {
            checks.push(a);
        }
        // the squeezed curve at [s/λ : t] is the second curve at [s:t]
        let (u, v) = (s / lambda, t);
        let n = (u * u + v * v).sqrt();
        if let Some(a) = affine(&eval(glued, u / n, v / n)) {
            gpts.push(a);
        }
        if let Some(a) = affine(&squeezed.eval_f64(u / n, v / n)) {
            checks.push(a);
        }
    }
    let norm = |a: &[f64; 3]| (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt();
    let mut worst: f64 = 0.0;
    for c in checks.iter().filter(|c| norm(c) > NEAR_UNION_BALL) {
        let best = gpts
            .iter()
            .map(|g| norm(&[g[0] - c[0], g[1] - c[1], g[2] - c[2]]))
            .fold(f64::INFINITY, f64::min);
        worst = worst.max(best);
    }
    worst
}

fn build(
    p: &Prepared,
    lambda: &Scalar,
    epsilon: &Scalar,
) -> Result<(RationalCurve, RationalCurve, Vec<HomPoly>)> {
    let sq = squeeze(&p.second, lambda, epsilon);
    let raw = glue_formula(&p.first, &sq);
    let back = translation(&p.offset, -1);
    let moved = RationalCurve::reduce(Ambient::Rp3Slice, raw.clone())?;
    let out = to_slice(&moved.transform(&back)).canonical();
    Ok((out, sq, raw))
}

fn recipe(
    at: &ProjPoint,
    p: &Prepared,
    reverse: bool,
    lambda: &Scalar,
    epsilon: &Scalar,
    dist: f64,
    attempts: Vec<Attempt>,
) -> GlueRecipe {
    GlueRecipe {
        schema: 1,
        at: at.to_strings(),
        to_origin: translation(&p.offset, 1).to_strings(),
        reverse,
        reparam_first: p.m1.to_strings(),
        reparam_second: p.m2.to_strings(),
        lambda: lambda.to_string(),
        epsilon: epsilon.to_string(),
        projection_point: None,
        near_union_distance: dist,
        attempts,
    }
}

/// Glue two slice knots meeting transversally at `at`, searching `(ε, λ)`.
pub fn glue_rp3(
    c1: &RationalCurve,
    c2: &RationalCurve,
    at: &ProjPoint,
    reverse: bool,
) -> Result<(RationalCurve, GlueRecipe)> {
    let p = prepare(c1, c2, at, reverse)?;
    let d = c1.degree() + c2.degree();
    let mut attempts = vec![];
    for eps in epsilons() {
        for lam in lambdas() {
            let log = |outcome: String| Attempt {
                epsilon: eps.to_string(),
                lambda: lam.to_string(),
                outcome,
            };
            let (out, sq, raw) = build(&p, &lam, &eps)?;
            if out.degree() != d {
                attempts.push(log(format!("degree {} instead of {d}", out.degree())));
                continue;
            }
            let dist = near_union(&p.first, &sq, &raw, lam.to_f64());
            if dist >= NEAR_UNION_TOL {
                attempts.push(log(format!("union distance {dist:.3e}")));
                continue;
            }
            let cert = is_knot(&out)?;
            if !cert.is_knot {
                attempts.push(log("singular".into()));
                continue;
            }
            attempts.push(log("accepted".into()));
            return Ok((out, recipe(at, &p, reverse, &lam, &eps, dist, attempts)));
        }
    }
    Err(Error::Exhausted(format!(
        "no (epsilon, lambda) in the search grid gave a knot ({} attempts)",
        attempts.len()
    )))
}

/// Glue with fixed `(λ, ε)`, no search and no checks beyond the preconditions.
pub fn glue_rp3_fixed(
    c1: &RationalCurve,
    c2: &RationalCurve,
    at: &ProjPoint,
    reverse: bool,
    lambda: &Scalar,
    epsilon: &Scalar,
) -> Result<RationalCurve> {
    let p = prepare(c1, c2, at, reverse)?;
    Ok(build(&p, lambda, epsilon)?.0)
}

/// Rebuild a glued slice curve from a recorded recipe.
pub fn glue_rp3_with(
    c1: &RationalCurve,
    c2: &RationalCurve,
    r: &GlueRecipe,
) -> Result<RationalCurve> {
    let at = parse_point(&r.at)?;
    glue_rp3_fixed(
        c1,
        c2,
        &at,
        r.reverse,
        &r.lambda.parse()?,
        &r.epsilon.parse()?,
    )
}

fn parse_point(v: &[String]) -> Result<ProjPoint> {
    ProjPoint::new(
        v.iter()
            .map(|x| x.parse())
            .collect::<Result<Vec<Scalar>>>()?,
    )
}

/// The single point where two curves meet, exactly.
pub fn unique_intersection(k1: &RationalCurve, k2: &RationalCurve) -> Result<ProjPoint> {
    if k1.ambient() != k2.ambient() {
        return Err(Error::Invalid("curves live in different spaces".into()));
    }
    let skip = usize::from(k1.ambient() == Ambient::Rp3Slice);
    let n = intersection_form(&k1.polys()[skip..], &k2.polys()[skip..])?;
    if n.is_zero() {
        return Err(Error::Invalid("curves share a component".into()));
    }
    match n.degree() {
        0 => Err(Error::Invalid("curves do not meet".into())),
        1 => {
            let c = n.coeffs();
            // c0·s + c1·t vanishes at [−c1 : c0]
            k1.eval(&-&c[1], &c[0])
        }
        k => {
            let sq = n.chart().squarefree().deg() + n.mult_at_infinity().min(1);
            if sq == 1 {
                Err(Error::Invalid("curves are tangent where they meet".into()))
            } else {
                Err(Error::Invalid(format!("curves meet in {k} points over C")))
            }
        }
    }
}

/// Glue two knots on the quadric meeting at exactly one point.
///
/// Both are projected from a quadric point `q` off both knots, glued in RP³,
/// and the result is pulled back to the quadric in the original frame.
pub fn glue_q32(
    k1: &RationalCurve,
    k2: &RationalCurve,
    reverse: bool,
    q: Option<&ProjPoint>,
) -> Result<(RationalCurve, GlueRecipe)> {
    for k in [k1, k2] {
        if k.ambient() != Ambient::Rp4 || !k.on_quadric()? {
            return Err(Error::Invalid(
                "gluing on the quadric needs quadric curves".into(),
            ));
        }
    }
    let x = unique_intersection(k1, k2)?;
    let candidates: Vec<ProjPoint> = match q {
        Some(q) => vec![q.clone()],
        None => quadric_points()
            .filter(|p| k1.point_params(p).is_empty() && k2.point_params(p).is_empty())
            .take(24)
            .collect(),
    };
    let mut last = Error::Exhausted("no projection point available".into());
    for q in candidates {
        let res = glue_q32_from(k1, k2, &x, reverse, &q);
        match res {
            Ok(r) => return Ok(r),
            Err(e) => last = e,
        }
    }
    Err(last)
}

fn glue_q32_from(
    k1: &RationalCurve,
    k2: &RationalCurve,
    x: &ProjPoint,
    reverse: bool,
    q: &ProjPoint,
) -> Result<(RationalCurve, GlueRecipe)> {
    let pr1 = project_off_curve(k1, q)?;
    let pr2 = project_off_curve(k2, q)?;
    let meet = intersection_form(&pr1.curve.polys()[1..], &pr2.curve.polys()[1..])?;
    if meet.degree() != 1 {
        return Err(Error::Degenerate(
            "the projections meet away from the gluing point".into(),
        ));
    }
    let at = slice_point(&pr1.transform, x)?;
    let (glued, mut rec) = glue_rp3(&pr1.curve, &pr2.curve, &at, reverse)?;
    let inf = infinity_analysis(&glued)?;
    if !inf.all_on_conic {
        return Err(Error::Degenerate(
            "glued curve left the special conic".into(),
        ));
    }
    let out = lift(&glued, &pr1.transform)?;
    let d = k1.degree() + k2.degree();
    if out.degree() != d || !out.on_quadric()? {
        return Err(Error::Degenerate(format!(
            "lift has degree {}",
            out.degree()
        )));
    }
    if !is_knot(&out)?.is_knot {
        return Err(Error::Degenerate("lift is singular".into()));
    }
    rec.projection_point = Some(q.to_strings());
    Ok((out, rec))
}

fn lift(glued: &RationalCurve, t: &ProjTransform) -> Result<RationalCurve> {
    Ok(pullback(glued)?.curve.transform(&t.inverse()).canonical())
}

/// Glue on the quadric with a fixed projection point and fixed `(λ, ε)`.
pub fn glue_q32_fixed(
    k1: &RationalCurve,
    k2: &RationalCurve,
    reverse: bool,
    q: &ProjPoint,
    lambda: &Scalar,
    epsilon: &Scalar,
) -> Result<RationalCurve> {
    let x = unique_intersection(k1, k2)?;
    let pr1 = project_off_curve(k1, q)?;
    let pr2 = project_off_curve(k2, q)?;
    let at = slice_point(&pr1.transform, &x)?;
    let glued = glue_rp3_fixed(&pr1.curve, &pr2.curve, &at, reverse, lambda, epsilon)?;
    lift(&glued, &pr1.transform)
}

/// Rebuild a glued quadric knot from a recorded recipe.
pub fn glue_q32_with(
    k1: &RationalCurve,
    k2: &RationalCurve,
    r: &GlueRecipe,
) -> Result<RationalCurve> {
    let q = parse_point(
        r.projection_point
            .as_deref()
            .ok_or_else(|| Error::Invalid("recipe has no projection point".into()))?,
    )?;
    glue_q32_fixed(
        k1,
        k2,
        r.reverse,
        &q,
        &r.lambda.parse()?,
        &r.epsilon.parse()?,
    )
}

/// Image of a quadric point under projection, as a slice point.
fn slice_point(t: &ProjTransform, x: &ProjPoint) -> Result<ProjPoint> {
    let tx = t.apply_vec(x.coords());
    ProjPoint::new(vec![
        Scalar::zero(),
        &tx[1] - &tx[0],
        tx[2].clone(),
        tx[3].clone(),
        tx[4].clone(),
    ])
}

/// Quadric points in a fixed order: `[1:1:0:0:0]`, then the inverse
/// projections of `[0:1:a:b:c]` over integer triples by `max(|a|,|b|,|c|)`
/// and then lexicographically.
pub fn quadric_points() -> impl Iterator<Item = ProjPoint> {
    let mut triples = vec![];
    let r = 8i64;
    for a in -r..=r {
        for b in -r..=r {
            for c in -r..=r {
                triples.push([a, b, c]);
            }
        }
    }
    triples.sort_by_key(|t| (t.iter().map(|x| x.abs()).max().unwrap(), *t));
    std::iter::once(ProjPoint::from_ints(&[1, 1, 0, 0, 0])).chain(triples.into_iter().map(
        |[a, b, c]| {
            let s = a * a + b * b - c * c;
            ProjPoint::from_ints(&[1 + s, s - 1, -2 * a, -2 * b, -2 * c])
        },
    ))
}

/// First enumerated quadric point on none of the curves.
pub fn find_quadric_point_off(curves: &[RationalCurve]) -> Result<ProjPoint> {
    quadric_points()
        .find(|p| curves.iter().all(|c| c.point_params(p).is_empty()))
        .ok_or_else(|| Error::Exhausted("every enumerated quadric point is on a curve".into()))
}

/// The line of the quadric through `p` with direction `(w2, w3, w4)`,
/// `w2² + w3² = w4²`, in the frame where `p` is `[1:1:0:0:0]`.
pub fn quadric_line(p: &ProjPoint, dir: [i64; 3]) -> Result<RationalCurve> {
    if !on_quadric(p) {
        return Err(Error::NotOnQuadric);
    }
    let [a, b, c] = dir;
    if a * a + b * b != c * c || c == 0 {
        return Err(Error::Invalid(
            "direction must be a nonzero point of the cone".into(),
        ));
    }
    let t = move_to_base(p)?;
    let w = [0, 0, a, b, c].map(Scalar::int);
    let inv = t.inverse();
    let w = inv.apply_vec(&w);
    let polys = (0..5)
        .map(|i| HomPoly::new(vec![p.coords()[i].clone(), w[i].clone()]))
        .collect();
    Ok(RationalCurve::reduce(Ambient::Rp4, polys)?.canonical())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadric_point_order() {
        let mut it = quadric_points();
        assert_eq!(it.next().unwrap(), ProjPoint::from_ints(&[1, 1, 0, 0, 0]));
        for p in it.take(50) {
            assert!(on_quadric(&p));
        }
        assert_eq!(
            find_quadric_point_off(&[]).unwrap(),
            ProjPoint::from_ints(&[1, 1, 0, 0, 0])
        );
        let line = quadric_line(&ProjPoint::from_ints(&[1, 1, 0, 0, 0]), [0, 1, 1]).unwrap();
        let q = find_quadric_point_off(std::slice::from_ref(&line)).unwrap();
        assert!(line.point_params(&q).is_empty());
        assert_ne!(q, ProjPoint::from_ints(&[1, 1, 0, 0, 0]));
    }

    #[test]
    fn lines_on_the_quadric() {
        let p = ProjPoint::from_ints(&[1, 0, 1, 0, 0]);
        let l = quadric_line(&p, [3, 4, 5]).unwrap();
        assert!(l.on_quadric().unwrap());
        assert_eq!(l.degree(), 1);
        assert_eq!(l.point_params(&p).len(), 1);
    }

    #[test]
    fn glue_two_slice_lines() {
        // two lines through the origin [0:1:0:0:0]
        let a = RationalCurve::from_ints(Ambient::Rp3Slice, &[&[0, 1], &[1, 0], &[0, 0], &[1, 0]])
            .unwrap();
        let b = RationalCurve::from_ints(Ambient::Rp3Slice, &[&[0, 1], &[0, 0], &[1, 0], &[1, 0]])
            .unwrap();
        let at = ProjPoint::from_ints(&[0, 1, 0, 0, 0]);
        let (g, r) = glue_rp3(&a, &b, &at, false).unwrap();
        assert_eq!(g.degree(), 2);
        assert!(r.near_union_distance < NEAR_UNION_TOL);
        assert_eq!(glue_rp3_with(&a, &b, &r).unwrap(), g);
        let far = ProjPoint::from_ints(&[0, 1, 5, 5, 5]);
        assert!(glue_rp3(&a, &b, &far, false).is_err());
    }

    #[test]
    fn glue_two_quadric_lines() {
        let p = ProjPoint::from_ints(&[1, 0, 1, 0, 0]);
        let l1 = quadric_line(&p, [3, 4, 5]).unwrap();
        let l2 = quadric_line(&p, [0, 1, 1]).unwrap();
        assert_eq!(unique_intersection(&l1, &l2).unwrap(), p);
        let (k, r) = glue_q32(&l1, &l2, false, None).unwrap();
        assert_eq!(k.degree(), 2);
        assert!(k.on_quadric().unwrap());
        assert!(is_knot(&k).unwrap().is_knot);
        assert_eq!(glue_q32_with(&l1, &l2, &r).unwrap(), k);
    }
}
