//! Plane diagrams of knots in RP³ and their encomplexed writhe.
//!
//! A slice knot is projected from a center `C` of RP³ to RP². Each double point
//! of the plane image is a pair of parameters `u, v` whose images are collinear
//! with `C`. Its sign is read off in RP³ from the two tangent lines,
//! `sign det[c(u), c'(u), c(v), c'(v)]`, which in an affine chart equals the
//! usual `sign det[t_over, t_under, v]`. For a solitary double point the same
//! determinant is taken on the conjugate branches `z, z̄`; it is real.

use num_complex::Complex64;
use serde::Serialize;

use crate::curve::{Ambient, MobiusMap, RationalCurve};
use crate::error::{Error, Result};
use crate::exact::roots::RootBoxJson;
use crate::exact::{HomPoly, RootBox, Scalar};
use crate::geometry::project_off_curve;
use crate::glue::quadric_points;
use crate::projective::ProjPoint;
use crate::singular::{analyze, is_knot, NodeKind, SingularReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CrossingKind {
    Real,
    Solitary,
}

#[derive(Clone, Debug)]
pub struct Crossing {
    pub kind: CrossingKind,
    pub params: Vec<RootBox>,
    /// Homogeneous parameters of the two branches.
    pub branches: [(Complex64, Complex64); 2],
    pub sign: i32,
    /// Which branch passes over (0 or 1); meaningful for real crossings.
    pub over: usize,
    /// Relative size of the sign determinant.
    pub strength: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossingJson {
    pub kind: CrossingKind,
    pub sign: i32,
    pub over: usize,
    pub params: Vec<RootBoxJson>,
    /// Drawing-chart position of the crossing (real crossings only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub position: Option<[f64; 2]>,
}

/// Why a diagram is accepted as generic.
#[derive(Clone, Debug, Serialize)]
pub struct Genericity {
    pub eliminant_degree: usize,
    pub expected_degree: usize,
    pub squarefree: bool,
    pub cusps: usize,
    pub unpaired: usize,
    pub min_strength: f64,
}

#[derive(Clone, Debug)]
pub struct Diagram {
    /// The knot actually drawn (possibly reparametrized).
    pub curve: RationalCurve,
    /// Center in slice coordinates `[x1:x2:x3:x4]`.
    pub center: ProjPoint,
    /// Rows spanning the forms orthogonal to the center.
    pub projection: [[Scalar; 4]; 3],
    /// Plane image `[y0:y1:y2]`.
    pub plane: Vec<HomPoly>,
    pub crossings: Vec<Crossing>,
    pub complex_nodes: usize,
    pub node_count: usize,
    pub genericity: Genericity,
}

impl Diagram {
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Affine drawing chart of the plane image: `(y1/y0, y2/y0)` at a parameter.
    pub fn chart_point(&self, z: (Complex64, Complex64)) -> [f64; 2] {
        let y: Vec<Complex64> = self.plane.iter().map(|p| p.eval_c64(z.0, z.1)).collect();
        [(y[1] / y[0]).re, (y[2] / y[0]).re]
    }

    pub fn crossing_table(&self) -> Vec<CrossingJson> {
        self.crossings
            .iter()
            .map(|c| CrossingJson {
                kind: c.kind,
                sign: c.sign,
                over: c.over,
                params: c.params.iter().map(RootBox::to_json).collect(),
                position: match c.kind {
                    CrossingKind::Real => Some(self.chart_point(c.branches[0])),
                    CrossingKind::Solitary => None,
                },
            })
            .collect()
    }
}

/// Standard crossing sign `sign det[t_over, t_under, v]`, where `v` points from
/// the under strand to the over strand.
pub fn crossing_sign(t_over: [f64; 3], t_under: [f64; 3], v: [f64; 3]) -> i32 {
    let d = t_over[0] * (t_under[1] * v[2] - t_under[2] * v[1])
        - t_over[1] * (t_under[0] * v[2] - t_under[2] * v[0])
        + t_over[2] * (t_under[0] * v[1] - t_under[1] * v[0]);
    if d > 0.0 {
        1
    } else if d < 0.0 {
        -1
    } else {
        0
    }
}

fn det_c64(mut a: Vec<Vec<Complex64>>) -> Complex64 {
    let n = a.len();
    let mut d = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| a[i][k].norm().total_cmp(&a[j][k].norm()))
            .unwrap();
        if a[p][k].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if p != k {
            a.swap(p, k);
            d = -d;
        }
        d *= a[k][k];
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            for j in k..n {
                let t = a[k][j];
                a[i][j] -= f * t;
            }
        }
    }
    d
}

/// Point and tangent of the slice knot at a homogeneous parameter, in `x1..x4`.
///
/// The parameter is scaled to unit norm and the tangent is taken along the
/// rotation `−t∂s + s∂t`. Against the chart jet at `x = s/t` this changes the
/// determinant below by the factor `(1 + u²)(1 + v²)`, positive for real pairs
/// and for conjugate pairs alike, and it stays well conditioned near `[1:0]`.
fn jet(c: &RationalCurve, z: (Complex64, Complex64)) -> (Vec<Complex64>, Vec<Complex64>) {
    let r = (z.0.norm_sqr() + z.1.norm_sqr()).sqrt();
    let (s, t) = (z.0 / r, z.1 / r);
    let p = c.polys()[1..].iter().map(|f| f.eval_c64(s, t)).collect();
    let dp = c.polys()[1..]
        .iter()
        .map(|f| -t * f.ds().eval_c64(s, t) + s * f.dt().eval_c64(s, t))
        .collect();
    (p, dp)
}

fn unit(v: Vec<Complex64>) -> Vec<Complex64> {
    let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / n).collect()
}

/// Sign of a double point from the two branch parameters, and its strength.
fn rp3_sign(c: &RationalCurve, u: (Complex64, Complex64), v: (Complex64, Complex64)) -> (i32, f64) {
    let (a, da) = jet(c, u);
    let (b, db) = jet(c, v);
    let cols = [unit(a), unit(da), unit(b), unit(db)];
    let m: Vec<Vec<Complex64>> = (0..4)
        .map(|i| (0..4).map(|j| cols[j][i]).collect())
        .collect();
    let d = det_c64(m);
    let sign = if d.re > 0.0 { 1 } else { -1 };
    (sign, d.re.abs())
}

const MIN_STRENGTH: f64 = 1e-9;

/// Deterministic candidate centers in `[x1:x2:x3:x4]`.
pub fn center_candidates() -> Vec<[i64; 4]> {
    let mut v = vec![
        [3, 1, -2, 5],
        [2, -3, 1, 4],
        [1, 4, 3, -2],
        [5, 2, 7, -3],
        [4, -1, -5, 2],
        [7, 3, -1, -6],
    ];
    for a in 1..6i64 {
        for b in -5..6i64 {
            for c in -5..6i64 {
                v.push([a * 2 + 1, b, c, a + b - c + 11]);
            }
        }
    }
    v
}

fn projection_rows(c: &[i64; 4]) -> [[Scalar; 4]; 3] {
    let j = (0..4).find(|&j| c[j] != 0).expect("nonzero center");
    let mut rows = vec![];
    for i in 0..4 {
        if i == j {
            continue;
        }
        let mut r: [Scalar; 4] = std::array::from_fn(|_| Scalar::zero());
        r[i] = Scalar::int(c[j]);
        r[j] = Scalar::int(-c[i]);
        rows.push(r);
    }
    [rows[0].clone(), rows[1].clone(), rows[2].clone()]
}

fn plane_forms(c: &RationalCurve, rows: &[[Scalar; 4]; 3]) -> Vec<HomPoly> {
    rows.iter()
        .map(|r| {
            let mut acc = HomPoly::zero(c.degree());
            for k in 0..4 {
                if !r[k].is_zero() {
                    acc = &acc + &c.poly(k + 1).scale(&r[k]);
                }
            }
            acc
        })
        .collect()
}

/// Try a single center; `None` when it is not generic.
fn diagram_at(c: &RationalCurve, center: &[i64; 4]) -> Result<Option<Diagram>> {
    let d = c.degree();
    let cpt = ProjPoint::from_ints(&[0, center[0], center[1], center[2], center[3]]);
    if !c.point_params(&cpt).is_empty() {
        return Ok(None);
    }
    let rows = projection_rows(center);
    // keep every double-point parameter away from [1:0]
    let mut curve = c.clone();
    let mut report: Option<SingularReport> = None;
    for k in 0..4 {
        if k > 0 {
            curve = c.reparam(&MobiusMap::from_ints(1, 0, k, 1)?);
        }
        let plane = plane_forms(&curve, &rows);
        let r = match analyze(&plane) {
            Ok(r) => r,
            Err(Error::Degenerate(_)) => return Ok(None),
            Err(e) => return Err(e),
        };
        if r.eliminant.is_zero() || r.eliminant.mult_at_infinity() == 0 {
            report = Some(r);
            break;
        }
    }
    let Some(r) = report else {
        return Ok(None);
    };
    let plane = plane_forms(&curve, &rows);
    let expected = (d - 1) * (d.max(2) - 2);
    let mut crossings = vec![];
    let mut min_strength = f64::INFINITY;
    for n in &r.nodes {
        let kind = match n.kind {
            NodeKind::NonSolitary => CrossingKind::Real,
            NodeKind::Solitary => CrossingKind::Solitary,
            _ => continue,
        };
        let (sign, strength) = rp3_sign(&curve, n.branches[0], n.branches[1]);
        min_strength = min_strength.min(strength);
        crossings.push(Crossing {
            kind,
            params: n.params.clone(),
            branches: [n.branches[0], n.branches[1]],
            sign,
            over: 0,
            strength,
        });
    }
    let genericity = Genericity {
        eliminant_degree: r.eliminant_degree(),
        expected_degree: expected,
        squarefree: r.eliminant_squarefree,
        cusps: r.cusps.len(),
        unpaired: r.unpaired,
        min_strength: if crossings.is_empty() {
            1.0
        } else {
            min_strength
        },
    };
    let generic = genericity.eliminant_degree == expected
        && genericity.squarefree
        && genericity.cusps == 0
        && genericity.unpaired == 0
        && genericity.min_strength > MIN_STRENGTH;
    if !generic {
        return Ok(None);
    }
    let mut dg = Diagram {
        curve,
        center: ProjPoint::from_ints(center),
        projection: rows,
        plane,
        complex_nodes: r.complex_nodes().count(),
        node_count: r.count_with_multiplicity(),
        crossings,
        genericity,
    };
    assign_over(&mut dg);
    Ok(Some(dg))
}

/// Choose the over strand so that the drawn picture shows the computed sign.
fn assign_over(dg: &mut Diagram) {
    let one = Complex64::new(1.0, 0.0);
    let tangent = |dg: &Diagram, x: Complex64| -> [f64; 2] {
        let y: Vec<Complex64> = dg.plane.iter().map(|p| p.eval_c64(x, one)).collect();
        let dy: Vec<Complex64> = dg.plane.iter().map(|p| p.ds().eval_c64(x, one)).collect();
        let q = |k: usize| ((dy[k] * y[0] - y[k] * dy[0]) / (y[0] * y[0])).re;
        [q(1), q(2)]
    };
    for i in 0..dg.crossings.len() {
        if dg.crossings[i].kind != CrossingKind::Real {
            continue;
        }
        let b = dg.crossings[i].branches;
        let t0 = tangent(dg, b[0].0 / b[0].1);
        let t1 = tangent(dg, b[1].0 / b[1].1);
        let cross = t0[0] * t1[1] - t0[1] * t1[0];
        let s = dg.crossings[i].sign as f64;
        dg.crossings[i].over = if cross * s > 0.0 { 0 } else { 1 };
    }
}

/// First generic diagram, trying centers from index `start` on.
pub fn plane_diagram_from(c: &RationalCurve, start: usize) -> Result<(usize, Diagram)> {
    if c.ambient() != Ambient::Rp3Slice {
        return Err(Error::Invalid("diagrams need a slice knot".into()));
    }
    let centers = center_candidates();
    for (i, ctr) in centers.iter().enumerate().skip(start) {
        if let Some(dg) = diagram_at(c, ctr)? {
            return Ok((i, dg));
        }
    }
    Err(Error::Exhausted(
        "no generic projection center found".into(),
    ))
}

pub fn plane_diagram(c: &RationalCurve) -> Result<Diagram> {
    Ok(plane_diagram_from(c, 0)?.1)
}

#[derive(Clone, Debug, Serialize)]
pub struct WritheReport {
    pub writhe: i64,
    pub degree: usize,
    /// Writhe from each of the independent centers.
    pub per_center: Vec<i64>,
    pub centers: Vec<Vec<String>>,
    pub real_crossings: usize,
    pub solitary_crossings: usize,
    pub complex_nodes: usize,
}

/// Number of centers every writhe is recomputed from.
pub const CENTERS: usize = 3;

/// Writhe of a slice knot, checked for parity, bound and center independence.
pub fn writhe(c: &RationalCurve) -> Result<WritheReport> {
    if c.ambient() != Ambient::Rp3Slice {
        return Err(Error::Invalid("writhe needs a slice knot".into()));
    }
    if !is_knot(c)?.is_knot {
        return Err(Error::Invalid("curve is not a knot".into()));
    }
    let d = c.degree();
    let nodes = (d.max(1) - 1) * (d.max(2) - 2) / 2;
    let mut per_center = vec![];
    let mut centers = vec![];
    let mut first: Option<Diagram> = None;
    let mut start = 0;
    for _ in 0..CENTERS {
        let (i, dg) = plane_diagram_from(c, start)?;
        start = i + 1;
        let w = dg.writhe();
        if (w - nodes as i64).rem_euclid(2) != 0 || w.unsigned_abs() as usize > nodes {
            return Err(Error::Parity { writhe: w, nodes });
        }
        per_center.push(w);
        centers.push(dg.center.to_strings());
        if first.is_none() {
            first = Some(dg);
        }
    }
    if per_center.iter().any(|&w| w != per_center[0]) {
        return Err(Error::CenterDisagreement(per_center));
    }
    let dg = first.expect("at least one center");
    Ok(WritheReport {
        writhe: per_center[0],
        degree: d,
        per_center,
        centers,
        real_crossings: dg
            .crossings
            .iter()
            .filter(|c| c.kind == CrossingKind::Real)
            .count(),
        solitary_crossings: dg
            .crossings
            .iter()
            .filter(|c| c.kind == CrossingKind::Solitary)
            .count(),
        complex_nodes: dg.complex_nodes,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct QuadricWritheReport {
    /// Projection point on the quadric.
    pub projection_point: Vec<String>,
    #[serde(flatten)]
    pub report: WritheReport,
}

/// Writhe of a knot on the quadric through its projection from `q`.
///
/// Without `q`, the first enumerated quadric point off the knot whose
/// projection is again a knot is used; a point on an isotropic secant of the
/// knot would fold two of its points together at infinity.
pub fn writhe_q32(k: &RationalCurve, q: Option<&ProjPoint>) -> Result<QuadricWritheReport> {
    if !k.on_quadric()? {
        return Err(Error::NotOnQuadric);
    }
    let q = match q {
        Some(q) => q.clone(),
        None => projection_point(k)?,
    };
    let pr = project_off_curve(k, &q)?;
    Ok(QuadricWritheReport {
        projection_point: q.to_strings(),
        report: writhe(&pr.curve)?,
    })
}

/// First enumerated quadric point off `k` projecting it to a knot.
pub fn projection_point(k: &RationalCurve) -> Result<ProjPoint> {
    for q in quadric_points().take(64) {
        if !k.point_params(&q).is_empty() {
            continue;
        }
        let pr = project_off_curve(k, &q)?;
        if is_knot(&pr.curve)?.is_knot {
            return Ok(q);
        }
    }
    Err(Error::Exhausted("no projection point gives a knot".into()))
}

/// Writhe of the projection from each of several quadric points (`None` where
/// the point lies on the knot or the computation fails).
pub fn writhe_survey(k: &RationalCurve, points: &[ProjPoint]) -> Vec<Option<i64>> {
    points
        .iter()
        .map(|q| {
            project_off_curve(k, q)
                .and_then(|pr| writhe(&pr.curve))
                .ok()
                .map(|r| r.writhe)
        })
        .collect()
}
