//! Double points and cusps of rational curves by resultant elimination.
//!
//! For coordinates `y = G·p` (a generic integer change `G`), the divided minors
//! `h_ij(u, v) = (y_i(u)·y_j(v) − y_j(u)·y_i(v)) / (u − v)` vanish at `(u, v)`
//! with `u ≠ v` exactly when `c(u) = c(v)`, and on the diagonal at cusps.
//! `R_k(u) = Res_v(h_01, h_ij)` is found by evaluation and interpolation and
//! the gcd `N` of all `R_k` is the eliminant whose roots are the parameters of
//! singular points. Roots are then matched numerically into pairs.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use serde::Serialize;

use crate::curve::{eval_forms_root, fiber_degree, Ambient, CurvePoint, RationalCurve};
use crate::error::{Error, Result};
use crate::exact::interval::RatInterval;
use crate::exact::linalg::det;
use crate::exact::poly::sylvester_det;
use crate::exact::roots::{complex_pair_roots, real_roots, refine, RootBox, RootBoxJson, RootLoc};
use crate::exact::{HomPoly, Scalar, UPoly};
use crate::projective::ProjPoint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NodeKind {
    /// Two real branches.
    #[serde(rename = "non-solitary-node")]
    NonSolitary,
    /// Real point with complex-conjugate branches.
    #[serde(rename = "solitary-node")]
    Solitary,
    /// Non-real point; comes with its conjugate.
    #[serde(rename = "complex-node")]
    Complex,
    Cusp,
}

#[derive(Clone, Debug)]
pub struct NodeReport {
    pub kind: NodeKind,
    /// Two real boxes, one complex box for a conjugate pair, or one box for a cusp.
    pub params: Vec<RootBox>,
    /// Homogeneous parameters of both branches, numerically.
    pub branches: Vec<(Complex64, Complex64)>,
    pub location: CurvePoint,
    /// Exact image point when it could be pinned down.
    pub exact_location: Option<ProjPoint>,
    /// The quadratic form vanishing on both parameters, when exact.
    pub pair_factor: Option<HomPoly>,
    pub multiplicity: usize,
}

impl NodeReport {
    /// Put back the zero coordinate `x0` of a slice curve.
    fn lift_to_slice(&mut self) {
        let zero = Scalar::zero();
        if let Some(p) = &self.exact_location {
            let mut v = vec![zero.clone()];
            v.extend(p.coords().iter().cloned());
            self.exact_location = Some(ProjPoint::new(v).expect("nonzero"));
        }
        self.location = match std::mem::replace(&mut self.location, CurvePoint::Approx(vec![])) {
            CurvePoint::Exact(_) => CurvePoint::Exact(self.exact_location.clone().expect("exact")),
            CurvePoint::Enclosed(mut v) => {
                v.insert(0, RatInterval::point(BigRational::from_integer(0.into())));
                CurvePoint::Enclosed(v)
            }
            CurvePoint::Approx(mut v) => {
                v.insert(0, Complex64::new(0.0, 0.0));
                CurvePoint::Approx(v)
            }
        };
    }

    pub fn is_real(&self) -> bool {
        !matches!(self.kind, NodeKind::Complex)
            && !(self.kind == NodeKind::Cusp && self.params.iter().any(|p| !p.is_real()))
    }

    pub fn to_json(&self) -> NodeReportJson {
        let loc = match (&self.exact_location, &self.location) {
            (Some(p), _) => NodeLocationJson::Exact(p.to_strings()),
            (None, CurvePoint::Enclosed(b)) => NodeLocationJson::Enclosed(
                b.iter()
                    .map(|i| {
                        [
                            crate::exact::scalar::fmt_rat(&i.lo),
                            crate::exact::scalar::fmt_rat(&i.hi),
                        ]
                    })
                    .collect(),
            ),
            (None, p) => NodeLocationJson::Approx(approx_real(&p.approx())),
        };
        NodeReportJson {
            kind: self.kind,
            params: self.params.iter().map(RootBox::to_json).collect(),
            location: loc,
            pair_factor: self.pair_factor.as_ref().map(HomPoly::to_strings),
            multiplicity: self.multiplicity,
        }
    }
}

fn approx_real(z: &[Complex64]) -> Vec<[f64; 2]> {
    let n = z
        .iter()
        .cloned()
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .unwrap_or(Complex64::new(1.0, 0.0));
    z.iter()
        .map(|w| {
            let q = w / n;
            [q.re, q.im]
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct NodeReportJson {
    pub kind: NodeKind,
    pub params: Vec<RootBoxJson>,
    pub location: NodeLocationJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair_factor: Option<Vec<String>>,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NodeLocationJson {
    Exact(Vec<String>),
    /// Interval per homogeneous coordinate.
    Enclosed(Vec<[String; 2]>),
    /// `[re, im]` per coordinate, scaled so the largest has modulus 1.
    Approx(Vec<[f64; 2]>),
}

/// Everything the elimination produced.
#[derive(Clone, Debug)]
pub struct SingularReport {
    pub degree: usize,
    pub nodes: Vec<NodeReport>,
    pub cusps: Vec<NodeReport>,
    /// The eliminant `N` in the parameter.
    pub eliminant: HomPoly,
    pub eliminant_squarefree: bool,
    /// Roots of `N` that matched no partner.
    pub unpaired: usize,
    /// The coordinate change used, row-major.
    pub coordinate_change: Vec<Vec<i64>>,
}

impl SingularReport {
    /// Total number of complex double points with multiplicity, a cusp counting once.
    pub fn count_with_multiplicity(&self) -> usize {
        let cusp: usize = self.cusps.iter().map(|c| c.multiplicity).sum();
        (self.eliminant_degree() + cusp) / 2
    }

    pub fn eliminant_degree(&self) -> usize {
        if self.eliminant.is_zero() {
            0
        } else {
            self.eliminant.degree()
        }
    }

    pub fn real_nodes(&self) -> impl Iterator<Item = &NodeReport> {
        self.nodes
            .iter()
            .filter(|n| n.kind == NodeKind::NonSolitary)
    }

    pub fn solitary_nodes(&self) -> impl Iterator<Item = &NodeReport> {
        self.nodes.iter().filter(|n| n.kind == NodeKind::Solitary)
    }

    pub fn complex_nodes(&self) -> impl Iterator<Item = &NodeReport> {
        self.nodes.iter().filter(|n| n.kind == NodeKind::Complex)
    }

    pub fn real_cusps(&self) -> impl Iterator<Item = &NodeReport> {
        self.cusps.iter().filter(|n| n.is_real())
    }

    /// Nodes and cusps that are real points.
    pub fn real_singularities(&self) -> usize {
        self.real_nodes().count() + self.solitary_nodes().count() + self.real_cusps().count()
    }
}

/// Knot certificate: counts of every kind of singular point.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct KnotCertificate {
    pub is_knot: bool,
    /// The parametrization is a multiple cover of its image.
    pub non_injective: bool,
    pub non_solitary_nodes: usize,
    pub solitary_nodes: usize,
    pub complex_nodes: usize,
    pub real_cusps: usize,
    pub complex_cusps: usize,
    pub unpaired_roots: usize,
}

/// Deterministic invertible integer matrices, the identity first.
fn coordinate_change(n: usize, attempt: usize) -> Vec<Vec<i64>> {
    if attempt == 0 {
        return (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
    }
    let k = attempt as i64;
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let (a, b) = (i as i64, j as i64);
                    if i == j {
                        1
                    } else {
                        ((a + 1) * (b + 2) * (k + 2) + a * b * 7 + 3 * k).rem_euclid(7) - 3
                    }
                })
                .collect()
        })
        .collect()
}

fn change_forms(forms: &[HomPoly], g: &[Vec<i64>]) -> Vec<HomPoly> {
    let d = forms[0].degree();
    g.iter()
        .map(|row| {
            let mut acc = HomPoly::zero(d);
            for (k, &c) in row.iter().enumerate() {
                if c != 0 {
                    acc = &acc + &forms[k].scale(&Scalar::int(c));
                }
            }
            acc
        })
        .collect()
}

/// `h_ij(u0, v)` as a form in `v` of degree `d − 1`.
fn divided_minor(yi: &HomPoly, yj: &HomPoly, u0: &Scalar) -> HomPoly {
    let one = Scalar::one();
    let a = yi.eval(u0, &one);
    let b = yj.eval(u0, &one);
    let num = &yj.scale(&a) - &yi.scale(&b);
    num.div_exact(&HomPoly::vanishing_at(u0, &one))
        .expect("numerator vanishes on the diagonal")
}

/// `Res_v(h_01, h_ij)` as a form of degree `2(d−1)²` in `u`.
fn eliminant_pair(y: &[HomPoly], i: usize, j: usize) -> HomPoly {
    let d = y[0].degree();
    let big = 2 * (d - 1) * (d - 1);
    let xs: Vec<Scalar> = (0..=big as i64)
        .map(|k| Scalar::int(if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 }))
        .collect();
    let ys: Vec<Scalar> = xs
        .iter()
        .map(|u0| {
            let f = divided_minor(&y[0], &y[1], u0);
            let g = divided_minor(&y[i], &y[j], u0);
            sylvester_det(f.coeffs(), g.coeffs())
        })
        .collect();
    HomPoly::from_chart(&UPoly::interpolate(&xs, &ys), big)
}

/// `Res_v(m_01, m_ij)` for the cross minors `m_ij(u, v) = f_i(u)·g_j(v) − f_j(u)·g_i(v)`.
fn cross_eliminant_pair(f: &[HomPoly], g: &[HomPoly], i: usize, j: usize) -> HomPoly {
    let big = 2 * f[0].degree() * g[0].degree();
    let one = Scalar::one();
    let xs: Vec<Scalar> = (0..=big as i64)
        .map(|k| Scalar::int(if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 }))
        .collect();
    let minor = |a: usize, b: usize, u0: &Scalar| {
        &g[b].scale(&f[a].eval(u0, &one)) - &g[a].scale(&f[b].eval(u0, &one))
    };
    let ys: Vec<Scalar> = xs
        .iter()
        .map(|u0| sylvester_det(minor(0, 1, u0).coeffs(), minor(i, j, u0).coeffs()))
        .collect();
    HomPoly::from_chart(&UPoly::interpolate(&xs, &ys), big)
}

/// Form in the parameter of `f` vanishing exactly where the two curves meet.
///
/// Both tuples must have the same number of coordinates.
pub fn intersection_form(f: &[HomPoly], g: &[HomPoly]) -> Result<HomPoly> {
    let n = f.len();
    assert_eq!(n, g.len(), "coordinate count mismatch");
    for attempt in 1..13 {
        let ch = coordinate_change(n, attempt);
        let gs: Vec<Vec<Scalar>> = ch
            .iter()
            .map(|r| r.iter().map(|&x| Scalar::int(x)).collect())
            .collect();
        if det(gs).is_zero() {
            continue;
        }
        let fy = change_forms(f, &ch);
        let gy = change_forms(g, &ch);
        if fy[0].gcd(&fy[1])?.degree() > 0 || gy[0].gcd(&gy[1])?.degree() > 0 {
            continue;
        }
        let mut acc: Option<HomPoly> = None;
        let mut degenerate = false;
        for i in 0..n {
            for j in i + 1..n {
                if (i, j) == (0, 1) {
                    continue;
                }
                let r = cross_eliminant_pair(&fy, &gy, i, j);
                if r.is_zero() {
                    degenerate = true;
                    break;
                }
                acc = Some(match acc {
                    None => r.monic(),
                    Some(a) => a.gcd(&r)?,
                });
            }
            if degenerate {
                break;
            }
        }
        if !degenerate {
            return Ok(acc.expect("at least three coordinates"));
        }
    }
    Err(Error::Exhausted(
        "curves share a component or elimination degenerates".into(),
    ))
}

/// Gcd of the 2×2 minors of `[∂s c; ∂t c]`; its roots are the cusp parameters.
pub fn cusp_form(forms: &[HomPoly]) -> Option<HomPoly> {
    let ds: Vec<HomPoly> = forms.iter().map(HomPoly::ds).collect();
    let dt: Vec<HomPoly> = forms.iter().map(HomPoly::dt).collect();
    let mut g: Option<HomPoly> = None;
    for i in 0..forms.len() {
        for j in i + 1..forms.len() {
            let m = &(&ds[i] * &dt[j]) - &(&ds[j] * &dt[i]);
            if m.is_zero() {
                continue;
            }
            g = Some(match g {
                None => m.monic(),
                Some(g) => g.gcd(&m).expect("nonzero"),
            });
            if g.as_ref().unwrap().degree() == 0 {
                return None;
            }
        }
    }
    g
}

struct Cand {
    root: RootBox,
    z: (Complex64, Complex64),
    conj: bool,
}

fn real_root_param(r: &RootBox) -> (Complex64, Complex64) {
    let one = Complex64::new(1.0, 0.0);
    match &r.loc {
        RootLoc::Interval { .. } => {
            let w = BigRational::new(BigInt::from(1), BigInt::from(1u64) << 70);
            let fine = refine(r, &w);
            (fine.approx().0, one)
        }
        _ => r.approx(),
    }
}

fn unit_image(forms: &[HomPoly], z: (Complex64, Complex64)) -> Vec<Complex64> {
    // scale the parameter so evaluation stays balanced
    let n = z.0.norm().max(z.1.norm());
    let (s, t) = (z.0 / n, z.1 / n);
    let w: Vec<Complex64> = forms.iter().map(|p| p.eval_c64(s, t)).collect();
    let norm = w.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    w.iter().map(|x| x / norm).collect()
}

/// `sqrt(1 − |⟨a,b⟩|²)` for unit vectors: 0 iff proportional.
fn wedge(a: &[Complex64], b: &[Complex64]) -> f64 {
    let ip: Complex64 = a.iter().zip(b).map(|(x, y)| x * y.conj()).sum();
    (1.0 - ip.norm_sqr()).max(0.0).sqrt()
}

fn param_distance(a: (Complex64, Complex64), b: (Complex64, Complex64)) -> f64 {
    let na = (a.0.norm_sqr() + a.1.norm_sqr()).sqrt();
    let nb = (b.0.norm_sqr() + b.1.norm_sqr()).sqrt();
    (a.0 * b.1 - a.1 * b.0).norm() / (na * nb)
}

const PAIR_TOL: f64 = 1e-6;

/// Full singularity analysis of a tuple of forms (any number of coordinates ≥ 3).
pub fn analyze(forms: &[HomPoly]) -> Result<SingularReport> {
    let n = forms.len();
    if n < 3 {
        return Err(Error::Invalid("need at least three coordinates".into()));
    }
    let d = forms[0].degree();
    if d == 0 {
        return Err(Error::Degenerate(
            "a constant map has no double points".into(),
        ));
    }
    if d == 1 {
        return Ok(SingularReport {
            degree: 1,
            nodes: vec![],
            cusps: vec![],
            eliminant: HomPoly::constant(Scalar::one()),
            eliminant_squarefree: true,
            unpaired: 0,
            coordinate_change: coordinate_change(n, 0),
        });
    }
    let generic = [
        (Scalar::frac(7, 3), Scalar::one()),
        (Scalar::frac(-11, 5), Scalar::one()),
    ];
    let fiber = generic
        .iter()
        .map(|(s, t)| fiber_degree(forms, s, t))
        .min()
        .unwrap();
    if fiber > 1 {
        return Err(Error::Degenerate(format!(
            "parametrization covers its image {fiber} times"
        )));
    }
    let cusps = cusps_of(forms)?;
    let mut best: Option<SingularReport> = None;
    let mut attempt = 1;
    for _ in 0..3 {
        let Some((g, nf, next)) = eliminate(forms, attempt)? else {
            break;
        };
        attempt = next;
        let r = pair_roots(forms, g, nf, cusps.clone())?;
        let clean = r.unpaired == 0;
        if best.as_ref().map_or(true, |b| r.unpaired < b.unpaired) {
            best = Some(r);
        }
        if clean {
            break;
        }
    }
    best.ok_or_else(|| {
        Error::Exhausted("no coordinate change gave a nondegenerate elimination".into())
    })
}

/// Coordinate change, eliminant and the attempt that produced them.
type Elimination = (Vec<Vec<i64>>, HomPoly, usize);

/// Eliminant `N` for the first usable coordinate change from `attempt` on.
fn eliminate(forms: &[HomPoly], attempt: usize) -> Result<Option<Elimination>> {
    let n = forms.len();
    for attempt in attempt..attempt + 12 {
        let g = coordinate_change(n, attempt);
        let gs: Vec<Vec<Scalar>> = g
            .iter()
            .map(|r| r.iter().map(|&x| Scalar::int(x)).collect())
            .collect();
        if det(gs).is_zero() {
            continue;
        }
        let y = change_forms(forms, &g);
        if y[0].is_zero() || y[1].is_zero() || y[0].gcd(&y[1])?.degree() > 0 {
            continue;
        }
        let mut nf: Option<HomPoly> = None;
        let mut degenerate = false;
        'pairs: for i in 0..n {
            for j in i + 1..n {
                if (i, j) == (0, 1) {
                    continue;
                }
                let r = eliminant_pair(&y, i, j);
                if r.is_zero() {
                    degenerate = true;
                    break 'pairs;
                }
                nf = Some(match nf {
                    None => r.monic(),
                    Some(a) => a.gcd(&r)?,
                });
            }
        }
        if !degenerate {
            return Ok(Some((
                g,
                nf.expect("at least three coordinates"),
                attempt + 1,
            )));
        }
    }
    Ok(None)
}

fn cusps_of(forms: &[HomPoly]) -> Result<Vec<NodeReport>> {
    let cusp_g = cusp_form(forms);
    let mut cusps = vec![];
    if let Some(cg) = &cusp_g {
        let mut boxes = real_roots(cg).roots;
        boxes.extend(complex_pair_roots(cg));
        for b in boxes {
            let z = if b.is_real() {
                real_root_param(&b)
            } else {
                b.approx()
            };
            let c = eval_forms_root(forms, &b);
            cusps.push(NodeReport {
                kind: NodeKind::Cusp,
                params: vec![b.clone()],
                branches: vec![z],
                exact_location: match &c {
                    CurvePoint::Exact(p) => Some(p.clone()),
                    _ => None,
                },
                location: c,
                pair_factor: None,
                multiplicity: b.multiplicity,
            });
        }
    }

    Ok(cusps)
}

fn pair_roots(
    forms: &[HomPoly],
    g: Vec<Vec<i64>>,
    nf: HomPoly,
    cusps: Vec<NodeReport>,
) -> Result<SingularReport> {
    let d = forms[0].degree();
    let squarefree = nf.chart().squarefree().deg() + nf.mult_at_infinity().min(1) == nf.degree();
    let mut cands = vec![];
    if nf.degree() > 0 {
        for r in real_roots(&nf).roots {
            let z = real_root_param(&r);
            cands.push(Cand {
                root: r,
                z,
                conj: false,
            });
        }
        for r in complex_pair_roots(&nf) {
            let z = r.approx();
            cands.push(Cand {
                root: r.clone(),
                z,
                conj: false,
            });
            cands.push(Cand {
                root: r,
                z: (z.0.conj(), z.1.conj()),
                conj: true,
            });
        }
    }
    // cusp parameters are roots of N too; they do not pair
    let mut used = vec![false; cands.len()];
    for c in &cusps {
        for (k, cand) in cands.iter().enumerate() {
            if !used[k] && param_distance(cand.z, c.branches[0]) < 1e-6 {
                used[k] = true;
            }
        }
    }
    let images: Vec<Vec<Complex64>> = cands.iter().map(|c| unit_image(forms, c.z)).collect();
    let mut edges = vec![];
    for i in 0..cands.len() {
        for j in i + 1..cands.len() {
            if used[i] || used[j] {
                continue;
            }
            edges.push((wedge(&images[i], &images[j]), i, j));
        }
    }
    edges.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut nodes = vec![];
    for (w, i, j) in edges {
        if w > PAIR_TOL {
            break;
        }
        if used[i] || used[j] {
            continue;
        }
        used[i] = true;
        used[j] = true;
        nodes.push(make_node(forms, &cands[i], &cands[j])?);
    }
    let unpaired = used.iter().filter(|u| !**u).count();
    // a complex node and its conjugate are both found; keep the order stable
    nodes.sort_by(|a, b| node_key(a).partial_cmp(&node_key(b)).unwrap());
    Ok(SingularReport {
        degree: d,
        nodes,
        cusps,
        eliminant: nf,
        eliminant_squarefree: squarefree,
        unpaired,
        coordinate_change: g,
    })
}

fn node_key(n: &NodeReport) -> (u8, f64, f64) {
    let k = match n.kind {
        NodeKind::NonSolitary => 0,
        NodeKind::Solitary => 1,
        NodeKind::Complex => 2,
        NodeKind::Cusp => 3,
    };
    let z = n.branches[0];
    let x = if z.1.norm() > 0.0 {
        z.0 / z.1
    } else {
        Complex64::new(f64::INFINITY, 0.0)
    };
    (k, x.re, x.im)
}

fn make_node(forms: &[HomPoly], a: &Cand, b: &Cand) -> Result<NodeReport> {
    let real = a.root.is_real() && b.root.is_real();
    let same_pair = !a.root.is_real() && a.root == b.root && a.conj != b.conj;
    let kind = if real {
        NodeKind::NonSolitary
    } else if same_pair {
        NodeKind::Solitary
    } else {
        NodeKind::Complex
    };
    let params = if same_pair {
        vec![a.root.clone()]
    } else {
        vec![a.root.clone(), b.root.clone()]
    };
    let mut pair_factor = None;
    if real {
        if let (Some(p), Some(q)) = (a.root.exact_param(), b.root.exact_param()) {
            pair_factor = Some(
                (&HomPoly::vanishing_at(&p.0, &p.1) * &HomPoly::vanishing_at(&q.0, &q.1)).monic(),
            );
        } else if a.root.factor == b.root.factor && a.root.factor.deg() == 2 {
            pair_factor = Some(HomPoly::from_chart(&a.root.factor, 2).monic());
        }
    } else if same_pair && a.root.factor.deg() == 2 {
        pair_factor = Some(HomPoly::from_chart(&a.root.factor, 2).monic());
    }
    let exact_location = match &pair_factor {
        Some(q) => Some(node_point_from_factor(forms, q)?),
        None => None,
    };
    let location = match &exact_location {
        Some(p) => CurvePoint::Exact(p.clone()),
        None if a.root.is_real() => eval_forms_root(forms, &a.root),
        None => CurvePoint::Approx(forms.iter().map(|p| p.eval_c64(a.z.0, a.z.1)).collect()),
    };
    Ok(NodeReport {
        kind,
        params,
        branches: vec![a.z, b.z],
        location,
        exact_location,
        pair_factor,
        multiplicity: a.root.multiplicity.min(b.root.multiplicity),
    })
}

/// The common image of the two roots of a quadratic form `q`.
///
/// Each coordinate reduces to `a_i·x + b_i` modulo `q`; both roots have the same
/// image exactly when `a ∥ b`, and the image is then that common direction.
pub fn node_point_from_factor(forms: &[HomPoly], q: &HomPoly) -> Result<ProjPoint> {
    assert_eq!(q.degree(), 2);
    // move both roots off [1:0] with t ← t + k·s; images are unchanged
    let k = (0..3i64)
        .find(|&k| !q.eval(&Scalar::one(), &Scalar::int(k)).is_zero())
        .ok_or_else(|| Error::Invalid("pair factor must be squarefree".into()))?;
    let (one, zero, kk) = (Scalar::one(), Scalar::zero(), Scalar::int(k));
    let shift = |p: &HomPoly| p.substitute(&one, &zero, &kk, &one);
    let forms: Vec<HomPoly> = forms.iter().map(shift).collect();
    let q = shift(q);
    let qc = q.chart();
    let rems: Vec<(Scalar, Scalar)> = forms
        .iter()
        .map(|p| {
            let r = p.chart().rem(&qc);
            let c = r.coeffs();
            (
                c.get(1).cloned().unwrap_or_else(Scalar::zero),
                c.first().cloned().unwrap_or_else(Scalar::zero),
            )
        })
        .collect();
    for i in 0..rems.len() {
        for j in i + 1..rems.len() {
            let m = &(&rems[i].0 * &rems[j].1) - &(&rems[j].0 * &rems[i].1);
            if !m.is_zero() {
                return Err(Error::Invalid(
                    "factor does not define a double point".into(),
                ));
            }
        }
    }
    let b: Vec<Scalar> = rems.iter().map(|r| r.1.clone()).collect();
    if b.iter().any(|x| !x.is_zero()) {
        ProjPoint::new(b)
    } else {
        ProjPoint::new(rems.iter().map(|r| r.0.clone()).collect())
    }
}

/// Every singular point of the curve over ℂ: nodes (all kinds) then cusps.
/// Forms to eliminate with; the zero coordinate of a slice curve is dropped.
fn forms_of(c: &RationalCurve) -> &[HomPoly] {
    match c.ambient() {
        Ambient::Rp3Slice => &c.polys()[1..],
        Ambient::Rp4 => c.polys(),
    }
}

pub fn double_points(c: &RationalCurve) -> Result<Vec<NodeReport>> {
    let r = analyze(forms_of(c))?;
    let mut out = r.nodes;
    out.extend(r.cusps);
    if c.ambient() == Ambient::Rp3Slice {
        for n in &mut out {
            n.lift_to_slice();
        }
    }
    Ok(out)
}

/// A knot has no real double point (two real branches or a solitary point)
/// and no real cusp.
pub fn is_knot(c: &RationalCurve) -> Result<KnotCertificate> {
    match analyze(forms_of(c)) {
        Ok(r) => Ok(certificate(&r)),
        Err(Error::Degenerate(_)) if c.degree() > 0 => Ok(KnotCertificate {
            is_knot: false,
            non_injective: true,
            ..KnotCertificate::default()
        }),
        Err(e) => Err(e),
    }
}

pub fn certificate(r: &SingularReport) -> KnotCertificate {
    let non_solitary_nodes = r.real_nodes().count();
    let solitary_nodes = r.solitary_nodes().count();
    let complex_nodes = r.complex_nodes().count();
    let real_cusps = r.real_cusps().count();
    let complex_cusps = r.cusps.len() - real_cusps;
    KnotCertificate {
        is_knot: non_solitary_nodes + solitary_nodes + real_cusps == 0 && r.unpaired == 0,
        non_injective: false,
        non_solitary_nodes,
        solitary_nodes,
        complex_nodes,
        real_cusps,
        complex_cusps,
        unpaired_roots: r.unpaired,
    }
}

/// Number of complex double points of a plane curve with multiplicity.
pub fn node_count_with_multiplicity(plane: &[HomPoly]) -> Result<usize> {
    Ok(analyze(plane)?.count_with_multiplicity())
}
