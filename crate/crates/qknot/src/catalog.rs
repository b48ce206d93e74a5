//! Explicit representatives of knot and nodal classes, glued constructions,
//! and a verifier that checks every stated property of every entry.
//!
//! Writhe claims are checked up to sign: the representatives fix a curve but
//! not an orientation of RP³.

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::curve::{Ambient, RationalCurve};
use crate::error::{Error, Result};
use crate::exact::{HomPoly, Scalar};
use crate::geometry::{infinity_analysis, project_from_node, project_off_curve, pullback};
use crate::glue::{find_quadric_point_off, glue_q32_fixed, quadric_line};
use crate::projective::ProjPoint;
use crate::singular::{double_points, is_knot, NodeKind};
use crate::writhe::writhe_q32;

/// One gluing of a line onto an earlier entry.
#[derive(Clone, Debug, Serialize)]
pub struct GlueStep {
    pub base: &'static str,
    /// Parameter `[s:t]` of the gluing point on the base knot.
    pub at: [i64; 2],
    /// Direction of the line, see [`quadric_line`].
    pub direction: [i64; 3],
    pub reverse: bool,
    pub projection_point: [i64; 5],
    pub lambda: [i64; 2],
    pub epsilon: [i64; 2],
}

impl GlueStep {
    pub fn line(&self, base: &RationalCurve) -> Result<RationalCurve> {
        let x = base.eval(&Scalar::int(self.at[0]), &Scalar::int(self.at[1]))?;
        quadric_line(&x, self.direction)
    }

    pub fn build(&self, base: &RationalCurve) -> Result<RationalCurve> {
        let line = self.line(base)?;
        glue_q32_fixed(
            base,
            &line,
            self.reverse,
            &ProjPoint::from_ints(&self.projection_point),
            &Scalar::frac(self.lambda[0], self.lambda[1]),
            &Scalar::frac(self.epsilon[0], self.epsilon[1]),
        )
    }
}

#[derive(Clone, Debug)]
pub enum Construction {
    Explicit(RationalCurve),
    /// Orientation reversal `[s:t] → [t:s]` of another entry.
    Reversed(&'static str),
    /// Reflection `x4 → −x4` of another entry.
    Mirrored(&'static str),
    Glued(GlueStep),
    /// Inverse projection of a slice curve.
    Pullback(RationalCurve),
}

/// How a projection claim is set up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProjectionClaim {
    /// From the first enumerated quadric point off the curve: all `d`
    /// infinity points on the special conic.
    OffCurve,
    /// From every real double point: an image of degree `d − 2` with
    /// `on_conic` distinct infinity points on the conic.
    FromNodes { on_conic: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct Claims {
    pub on_quadric: bool,
    pub knot: bool,
    /// Double points and cusps over C, when stated.
    pub double_points: Option<usize>,
    /// Encomplexed writhe, compared in absolute value.
    pub writhe: Option<i64>,
    pub projection: Option<ProjectionClaim>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub degree: usize,
    pub construction: Construction,
    pub claims: Claims,
    pub source: &'static str,
    /// Smooth isotopy type, stored as text and never checked.
    pub label: &'static str,
}

fn explicit(rows: &[&[i64]]) -> Construction {
    Construction::Explicit(
        RationalCurve::from_ints(Ambient::Rp4, rows).expect("catalog rows are coprime"),
    )
}

fn knot_claims(d: usize, writhe: i64) -> Claims {
    Claims {
        on_quadric: true,
        knot: true,
        double_points: (d <= 4).then_some(0),
        writhe: Some(writhe),
        projection: Some(ProjectionClaim::OffCurve),
    }
}

fn nodal_claims(nodes: usize, on_conic: usize) -> Claims {
    Claims {
        on_quadric: true,
        knot: false,
        double_points: Some(nodes),
        writhe: None,
        projection: Some(ProjectionClaim::FromNodes { on_conic }),
    }
}

/// The nodal quartic with a `√2` coefficient.
fn wall_sqrt2() -> Construction {
    let r = |c: &[i64]| HomPoly::from_ints(c);
    let x1 = r(&[0, 0, -2, 2, 0]).scale(&Scalar::sqrt2());
    let polys = vec![
        r(&[0, 2, 0, -2, 0]),
        x1,
        HomPoly::zero(4),
        r(&[1, 0, -3, 4, -1]),
        r(&[-1, 0, 5, -4, 1]),
    ];
    Construction::Explicit(RationalCurve::new(Ambient::Rp4, polys).expect("coprime"))
}

/// A plane nodal cubic in RP³ with one of its three infinity points on the
/// special conic; its inverse projection is a quintic with two nodes.
fn planar_nodal_cubic() -> RationalCurve {
    RationalCurve::from_ints(
        Ambient::Rp3Slice,
        &[
            &[0, 0, 0, 0],
            &[0, 1, -1, 0],
            &[1, 0, 1, 2],
            &[0, 0, 0, 0],
            &[1, 1, 0, 3],
        ],
    )
    .expect("coprime")
}

fn glued5(at: i64, direction: [i64; 3], reverse: bool, epsilon: i64) -> GlueStep {
    GlueStep {
        base: "deg4-glued-w3",
        at: [at, 1],
        direction,
        reverse,
        projection_point: [1, 1, 0, 0, 0],
        lambda: [1, 4096],
        epsilon: [1, epsilon],
    }
}

/// All entries, ordered by degree.
pub fn list_entries() -> Vec<CatalogEntry> {
    use Construction::*;
    let mut v = vec![
        CatalogEntry {
            id: "deg1",
            degree: 1,
            construction: explicit(&[&[1, 0], &[0, 0], &[1, 0], &[0, 1], &[0, 1]]),
            claims: knot_claims(1, 0),
            source: "explicit line",
            label: "line",
        },
        CatalogEntry {
            id: "deg2a",
            degree: 2,
            construction: explicit(&[
                &[0, 2, 0],
                &[0, 0, 0],
                &[0, 4, 0],
                &[-3, 0, 1],
                &[-3, 0, -1],
            ]),
            claims: knot_claims(2, 0),
            source: "explicit conic, first class",
            label: "unknot",
        },
        CatalogEntry {
            id: "deg2b",
            degree: 2,
            construction: explicit(&[&[0, 2, 0], &[0, 0, 0], &[4, 0, 0], &[-3, 0, 1], &[-5, 0, 1]]),
            claims: knot_claims(2, 0),
            source: "explicit conic, second class",
            label: "unknot",
        },
        CatalogEntry {
            id: "deg2a-rev",
            degree: 2,
            construction: Reversed("deg2a"),
            claims: knot_claims(2, 0),
            source: "orientation reversal of deg2a",
            label: "unknot, opposite orientation",
        },
        CatalogEntry {
            id: "deg3",
            degree: 3,
            construction: explicit(&[
                &[1, 0, 0, 1],
                &[-1, 0, 0, 1],
                &[0, 0, 0, 0],
                &[0, -1, -1, 0],
                &[0, 1, -1, 0],
            ]),
            claims: knot_claims(3, 1),
            source: "explicit cubic",
            label: "isotopic to a line",
        },
        CatalogEntry {
            id: "deg3-mirror",
            degree: 3,
            construction: Mirrored("deg3"),
            claims: knot_claims(3, 1),
            source: "reflection of deg3",
            label: "isotopic to a line",
        },
        CatalogEntry {
            id: "deg4a",
            degree: 4,
            construction: explicit(&[
                &[2, -2, -1, 6, 1],
                &[-2, 2, 6, -4, -2],
                &[2, -4, 2, 6, 0],
                &[0, -2, -1, 2, 1],
                &[2, -4, -2, 2, 2],
            ]),
            claims: knot_claims(4, 1),
            source: "explicit quartic, writhe 1 class",
            label: "isotopic to a line",
        },
        CatalogEntry {
            id: "deg4b",
            degree: 4,
            construction: explicit(&[
                &[2, -2, -3, 6, -1],
                &[-2, 4, 2, -6, 2],
                &[2, -4, 2, 2, 0],
                &[0, -2, 1, 2, -1],
                &[2, -6, 2, 4, -2],
            ]),
            claims: knot_claims(4, 3),
            source: "explicit quartic, writhe 3 class",
            label: "two-crossing knot",
        },
        CatalogEntry {
            id: "deg4-glued-w1",
            degree: 4,
            construction: Glued(GlueStep {
                base: "deg3",
                at: [0, 1],
                direction: [1, 0, 1],
                reverse: false,
                projection_point: [1, 0, 1, 1, 1],
                lambda: [1, 4096],
                epsilon: [1, 8],
            }),
            claims: knot_claims(4, 1),
            source: "deg3 glued with a line",
            label: "isotopic to a line",
        },
        CatalogEntry {
            id: "deg4-glued-w3",
            degree: 4,
            construction: Glued(GlueStep {
                base: "deg3",
                at: [2, 1],
                direction: [3, 4, 5],
                reverse: false,
                projection_point: [1, 0, 1, 1, 1],
                lambda: [1, 4096],
                epsilon: [1, 8],
            }),
            claims: knot_claims(4, 3),
            source: "deg3 glued with a line",
            label: "two-crossing knot",
        },
        CatalogEntry {
            id: "deg4-wall-1",
            degree: 4,
            construction: wall_sqrt2(),
            claims: nodal_claims(1, 0),
            source: "explicit nodal quartic over Q(√2)",
            label: "wall",
        },
        CatalogEntry {
            id: "deg4-wall-2",
            degree: 4,
            construction: explicit(&[
                &[0, 0, 0, 0, 0],
                &[0, -2, 0, 2, 0],
                &[0, 0, -2, 2, 0],
                &[-1, 0, 2, 2, -2],
                &[1, 0, 0, -2, 2],
            ]),
            claims: nodal_claims(1, 0),
            source: "explicit nodal quartic",
            label: "wall",
        },
        CatalogEntry {
            id: "deg5-w0",
            degree: 5,
            construction: Glued(glued5(0, [-3, -4, 5], true, 1024)),
            claims: knot_claims(5, 0),
            source: "deg4-glued-w3 glued with a line",
            label: "isotopic to a line",
        },
        CatalogEntry {
            id: "deg5-w2",
            degree: 5,
            construction: Glued(glued5(-1, [0, 1, 1], true, 2)),
            claims: knot_claims(5, 2),
            source: "deg4-glued-w3 glued with a line",
            label: "isotopic to a line",
        },
        CatalogEntry {
            id: "deg5-w4",
            degree: 5,
            construction: Glued(glued5(-1, [0, 1, 1], false, 2)),
            claims: knot_claims(5, 4),
            source: "deg4-glued-w3 glued with a line",
            label: "long trefoil",
        },
        CatalogEntry {
            id: "deg5-w6",
            degree: 5,
            construction: Glued(glued5(0, [-3, -4, 5], false, 1024)),
            claims: knot_claims(5, 6),
            source: "deg4-glued-w3 glued with a line",
            label: "projective 5_3 knot",
        },
        CatalogEntry {
            id: "deg5-edge",
            degree: 5,
            construction: Pullback(planar_nodal_cubic()),
            claims: nodal_claims(2, 1),
            source:
                "inverse projection of a plane nodal cubic with one infinity point on the conic",
            label: "edge",
        },
    ];
    v.sort_by_key(|e| e.degree);
    v
}

pub fn entry(id: &str) -> Option<CatalogEntry> {
    list_entries().into_iter().find(|e| e.id == id)
}

fn cache() -> &'static Mutex<BTreeMap<&'static str, RationalCurve>> {
    static CACHE: OnceLock<Mutex<BTreeMap<&'static str, RationalCurve>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn base_curve(id: &str) -> Result<RationalCurve> {
    entry(id)
        .ok_or_else(|| Error::Invalid(format!("unknown catalog entry '{id}'")))?
        .curve()
}

impl CatalogEntry {
    /// The curve of this entry; constructions are built once per process.
    pub fn curve(&self) -> Result<RationalCurve> {
        if let Some(c) = cache().lock().expect("cache lock").get(self.id) {
            return Ok(c.clone());
        }
        let c = match &self.construction {
            Construction::Explicit(c) => c.clone(),
            Construction::Reversed(of) => base_curve(of)?.reversed(),
            Construction::Mirrored(of) => base_curve(of)?.mirror(),
            Construction::Glued(step) => step.build(&base_curve(step.base)?)?,
            Construction::Pullback(c) => pullback(c)?.curve,
        };
        cache()
            .lock()
            .expect("cache lock")
            .insert(self.id, c.clone());
        Ok(c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub claim: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub id: String,
    pub degree: usize,
    pub results: Vec<ClaimResult>,
    pub passed: bool,
}

impl EntryReport {
    pub fn failures(&self) -> impl Iterator<Item = &ClaimResult> {
        self.results.iter().filter(|r| !r.pass)
    }
}

struct Checks(Vec<ClaimResult>);

impl Checks {
    fn push(&mut self, claim: &str, expected: impl ToString, observed: impl ToString, pass: bool) {
        self.0.push(ClaimResult {
            claim: claim.into(),
            expected: expected.to_string(),
            observed: observed.to_string(),
            pass,
        });
    }

    fn eq<T: ToString + PartialEq>(&mut self, claim: &str, expected: T, observed: T) {
        let pass = expected == observed;
        self.push(claim, expected, observed, pass);
    }

    fn error(&mut self, claim: &str, expected: impl ToString, e: &Error) {
        self.push(claim, expected, format!("error: {e}"), false);
    }
}

/// Check every claim of an entry; failures are report content, not errors.
pub fn verify_entry(e: &CatalogEntry) -> EntryReport {
    let mut ck = Checks(vec![]);
    match e.curve() {
        Ok(c) => check_curve(e, &c, &mut ck),
        Err(err) => ck.error("construction", "a curve", &err),
    }
    let passed = ck.0.iter().all(|r| r.pass);
    EntryReport {
        id: e.id.into(),
        degree: e.degree,
        results: ck.0,
        passed,
    }
}

fn check_curve(e: &CatalogEntry, c: &RationalCurve, ck: &mut Checks) {
    let cl = &e.claims;
    ck.eq("degree", e.degree, c.degree());
    match c.quadric_residual() {
        Ok(r) => ck.push(
            "on-quadric",
            cl.on_quadric,
            if r.is_zero() {
                "residual 0".to_string()
            } else {
                format!("residual {r}")
            },
            r.is_zero() == cl.on_quadric,
        ),
        Err(err) => ck.error("on-quadric", cl.on_quadric, &err),
    }
    match is_knot(c) {
        Ok(k) => ck.eq("knot", cl.knot, k.is_knot),
        Err(err) => ck.error("knot", cl.knot, &err),
    }
    let nodes = double_points(c);
    if let Some(n) = cl.double_points {
        match &nodes {
            Ok(v) => {
                let kinds: Vec<String> = v.iter().map(|n| format!("{:?}", n.kind)).collect();
                ck.push(
                    "double points",
                    n,
                    format!("{} {kinds:?}", v.len()),
                    v.len() == n,
                );
            }
            Err(err) => ck.error("double points", n, err),
        }
    }
    if let Some(w) = cl.writhe {
        match writhe_q32(c, None) {
            Ok(r) => ck.push(
                "|writhe|",
                w,
                format!("{} (centers {:?})", r.report.writhe, r.report.per_center),
                r.report.writhe.abs() == w,
            ),
            Err(err) => ck.error("|writhe|", w, &err),
        }
    }
    match cl.projection {
        Some(ProjectionClaim::OffCurve) => {
            let res = find_quadric_point_off(std::slice::from_ref(c))
                .and_then(|q| project_off_curve(c, &q))
                .and_then(|pr| infinity_analysis(&pr.curve));
            match res {
                Ok(inf) => ck.push(
                    "infinity points on conic",
                    e.degree,
                    inf.on_conic_multiplicity,
                    inf.all_on_conic && inf.on_conic_multiplicity == e.degree,
                ),
                Err(err) => ck.error("infinity points on conic", e.degree, &err),
            }
        }
        Some(ProjectionClaim::FromNodes { on_conic }) => {
            let real: Vec<_> = nodes
                .iter()
                .flatten()
                .filter(|n| matches!(n.kind, NodeKind::NonSolitary | NodeKind::Solitary))
                .collect();
            if real.is_empty() {
                ck.push("projection from nodes", "a real node", "none", false);
            }
            for n in real {
                let res = project_from_node(c, n)
                    .and_then(|pr| Ok((pr.curve.degree(), infinity_analysis(&pr.curve)?)));
                let claim = format!("projection from {:?} node", n.kind);
                match res {
                    Ok((d, inf)) => ck.push(
                        &claim,
                        format!("degree {}, {on_conic} on conic", e.degree - 2),
                        format!("degree {d}, {} on conic", inf.distinct_on_conic),
                        d == e.degree - 2 && inf.distinct_on_conic == on_conic,
                    ),
                    Err(err) => ck.error(&claim, on_conic, &err),
                }
            }
        }
        None => {}
    }
}

/// Verify the given entries in parallel; reports come back ordered by id.
pub fn verify_entries(entries: &[CatalogEntry]) -> Vec<EntryReport> {
    // build shared bases first so parallel workers do not rebuild them
    for e in entries {
        if let Construction::Glued(step) = &e.construction {
            let _ = base_curve(step.base);
        }
    }
    let mut out: Vec<EntryReport> = entries.par_iter().map(verify_entry).collect();
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

pub fn verify_all() -> Vec<EntryReport> {
    verify_entries(&list_entries())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_cover_all_degrees() {
        let v = list_entries();
        let mut ids: Vec<_> = v.iter().map(|e| e.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), v.len());
        for d in 1..=5 {
            assert!(v.iter().any(|e| e.degree == d && e.claims.knot));
        }
        assert!(v.len() >= 10);
    }

    #[test]
    fn line_entry() {
        let r = verify_entry(&entry("deg1").unwrap());
        assert!(r.passed, "{r:?}");
    }
}
