//! Acceptance criteria, one line each.
//!
//! Runs without the libtest harness so every line is printed. The process
//! fails if any criterion fails other than those listed in `KNOWN_FAILURES`,
//! or if one of those starts passing.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use qknot::catalog::{list_entries, verify_all, CatalogEntry, Construction};
use qknot::curve::{Ambient, RationalCurve};
use qknot::exact::{HomPoly, Scalar};
use qknot::geometry::{project_off_curve, project_on_curve, pullback};
use qknot::glue::{glue_q32, quadric_line, quadric_points, NEAR_UNION_TOL};
use qknot::jacobian::{build_df, default_params, lemma12_witness, rank_exact};
use qknot::singular::{double_points, is_knot, NodeKind};
use qknot::writhe::{writhe_q32, QuadricWritheReport};
use rand::Rng;

/// Criteria that cannot be met, with the reason; see the README.
const KNOWN_FAILURES: &[(&str, &str)] = &[
    (
        "6c",
        "the printed degree-4 representatives both have |writhe| 1",
    ),
    ("F", "the same claim fails in the catalog (deg4b)"),
];

const CRITERION_1_BUDGET: Duration = Duration::from_secs(1);
const CRITERION_2_BUDGET: Duration = Duration::from_secs(10);
const RANDOM_SLICE_CURVES: usize = 50;
const TANGENT_CASES: usize = 10;
const LEMMA_PAIRS_PER_DEGREE: usize = 20;
const ORACLE_CURVES: usize = 100;
const ORACLE_MIN_NONTRIVIAL: usize = 35;
const ROUND_TRIP_POINTS: usize = 5;

type Outcome = Result<String, String>;

struct Ctx {
    entries: Vec<CatalogEntry>,
    curves: BTreeMap<&'static str, RationalCurve>,
    writhes: BTreeMap<&'static str, Result<QuadricWritheReport, String>>,
}

impl Ctx {
    fn curve(&self, id: &str) -> &RationalCurve {
        &self.curves[id]
    }

    fn knots(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(|e| e.claims.knot)
    }

    fn writhe(&self, id: &str) -> Result<i64, String> {
        self.writhes[id]
            .as_ref()
            .map(|r| r.report.writhe)
            .map_err(Clone::clone)
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `Σ J_i p_i(x)²` at `2d + 1` parameters; zero at all of them means the
/// degree-`2d` identity polynomial vanishes.
fn quadric_identity_vanishes(c: &RationalCurve) -> bool {
    let j = [-1, 1, 1, 1, -1];
    (0..=2 * c.degree() as i64).all(|x| {
        let (s, t) = (Scalar::int(x), Scalar::one());
        c.polys()
            .iter()
            .zip(j)
            .map(|(p, w)| {
                let v = p.eval(&s, &t);
                &(&v * &v) * &Scalar::int(w)
            })
            .sum::<Scalar>()
            .is_zero()
    })
}

fn c1_quadric_membership(ctx: &Ctx) -> Outcome {
    let t = Instant::now();
    let explicit: Vec<&CatalogEntry> = ctx
        .entries
        .iter()
        .filter(|e| matches!(e.construction, Construction::Explicit(_)))
        .collect();
    for e in &explicit {
        let c = ctx.curve(e.id);
        check(c.quadric_residual().unwrap().is_zero(), || {
            format!("{}: residual nonzero", e.id)
        })?;
        check(quadric_identity_vanishes(c), || {
            format!("{}: identity check failed", e.id)
        })?;
    }
    let degrees: Vec<usize> = explicit
        .iter()
        .filter(|e| e.claims.knot)
        .map(|e| e.degree)
        .collect();
    let nodal = explicit
        .iter()
        .filter(|e| !e.claims.knot && e.degree == 4)
        .count();
    check((1..=4).all(|d| degrees.contains(&d)) && nodal == 2, || {
        format!("coverage {degrees:?}, {nodal} nodal")
    })?;
    let el = t.elapsed();
    check(el < CRITERION_1_BUDGET, || format!("took {el:?}"))?;
    Ok(format!(
        "{} explicit curves, residual 0, {el:.2?}",
        explicit.len()
    ))
}

fn c2_singularity_counts(ctx: &Ctx) -> Outcome {
    let t = Instant::now();
    let mut n = 0;
    for e in ctx.knots().filter(|e| e.degree <= 4) {
        let v = double_points(ctx.curve(e.id)).map_err(|err| format!("{}: {err}", e.id))?;
        check(v.is_empty(), || {
            format!("{}: {} singular points", e.id, v.len())
        })?;
        n += 1;
    }
    for e in ctx
        .entries
        .iter()
        .filter(|e| !e.claims.knot && e.degree == 4)
    {
        let v = double_points(ctx.curve(e.id)).map_err(|err| format!("{}: {err}", e.id))?;
        let real = v
            .iter()
            .filter(|n| matches!(n.kind, NodeKind::NonSolitary | NodeKind::Solitary))
            .count();
        check(v.len() == 1 && real == 1, || {
            format!("{}: {} singular points, {real} real", e.id, v.len())
        })?;
        n += 1;
    }
    let el = t.elapsed();
    check(el < CRITERION_2_BUDGET, || format!("took {el:?}"))?;
    Ok(format!("{n} curves, knots 0 and walls 1, {el:.2?}"))
}

/// `x2² + x3² − x4²` of a slice curve.
fn conic_of(c: &RationalCurve) -> HomPoly {
    let q = c.polys();
    &(&(&q[2] * &q[2]) + &(&q[3] * &q[3])) - &(&q[4] * &q[4])
}

fn c3a_projection_off_curve(ctx: &Ctx) -> Outcome {
    let mut n = 0;
    for e in ctx.knots() {
        let c = ctx.curve(e.id);
        // two centers per knot
        for q in quadric_points()
            .filter(|q| c.point_params(q).is_empty())
            .take(2)
        {
            let pr = project_off_curve(c, &q).map_err(|err| format!("{}: {err}", e.id))?;
            let p = &pr.curve;
            check(p.degree() == e.degree, || {
                format!("{}: degree {}", e.id, p.degree())
            })?;
            check(conic_of(p).div_exact(&p.polys()[1]).is_ok(), || {
                format!("{}: q1 does not divide the conic form", e.id)
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} projections, q1 | q2²+q3²−q4² in each"))
}

fn c3b_projection_on_curve(ctx: &Ctx) -> Outcome {
    let c = ctx.curve("deg3");
    let mut n = 0;
    for (s, t) in [(0, 1), (1, 1), (-1, 1), (2, 1), (1, 0)] {
        let pr = project_on_curve(c, &Scalar::int(s), &Scalar::int(t))
            .map_err(|e| format!("[{s}:{t}]: {e}"))?;
        let p = &pr.curve;
        check(p.degree() == 2, || {
            format!("[{s}:{t}]: degree {}", p.degree())
        })?;
        // infinity points counted with multiplicity: d − 2 = 1 of 2 on the conic
        let on_conic = p.polys()[1].gcd(&conic_of(p)).unwrap().degree();
        check(on_conic == 1, || {
            format!("[{s}:{t}]: {on_conic} of 2 on the conic")
        })?;
        n += 1;
    }
    Ok(format!(
        "deg3 from {n} curve points: degree 2, 1 of 2 infinity points on the conic"
    ))
}

type Rng8 = rand_chacha::ChaCha8Rng;

fn form(rng: &mut Rng8, d: usize) -> HomPoly {
    common::random_form(rng, d, 3)
}

/// `(A² − B², 2AB, A² + B²)`, times a linear form for odd `d`: a degree-`d`
/// map into the cone over the special conic.
fn cone_map(rng: &mut Rng8, d: usize) -> [HomPoly; 3] {
    let (a, b) = (form(rng, d / 2), form(rng, d / 2));
    let mut v = [
        &(&a * &a) - &(&b * &b),
        (&a * &b).scale(&Scalar::int(2)),
        &(&a * &a) + &(&b * &b),
    ];
    if d % 2 == 1 {
        let l = form(rng, 1);
        for p in v.iter_mut() {
            *p = &*p * &l;
        }
    }
    v
}

/// Slice curve `[0 : P·Q : c + P·R]`: the plane-at-infinity points at the
/// roots of `P` lie on the special conic.
fn constructed_slice(rng: &mut Rng8, d: usize, p: &HomPoly, q: &HomPoly) -> Option<RationalCurve> {
    let k = d - p.degree();
    let cone = cone_map(rng, d);
    let mut f = vec![HomPoly::zero(d), p * q];
    for c in cone {
        f.push(&c + &(p * &form(rng, k)));
    }
    RationalCurve::new(Ambient::Rp3Slice, f)
        .ok()
        .filter(|c| c.degree() == d)
}

fn c4a_pullback_degree_law(_: &Ctx) -> Outcome {
    let mut rng = common::rng(4);
    let mut seen = BTreeMap::new();
    let mut n = 0;
    while n < RANDOM_SLICE_CURVES {
        let d = rng.random_range(1..=4usize);
        let k = rng.random_range(0..=d);
        let p = form(&mut rng, k);
        let q = form(&mut rng, d - k);
        if p.is_zero() || q.is_zero() {
            continue;
        }
        let Some(c) = constructed_slice(&mut rng, d, &p, &q) else {
            continue;
        };
        // shared roots of q1 and the conic form, each with min(μ, ν)
        let m = c.polys()[1].gcd(&conic_of(&c)).unwrap().degree();
        let got = pullback(&c).map_err(|e| e.to_string())?.curve;
        check(got.degree() == 2 * d - m, || {
            format!("d {d}, m {m}: degree {}", got.degree())
        })?;
        check(got.on_quadric().unwrap(), || {
            format!("d {d}, m {m}: lift off the quadric")
        })?;
        *seen.entry((d, m)).or_insert(0) += 1;
        n += 1;
    }
    Ok(format!(
        "{n} curves, {} (d, m) pairs, deg = 2d − m",
        seen.len()
    ))
}

fn c4b_tangent_case(_: &Ctx) -> Outcome {
    let mut rng = common::rng(41);
    let mut n = 0;
    while n < TANGENT_CASES {
        let d = rng.random_range(2..=4usize);
        let l = form(&mut rng, 1);
        let rest = form(&mut rng, d - 2);
        let p = &l * &rest;
        if l.is_zero()
            || rest.is_zero()
            || p.chart().squarefree().deg() + p.mult_at_infinity().min(1) != d - 1
        {
            continue;
        }
        // q1 = l²·rest: tangent to the plane at infinity at a conic point
        let Some(c) = constructed_slice(&mut rng, d, &p, &l) else {
            continue;
        };
        // hypotheses: contact exactly 2, crossing the conic transversally
        let conic = conic_of(&c);
        if rest.div_exact(&l).is_ok() || conic.is_zero() || conic.div_exact(&(&l * &l)).is_ok() {
            continue;
        }
        let got = pullback(&c).map_err(|e| e.to_string())?.curve;
        check(got.degree() == d + 1, || {
            format!("d {d}: degree {}", got.degree())
        })?;
        n += 1;
    }
    Ok(format!("{n} tangent contacts, deg = d + 1"))
}

fn sample_params() -> Vec<(Scalar, Scalar)> {
    [(0, 1), (1, 0), (1, 1), (-1, 1), (2, 1), (1, 2), (-3, 2)]
        .iter()
        .map(|&(s, t)| (Scalar::int(s), Scalar::int(t)))
        .collect()
}

/// `ROUND_TRIP_POINTS` points of `a` lie on `b`.
fn points_on(a: &RationalCurve, b: &RationalCurve) -> Result<(), String> {
    let mut n = 0;
    for (s, t) in sample_params() {
        let x = a.eval(&s, &t).map_err(|e| e.to_string())?;
        check(!b.point_params(&x).is_empty(), || {
            format!("point {x:?} missing")
        })?;
        n += 1;
        if n == ROUND_TRIP_POINTS {
            break;
        }
    }
    Ok(())
}

fn c5_round_trip(ctx: &Ctx) -> Outcome {
    let mut n = 0;
    for e in ctx.knots() {
        let c = ctx.curve(e.id);
        let q = quadric_points()
            .find(|q| c.point_params(q).is_empty())
            .unwrap();
        let pr = project_off_curve(c, &q).map_err(|err| format!("{}: {err}", e.id))?;
        let back = pullback(&pr.curve)
            .map_err(|err| format!("{}: {err}", e.id))?
            .curve
            .transform(&pr.transform.inverse());
        check(back.degree() == c.degree(), || {
            format!("{}: degree {}", e.id, back.degree())
        })?;
        points_on(c, &back).map_err(|err| format!("{}: {err}", e.id))?;
        points_on(&back, c).map_err(|err| format!("{}: back: {err}", e.id))?;
        n += 1;
    }
    Ok(format!("{n} knots, {ROUND_TRIP_POINTS} points each way"))
}

fn abs_writhes(ctx: &Ctx, ids: &[&str]) -> Result<Vec<i64>, String> {
    ids.iter()
        .map(|id| {
            ctx.writhe(id)
                .map(i64::abs)
                .map_err(|e| format!("{id}: {e}"))
        })
        .collect()
}

fn c6a_low_degree_writhe(ctx: &Ctx) -> Outcome {
    let ids: Vec<&str> = ctx
        .knots()
        .filter(|e| e.degree <= 2)
        .map(|e| e.id)
        .collect();
    let w = abs_writhes(ctx, &ids)?;
    check(w.iter().all(|&w| w == 0), || format!("{ids:?} give {w:?}"))?;
    Ok(format!("{ids:?} all 0"))
}

fn c6b_cubic_writhe(ctx: &Ctx) -> Outcome {
    let ids: Vec<&str> = ctx
        .knots()
        .filter(|e| e.degree == 3)
        .map(|e| e.id)
        .collect();
    let w = abs_writhes(ctx, &ids)?;
    check(w.iter().all(|&w| w == 1), || format!("{ids:?} give {w:?}"))?;
    Ok(format!("{ids:?} all |w| = 1"))
}

fn c6c_quartic_writhe(ctx: &Ctx) -> Outcome {
    let w = abs_writhes(ctx, &["deg4a", "deg4b"])?;
    let glued = abs_writhes(ctx, &["deg4-glued-w1", "deg4-glued-w3"])?;
    let mut s = w.clone();
    s.sort();
    check(s == [1, 3], || {
        format!("printed reps give |w| {w:?}, expected {{1, 3}} (glued reps give {glued:?})")
    })?;
    Ok(format!("printed reps give {w:?}"))
}

fn c6d_quintic_writhe(ctx: &Ctx) -> Outcome {
    let ids = ["deg5-w0", "deg5-w2", "deg5-w4", "deg5-w6"];
    let w = abs_writhes(ctx, &ids)?;
    check(w == [0, 2, 4, 6], || format!("{w:?}"))?;
    Ok(format!(
        "{{{}}}",
        w.iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    ))
}

fn c6e_parity_and_centers(ctx: &Ctx) -> Outcome {
    let mut n = 0;
    for (id, r) in &ctx.writhes {
        let r = &r.as_ref().map_err(|e| format!("{id}: {e}"))?.report;
        let d = r.degree as i64;
        let nodes = (d - 1) * (d - 2) / 2;
        check(r.per_center.len() == 3, || {
            format!("{id}: {} centers", r.per_center.len())
        })?;
        for &w in &r.per_center {
            check((w - nodes).rem_euclid(2) == 0 && w.abs() <= nodes, || {
                format!("{id}: writhe {w}, bound {nodes}")
            })?;
            check(w == r.writhe, || {
                format!("{id}: centers give {:?}", r.per_center)
            })?;
            n += 1;
        }
    }
    Ok(format!(
        "{n} diagrams, parity and bound hold, 3 centers agree on each of {} knots",
        ctx.writhes.len()
    ))
}

/// Criteria 1–3 for a knot on the quadric.
fn basic_checks(c: &RationalCurve) -> Result<(), String> {
    check(c.quadric_residual().unwrap().is_zero(), || {
        "off the quadric".into()
    })?;
    check(is_knot(c).map_err(|e| e.to_string())?.is_knot, || {
        "not a knot".into()
    })?;
    if c.degree() <= 4 {
        let v = double_points(c).map_err(|e| e.to_string())?;
        check(v.is_empty(), || format!("{} singular points", v.len()))?;
    }
    let q = quadric_points()
        .find(|q| c.point_params(q).is_empty())
        .unwrap();
    let p = project_off_curve(c, &q).map_err(|e| e.to_string())?.curve;
    check(conic_of(&p).div_exact(&p.polys()[1]).is_ok(), || {
        "infinity points off the conic".into()
    })
}

fn c7a_glue_lines(ctx: &Ctx) -> Outcome {
    let a = ctx.curve("deg1");
    let b = quadric_line(&a.eval(&Scalar::zero(), &Scalar::one()).unwrap(), [0, 1, 1]).unwrap();
    let (g, r) = glue_q32(a, &b, false, None).map_err(|e| e.to_string())?;
    check(g.degree() == 2, || format!("degree {}", g.degree()))?;
    basic_checks(&g)?;
    check(r.near_union_distance < NEAR_UNION_TOL, || {
        format!("union distance {}", r.near_union_distance)
    })?;
    Ok(format!(
        "degree-2 knot on the quadric, union distance {:.1e} < {NEAR_UNION_TOL:.0e}",
        r.near_union_distance
    ))
}

fn c7b_glue_chain(ctx: &Ctx) -> Outcome {
    let mut k = ctx.curve("deg1").clone();
    let mut steps = vec![];
    for (i, dir) in [[0, 1, 1], [1, 0, 1], [1, 0, 1], [1, 0, 1]]
        .into_iter()
        .enumerate()
    {
        let line = quadric_line(&k.eval(&Scalar::zero(), &Scalar::one()).unwrap(), dir).unwrap();
        let (g, r) = glue_q32(&k, &line, false, None).map_err(|e| format!("step {i}: {e}"))?;
        check(g.degree() == k.degree() + 1, || {
            format!("step {i}: degree {}", g.degree())
        })?;
        basic_checks(&g).map_err(|e| format!("degree {}: {e}", g.degree()))?;
        check(r.near_union_distance < NEAR_UNION_TOL, || {
            format!("step {i}: union distance {}", r.near_union_distance)
        })?;
        steps.push(format!("{}:{:.1e}", g.degree(), r.near_union_distance));
        k = g;
    }
    Ok(format!("degrees and union distances {}", steps.join(" ")))
}

fn c8a_rank(ctx: &Ctx) -> Outcome {
    let mut seen = vec![];
    for e in ctx.knots() {
        let c = ctx.curve(e.id);
        let d = c.degree();
        let r = rank_exact(&build_df(c, &default_params(d)).map_err(|err| err.to_string())?);
        check(r == 2 * d + 1, || {
            format!("{}: rank {r}, expected {}", e.id, 2 * d + 1)
        })?;
        seen.push(d);
    }
    seen.dedup();
    check(seen == [1, 2, 3, 4, 5], || format!("degrees {seen:?}"))?;
    Ok(format!(
        "rank 2d+1 on {} knots of degree 1..5",
        ctx.knots().count()
    ))
}

fn c8b_lemma_witness(_: &Ctx) -> Outcome {
    let mut rng = common::rng(8);
    for d in 1..=4 {
        let mut n = 0;
        while n < LEMMA_PAIRS_PER_DEGREE {
            let (p0, p1) = (form(&mut rng, d), form(&mut rng, d));
            // p1 keeps its degree in the chart s = 1
            if p0.is_zero() || p1.coeff(d).is_zero() || p0.resultant(&p1).unwrap().is_zero() {
                continue;
            }
            let w = lemma12_witness(&p0, &p1, &default_params(d)).map_err(|e| e.to_string())?;
            check(!w.is_zero(), || format!("zero witness for {p0} and {p1}"))?;
            n += 1;
        }
    }
    Ok(format!(
        "{LEMMA_PAIRS_PER_DEGREE} coprime pairs for each degree 1..4, all nonzero"
    ))
}

fn c9_oracle(_: &Ctx) -> Outcome {
    let (nontrivial, cusps) = common::oracle::compare_random(0x0d0b1e, ORACLE_CURVES)?;
    check(nontrivial >= ORACLE_MIN_NONTRIVIAL, || {
        format!("only {nontrivial} curves with double points")
    })?;
    Ok(format!(
        "{ORACLE_CURVES} curves agree ({nontrivial} with double points, {cusps} cusps checked)"
    ))
}

fn flagship(_: &Ctx) -> Outcome {
    let reports = verify_all();
    let failed: Vec<String> = reports
        .iter()
        .flat_map(|r| {
            r.failures().map(move |f| {
                format!(
                    "{} {}: expected {}, observed {}",
                    r.id, f.claim, f.expected, f.observed
                )
            })
        })
        .collect();
    check(failed.is_empty(), || failed.join("; "))?;
    Ok(format!("{} entries, every claim holds", reports.len()))
}

type Criterion = (&'static str, &'static str, fn(&Ctx) -> Outcome);

const CRITERIA: &[Criterion] = &[
    (
        "1",
        "explicit parametrizations lie on the quadric",
        c1_quadric_membership,
    ),
    (
        "2",
        "singular point counts of knots and walls",
        c2_singularity_counts,
    ),
    (
        "3a",
        "projection from a point off the knot",
        c3a_projection_off_curve,
    ),
    (
        "3b",
        "projection from a point on the cubic",
        c3b_projection_on_curve,
    ),
    ("4a", "pullback degree is 2d − m", c4a_pullback_degree_law),
    ("4b", "tangent contact gives degree d + 1", c4b_tangent_case),
    (
        "5",
        "pullback of the projection recovers the knot",
        c5_round_trip,
    ),
    ("6a", "writhe 0 in degrees 1 and 2", c6a_low_degree_writhe),
    ("6b", "|writhe| 1 in degree 3", c6b_cubic_writhe),
    (
        "6c",
        "the two degree-4 representatives give {1, 3}",
        c6c_quartic_writhe,
    ),
    (
        "6d",
        "glued degree-5 knots give {0, 2, 4, 6}",
        c6d_quintic_writhe,
    ),
    (
        "6e",
        "parity, bound and center independence",
        c6e_parity_and_centers,
    ),
    ("7a", "gluing two lines", c7a_glue_lines),
    ("7b", "line gluing up to degree 5", c7b_glue_chain),
    ("8a", "rank of the differential is 2d + 1", c8a_rank),
    (
        "8b",
        "coprime pairs give a nonzero witness",
        c8b_lemma_witness,
    ),
    (
        "9",
        "double points agree with the brute-force oracle",
        c9_oracle,
    ),
    ("F", "every catalog claim holds", flagship),
];

fn main() {
    let t = Instant::now();
    let entries = list_entries();
    let mut curves = BTreeMap::new();
    for e in &entries {
        curves.insert(
            e.id,
            e.curve().unwrap_or_else(|err| panic!("{}: {err}", e.id)),
        );
    }
    let writhes = entries
        .iter()
        .filter(|e| e.claims.knot)
        .map(|e| {
            (
                e.id,
                writhe_q32(&curves[e.id], None).map_err(|err| err.to_string()),
            )
        })
        .collect();
    let ctx = Ctx {
        entries,
        curves,
        writhes,
    };
    println!("catalog built and writhes computed in {:.1?}", t.elapsed());

    let known: BTreeMap<&str, &str> = KNOWN_FAILURES.iter().copied().collect();
    let mut unexpected = vec![];
    for (id, what, f) in CRITERIA {
        let t = Instant::now();
        let out = catch_unwind(AssertUnwindSafe(|| f(&ctx))).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let el = t.elapsed();
        match (&out, known.get(id)) {
            (Ok(msg), None) => println!("PASS  criterion {id:<3} {what}: {msg} [{el:.1?}]"),
            (Err(msg), Some(why)) => {
                println!("FAIL  criterion {id:<3} {what}: {msg} [{el:.1?}] (known: {why})")
            }
            (Err(msg), None) => {
                println!("FAIL  criterion {id:<3} {what}: {msg} [{el:.1?}]");
                unexpected.push(*id);
            }
            (Ok(msg), Some(_)) => {
                println!(
                    "PASS  criterion {id:<3} {what}: {msg} [{el:.1?}] (listed as a known failure)"
                );
                unexpected.push(*id);
            }
        }
    }
    println!("acceptance finished in {:.1?}", t.elapsed());
    if !unexpected.is_empty() {
        println!("unexpected outcomes: {unexpected:?}");
        std::process::exit(1);
    }
}
