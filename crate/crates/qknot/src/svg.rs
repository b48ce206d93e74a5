//! SVG drawing of a plane knot diagram.
//!
//! The strand is sampled at 512 parameters in the chart `(y1/y0, y2/y0)`,
//! refined where samples are far apart, broken where it runs off to infinity and gapped around the under branch of
//! each real crossing. The special conic is drawn dashed.

use std::fmt::Write;

use num_complex::Complex64;

use crate::writhe::{CrossingKind, Diagram};

pub const SAMPLES: usize = 512;
const SIZE: f64 = 600.0;
const MARGIN: f64 = 30.0;
/// Gap half-width in pixels around an under crossing.
const GAP: f64 = 7.0;
/// Chart points farther than this from the origin are treated as at infinity.
const CLIP: f64 = 40.0;
/// Largest pixel step between consecutive strand samples after refinement.
const STEP: f64 = 2.0;
const MAX_ROUNDS: usize = 40;
const MAX_POINTS: usize = 200_000;

fn angle(z: (Complex64, Complex64)) -> f64 {
    z.1.re.atan2(z.0.re).rem_euclid(std::f64::consts::PI)
}

fn angle_dist(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(std::f64::consts::PI);
    d.min(std::f64::consts::PI - d)
}

fn chart(y: [f64; 3]) -> Option<[f64; 2]> {
    let n = (y[0] * y[0] + y[1] * y[1] + y[2] * y[2]).sqrt();
    if y[0].abs() <= 1e-12 * n {
        return None;
    }
    let p = [y[1] / y[0], y[2] / y[0]];
    (p[0].hypot(p[1]) < CLIP).then_some(p)
}

struct View {
    lo: [f64; 2],
    scale: f64,
}

impl View {
    fn fit(points: &[[f64; 2]]) -> View {
        let mut lo = [f64::INFINITY; 2];
        let mut hi = [f64::NEG_INFINITY; 2];
        for p in points {
            for i in 0..2 {
                lo[i] = lo[i].min(p[i]);
                hi[i] = hi[i].max(p[i]);
            }
        }
        if !lo[0].is_finite() {
            return View {
                lo: [-1.0, -1.0],
                scale: (SIZE - 2.0 * MARGIN) / 2.0,
            };
        }
        let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-9);
        // center the shorter side
        let lo = [
            0.5 * (lo[0] + hi[0]) - 0.5 * span,
            0.5 * (lo[1] + hi[1]) - 0.5 * span,
        ];
        View {
            lo,
            scale: (SIZE - 2.0 * MARGIN) / span,
        }
    }

    fn px(&self, p: [f64; 2]) -> [f64; 2] {
        [
            MARGIN + (p[0] - self.lo[0]) * self.scale,
            SIZE - MARGIN - (p[1] - self.lo[1]) * self.scale,
        ]
    }
}

/// Corners of the box between the 15th and 85th percentiles of each coordinate.
fn central(points: &[[f64; 2]]) -> Vec<[f64; 2]> {
    if points.is_empty() {
        return vec![];
    }
    let q = |i: usize| {
        let mut v: Vec<f64> = points.iter().map(|p| p[i]).collect();
        v.sort_by(f64::total_cmp);
        let at = |f: f64| v[((v.len() - 1) as f64 * f).round() as usize];
        (at(0.15), at(0.85))
    };
    let (x, y) = (q(0), q(1));
    vec![[x.0, y.0], [x.1, y.1]]
}

fn polyline(out: &mut String, pts: &[[f64; 2]], style: &str) {
    if pts.len() < 2 {
        return;
    }
    let mut d = String::new();
    for (i, p) in pts.iter().enumerate() {
        let _ = write!(
            d,
            "{}{:.2},{:.2}",
            if i == 0 { "M" } else { " L" },
            p[0],
            p[1]
        );
    }
    let _ = writeln!(out, r#"  <path d="{d}" {style}/>"#);
}

/// Insert midpoints until consecutive samples are at most `STEP` pixels apart;
/// squeezed pieces of a glued knot live in very short parameter ranges.
fn refine(
    start: Vec<f64>,
    eval: impl Fn(f64) -> Option<[f64; 2]>,
) -> (Vec<f64>, Vec<Option<[f64; 2]>>) {
    let mut pts: Vec<(f64, Option<[f64; 2]>)> =
        start.into_iter().map(|th| (th, eval(th))).collect();
    for _ in 0..MAX_ROUNDS {
        let n = pts.len();
        let mut next = Vec::with_capacity(2 * n);
        for i in 0..n {
            next.push(pts[i]);
            let (a, p) = pts[i];
            let (mut b, q) = pts[(i + 1) % n];
            if i + 1 == n {
                b += std::f64::consts::PI;
            }
            let split = match (p, q) {
                (Some(p), Some(q)) => (p[0] - q[0]).hypot(p[1] - q[1]) > STEP,
                // pin down where the strand leaves the chart
                (Some(_), None) | (None, Some(_)) => true,
                (None, None) => false,
            };
            if split && b - a > 1e-13 && next.len() < MAX_POINTS {
                let m = 0.5 * (a + b);
                next.push((m.rem_euclid(std::f64::consts::PI), eval(m)));
            }
        }
        if next.len() == n {
            break;
        }
        // a midpoint past π wraps to the front
        next.sort_by(|x, y| x.0.total_cmp(&y.0));
        pts = next;
    }
    pts.into_iter().unzip()
}

/// Split a sampled closed curve into drawable runs.
fn runs(samples: &[Option<[f64; 2]>], hidden: &[bool], jump: f64) -> Vec<Vec<[f64; 2]>> {
    let n = samples.len();
    let mut out: Vec<Vec<[f64; 2]>> = vec![];
    let mut cur: Vec<[f64; 2]> = vec![];
    for k in 0..=n {
        let i = k % n;
        match samples[i] {
            Some(p) if !hidden[i] => {
                if let Some(q) = cur.last() {
                    if (p[0] - q[0]).hypot(p[1] - q[1]) > jump {
                        out.push(std::mem::take(&mut cur));
                    }
                }
                cur.push(p);
            }
            _ => out.push(std::mem::take(&mut cur)),
        }
    }
    out.push(cur);
    out.retain(|r| r.len() > 1);
    out
}

/// Render the diagram as an SVG 1.1 document.
pub fn diagram_svg(dg: &Diagram) -> String {
    let proj: Vec<[f64; 4]> = dg
        .projection
        .iter()
        .map(|r| [r[0].to_f64(), r[1].to_f64(), r[2].to_f64(), r[3].to_f64()])
        .collect();
    let apply = |x: [f64; 4]| -> [f64; 3] {
        let mut y = [0.0; 3];
        for (i, r) in proj.iter().enumerate() {
            y[i] = (0..4).map(|j| r[j] * x[j]).sum();
        }
        y
    };
    let eval = |th: f64| -> Option<[f64; 2]> {
        let (s, t) = (th.cos(), th.sin());
        let y: Vec<f64> = dg.plane.iter().map(|p| p.eval_f64(s, t)).collect();
        chart([y[0], y[1], y[2]])
    };
    let uniform: Vec<f64> = (0..SAMPLES)
        .map(|k| std::f64::consts::PI * (k as f64 + 0.5) / SAMPLES as f64)
        .collect();
    let strand: Vec<Option<[f64; 2]>> = uniform.iter().map(|&th| eval(th)).collect();
    let conic: Vec<Option<[f64; 2]>> = (0..SAMPLES)
        .map(|k| {
            let phi = 2.0 * std::f64::consts::PI * k as f64 / SAMPLES as f64;
            chart(apply([0.0, phi.cos(), phi.sin(), 1.0]))
        })
        .collect();
    let crossings: Vec<_> = dg
        .crossings
        .iter()
        .filter(|c| c.kind == CrossingKind::Real)
        .map(|c| (dg.chart_point(c.branches[0]), c))
        .collect();
    // frame the crossings and the bulk of the strand; far tails are clipped
    let mut fit = central(&strand.iter().flatten().cloned().collect::<Vec<_>>());
    fit.extend(crossings.iter().map(|(p, _)| *p));
    let view = View::fit(&fit);
    let px = |v: &[Option<[f64; 2]>]| -> Vec<Option<[f64; 2]>> {
        v.iter().map(|p| p.map(|p| view.px(p))).collect()
    };
    let conic_px = px(&conic);
    let (angles, strand_px) = refine(uniform, |th| eval(th).map(|p| view.px(p)));

    let mut hidden = vec![false; angles.len()];
    for (pos, c) in &crossings {
        let at = view.px(*pos);
        let over = angle(c.branches[c.over]);
        let under = angle(c.branches[1 - c.over]);
        for (k, p) in strand_px.iter().enumerate() {
            let Some(p) = p else { continue };
            let a = angles[k];
            if (p[0] - at[0]).hypot(p[1] - at[1]) < GAP
                && angle_dist(a, under) < angle_dist(a, over)
            {
                hidden[k] = true;
            }
        }
    }

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);
    let jump = SIZE / 4.0;
    for r in runs(&conic_px, &[false; SAMPLES], jump) {
        polyline(
            &mut out,
            &r,
            r##"fill="none" stroke="#888" stroke-width="1" stroke-dasharray="4 3""##,
        );
    }
    for r in runs(&strand_px, &hidden, jump) {
        polyline(
            &mut out,
            &r,
            r##"fill="none" stroke="#14365d" stroke-width="2""##,
        );
    }
    for (pos, c) in &crossings {
        let p = view.px(*pos);
        let sign = if c.sign > 0 { "+" } else { "−" };
        let _ = writeln!(
            out,
            r##"  <text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="14" fill="#b02020">{sign}</text>"##,
            p[0] + GAP + 2.0,
            p[1] - GAP - 2.0
        );
    }
    let solitary: Vec<i32> = dg
        .crossings
        .iter()
        .filter(|c| c.kind == CrossingKind::Solitary)
        .map(|c| c.sign)
        .collect();
    let _ = writeln!(
        out,
        r#"  <text x="{MARGIN}" y="{:.0}" font-family="sans-serif" font-size="13">writhe {} ({} real, solitary signs {:?})</text>"#,
        SIZE - 8.0,
        dg.writhe(),
        crossings.len(),
        solitary
    );
    out.push_str("</svg>\n");
    out
}
