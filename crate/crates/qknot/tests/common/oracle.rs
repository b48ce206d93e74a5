#![allow(dead_code)]
//! Brute-force double point search.
//!
//! The oracle runs Newton's method from a grid of complex parameter pairs
//! `(a, b)` on the divided differences `(p_i(a)p_j(b) − p_j(a)p_i(b))/(a − b)`
//! and keeps the distinct solutions where the two images agree.

use num_complex::Complex64 as C;
use qknot::curve::{Ambient, RationalCurve};
use qknot::singular::{double_points, NodeKind};
use qknot::HomPoly;
use rand::Rng;

use super::{chart_coeffs, random_slice};

/// `(p_i(a)p_j(b) − p_j(a)p_i(b))/(a − b)` for ascending coefficients.
pub fn divided(pi: &[f64], pj: &[f64], a: C, b: C) -> C {
    let n = pi.len();
    let mut out = C::new(0.0, 0.0);
    for k in 0..n {
        for l in k + 1..n {
            let m = pi[k] * pj[l] - pj[k] * pi[l];
            if m == 0.0 {
                continue;
            }
            // a^k b^l − a^l b^k = −(ab)^k (a^m − b^m), m = l − k
            let mut h = C::new(0.0, 0.0);
            for r in 0..l - k {
                h += a.powu(r as u32) * b.powu((l - k - 1 - r) as u32);
            }
            out -= (a * b).powu(k as u32) * h * m;
        }
    }
    out
}

fn eval(p: &[f64], z: C) -> C {
    p.iter().rev().fold(C::new(0.0, 0.0), |acc, &c| acc * z + c)
}

pub fn unit(forms: &[Vec<f64>], z: C) -> Vec<C> {
    let v: Vec<C> = forms.iter().map(|p| eval(p, z)).collect();
    let n = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|x| x / n).collect()
}

pub fn wedge(u: &[C], v: &[C]) -> f64 {
    let mut s = 0.0;
    for i in 0..u.len() {
        for j in i + 1..u.len() {
            s += (u[i] * v[j] - u[j] * v[i]).norm_sqr();
        }
    }
    s.sqrt()
}

fn newton(f: impl Fn(C, C) -> [C; 2], mut a: C, mut b: C) -> Option<(C, C)> {
    for _ in 0..80 {
        let r = f(a, b);
        let h = 1e-7;
        let fa = f(a + h, b);
        let fb = f(a, b + h);
        let j = [
            [(fa[0] - r[0]) / h, (fb[0] - r[0]) / h],
            [(fa[1] - r[1]) / h, (fb[1] - r[1]) / h],
        ];
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        if det.norm() < 1e-300 {
            return None;
        }
        let da = (r[0] * j[1][1] - r[1] * j[0][1]) / det;
        let db = (j[0][0] * r[1] - j[1][0] * r[0]) / det;
        a -= da;
        b -= db;
        if !(a.norm() < 1e6 && b.norm() < 1e6) {
            return None;
        }
        if da.norm() + db.norm() < 1e-13 * (1.0 + a.norm() + b.norm()) {
            break;
        }
    }
    Some((a, b))
}

fn starts() -> Vec<C> {
    let mut v = vec![C::new(0.0, 0.0)];
    for r in [0.25, 0.6, 1.2, 2.5, 5.0, 10.0] {
        for k in 0..8 {
            v.push(C::from_polar(
                r,
                std::f64::consts::PI * (k as f64 + 0.25) / 4.0,
            ));
        }
    }
    v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Kind {
    Real,
    Solitary,
    Complex,
}

pub fn classify(a: C, b: C) -> Kind {
    let tol = 1e-7;
    if a.im.abs() < tol && b.im.abs() < tol {
        Kind::Real
    } else if (a - b.conj()).norm() < 1e-6 {
        Kind::Solitary
    } else {
        Kind::Complex
    }
}

/// Distinct double points of the forms as unordered parameter pairs.
pub fn oracle(forms: &[Vec<f64>]) -> Vec<(C, C)> {
    let live: Vec<&Vec<f64>> = forms
        .iter()
        .filter(|p| p.iter().any(|&c| c != 0.0))
        .collect();
    let (p0, p1, p2) = (live[0], live[1], live[2]);
    let f = |a: C, b: C| [divided(p0, p1, a, b), divided(p0, p2, a, b)];
    let g = starts();
    let mut found: Vec<(C, C)> = vec![];
    for (i, &a0) in g.iter().enumerate() {
        for &b0 in &g[i + 1..] {
            let Some((a, b)) = newton(f, a0, b0) else {
                continue;
            };
            if (a - b).norm() < 1e-5 {
                continue;
            }
            if wedge(&unit(forms, a), &unit(forms, b)) > 1e-8 {
                continue;
            }
            let same = |p: &(C, C)| {
                ((p.0 - a).norm() < 1e-6 && (p.1 - b).norm() < 1e-6)
                    || ((p.0 - b).norm() < 1e-6 && (p.1 - a).norm() < 1e-6)
            };
            if !found.iter().any(same) {
                found.push((a, b));
            }
        }
    }
    found
}

pub fn chart_forms(c: &RationalCurve) -> Vec<Vec<f64>> {
    c.polys().iter().map(chart_coeffs).collect()
}

pub fn x(z: (C, C)) -> C {
    z.0 / z.1
}

/// Three families: plane curves, space curves, and plane curves embedded in
/// a random plane of RP3.
pub fn curve(i: usize, rng: &mut rand_chacha::ChaCha8Rng) -> RationalCurve {
    let d = 1 + i % 5;
    loop {
        let c = random_slice(rng, d, 4);
        let mut f = c.polys().to_vec();
        match (i / 5) % 3 {
            0 => f[4] = HomPoly::zero(d),
            1 => {}
            _ => {
                let (a, b) = (rng.random_range(-2..=2), rng.random_range(-2..=2));
                f[4] = &f[1].scale(&qknot::Scalar::int(a)) + &f[2].scale(&qknot::Scalar::int(b));
            }
        }
        if let Ok(c) = RationalCurve::new(Ambient::Rp3Slice, f) {
            if c.degree() == d && qknot::singular::is_knot(&c).is_ok_and(|k| !k.non_injective) {
                return c;
            }
        }
    }
}

/// Check `double_points` of one curve against the oracle; returns the
/// number of double points (cusps excluded) and of cusps.
pub fn compare(c: &RationalCurve) -> Result<(usize, usize), String> {
    let forms = chart_forms(c);
    let found = oracle(&forms);
    let nodes = double_points(c).map_err(|e| e.to_string())?;
    // cusps are not double points of the parametrization; check them directly
    let dforms: Vec<Vec<f64>> = forms
        .iter()
        .map(|p| (1..p.len()).map(|k| k as f64 * p[k]).collect())
        .collect();
    let mut cusps = 0;
    for n in nodes.iter().filter(|n| n.kind == NodeKind::Cusp) {
        let z = x(n.branches[0]);
        if wedge(&unit(&forms, z), &unit(&dforms, z)) > 1e-8 {
            return Err(format!("false cusp at {z}"));
        }
        cusps += 1;
    }
    let nodes: Vec<_> = nodes
        .into_iter()
        .filter(|n| n.kind != NodeKind::Cusp)
        .collect();
    if nodes.len() != found.len() {
        return Err(format!(
            "{} double points, oracle {}: {found:?}",
            nodes.len(),
            found.len()
        ));
    }
    let mut want: Vec<Kind> = found.iter().map(|&(a, b)| classify(a, b)).collect();
    let mut got: Vec<Kind> = nodes
        .iter()
        .map(|n| match n.kind {
            NodeKind::NonSolitary => Kind::Real,
            NodeKind::Solitary => Kind::Solitary,
            _ => Kind::Complex,
        })
        .collect();
    want.sort();
    got.sort();
    if got != want {
        return Err(format!("kinds {got:?}, oracle {want:?}"));
    }
    for n in &nodes {
        let (a, b) = (x(n.branches[0]), x(n.branches[1]));
        let hit = found.iter().any(|&(p, q)| {
            ((p - a).norm() < 1e-5 && (q - b).norm() < 1e-5)
                || ((p - b).norm() < 1e-5 && (q - a).norm() < 1e-5)
        });
        if !hit {
            return Err(format!("node at params {a}, {b} not found by the oracle"));
        }
    }
    Ok((nodes.len(), cusps))
}

/// Compare on `n` random curves; returns how many had double points and the
/// number of cusps seen.
pub fn compare_random(seed: u64, n: usize) -> Result<(usize, usize), String> {
    let mut rng = super::rng(seed);
    let (mut nontrivial, mut cusps) = (0, 0);
    for i in 0..n {
        let c = curve(i, &mut rng);
        let (k, cu) =
            compare(&c).map_err(|e| format!("curve {i} of degree {}: {e}", c.degree()))?;
        nontrivial += usize::from(k > 0);
        cusps += cu;
    }
    Ok((nontrivial, cusps))
}
