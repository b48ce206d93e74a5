#![allow(dead_code)]

pub mod oracle;

use qknot::curve::{Ambient, RationalCurve};
use qknot::HomPoly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_form(rng: &mut ChaCha8Rng, d: usize, r: i64) -> HomPoly {
    let c: Vec<i64> = (0..=d).map(|_| rng.random_range(-r..=r)).collect();
    HomPoly::from_ints(&c)
}

/// Random slice curve `[0:q1:q2:q3:q4]` of exact degree `d`, retried until valid.
pub fn random_slice(rng: &mut ChaCha8Rng, d: usize, r: i64) -> RationalCurve {
    loop {
        let mut f = vec![HomPoly::zero(d)];
        f.extend((0..4).map(|_| random_form(rng, d, r)));
        if let Ok(c) = RationalCurve::new(Ambient::Rp3Slice, f) {
            if c.degree() == d {
                return c;
            }
        }
    }
}

/// Eval a form with `s^{d−k} t^k` coefficients at `[x:1]`.
pub fn chart_coeffs(f: &HomPoly) -> Vec<f64> {
    f.coeffs().iter().rev().map(|c| c.to_f64()).collect()
}
