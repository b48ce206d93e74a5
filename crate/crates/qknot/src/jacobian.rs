//! The differential of the quadric constraint on coefficient space.
//!
//! A curve `[p0:…:p4]` of degree `d` lies on the quadric iff the form
//! `q = −p0² + p1² + p2² + p3² − p4²` of degree `2d` vanishes, i.e. iff `q`
//! vanishes at `2d + 1` distinct parameters. Differentiating `q(τ_i)` with
//! respect to the coefficient `l` of `p_k` gives `±2·p_k(τ_i)·τ_i^l`, with the
//! minus sign for `k = 0, 4`. Full rank `2d + 1` makes the knots of degree `d`
//! a manifold of dimension `5(d+1) − (2d+1) = 3d + 4` in coefficient space,
//! `3(d+1)` after projectivizing.
//!
//! Forms are evaluated at `[1 : τ]`, so coefficient `l` multiplies `τ^l`.

use serde::Serialize;

use crate::curve::RationalCurve;
use crate::error::{Error, Result};
use crate::exact::linalg::{det, rank};
use crate::exact::{HomPoly, Scalar};

/// The constraint differential sampled at distinct parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct DfMatrix {
    pub degree: usize,
    pub params: Vec<Scalar>,
    pub rows: Vec<Vec<Scalar>>,
}

impl DfMatrix {
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }
}

fn check_distinct(params: &[Scalar]) -> Result<()> {
    for (i, a) in params.iter().enumerate() {
        if params[..i].contains(a) {
            return Err(Error::Invalid(format!("duplicate sample parameter {a}")));
        }
    }
    Ok(())
}

fn powers(x: &Scalar, n: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::one()];
    for i in 1..n {
        let next = &out[i - 1] * x;
        out.push(next);
    }
    out
}

/// `−d, …, d`: the default `2d + 1` sample parameters.
pub fn default_params(d: usize) -> Vec<Scalar> {
    let d = d as i64;
    (-d..=d).map(Scalar::int).collect()
}

/// Build the `(2d+1) × 5(d+1)` differential at the given parameters.
pub fn build_df(c: &RationalCurve, params: &[Scalar]) -> Result<DfMatrix> {
    let d = c.degree();
    if c.polys().len() != 5 {
        return Err(Error::Invalid(
            "the differential needs a curve in RP4".into(),
        ));
    }
    if params.len() != 2 * d + 1 {
        return Err(Error::Invalid(format!(
            "degree {d} needs {} sample parameters, got {}",
            2 * d + 1,
            params.len()
        )));
    }
    check_distinct(params)?;
    let one = Scalar::one();
    let rows = params
        .iter()
        .map(|tau| {
            let pw = powers(tau, d + 1);
            let mut row = Vec::with_capacity(5 * (d + 1));
            for (k, p) in c.polys().iter().enumerate() {
                let sign = if k == 0 || k == 4 { -2 } else { 2 };
                let v = &p.eval(&one, tau) * &Scalar::int(sign);
                row.extend(pw.iter().map(|x| &v * x));
            }
            row
        })
        .collect();
    Ok(DfMatrix {
        degree: d,
        params: params.to_vec(),
        rows,
    })
}

/// Exact rank over Q(√2).
pub fn rank_exact(m: &DfMatrix) -> usize {
    rank(&m.rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub degree: usize,
    pub rank: usize,
    pub expected: usize,
    /// Dimension of the solution set in coefficient space at this curve.
    pub coefficient_dimension: usize,
    pub projective_dimension: usize,
    /// First pair of coordinate forms without a common root, if any.
    pub coprime_pair: Option<(usize, usize)>,
    /// Rank is deficient and no coprime pair is available to explain why.
    pub inconclusive: bool,
}

impl RankReport {
    pub fn full_rank(&self) -> bool {
        self.rank == self.expected
    }
}

fn coprime_pair(c: &RationalCurve) -> Option<(usize, usize)> {
    let p = c.polys();
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i].is_zero() || p[j].is_zero() {
                continue;
            }
            if p[i].resultant(&p[j]).is_ok_and(|r| !r.is_zero()) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Rank of the differential at the default parameters, with dimension bookkeeping.
pub fn rank_report(c: &RationalCurve) -> Result<RankReport> {
    let d = c.degree();
    let m = build_df(c, &default_params(d))?;
    let r = rank_exact(&m);
    let n = 5 * (d + 1);
    let pair = coprime_pair(c);
    Ok(RankReport {
        degree: d,
        rank: r,
        expected: 2 * d + 1,
        coefficient_dimension: n - r,
        projective_dimension: n - r - 1,
        coprime_pair: pair,
        inconclusive: r < 2 * d + 1 && pair.is_none(),
    })
}

/// Determinant of the evaluation matrix of `t^i·p0 (i < d)` and `t^i·p1 (i ≤ d)`.
///
/// For coprime `p0, p1` of degree `d` these `2d + 1` polynomials span all
/// polynomials of degree `≤ 2d`, so the determinant is nonzero. The forms are
/// read in the chart `s = 1`, where `p1` must keep its full degree: if it
/// vanishes at `[0:1]` the family only reaches degree `2d − 1`.
pub fn lemma12_witness(p0: &HomPoly, p1: &HomPoly, params: &[Scalar]) -> Result<Scalar> {
    let d = p0.degree();
    if p1.degree() != d {
        return Err(Error::Invalid(
            "both forms must have the same degree".into(),
        ));
    }
    if p0.resultant(p1)?.is_zero() {
        return Err(Error::Invalid("the forms share a root".into()));
    }
    if p1.coeff(d).is_zero() {
        return Err(Error::Invalid("the second form vanishes at [0:1]".into()));
    }
    if params.len() != 2 * d + 1 {
        return Err(Error::Invalid(format!(
            "degree {d} needs {} sample parameters, got {}",
            2 * d + 1,
            params.len()
        )));
    }
    check_distinct(params)?;
    let one = Scalar::one();
    let m = params
        .iter()
        .map(|tau| {
            let pw = powers(tau, d + 1);
            let a = p0.eval(&one, tau);
            let b = p1.eval(&one, tau);
            pw[..d]
                .iter()
                .map(|x| &a * x)
                .chain(pw.iter().map(|x| &b * x))
                .collect()
        })
        .collect();
    Ok(det(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::Ambient;

    fn line() -> RationalCurve {
        RationalCurve::from_ints(Ambient::Rp4, &[&[1, 0], &[0, 0], &[1, 0], &[0, 1], &[0, 1]])
            .unwrap()
    }

    #[test]
    fn line_shape_and_rank() {
        let m = build_df(&line(), &[Scalar::int(0), Scalar::int(1), Scalar::int(2)]).unwrap();
        assert_eq!((m.nrows(), m.ncols()), (3, 10));
        // row τ = 1: p0 = 1 gives −2, −2 in the first two columns
        assert_eq!(m.rows[1][0], Scalar::int(-2));
        assert_eq!(m.rows[1][1], Scalar::int(-2));
        assert_eq!(rank_exact(&m), 3);
        let r = rank_report(&line()).unwrap();
        assert_eq!((r.coefficient_dimension, r.projective_dimension), (7, 6));
    }

    #[test]
    fn duplicates_rejected() {
        let p = [Scalar::int(0), Scalar::int(1), Scalar::int(1)];
        assert!(build_df(&line(), &p).is_err());
        assert!(lemma12_witness(&HomPoly::s(), &HomPoly::t(), &p).is_err());
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let m = DfMatrix {
            degree: 1,
            params: vec![],
            rows: vec![vec![Scalar::zero(); 10]; 3],
        };
        assert_eq!(rank_exact(&m), 0);
    }

    #[test]
    fn witness_for_coordinate_forms() {
        let p = [Scalar::int(0), Scalar::int(1), Scalar::int(2)];
        // the family is 1, τ, τ²: a Vandermonde determinant
        assert_eq!(
            lemma12_witness(&HomPoly::s(), &HomPoly::t(), &p).unwrap(),
            Scalar::int(2)
        );
        assert!(lemma12_witness(&HomPoly::s(), &HomPoly::s(), &p).is_err());
        // coprime, but at s = 1 the family is τ, 1, τ
        assert!(lemma12_witness(&HomPoly::t(), &HomPoly::s(), &p).is_err());
    }
}
