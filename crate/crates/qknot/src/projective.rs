//! Projective points and transforms, and the signature-(3,2) form.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::linalg::{det, inverse, matmul, rank, transpose};
use crate::exact::Scalar;

/// Diagonal of the form `⟨x,y⟩ = −x0y0 + x1y1 + x2y2 + x3y3 − x4y4`.
pub const J: [i64; 5] = [-1, 1, 1, 1, -1];

/// The base point `[1:1:0:0:0]` every projection is taken from.
pub fn base_point() -> ProjPoint {
    ProjPoint::from_ints(&[1, 1, 0, 0, 0])
}

/// Point of projective space, normalized so the first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: Vec<Scalar>,
}

impl ProjPoint {
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        let Some(lead) = coords.iter().find(|x| !x.is_zero()).cloned() else {
            return Err(Error::Invalid("all coordinates are zero".into()));
        };
        let inv = lead.inv();
        Ok(ProjPoint {
            coords: coords.iter().map(|x| x * &inv).collect(),
        })
    }

    pub fn from_ints(c: &[i64]) -> Self {
        ProjPoint::new(c.iter().map(|&x| Scalar::int(x)).collect()).expect("nonzero point")
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords.iter().map(Scalar::to_f64).collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(|x| x.to_string()).collect()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_strings().join(":"))
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `⟨x,y⟩` on 5-vectors.
pub fn form(x: &[Scalar], y: &[Scalar]) -> Scalar {
    (0..5)
        .filter(|&i| !x[i].is_zero() && !y[i].is_zero())
        .map(|i| {
            let p = &x[i] * &y[i];
            if J[i] < 0 {
                -p
            } else {
                p
            }
        })
        .sum()
}

/// `−x0² + x1² + x2² + x3² − x4²`.
pub fn q32_eval(p: &ProjPoint) -> Scalar {
    form(p.coords(), p.coords())
}

pub fn on_quadric(p: &ProjPoint) -> bool {
    p.dim() == 4 && q32_eval(p).is_zero()
}

/// Invertible 5×5 matrix acting on column vectors, with cached inverse.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjTransform {
    m: Vec<Vec<Scalar>>,
    inv: Vec<Vec<Scalar>>,
    o32_certified: bool,
}

impl ProjTransform {
    pub fn new(m: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = m.len();
        if n == 0 || m.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("transform must be square".into()));
        }
        let inv = inverse(&m).ok_or_else(|| Error::Invalid("singular transform".into()))?;
        let mut t = ProjTransform {
            m,
            inv,
            o32_certified: false,
        };
        t.o32_certified = n == 5 && is_o32_matrix(&t.m);
        Ok(t)
    }

    pub fn identity() -> Self {
        ProjTransform::new(crate::exact::linalg::identity(5)).unwrap()
    }

    pub fn matrix(&self) -> &[Vec<Scalar>] {
        &self.m
    }

    pub fn inverse_matrix(&self) -> &[Vec<Scalar>] {
        &self.inv
    }

    pub fn inverse(&self) -> ProjTransform {
        ProjTransform {
            m: self.inv.clone(),
            inv: self.m.clone(),
            o32_certified: self.o32_certified,
        }
    }

    pub fn is_o32_certified(&self) -> bool {
        self.o32_certified
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &ProjTransform) -> ProjTransform {
        let m = matmul(&self.m, &other.m);
        let inv = matmul(&other.inv, &self.inv);
        let cert = self.m.len() == 5 && is_o32_matrix(&m);
        ProjTransform {
            m,
            inv,
            o32_certified: cert,
        }
    }

    pub fn apply_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.m
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        ProjPoint::new(self.apply_vec(p.coords())).expect("invertible map keeps points nonzero")
    }

    pub fn determinant(&self) -> Scalar {
        det(self.m.clone())
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.m
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect()
    }
}

impl fmt::Debug for ProjTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjTransform{:?}", self.to_strings())
    }
}

/// Serialized transform: 5×5 row-major scalar text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformJson {
    pub schema: u32,
    pub matrix: Vec<Vec<String>>,
}

fn jdiag(i: usize) -> Scalar {
    Scalar::int(J[i])
}

fn is_o32_matrix(m: &[Vec<Scalar>]) -> bool {
    // MᵀJM = λJ
    let n = 5;
    let jm: Vec<Vec<Scalar>> = (0..n)
        .map(|i| m[i].iter().map(|x| x * &jdiag(i)).collect())
        .collect();
    let g = matmul(&transpose(m), &jm);
    let lambda = &g[1][1];
    if lambda.is_zero() {
        return false;
    }
    (0..n).all(|i| {
        (0..n).all(|j| {
            if i == j {
                g[i][j] == lambda * &jdiag(i)
            } else {
                g[i][j].is_zero()
            }
        })
    })
}

/// Whether `MᵀJM = λJ` for some nonzero `λ`.
pub fn is_o32(t: &ProjTransform) -> bool {
    t.m.len() == 5 && is_o32_matrix(&t.m)
}

fn unit(k: usize) -> Vec<Scalar> {
    (0..5)
        .map(|i| {
            if i == k {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
        .collect()
}

fn axpy(a: &Scalar, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(xi, yi)| &(a * xi) + yi).collect()
}

fn sub(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn add(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

/// Matrix of the reflection `x ↦ x − 2⟨x,v⟩/⟨v,v⟩·v` (needs `⟨v,v⟩ ≠ 0`).
fn reflection(v: &[Scalar]) -> Vec<Vec<Scalar>> {
    let n = form(v, v);
    assert!(!n.is_zero(), "reflection in an isotropic vector");
    let k = &Scalar::int(-2) / &n;
    let cols: Vec<Vec<Scalar>> = (0..5)
        .map(|j| {
            let e = unit(j);
            axpy(&(&k * &form(&e, v)), v, &e)
        })
        .collect();
    transpose(&cols)
}

/// An isometry sending `x` to `y`, fixing everything orthogonal to both.
///
/// Needs `⟨x,x⟩ = ⟨y,y⟩ ≠ 0`.
fn isometry_moving(x: &[Scalar], y: &[Scalar]) -> Vec<Vec<Scalar>> {
    if x == y {
        return crate::exact::linalg::identity(5);
    }
    let d = sub(x, y);
    if !form(&d, &d).is_zero() {
        return reflection(&d);
    }
    // x ↦ −y through the sum, then flip y back
    matmul(&reflection(y), &reflection(&add(x, y)))
}

/// An O(3,2) transform `T` with `T(p) = [1:1:0:0:0]`.
///
/// Builds `A` with `A·e0 = a`, `A·e1 = p − a` where `⟨a,a⟩ = −1`, `⟨a,p⟩ = −1`,
/// as a product of two reflections, then returns `T = A⁻¹ = J·Aᵀ·J`.
pub fn move_to_base(p: &ProjPoint) -> Result<ProjTransform> {
    if p.dim() != 4 {
        return Err(Error::Invalid("expected a point of RP4".into()));
    }
    if !q32_eval(p).is_zero() {
        return Err(Error::NotOnQuadric);
    }
    let p = p.coords().to_vec();
    let k = (0..5)
        .find(|&k| !form(&unit(k), &p).is_zero())
        .expect("a nonzero point pairs nontrivially with some basis vector");
    let ek = unit(k);
    let y: Vec<Scalar> = {
        let c = -(form(&ek, &p).inv());
        ek.iter().map(|x| x * &c).collect()
    };
    let mu = &(&form(&y, &y) + &Scalar::one()) / &Scalar::int(2);
    let a = axpy(&mu, &p, &y);
    let b = sub(&p, &a);
    let s1 = isometry_moving(&unit(0), &a);
    let f: Vec<Scalar> = (0..5).map(|i| s1[i][1].clone()).collect();
    let s2 = isometry_moving(&f, &b);
    let am = matmul(&s2, &s1);
    let t: Vec<Vec<Scalar>> = (0..5)
        .map(|i| {
            (0..5)
                .map(|j| &(&am[j][i] * &jdiag(i)) * &jdiag(j))
                .collect()
        })
        .collect();
    let t = ProjTransform {
        inv: am,
        o32_certified: is_o32_matrix(&t),
        m: t,
    };
    debug_assert!(t.o32_certified);
    Ok(t)
}

/// Type of the conic cut on the quadric by a projective plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlaneConic {
    /// Signature (2,1): a real nonsingular conic.
    Nonsingular21,
    /// Definite form: a conic with no real points.
    NonsingularEmpty,
    SingularPairOfLines,
    SingularPoint,
    SingularDoubleLine,
}

/// Inertia `(positive, negative, zero)` of a symmetric matrix by congruence.
pub fn inertia(g: &[Vec<Scalar>]) -> (usize, usize, usize) {
    let n = g.len();
    let mut a: Vec<Vec<Scalar>> = g.to_vec();
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let piv = active.iter().copied().find(|&i| !a[i][i].is_zero());
        let piv = match piv {
            Some(i) => i,
            None => {
                // all diagonals zero: fold a coupled index into another
                let pair = active
                    .iter()
                    .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !a[i][j].is_zero());
                let Some((i, j)) = pair else { break };
                for k in 0..n {
                    let v = &a[i][k] + &a[j][k];
                    a[i][k] = v;
                }
                for k in 0..n {
                    let v = &a[k][i] + &a[k][j];
                    a[k][i] = v;
                }
                i
            }
        };
        let d = a[piv][piv].clone();
        if d.signum() > 0 {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&i| i != piv);
        for &i in &active {
            let f = &a[i][piv] / &d;
            for &j in &active {
                let v = &a[i][j] - &(&f * &a[piv][j]);
                a[i][j] = v;
            }
        }
        for &i in &active {
            a[i][piv] = Scalar::zero();
            a[piv][i] = Scalar::zero();
        }
    }
    (pos, neg, n - pos - neg)
}

/// Classify the conic cut on the quadric by the plane spanned by three points.
pub fn plane_conic_signature(pts: [&ProjPoint; 3]) -> Result<PlaneConic> {
    if pts.iter().any(|p| p.dim() != 4) {
        return Err(Error::Invalid("expected points of RP4".into()));
    }
    let rows: Vec<Vec<Scalar>> = pts.iter().map(|p| p.coords().to_vec()).collect();
    if rank(&rows) < 3 {
        return Err(Error::Invalid("spanning points are dependent".into()));
    }
    let g: Vec<Vec<Scalar>> = (0..3)
        .map(|i| (0..3).map(|j| form(&rows[i], &rows[j])).collect())
        .collect();
    let (p, n, _) = inertia(&g);
    Ok(match (p + n, p.min(n)) {
        (3, 1) => PlaneConic::Nonsingular21,
        (3, _) => PlaneConic::NonsingularEmpty,
        (2, 1) => PlaneConic::SingularPairOfLines,
        (2, _) => PlaneConic::SingularPoint,
        _ => PlaneConic::SingularDoubleLine,
    })
}
