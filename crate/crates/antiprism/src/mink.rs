//! Primitives of the projective ball model of hyperbolic 3-space: the
//! signature (-,-,-,+) inner product, point distance, planes from point
//! triples, and dihedral angles from plane poles.
//!
//! Points of the model are vectors `(x1, x2, x3, 1)` with spatial norm
//! below one. A plane is represented by its pole `N`: the plane is the set
//! of model points `V` with `product(V, N) = 0`, and `product(N, N) < 0`
//! exactly when the plane actually meets the ball.

use crate::error::{Error, Result};
use crate::numeric::{clamp_cosh_arg, clamp_to_unit};

/// Condition-number cutoff above which a point triple is reported as
/// degenerate instead of producing a meaningless pole.
const COND_LIMIT: f64 = 1e12;

/// A vector of the ambient signature (-,-,-,+) space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinkowskiVec {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    pub x4: f64,
}

impl MinkowskiVec {
    pub fn new(x1: f64, x2: f64, x3: f64, x4: f64) -> Self {
        Self { x1, x2, x3, x4 }
    }

    /// A point of the model: spatial coordinates with `x4 = 1`.
    pub fn point(x1: f64, x2: f64, x3: f64) -> Self {
        Self { x1, x2, x3, x4: 1.0 }
    }

    /// `product(self, self)`; positive for points inside the model ball,
    /// negative for poles of planes meeting it.
    pub fn self_product(&self) -> f64 {
        product(self, self)
    }
}

impl std::ops::Neg for MinkowskiVec {
    type Output = MinkowskiVec;

    fn neg(self) -> MinkowskiVec {
        MinkowskiVec::new(-self.x1, -self.x2, -self.x3, -self.x4)
    }
}

/// The bilinear form `-x1 y1 - x2 y2 - x3 y3 + x4 y4`.
pub fn product(u: &MinkowskiVec, v: &MinkowskiVec) -> f64 {
    -u.x1 * v.x1 - u.x2 * v.x2 - u.x3 * v.x3 + u.x4 * v.x4
}

/// Distance between two points of the model ball.
///
/// Computed from `cosh d = product(v, w) / sqrt(product(v, v) product(w, w))`.
/// The cosh argument is clamped onto `[1, inf)` only within the crate-wide
/// slack; larger violations indicate corrupt inputs and are errors.
pub fn distance(v: &MinkowskiVec, w: &MinkowskiVec) -> Result<f64> {
    let vv = product(v, v);
    if vv <= 0.0 {
        return Err(Error::PointOutsideModel { self_product: vv });
    }
    let ww = product(w, w);
    if ww <= 0.0 {
        return Err(Error::PointOutsideModel { self_product: ww });
    }
    let raw = product(v, w) / (vv * ww).sqrt();
    let arg = clamp_cosh_arg(raw).ok_or(Error::NumericalBreakdown {
        context: "distance cosh argument",
        value: raw,
    })?;
    Ok(arg.acosh())
}

/// A plane of the model, stored by its pole.
///
/// Poles produced by [`plane_through`] are normalized to `x4 = 1`; poles
/// supplied directly may have any scaling and orientation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Plane {
    pole: MinkowskiVec,
}

impl Plane {
    /// Wraps a pole, requiring `product(pole, pole) < 0` so that the plane
    /// meets the model ball.
    pub fn from_pole(pole: MinkowskiVec) -> Result<Self> {
        let s = pole.self_product();
        if s >= 0.0 {
            return Err(Error::NotAPlane { self_product: s });
        }
        Ok(Self { pole })
    }

    pub fn pole(&self) -> MinkowskiVec {
        self.pole
    }

    /// The same plane with reversed orientation.
    pub fn flipped(&self) -> Plane {
        Plane { pole: -self.pole }
    }

    /// Orients the pole so that `product(pole, interior) > 0`, which for a
    /// face plane of a convex solid containing `interior` means the pole
    /// points outward. A reference point exactly on the plane leaves the
    /// orientation unchanged.
    pub fn oriented_outward(&self, interior: &MinkowskiVec) -> Plane {
        if product(&self.pole, interior) < 0.0 {
            self.flipped()
        } else {
            *self
        }
    }

    /// Signed evaluation of the plane equation at `v`; zero (to rounding)
    /// for points on the plane.
    pub fn eval(&self, v: &MinkowskiVec) -> f64 {
        product(&self.pole, v)
    }
}

fn det3(m: &[[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Adjugate (transposed cofactor matrix), so that `inv = adj / det`.
fn adjugate(m: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
    [
        [
            m[1][1] * m[2][2] - m[1][2] * m[2][1],
            m[0][2] * m[2][1] - m[0][1] * m[2][2],
            m[0][1] * m[1][2] - m[0][2] * m[1][1],
        ],
        [
            m[1][2] * m[2][0] - m[1][0] * m[2][2],
            m[0][0] * m[2][2] - m[0][2] * m[2][0],
            m[0][2] * m[1][0] - m[0][0] * m[1][2],
        ],
        [
            m[1][0] * m[2][1] - m[1][1] * m[2][0],
            m[0][1] * m[2][0] - m[0][0] * m[2][1],
            m[0][0] * m[1][1] - m[0][1] * m[1][0],
        ],
    ]
}

fn inf_norm(m: &[[f64; 3]; 3]) -> f64 {
    m.iter()
        .map(|row| row.iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// The plane through three points of the model ball.
///
/// The spatial pole component solves the linear system that puts all three
/// points on the plane; the result is normalized to `x4 = 1`. Triples that
/// are (near-)collinear, or whose plane passes through the model origin
/// (pole at infinity), make the system singular and are rejected.
pub fn plane_through(v1: &MinkowskiVec, v2: &MinkowskiVec, v3: &MinkowskiVec) -> Result<Plane> {
    for v in [v1, v2, v3] {
        if v.x4 != 1.0 {
            return Err(Error::OutOfDomain {
                context: "plane_through expects model points with x4 = 1",
                value: v.x4,
            });
        }
        let s = v.self_product();
        if s <= 0.0 {
            return Err(Error::PointOutsideModel { self_product: s });
        }
    }
    let m = [
        [v1.x1, v1.x2, v1.x3],
        [v2.x1, v2.x2, v2.x3],
        [v3.x1, v3.x2, v3.x3],
    ];
    let det = det3(&m);
    let adj = adjugate(&m);
    let cond = if det == 0.0 {
        f64::INFINITY
    } else {
        inf_norm(&m) * inf_norm(&adj) / det.abs()
    };
    if !cond.is_finite() || cond > COND_LIMIT {
        return Err(Error::DegenerateTriple { cond });
    }
    // Right-hand side is (1, 1, 1), so each solution component is a row sum
    // of the adjugate divided by the determinant.
    let n = [
        (adj[0][0] + adj[0][1] + adj[0][2]) / det,
        (adj[1][0] + adj[1][1] + adj[1][2]) / det,
        (adj[2][0] + adj[2][1] + adj[2][2]) / det,
    ];
    let pole = MinkowskiVec::new(n[0], n[1], n[2], 1.0);
    debug_assert!(pole.self_product() < 0.0);
    Ok(Plane { pole })
}

/// Interior dihedral angle between two planes, in `(0, pi)`.
///
/// Both poles must be oriented outward by the caller (for faces of a convex
/// solid: positive product with an interior point, which holds for poles in
/// `(n, 1)` form as produced by [`plane_through`]). Then
/// `cos angle = product(N, M) / sqrt(product(N, N) product(M, M))`.
pub fn dihedral_angle(p: &Plane, q: &Plane) -> Result<f64> {
    let pp = p.pole.self_product();
    if pp >= 0.0 {
        return Err(Error::NotAPlane { self_product: pp });
    }
    let qq = q.pole.self_product();
    if qq >= 0.0 {
        return Err(Error::NotAPlane { self_product: qq });
    }
    let raw = product(&p.pole, &q.pole) / (pp * qq).sqrt();
    let cos = clamp_to_unit(raw).ok_or(Error::NumericalBreakdown {
        context: "dihedral angle cosine",
        value: raw,
    })?;
    Ok(cos.acos())
}
