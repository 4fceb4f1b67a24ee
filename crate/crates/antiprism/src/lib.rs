//! Existence, embedding coordinates, dihedral angles and volumes of compact
//! antiprisms with mirror-rotational symmetry, in hyperbolic space (curvature
//! -1, projective ball model) and in Euclidean space.
//!
//! An antiprism here is the convex polyhedron with two regular `n`-gonal
//! faces of edge length `a` joined by `2n` triangles with lateral edge
//! length `c`. The crate computes, from `(n, a, c)` alone:
//!
//! - whether the solid exists ([`hyperbolic::exists`], [`euclidean::exists`]),
//! - the embedding parameters and vertex coordinates,
//! - the two dihedral angles (closed forms plus coordinate-level oracles),
//! - the volume (closed form in the Euclidean case; an adaptive quadrature of
//!   an exact integral representation in the hyperbolic case).
//!
//! Every closed form is cross-validated by an independent route: dihedral
//! angles against plane/normal computations on actual vertex coordinates,
//! the Euclidean volume against a tetrahedral decomposition evaluated by
//! determinants, and the hyperbolic volume against differential (Schläfli)
//! identities and a reference integrator. The [`verify`] module packages
//! those cross-checks as runnable suites.
//!
//! All operations are pure functions on immutable values and can be called
//! concurrently without coordination.

pub mod error;
pub mod euclidean;
pub mod hyperbolic;
pub mod mink;
pub mod numeric;
pub mod quad;
pub mod verify;
pub mod volume;

pub use error::{Error, Result};
pub use quad::QuadratureResult;

/// Largest edge length accepted by the hyperbolic routines. Beyond this the
/// cancellation in existence margins and angle formulas would silently eat
/// the guaranteed tolerances, so longer edges are rejected up front.
pub const MAX_EDGE_LENGTH: f64 = 25.0;

/// Combinatorial and metric description of an antiprism: `n`-gonal top and
/// bottom faces with edge length `a`, lateral edges of length `c`.
///
/// Lengths are Euclidean units for the [`euclidean`] module and curvature
/// (-1) units for the [`hyperbolic`] one. `n = 2` is the degenerate case in
/// which the two "polygons" are skew edges and the solid is a tetrahedron.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AntiprismSpec {
    n: u32,
    a: f64,
    c: f64,
}

impl AntiprismSpec {
    /// Validates `n >= 2` and strictly positive, finite edge lengths.
    pub fn new(n: u32, a: f64, c: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSpec(format!("n must be at least 2, got {n}")));
        }
        if !(a.is_finite() && a > 0.0) {
            return Err(Error::InvalidSpec(format!("edge length a must be positive and finite, got {a}")));
        }
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::InvalidSpec(format!("edge length c must be positive and finite, got {c}")));
        }
        Ok(Self { n, a, c })
    }

    /// Number of vertices in each of the two polygonal faces.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Edge length of the top and bottom polygons.
    pub fn a(&self) -> f64 {
        self.a
    }

    /// Lateral edge length.
    pub fn c(&self) -> f64 {
        self.c
    }

    pub(crate) fn check_edge_cap(&self) -> Result<()> {
        for len in [self.a, self.c] {
            if len > MAX_EDGE_LENGTH {
                return Err(Error::EdgeTooLong { value: len, max: MAX_EDGE_LENGTH });
            }
        }
        Ok(())
    }
}

/// Model-space parameters of the symmetric embedding: `r` is the
/// circumradius of the top polygon, `h` the distance between the top and
/// bottom planes. `h = 0` marks degeneration into a planar `2n`-gon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmbeddingParams {
    pub r: f64,
    pub h: f64,
}

/// The two dihedral angles of the solid, in radians: `along_a` at the
/// polygon edges, `along_c` at the lateral edges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DihedralAngles {
    pub along_a: f64,
    pub along_c: f64,
}

impl DihedralAngles {
    /// Total angle excess `2A + 2C - 2pi`; positive exactly for compact
    /// hyperbolic instances and tending to zero on the degeneration
    /// boundary.
    pub fn excess(&self) -> f64 {
        2.0 * (self.along_a + self.along_c) - 2.0 * std::f64::consts::PI
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        assert!(AntiprismSpec::new(2, 1.0, 1.0).is_ok());
        assert!(matches!(AntiprismSpec::new(1, 1.0, 1.0), Err(Error::InvalidSpec(_))));
        assert!(matches!(AntiprismSpec::new(3, 0.0, 1.0), Err(Error::InvalidSpec(_))));
        assert!(matches!(AntiprismSpec::new(3, 1.0, -2.0), Err(Error::InvalidSpec(_))));
        assert!(matches!(AntiprismSpec::new(3, f64::NAN, 1.0), Err(Error::InvalidSpec(_))));
        assert!(matches!(AntiprismSpec::new(3, 1.0, f64::INFINITY), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn edge_cap_enforced_for_hyperbolic_entry_points() {
        let spec = AntiprismSpec::new(3, 26.0, 1.0).unwrap();
        assert!(matches!(spec.check_edge_cap(), Err(Error::EdgeTooLong { .. })));
        let spec = AntiprismSpec::new(3, 1.0, 26.0).unwrap();
        assert!(matches!(spec.check_edge_cap(), Err(Error::EdgeTooLong { .. })));
        let spec = AntiprismSpec::new(3, 25.0, 25.0).unwrap();
        assert!(spec.check_edge_cap().is_ok());
    }
}
