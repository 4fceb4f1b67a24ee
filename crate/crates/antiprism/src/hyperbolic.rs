//! The compact hyperbolic antiprism in the projective ball model:
//! existence condition, embedding parameters, vertex coordinates, dihedral
//! angles in closed form, a coordinate-level angle oracle, and the angle
//! derivatives that feed the volume integrand.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::euclidean::checked_acos;
use crate::mink::{self, MinkowskiVec, Plane};
use crate::numeric::{acosh1p, cosh_minus_one};
use crate::volume::Integrand;
use crate::{AntiprismSpec, DihedralAngles, EmbeddingParams};

/// Existence verdict for a compact hyperbolic antiprism.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExistenceReport {
    /// True exactly when `margin < 0`, equivalently `c > c0`.
    pub exists: bool,
    /// `1 + cosh a - 2 cosh c - 2 (cosh c - 1) cos(pi/n)`; negative inside
    /// the existence region, zero on the flattening boundary.
    pub margin: f64,
    /// Threshold lateral edge length: the solid flattens into a planar
    /// `2n`-gon as `c` decreases to `c0`.
    pub c0: f64,
}

/// Signed existence margin, evaluated in the cancellation-free arrangement
/// `(cosh a - 1) - 2 (cosh c - 1)(1 + cos(pi/n))`.
pub(crate) fn existence_margin(spec: AntiprismSpec) -> f64 {
    let p = (PI / spec.n() as f64).cos();
    cosh_minus_one(spec.a()) - 2.0 * cosh_minus_one(spec.c()) * (1.0 + p)
}

/// Threshold lateral edge length `c0` for the given polygon order and
/// polygon edge length: the solid exists exactly for `c > c0`.
pub fn threshold_length(n: u32, a: f64) -> f64 {
    let p = (PI / n as f64).cos();
    acosh1p(cosh_minus_one(a) / (2.0 * (1.0 + p)))
}

/// Existence test. Fails only when an edge length exceeds the supported cap.
pub fn exists(spec: AntiprismSpec) -> Result<ExistenceReport> {
    spec.check_edge_cap()?;
    let margin = existence_margin(spec);
    Ok(ExistenceReport {
        exists: margin < 0.0,
        margin,
        c0: threshold_length(spec.n(), spec.a()),
    })
}

fn require_exists(spec: AntiprismSpec) -> Result<()> {
    spec.check_edge_cap()?;
    let margin = existence_margin(spec);
    if margin >= 0.0 {
        return Err(Error::NotRealizable { margin });
    }
    Ok(())
}

/// Embedding parameters `(r, h)` of the symmetric realization inside the
/// model ball.
pub fn params(spec: AntiprismSpec) -> Result<EmbeddingParams> {
    require_exists(spec)?;
    let nf = spec.n() as f64;
    let p = (PI / nf).cos();
    let margin = existence_margin(spec);
    let cm1_a = cosh_minus_one(spec.a());
    let cm1_c = cosh_minus_one(spec.c());
    // 1 + cosh a + 2 cosh c - 2 (1 + cosh c) cos(pi/n), as a sum of
    // nonnegative terms.
    let d = cm1_a + 2.0 * cm1_c * (1.0 - p) + 4.0 * (1.0 - p);
    let cos_half = (PI / (2.0 * nf)).cos();
    let tan_half = (PI / (2.0 * nf)).tan();
    let r2 = cm1_a / (d * cos_half * cos_half);
    let h2 = -4.0 * margin * tan_half * tan_half / d;
    let ball_gap = 1.0 - r2 - 0.25 * h2;
    if ball_gap.is_nan() || ball_gap <= 0.0 {
        return Err(Error::InternalInvariantViolation(
            "embedding parameters leave the model ball",
        ));
    }
    Ok(EmbeddingParams { r: r2.sqrt(), h: h2.sqrt() })
}

/// The mirror-rotational generator extended to the ambient space: rotation
/// by `pi/n` in the `x1 x2` plane, reflection in `x3`, identity in `x4`.
pub fn symmetry_matrix(n: u32) -> [[f64; 4]; 4] {
    let (s, c) = (PI / n as f64).sin_cos();
    [
        [c, -s, 0.0, 0.0],
        [s, c, 0.0, 0.0],
        [0.0, 0.0, -1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ]
}

/// The `2n` vertices as model points (`x4 = 1`). Even indices form the top
/// polygon at height `h/2`, odd indices the bottom at `-h/2`; vertex `i`
/// sits at azimuth `i pi/n`. All vertices lie strictly inside the ball.
pub fn vertices(spec: AntiprismSpec) -> Result<Vec<MinkowskiVec>> {
    let EmbeddingParams { r, h } = params(spec)?;
    let nf = spec.n() as f64;
    Ok((0..2 * spec.n())
        .map(|i| {
            let (s, c) = (i as f64 * PI / nf).sin_cos();
            let z = if i % 2 == 0 { 0.5 * h } else { -0.5 * h };
            MinkowskiVec::point(r * c, r * s, z)
        })
        .collect())
}

/// Forward edge-length formulas: `(cosh a, cosh c)` recovered from the
/// embedding parameters. Inverse of [`params`]; used for round-trip
/// verification.
pub fn edge_coshes(n: u32, params: &EmbeddingParams) -> (f64, f64) {
    let nf = n as f64;
    let (p, q) = ((PI / nf).cos(), (2.0 * PI / nf).cos());
    let r2 = params.r * params.r;
    let h2 = params.h * params.h;
    let denom = 4.0 - h2 - 4.0 * r2;
    (
        (4.0 - h2 - 4.0 * r2 * q) / denom,
        (4.0 + h2 - 4.0 * r2 * p) / denom,
    )
}

/// Dihedral angles from the closed forms in the edge lengths.
///
/// `along_a` is measured between a lateral face and the polygon carrier
/// plane. For `n >= 3` that plane is the polygon face, so this is the
/// ordinary dihedral angle; for `n = 2` the polygon is a segment shared by
/// two lateral faces and the face-to-face angle is `2 * along_a - pi` (the
/// carrier plane bisects the wedge). The volume differential uses
/// `along_a` with multiplicity `2n` in both cases.
pub fn angles(spec: AntiprismSpec) -> Result<DihedralAngles> {
    require_exists(spec)?;
    let nf = spec.n() as f64;
    let (p, q) = ((PI / nf).cos(), (2.0 * PI / nf).cos());
    let cc = spec.c().cosh();
    let cm1_a = cosh_minus_one(spec.a());
    let cm1_c = cosh_minus_one(spec.c());
    // 2 cosh^2 c - 1 - cosh a, positive throughout the existence region.
    let pos_den = 2.0 * cm1_c * (cc + 1.0) - cm1_a;
    if pos_den <= 0.0 {
        return Err(Error::InternalInvariantViolation(
            "angle denominator lost its sign inside the existence region",
        ));
    }
    // 1 + cosh a - 2 cosh c cos(pi/n)
    let num_a_inner = cm1_a + 2.0 * (1.0 - p) - 2.0 * p * cm1_c;
    let cos_a = -cm1_a.sqrt() * num_a_inner / (2.0 * pos_den * (cm1_a + (1.0 - q))).sqrt();
    // cosh c - cosh a cosh c + 2 (cosh^2 c - 1) cos(pi/n)
    let num_c = -cc * cm1_a + 2.0 * cm1_c * (cc + 1.0) * p;
    let cos_c = -num_c / pos_den;
    Ok(DihedralAngles {
        along_a: checked_acos(cos_a, "hyperbolic angle along a")?,
        along_c: checked_acos(cos_c, "hyperbolic angle along c")?,
    })
}

/// Dihedral angles recomputed from planes through actual vertex
/// coordinates, with outward orientation fixed by a sign test against the
/// model origin (interior for every valid embedding). Independent of the
/// closed forms in [`angles`].
pub fn angles_from_planes(spec: AntiprismSpec) -> Result<DihedralAngles> {
    let verts = vertices(spec)?;
    let origin = MinkowskiVec::point(0.0, 0.0, 0.0);
    let face = |i: usize, j: usize, k: usize| -> Result<Plane> {
        Ok(mink::plane_through(&verts[i], &verts[j], &verts[k])?.oriented_outward(&origin))
    };

    let lateral = face(0, 1, 2)?;
    let next_lateral = face(1, 2, 3)?;
    // The angle along the a-edge {0, 2} is against the top polygon plane.
    // For n = 2 the polygon degenerates to a segment but its carrier plane
    // survives: span it with the edge endpoints and a bottom vertex
    // reflected to the top height. The face-to-face angle there is
    // 2 * along_a - pi; the carrier plane bisects the wedge.
    let top = if spec.n() >= 3 {
        face(0, 2, 4)?
    } else {
        let reflected = MinkowskiVec::point(verts[1].x1, verts[1].x2, -verts[1].x3);
        mink::plane_through(&verts[0], &verts[2], &reflected)?.oriented_outward(&origin)
    };

    Ok(DihedralAngles {
        along_a: mink::dihedral_angle(&lateral, &top)?,
        along_c: mink::dihedral_angle(&lateral, &next_lateral)?,
    })
}

/// Derivatives `(dA/dc, dC/dc)` of the dihedral angles with respect to the
/// lateral edge length, in closed form. Both diverge like
/// `(c - c0)^(-1/2)` on the flattening boundary, where the radicand has its
/// simple zero.
pub fn angle_derivatives(spec: AntiprismSpec) -> Result<(f64, f64)> {
    require_exists(spec)?;
    let integrand = Integrand::new(spec.n(), spec.a())?;
    let c = spec.c();
    let radicand = integrand.radicand(c);
    if radicand <= 0.0 {
        return Err(Error::SingularRadicand { t: c, value: radicand });
    }
    // Shared denominator, negative inside the existence region.
    let den = -integrand.denominator(c) * radicand.sqrt();
    Ok((integrand.coeff_g(c) / den, integrand.coeff_h(c) / den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: u32, a: f64, c: f64) -> AntiprismSpec {
        AntiprismSpec::new(n, a, c).unwrap()
    }

    // Independent values (high-precision quadrature/arithmetic, 40 digits).
    const C0_3_1: f64 = 0.592_982_856_159_016_8;
    const R_3_1_1: f64 = 0.484_386_709_380_094_78;
    const H_3_1_1: f64 = 0.685_026_253_838_604_9;
    const COS_3_1_1: f64 = -0.244_728_471_054_797_65;

    #[test]
    fn threshold_matches_bisection_oracle() {
        // Root of the margin in c, located independently by bisection.
        let margin_at = |c: f64| existence_margin(spec(3, 1.0, c));
        let (mut lo, mut hi) = (0.1_f64, 2.0_f64);
        assert!(margin_at(lo) > 0.0 && margin_at(hi) < 0.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if margin_at(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let c0 = exists(spec(3, 1.0, 1.0)).unwrap().c0;
        assert!((c0 - 0.5 * (lo + hi)).abs() < 1e-12);
        assert!((c0 - C0_3_1).abs() < 1e-15);
    }

    #[test]
    fn existence_flips_across_threshold() {
        let c0 = threshold_length(3, 1.0);
        assert!(!exists(spec(3, 1.0, c0 - 1e-9)).unwrap().exists);
        assert!(exists(spec(3, 1.0, c0 + 1e-9)).unwrap().exists);
        let boundary = exists(spec(3, 1.0, c0)).unwrap();
        assert!(boundary.margin.abs() < 1e-12);
        assert!(matches!(params(spec(3, 1.0, c0 - 1e-9)), Err(Error::NotRealizable { .. })));
    }

    #[test]
    fn octahedron_condition_reduction() {
        // At n = 3 the margin reduces to 2 + cosh a - 3 cosh c.
        for &(a, c) in &[(1.0, 1.0), (0.5, 2.0), (2.0, 1.5)] {
            let m = existence_margin(spec(3, a, c));
            let reduced = 2.0 + a.cosh() - 3.0 * c.cosh();
            assert!((m - reduced).abs() < 1e-12 * m.abs().max(1.0), "a={a} c={c}");
        }
    }

    #[test]
    fn edge_cap_propagates() {
        assert!(matches!(exists(spec(3, 26.0, 1.0)), Err(Error::EdgeTooLong { .. })));
        assert!(matches!(params(spec(3, 1.0, 30.0)), Err(Error::EdgeTooLong { .. })));
    }

    #[test]
    fn params_octahedron_frozen() {
        let p = params(spec(3, 1.0, 1.0)).unwrap();
        assert!((p.r - R_3_1_1).abs() < 1e-15, "r = {}", p.r);
        assert!((p.h - H_3_1_1).abs() < 1e-15, "h = {}", p.h);
        assert!(p.r * p.r + 0.25 * p.h * p.h < 1.0);
    }

    #[test]
    fn params_limits() {
        // a -> 0 at fixed c: the orbit radius collapses.
        let p = params(spec(3, 1e-6, 1.0)).unwrap();
        assert!(p.r < 1e-5, "r = {}", p.r);
        // c -> c0 from above: the height collapses.
        let c0 = threshold_length(3, 1.0);
        let p = params(spec(3, 1.0, c0 + 1e-10)).unwrap();
        assert!(p.h < 1e-4, "h = {}", p.h);
    }

    #[test]
    fn forward_edge_formulas_round_trip() {
        for n in 2..=8u32 {
            for &(a, c_off) in &[(0.3, 0.5), (1.0, 0.2), (2.5, 1.0)] {
                let c = threshold_length(n, a) + c_off;
                let s = spec(n, a, c);
                let p = params(s).unwrap();
                let (cosh_a, cosh_c) = edge_coshes(n, &p);
                assert!(
                    (cosh_a - a.cosh()).abs() <= 1e-12 * a.cosh(),
                    "n={n} a={a}: {cosh_a} vs {}",
                    a.cosh()
                );
                assert!(
                    (cosh_c - c.cosh()).abs() <= 1e-12 * c.cosh(),
                    "n={n} c={c}: {cosh_c} vs {}",
                    c.cosh()
                );
            }
        }
    }

    #[test]
    fn vertices_inside_ball_with_exact_edge_lengths() {
        for n in 2..=8u32 {
            let s = spec(n, 0.9, 1.4);
            let verts = vertices(s).unwrap();
            let p = params(s).unwrap();
            assert!((verts[0].x1 - p.r).abs() < 1e-15);
            assert!(verts[0].x2.abs() < 1e-15);
            assert!((verts[0].x3 - 0.5 * p.h).abs() < 1e-15);
            let expect = 1.0 - p.r * p.r - 0.25 * p.h * p.h;
            for v in &verts {
                assert!((v.self_product() - expect).abs() < 1e-14);
                assert!(v.self_product() > 0.0);
            }
            // Distances reproduce the requested edge lengths.
            let a = mink::distance(&verts[0], &verts[2 % verts.len()]).unwrap();
            let c = mink::distance(&verts[0], &verts[1]).unwrap();
            assert!((a - 0.9).abs() < 1e-12, "n={n}: a = {a}");
            assert!((c - 1.4).abs() < 1e-12, "n={n}: c = {c}");
        }
    }

    #[test]
    fn orbit_closure_under_extended_symmetry() {
        for n in [2u32, 3, 5, 8] {
            let s = spec(n, 1.0, 1.3);
            let verts = vertices(s).unwrap();
            let m = symmetry_matrix(n);
            let apply = |v: &MinkowskiVec| -> [f64; 4] {
                let x = [v.x1, v.x2, v.x3, v.x4];
                let mut out = [0.0; 4];
                for (row, slot) in m.iter().zip(out.iter_mut()) {
                    *slot = row.iter().zip(x.iter()).map(|(a, b)| a * b).sum();
                }
                out
            };
            let count = verts.len();
            for i in 0..count {
                let mapped = apply(&verts[i]);
                let next = verts[(i + 1) % count];
                let target = [next.x1, next.x2, next.x3, next.x4];
                for k in 0..4 {
                    assert!((mapped[k] - target[k]).abs() < 1e-12, "n={n} i={i}");
                }
            }
        }
    }

    #[test]
    fn octahedron_angles_frozen_and_symmetric() {
        let ang = angles(spec(3, 1.0, 1.0)).unwrap();
        assert!((ang.along_a.cos() - COS_3_1_1).abs() < 1e-14);
        assert!((ang.along_c.cos() - COS_3_1_1).abs() < 1e-14);
        // a = c forces A = C by the regular-octahedron symmetry.
        assert!((ang.along_a - ang.along_c).abs() < 1e-12);
    }

    #[test]
    fn octahedron_closed_form_specialization() {
        // The n = 3 reductions of the general cosine formulas.
        for &(a, c) in &[(1.0, 1.0), (0.6, 1.1), (2.0, 1.8)] {
            let ang = angles(spec(3, a, c)).unwrap();
            let (ca, cc) = (a.cosh(), c.cosh());
            let cos_a = -(ca - 1.0).sqrt() * (1.0 + ca - cc)
                / ((2.0 * cc * cc - ca - 1.0) * (1.0 + 2.0 * ca)).sqrt();
            let cos_c = (1.0 - cc + ca * cc - cc * cc) / (2.0 * cc * cc - ca - 1.0);
            assert!((ang.along_a.cos() - cos_a).abs() < 1e-13, "a={a} c={c}");
            assert!((ang.along_c.cos() - cos_c).abs() < 1e-13, "a={a} c={c}");
        }
    }

    #[test]
    fn angles_match_plane_oracle() {
        for n in 2..=8u32 {
            for &(a, off) in &[(0.4, 0.3), (1.0, 1.0), (2.2, 0.1)] {
                let c = threshold_length(n, a) + off;
                let s = spec(n, a, c);
                let closed = angles(s).unwrap();
                let oracle = angles_from_planes(s).unwrap();
                assert!(
                    (closed.along_a - oracle.along_a).abs() < 1e-10,
                    "n={n} a={a} c={c}: {} vs {}",
                    closed.along_a,
                    oracle.along_a
                );
                assert!(
                    (closed.along_c - oracle.along_c).abs() < 1e-10,
                    "n={n} a={a} c={c}: {} vs {}",
                    closed.along_c,
                    oracle.along_c
                );
            }
        }
    }

    #[test]
    fn tall_thin_antiprism_has_acute_angle_along_a() {
        // cos A changes sign inside the existence region: the angle along
        // the polygon edges is not always obtuse (unlike the Euclidean
        // case). Frozen from 40-digit arithmetic.
        let s = spec(3, 0.1, 3.0);
        let ang = angles(s).unwrap();
        assert!((ang.along_a.cos() - 0.023_204_655_963_631_8).abs() < 1e-12);
        assert!(ang.along_a < std::f64::consts::FRAC_PI_2);
        let oracle = angles_from_planes(s).unwrap();
        assert!((ang.along_a - oracle.along_a).abs() < 1e-10);
        // Compactness still holds.
        assert!(ang.excess() > 0.0);
    }

    #[test]
    fn digon_face_to_face_angle_is_twice_along_a_minus_pi() {
        let s = spec(2, 0.7, 1.1);
        let verts = vertices(s).unwrap();
        let origin = MinkowskiVec::point(0.0, 0.0, 0.0);
        let lat1 = mink::plane_through(&verts[0], &verts[1], &verts[2])
            .unwrap()
            .oriented_outward(&origin);
        let lat2 = mink::plane_through(&verts[2], &verts[3], &verts[0])
            .unwrap()
            .oriented_outward(&origin);
        let face_to_face = mink::dihedral_angle(&lat1, &lat2).unwrap();
        let ang = angles(s).unwrap();
        assert!(
            (face_to_face - (2.0 * ang.along_a - PI)).abs() < 1e-12,
            "{face_to_face} vs {}",
            2.0 * ang.along_a - PI
        );
    }

    #[test]
    fn lateral_faces_dihedral_matches_closed_form() {
        // Direct plane construction across a c-edge reproduces the closed
        // form for the octahedral case a = c = 1.
        let verts = vertices(spec(3, 1.0, 1.0)).unwrap();
        let origin = MinkowskiVec::point(0.0, 0.0, 0.0);
        let p = mink::plane_through(&verts[0], &verts[1], &verts[2])
            .unwrap()
            .oriented_outward(&origin);
        let q = mink::plane_through(&verts[1], &verts[2], &verts[3])
            .unwrap()
            .oriented_outward(&origin);
        let theta = mink::dihedral_angle(&p, &q).unwrap();
        assert!((theta - COS_3_1_1.acos()).abs() < 1e-12);
    }

    #[test]
    fn face_poles_match_reference_expressions() {
        // Plane poles from the linear solver against their closed (r, h)
        // expressions for the top plane and the first two lateral faces.
        for n in [3u32, 4, 6] {
            let s = spec(n, 0.8, 1.1);
            let EmbeddingParams { r, h } = params(s).unwrap();
            let verts = vertices(s).unwrap();
            let nf = n as f64;
            let (p, q) = ((PI / nf).cos(), (2.0 * PI / nf).cos());
            let cos2_half = (PI / (2.0 * nf)).cos().powi(2);
            let tan_half = (PI / (2.0 * nf)).tan();

            let top = mink::plane_through(&verts[0], &verts[2], &verts[4]).unwrap().pole();
            for (got, want) in [
                (top.x1, 0.0),
                (top.x2, 0.0),
                (top.x3, 2.0 / h),
            ] {
                assert!((got - want).abs() < 1e-12 * want.abs().max(1.0), "n={n}");
            }

            let lat1 = mink::plane_through(&verts[0], &verts[1], &verts[2]).unwrap().pole();
            for (got, want) in [
                (lat1.x1, p / (r * cos2_half)),
                (lat1.x2, 2.0 * tan_half / r),
                (lat1.x3, 2.0 * tan_half * tan_half / h),
            ] {
                assert!((got - want).abs() < 1e-12 * want.abs().max(1.0), "n={n}");
            }

            let lat2 = mink::plane_through(&verts[1], &verts[2], &verts[3]).unwrap().pole();
            for (got, want) in [
                (lat2.x1, q / (r * cos2_half)),
                (lat2.x2, 4.0 * p * tan_half / r),
                (lat2.x3, -2.0 * tan_half * tan_half / h),
            ] {
                assert!((got - want).abs() < 1e-12 * want.abs().max(1.0), "n={n}");
            }
        }
    }

    #[test]
    fn raw_parameter_space_cosines_match() {
        // The dihedral cosines written directly in (r, h) before substituting
        // the edge-length expressions.
        for n in [2u32, 3, 5, 7] {
            for &(a, off) in &[(0.5, 0.4), (1.2, 1.5)] {
                let c = threshold_length(n, a) + off;
                let s = spec(n, a, c);
                let EmbeddingParams { r, h } = params(s).unwrap();
                let (r2, h2) = (r * r, h * h);
                let nf = n as f64;
                let t2 = (PI / (2.0 * nf)).tan().powi(2);
                let t4 = t2 * t2;
                let (p, q) = ((PI / nf).cos(), (2.0 * PI / nf).cos());

                let cos_a_raw = r * (h2 - 4.0 * t2)
                    / ((h2 - 4.0)
                        * (h2 * (r2 - 1.0) - 2.0 * h2 * t2 - (h2 + 4.0 * r2) * t4))
                        .sqrt();
                let cos_c_raw = (4.0 * (h2 * (r2 - 2.0) - 4.0 * r2) * p
                    + r2 * (4.0 + h2) * (3.0 + q))
                    / (8.0 * h2
                        - r2 * (4.0 * (4.0 + h2) * p + (h2 - 4.0) * (3.0 + q)));

                let ang = angles(s).unwrap();
                assert!((ang.along_a.cos() - cos_a_raw).abs() < 1e-12, "n={n} a={a}");
                assert!((ang.along_c.cos() - cos_c_raw).abs() < 1e-12, "n={n} a={a}");
            }
        }
    }

    #[test]
    fn excess_positive_and_vanishing_toward_threshold() {
        let c0 = threshold_length(4, 1.0);
        let mut last = f64::INFINITY;
        for k in 2..=5 {
            let c = c0 + 10f64.powi(-k);
            let ang = angles(spec(4, 1.0, c)).unwrap();
            let excess = ang.excess();
            assert!(excess > 0.0, "k={k}: excess = {excess}");
            assert!(excess < last, "k={k}: excess not decreasing");
            last = excess;
        }
    }

    #[test]
    fn angle_derivatives_match_central_differences() {
        for &(n, a, off) in &[(3u32, 1.0, 0.6), (4, 0.8, 0.4), (6, 1.5, 1.0), (2, 0.5, 0.8)] {
            let c = threshold_length(n, a) + off;
            let (da, dc) = angle_derivatives(spec(n, a, c)).unwrap();
            let delta = 1e-5;
            let plus = angles(spec(n, a, c + delta)).unwrap();
            let minus = angles(spec(n, a, c - delta)).unwrap();
            let da_fd = (plus.along_a - minus.along_a) / (2.0 * delta);
            let dc_fd = (plus.along_c - minus.along_c) / (2.0 * delta);
            assert!((da - da_fd).abs() < 1e-7, "n={n}: {da} vs {da_fd}");
            assert!((dc - dc_fd).abs() < 1e-7, "n={n}: {dc} vs {dc_fd}");
        }
    }

    #[test]
    fn angle_derivatives_blow_up_like_inverse_square_root() {
        // log |dA/dc| against log (c - c0) has slope -1/2 near the boundary.
        let c0 = threshold_length(3, 1.0);
        let mut points = Vec::new();
        for k in 3..=6 {
            let off = 10f64.powi(-k);
            let (da, _) = angle_derivatives(spec(3, 1.0, c0 + off)).unwrap();
            points.push((off.ln(), da.abs().ln()));
        }
        for pair in points.windows(2) {
            let slope = (pair[1].1 - pair[0].1) / (pair[1].0 - pair[0].0);
            assert!((slope + 0.5).abs() < 0.01, "slope = {slope}");
        }
    }
}
