//! The Euclidean antiprism: existence, embedding parameters, vertex
//! coordinates, dihedral angles and volume in closed form, plus an
//! independent volume route through tetrahedral decomposition evaluated by
//! determinants on the actual coordinates.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numeric::clamp_to_unit;
use crate::{AntiprismSpec, DihedralAngles, EmbeddingParams};

/// Existence verdict for a Euclidean antiprism.
///
/// `margin` is `4 c^2 cos^2(pi/2n) - a^2`; the solid exists exactly when it
/// is positive, and `margin = 0` is the degeneration into a planar `2n`-gon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExistenceReport {
    pub exists: bool,
    pub margin: f64,
}

/// Existence test. Total: never fails, reports the signed margin.
pub fn exists(spec: AntiprismSpec) -> ExistenceReport {
    let margin = existence_margin(spec);
    ExistenceReport { exists: margin > 0.0, margin }
}

fn existence_margin(spec: AntiprismSpec) -> f64 {
    let ch = (PI / (2.0 * spec.n() as f64)).cos();
    4.0 * spec.c() * spec.c() * ch * ch - spec.a() * spec.a()
}

/// Embedding parameters `(r, h)` of the symmetric realization.
pub fn params(spec: AntiprismSpec) -> Result<EmbeddingParams> {
    let margin = existence_margin(spec);
    if margin <= 0.0 {
        return Err(Error::NotRealizable { margin });
    }
    let nf = spec.n() as f64;
    let sp = (PI / nf).sin();
    let ch = (PI / (2.0 * nf)).cos();
    let r2 = spec.a() * spec.a() / (4.0 * sp * sp);
    // h^2 = c^2 - a^2 / (4 cos^2(pi/2n)), written over the common
    // denominator so its sign agrees exactly with the margin.
    let h2 = margin / (4.0 * ch * ch);
    Ok(EmbeddingParams { r: r2.sqrt(), h: h2.sqrt() })
}

/// The mirror-rotational generator: rotation by `pi/n` about the vertical
/// axis composed with reflection in the horizontal mid-plane. Applying it to
/// vertex `i` of [`vertices`] yields vertex `i + 1 (mod 2n)`.
pub fn symmetry_matrix(n: u32) -> [[f64; 3]; 3] {
    let (s, c) = (PI / n as f64).sin_cos();
    [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, -1.0]]
}

/// The `2n` vertices. Even indices lie on the top polygon at height `h/2`,
/// odd indices on the bottom at `-h/2`; vertex `i` sits at azimuth `i pi/n`.
pub fn vertices(spec: AntiprismSpec) -> Result<Vec<[f64; 3]>> {
    let EmbeddingParams { r, h } = params(spec)?;
    let nf = spec.n() as f64;
    Ok((0..2 * spec.n())
        .map(|i| {
            let (s, c) = (i as f64 * PI / nf).sin_cos();
            let z = if i % 2 == 0 { 0.5 * h } else { -0.5 * h };
            [r * c, r * s, z]
        })
        .collect())
}

/// Dihedral angles from the closed forms in the edge lengths.
pub fn angles(spec: AntiprismSpec) -> Result<DihedralAngles> {
    let margin = existence_margin(spec);
    if margin <= 0.0 {
        return Err(Error::NotRealizable { margin });
    }
    let nf = spec.n() as f64;
    let (a, c) = (spec.a(), spec.c());
    let lat2 = 4.0 * c * c - a * a; // > 0 inside the existence region
    let cos_a = -a * (PI / (2.0 * nf)).tan() / lat2.sqrt();
    let cos_c = (a * a - 4.0 * c * c * (PI / nf).cos()) / lat2;
    Ok(DihedralAngles {
        along_a: checked_acos(cos_a, "euclidean angle along a")?,
        along_c: checked_acos(cos_c, "euclidean angle along c")?,
    })
}

pub(crate) fn checked_acos(raw: f64, context: &'static str) -> Result<f64> {
    let cos = clamp_to_unit(raw).ok_or(Error::NumericalBreakdown { context, value: raw })?;
    Ok(cos.acos())
}

/// Dihedral angles recomputed from outward face normals on the actual
/// vertex coordinates; independent of the closed forms in [`angles`].
pub fn angles_from_normals(spec: AntiprismSpec) -> Result<DihedralAngles> {
    let verts = vertices(spec)?;
    let body_centroid = centroid(&verts);

    let normal = |i: usize, j: usize, k: usize| -> [f64; 3] {
        let raw = cross(sub(verts[j], verts[i]), sub(verts[k], verts[i]));
        let face_centroid = scale(add(add(verts[i], verts[j]), verts[k]), 1.0 / 3.0);
        let outward = dot(raw, sub(face_centroid, body_centroid)) >= 0.0;
        normalize(if outward { raw } else { scale(raw, -1.0) })
    };

    let lateral = normal(0, 1, 2);
    let top = if spec.n() >= 3 {
        normal(0, 2, 4)
    } else {
        // For n = 2 the polygon degenerates to a segment but its carrier
        // plane survives; span it with the two edge endpoints and a bottom
        // vertex reflected to the top height. The face-to-face angle at an
        // a-edge is then 2 * along_a - pi (both neighbours are lateral
        // triangles and the carrier plane bisects their wedge).
        let reflected = [verts[1][0], verts[1][1], -verts[1][2]];
        let raw = cross(sub(verts[2], verts[0]), sub(reflected, verts[0]));
        let face_centroid = scale(add(add(verts[0], verts[2]), reflected), 1.0 / 3.0);
        let outward = dot(raw, sub(face_centroid, body_centroid)) >= 0.0;
        normalize(if outward { raw } else { scale(raw, -1.0) })
    };
    let next_lateral = normal(1, 2, 3);

    Ok(DihedralAngles {
        along_a: checked_acos(-dot(lateral, top), "euclidean normal angle along a")?,
        along_c: checked_acos(-dot(lateral, next_lateral), "euclidean normal angle along c")?,
    })
}

/// Volume in closed form; zero exactly on the degeneration boundary, which
/// is reported as not realizable.
pub fn volume(spec: AntiprismSpec) -> Result<f64> {
    let margin = existence_margin(spec);
    if margin < 0.0 {
        return Err(Error::NotRealizable { margin });
    }
    let nf = spec.n() as f64;
    let p = (PI / nf).cos();
    let factor = nf * spec.a() * spec.a() * (2.0 * p + 1.0)
        / (24.0 * (PI / nf).sin() * (PI / (2.0 * nf)).cos());
    Ok(factor * margin.sqrt())
}

/// Volume by decomposition, evaluated entirely from vertex coordinates.
///
/// One wedge (a 1/n sector of the solid) splits into three tetrahedra whose
/// volumes are taken as signed determinants; the total is `n` wedges. A
/// second, combinatorially different route fans every face from the body
/// centroid; the two must agree, making this routine an oracle for
/// [`volume`] that bypasses the closed form entirely.
pub fn volume_from_decomposition(spec: AntiprismSpec) -> Result<f64> {
    let verts = vertices(spec)?;
    let n = spec.n() as usize;

    let top_centroid = centroid_of(&verts, (0..2 * n).step_by(2));
    let bottom_centroid = centroid_of(&verts, (1..2 * n).step_by(2));

    let wedge = tet_volume(top_centroid, bottom_centroid, verts[1], verts[3 % (2 * n)])
        + tet_volume(top_centroid, verts[0], verts[1], verts[2])
        + tet_volume(top_centroid, verts[2], verts[1], verts[3 % (2 * n)]);
    let decomposed = n as f64 * wedge;

    let fanned = centroid_fan_volume(&verts, n);
    let scale = decomposed.abs().max(fanned.abs()).max(f64::MIN_POSITIVE);
    if (decomposed - fanned).abs() > 1e-11 * scale {
        return Err(Error::InternalInvariantViolation(
            "wedge decomposition and centroid fan disagree on the volume",
        ));
    }
    Ok(decomposed)
}

/// Sum of face-fan tetrahedra from the body centroid over the two polygon
/// faces and the `2n` lateral triangles.
fn centroid_fan_volume(verts: &[[f64; 3]], n: usize) -> f64 {
    let g = centroid(verts);
    let mut faces: Vec<Vec<usize>> = vec![
        (0..2 * n).step_by(2).collect(),
        (1..2 * n).step_by(2).collect(),
    ];
    for i in 0..2 * n {
        faces.push(vec![i, (i + 1) % (2 * n), (i + 2) % (2 * n)]);
    }

    let mut total = 0.0;
    for face in &faces {
        // Fan a planar convex face from its first vertex; the signed pieces
        // share one sign, so the face contributes the absolute fan sum.
        let mut signed = 0.0;
        for k in 1..face.len().saturating_sub(1) {
            signed += signed_tet_volume(g, verts[face[0]], verts[face[k]], verts[face[k + 1]]);
        }
        total += signed.abs();
    }
    total
}

/// Edge lengths `(a, c)` measured from a vertex list as produced by
/// [`vertices`]: `a` between consecutive top vertices, `c` across the first
/// lateral edge.
pub fn measured_edge_lengths(verts: &[[f64; 3]]) -> (f64, f64) {
    (norm(sub(verts[2 % verts.len()], verts[0])), norm(sub(verts[1], verts[0])))
}

pub(crate) fn sub(u: [f64; 3], v: [f64; 3]) -> [f64; 3] {
    [u[0] - v[0], u[1] - v[1], u[2] - v[2]]
}

pub(crate) fn add(u: [f64; 3], v: [f64; 3]) -> [f64; 3] {
    [u[0] + v[0], u[1] + v[1], u[2] + v[2]]
}

pub(crate) fn scale(u: [f64; 3], s: f64) -> [f64; 3] {
    [u[0] * s, u[1] * s, u[2] * s]
}

pub(crate) fn dot(u: [f64; 3], v: [f64; 3]) -> f64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

pub(crate) fn cross(u: [f64; 3], v: [f64; 3]) -> [f64; 3] {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

pub(crate) fn norm(u: [f64; 3]) -> f64 {
    dot(u, u).sqrt()
}

fn normalize(u: [f64; 3]) -> [f64; 3] {
    scale(u, 1.0 / norm(u))
}

fn signed_tet_volume(p: [f64; 3], q: [f64; 3], r: [f64; 3], s: [f64; 3]) -> f64 {
    dot(sub(q, p), cross(sub(r, p), sub(s, p))) / 6.0
}

fn tet_volume(p: [f64; 3], q: [f64; 3], r: [f64; 3], s: [f64; 3]) -> f64 {
    signed_tet_volume(p, q, r, s).abs()
}

fn centroid(verts: &[[f64; 3]]) -> [f64; 3] {
    centroid_of(verts, 0..verts.len())
}

fn centroid_of(verts: &[[f64; 3]], idx: impl Iterator<Item = usize>) -> [f64; 3] {
    let mut sum = [0.0; 3];
    let mut count = 0usize;
    for i in idx {
        sum = add(sum, verts[i]);
        count += 1;
    }
    scale(sum, 1.0 / count as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: u32, a: f64, c: f64) -> AntiprismSpec {
        AntiprismSpec::new(n, a, c).unwrap()
    }

    #[test]
    fn params_square_antiprism() {
        // n = 4, a = 1: circumradius of the unit square is 1/sqrt(2).
        let p = params(spec(4, 1.0, 1.0)).unwrap();
        assert!((p.r - 1.0 / 2.0_f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn params_octahedron_height() {
        let p = params(spec(3, 1.0, 1.0)).unwrap();
        assert!((p.h * p.h - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn params_digon_tetrahedron() {
        let p = params(spec(2, 1.0, 1.0)).unwrap();
        assert!((p.r * p.r - 0.25).abs() < 1e-15);
        assert!((p.h * p.h - 0.5).abs() < 1e-15);
    }

    #[test]
    fn existence_margins() {
        let rep = exists(spec(3, 1.0, 1.0));
        assert!(rep.exists);
        assert!((rep.margin - 2.0).abs() < 1e-14);

        // Boundary: a = sqrt(3) c collapses the n = 3 antiprism flat.
        let rep = exists(spec(3, 3.0_f64.sqrt(), 1.0));
        assert!(rep.margin.abs() < 1e-14);

        let rep = exists(spec(3, 2.0, 1.0));
        assert!(!rep.exists && rep.margin < 0.0);
        assert!(matches!(params(spec(3, 2.0, 1.0)), Err(Error::NotRealizable { .. })));
    }

    #[test]
    fn existence_margin_matches_half_angle_route() {
        // cos^2(pi/12) recomputed through the half-angle identity.
        let s = spec(6, 1.0, 0.52);
        let rep = exists(s);
        let half_angle = (1.0 + (std::f64::consts::PI / 6.0).cos()) / 2.0;
        let margin = 4.0 * 0.52 * 0.52 * half_angle - 1.0;
        assert!(rep.exists);
        assert!((rep.margin - margin).abs() < 1e-15);
        assert!(rep.margin < 0.01, "margin should be small: {}", rep.margin);
    }

    #[test]
    fn first_vertex_and_orbit_closure() {
        for n in 2..=8u32 {
            let s = spec(n, 1.0, 1.0);
            let p = params(s).unwrap();
            let verts = vertices(s).unwrap();
            assert_eq!(verts.len(), 2 * n as usize);
            assert!((verts[0][0] - p.r).abs() < 1e-15);
            assert!(verts[0][1].abs() < 1e-15);
            assert!((verts[0][2] - 0.5 * p.h).abs() < 1e-15);

            let m = symmetry_matrix(n);
            let apply = |v: [f64; 3]| -> [f64; 3] {
                [
                    m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
                    m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
                    m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
                ]
            };
            for i in 0..2 * n as usize {
                let mapped = apply(verts[i]);
                let next = verts[(i + 1) % (2 * n as usize)];
                for k in 0..3 {
                    assert!((mapped[k] - next[k]).abs() < 1e-12, "n={n} i={i}");
                }
            }
        }
    }

    #[test]
    fn measured_edges_round_trip() {
        let s = spec(3, 1.0, 1.0);
        let verts = vertices(s).unwrap();
        let (a, c) = measured_edge_lengths(&verts);
        assert!((a - 1.0).abs() < 1e-14);
        assert!((c - 1.0).abs() < 1e-14);
    }

    #[test]
    fn octahedron_angles() {
        let ang = angles(spec(3, 1.0, 1.0)).unwrap();
        let expect = (-1.0_f64 / 3.0).acos();
        assert!((ang.along_a - expect).abs() < 1e-14);
        assert!((ang.along_c - expect).abs() < 1e-14);
    }

    #[test]
    fn n3_angle_specialization() {
        // cos C = (a^2 - 2 c^2) / (4 c^2 - a^2) at n = 3; at (1, 2) this is -7/15.
        let ang = angles(spec(3, 1.0, 2.0)).unwrap();
        assert!((ang.along_c.cos() + 7.0 / 15.0).abs() < 1e-14);
    }

    #[test]
    fn angle_along_a_always_obtuse() {
        for n in 2..=8u32 {
            for &(a, c) in &[(1.0, 1.0), (0.3, 0.9), (1.0, 5.0), (2.0, 1.3)] {
                let s = spec(n, a, c);
                if !exists(s).exists {
                    continue;
                }
                let ang = angles(s).unwrap();
                assert!(ang.along_a > std::f64::consts::FRAC_PI_2, "n={n} a={a} c={c}");
            }
        }
    }

    #[test]
    fn angles_match_coordinate_normals() {
        for n in 2..=8u32 {
            let s = spec(n, 1.0, 1.0);
            let closed = angles(s).unwrap();
            let oracle = angles_from_normals(s).unwrap();
            assert!((closed.along_a - oracle.along_a).abs() < 1e-12, "n={n}");
            assert!((closed.along_c - oracle.along_c).abs() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn digon_face_to_face_angle_is_twice_along_a_minus_pi() {
        // At n = 2 both faces at an a-edge are lateral triangles; the
        // reported angle is measured to the degenerate polygon's carrier
        // plane, which bisects the wedge.
        let s = spec(2, 0.6, 0.5);
        let verts = vertices(s).unwrap();
        let g = centroid(&verts);
        let outward = |i: usize, j: usize, k: usize| {
            let raw = cross(sub(verts[j], verts[i]), sub(verts[k], verts[i]));
            let fc = scale(add(add(verts[i], verts[j]), verts[k]), 1.0 / 3.0);
            normalize(if dot(raw, sub(fc, g)) >= 0.0 { raw } else { scale(raw, -1.0) })
        };
        let face_to_face = (-dot(outward(0, 1, 2), outward(2, 3, 0))).acos();
        let ang = angles(s).unwrap();
        assert!((face_to_face - (2.0 * ang.along_a - std::f64::consts::PI)).abs() < 1e-12);
    }

    #[test]
    fn octahedron_volume_closed_form() {
        let v = volume(spec(3, 1.0, 1.0)).unwrap();
        assert!((v - 0.471_404_520_791_031_7).abs() < 1e-15);
        assert!((v - 2.0_f64.sqrt() / 3.0).abs() < 1e-15);
    }

    #[test]
    fn n3_volume_specialization() {
        for &(a, c) in &[(1.0, 1.0), (0.5, 1.7), (2.0, 3.0)] {
            let general = volume(spec(3, a, c)).unwrap();
            let reduced = a * a / 3.0 * (3.0 * c * c - a * a).sqrt();
            assert!((general - reduced).abs() <= 1e-13 * reduced);
        }
    }

    #[test]
    fn volume_agrees_with_decomposition() {
        for n in 2..=8u32 {
            let s = spec(n, 1.0, 1.0);
            let closed = volume(s).unwrap();
            let oracle = volume_from_decomposition(s).unwrap();
            assert!((closed - oracle).abs() <= 1e-12 * closed, "n={n}: {closed} vs {oracle}");
        }
    }

    #[test]
    fn digon_volume_is_the_tetrahedron_volume() {
        // Independent reference: 2 r^2 h / 3 with r = 1/2, h = sqrt(1/2).
        let v = volume(spec(2, 1.0, 1.0)).unwrap();
        assert!((v - 0.117_851_130_197_757_92).abs() < 1e-15);
        let oracle = volume_from_decomposition(spec(2, 1.0, 1.0)).unwrap();
        assert!((v - oracle).abs() < 1e-15);
    }

    #[test]
    fn degenerate_boundary_reports_zero_volume_but_not_realizable() {
        // Exactly at margin = 0 the volume formula returns 0 while params
        // refuse (h = 0 is not a solid).
        let s = spec(3, 3.0_f64.sqrt(), 1.0);
        let rep = exists(s);
        if rep.margin == 0.0 {
            assert_eq!(volume(s).unwrap(), 0.0);
        }
        assert!(matches!(params(spec(3, 1.0, 0.5)), Err(Error::NotRealizable { .. })));
        assert!(matches!(volume(spec(3, 1.0, 0.5)), Err(Error::NotRealizable { .. })));
        assert!(matches!(vertices(spec(3, 1.0, 0.5)), Err(Error::NotRealizable { .. })));
        assert!(matches!(angles(spec(3, 1.0, 0.5)), Err(Error::NotRealizable { .. })));
    }
}
