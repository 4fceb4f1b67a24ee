//! Runnable verification suites: every closed form in the crate checked
//! against an independent route, packaged so the command-line `verify`
//! subcommand (and the test suite) can execute them and report pass/fail
//! counts.

use std::f64::consts::PI;

use crate::error::Result;
use crate::hyperbolic::threshold_length;
use crate::quad::adaptive_gk15;
use crate::volume::{hyperbolic_volume, schlafli_check, Integrand};
use crate::{euclidean, hyperbolic, AntiprismSpec, DihedralAngles};

/// Outcome of one verification suite.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    /// Individual comparisons performed.
    pub checks: usize,
    /// Comparisons whose discrepancy exceeded the tolerance.
    pub failures: usize,
    /// Largest discrepancy observed.
    pub worst: f64,
    /// Tolerance the discrepancies are held to.
    pub tolerance: f64,
    /// Description of the first failure, when any.
    pub detail: String,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checks > 0
    }
}

struct Accumulator {
    report: CheckReport,
}

impl Accumulator {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Self {
            report: CheckReport { name, checks: 0, failures: 0, worst: 0.0, tolerance, detail: String::new() },
        }
    }

    fn record(&mut self, discrepancy: f64, label: impl FnOnce() -> String) {
        self.report.checks += 1;
        if discrepancy.is_nan() || discrepancy > self.report.worst {
            self.report.worst = discrepancy;
        }
        // A NaN discrepancy counts as a failure.
        if discrepancy.is_nan() || discrepancy > self.report.tolerance {
            self.report.failures += 1;
            if self.report.detail.is_empty() {
                self.report.detail = format!("{} (discrepancy {discrepancy:.3e})", label());
            }
        }
    }

    fn record_err(&mut self, err: &crate::Error, label: impl FnOnce() -> String) {
        self.report.checks += 1;
        self.report.failures += 1;
        self.report.worst = f64::INFINITY;
        if self.report.detail.is_empty() {
            self.report.detail = format!("{}: {err}", label());
        }
    }

    fn finish(self) -> CheckReport {
        self.report
    }
}

fn rel_diff(x: f64, y: f64) -> f64 {
    (x - y).abs() / x.abs().max(y.abs()).max(f64::MIN_POSITIVE)
}

/// Deterministic pseudo-random stream for sample-based checks.
struct SplitMix64(u64);

impl SplitMix64 {
    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    fn in_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}

fn spec(n: u32, a: f64, c: f64) -> AntiprismSpec {
    AntiprismSpec::new(n, a, c).expect("verification grids only use valid specs")
}

fn euclidean_grid(quick: bool) -> Vec<AntiprismSpec> {
    let (a_values, factors): (&[f64], &[f64]) = if quick {
        (&[0.6, 1.8], &[1.1, 2.2])
    } else {
        (&[0.4, 0.9, 1.5, 2.2, 3.0], &[1.05, 1.3, 1.8, 2.6, 4.0])
    };
    let mut grid = Vec::new();
    for n in 2..=8u32 {
        let half_cos = (PI / (2.0 * n as f64)).cos();
        for &a in a_values {
            for &factor in factors {
                grid.push(spec(n, a, factor * a / (2.0 * half_cos)));
            }
        }
    }
    grid
}

fn hyperbolic_grid(quick: bool) -> Vec<AntiprismSpec> {
    let (a_values, offsets): (&[f64], &[f64]) = if quick {
        (&[0.5, 1.5], &[0.1, 1.0])
    } else {
        (&[0.1, 0.35, 0.75, 1.2, 1.8, 2.4, 3.0], &[0.02, 0.1, 0.4, 1.0, 1.9, 3.0])
    };
    let mut grid = Vec::new();
    for n in 2..=8u32 {
        for &a in a_values {
            for &off in offsets {
                grid.push(spec(n, a, threshold_length(n, a) + off));
            }
        }
    }
    grid
}

/// Closed-form Euclidean volume against the coordinate-level decomposition.
pub fn check_euclidean_volume_oracle(quick: bool) -> CheckReport {
    let mut acc = Accumulator::new("euclidean-volume-oracle", 1e-12);
    for s in euclidean_grid(quick) {
        match (euclidean::volume(s), euclidean::volume_from_decomposition(s)) {
            (Ok(closed), Ok(decomposed)) => acc.record(rel_diff(closed, decomposed), || format!("{s:?}")),
            (Err(e), _) | (_, Err(e)) => acc.record_err(&e, || format!("{s:?}")),
        }
    }
    acc.finish()
}

/// Closed-form Euclidean dihedral angles against outward coordinate normals.
pub fn check_euclidean_angle_normals(quick: bool) -> CheckReport {
    let mut acc = Accumulator::new("euclidean-angle-normals", 1e-10);
    for s in euclidean_grid(quick) {
        match (euclidean::angles(s), euclidean::angles_from_normals(s)) {
            (Ok(closed), Ok(oracle)) => {
                acc.record((closed.along_a - oracle.along_a).abs(), || format!("{s:?} along a"));
                acc.record((closed.along_c - oracle.along_c).abs(), || format!("{s:?} along c"));
            }
            (Err(e), _) | (_, Err(e)) => acc.record_err(&e, || format!("{s:?}")),
        }
    }
    acc.finish()
}

/// The general-`n` Euclidean volume formula against its `n = 3` reduction.
pub fn check_euclidean_n3_reduction(quick: bool) -> CheckReport {
    let mut acc = Accumulator::new("euclidean-n3-reduction", 1e-13);
    let points: &[(f64, f64)] = if quick {
        &[(1.0, 1.0), (2.0, 1.6)]
    } else {
        &[(1.0, 1.0), (0.5, 0.6), (2.0, 1.6), (3.0, 2.4), (0.7, 2.0), (1.4, 0.9)]
    };
    for &(a, c) in points {
        let s = spec(3, a, c);
        if !euclidean::exists(s).exists {
            continue;
        }
        let reduced = a * a / 3.0 * (3.0 * c * c - a * a).sqrt();
        match euclidean::volume(s) {
            Ok(general) => acc.record(rel_diff(general, reduced), || format!("a={a} c={c}")),
            Err(e) => acc.record_err(&e, || format!("a={a} c={c}")),
        }
    }
    acc.finish()
}

/// A supplied angle computation against the coordinate-plane oracle.
///
/// Parameterized over the closed-form side so tests can verify the suite
/// actually catches wrong formulas.
pub fn check_hyperbolic_angles_against<F>(angles_fn: F, quick: bool) -> CheckReport
where
    F: Fn(AntiprismSpec) -> Result<DihedralAngles>,
{
    let mut acc = Accumulator::new("hyperbolic-angle-oracle", 1e-10);
    for s in hyperbolic_grid(quick) {
        match (angles_fn(s), hyperbolic::angles_from_planes(s)) {
            (Ok(closed), Ok(oracle)) => {
                acc.record((closed.along_a - oracle.along_a).abs(), || format!("{s:?} along a"));
                acc.record((closed.along_c - oracle.along_c).abs(), || format!("{s:?} along c"));
            }
            (Err(e), _) | (_, Err(e)) => acc.record_err(&e, || format!("{s:?}")),
        }
    }
    acc.finish()
}

/// Closed-form hyperbolic angles against the coordinate-plane oracle.
pub fn check_hyperbolic_angle_oracle(quick: bool) -> CheckReport {
    check_hyperbolic_angles_against(hyperbolic::angles, quick)
}

/// Edge lengths measured back from vertex coordinates, plus the forward
/// cosh formulas, against the requested `(a, c)`.
pub fn check_edge_length_round_trip(quick: bool) -> CheckReport {
    let mut acc = Accumulator::new("edge-length-round-trip", 1e-12);
    for s in hyperbolic_grid(quick) {
        let verts = match hyperbolic::vertices(s) {
            Ok(v) => v,
            Err(e) => {
                acc.record_err(&e, || format!("{s:?}"));
                continue;
            }
        };
        let a = crate::mink::distance(&verts[0], &verts[2 % verts.len()]).unwrap();
        let c = crate::mink::distance(&verts[0], &verts[1]).unwrap();
        acc.record(rel_diff(a, s.a()), || format!("{s:?} measured a"));
        acc.record(rel_diff(c, s.c()), || format!("{s:?} measured c"));

        let params = hyperbolic::params(s).unwrap();
        let (cosh_a, cosh_c) = hyperbolic::edge_coshes(s.n(), &params);
        acc.record(rel_diff(cosh_a, s.a().cosh()), || format!("{s:?} forward cosh a"));
        acc.record(rel_diff(cosh_c, s.c().cosh()), || format!("{s:?} forward cosh c"));
    }
    acc.finish()
}

/// Compactness: `2A + 2C > 2pi` on the grid, with the excess positive and
/// decreasing toward the flattening boundary.
pub fn check_angle_excess(quick: bool) -> CheckReport {
    let mut acc = Accumulator::new("angle-excess", 0.0);
    for s in hyperbolic_grid(quick) {
        match hyperbolic::angles(s) {
            // Non-positive excess counts as a failing discrepancy.
            Ok(ang) => acc.record(if ang.excess() > 0.0 { 0.0 } else { -ang.excess() }, || format!("{s:?}")),
            Err(e) => acc.record_err(&e, || format!("{s:?}")),
        }
    }
    for n in [3u32, 4] {
        let c0 = threshold_length(n, 1.0);
        let mut last = f64::INFINITY;
        for k in 2..=5 {
            let s = spec(n, 1.0, c0 + 10f64.powi(-k));
            let excess = hyperbolic::angles(s).unwrap().excess();
            let ok = excess > 0.0 && excess < last;
            acc.record(if ok { 0.0 } else { excess.abs().max(1.0) }, || {
                format!("n={n} k={k}: excess {excess} after {last}")
            });
            last = excess;
        }
    }
    acc.finish()
}

/// Closed-form angle derivatives against central differences.
pub fn check_angle_derivative_fd(quick: bool) -> CheckReport {
    let mut acc = Accumulator::new("angle-derivative-fd", 1e-7);
    let points: &[(u32, f64, f64)] = if quick {
        &[(3, 1.0, 0.6), (5, 0.8, 1.2)]
    } else {
        &[(2, 0.5, 0.8), (3, 1.0, 0.6), (4, 0.8, 0.4), (5, 1.6, 1.2), (6, 1.5, 1.0), (8, 2.5, 2.0)]
    };
    let delta = 1e-5;
    for &(n, a, off) in points {
        let c = threshold_length(n, a) + off;
        let s = spec(n, a, c);
        let (da, dc) = match hyperbolic::angle_derivatives(s) {
            Ok(d) => d,
            Err(e) => {
                acc.record_err(&e, || format!("{s:?}"));
                continue;
            }
        };
        let plus = hyperbolic::angles(spec(n, a, c + delta)).unwrap();
        let minus = hyperbolic::angles(spec(n, a, c - delta)).unwrap();
        acc.record((da - (plus.along_a - minus.along_a) / (2.0 * delta)).abs(), || format!("{s:?} dA/dc"));
        acc.record((dc - (plus.along_c - minus.along_c) / (2.0 * delta)).abs(), || format!("{s:?} dC/dc"));
    }
    acc.finish()
}

fn schlafli_points(quick: bool) -> Vec<AntiprismSpec> {
    let points: &[(u32, f64, f64)] = if quick {
        &[(3, 1.0, 0.6), (4, 0.8, 0.55)]
    } else {
        &[
            (2, 0.6, 0.7), (2, 1.4, 1.2), (3, 0.5, 0.5), (3, 1.0, 0.6), (3, 2.0, 1.5),
            (4, 0.8, 0.55), (4, 1.5, 1.0), (5, 0.7, 0.8), (5, 1.8, 2.0), (6, 1.0, 0.5),
            (6, 2.2, 1.4), (7, 0.9, 1.1), (7, 1.3, 0.7), (8, 0.6, 0.9), (8, 1.7, 1.8),
            (3, 2.8, 2.2), (4, 2.4, 0.8), (5, 2.9, 1.3), (6, 0.4, 2.0), (2, 2.5, 2.8),
        ]
    };
    points
        .iter()
        .map(|&(n, a, off)| spec(n, a, threshold_length(n, a) + off))
        .collect()
}

/// Finite-difference `dV/dc` against the closed-form integrand at the upper
/// limit.
pub fn check_schlafli_c_derivative(quick: bool) -> CheckReport {
    let mut acc = Accumulator::new("schlafli-c-derivative", 1e-6);
    for s in schlafli_points(quick) {
        match schlafli_check(s, 1e-4) {
            Ok(report) => acc.record(report.err_c(), || format!("{s:?}")),
            Err(e) => acc.record_err(&e, || format!("{s:?}")),
        }
    }
    acc.finish()
}

/// Finite-difference `dV/da` against the angle-differential expression:
/// the path-independence test.
pub fn check_schlafli_a_derivative(quick: bool) -> CheckReport {
    let mut acc = Accumulator::new("schlafli-a-derivative", 1e-5);
    for s in schlafli_points(quick) {
        match schlafli_check(s, 1e-4) {
            Ok(report) => acc.record(report.err_a(), || format!("{s:?}")),
            Err(e) => acc.record_err(&e, || format!("{s:?}")),
        }
    }
    acc.finish()
}

/// Octahedron (`n = 3`) integrand written out independently, radical taken
/// in the integration variable.
pub fn octahedron_integrand_reference(a: f64, t: f64) -> f64 {
    let (ca, sa) = (a.cosh(), a.sinh());
    let (ct, st) = (t.cosh(), t.sinh());
    let num = a * (2.0 * ct - 1.0) * sa * st
        - t * (ca - 1.0) * (1.0 + ca + 2.0 * ct * (ct - 1.0));
    let den = (2.0 * t).cosh() - ca;
    let rad = (3.0 * ct - ca - 2.0) * (ca + ct);
    num / (den * rad.sqrt())
}

/// Octahedron volume by an independently coded route: the same substitution
/// `t = c0 + s^2` applied to the reference integrand, integrated by plain
/// composite-midpoint refinement with panel doubling.
pub fn octahedron_volume_reference(a: f64, c: f64, rel_tol: f64) -> f64 {
    let ca = a.cosh();
    let c0 = ((ca + 2.0) / 3.0).acosh();
    let s_max = (c - c0).sqrt();

    let g = |s: f64| -> f64 {
        let delta = s * s;
        let t = c0 + delta;
        let (ct, st) = (t.cosh(), t.sinh());
        let num = a * (2.0 * ct - 1.0) * a.sinh() * st
            - t * (ca - 1.0) * (1.0 + ca + 2.0 * ct * (ct - 1.0));
        let den = (2.0 * t).cosh() - ca;
        // 3 cosh t - cosh a - 2 = 3 (cosh t - cosh c0), in difference form
        // near the endpoint.
        let lead = 6.0 * (c0 + 0.5 * delta).sinh() * (ca + ct);
        let ratio = if delta < 1e-8 {
            std::f64::consts::SQRT_2
        } else {
            s / (0.5 * delta).sinh().sqrt()
        };
        2.0 * num / (den * lead.sqrt()) * ratio
    };

    let midpoint = |panels: u64| -> f64 {
        let h = s_max / panels as f64;
        (0..panels).map(|k| g((k as f64 + 0.5) * h)).sum::<f64>() * h
    };

    let mut panels: u64 = 1024;
    let mut prev = midpoint(panels);
    loop {
        panels *= 2;
        let current = midpoint(panels);
        if (current - prev).abs() <= rel_tol * current.abs() || panels >= 1 << 22 {
            return 3.0 * current;
        }
        prev = current;
    }
}

/// The general integrand restricted to `n = 3` against the independent
/// octahedron arrangement, pointwise at pseudo-random `(a, t)`.
pub fn check_octahedron_integrand(quick: bool) -> CheckReport {
    let mut acc = Accumulator::new("octahedron-integrand-pointwise", 1e-12);
    let samples = if quick { 20 } else { 100 };
    let mut rng = SplitMix64(0x0C7A_0001);
    for _ in 0..samples {
        let a = rng.in_range(0.2, 2.5);
        let integrand = Integrand::new(3, a).unwrap();
        let t = integrand.lower_limit() + rng.in_range(0.01, 2.5);
        let general = integrand.value(t).unwrap();
        let reference = octahedron_integrand_reference(a, t);
        // Relative to the natural magnitude of the expression, so samples
        // near the integrand's sign change do not divide by a cancelled
        // value.
        let scale = (a * integrand.coeff_g(t).abs() + t * integrand.coeff_h(t).abs())
            / (integrand.denominator(t) * integrand.radicand(t).sqrt());
        let denom = general.abs().max(reference.abs()).max(scale.abs());
        acc.record((general - reference).abs() / denom, || format!("a={a} t={t}"));
    }
    acc.finish()
}

/// The radicand of the general integrand at `n = 3` against its explicit
/// octahedral factorization.
pub fn check_octahedron_radicand(quick: bool) -> CheckReport {
    let mut acc = Accumulator::new("octahedron-radicand-factorization", 1e-12);
    let samples = if quick { 20 } else { 100 };
    let mut rng = SplitMix64(0xFACE_0001);
    for _ in 0..samples {
        let a = rng.in_range(0.2, 2.5);
        let integrand = Integrand::new(3, a).unwrap();
        let t = integrand.lower_limit() + rng.in_range(0.01, 2.5);
        let ca = a.cosh();
        let factored = (3.0 * t.cosh() - ca - 2.0) * (t.cosh() + ca);
        acc.record(rel_diff(integrand.radicand(t), factored), || format!("a={a} t={t}"));
    }
    acc.finish()
}

/// The adaptive volume against the midpoint reference integrator at `n = 3`.
pub fn check_octahedron_volume(quick: bool) -> CheckReport {
    let mut acc = Accumulator::new("octahedron-volume-reference", 1e-9);
    let points: &[(f64, f64)] = if quick { &[(1.0, 1.0)] } else { &[(1.0, 1.0), (0.7, 1.3), (2.0, 2.2)] };
    for &(a, c) in points {
        match hyperbolic_volume(spec(3, a, c), 1e-12) {
            Ok(result) => {
                let reference = octahedron_volume_reference(a, c, 1e-11);
                acc.record(rel_diff(result.value, reference), || format!("a={a} c={c}"));
            }
            Err(e) => acc.record_err(&e, || format!("a={a} c={c}")),
        }
    }
    acc.finish()
}

/// Tolerance honesty: tightening the tolerance moves the value by less than
/// the looser run's error estimate.
pub fn check_quadrature_honesty(quick: bool) -> CheckReport {
    let mut acc = Accumulator::new("quadrature-honesty", 1.0);
    let points: &[(u32, f64, f64)] = if quick {
        &[(3, 1.0, 0.5)]
    } else {
        &[(2, 0.8, 0.6), (3, 1.0, 0.5), (4, 1.5, 1.2), (6, 0.5, 0.9), (8, 2.0, 1.4)]
    };
    for &(n, a, off) in points {
        let s = spec(n, a, threshold_length(n, a) + off);
        let mut prev: Option<crate::QuadratureResult> = None;
        for rel_tol in [1e-8, 1e-10, 1e-12] {
            match hyperbolic_volume(s, rel_tol) {
                Ok(result) => {
                    if let Some(p) = prev {
                        let allowed = p.abs_error_estimate.max(f64::MIN_POSITIVE);
                        acc.record((result.value - p.value).abs() / allowed, || {
                            format!("{s:?} tol {rel_tol:e}")
                        });
                    }
                    prev = Some(result);
                }
                Err(e) => acc.record_err(&e, || format!("{s:?} tol {rel_tol:e}")),
            }
        }
    }
    acc.finish()
}

/// Shrinking bodies: the hyperbolic volume approaches the Euclidean volume
/// of the same spec, with the deviation decreasing along the ladder.
pub fn check_euclidean_limit(_quick: bool) -> CheckReport {
    let mut acc = Accumulator::new("euclidean-limit", 1e-3);
    let mut last = f64::INFINITY;
    for &eps in &[0.1, 0.03, 0.01] {
        let s = spec(5, eps, eps);
        let hyp = match hyperbolic_volume(s, 1e-11) {
            Ok(r) => r.value,
            Err(e) => {
                acc.record_err(&e, || format!("eps={eps}"));
                continue;
            }
        };
        let euc = euclidean::volume(s).unwrap();
        let deviation = (hyp / euc - 1.0).abs();
        let decreasing = deviation < last;
        if !decreasing {
            acc.record(f64::INFINITY, || format!("eps={eps}: deviation {deviation} not below {last}"));
        } else if eps <= 0.01 {
            acc.record(deviation, || format!("eps={eps}"));
        } else {
            acc.record(0.0, String::new);
        }
        last = deviation;
    }
    acc.finish()
}

/// Degeneration: volumes collapse toward the flattening boundary and grow
/// with the distance from it; volumes on the main grid are positive.
pub fn check_degeneration(quick: bool) -> CheckReport {
    let mut acc = Accumulator::new("degeneration-limit", 1e-2);
    let c0 = threshold_length(4, 1.0);
    let mut last = 0.0;
    for &off in &[1e-6, 1e-4, 1e-2] {
        match hyperbolic_volume(spec(4, 1.0, c0 + off), 1e-10) {
            Ok(r) => {
                if off == 1e-6 {
                    acc.record(r.value, || format!("volume at c0 + 1e-6 is {}", r.value));
                }
                let increasing = r.value > last;
                acc.record(if increasing { 0.0 } else { 1.0 }, || {
                    format!("offset {off}: {} not above {last}", r.value)
                });
                last = r.value;
            }
            Err(e) => acc.record_err(&e, || format!("offset {off}")),
        }
    }
    // Positivity across a spread of the existence region.
    let (ns, a_values, offsets): (&[u32], &[f64], &[f64]) = if quick {
        (&[3], &[1.0], &[0.5])
    } else {
        (&[2, 3, 5, 8], &[0.5, 1.5, 3.0], &[0.05, 0.8, 2.5])
    };
    for &n in ns {
        for &a in a_values {
            for &off in offsets {
                let s = spec(n, a, threshold_length(n, a) + off);
                match hyperbolic_volume(s, 1e-10) {
                    Ok(r) => acc.record(if r.value > 0.0 { 0.0 } else { 1.0 }, || {
                        format!("{s:?}: volume {}", r.value)
                    }),
                    Err(e) => acc.record_err(&e, || format!("{s:?}")),
                }
            }
        }
    }
    acc.finish()
}

/// Substitution correctness: integrating the raw integrand with open nodes
/// (no substitution) agrees with the desingularized route over a common
/// domain clear of the endpoint.
pub fn check_substitution_free_route(quick: bool) -> CheckReport {
    let mut acc = Accumulator::new("substitution-free-route", 1e-8);
    let points: &[(u32, f64, f64)] = if quick {
        &[(3, 1.0, 1.0)]
    } else {
        &[(3, 1.0, 1.0), (5, 0.8, 1.5), (2, 1.2, 1.6)]
    };
    for &(n, a, c) in points {
        let integrand = Integrand::new(n, a).unwrap();
        let t_lo = integrand.lower_limit() + 1e-6;
        let direct = adaptive_gk15(
            |t| integrand.value(t).unwrap_or(0.0),
            t_lo,
            c,
            1e-10,
            0.0,
            1_000_000,
        );
        let s_lo = (t_lo - integrand.lower_limit()).sqrt();
        let s_hi = (c - integrand.lower_limit()).sqrt();
        let substituted =
            adaptive_gk15(|s| integrand.transformed(s), s_lo, s_hi, 1e-12, 0.0, 1_000_000);
        if !direct.converged || !substituted.converged {
            acc.record(f64::INFINITY, || format!("n={n} a={a} c={c}: no convergence"));
            continue;
        }
        acc.record(rel_diff(direct.value, substituted.value), || format!("n={n} a={a} c={c}"));
    }
    acc.finish()
}

/// Run every suite; `quick` trades grid density for speed.
pub fn run(quick: bool) -> Vec<CheckReport> {
    vec![
        check_euclidean_volume_oracle(quick),
        check_euclidean_angle_normals(quick),
        check_euclidean_n3_reduction(quick),
        check_hyperbolic_angle_oracle(quick),
        check_edge_length_round_trip(quick),
        check_angle_excess(quick),
        check_angle_derivative_fd(quick),
        check_schlafli_c_derivative(quick),
        check_schlafli_a_derivative(quick),
        check_octahedron_integrand(quick),
        check_octahedron_radicand(quick),
        check_octahedron_volume(quick),
        check_quadrature_honesty(quick),
        check_euclidean_limit(quick),
        check_degeneration(quick),
        check_substitution_free_route(quick),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_run_passes_everywhere() {
        for report in run(true) {
            assert!(
                report.passed(),
                "{}: {}/{} failed, worst {:.3e} (tol {:.1e}): {}",
                report.name,
                report.failures,
                report.checks,
                report.worst,
                report.tolerance,
                report.detail
            );
        }
    }

    #[test]
    fn injected_angle_fault_is_caught() {
        // Flip the sign of cos A: the oracle suite must notice.
        let broken = |s: AntiprismSpec| -> Result<DihedralAngles> {
            let ang = hyperbolic::angles(s)?;
            Ok(DihedralAngles { along_a: std::f64::consts::PI - ang.along_a, along_c: ang.along_c })
        };
        let report = check_hyperbolic_angles_against(broken, true);
        assert!(!report.passed());
        assert!(report.failures > 0);
    }
}
