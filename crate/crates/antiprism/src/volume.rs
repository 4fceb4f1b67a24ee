//! Volume of the compact hyperbolic antiprism, as the integral of the
//! closed-form angle differentials from the flattening threshold `c0` up to
//! the actual lateral edge length.
//!
//! The integrand carries an inverse-square-root singularity at `c0`, where
//! its radicand has a simple zero. The substitution `t = c0 + s^2` removes
//! it: the transformed integrand extends smoothly to `s = 0` and a generic
//! adaptive rule converges fast.

use std::f64::consts::{PI, SQRT_2};

use crate::error::{Error, Result};
use crate::hyperbolic;
use crate::quad::{adaptive_gk15, QuadratureResult};
use crate::{AntiprismSpec, MAX_EDGE_LENGTH};

/// Default evaluation budget for one volume computation.
pub const DEFAULT_MAX_EVALUATIONS: u64 = 1_000_000;

/// Default relative tolerance.
pub const DEFAULT_REL_TOL: f64 = 1e-10;

/// The volume integrand at fixed polygon order `n` and polygon edge length
/// `a`, as a function of the integration variable `t` (the paper-side name
/// for the running lateral edge length).
#[derive(Debug, Clone, Copy)]
pub struct Integrand {
    a: f64,
    cos_p: f64,
    cos_q: f64,
    cosh_a: f64,
    sinh_a: f64,
    sinh_half_a: f64,
    c0: f64,
}

impl Integrand {
    pub fn new(n: u32, a: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSpec(format!("n must be at least 2, got {n}")));
        }
        if !(a.is_finite() && a > 0.0) {
            return Err(Error::InvalidSpec(format!("edge length a must be positive and finite, got {a}")));
        }
        if a > MAX_EDGE_LENGTH {
            return Err(Error::EdgeTooLong { value: a, max: MAX_EDGE_LENGTH });
        }
        let nf = n as f64;
        Ok(Self {
            a,
            cos_p: (PI / nf).cos(),
            cos_q: (2.0 * PI / nf).cos(),
            cosh_a: a.cosh(),
            sinh_a: a.sinh(),
            sinh_half_a: (0.5 * a).sinh(),
            c0: hyperbolic::threshold_length(n, a),
        })
    }

    /// Lower integration limit: the flattening threshold `c0`.
    pub fn lower_limit(&self) -> f64 {
        self.c0
    }

    /// Coefficient of `a` in the numerator:
    /// `2 (cosh t - cos(pi/n)) sinh a sinh t`. Positive for `t > c0`.
    pub fn coeff_g(&self, t: f64) -> f64 {
        2.0 * (t.cosh() - self.cos_p) * self.sinh_a * t.sinh()
    }

    /// Coefficient of `t` in the numerator:
    /// `-(cosh a - 1)(1 + cosh a + 2 cosh^2 t - 4 cosh t cos(pi/n))`.
    /// Nonpositive everywhere.
    pub fn coeff_h(&self, t: f64) -> f64 {
        let ct = t.cosh();
        -(self.cosh_a - 1.0) * (1.0 + self.cosh_a + 2.0 * ct * ct - 4.0 * ct * self.cos_p)
    }

    /// The radicand under the square root of the integrand denominator.
    /// It has a simple zero at `t = c0` and stays positive for `t > c0`.
    pub fn radicand(&self, t: f64) -> f64 {
        let ct = t.cosh();
        let st = t.sinh();
        1.0 - self.cosh_a * (2.0 + self.cosh_a) + 2.0 * ct * ct
            + 4.0 * (self.cosh_a - 1.0) * ct * self.cos_p
            - 2.0 * st * st * self.cos_q
    }

    /// `2 cosh^2 t - 1 - cosh a`, in the cancellation-free arrangement
    /// `2 (sinh^2 t - sinh^2(a/2))`. Positive for every `t > c0`.
    pub fn denominator(&self, t: f64) -> f64 {
        let st = t.sinh();
        2.0 * (st * st - self.sinh_half_a * self.sinh_half_a)
    }

    /// Integrand value at `t`; the volume is `n` times its integral over
    /// `[c0, c]`.
    pub fn value(&self, t: f64) -> Result<f64> {
        if t <= self.c0 {
            return Err(Error::OutOfDomain { context: "integrand evaluated at or below the lower limit", value: t });
        }
        let radicand = self.radicand(t);
        if radicand <= 0.0 {
            return Err(Error::SingularRadicand { t, value: radicand });
        }
        let numerator = self.a * self.coeff_g(t) + t * self.coeff_h(t);
        Ok(numerator / (self.denominator(t) * radicand.sqrt()))
    }

    /// The integrand after the substitution `t = c0 + s^2` (including the
    /// Jacobian `2s`), smooth on `[0, sqrt(c - c0)]`.
    ///
    /// The radicand factors exactly as a smooth positive function times
    /// `cosh t - cosh c0`; writing that difference as
    /// `2 sinh(c0 + s^2/2) sinh(s^2/2)` keeps full relative precision near
    /// `s = 0`, where the direct expression would cancel catastrophically.
    pub(crate) fn transformed(&self, s: f64) -> f64 {
        let delta = s * s;
        let t = self.c0 + delta;
        let numerator = self.a * self.coeff_g(t) + t * self.coeff_h(t);
        let lead = 2.0 * (1.0 + self.cos_p)
            * (2.0 * (1.0 - self.cos_p) * t.cosh() + self.cosh_a + 1.0 - 2.0 * self.cos_p);
        let mid = self.c0 + 0.5 * delta;
        // s / sqrt(sinh(s^2 / 2)) -> sqrt(2) as s -> 0.
        let ratio = if delta < 1e-8 { SQRT_2 } else { s / (0.5 * delta).sinh().sqrt() };
        2.0 * numerator / (self.denominator(t) * (2.0 * lead * mid.sinh()).sqrt()) * ratio
    }
}

/// The volume integrand at `(n, a, t)`; the volume integral multiplies its
/// antiderivative by `n`.
pub fn integrand_value(n: u32, a: f64, t: f64) -> Result<f64> {
    Integrand::new(n, a)?.value(t)
}

/// Hyperbolic volume by adaptive quadrature at the default evaluation
/// budget.
pub fn hyperbolic_volume(spec: AntiprismSpec, rel_tol: f64) -> Result<QuadratureResult> {
    hyperbolic_volume_with_budget(spec, rel_tol, DEFAULT_MAX_EVALUATIONS)
}

/// Hyperbolic volume by adaptive quadrature.
///
/// Integrates the substituted integrand on `[0, sqrt(c - c0)]` to the given
/// relative tolerance. Fails with `ConvergenceFailure` if the budget runs
/// out first; results are bit-reproducible for fixed inputs.
pub fn hyperbolic_volume_with_budget(
    spec: AntiprismSpec,
    rel_tol: f64,
    max_evaluations: u64,
) -> Result<QuadratureResult> {
    if !(1e-13..=1e-3).contains(&rel_tol) {
        return Err(Error::InvalidTolerance(rel_tol));
    }
    let report = hyperbolic::exists(spec)?;
    if !report.exists {
        return Err(Error::NotRealizable { margin: report.margin });
    }
    let integrand = Integrand::new(spec.n(), spec.a())?;
    let upper = (spec.c() - report.c0).sqrt();
    let raw = adaptive_gk15(|s| integrand.transformed(s), 0.0, upper, rel_tol, 0.0, max_evaluations);
    let scaled = QuadratureResult {
        value: spec.n() as f64 * raw.value,
        abs_error_estimate: spec.n() as f64 * raw.abs_error_estimate,
        evaluations: raw.evaluations,
        converged: raw.converged,
    };
    if !scaled.converged {
        return Err(Error::ConvergenceFailure {
            evaluations: scaled.evaluations,
            error_estimate: scaled.abs_error_estimate,
        });
    }
    Ok(scaled)
}

/// Finite-difference volume derivatives paired with their closed-form and
/// angle-based counterparts; see [`schlafli_check`].
#[derive(Debug, Clone, Copy)]
pub struct SchlafliReport {
    /// Central difference of the volume in `c`.
    pub dv_dc_fd: f64,
    /// Closed form `n * integrand(c)`.
    pub dv_dc_closed: f64,
    /// Central difference of the volume in `a`.
    pub dv_da_fd: f64,
    /// `-n (a dA/da + c dC/da)` with the angle partials as central
    /// differences of the closed-form angles.
    pub dv_da_angles: f64,
    /// Step used for all central differences.
    pub delta: f64,
}

impl SchlafliReport {
    /// Absolute error of the `c`-derivative pair.
    pub fn err_c(&self) -> f64 {
        (self.dv_dc_fd - self.dv_dc_closed).abs()
    }

    /// Absolute error of the `a`-derivative pair.
    pub fn err_a(&self) -> f64 {
        (self.dv_da_fd - self.dv_da_angles).abs()
    }
}

/// Differential cross-checks of the volume.
///
/// (i) The `c`-derivative of the computed volume must match the closed-form
/// integrand at the upper limit (the volume was produced by integrating
/// exactly that expression).
///
/// (ii) The `a`-derivative must match `-n (a dA/da + c dC/da)`: the volume
/// was integrated along `c` only, so agreement in the transverse direction
/// is the path-independence test of the underlying differential.
pub fn schlafli_check(spec: AntiprismSpec, delta: f64) -> Result<SchlafliReport> {
    if !(delta.is_finite() && delta > 0.0) {
        return Err(Error::InvalidSpec(format!("finite positive delta required, got {delta}")));
    }
    let (n, a, c) = (spec.n(), spec.a(), spec.c());
    let perturbed = [
        AntiprismSpec::new(n, a, c + delta)?,
        AntiprismSpec::new(n, a, c - delta)?,
        AntiprismSpec::new(n, a + delta, c)?,
        AntiprismSpec::new(n, a - delta, c)?,
    ];
    for p in &perturbed {
        let rep = hyperbolic::exists(*p)?;
        if !rep.exists {
            return Err(Error::OutOfDomain {
                context: "perturbed spec leaves the existence region",
                value: rep.margin,
            });
        }
    }

    // Tight tolerance so quadrature noise stays below the difference quotient.
    const FD_TOL: f64 = 1e-12;
    let volume_at = |s: AntiprismSpec| -> Result<f64> {
        Ok(hyperbolic_volume(s, FD_TOL)?.value)
    };

    let dv_dc_fd = (volume_at(perturbed[0])? - volume_at(perturbed[1])?) / (2.0 * delta);
    let dv_dc_closed = n as f64 * integrand_value(n, a, c)?;

    let dv_da_fd = (volume_at(perturbed[2])? - volume_at(perturbed[3])?) / (2.0 * delta);
    let ang_plus = hyperbolic::angles(perturbed[2])?;
    let ang_minus = hyperbolic::angles(perturbed[3])?;
    let da_da = (ang_plus.along_a - ang_minus.along_a) / (2.0 * delta);
    let dc_da = (ang_plus.along_c - ang_minus.along_c) / (2.0 * delta);
    let dv_da_angles = -(n as f64) * (a * da_da + c * dc_da);

    Ok(SchlafliReport { dv_dc_fd, dv_dc_closed, dv_da_fd, dv_da_angles, delta })
}
