//! Small numerical helpers: boundary clamping policy and cancellation-free
//! hyperbolic identities.

/// Slack allowed when clamping inverse-function arguments onto their valid
/// boundary: 8 units of machine epsilon. Violations beyond this are treated
/// as errors, not rounding noise.
pub const CLAMP_SLACK: f64 = 8.0 * f64::EPSILON;

/// Clamp `x` into `[-1, 1]` for `acos`, allowing overshoot up to
/// [`CLAMP_SLACK`]. Returns `None` for larger violations.
pub fn clamp_to_unit(x: f64) -> Option<f64> {
    if x.abs() <= 1.0 {
        Some(x)
    } else if x.abs() <= 1.0 + CLAMP_SLACK {
        Some(x.signum())
    } else {
        None
    }
}

/// Clamp `x` into `[1, inf)` for `acosh`, allowing undershoot up to
/// [`CLAMP_SLACK`]. Returns `None` for larger violations.
pub fn clamp_cosh_arg(x: f64) -> Option<f64> {
    if x >= 1.0 {
        Some(x)
    } else if x >= 1.0 - CLAMP_SLACK {
        Some(1.0)
    } else {
        None
    }
}

/// `acosh(1 + x)` for `x >= 0` without the cancellation the naive form
/// suffers when `x` is tiny.
pub fn acosh1p(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    (x + (x * (2.0 + x)).sqrt()).ln_1p()
}

/// `cosh(x) - 1` evaluated as `2 sinh^2(x/2)`, exact to full relative
/// precision for small `x`.
pub fn cosh_minus_one(x: f64) -> f64 {
    let s = (0.5 * x).sinh();
    2.0 * s * s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clamp_accepts_interior_and_slack() {
        assert_eq!(clamp_to_unit(0.5), Some(0.5));
        assert_eq!(clamp_to_unit(-1.0), Some(-1.0));
        assert_eq!(clamp_to_unit(1.0 + 4.0 * f64::EPSILON), Some(1.0));
        assert_eq!(clamp_to_unit(-(1.0 + 4.0 * f64::EPSILON)), Some(-1.0));
        assert_eq!(clamp_to_unit(1.0 + 16.0 * f64::EPSILON), None);

        assert_eq!(clamp_cosh_arg(1.5), Some(1.5));
        assert_eq!(clamp_cosh_arg(1.0 - 4.0 * f64::EPSILON), Some(1.0));
        assert_eq!(clamp_cosh_arg(1.0 - 16.0 * f64::EPSILON), None);
    }

    #[test]
    fn acosh1p_matches_naive_form_at_moderate_arguments() {
        for &x in &[0.1_f64, 0.5, 1.0, 4.0, 100.0] {
            let naive = (1.0 + x).acosh();
            let rel = (acosh1p(x) - naive).abs() / naive;
            assert!(rel < 1e-15, "x={x}: rel={rel}");
        }
    }

    #[test]
    fn acosh1p_small_argument_asymptotics() {
        // acosh(1+x) ~ sqrt(2x) for x -> 0.
        for &x in &[1e-10_f64, 1e-14, 1e-18] {
            let expect = (2.0 * x).sqrt();
            let rel = (acosh1p(x) - expect).abs() / expect;
            assert!(rel < 1e-9, "x={x}: rel={rel}");
        }
    }

    #[test]
    fn cosh_minus_one_small_and_large() {
        let x = 1e-9;
        let rel = (cosh_minus_one(x) - 0.5 * x * x).abs() / (0.5 * x * x);
        assert!(rel < 1e-14);
        let x = 3.0;
        let rel = (cosh_minus_one(x) - (x.cosh() - 1.0)).abs() / (x.cosh() - 1.0);
        assert!(rel < 1e-15);
    }
}
