//! Error type shared by all modules of the crate.

/// Errors surfaced by geometric and numerical routines.
///
/// Every fallible operation in this crate returns one of these variants;
/// none of them panic on bad numerical input.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Combinatorial or metric input outside the supported family.
    #[error("invalid antiprism input: {0}")]
    InvalidSpec(String),

    /// Edge length above the supported cap. Hyperbolic functions of the
    /// lengths lose too much precision past this point for the stated
    /// tolerances to hold.
    #[error("edge length {value} exceeds the supported maximum {max}")]
    EdgeTooLong { value: f64, max: f64 },

    /// A vector expected to represent a point of the model ball does not
    /// (self inner product must be positive).
    #[error("point lies on or outside the model ball (self product {self_product})")]
    PointOutsideModel { self_product: f64 },

    /// An inverse trigonometric/hyperbolic argument violated its valid range
    /// by more than the clamping slack, which indicates a bug upstream
    /// rather than harmless rounding.
    #[error("numerical breakdown in {context}: argument {value} outside valid range")]
    NumericalBreakdown { context: &'static str, value: f64 },

    /// The three points handed to the plane solver are (near-)collinear or
    /// define a plane through the model origin.
    #[error("degenerate point triple (condition estimate {cond:.3e})")]
    DegenerateTriple { cond: f64 },

    /// The supplied pole does not define a plane meeting the model ball.
    #[error("pole does not define a plane meeting the model ball (self product {self_product})")]
    NotAPlane { self_product: f64 },

    /// The requested antiprism does not exist for these edge lengths.
    /// `margin` is the signed existence margin reported alongside.
    #[error("antiprism is not realizable for these edge lengths (margin {margin})")]
    NotRealizable { margin: f64 },

    /// A relation the implementation relies on failed to hold; this is an
    /// implementation bug, not a user error.
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(&'static str),

    /// The radicand of the volume integrand vanished or went negative at an
    /// interior evaluation point.
    #[error("radicand not positive at t = {t} (value {value})")]
    SingularRadicand { t: f64, value: f64 },

    /// Evaluation point outside the domain of the requested quantity.
    #[error("out of domain in {context}: {value}")]
    OutOfDomain { context: &'static str, value: f64 },

    /// The adaptive quadrature exhausted its evaluation budget before
    /// reaching the requested tolerance.
    #[error("quadrature did not converge within {evaluations} evaluations (error estimate {error_estimate:.3e})")]
    ConvergenceFailure { evaluations: u64, error_estimate: f64 },

    /// Requested relative tolerance outside the supported range.
    #[error("relative tolerance {0:e} outside supported range [1e-13, 1e-3]")]
    InvalidTolerance(f64),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
