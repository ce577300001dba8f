use thiserror::Error;

/// Errors raised by metric computations.
///
/// Malformed input is kept apart from numerical infeasibility so callers can
/// react differently.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("degenerate sample: {0}")]
    DegenerateSample(String),

    /// A LAR/RAR value lies outside the range attainable by a convex ROC curve
    /// with the given AR.
    #[error("infeasible {metric} = {value} for AR = {ar}: must lie strictly inside ({min}, {max})")]
    InfeasibleMetric {
        metric: &'static str,
        value: f64,
        ar: f64,
        min: f64,
        max: f64,
    },

    /// The trapezoid collapses to a triangle: A = AR·(1 + 1/(μL−1) + 1/(μR−1)) ≥ 1,
    /// equivalently 1/(μL−1) + 1/(μR−1) ≥ (1−AR)/AR.
    #[error("triangular-degenerate decomposition: A = {a_value} >= 1 (1/(mu_l-1) + 1/(mu_r-1) = {lhs} vs (1-AR)/AR = {rhs}); no indifference segment exists")]
    TriangularDegenerate { a_value: f64, lhs: f64, rhs: f64 },

    #[error("curve is not convex: {0}")]
    NonConvex(String),

    #[error("degenerate curve: {0}")]
    DegenerateCurve(String),

    #[error("root bracket does not contain a sign change: f({lo}) = {f_lo}, f({hi}) = {f_hi}")]
    NoBracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("quadrature did not reach tolerance {tol}: estimated error {estimate}")]
    QuadratureTolerance { tol: f64, estimate: f64 },
}

impl Error {
    /// True when the input was well formed but has no numerical answer.
    pub fn is_numerical(&self) -> bool {
        !matches!(self, Error::InvalidInput(_) | Error::DegenerateSample(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
