//! Continuous ROC curves and the second-order metrics defined on them by
//! integrals. Triangular curves give closed forms and the attainable range;
//! the van der Burgt family is a smooth one-parameter example.

mod burgt;
mod curve;
mod integrals;
mod trapezoid;
mod triangle;

pub use burgt::{burgt_ar, burgt_k, burgt_preference_sweep, burgt_row, sweep_grid, SweepRow};
pub use curve::{mirror, CurveModel, Polyline, CONVEXITY_TOL};
pub use integrals::{
    default_tol, lar_integral, lauc_integral, rar_integral, rauc_integral,
    rauc_integral_by_abscissa, TOL_ANALYTIC, TOL_PIECEWISE,
};
pub use trapezoid::{
    multipliers, multipliers_unified, trapezoid_decomposition, unified_metric, Multipliers,
    TrapezoidDecomposition, Zone, CROSS_CHECK_TOL,
};
pub use triangle::{
    lar_rar_bounds, solve_triangle_a, triangle_lar, triangle_rar, Side, BOUNDS_AT_ONE,
    BOUNDS_AT_ZERO,
};

use crate::Result;

/// AR, LAR and RAR of a curve by quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveMetrics {
    pub ar: f64,
    pub lar: f64,
    pub rar: f64,
}

pub fn curve_metrics(curve: &CurveModel, tol: f64) -> Result<CurveMetrics> {
    Ok(CurveMetrics {
        ar: curve.ar(),
        lar: lar_integral(curve, tol)?,
        rar: rar_integral(curve, tol)?,
    })
}

/// Trapezoidal decomposition of a convex curve from its quadrature metrics.
pub fn decompose_curve(curve: &CurveModel, tol: f64) -> Result<TrapezoidDecomposition> {
    curve.require_convex()?;
    let m = curve_metrics(curve, tol)?;
    trapezoid_decomposition(m.ar, m.lar, m.rar)
}
