//! LAUC and RAUC from their integral definitions.
//!
//! For a continuous ROC curve R:
//!
//! ```text
//! LAUC = ∫₀¹ ( ∫₀ᶜ R(x) dx ) / ( c·R(c) ) dc
//! RAUC = ∫₀¹ ( ∫_f^1 (1 − R⁻¹(y)) dy ) / ( (1 − f)(1 − R⁻¹(f)) ) df
//!      = ∫₀¹ ( ∫_c^1 (R(x) − R(c)) dx ) / ( (1 − c)(1 − R(c)) ) · R'(c) dc
//! ```
//!
//! Both kernels are 0/0 at one endpoint but have finite limits (1/2 for a
//! finite nonzero end slope, 1 where the curve jumps). The Gauss–Kronrod
//! rule never samples the endpoints, so the limits never have to be
//! substituted explicitly. Vertices of piecewise-linear curves are used as
//! breakpoints.

use super::curve::CurveModel;
use crate::quadrature::integrate;
use crate::{Error, Result};

/// Default quadrature tolerance for smooth families.
pub const TOL_ANALYTIC: f64 = 1e-9;
/// Default quadrature tolerance for piecewise-linear curves.
pub const TOL_PIECEWISE: f64 = 1e-7;

pub fn default_tol(curve: &CurveModel) -> f64 {
    match curve {
        CurveModel::PiecewiseLinear(_) => TOL_PIECEWISE,
        CurveModel::Mirrored(inner) => default_tol(inner),
        _ => TOL_ANALYTIC,
    }
}

fn x_breaks(curve: &CurveModel) -> Vec<f64> {
    let mut b: Vec<f64> = match curve.vertices() {
        Some(v) => v.into_iter().map(|p| p.0).collect(),
        None => Vec::new(),
    };
    b.push(0.0);
    b.push(1.0);
    normalise(b)
}

fn y_breaks(curve: &CurveModel) -> Vec<f64> {
    let mut b: Vec<f64> = match curve.vertices() {
        Some(v) => v.into_iter().map(|p| p.1).collect(),
        None => Vec::new(),
    };
    b.push(0.0);
    b.push(1.0);
    normalise(b)
}

fn normalise(mut b: Vec<f64>) -> Vec<f64> {
    b.retain(|v| (0.0..=1.0).contains(v));
    b.sort_by(f64::total_cmp);
    b.dedup();
    b
}

fn integrate_pieces<F: FnMut(f64) -> f64>(mut f: F, breaks: &[f64], tol: f64) -> Result<f64> {
    let pieces = breaks.len().saturating_sub(1).max(1);
    let per_piece = tol / pieces as f64;
    let mut total = 0.0;
    for w in breaks.windows(2) {
        total += integrate(&mut f, w[0], w[1], per_piece)?;
    }
    Ok(total)
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("tolerance must be positive, got {tol}")))
    }
}

/// LAUC by adaptive quadrature to absolute error `tol`.
pub fn lauc_integral(curve: &CurveModel, tol: f64) -> Result<f64> {
    check_tol(tol)?;
    let z = curve.zero_prefix();
    if z > 0.0 {
        return Err(Error::DegenerateCurve(format!(
            "R(c) = 0 on (0, {z}]: the LAUC kernel is undefined there"
        )));
    }
    integrate_pieces(
        |c| curve.area_to(c) / (c * curve.eval(c)),
        &x_breaks(curve),
        tol,
    )
}

/// LAR = 2·LAUC − 1.
pub fn lar_integral(curve: &CurveModel, tol: f64) -> Result<f64> {
    Ok(2.0 * lauc_integral(curve, tol)? - 1.0)
}

/// RAUC from the definition (integration over the default share f).
pub fn rauc_integral(curve: &CurveModel, tol: f64) -> Result<f64> {
    check_tol(tol)?;
    check_top(curve)?;
    integrate_pieces(
        |f| {
            let x = curve.inverse(f);
            curve.upper_band_area(f) / ((1.0 - f) * (1.0 - x))
        },
        &y_breaks(curve),
        tol,
    )
}

/// RAUC from the change-of-variables form (integration over the
/// non-default share c, weighted by R'(c)). Requires a curve without
/// vertical segments.
pub fn rauc_integral_by_abscissa(curve: &CurveModel, tol: f64) -> Result<f64> {
    check_tol(tol)?;
    check_top(curve)?;
    integrate_pieces(
        |c| {
            let slope = curve.slope(c);
            if slope == 0.0 {
                return 0.0;
            }
            let r = curve.eval(c);
            let num = curve.tail_area(c) - r * (1.0 - c);
            num / ((1.0 - c) * (1.0 - r)) * slope
        },
        &x_breaks(curve),
        tol,
    )
}

/// RAR = 2·RAUC − 1, using the definition form.
pub fn rar_integral(curve: &CurveModel, tol: f64) -> Result<f64> {
    Ok(2.0 * rauc_integral(curve, tol)? - 1.0)
}

fn check_top(curve: &CurveModel) -> Result<()> {
    let gap = curve.top_gap();
    if gap > 0.0 {
        return Err(Error::DegenerateCurve(format!(
            "1 − R⁻¹(f) = 0 for f in [{}, 1): the RAUC kernel is undefined there",
            1.0 - gap
        )));
    }
    Ok(())
}
