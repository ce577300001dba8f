//! Closed forms for the two-segment (triangular) ROC curve and the LAR/RAR
//! range they imply.
//!
//! The triangular curve through (a, a + d) has AR = d. Moving the vertex
//! towards a → 0 maximises LAR and minimises RAR; a → 1 − d does the opposite,
//! which gives the attainable range of either metric for a convex curve with
//! a given AR.

use serde::{Deserialize, Serialize};

use crate::roots::bisect;
use crate::{Error, Result};

/// LAR/RAR bounds in the limit AR → 0.
pub const BOUNDS_AT_ZERO: (f64, f64) = (0.0, 0.0);
/// LAR/RAR bounds in the limit AR → 1.
pub const BOUNDS_AT_ONE: (f64, f64) = (1.0, 1.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

fn check_domain(a: f64, d: f64) -> Result<()> {
    if !(d > 0.0 && d < 1.0 && a > 0.0 && a < 1.0 - d) {
        return Err(Error::InvalidInput(format!(
            "triangle needs 0 < d < 1 and 0 < a < 1 - d, got a = {a}, d = {d}"
        )));
    }
    Ok(())
}

/// LAR(a, d) = a·ln a − (1 − a)/(1 − a − d) · (a + d)·ln(a + d).
pub fn triangle_lar(a: f64, d: f64) -> Result<f64> {
    check_domain(a, d)?;
    Ok(lar_unchecked(a, d))
}

/// RAR(a, d) = (1 − a − d)·ln(1 − a − d) − (a + d)/a · (1 − a)·ln(1 − a).
pub fn triangle_rar(a: f64, d: f64) -> Result<f64> {
    check_domain(a, d)?;
    Ok(rar_unchecked(a, d))
}

fn lar_unchecked(a: f64, d: f64) -> f64 {
    let gap = (1.0 - d) - a; // 1 − a − d
    a * a.ln() - (1.0 - a) / gap * (a + d) * (-gap).ln_1p()
}

fn rar_unchecked(a: f64, d: f64) -> f64 {
    let gap = (1.0 - d) - a;
    gap * gap.ln() - (a + d) / a * (1.0 - a) * (-a).ln_1p()
}

fn triangle_metric(side: Side, a: f64, d: f64) -> f64 {
    match side {
        Side::Left => lar_unchecked(a, d),
        Side::Right => rar_unchecked(a, d),
    }
}

/// (min, max) of LAR and RAR over convex curves with the given AR:
/// min = AR + (1 − AR)·ln(1 − AR), max = −AR·ln(AR)/(1 − AR).
///
/// Only defined on the open interval; the limits are [`BOUNDS_AT_ZERO`] and
/// [`BOUNDS_AT_ONE`].
pub fn lar_rar_bounds(ar: f64) -> Result<(f64, f64)> {
    if !(ar > 0.0 && ar < 1.0) {
        return Err(Error::InvalidInput(format!("AR must lie in (0, 1), got {ar}")));
    }
    let min = ar + (1.0 - ar) * (-ar).ln_1p();
    let max = -ar * ar.ln() / (1.0 - ar);
    Ok((min, max))
}

/// Vertex abscissa a of the triangular curve with AR = `ar` whose LAR
/// (left side) or RAR (right side) equals `metric`.
///
/// LAR falls and RAR rises strictly in a, so the root is unique and found by
/// bisection over (0, 1 − AR).
pub fn solve_triangle_a(metric: f64, ar: f64, side: Side) -> Result<f64> {
    let (min, max) = lar_rar_bounds(ar)?;
    if !(metric > min && metric < max) {
        return Err(Error::InfeasibleMetric {
            metric: match side {
                Side::Left => "LAR",
                Side::Right => "RAR",
            },
            value: metric,
            ar,
            min,
            max,
        });
    }
    let lo = 1e-300;
    let hi = (1.0 - ar) * (1.0 - 1e-15);
    bisect(|a| triangle_metric(side, a, ar) - metric, lo, hi, 0.0)
}
