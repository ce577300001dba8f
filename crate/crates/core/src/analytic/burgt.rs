//! The one-parameter van der Burgt ROC family
//! R(x) = (1 − e^(−kx)) / (1 − e^(−k)).

use serde::{Deserialize, Serialize};

use super::curve::CurveModel;
use super::integrals::{lar_integral, rar_integral};
use super::triangle::lar_rar_bounds;
use crate::roots::bisect;
use crate::{Error, Result};

const K_MIN: f64 = 1e-6;
const K_MAX: f64 = 1e6;

/// AR(k) = 2·(1/(1 − e^(−k)) − 1/k − 1/2).
pub fn burgt_ar(k: f64) -> Result<f64> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::InvalidInput(format!("k must be positive and finite, got {k}")));
    }
    Ok(ar_unchecked(k))
}

fn ar_unchecked(k: f64) -> f64 {
    if k < 0.05 {
        // Laurent series of 1/(1 − e^(−k)) with the 1/k and 1/2 terms cancelled.
        let k2 = k * k;
        k * (1.0 / 6.0 - k2 / 360.0 + k2 * k2 / 15120.0)
    } else {
        2.0 * (1.0 / (-(-k).exp_m1()) - 1.0 / k - 0.5)
    }
}

/// Inverse of [`burgt_ar`] by bisection. The upper end of the bracket starts
/// at k = 50 and doubles until it covers `ar`.
pub fn burgt_k(ar: f64) -> Result<f64> {
    if !(ar > 0.0 && ar < 1.0) {
        return Err(Error::InvalidInput(format!("AR must lie in (0, 1), got {ar}")));
    }
    if ar <= ar_unchecked(K_MIN) {
        return Err(Error::InvalidInput(format!("AR = {ar} is below the k = {K_MIN} limit")));
    }
    let mut hi = 50.0;
    while ar_unchecked(hi) < ar {
        hi *= 2.0;
        if hi > K_MAX {
            return Err(Error::InvalidInput(format!("AR = {ar} needs k above {K_MAX}")));
        }
    }
    bisect(|k| ar_unchecked(k) - ar, K_MIN, hi, 0.0)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub ar: f64,
    pub k: f64,
    pub lar: f64,
    pub rar: f64,
    pub min_bound: f64,
    pub max_bound: f64,
}

/// k, AR, LAR, RAR and the convex-curve bounds for one Burgt curve.
pub fn burgt_row(k: f64, tol: f64) -> Result<SweepRow> {
    let ar = burgt_ar(k)?;
    let curve = CurveModel::burgt(k)?;
    let (min_bound, max_bound) = lar_rar_bounds(ar)?;
    Ok(SweepRow {
        ar,
        k,
        lar: lar_integral(&curve, tol)?,
        rar: rar_integral(&curve, tol)?,
        min_bound,
        max_bound,
    })
}

/// LAR and RAR of the Burgt curve at each AR of the grid, with bounds.
pub fn burgt_preference_sweep(ar_grid: &[f64], tol: f64) -> Result<Vec<SweepRow>> {
    ar_grid
        .iter()
        .map(|&ar| {
            let k = burgt_k(ar)?;
            let mut row = burgt_row(k, tol)?;
            row.ar = ar;
            Ok(row)
        })
        .collect()
}

/// `lo, lo + step, …` up to and including `hi` (within step/2).
pub fn sweep_grid(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0 && lo <= hi && lo.is_finite() && hi.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "sweep needs lo <= hi and step > 0, got {lo}:{hi}:{step}"
        )));
    }
    let count = ((hi - lo) / step + 0.5).floor() as usize + 1;
    Ok((0..count).map(|i| lo + i as f64 * step).collect())
}
