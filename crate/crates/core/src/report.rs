use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Which axis convention a polyline follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RocKind {
    /// x = share of non-defaults, y = share of defaults.
    Roc,
    /// x = share of all objects, y = share of defaults.
    Cap,
}

/// Piecewise-linear ROC or CAP curve from (0,0) to (1,1).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RocPolyline {
    pub kind: RocKind,
    pub points: Vec<(f64, f64)>,
}

impl RocPolyline {
    /// Validates endpoints and monotonicity.
    pub fn new(kind: RocKind, points: Vec<(f64, f64)>) -> Result<Self> {
        const EPS: f64 = 1e-12;
        if points.len() < 2 {
            return Err(Error::InvalidInput("polyline needs at least two points".into()));
        }
        let (x0, y0) = points[0];
        let (xn, yn) = points[points.len() - 1];
        if x0.abs() > EPS || y0.abs() > EPS {
            return Err(Error::InvalidInput(format!(
                "polyline must start at (0,0), got ({x0}, {y0})"
            )));
        }
        if (xn - 1.0).abs() > EPS || (yn - 1.0).abs() > EPS {
            return Err(Error::InvalidInput(format!(
                "polyline must end at (1,1), got ({xn}, {yn})"
            )));
        }
        for (i, w) in points.windows(2).enumerate() {
            let ((xa, ya), (xb, yb)) = (w[0], w[1]);
            if !(xa.is_finite() && ya.is_finite() && xb.is_finite() && yb.is_finite()) {
                return Err(Error::InvalidInput(format!("non-finite point near index {i}")));
            }
            if xb < xa - EPS || yb < ya - EPS {
                return Err(Error::InvalidInput(format!(
                    "polyline decreases between points {i} and {}",
                    i + 1
                )));
            }
        }
        Ok(Self { kind, points })
    }

    /// Area under the polyline (exact trapezoid rule).
    pub fn area(&self) -> f64 {
        self.points
            .windows(2)
            .map(|w| 0.5 * (w[0].1 + w[1].1) * (w[1].0 - w[0].0))
            .sum()
    }
}

/// Where a [`MetricReport`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Binary,
    Imputed,
}

/// AR, LAR and RAR from one computation source, with the AR standard
/// deviation bound and the sample sizes behind it.
///
/// For imputed reports the counts are the expected numbers of non-defaults
/// and defaults implied by the grade table, and both sigma fields are zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricReport {
    pub source: Source,
    pub ar: f64,
    pub lar: f64,
    pub rar: f64,
    pub sigma_ar: f64,
    pub sigma_ar_simplified: f64,
    pub n_nondefault: f64,
    pub n_default: f64,
}

impl MetricReport {
    pub fn check(&self) -> Result<()> {
        for (name, v) in [("ar", self.ar), ("lar", self.lar), ("rar", self.rar)] {
            if !v.is_finite() || !(-1.0..=1.0).contains(&v) {
                return Err(Error::InvalidInput(format!("{name} = {v} outside [-1, 1]")));
            }
        }
        if !(self.sigma_ar >= 0.0) || !(self.sigma_ar_simplified >= 0.0) {
            return Err(Error::InvalidInput("sigma_ar must be nonnegative".into()));
        }
        if self.source == Source::Binary && self.sigma_ar <= 0.0 {
            return Err(Error::InvalidInput(
                "binary report requires sigma_ar > 0".into(),
            ));
        }
        Ok(())
    }
}
