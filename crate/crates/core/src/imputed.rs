//! Metrics imputed from a calibrated grade table, without default outcomes.
//!
//! Each grade contributes n·(1−pd) expected non-defaults and n·pd expected
//! defaults. Ordering the grades from the highest PD down gives the imputed
//! ROC curve.

use serde::{Deserialize, Serialize};

use crate::report::{MetricReport, RocKind, RocPolyline, Source};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Grade {
    pub label: String,
    /// Number (or population share) of objects in the grade.
    pub count: f64,
    /// Calibrated probability of default, strictly inside (0, 1).
    pub pd: f64,
}

impl Grade {
    pub fn new(label: impl Into<String>, count: f64, pd: f64) -> Self {
        Self { label: label.into(), count, pd }
    }
}

/// Rating grades ordered by non-increasing PD (worst grade first).
#[derive(Debug, Clone, PartialEq)]
pub struct GradeTable {
    grades: Vec<Grade>,
}

impl GradeTable {
    pub fn new(grades: Vec<Grade>) -> Result<Self> {
        if grades.is_empty() {
            return Err(Error::InvalidInput("grade table is empty".into()));
        }
        for (i, g) in grades.iter().enumerate() {
            if !(g.count.is_finite() && g.count >= 0.0) {
                return Err(Error::InvalidInput(format!(
                    "grade {} ({}): count must be a nonnegative number, got {}",
                    i + 1,
                    g.label,
                    g.count
                )));
            }
            if !(g.pd > 0.0 && g.pd < 1.0) {
                return Err(Error::InvalidInput(format!(
                    "grade {} ({}): pd must lie strictly inside (0, 1), got {}",
                    i + 1,
                    g.label,
                    g.pd
                )));
            }
        }
        if let Some(i) = grades.windows(2).position(|w| w[1].pd > w[0].pd) {
            return Err(Error::InvalidInput(format!(
                "grades must be ordered by descending pd: grade {} ({}) has pd {} above the preceding {}",
                i + 2,
                grades[i + 1].label,
                grades[i + 1].pd,
                grades[i].pd
            )));
        }
        if !grades.iter().any(|g| g.count > 0.0) {
            return Err(Error::InvalidInput("every grade has zero count".into()));
        }
        Ok(Self { grades })
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    /// Expected non-defaults Σ n·(1−pd).
    pub fn expected_nondefaults(&self) -> f64 {
        self.grades.iter().map(|g| g.count * (1.0 - g.pd)).sum()
    }

    /// Expected defaults Σ n·pd.
    pub fn expected_defaults(&self) -> f64 {
        self.grades.iter().map(|g| g.count * g.pd).sum()
    }
}

/// Imputed ROC: g_k = cumulative expected non-defaults share, R_k = cumulative
/// expected defaults share, starting at (0, 0). Zero-count grades repeat the
/// previous point.
pub fn imputed_roc(table: &GradeTable) -> Result<RocPolyline> {
    let total_good = table.expected_nondefaults();
    let total_bad = table.expected_defaults();
    if !(total_good > 0.0 && total_bad > 0.0) {
        return Err(Error::InvalidInput(
            "grade table implies no expected defaults or no expected non-defaults".into(),
        ));
    }
    let mut points = Vec::with_capacity(table.grades.len() + 1);
    points.push((0.0, 0.0));
    let (mut good, mut bad) = (0.0, 0.0);
    for g in &table.grades {
        good += g.count * (1.0 - g.pd);
        bad += g.count * g.pd;
        points.push((good / total_good, bad / total_bad));
    }
    if let Some(last) = points.last_mut() {
        *last = (1.0, 1.0);
    }
    Ok(RocPolyline { kind: RocKind::Roc, points })
}

/// Trapezoid AUC of the imputed ROC, and AR_imp = 2·AUC_imp − 1.
pub fn ar_imputed(table: &GradeTable) -> Result<f64> {
    Ok(2.0 * imputed_roc(table)?.area() - 1.0)
}

/// LAUC_imp = Σ_k (g_k − g_{k−1}) / (g_k·R_k) · Σ_{s≤k} (R_s + R_{s−1})/2 · (g_s − g_{s−1}),
/// skipping terms with g_k·R_k = 0. Returns LAR_imp = 2·LAUC_imp − 1.
pub fn lar_imputed(table: &GradeTable) -> Result<f64> {
    let roc = imputed_roc(table)?;
    Ok(2.0 * lauc_on_points(&roc.points) - 1.0)
}

/// RAUC_imp = Σ_k (R_k − R_{k−1}) / ((1 − g_{k−1})(1 − R_{k−1}))
///            · Σ_{s≥k} (1 − (g_s + g_{s−1})/2) · (R_s − R_{s−1}),
/// skipping terms whose denominator vanishes. Returns RAR_imp = 2·RAUC_imp − 1.
pub fn rar_imputed(table: &GradeTable) -> Result<f64> {
    let roc = imputed_roc(table)?;
    Ok(2.0 * rauc_on_points(&roc.points) - 1.0)
}

fn lauc_on_points(p: &[(f64, f64)]) -> f64 {
    let mut area = 0.0;
    let mut lauc = 0.0;
    for w in p.windows(2) {
        let ((g0, r0), (g1, r1)) = (w[0], w[1]);
        area += 0.5 * (r1 + r0) * (g1 - g0);
        let denom = g1 * r1;
        if denom != 0.0 {
            lauc += (g1 - g0) / denom * area;
        }
    }
    lauc
}

fn rauc_on_points(p: &[(f64, f64)]) -> f64 {
    // tail[k] = Σ_{s≥k} (1 − (g_s + g_{s−1})/2)·(R_s − R_{s−1}), built right to left.
    let mut tail = 0.0;
    let mut rauc = 0.0;
    for w in p.windows(2).rev() {
        let ((g0, r0), (g1, r1)) = (w[0], w[1]);
        tail += (1.0 - 0.5 * (g1 + g0)) * (r1 - r0);
        let denom = (1.0 - g0) * (1.0 - r0);
        if denom != 0.0 {
            rauc += (r1 - r0) / denom * tail;
        }
    }
    rauc
}

/// Imputed AR, LAR and RAR as a report. Counts are the expected
/// non-default and default totals; sigma fields are zero.
pub fn imputed_report(table: &GradeTable) -> Result<MetricReport> {
    let roc = imputed_roc(table)?;
    Ok(MetricReport {
        source: Source::Imputed,
        ar: 2.0 * roc.area() - 1.0,
        lar: 2.0 * lauc_on_points(&roc.points) - 1.0,
        rar: 2.0 * rauc_on_points(&roc.points) - 1.0,
        sigma_ar: 0.0,
        sigma_ar_simplified: 0.0,
        n_nondefault: table.expected_nondefaults(),
        n_default: table.expected_defaults(),
    })
}
