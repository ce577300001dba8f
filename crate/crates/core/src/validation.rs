//! Calibration validation: compare metrics measured on binary outcomes with
//! metrics imputed from the calibrated grade table.
//!
//! First-order agreement is judged against the AR standard deviation bound of
//! the binary sample. The second-order comparison (target preference and the
//! gap in the dominant metric) is reported either way, but is only meaningful
//! once the first-order check passes.

use serde::{Deserialize, Serialize};

use crate::report::{MetricReport, Source};
use crate::{Error, Result};

/// Default confidence multiplier on sigma_ar.
pub const DEFAULT_Z: f64 = 2.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Preference {
    /// LAR > RAR: better at flagging bad objects.
    Left,
    /// RAR > LAR: better at confirming good objects.
    Right,
    Neutral,
}

/// Left if LAR exceeds RAR by more than `band`, right if RAR exceeds LAR by
/// more than `band`, neutral otherwise.
pub fn classify_preference(lar: f64, rar: f64, band: f64) -> Result<Preference> {
    if !(band >= 0.0) {
        return Err(Error::InvalidInput(format!("band must be nonnegative, got {band}")));
    }
    Ok(if lar - rar > band {
        Preference::Left
    } else if rar - lar > band {
        Preference::Right
    } else {
        Preference::Neutral
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationVerdict {
    pub binary: MetricReport,
    pub imputed: MetricReport,
    pub z: f64,
    pub band: f64,
    /// AR (binary) − AR (imputed).
    pub ar_gap: f64,
    /// |ar_gap| ≤ z·sigma_ar of the binary report.
    pub gini_consistent: bool,
    pub preference_binary: Preference,
    pub preference_imputed: Preference,
    pub preference_consistent: bool,
    /// Side of the larger binary second-order metric.
    pub dominant_side: Preference,
    /// Dominant binary metric minus the imputed metric on the same side.
    pub dominant_metric_gap: f64,
    pub notes: Vec<String>,
}

/// Compares a binary report with an imputed one.
///
/// `band` defaults to the binary sigma_ar when `None`.
pub fn validate(
    binary: &MetricReport,
    imputed: &MetricReport,
    z: f64,
    band: Option<f64>,
) -> Result<ValidationVerdict> {
    if binary.source != Source::Binary {
        return Err(Error::InvalidInput("first report must come from binary data".into()));
    }
    if imputed.source != Source::Imputed {
        return Err(Error::InvalidInput("second report must be imputed".into()));
    }
    binary.check()?;
    imputed.check()?;
    if !(z > 0.0 && z.is_finite()) {
        return Err(Error::InvalidInput(format!("z must be positive, got {z}")));
    }
    let band = band.unwrap_or(binary.sigma_ar);
    let preference_binary = classify_preference(binary.lar, binary.rar, band)?;
    let preference_imputed = classify_preference(imputed.lar, imputed.rar, band)?;

    let ar_gap = binary.ar - imputed.ar;
    let limit = z * binary.sigma_ar;
    let gini_consistent = ar_gap.abs() <= limit;

    let dominant_side = if binary.rar > binary.lar {
        Preference::Right
    } else {
        Preference::Left
    };
    let dominant_metric_gap = match dominant_side {
        Preference::Right => binary.rar - imputed.rar,
        _ => binary.lar - imputed.lar,
    };

    let mut notes = Vec::new();
    if gini_consistent {
        notes.push(format!(
            "AR agrees: |{ar_gap:.6}| <= {z} * {:.6}",
            binary.sigma_ar
        ));
    } else {
        notes.push(format!(
            "AR disagrees: |{ar_gap:.6}| > {z} * {:.6}; second-order comparison is secondary",
            binary.sigma_ar
        ));
    }
    if preference_binary != preference_imputed {
        notes.push(format!(
            "target preference differs: binary {preference_binary:?}, imputed {preference_imputed:?}"
        ));
    }

    Ok(ValidationVerdict {
        binary: binary.clone(),
        imputed: imputed.clone(),
        z,
        band,
        ar_gap,
        gini_consistent,
        preference_binary,
        preference_imputed,
        preference_consistent: preference_binary == preference_imputed,
        dominant_side,
        dominant_metric_gap,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binary(ar: f64, lar: f64, rar: f64, sigma: f64) -> MetricReport {
        MetricReport {
            source: Source::Binary,
            ar,
            lar,
            rar,
            sigma_ar: sigma,
            sigma_ar_simplified: sigma,
            n_nondefault: 1000.0,
            n_default: 100.0,
        }
    }

    fn imputed(ar: f64, lar: f64, rar: f64) -> MetricReport {
        MetricReport {
            source: Source::Imputed,
            ar,
            lar,
            rar,
            sigma_ar: 0.0,
            sigma_ar_simplified: 0.0,
            n_nondefault: 900.0,
            n_default: 90.0,
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_preference(0.53, 0.486, 0.02).unwrap(), Preference::Left);
        assert_eq!(classify_preference(0.4, 0.4, 0.0).unwrap(), Preference::Neutral);
        assert_eq!(classify_preference(0.4, 0.4, 0.3).unwrap(), Preference::Neutral);
        assert_eq!(classify_preference(0.40, 0.41, 0.0).unwrap(), Preference::Right);
        assert!(classify_preference(0.4, 0.5, -0.1).is_err());
    }

    #[test]
    fn gini_consistency_examples() {
        let b = binary(0.60, 0.45, 0.50, 0.03);
        let ok = validate(&b, &imputed(0.61, 0.44, 0.52), 2.0, None).unwrap();
        assert!(ok.gini_consistent);
        let bad = validate(&b, &imputed(0.75, 0.6, 0.62), 2.0, None).unwrap();
        assert!(!bad.gini_consistent);
        assert!(bad.notes[0].contains("secondary"));
        assert!((bad.ar_gap + 0.15).abs() < 1e-12);
        assert_eq!(bad.dominant_side, Preference::Right);
        assert!((bad.dominant_metric_gap - (0.50 - 0.62)).abs() < 1e-12);
    }

    #[test]
    fn source_tags_are_checked() {
        let b = binary(0.6, 0.5, 0.5, 0.03);
        let i = imputed(0.6, 0.5, 0.5);
        assert!(validate(&i, &b, 2.0, None).is_err());
        assert!(validate(&b, &b, 2.0, None).is_err());
        assert!(validate(&b, &i, 0.0, None).is_err());
    }

    #[test]
    fn band_defaults_to_sigma() {
        let b = binary(0.6, 0.50, 0.52, 0.03);
        let v = validate(&b, &imputed(0.6, 0.45, 0.55), 2.0, None).unwrap();
        assert_eq!(v.band, 0.03);
        assert_eq!(v.preference_binary, Preference::Neutral);
        assert_eq!(v.preference_imputed, Preference::Right);
        assert!(!v.preference_consistent);
    }
}
