//! Report documents written by the CLI and read back by `validate`.
//!
//! Every number passes through [`round12`] before it is stored, so the JSON
//! text is fixed by the value alone and re-reading a report gives back exactly
//! the numbers that were written.

use serde::{Deserialize, Serialize};

use roc_metrics::analytic::{SweepRow, TrapezoidDecomposition};
use roc_metrics::validation::{Preference, ValidationVerdict};
use roc_metrics::{MetricReport, RocPolyline, Source};

pub const SCHEMA_VERSION: u32 = 1;

/// Rounds to 12 significant digits. Zero (including −0) becomes +0.
pub fn round12(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    if !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

/// Decimal text of [`round12`]`(x)`, independent of locale.
pub fn fmt12(x: f64) -> String {
    format!("{}", round12(x))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metrics {
    pub ar: f64,
    pub lar: f64,
    pub rar: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sigma {
    pub exact: f64,
    pub simplified: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counts {
    /// Non-defaults (expected non-defaults for imputed reports).
    pub n: f64,
    /// Defaults (expected defaults for imputed reports).
    pub d: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Curves {
    pub roc: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<Vec<[f64; 2]>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZoneOut {
    pub name: String,
    pub from: f64,
    pub to: f64,
    pub pd_multiplier: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Decomposition {
    pub a_lar: f64,
    pub a_rar: f64,
    pub mu_l: f64,
    pub mu_r: f64,
    pub a_factor: f64,
    pub a: f64,
    pub b: f64,
    pub indifference: f64,
    pub vertices: Vec<[f64; 2]>,
    pub zones: Vec<ZoneOut>,
    pub bounds: Bounds,
    pub cross_check_gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    pub min: f64,
    pub max: f64,
}

/// The metric part of a report, as embedded in a verdict.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportBody {
    pub source: String,
    pub metrics: Metrics,
    pub sigma_ar: Sigma,
    pub counts: Counts,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub z: f64,
    pub band: f64,
    pub ar_gap: f64,
    pub gini_consistent: bool,
    pub preference_binary: Preference,
    pub preference_imputed: Preference,
    pub preference_consistent: bool,
    pub dominant_side: Preference,
    pub dominant_metric_gap: f64,
    pub notes: Vec<String>,
    pub binary: ReportBody,
    pub imputed: ReportBody,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepOut {
    pub ar: f64,
    pub k: f64,
    pub lar: f64,
    pub rar: f64,
    pub min_bound: f64,
    pub max_bound: f64,
}

/// Top-level JSON document. Field order here is the key order on output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub schema_version: u32,
    pub source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metrics: Option<Metrics>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_ar: Option<Sigma>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counts: Option<Counts>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curves: Option<Curves>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Decomposition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<SweepOut>>,
}

impl Document {
    pub fn new(source: &str) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            source: source.to_string(),
            metrics: None,
            sigma_ar: None,
            counts: None,
            curves: None,
            decomposition: None,
            verdict: None,
            rows: None,
        }
    }

    pub fn from_report(r: &MetricReport) -> Self {
        let body = ReportBody::from(r);
        Self {
            metrics: Some(body.metrics),
            sigma_ar: Some(body.sigma_ar),
            counts: Some(body.counts),
            ..Self::new(&body.source)
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}

fn source_tag(s: Source) -> &'static str {
    match s {
        Source::Binary => "binary",
        Source::Imputed => "imputed",
    }
}

impl From<&MetricReport> for ReportBody {
    fn from(r: &MetricReport) -> Self {
        Self {
            source: source_tag(r.source).to_string(),
            metrics: Metrics { ar: round12(r.ar), lar: round12(r.lar), rar: round12(r.rar) },
            sigma_ar: Sigma {
                exact: round12(r.sigma_ar),
                simplified: round12(r.sigma_ar_simplified),
            },
            counts: Counts { n: round12(r.n_nondefault), d: round12(r.n_default) },
        }
    }
}

pub fn points(poly: &RocPolyline) -> Vec<[f64; 2]> {
    poly.points.iter().map(|&(x, y)| [round12(x), round12(y)]).collect()
}

impl Decomposition {
    pub fn new(t: &TrapezoidDecomposition, bounds: (f64, f64)) -> Self {
        Self {
            a_lar: round12(t.a_lar),
            a_rar: round12(t.a_rar),
            mu_l: round12(t.mu_l),
            mu_r: round12(t.mu_r),
            a_factor: round12(t.a_factor),
            a: round12(t.cap_a),
            b: round12(t.cap_b),
            indifference: round12(t.indifference),
            vertices: t.vertices().iter().map(|&(x, y)| [round12(x), round12(y)]).collect(),
            zones: t
                .zones
                .iter()
                .map(|z| ZoneOut {
                    name: z.name.clone(),
                    from: round12(z.from),
                    to: round12(z.to),
                    pd_multiplier: round12(z.pd_multiplier),
                })
                .collect(),
            bounds: Bounds { min: round12(bounds.0), max: round12(bounds.1) },
            cross_check_gap: round12(t.cross_check_gap),
        }
    }
}

impl From<&ValidationVerdict> for Verdict {
    fn from(v: &ValidationVerdict) -> Self {
        Self {
            z: round12(v.z),
            band: round12(v.band),
            ar_gap: round12(v.ar_gap),
            gini_consistent: v.gini_consistent,
            preference_binary: v.preference_binary,
            preference_imputed: v.preference_imputed,
            preference_consistent: v.preference_consistent,
            dominant_side: v.dominant_side,
            dominant_metric_gap: round12(v.dominant_metric_gap),
            notes: v.notes.clone(),
            binary: ReportBody::from(&v.binary),
            imputed: ReportBody::from(&v.imputed),
        }
    }
}

impl From<&SweepRow> for SweepOut {
    fn from(r: &SweepRow) -> Self {
        Self {
            ar: round12(r.ar),
            k: round12(r.k),
            lar: round12(r.lar),
            rar: round12(r.rar),
            min_bound: round12(r.min_bound),
            max_bound: round12(r.max_bound),
        }
    }
}
