//! First-order (AR / Gini) and second-order (LAR, RAR) discriminatory power
//! metrics for scoring and rating models.
//!
//! Metrics come from three sources:
//!
//! * [`empirical`]: binary default / non-default outcomes with model scores,
//! * [`imputed`]: a calibrated grade table (counts and PDs per grade),
//! * [`analytic`]: continuous ROC curve families, evaluated by quadrature.
//!
//! [`synth`] draws samples and grade tables from a known curve, and
//! [`validation`] compares the binary and imputed sources to check a model
//! calibration.

// `!(x > 0.0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod empirical;
mod error;
pub mod imputed;
pub mod quadrature;
pub mod report;
pub mod roots;
pub mod synth;
pub mod validation;

pub use error::{Error, Result};
pub use report::{MetricReport, RocKind, RocPolyline, Source};
