//! Synthetic data drawn from a known continuous ROC curve: score samples for
//! the binary estimators and equal-population grade tables for the imputed
//! ones. Both are seeded or deterministic so results can be reproduced.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analytic::CurveModel;
use crate::empirical::ScoreSample;
use crate::imputed::{Grade, GradeTable};
use crate::roots::bisect;
use crate::{Error, Result};

/// Draws `n` non-default and `d` default scores whose population ROC is
/// `curve`.
///
/// Non-default scores are U(0, 1), so a threshold t selects a share t of
/// them; default scores are R⁻¹(V) with V ~ U(0, 1), so the share of
/// defaults below t is R(t).
pub fn sample_from_curve(curve: &CurveModel, n: usize, d: usize, seed: u64) -> Result<ScoreSample> {
    if n == 0 || d == 0 {
        return Err(Error::DegenerateSample(format!(
            "cannot draw a sample with {n} non-defaults and {d} defaults"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nondefault: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
    let default: Vec<f64> = (0..d).map(|_| curve.inverse(rng.gen::<f64>())).collect();
    ScoreSample::from_unsorted(nondefault, default)
}

/// Like [`sample_from_curve`], but each of the `n` (or `d`) equal slices of
/// the unit interval receives exactly one uniform draw before the mapping.
///
/// The sample still follows the curve, but its empirical ROC sits much closer
/// to it than an i.i.d. draw of the same size, which isolates the
/// discretisation error of the estimators from sampling noise.
pub fn stratified_sample_from_curve(
    curve: &CurveModel,
    n: usize,
    d: usize,
    seed: u64,
) -> Result<ScoreSample> {
    if n == 0 || d == 0 {
        return Err(Error::DegenerateSample(format!(
            "cannot draw a sample with {n} non-defaults and {d} defaults"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut strata = |m: usize| -> Vec<f64> {
        (0..m).map(|i| (i as f64 + rng.gen::<f64>()) / m as f64).collect()
    };
    let nondefault = strata(n);
    let default = strata(d).into_iter().map(|v| curve.inverse(v)).collect();
    ScoreSample::from_unsorted(nondefault, default)
}

/// Splits a portfolio whose ROC is `curve` into `grades` buckets of equal
/// population, worst first.
///
/// Grade i spans non-default shares [x_(i−1), x_i], where x_i solves
/// (1 − p)·x + p·R(x) = i / grades. Its PD is the default share of the bucket.
/// `population` only scales the counts.
pub fn grade_table_from_curve(
    curve: &CurveModel,
    default_rate: f64,
    grades: usize,
    population: f64,
) -> Result<GradeTable> {
    if !(default_rate > 0.0 && default_rate < 1.0) {
        return Err(Error::InvalidInput(format!(
            "default rate must lie in (0, 1), got {default_rate}"
        )));
    }
    if grades == 0 || !(population > 0.0 && population.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "need at least one grade and a positive population, got {grades} and {population}"
        )));
    }
    let p = default_rate;
    let share = |x: f64| (1.0 - p) * x + p * curve.eval(x);
    let mut cuts = Vec::with_capacity(grades + 1);
    cuts.push(0.0);
    for i in 1..grades {
        let target = i as f64 / grades as f64;
        cuts.push(bisect(|x| share(x) - target, 0.0, 1.0, 1e-15)?);
    }
    cuts.push(1.0);

    let count = population / grades as f64;
    let mut prev = f64::INFINITY;
    let table = cuts
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            let defaults = p * (curve.eval(w[1]) - curve.eval(w[0])) * population;
            // PDs of a concave curve never rise; only rounding can make a
            // later grade exceed the one before it by a few ulps.
            let pd = (defaults / count).min(prev);
            prev = pd;
            Grade::new(format!("G{}", i + 1), count, pd)
        })
        .collect();
    GradeTable::new(table)
}
