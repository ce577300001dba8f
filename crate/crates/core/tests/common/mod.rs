//! Independent oracles shared by the integration tests. They are literal
//! transcriptions of the summation formulas, written for clarity over speed.

#![allow(dead_code)]

use proptest::prelude::*;
use roc_metrics::empirical::{delta, ScoreSample};
use roc_metrics::imputed::GradeTable;

/// Σ_d δ_{S_k}(Ŝ_d) for one non-default score.
fn c_term(s_k: f64, defaults: &[f64]) -> f64 {
    defaults.iter().map(|&w| delta(s_k, w)).sum()
}

/// LAR by the triple sum, O(D·N²).
pub fn lar_literal(s: &ScoreSample) -> f64 {
    let (nd, df) = (s.nondefault(), s.default_scores());
    let n = nd.len();
    let mut lauc = 0.0;
    for k in 1..=n {
        let denom = k as f64 * c_term(nd[k - 1], df);
        if denom == 0.0 {
            continue;
        }
        let num: f64 = (1..=k).map(|m| c_term(nd[m - 1], df)).sum();
        lauc += num / denom;
    }
    2.0 * lauc / n as f64 - 1.0
}

/// Σ_k δ_{S_k}(Ŝ_d) for one default score.
fn e_term(s_hat: f64, nondefaults: &[f64]) -> f64 {
    nondefaults.iter().map(|&u| delta(u, s_hat)).sum()
}

/// RAR by the triple sum, O(N·D²).
pub fn rar_literal(s: &ScoreSample) -> f64 {
    let (nd, df) = (s.nondefault(), s.default_scores());
    let dn = df.len();
    let mut rauc = 0.0;
    for d in 1..=dn {
        let denom = (dn - d + 1) as f64 * e_term(df[d - 1], nd);
        if denom == 0.0 {
            continue;
        }
        let num: f64 = (d..=dn).map(|j| e_term(df[j - 1], nd)).sum();
        rauc += num / denom;
    }
    2.0 * rauc / dn as f64 - 1.0
}

/// AR by the double Mann-Whitney sum.
pub fn ar_literal(s: &ScoreSample) -> f64 {
    let (nd, df) = (s.nondefault(), s.default_scores());
    let total: f64 = nd.iter().map(|&u| c_term(u, df)).sum();
    2.0 * total / (nd.len() * df.len()) as f64 - 1.0
}

/// Imputed (AR, LAR, RAR) from the grade counts and PDs directly: the curve
/// coordinates are rebuilt here and each sum is evaluated term by term.
pub fn imputed_literal(table: &GradeTable) -> (f64, f64, f64) {
    let grades = table.grades();
    let good: f64 = grades.iter().map(|g| g.count * (1.0 - g.pd)).sum();
    let bad: f64 = grades.iter().map(|g| g.count * g.pd).sum();
    let mut g = vec![0.0];
    let mut r = vec![0.0];
    for i in 0..grades.len() {
        let gi: f64 = grades[..=i].iter().map(|x| x.count * (1.0 - x.pd)).sum();
        let ri: f64 = grades[..=i].iter().map(|x| x.count * x.pd).sum();
        g.push(gi / good);
        r.push(ri / bad);
    }
    let n = grades.len();
    let auc: f64 = (1..=n).map(|k| 0.5 * (r[k] + r[k - 1]) * (g[k] - g[k - 1])).sum();
    let mut lauc = 0.0;
    for k in 1..=n {
        if g[k] * r[k] == 0.0 {
            continue;
        }
        let inner: f64 = (1..=k).map(|s| 0.5 * (r[s] + r[s - 1]) * (g[s] - g[s - 1])).sum();
        lauc += (g[k] - g[k - 1]) / (g[k] * r[k]) * inner;
    }
    let mut rauc = 0.0;
    for k in 1..=n {
        let denom = (1.0 - g[k - 1]) * (1.0 - r[k - 1]);
        if denom == 0.0 {
            continue;
        }
        let inner: f64 = (k..=n)
            .map(|s| (1.0 - 0.5 * (g[s] + g[s - 1])) * (r[s] - r[s - 1]))
            .sum();
        rauc += (r[k] - r[k - 1]) / denom * inner;
    }
    (2.0 * auc - 1.0, 2.0 * lauc - 1.0, 2.0 * rauc - 1.0)
}

/// Upper concave hull of points sorted by x (monotone chain). Used to turn
/// an empirical ROC into a concave one before checking the bounds.
pub fn upper_hull(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut hull: Vec<(f64, f64)> = Vec::with_capacity(points.len());
    for &p in points {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull
}

/// Samples on a small integer score grid, so ties are frequent.
pub fn tied_sample() -> impl Strategy<Value = ScoreSample> {
    (
        prop::collection::vec(0i32..12, 1..40),
        prop::collection::vec(0i32..12, 1..25),
    )
        .prop_map(|(n, d)| {
            let f = |v: Vec<i32>| v.into_iter().map(f64::from).collect::<Vec<_>>();
            ScoreSample::from_unsorted(f(n), f(d)).unwrap()
        })
}

/// Samples of continuous scores, where ties are unlikely.
pub fn continuous_sample() -> impl Strategy<Value = ScoreSample> {
    (
        prop::collection::vec(-5.0f64..5.0, 1..40),
        prop::collection::vec(-5.0f64..5.0, 1..25),
    )
        .prop_map(|(n, d)| ScoreSample::from_unsorted(n, d).unwrap())
}

/// Asserts |a − b| ≤ tol with a readable message.
pub fn assert_close(a: f64, b: f64, tol: f64, what: &str) {
    assert!((a - b).abs() <= tol, "{what}: {a} vs {b} (tol {tol})");
}
