//! Metrics from binary default / non-default outcomes.
//!
//! Scores follow the "higher is better" convention: the worst (riskiest)
//! objects come first once sorted ascending. Ties between a non-default and a
//! default score count one half, everywhere in this module.

use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::report::{MetricReport, RocKind, RocPolyline, Source};
use crate::{Error, Result};

/// Scores of non-defaulted objects and of defaulted objects (score before
/// default), each sorted ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreSample {
    nondefault: Vec<f64>,
    default: Vec<f64>,
}

impl ScoreSample {
    /// Builds a sample from already sorted score lists.
    pub fn new(nondefault: Vec<f64>, default: Vec<f64>) -> Result<Self> {
        check_scores("non-default", &nondefault)?;
        check_scores("default", &default)?;
        for (name, v) in [("non-default", &nondefault), ("default", &default)] {
            if let Some(i) = v.windows(2).position(|w| w[1] < w[0]) {
                return Err(Error::InvalidInput(format!(
                    "{name} scores are not sorted ascending at index {}",
                    i + 1
                )));
            }
        }
        Ok(Self { nondefault, default })
    }

    /// Builds a sample from unsorted score lists, sorting them.
    pub fn from_unsorted(mut nondefault: Vec<f64>, mut default: Vec<f64>) -> Result<Self> {
        check_scores("non-default", &nondefault)?;
        check_scores("default", &default)?;
        nondefault.sort_by(f64::total_cmp);
        default.sort_by(f64::total_cmp);
        Ok(Self { nondefault, default })
    }

    pub fn nondefault(&self) -> &[f64] {
        &self.nondefault
    }

    pub fn default_scores(&self) -> &[f64] {
        &self.default
    }

    /// N, the number of non-defaults.
    pub fn n_nondefault(&self) -> usize {
        self.nondefault.len()
    }

    /// D, the number of defaults.
    pub fn n_default(&self) -> usize {
        self.default.len()
    }

    /// Sample default rate D / (D + N).
    pub fn default_rate(&self) -> f64 {
        let d = self.default.len() as f64;
        d / (d + self.nondefault.len() as f64)
    }

    /// The same objects with every score negated (reverses the ranking).
    pub fn negated(&self) -> Self {
        let flip = |v: &[f64]| v.iter().rev().map(|s| -s).collect::<Vec<_>>();
        Self {
            nondefault: flip(&self.nondefault),
            default: flip(&self.default),
        }
    }
}

fn check_scores(name: &str, v: &[f64]) -> Result<()> {
    if v.is_empty() {
        return Err(Error::DegenerateSample(format!("no {name} observations")));
    }
    if let Some(i) = v.iter().position(|s| !s.is_finite()) {
        return Err(Error::InvalidInput(format!("{name} score at index {i} is not finite")));
    }
    Ok(())
}

/// Half-credit comparison: 1 if `u > w`, 1/2 if equal, 0 otherwise.
pub fn delta(u: f64, w: f64) -> f64 {
    if u > w {
        1.0
    } else if u == w {
        0.5
    } else {
        0.0
    }
}

/// For each score in `probe` (sorted), Σ_w δ_probe(w) over the sorted `others`:
/// the number of `others` strictly below plus half the number equal.
fn below_counts(probe: &[f64], others: &[f64]) -> Vec<f64> {
    let mut lt = 0usize;
    let mut le = 0usize;
    probe
        .iter()
        .map(|&s| {
            while lt < others.len() && others[lt] < s {
                lt += 1;
            }
            le = le.max(lt);
            while le < others.len() && others[le] <= s {
                le += 1;
            }
            lt as f64 + 0.5 * (le - lt) as f64
        })
        .collect()
}

/// For each score in `probe` (sorted), Σ_w δ_w(probe) over the sorted `others`:
/// the number of `others` strictly above plus half the number equal.
fn above_counts(probe: &[f64], others: &[f64]) -> Vec<f64> {
    // below + equal/2 + (above + equal/2) = m
    let m = others.len() as f64;
    below_counts(probe, others).into_iter().map(|b| m - b).collect()
}

/// Empirical ROC: x = n/N, y = share of defaults ranked below the n-th
/// non-default (ties count half).
///
/// A final (1, 1) point is appended when the last non-default still has
/// defaults above or tied with it, closing the curve.
pub fn empirical_roc(sample: &ScoreSample) -> RocPolyline {
    let n = sample.n_nondefault() as f64;
    let d = sample.n_default() as f64;
    let counts = below_counts(&sample.nondefault, &sample.default);
    let mut points = Vec::with_capacity(counts.len() + 2);
    points.push((0.0, 0.0));
    for (i, c) in counts.iter().enumerate() {
        points.push(((i + 1) as f64 / n, c / d));
    }
    if points.last().map(|p| p.1) != Some(1.0) {
        points.push((1.0, 1.0));
    }
    RocPolyline { kind: RocKind::Roc, points }
}

/// Mann-Whitney AUC and AR = 2·AUC − 1.
pub fn ar_mann_whitney(sample: &ScoreSample) -> (f64, f64) {
    let n = sample.n_nondefault() as f64;
    let d = sample.n_default() as f64;
    // Half-integer counts sum exactly, so AR is formed from an exact
    // numerator and flips sign exactly when the ranking is reversed.
    let total: f64 = below_counts(&sample.nondefault, &sample.default).iter().sum();
    let pairs = n * d;
    (total / pairs, (2.0 * total - pairs) / pairs)
}

/// Left-hand accuracy ratio from binary data.
///
/// With c_k = Σ_d δ_{S_k}(Ŝ_d), LAUC = (1/N)·Σ_k (Σ_{n≤k} c_n) / (k·c_k), where
/// a term with c_k = 0 contributes 0. Prefix sums make this O(N + D) after
/// sorting.
pub fn lar_discrete(sample: &ScoreSample) -> f64 {
    let c = below_counts(&sample.nondefault, &sample.default);
    let mut prefix = 0.0;
    let mut lauc = 0.0;
    for (i, &ck) in c.iter().enumerate() {
        prefix += ck;
        if ck != 0.0 {
            lauc += prefix / ((i + 1) as f64 * ck);
        }
    }
    2.0 * lauc / c.len() as f64 - 1.0
}

/// Right-hand accuracy ratio from binary data.
///
/// With e_d = Σ_k δ_{S_k}(Ŝ_d) (non-defaults ranked above the d-th default),
/// RAUC = (1/D)·Σ_d (Σ_{j≥d} e_j) / ((D − d + 1)·e_d), where a term with
/// e_d = 0 contributes 0. Suffix sums make this O(N + D) after sorting.
pub fn rar_discrete(sample: &ScoreSample) -> f64 {
    let e = above_counts(&sample.default, &sample.nondefault);
    let dn = e.len();
    let mut suffix = 0.0;
    let mut rauc = 0.0;
    for (i, &ed) in e.iter().enumerate().rev() {
        suffix += ed;
        if ed != 0.0 {
            rauc += suffix / ((dn - i) as f64 * ed);
        }
    }
    2.0 * rauc / dn as f64 - 1.0
}

/// Objects in score order grouped into blocks of equal score, as
/// (non-default count, default count) per block.
fn tie_blocks(sample: &ScoreSample) -> Vec<(usize, usize)> {
    let (nd, df) = (&sample.nondefault, &sample.default);
    let (mut i, mut j) = (0usize, 0usize);
    let mut blocks = Vec::new();
    while i < nd.len() || j < df.len() {
        let s = match (nd.get(i), df.get(j)) {
            (Some(&a), Some(&b)) => a.min(b),
            (Some(&a), None) => a,
            (None, Some(&b)) => b,
            (None, None) => unreachable!(),
        };
        let (i0, j0) = (i, j);
        while i < nd.len() && nd[i] == s {
            i += 1;
        }
        while j < df.len() && df[j] == s {
            j += 1;
        }
        blocks.push((i - i0, j - j0));
    }
    blocks
}

/// Cumulative accuracy profile over all N + D objects sorted by score.
///
/// x = i/(N+D); y = share of defaults among the first i objects. Inside a
/// block of tied scores holding m non-defaults and q defaults every object
/// carries q/(m+q) of a default, which keeps the CAP area consistent with the
/// half-credit Mann-Whitney AUC.
pub fn cap_curve(sample: &ScoreSample) -> RocPolyline {
    let total = (sample.n_nondefault() + sample.n_default()) as f64;
    let d = sample.n_default() as f64;
    let mut points = Vec::with_capacity(total as usize + 1);
    points.push((0.0, 0.0));
    let mut seen = 0usize;
    let mut defaults_so_far = 0.0;
    for (m, q) in tie_blocks(sample) {
        let share = q as f64 / (m + q) as f64;
        for k in 1..=(m + q) {
            points.push((
                (seen + k) as f64 / total,
                (defaults_so_far + share * k as f64) / d,
            ));
        }
        seen += m + q;
        defaults_so_far += q as f64;
    }
    // Exact closure against accumulated rounding.
    if let Some(last) = points.last_mut() {
        *last = (1.0, 1.0);
    }
    RocPolyline { kind: RocKind::Cap, points }
}

/// AR from a CAP curve: (2·∫C(x)dx − 1) / (1 − D), with D the default share.
pub fn ar_from_cap(cap: &RocPolyline, d_share: f64) -> Result<f64> {
    if cap.kind != RocKind::Cap {
        return Err(Error::InvalidInput("ar_from_cap expects a CAP curve".into()));
    }
    if !(d_share > 0.0 && d_share < 1.0) {
        return Err(Error::InvalidInput(format!(
            "default share must lie in (0, 1), got {d_share}"
        )));
    }
    Ok((2.0 * cap.area() - 1.0) / (1.0 - d_share))
}

/// Observed default rate in `n_buckets` consecutive slices of the population
/// sorted from worst to best score, as (slice midpoint on the CAP x axis,
/// default rate). Tied blocks spread their defaults evenly across members.
pub fn pd_profile(sample: &ScoreSample, n_buckets: usize) -> Result<Vec<(f64, f64)>> {
    let total = sample.n_nondefault() + sample.n_default();
    if n_buckets == 0 || n_buckets > total {
        return Err(Error::InvalidInput(format!(
            "bucket count must lie in 1..={total}, got {n_buckets}"
        )));
    }
    let mut weights = Vec::with_capacity(total);
    for (m, q) in tie_blocks(sample) {
        let share = q as f64 / (m + q) as f64;
        weights.extend(std::iter::repeat_n(share, m + q));
    }
    let bounds = |b: usize| b * total / n_buckets;
    Ok((0..n_buckets)
        .map(|b| {
            let (lo, hi) = (bounds(b), bounds(b + 1));
            let rate = weights[lo..hi].iter().sum::<f64>() / (hi - lo) as f64;
            ((lo + hi) as f64 / (2 * total) as f64, rate)
        })
        .collect())
}

/// Which form of the AR standard-deviation bound to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaForm {
    /// sqrt(((2N+1)(1−AR²) − (N−D)(1−AR)²) / (3·N·D))
    Exact,
    /// sqrt((1 + 2AR − 3AR²) / (3·D)), valid for N ≫ D ≫ 1.
    Simplified,
}

/// Conservative upper bound on the standard deviation of a sample AR.
///
/// N is the number of non-defaults and D the number of defaults.
pub fn sigma_ar(ar: f64, n_nondefault: u64, n_default: u64, form: SigmaForm) -> Result<f64> {
    if n_nondefault == 0 || n_default == 0 {
        return Err(Error::InvalidInput("sigma_ar needs N >= 1 and D >= 1".into()));
    }
    if !(-1.0..=1.0).contains(&ar) {
        return Err(Error::InvalidInput(format!("AR must lie in [-1, 1], got {ar}")));
    }
    let (n, d) = (n_nondefault as f64, n_default as f64);
    let radicand = match form {
        SigmaForm::Exact => {
            ((2.0 * n + 1.0) * (1.0 - ar * ar) - (n - d) * (1.0 - ar).powi(2)) / (3.0 * n * d)
        }
        SigmaForm::Simplified => (1.0 + 2.0 * ar - 3.0 * ar * ar) / (3.0 * d),
    };
    if radicand < -1e-14 {
        return Err(Error::InvalidInput(format!(
            "negative sigma_ar radicand {radicand} for AR = {ar}, N = {n_nondefault}, D = {n_default}"
        )));
    }
    Ok(radicand.max(0.0).sqrt())
}

/// Uniform random subsample without replacement of at most `max_nondefault`
/// non-defaults and `max_default` defaults, re-sorted.
///
/// The generator is ChaCha8 seeded through `seed_from_u64(seed)`. Indices come
/// from a partial Fisher-Yates shuffle in which position `i` of a list of
/// length `len` swaps with `i + ((u64 · (len − i)) >> 64)`, `u64` being the
/// next 64-bit output. The non-default list is thinned first, then the default
/// list, from the same stream.
pub fn thin(
    sample: &ScoreSample,
    max_nondefault: usize,
    max_default: usize,
    seed: u64,
) -> Result<ScoreSample> {
    if max_nondefault < 2 || max_default < 2 {
        return Err(Error::InvalidInput("thinning limits must be at least 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nondefault = subsample(&sample.nondefault, max_nondefault, &mut rng);
    let default = subsample(&sample.default, max_default, &mut rng);
    Ok(ScoreSample { nondefault, default })
}

fn subsample(scores: &[f64], limit: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    if scores.len() <= limit {
        return scores.to_vec();
    }
    let mut pool = scores.to_vec();
    let len = pool.len();
    for i in 0..limit {
        let span = (len - i) as u128;
        let j = i + ((rng.next_u64() as u128 * span) >> 64) as usize;
        pool.swap(i, j);
    }
    pool.truncate(limit);
    pool.sort_by(f64::total_cmp);
    pool
}

/// AR, LAR, RAR and both sigma forms for a binary sample.
///
/// The sigma bound assumes AR ≥ 0. A model with negative AR is the reversal
/// of one with AR = |AR| and the same estimator variance, so sigma is
/// evaluated at |AR|.
pub fn binary_report(sample: &ScoreSample) -> Result<MetricReport> {
    let (_, ar) = ar_mann_whitney(sample);
    let (n, d) = (sample.n_nondefault() as u64, sample.n_default() as u64);
    Ok(MetricReport {
        source: Source::Binary,
        ar,
        lar: lar_discrete(sample),
        rar: rar_discrete(sample),
        sigma_ar: sigma_ar(ar.abs(), n, d, SigmaForm::Exact)?,
        sigma_ar_simplified: sigma_ar(ar.abs(), n, d, SigmaForm::Simplified)?,
        n_nondefault: n as f64,
        n_default: d as f64,
    })
}
