use serde::{Deserialize, Serialize};

use crate::report::{RocKind, RocPolyline};
use crate::{Error, Result};

/// Tolerance of the chord-slope convexity test for piecewise-linear curves.
pub const CONVEXITY_TOL: f64 = 1e-12;

/// A continuous ROC curve y = R(x) on [0, 1] with R(0) = 0, R(1) = 1.
///
/// The inverse uses the smallest-x convention: R⁻¹(y) = inf{x : R(x) ≥ y}.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum CurveModel {
    /// Two segments through (a, a + d); AR equals d.
    Triangular { a: f64, d: f64 },
    /// R(x) = (1 − e^(−kx)) / (1 − e^(−k)).
    Burgt { k: f64 },
    PiecewiseLinear(Polyline),
    /// The curve obtained by y' = 1 − R(x), Q = 1 − x.
    Mirrored(Box<CurveModel>),
}

/// Vertex list with cached prefix and suffix areas.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polyline {
    points: Vec<(f64, f64)>,
    #[serde(skip)]
    prefix: Vec<f64>,
    #[serde(skip)]
    suffix: Vec<f64>,
}

impl Polyline {
    fn new(points: Vec<(f64, f64)>) -> Self {
        let n = points.len();
        let seg = |i: usize| {
            let ((x0, y0), (x1, y1)) = (points[i], points[i + 1]);
            0.5 * (y0 + y1) * (x1 - x0)
        };
        let mut prefix = vec![0.0; n];
        for i in 1..n {
            prefix[i] = prefix[i - 1] + seg(i - 1);
        }
        let mut suffix = vec![0.0; n];
        for i in (0..n - 1).rev() {
            suffix[i] = suffix[i + 1] + seg(i);
        }
        Self { points, prefix, suffix }
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    /// Index of the first vertex strictly right of x, clamped into 1..n.
    fn upper(&self, x: f64) -> usize {
        self.points
            .partition_point(|p| p.0 <= x)
            .clamp(1, self.points.len() - 1)
    }

    fn eval(&self, x: f64) -> f64 {
        let j = self.upper(x);
        let ((x0, y0), (x1, y1)) = (self.points[j - 1], self.points[j]);
        if x >= x1 {
            return y1;
        }
        if x1 == x0 {
            return y1;
        }
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }

    fn inverse(&self, y: f64) -> f64 {
        let j = self.points.partition_point(|p| p.1 < y);
        if j == 0 {
            return self.points[0].0;
        }
        if j == self.points.len() {
            return 1.0;
        }
        let ((x0, y0), (x1, y1)) = (self.points[j - 1], self.points[j]);
        x0 + (x1 - x0) * (y - y0) / (y1 - y0)
    }

    fn slope(&self, x: f64) -> f64 {
        let j = self.upper(x);
        let ((x0, y0), (x1, y1)) = (self.points[j - 1], self.points[j]);
        if x1 == x0 {
            f64::INFINITY
        } else {
            (y1 - y0) / (x1 - x0)
        }
    }

    fn area_to(&self, c: f64) -> f64 {
        let j = self.upper(c);
        let (x0, y0) = self.points[j - 1];
        if c <= x0 {
            return self.prefix[j - 1];
        }
        let yc = self.eval(c);
        self.prefix[j - 1] + 0.5 * (y0 + yc) * (c - x0)
    }

    fn tail_area(&self, c: f64) -> f64 {
        let j = self.upper(c);
        let (x1, y1) = self.points[j];
        if c >= x1 {
            return self.suffix[j];
        }
        let yc = self.eval(c);
        self.suffix[j] + 0.5 * (yc + y1) * (x1 - c)
    }

    fn is_convex(&self) -> bool {
        let segs: Vec<(f64, f64)> = self
            .points
            .windows(2)
            .map(|w| (w[1].0 - w[0].0, w[1].1 - w[0].1))
            .filter(|&(dx, dy)| dx != 0.0 || dy != 0.0)
            .collect();
        segs.windows(2)
            .all(|w| w[0].0 * w[1].1 - w[0].1 * w[1].0 <= CONVEXITY_TOL)
    }
}

impl CurveModel {
    pub fn triangular(a: f64, d: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&d) || !(a >= 0.0 && a <= 1.0 - d) {
            return Err(Error::InvalidInput(format!(
                "triangular curve needs d in [0, 1] and a in [0, 1 - d], got a = {a}, d = {d}"
            )));
        }
        Ok(Self::Triangular { a, d })
    }

    pub fn burgt(k: f64) -> Result<Self> {
        if !(k > 0.0 && k.is_finite()) {
            return Err(Error::InvalidInput(format!("Burgt parameter k must be positive, got {k}")));
        }
        Ok(Self::Burgt { k })
    }

    /// A piecewise-linear curve through the given vertices.
    pub fn piecewise(points: Vec<(f64, f64)>) -> Result<Self> {
        let poly = RocPolyline::new(RocKind::Roc, points)?;
        let mut pts = poly.points;
        let last = pts.len() - 1;
        pts[0] = (0.0, 0.0);
        pts[last] = (1.0, 1.0);
        Ok(Self::PiecewiseLinear(Polyline::new(pts)))
    }

    /// R(x) = x.
    pub fn identity() -> Result<Self> {
        Self::piecewise(vec![(0.0, 0.0), (1.0, 1.0)])
    }

    /// R(x), with R(x) = 0 for x ≤ 0 and 1 for x ≥ 1.
    pub fn eval(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        if x >= 1.0 {
            return 1.0;
        }
        match self {
            Self::Triangular { a, d } => triangular_eval(*a, *d, x),
            Self::Burgt { k } => (-(-k * x).exp_m1()) / (-(-k).exp_m1()),
            Self::PiecewiseLinear(p) => p.eval(x),
            Self::Mirrored(inner) => 1.0 - inner.inverse(1.0 - x),
        }
    }

    /// R⁻¹(y) = inf{x : R(x) ≥ y}, clamped to [0, 1].
    pub fn inverse(&self, y: f64) -> f64 {
        if y <= 0.0 {
            return 0.0;
        }
        if y >= 1.0 {
            return match self {
                Self::PiecewiseLinear(p) => p.inverse(1.0),
                Self::Triangular { a, d } if *a + *d >= 1.0 => *a,
                _ => 1.0,
            };
        }
        match self {
            Self::Triangular { a, d } => {
                let (a, d) = (*a, *d);
                if y <= a + d {
                    y * a / (a + d)
                } else {
                    a + (y - a - d) * (1.0 - a) / (1.0 - a - d)
                }
            }
            Self::Burgt { k } => -(-y * (-(-k).exp_m1())).ln_1p() / k,
            Self::PiecewiseLinear(p) => p.inverse(y),
            Self::Mirrored(inner) => 1.0 - inner.eval(1.0 - y),
        }
    }

    /// Right derivative R'(x); infinite on vertical segments.
    pub fn slope(&self, x: f64) -> f64 {
        match self {
            Self::Triangular { a, d } => {
                let (a, d) = (*a, *d);
                if x < a {
                    (a + d) / a
                } else {
                    (1.0 - a - d) / (1.0 - a)
                }
            }
            Self::Burgt { k } => k * (-k * x).exp() / (-(-k).exp_m1()),
            Self::PiecewiseLinear(p) => p.slope(x),
            Self::Mirrored(inner) => 1.0 / inner.slope(inner.inverse(1.0 - x)),
        }
    }

    /// ∫₀ᶜ R(x) dx.
    pub fn area_to(&self, c: f64) -> f64 {
        let c = c.clamp(0.0, 1.0);
        match self {
            Self::Triangular { a, d } => {
                let (a, d) = (*a, *d);
                if c <= a {
                    0.5 * (a + d) / a * c * c
                } else {
                    0.5 * a * (a + d) + 0.5 * (c - a) * (a + d + triangular_eval(a, d, c))
                }
            }
            Self::Burgt { k } => {
                let kc = k * c;
                // c − (1 − e^(−kc))/k, by series when kc is small.
                let num = if kc < 1e-3 {
                    c * kc * (0.5 - kc / 6.0 + kc * kc / 24.0 - kc * kc * kc / 120.0)
                } else {
                    c + (-kc).exp_m1() / k
                };
                num / (-(-k).exp_m1())
            }
            Self::PiecewiseLinear(p) => p.area_to(c),
            // ∫₀ᶜ Q = ∫_{1−c}^1 (1 − R⁻¹(y)) dy
            Self::Mirrored(inner) => inner.upper_band_area(1.0 - c),
        }
    }

    /// ∫ᶜ¹ R(x) dx.
    pub fn tail_area(&self, c: f64) -> f64 {
        let c = c.clamp(0.0, 1.0);
        match self {
            Self::Triangular { a, d } => {
                let (a, d) = (*a, *d);
                let rc = triangular_eval(a, d, c);
                if c >= a {
                    0.5 * (1.0 - c) * (rc + 1.0)
                } else {
                    0.5 * (a - c) * (rc + a + d) + 0.5 * (1.0 - a) * (a + d + 1.0)
                }
            }
            Self::Burgt { k } => {
                // ((1 − c) − (e^(−kc) − e^(−k))/k) / (1 − e^(−k))
                let u = 1.0 - c;
                let diff = (-k).exp() * (k * u).exp_m1();
                (u - diff / k) / (-(-k).exp_m1())
            }
            Self::PiecewiseLinear(p) => p.tail_area(c),
            // ∫ᶜ¹ Q = ∫₀^{1−c} (1 − R⁻¹(y)) dy = y₀(1 − x₀) + ∫₀^{x₀} R, x₀ = R⁻¹(y₀)
            Self::Mirrored(inner) => {
                let y0 = 1.0 - c;
                let x0 = inner.inverse(y0);
                y0 * (1.0 - x0) + inner.area_to(x0)
            }
        }
    }

    /// ∫_f^1 (1 − R⁻¹(y)) dy = ∫_{x_f}^1 (R(x) − f) dx with x_f = R⁻¹(f).
    pub fn upper_band_area(&self, f: f64) -> f64 {
        let x = self.inverse(f);
        (self.tail_area(x) - f * (1.0 - x)).max(0.0)
    }

    /// AUC of the curve.
    pub fn auc(&self) -> f64 {
        self.area_to(1.0)
    }

    /// AR = 2·AUC − 1.
    pub fn ar(&self) -> f64 {
        match self {
            Self::Triangular { d, .. } => *d,
            Self::Mirrored(inner) => inner.ar(),
            _ => 2.0 * self.auc() - 1.0,
        }
    }

    /// sup{x : R(x) = 0}: length of the initial zero stretch.
    pub fn zero_prefix(&self) -> f64 {
        match self {
            Self::Triangular { .. } | Self::Burgt { .. } => 0.0,
            Self::PiecewiseLinear(p) => p
                .points
                .iter()
                .filter(|pt| pt.1 <= 0.0)
                .map(|pt| pt.0)
                .fold(0.0, f64::max),
            Self::Mirrored(inner) => inner.top_gap(),
        }
    }

    /// 1 − lim_{x→1⁻} R(x): height of a final vertical jump at x = 1.
    pub fn top_gap(&self) -> f64 {
        match self {
            Self::Triangular { .. } | Self::Burgt { .. } => 0.0,
            Self::PiecewiseLinear(p) => {
                let first_at_one = p.points.iter().find(|pt| pt.0 >= 1.0).map_or(1.0, |pt| pt.1);
                1.0 - first_at_one
            }
            Self::Mirrored(inner) => inner.zero_prefix(),
        }
    }

    /// Concavity of R (a "convex" ROC in scoring terminology: slopes never
    /// increase along the curve).
    pub fn is_convex(&self) -> bool {
        match self {
            Self::Triangular { .. } | Self::Burgt { .. } => true,
            Self::PiecewiseLinear(p) => p.is_convex(),
            Self::Mirrored(inner) => inner.is_convex(),
        }
    }

    pub fn require_convex(&self) -> Result<()> {
        if self.is_convex() {
            Ok(())
        } else {
            Err(Error::NonConvex("chord slopes increase somewhere along the curve".into()))
        }
    }

    /// Vertices of piecewise-linear curves, None for smooth families.
    pub fn vertices(&self) -> Option<Vec<(f64, f64)>> {
        match self {
            Self::Triangular { a, d } => Some(vec![(0.0, 0.0), (*a, a + d), (1.0, 1.0)]),
            Self::PiecewiseLinear(p) => Some(p.points.clone()),
            Self::Mirrored(inner) => inner.vertices().map(|v| {
                v.into_iter().rev().map(|(x, y)| (1.0 - y, 1.0 - x)).collect()
            }),
            Self::Burgt { .. } => None,
        }
    }
}

fn triangular_eval(a: f64, d: f64, x: f64) -> f64 {
    if x <= a && a > 0.0 {
        x * (a + d) / a
    } else if a >= 1.0 {
        1.0
    } else {
        x * (1.0 - a - d) / (1.0 - a) + d / (1.0 - a)
    }
}

/// Reflection y' = 1 − R(x), Q = 1 − x. Applying it twice returns the input.
pub fn mirror(curve: &CurveModel) -> CurveModel {
    match curve {
        CurveModel::Triangular { a, d } => CurveModel::Triangular { a: 1.0 - a - d, d: *d },
        CurveModel::Mirrored(inner) => (**inner).clone(),
        CurveModel::PiecewiseLinear(p) => CurveModel::PiecewiseLinear(Polyline::new(
            p.points.iter().rev().map(|&(x, y)| (1.0 - y, 1.0 - x)).collect(),
        )),
        CurveModel::Burgt { .. } => CurveModel::Mirrored(Box::new(curve.clone())),
    }
}
