//! Traffic-light multipliers and the trapezoidal representation of a ROC
//! curve given (AR, LAR, RAR).

use serde::{Deserialize, Serialize};

use super::triangle::{lar_rar_bounds, solve_triangle_a, Side};
use crate::roots::bisect;
use crate::{Error, Result};

/// Agreement required between the direct and the unified-equation routes to
/// the multipliers before a discrepancy is reported.
pub const CROSS_CHECK_TOL: f64 = 1e-6;

/// Upper end of the multiplier bracket for the unified equation.
const MU_MAX: f64 = 1e12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Multipliers {
    pub a_lar: f64,
    pub a_rar: f64,
    /// PD inflation of the left ("red") zone.
    pub mu_l: f64,
    /// PD deflation of the right ("green") zone.
    pub mu_r: f64,
    /// max |μ − μ'| between the vertex route and the unified-equation route.
    pub cross_check_gap: f64,
}

impl Multipliers {
    pub fn cross_check_ok(&self) -> bool {
        self.cross_check_gap <= CROSS_CHECK_TOL
    }
}

/// μ_L = (a(LAR) + AR)/a(LAR) and μ_R = (1 − a(RAR))/(1 − a(RAR) − AR), where
/// a(·) are the triangular vertex abscissae matching each metric.
///
/// The unified equation is solved as well and the larger difference between
/// the two routes is stored in `cross_check_gap`.
pub fn multipliers(ar: f64, lar: f64, rar: f64) -> Result<Multipliers> {
    let a_lar = solve_triangle_a(lar, ar, Side::Left)?;
    let a_rar = solve_triangle_a(rar, ar, Side::Right)?;
    let mu_l = (a_lar + ar) / a_lar;
    let mu_r = (1.0 - a_rar) / (1.0 - a_rar - ar);
    let (mu_l_alt, mu_r_alt) = multipliers_unified(ar, lar, rar)?;
    let gap = (mu_l - mu_l_alt).abs().max((mu_r - mu_r_alt).abs());
    Ok(Multipliers { a_lar, a_rar, mu_l, mu_r, cross_check_gap: gap })
}

/// Right-hand side of the unified multiplier equation, written in μ:
///
/// ```text
/// s(μ) = AR/(μ−1)·ln(AR/(μ−1))
///        − (μ−1−AR)/(μ(1−AR)−1) · AR·μ/(μ−1)·ln(AR·μ/(μ−1))
/// ```
///
/// The same function gives LAR from μ_L and RAR from μ_R. Defined for
/// μ > 1/(1 − AR).
pub fn unified_metric(mu: f64, ar: f64) -> f64 {
    let t1 = ar / (mu - 1.0);
    let t2 = ar * mu / (mu - 1.0);
    let factor = (mu - 1.0 - ar) / (mu * (1.0 - ar) - 1.0);
    t1 * t1.ln() - factor * t2 * t2.ln()
}

/// Solves the unified equation for μ_L (from LAR) and μ_R (from RAR).
pub fn multipliers_unified(ar: f64, lar: f64, rar: f64) -> Result<(f64, f64)> {
    let (min, max) = lar_rar_bounds(ar)?;
    let solve = |metric: f64, name: &'static str| {
        if !(metric > min && metric < max) {
            return Err(Error::InfeasibleMetric { metric: name, value: metric, ar, min, max });
        }
        let lo = 1.0 / (1.0 - ar) * (1.0 + 1e-12);
        // s(μ) rises from the lower bound towards the upper bound as μ grows.
        bisect(|mu| unified_metric(mu, ar) - metric, lo, MU_MAX, 0.0)
    };
    Ok((solve(lar, "LAR")?, solve(rar, "RAR")?))
}

/// One traffic-light zone along the non-default axis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Zone {
    pub name: String,
    pub from: f64,
    pub to: f64,
    /// Zone PD as a multiple of the portfolio PD (asymptotic as PD → 0).
    pub pd_multiplier: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrapezoidDecomposition {
    pub ar: f64,
    pub lar: f64,
    pub rar: f64,
    pub a_lar: f64,
    pub a_rar: f64,
    pub mu_l: f64,
    pub mu_r: f64,
    /// A = AR·(1 + 1/(μ_L − 1) + 1/(μ_R − 1)).
    pub a_factor: f64,
    /// Lower break a of the trapezoid.
    pub cap_a: f64,
    /// Upper break b of the trapezoid.
    pub cap_b: f64,
    /// Length of the indifference segment, sqrt(1 − A) = 1 − a − b.
    pub indifference: f64,
    pub vertex_low: (f64, f64),
    pub vertex_high: (f64, f64),
    pub zones: Vec<Zone>,
    pub cross_check_gap: f64,
}

impl TrapezoidDecomposition {
    /// Polyline (0,0) → low vertex → high vertex → (1,1).
    pub fn vertices(&self) -> [(f64, f64); 4] {
        [(0.0, 0.0), self.vertex_low, self.vertex_high, (1.0, 1.0)]
    }

    /// Area under the trapezoidal curve.
    pub fn area(&self) -> f64 {
        self.vertices()
            .windows(2)
            .map(|w| 0.5 * (w[0].1 + w[1].1) * (w[1].0 - w[0].0))
            .sum()
    }
}

/// Trapezoid with breaks a = a(LAR)/(1 + I), b = (1 − a(RAR))/(1 + I) and
/// indifference length I = sqrt(1 − A).
///
/// Fails with [`Error::TriangularDegenerate`] when A ≥ 1: the middle segment
/// vanishes and the curve is triangular.
pub fn trapezoid_decomposition(ar: f64, lar: f64, rar: f64) -> Result<TrapezoidDecomposition> {
    let m = multipliers(ar, lar, rar)?;
    let lhs = 1.0 / (m.mu_l - 1.0) + 1.0 / (m.mu_r - 1.0);
    let a_factor = ar * (1.0 + lhs);
    if a_factor >= 1.0 - 1e-12 {
        return Err(Error::TriangularDegenerate {
            a_value: a_factor,
            lhs,
            rhs: (1.0 - ar) / ar,
        });
    }
    let indifference = (1.0 - a_factor).sqrt();
    let cap_a = m.a_lar / (1.0 + indifference);
    let cap_b = (1.0 - m.a_rar) / (1.0 + indifference);
    let zones = vec![
        Zone { name: "red".into(), from: 0.0, to: m.a_lar, pd_multiplier: m.mu_l },
        Zone { name: "yellow".into(), from: m.a_lar, to: m.a_rar, pd_multiplier: 1.0 },
        Zone { name: "green".into(), from: m.a_rar, to: 1.0, pd_multiplier: 1.0 / m.mu_r },
    ];
    Ok(TrapezoidDecomposition {
        ar,
        lar,
        rar,
        a_lar: m.a_lar,
        a_rar: m.a_rar,
        mu_l: m.mu_l,
        mu_r: m.mu_r,
        a_factor,
        cap_a,
        cap_b,
        indifference,
        vertex_low: (cap_a, cap_a * m.mu_l),
        vertex_high: (1.0 - cap_b, 1.0 - cap_b / m.mu_r),
        zones,
        cross_check_gap: m.cross_check_gap,
    })
}
