mod common;

use common::assert_close;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use roc_metrics::analytic::*;
use roc_metrics::Error;

/// Random concave polyline from (0,0) to (1,1): random widths and slopes,
/// slopes sorted descending, then rescaled so the heights sum to one.
fn random_convex_curve(rng: &mut impl Rng, segments: usize) -> CurveModel {
    let widths: Vec<f64> = (0..segments).map(|_| rng.gen_range(0.05..1.0)).collect();
    let total: f64 = widths.iter().sum();
    let mut slopes: Vec<f64> = (0..segments).map(|_| rng.gen_range(0.05..8.0)).collect();
    slopes.sort_by(|a, b| b.total_cmp(a));
    let rise: f64 = widths.iter().zip(&slopes).map(|(w, s)| w / total * s).sum();
    let mut points = vec![(0.0, 0.0)];
    let (mut x, mut y) = (0.0, 0.0);
    for (w, s) in widths.iter().zip(&slopes) {
        x += w / total;
        y += w / total * s / rise;
        points.push((x, y));
    }
    CurveModel::piecewise(points).unwrap()
}

fn convex_curve() -> impl Strategy<Value = CurveModel> {
    (any::<u64>(), 1usize..8).prop_map(|(seed, n)| {
        random_convex_curve(&mut ChaCha8Rng::seed_from_u64(seed), n)
    })
}

/// A random (AR, LAR, RAR) strictly inside the bounds.
fn feasible_triple(rng: &mut impl Rng) -> (f64, f64, f64) {
    let ar = rng.gen_range(0.05..0.95);
    let (min, max) = lar_rar_bounds(ar).unwrap();
    let pick = |u: f64| min + (0.02 + 0.96 * u) * (max - min);
    (ar, pick(rng.gen()), pick(rng.gen()))
}

#[test]
fn triangle_round_trip_on_grid() {
    for i in 0..20 {
        let d = 0.02 + 0.96 * i as f64 / 19.0;
        for j in 0..20 {
            let a = (1.0 - d) * (0.01 + 0.98 * j as f64 / 19.0);
            let l = triangle_lar(a, d).unwrap();
            let r = triangle_rar(a, d).unwrap();
            assert_close(solve_triangle_a(l, d, Side::Left).unwrap(), a, 1e-8, "left");
            assert_close(solve_triangle_a(r, d, Side::Right).unwrap(), a, 1e-8, "right");
        }
    }
}

#[test]
fn triangle_closed_forms_match_quadrature() {
    for i in 1..20 {
        let d = i as f64 / 20.0;
        for j in 1..20 {
            let a = (1.0 - d) * j as f64 / 20.0;
            let c = CurveModel::triangular(a, d).unwrap();
            let m = curve_metrics(&c, TOL_ANALYTIC).unwrap();
            assert_close(m.ar, d, 1e-12, "AR");
            assert_close(m.lar, triangle_lar(a, d).unwrap(), 1e-8, "LAR");
            assert_close(m.rar, triangle_rar(a, d).unwrap(), 1e-8, "RAR");
        }
    }
}

#[test]
fn bounds_are_attained_by_extreme_triangles() {
    for d in [0.2, 0.5, 0.8] {
        let (min, max) = lar_rar_bounds(d).unwrap();
        let left = CurveModel::triangular(1e-6, d).unwrap();
        let right = CurveModel::triangular(1.0 - d - 1e-6, d).unwrap();
        assert_close(lar_integral(&left, TOL_ANALYTIC).unwrap(), max, 1e-3, "LAR max");
        assert_close(lar_integral(&right, TOL_ANALYTIC).unwrap(), min, 1e-3, "LAR min");
        assert_close(rar_integral(&right, TOL_ANALYTIC).unwrap(), max, 1e-3, "RAR max");
        assert_close(rar_integral(&left, TOL_ANALYTIC).unwrap(), min, 1e-3, "RAR min");
    }
}

#[test]
fn identity_curve_is_neutral() {
    let c = CurveModel::identity().unwrap();
    assert!(lar_integral(&c, TOL_PIECEWISE).unwrap().abs() < 1e-8);
    assert!(rar_integral(&c, TOL_PIECEWISE).unwrap().abs() < 1e-8);
    assert_eq!(c.ar(), 0.0);
}

#[test]
fn mirror_duality_on_standard_and_random_curves() {
    let mut curves = vec![
        CurveModel::triangular(0.116, 0.667).unwrap(),
        CurveModel::burgt(5.0).unwrap(),
        CurveModel::burgt(0.5).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    curves.extend((0..10).map(|i| random_convex_curve(&mut rng, 2 + i % 5)));
    for c in &curves {
        let tol = default_tol(c);
        let rar = rar_integral(c, tol).unwrap();
        let lar_m = lar_integral(&mirror(c), tol).unwrap();
        assert!((rar - lar_m).abs() < 1e-6, "{c:?}: {rar} vs {lar_m}");
        assert_close(mirror(c).ar(), c.ar(), 1e-12, "AR of mirror");
    }
}

#[test]
fn burgt_sweep_prefers_the_right() {
    let grid = sweep_grid(0.05, 0.95, 0.05).unwrap();
    assert_eq!(grid.len(), 19);
    let rows = burgt_preference_sweep(&grid, TOL_ANALYTIC).unwrap();
    for row in rows {
        assert!(row.rar > row.lar, "{row:?}");
        for m in [row.lar, row.rar] {
            assert!(m > row.min_bound && m < row.max_bound, "{row:?}");
        }
        assert_close(burgt_ar(row.k).unwrap(), row.ar, 1e-12, "AR(k)");
    }
}

#[test]
fn multiplier_routes_agree() {
    let m = multipliers(0.667, 0.53, 0.486).unwrap();
    assert!(m.cross_check_gap < 1e-6);
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..20 {
        let (ar, lar, rar) = feasible_triple(&mut rng);
        let m = multipliers(ar, lar, rar).unwrap();
        assert!(m.cross_check_gap < 1e-6, "({ar}, {lar}, {rar}): {}", m.cross_check_gap);
        assert_close(unified_metric(m.mu_l, ar), lar, 1e-9, "s(mu_L)");
        assert_close(unified_metric(m.mu_r, ar), rar, 1e-9, "s(mu_R)");
    }
}

#[test]
fn trapezoid_area_equals_auc() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut checked = 0;
    let mut triples = vec![(0.667, 0.53, 0.486)];
    triples.extend((0..200).map(|_| feasible_triple(&mut rng)));
    for (ar, lar, rar) in triples {
        match trapezoid_decomposition(ar, lar, rar) {
            Ok(t) => {
                assert_close(t.area(), 0.5 * (1.0 + ar), 1e-9, "area");
                assert_close(t.cap_a + t.cap_b + t.indifference, 1.0, 1e-9, "a + b + I");
                assert!(t.indifference > 0.0 && t.indifference <= 1.0);
                checked += 1;
            }
            Err(Error::TriangularDegenerate { .. }) => {}
            Err(e) => panic!("({ar}, {lar}, {rar}): {e}"),
        }
    }
    assert!(checked > 50, "only {checked} feasible trapezoids");
}

#[test]
fn decomposing_a_curve_uses_its_own_metrics() {
    let c = CurveModel::burgt(3.0).unwrap();
    let t = decompose_curve(&c, TOL_ANALYTIC).unwrap();
    let m = curve_metrics(&c, TOL_ANALYTIC).unwrap();
    assert_eq!((t.ar, t.lar, t.rar), (m.ar, m.lar, m.rar));
    assert!(t.mu_l > 1.0 && t.mu_r > 1.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn convex_curves_stay_inside_bounds(c in convex_curve()) {
        let ar = c.ar();
        prop_assume!(ar > 1e-3 && ar < 1.0 - 1e-3);
        let m = curve_metrics(&c, TOL_PIECEWISE).unwrap();
        let (min, max) = lar_rar_bounds(ar).unwrap();
        prop_assert!(m.lar > min - 1e-6 && m.lar < max + 1e-6);
        prop_assert!(m.rar > min - 1e-6 && m.rar < max + 1e-6);
    }

    #[test]
    fn both_rauc_forms_agree(c in convex_curve()) {
        let a = rauc_integral(&c, TOL_PIECEWISE).unwrap();
        let b = rauc_integral_by_abscissa(&c, TOL_PIECEWISE).unwrap();
        prop_assert!((a - b).abs() < 1e-6, "{} vs {}", a, b);
    }

    #[test]
    fn burgt_k_inverts_ar(k in 0.01f64..60.0) {
        let back = burgt_k(burgt_ar(k).unwrap()).unwrap();
        prop_assert!((back - k).abs() < 1e-7 * k.max(1.0), "{} vs {}", back, k);
    }
}
