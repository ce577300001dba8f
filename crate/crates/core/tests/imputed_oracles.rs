mod common;

use common::*;
use proptest::prelude::*;
use roc_metrics::analytic::{curve_metrics, CurveModel};
use roc_metrics::empirical::{ar_mann_whitney, ScoreSample};
use roc_metrics::imputed::*;
use roc_metrics::synth::grade_table_from_curve;

/// Random tables: up to 15 grades, some empty, PDs sorted descending.
fn grade_table() -> impl Strategy<Value = GradeTable> {
    prop::collection::vec((0u32..500, 0.001f64..0.999), 1..15)
        .prop_filter_map("needs a populated grade", |mut rows| {
            rows.sort_by(|a, b| b.1.total_cmp(&a.1));
            let grades = rows
                .iter()
                .enumerate()
                .map(|(i, &(n, pd))| Grade::new(format!("g{i}"), f64::from(n), pd))
                .collect();
            GradeTable::new(grades).ok()
        })
}

fn table(rows: &[(f64, f64)]) -> GradeTable {
    GradeTable::new(
        rows.iter()
            .enumerate()
            .map(|(i, &(n, pd))| Grade::new(format!("g{i}"), n, pd))
            .collect(),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn matches_literal_sums(t in grade_table()) {
        let (ar, lar, rar) = imputed_literal(&t);
        prop_assert!((ar_imputed(&t).unwrap() - ar).abs() < 1e-10);
        prop_assert!((lar_imputed(&t).unwrap() - lar).abs() < 1e-10);
        prop_assert!((rar_imputed(&t).unwrap() - rar).abs() < 1e-10);
        let report = imputed_report(&t).unwrap();
        prop_assert_eq!(report.ar, ar_imputed(&t).unwrap());
        prop_assert_eq!(report.sigma_ar, 0.0);
    }

    #[test]
    fn merging_adjacent_grades_never_raises_ar(t in grade_table(), at in 0usize..14) {
        let g = t.grades();
        prop_assume!(g.len() >= 2);
        let i = at % (g.len() - 1);
        let (a, b) = (&g[i], &g[i + 1]);
        let count = a.count + b.count;
        prop_assume!(count > 0.0);
        let pd = (a.count * a.pd + b.count * b.pd) / count;
        let mut merged = g.to_vec();
        merged.splice(i..=i + 1, [Grade::new("merged", count, pd)]);
        let merged = GradeTable::new(merged).unwrap();
        prop_assert!(ar_imputed(&merged).unwrap() <= ar_imputed(&t).unwrap() + 1e-12);
    }

    #[test]
    fn ascending_order_is_rejected(t in grade_table()) {
        let g = t.grades();
        prop_assume!(g.windows(2).any(|w| w[0].pd > w[1].pd));
        let mut reversed = g.to_vec();
        reversed.reverse();
        let err = GradeTable::new(reversed).unwrap_err().to_string();
        prop_assert!(err.contains("descending"), "{}", err);
    }

    #[test]
    fn realised_sample_agrees_with_imputed_ar(t in grade_table()) {
        // Give grade i the score i (worst grade lowest) and realise the
        // rounded expected defaults as binary outcomes.
        let (mut nd, mut df) = (Vec::new(), Vec::new());
        for (i, g) in t.grades().iter().enumerate() {
            let bad = (g.count * g.pd).round();
            df.extend(std::iter::repeat_n(i as f64, bad as usize));
            nd.extend(std::iter::repeat_n(i as f64, (g.count - bad) as usize));
        }
        prop_assume!(!nd.is_empty() && !df.is_empty());
        let s = ScoreSample::new(nd, df).unwrap();
        // Rounding moves up to half a default into or out of each grade, and
        // the same half object leaves or joins its non-defaults. Each shift
        // moves AR by at most 1/D or 1/N.
        let d = t.expected_defaults().min(s.n_default() as f64);
        let n = t.expected_nondefaults().min(s.n_nondefault() as f64);
        let bound = t.grades().len() as f64 * (1.0 / d + 1.0 / n);
        let gap = (ar_imputed(&t).unwrap() - ar_mann_whitney(&s).1).abs();
        prop_assert!(gap <= bound, "gap {} > bound {}", gap, bound);
    }
}

#[test]
fn two_grade_fixture() {
    let t = table(&[(100.0, 0.5), (100.0, 0.1)]);
    let roc = imputed_roc(&t).unwrap();
    assert_close(roc.points[1].0, 50.0 / 140.0, 1e-15, "g1");
    assert_close(roc.points[1].1, 50.0 / 60.0, 1e-15, "R1");
    assert_close(ar_imputed(&t).unwrap(), 0.47619, 1e-5, "AR");
    assert_close(lar_imputed(&t).unwrap(), 0.30612, 1e-5, "LAR");
    assert_close(rar_imputed(&t).unwrap(), 0.39683, 1e-5, "RAR");
    let (ar, lar, rar) = imputed_literal(&t);
    assert_close(ar_imputed(&t).unwrap(), ar, 1e-12, "AR literal");
    assert_close(lar_imputed(&t).unwrap(), lar, 1e-12, "LAR literal");
    assert_close(rar_imputed(&t).unwrap(), rar, 1e-12, "RAR literal");
}

#[test]
fn degenerate_tables() {
    let flat = table(&[(50.0, 0.2), (70.0, 0.2), (10.0, 0.2)]);
    for m in [ar_imputed(&flat), lar_imputed(&flat), rar_imputed(&flat)] {
        assert!(m.unwrap().abs() < 1e-12);
    }
    let single = table(&[(100.0, 0.2)]);
    assert_eq!(imputed_roc(&single).unwrap().points, vec![(0.0, 0.0), (1.0, 1.0)]);
    assert!(ar_imputed(&single).unwrap().abs() < 1e-15);
    let extreme = table(&[(100.0, 0.999), (100.0, 0.001)]);
    assert!(ar_imputed(&extreme).unwrap() > 0.997);
    let with_empty = table(&[(100.0, 0.5), (0.0, 0.3), (100.0, 0.1)]);
    assert_close(
        ar_imputed(&with_empty).unwrap(),
        ar_imputed(&table(&[(100.0, 0.5), (100.0, 0.1)])).unwrap(),
        1e-15,
        "empty grade",
    );
}

#[test]
fn pd_outside_open_interval_is_rejected() {
    for pd in [0.0, 1.0, -0.1, f64::NAN] {
        assert!(GradeTable::new(vec![Grade::new("a", 10.0, pd)]).is_err());
    }
}

#[test]
fn refinement_converges_to_curve_metrics() {
    let curve = CurveModel::burgt(5.0).unwrap();
    let exact = curve_metrics(&curve, 1e-10).unwrap();
    let mut prev = f64::INFINITY;
    for grades in [10, 100, 1000] {
        let t = grade_table_from_curve(&curve, 0.05, grades, 1e6).unwrap();
        let r = imputed_report(&t).unwrap();
        let worst = (r.ar - exact.ar)
            .abs()
            .max((r.lar - exact.lar).abs())
            .max((r.rar - exact.rar).abs());
        assert!(worst < prev, "{grades} grades: error {worst} did not shrink");
        prev = worst;
        if grades == 1000 {
            assert!(worst < 0.005, "{worst}");
            assert!(r.rar > r.lar);
        }
    }
}
