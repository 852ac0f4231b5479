use poncelet_core::derived::{AnchorPoint, AnchorSpec};
use poncelet_core::orbit::{build_family, BilliardConfig};
use poncelet_core::sweep::{
    classify, negative_control, probe_all, run_catalog, run_catalog_with, sweep_quantity,
    sweep_unchecked, t_grid, write_series_csv, ConfigSpec, Mean, Mode, Probe, RunOptions,
    SweepError, SweepPlan, Verdict,
};

fn mean_of(plan: &SweepPlan, id: &str) -> Vec<f64> {
    let run = run_catalog(plan).unwrap();
    run.reports
        .iter()
        .filter(|r| r.id == id)
        .map(|r| match r.mean {
            Mean::Scalar(v) => v,
            ref m => panic!("{id}: {m:?}"),
        })
        .collect()
}

#[test]
fn k804b_on_the_rhombus_family_is_four() {
    let plan = SweepPlan::grid(&[4], &[2.0]).with_ids(["k804b"]);
    let m = mean_of(&plan, "k804b");
    assert_eq!(m.len(), 1);
    assert!((m[0] - 4.0).abs() < 1e-8);
}

#[test]
fn k118_is_half_the_perimeter() {
    let plan = SweepPlan::grid(&[5], &[1.25, 1.5, 2.0]).with_ids(["k118"]);
    let run = run_catalog(&plan).unwrap();
    assert_eq!(run.reports.len(), 3);
    for r in &run.reports {
        let f = build_family(&r.config.to_config().unwrap()).unwrap();
        let Mean::Components(c) = &r.mean else {
            panic!()
        };
        for x in c {
            assert!((x - f.perimeter / 2.0).abs() < 1e-8 * f.perimeter);
        }
        assert_eq!(r.verdict, Verdict::Invariant);
        assert!(r.closed_form_residual.unwrap() < 1e-8);
    }
}

#[test]
fn unit_ratios_at_n6() {
    let plan = SweepPlan::grid(&[6], &[1.25, 1.5, 2.0]).with_ids(["k604b", "k605b", "k905"]);
    for id in ["k604b", "k605b", "k905"] {
        for m in mean_of(&plan, id) {
            assert!((m - 1.0).abs() < 1e-8, "{id}: {m}");
        }
    }
}

#[test]
fn k201_radius_on_the_rhombus_family() {
    let f = build_family(&BilliardConfig::new(2.0, 1.0, 4).unwrap()).unwrap();
    let s = sweep_quantity(&f, "k201", Some(AnchorPoint::f1(&f.billiard)), 64).unwrap();
    let c = classify(&s.values(), 1e-8, 1e-10);
    assert_eq!(c.verdict, Verdict::Invariant);
    assert_eq!(s.n_skipped(), 0);
    let Mean::Scalar(r) = c.mean else { panic!() };
    assert!((r - 4.0 / 5f64.sqrt()).abs() < 1e-10);
}

#[test]
fn k121_at_odd_n_varies() {
    let f = build_family(&BilliardConfig::new(2.0, 1.0, 5).unwrap()).unwrap();
    let spec = poncelet_core::catalog::lookup("k121").unwrap();
    assert!(matches!(
        sweep_quantity(&f, "k121", None, 64),
        Err(SweepError::NotApplicable { .. })
    ));
    let s = sweep_unchecked(&f, spec, None, &t_grid(64));
    assert_eq!(
        classify(&s.values(), 1e-8, 1e-10).verdict,
        Verdict::NotInvariant
    );
}

#[test]
fn diagnostics_only_runs_inadmissible_cells() {
    let plan = SweepPlan::grid(&[5, 6], &[1.5])
        .with_ids(["k105", "k121", "k806b", "k806a"])
        .with_mode(Mode::Diagnostics);
    let run = run_catalog(&plan).unwrap();
    let cells: Vec<_> = run
        .reports
        .iter()
        .map(|r| (r.id.as_str(), r.config.n))
        .collect();
    // k806b shares its quantity with k806a, which admits every N
    assert_eq!(cells, [("k105", 6), ("k121", 5)]);
    assert!(run
        .reports
        .iter()
        .all(|r| r.verdict == Verdict::NotInvariant));
}

#[test]
fn parallel_and_serial_runs_match_byte_for_byte() {
    let plan = SweepPlan::grid(&[3, 4], &[1.5, 2.0])
        .with_anchors(vec![AnchorSpec::CENTER, AnchorSpec::F1])
        .with_samples(16);
    let par = run_catalog_with(&plan, RunOptions::default()).unwrap();
    let ser = run_catalog_with(
        &plan,
        RunOptions {
            serial: true,
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(par.to_json(), ser.to_json());
    assert_eq!(par.to_json(), run_catalog(&plan).unwrap().to_json());
    assert_eq!(par.run_id, plan.run_id());
}

#[test]
fn reports_are_ordered_by_id_config_anchor() {
    let plan = SweepPlan::grid(&[4], &[1.5, 2.0])
        .with_anchors(vec![AnchorSpec::F2, AnchorSpec::F1])
        .with_ids(["k201", "k101"])
        .with_samples(8);
    let run = run_catalog(&plan).unwrap();
    let keys: Vec<_> = run
        .reports
        .iter()
        .map(|r| (r.id.clone(), r.config.a, r.anchor.clone()))
        .collect();
    let s = |x: &str| Some(x.to_string());
    assert_eq!(
        keys,
        [
            ("k101".into(), 1.5, None),
            ("k101".into(), 2.0, None),
            ("k201".into(), 1.5, s("f2")),
            ("k201".into(), 1.5, s("f1")),
            ("k201".into(), 2.0, s("f2")),
            ("k201".into(), 2.0, s("f1")),
        ]
    );
}

#[test]
fn bad_configs_are_reported_not_fatal() {
    let mut plan = SweepPlan::grid(&[4], &[2.0])
        .with_ids(["k101"])
        .with_samples(8);
    plan.configs.push(ConfigSpec::new(1.0, 2.0, 4));
    let run = run_catalog(&plan).unwrap();
    assert_eq!(run.reports.len(), 1);
    assert_eq!(run.failures.len(), 1);
    assert!(!run.passed());
}

#[test]
fn report_json_shape() {
    let plan = SweepPlan::grid(&[4], &[2.0])
        .with_ids(["k806b"])
        .with_samples(8);
    let run = run_catalog(&plan).unwrap();
    let v: serde_json::Value = serde_json::from_str(&run.to_json()).unwrap();
    assert_eq!(v["run_id"], plan.run_id());
    let r = &v["reports"][0];
    for key in [
        "id",
        "config",
        "anchor",
        "mean",
        "max_rel_dev",
        "verdict",
        "closed_form_residual",
        "n_skipped",
    ] {
        assert!(r.get(key).is_some(), "missing {key}");
    }
    assert_eq!(r["config"], serde_json::json!({"a": 2.0, "b": 1.0, "n": 4}));
    assert!(r["flags"][0].as_str().unwrap().starts_with("discrepancy"));
    // flagged rows do not fail the run
    assert!(run.passed());
    let back: poncelet_core::sweep::RunReport = serde_json::from_str(&run.to_json()).unwrap();
    assert_eq!(back.reports[0].id, "k806b");
}

#[test]
fn negative_control_examples() {
    let results = probe_all(&SweepPlan::grid(&[3, 5], &[1.5])).unwrap();
    assert_eq!(results.len(), 6);
    assert!(results.iter().all(|r| r.verdict == Verdict::NotInvariant));
    let area5 = results
        .iter()
        .find(|r| r.probe == Probe::Area && r.config.n == 5)
        .unwrap();
    assert!(area5.max_rel_dev > 1e-6);
    assert!(negative_control(&SweepPlan::grid(&[3, 5], &[1.5])).is_ok());
}

#[test]
fn series_csv() {
    let f = build_family(&BilliardConfig::new(2.0, 1.0, 4).unwrap()).unwrap();
    let s = sweep_quantity(&f, "k101", None, 64).unwrap();
    let mut buf = Vec::new();
    write_series_csv(&s, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t,value"));
    let rows: Vec<f64> = lines
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(rows.len(), 64);
    assert!(rows.iter().all(|v| v.abs() < 1e-10));
}
