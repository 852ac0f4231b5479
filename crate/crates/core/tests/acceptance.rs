//! Acceptance criteria 1–7. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use poncelet_core::catalog::{evaluate, list_invariants, ClosedForm, EvaluationContext, Value};
use poncelet_core::derived::{
    antipedal_polygon, evolute_polygon, outer_polygon, pedal_polygon, AnchorSpec,
};
use poncelet_core::geometry::{invert_in_circle, Ellipse, Point, Polygon};
use poncelet_core::orbit::{
    build_family, caustic_by_closure, orbit_at, BilliardConfig, OrbitFamily,
};
use poncelet_core::sweep::{
    probe_all, run_catalog, run_catalog_with, Mean, Mode, RunOptions, SweepPlan, Verdict,
};
use proptest::prelude::Rng;
use proptest::test_runner::{RngAlgorithm, TestRng};

const NS: [usize; 6] = [3, 4, 5, 6, 7, 8];
const RATIOS: [f64; 3] = [1.25, 1.5, 2.0];
const TOL_REL: f64 = 1e-8;

type Outcome = Result<String, String>;
type Criterion = (u8, &'static str, fn() -> Outcome);

fn grid() -> SweepPlan {
    SweepPlan::grid(&NS, &RATIOS)
}

fn all_anchors() -> Vec<AnchorSpec> {
    vec![
        AnchorSpec::CENTER,
        AnchorSpec::F1,
        AnchorSpec::F2,
        AnchorSpec::Fixed { x: 0.2, y: 0.1 },
    ]
}

fn rhombus() -> OrbitFamily<f64> {
    build_family(&BilliardConfig::new(2.0, 1.0, 4).unwrap()).unwrap()
}

fn check(ok: bool, pass: String, fail: String) -> Outcome {
    if ok {
        Ok(pass)
    } else {
        Err(fail)
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let f = rhombus();
    let closure = caustic_by_closure(&BilliardConfig::new(2.0, 1.0, 4).unwrap()).unwrap();
    let elapsed = start.elapsed().as_secs_f64();
    let s5 = 5f64.sqrt();
    let errs = [
        ("a''", (f.caustic.a() - 4.0 / s5).abs()),
        ("b''", (f.caustic.b() - 1.0 / s5).abs()),
        ("J", (f.joachimsthal - 1.0 / s5).abs()),
        ("L", (f.perimeter - 4.0 * s5).abs()),
        (
            "solvers",
            (f.caustic.a() - closure.a())
                .abs()
                .max((f.caustic.b() - closure.b()).abs()),
        ),
    ];
    let worst = errs
        .iter()
        .cloned()
        .fold(("", 0.0f64), |m, e| if e.1 > m.1 { e } else { m });
    let msg = format!(
        "a''={:.12} b''={:.12} J={:.12} L={:.12}; worst error {} {:.1e}; {:.3}s",
        f.caustic.a(),
        f.caustic.b(),
        f.joachimsthal,
        f.perimeter,
        worst.0,
        worst.1,
        elapsed
    );
    check(
        errs.iter().all(|e| e.1 < 1e-10) && elapsed < 1.0,
        msg.clone(),
        msg,
    )
}

/// Rows whose closed form criterion 2 pins: the named ones plus every row
/// tabulated as 1.
fn criterion_2_ids() -> Vec<&'static str> {
    let named = [
        "k101", "k113", "k116", "k118", "k119", "k201", "k202a", "k202b", "k301", "k804b", "k902",
        "k603", "k604b", "k605b", "k901", "k903b", "k904b", "k905", "k906", "k907b", "k908a",
        "k908b",
    ];
    let mut ids: BTreeSet<&str> = named.into_iter().collect();
    ids.extend(
        list_invariants()
            .iter()
            .filter(|s| s.closed_form == Some(ClosedForm::One))
            .map(|s| s.id),
    );
    ids.into_iter().collect()
}

fn criterion_2() -> Outcome {
    let ids = criterion_2_ids();
    let plan = grid()
        .with_anchors(vec![AnchorSpec::CENTER, AnchorSpec::F1, AnchorSpec::F2])
        .with_ids(ids.iter().copied());
    let start = Instant::now();
    let run = run_catalog_with(
        &plan,
        RunOptions {
            serial: true,
            ..Default::default()
        },
    )
    .unwrap();
    let elapsed = start.elapsed().as_secs_f64();
    let mut bad = Vec::new();
    let mut worst = 0.0f64;
    for r in &run.reports {
        match r.closed_form_residual {
            Some(res) if res < TOL_REL && r.n_skipped == 0 => worst = worst.max(res),
            other => bad.push(format!(
                "{}@N={},a={} ({other:?})",
                r.id, r.config.n, r.config.a
            )),
        }
    }
    let covered: BTreeSet<_> = run.reports.iter().map(|r| r.id.as_str()).collect();
    let missing: Vec<_> = ids.iter().filter(|i| !covered.contains(**i)).collect();
    let msg = format!(
        "{} reports over {} ids, worst residual {:.1e}, {:.1}s serial{}{}",
        run.reports.len(),
        covered.len(),
        worst,
        elapsed,
        if bad.is_empty() {
            String::new()
        } else {
            format!("; off: {}", bad.join(" "))
        },
        if missing.is_empty() {
            String::new()
        } else {
            format!("; never admissible: {missing:?}")
        },
    );
    check(
        bad.is_empty() && missing.is_empty() && run.failures.is_empty() && elapsed < 120.0,
        msg.clone(),
        msg,
    )
}

fn spot_values() -> Result<String, String> {
    let f = rhombus();
    let s = orbit_at(&f, 0.0).unwrap();
    let outer = outer_polygon(&s, &f.billiard).unwrap();
    let ctx = EvaluationContext::new(&f, &s, None);
    let Value::Scalar(k804) = evaluate("k804b", &ctx).unwrap() else {
        unreachable!()
    };
    let vals = [
        ("A", s.vertices.signed_area(), 4.0),
        ("A'", outer.signed_area(), 8.0),
        ("A''", s.tangency_points.signed_area(), 1.28),
        ("A*A1inv", k804, 4.0),
    ];
    let off: Vec<_> = vals
        .iter()
        .filter(|(_, v, e)| (v - e).abs() > 1e-9)
        .map(|(n, v, e)| format!("{n}={v} (want {e})"))
        .collect();
    if off.is_empty() {
        Ok("A=4 A'=8 A''=1.28 A*A1inv=4".into())
    } else {
        Err(off.join(", "))
    }
}

fn criterion_3() -> Outcome {
    let plan = grid().with_anchors(all_anchors());
    let run = run_catalog(&plan).unwrap();
    // id -> (N values, ratios, anchors, degenerate?)
    type Cells = (BTreeSet<usize>, BTreeSet<String>, BTreeSet<String>, bool);
    let mut failing: BTreeMap<String, Cells> = BTreeMap::new();
    for r in run.failing() {
        let e = failing.entry(r.id.clone()).or_default();
        e.0.insert(r.config.n);
        e.1.insert(r.config.a.to_string());
        if let Some(a) = &r.anchor {
            e.2.insert(a.clone());
        }
        e.3 |= r.verdict == Verdict::Degenerate;
    }
    let k406a_ok = run.reports.iter().filter(|r| r.id == "k406a").all(|r| {
        r.verdict == Verdict::Invariant && r.mean.components().iter().all(|c| c.abs() < 1e-9)
    });
    let k306_ok = run.reports.iter().filter(|r| r.id == "k306").all(|r| {
        r.verdict == Verdict::Invariant && matches!(r.mean, Mean::Components(ref c) if c.len() == 2)
    });
    let spots = spot_values();
    let invariant = run
        .reports
        .iter()
        .filter(|r| r.verdict == Verdict::Invariant)
        .count();
    let mut msg = format!(
        "{invariant}/{} admissible cells invariant; k306 {} k406a {}; spots {}",
        run.reports.len(),
        if k306_ok { "ok" } else { "BAD" },
        if k406a_ok { "=O" } else { "BAD" },
        match &spots {
            Ok(s) => s.clone(),
            Err(e) => format!("BAD {e}"),
        }
    );
    if !failing.is_empty() {
        let join = |s: &BTreeSet<String>| s.iter().cloned().collect::<Vec<_>>().join(",");
        let list: Vec<_> = failing
            .iter()
            .map(|(id, (ns, ratios, anchors, degenerate))| {
                let ns: Vec<_> = ns.iter().map(|n| n.to_string()).collect();
                let mut w = format!("{id} [N={} a={}", ns.join(","), join(ratios));
                if !anchors.is_empty() {
                    w.push_str(&format!(
                        " M={}",
                        anchors.iter().cloned().collect::<Vec<_>>().join("|")
                    ));
                }
                if *degenerate {
                    w.push_str(" degenerate");
                }
                w + "]"
            })
            .collect();
        msg.push_str(&format!("; not invariant: {}", list.join(", ")));
    }
    check(
        failing.is_empty() && k406a_ok && k306_ok && spots.is_ok() && run.failures.is_empty(),
        msg.clone(),
        msg,
    )
}

fn criterion_4() -> Outcome {
    let plan = grid()
        .with_anchors(all_anchors())
        .with_mode(Mode::Diagnostics);
    let run = run_catalog(&plan).unwrap();
    let mut pairs: BTreeMap<(String, usize), bool> = BTreeMap::new();
    for r in &run.reports {
        // a pair counts once any of its cells varies
        let e = pairs.entry((r.id.clone(), r.config.n)).or_insert(false);
        *e |= r.verdict == Verdict::NotInvariant;
    }
    let not_inv = pairs.values().filter(|v| **v).count();
    let named = [("k105", 6), ("k121", 5), ("k803", 4)];
    let named_ok = named
        .iter()
        .all(|(id, n)| pairs.get(&(id.to_string(), *n)) == Some(&true));
    let probes = probe_all(&grid()).unwrap();
    let bad_probes: Vec<_> = probes
        .iter()
        .filter(|p| p.verdict != Verdict::NotInvariant)
        .map(|p| {
            format!(
                "{:?}@N={},a={} dev {:.1e}",
                p.probe, p.config.n, p.config.a, p.max_rel_dev
            )
        })
        .collect();
    let still_constant = pairs.len() - not_inv;
    let msg = format!(
        "{not_inv} inadmissible (id,N) pairs not_invariant ({still_constant} stay constant); k105@6 k121@5 k803@4 {}; {}/{} negative-control probes not_invariant{}",
        if named_ok { "ok" } else { "BAD" },
        probes.len() - bad_probes.len(),
        probes.len(),
        if bad_probes.is_empty() { String::new() } else { format!("; probes classified invariant: {}", bad_probes.join(" ")) },
    );
    check(
        not_inv >= 20 && named_ok && bad_probes.is_empty(),
        msg.clone(),
        msg,
    )
}

fn criterion_5() -> Outcome {
    let mut rng = TestRng::deterministic_rng(RngAlgorithm::ChaCha);
    let mut unit = move || -> f64 { ((rng.next_u64() >> 11) as f64) / (1u64 << 53) as f64 };
    let mut worst = BTreeMap::<&str, f64>::new();
    let mut note = |k: &'static str, v: f64| {
        let w = worst.entry(k).or_insert(0.0);
        *w = w.max(v);
    };
    for &n in &NS {
        for &a in &RATIOS {
            let f = build_family(&BilliardConfig::new(a, 1.0, n).unwrap()).unwrap();
            for _ in 0..128 {
                let t = unit() * std::f64::consts::TAU;
                let s = orbit_at(&f, t).unwrap();
                note("closure", s.closure_error);
                let m = Point::new(unit() - 0.5, unit() - 0.5);
                let back = pedal_polygon(&antipedal_polygon(&s.vertices, m).unwrap(), m).unwrap();
                let d = s
                    .vertices
                    .vertices()
                    .iter()
                    .zip(back.vertices())
                    .map(|(u, v)| u.distance(*v));
                note("pedal_antipedal", d.fold(0.0, f64::max));
                if n == 4 {
                    let outer = outer_polygon(&s, &f.billiard).unwrap();
                    note(
                        "rect_evolute_area",
                        evolute_polygon(&outer).unwrap().signed_area().abs(),
                    );
                }
            }
        }
    }
    for _ in 0..1000 {
        let p = Point::new(20.0 * unit() - 10.0, 20.0 * unit() - 10.0);
        let c = Point::new(4.0 * unit() - 2.0, 4.0 * unit() - 2.0);
        let r = 0.1 + 5.0 * unit();
        if p.distance(c) < 1e-3 {
            continue;
        }
        let back = invert_in_circle(invert_in_circle(p, c, r).unwrap(), c, r).unwrap();
        note("double_inversion", back.distance(p) / p.norm().max(1.0));
        let e = Ellipse::new(1.01 + 3.0 * unit(), 1.0).unwrap();
        let q = e.point_at(unit() * std::f64::consts::TAU);
        let (k1, k2) = (e.curvature(q).unwrap(), e.curvature_focal(q).unwrap());
        note("curvature_forms", (k1 - k2).abs() / k1.max(1.0));
        let tri: Vec<_> = (0..3)
            .map(|_| Point::new(6.0 * unit() - 3.0, 6.0 * unit() - 3.0))
            .collect();
        let tri = Polygon::new(tri).unwrap();
        if tri.signed_area().abs() > 0.05 {
            let ev = evolute_polygon(&tri).unwrap();
            let scale = ev.vertices().iter().fold(1.0f64, |m, v| m.max(v.norm_sq()));
            note("triangle_evolute_area", ev.signed_area().abs() / scale);
        }
    }
    let limits = [
        ("closure", 1e-9),
        ("pedal_antipedal", 1e-9),
        ("double_inversion", 1e-12),
        ("curvature_forms", 1e-12),
        ("triangle_evolute_area", 1e-9),
        ("rect_evolute_area", 1e-9),
    ];
    let parts: Vec<_> = limits
        .iter()
        .map(|(k, _)| format!("{k} {:.1e}", worst.get(k).copied().unwrap_or(f64::NAN)))
        .collect();
    let ok = limits
        .iter()
        .all(|(k, lim)| worst.get(k).is_some_and(|w| w < lim));
    let msg = parts.join(", ");
    check(ok, msg.clone(), msg)
}

fn criterion_6() -> Outcome {
    let plan = grid().with_anchors(all_anchors());
    let one = run_catalog(&plan).unwrap().to_json();
    let two = run_catalog(&plan).unwrap().to_json();
    let serial = run_catalog_with(
        &plan,
        RunOptions {
            serial: true,
            ..Default::default()
        },
    )
    .unwrap()
    .to_json();
    let msg = format!("{} bytes, run_id {}", one.len(), &plan.run_id()[..16]);
    check(
        one == two && one == serial,
        msg.clone(),
        format!("{msg}; outputs differ"),
    )
}

fn criterion_7() -> Outcome {
    let plan = SweepPlan::grid(&[4], &RATIOS).with_ids(["k806b"]);
    let run = run_catalog_with(
        &plan,
        RunOptions {
            keep_series: true,
            ..Default::default()
        },
    )
    .unwrap();
    let ok = run.reports.len() == RATIOS.len()
        && run.reports.iter().all(|r| {
            !r.flags.is_empty()
                && r.series.points.len() == plan.t_samples
                && r.series.values().len() == plan.t_samples
        })
        && run.passed();
    let means: Vec<_> = run
        .reports
        .iter()
        .map(|r| format!("a={}: {:.6}", r.config.a, r.mean.components()[0]))
        .collect();
    let msg = format!(
        "k806b emitted with {}-sample series and discrepancy flag, tabulated 2, measured {}; run still passes",
        plan.t_samples,
        means.join(", ")
    );
    check(ok, msg.clone(), msg)
}

fn main() {
    let criteria: [Criterion; 7] = [
        (1, "N=4 closed-form family", criterion_1),
        (2, "closed-form values on the grid", criterion_2),
        (3, "constancy regression", criterion_3),
        (4, "parity structure and negative controls", criterion_4),
        (5, "property suites", criterion_5),
        (6, "determinism", criterion_6),
        (7, "documented discrepancy k806b", criterion_7),
    ];
    let mut failed = 0;
    for (k, name, f) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let m = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {m}"))
        });
        match outcome {
            Ok(m) => println!("criterion {k} PASS: {name}: {m}"),
            Err(m) => {
                failed += 1;
                println!("criterion {k} FAIL: {name}: {m}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} of 7 acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 7 acceptance criteria passed");
}
