//! Sweeps catalog quantities over orbit families and aspect ratios,
//! classifies each series as constant or not, and writes reports.

mod output;
mod plan;
mod stats;

pub use output::{write_series_csv, SCHEMA_VERSION};
pub use plan::{
    t_grid, ConfigSpec, Mode, SweepPlan, DEFAULT_TOL_ABS, DEFAULT_TOL_REL, DEFAULT_T_SAMPLES,
    GRID_OFFSET, MIN_T_SAMPLES,
};
pub use stats::{classify, closed_form_residual, Classification, Mean, Verdict};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{self, EvalError, EvaluationContext, InvariantSpec, Value, CATALOG};
use crate::derived::{outer_locus_foci, AnchorPoint, AnchorRole, DerivedError, LocusFit};
use crate::orbit::{build_family, orbit_at, OrbitError, OrbitFamily, OrbitSample};

/// Largest share of skipped samples a series may have.
pub const MAX_SKIP_FRACTION: f64 = 0.1;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SweepError {
    #[error("invalid sweep plan: {0}")]
    InvalidPlan(String),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("{id} is not admissible at N={n} with anchor {anchor}")]
    NotApplicable {
        id: String,
        n: usize,
        anchor: String,
    },
    #[error("{skipped} of {total} samples skipped")]
    DegenerateFamily { skipped: usize, total: usize },
    #[error("negative control {probe} classified invariant for {config:?}")]
    HarnessIntegrity { probe: String, config: ConfigSpec },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesPoint {
    pub t: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value: Option<Value<f64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub skipped: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Series {
    pub points: Vec<SeriesPoint>,
}

impl Series {
    pub fn values(&self) -> Vec<Value<f64>> {
        self.points.iter().filter_map(|p| p.value.clone()).collect()
    }

    pub fn n_skipped(&self) -> usize {
        self.points.iter().filter(|p| p.value.is_none()).count()
    }

    fn too_degenerate(&self) -> bool {
        self.n_skipped() as f64 >= MAX_SKIP_FRACTION * self.points.len() as f64
    }
}

/// Evaluates `id` on `n` uniformly spaced members of `family`.
pub fn sweep_quantity(
    family: &OrbitFamily<f64>,
    id: &str,
    anchor: Option<AnchorPoint<f64>>,
    n: usize,
) -> Result<Series, SweepError> {
    let spec = catalog::lookup(id)?;
    if !spec.applies_to(family.n(), anchor.map(|a| a.role)) {
        return Err(SweepError::NotApplicable {
            id: id.into(),
            n: family.n(),
            anchor: anchor.map_or("-".into(), |a| a.role.to_string()),
        });
    }
    let series = sweep_unchecked(family, spec, anchor, &t_grid(n));
    if series.too_degenerate() {
        return Err(SweepError::DegenerateFamily {
            skipped: series.n_skipped(),
            total: n,
        });
    }
    Ok(series)
}

/// Like [`sweep_quantity`] without the admissibility and skip checks;
/// used by diagnostics.
pub fn sweep_unchecked(
    family: &OrbitFamily<f64>,
    spec: &InvariantSpec,
    anchor: Option<AnchorPoint<f64>>,
    ts: &[f64],
) -> Series {
    let locus = (spec.id == "k906").then(|| outer_locus_foci(family));
    let points = ts
        .iter()
        .map(|&t| {
            let outcome = orbit_at(family, t)
                .map_err(|e| e.to_string())
                .and_then(|s| {
                    let mut ctx = EvaluationContext::new(family, &s, anchor);
                    if let Some(l) = &locus {
                        ctx = ctx.with_locus(l.clone());
                    }
                    catalog::evaluate(spec.id, &ctx).map_err(|e| e.to_string())
                });
            point(t, outcome)
        })
        .collect();
    Series { points }
}

fn point(t: f64, outcome: Result<Value<f64>, String>) -> SeriesPoint {
    match outcome {
        Ok(v) => SeriesPoint {
            t,
            value: Some(v),
            skipped: None,
        },
        Err(reason) => SeriesPoint {
            t,
            value: None,
            skipped: Some(reason),
        },
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub id: String,
    pub config: ConfigSpec,
    /// `O`, `f1`, `f2` or `x,y`; absent for rows without an M column.
    pub anchor: Option<String>,
    pub mean: Mean,
    pub max_rel_dev: f64,
    pub verdict: Verdict,
    pub closed_form_residual: Option<f64>,
    pub n_skipped: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<String>,
    #[serde(default, skip_serializing_if = "Series::is_empty")]
    pub series: Series,
}

impl Series {
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// A cell that could not be evaluated at all.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellFailure {
    pub config: ConfigSpec,
    pub id: Option<String>,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub run_id: String,
    pub plan: SweepPlan,
    pub reports: Vec<InvariantReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<CellFailure>,
}

impl RunReport {
    pub fn failing(&self) -> impl Iterator<Item = &InvariantReport> {
        self.reports
            .iter()
            .filter(|r| r.verdict != Verdict::Invariant)
    }

    /// Acceptance passes when every report is invariant and nothing failed
    /// outright. Flagged rows with a known discrepancy do not count.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
            && self
                .reports
                .iter()
                .all(|r| r.verdict == Verdict::Invariant || !r.flags.is_empty())
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    pub serial: bool,
    pub keep_series: bool,
}

pub fn run_catalog(plan: &SweepPlan) -> Result<RunReport, SweepError> {
    run_catalog_with(plan, RunOptions::default())
}

struct Cell {
    spec: &'static InvariantSpec,
    /// Index into the plan anchors, `None` for rows without an M column.
    anchor: Option<usize>,
}

fn selected_rows(plan: &SweepPlan) -> Vec<&'static InvariantSpec> {
    CATALOG
        .iter()
        .filter(|s| {
            plan.ids
                .as_ref()
                .is_none_or(|ids| ids.iter().any(|i| i == s.id))
        })
        .collect()
}

fn cells_for(
    plan: &SweepPlan,
    rows: &[&'static InvariantSpec],
    family: &OrbitFamily<f64>,
) -> Vec<Cell> {
    let n = family.n();
    let anchors: Vec<_> = plan
        .anchors
        .iter()
        .map(|a| a.resolve(&family.billiard))
        .collect();
    let mut cells = Vec::new();
    for &spec in rows {
        let wanted = |role| match plan.mode {
            Mode::Acceptance => spec.applies_to(n, role),
            Mode::Diagnostics => spec.anchor.accepts(role) && !quantity_admissible(spec, n, role),
        };
        if !spec.anchor.needs_anchor() {
            if wanted(None) {
                cells.push(Cell { spec, anchor: None });
            }
            continue;
        }
        for (i, a) in anchors.iter().enumerate() {
            if wanted(Some(a.role)) {
                cells.push(Cell {
                    spec,
                    anchor: Some(i),
                });
            }
        }
    }
    cells
}

/// Whether any row with the same expression admits `(n, role)`. Sub-rows
/// such as k806a/k806b share a quantity, so k806b at N=5 is not outside
/// the quantity's domain.
fn quantity_admissible(spec: &InvariantSpec, n: usize, role: Option<AnchorRole>) -> bool {
    CATALOG
        .iter()
        .filter(|s| s.expression == spec.expression && s.base_id() == spec.base_id())
        .any(|s| s.applies_to(n, role))
}

struct ConfigRun {
    family: OrbitFamily<f64>,
    cells: Vec<Cell>,
    /// `series[cell][t]`
    series: Vec<Vec<SeriesPoint>>,
}

fn evaluate_at(
    family: &OrbitFamily<f64>,
    cells: &[Cell],
    anchors: &[AnchorPoint<f64>],
    locus: Option<&Result<LocusFit<f64>, DerivedError>>,
    t: f64,
) -> Vec<SeriesPoint> {
    let sample: Result<OrbitSample<f64>, String> = orbit_at(family, t).map_err(|e| e.to_string());
    let sample = match sample {
        Ok(s) => s,
        Err(e) => return cells.iter().map(|_| point(t, Err(e.clone()))).collect(),
    };
    // one context per anchor slot so derived polygons are shared across rows
    let make = |a: Option<AnchorPoint<f64>>| {
        let ctx = EvaluationContext::new(family, &sample, a);
        match locus {
            Some(l) => ctx.with_locus(l.clone()),
            None => ctx,
        }
    };
    let plain = make(None);
    let anchored: Vec<_> = anchors.iter().map(|&a| make(Some(a))).collect();
    cells
        .iter()
        .map(|c| {
            let ctx = c.anchor.map_or(&plain, |i| &anchored[i]);
            point(
                t,
                catalog::evaluate(c.spec.id, ctx).map_err(|e| e.to_string()),
            )
        })
        .collect()
}

fn run_config(
    plan: &SweepPlan,
    rows: &[&'static InvariantSpec],
    spec: &ConfigSpec,
    opts: RunOptions,
) -> Result<ConfigRun, SweepError> {
    let family = build_family(&spec.to_config()?)?;
    let cells = cells_for(plan, rows, &family);
    let anchors: Vec<_> = plan
        .anchors
        .iter()
        .map(|a| a.resolve(&family.billiard))
        .collect();
    let locus = cells
        .iter()
        .any(|c| c.spec.id == "k906")
        .then(|| outer_locus_foci(&family));
    let ts = plan.t_grid();
    let eval = |&t: &f64| evaluate_at(&family, &cells, &anchors, locus.as_ref(), t);
    let by_t: Vec<Vec<SeriesPoint>> = if opts.serial {
        ts.iter().map(eval).collect()
    } else {
        ts.par_iter().map(eval).collect()
    };
    let mut series: Vec<Vec<SeriesPoint>> =
        cells.iter().map(|_| Vec::with_capacity(ts.len())).collect();
    for row in by_t {
        for (s, p) in series.iter_mut().zip(row) {
            s.push(p);
        }
    }
    Ok(ConfigRun {
        family,
        cells,
        series,
    })
}

fn summarize(
    plan: &SweepPlan,
    config: ConfigSpec,
    family: &OrbitFamily<f64>,
    cell: &Cell,
    points: Vec<SeriesPoint>,
    keep_series: bool,
) -> InvariantReport {
    let series = Series { points };
    let values = series.values();
    let mut c = classify(&values, plan.tol_rel, plan.tol_abs);
    if series.too_degenerate() {
        c.verdict = Verdict::Degenerate;
    }
    let closed = cell
        .spec
        .closed_form
        .and_then(|cf| cf.value(family))
        .filter(|_| !values.is_empty())
        .map(|v| closed_form_residual(&values, v, plan.tol_rel, plan.tol_abs));
    let mut flags = Vec::new();
    if let Some(note) = cell.spec.discrepancy {
        flags.push(format!("discrepancy: {note}"));
    }
    InvariantReport {
        id: cell.spec.id.into(),
        config,
        anchor: cell.anchor.map(|i| plan.anchors[i].to_string()),
        mean: c.mean,
        max_rel_dev: c.max_rel_dev,
        verdict: c.verdict,
        closed_form_residual: closed,
        n_skipped: series.n_skipped(),
        flags,
        series: if keep_series {
            series
        } else {
            Series::default()
        },
    }
}

/// Every selected row × config × admissible anchor. Reports are ordered by
/// catalog id, then config, then anchor, whatever the execution order.
pub fn run_catalog_with(plan: &SweepPlan, opts: RunOptions) -> Result<RunReport, SweepError> {
    plan.validate()?;
    let rows = selected_rows(plan);
    let runs: Vec<Result<ConfigRun, SweepError>> = if opts.serial {
        plan.configs
            .iter()
            .map(|c| run_config(plan, &rows, c, opts))
            .collect()
    } else {
        plan.configs
            .par_iter()
            .map(|c| run_config(plan, &rows, c, opts))
            .collect()
    };

    let mut failures = Vec::new();
    // (row index, config index, anchor slot) -> report
    let mut keyed = Vec::new();
    for (ci, (config, run)) in plan.configs.iter().zip(runs).enumerate() {
        let run = match run {
            Ok(r) => r,
            Err(e) => {
                failures.push(CellFailure {
                    config: *config,
                    id: None,
                    message: e.to_string(),
                });
                continue;
            }
        };
        for (cell, points) in run.cells.iter().zip(run.series) {
            let ri = rows
                .iter()
                .position(|r| r.id == cell.spec.id)
                .unwrap_or(usize::MAX);
            let report = summarize(plan, *config, &run.family, cell, points, opts.keep_series);
            keyed.push(((ri, ci, cell.anchor), report));
        }
    }
    keyed.sort_by_key(|(k, _)| *k);
    Ok(RunReport {
        schema_version: SCHEMA_VERSION,
        run_id: plan.run_id(),
        plan: plan.clone(),
        reports: keyed.into_iter().map(|(_, r)| r).collect(),
        failures,
    })
}

/// Quantities known to vary, used to check the harness can say "no".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Probe {
    /// Orbit area `A`.
    Area,
    /// First internal angle `θ₁`.
    Theta1,
    /// `Σd₁ᵢ`, only probed at odd N.
    SumD1,
}

impl Probe {
    pub const ALL: [Probe; 3] = [Probe::Area, Probe::Theta1, Probe::SumD1];

    pub fn applies_to(self, n: usize) -> bool {
        self != Probe::SumD1 || n % 2 == 1
    }

    fn eval(self, s: &OrbitSample<f64>, f: &OrbitFamily<f64>) -> Result<f64, String> {
        Ok(match self {
            Probe::Area => s.vertices.signed_area(),
            Probe::Theta1 => s.vertices.internal_angles().map_err(|e| e.to_string())?[0],
            Probe::SumD1 => {
                let f1 = f.billiard.foci().0;
                s.vertices.vertices().iter().map(|v| v.distance(f1)).sum()
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeResult {
    pub probe: Probe,
    pub config: ConfigSpec,
    pub max_rel_dev: f64,
    pub verdict: Verdict,
}

/// Runs every applicable probe on every plan config and fails if any of
/// them comes out invariant.
pub fn negative_control(plan: &SweepPlan) -> Result<Vec<ProbeResult>, SweepError> {
    let results = probe_all(plan)?;
    match results.iter().find(|r| r.verdict == Verdict::Invariant) {
        Some(r) => Err(SweepError::HarnessIntegrity {
            probe: format!("{:?}", r.probe),
            config: r.config,
        }),
        None => Ok(results),
    }
}

/// Probe results for every plan config, without judging them.
pub fn probe_all(plan: &SweepPlan) -> Result<Vec<ProbeResult>, SweepError> {
    plan.validate()?;
    let ts = plan.t_grid();
    let mut out = Vec::new();
    for config in &plan.configs {
        let family = build_family(&config.to_config()?)?;
        let samples = ts
            .iter()
            .map(|&t| orbit_at(&family, t))
            .collect::<Result<Vec<_>, _>>()?;
        for probe in Probe::ALL.into_iter().filter(|p| p.applies_to(config.n)) {
            let values = samples
                .iter()
                .filter_map(|s| probe.eval(s, &family).ok().map(Value::Scalar))
                .collect::<Vec<_>>();
            let c = classify(&values, plan.tol_rel, plan.tol_abs);
            out.push(ProbeResult {
                probe,
                config: *config,
                max_rel_dev: c.max_rel_dev,
                verdict: c.verdict,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derived::AnchorSpec;

    #[test]
    fn plan_validation() {
        let p = SweepPlan::grid(&[4], &[2.0]).with_samples(4);
        assert!(matches!(p.validate(), Err(SweepError::InvalidPlan(_))));
        let p = SweepPlan::grid(&[4], &[2.0]).with_ids(["k999"]);
        assert!(p.validate().is_err());
    }

    #[test]
    fn run_id_tracks_the_plan() {
        let p = SweepPlan::grid(&[4], &[2.0]);
        assert_eq!(p.run_id(), p.clone().run_id());
        assert_ne!(p.run_id(), p.clone().with_samples(64).run_id());
        assert_eq!(p.run_id().len(), 64);
    }

    #[test]
    fn k101_on_the_rhombus_family_is_zero() {
        let f = build_family(&crate::orbit::BilliardConfig::new(2.0, 1.0, 4).unwrap()).unwrap();
        let s = sweep_quantity(&f, "k101", None, 64).unwrap();
        assert_eq!(s.points.len(), 64);
        for v in s.values() {
            let Value::Scalar(x) = v else { panic!() };
            assert!(x.abs() < 1e-10);
        }
    }

    #[test]
    fn anchored_rows_need_an_admissible_anchor() {
        let f = build_family(&crate::orbit::BilliardConfig::new(2.0, 1.0, 4).unwrap()).unwrap();
        let center = AnchorSpec::CENTER.resolve(&f.billiard);
        assert!(matches!(
            sweep_quantity(&f, "k201", Some(center), 16),
            Err(SweepError::NotApplicable { .. })
        ));
        assert!(sweep_quantity(&f, "k201", None, 16).is_err());
    }
}
