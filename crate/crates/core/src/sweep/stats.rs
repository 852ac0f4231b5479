use serde::{Deserialize, Serialize};

use crate::catalog::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Invariant,
    NotInvariant,
    Degenerate,
}

/// Mean of a series: one number, or one per component.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Mean {
    Scalar(f64),
    Components(Vec<f64>),
}

impl Mean {
    pub fn components(&self) -> Vec<f64> {
        match self {
            Self::Scalar(v) => vec![*v],
            Self::Components(v) => v.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub mean: Mean,
    pub max_rel_dev: f64,
    pub verdict: Verdict,
}

/// Per-component columns of a series. Radii are pooled into one column.
fn columns(values: &[Value<f64>]) -> Vec<Vec<f64>> {
    let Some(first) = values.first() else {
        return Vec::new();
    };
    match first {
        Value::Radii(_) => vec![values.iter().flat_map(|v| v.components()).collect()],
        _ => {
            let k = first.components().len();
            let mut cols = vec![Vec::with_capacity(values.len()); k];
            for v in values {
                for (col, x) in cols.iter_mut().zip(v.components()) {
                    col.push(x);
                }
            }
            cols
        }
    }
}

/// Deviation normaliser: `|mean|`, but never below `tol_abs/tol_rel`, so
/// near-zero means are judged on absolute spread.
fn scale(mean: f64, tol_rel: f64, tol_abs: f64) -> f64 {
    mean.abs().max(tol_abs / tol_rel)
}

/// Invariant iff `max|vᵢ − mean| / max(|mean|, tol_abs/tol_rel) < tol_rel`
/// in every component.
pub fn classify(values: &[Value<f64>], tol_rel: f64, tol_abs: f64) -> Classification {
    let cols = columns(values);
    if cols.is_empty() || cols[0].is_empty() {
        return Classification {
            mean: Mean::Components(Vec::new()),
            max_rel_dev: f64::INFINITY,
            verdict: Verdict::Degenerate,
        };
    }
    let mut means = Vec::with_capacity(cols.len());
    let mut worst = 0.0f64;
    for col in &cols {
        let mean = col.iter().sum::<f64>() / col.len() as f64;
        let dev = col.iter().fold(0.0f64, |m, x| m.max((x - mean).abs()));
        worst = worst.max(dev / scale(mean, tol_rel, tol_abs));
        means.push(mean);
    }
    let verdict = if worst < tol_rel {
        Verdict::Invariant
    } else {
        Verdict::NotInvariant
    };
    let mean = match (values[0].clone(), means.len()) {
        (Value::Scalar(_) | Value::Radii(_), 1) => Mean::Scalar(means[0]),
        _ => Mean::Components(means),
    };
    Classification {
        mean,
        max_rel_dev: worst,
        verdict,
    }
}

/// Largest normalised gap between any component and the closed form.
pub fn closed_form_residual(values: &[Value<f64>], target: f64, tol_rel: f64, tol_abs: f64) -> f64 {
    let s = scale(target, tol_rel, tol_abs);
    values
        .iter()
        .flat_map(|v| v.components())
        .fold(0.0f64, |m, x| m.max((x - target).abs() / s))
}
