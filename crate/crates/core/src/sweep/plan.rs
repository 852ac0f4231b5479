use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::SweepError;
use crate::derived::AnchorSpec;
use crate::orbit::BilliardConfig;

pub const DEFAULT_T_SAMPLES: usize = 128;
pub const DEFAULT_TOL_REL: f64 = 1e-8;
pub const DEFAULT_TOL_ABS: f64 = 1e-10;
pub const MIN_T_SAMPLES: usize = 8;
/// Offset of the uniform `t` grid, keeping samples off the axis-symmetric
/// members where some derived polygons degenerate.
pub const GRID_OFFSET: f64 = 1e-3;

/// One billiard of a sweep, as written in a plan file.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConfigSpec {
    pub a: f64,
    pub b: f64,
    pub n: usize,
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub rotation: usize,
}

fn one() -> usize {
    1
}

fn is_one(k: &usize) -> bool {
    *k == 1
}

impl ConfigSpec {
    pub fn new(a: f64, b: f64, n: usize) -> Self {
        Self {
            a,
            b,
            n,
            rotation: 1,
        }
    }

    pub fn to_config(&self) -> Result<BilliardConfig<f64>, SweepError> {
        Ok(BilliardConfig::with_rotation(
            self.a,
            self.b,
            self.n,
            self.rotation,
        )?)
    }
}

/// Acceptance evaluates each row where its "which N" column admits N;
/// diagnostics evaluates it only where the column excludes N.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    #[default]
    Acceptance,
    Diagnostics,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepPlan {
    pub configs: Vec<ConfigSpec>,
    #[serde(default = "default_t_samples")]
    pub t_samples: usize,
    #[serde(default)]
    pub anchors: Vec<AnchorSpec>,
    #[serde(default = "default_tol_rel")]
    pub tol_rel: f64,
    #[serde(default = "default_tol_abs")]
    pub tol_abs: f64,
    /// Restricts the run to these ids; all rows when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ids: Option<Vec<String>>,
    #[serde(default)]
    pub mode: Mode,
}

fn default_t_samples() -> usize {
    DEFAULT_T_SAMPLES
}

fn default_tol_rel() -> f64 {
    DEFAULT_TOL_REL
}

fn default_tol_abs() -> f64 {
    DEFAULT_TOL_ABS
}

impl SweepPlan {
    pub fn new(configs: Vec<ConfigSpec>) -> Self {
        Self {
            configs,
            t_samples: DEFAULT_T_SAMPLES,
            anchors: Vec::new(),
            tol_rel: DEFAULT_TOL_REL,
            tol_abs: DEFAULT_TOL_ABS,
            ids: None,
            mode: Mode::Acceptance,
        }
    }

    /// `N × a/b` grid with `b = 1`.
    pub fn grid(ns: &[usize], ratios: &[f64]) -> Self {
        let configs = ns
            .iter()
            .flat_map(|&n| ratios.iter().map(move |&r| ConfigSpec::new(r, 1.0, n)))
            .collect();
        Self::new(configs)
    }

    pub fn with_anchors(mut self, anchors: Vec<AnchorSpec>) -> Self {
        self.anchors = anchors;
        self
    }

    pub fn with_ids<S: Into<String>>(mut self, ids: impl IntoIterator<Item = S>) -> Self {
        self.ids = Some(ids.into_iter().map(Into::into).collect());
        self
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_samples(mut self, t_samples: usize) -> Self {
        self.t_samples = t_samples;
        self
    }

    pub fn validate(&self) -> Result<(), SweepError> {
        if self.t_samples < MIN_T_SAMPLES {
            return Err(SweepError::InvalidPlan(format!(
                "t_samples must be at least {MIN_T_SAMPLES}, got {}",
                self.t_samples
            )));
        }
        if !(self.tol_rel > 0.0 && self.tol_abs > 0.0) {
            return Err(SweepError::InvalidPlan(
                "tolerances must be positive".into(),
            ));
        }
        if let Some(ids) = &self.ids {
            for id in ids {
                crate::catalog::lookup(id)?;
            }
        }
        Ok(())
    }

    /// SHA-256 of the plan's canonical JSON, hex encoded.
    pub fn run_id(&self) -> String {
        let json = serde_json::to_vec(self).expect("plan serializes");
        hex::encode(Sha256::digest(&json))
    }

    /// `t_k = offset + 2πk/n`.
    pub fn t_grid(&self) -> Vec<f64> {
        t_grid(self.t_samples)
    }
}

pub fn t_grid(n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| GRID_OFFSET + std::f64::consts::TAU * k as f64 / n as f64)
        .collect()
}
