//! N-periodic billiard orbits: the seed solver, the confocal caustic and
//! family generation by tangency iteration.

mod cache;
mod caustic;
mod family;
mod seed;

pub use cache::FamilyCache;
pub use caustic::{caustic_by_closure, caustic_from_segment, tangent_step, winding_sweep};
pub use family::{build_family, orbit_at, OrbitFamily, OrbitSample, CLOSURE_TOL, J_CHECK_TOL};
pub use seed::{solve_seed_orbit, symmetric_angles, SeedMethod, SeedOrbit, DEFAULT_SEED_TOL};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{Ellipse, GeometryError};
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OrbitError {
    #[error("invalid billiard configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("line is not tangent to a confocal ellipse (lambda = {lambda})")]
    NotConfocalEllipse { lambda: f64 },
    #[error("line passes through the center and cannot touch a centered conic")]
    LineThroughCenter,
    #[error("point lies on or inside the caustic")]
    InsideCaustic,
    #[error("closure error has no sign change in (c, a): {low} .. {high}")]
    NoSignChange { low: f64, high: f64 },
    #[error("seed solver did not converge after {iterations} iterations (E = {energy:e})")]
    SolverDidNotConverge { energy: f64, iterations: usize },
    #[error("Joachimsthal check failed on segment {segment}: {value} vs {expected}")]
    JoachimsthalMismatch {
        segment: usize,
        value: f64,
        expected: f64,
    },
    #[error("orbit does not close (error {closure_error:e}); caustic is stale or inaccurate")]
    StaleCaustic { closure_error: f64 },
}

/// Billiard semi-axes, period and rotation number of the requested family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BilliardConfig<T> {
    a: T,
    b: T,
    n: usize,
    rotation: usize,
}

impl<T: Real> BilliardConfig<T> {
    /// Family with rotation number 1.
    pub fn new(a: T, b: T, n: usize) -> Result<Self, OrbitError> {
        Self::with_rotation(a, b, n, 1)
    }

    pub fn with_rotation(a: T, b: T, n: usize, rotation: usize) -> Result<Self, OrbitError> {
        if !(a.is_finite() && b > T::zero() && a > b) {
            return Err(OrbitError::InvalidConfig(format!(
                "need a > b > 0, got a={a}, b={b}"
            )));
        }
        if n < 3 {
            return Err(OrbitError::InvalidConfig(format!("need N >= 3, got {n}")));
        }
        if rotation == 0 || 2 * rotation >= n || gcd(n, rotation) != 1 {
            return Err(OrbitError::InvalidConfig(format!(
                "rotation number {rotation} must be coprime to N={n} and below N/2"
            )));
        }
        Ok(Self { a, b, n, rotation })
    }

    #[inline]
    pub fn a(&self) -> T {
        self.a
    }

    #[inline]
    pub fn b(&self) -> T {
        self.b
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rotation(&self) -> usize {
        self.rotation
    }

    pub fn billiard(&self) -> Ellipse<T> {
        Ellipse::new(self.a, self.b).expect("validated in constructor")
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        assert!(BilliardConfig::new(2.0, 1.0, 4).is_ok());
        assert!(BilliardConfig::new(1.0, 1.0, 4).is_err());
        assert!(BilliardConfig::new(2.0, 1.0, 2).is_err());
        assert!(BilliardConfig::with_rotation(2.0, 1.0, 5, 2).is_ok());
        assert!(BilliardConfig::with_rotation(2.0, 1.0, 6, 2).is_err());
        assert!(BilliardConfig::with_rotation(2.0, 1.0, 6, 3).is_err());
        assert!(BilliardConfig::with_rotation(2.0, 1.0, 5, 0).is_err());
    }
}
