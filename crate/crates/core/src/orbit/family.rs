use serde::{Deserialize, Serialize};

use super::{
    caustic_from_segment, solve_seed_orbit, tangent_step, BilliardConfig, OrbitError,
    DEFAULT_SEED_TOL,
};
use crate::geometry::{Ellipse, Point, Polygon};
use crate::scalar::Real;

/// Largest accepted `|P_{N+1} − P₁|`.
pub const CLOSURE_TOL: f64 = 1e-9;
/// Largest accepted gap between `⟨𝒜x, v⟩` and `√(a²−a″²)/(ab)`.
pub const J_CHECK_TOL: f64 = 1e-8;

/// A solved Poncelet family: billiard, confocal caustic, invariant
/// perimeter and Joachimsthal constant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrbitFamily<T> {
    pub config: BilliardConfig<T>,
    pub billiard: Ellipse<T>,
    pub caustic: Ellipse<T>,
    /// Perimeter `L`, the same for every member.
    pub perimeter: T,
    /// Joachimsthal constant `J`.
    pub joachimsthal: T,
    /// Squared bisection error of the seed orbit.
    pub seed_energy: T,
}

/// One member of the family.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrbitSample<T> {
    /// Eccentric angle of `P₁`, reduced to `[0, 2π)`.
    pub t: T,
    pub vertices: Polygon<T>,
    /// Caustic contact point of side `i` (from `Pᵢ` to `Pᵢ₊₁`).
    pub tangency_points: Polygon<T>,
    pub closure_error: T,
}

impl<T: Real> OrbitFamily<T> {
    #[inline]
    pub fn n(&self) -> usize {
        self.config.n()
    }

    /// `√(a² − a″²)/(ab)`.
    pub fn joachimsthal_from_axes(billiard: &Ellipse<T>, caustic: &Ellipse<T>) -> T {
        let (a, b) = (billiard.a(), billiard.b());
        (a * a - caustic.a() * caustic.a()).max(T::zero()).sqrt() / (a * b)
    }

    pub fn sample(&self, t: T) -> Result<OrbitSample<T>, OrbitError> {
        orbit_at(self, t)
    }
}

/// `⟨𝒜x, v⟩` with `𝒜 = diag(1/a², 1/b²)`, `x` a bounce point and `v` the
/// unit velocity arriving at it.
fn joachimsthal_at<T: Real>(e: &Ellipse<T>, x: Point<T>, v: Point<T>) -> T {
    e.gradient(x).dot(v)
}

/// Solves the seed orbit and derives the caustic, `L` and `J`.
pub fn build_family<T: Real>(config: &BilliardConfig<T>) -> Result<OrbitFamily<T>, OrbitError> {
    let billiard = config.billiard();
    let seed = solve_seed_orbit(config, T::tol_floor(DEFAULT_SEED_TOL))?;
    let v = seed.polygon.vertices();
    let caustic = caustic_from_segment(&billiard, v[0], v[1])?;
    let perimeter = seed.polygon.perimeter();
    let j = OrbitFamily::joachimsthal_from_axes(&billiard, &caustic);
    let tol = T::tol_floor(J_CHECK_TOL);
    for (i, (p, q)) in seed.polygon.sides().enumerate() {
        let dir = (q - p)
            .normalized()
            .ok_or(crate::geometry::GeometryError::ZeroLengthEdge(i))?;
        let value = joachimsthal_at(&billiard, q, dir);
        if !((value - j).abs() <= tol) {
            return Err(OrbitError::JoachimsthalMismatch {
                segment: i,
                value: value.as_f64(),
                expected: j.as_f64(),
            });
        }
    }
    Ok(OrbitFamily {
        config: *config,
        billiard,
        caustic,
        perimeter,
        joachimsthal: j,
        seed_energy: seed.energy,
    })
}

/// Family member whose first vertex has eccentric angle `t`.
pub fn orbit_at<T: Real>(family: &OrbitFamily<T>, t: T) -> Result<OrbitSample<T>, OrbitError> {
    let tau = T::TAU();
    let mut t = t - tau * (t / tau).floor();
    if t >= tau {
        t = T::zero();
    }
    let n = family.n();
    let first = family.billiard.point_at(t);
    let mut vertices = Vec::with_capacity(n);
    let mut contacts = Vec::with_capacity(n);
    let mut p = first;
    for _ in 0..n {
        vertices.push(p);
        let (q, c) = tangent_step(&family.billiard, &family.caustic, p)?;
        contacts.push(c);
        p = q;
    }
    let closure_error = p.distance(first);
    if !(closure_error < T::tol_floor(CLOSURE_TOL)) {
        return Err(OrbitError::StaleCaustic {
            closure_error: closure_error.as_f64(),
        });
    }
    Ok(OrbitSample {
        t,
        vertices: Polygon::new(vertices)?,
        tangency_points: Polygon::new(contacts)?,
        closure_error,
    })
}
