use serde::{Deserialize, Serialize};

use super::{outer_polygon, DerivedError};
use crate::geometry::Point;
use crate::orbit::{orbit_at, OrbitFamily};
use crate::scalar::Real;

/// Family parameters sampled for the locus fit.
pub const LOCUS_SAMPLES: usize = 32;
/// Largest accepted residual of the implicit fit.
pub const LOCUS_FIT_TOL: f64 = 1e-6;

/// Axis-aligned, origin-centered ellipse `x²/α² + y²/β² = 1` through the
/// outer-polygon vertices of a family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LocusFit<T> {
    pub alpha: T,
    pub beta: T,
    /// `(f′₁, f′₂)` on the locus' major axis, `f′₁` on the negative side.
    pub foci: (Point<T>, Point<T>),
    /// Max `|x²/α² + y²/β² − 1|` over the fitted vertices.
    pub residual: T,
}

/// Least-squares fit of `p·x² + q·y² = 1` to outer vertices at
/// [`LOCUS_SAMPLES`] evenly spaced `t`.
///
/// For `N = 3` the locus is taller than wide, so the foci lie on the y-axis.
pub fn outer_locus_foci<T: Real>(family: &OrbitFamily<T>) -> Result<LocusFit<T>, DerivedError> {
    let mut pts = Vec::with_capacity(LOCUS_SAMPLES * family.n());
    for k in 0..LOCUS_SAMPLES {
        let t = T::TAU() * T::of_usize(k) / T::of_usize(LOCUS_SAMPLES);
        let s = orbit_at(family, t)?;
        match outer_polygon(&s, &family.billiard) {
            Ok(p) => pts.extend_from_slice(p.vertices()),
            Err(DerivedError::VertexAtInfinity { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    // normal equations for the two coefficients
    let (mut sxx, mut sxy, mut syy, mut sx, mut sy) =
        (T::zero(), T::zero(), T::zero(), T::zero(), T::zero());
    for p in &pts {
        let (u, v) = (p.x * p.x, p.y * p.y);
        sxx += u * u;
        sxy += u * v;
        syy += v * v;
        sx += u;
        sy += v;
    }
    let det = sxx * syy - sxy * sxy;
    let p = (sx * syy - sy * sxy) / det;
    let q = (sxx * sy - sxy * sx) / det;
    if !(p > T::zero() && q > T::zero() && det.is_finite()) {
        return Err(DerivedError::LocusNotElliptic {
            residual: f64::INFINITY,
        });
    }
    let residual = pts.iter().fold(T::zero(), |acc, pt| {
        acc.max((p * pt.x * pt.x + q * pt.y * pt.y - T::one()).abs())
    });
    if !(residual <= T::tol_floor(LOCUS_FIT_TOL)) {
        return Err(DerivedError::LocusNotElliptic {
            residual: residual.as_f64(),
        });
    }
    let (alpha, beta) = (T::one() / p.sqrt(), T::one() / q.sqrt());
    let c = (alpha * alpha - beta * beta).abs().sqrt();
    let foci = if alpha >= beta {
        (Point::new(-c, T::zero()), Point::new(c, T::zero()))
    } else {
        (Point::new(T::zero(), -c), Point::new(T::zero(), c))
    };
    Ok(LocusFit {
        alpha,
        beta,
        foci,
        residual,
    })
}
