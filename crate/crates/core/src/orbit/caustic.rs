use super::{BilliardConfig, OrbitError};
use crate::geometry::{Ellipse, Line, Point};
use crate::scalar::Real;

/// Confocal ellipse tangent to the line through `p1` and `p2`.
///
/// Writing the line as `u·x + v·y = 1`, the confocal conic
/// `x²/(a²−λ) + y²/(b²−λ) = 1` touches it for
/// `λ = (a²u² + b²v² − 1)/(u² + v²)`; it is an ellipse iff `0 < λ < b²`.
pub fn caustic_from_segment<T: Real>(
    e: &Ellipse<T>,
    p1: Point<T>,
    p2: Point<T>,
) -> Result<Ellipse<T>, OrbitError> {
    let line = Line::through(p1, p2)?;
    let (u, v) = line.polar_coeffs().ok_or(OrbitError::LineThroughCenter)?;
    let (a2, b2) = (e.a().sq(), e.b().sq());
    let lambda = (a2 * u * u + b2 * v * v - T::one()) / (u * u + v * v);
    if !(lambda > T::zero() && lambda < b2) {
        return Err(OrbitError::NotConfocalEllipse {
            lambda: lambda.as_f64(),
        });
    }
    Ok(Ellipse::new((a2 - lambda).sqrt(), (b2 - lambda).sqrt())?)
}

/// One billiard step along the counterclockwise caustic tangent through `p`.
///
/// Returns the next bounce point and the tangency point of the traversed
/// side with the caustic.
pub fn tangent_step<T: Real>(
    billiard: &Ellipse<T>,
    caustic: &Ellipse<T>,
    p: Point<T>,
) -> Result<(Point<T>, Point<T>), OrbitError> {
    let (ac, bc) = (caustic.a(), caustic.b());
    // tangents at (ac cos s, bc sin s) through p solve X cos s + Y sin s = 1
    let (x, y) = (p.x / ac, p.y / bc);
    let r = x.hypot(y);
    if !(r > T::one()) {
        return Err(OrbitError::InsideCaustic);
    }
    let phi = y.atan2(x);
    let delta = (T::one() / r).acos();
    let pick = |s: T| {
        let contact = Point::new(ac * s.cos(), bc * s.sin());
        let dir = Point::new(-ac * s.sin(), bc * s.cos());
        ((contact - p).dot(dir), contact, dir)
    };
    let (fa, ca, da) = pick(phi + delta);
    let (fb, cb, db) = pick(phi - delta);
    let (contact, dir) = if fa >= fb { (ca, da) } else { (cb, db) };
    Ok((billiard.chord_end(p, dir), contact))
}

/// Total eccentric angle swept by `n` tangency steps from `(a, 0)` with a
/// trial caustic major semi-axis `ac`.
pub fn winding_sweep<T: Real>(billiard: &Ellipse<T>, ac: T, n: usize) -> Result<T, OrbitError> {
    let c2 = billiard.a().sq() - billiard.b().sq();
    let caustic = Ellipse::new(ac, (ac * ac - c2).sqrt())?;
    let tau = T::TAU();
    let mut p = Point::new(billiard.a(), T::zero());
    let mut total = T::zero();
    for _ in 0..n {
        let (q, _) = tangent_step(billiard, &caustic, p)?;
        let d = billiard.eccentric_angle(q) - billiard.eccentric_angle(p);
        total += d - tau * (d / tau).floor();
        p = q;
    }
    Ok(total)
}

/// Caustic found by bisection on the signed closure defect
/// `sweep(a″) − 2πk` over `a″ ∈ (c, a)`.
///
/// The sweep decreases monotonically from about `Nπ` near the foci to 0 at
/// the billiard, so the root is bracketed for every rotation number below
/// `N/2`.
pub fn caustic_by_closure<T: Real>(config: &BilliardConfig<T>) -> Result<Ellipse<T>, OrbitError> {
    let e = config.billiard();
    let (a, c) = (e.a(), e.focal_distance());
    let margin = (a - c) * T::tol_floor(1e-12);
    let target = T::TAU() * T::of_usize(config.rotation());
    let f = |x: T| winding_sweep(&e, x, config.n()).map(|s| s - target);
    let (mut lo, mut hi) = (c + margin, a - margin);
    let (flo, fhi) = (f(lo)?, f(hi)?);
    if !(flo > T::zero() && fhi < T::zero()) {
        return Err(OrbitError::NoSignChange {
            low: flo.as_f64(),
            high: fhi.as_f64(),
        });
    }
    for _ in 0..200 {
        let mid = T::half() * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid)?;
        if fm == T::zero() {
            lo = mid;
            hi = mid;
            break;
        }
        if fm > T::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= T::two() * T::epsilon() * a {
            break;
        }
    }
    let ac = T::half() * (lo + hi);
    Ok(Ellipse::new(ac, (ac * ac - c * c).sqrt())?)
}
