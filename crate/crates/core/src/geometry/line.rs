use super::{GeometryError, Point};
use crate::scalar::Real;

/// An infinite line stored as a point on it plus a direction.
///
/// The polar-coefficient form `u·x + v·y = 1` used by the tangency formulas
/// cannot describe lines through the origin, so it is offered as a view
/// ([`Line::polar_coeffs`]) rather than as the storage format.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line<T> {
    point: Point<T>,
    direction: Point<T>,
}

impl<T: Real> Line<T> {
    pub fn new(point: Point<T>, direction: Point<T>) -> Result<Self, GeometryError> {
        let direction = direction
            .normalized()
            .ok_or(GeometryError::DegenerateLine)?;
        if !point.is_finite() {
            return Err(GeometryError::DegenerateLine);
        }
        Ok(Self { point, direction })
    }

    pub fn through(p: Point<T>, q: Point<T>) -> Result<Self, GeometryError> {
        Self::new(p, q - p)
    }

    /// The line `u·x + v·y = 1`.
    pub fn from_polar_coeffs(u: T, v: T) -> Result<Self, GeometryError> {
        let n2 = u * u + v * v;
        if n2 == T::zero() || !n2.is_finite() {
            return Err(GeometryError::DegenerateLine);
        }
        let foot = Point::new(u / n2, v / n2);
        Self::new(foot, Point::new(-v, u))
    }

    /// Line through `point` perpendicular to `normal`.
    pub fn with_normal(point: Point<T>, normal: Point<T>) -> Result<Self, GeometryError> {
        Self::new(point, normal.perp())
    }

    #[inline]
    pub fn point(&self) -> Point<T> {
        self.point
    }

    /// Unit direction.
    #[inline]
    pub fn direction(&self) -> Point<T> {
        self.direction
    }

    /// Unit normal (direction rotated counterclockwise).
    #[inline]
    pub fn normal(&self) -> Point<T> {
        self.direction.perp()
    }

    /// `(u, v)` with `u·x + v·y = 1`, or `None` when the line passes
    /// through the origin.
    pub fn polar_coeffs(&self) -> Option<(T, T)> {
        let n = self.normal();
        let c = n.dot(self.point);
        let scale = self.point.norm().max(T::one());
        if c.abs() <= T::epsilon() * scale {
            return None;
        }
        Some((n.x / c, n.y / c))
    }

    /// Signed distance from `p` to the line, positive on the normal side.
    #[inline]
    pub fn signed_distance(&self, p: Point<T>) -> T {
        self.normal().dot(p - self.point)
    }

    /// Intersection with another line; `None` when parallel.
    pub fn intersect(&self, other: &Self) -> Option<Point<T>> {
        let den = self.direction.cross(other.direction);
        if den.abs() <= T::lit(1e-14) {
            return None;
        }
        let s = (other.point - self.point).cross(other.direction) / den;
        let p = self.point + self.direction * s;
        p.is_finite().then_some(p)
    }
}

/// The unique point `q` on `line` with `q - m` perpendicular to the line.
pub fn foot_of_perpendicular<T: Real>(m: Point<T>, line: &Line<T>) -> Point<T> {
    let d = line.direction();
    line.point() + d * (m - line.point()).dot(d)
}
