use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::GeometryError;
use crate::scalar::Real;

/// A point (or free vector) in the billiard plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Real> Point<T> {
    #[inline]
    pub const fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    #[inline]
    pub fn origin() -> Self {
        Self::new(T::zero(), T::zero())
    }

    #[inline]
    pub fn dot(self, other: Self) -> T {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the planar cross product.
    #[inline]
    pub fn cross(self, other: Self) -> T {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm_sq(self) -> T {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> T {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn distance(self, other: Self) -> T {
        (self - other).norm()
    }

    /// Counterclockwise rotation by a right angle.
    #[inline]
    pub fn perp(self) -> Self {
        Self::new(-self.y, self.x)
    }

    /// Unit vector in the same direction; `None` for the zero vector.
    pub fn normalized(self) -> Option<Self> {
        let n = self.norm();
        (n > T::zero() && n.is_finite()).then(|| self / n)
    }

    #[inline]
    pub fn midpoint(self, other: Self) -> Self {
        (self + other) * T::half()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn to_f64(self) -> Point<f64> {
        Point::new(self.x.as_f64(), self.y.as_f64())
    }
}

impl<T: Real> Add for Point<T> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<T: Real> AddAssign for Point<T> {
    #[inline]
    fn add_assign(&mut self, rhs: Self) {
        self.x += rhs.x;
        self.y += rhs.y;
    }
}

impl<T: Real> Sub for Point<T> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<T: Real> Mul<T> for Point<T> {
    type Output = Self;
    #[inline]
    fn mul(self, s: T) -> Self {
        Self::new(self.x * s, self.y * s)
    }
}

impl<T: Real> Div<T> for Point<T> {
    type Output = Self;
    #[inline]
    fn div(self, s: T) -> Self {
        Self::new(self.x / s, self.y / s)
    }
}

impl<T: Real> Neg for Point<T> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

/// Inversion in the circle of the given center and radius:
/// `center + radius² (p - center) / |p - center|²`.
pub fn invert_in_circle<T: Real>(
    p: Point<T>,
    center: Point<T>,
    radius: T,
) -> Result<Point<T>, GeometryError> {
    let d = p - center;
    let r2 = d.norm_sq();
    if r2 == T::zero() || !r2.is_finite() {
        return Err(GeometryError::InversionSingularity);
    }
    Ok(center + d * (radius * radius / r2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn inversion_examples() {
        let c = Point::new(0.0, 0.0);
        let q = invert_in_circle(Point::new(2.0, 0.0), c, 1.0).unwrap();
        assert_relative_eq!(q.x, 0.5);
        assert_eq!(q.y, 0.0);

        let s3 = 3f64.sqrt();
        let q = invert_in_circle(Point::new(2.0, 0.0), Point::new(s3, 0.0), 1.0).unwrap();
        // 1/(2 - sqrt3) = 2 + sqrt3
        assert_relative_eq!(q.x, 2.0 + 2.0 * s3, max_relative = 1e-14);
        assert_relative_eq!(q.x, 5.464_101_615_137_754, max_relative = 1e-14);
    }

    #[test]
    fn inversion_at_center_is_singular() {
        let c = Point::new(1.0, -2.0);
        assert_eq!(
            invert_in_circle(c, c, 1.0),
            Err(GeometryError::InversionSingularity)
        );
    }

    #[test]
    fn works_in_single_precision() {
        let q = invert_in_circle(Point::new(0.0f32, 4.0), Point::origin(), 2.0).unwrap();
        assert!((q.y - 1.0).abs() < 1e-6);
    }
}
