use serde::{Deserialize, Serialize};

use super::{GeometryError, Line, Point};
use crate::scalar::Real;

/// Relative residual of `x²/a² + y²/b² = 1` accepted as "on the ellipse".
pub const ON_ELLIPSE_TOL: f64 = 1e-9;

/// Axis-aligned, origin-centered ellipse with semi-axes `a ≥ b > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ellipse<T> {
    a: T,
    b: T,
}

/// Point, outward unit normal, counterclockwise unit tangent and tangent
/// line at one eccentric angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame<T> {
    pub point: Point<T>,
    pub unit_normal: Point<T>,
    pub unit_tangent: Point<T>,
    pub tangent_line: Line<T>,
}

impl<T: Real> Ellipse<T> {
    pub fn new(a: T, b: T) -> Result<Self, GeometryError> {
        if !(a.is_finite() && b > T::zero() && a >= b) {
            return Err(GeometryError::InvalidEllipse {
                a: a.as_f64(),
                b: b.as_f64(),
            });
        }
        Ok(Self { a, b })
    }

    #[inline]
    pub fn a(&self) -> T {
        self.a
    }

    #[inline]
    pub fn b(&self) -> T {
        self.b
    }

    /// Focal half-distance `c = √(a² − b²)`.
    #[inline]
    pub fn focal_distance(&self) -> T {
        (self.a * self.a - self.b * self.b).max(T::zero()).sqrt()
    }

    /// `(f₁, f₂) = ((−c, 0), (c, 0))`.
    pub fn foci(&self) -> (Point<T>, Point<T>) {
        let c = self.focal_distance();
        (Point::new(-c, T::zero()), Point::new(c, T::zero()))
    }

    #[inline]
    pub fn point_at(&self, t: T) -> Point<T> {
        Point::new(self.a * t.cos(), self.b * t.sin())
    }

    /// Eccentric angle of a point on (or scaled from) the ellipse, in (−π, π].
    #[inline]
    pub fn eccentric_angle(&self, p: Point<T>) -> T {
        (p.y / self.b).atan2(p.x / self.a)
    }

    /// `x²/a² + y²/b²`; equals 1 on the curve.
    #[inline]
    pub fn implicit(&self, p: Point<T>) -> T {
        (p.x / self.a).sq() + (p.y / self.b).sq()
    }

    pub fn contains_on_curve(&self, p: Point<T>, rel_tol: T) -> bool {
        (self.implicit(p) - T::one()).abs() <= rel_tol
    }

    /// Gradient direction of the implicit form at `p`, `(x/a², y/b²)`.
    #[inline]
    pub fn gradient(&self, p: Point<T>) -> Point<T> {
        Point::new(p.x / (self.a * self.a), p.y / (self.b * self.b))
    }

    /// Outward unit normal at a curve point.
    pub fn unit_normal(&self, p: Point<T>) -> Point<T> {
        self.gradient(p)
            .normalized()
            .unwrap_or_else(|| Point::new(T::one(), T::zero()))
    }

    /// Tangent line `x·x₀/a² + y·y₀/b² = 1` at a curve point (the polar of `p`).
    pub fn polar_line(&self, p: Point<T>) -> Result<Line<T>, GeometryError> {
        let g = self.gradient(p);
        Line::from_polar_coeffs(g.x, g.y)
    }

    pub fn frame(&self, t: T) -> Frame<T> {
        let point = self.point_at(t);
        let unit_normal = self.unit_normal(point);
        let unit_tangent = unit_normal.perp();
        let tangent_line = Line::new(point, unit_tangent).expect("unit tangent is nonzero");
        Frame {
            point,
            unit_normal,
            unit_tangent,
            tangent_line,
        }
    }

    /// Curvature at a point of the ellipse,
    /// `κ = (1/(a²b²)) (x²/a⁴ + y²/b⁴)^(−3/2)`.
    pub fn curvature(&self, p: Point<T>) -> Result<T, GeometryError> {
        self.check_on_curve(p)?;
        let (a2, b2) = (self.a * self.a, self.b * self.b);
        let s = p.x * p.x / (a2 * a2) + p.y * p.y / (b2 * b2);
        Ok(T::one() / (a2 * b2) / (s * s * s).sqrt())
    }

    /// Curvature through the focal distances, `κ = ab (d₁d₂)^(−3/2)`.
    pub fn curvature_focal(&self, p: Point<T>) -> Result<T, GeometryError> {
        self.check_on_curve(p)?;
        let (f1, f2) = self.foci();
        let d = p.distance(f1) * p.distance(f2);
        Ok(self.a * self.b / (d * d * d).sqrt())
    }

    fn check_on_curve(&self, p: Point<T>) -> Result<(), GeometryError> {
        let r = (self.implicit(p) - T::one()).abs();
        if r > T::lit(ON_ELLIPSE_TOL) || !r.is_finite() {
            return Err(GeometryError::OffEllipse {
                residual: r.as_f64(),
            });
        }
        Ok(())
    }

    /// Inversion in the ellipse: the midpoint of the chord of contact of the
    /// two tangents from an exterior point. The chord is the polar line of
    /// `p`, and its midpoint is `p / (x₀²/a² + y₀²/b²)`.
    ///
    /// Points on the curve map to themselves.
    pub fn invert(&self, p: Point<T>) -> Result<Point<T>, GeometryError> {
        let s = self.implicit(p);
        if !(s >= T::one() - T::lit(1e-12)) || !s.is_finite() {
            return Err(GeometryError::InsideEllipse {
                implicit: s.as_f64(),
            });
        }
        Ok(p / s)
    }

    /// Second intersection of the line `p + λ·dir` with the ellipse, for `p`
    /// on the curve.
    pub fn chord_end(&self, p: Point<T>, dir: Point<T>) -> Point<T> {
        let g = self.gradient(p);
        let q = (dir.x / self.a).sq() + (dir.y / self.b).sq();
        let lambda = -T::two() * g.dot(dir) / q;
        p + dir * lambda
    }
}

/// Free-function form of [`Ellipse::invert`].
pub fn invert_in_ellipse<T: Real>(p: Point<T>, e: &Ellipse<T>) -> Result<Point<T>, GeometryError> {
    e.invert(p)
}

/// Free-function form of [`Ellipse::frame`].
pub fn ellipse_frame<T: Real>(e: &Ellipse<T>, t: T) -> Frame<T> {
    e.frame(t)
}
