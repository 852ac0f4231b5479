//! Polygons built from an orbit sample: outer, inner, pedal, antipedal,
//! evolute, inversive, polar, dual and ellipse-inverse, plus the foci of
//! the outer-vertex locus.

mod anchor;
mod locus;

pub use anchor::{AnchorPoint, AnchorRole, AnchorSpec, NamedAnchor};
pub use locus::{outer_locus_foci, LocusFit, LOCUS_FIT_TOL, LOCUS_SAMPLES};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{
    foot_of_perpendicular, invert_in_circle, Ellipse, GeometryError, Line, Point, Polygon,
};
use crate::orbit::{OrbitError, OrbitSample};
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DerivedError {
    #[error("vertex {index} is at infinity (consecutive lines are parallel)")]
    VertexAtInfinity { index: usize },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error("outer-vertex locus is not an ellipse (fit residual {residual:e})")]
    LocusNotElliptic { residual: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DerivedKind {
    Outer,
    Inner,
    Pedal,
    Antipedal,
    Evolute,
    Inversive,
    Polar,
    Dual,
    EllipseInverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Orbit,
    Outer,
    Inner,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DerivedPolygon<T> {
    pub kind: DerivedKind,
    pub source: Source,
    pub anchor: Option<AnchorPoint<T>>,
    pub polygon: Polygon<T>,
}

/// Intersections of the billiard tangents at consecutive orbit vertices.
pub fn outer_polygon<T: Real>(
    sample: &OrbitSample<T>,
    e: &Ellipse<T>,
) -> Result<Polygon<T>, DerivedError> {
    let p = &sample.vertices;
    let tangents = p
        .vertices()
        .iter()
        .map(|&v| e.polar_line(v))
        .collect::<Result<Vec<_>, _>>()?;
    let n = tangents.len();
    let out = (0..n)
        .map(|i| {
            tangents[i]
                .intersect(&tangents[(i + 1) % n])
                .ok_or(DerivedError::VertexAtInfinity { index: i })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Polygon::new(out)?)
}

/// Caustic contact points of the orbit sides.
pub fn inner_polygon<T: Real>(sample: &OrbitSample<T>) -> Polygon<T> {
    sample.tangency_points.clone()
}

/// Feet of the perpendiculars from `m` onto the side lines of `p`.
pub fn pedal_polygon<T: Real>(p: &Polygon<T>, m: Point<T>) -> Result<Polygon<T>, DerivedError> {
    let feet = (0..p.len())
        .map(|i| p.side_line(i).map(|l| foot_of_perpendicular(m, &l)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Polygon::new(feet)?)
}

/// Intersections of consecutive lines through `Pᵢ` perpendicular to `Pᵢ − m`.
///
/// Vertex `i` is the meet of the lines at `Pᵢ₋₁` and `Pᵢ`, so side `i` lies
/// on the line through `Pᵢ` and the pedal of the result about `m` returns
/// `P` with the same indexing.
pub fn antipedal_polygon<T: Real>(p: &Polygon<T>, m: Point<T>) -> Result<Polygon<T>, DerivedError> {
    let rays = p
        .vertices()
        .iter()
        .map(|&v| Line::new(v, (v - m).perp()))
        .collect::<Result<Vec<_>, _>>()?;
    let n = rays.len();
    let out = (0..n)
        .map(|i| {
            rays[(i + n - 1) % n]
                .intersect(&rays[i])
                .ok_or(DerivedError::VertexAtInfinity { index: i })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Polygon::new(out)?)
}

/// Intersections of the perpendicular bisectors of consecutive sides.
pub fn evolute_polygon<T: Real>(p: &Polygon<T>) -> Result<Polygon<T>, DerivedError> {
    let n = p.len();
    let bisectors = (0..n)
        .map(|i| {
            let (a, b) = (p.vertex(i), p.vertex(i + 1));
            if a == b {
                return Err(GeometryError::ZeroLengthEdge(i));
            }
            Line::new(a.midpoint(b), (b - a).perp())
        })
        .collect::<Result<Vec<_>, _>>()?;
    let out = (0..n)
        .map(|i| {
            bisectors[i]
                .intersect(&bisectors[(i + 1) % n])
                .ok_or(DerivedError::VertexAtInfinity { index: i })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Polygon::new(out)?)
}

/// Vertex-wise inversion in the circle of `radius` about `center`.
pub fn inversive_polygon<T: Real>(
    p: &Polygon<T>,
    center: Point<T>,
    radius: T,
) -> Result<Polygon<T>, DerivedError> {
    Ok(p.try_map(|&v| invert_in_circle(v, center, radius))?)
}

/// Antipedal of the unit-circle inversive polygon, both about `focus`.
pub fn polar_polygon<T: Real>(p: &Polygon<T>, focus: Point<T>) -> Result<Polygon<T>, DerivedError> {
    antipedal_polygon(&inversive_polygon(p, focus, T::one())?, focus)
}

/// Unit-circle inversion of the pedal polygon, both about `focus`.
pub fn dual_polygon<T: Real>(p: &Polygon<T>, focus: Point<T>) -> Result<Polygon<T>, DerivedError> {
    inversive_polygon(&pedal_polygon(p, focus)?, focus, T::one())
}

/// Vertex-wise inversion in the ellipse `e`.
pub fn ellipse_inverse_polygon<T: Real>(
    p: &Polygon<T>,
    e: &Ellipse<T>,
) -> Result<Polygon<T>, DerivedError> {
    Ok(p.try_map(|&v| e.invert(v))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::{build_family, orbit_at, BilliardConfig, OrbitFamily};
    use approx::assert_relative_eq;

    fn rhombus() -> (OrbitFamily<f64>, OrbitSample<f64>) {
        let f = build_family(&BilliardConfig::new(2.0, 1.0, 4).unwrap()).unwrap();
        let s = orbit_at(&f, 0.0).unwrap();
        (f, s)
    }

    fn poly(v: &[(f64, f64)]) -> Polygon<f64> {
        Polygon::new(v.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
    }

    fn assert_vertices(p: &Polygon<f64>, want: &[(f64, f64)], eps: f64) {
        assert_eq!(p.len(), want.len());
        for (v, &(x, y)) in p.vertices().iter().zip(want) {
            assert!(
                (v.x - x).abs() < eps && (v.y - y).abs() < eps,
                "{v:?} vs ({x}, {y})"
            );
        }
    }

    #[test]
    fn outer_and_inner_of_the_rhombus() {
        let (f, s) = rhombus();
        let outer = outer_polygon(&s, &f.billiard).unwrap();
        assert_vertices(
            &outer,
            &[(2.0, 1.0), (-2.0, 1.0), (-2.0, -1.0), (2.0, -1.0)],
            1e-12,
        );
        assert_relative_eq!(outer.signed_area(), 8.0, epsilon = 1e-12);
        let inner = inner_polygon(&s);
        assert_relative_eq!(inner.signed_area(), 1.28, epsilon = 1e-12);
        assert_relative_eq!(s.vertices.signed_area(), 4.0, epsilon = 1e-12);
        assert_relative_eq!(
            outer.signed_area() / inner.signed_area(),
            6.25,
            epsilon = 1e-10
        );
    }

    #[test]
    fn outer_sides_touch_the_billiard_at_the_orbit_vertices() {
        let f = build_family(&BilliardConfig::new(1.5f64, 1.0, 5).unwrap()).unwrap();
        let s = orbit_at(&f, 0.4).unwrap();
        let outer = outer_polygon(&s, &f.billiard).unwrap();
        for i in 0..5 {
            let side = Line::through(outer.vertex(i + 4), outer.vertex(i)).unwrap();
            assert!(side.signed_distance(s.vertices.vertex(i)).abs() < 1e-9);
        }
    }

    #[test]
    fn pedal_examples() {
        let (_, s) = rhombus();
        let s3 = 3f64.sqrt();
        let m = Point::new(s3, 0.0);
        let q = pedal_polygon(&s.vertices, m).unwrap();
        for v in q.vertices() {
            assert_relative_eq!(v.norm(), 4.0 / 5f64.sqrt(), epsilon = 1e-12);
        }
        let prod: f64 = q.vertices().iter().map(|v| v.distance(m)).product();
        assert_relative_eq!(prod, 1.0 / 25.0, epsilon = 1e-12);

        let sq = poly(&[(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)]);
        let q = pedal_polygon(&sq, Point::origin()).unwrap();
        assert_vertices(
            &q,
            &[(0.0, 1.0), (-1.0, 0.0), (0.0, -1.0), (1.0, 0.0)],
            1e-15,
        );
    }

    #[test]
    fn antipedal_examples() {
        let (_, s) = rhombus();
        let q = antipedal_polygon(&s.vertices, Point::origin()).unwrap();
        assert_vertices(
            &q,
            &[(2.0, -1.0), (2.0, 1.0), (-2.0, 1.0), (-2.0, -1.0)],
            1e-12,
        );

        let sq = poly(&[(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)]);
        let q = antipedal_polygon(&sq, Point::origin()).unwrap();
        assert_vertices(
            &q,
            &[(2.0, 0.0), (0.0, 2.0), (-2.0, 0.0), (0.0, -2.0)],
            1e-14,
        );

        let back = pedal_polygon(&q, Point::origin()).unwrap();
        assert_vertices(
            &back,
            &[(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)],
            1e-14,
        );
    }

    #[test]
    fn evolute_examples() {
        let (f, s) = rhombus();
        let ev = evolute_polygon(&s.vertices).unwrap();
        assert_vertices(
            &ev,
            &[(0.0, -1.5), (-0.75, 0.0), (0.0, 1.5), (0.75, 0.0)],
            1e-12,
        );
        assert_relative_eq!(ev.signed_area().abs(), 2.25, epsilon = 1e-12);

        let tri = poly(&[(0.0, 0.0), (3.0, 0.5), (1.0, 2.0)]);
        assert!(evolute_polygon(&tri).unwrap().signed_area().abs() < 1e-14);

        let outer = outer_polygon(&s, &f.billiard).unwrap();
        assert!(evolute_polygon(&outer).unwrap().signed_area().abs() < 1e-14);
    }

    #[test]
    fn inversive_example() {
        let (_, s) = rhombus();
        let s3 = 3f64.sqrt();
        let inv = inversive_polygon(&s.vertices, Point::new(s3, 0.0), 1.0).unwrap();
        assert_vertices(
            &inv,
            &[
                (2.0 + 2.0 * s3, 0.0),
                (3.0 * s3 / 4.0, 0.25),
                (2.0 * s3 - 2.0, 0.0),
                (3.0 * s3 / 4.0, -0.25),
            ],
            1e-12,
        );
        assert_relative_eq!(inv.signed_area(), 1.0, epsilon = 1e-12);
        assert_relative_eq!(
            s.vertices.signed_area() * inv.signed_area(),
            4.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn polar_and_dual_compositions() {
        let (f, s) = rhombus();
        let (f1, _) = f.billiard.foci();
        let polar = polar_polygon(&s.vertices, f1).unwrap();
        let manual =
            antipedal_polygon(&inversive_polygon(&s.vertices, f1, 1.0).unwrap(), f1).unwrap();
        assert_eq!(polar, manual);
        let cos_sum: f64 = polar
            .internal_angles()
            .unwrap()
            .iter()
            .map(|a| a.cos())
            .sum();
        assert!(cos_sum.abs() < 1e-12);

        let dual = dual_polygon(&s.vertices, f1).unwrap();
        let manual = inversive_polygon(&pedal_polygon(&s.vertices, f1).unwrap(), f1, 1.0).unwrap();
        assert_eq!(dual, manual);
        let prod: f64 = dual.vertices().iter().map(|v| v.distance(f1)).product();
        assert_relative_eq!(prod, 25.0, epsilon = 1e-10);
    }

    #[test]
    fn ellipse_inverse_examples() {
        let (f, s) = rhombus();
        let outer = outer_polygon(&s, &f.billiard).unwrap();
        let mids = ellipse_inverse_polygon(&outer, &f.billiard).unwrap();
        assert_vertices(
            &mids,
            &[(1.0, 0.5), (-1.0, 0.5), (-1.0, -0.5), (1.0, -0.5)],
            1e-12,
        );

        let mids = ellipse_inverse_polygon(&s.vertices, &f.caustic).unwrap();
        let inner = inner_polygon(&s);
        for i in 0..4 {
            let m = inner.vertex(i + 3).midpoint(inner.vertex(i));
            assert_relative_eq!(mids.vertex(i).x, m.x, epsilon = 1e-12);
            assert_relative_eq!(mids.vertex(i).y, m.y, epsilon = 1e-12);
        }
        assert_vertices(
            &mids,
            &[(1.6, 0.0), (0.0, 0.2), (-1.6, 0.0), (0.0, -0.2)],
            1e-12,
        );
    }
}
