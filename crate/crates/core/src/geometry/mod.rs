//! Plane geometry primitives: points, lines, the origin-centered ellipse and
//! closed polygons with signed measures.

mod ellipse;
mod line;
mod point;
mod polygon;

pub use ellipse::{ellipse_frame, invert_in_ellipse, Ellipse, Frame, ON_ELLIPSE_TOL};
pub use line::{foot_of_perpendicular, Line};
pub use point::{invert_in_circle, Point};
pub use polygon::Polygon;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("invalid ellipse semi-axes a={a}, b={b} (need a >= b > 0)")]
    InvalidEllipse { a: f64, b: f64 },
    #[error("point is off the ellipse (implicit residual {residual:e})")]
    OffEllipse { residual: f64 },
    #[error("point is inside the ellipse (x²/a² + y²/b² = {implicit})")]
    InsideEllipse { implicit: f64 },
    #[error("inversion center coincides with the point")]
    InversionSingularity,
    #[error("line has no direction")]
    DegenerateLine,
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("polygon edge {0} has zero length")]
    ZeroLengthEdge(usize),
    #[error("polygon has vanishing signed area")]
    DegenerateArea,
    #[error("curvature weights sin(2θ) sum to zero")]
    DegenerateCurvatureWeights,
}
