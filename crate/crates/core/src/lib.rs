//! Periodic orbits of the elliptic billiard, the polygons derived from
//! them, and a harness that checks which quantities stay constant along a
//! Poncelet family.
//!
//! Geometry, orbit and catalog code is generic over [`scalar::Real`]
//! (`f32` or `f64`); the sweep engine and reports work in `f64`.

// Negated comparisons are deliberate: NaN has to fail them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod catalog;
pub mod derived;
pub mod geometry;
pub mod orbit;
pub mod scalar;
pub mod sweep;

pub use scalar::Real;

pub type Point64 = geometry::Point<f64>;
pub type Line64 = geometry::Line<f64>;
pub type Ellipse64 = geometry::Ellipse<f64>;
pub type Polygon64 = geometry::Polygon<f64>;
pub type BilliardConfig64 = orbit::BilliardConfig<f64>;
pub type OrbitFamily64 = orbit::OrbitFamily<f64>;
pub type OrbitSample64 = orbit::OrbitSample<f64>;

pub type Point32 = geometry::Point<f32>;
pub type Line32 = geometry::Line<f32>;
pub type Ellipse32 = geometry::Ellipse<f32>;
pub type Polygon32 = geometry::Polygon<f32>;
