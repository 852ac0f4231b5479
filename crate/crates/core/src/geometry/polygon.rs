use serde::{Deserialize, Serialize};

use super::{GeometryError, Line, Point};
use crate::scalar::Real;

/// Closed polygon with cyclic indexing. Self-intersecting vertex orders are
/// allowed; areas are always the signed shoelace value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Polygon<T> {
    vertices: Vec<Point<T>>,
}

impl<T: Real> Polygon<T> {
    pub fn new(vertices: Vec<Point<T>>) -> Result<Self, GeometryError> {
        if vertices.len() < 3 {
            return Err(GeometryError::TooFewVertices(vertices.len()));
        }
        Ok(Self { vertices })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    #[inline]
    pub fn vertices(&self) -> &[Point<T>] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Point<T>> {
        self.vertices
    }

    /// Vertex with cyclic index.
    #[inline]
    pub fn vertex(&self, i: usize) -> Point<T> {
        self.vertices[i % self.vertices.len()]
    }

    /// `(Wᵢ, Wᵢ₊₁)` for every side, wrapping around.
    pub fn sides(&self) -> impl Iterator<Item = (Point<T>, Point<T>)> + '_ {
        let n = self.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn side_line(&self, i: usize) -> Result<Line<T>, GeometryError> {
        Line::through(self.vertex(i), self.vertex(i + 1))
            .map_err(|_| GeometryError::ZeroLengthEdge(i % self.len()))
    }

    pub fn side_lengths(&self) -> Vec<T> {
        self.sides().map(|(p, q)| p.distance(q)).collect()
    }

    pub fn perimeter(&self) -> T {
        self.sides()
            .fold(T::zero(), |acc, (p, q)| acc + p.distance(q))
    }

    pub fn map<F>(&self, f: F) -> Self
    where
        F: FnMut(&Point<T>) -> Point<T>,
    {
        Self {
            vertices: self.vertices.iter().map(f).collect(),
        }
    }

    pub fn try_map<F, E>(&self, f: F) -> Result<Self, E>
    where
        F: FnMut(&Point<T>) -> Result<Point<T>, E>,
    {
        Ok(Self {
            vertices: self.vertices.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn reversed(&self) -> Self {
        let mut v = self.vertices.clone();
        v.reverse();
        Self { vertices: v }
    }

    /// Shoelace area `½ Σ Wᵢ × Wᵢ₊₁`; positive for counterclockwise simple
    /// polygons.
    pub fn signed_area(&self) -> T {
        self.sides().fold(T::zero(), |acc, (p, q)| acc + p.cross(q)) * T::half()
    }

    /// Area centroid `(1/6S) Σ (Wᵢ × Wᵢ₊₁)(Wᵢ + Wᵢ₊₁)`.
    pub fn area_centroid(&self) -> Result<Point<T>, GeometryError> {
        let mut twice_area = T::zero();
        let mut scale = T::zero();
        let mut acc = Point::origin();
        for (p, q) in self.sides() {
            let c = p.cross(q);
            twice_area += c;
            scale += c.abs();
            acc += (p + q) * c;
        }
        if twice_area.abs() <= T::lit(1e-12) * scale || twice_area == T::zero() {
            return Err(GeometryError::DegenerateArea);
        }
        Ok(acc / (T::lit(3.0) * twice_area))
    }

    /// Arithmetic mean of the vertices.
    pub fn vertex_centroid(&self) -> Point<T> {
        let sum = self
            .vertices
            .iter()
            .fold(Point::origin(), |acc, &p| acc + p);
        sum / T::of_usize(self.len())
    }

    /// Internal angle at each vertex between `Wᵢ₋₁ − Wᵢ` and `Wᵢ₊₁ − Wᵢ`,
    /// in `[0, π]`, via `atan2(|cross|, dot)`.
    pub fn internal_angles(&self) -> Result<Vec<T>, GeometryError> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let w = self.vertices[i];
                let u = self.vertices[(i + n - 1) % n] - w;
                let v = self.vertices[(i + 1) % n] - w;
                if u.norm_sq() == T::zero() {
                    return Err(GeometryError::ZeroLengthEdge((i + n - 1) % n));
                }
                if v.norm_sq() == T::zero() {
                    return Err(GeometryError::ZeroLengthEdge(i));
                }
                Ok(u.cross(v).abs().atan2(u.dot(v)))
            })
            .collect()
    }

    /// Steiner centroid of curvature `K = Σ ρᵢ Wᵢ / Σ ρᵢ`, `ρᵢ = sin 2θᵢ`.
    ///
    /// For a triangle this is the circumcenter.
    pub fn steiner_curvature_centroid(&self) -> Result<Point<T>, GeometryError> {
        let angles = self.internal_angles()?;
        let mut wsum = T::zero();
        let mut wabs = T::zero();
        let mut acc = Point::origin();
        for (&p, &theta) in self.vertices.iter().zip(&angles) {
            let rho = (T::two() * theta).sin();
            wsum += rho;
            wabs += rho.abs();
            acc += p * rho;
        }
        if wsum.abs() <= T::lit(1e-10) * wabs.max(T::one()) {
            return Err(GeometryError::DegenerateCurvatureWeights);
        }
        Ok(acc / wsum)
    }

    pub fn to_f64(&self) -> Polygon<f64> {
        Polygon {
            vertices: self.vertices.iter().map(|p| p.to_f64()).collect(),
        }
    }
}
