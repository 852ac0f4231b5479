use std::cell::{OnceCell, RefCell};
use std::collections::HashMap;

use super::EvalError;
use crate::derived::{
    antipedal_polygon, ellipse_inverse_polygon, evolute_polygon, inversive_polygon,
    outer_locus_foci, outer_polygon, pedal_polygon, AnchorPoint, DerivedError, LocusFit,
};
use crate::geometry::{Point, Polygon};
use crate::orbit::{OrbitFamily, OrbitSample};
use crate::scalar::Real;

/// Relative size (in units of `a²`) below which a denominator counts as zero.
pub const ZERO_DENOMINATOR: f64 = 1e-12;

/// Which polygon a construction starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Src {
    /// `P`
    Orbit,
    /// `P′`
    Outer,
    /// `P″`
    Inner,
}

/// Which fixed point a construction is taken about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum At {
    /// The context anchor `M`.
    M,
    F1,
    F2,
    /// Foci of the outer-vertex locus.
    LocusF1,
    LocusF2,
    /// Steiner centroid of curvature of the source polygon.
    Steiner,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Key {
    Base(Src),
    Pedal(Src, At),
    Antipedal(Src, At),
    /// Unit-circle inversion.
    Inversive(Src, At),
    Evolute(Src),
    /// `P` in the caustic, `P′` in the billiard.
    EllipseInverse(Src),
    /// Antipedal of `Inversive(Orbit, at)` about `at`.
    Polar(At),
    /// Inversion of `Pedal(Orbit, at)` about `at`.
    Dual(At),
    /// Pedal of `Inversive(Orbit, at)` about `at`.
    InversivePedal(At),
}

/// One orbit sample plus everything derived from it, built lazily and
/// shared between all quantities evaluated on the sample.
pub struct EvaluationContext<'a, T: Real> {
    pub family: &'a OrbitFamily<T>,
    pub sample: &'a OrbitSample<T>,
    pub anchor: Option<AnchorPoint<T>>,
    locus: OnceCell<Result<LocusFit<T>, DerivedError>>,
    outer: OnceCell<Result<Polygon<T>, DerivedError>>,
    cache: RefCell<HashMap<Key, Result<Polygon<T>, DerivedError>>>,
}

impl<'a, T: Real> EvaluationContext<'a, T> {
    pub fn new(
        family: &'a OrbitFamily<T>,
        sample: &'a OrbitSample<T>,
        anchor: Option<AnchorPoint<T>>,
    ) -> Self {
        Self {
            family,
            sample,
            anchor,
            locus: OnceCell::new(),
            outer: OnceCell::new(),
            cache: RefCell::new(HashMap::new()),
        }
    }

    /// Supplies a precomputed outer-locus fit so it is not refit per sample.
    pub fn with_locus(self, fit: Result<LocusFit<T>, DerivedError>) -> Self {
        let _ = self.locus.set(fit);
        self
    }

    pub fn n(&self) -> usize {
        self.family.n()
    }

    pub fn orbit(&self) -> &Polygon<T> {
        &self.sample.vertices
    }

    pub fn outer(&self) -> Result<&Polygon<T>, EvalError> {
        self.outer
            .get_or_init(|| outer_polygon(self.sample, &self.family.billiard))
            .as_ref()
            .map_err(|e| e.clone().into())
    }

    pub fn inner(&self) -> &Polygon<T> {
        &self.sample.tangency_points
    }

    pub fn base(&self, src: Src) -> Result<&Polygon<T>, EvalError> {
        match src {
            Src::Orbit => Ok(self.orbit()),
            Src::Outer => self.outer(),
            Src::Inner => Ok(self.inner()),
        }
    }

    pub fn foci(&self) -> (Point<T>, Point<T>) {
        self.family.billiard.foci()
    }

    pub fn locus(&self) -> Result<&LocusFit<T>, EvalError> {
        self.locus
            .get_or_init(|| outer_locus_foci(self.family))
            .as_ref()
            .map_err(|e| e.clone().into())
    }

    fn point(&self, at: At, src: Src) -> Result<Point<T>, EvalError> {
        Ok(match at {
            At::M => self.anchor.ok_or(EvalError::MissingAnchor)?.position,
            At::F1 => self.foci().0,
            At::F2 => self.foci().1,
            At::LocusF1 => self.locus()?.foci.0,
            At::LocusF2 => self.locus()?.foci.1,
            At::Steiner => self
                .base(src)?
                .steiner_curvature_centroid()
                .map_err(DerivedError::from)?,
        })
    }

    /// Derived polygon for `key`, built on first use.
    pub fn poly(&self, key: Key) -> Result<Polygon<T>, EvalError> {
        if let Some(hit) = self.cache.borrow().get(&key) {
            return hit.clone().map_err(Into::into);
        }
        let built = self.build(key);
        let stored = match &built {
            Ok(p) => Ok(p.clone()),
            Err(EvalError::Derived(e)) => Err(e.clone()),
            // anchor or locus problems are not cached; they are not sample-specific
            Err(_) => return built,
        };
        self.cache.borrow_mut().insert(key, stored);
        built
    }

    fn build(&self, key: Key) -> Result<Polygon<T>, EvalError> {
        let one = T::one();
        Ok(match key {
            Key::Base(s) => self.base(s)?.clone(),
            Key::Pedal(s, at) => pedal_polygon(self.base(s)?, self.point(at, s)?)?,
            Key::Antipedal(s, at) => antipedal_polygon(self.base(s)?, self.point(at, s)?)?,
            Key::Inversive(s, at) => inversive_polygon(self.base(s)?, self.point(at, s)?, one)?,
            Key::Evolute(s) => evolute_polygon(self.base(s)?)?,
            Key::EllipseInverse(s) => {
                let e = match s {
                    Src::Orbit => &self.family.caustic,
                    _ => &self.family.billiard,
                };
                ellipse_inverse_polygon(self.base(s)?, e)?
            }
            Key::Polar(at) => {
                let m = self.point(at, Src::Orbit)?;
                antipedal_polygon(&self.poly(Key::Inversive(Src::Orbit, at))?, m)?
            }
            Key::Dual(at) => {
                let m = self.point(at, Src::Orbit)?;
                inversive_polygon(&self.poly(Key::Pedal(Src::Orbit, at))?, m, one)?
            }
            Key::InversivePedal(at) => {
                let m = self.point(at, Src::Orbit)?;
                pedal_polygon(&self.poly(Key::Inversive(Src::Orbit, at))?, m)?
            }
        })
    }

    /// Signed area of the derived polygon for `key`.
    pub fn area(&self, key: Key) -> Result<T, EvalError> {
        Ok(self.poly(key)?.signed_area())
    }

    /// `num/den`, refusing denominators that vanish at the billiard's scale.
    pub fn ratio(&self, num: T, den: T) -> Result<T, EvalError> {
        let a = self.family.billiard.a();
        if !(den.abs() > T::lit(ZERO_DENOMINATOR) * a * a) {
            return Err(EvalError::ZeroDenominator);
        }
        Ok(num / den)
    }

    /// `|Pᵢ − fⱼ|` for `j = 1, 2`.
    pub fn focal_distances(&self, j: usize) -> Vec<T> {
        let f = if j == 1 { self.foci().0 } else { self.foci().1 };
        self.orbit()
            .vertices()
            .iter()
            .map(|&v| v.distance(f))
            .collect()
    }

    /// `αⱼᵢ`, the angle at `fⱼ` subtended by side `i`. k120 uses `j = 1`.
    pub fn focal_angles(&self, j: usize) -> Vec<T> {
        let f = if j == 1 { self.foci().0 } else { self.foci().1 };
        let p = self.orbit();
        (0..p.len())
            .map(|i| {
                let (u, v) = (p.vertex(i) - f, p.vertex(i + 1) - f);
                u.cross(v).abs().atan2(u.dot(v))
            })
            .collect()
    }
}
