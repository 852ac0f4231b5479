use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::geometry::{Ellipse, Point};
use crate::scalar::Real;

/// Which fixed point `M` a pedal-type construction is taken about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AnchorRole {
    #[serde(rename = "O")]
    Center,
    #[serde(rename = "f1")]
    F1,
    #[serde(rename = "f2")]
    F2,
    #[serde(rename = "f1'")]
    F1Prime,
    #[serde(rename = "f2'")]
    F2Prime,
    #[serde(rename = "arbitrary")]
    Arbitrary,
}

impl AnchorRole {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Center => "O",
            Self::F1 => "f1",
            Self::F2 => "f2",
            Self::F1Prime => "f1'",
            Self::F2Prime => "f2'",
            Self::Arbitrary => "arbitrary",
        }
    }

    pub fn is_billiard_focus(self) -> bool {
        matches!(self, Self::F1 | Self::F2)
    }
}

impl fmt::Display for AnchorRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnchorPoint<T> {
    pub role: AnchorRole,
    pub position: Point<T>,
}

impl<T: Real> AnchorPoint<T> {
    pub fn center() -> Self {
        Self {
            role: AnchorRole::Center,
            position: Point::origin(),
        }
    }

    /// `f₁ = (−c, 0)`.
    pub fn f1(e: &Ellipse<T>) -> Self {
        Self {
            role: AnchorRole::F1,
            position: e.foci().0,
        }
    }

    /// `f₂ = (c, 0)`.
    pub fn f2(e: &Ellipse<T>) -> Self {
        Self {
            role: AnchorRole::F2,
            position: e.foci().1,
        }
    }

    pub fn arbitrary(p: Point<T>) -> Self {
        Self {
            role: AnchorRole::Arbitrary,
            position: p,
        }
    }

    /// Checks that a named role sits where it should for this billiard.
    pub fn is_consistent_with(&self, e: &Ellipse<T>) -> bool {
        let expect = match self.role {
            AnchorRole::Center => Point::origin(),
            AnchorRole::F1 => e.foci().0,
            AnchorRole::F2 => e.foci().1,
            _ => return true,
        };
        self.position.distance(expect) <= T::tol_floor(1e-12) * e.a()
    }

    pub fn to_f64(&self) -> AnchorPoint<f64> {
        AnchorPoint {
            role: self.role,
            position: self.position.to_f64(),
        }
    }
}

/// Anchor choice independent of a particular billiard, as written in a
/// sweep plan or on the command line: `O`, `f1`, `f2`, or `x,y`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AnchorSpec {
    Named(NamedAnchor),
    Fixed { x: f64, y: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NamedAnchor {
    #[serde(rename = "O")]
    Center,
    #[serde(rename = "f1")]
    F1,
    #[serde(rename = "f2")]
    F2,
}

impl AnchorSpec {
    pub const CENTER: Self = Self::Named(NamedAnchor::Center);
    pub const F1: Self = Self::Named(NamedAnchor::F1);
    pub const F2: Self = Self::Named(NamedAnchor::F2);

    pub fn resolve<T: Real>(&self, e: &Ellipse<T>) -> AnchorPoint<T> {
        match *self {
            Self::Named(NamedAnchor::Center) => AnchorPoint::center(),
            Self::Named(NamedAnchor::F1) => AnchorPoint::f1(e),
            Self::Named(NamedAnchor::F2) => AnchorPoint::f2(e),
            Self::Fixed { x, y } => AnchorPoint::arbitrary(Point::new(T::lit(x), T::lit(y))),
        }
    }
}

impl fmt::Display for AnchorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Named(NamedAnchor::Center) => f.write_str("O"),
            Self::Named(NamedAnchor::F1) => f.write_str("f1"),
            Self::Named(NamedAnchor::F2) => f.write_str("f2"),
            Self::Fixed { x, y } => write!(f, "{x},{y}"),
        }
    }
}

impl FromStr for AnchorSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "O" | "o" | "center" => Ok(Self::CENTER),
            "f1" => Ok(Self::F1),
            "f2" => Ok(Self::F2),
            other => {
                let (x, y) = other
                    .split_once(',')
                    .ok_or_else(|| format!("unknown anchor {other:?}; use O, f1, f2 or x,y"))?;
                let parse = |v: &str| {
                    v.trim()
                        .parse::<f64>()
                        .ok()
                        .filter(|v| v.is_finite())
                        .ok_or_else(|| format!("bad anchor coordinate {v:?}"))
                };
                Ok(Self::Fixed {
                    x: parse(x)?,
                    y: parse(y)?,
                })
            }
        }
    }
}
