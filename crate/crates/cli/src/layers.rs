//! Derived-polygon layers requested by name, e.g. `outer` or `pedal:f1`.

use std::fmt;
use std::str::FromStr;

use poncelet_core::derived::{
    antipedal_polygon, dual_polygon, ellipse_inverse_polygon, evolute_polygon, inner_polygon,
    inversive_polygon, outer_polygon, pedal_polygon, polar_polygon, AnchorSpec, DerivedError,
};
use poncelet_core::orbit::{OrbitFamily, OrbitSample};
use poncelet_core::{Point64, Polygon64};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Layer {
    Outer,
    Inner,
    Evolute,
    EllipseInverse,
    Pedal(AnchorSpec),
    Antipedal(AnchorSpec),
    Inversive(AnchorSpec),
    Polar(AnchorSpec),
    Dual(AnchorSpec),
}

/// Anchors inside a layer list use `x;y` since `,` separates layers.
fn parse_anchor(s: &str) -> Result<AnchorSpec, String> {
    s.replace(';', ",").parse()
}

fn anchor_label(a: &AnchorSpec) -> String {
    match a {
        AnchorSpec::Fixed { x, y } => format!("{x};{y}"),
        named => named.to_string(),
    }
}

impl FromStr for Layer {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (name, anchor) = match s.split_once(':') {
            Some((n, a)) => (n, Some(parse_anchor(a)?)),
            None => (s, None),
        };
        let need = |a: Option<AnchorSpec>| {
            a.ok_or_else(|| format!("layer {name} needs an anchor, e.g. {name}:f1"))
        };
        let bare = |l: Layer| match anchor {
            None => Ok(l),
            Some(_) => Err(format!("layer {name} takes no anchor")),
        };
        match name {
            "outer" => bare(Layer::Outer),
            "inner" => bare(Layer::Inner),
            "evolute" => bare(Layer::Evolute),
            "ellipse_inverse" => bare(Layer::EllipseInverse),
            "pedal" => need(anchor).map(Layer::Pedal),
            "antipedal" => need(anchor).map(Layer::Antipedal),
            "inversive" => need(anchor).map(Layer::Inversive),
            "polar" => need(anchor).map(Layer::Polar),
            "dual" => need(anchor).map(Layer::Dual),
            other => Err(format!("unknown layer {other:?}")),
        }
    }
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Layer::Outer => f.write_str("outer"),
            Layer::Inner => f.write_str("inner"),
            Layer::Evolute => f.write_str("evolute"),
            Layer::EllipseInverse => f.write_str("ellipse_inverse"),
            Layer::Pedal(a) => write!(f, "pedal:{}", anchor_label(a)),
            Layer::Antipedal(a) => write!(f, "antipedal:{}", anchor_label(a)),
            Layer::Inversive(a) => write!(f, "inversive:{}", anchor_label(a)),
            Layer::Polar(a) => write!(f, "polar:{}", anchor_label(a)),
            Layer::Dual(a) => write!(f, "dual:{}", anchor_label(a)),
        }
    }
}

/// Comma separated list; empty entries are ignored.
pub fn parse_layers(s: &str) -> Result<Vec<Layer>, String> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(str::parse)
        .collect()
}

impl Layer {
    /// Builds the layer from the orbit polygon. Inversions use the unit circle.
    pub fn build(
        &self,
        family: &OrbitFamily<f64>,
        sample: &OrbitSample<f64>,
    ) -> Result<Polygon64, DerivedError> {
        let e = &family.billiard;
        let p = &sample.vertices;
        let at = |a: &AnchorSpec| -> Point64 { a.resolve(e).position };
        match self {
            Layer::Outer => outer_polygon(sample, e),
            Layer::Inner => Ok(inner_polygon(sample)),
            Layer::Evolute => evolute_polygon(p),
            Layer::EllipseInverse => ellipse_inverse_polygon(p, &family.caustic),
            Layer::Pedal(a) => pedal_polygon(p, at(a)),
            Layer::Antipedal(a) => antipedal_polygon(p, at(a)),
            Layer::Inversive(a) => inversive_polygon(p, at(a), 1.0),
            Layer::Polar(a) => polar_polygon(p, at(a)),
            Layer::Dual(a) => dual_polygon(p, at(a)),
        }
    }
}
