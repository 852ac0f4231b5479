//! JSON shapes shared by the CLI and the HTTP service. Floats are written
//! in shortest round-trip form, so parsing them back gives the same bits.

use serde::{Deserialize, Serialize};

use poncelet_core::derived::DerivedError;
use poncelet_core::orbit::{orbit_at, OrbitError, OrbitFamily};
use poncelet_core::Polygon64;

use crate::layers::Layer;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyPayload {
    pub a: f64,
    pub b: f64,
    pub n: usize,
    pub rotation: usize,
    /// Caustic semi-axes.
    pub a_c: f64,
    pub b_c: f64,
    #[serde(rename = "J")]
    pub j: f64,
    #[serde(rename = "L")]
    pub l: f64,
}

impl From<&OrbitFamily<f64>> for FamilyPayload {
    fn from(f: &OrbitFamily<f64>) -> Self {
        Self {
            a: f.billiard.a(),
            b: f.billiard.b(),
            n: f.n(),
            rotation: f.config.rotation(),
            a_c: f.caustic.a(),
            b_c: f.caustic.b(),
            j: f.joachimsthal,
            l: f.perimeter,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LayerPayload {
    pub layer: String,
    pub vertices: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrbitPayload {
    pub family: FamilyPayload,
    /// Reduced to `[0, 2π)`.
    pub t: f64,
    pub vertices: Vec<[f64; 2]>,
    pub tangency_points: Vec<[f64; 2]>,
    pub closure_error: f64,
    pub layers: Vec<LayerPayload>,
}

pub fn coords(p: &Polygon64) -> Vec<[f64; 2]> {
    p.vertices().iter().map(|v| [v.x, v.y]).collect()
}

#[derive(Debug)]
pub enum OrbitPayloadError {
    Orbit(OrbitError),
    Layer(String, DerivedError),
}

impl std::fmt::Display for OrbitPayloadError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Orbit(e) => e.fmt(f),
            Self::Layer(l, e) => write!(f, "layer {l}: {e}"),
        }
    }
}

pub fn orbit_payload(
    family: &OrbitFamily<f64>,
    t: f64,
    layers: &[Layer],
) -> Result<OrbitPayload, OrbitPayloadError> {
    let s = orbit_at(family, t).map_err(OrbitPayloadError::Orbit)?;
    let layers = layers
        .iter()
        .map(|l| {
            let poly = l
                .build(family, &s)
                .map_err(|e| OrbitPayloadError::Layer(l.to_string(), e))?;
            Ok(LayerPayload {
                layer: l.to_string(),
                vertices: coords(&poly),
            })
        })
        .collect::<Result<_, _>>()?;
    Ok(OrbitPayload {
        family: family.into(),
        t: s.t,
        vertices: coords(&s.vertices),
        tangency_points: coords(&s.tangency_points),
        closure_error: s.closure_error,
        layers,
    })
}
