//! The invariant catalog: one row per conjectured or proven invariant of
//! elliptic-billiard N-periodics, with the code that evaluates it on a
//! single orbit sample.

mod context;
mod eval;
mod registry;
mod spec;

pub use context::{At, EvaluationContext, Key, Src, ZERO_DENOMINATOR};
pub use registry::CATALOG;
pub use spec::{AnchorRequirement, ClosedForm, Condition, InvariantSpec, ProofStatus, ValueKind};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::derived::{AnchorRole, DerivedError};
use crate::geometry::{GeometryError, Point};
use crate::orbit::OrbitFamily;
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("unknown invariant id {0:?}")]
    UnknownId(String),
    #[error("quantity needs an anchor point M")]
    MissingAnchor,
    #[error("denominator vanishes")]
    ZeroDenominator,
    #[error(transparent)]
    Derived(#[from] DerivedError),
}

impl From<GeometryError> for EvalError {
    fn from(e: GeometryError) -> Self {
        Self::Derived(e.into())
    }
}

impl EvalError {
    /// Failures tied to the particular sample (a vertex at infinity, a
    /// vanishing area). The sweep records these as skipped samples.
    pub fn is_sample_skip(&self) -> bool {
        matches!(self, Self::ZeroDenominator | Self::Derived(_))
    }
}

/// An evaluated quantity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Value<T> {
    Scalar(T),
    Point(Point<T>),
    Vector(Vec<T>),
    /// One entry per vertex; all must equal the same constant.
    Radii(Vec<T>),
}

impl<T: Real> Value<T> {
    /// Components that must each stay constant along the family. Radii
    /// are pooled into a single component by the classifier, so this
    /// returns them unchanged.
    pub fn components(&self) -> Vec<T> {
        match self {
            Self::Scalar(v) => vec![*v],
            Self::Point(p) => vec![p.x, p.y],
            Self::Vector(v) | Self::Radii(v) => v.clone(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.components().iter().all(|v| v.is_finite())
    }

    pub fn to_f64(&self) -> Value<f64> {
        match self {
            Self::Scalar(v) => Value::Scalar(v.as_f64()),
            Self::Point(p) => Value::Point(p.to_f64()),
            Self::Vector(v) => Value::Vector(v.iter().map(|x| x.as_f64()).collect()),
            Self::Radii(v) => Value::Radii(v.iter().map(|x| x.as_f64()).collect()),
        }
    }
}

/// All rows, in id order.
pub fn list_invariants() -> &'static [InvariantSpec] {
    &CATALOG
}

pub fn lookup(id: &str) -> Result<&'static InvariantSpec, EvalError> {
    CATALOG
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| EvalError::UnknownId(id.to_string()))
}

/// Whether row `id` is admissible at `N` with the given anchor role.
/// Rows without an M column ignore the anchor.
pub fn applicability(id: &str, n: usize, anchor: Option<AnchorRole>) -> Result<bool, EvalError> {
    Ok(lookup(id)?.applies_to(n, anchor))
}

/// Evaluates row `id` on the context's sample. Admissibility is not
/// checked here, so diagnostics can evaluate rows outside their N range.
pub fn evaluate<T: Real>(id: &str, ctx: &EvaluationContext<'_, T>) -> Result<Value<T>, EvalError> {
    let spec = lookup(id)?;
    if spec.anchor.needs_anchor() && ctx.anchor.is_none() {
        return Err(EvalError::MissingAnchor);
    }
    let v = eval::evaluate_row(spec.id, ctx)?;
    if !v.is_finite() {
        return Err(EvalError::ZeroDenominator);
    }
    Ok(v)
}

/// Tabulated value of row `id` for this family, if it has one.
pub fn closed_form_value<T: Real>(
    id: &str,
    family: &OrbitFamily<T>,
) -> Result<Option<T>, EvalError> {
    Ok(lookup(id)?.closed_form.and_then(|c| c.value(family)))
}

/// Catalog as JSON-serializable rows with string labels for the columns.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CatalogRow {
    pub id: String,
    pub cluster: u8,
    pub expression: String,
    pub which_n: String,
    pub anchor: String,
    pub closed_form: Option<String>,
    pub proof_status: ProofStatus,
    pub kind: ValueKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub discrepancy: Option<String>,
}

impl From<&InvariantSpec> for CatalogRow {
    fn from(s: &InvariantSpec) -> Self {
        Self {
            id: s.id.into(),
            cluster: s.cluster,
            expression: s.expression.into(),
            which_n: s.condition.label(),
            anchor: s.anchor.label().into(),
            closed_form: s.closed_form.map(|c| c.label().into()),
            proof_status: s.proof_status,
            kind: s.kind,
            discrepancy: s.discrepancy.map(Into::into),
        }
    }
}

pub fn catalog_rows() -> Vec<CatalogRow> {
    CATALOG.iter().map(CatalogRow::from).collect()
}
