use serde::{Deserialize, Serialize};

use crate::derived::AnchorRole;
use crate::orbit::OrbitFamily;
use crate::scalar::Real;

/// The "which N" column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    All,
    Odd,
    Even,
    /// `N ≡ r (mod 4)`
    Mod4(u8),
    /// `N ≢ r (mod 4)`
    NotMod4(u8),
    Exactly(usize),
    NotEqual(usize),
    GreaterThan(usize),
}

impl Condition {
    pub fn holds(self, n: usize) -> bool {
        match self {
            Self::All => true,
            Self::Odd => n % 2 == 1,
            Self::Even => n.is_multiple_of(2),
            Self::Mod4(r) => n % 4 == r as usize,
            Self::NotMod4(r) => n % 4 != r as usize,
            Self::Exactly(m) => n == m,
            Self::NotEqual(m) => n != m,
            Self::GreaterThan(m) => n > m,
        }
    }

    pub fn label(self) -> String {
        match self {
            Self::All => "all".into(),
            Self::Odd => "odd".into(),
            Self::Even => "even".into(),
            Self::Mod4(r) => format!("≡{r} (mod 4)"),
            Self::NotMod4(r) => format!("≢{r} (mod 4)"),
            Self::Exactly(m) => format!("{m}"),
            Self::NotEqual(m) => format!("≠{m}"),
            Self::GreaterThan(m) => format!(">{m}"),
        }
    }
}

/// The "M" column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AnchorRequirement {
    /// Row has no M column; evaluated without an anchor.
    None,
    /// "all": any fixed point.
    Any,
    Foci,
    Center,
    CenterOrFoci,
}

impl AnchorRequirement {
    pub fn accepts(self, role: Option<AnchorRole>) -> bool {
        use AnchorRole::*;
        match self {
            Self::None => true,
            Self::Any => role.is_some(),
            Self::Foci => matches!(role, Some(F1 | F2)),
            Self::Center => matches!(role, Some(Center)),
            Self::CenterOrFoci => matches!(role, Some(Center | F1 | F2)),
        }
    }

    pub fn needs_anchor(self) -> bool {
        self != Self::None
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::None => "-",
            Self::Any => "all",
            Self::Foci => "f1,f2",
            Self::Center => "O",
            Self::CenterOrFoci => "O,f1,f2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProofStatus {
    Proven,
    Open,
    Symmetry,
}

/// The "value" column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosedForm {
    /// `JL − N`
    JlMinusN,
    One,
    Two,
    Four,
    Zero,
    /// `[ab/(a″b″)]²`
    AxesRatioSquared,
    /// `L/2`
    HalfPerimeter,
    /// `L/[2J(ab)^{4/3}]`
    CurvatureSum,
    /// `L/[2J(ab)²]`
    FocalSum,
    /// `a″`
    CausticMajor,
    /// `(b″)^N`
    CausticMinorPowN,
    /// `(a″b″)^{N/2}`
    CausticProductPowHalfN,
    /// `a`
    BilliardMajor,
    /// The center `O`, compared coordinate-wise.
    Origin,
    /// Equal to k103 sample by sample; no closed form in the family
    /// constants.
    SameAsK103,
}

impl ClosedForm {
    pub fn label(self) -> &'static str {
        match self {
            Self::JlMinusN => "JL-N",
            Self::One => "1",
            Self::Two => "2",
            Self::Four => "4",
            Self::Zero => "0",
            Self::AxesRatioSquared => "[ab/(a''b'')]^2",
            Self::HalfPerimeter => "L/2",
            Self::CurvatureSum => "L/[2J(ab)^(4/3)]",
            Self::FocalSum => "L/[2J(ab)^2]",
            Self::CausticMajor => "a''",
            Self::CausticMinorPowN => "(b'')^N",
            Self::CausticProductPowHalfN => "(a''b'')^(N/2)",
            Self::BilliardMajor => "a",
            Self::Origin => "O",
            Self::SameAsK103 => "k103",
        }
    }

    /// Target value for every component of the evaluated quantity, or `None`
    /// when the column does not name a function of the family constants.
    pub fn value<T: Real>(self, f: &OrbitFamily<T>) -> Option<T> {
        let (a, b) = (f.billiard.a(), f.billiard.b());
        let (ac, bc) = (f.caustic.a(), f.caustic.b());
        let (l, j) = (f.perimeter, f.joachimsthal);
        let n = f.n();
        let ab = a * b;
        Some(match self {
            Self::JlMinusN => j * l - T::of_usize(n),
            Self::One => T::one(),
            Self::Two => T::two(),
            Self::Four => T::lit(4.0),
            Self::Zero | Self::Origin => T::zero(),
            Self::AxesRatioSquared => (ab / (ac * bc)).sq(),
            Self::HalfPerimeter => l * T::half(),
            Self::CurvatureSum => l / (T::two() * j * ab.powf(T::lit(4.0 / 3.0))),
            Self::FocalSum => l / (T::two() * j * ab * ab),
            Self::CausticMajor => ac,
            Self::CausticMinorPowN => bc.powi(n as i32),
            Self::CausticProductPowHalfN => (ac * bc).powf(T::of_usize(n) * T::half()),
            Self::BilliardMajor => a,
            Self::SameAsK103 => return None,
        })
    }
}

/// Shape of an evaluated quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ValueKind {
    Scalar,
    Point,
    /// Several scalars that must each be constant.
    Vector(usize),
    /// One value per vertex, all expected equal to the same constant.
    Radii,
}

/// One catalog row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InvariantSpec {
    pub id: &'static str,
    pub cluster: u8,
    pub expression: &'static str,
    pub condition: Condition,
    pub anchor: AnchorRequirement,
    pub closed_form: Option<ClosedForm>,
    pub proof_status: ProofStatus,
    pub kind: ValueKind,
    /// Known disagreement between the tabulated value and measurement.
    pub discrepancy: Option<&'static str>,
}

impl InvariantSpec {
    /// Id without the sub-row letter, e.g. `k202` for `k202a`.
    pub fn base_id(&self) -> &'static str {
        &self.id[..4]
    }

    pub fn applies_to(&self, n: usize, anchor: Option<AnchorRole>) -> bool {
        self.condition.holds(n) && self.anchor.accepts(anchor)
    }
}
