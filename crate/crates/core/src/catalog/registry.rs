use super::spec::{
    AnchorRequirement as M, ClosedForm as V, Condition as C, InvariantSpec, ProofStatus as S,
    ValueKind as K,
};

#[allow(clippy::too_many_arguments)]
const fn row(
    id: &'static str,
    cluster: u8,
    expression: &'static str,
    condition: C,
    anchor: M,
    closed_form: Option<V>,
    proof_status: S,
    kind: K,
) -> InvariantSpec {
    InvariantSpec {
        id,
        cluster,
        expression,
        condition,
        anchor,
        closed_form,
        proof_status,
        kind,
        discrepancy: None,
    }
}

const fn flagged(spec: InvariantSpec, note: &'static str) -> InvariantSpec {
    InvariantSpec {
        discrepancy: Some(note),
        ..spec
    }
}

/// Every row of the catalog, in id order.
pub static CATALOG: [InvariantSpec; 96] = [
    // cluster 1: orbit, outer and inner polygons
    row(
        "k101",
        1,
        "Σcos θᵢ",
        C::All,
        M::None,
        Some(V::JlMinusN),
        S::Proven,
        K::Scalar,
    ),
    row(
        "k102",
        1,
        "Πcos θ′ᵢ",
        C::All,
        M::None,
        None,
        S::Proven,
        K::Scalar,
    ),
    row(
        "k103",
        1,
        "A′/A",
        C::Odd,
        M::None,
        None,
        S::Proven,
        K::Scalar,
    ),
    row(
        "k104",
        1,
        "Σcos 2θ′ᵢ",
        C::All,
        M::None,
        None,
        S::Proven,
        K::Scalar,
    ),
    row(
        "k105",
        1,
        "Πsin(θᵢ/2)",
        C::Odd,
        M::None,
        None,
        S::Proven,
        K::Scalar,
    ),
    row(
        "k106",
        1,
        "A′·A",
        C::Even,
        M::None,
        None,
        S::Proven,
        K::Scalar,
    ),
    row(
        "k107",
        1,
        "k103·k105",
        C::Mod4(0),
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k108",
        1,
        "k103/k105",
        C::Mod4(2),
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k109",
        1,
        "A/A″",
        C::Odd,
        M::None,
        Some(V::SameAsK103),
        S::Open,
        K::Scalar,
    ),
    row(
        "k110",
        1,
        "A·A″",
        C::Even,
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k111",
        1,
        "A′·A″",
        C::Even,
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k112",
        1,
        "A′A″/A²",
        C::Odd,
        M::None,
        Some(V::One),
        S::Proven,
        K::Scalar,
    ),
    row(
        "k113",
        1,
        "A′/A″",
        C::All,
        M::None,
        Some(V::AxesRatioSquared),
        S::Proven,
        K::Scalar,
    ),
    row(
        "k114",
        1,
        "Πd₁ᵢ",
        C::Mod4(2),
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k115",
        1,
        "Π|P′ᵢ−f₁|",
        C::Mod4(0),
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k116",
        1,
        "Πlᵢ/Πrᵢ",
        C::All,
        M::None,
        Some(V::One),
        S::Proven,
        K::Scalar,
    ),
    row(
        "k117",
        1,
        "Πlᵢ, Πrᵢ",
        C::Even,
        M::None,
        None,
        S::Open,
        K::Vector(2),
    ),
    row(
        "k118",
        1,
        "Σlᵢ, Σrᵢ",
        C::Odd,
        M::None,
        Some(V::HalfPerimeter),
        S::Open,
        K::Vector(2),
    ),
    row(
        "k119",
        1,
        "Σκᵢ^(2/3)",
        C::All,
        M::None,
        Some(V::CurvatureSum),
        S::Proven,
        K::Scalar,
    ),
    row(
        "k120",
        1,
        "Σcos α₁ᵢ",
        C::All,
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k121",
        1,
        "Σd₁ᵢ",
        C::Even,
        M::None,
        None,
        S::Symmetry,
        K::Scalar,
    ),
    // cluster 2: pedal of the orbit
    row(
        "k201",
        2,
        "|Qᵢ−O|",
        C::All,
        M::Foci,
        Some(V::CausticMajor),
        S::Proven,
        K::Radii,
    ),
    row(
        "k202a",
        2,
        "Π|Qᵢ−M|",
        C::Even,
        M::Foci,
        Some(V::CausticMinorPowN),
        S::Proven,
        K::Scalar,
    ),
    row(
        "k202b",
        2,
        "Π|Qᵢ−M|",
        C::Mod4(0),
        M::Center,
        Some(V::CausticProductPowHalfN),
        S::Proven,
        K::Scalar,
    ),
    row(
        "k203a",
        2,
        "A·A_m",
        C::Mod4(0),
        M::Any,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k203b",
        2,
        "A·A_m",
        C::NotMod4(2),
        M::Center,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k204",
        2,
        "A/A_m",
        C::Mod4(2),
        M::Any,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k205",
        2,
        "Σcos φᵢ",
        C::All,
        M::Any,
        None,
        S::Proven,
        K::Scalar,
    ),
    // cluster 3: pedal of the outer polygon
    row(
        "k301",
        3,
        "|Q′ᵢ−O|",
        C::All,
        M::Foci,
        Some(V::BilliardMajor),
        S::Proven,
        K::Radii,
    ),
    row(
        "k302",
        3,
        "Σ|Q′ᵢ−M|²",
        C::All,
        M::Any,
        None,
        S::Proven,
        K::Scalar,
    ),
    row(
        "k303a",
        3,
        "A′·A′_m",
        C::Mod4(2),
        M::Any,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k303b",
        3,
        "A′·A′_m",
        C::NotMod4(0),
        M::Center,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k304",
        3,
        "A′/A′_m",
        C::Mod4(0),
        M::Any,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k305",
        3,
        "Πcos φ′ᵢ",
        C::All,
        M::Any,
        None,
        S::Proven,
        K::Scalar,
    ),
    row("k306", 3, "C′₀", C::All, M::Any, None, S::Proven, K::Point),
    row("k307", 3, "C′₂", C::Even, M::Any, None, S::Open, K::Point),
    // cluster 4: antipedals
    row(
        "k401",
        4,
        "A′·A*_m",
        C::Mod4(2),
        M::Any,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k402",
        4,
        "A′/A*_m",
        C::Mod4(0),
        M::Any,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k403a",
        4,
        "A_m·A*_m",
        C::Odd,
        M::Center,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k403b",
        4,
        "A_m·A*_m",
        C::Mod4(0),
        M::Foci,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k404",
        4,
        "A*_m/A_m",
        C::Mod4(2),
        M::Foci,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k405",
        4,
        "C*₀",
        C::Even,
        M::CenterOrFoci,
        None,
        S::Open,
        K::Point,
    ),
    row(
        "k406a",
        4,
        "C*′₀, C*′₂",
        C::Even,
        M::Center,
        Some(V::Origin),
        S::Open,
        K::Vector(4),
    ),
    row(
        "k406b",
        4,
        "C*′₀, C*′₂",
        C::Exactly(4),
        M::Foci,
        None,
        S::Open,
        K::Vector(4),
    ),
    row("k407", 4, "C*′₀", C::Even, M::Foci, None, S::Open, K::Point),
    // cluster 5: pedals about the Steiner centroid of curvature
    row(
        "k501",
        5,
        "A/A_k",
        C::Odd,
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k502",
        5,
        "A′/A′_k",
        C::Odd,
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k503",
        5,
        "A″/A″_k",
        C::Odd,
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    // cluster 6: focal pedals and antipedals
    row(
        "k601",
        6,
        "Σq₁ᵢ·Σq₂ᵢ",
        C::Odd,
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k602",
        6,
        "Πq₁ᵢ·Πq₂ᵢ",
        C::All,
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k603",
        6,
        "Σq*₁ᵢ/Σq*₂ᵢ",
        C::All,
        M::None,
        Some(V::One),
        S::Open,
        K::Scalar,
    ),
    row(
        "k604a",
        6,
        "Ā₁·Ā₂",
        C::Odd,
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k604b",
        6,
        "Ā₁/Ā₂",
        C::Even,
        M::None,
        Some(V::One),
        S::Symmetry,
        K::Scalar,
    ),
    row(
        "k605a",
        6,
        "Ā′₁·Ā′₂",
        C::Odd,
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k605b",
        6,
        "Ā′₁/Ā′₂",
        C::Even,
        M::None,
        Some(V::One),
        S::Symmetry,
        K::Scalar,
    ),
    row(
        "k606",
        6,
        "(Ā₁/Ā₂)/(Ā′₁/Ā′₂)",
        C::All,
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k607",
        6,
        "Ā*₁/Ā*₂",
        C::Mod4(0),
        M::None,
        Some(V::One),
        S::Open,
        K::Scalar,
    ),
    row(
        "k608",
        6,
        "Ā′*₁/Ā′*₂",
        C::Even,
        M::None,
        Some(V::One),
        S::Open,
        K::Scalar,
    ),
    row(
        "k609",
        6,
        "Ā″₁/Ā″₂",
        C::Even,
        M::None,
        Some(V::One),
        S::Open,
        K::Scalar,
    ),
    row(
        "k610",
        6,
        "Ā″*₁/Ā″*₂",
        C::Even,
        M::None,
        Some(V::One),
        S::Open,
        K::Scalar,
    ),
    // cluster 7: evolutes
    row(
        "k701",
        7,
        "A/A_e",
        C::GreaterThan(4),
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k702",
        7,
        "A′/A′_e",
        C::GreaterThan(4),
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k703",
        7,
        "A″/A″_e",
        C::GreaterThan(4),
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    // cluster 8: inversions about f₁
    row(
        "k801",
        8,
        "Σ1/d₁ᵢ",
        C::All,
        M::None,
        None,
        S::Proven,
        K::Scalar,
    ),
    row("k802", 8, "L†₁", C::All, M::None, None, S::Open, K::Scalar),
    row(
        "k803",
        8,
        "Σcos θ†₁ᵢ",
        C::NotEqual(4),
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k804a",
        8,
        "A·A†₁",
        C::Mod4(0),
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k804b",
        8,
        "A·A†₁",
        C::Exactly(4),
        M::None,
        Some(V::Four),
        S::Open,
        K::Scalar,
    ),
    row(
        "k805",
        8,
        "A/A†₁",
        C::Mod4(2),
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k806a",
        8,
        "A′†₁/A†₁",
        C::All,
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    flagged(
        row(
            "k806b",
            8,
            "A′†₁/A†₁",
            C::Exactly(4),
            M::None,
            Some(V::Two),
            S::Open,
            K::Scalar,
        ),
        "tabulated value 2; the axis rhombus of a=2, b=1 measures 1/2",
    ),
    row(
        "k807",
        8,
        "A·A⊗",
        C::Even,
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row("k808", 8, "A/A⊗", C::Odd, M::None, None, S::Open, K::Scalar),
    row(
        "k809",
        8,
        "A′·A′⊖",
        C::Even,
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k810",
        8,
        "A′/A′⊖",
        C::Odd,
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row("k811", 8, "Σwᵢ²", C::All, M::None, None, S::Open, K::Scalar),
    row(
        "k812a",
        8,
        "Σcos ψ₁ᵢ",
        C::All,
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k812b",
        8,
        "Σcos ψ₁ᵢ",
        C::Exactly(4),
        M::None,
        Some(V::Zero),
        S::Open,
        K::Scalar,
    ),
    row(
        "k813",
        8,
        "A₁,pol/A†₁",
        C::All,
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k814",
        8,
        "A₁,pol/A₁,dual",
        C::All,
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k815",
        8,
        "Ā₁·A₁,dual",
        C::Odd,
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k816",
        8,
        "Ā₁/A₁,dual",
        C::Even,
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k817",
        8,
        "A†₁·Ā*₁",
        C::Mod4(0),
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k818",
        8,
        "A†₁/Ā*₁",
        C::Mod4(2),
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    // cluster 9: both foci
    row(
        "k901",
        9,
        "Σd₁ᵢ⁻¹/Σd₂ᵢ⁻¹",
        C::All,
        M::None,
        Some(V::One),
        S::Proven,
        K::Scalar,
    ),
    row(
        "k902",
        9,
        "Σ1/(d₁ᵢd₂ᵢ)",
        C::All,
        M::None,
        Some(V::FocalSum),
        S::Proven,
        K::Scalar,
    ),
    row(
        "k903a",
        9,
        "A†₁·A†₂",
        C::Odd,
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k903b",
        9,
        "A†₁/A†₂",
        C::Even,
        M::None,
        Some(V::One),
        S::Symmetry,
        K::Scalar,
    ),
    row(
        "k904a",
        9,
        "A′†₁·A′†₂",
        C::Odd,
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k904b",
        9,
        "A′†₁/A′†₂",
        C::Even,
        M::None,
        Some(V::One),
        S::Symmetry,
        K::Scalar,
    ),
    row(
        "k905",
        9,
        "A″†₁/A″†₂",
        C::Even,
        M::None,
        Some(V::One),
        S::Open,
        K::Scalar,
    ),
    row(
        "k906",
        9,
        "A′‡₁/A′‡₂",
        C::Even,
        M::None,
        Some(V::One),
        S::Open,
        K::Scalar,
    ),
    row(
        "k907a",
        9,
        "A₁,dual·A₂,dual",
        C::Odd,
        M::None,
        None,
        S::Open,
        K::Scalar,
    ),
    row(
        "k907b",
        9,
        "A₁,dual/A₂,dual",
        C::Even,
        M::None,
        Some(V::One),
        S::Open,
        K::Scalar,
    ),
    row(
        "k908a",
        9,
        "A†₁,ped/A†₂,ped",
        C::Even,
        M::None,
        Some(V::One),
        S::Open,
        K::Scalar,
    ),
    row(
        "k908b",
        9,
        "A†₁,ped/A†₂,ped",
        C::Exactly(3),
        M::None,
        Some(V::One),
        S::Open,
        K::Scalar,
    ),
];
