//! Higher Frobenius–Schur indicators of group-theoretical fusion categories
//! `C(G, H, ω, ψ)` and of twisted Drinfeld doubles `D^ω(G)`, computed from
//! finite-group and cohomological data.
//!
//! ```
//! use gtfs::prelude::*;
//!
//! // Rep(Q8): the two-dimensional simple object has ν₂ = −1.
//! let q8 = gtfs::group::named::quaternion();
//! let data = GroupTheoreticalData::with_trivial_psi(Subgroup::whole(&q8), Cochain::trivial(&q8, 3)).unwrap();
//! let table = full_indicator_table::<f64>(&data, 2, Pipeline::Auto, &TableOptions::default()).unwrap();
//! let row = table.rows.iter().find(|r| r.degree == 2).unwrap();
//! assert!((row.values[1].re + 1.0).abs() < 1e-9);
//! ```

pub mod adaptation;
pub mod cohomology;
pub mod error;
pub mod exact;
pub mod group;
pub mod indicators;
pub mod problem;
pub mod projrep;
pub mod scalar;
pub mod symbols;

pub use error::{Error, Result};
pub use scalar::Real;

pub type ProjectiveCharacter64 = projrep::ProjectiveCharacter<f64>;
pub type MatrixRep64 = projrep::MatrixRep<f64>;
pub type IndicatorTable64 = indicators::IndicatorTable<f64>;
pub type ProjectiveCharacter32 = projrep::ProjectiveCharacter<f32>;
pub type IndicatorTable32 = indicators::IndicatorTable<f32>;

pub mod prelude {
    pub use crate::adaptation::{adapt, adapt_with_eta, adapt_with_transversal, AdaptationResult};
    pub use crate::cohomology::{Cochain, CochainLiteral, LocalCocycle, UnitScalar};
    pub use crate::error::{Error, Result};
    pub use crate::group::{direct_product, Element, FiniteGroup, GroupHom, Subgroup};
    pub use crate::indicators::{full_indicator_table, GaugedData, IndicatorTable, TableOptions, Variant};
    pub use crate::problem::{Pipeline, ProblemSpec};
    pub use crate::projrep::{irreducible_projective_characters, ProjectiveCharacter};
    pub use crate::scalar::Real;
    pub use crate::symbols::GroupTheoreticalData;
}
