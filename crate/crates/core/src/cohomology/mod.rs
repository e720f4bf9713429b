//! Exact arithmetic of normalized root-of-unity valued cochains.

mod cochain;
mod literal;
mod local;
mod solve;
mod unit;

pub use cochain::{double_cocycle, tuples, Cochain, MAX_ARITY};
pub use literal::{CochainLiteral, HomLiteral};
pub use local::LocalCocycle;
pub use solve::{is_coboundary_of, solve_coboundary};
pub use unit::{parse_exponent, Exponent, UnitScalar};
