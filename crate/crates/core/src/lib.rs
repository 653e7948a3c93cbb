//! Exact computations on the polymatroidal cone `Γ_n` and constructive
//! entropy characterizations on the two-dimensional faces of `Γ_4`.
//!
//! * [`entspace`]: set functions, polymatroid axioms, elemental inequalities
//!   and the symmetric-group action.
//! * [`cone`]: double description over exact integers, extremeness checks
//!   and two-face enumeration.
//! * [`catalog`]: named rank functions, orbit classification and the
//!   face-type table of `Γ_4`.
//! * [`dist`]: finite joint distributions and their entropy vectors.
//! * [`faces`]: membership predicates and witness distributions for the
//!   characterized face types.
//!
//! The set-function layer is generic over [`Scalar`]; [`ExactSetFunction`]
//! and [`RealSetFunction`] are the two backends used throughout.

pub mod catalog;
pub mod cone;
pub mod dist;
pub mod entspace;
pub mod error;
pub mod faces;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{Scalar, DEFAULT_TOL};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Set function on exact rationals, used for all cone work.
pub type ExactSetFunction = entspace::SetFunction<BigRational>;
/// Set function on `f64` in bits, used for entropy vectors.
pub type RealSetFunction = entspace::SetFunction<f64>;
/// Inequality with exact rational coefficients.
pub type ExactInequality = entspace::LinearInequality<BigRational>;
