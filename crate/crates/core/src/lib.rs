//! Exact construction of one-dimensional tiling systems as flows under
//! functions over rotation-coded subshifts, and of factor maps between them.
//!
//! Every length, height and time offset is an exact [`QLin`]: a rational
//! combination of `1, √5, √2, √3`. Identities between suspension systems are
//! therefore checked by coefficient equality, never to a floating tolerance.

pub mod error;
pub mod examples;
pub mod exactreal;
pub mod factormap;
pub mod render;
pub mod report;
pub mod sampling;
pub mod suspension;
pub mod symbolic;
pub mod verify;

pub use error::{Error, Result};
pub use exactreal::{Coefficient, Enclosure, Lin};

/// Arbitrary-precision exact real; the scalar used throughout the crate.
pub type QLin = Lin<num_rational::BigRational>;

/// Exact real with machine-word rational coefficients. Arithmetic panics on
/// overflow, so it suits short computations only.
pub type QLin64 = Lin<num_rational::Rational64>;

pub use examples::{ExampleBundle, ExampleParams};
pub use factormap::Code;
pub use suspension::{CeilingFunction, SuspensionPoint, TilePatch};
pub use symbolic::{Level, SubshiftSystem, Symbol, SymbolicPoint};
