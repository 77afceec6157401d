//! Moment polytopes of real flag varieties.
//!
//! The exact side of the crate (root systems, symmetric pairs, Schubert
//! combinatorics, polyhedra) is generic over an [`ExactField`]; the spectral
//! Monte-Carlo oracle in [`spectra`] is generic over `num_traits::Float`.
//! The aliases below fix the default scalars: arbitrary precision rationals
//! for the exact code and `f64` for sampling.

pub mod error;
pub mod linalg;
pub mod polytope;
pub mod rootsys;
pub mod scalar;
pub mod schubert;
pub mod spectra;
pub mod sympair;
pub mod vector;

pub use error::{Error, Result};
pub use rootsys::{build_root_system, Family, WeylElement};
pub use scalar::ExactField;

/// Default exact scalar.
pub type Rational = num_rational::BigRational;

pub type RationalVector = vector::Vector<Rational>;
pub type RootSystem = rootsys::RootSystem<Rational>;
