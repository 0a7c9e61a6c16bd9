//! Exact computation of the spectral invariants attached to a dominant
//! weight of a simply connected group: the degree d_λ, the extremal
//! coefficient deg_λ, the eigenweights ε_{λ,j}, the constant b_λ, and the
//! derivative-of-zeta volume formulas built from them.

pub mod chevalley;
pub mod classical;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod repbuilder;
pub mod rootdata;
pub mod scalar;
pub mod tables;
pub mod volume;

pub use error::{Error, Result};
pub use scalar::{Integer, QuadExt, Rational, Scalar};
