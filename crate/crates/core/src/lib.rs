//! Exact verification of Z/2-graded extensions of `Rep(H)` for finite-dimensional
//! Hopf algebras `H` in `vect` or `svect` over cyclotomic fields.
//!
//! The extension `C = C₀ ⊕ C₁` has `C₀ = Rep(H)` and `C₁` the base category. Its
//! associator is parameterised by a Hopf copairing `γ` and a right cointegral `λ`,
//! its braiding additionally by an element `σ` and a scalar `β`. This crate
//! checks the defining conditions, evaluates the pentagon and hexagon equations
//! both as identities between tensors on powers of `H` and as matrices on actual
//! objects, and builds the standard example families.

pub mod braided_ext;
pub mod cli;
pub mod cyclofield;
pub mod error;
pub mod examples;
pub mod gvect;
pub mod hopfcore;
pub mod monoidal_ext;
pub mod report;

pub use cyclofield::{CycNum, Rat};
pub use error::{Error, Result};
