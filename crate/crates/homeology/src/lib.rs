//! Finite simplicial complexes, exact integer linear algebra, and the
//! (co)homeology spectral sequences of the double complex of incident
//! simplex pairs.
//!
//! The crate is organized around the pipeline
//!
//! ```text
//! SimplicialComplex -> chain/cochain matrices -> filtered double complex
//!                   -> spectral pages -> bigraded group tables
//! ```
//!
//! Everything is computed over arbitrary-precision integers (with optional
//! rational or prime-field coefficients), so ranks and invariant factors are
//! exact. All values are immutable after construction and all operations are
//! pure functions.

pub mod algebra;
pub mod blocks;
pub mod chains;
pub mod corpus;
pub mod engine;
pub mod json;
pub mod maps;
pub mod simplicial;

pub use algebra::{AbelianGroup, Coeffs, IntMat, Subquotient};
pub use engine::{BigradedTable, FilteredComplex, SpectralPage};
pub use simplicial::{Simplex, SimplicialComplex};
