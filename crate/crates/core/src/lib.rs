//! Exact computer algebra for the bosonized unrolled quantum supergroup
//! `U_xi sl(2|1)` at an odd root of unity, its finite quotients `U_alpha`,
//! and the Hennings-type invariants of links and 3-manifolds built from them.

pub mod algebra;
pub mod error;
pub mod fourier;
pub mod gcoalgebra;
pub mod ribbon;
pub mod invariant;
pub mod scalars;
pub mod tangles;
pub mod verify;

pub use error::{Error, Result};
