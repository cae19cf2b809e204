//! Exact h-polynomials of subdivisions of shellable polytopal complexes.
//!
//! The crate builds cubical and simplicial complexes, computes their
//! barycentric and edgewise subdivisions, checks shelling orders for
//! stability and decides real-rootedness and interlacing exactly.

pub mod error;
pub mod lineshell;
pub mod cellcomplex;
pub mod cli;
pub mod constructions;
pub mod eulerian;
pub mod polyreal;
pub mod shelling;
pub mod subdivision;
pub mod verify;

pub use error::{Error, Result};
pub use polyreal::IntPolynomial;
