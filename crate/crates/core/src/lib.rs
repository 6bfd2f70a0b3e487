//! Exact spectral theory of valued cluster quivers: exchange matrices,
//! mutation, characteristic polynomials, radius decisions and mutation-class
//! exploration.

pub mod cli;
pub mod error;
pub mod explorer;
pub mod json;
pub mod matrix;
pub mod mutation;
pub mod poly;
pub mod quiver;
pub mod roots;
pub mod spectral;

#[cfg(test)]
pub(crate) mod testing;

pub use error::{QuiverError, Result};
pub use matrix::IntMatrix;
pub use mutation::{mutate, mutate_quiver, mutate_seq, MutationSequence};
pub use poly::IntPolynomial;
pub use quiver::{parse_quiver, Arrow, ExchangeMatrix, ValuedQuiver, VertexKind};
pub use spectral::{char_poly, radius_cmp, real_root_form, RadiusVerdict};
