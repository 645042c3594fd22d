//! Exact polytope number sequences.
//!
//! Simplex, cross-polytope, measure-polytope and r-rectified simplex
//! numbers, their interior sequences, and decompositions of rectified
//! simplex numbers over shifted simplex numbers. Every closed form can be
//! checked against [`oracle::KimOracle`], which evaluates the recursive
//! face-lattice definition directly.

pub mod error;
pub mod exact;
pub mod grid;
pub mod identities;
pub mod oracle;
pub mod rectified;
pub mod simplex;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{binomial, eulerian, gbinomial, IntPolynomial, Integer};
pub use oracle::{FaceCensus, KimOracle, Polytope};
pub use rectified::{CoefficientVector, RectifiedParams, ShiftParams};
pub use simplex::{alpha, alpha_interior, beta, facet_cut, gamma};
