//! Exact symbolic engine for the exotic matrix bialgebras obtained from
//! non-triangular 4x4 R-matrices, their duals, and their representations.

pub mod bialgebra;
pub mod catalog;
pub mod duality;
pub mod error;
pub mod freealg;
pub mod induced;
pub mod linalg;
pub mod reps;
pub mod rtt;
pub mod scalars;

pub use error::{Error, Result};
pub use scalars::{Field, Gauss, Poly, RatFunc};

/// Coefficient domain `Q(i)(q)`.
pub type Scalar = RatFunc;
