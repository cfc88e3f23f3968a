//! Generalized exponents of types A and C via crystal combinatorics,
//! symplectic branching coefficients and a Weyl-group oracle.

pub mod branching;
pub mod cli;
pub mod crystal;
pub mod error;
pub mod extremal;
pub mod genexp;
pub mod lr;
pub mod oracle;
pub mod partition;
pub mod poly;

pub use error::{Error, Result};
