pub mod arith;
pub mod braid;
pub mod cli;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod rep;
pub mod report;
pub mod rmatrix;

pub use error::{Error, Result};
