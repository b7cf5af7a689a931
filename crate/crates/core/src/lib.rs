//! Exact computations for the extended affine Hecke algebra, the affine q-Schur algebra and
//! their categorifications by (singular) Soergel bimodules.

pub mod arith;
pub mod cli;
pub mod error;
pub mod hecke;
pub mod report;
pub mod rouquier;
pub mod schur;
pub mod singular;
pub mod soergel;
pub mod suites;
pub mod weyl;

pub use error::{Error, Result};
