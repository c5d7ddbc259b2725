//! File formats, random instance generators and the verification harness
//! for quaternion unit gain graph determinants, plus the `qgain` binary.
//!
//! The numerical work lives in [`qgain_core`]; this crate adds everything
//! that needs `std`.

pub mod document;
pub mod error;
pub mod format;
pub mod random;
pub mod verify;

pub use document::{EdgeDocument, GainSpec, GraphDocument};
pub use error::Error;
pub use verify::{LemmaResult, SuiteConfig, VerificationReport};
