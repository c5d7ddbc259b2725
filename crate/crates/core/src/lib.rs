//! Determinants of Laplacian matrices of quaternion unit gain graphs.
//!
//! The crate computes `det L(G)` two independent ways:
//!
//! * directly, as the row determinant of the Hermitian Laplacian, using the
//!   noncommutative row/column determinants in [`det`];
//! * combinatorially, as a sum over unicycle-like reductions of the incidence
//!   matrix, each contributing `Π |1 - φ(C)|²` over its cycles ([`reductions`]).
//!
//! A third route through the complex adjoint representation ([`adjoint`])
//! serves as an independent oracle: for Hermitian `A`, `det χ(A) = (det A)²`.
//!
//! Everything here is `no_std` with `alloc`; file formats, the CLI and the
//! randomized verification harness live in the `qgain` crate.
#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod adjoint;
pub mod arrangement;
pub mod combinatorics;
pub mod config;
pub mod det;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod quat;
pub mod reductions;
pub mod sum;

pub use config::{Config, LeaderOrder};
pub use error::{Error, Result};
pub use graph::{CycleReport, GainGraph, LaplacianRoute, OrientedEdge};
pub use matrix::QMatrix;
pub use quat::Quaternion;
pub use reductions::{ComponentKind, Reduction, ReductionComponent};
