//! Exact-arithmetic workbench for semisimple 4-dimensional TQFT invariants.
//!
//! The crate computes the Crane-Yetter-Kauffman invariant of closed oriented
//! 4-manifolds presented by 2-handle Kirby diagrams, starting from ribbon
//! fusion category data, and cross-checks it against closed-form expressions
//! in the Euler characteristic and signature.

pub mod acceptance;
pub mod category;
pub mod error;
pub mod format;
pub mod frobenius;
pub mod linalg;
pub mod link;
pub mod manifold;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::CycScalar;
