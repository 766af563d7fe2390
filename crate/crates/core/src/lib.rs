//! Combinatorics, seminormal representations and a tensor-space oracle for
//! the degenerate extended two-boundary Hecke algebra.

pub mod algebra;
pub mod bratteli;
pub mod error;
pub mod numerics;
pub mod oracle;
pub mod partitions;
pub mod seminormal;

pub use error::{Error, Result};
