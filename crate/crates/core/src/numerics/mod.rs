//! Scalars and dense matrices: exact rationals plus a tolerance-compared
//! floating backend for entries that are square roots.

mod approx;
mod linalg;
mod matrix;
mod rational;

pub use approx::{format_sig, sqrt_checked, Approx, ABS_TOL, REL_TOL};
pub use linalg::{char_poly, rank, Rref};
pub use matrix::{DenseMatrix, Field, Matrix, Scalar};
pub use rational::{ArithOp, Rational};

/// Convenience constructor for small rationals.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}
