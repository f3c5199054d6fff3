//! Exact linear algebra over Q and F_p.

mod matrix;
mod scalar;
mod subspace;
pub mod tensor;

pub use matrix::{solve_linear, Matrix, Solution};
pub use scalar::{FieldSpec, Rational, Scalar};
pub use subspace::Subspace;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("modulus {0} is not a prime below 2^31")]
    BadModulus(u32),
    #[error("bad scalar literal {0:?}")]
    BadScalar(String),
}
