//! Exact scalar arithmetic over `F_p` and `Q`, dense matrices, and the linear
//! algebra kernels every other module calls. Everything here is a pure
//! function on immutable data.

mod mat;
pub mod poly;
mod scalar;

pub use mat::{Mat, Subspace};
pub use scalar::{FieldSpec, Rat, Scalar};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExactError {
    #[error("bad field: {0}")]
    BadField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is singular")]
    Singular,
    #[error("parse error: {0}")]
    Parse(String),
}
