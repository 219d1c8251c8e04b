//! Exact dense linear algebra over ℚ and GF(p).

mod mat;
mod scalar;
mod split;

pub use mat::Mat;
pub use scalar::{Field, Scalar};
pub use split::{solve_right, split_idempotent, Splitting};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KernelError {
    #[error("{op}: incompatible shapes {left:?} and {right:?}")]
    Shape {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("mixed fields {left} and {right}")]
    FieldMismatch { left: Field, right: Field },
    #[error("{0} is not a supported prime")]
    NotPrime(u64),
    #[error("matrix of shape {shape:?} is not square")]
    NotSquare { shape: (usize, usize) },
    #[error("matrix is not idempotent (E∘E differs from E at row {row}, column {col})")]
    NotIdempotent { row: usize, col: usize },
    #[error("no solution: right-hand side column {column} is outside the image")]
    Inconsistent { column: usize },
    #[error("expected {expected} entries, found {found}")]
    EntryCount { expected: usize, found: usize },
    #[error("cannot read {text:?} as an element of {field}")]
    BadScalar { text: String, field: Field },
}
