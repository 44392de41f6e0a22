//! Exact rational scalars and linear algebra over labeled bases.

mod basis;
mod linmap;
mod reduce;
mod scalar;
mod sparse;

pub use basis::{tensor_basis, DuplicateLabel, Label, LabeledBasis};
pub use linmap::{
    dual_map, swap_map, swap_map_with_bases, tensor_map, tensor_map_with_bases, LinMap, SparseRow,
    Vector,
};
pub use reduce::{image_basis, inverse, rank, rref, solve, solve_linear, Image, LinearSolution, Rref};
pub use scalar::{ParseScalarError, Scalar};
pub use sparse::SparseVec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("map is not idempotent (first discrepancy at row {row}, column {col})")]
    NotIdempotent { row: usize, col: usize },
    #[error("vector is not in the image of the map")]
    NoSolution,
    #[error("map is not invertible")]
    Singular,
    #[error("matrix shape mismatch: expected {expected:?}, found {found:?}")]
    ShapeMismatch { expected: (usize, usize), found: (usize, usize) },
}
