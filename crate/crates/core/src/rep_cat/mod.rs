//! The braided monoidal category of finite-dimensional modules over a
//! quantum groupoid, with the gradings available over a double.

mod decompose;
mod format;
mod module;
mod tensor;

pub use decompose::{decompose, groupoid_action, Decomposition};
pub use format::{AlgebraRef, GradeJson, HModuleJson};
pub use module::{
    check_module, h_linearity_witness, regular_module, zero_module, Bigrading, HModule,
    RHO_MULTIPLICATIVE, RHO_UNIT,
};
pub use tensor::{
    act_on_tensor, associator, braiding, braiding_between, monoidal_product, tensor_morphisms,
    unit_object, unitors, Braiding, TensorProduct, TensorUnit, Unitors,
};

use crate::exact_linalg::LinAlgError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("modules are over different algebras")]
    AlgebraMismatch,
    #[error("the algebra is not a Drinfeld double")]
    NotADouble,
    #[error("grading mismatch: {0}")]
    GradingMismatch(String),
    #[error("double-specific decomposition disagrees with the generic construction: {0}")]
    DecompositionMismatch(String),
    #[error("{0} unitor does not factor through the truncated product")]
    UnitorNotWellDefined(&'static str),
    #[error(transparent)]
    LinAlg(LinAlgError),
    #[error("malformed module: {0}")]
    Malformed(String),
}

#[cfg(test)]
mod tests;
