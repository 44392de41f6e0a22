//! Algebra, coalgebra and Frobenius objects in the module category of a
//! groupoid double, with the two extra conditions that single out the ones
//! coming from groupoid Frobenius algebras.

mod check;
mod format;

pub use check::{
    check_algebra_object, check_coalgebra_object, check_condition1, check_condition2,
    check_frobenius_object, law,
};
pub use format::{FrobeniusJson, MapJson};

use crate::exact_linalg::LinMap;
use crate::rep_cat::{decompose, monoidal_product, unit_object, HModule, RepError, TensorProduct, TensorUnit};
use crate::weak_hopf::Elem2;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FrobeniusError {
    #[error("the module is not over a Drinfeld double")]
    NotADouble,
    #[error("the carrier basis is not homogeneous for the double's grading")]
    NotHomogeneous,
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("{0} has the wrong domain or codomain")]
    ShapeMismatch(&'static str),
    #[error("malformed Frobenius object: {0}")]
    Malformed(String),
}

/// `((ρ, A), m, Δ, μ, ε)` with `m: A⊗̂A → A`, `μ: I → A`, `Δ: A → A⊗̂A` and
/// `ε: A → I`. The truncated square and the unit object are built once here
/// and every map is expressed in their bases.
#[derive(Clone, Debug)]
pub struct FrobeniusObjectData {
    module: HModule,
    square: TensorProduct,
    unit: TensorUnit,
    r: Elem2,
    m: LinMap,
    mu: LinMap,
    delta: LinMap,
    eps: LinMap,
}

impl FrobeniusObjectData {
    /// Accepts an ungraded module if its basis is already homogeneous.
    pub fn new(
        module: HModule,
        m: LinMap,
        mu: LinMap,
        delta: LinMap,
        eps: LinMap,
    ) -> Result<Self, FrobeniusError> {
        let h = module.algebra().clone();
        let info = h.double_info().ok_or(FrobeniusError::NotADouble)?;
        let module = match module.grading() {
            Some(_) => module,
            None => {
                let d = decompose(&module)?;
                if d.change_of_basis.is_some() {
                    return Err(FrobeniusError::NotHomogeneous);
                }
                d.module
            }
        };
        let r = info.r_element();
        let square = monoidal_product(&module, &module)?;
        let unit = unit_object(&h)?;
        let a = module.carrier();
        let aa = square.module.carrier();
        let i = unit.module.carrier();
        let fits = |f: &LinMap, dom: &crate::exact_linalg::LabeledBasis, cod: &crate::exact_linalg::LabeledBasis| {
            f.domain().same_as(dom) && f.codomain().same_as(cod)
        };
        if !fits(&m, aa, a) {
            return Err(FrobeniusError::ShapeMismatch("m"));
        }
        if !fits(&mu, i, a) {
            return Err(FrobeniusError::ShapeMismatch("μ"));
        }
        if !fits(&delta, a, aa) {
            return Err(FrobeniusError::ShapeMismatch("Δ"));
        }
        if !fits(&eps, a, i) {
            return Err(FrobeniusError::ShapeMismatch("ε"));
        }
        Ok(FrobeniusObjectData { module, square, unit, r, m, mu, delta, eps })
    }

    pub fn module(&self) -> &HModule {
        &self.module
    }

    /// `A ⊗̂ A`.
    pub fn square(&self) -> &TensorProduct {
        &self.square
    }

    pub fn unit_object(&self) -> &TensorUnit {
        &self.unit
    }

    pub fn r_element(&self) -> &Elem2 {
        &self.r
    }

    pub fn m(&self) -> &LinMap {
        &self.m
    }

    pub fn mu(&self) -> &LinMap {
        &self.mu
    }

    pub fn delta(&self) -> &LinMap {
        &self.delta
    }

    pub fn eps(&self) -> &LinMap {
        &self.eps
    }

    pub fn with_m(&self, m: LinMap) -> Self {
        Self { m: m.with_bases(self.m.domain(), self.m.codomain()), ..self.clone() }
    }

    pub fn with_mu(&self, mu: LinMap) -> Self {
        Self { mu: mu.with_bases(self.mu.domain(), self.mu.codomain()), ..self.clone() }
    }

    pub fn with_delta(&self, delta: LinMap) -> Self {
        Self { delta: delta.with_bases(self.delta.domain(), self.delta.codomain()), ..self.clone() }
    }

    pub fn with_eps(&self, eps: LinMap) -> Self {
        Self { eps: eps.with_bases(self.eps.domain(), self.eps.codomain()), ..self.clone() }
    }

    /// Replaces the module action, keeping the maps. Used to build objects
    /// that violate the extra conditions.
    pub fn with_module(&self, module: HModule) -> Result<Self, FrobeniusError> {
        Self::new(module, self.m.clone(), self.mu.clone(), self.delta.clone(), self.eps.clone())
    }
}
