//! Groupoid Frobenius algebras as explicit structure constants over a
//! homogeneous carrier basis.

mod check;
mod construct;
mod format;

pub use check::{axiom, check_gfa};
pub use construct::groupoid_ring_gfa;
pub use format::{GfaJson, GroupoidRef};

use crate::exact_linalg::{LabeledBasis, LinMap, Scalar};
use crate::groupoid::{Groupoid, GroupoidError};
use crate::rep_cat::Bigrading;
use crate::weak_hopf::Elem;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GfaError {
    #[error(transparent)]
    InvalidGroupoid(#[from] GroupoidError),
    #[error("grading inconsistent: {0}")]
    GradingInconsistent(String),
    #[error("malformed GFA: {0}")]
    Malformed(String),
}

/// `⟨𝒢, (A, ⋆, 1_A), η, φ⟩` on a carrier whose basis vectors each carry one
/// grade `(x, g)` with `g ∈ Γ^x`.
///
/// `eta` has entry `(i, j) = η(u_i, u_j)`. `phi[x]` is an endomorphism of the
/// whole carrier; the action axioms require it to vanish off `A^{s(x)}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Gfa {
    groupoid: Groupoid,
    carrier: LabeledBasis,
    grading: Bigrading,
    product: Vec<Elem>,
    unit: Elem,
    eta: LinMap,
    phi: Vec<LinMap>,
}

impl Gfa {
    /// `product[i * n + j] = u_i ⋆ u_j`.
    pub fn new(
        groupoid: Groupoid,
        carrier: LabeledBasis,
        grading: Bigrading,
        product: Vec<Elem>,
        unit: Elem,
        eta: LinMap,
        phi: Vec<LinMap>,
    ) -> Result<Self, GfaError> {
        groupoid.ensure_valid()?;
        let n = carrier.len();
        let bad = |m: String| GfaError::Malformed(m);
        if grading.grades.len() != n {
            return Err(GfaError::GradingInconsistent(format!(
                "{} grades for {} carrier vectors",
                grading.grades.len(),
                n
            )));
        }
        for (i, &(x, g)) in grading.grades.iter().enumerate() {
            if x >= groupoid.num_objects()
                || g >= groupoid.num_morphisms()
                || groupoid.src(g) != x
                || groupoid.tgt(g) != x
            {
                return Err(GfaError::GradingInconsistent(format!(
                    "{} is not graded by a loop at its object",
                    carrier.label(i)
                )));
            }
        }
        if product.len() != n * n {
            return Err(bad(format!("product table has {} entries, expected {}", product.len(), n * n)));
        }
        let in_range = |e: &Elem| e.keys().all(|&k| k < n);
        if !product.iter().all(in_range) || !in_range(&unit) {
            return Err(bad("structure constant refers to a vector outside the carrier".into()));
        }
        if !eta.domain().same_as(&carrier) || !eta.codomain().same_as(&carrier) {
            return Err(bad("eta must be a square matrix over the carrier".into()));
        }
        if phi.len() != groupoid.num_morphisms() {
            return Err(bad(format!(
                "{} phi matrices for {} morphisms",
                phi.len(),
                groupoid.num_morphisms()
            )));
        }
        if phi.iter().any(|p| !p.domain().same_as(&carrier) || !p.codomain().same_as(&carrier)) {
            return Err(bad("phi matrices must be square over the carrier".into()));
        }
        Ok(Gfa { groupoid, carrier, grading, product, unit, eta, phi })
    }

    pub fn groupoid(&self) -> &Groupoid {
        &self.groupoid
    }

    pub fn carrier(&self) -> &LabeledBasis {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.len()
    }

    pub fn grading(&self) -> &Bigrading {
        &self.grading
    }

    pub fn product(&self, i: usize, j: usize) -> &Elem {
        &self.product[i * self.dim() + j]
    }

    pub fn unit(&self) -> &Elem {
        &self.unit
    }

    pub fn eta(&self) -> &LinMap {
        &self.eta
    }

    pub fn phi(&self, x: usize) -> &LinMap {
        &self.phi[x]
    }

    pub fn phis(&self) -> &[LinMap] {
        &self.phi
    }

    pub fn label(&self, i: usize) -> String {
        self.carrier.label(i).to_string()
    }

    /// Bilinear extension of the structure constants.
    pub fn star(&self, a: &Elem, b: &Elem) -> Elem {
        let mut out = Elem::new();
        for (i, ca) in a.iter() {
            for (j, cb) in b.iter() {
                out.add_scaled(self.product(*i, *j), &(ca * cb));
            }
        }
        out
    }

    pub fn eta_value(&self, a: &Elem, b: &Elem) -> Scalar {
        let mut out = Scalar::zero();
        for (i, ca) in a.iter() {
            for (j, cb) in b.iter() {
                let v = self.eta.get(*i, *j);
                if !v.is_zero() {
                    out += &(&(ca * cb) * &v);
                }
            }
        }
        out
    }

    /// `l_c: v ↦ c ⋆ v` on the whole carrier.
    pub fn left_mult(&self, c: &Elem) -> LinMap {
        let cols: Vec<Elem> = (0..self.dim()).map(|j| self.star(c, &Elem::unit(j))).collect();
        LinMap::from_columns(&self.carrier, &self.carrier, &cols)
    }

    /// Projection onto `A^x` along the other objects.
    pub fn object_projection(&self, x: usize) -> LinMap {
        LinMap::from_triplets(
            &self.carrier,
            &self.carrier,
            self.grading.component(x).into_iter().map(|i| (i, i, Scalar::one())),
        )
    }

    /// `1^x_A`, the `A^x` part of the unit.
    pub fn unit_component(&self, x: usize) -> Elem {
        self.unit.iter().filter(|(i, _)| self.grading.object(**i) == x).map(|(i, c)| (*i, c.clone())).collect()
    }

    pub fn with_product(&self, i: usize, j: usize, value: Elem) -> Self {
        let mut out = self.clone();
        let n = self.dim();
        out.product[i * n + j] = value;
        out
    }

    pub fn with_eta(&self, eta: LinMap) -> Self {
        let mut out = self.clone();
        out.eta = eta.with_bases(&self.carrier, &self.carrier);
        out
    }

    pub fn with_phi(&self, x: usize, phi: LinMap) -> Self {
        let mut out = self.clone();
        out.phi[x] = phi.with_bases(&self.carrier, &self.carrier);
        out
    }

    pub fn with_unit(&self, unit: Elem) -> Self {
        let mut out = self.clone();
        out.unit = unit;
        out
    }
}

#[cfg(test)]
mod tests;
