//! Both directions between groupoid Frobenius algebras and Frobenius objects
//! over the groupoid double, and the round trips through them.

mod compare;

pub use compare::{EqualityReport, Mismatch};

use std::sync::Arc;

use crate::exact_linalg::{inverse, tensor_basis, tensor_map, Label, LabeledBasis, LinMap, Scalar};
use crate::frobenius::{
    check_algebra_object, check_coalgebra_object, check_condition1, check_condition2,
    check_frobenius_object, FrobeniusError, FrobeniusObjectData,
};
use crate::gfa::{check_gfa, Gfa, GfaError};
use crate::rep_cat::{groupoid_action, monoidal_product, unit_object, HModule, RepError};
use crate::report::{first_witness, AxiomReport};
use crate::weak_hopf::{double_algebra, Elem, QuantumGroupoid};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CorrespondenceError {
    #[error("GFA fails: {}", .0.join(", "))]
    GfaInvalid(Vec<String>),
    #[error("η is degenerate, so ψ has no inverse")]
    PsiNotInvertible,
    #[error("conditions not met: {}", .0.join(", "))]
    ConditionsNotMet(Vec<String>),
    #[error(transparent)]
    Gfa(#[from] GfaError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Frobenius(#[from] FrobeniusError),
    #[error("{0}")]
    Algebra(String),
}

/// Names used in `ConditionsNotMet`.
pub mod precheck {
    pub const ALGEBRA: &str = "algebra object";
    pub const COALGEBRA: &str = "coalgebra object";
    pub const FROBENIUS: &str = "Frobenius relations";
    pub const CONDITION1: &str = "condition1";
    pub const CONDITION2: &str = "condition2";
}

/// Labels `("*", l)` for the dual basis vectors `u_l*`.
pub fn dual_basis(b: &LabeledBasis) -> LabeledBasis {
    LabeledBasis::new(b.labels().iter().map(|l| Label::pair(Label::atom("*"), l.clone())).collect())
        .expect("distinct labels stay distinct")
}

fn ensure_gfa(a: &Gfa) -> Result<(), CorrespondenceError> {
    let report = check_gfa(a);
    if report.all_passed() {
        Ok(())
    } else {
        Err(CorrespondenceError::GfaInvalid(report.failed().into_iter().map(String::from).collect()))
    }
}

fn double_of(a: &Gfa) -> Result<Arc<QuantumGroupoid>, CorrespondenceError> {
    double_algebra(a.groupoid())
        .map(Arc::new)
        .map_err(|e| CorrespondenceError::Algebra(e.to_string()))
}

/// `ρ(⟨g|x⟩)a^y_h = δ_{h, x⁻¹gx} φ(x)a^y_h` on the GFA carrier, graded by
/// the GFA grading.
pub fn gfa_to_module(a: &Gfa) -> Result<HModule, CorrespondenceError> {
    ensure_gfa(a)?;
    module_over(a, &double_of(a)?)
}

fn module_over(a: &Gfa, h: &Arc<QuantumGroupoid>) -> Result<HModule, CorrespondenceError> {
    let info = h.double_info().expect("double algebra");
    let g = a.groupoid();
    let gr = a.grading();
    let action = info
        .pairs()
        .iter()
        .map(|&(lp, x)| {
            let source = (g.src(x), g.conj(g.inverse(x), lp));
            let cols: Vec<Elem> = (0..a.dim())
                .map(|j| if gr.grades[j] == source { a.phi(x).column(j) } else { Elem::new() })
                .collect();
            LinMap::from_columns(a.carrier(), a.carrier(), &cols)
        })
        .collect();
    Ok(HModule::new(h.clone(), a.carrier().clone(), action)?.with_grading(gr.clone())?)
}

/// `ψ: A → A*`, `ψ(a)(b) = η(a, b)`, with its exact inverse.
#[derive(Clone, Debug, PartialEq)]
pub struct PsiMap {
    pub forward: LinMap,
    pub inverse: LinMap,
}

pub mod psi_law {
    pub const GRADED: &str = "ψ(A^x_g) ⊆ (A^x_g⁻¹)*";
    pub const EQUIVARIANT: &str = "ψ∘ρ(⟨g|x⟩) = ρ(⟨x⁻¹g⁻¹x|x⁻¹⟩)*∘ψ";
    pub const INVERSE: &str = "ψ⁻¹∘ψ = id and ψ∘ψ⁻¹ = id";
}

pub fn psi_map(a: &Gfa) -> Result<PsiMap, CorrespondenceError> {
    let dual = dual_basis(a.carrier());
    let forward = a.eta().transpose().with_bases(a.carrier(), &dual);
    let inverse = inverse(&forward).map_err(|_| CorrespondenceError::PsiNotInvertible)?;
    Ok(PsiMap { forward, inverse })
}

impl PsiMap {
    /// `û_i = ψ⁻¹(u_i*)`.
    pub fn dual_vector(&self, i: usize) -> Elem {
        self.inverse.column(i)
    }

    /// Graded landing, equivariance against the induced module, and
    /// two-sided inverse, on every basis vector.
    pub fn verify(&self, a: &Gfa, module: &HModule) -> AxiomReport {
        let g = a.groupoid();
        let gr = a.grading();
        let l = |i: usize| a.label(i);
        let mut report = AxiomReport::new();
        report.record(
            psi_law::GRADED,
            first_witness(a.dim(), |i| {
                let (x, gi) = gr.grades[i];
                let target = (x, g.inverse(gi));
                self.forward.column(i).keys().any(|&k| gr.grades[k] != target).then(|| vec![l(i)])
            }),
        );
        let h = module.algebra();
        let info = h.double_info().expect("module over a double");
        let dual = self.forward.codomain();
        report.record(
            psi_law::EQUIVARIANT,
            first_witness(info.pairs().len(), |p| {
                let (lp, x) = info.pairs()[p];
                let xi = g.inverse(x);
                let partner = info.index(g.conj(xi, g.inverse(lp)), xi).expect("pair in basis");
                let dual_action = module.action_of_basis(partner).transpose().with_bases(dual, dual);
                let left = self.forward.compose(module.action_of_basis(p));
                let right = dual_action.compose(&self.forward);
                left.first_difference_labels(&right)
                    .map(|(_, col)| vec![h.label(p), col.to_string()])
            }),
        );
        let ok = self.inverse.compose(&self.forward) == LinMap::identity(a.carrier())
            && self.forward.compose(&self.inverse) == LinMap::identity(self.forward.codomain());
        report.record_bool(psi_law::INVERSE, ok);
        report
    }
}

/// `m = ⋆` on `A⊗̂A`, `μ(1^x) = ρ(1^x)1_A`, `ε(a) = Σ_x η(a^x, 1_A)1^x` and
/// `Δ = (ψ⁻¹⊗ψ⁻¹)∘(m^op)*∘ψ`.
pub fn gfa_to_frobenius(a: &Gfa) -> Result<FrobeniusObjectData, CorrespondenceError> {
    ensure_gfa(a)?;
    let h = double_of(a)?;
    let module = module_over(a, &h)?;
    let gr = a.grading();
    let n = a.dim();
    let g = a.groupoid();
    let sq = monoidal_product(&module, &module)?;
    let unit = unit_object(&h)?;
    let pair_of = |k: usize| {
        let (&flat, _) = sq.embedding.column(k).iter().next().expect("coordinate embedding");
        (flat / n, flat % n)
    };
    let sq_carrier = sq.module.carrier();

    let m_cols: Vec<Elem> = (0..sq_carrier.len())
        .map(|k| {
            let (i, j) = pair_of(k);
            a.product(i, j).clone()
        })
        .collect();
    let m = LinMap::from_columns(sq_carrier, a.carrier(), &m_cols);

    let info = h.double_info().expect("double algebra");
    let mu_cols: Vec<Elem> = (0..g.num_objects())
        .map(|x| module.rho(&info.unit_component(x)).apply_coeffs(a.unit()))
        .collect();
    let mu = LinMap::from_columns(unit.module.carrier(), a.carrier(), &mu_cols);

    let eps = LinMap::from_triplets(
        a.carrier(),
        unit.module.carrier(),
        (0..n).map(|i| (gr.object(i), i, a.eta_value(&Elem::unit(i), a.unit()))),
    );

    let psi = psi_map(a)?;
    let dual = psi.forward.codomain().clone();
    let mop_cols: Vec<Elem> = (0..sq_carrier.len())
        .map(|k| {
            let (i, j) = pair_of(k);
            a.product(j, i).clone()
        })
        .collect();
    let mop = LinMap::from_columns(sq_carrier, a.carrier(), &mop_cols);
    let dual_sq = dual_basis(sq_carrier);
    let mop_dual = mop.transpose().with_bases(&dual, &dual_sq);
    let ambient_dual = tensor_basis(&dual, &dual);
    let extend = sq.projection.transpose().with_bases(&dual_sq, &ambient_dual);
    let inv2 = tensor_map(&psi.inverse, &psi.inverse);
    let delta = sq
        .projection
        .compose(&inv2.compose(&extend.compose(&mop_dual.compose(&psi.forward))));

    Ok(FrobeniusObjectData::new(module, m, mu, delta, eps)?)
}

/// Names of the failed prechecks, empty when all five pass.
pub fn failed_prechecks(f: &FrobeniusObjectData) -> Vec<String> {
    let mut failed = Vec::new();
    if !check_algebra_object(f).all_passed() {
        failed.push(precheck::ALGEBRA.to_string());
    }
    if !check_coalgebra_object(f).all_passed() {
        failed.push(precheck::COALGEBRA.to_string());
    }
    if !check_frobenius_object(f).all_passed() {
        failed.push(precheck::FROBENIUS.to_string());
    }
    if !check_condition1(f) {
        failed.push(precheck::CONDITION1.to_string());
    }
    if !check_condition2(f).all_passed() {
        failed.push(precheck::CONDITION2.to_string());
    }
    failed
}

/// `⋆` from `m` within each object, `1_A = μ(1)`, `η(a, b) = ε′(a⋆b)` and
/// `φ` from the groupoid action of the module.
pub fn frobenius_to_gfa(f: &FrobeniusObjectData) -> Result<Gfa, CorrespondenceError> {
    let failed = failed_prechecks(f);
    if !failed.is_empty() {
        return Err(CorrespondenceError::ConditionsNotMet(failed));
    }
    let module = f.module();
    let info = module.algebra().double_info().expect("checked at construction");
    let gr = module.grading().expect("graded at construction").clone();
    let n = module.dim();
    let sq = f.square();

    let product: Vec<Elem> = (0..n * n)
        .map(|ij| {
            let (i, j) = (ij / n, ij % n);
            if gr.object(i) != gr.object(j) {
                return Elem::new();
            }
            let k = *sq.projection.column(ij).keys().next().expect("matched pair in the square");
            f.m().column(k)
        })
        .collect();
    let ones: Elem = (0..f.mu().ncols()).map(|x| (x, Scalar::one())).collect();
    let unit = f.mu().apply_coeffs(&ones);
    let eps_prime: Vec<Scalar> = (0..n).map(|i| f.eps().get(gr.object(i), i)).collect();
    let eta = LinMap::from_triplets(
        module.carrier(),
        module.carrier(),
        (0..n * n).map(|ij| {
            let v: Scalar = product[ij].iter().map(|(k, c)| c * &eps_prime[*k]).sum();
            (ij / n, ij % n, v)
        }),
    );
    let phi = groupoid_action(module)?;
    Ok(Gfa::new(info.groupoid().clone(), module.carrier().clone(), gr, product, unit, eta, phi)?)
}

/// `frobenius_to_gfa(gfa_to_frobenius(A))` against `A`, entry by entry.
pub fn roundtrip_gfa(a: &Gfa) -> Result<EqualityReport, CorrespondenceError> {
    let back = frobenius_to_gfa(&gfa_to_frobenius(a)?)?;
    Ok(compare::compare_gfa(a, &back))
}

/// `gfa_to_frobenius(frobenius_to_gfa(F))` against `F`. Differences in `Δ`
/// are listed as informational; everything else must agree.
pub fn roundtrip_frobenius(f: &FrobeniusObjectData) -> Result<EqualityReport, CorrespondenceError> {
    let back = gfa_to_frobenius(&frobenius_to_gfa(f)?)?;
    Ok(compare::compare_frobenius(f, &back))
}

#[cfg(test)]
mod tests;
