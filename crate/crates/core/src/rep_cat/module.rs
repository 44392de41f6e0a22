use std::sync::Arc;

use super::RepError;
use crate::exact_linalg::{LabeledBasis, LinMap};
use crate::report::{first_witness, AxiomReport};
use crate::weak_hopf::{Elem, QuantumGroupoid};

pub const RHO_UNIT: &str = "ρ(1) = id";
pub const RHO_MULTIPLICATIVE: &str = "ρ(a)ρ(b) = ρ(ab)";

/// `(object, isotropy element)` for every carrier basis vector of a module
/// over a double, both as groupoid indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bigrading {
    pub grades: Vec<(usize, usize)>,
}

impl Bigrading {
    pub fn object(&self, i: usize) -> usize {
        self.grades[i].0
    }

    pub fn grade(&self, i: usize) -> usize {
        self.grades[i].1
    }

    /// Carrier indices with object grade `x`.
    pub fn component(&self, x: usize) -> Vec<usize> {
        (0..self.grades.len()).filter(|&i| self.grades[i].0 == x).collect()
    }

    /// Carrier indices graded `(x, g)`.
    pub fn homogeneous(&self, x: usize, g: usize) -> Vec<usize> {
        (0..self.grades.len()).filter(|&i| self.grades[i] == (x, g)).collect()
    }
}

/// A finite-dimensional left module: one action matrix per algebra basis
/// element.
#[derive(Clone, Debug)]
pub struct HModule {
    algebra: Arc<QuantumGroupoid>,
    carrier: LabeledBasis,
    action: Vec<LinMap>,
    grading: Option<Bigrading>,
}

impl PartialEq for HModule {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra)
            && self.carrier == other.carrier
            && self.action == other.action
            && self.grading == other.grading
    }
}

impl HModule {
    pub fn new(
        algebra: Arc<QuantumGroupoid>,
        carrier: LabeledBasis,
        action: Vec<LinMap>,
    ) -> Result<Self, RepError> {
        if action.len() != algebra.dim() {
            return Err(RepError::Malformed(format!(
                "expected {} action matrices, found {}",
                algebra.dim(),
                action.len()
            )));
        }
        for (i, m) in action.iter().enumerate() {
            if !m.domain().same_as(&carrier) || !m.codomain().same_as(&carrier) {
                return Err(RepError::Malformed(format!(
                    "action of {} is not an endomorphism of the carrier",
                    algebra.label(i)
                )));
            }
        }
        Ok(HModule { algebra, carrier, action, grading: None })
    }

    /// Attaches a grading after checking it against the idempotents
    /// `ρ(⟨g|e_x⟩)`.
    pub fn with_grading(mut self, grading: Bigrading) -> Result<Self, RepError> {
        let info = self.algebra.double_info().ok_or(RepError::NotADouble)?;
        if grading.grades.len() != self.dim() {
            return Err(RepError::GradingMismatch("one grade per carrier vector".into()));
        }
        let g = info.groupoid();
        for (i, &(x, lp)) in grading.grades.iter().enumerate() {
            if x >= g.num_objects() || !g.loops(x).contains(&lp) {
                return Err(RepError::GradingMismatch(format!(
                    "{} is not graded by an isotropy element",
                    self.carrier.label(i)
                )));
            }
        }
        for y in 0..g.num_objects() {
            let e = g.identity(y);
            for &h in g.loops(y) {
                let p = &self.action[info.index(h, e).expect("loop pair")];
                for i in 0..self.dim() {
                    let col = p.column(i);
                    let expected = if grading.grades[i] == (y, h) {
                        Elem::unit(i)
                    } else {
                        Elem::new()
                    };
                    if col != expected {
                        return Err(RepError::GradingMismatch(format!(
                            "{} is not homogeneous of grade ({}, {})",
                            self.carrier.label(i),
                            g.object_id(grading.grades[i].0),
                            g.morphism_id(grading.grades[i].1)
                        )));
                    }
                }
            }
        }
        self.grading = Some(grading);
        Ok(self)
    }

    pub(crate) fn with_grading_unchecked(mut self, grading: Bigrading) -> Self {
        self.grading = Some(grading);
        self
    }

    pub fn algebra(&self) -> &Arc<QuantumGroupoid> {
        &self.algebra
    }

    pub fn carrier(&self) -> &LabeledBasis {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.len()
    }

    pub fn grading(&self) -> Option<&Bigrading> {
        self.grading.as_ref()
    }

    pub fn action_of_basis(&self, i: usize) -> &LinMap {
        &self.action[i]
    }

    pub fn actions(&self) -> &[LinMap] {
        &self.action
    }

    /// `ρ(a)` for an arbitrary algebra element.
    pub fn rho(&self, a: &Elem) -> LinMap {
        let mut out = LinMap::zero(&self.carrier, &self.carrier);
        for (i, c) in a.iter() {
            out = out.lin_comb(&self.action[*i], c);
        }
        out
    }

    pub fn same_algebra(&self, other: &HModule) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra
    }

    /// Replaces one action matrix (mutation hook).
    pub fn with_action(&self, i: usize, m: LinMap) -> Self {
        let mut out = self.clone();
        out.action[i] = m;
        out
    }
}

/// `H` acting on itself by left multiplication.
pub fn regular_module(h: &Arc<QuantumGroupoid>) -> HModule {
    let basis = h.basis().clone();
    let action = (0..h.dim())
        .map(|i| {
            let cols: Vec<Elem> = (0..h.dim()).map(|j| h.product(i, j).clone()).collect();
            LinMap::from_columns(&basis, &basis, &cols)
        })
        .collect();
    HModule::new(h.clone(), basis, action).expect("regular action is well shaped")
}

/// The zero-dimensional module.
pub fn zero_module(h: &Arc<QuantumGroupoid>) -> HModule {
    let basis = LabeledBasis::empty();
    let action = (0..h.dim()).map(|_| LinMap::zero(&basis, &basis)).collect();
    let m = HModule::new(h.clone(), basis, action).expect("empty action");
    if h.double_info().is_some() {
        m.with_grading_unchecked(Bigrading { grades: Vec::new() })
    } else {
        m
    }
}

/// Checks `ρ(1) = id` and `ρ(b_i)ρ(b_j) = ρ(b_i b_j)` on all basis pairs.
pub fn check_module(m: &HModule) -> AxiomReport {
    let h = m.algebra();
    let n = h.dim();
    let mut report = AxiomReport::new();
    let id = LinMap::identity(m.carrier());
    report.record(RHO_UNIT, (m.rho(h.unit()) != id).then(|| vec!["1".to_string()]));
    report.record(
        RHO_MULTIPLICATIVE,
        first_witness(n * n, |ij| {
            let (i, j) = (ij / n, ij % n);
            let left = m.action_of_basis(i).compose(m.action_of_basis(j));
            (left != m.rho(h.product(i, j))).then(|| h.labels(&[i, j]))
        }),
    );
    report
}

/// First algebra basis element `b` with `f∘ρ_src(b) ≠ ρ_dst(b)∘f`.
pub fn h_linearity_witness(f: &LinMap, src: &HModule, dst: &HModule) -> Option<Vec<String>> {
    let h = src.algebra();
    first_witness(h.dim(), |i| {
        let left = f.compose(src.action_of_basis(i));
        let right = dst.action_of_basis(i).compose(f);
        (left != right).then(|| vec![h.label(i)])
    })
}
