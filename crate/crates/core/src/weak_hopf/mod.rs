//! Quantum groupoids (weak Hopf algebras) given by structure constants.

mod check;
mod construct;
mod format;
mod quasi;

use std::collections::HashMap;
use std::sync::Arc;

pub use check::{check_weak_hopf, classify_hopf, hopf_tests, HopfClass};
pub use construct::{double_algebra, drinfeld_double, groupoid_algebra, DrinfeldDouble};
pub use format::{DoubleJson, QuantumGroupoidJson};
pub use quasi::{check_quasitriangular, counit_target_map, RMatrix};

use crate::exact_linalg::{LabeledBasis, LinMap, Scalar, SparseVec};
use crate::groupoid::{Groupoid, GroupoidError};

/// An element of `H`, keyed by basis index.
pub type Elem = SparseVec<usize>;
/// An element of `H ⊗ H`.
pub type Elem2 = SparseVec<(usize, usize)>;
/// An element of `H ⊗ H ⊗ H`.
pub type Elem3 = SparseVec<(usize, usize, usize)>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeakHopfError {
    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(#[from] GroupoidError),
    #[error("no R-bar solves the defining equations")]
    RbarNotFound,
    #[error(
        "Hopf tests disagree: Δ(1) = 1⊗1 is {unit_grouplike}, ε multiplicative is {counit_multiplicative}"
    )]
    EquivalenceViolated { unit_grouplike: bool, counit_multiplicative: bool },
    #[error("malformed structure constants: {0}")]
    Malformed(String),
}

/// Bookkeeping that identifies an algebra as the double of a groupoid:
/// basis index `i` is the pair `⟨g|x⟩ = pairs[i]`.
#[derive(Clone, Debug)]
pub struct DoubleInfo {
    groupoid: Groupoid,
    pairs: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

impl DoubleInfo {
    pub fn groupoid(&self) -> &Groupoid {
        &self.groupoid
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Basis index of `⟨g|x⟩`.
    pub fn index(&self, g: usize, x: usize) -> Option<usize> {
        self.index.get(&(g, x)).copied()
    }

    /// `1^x = Σ_{g ∈ Γ^x} ⟨g|e_x⟩`.
    pub fn unit_component(&self, x: usize) -> Elem {
        let e = self.groupoid.identity(x);
        self.groupoid
            .loops(x)
            .iter()
            .map(|&g| (self.index(g, e).expect("loop pair in basis"), Scalar::one()))
            .collect()
    }

    /// `R = Σ_x Σ_{a,b ∈ Γ^x} ⟨a|e_x⟩ ⊗ ⟨b|a⟩`.
    pub fn r_element(&self) -> Elem2 {
        let g = &self.groupoid;
        let idx = |lp: usize, x: usize| self.index(lp, x).expect("loop pair in basis");
        let mut r = Elem2::new();
        for obj in 0..g.num_objects() {
            let e = g.identity(obj);
            for &a in g.loops(obj) {
                for &b in g.loops(obj) {
                    r.add_term((idx(a, e), idx(b, a)), &Scalar::one());
                }
            }
        }
        r
    }
}

/// A finite-dimensional algebra and coalgebra with antipode, given by
/// structure constants on a labeled basis.
#[derive(Clone, Debug)]
pub struct QuantumGroupoid {
    basis: LabeledBasis,
    /// `mult[i * n + j] = b_i · b_j`.
    mult: Vec<Elem>,
    unit: Elem,
    comult: Vec<Elem2>,
    counit: Vec<Scalar>,
    /// `antipode[i] = S(b_i)`.
    antipode: Vec<Elem>,
    double: Option<Arc<DoubleInfo>>,
}

impl PartialEq for QuantumGroupoid {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

impl QuantumGroupoid {
    pub fn new(
        basis: LabeledBasis,
        mult: Vec<Elem>,
        unit: Elem,
        comult: Vec<Elem2>,
        counit: Vec<Scalar>,
        antipode: Vec<Elem>,
    ) -> Result<Self, WeakHopfError> {
        let n = basis.len();
        let bad = |m: &str| Err(WeakHopfError::Malformed(m.to_string()));
        if mult.len() != n * n {
            return bad("product table must cover every basis pair");
        }
        if comult.len() != n || counit.len() != n || antipode.len() != n {
            return bad("coproduct, counit and antipode need one entry per basis element");
        }
        let in_range = |e: &Elem| e.keys().all(|&k| k < n);
        if !mult.iter().all(in_range) || !in_range(&unit) || !antipode.iter().all(in_range) {
            return bad("basis index out of range");
        }
        if !comult.iter().all(|d| d.keys().all(|&(a, b)| a < n && b < n)) {
            return bad("basis index out of range in coproduct");
        }
        Ok(QuantumGroupoid { basis, mult, unit, comult, counit, antipode, double: None })
    }

    pub(crate) fn with_double(mut self, info: DoubleInfo) -> Self {
        self.double = Some(Arc::new(info));
        self
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &LabeledBasis {
        &self.basis
    }

    pub fn double_info(&self) -> Option<&DoubleInfo> {
        self.double.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        self.basis.label(i).to_string()
    }

    pub fn unit(&self) -> &Elem {
        &self.unit
    }

    pub fn product(&self, i: usize, j: usize) -> &Elem {
        &self.mult[i * self.dim() + j]
    }

    pub fn coproduct(&self, i: usize) -> &Elem2 {
        &self.comult[i]
    }

    pub fn counit_value(&self, i: usize) -> &Scalar {
        &self.counit[i]
    }

    pub fn counit_vector(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode_of_basis(&self, i: usize) -> &Elem {
        &self.antipode[i]
    }

    pub fn antipode_map(&self) -> LinMap {
        LinMap::from_columns(&self.basis, &self.basis, &self.antipode)
    }

    pub fn basis_elem(&self, i: usize) -> Elem {
        SparseVec::unit(i)
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let mut out = Elem::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                out.add_scaled(self.product(*i, *j), &(x * y));
            }
        }
        out
    }

    pub fn mul2(&self, a: &Elem2, b: &Elem2) -> Elem2 {
        let mut out = Elem2::new();
        for ((i1, i2), x) in a.iter() {
            for ((j1, j2), y) in b.iter() {
                let c = x * y;
                for (k1, u) in self.product(*i1, *j1).iter() {
                    let cu = &c * u;
                    for (k2, v) in self.product(*i2, *j2).iter() {
                        out.add_term((*k1, *k2), &(&cu * v));
                    }
                }
            }
        }
        out
    }

    pub fn mul3(&self, a: &Elem3, b: &Elem3) -> Elem3 {
        let mut out = Elem3::new();
        for ((i1, i2, i3), x) in a.iter() {
            for ((j1, j2, j3), y) in b.iter() {
                let c = x * y;
                for (k1, u) in self.product(*i1, *j1).iter() {
                    let cu = &c * u;
                    for (k2, v) in self.product(*i2, *j2).iter() {
                        let cuv = &cu * v;
                        for (k3, w) in self.product(*i3, *j3).iter() {
                            out.add_term((*k1, *k2, *k3), &(&cuv * w));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn delta(&self, a: &Elem) -> Elem2 {
        let mut out = Elem2::new();
        for (i, c) in a.iter() {
            out.add_scaled(self.coproduct(*i), c);
        }
        out
    }

    pub fn delta_op(&self, a: &Elem) -> Elem2 {
        self.delta(a).map_keys(|&(x, y)| (y, x))
    }

    pub fn counit(&self, a: &Elem) -> Scalar {
        a.iter().map(|(i, c)| c * &self.counit[*i]).sum()
    }

    pub fn antipode(&self, a: &Elem) -> Elem {
        let mut out = Elem::new();
        for (i, c) in a.iter() {
            out.add_scaled(&self.antipode[*i], c);
        }
        out
    }

    /// `(Δ ⊗ id)(t)`.
    pub fn delta_left(&self, t: &Elem2) -> Elem3 {
        let mut out = Elem3::new();
        for ((a, b), c) in t.iter() {
            for ((x, y), d) in self.coproduct(*a).iter() {
                out.add_term((*x, *y, *b), &(c * d));
            }
        }
        out
    }

    /// `(id ⊗ Δ)(t)`.
    pub fn delta_right(&self, t: &Elem2) -> Elem3 {
        let mut out = Elem3::new();
        for ((a, b), c) in t.iter() {
            for ((x, y), d) in self.coproduct(*b).iter() {
                out.add_term((*a, *x, *y), &(c * d));
            }
        }
        out
    }

    pub fn tensor(&self, a: &Elem, b: &Elem) -> Elem2 {
        let mut out = Elem2::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                out.add_term((*i, *j), &(x * y));
            }
        }
        out
    }

    /// `Σ a ⊗ b ⊗ c` laid out by `place`, which positions the two tensor
    /// legs of `t` and the extra factor `e`.
    pub fn embed3(
        &self,
        t: &Elem2,
        e: &Elem,
        place: impl Fn(usize, usize, usize) -> (usize, usize, usize),
    ) -> Elem3 {
        let mut out = Elem3::new();
        for ((a, b), x) in t.iter() {
            for (u, y) in e.iter() {
                out.add_term(place(*a, *b, *u), &(x * y));
            }
        }
        out
    }

    /// Label list for a basis tuple, for witnesses.
    pub fn labels(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.label(i)).collect()
    }

    /// Replaces one structure constant of the product (mutation hook).
    pub fn with_product(&self, i: usize, j: usize, value: Elem) -> Self {
        let mut out = self.clone();
        let n = out.dim();
        out.mult[i * n + j] = value;
        out
    }

    /// Replaces one coproduct value (mutation hook).
    pub fn with_coproduct(&self, i: usize, value: Elem2) -> Self {
        let mut out = self.clone();
        out.comult[i] = value;
        out
    }

    /// Replaces one antipode value (mutation hook).
    pub fn with_antipode(&self, i: usize, value: Elem) -> Self {
        let mut out = self.clone();
        out.antipode[i] = value;
        out
    }
}

#[cfg(test)]
mod tests;
