use serde::Serialize;

use crate::exact_linalg::{LabeledBasis, LinMap};
use crate::frobenius::FrobeniusObjectData;
use crate::gfa::Gfa;
use crate::weak_hopf::Elem;

/// One differing entry, with both sides printed exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub component: String,
    pub entry: String,
    pub expected: String,
    pub found: String,
}

/// Entry-by-entry comparison of a structure with its round trip.
/// `informational` holds differences that do not count as failures.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EqualityReport {
    pub mismatches: Vec<Mismatch>,
    pub informational: Vec<Mismatch>,
}

impl EqualityReport {
    pub fn is_equal(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn push(out: &mut Vec<Mismatch>, component: &str, entry: String, expected: String, found: String) {
    out.push(Mismatch { component: component.to_string(), entry, expected, found });
}

fn compare_maps(out: &mut Vec<Mismatch>, component: &str, expected: &LinMap, found: &LinMap) {
    if expected.domain() != found.domain() || expected.codomain() != found.codomain() {
        push(out, component, "shape".into(), shape(expected), shape(found));
        return;
    }
    for i in 0..expected.nrows() {
        for j in 0..expected.ncols() {
            let (e, f) = (expected.get(i, j), found.get(i, j));
            if e != f {
                let entry = format!("({},{})", expected.codomain().label(i), expected.domain().label(j));
                push(out, component, entry, e.to_string(), f.to_string());
            }
        }
    }
}

fn shape(f: &LinMap) -> String {
    format!("{:?} -> {:?}", f.domain().labels(), f.codomain().labels())
}

fn compare_elems(out: &mut Vec<Mismatch>, component: &str, entry: &str, basis: &LabeledBasis, expected: &Elem, found: &Elem) {
    if let Some(k) = expected.first_difference(found) {
        push(out, component, format!("{entry}[{}]", basis.label(k)), expected.coeff(&k).to_string(), found.coeff(&k).to_string());
    }
}

pub(super) fn compare_gfa(a: &Gfa, b: &Gfa) -> EqualityReport {
    let mut m = Vec::new();
    if a.groupoid() != b.groupoid() {
        push(&mut m, "groupoid", "-".into(), "original".into(), "different".into());
    }
    if a.carrier() != b.carrier() {
        push(&mut m, "carrier", "-".into(), format!("{:?}", a.carrier().labels()), format!("{:?}", b.carrier().labels()));
        return EqualityReport { mismatches: m, informational: vec![] };
    }
    if a.grading() != b.grading() {
        push(&mut m, "grading", "-".into(), format!("{:?}", a.grading().grades), format!("{:?}", b.grading().grades));
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let entry = format!("{}⋆{}", a.label(i), a.label(j));
            compare_elems(&mut m, "product", &entry, a.carrier(), a.product(i, j), b.product(i, j));
        }
    }
    compare_elems(&mut m, "unit", "1_A", a.carrier(), a.unit(), b.unit());
    compare_maps(&mut m, "eta", a.eta(), b.eta());
    for x in 0..a.groupoid().num_morphisms().min(b.groupoid().num_morphisms()) {
        compare_maps(&mut m, &format!("phi({})", a.groupoid().morphism_id(x)), a.phi(x), b.phi(x));
    }
    EqualityReport { mismatches: m, informational: vec![] }
}

pub(super) fn compare_frobenius(f: &FrobeniusObjectData, g: &FrobeniusObjectData) -> EqualityReport {
    let mut m = Vec::new();
    let mut info = Vec::new();
    let (a, b) = (f.module(), g.module());
    if !a.same_algebra(b) {
        push(&mut m, "algebra", "-".into(), "original".into(), "different".into());
    }
    if a.carrier() != b.carrier() {
        push(&mut m, "carrier", "-".into(), format!("{:?}", a.carrier().labels()), format!("{:?}", b.carrier().labels()));
        return EqualityReport { mismatches: m, informational: info };
    }
    if a.grading() != b.grading() {
        push(&mut m, "grading", "-".into(), format!("{:?}", a.grading()), format!("{:?}", b.grading()));
    }
    for (p, (x, y)) in a.actions().iter().zip(b.actions()).enumerate() {
        compare_maps(&mut m, &format!("rho({})", a.algebra().label(p)), x, y);
    }
    compare_maps(&mut m, "m", f.m(), g.m());
    compare_maps(&mut m, "mu", f.mu(), g.mu());
    compare_maps(&mut m, "eps", f.eps(), g.eps());
    compare_maps(&mut info, "delta", f.delta(), g.delta());
    EqualityReport { mismatches: m, informational: info }
}
