use super::{Elem, Elem2, Elem3, QuantumGroupoid};
use crate::exact_linalg::{LinMap, Scalar};
use crate::report::{first_witness, AxiomReport};

pub const INTERTWINER: &str = "Δ^op(h)·R = R·Δ(h)";
pub const ID_DELTA: &str = "(id⊗Δ)(R) = R13·R12";
pub const DELTA_ID: &str = "(Δ⊗id)(R) = R13·R23";
pub const R_RBAR: &str = "R·R̄ = Δ^op(1)";
pub const RBAR_R: &str = "R̄·R = Δ(1)";
pub const R_MEMBERSHIP: &str = "R ∈ Δ^op(1)(H⊗H)Δ(1)";
pub const RBAR_MEMBERSHIP: &str = "R̄ ∈ Δ(1)(H⊗H)Δ^op(1)";

/// An R-matrix and its weak inverse, as elements of `H ⊗ H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    pub r: Elem2,
    pub rbar: Elem2,
}

fn pair_witness(h: &QuantumGroupoid, key: Option<(usize, usize)>) -> Option<Vec<String>> {
    key.map(|(a, b)| h.labels(&[a, b]))
}

fn triple_witness(h: &QuantumGroupoid, key: Option<(usize, usize, usize)>) -> Option<Vec<String>> {
    key.map(|(a, b, c)| h.labels(&[a, b, c]))
}

/// Checks the quasitriangularity equations for every basis element plus the
/// membership conditions on `R` and `R̄`. Witnesses name the basis element
/// (for the intertwining law) or the first differing tensor coordinate.
pub fn check_quasitriangular(h: &QuantumGroupoid, rm: &RMatrix) -> AxiomReport {
    let r = &rm.r;
    let rbar = &rm.rbar;
    let one = h.unit();
    let d1 = h.delta(one);
    let d1op = h.delta_op(one);
    let mut report = AxiomReport::new();

    report.record(
        INTERTWINER,
        first_witness(h.dim(), |i| {
            let b = h.basis_elem(i);
            let left = h.mul2(&h.delta_op(&b), r);
            let right = h.mul2(r, &h.delta(&b));
            (left != right).then(|| h.labels(&[i]))
        }),
    );

    let r12 = h.embed3(r, one, |a, b, u| (a, b, u));
    let r23 = h.embed3(r, one, |a, b, u| (u, a, b));
    let r13 = h.embed3(r, one, |a, b, u| (a, u, b));
    let lhs: Elem3 = h.delta_right(r);
    report.record(ID_DELTA, triple_witness(h, lhs.first_difference(&h.mul3(&r13, &r12))));
    let lhs: Elem3 = h.delta_left(r);
    report.record(DELTA_ID, triple_witness(h, lhs.first_difference(&h.mul3(&r13, &r23))));

    report.record(R_RBAR, pair_witness(h, h.mul2(r, rbar).first_difference(&d1op)));
    report.record(RBAR_R, pair_witness(h, h.mul2(rbar, r).first_difference(&d1)));
    report.record(
        R_MEMBERSHIP,
        pair_witness(h, h.mul2(&h.mul2(&d1op, r), &d1).first_difference(r)),
    );
    report.record(
        RBAR_MEMBERSHIP,
        pair_witness(h, h.mul2(&h.mul2(&d1, rbar), &d1op).first_difference(rbar)),
    );
    report
}

/// `ε_t(h) = ε(1₁·h)1₂` as an endomorphism of `H`.
pub fn counit_target_map(h: &QuantumGroupoid) -> LinMap {
    let d1 = h.delta(h.unit());
    let columns: Vec<Elem> = (0..h.dim())
        .map(|i| {
            let b = h.basis_elem(i);
            let mut out = Elem::new();
            for ((a, c), k) in d1.iter() {
                let e: Scalar = h.counit(&h.mul(&h.basis_elem(*a), &b));
                out.add_term(*c, &(k * e));
            }
            out
        })
        .collect();
    LinMap::from_columns(h.basis(), h.basis(), &columns)
}
