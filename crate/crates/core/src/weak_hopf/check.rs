use serde::{Deserialize, Serialize};

use super::{Elem, Elem3, QuantumGroupoid, WeakHopfError};
use crate::exact_linalg::Scalar;
use crate::report::{first_witness, AxiomReport};

pub const ASSOCIATIVITY: &str = "associativity";
pub const UNIT: &str = "unit";
pub const COASSOCIATIVITY: &str = "coassociativity";
pub const COUNIT: &str = "counit";
pub const COPRODUCT_MULTIPLICATIVE: &str = "multiplicativity of the coproduct";
pub const WEAK_COUNIT_1: &str = "weak multiplicativity of the counit (y1, y2)";
pub const WEAK_COUNIT_2: &str = "weak multiplicativity of the counit (y2, y1)";
pub const WEAK_UNIT_1: &str = "weak comultiplicativity of the unit (Δ(1)⊗1)(1⊗Δ(1))";
pub const WEAK_UNIT_2: &str = "weak comultiplicativity of the unit (1⊗Δ(1))(Δ(1)⊗1)";
pub const ANTIPODE_A: &str = "antipode x1·S(x2) = ε(1₁·x)1₂";
pub const ANTIPODE_B: &str = "antipode S(x1)·x2 = 1₁ε(x·1₂)";
pub const ANTIPODE_C: &str = "antipode S(x1)·x2·S(x3) = S(x)";

/// Evaluates every quantum groupoid axiom on all basis tuples.
pub fn check_weak_hopf(h: &QuantumGroupoid) -> AxiomReport {
    let n = h.dim();
    let mut report = AxiomReport::new();
    let one = h.unit().clone();
    let delta_one = h.delta(&one);

    report.record(
        ASSOCIATIVITY,
        first_witness(n * n, |ij| {
            let (i, j) = (ij / n, ij % n);
            let bij = h.product(i, j);
            (0..n).find_map(|k| {
                let left = h.mul(bij, &h.basis_elem(k));
                let right = h.mul(&h.basis_elem(i), h.product(j, k));
                (left != right).then(|| h.labels(&[i, j, k]))
            })
        }),
    );
    report.record(
        UNIT,
        first_witness(n, |i| {
            let b = h.basis_elem(i);
            (h.mul(&one, &b) != b || h.mul(&b, &one) != b).then(|| h.labels(&[i]))
        }),
    );
    report.record(
        COASSOCIATIVITY,
        first_witness(n, |i| {
            let d = h.coproduct(i);
            (h.delta_left(d) != h.delta_right(d)).then(|| h.labels(&[i]))
        }),
    );
    report.record(
        COUNIT,
        first_witness(n, |i| {
            let d = h.coproduct(i);
            let mut left = Elem::new();
            let mut right = Elem::new();
            for ((a, b), c) in d.iter() {
                left.add_term(*b, &(c * h.counit_value(*a)));
                right.add_term(*a, &(c * h.counit_value(*b)));
            }
            let b = h.basis_elem(i);
            (left != b || right != b).then(|| h.labels(&[i]))
        }),
    );
    report.record(
        COPRODUCT_MULTIPLICATIVE,
        first_witness(n * n, |ij| {
            let (i, j) = (ij / n, ij % n);
            let left = h.delta(h.product(i, j));
            let right = h.mul2(h.coproduct(i), h.coproduct(j));
            (left != right).then(|| h.labels(&[i, j]))
        }),
    );

    // ε(b_i b_j), reused by both weak counit laws.
    let eps_prod: Vec<Scalar> = (0..n * n).map(|ij| h.counit(h.product(ij / n, ij % n))).collect();
    let eps_of = |x: usize, y: usize| &eps_prod[x * n + y];
    let eps_elem_times = |a: &Elem, z: usize| -> Scalar {
        a.iter().map(|(k, c)| c * eps_of(*k, z)).sum()
    };
    for (name, swapped) in [(WEAK_COUNIT_1, false), (WEAK_COUNIT_2, true)] {
        report.record(
            name,
            first_witness(n * n, |xy| {
                let (x, y) = (xy / n, xy % n);
                let xy_elem = h.product(x, y);
                (0..n).find_map(|z| {
                    let left = eps_elem_times(xy_elem, z);
                    let right: Scalar = h
                        .coproduct(y)
                        .iter()
                        .map(|((a, b), c)| {
                            let (first, second) = if swapped { (b, a) } else { (a, b) };
                            c * eps_of(x, *first) * eps_of(*second, z)
                        })
                        .sum();
                    (left != right).then(|| h.labels(&[x, y, z]))
                })
            }),
        );
    }

    let lhs = h.delta_left(&delta_one);
    let d1_then_1 = h.embed3(&delta_one, &one, |a, b, u| (a, b, u));
    let one_then_d1 = h.embed3(&delta_one, &one, |a, b, u| (u, a, b));
    let witness = |ok: bool| (!ok).then(|| vec!["1".to_string()]);
    report.record(WEAK_UNIT_1, witness(lhs == h.mul3(&d1_then_1, &one_then_d1)));
    report.record(WEAK_UNIT_2, witness(lhs == h.mul3(&one_then_d1, &d1_then_1)));

    report.record(
        ANTIPODE_A,
        first_witness(n, |i| {
            let x = h.basis_elem(i);
            let mut left = Elem::new();
            for ((a, b), c) in h.coproduct(i).iter() {
                left.add_scaled(&h.mul(&h.basis_elem(*a), h.antipode_of_basis(*b)), c);
            }
            let mut right = Elem::new();
            for ((a, b), c) in delta_one.iter() {
                let e = h.counit(&h.mul(&h.basis_elem(*a), &x));
                right.add_term(*b, &(c * e));
            }
            (left != right).then(|| h.labels(&[i]))
        }),
    );
    report.record(
        ANTIPODE_B,
        first_witness(n, |i| {
            let x = h.basis_elem(i);
            let mut left = Elem::new();
            for ((a, b), c) in h.coproduct(i).iter() {
                left.add_scaled(&h.mul(h.antipode_of_basis(*a), &h.basis_elem(*b)), c);
            }
            let mut right = Elem::new();
            for ((a, b), c) in delta_one.iter() {
                let e = h.counit(&h.mul(&x, &h.basis_elem(*b)));
                right.add_term(*a, &(c * e));
            }
            (left != right).then(|| h.labels(&[i]))
        }),
    );
    report.record(
        ANTIPODE_C,
        first_witness(n, |i| {
            let d2: Elem3 = h.delta_left(h.coproduct(i));
            let mut left = Elem::new();
            for ((a, b, c), k) in d2.iter() {
                let t = h.mul(h.antipode_of_basis(*a), &h.basis_elem(*b));
                left.add_scaled(&h.mul(&t, h.antipode_of_basis(*c)), k);
            }
            (&left != h.antipode_of_basis(i)).then(|| h.labels(&[i]))
        }),
    );
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HopfClass {
    Hopf,
    StrictlyWeak,
}

/// `(Δ(1) = 1⊗1, ε multiplicative on all basis pairs)`.
pub fn hopf_tests(h: &QuantumGroupoid) -> (bool, bool) {
    let one = h.unit();
    let grouplike = h.delta(one) == h.tensor(one, one);
    let n = h.dim();
    let multiplicative = first_witness(n * n, |ij| {
        let (i, j) = (ij / n, ij % n);
        let lhs = h.counit(h.product(i, j));
        (lhs != h.counit_value(i) * h.counit_value(j)).then(Vec::new)
    })
    .is_none();
    (grouplike, multiplicative)
}

/// Hopf exactly when `Δ(1) = 1⊗1`; the multiplicativity of `ε` must agree.
pub fn classify_hopf(h: &QuantumGroupoid) -> Result<HopfClass, WeakHopfError> {
    match hopf_tests(h) {
        (true, true) => Ok(HopfClass::Hopf),
        (false, false) => Ok(HopfClass::StrictlyWeak),
        (unit_grouplike, counit_multiplicative) => {
            Err(WeakHopfError::EquivalenceViolated { unit_grouplike, counit_multiplicative })
        }
    }
}
