use super::check::COPRODUCT_MULTIPLICATIVE;
use super::quasi::INTERTWINER;
use super::*;
use crate::exact_linalg::{Label, Scalar};
use crate::fixtures::{all_fixtures, fixture};
use crate::report::AxiomReport;

fn idx(h: &QuantumGroupoid, label: &str) -> usize {
    h.basis().index_of(&Label::atom(label)).unwrap_or_else(|| panic!("no basis label {label}"))
}

fn assert_all_pass(name: &str, report: &AxiomReport) {
    assert!(report.all_passed(), "{name}:\n{report}");
}

#[test]
fn trivial_algebra_is_one_dimensional_hopf() {
    let h = groupoid_algebra(&fixture("trivial").unwrap()).unwrap();
    assert_eq!(h.dim(), 1);
    assert_eq!(h.unit(), &Elem::unit(0));
    assert_eq!(h.coproduct(0), &Elem2::unit((0, 0)));
    assert_all_pass("trivial", &check_weak_hopf(&h));
    assert_eq!(classify_hopf(&h), Ok(HopfClass::Hopf));
}

#[test]
fn pair2_groupoid_algebra_products() {
    let h = groupoid_algebra(&fixture("pair2").unwrap()).unwrap();
    assert_all_pass("pair2", &check_weak_hopf(&h));
    // a = 1<-0, a⁻¹ = 0<-1
    let a = idx(&h, "1<-0");
    let ai = idx(&h, "0<-1");
    let e1 = idx(&h, "1<-1");
    assert_eq!(h.product(a, ai), &Elem::unit(e1));
    assert!(h.product(a, a).is_zero());
    assert_eq!(classify_hopf(&h), Ok(HopfClass::StrictlyWeak));
}

#[test]
fn z2_group_algebra_is_hopf() {
    let h = groupoid_algebra(&fixture("z2").unwrap()).unwrap();
    assert_eq!(h.unit(), &Elem::unit(idx(&h, "e")));
    assert_eq!(classify_hopf(&h), Ok(HopfClass::Hopf));
}

#[test]
fn mutated_product_breaks_coproduct_multiplicativity() {
    let h = groupoid_algebra(&fixture("z2").unwrap()).unwrap();
    let g = idx(&h, "g");
    let e = idx(&h, "e");
    // g·g = 2e instead of e
    let bad = h.with_product(g, g, Elem::unit(e).scaled(&Scalar::from_int(2)));
    let report = check_weak_hopf(&bad);
    let line = report.line(COPRODUCT_MULTIPLICATIVE).unwrap();
    assert!(!line.passed);
    assert!(line.witness.is_some());
}

#[test]
fn z2_double_products() {
    let d = drinfeld_double(&fixture("z2").unwrap()).unwrap();
    let h = &d.algebra;
    assert_eq!(h.dim(), 4);
    let ge = idx(h, "<g|e>");
    let gg = idx(h, "<g|g>");
    let eg = idx(h, "<e|g>");
    assert_eq!(h.product(ge, gg), &Elem::unit(gg));
    assert!(h.product(ge, eg).is_zero());
    assert_eq!(d.rbar_nullity, 0);
}

#[test]
fn z4_action_double_dimension() {
    let d = drinfeld_double(&fixture("z4-on-2").unwrap()).unwrap();
    assert_eq!(d.algebra.dim(), 16);
}

#[test]
fn every_fixture_is_a_quantum_groupoid() {
    for (name, g) in all_fixtures() {
        let k = groupoid_algebra(&g).unwrap();
        assert_all_pass(name, &check_weak_hopf(&k));
        let d = drinfeld_double(&g).unwrap();
        assert_all_pass(name, &check_weak_hopf(&d.algebra));
        assert_all_pass(name, &check_quasitriangular(&d.algebra, &d.r_matrix));
        let expected = if g.num_objects() == 1 { HopfClass::Hopf } else { HopfClass::StrictlyWeak };
        assert_eq!(classify_hopf(&d.algebra), Ok(expected), "{name}");
    }
}

#[test]
fn perturbed_r_fails_intertwining() {
    // D(k[Z/2]) is commutative and cocommutative, so every R intertwines
    // there; S3 is the smallest fixture where a perturbation is visible.
    let d = drinfeld_double(&fixture("s3").unwrap()).unwrap();
    let mut rm = d.r_matrix.clone();
    let (&key, _) = rm.r.iter().nth(1).unwrap();
    rm.r.add_term(key, &Scalar::one());
    let report = check_quasitriangular(&d.algebra, &rm);
    let line = report.line(INTERTWINER).unwrap();
    assert!(!line.passed);
    assert_eq!(line.witness.as_ref().unwrap().len(), 1);
}

#[test]
fn counit_target_map_cases() {
    let hopf = groupoid_algebra(&fixture("z2").unwrap()).unwrap();
    let et = counit_target_map(&hopf);
    assert_eq!(crate::exact_linalg::rank(&et), 1);

    let d = drinfeld_double(&fixture("pair2").unwrap()).unwrap();
    let et = counit_target_map(&d.algebra);
    assert_eq!(crate::exact_linalg::rank(&et), 2);
    let info = d.algebra.double_info().unwrap();
    for x in 0..2 {
        let one_x = info.unit_component(x);
        assert_eq!(et.apply_coeffs(&one_x), one_x);
    }
    for (name, g) in all_fixtures() {
        let d = drinfeld_double(&g).unwrap();
        let et = counit_target_map(&d.algebra);
        assert_eq!(et.compose(&et), et, "{name}");
    }
}

#[test]
fn unit_components_are_orthogonal_grouplike_idempotents() {
    for (name, g) in all_fixtures() {
        let d = drinfeld_double(&g).unwrap();
        let h = &d.algebra;
        let info = h.double_info().unwrap();
        for x in 0..g.num_objects() {
            let ux = info.unit_component(x);
            assert_eq!(h.delta(&ux), h.tensor(&ux, &ux), "{name}");
            for y in 0..g.num_objects() {
                let uy = info.unit_component(y);
                let expected = if x == y { ux.clone() } else { Elem::new() };
                assert_eq!(h.mul(&ux, &uy), expected, "{name}");
            }
        }
    }
}

#[test]
fn json_roundtrip_preserves_structure() {
    let d = drinfeld_double(&fixture("pair2").unwrap()).unwrap();
    let text = serde_json::to_string(&d.algebra).unwrap();
    let back: QuantumGroupoid = serde_json::from_str(&text).unwrap();
    assert_eq!(back, d.algebra);
    let dj = DoubleJson::from(&d);
    let (h, r) = dj.decode().unwrap();
    assert_eq!(h, d.algebra);
    assert_eq!(r, d.r_matrix);
}
