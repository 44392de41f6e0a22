use super::*;
use crate::exact_linalg::{Label, Scalar};
use crate::fixtures::{all_fixtures, fixture};

fn z2() -> Gfa {
    groupoid_ring_gfa(&fixture("z2").unwrap()).unwrap()
}

fn idx(a: &Gfa, label: &str) -> usize {
    a.carrier().index_of(&Label::atom(label)).unwrap()
}

#[test]
fn groupoid_ring_fixtures_pass() {
    for (name, g) in all_fixtures() {
        let a = groupoid_ring_gfa(&g).unwrap();
        let report = check_gfa(&a);
        assert!(report.all_passed(), "{name}:\n{report}");
        assert_eq!(report.lines.len(), axiom::ALL.len());
    }
}

#[test]
fn small_eta_matrices() {
    let t = groupoid_ring_gfa(&fixture("trivial").unwrap()).unwrap();
    assert_eq!(t.dim(), 1);
    assert_eq!(t.eta().to_dense(), vec![vec![Scalar::one()]]);

    let a = z2();
    let (e, g) = (idx(&a, "e"), idx(&a, "g"));
    assert_eq!(a.eta().get(e, e), Scalar::one());
    assert_eq!(a.eta().get(g, g), Scalar::one());
    assert!(a.eta().get(e, g).is_zero());

    let p = groupoid_ring_gfa(&fixture("pair2").unwrap()).unwrap();
    assert_eq!(p.dim(), 2);
    assert_eq!(p.eta(), &LinMap::identity(p.carrier()));
}

#[test]
fn z4_on_two_points_hand_traces() {
    let g = fixture("z4-on-2").unwrap();
    let a = groupoid_ring_gfa(&g).unwrap();
    assert_eq!(a.dim(), 4);
    // In a group ring every A_g is spanned by g itself, and both sides of the
    // trace identity send g to g (resp. h to h) when c = ghg⁻¹h⁻¹.
    for x in 0..g.num_objects() {
        for &gg in g.loops(x) {
            for &hh in g.loops(x) {
                let c = g.mul(g.mul(gg, hh), g.mul(g.inverse(gg), g.inverse(hh)));
                let lhs = g.mul(c, g.conj(hh, gg));
                let rhs = g.conj(g.inverse(gg), g.mul(c, hh));
                assert_eq!((lhs, rhs), (gg, hh));
            }
            // twisted commutativity: gh = (ghg⁻¹)g
            for &hh in g.loops(x) {
                assert_eq!(g.mul(gg, hh), g.mul(g.conj(gg, hh), gg));
            }
        }
    }
    let report = check_gfa(&a);
    assert!(report.passed(axiom::VII) && report.passed(axiom::IX));
}

#[test]
fn negated_phi_on_a_g() {
    let a = z2();
    let g = idx(&a, "g");
    let gm = a.groupoid().morphism_named("g").unwrap();
    let phi = a.phi(gm).clone();
    let mutated = LinMap::from_triplets(
        a.carrier(),
        a.carrier(),
        (0..a.dim()).flat_map(|j| {
            let sign = if j == g { -Scalar::one() } else { Scalar::one() };
            phi.column(j).iter().map(move |(i, v)| (*i, j, v * &sign)).collect::<Vec<_>>()
        }),
    );
    let report = check_gfa(&a.with_phi(gm, mutated));
    assert!(!report.passed(axiom::VIII));
    // g⋆g = e but (φ(g)g)⋆g = -e, so twisted commutativity breaks as well.
    assert!(!report.passed(axiom::VII));
    for ax in [axiom::A, axiom::B, axiom::D, axiom::I, axiom::II, axiom::III, axiom::IV, axiom::V, axiom::VI] {
        assert!(report.passed(ax), "{ax}");
    }
}

#[test]
fn misplaced_eta_block_is_caught() {
    let a = z2();
    let (e, g) = (idx(&a, "e"), idx(&a, "g"));
    let eta = a.eta().add(&LinMap::from_triplets(a.carrier(), a.carrier(), [(e, g, Scalar::one())]));
    let report = check_gfa(&a.with_eta(eta));
    assert!(!report.passed(axiom::VI));
}

#[test]
fn degenerate_eta_is_caught() {
    let a = z2();
    let g = idx(&a, "g");
    let eta = a.eta().sub(&LinMap::from_triplets(a.carrier(), a.carrier(), [(g, g, Scalar::one())]));
    let report = check_gfa(&a.with_eta(eta));
    assert_eq!(report.line(axiom::VI).unwrap().witness.as_ref().unwrap()[1], "g");
}

#[test]
fn cross_object_product_is_caught() {
    let a = groupoid_ring_gfa(&fixture("pair2").unwrap()).unwrap();
    let mutated = a.with_product(0, 1, Elem::unit(0));
    let report = check_gfa(&mutated);
    assert!(!report.passed(axiom::II));
}

#[test]
fn grading_must_use_loops() {
    let g = fixture("pair2").unwrap();
    let a = groupoid_ring_gfa(&g).unwrap();
    let arrow = g.morphism_named("1<-0").unwrap();
    let err = Gfa::new(
        g.clone(),
        a.carrier().clone(),
        Bigrading { grades: vec![(0, arrow), (1, g.identity(1))] },
        (0..4).map(|ij| a.product(ij / 2, ij % 2).clone()).collect(),
        a.unit().clone(),
        a.eta().clone(),
        a.phis().to_vec(),
    )
    .unwrap_err();
    assert!(matches!(err, GfaError::GradingInconsistent(_)));
}

#[test]
fn empty_gfa_passes() {
    let g = fixture("pair2").unwrap();
    let empty = crate::exact_linalg::LabeledBasis::empty();
    let a = Gfa::new(
        g.clone(),
        empty.clone(),
        Bigrading { grades: vec![] },
        vec![],
        Elem::new(),
        LinMap::zero(&empty, &empty),
        vec![LinMap::zero(&empty, &empty); g.num_morphisms()],
    )
    .unwrap();
    assert!(check_gfa(&a).all_passed());
}

#[test]
fn derived_lemmas_on_fixtures() {
    for (name, g) in all_fixtures() {
        let a = groupoid_ring_gfa(&g).unwrap();
        let gr = a.grading();
        assert_eq!(a.eta(), &a.eta().transpose(), "{name}: η symmetric");
        for i in 0..a.dim() {
            let (x, gi) = gr.grades[i];
            assert_eq!(a.phi(g.inverse(gi)).column(i), Elem::unit(i), "{name}");
            for j in gr.homogeneous(x, g.inverse(gi)) {
                assert_eq!(a.product(i, j), a.product(j, i), "{name}");
            }
        }
        for x in 0..g.num_objects() {
            let ux = a.unit_component(x);
            assert!(ux.keys().all(|&k| gr.grades[k] == (x, g.identity(x))), "{name}");
            for i in gr.component(x) {
                assert_eq!(a.star(&ux, &Elem::unit(i)), Elem::unit(i), "{name}");
            }
        }
    }
}

#[test]
fn json_roundtrip() {
    for (name, g) in all_fixtures() {
        let a = groupoid_ring_gfa(&g).unwrap();
        let text = serde_json::to_string(&a).unwrap();
        let back: Gfa = serde_json::from_str(&text).unwrap();
        assert_eq!(back, a, "{name}");
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}

#[test]
fn fixture_reference_resolves() {
    let a = z2();
    let mut j = GfaJson::from(&a);
    j.groupoid = GroupoidRef::Fixture("z2".into());
    assert_eq!(Gfa::try_from(j).unwrap(), a);
}
