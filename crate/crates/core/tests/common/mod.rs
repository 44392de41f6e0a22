#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use grpdfrob::exact_linalg::{Label, LinMap, Scalar};
use grpdfrob::fixtures::all_fixtures;
use grpdfrob::gfa::{axiom, groupoid_ring_gfa, Gfa};
use grpdfrob::groupoid::Groupoid;
use grpdfrob::weak_hopf::{Elem, QuantumGroupoid};

pub fn fixtures() -> Vec<(&'static str, Groupoid)> {
    all_fixtures()
}

pub fn ring_gfas() -> Vec<(&'static str, Gfa)> {
    fixtures().into_iter().map(|(n, g)| (n, groupoid_ring_gfa(&g).unwrap())).collect()
}

pub fn atom(s: &str) -> Label {
    Label::atom(s)
}

/// Tables of the classical double of a group, written directly from
/// `⟨g|x⟩⟨h|y⟩ = δ_{x⁻¹gx,h}⟨g|xy⟩`, `Δ⟨g|x⟩ = Σ_{ab=g}⟨a|x⟩⊗⟨b|x⟩`,
/// `ε⟨g|x⟩ = δ_{g,e}` and `S⟨g|x⟩ = ⟨x⁻¹g⁻¹x|x⁻¹⟩`, keyed by names.
pub struct ClassicalDouble {
    pub basis: Vec<NamePair>,
    pub mult: BTreeMap<(NamePair, NamePair), Option<NamePair>>,
    pub comult: BTreeMap<NamePair, Vec<(NamePair, NamePair)>>,
    pub counit: BTreeMap<NamePair, i64>,
    pub antipode: BTreeMap<NamePair, NamePair>,
}

/// `(g, x)` names of the basis vector `⟨g|x⟩`.
pub type NamePair = (String, String);

/// `mul[a][b]` is the product `ab`; element 0 need not be the identity.
pub fn classical_double(names: &[String], mul: &[Vec<usize>]) -> ClassicalDouble {
    let n = names.len();
    let e = (0..n).find(|&a| (0..n).all(|b| mul[a][b] == b)).unwrap();
    let inv = |a: usize| (0..n).find(|&b| mul[a][b] == e).unwrap();
    let nm = |a: usize, b: usize| (names[a].clone(), names[b].clone());
    let mut d = ClassicalDouble {
        basis: vec![],
        mult: BTreeMap::new(),
        comult: BTreeMap::new(),
        counit: BTreeMap::new(),
        antipode: BTreeMap::new(),
    };
    for g in 0..n {
        for x in 0..n {
            d.basis.push(nm(g, x));
            d.counit.insert(nm(g, x), i64::from(g == e));
            let xi = inv(x);
            d.antipode.insert(nm(g, x), nm(mul[mul[xi][inv(g)]][x], xi));
            let mut terms = vec![];
            for (a, row) in mul.iter().enumerate() {
                for (b, &ab) in row.iter().enumerate() {
                    if ab == g {
                        terms.push((nm(a, x), nm(b, x)));
                    }
                }
            }
            d.comult.insert(nm(g, x), terms);
            for h in 0..n {
                for y in 0..n {
                    let hit = mul[mul[xi][g]][x] == h;
                    d.mult.insert((nm(g, x), nm(h, y)), hit.then(|| nm(g, mul[x][y])));
                }
            }
        }
    }
    d
}

pub fn pair_name(g: &str, x: &str) -> Label {
    Label::atom(format!("<{g}|{x}>"))
}

/// First disagreement between a computed double and the classical tables.
pub fn compare_with_classical(h: &QuantumGroupoid, c: &ClassicalDouble) -> Option<String> {
    if h.dim() != c.basis.len() {
        return Some(format!("dimension {} vs {}", h.dim(), c.basis.len()));
    }
    let idx = |(g, x): &(String, String)| h.basis().index_of(&pair_name(g, x));
    let mut index = BTreeMap::new();
    for p in &c.basis {
        match idx(p) {
            Some(i) => index.insert(p.clone(), i),
            None => return Some(format!("missing basis element <{}|{}>", p.0, p.1)),
        };
    }
    for ((a, b), out) in &c.mult {
        let want: Elem = out.iter().map(|o| (index[o], Scalar::one())).collect();
        if h.product(index[a], index[b]) != &want {
            return Some(format!("product <{}|{}><{}|{}>", a.0, a.1, b.0, b.1));
        }
    }
    for (a, terms) in &c.comult {
        let mut want = grpdfrob::weak_hopf::Elem2::new();
        for (l, r) in terms {
            want.add_term((index[l], index[r]), &Scalar::one());
        }
        if h.coproduct(index[a]) != &want {
            return Some(format!("coproduct of <{}|{}>", a.0, a.1));
        }
    }
    for (a, v) in &c.counit {
        if h.counit_value(index[a]) != &Scalar::from_int(*v) {
            return Some(format!("counit of <{}|{}>", a.0, a.1));
        }
    }
    for (a, s) in &c.antipode {
        if h.antipode_of_basis(index[a]) != &Elem::unit(index[s]) {
            return Some(format!("antipode of <{}|{}>", a.0, a.1));
        }
    }
    None
}

/// The group of a one-object groupoid as names and a multiplication table.
pub fn group_of(g: &Groupoid) -> (Vec<String>, Vec<Vec<usize>>) {
    assert_eq!(g.num_objects(), 1);
    let loops = g.loops(0).to_vec();
    let names = loops.iter().map(|&l| g.morphism_id(l).to_string()).collect();
    let pos = |m: usize| loops.iter().position(|&l| l == m).unwrap();
    let mul = loops.iter().map(|&a| loops.iter().map(|&b| pos(g.mul(a, b))).collect()).collect();
    (names, mul)
}

/// `Δ(a) = Σ_{l,m} η(a, û_m⋆û_l) u_l⊗u_m` on the ambient tensor basis, where
/// `û_i` is the solution of `η(û_i, u_j) = δ_ij`.
pub fn delta_by_dual_basis(a: &Gfa) -> LinMap {
    let n = a.dim();
    let ambient = grpdfrob::exact_linalg::tensor_basis(a.carrier(), a.carrier());
    let eta_t = a.eta().transpose();
    let hats: Vec<Elem> = (0..n)
        .map(|i| {
            let target = grpdfrob::exact_linalg::Vector::basis_vector(a.carrier(), i);
            let v = grpdfrob::exact_linalg::solve(&eta_t, &target).unwrap();
            v.coeffs().clone()
        })
        .collect();
    let mut triplets = vec![];
    for i in 0..n {
        for l in 0..n {
            for m in 0..n {
                triplets.push((l * n + m, i, a.eta_value(&Elem::unit(i), &a.star(&hats[m], &hats[l]))));
            }
        }
    }
    LinMap::from_triplets(a.carrier(), &ambient, triplets)
}

pub struct Mutation {
    pub name: &'static str,
    pub expected: &'static str,
    pub gfa: Result<Gfa, String>,
}

fn idx(a: &Gfa, label: &str) -> usize {
    a.carrier().index_of(&atom(label)).unwrap()
}

fn ring(name: &str) -> Gfa {
    groupoid_ring_gfa(&grpdfrob::fixtures::fixture(name).unwrap()).unwrap()
}

/// `φ(x)` with column `j` multiplied by `c`.
fn scale_phi_column(a: &Gfa, x: usize, j: usize, c: Scalar) -> Gfa {
    let phi = a.phi(x);
    let cols: Vec<Elem> = (0..a.dim())
        .map(|k| if k == j { phi.column(k).scaled(&c) } else { phi.column(k) })
        .collect();
    a.with_phi(x, LinMap::from_columns(a.carrier(), a.carrier(), &cols))
}

fn set_eta(a: &Gfa, i: usize, j: usize, v: Scalar) -> Gfa {
    let delta = v - a.eta().get(i, j);
    a.with_eta(a.eta().add(&LinMap::from_triplets(a.carrier(), a.carrier(), [(i, j, delta)])))
}

/// One mutation per axiom line, each built from a passing groupoid ring.
pub fn curated_mutations() -> Vec<Mutation> {
    let mut out = vec![];

    // (a): an invalid groupoid cannot even be assembled into a GFA
    let g = grpdfrob::fixtures::fixture("z2").unwrap();
    let gg = g.morphism_named("g").unwrap();
    let broken = g.with_composite(gg, gg, Some(gg));
    let a = ring("z2");
    let attempt = Gfa::new(
        broken,
        a.carrier().clone(),
        a.grading().clone(),
        (0..4).map(|ij| a.product(ij / 2, ij % 2).clone()).collect(),
        a.unit().clone(),
        a.eta().clone(),
        a.phis().to_vec(),
    )
    .map_err(|e| e.to_string());
    out.push(Mutation { name: "z2 with g·g = g in the groupoid table", expected: axiom::A, gfa: attempt });

    let a = ring("z2");
    out.push(Mutation {
        name: "z2 with unit 2e",
        expected: axiom::B,
        gfa: Ok(a.with_unit(Elem::from_iter([(idx(&a, "e"), Scalar::from_int(2))]))),
    });

    let g = grpdfrob::fixtures::fixture("z4-on-2").unwrap();
    let a = ring("z4-on-2");
    let arrow = (0..g.num_morphisms()).find(|&m| g.src(m) != g.tgt(m)).unwrap();
    let phi2 = a.phi(arrow).scaled(&Scalar::from_int(2));
    out.push(Mutation { name: "z4-on-2 with φ(x) doubled for an arrow x", expected: axiom::D, gfa: Ok(a.with_phi(arrow, phi2)) });

    let a = ring("z2");
    let (e, g) = (idx(&a, "e"), idx(&a, "g"));
    out.push(Mutation { name: "z2 with g⋆g = g", expected: axiom::I, gfa: Ok(a.with_product(g, g, Elem::unit(g))) });

    let a = ring("pair2");
    out.push(Mutation { name: "pair2 with a nonzero cross-object product", expected: axiom::II, gfa: Ok(a.with_product(0, 1, Elem::unit(0))) });

    let a = ring("z2");
    out.push(Mutation { name: "z2 with η(g,g) = 2", expected: axiom::III, gfa: Ok(set_eta(&a, g, g, Scalar::from_int(2))) });

    let s3 = grpdfrob::fixtures::fixture("s3").unwrap();
    let a = ring("s3");
    let t = (0..s3.num_morphisms()).find(|&m| !s3.is_identity(m) && s3.is_identity(s3.mul(m, m))).unwrap();
    let ti = idx(&a, s3.morphism_id(t));
    out.push(Mutation { name: "s3 with η(t,t) = 2 for a transposition t", expected: axiom::IV, gfa: Ok(set_eta(&a, ti, ti, Scalar::from_int(2))) });

    let a = ring("s3");
    out.push(Mutation {
        name: "s3 with φ(t) = id for a transposition t",
        expected: axiom::V,
        gfa: Ok(a.with_phi(t, LinMap::identity(a.carrier()))),
    });

    let a = ring("z2");
    out.push(Mutation { name: "z2 with η(g,g) = 0", expected: axiom::VI, gfa: Ok(set_eta(&a, g, g, Scalar::zero())) });

    let gm = grpdfrob::fixtures::fixture("z2").unwrap().morphism_named("g").unwrap();
    out.push(Mutation {
        name: "z2 with φ(g) = -1 on A_g (twisted commutativity)",
        expected: axiom::VII,
        gfa: Ok(scale_phi_column(&a, gm, g, -Scalar::one())),
    });
    out.push(Mutation {
        name: "z2 with φ(g) = -1 on A_g",
        expected: axiom::VIII,
        gfa: Ok(scale_phi_column(&a, gm, g, -Scalar::one())),
    });
    out.push(Mutation {
        name: "z2 with φ(g) = -1 on A_e",
        expected: axiom::IX,
        gfa: Ok(scale_phi_column(&a, gm, e, -Scalar::one())),
    });
    out
}

pub fn arc(h: QuantumGroupoid) -> Arc<QuantumGroupoid> {
    Arc::new(h)
}
