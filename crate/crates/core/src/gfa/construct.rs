use super::{Gfa, GfaError};
use crate::exact_linalg::{Label, LabeledBasis, LinMap, Scalar};
use crate::groupoid::Groupoid;
use crate::rep_cat::Bigrading;
use crate::weak_hopf::Elem;

/// `⊕_x k[Γ^x]` with the group-algebra product on each summand,
/// `η(g, h) = δ_{gh, e_x}` and `φ(x): g ↦ x g x⁻¹`.
pub fn groupoid_ring_gfa(g: &Groupoid) -> Result<Gfa, GfaError> {
    g.ensure_valid()?;
    let basis_morphisms: Vec<usize> =
        (0..g.num_objects()).flat_map(|x| g.loops(x).iter().copied()).collect();
    let n = basis_morphisms.len();
    let mut position = vec![usize::MAX; g.num_morphisms()];
    for (i, &m) in basis_morphisms.iter().enumerate() {
        position[m] = i;
    }
    let carrier = LabeledBasis::new(
        basis_morphisms.iter().map(|&m| Label::atom(g.morphism_id(m))).collect(),
    )
    .expect("morphism ids are distinct");
    let grading = Bigrading { grades: basis_morphisms.iter().map(|&m| (g.src(m), m)).collect() };

    let product = (0..n * n)
        .map(|ij| {
            let (a, b) = (basis_morphisms[ij / n], basis_morphisms[ij % n]);
            match g.compose(a, b) {
                Some(ab) => Elem::unit(position[ab]),
                None => Elem::new(),
            }
        })
        .collect();
    let unit = (0..g.num_objects()).map(|x| (position[g.identity(x)], Scalar::one())).collect();
    let eta = LinMap::from_triplets(
        &carrier,
        &carrier,
        basis_morphisms.iter().enumerate().map(|(i, &a)| (i, position[g.inverse(a)], Scalar::one())),
    );
    let phi = (0..g.num_morphisms())
        .map(|x| {
            LinMap::from_triplets(
                &carrier,
                &carrier,
                g.loops(g.src(x)).iter().map(|&a| (position[g.conj(x, a)], position[a], Scalar::one())),
            )
        })
        .collect();
    Gfa::new(g.clone(), carrier, grading, product, unit, eta, phi)
}
