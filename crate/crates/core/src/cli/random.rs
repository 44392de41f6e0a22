//! Seeded random structures for the serialization round trip.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::correspondence::{gfa_to_frobenius, gfa_to_module};
use crate::exact_linalg::{LinMap, Scalar};
use crate::frobenius::FrobeniusObjectData;
use crate::gfa::{groupoid_ring_gfa, Gfa};
use crate::groupoid::{action_groupoid, disjoint_union, one_object, pair_groupoid, GroupTable, Groupoid, SetAction};
use crate::rep_cat::{HModule, HModuleJson};
use crate::weak_hopf::{groupoid_algebra, Elem, QuantumGroupoid};

#[derive(Clone, Debug)]
pub enum Sample {
    Groupoid(Groupoid),
    QuantumGroupoid(QuantumGroupoid),
    Gfa(Gfa),
    Module(HModule),
    Frobenius(FrobeniusObjectData),
}

impl Sample {
    pub fn kind(&self) -> &'static str {
        match self {
            Sample::Groupoid(_) => "groupoid",
            Sample::QuantumGroupoid(_) => "quantum groupoid",
            Sample::Gfa(_) => "GFA",
            Sample::Module(_) => "module",
            Sample::Frobenius(_) => "Frobenius object",
        }
    }

    /// `parse(serialize(x)) == x` and re-serializing gives the same text.
    pub fn roundtrips(&self) -> bool {
        match self {
            Sample::Groupoid(x) => same(x),
            Sample::QuantumGroupoid(x) => same(x),
            Sample::Gfa(x) => same(x),
            Sample::Frobenius(x) => same(x),
            Sample::Module(m) => {
                let text = serde_json::to_string(&HModuleJson::encode(m)).expect("serializable");
                let Ok(j) = serde_json::from_str::<HModuleJson>(&text) else { return false };
                let Ok(back) = j.decode() else { return false };
                back == *m && serde_json::to_string(&HModuleJson::encode(&back)).expect("serializable") == text
            }
        }
    }
}

fn same<T: Serialize + DeserializeOwned + PartialEq>(x: &T) -> bool {
    let text = serde_json::to_string(x).expect("serializable");
    match serde_json::from_str::<T>(&text) {
        Ok(back) => back == *x && serde_json::to_string(&back).expect("serializable") == text,
        Err(_) => false,
    }
}

fn scalar(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=7))
}

fn nonzero_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let s = scalar(rng);
        if !s.is_zero() {
            return s;
        }
    }
}

fn small_groupoid(rng: &mut ChaCha8Rng) -> Groupoid {
    match rng.gen_range(0..4) {
        0 => one_object(&GroupTable::cyclic(rng.gen_range(1..=4))),
        1 => pair_groupoid(rng.gen_range(1..=2)),
        2 => disjoint_union(&one_object(&GroupTable::cyclic(rng.gen_range(1..=2))), &pair_groupoid(1)),
        _ => {
            let z = GroupTable::cyclic(2);
            let swap = SetAction::new(&z, vec!["p".into(), "q".into()], |k, p| (p + k) % 2).expect("swap action");
            action_groupoid(&z, &swap)
        }
    }
}

fn groupoid(rng: &mut ChaCha8Rng) -> Groupoid {
    match rng.gen_range(0..3) {
        0 => small_groupoid(rng),
        1 => one_object(&[GroupTable::cyclic(5), GroupTable::symmetric3()].choose(rng).expect("nonempty").clone()),
        _ => disjoint_union(&small_groupoid(rng), &pair_groupoid(rng.gen_range(1..=3))),
    }
}

fn perturb(rng: &mut ChaCha8Rng, f: &LinMap) -> LinMap {
    if f.nrows() == 0 || f.ncols() == 0 {
        return f.clone();
    }
    let (i, j) = (rng.gen_range(0..f.nrows()), rng.gen_range(0..f.ncols()));
    f.add(&LinMap::from_triplets(f.domain(), f.codomain(), [(i, j, scalar(rng))]))
}

fn sample(rng: &mut ChaCha8Rng, i: usize) -> Sample {
    match i % 5 {
        0 => Sample::Groupoid(groupoid(rng)),
        1 => {
            let h = groupoid_algebra(&groupoid(rng)).expect("valid groupoid");
            let (a, b) = (rng.gen_range(0..h.dim()), rng.gen_range(0..h.dim()));
            let value: Elem = [(rng.gen_range(0..h.dim()), scalar(rng))].into_iter().collect();
            Sample::QuantumGroupoid(h.with_product(a, b, value))
        }
        2 => {
            let a = groupoid_ring_gfa(&groupoid(rng)).expect("valid groupoid");
            Sample::Gfa(a.with_eta(perturb(rng, a.eta())))
        }
        3 => {
            let a = groupoid_ring_gfa(&small_groupoid(rng)).expect("valid groupoid");
            let m = gfa_to_module(&a).expect("valid GFA");
            // the grading is re-checked against ρ(⟨g|e_x⟩) on parsing, so
            // only actions of ⟨g|x⟩ with x not an identity are scaled
            let info = m.algebra().double_info().expect("double");
            let movable: Vec<usize> = (0..m.actions().len())
                .filter(|&p| !info.groupoid().is_identity(info.pairs()[p].1))
                .collect();
            match movable.choose(rng) {
                Some(&p) => {
                    let scaled = m.action_of_basis(p).scaled(&nonzero_scalar(rng));
                    Sample::Module(m.with_action(p, scaled))
                }
                None => Sample::Module(m),
            }
        }
        _ => {
            let a = groupoid_ring_gfa(&small_groupoid(rng)).expect("valid groupoid");
            let f = gfa_to_frobenius(&a).expect("valid GFA");
            let delta = perturb(rng, f.delta());
            Sample::Frobenius(f.with_delta(delta).with_eps(f.eps().scaled(&nonzero_scalar(rng))))
        }
    }
}

/// `n` structures cycling through every serializable kind, from `seed`.
pub fn random_structures(seed: u64, n: usize) -> Vec<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|i| sample(&mut rng, i)).collect()
}

/// `None` when every sample round-trips, else `[index, kind]` of the first
/// that does not.
pub fn serialization_roundtrip(seed: u64, n: usize) -> Option<Vec<String>> {
    random_structures(seed, n)
        .iter()
        .enumerate()
        .find(|(_, s)| !s.roundtrips())
        .map(|(i, s)| vec![i.to_string(), s.kind().to_string()])
}
