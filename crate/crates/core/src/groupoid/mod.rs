//! Finite groupoids given by explicit partial composition tables.

mod constructors;
mod format;

use std::collections::HashMap;

pub use constructors::{
    action_groupoid, disjoint_union, one_object, pair_groupoid, GroupTable, SetAction,
};

use crate::report::{first_witness, AxiomReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupoidError {
    #[error("unknown object {0:?}")]
    UnknownObject(String),
    #[error("unknown morphism {0:?}")]
    UnknownMorphism(String),
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("invalid group action: {0}")]
    InvalidAction(String),
    #[error("malformed groupoid: {0}")]
    Malformed(String),
    #[error("groupoid fails {0}")]
    InvalidGroupoid(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite groupoid. Objects and morphisms are addressed by their position
/// in declaration order; ids are kept for I/O and reporting.
#[derive(Clone, Debug)]
pub struct Groupoid {
    objects: Vec<String>,
    object_index: HashMap<String, usize>,
    morphisms: Vec<Morphism>,
    morphism_index: HashMap<String, usize>,
    /// `compose[g * n + h]` is `g·h` (apply `h` first).
    compose: Vec<Option<usize>>,
    identity: Vec<usize>,
    inverse: Vec<usize>,
    loops: Vec<Vec<usize>>,
}

impl PartialEq for Groupoid {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.compose == other.compose
            && self.identity == other.identity
            && self.inverse == other.inverse
    }
}

impl Eq for Groupoid {}

/// The automorphism group of one object, elements in morphism order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotropyGroup {
    pub object: usize,
    pub elements: Vec<usize>,
}

fn index_of(map: &HashMap<String, usize>, id: &str, object: bool) -> Result<usize, GroupoidError> {
    map.get(id).copied().ok_or_else(|| {
        if object {
            GroupoidError::UnknownObject(id.to_string())
        } else {
            GroupoidError::UnknownMorphism(id.to_string())
        }
    })
}

impl Groupoid {
    /// Assembles a groupoid from id-level tables. Only referential integrity
    /// is checked here; the groupoid laws are checked by [`Groupoid::validate`].
    pub fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<(String, String, String)>,
        compose: Vec<(String, String, String)>,
        identity: Vec<(String, String)>,
        inverse: Vec<(String, String)>,
    ) -> Result<Self, GroupoidError> {
        let mut object_index = HashMap::new();
        for (i, o) in objects.iter().enumerate() {
            if object_index.insert(o.clone(), i).is_some() {
                return Err(GroupoidError::Malformed(format!("duplicate object {o:?}")));
            }
        }
        let mut morphism_index = HashMap::new();
        let mut morphs = Vec::with_capacity(morphisms.len());
        for (i, (id, s, t)) in morphisms.into_iter().enumerate() {
            let src = index_of(&object_index, &s, true)?;
            let tgt = index_of(&object_index, &t, true)?;
            if morphism_index.insert(id.clone(), i).is_some() {
                return Err(GroupoidError::Malformed(format!("duplicate morphism {id:?}")));
            }
            morphs.push(Morphism { id, src, tgt });
        }
        let n = morphs.len();
        let mut table = vec![None; n * n];
        for (g, h, gh) in compose {
            let g = index_of(&morphism_index, &g, false)?;
            let h = index_of(&morphism_index, &h, false)?;
            let gh = index_of(&morphism_index, &gh, false)?;
            match table[g * n + h] {
                Some(prev) if prev != gh => {
                    return Err(GroupoidError::Malformed(format!(
                        "conflicting composites for ({}, {})",
                        morphs[g].id, morphs[h].id
                    )))
                }
                _ => table[g * n + h] = Some(gh),
            }
        }
        let mut ident = vec![None; objects.len()];
        for (x, e) in identity {
            let x = index_of(&object_index, &x, true)?;
            ident[x] = Some(index_of(&morphism_index, &e, false)?);
        }
        let identity = ident
            .into_iter()
            .enumerate()
            .map(|(x, e)| {
                e.ok_or_else(|| {
                    GroupoidError::Malformed(format!("no identity for object {:?}", objects[x]))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut inv = vec![None; n];
        for (g, gi) in inverse {
            let g = index_of(&morphism_index, &g, false)?;
            inv[g] = Some(index_of(&morphism_index, &gi, false)?);
        }
        let inverse = inv
            .into_iter()
            .enumerate()
            .map(|(g, gi)| {
                gi.ok_or_else(|| {
                    GroupoidError::Malformed(format!("no inverse for morphism {:?}", morphs[g].id))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::assemble(objects, object_index, morphs, morphism_index, table, identity, inverse))
    }

    fn assemble(
        objects: Vec<String>,
        object_index: HashMap<String, usize>,
        morphisms: Vec<Morphism>,
        morphism_index: HashMap<String, usize>,
        compose: Vec<Option<usize>>,
        identity: Vec<usize>,
        inverse: Vec<usize>,
    ) -> Self {
        let mut loops = vec![Vec::new(); objects.len()];
        for (g, m) in morphisms.iter().enumerate() {
            if m.src == m.tgt {
                loops[m.src].push(g);
            }
        }
        Groupoid {
            objects,
            object_index,
            morphisms,
            morphism_index,
            compose,
            identity,
            inverse,
            loops,
        }
    }

    /// Builds from index-level data produced by the constructors.
    pub(crate) fn from_indexed(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        compose: impl Fn(usize, usize) -> Option<usize>,
        identity: Vec<usize>,
        inverse: Vec<usize>,
    ) -> Self {
        let n = morphisms.len();
        let object_index = objects.iter().enumerate().map(|(i, o)| (o.clone(), i)).collect();
        let morphism_index =
            morphisms.iter().enumerate().map(|(i, m)| (m.id.clone(), i)).collect();
        let mut table = vec![None; n * n];
        for g in 0..n {
            for h in 0..n {
                if morphisms[g].src == morphisms[h].tgt {
                    table[g * n + h] = compose(g, h);
                }
            }
        }
        Self::assemble(objects, object_index, morphisms, morphism_index, table, identity, inverse)
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn object_id(&self, x: usize) -> &str {
        &self.objects[x]
    }

    pub fn morphism_id(&self, g: usize) -> &str {
        &self.morphisms[g].id
    }

    pub fn object_named(&self, id: &str) -> Result<usize, GroupoidError> {
        index_of(&self.object_index, id, true)
    }

    pub fn morphism_named(&self, id: &str) -> Result<usize, GroupoidError> {
        index_of(&self.morphism_index, id, false)
    }

    pub fn src(&self, g: usize) -> usize {
        self.morphisms[g].src
    }

    pub fn tgt(&self, g: usize) -> usize {
        self.morphisms[g].tgt
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identity[x]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn is_identity(&self, g: usize) -> bool {
        self.identity[self.src(g)] == g
    }

    /// `g·h` from the table; `None` when not composable or missing.
    pub fn compose(&self, g: usize, h: usize) -> Option<usize> {
        self.compose[g * self.morphisms.len() + h]
    }

    /// `g·h` on a validated groupoid; panics if undefined.
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.compose(g, h).unwrap_or_else(|| {
            panic!("composite {}·{} undefined", self.morphism_id(g), self.morphism_id(h))
        })
    }

    /// `x·g·x⁻¹` for `g ∈ Γ^{s(x)}`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(x, g), self.inverse(x))
    }

    /// Loops at `x` in morphism order.
    pub fn loops(&self, x: usize) -> &[usize] {
        &self.loops[x]
    }

    pub fn isotropy(&self, x: &str) -> Result<IsotropyGroup, GroupoidError> {
        let x = self.object_named(x)?;
        Ok(IsotropyGroup { object: x, elements: self.loops[x].clone() })
    }

    /// Checks every groupoid law exhaustively.
    pub fn validate(&self) -> AxiomReport {
        let n = self.morphisms.len();
        let id = |g: usize| self.morphism_id(g).to_string();
        let mut report = AxiomReport::new();

        report.record(
            "identity endpoints",
            first_witness(self.objects.len(), |x| {
                let e = self.identity[x];
                (self.src(e) != x || self.tgt(e) != x)
                    .then(|| vec![self.objects[x].clone(), id(e)])
            }),
        );
        report.record(
            "composition defined exactly on composable pairs",
            first_witness(n * n, |i| {
                let (g, h) = (i / n, i % n);
                let composable = self.src(g) == self.tgt(h);
                (composable != self.compose(g, h).is_some()).then(|| vec![id(g), id(h)])
            }),
        );
        report.record(
            "composite endpoints",
            first_witness(n * n, |i| {
                let (g, h) = (i / n, i % n);
                let gh = self.compose(g, h)?;
                (self.src(gh) != self.src(h) || self.tgt(gh) != self.tgt(g))
                    .then(|| vec![id(g), id(h), id(gh)])
            }),
        );
        report.record(
            "identity laws",
            first_witness(n, |g| {
                let left = self.compose(self.identity[self.tgt(g)], g);
                let right = self.compose(g, self.identity[self.src(g)]);
                (left != Some(g) || right != Some(g)).then(|| vec![id(g)])
            }),
        );
        report.record(
            "associativity",
            first_witness(n * n, |i| {
                let (g, h) = (i / n, i % n);
                let gh = self.compose(g, h)?;
                (0..n).find_map(|k| {
                    let hk = self.compose(h, k)?;
                    (self.compose(gh, k) != self.compose(g, hk))
                        .then(|| vec![id(g), id(h), id(k)])
                })
            }),
        );
        report.record(
            "inverse laws",
            first_witness(n, |g| {
                let gi = self.inverse[g];
                let ok = self.compose(g, gi) == Some(self.identity[self.tgt(g)])
                    && self.compose(gi, g) == Some(self.identity[self.src(g)]);
                (!ok).then(|| vec![id(g), id(gi)])
            }),
        );
        report
    }

    /// Fails with the first broken law, if any.
    pub fn ensure_valid(&self) -> Result<(), GroupoidError> {
        let report = self.validate();
        match report.failed().first() {
            Some(law) => Err(GroupoidError::InvalidGroupoid(law.to_string())),
            None => Ok(()),
        }
    }

    /// Replaces the composite `g·h` (test and tooling hook for seeded
    /// mutations).
    pub fn with_composite(&self, g: usize, h: usize, gh: Option<usize>) -> Self {
        let mut out = self.clone();
        let n = out.morphisms.len();
        out.compose[g * n + h] = gh;
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_groupoid_valid() {
        let g = one_object(&GroupTable::cyclic(1));
        assert!(g.validate().all_passed());
        assert_eq!(g.num_morphisms(), 1);
    }

    #[test]
    fn pair_groupoid_two_objects() {
        let g = pair_groupoid(2);
        assert!(g.validate().all_passed());
        assert_eq!(g.num_morphisms(), 4);
        for x in g.objects() {
            assert_eq!(g.isotropy(x).unwrap().elements.len(), 1);
        }
    }

    #[test]
    fn broken_associativity_named() {
        let g = one_object(&GroupTable::cyclic(3));
        let a = g.morphism_named("g").unwrap();
        let e = g.morphism_named("e").unwrap();
        // g·g = e instead of g2
        let bad = g.with_composite(a, a, Some(e));
        let report = bad.validate();
        let line = report.line("associativity").unwrap();
        assert!(!line.passed);
        assert_eq!(line.witness.as_ref().unwrap().len(), 3);
    }

    #[test]
    fn isotropy_of_z2() {
        let g = one_object(&GroupTable::cyclic(2));
        let iso = g.isotropy("*").unwrap();
        let ids: Vec<_> = iso.elements.iter().map(|&m| g.morphism_id(m)).collect();
        assert_eq!(ids, ["e", "g"]);
    }

    #[test]
    fn unknown_object() {
        let g = pair_groupoid(2);
        assert_eq!(g.isotropy("7"), Err(GroupoidError::UnknownObject("7".into())));
    }

    #[test]
    fn action_groupoid_stabilizers() {
        let z4 = GroupTable::cyclic(4);
        let swap = SetAction::new(&z4, vec!["0".into(), "1".into()], |k, p| (p + k) % 2).unwrap();
        let g = action_groupoid(&z4, &swap);
        assert!(g.validate().all_passed());
        assert_eq!(g.num_morphisms(), 8);
        for x in ["0", "1"] {
            assert_eq!(g.isotropy(x).unwrap().elements.len(), 2);
        }
    }

    #[test]
    fn disjoint_union_counts() {
        let z2 = one_object(&GroupTable::cyclic(2));
        let u = disjoint_union(&z2, &z2);
        assert!(u.validate().all_passed());
        assert_eq!((u.num_objects(), u.num_morphisms()), (2, 4));
        assert!(u.morphisms().iter().all(|m| m.src == m.tgt));
    }

    #[test]
    fn pair_groupoid_three() {
        let g = pair_groupoid(3);
        assert_eq!((g.num_objects(), g.num_morphisms()), (3, 9));
        assert!(g.validate().all_passed());
    }
}
