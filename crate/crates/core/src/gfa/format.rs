use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Gfa, GfaError};
use crate::exact_linalg::{Label, LabeledBasis, LinMap, Scalar};
use crate::fixtures::fixture;
use crate::groupoid::Groupoid;
use crate::rep_cat::{Bigrading, GradeJson};
use crate::weak_hopf::Elem;

/// A groupoid given inline or by built-in fixture name.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupoidRef {
    Fixture(String),
    Inline(Box<Groupoid>),
}

impl GroupoidRef {
    pub fn resolve(self) -> Result<Groupoid, GfaError> {
        match self {
            GroupoidRef::Inline(g) => Ok(*g),
            GroupoidRef::Fixture(name) => {
                fixture(&name).ok_or_else(|| GfaError::Malformed(format!("unknown fixture {name}")))
            }
        }
    }
}

/// Wire form: graded carrier, sparse product constants
/// `[label, label, label, coefficient]`, dense unit and η, and one dense φ
/// matrix per morphism id.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GfaJson {
    pub groupoid: GroupoidRef,
    pub carrier: Vec<GradeJson>,
    pub product: Vec<(Label, Label, Label, Scalar)>,
    pub unit: Vec<Scalar>,
    pub eta: Vec<Vec<Scalar>>,
    pub phi: BTreeMap<String, Vec<Vec<Scalar>>>,
}

impl From<&Gfa> for GfaJson {
    fn from(a: &Gfa) -> Self {
        let g = a.groupoid();
        let n = a.dim();
        let l = |i: usize| a.carrier().label(i).clone();
        let carrier = a
            .grading()
            .grades
            .iter()
            .enumerate()
            .map(|(i, &(x, lp))| GradeJson {
                label: l(i),
                object: g.object_id(x).to_string(),
                grade: g.morphism_id(lp).to_string(),
            })
            .collect();
        let mut product = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in a.product(i, j).iter() {
                    product.push((l(i), l(j), l(*k), c.clone()));
                }
            }
        }
        GfaJson {
            groupoid: GroupoidRef::Inline(Box::new(g.clone())),
            carrier,
            product,
            unit: (0..n).map(|i| a.unit().coeff(&i)).collect(),
            eta: a.eta().to_dense(),
            phi: (0..g.num_morphisms())
                .map(|x| (g.morphism_id(x).to_string(), a.phi(x).to_dense()))
                .collect(),
        }
    }
}

impl TryFrom<GfaJson> for Gfa {
    type Error = GfaError;

    fn try_from(j: GfaJson) -> Result<Self, GfaError> {
        let g = j.groupoid.resolve()?;
        let bad = |m: String| GfaError::Malformed(m);
        let carrier = LabeledBasis::new(j.carrier.iter().map(|c| c.label.clone()).collect())
            .map_err(|e| bad(e.to_string()))?;
        let n = carrier.len();
        let grades = j
            .carrier
            .iter()
            .map(|c| {
                let x = g.object_named(&c.object)?;
                let lp = g.morphism_named(&c.grade)?;
                Ok((x, lp))
            })
            .collect::<Result<Vec<_>, crate::groupoid::GroupoidError>>()
            .map_err(|e| GfaError::GradingInconsistent(e.to_string()))?;
        let lookup = |l: &Label| {
            carrier.index_of(l).ok_or_else(|| bad(format!("unknown carrier label {l}")))
        };
        let mut product = vec![Elem::new(); n * n];
        for (a, b, c, v) in &j.product {
            let (a, b, c) = (lookup(a)?, lookup(b)?, lookup(c)?);
            product[a * n + b].add_term(c, v);
        }
        if j.unit.len() != n {
            return Err(bad("unit must have one entry per carrier vector".into()));
        }
        let unit = j.unit.into_iter().enumerate().collect();
        let eta = LinMap::from_dense(&carrier, &carrier, &j.eta).map_err(|e| bad(format!("eta: {e}")))?;
        let mut phi = j.phi;
        let phis = (0..g.num_morphisms())
            .map(|x| {
                let id = g.morphism_id(x);
                let dense = phi.remove(id).ok_or_else(|| bad(format!("no phi matrix for {id}")))?;
                LinMap::from_dense(&carrier, &carrier, &dense).map_err(|e| bad(format!("phi({id}): {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(extra) = phi.keys().next() {
            return Err(bad(format!("phi given for unknown morphism {extra}")));
        }
        Gfa::new(g, carrier, Bigrading { grades }, product, unit, eta, phis)
    }
}

impl Serialize for Gfa {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GfaJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Gfa {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let j = GfaJson::deserialize(deserializer)?;
        Gfa::try_from(j).map_err(serde::de::Error::custom)
    }
}
