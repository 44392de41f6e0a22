use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{DrinfeldDouble, Elem, Elem2, QuantumGroupoid, RMatrix, WeakHopfError};
use crate::exact_linalg::{Label, LabeledBasis, Scalar};

/// Wire form of a quantum groupoid: sparse product and coproduct constants as
/// `[label, label, label, coefficient]`, dense unit and counit, and the
/// antipode as dense rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuantumGroupoidJson {
    pub basis: Vec<Label>,
    pub mult: Vec<(Label, Label, Label, Scalar)>,
    pub unit: Vec<Scalar>,
    pub comult: Vec<(Label, Label, Label, Scalar)>,
    pub counit: Vec<Scalar>,
    pub antipode: Vec<Vec<Scalar>>,
}

impl From<&QuantumGroupoid> for QuantumGroupoidJson {
    fn from(h: &QuantumGroupoid) -> Self {
        let n = h.dim();
        let l = |i: usize| h.basis().label(i).clone();
        let mut mult = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in h.product(i, j).iter() {
                    mult.push((l(i), l(j), l(*k), c.clone()));
                }
            }
        }
        let comult = (0..n)
            .flat_map(|i| {
                h.coproduct(i).iter().map(move |((a, b), c)| (l(i), l(*a), l(*b), c.clone()))
            })
            .collect();
        QuantumGroupoidJson {
            basis: h.basis().labels().to_vec(),
            mult,
            unit: (0..n).map(|i| h.unit().coeff(&i)).collect(),
            comult,
            counit: h.counit_vector().to_vec(),
            antipode: h.antipode_map().to_dense(),
        }
    }
}

fn lookup(basis: &LabeledBasis, l: &Label) -> Result<usize, WeakHopfError> {
    basis.index_of(l).ok_or_else(|| WeakHopfError::Malformed(format!("unknown basis label {l}")))
}

impl TryFrom<QuantumGroupoidJson> for QuantumGroupoid {
    type Error = WeakHopfError;

    fn try_from(j: QuantumGroupoidJson) -> Result<Self, Self::Error> {
        let basis =
            LabeledBasis::new(j.basis).map_err(|e| WeakHopfError::Malformed(e.to_string()))?;
        let n = basis.len();
        let bad = |m: &str| WeakHopfError::Malformed(m.to_string());
        let mut mult = vec![Elem::new(); n * n];
        for (a, b, c, v) in &j.mult {
            let (a, b, c) = (lookup(&basis, a)?, lookup(&basis, b)?, lookup(&basis, c)?);
            mult[a * n + b].add_term(c, v);
        }
        let mut comult = vec![Elem2::new(); n];
        for (a, b, c, v) in &j.comult {
            let (a, b, c) = (lookup(&basis, a)?, lookup(&basis, b)?, lookup(&basis, c)?);
            comult[a].add_term((b, c), v);
        }
        if j.unit.len() != n || j.counit.len() != n {
            return Err(bad("unit and counit must have one entry per basis element"));
        }
        if j.antipode.len() != n || j.antipode.iter().any(|r| r.len() != n) {
            return Err(bad("antipode must be a square matrix over the basis"));
        }
        let unit = j.unit.into_iter().enumerate().collect();
        let antipode = (0..n)
            .map(|col| (0..n).map(|row| (row, j.antipode[row][col].clone())).collect())
            .collect();
        QuantumGroupoid::new(basis, mult, unit, comult, j.counit, antipode)
    }
}

impl Serialize for QuantumGroupoid {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        QuantumGroupoidJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QuantumGroupoid {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let j = QuantumGroupoidJson::deserialize(deserializer)?;
        QuantumGroupoid::try_from(j).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RMatrixJson {
    #[serde(rename = "R")]
    pub r: Vec<(Label, Label, Scalar)>,
    #[serde(rename = "Rbar")]
    pub rbar: Vec<(Label, Label, Scalar)>,
}

/// Wire form of a double: the algebra, its R-matrix and the R-bar nullity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DoubleJson {
    pub algebra: QuantumGroupoidJson,
    pub r_matrix: RMatrixJson,
    pub rbar_nullity: usize,
}

fn tensor_entries(h: &QuantumGroupoid, t: &Elem2) -> Vec<(Label, Label, Scalar)> {
    t.iter()
        .map(|((a, b), c)| (h.basis().label(*a).clone(), h.basis().label(*b).clone(), c.clone()))
        .collect()
}

fn tensor_from_entries(
    h: &QuantumGroupoid,
    entries: &[(Label, Label, Scalar)],
) -> Result<Elem2, WeakHopfError> {
    let mut t = Elem2::new();
    for (a, b, c) in entries {
        t.add_term((lookup(h.basis(), a)?, lookup(h.basis(), b)?), c);
    }
    Ok(t)
}

impl From<&DrinfeldDouble> for DoubleJson {
    fn from(d: &DrinfeldDouble) -> Self {
        DoubleJson {
            algebra: QuantumGroupoidJson::from(&d.algebra),
            r_matrix: RMatrixJson {
                r: tensor_entries(&d.algebra, &d.r_matrix.r),
                rbar: tensor_entries(&d.algebra, &d.r_matrix.rbar),
            },
            rbar_nullity: d.rbar_nullity,
        }
    }
}

impl DoubleJson {
    /// The algebra and R-matrix described by this document. The result does
    /// not remember which groupoid it came from.
    pub fn decode(self) -> Result<(QuantumGroupoid, RMatrix), WeakHopfError> {
        let h = QuantumGroupoid::try_from(self.algebra)?;
        let r = tensor_from_entries(&h, &self.r_matrix.r)?;
        let rbar = tensor_from_entries(&h, &self.r_matrix.rbar)?;
        Ok((h, RMatrix { r, rbar }))
    }
}
