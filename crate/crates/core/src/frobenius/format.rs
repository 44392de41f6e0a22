use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{FrobeniusError, FrobeniusObjectData};
use crate::exact_linalg::{Label, LabeledBasis, LinMap, Scalar};
use crate::rep_cat::HModuleJson;

/// A dense matrix together with the labels of its domain and codomain.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapJson {
    pub domain: Vec<Label>,
    pub codomain: Vec<Label>,
    pub matrix: Vec<Vec<Scalar>>,
}

impl From<&LinMap> for MapJson {
    fn from(f: &LinMap) -> Self {
        MapJson {
            domain: f.domain().labels().to_vec(),
            codomain: f.codomain().labels().to_vec(),
            matrix: f.to_dense(),
        }
    }
}

impl MapJson {
    fn decode(self, name: &str) -> Result<LinMap, FrobeniusError> {
        let bad = |e: String| FrobeniusError::Malformed(format!("{name}: {e}"));
        let dom = LabeledBasis::new(self.domain).map_err(|e| bad(e.to_string()))?;
        let cod = LabeledBasis::new(self.codomain).map_err(|e| bad(e.to_string()))?;
        LinMap::from_dense(&dom, &cod, &self.matrix).map_err(|e| bad(e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrobeniusJson {
    pub module: HModuleJson,
    pub m: MapJson,
    pub mu: MapJson,
    pub delta: MapJson,
    pub eps: MapJson,
}

impl From<&FrobeniusObjectData> for FrobeniusJson {
    fn from(f: &FrobeniusObjectData) -> Self {
        FrobeniusJson {
            module: HModuleJson::encode(f.module()),
            m: f.m().into(),
            mu: f.mu().into(),
            delta: f.delta().into(),
            eps: f.eps().into(),
        }
    }
}

impl TryFrom<FrobeniusJson> for FrobeniusObjectData {
    type Error = FrobeniusError;

    fn try_from(j: FrobeniusJson) -> Result<Self, FrobeniusError> {
        let module = j.module.decode()?;
        FrobeniusObjectData::new(
            module,
            j.m.decode("m")?,
            j.mu.decode("mu")?,
            j.delta.decode("delta")?,
            j.eps.decode("eps")?,
        )
    }
}

impl Serialize for FrobeniusObjectData {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        FrobeniusJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FrobeniusObjectData {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let j = FrobeniusJson::deserialize(deserializer)?;
        FrobeniusObjectData::try_from(j).map_err(serde::de::Error::custom)
    }
}

impl PartialEq for FrobeniusObjectData {
    fn eq(&self, other: &Self) -> bool {
        self.module().same_algebra(other.module())
            && self.module().carrier() == other.module().carrier()
            && self.module().actions() == other.module().actions()
            && self.module().grading() == other.module().grading()
            && self.m() == other.m()
            && self.mu() == other.mu()
            && self.delta() == other.delta()
            && self.eps() == other.eps()
    }
}
