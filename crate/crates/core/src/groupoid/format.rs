use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Groupoid;

#[derive(Serialize, Deserialize)]
struct MorphismJson {
    id: String,
    src: String,
    tgt: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupoidJson {
    objects: Vec<String>,
    morphisms: Vec<MorphismJson>,
    compose: Vec<(String, String, String)>,
    identity: BTreeMap<String, String>,
    inverse: BTreeMap<String, String>,
}

impl Serialize for Groupoid {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let n = self.num_morphisms();
        let id = |g: usize| self.morphism_id(g).to_string();
        let json = GroupoidJson {
            objects: self.objects.clone(),
            morphisms: self
                .morphisms
                .iter()
                .map(|m| MorphismJson {
                    id: m.id.clone(),
                    src: self.objects[m.src].clone(),
                    tgt: self.objects[m.tgt].clone(),
                })
                .collect(),
            compose: (0..n * n)
                .filter_map(|i| self.compose(i / n, i % n).map(|gh| (id(i / n), id(i % n), id(gh))))
                .collect(),
            identity: (0..self.num_objects())
                .map(|x| (self.objects[x].clone(), id(self.identity(x))))
                .collect(),
            inverse: (0..n).map(|g| (id(g), id(self.inverse(g)))).collect(),
        };
        json.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Groupoid {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let j = GroupoidJson::deserialize(deserializer)?;
        Groupoid::from_parts(
            j.objects,
            j.morphisms.into_iter().map(|m| (m.id, m.src, m.tgt)).collect(),
            j.compose,
            j.identity.into_iter().collect(),
            j.inverse.into_iter().collect(),
        )
        .map_err(serde::de::Error::custom)
    }
}
