use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Bigrading, HModule, RepError};
use crate::exact_linalg::{Label, LabeledBasis, LinMap, Scalar};
use crate::groupoid::Groupoid;
use crate::weak_hopf::{double_algebra, QuantumGroupoid, QuantumGroupoidJson};

/// Which algebra a module is over: the double of an inline groupoid, or an
/// explicitly tabulated quantum groupoid.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgebraRef {
    DoubleOf(Groupoid),
    QuantumGroupoid(QuantumGroupoidJson),
}

impl AlgebraRef {
    pub fn of(h: &QuantumGroupoid) -> Self {
        match h.double_info() {
            Some(info) => AlgebraRef::DoubleOf(info.groupoid().clone()),
            None => AlgebraRef::QuantumGroupoid(QuantumGroupoidJson::from(h)),
        }
    }

    pub fn build(self) -> Result<Arc<QuantumGroupoid>, RepError> {
        let err = |e: &dyn std::fmt::Display| RepError::Malformed(e.to_string());
        Ok(Arc::new(match self {
            AlgebraRef::DoubleOf(g) => double_algebra(&g).map_err(|e| err(&e))?,
            AlgebraRef::QuantumGroupoid(j) => QuantumGroupoid::try_from(j).map_err(|e| err(&e))?,
        }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradeJson {
    pub label: Label,
    pub object: String,
    pub grade: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HModuleJson {
    pub algebra: AlgebraRef,
    pub carrier: Vec<Label>,
    /// `(algebra basis label, dense action matrix)` in algebra basis order.
    pub action: Vec<(Label, Vec<Vec<Scalar>>)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bigrading: Option<Vec<GradeJson>>,
}

impl HModuleJson {
    pub fn encode(m: &HModule) -> Self {
        let h = m.algebra();
        let bigrading = match (m.grading(), h.double_info()) {
            (Some(gr), Some(info)) => {
                let g = info.groupoid();
                Some(
                    gr.grades
                        .iter()
                        .enumerate()
                        .map(|(i, &(x, lp))| GradeJson {
                            label: m.carrier().label(i).clone(),
                            object: g.object_id(x).to_string(),
                            grade: g.morphism_id(lp).to_string(),
                        })
                        .collect(),
                )
            }
            _ => None,
        };
        HModuleJson {
            algebra: AlgebraRef::of(h),
            carrier: m.carrier().labels().to_vec(),
            action: (0..h.dim())
                .map(|i| (h.basis().label(i).clone(), m.action_of_basis(i).to_dense()))
                .collect(),
            bigrading,
        }
    }

    pub fn decode(self) -> Result<HModule, RepError> {
        let h = self.algebra.build()?;
        decode_module_over(&h, self.carrier, self.action, self.bigrading)
    }
}

pub(crate) fn decode_module_over(
    h: &Arc<QuantumGroupoid>,
    carrier: Vec<Label>,
    action: Vec<(Label, Vec<Vec<Scalar>>)>,
    bigrading: Option<Vec<GradeJson>>,
) -> Result<HModule, RepError> {
    let malformed = |m: String| RepError::Malformed(m);
    let carrier = LabeledBasis::new(carrier).map_err(|e| malformed(e.to_string()))?;
    let mut maps = vec![None; h.dim()];
    for (label, matrix) in action {
        let i = h
            .basis()
            .index_of(&label)
            .ok_or_else(|| malformed(format!("unknown algebra element {label}")))?;
        let map = LinMap::from_dense(&carrier, &carrier, &matrix)
            .map_err(|e| malformed(format!("action of {label}: {e}")))?;
        if maps[i].replace(map).is_some() {
            return Err(malformed(format!("duplicate action for {label}")));
        }
    }
    let maps = maps
        .into_iter()
        .enumerate()
        .map(|(i, m)| m.ok_or_else(|| malformed(format!("no action for {}", h.label(i)))))
        .collect::<Result<Vec<_>, _>>()?;
    let module = HModule::new(h.clone(), carrier.clone(), maps)?;
    match bigrading {
        None => Ok(module),
        Some(entries) => {
            let info = h.double_info().ok_or(RepError::NotADouble)?;
            let g = info.groupoid();
            let mut grades = vec![None; carrier.len()];
            for e in entries {
                let i = carrier
                    .index_of(&e.label)
                    .ok_or_else(|| malformed(format!("grading names unknown vector {}", e.label)))?;
                let x = g.object_named(&e.object).map_err(|err| malformed(err.to_string()))?;
                let lp = g.morphism_named(&e.grade).map_err(|err| malformed(err.to_string()))?;
                grades[i] = Some((x, lp));
            }
            let grades = grades
                .into_iter()
                .enumerate()
                .map(|(i, gr)| {
                    gr.ok_or_else(|| malformed(format!("{} has no grade", carrier.label(i))))
                })
                .collect::<Result<Vec<_>, _>>()?;
            module.with_grading(Bigrading { grades })
        }
    }
}
