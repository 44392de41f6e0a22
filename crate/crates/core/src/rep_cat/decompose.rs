use crate::exact_linalg::{image_basis, Label, LabeledBasis, LinMap};
use crate::weak_hopf::Elem;

use super::{Bigrading, HModule, RepError};

/// A graded copy of a module over a double. When the input basis was not
/// homogeneous, `change_of_basis` holds `(to_original, from_original)`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub module: HModule,
    pub change_of_basis: Option<(LinMap, LinMap)>,
}

/// Splits the carrier into the components `ρ(⟨g|e_x⟩)A`. A basis that is
/// already homogeneous is kept as is; otherwise the module is rewritten in
/// the concatenated image bases, labelled `("x/g", ambient label)`.
pub fn decompose(m: &HModule) -> Result<Decomposition, RepError> {
    let h = m.algebra().clone();
    let info = h.double_info().ok_or(RepError::NotADouble)?;
    let g = info.groupoid();
    let n = m.dim();

    let mut blocks = Vec::new();
    for x in 0..g.num_objects() {
        let e = g.identity(x);
        for &lp in g.loops(x) {
            blocks.push((x, lp, m.action_of_basis(info.index(lp, e).expect("loop pair"))));
        }
    }

    let mut grades = vec![None; n];
    let mut homogeneous = true;
    'outer: for (x, lp, p) in &blocks {
        for (i, grade) in grades.iter_mut().enumerate() {
            let col = p.column(i);
            if col == Elem::unit(i) {
                if grade.is_some() {
                    homogeneous = false;
                    break 'outer;
                }
                *grade = Some((*x, *lp));
            } else if !col.is_zero() {
                homogeneous = false;
                break 'outer;
            }
        }
    }
    if homogeneous && grades.iter().all(Option::is_some) {
        let grading = Bigrading { grades: grades.into_iter().map(Option::unwrap).collect() };
        return Ok(Decomposition {
            module: m.clone().with_grading_unchecked(grading),
            change_of_basis: None,
        });
    }

    let mut labels = Vec::new();
    let mut grades = Vec::new();
    let mut to_original_cols = Vec::new();
    let mut from_original_rows = Vec::new();
    for (x, lp, p) in &blocks {
        let image = image_basis(p).map_err(RepError::LinAlg)?;
        let tag = Label::atom(format!("{}/{}", g.object_id(*x), g.morphism_id(*lp)));
        for (k, l) in image.basis.labels().iter().enumerate() {
            labels.push(Label::pair(tag.clone(), l.clone()));
            grades.push((*x, *lp));
            to_original_cols.push(image.embedding.column(k));
        }
        from_original_rows.extend(image.projection.rows().iter().cloned());
    }
    if labels.len() != n {
        return Err(RepError::GradingMismatch(format!(
            "graded components have total dimension {}, carrier has {}",
            labels.len(),
            n
        )));
    }
    let refined = LabeledBasis::new(labels).expect("tagged labels are distinct");
    let to_original = LinMap::from_columns(&refined, m.carrier(), &to_original_cols);
    let from_original = LinMap::from_triplets(
        m.carrier(),
        &refined,
        from_original_rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, *j, v.clone()))),
    );
    if from_original.compose(&to_original) != LinMap::identity(&refined) {
        return Err(RepError::GradingMismatch(
            "graded components are not independent".into(),
        ));
    }
    let action = m
        .actions()
        .iter()
        .map(|a| from_original.compose(&a.compose(&to_original)))
        .collect();
    let module = HModule::new(h.clone(), refined, action)?
        .with_grading_unchecked(Bigrading { grades });
    Ok(Decomposition { module, change_of_basis: Some((to_original, from_original)) })
}

/// `φ(x) = Σ_{g ∈ Γ^{t(x)}} ρ(⟨g|x⟩)` restricted to `A^{s(x)}`, returned as
/// an endomorphism of the whole carrier that vanishes off `A^{s(x)}`. One
/// entry per groupoid morphism.
pub fn groupoid_action(m: &HModule) -> Result<Vec<LinMap>, RepError> {
    let h = m.algebra();
    let info = h.double_info().ok_or(RepError::NotADouble)?;
    let grading = m.grading().ok_or_else(|| RepError::GradingMismatch("module is not graded".into()))?;
    let g = info.groupoid();
    Ok((0..g.num_morphisms())
        .map(|x| {
            let sum: Elem = g
                .loops(g.tgt(x))
                .iter()
                .map(|&lp| (info.index(lp, x).expect("pair"), crate::exact_linalg::Scalar::one()))
                .collect();
            let restrict = LinMap::from_triplets(
                m.carrier(),
                m.carrier(),
                grading
                    .component(g.src(x))
                    .into_iter()
                    .map(|i| (i, i, crate::exact_linalg::Scalar::one())),
            );
            m.rho(&sum).compose(&restrict)
        })
        .collect())
}
