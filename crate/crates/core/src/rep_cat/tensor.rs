use std::sync::Arc;

use crate::exact_linalg::{
    image_basis, rank, swap_map_with_bases, tensor_basis, tensor_map_with_bases, Label,
    LabeledBasis, LinMap, Scalar,
};
use crate::weak_hopf::{counit_target_map, Elem, Elem2, QuantumGroupoid};

use super::{Bigrading, HModule, RepError};

/// `M ⊗̂ N` together with its inclusion into and projection from `M ⊗ N`.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    pub module: HModule,
    /// carrier → `M ⊗ N`.
    pub embedding: LinMap,
    /// `M ⊗ N` → carrier; `embedding ∘ projection = ρ₁₂(1)`.
    pub projection: LinMap,
}

/// `(ρ_M ⊗ ρ_N)(t)` on the ambient tensor space.
pub fn act_on_tensor(m: &HModule, n: &HModule, t: &Elem2, ambient: &LabeledBasis) -> LinMap {
    let mut out = LinMap::zero(ambient, ambient);
    for ((a, b), c) in t.iter() {
        let term =
            tensor_map_with_bases(m.action_of_basis(*a), n.action_of_basis(*b), ambient, ambient);
        out = out.lin_comb(&term, c);
    }
    out
}

/// The truncated tensor product: the image of `ρ₁₂(1)` with the action
/// `ρ₁₂(h) = (ρ₁ ⊗ ρ₂)Δ(h)` compressed onto it. For graded modules over a
/// double the carrier must be exactly the pairs with matching object grade.
pub fn monoidal_product(m: &HModule, n: &HModule) -> Result<TensorProduct, RepError> {
    if !m.same_algebra(n) {
        return Err(RepError::AlgebraMismatch);
    }
    let h = m.algebra().clone();
    let ambient = tensor_basis(m.carrier(), n.carrier());
    let p = act_on_tensor(m, n, &h.delta(h.unit()), &ambient);
    let image = image_basis(&p).map_err(RepError::LinAlg)?;
    let action = (0..h.dim())
        .map(|i| {
            let full = act_on_tensor(m, n, h.coproduct(i), &ambient);
            image.projection.compose(&full.compose(&image.embedding))
        })
        .collect();
    let mut module = HModule::new(h.clone(), image.basis.clone(), action)?;

    if let (Some(info), Some(gm), Some(gn)) = (h.double_info(), m.grading(), n.grading()) {
        let g = info.groupoid();
        let nn = n.dim();
        let mut expected = Vec::new();
        let mut grades = Vec::new();
        for a in 0..m.dim() {
            for b in 0..nn {
                if gm.object(a) == gn.object(b) {
                    expected.push(a * nn + b);
                    grades.push((gm.object(a), g.mul(gm.grade(a), gn.grade(b))));
                }
            }
        }
        let coordinate = LinMap::from_triplets(
            &image.basis,
            &ambient,
            expected.iter().enumerate().map(|(k, &i)| (i, k, Scalar::one())),
        );
        let labels_match = image.basis.len() == expected.len()
            && expected.iter().enumerate().all(|(k, &i)| image.basis.label(k) == ambient.label(i));
        if !labels_match || image.embedding != coordinate {
            return Err(RepError::DecompositionMismatch(format!(
                "truncated product of dimension {} differs from the object-matched pairs ({})",
                image.basis.len(),
                expected.len()
            )));
        }
        module = module.with_grading_unchecked(Bigrading { grades });
    }
    Ok(TensorProduct { module, embedding: image.embedding, projection: image.projection })
}

/// The unit object `H_t = ε_t(H)` with `σ_t(h)z = ε_t(h·z)`.
#[derive(Clone, Debug)]
pub struct TensorUnit {
    pub module: HModule,
    /// carrier → `H`.
    pub embedding: LinMap,
}

impl TensorUnit {
    /// The element of `H` represented by carrier vector `j`.
    pub fn element(&self, j: usize) -> Elem {
        self.embedding.column(j)
    }
}

pub fn unit_object(h: &Arc<QuantumGroupoid>) -> Result<TensorUnit, RepError> {
    let et = counit_target_map(h);
    let (carrier, embedding, projection) = match h.double_info() {
        None => {
            let image = image_basis(&et).map_err(RepError::LinAlg)?;
            let projection = image.projection.compose(&et);
            (image.basis, image.embedding, projection)
        }
        Some(info) => {
            let g = info.groupoid();
            let k = g.num_objects();
            let labels = (0..k).map(|x| Label::atom(format!("1^{}", g.object_id(x)))).collect();
            let carrier = LabeledBasis::new(labels).map_err(|e| RepError::Malformed(e.to_string()))?;
            let columns: Vec<Elem> = (0..k).map(|x| info.unit_component(x)).collect();
            let embedding = LinMap::from_columns(&carrier, h.basis(), &columns);
            if rank(&et) != k || (0..k).any(|x| et.apply_coeffs(&columns[x]) != columns[x]) {
                return Err(RepError::DecompositionMismatch(
                    "image of ε_t is not spanned by the unit components".into(),
                ));
            }
            // 1^x is the only component containing ⟨e_x|e_x⟩.
            let read = LinMap::from_triplets(
                h.basis(),
                &carrier,
                (0..k).map(|x| {
                    let e = g.identity(x);
                    (x, info.index(e, e).expect("identity pair"), Scalar::one())
                }),
            );
            (carrier, embedding, read.compose(&et))
        }
    };
    let action: Vec<LinMap> = (0..h.dim())
        .map(|i| {
            let left = LinMap::from_columns(
                h.basis(),
                h.basis(),
                &(0..h.dim()).map(|j| h.product(i, j).clone()).collect::<Vec<_>>(),
            );
            projection.compose(&left.compose(&embedding))
        })
        .collect();
    let mut module = HModule::new(h.clone(), carrier, action)?;

    if let Some(info) = h.double_info() {
        let g = info.groupoid();
        // ⟨h|y⟩ ▷ 1^x = δ_{s(y),x} δ_{h,e_{t(y)}} 1^{t(y)}
        for (i, &(lp, y)) in info.pairs().iter().enumerate() {
            let expected = LinMap::from_triplets(
                module.carrier(),
                module.carrier(),
                (lp == g.identity(g.tgt(y)))
                    .then_some((g.tgt(y), g.src(y), Scalar::one())),
            );
            if module.action_of_basis(i) != &expected {
                return Err(RepError::DecompositionMismatch(format!(
                    "unit object action of {} differs from the delta formula",
                    h.label(i)
                )));
            }
        }
        let grades = (0..g.num_objects()).map(|x| (x, g.identity(x))).collect();
        module = module.with_grading_unchecked(Bigrading { grades });
    }
    Ok(TensorUnit { module, embedding })
}

/// Left and right unit isomorphisms together with the objects they relate.
#[derive(Clone, Debug)]
pub struct Unitors {
    pub unit: TensorUnit,
    /// `I ⊗̂ M`.
    pub left_product: TensorProduct,
    /// `M ⊗̂ I`.
    pub right_product: TensorProduct,
    /// `l: I ⊗̂ M → M`.
    pub left: LinMap,
    /// `r: M ⊗̂ I → M`.
    pub right: LinMap,
}

/// Builds `l` and `r` from `z ⊗ a ↦ ρ(z)a` and `a ⊗ z ↦ ρ(S(z))a` on the
/// ambient products, after checking that both prescriptions factor through
/// the projection onto the truncated product.
pub fn unitors(m: &HModule) -> Result<Unitors, RepError> {
    let h = m.algebra().clone();
    let unit = unit_object(&h)?;
    let left_product = monoidal_product(&unit.module, m)?;
    let right_product = monoidal_product(m, &unit.module)?;
    let (k, d) = (unit.module.dim(), m.dim());

    let mut left_cols = Vec::with_capacity(k * d);
    for z in 0..k {
        let rz = m.rho(&unit.element(z));
        for a in 0..d {
            left_cols.push(rz.column(a));
        }
    }
    let left_ambient = LinMap::from_columns(left_product.embedding.codomain(), m.carrier(), &left_cols);
    let mut right_cols = vec![Elem::new(); k * d];
    for z in 0..k {
        let rsz = m.rho(&h.antipode(&unit.element(z)));
        for a in 0..d {
            right_cols[a * k + z] = rsz.column(a);
        }
    }
    let right_ambient =
        LinMap::from_columns(right_product.embedding.codomain(), m.carrier(), &right_cols);

    let p_left = left_product.embedding.compose(&left_product.projection);
    if left_ambient.compose(&p_left) != left_ambient {
        return Err(RepError::UnitorNotWellDefined("left"));
    }
    let p_right = right_product.embedding.compose(&right_product.projection);
    if right_ambient.compose(&p_right) != right_ambient {
        return Err(RepError::UnitorNotWellDefined("right"));
    }
    let left = left_ambient.compose(&left_product.embedding);
    let right = right_ambient.compose(&right_product.embedding);
    Ok(Unitors { unit, left_product, right_product, left, right })
}

/// `c(x) = ρ₂(R⁽²⁾)x⁽²⁾ ⊗ ρ₁(R⁽¹⁾)x⁽¹⁾` from `M ⊗̂ N` to `N ⊗̂ M`.
pub fn braiding_between(
    m: &HModule,
    n: &HModule,
    r: &Elem2,
    mn: &TensorProduct,
    nm: &TensorProduct,
) -> LinMap {
    let ambient_mn = mn.embedding.codomain();
    let ambient_nm = nm.projection.domain();
    let act = act_on_tensor(m, n, r, ambient_mn);
    let swap = swap_map_with_bases(m.dim(), n.dim(), ambient_mn, ambient_nm);
    nm.projection.compose(&swap.compose(&act.compose(&mn.embedding)))
}

#[derive(Clone, Debug)]
pub struct Braiding {
    pub source: TensorProduct,
    pub target: TensorProduct,
    pub map: LinMap,
}

pub fn braiding(m: &HModule, n: &HModule, r: &Elem2) -> Result<Braiding, RepError> {
    let source = monoidal_product(m, n)?;
    let target = monoidal_product(n, m)?;
    let map = braiding_between(m, n, r, &source, &target);
    Ok(Braiding { source, target, map })
}

/// `f ⊗̂ g` between truncated products.
pub fn tensor_morphisms(
    f: &LinMap,
    g: &LinMap,
    src: &TensorProduct,
    dst: &TensorProduct,
) -> LinMap {
    let ambient = tensor_map_with_bases(
        f,
        g,
        src.embedding.codomain(),
        dst.projection.domain(),
    );
    dst.projection.compose(&ambient.compose(&src.embedding))
}

/// The trivial associator `(A⊗̂B)⊗̂C → A⊗̂(B⊗̂C)`, realized through the
/// ambient triple tensor product.
pub fn associator(
    a: &LabeledBasis,
    c: &LabeledBasis,
    ab: &TensorProduct,
    ab_c: &TensorProduct,
    bc: &TensorProduct,
    a_bc: &TensorProduct,
) -> LinMap {
    let c_id = LinMap::identity(c);
    let a_id = LinMap::identity(a);
    let left_assoc = tensor_basis(ab.embedding.codomain(), c);
    let right_assoc = tensor_basis(a, bc.embedding.codomain());
    let widen = tensor_map_with_bases(&ab.embedding, &c_id, ab_c.embedding.codomain(), &left_assoc);
    let narrow =
        tensor_map_with_bases(&a_id, &bc.projection, &right_assoc, a_bc.projection.domain());
    // (a,b),c and a,(b,c) share flat indices; only the labels differ.
    let reassoc = LinMap::identity(&left_assoc).with_bases(&left_assoc, &right_assoc);
    a_bc.projection
        .compose(&narrow.compose(&reassoc.compose(&widen.compose(&ab_c.embedding))))
}
