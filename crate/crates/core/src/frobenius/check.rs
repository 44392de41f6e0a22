use super::FrobeniusObjectData;
use crate::exact_linalg::{inverse, LinMap, Scalar};
use crate::rep_cat::{
    associator, braiding_between, h_linearity_witness, monoidal_product, tensor_morphisms,
    unitors, TensorProduct, Unitors,
};
use crate::report::{first_witness, AxiomReport};
use crate::weak_hopf::Elem;

/// Report line names.
pub mod law {
    pub const M_LINEAR: &str = "m is H-linear";
    pub const MU_LINEAR: &str = "μ is H-linear";
    pub const ASSOCIATIVITY: &str = "m∘(id⊗m)∘Φ = m∘(m⊗id)";
    pub const LEFT_UNIT: &str = "m∘(μ⊗id) = l";
    pub const RIGHT_UNIT: &str = "m∘(id⊗μ) = r";
    pub const COMMUTATIVITY: &str = "m∘c = m";

    pub const DELTA_LINEAR: &str = "Δ is H-linear";
    pub const EPS_LINEAR: &str = "ε is H-linear";
    pub const COASSOCIATIVITY: &str = "(id⊗Δ)∘Δ = Φ∘(Δ⊗id)∘Δ";
    pub const LEFT_COUNIT: &str = "l∘(ε⊗id)∘Δ = id";
    pub const RIGHT_COUNIT: &str = "r∘(id⊗ε)∘Δ = id";
    pub const COCOMMUTATIVITY: &str = "c∘Δ = Δ";

    pub const FROBENIUS_LEFT: &str = "Δ∘m = (m⊗id)∘Φ⁻¹∘(id⊗Δ)";
    pub const FROBENIUS_RIGHT: &str = "Δ∘m = (id⊗m)∘Φ∘(Δ⊗id)";

    pub const CONDITION2: &str = "condition (2) trace identity";
}

/// First column on which two parallel maps differ, as `[input, output]`.
fn map_witness(left: &LinMap, right: &LinMap) -> Option<Vec<String>> {
    left.first_difference_labels(right).map(|(row, col)| vec![col.to_string(), row.to_string()])
}

/// `(A⊗̂A)⊗̂A`, `A⊗̂(A⊗̂A)` and the associator between them.
struct Cubes {
    left: TensorProduct,
    right: TensorProduct,
    phi: LinMap,
}

impl Cubes {
    fn new(f: &FrobeniusObjectData) -> Self {
        let a = f.module();
        let aa = f.square();
        let left = monoidal_product(&aa.module, a).expect("square and A share the algebra");
        let right = monoidal_product(a, &aa.module).expect("square and A share the algebra");
        let phi = associator(a.carrier(), a.carrier(), aa, &left, aa, &right);
        Cubes { left, right, phi }
    }

    fn phi_inverse(&self) -> LinMap {
        inverse(&self.phi).expect("the associator is a relabeling")
    }
}

fn unitors_of(f: &FrobeniusObjectData) -> Unitors {
    unitors(f.module()).expect("unitors of a graded module over a double")
}

fn braiding_aa(f: &FrobeniusObjectData) -> LinMap {
    let sq = f.square();
    braiding_between(f.module(), f.module(), f.r_element(), sq, sq)
}

/// H-linearity of `m` and `μ`, associativity, both unit laws and
/// commutativity, each as an exact matrix identity.
pub fn check_algebra_object(f: &FrobeniusObjectData) -> AxiomReport {
    let a = f.module();
    let sq = f.square();
    let id = LinMap::identity(a.carrier());
    let cubes = Cubes::new(f);
    let un = unitors_of(f);
    let mut report = AxiomReport::new();

    report.record(law::M_LINEAR, h_linearity_witness(f.m(), &sq.module, a));
    report.record(law::MU_LINEAR, h_linearity_witness(f.mu(), &f.unit_object().module, a));

    let id_m = tensor_morphisms(&id, f.m(), &cubes.right, sq);
    let m_id = tensor_morphisms(f.m(), &id, &cubes.left, sq);
    let lhs = f.m().compose(&id_m.compose(&cubes.phi));
    let rhs = f.m().compose(&m_id);
    report.record(law::ASSOCIATIVITY, map_witness(&lhs, &rhs));

    let mu_id = tensor_morphisms(f.mu(), &id, &un.left_product, sq);
    report.record(law::LEFT_UNIT, map_witness(&f.m().compose(&mu_id), &un.left));
    let id_mu = tensor_morphisms(&id, f.mu(), &un.right_product, sq);
    report.record(law::RIGHT_UNIT, map_witness(&f.m().compose(&id_mu), &un.right));

    report.record(law::COMMUTATIVITY, map_witness(&f.m().compose(&braiding_aa(f)), f.m()));
    report
}

/// H-linearity of `Δ` and `ε`, coassociativity, both counit laws and
/// co-commutativity.
pub fn check_coalgebra_object(f: &FrobeniusObjectData) -> AxiomReport {
    let a = f.module();
    let sq = f.square();
    let id = LinMap::identity(a.carrier());
    let cubes = Cubes::new(f);
    let un = unitors_of(f);
    let mut report = AxiomReport::new();

    report.record(law::DELTA_LINEAR, h_linearity_witness(f.delta(), a, &sq.module));
    report.record(law::EPS_LINEAR, h_linearity_witness(f.eps(), a, &f.unit_object().module));

    let id_d = tensor_morphisms(&id, f.delta(), sq, &cubes.right);
    let d_id = tensor_morphisms(f.delta(), &id, sq, &cubes.left);
    let lhs = id_d.compose(f.delta());
    let rhs = cubes.phi.compose(&d_id.compose(f.delta()));
    report.record(law::COASSOCIATIVITY, map_witness(&lhs, &rhs));

    let eps_id = tensor_morphisms(f.eps(), &id, sq, &un.left_product);
    report.record(law::LEFT_COUNIT, map_witness(&un.left.compose(&eps_id.compose(f.delta())), &id));
    let id_eps = tensor_morphisms(&id, f.eps(), sq, &un.right_product);
    report.record(law::RIGHT_COUNIT, map_witness(&un.right.compose(&id_eps.compose(f.delta())), &id));

    report.record(law::COCOMMUTATIVITY, map_witness(&braiding_aa(f).compose(f.delta()), f.delta()));
    report
}

/// Both Frobenius relations as maps `A⊗̂A → A⊗̂A`.
pub fn check_frobenius_object(f: &FrobeniusObjectData) -> AxiomReport {
    let a = f.module();
    let sq = f.square();
    let id = LinMap::identity(a.carrier());
    let cubes = Cubes::new(f);
    let dm = f.delta().compose(f.m());
    let mut report = AxiomReport::new();

    let id_d = tensor_morphisms(&id, f.delta(), sq, &cubes.right);
    let m_id = tensor_morphisms(f.m(), &id, &cubes.left, sq);
    let left = m_id.compose(&cubes.phi_inverse().compose(&id_d));
    report.record(law::FROBENIUS_LEFT, map_witness(&dm, &left));

    let d_id = tensor_morphisms(f.delta(), &id, sq, &cubes.left);
    let id_m = tensor_morphisms(&id, f.m(), &cubes.right, sq);
    let right = id_m.compose(&cubes.phi.compose(&d_id));
    report.record(law::FROBENIUS_RIGHT, map_witness(&dm, &right));
    report
}

/// `Σ_x Σ_{g ∈ Γ^x} ρ(⟨g|g⟩) = id_A`.
pub fn check_condition1(f: &FrobeniusObjectData) -> bool {
    let a = f.module();
    let info = a.algebra().double_info().expect("checked at construction");
    let g = info.groupoid();
    let sum: Elem = (0..g.num_objects())
        .flat_map(|x| g.loops(x).iter().map(|&lp| (info.index(lp, lp).expect("loop pair"), Scalar::one())))
        .collect();
    a.rho(&sum) == LinMap::identity(a.carrier())
}

/// `Tr(l_c∘ρ(⟨hgh⁻¹|h⟩)) = Tr(ρ(⟨h|g⁻¹⟩)∘l_c∘ρ(⟨h|e_x⟩))` for every object
/// `x`, all `g, h ∈ Γ^x` and every basis vector `c` of
/// `ρ(⟨ghg⁻¹h⁻¹|e_x⟩)A`, where `l_c(v) = m(c⊗v)` on `ρ(1^x)A`. Witnesses are
/// `[x, g, h, c]`, searched in that order.
pub fn check_condition2(f: &FrobeniusObjectData) -> AxiomReport {
    let a = f.module();
    let info = a.algebra().double_info().expect("checked at construction");
    let g = info.groupoid();
    let gr = a.grading().expect("graded at construction");
    let sq = f.square();
    let pair_index = |i: usize, j: usize| {
        sq.projection.column(i * a.dim() + j).into_iter().next().map(|(k, _)| k)
    };

    let mut tuples = Vec::new();
    for x in 0..g.num_objects() {
        for &gg in g.loops(x) {
            for &hh in g.loops(x) {
                let comm = g.mul(g.mul(gg, hh), g.mul(g.inverse(gg), g.inverse(hh)));
                for c in gr.homogeneous(x, comm) {
                    tuples.push((x, gg, hh, c));
                }
            }
        }
    }
    let rho_pair = |lp: usize, y: usize| a.action_of_basis(info.index(lp, y).expect("pair in basis"));
    let mut report = AxiomReport::new();
    report.record(
        law::CONDITION2,
        first_witness(tuples.len(), |t| {
            let (x, gg, hh, c) = tuples[t];
            let cols: Vec<Elem> = (0..a.dim())
                .map(|j| match (gr.object(j) == x).then(|| pair_index(c, j)).flatten() {
                    Some(k) => f.m().column(k),
                    None => Elem::new(),
                })
                .collect();
            let lc = LinMap::from_columns(a.carrier(), a.carrier(), &cols);
            let left = lc.compose(rho_pair(g.conj(hh, gg), hh)).trace();
            let right = rho_pair(hh, g.inverse(gg))
                .compose(&lc.compose(rho_pair(hh, g.identity(x))))
                .trace();
            (left != right).then(|| {
                vec![
                    g.object_id(x).to_string(),
                    g.morphism_id(gg).to_string(),
                    g.morphism_id(hh).to_string(),
                    a.carrier().label(c).to_string(),
                ]
            })
        }),
    );
    report
}
