use std::collections::HashMap;

use super::{DoubleInfo, Elem, Elem2, QuantumGroupoid, RMatrix, WeakHopfError};
use crate::exact_linalg::{solve_linear, Label, LabeledBasis, LinAlgError, Scalar, SparseRow};
use crate::groupoid::Groupoid;

/// The groupoid algebra `k[𝒢]` with `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn groupoid_algebra(g: &Groupoid) -> Result<QuantumGroupoid, WeakHopfError> {
    g.ensure_valid()?;
    let n = g.num_morphisms();
    let basis = LabeledBasis::new((0..n).map(|m| Label::atom(g.morphism_id(m))).collect())
        .expect("morphism ids are distinct");
    let mult = (0..n * n)
        .map(|ij| match g.compose(ij / n, ij % n) {
            Some(k) => Elem::unit(k),
            None => Elem::new(),
        })
        .collect();
    let unit = (0..g.num_objects()).map(|x| (g.identity(x), Scalar::one())).collect();
    let comult = (0..n).map(|m| Elem2::unit((m, m))).collect();
    let counit = vec![Scalar::one(); n];
    let antipode = (0..n).map(|m| Elem::unit(g.inverse(m))).collect();
    QuantumGroupoid::new(basis, mult, unit, comult, counit, antipode)
}

/// The Drinfeld double with its R-matrix. `rbar_nullity` is the dimension of
/// the solution space of the R-bar equations (0 means R-bar is unique).
#[derive(Clone, Debug)]
pub struct DrinfeldDouble {
    pub algebra: QuantumGroupoid,
    pub r_matrix: RMatrix,
    pub rbar_nullity: usize,
}

pub fn pair_label(g: &Groupoid, loop_: usize, x: usize) -> Label {
    Label::atom(format!("<{}|{}>", g.morphism_id(loop_), g.morphism_id(x)))
}

/// The double together with its R-matrix and the solved R̄.
pub fn drinfeld_double(g: &Groupoid) -> Result<DrinfeldDouble, WeakHopfError> {
    let algebra = double_algebra(g)?;
    let r = algebra.double_info().expect("just attached").r_element();
    let (rbar, rbar_nullity) = solve_rbar(&algebra, &r)?;
    Ok(DrinfeldDouble { algebra, r_matrix: RMatrix { r, rbar }, rbar_nullity })
}

/// Builds `D(k[𝒢])` on the basis `⟨g|x⟩` with `s(g) = t(g) = t(x)`, ordered
/// by `g` then `x` in morphism order.
pub fn double_algebra(g: &Groupoid) -> Result<QuantumGroupoid, WeakHopfError> {
    g.ensure_valid()?;
    let mut pairs = Vec::new();
    for lp in 0..g.num_morphisms() {
        if g.src(lp) != g.tgt(lp) {
            continue;
        }
        for x in 0..g.num_morphisms() {
            if g.tgt(x) == g.tgt(lp) {
                pairs.push((lp, x));
            }
        }
    }
    let index: HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let idx = |lp: usize, x: usize| index[&(lp, x)];
    let n = pairs.len();
    let basis = LabeledBasis::new(pairs.iter().map(|&(lp, x)| pair_label(g, lp, x)).collect())
        .expect("pairs are distinct");

    let mut mult = vec![Elem::new(); n * n];
    for (i, &(gg, x)) in pairs.iter().enumerate() {
        // ⟨g|x⟩⟨h|y⟩ = δ_{x⁻¹gx, h} ⟨g|xy⟩
        let h = g.conj(g.inverse(x), gg);
        for (j, &(hh, y)) in pairs.iter().enumerate() {
            if hh == h {
                mult[i * n + j] = Elem::unit(idx(gg, g.mul(x, y)));
            }
        }
    }
    let unit = (0..g.num_objects())
        .flat_map(|obj| {
            let e = g.identity(obj);
            g.loops(obj).iter().map(move |&lp| (lp, e)).collect::<Vec<_>>()
        })
        .map(|(lp, e)| (idx(lp, e), Scalar::one()))
        .collect();
    let comult = pairs
        .iter()
        .map(|&(gg, x)| {
            let loops = g.loops(g.tgt(x));
            let mut d = Elem2::new();
            for &g1 in loops {
                for &g2 in loops {
                    if g.mul(g1, g2) == gg {
                        d.add_term((idx(g1, x), idx(g2, x)), &Scalar::one());
                    }
                }
            }
            d
        })
        .collect();
    let counit = pairs
        .iter()
        .map(|&(gg, x)| if gg == g.identity(g.tgt(x)) { Scalar::one() } else { Scalar::zero() })
        .collect();
    let antipode = pairs
        .iter()
        .map(|&(gg, x)| {
            let xi = g.inverse(x);
            Elem::unit(idx(g.conj(xi, g.inverse(gg)), xi))
        })
        .collect();

    Ok(QuantumGroupoid::new(basis, mult, unit, comult, counit, antipode)?
        .with_double(DoubleInfo { groupoid: g.clone(), pairs, index }))
}

/// Solves `R·R̄ = Δ^op(1)`, `R̄·R = Δ(1)` for `R̄` inside
/// `Δ(1)(H⊗H)Δ^op(1)`.
pub fn solve_rbar(h: &QuantumGroupoid, r: &Elem2) -> Result<(Elem2, usize), WeakHopfError> {
    let n = h.dim();
    let nn = n * n;
    let one = h.unit();
    let d1 = h.delta(one);
    let d1op = h.delta_op(one);
    let flat = |(a, b): (usize, usize)| a * n + b;

    // Unknown k is the coefficient of b_{k/n} ⊗ b_{k%n}; equation blocks are
    // R·X, X·R and Δ(1)XΔ^op(1) − X, each indexed by output pair.
    let mut rows: Vec<SparseRow> = vec![Vec::new(); 3 * nn];
    for k in 0..nn {
        let x = Elem2::unit((k / n, k % n));
        for (out, c) in h.mul2(r, &x).into_iter() {
            rows[flat(out)].push((k, c));
        }
        for (out, c) in h.mul2(&x, r).into_iter() {
            rows[nn + flat(out)].push((k, c));
        }
        let proj = h.mul2(&h.mul2(&d1, &x), &d1op).sub(&x);
        for (out, c) in proj.into_iter() {
            rows[2 * nn + flat(out)].push((k, c));
        }
    }
    let mut rhs = vec![Scalar::zero(); 3 * nn];
    for (out, c) in d1op.iter() {
        rhs[flat(*out)] = c.clone();
    }
    for (out, c) in d1.iter() {
        rhs[nn + flat(*out)] = c.clone();
    }
    match solve_linear(&rows, &rhs, nn) {
        Ok(sol) => {
            let rbar = sol.solution.map_keys(|&k| (k / n, k % n));
            Ok((rbar, sol.nullity))
        }
        Err(LinAlgError::NoSolution) => Err(WeakHopfError::RbarNotFound),
        Err(e) => Err(WeakHopfError::Malformed(e.to_string())),
    }
}
