use super::Gfa;
use crate::exact_linalg::{rank, LabeledBasis, LinMap, Scalar};
use crate::report::{first_witness, AxiomReport};
use crate::weak_hopf::Elem;

/// Report line names, one per axiom.
pub mod axiom {
    pub const A: &str = "(a) finite groupoid";
    pub const B: &str = "(b) associative unital algebra";
    pub const D: &str = "(d) φ is an action by algebra isomorphisms";
    pub const I: &str = "(i) A^x_g ⋆ A^x_h ⊆ A^x_gh";
    pub const II: &str = "(ii) products across objects vanish";
    pub const III: &str = "(iii) η(a⋆b,c) = η(a,b⋆c)";
    pub const IV: &str = "(iv) η is φ-invariant";
    pub const V: &str = "(v) φ(x)A^x_g ⊆ A^y_xgx⁻¹";
    pub const VI: &str = "(vi) η pairs A_g with A_g⁻¹ nondegenerately";
    pub const VII: &str = "(vii) twisted commutativity";
    pub const VIII: &str = "(viii) φ(g) = id on A_g";
    pub const IX: &str = "(ix) trace condition";

    pub const ALL: [&str; 12] = [A, B, D, I, II, III, IV, V, VI, VII, VIII, IX];
}

fn supported_in(v: &Elem, allowed: impl Fn(usize) -> bool) -> bool {
    v.keys().all(|&k| allowed(k))
}

/// Exhaustive check of every axiom on homogeneous basis tuples.
pub fn check_gfa(a: &Gfa) -> AxiomReport {
    let g = a.groupoid();
    let gr = a.grading();
    let n = a.dim();
    let l = |i: usize| a.label(i);
    let mid = |m: usize| g.morphism_id(m).to_string();
    let oid = |x: usize| g.object_id(x).to_string();
    let e = |i: usize| Elem::unit(i);
    let mut report = AxiomReport::new();

    let groupoid_report = g.validate();
    report.record(
        axiom::A,
        groupoid_report.lines.iter().find(|line| !line.passed).map(|line| {
            let mut w = vec![line.axiom.clone()];
            w.extend(line.witness.clone().unwrap_or_default());
            w
        }),
    );

    let assoc = first_witness(n * n * n, |ijk| {
        let (i, j, k) = (ijk / (n * n), (ijk / n) % n, ijk % n);
        let left = a.star(a.product(i, j), &e(k));
        let right = a.star(&e(i), a.product(j, k));
        (left != right).then(|| vec!["associativity".into(), l(i), l(j), l(k)])
    });
    let unit = || {
        first_witness(n, |i| {
            (a.star(a.unit(), &e(i)) != e(i) || a.star(&e(i), a.unit()) != e(i))
                .then(|| vec!["unit".into(), l(i)])
        })
    };
    report.record(axiom::B, assoc.or_else(unit));

    report.record(axiom::D, action_witness(a));

    report.record(
        axiom::I,
        first_witness(n * n, |ij| {
            let (i, j) = (ij / n, ij % n);
            let (x, gi) = gr.grades[i];
            let (y, gj) = gr.grades[j];
            if x != y {
                return None;
            }
            let target = (x, g.mul(gi, gj));
            (!supported_in(a.product(i, j), |k| gr.grades[k] == target)).then(|| vec![l(i), l(j)])
        }),
    );

    report.record(
        axiom::II,
        first_witness(n * n, |ij| {
            let (i, j) = (ij / n, ij % n);
            (gr.object(i) != gr.object(j) && !a.product(i, j).is_zero()).then(|| vec![l(i), l(j)])
        }),
    );

    report.record(
        axiom::III,
        first_witness(n * n * n, |ijk| {
            let (i, j, k) = (ijk / (n * n), (ijk / n) % n, ijk % n);
            let left = a.eta_value(a.product(i, j), &e(k));
            let right = a.eta_value(&e(i), a.product(j, k));
            (left != right).then(|| vec![l(i), l(j), l(k)])
        }),
    );

    let m = g.num_morphisms();
    report.record(
        axiom::IV,
        first_witness(m, |h| {
            let dom = gr.component(g.src(h));
            let images: Vec<Elem> = dom.iter().map(|&i| a.phi(h).column(i)).collect();
            for (p, &i) in dom.iter().enumerate() {
                for (q, &j) in dom.iter().enumerate() {
                    if a.eta_value(&images[p], &images[q]) != a.eta().get(i, j) {
                        return Some(vec![mid(h), l(i), l(j)]);
                    }
                }
            }
            None
        }),
    );

    report.record(
        axiom::V,
        first_witness(m, |x| {
            for i in gr.component(g.src(x)) {
                let target = (g.tgt(x), g.conj(x, gr.grade(i)));
                if !supported_in(&a.phi(x).column(i), |k| gr.grades[k] == target) {
                    return Some(vec![mid(x), l(i)]);
                }
            }
            None
        }),
    );

    report.record(axiom::VI, pairing_witness(a));

    report.record(
        axiom::VII,
        first_witness(n * n, |ij| {
            let (i, j) = (ij / n, ij % n);
            let (x, gi) = gr.grades[i];
            if gr.object(j) != x {
                return None;
            }
            let twisted = a.star(&a.phi(gi).column(j), &e(i));
            (a.product(i, j) != &twisted).then(|| vec![l(i), l(j)])
        }),
    );

    report.record(
        axiom::VIII,
        first_witness(n, |i| (a.phi(gr.grade(i)).column(i) != e(i)).then(|| vec![l(i)])),
    );

    // (x, g, h, c) in that order; c runs over the basis of A^x_{ghg⁻¹h⁻¹}.
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
    report.record(
        axiom::IX,
        first_witness(tuples.len(), |t| {
            let (x, gg, hh, c) = tuples[t];
            let lc = a.left_mult(&e(c));
            let left = restricted_trace(&lc.compose(a.phi(hh)), &gr.homogeneous(x, gg));
            let right =
                restricted_trace(&a.phi(g.inverse(gg)).compose(&lc), &gr.homogeneous(x, hh));
            (left != right).then(|| vec![oid(x), mid(gg), mid(hh), l(c)])
        }),
    );
    report
}

/// `Tr(π_S f π_S)` for a coordinate subspace `S`.
fn restricted_trace(f: &LinMap, support: &[usize]) -> Scalar {
    support.iter().map(|&i| f.get(i, i)).sum()
}

fn action_witness(a: &Gfa) -> Option<Vec<String>> {
    let g = a.groupoid();
    let gr = a.grading();
    let mid = |m: usize| g.morphism_id(m).to_string();
    let m = g.num_morphisms();
    let proj: Vec<LinMap> = (0..g.num_objects()).map(|x| a.object_projection(x)).collect();

    let support = first_witness(m, |x| {
        let p = a.phi(x);
        let restricted = proj[g.tgt(x)].compose(&p.compose(&proj[g.src(x)]));
        (&restricted != p).then(|| vec![mid(x), "not a map A^s(x) → A^t(x)".into()])
    });
    let identities = || {
        first_witness(g.num_objects(), |x| {
            let e = g.identity(x);
            (a.phi(e) != &proj[x]).then(|| vec![mid(e), "φ(e_x) ≠ id".into()])
        })
    };
    let functorial = || {
        first_witness(m * m, |hk| {
            let (h, k) = (hk / m, hk % m);
            let hk = g.compose(h, k)?;
            (a.phi(h).compose(a.phi(k)) != *a.phi(hk)).then(|| vec![mid(h), mid(k)])
        })
    };
    let multiplicative = || {
        first_witness(m, |x| {
            let dom = gr.component(g.src(x));
            let p = a.phi(x);
            for &i in &dom {
                for &j in &dom {
                    let left = p.apply_coeffs(a.product(i, j));
                    let right = a.star(&p.column(i), &p.column(j));
                    if left != right {
                        return Some(vec![mid(x), a.label(i), a.label(j)]);
                    }
                }
            }
            let unit_image = p.apply_coeffs(&a.unit_component(g.src(x)));
            (unit_image != a.unit_component(g.tgt(x))).then(|| vec![mid(x), "unit".into()])
        })
    };
    support.or_else(identities).or_else(functorial).or_else(multiplicative)
}

fn pairing_witness(a: &Gfa) -> Option<Vec<String>> {
    let g = a.groupoid();
    let gr = a.grading();
    let mut blocks = Vec::new();
    for x in 0..g.num_objects() {
        for &gg in g.loops(x) {
            blocks.push((x, gg));
        }
    }
    let b = blocks.len();
    first_witness(b * b, |pq| {
        let (x, gg) = blocks[pq / b];
        let (y, hh) = blocks[pq % b];
        let rows = gr.homogeneous(x, gg);
        let cols = gr.homogeneous(y, hh);
        let witness = || {
            vec![g.object_id(x).to_string(), g.morphism_id(gg).to_string(), g.morphism_id(hh).to_string()]
        };
        let entries: Vec<(usize, usize, Scalar)> = rows
            .iter()
            .enumerate()
            .flat_map(|(r, &i)| cols.iter().enumerate().map(move |(c, &j)| (r, c, i, j)))
            .map(|(r, c, i, j)| (r, c, a.eta().get(i, j)))
            .filter(|(_, _, v)| !v.is_zero())
            .collect();
        if x == y && g.compose(gg, hh) == Some(g.identity(x)) {
            if rows.len() != cols.len() {
                return Some(witness());
            }
            let dom = LabeledBasis::from_atoms(&(0..cols.len()).map(|c| c.to_string()).collect::<Vec<_>>())
                .expect("distinct");
            let cod = LabeledBasis::from_atoms(&(0..rows.len()).map(|r| r.to_string()).collect::<Vec<_>>())
                .expect("distinct");
            let block = LinMap::from_triplets(&dom, &cod, entries);
            (rank(&block) != rows.len()).then(witness)
        } else {
            (!entries.is_empty()).then(witness)
        }
    })
}
