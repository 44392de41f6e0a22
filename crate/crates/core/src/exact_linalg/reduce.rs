use std::collections::BTreeMap;

use super::{LabeledBasis, LinAlgError, LinMap, Scalar, SparseRow, SparseVec, Vector};

/// Reduced row echelon form of a sparse matrix.
#[derive(Clone, Debug)]
pub struct Rref {
    /// Nonzero rows ordered by pivot column; each has a leading 1 and zeros
    /// in every other pivot column.
    pub rows: Vec<SparseRow>,
    pub pivots: Vec<usize>,
}

type WorkRow = BTreeMap<usize, Scalar>;

fn eliminate(row: &mut WorkRow, col: usize, pivot_row: &[(usize, Scalar)]) {
    let Some(factor) = row.get(&col).cloned() else { return };
    for (j, v) in pivot_row {
        let delta = v * &factor;
        let entry = row.entry(*j).or_insert_with(Scalar::zero);
        *entry -= &delta;
        if entry.is_zero() {
            row.remove(j);
        }
    }
}

/// Row-reduces `rows` (each a sparse row over `ncols` columns).
pub fn rref(rows: &[SparseRow], ncols: usize) -> Rref {
    // pivot_of[c] = index into `pivot_rows` of the row led by column c.
    let mut pivot_of: Vec<Option<usize>> = vec![None; ncols];
    let mut pivot_rows: Vec<(usize, SparseRow)> = Vec::new();

    for input in rows {
        let mut work: WorkRow = input.iter().cloned().collect();
        let mut cursor = 0;
        loop {
            let next = work
                .range(cursor..)
                .map(|(c, _)| *c)
                .find(|c| pivot_of[*c].is_some());
            let Some(c) = next else { break };
            let p = pivot_of[c].expect("pivot present");
            eliminate(&mut work, c, &pivot_rows[p].1);
            cursor = c + 1;
        }
        let Some((&lead, lead_val)) = work.iter().next() else { continue };
        let inv = lead_val.recip().expect("nonzero leading entry");
        let normalized: SparseRow = work.into_iter().map(|(j, v)| (j, v * &inv)).collect();
        pivot_of[lead] = Some(pivot_rows.len());
        pivot_rows.push((lead, normalized));
    }

    pivot_rows.sort_by_key(|(c, _)| *c);
    for (i, (c, _)) in pivot_rows.iter().enumerate() {
        pivot_of[*c] = Some(i);
    }

    // Back substitution, highest pivot first; later rows are already final.
    for i in (0..pivot_rows.len()).rev() {
        let lead = pivot_rows[i].0;
        let mut work: WorkRow = pivot_rows[i].1.iter().cloned().collect();
        let cols: Vec<usize> = work
            .range(lead + 1..)
            .map(|(c, _)| *c)
            .filter(|c| pivot_of[*c].is_some())
            .collect();
        for c in cols {
            let p = pivot_of[c].expect("pivot present");
            eliminate(&mut work, c, &pivot_rows[p].1);
        }
        pivot_rows[i].1 = work.into_iter().collect();
    }

    let pivots = pivot_rows.iter().map(|(c, _)| *c).collect();
    let rows = pivot_rows.into_iter().map(|(_, r)| r).collect();
    Rref { rows, pivots }
}

pub fn rank(f: &LinMap) -> usize {
    rref(f.rows(), f.ncols()).pivots.len()
}

/// The image of an idempotent endomorphism.
#[derive(Clone, Debug)]
pub struct Image {
    /// Basis of the image; labels are those of the ambient pivot columns.
    pub basis: LabeledBasis,
    /// image → ambient.
    pub embedding: LinMap,
    /// ambient → image; `embedding ∘ projection = p`.
    pub projection: LinMap,
}

/// Factors an idempotent `p` as `embedding ∘ projection`, with the image
/// spanned by the first linearly independent columns of `p`.
pub fn image_basis(p: &LinMap) -> Result<Image, LinAlgError> {
    assert!(p.domain().same_as(p.codomain()), "image_basis needs an endomorphism");
    let pp = p.compose(p);
    if let Some((row, col)) = pp.first_difference(p) {
        return Err(LinAlgError::NotIdempotent { row, col });
    }
    Ok(image_of_idempotent(p))
}

/// As [`image_basis`] without the idempotence check, for callers that
/// establish it by construction.
pub(crate) fn image_of_idempotent(p: &LinMap) -> Image {
    let ambient = p.domain();
    let r = rref(p.rows(), p.ncols());
    let labels = r.pivots.iter().map(|&c| ambient.label(c).clone()).collect();
    let basis = LabeledBasis::new(labels).expect("pivot labels are distinct");
    let embedding = p.select_columns(&r.pivots, &basis);
    let projection = LinMap::from_sorted_rows(ambient, &basis, r.rows);
    Image { basis, embedding, projection }
}

/// A particular solution of a linear system plus the dimension of its
/// solution space.
#[derive(Clone, Debug)]
pub struct LinearSolution {
    pub solution: SparseVec<usize>,
    pub nullity: usize,
}

/// Solves `rows · u = rhs` for `u` with `ncols` unknowns. Free variables are
/// set to zero.
pub fn solve_linear(
    rows: &[SparseRow],
    rhs: &[Scalar],
    ncols: usize,
) -> Result<LinearSolution, LinAlgError> {
    assert_eq!(rows.len(), rhs.len(), "one right-hand side per equation");
    let augmented: Vec<SparseRow> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            if !b.is_zero() {
                row.push((ncols, b.clone()));
            }
            row
        })
        .collect();
    let red = rref(&augmented, ncols + 1);
    if red.pivots.last() == Some(&ncols) {
        return Err(LinAlgError::NoSolution);
    }
    let solution = red
        .rows
        .iter()
        .zip(&red.pivots)
        .filter_map(|(row, &p)| {
            row.iter().find(|(c, _)| *c == ncols).map(|(_, v)| (p, v.clone()))
        })
        .collect();
    Ok(LinearSolution { solution, nullity: ncols - red.pivots.len() })
}

/// Some `u` with `f(u) = v`.
pub fn solve(f: &LinMap, v: &Vector) -> Result<Vector, LinAlgError> {
    assert!(v.basis().same_as(f.codomain()), "solve: basis mismatch");
    let rhs = v.to_dense();
    let sol = solve_linear(f.rows(), &rhs, f.ncols())?;
    Ok(Vector::from_coeffs(f.domain(), sol.solution))
}

pub fn inverse(f: &LinMap) -> Result<LinMap, LinAlgError> {
    let n = f.ncols();
    if f.nrows() != n {
        return Err(LinAlgError::Singular);
    }
    let augmented: Vec<SparseRow> = f
        .rows()
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.push((n + i, Scalar::one()));
            row
        })
        .collect();
    let red = rref(&augmented, 2 * n);
    if red.pivots.len() < n || (n > 0 && red.pivots[n - 1] >= n) {
        return Err(LinAlgError::Singular);
    }
    let rows = red
        .rows
        .into_iter()
        .map(|r| r.into_iter().filter(|(c, _)| *c >= n).map(|(c, v)| (c - n, v)).collect())
        .collect();
    Ok(LinMap::from_sorted_rows(f.codomain(), f.domain(), rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::Label;

    fn basis(n: usize) -> LabeledBasis {
        LabeledBasis::new((0..n).map(|i| Label::atom(format!("b{i}"))).collect()).unwrap()
    }

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn diag(b: &LabeledBasis, d: &[i64]) -> LinMap {
        LinMap::from_triplets(b, b, d.iter().enumerate().map(|(i, v)| (i, i, s(*v))))
    }

    #[test]
    fn image_of_identity_is_everything() {
        let b = basis(3);
        let im = image_basis(&LinMap::identity(&b)).unwrap();
        assert_eq!(im.basis.len(), 3);
        assert_eq!(im.embedding.to_dense(), LinMap::identity(&b).to_dense());
    }

    #[test]
    fn image_of_zero_is_empty() {
        let b = basis(3);
        let im = image_basis(&LinMap::zero(&b, &b)).unwrap();
        assert!(im.basis.is_empty());
    }

    #[test]
    fn image_of_coordinate_projection() {
        let b = basis(4);
        let p = diag(&b, &[1, 1, 0, 0]);
        let im = image_basis(&p).unwrap();
        assert_eq!(im.basis.labels(), &b.labels()[..2]);
        assert_eq!(im.embedding.compose(&im.projection), p);
        assert_eq!(im.projection.compose(&im.embedding), LinMap::identity(&im.basis));
    }

    #[test]
    fn image_of_oblique_projection() {
        let b = basis(2);
        // p(e0) = e0, p(e1) = e0: idempotent of rank 1
        let p = LinMap::from_dense(&b, &b, &[vec![s(1), s(1)], vec![s(0), s(0)]]).unwrap();
        let im = image_basis(&p).unwrap();
        assert_eq!(im.basis.len(), 1);
        assert_eq!(im.embedding.compose(&im.projection), p);
    }

    #[test]
    fn non_idempotent_rejected() {
        let b = basis(2);
        assert!(matches!(
            image_basis(&diag(&b, &[2, 1])),
            Err(LinAlgError::NotIdempotent { row: 0, col: 0 })
        ));
    }

    #[test]
    fn solve_identity_and_scaling() {
        let b = basis(2);
        let v = Vector::from_dense(&b, &[s(3), s(-1)]);
        assert_eq!(solve(&LinMap::identity(&b), &v).unwrap(), v);
        let two = LinMap::scalar(&b, &s(2));
        let u = solve(&two, &v).unwrap();
        assert_eq!(u.to_dense(), vec![Scalar::from_ratio(3, 2), Scalar::from_ratio(-1, 2)]);
    }

    #[test]
    fn solve_outside_image() {
        let b = basis(2);
        let e2 = Vector::basis_vector(&b, 1);
        assert_eq!(solve(&diag(&b, &[1, 0]), &e2), Err(LinAlgError::NoSolution));
    }

    #[test]
    fn nullity_reported() {
        // x + y = 1 over two unknowns
        let sol = solve_linear(&[vec![(0, s(1)), (1, s(1))]], &[s(1)], 2).unwrap();
        assert_eq!(sol.nullity, 1);
        assert_eq!(sol.solution.coeff(&0), s(1));
    }

    #[test]
    fn inverse_roundtrip() {
        let b = basis(2);
        let f = LinMap::from_dense(&b, &b, &[vec![s(2), s(1)], vec![s(1), s(1)]]).unwrap();
        let g = inverse(&f).unwrap();
        assert_eq!(f.compose(&g), LinMap::identity(&b));
        assert_eq!(inverse(&diag(&b, &[1, 0])), Err(LinAlgError::Singular));
    }

    #[test]
    fn rref_is_reduced() {
        let rows = vec![
            vec![(0, s(2)), (1, s(4)), (2, s(2))],
            vec![(0, s(1)), (2, s(3))],
            vec![(1, s(1)), (2, s(-1))],
        ];
        let r = rref(&rows, 3);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rows[0], vec![(0, s(1)), (2, s(3))]);
        assert_eq!(r.rows[1], vec![(1, s(1)), (2, s(-1))]);
    }
}
