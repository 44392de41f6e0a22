use std::collections::BTreeMap;
use std::fmt;

use super::{tensor_basis, Label, LabeledBasis, Scalar, SparseVec};

/// One matrix row: `(column, value)` pairs sorted by column, no zeros.
pub type SparseRow = Vec<(usize, Scalar)>;

/// An element of the span of a labeled basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Vector {
    basis: LabeledBasis,
    coeffs: SparseVec<usize>,
}

impl Vector {
    pub fn zero(basis: &LabeledBasis) -> Self {
        Vector { basis: basis.clone(), coeffs: SparseVec::new() }
    }

    pub fn basis_vector(basis: &LabeledBasis, i: usize) -> Self {
        assert!(i < basis.len(), "basis index out of range");
        Vector { basis: basis.clone(), coeffs: SparseVec::unit(i) }
    }

    pub fn from_coeffs(basis: &LabeledBasis, coeffs: SparseVec<usize>) -> Self {
        assert!(
            coeffs.keys().all(|&k| k < basis.len()),
            "coefficient index outside basis"
        );
        Vector { basis: basis.clone(), coeffs }
    }

    pub fn from_dense(basis: &LabeledBasis, values: &[Scalar]) -> Self {
        assert_eq!(values.len(), basis.len(), "dense vector length mismatch");
        let coeffs = values.iter().cloned().enumerate().collect();
        Vector { basis: basis.clone(), coeffs }
    }

    pub fn basis(&self) -> &LabeledBasis {
        &self.basis
    }

    pub fn coeffs(&self) -> &SparseVec<usize> {
        &self.coeffs
    }

    pub fn coeff(&self, label: &Label) -> Scalar {
        self.basis
            .index_of(label)
            .map(|i| self.coeffs.coeff(&i))
            .unwrap_or_else(Scalar::zero)
    }

    pub fn coeff_at(&self, i: usize) -> Scalar {
        self.coeffs.coeff(&i)
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        (0..self.basis.len()).map(|i| self.coeffs.coeff(&i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        Vector { basis: self.basis.clone(), coeffs: self.coeffs.scaled(c) }
    }

    pub fn add(&self, other: &Vector) -> Self {
        assert!(self.basis.same_as(&other.basis), "vector basis mismatch");
        let mut coeffs = self.coeffs.clone();
        coeffs.add_scaled(&other.coeffs, &Scalar::one());
        Vector { basis: self.basis.clone(), coeffs }
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}·{}", self.basis.label(*i))?;
        }
        Ok(())
    }
}

/// A linear map between labeled bases. The matrix is codomain × domain and is
/// stored row-compressed; only nonzero entries are kept.
#[derive(Clone)]
pub struct LinMap {
    domain: LabeledBasis,
    codomain: LabeledBasis,
    rows: Vec<SparseRow>,
}

impl PartialEq for LinMap {
    fn eq(&self, other: &Self) -> bool {
        self.domain.same_as(&other.domain)
            && self.codomain.same_as(&other.codomain)
            && self.rows == other.rows
    }
}

impl Eq for LinMap {}

fn normalize_row(mut row: Vec<(usize, Scalar)>) -> SparseRow {
    row.sort_by_key(|(c, _)| *c);
    let mut out: SparseRow = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv += &v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

fn accumulate(acc: &mut BTreeMap<usize, Scalar>, col: usize, v: Scalar) {
    use std::collections::btree_map::Entry;
    match acc.entry(col) {
        Entry::Vacant(e) => {
            e.insert(v);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += v;
        }
    }
}

fn finish_row(acc: BTreeMap<usize, Scalar>) -> SparseRow {
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

impl LinMap {
    pub fn zero(domain: &LabeledBasis, codomain: &LabeledBasis) -> Self {
        LinMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            rows: vec![Vec::new(); codomain.len()],
        }
    }

    pub fn identity(basis: &LabeledBasis) -> Self {
        let rows = (0..basis.len()).map(|i| vec![(i, Scalar::one())]).collect();
        LinMap { domain: basis.clone(), codomain: basis.clone(), rows }
    }

    /// `scale · id`.
    pub fn scalar(basis: &LabeledBasis, scale: &Scalar) -> Self {
        if scale.is_zero() {
            return Self::zero(basis, basis);
        }
        let rows = (0..basis.len()).map(|i| vec![(i, scale.clone())]).collect();
        LinMap { domain: basis.clone(), codomain: basis.clone(), rows }
    }

    /// Builds a map from a dense codomain × domain matrix.
    pub fn from_dense(
        domain: &LabeledBasis,
        codomain: &LabeledBasis,
        matrix: &[Vec<Scalar>],
    ) -> Result<Self, super::LinAlgError> {
        if matrix.len() != codomain.len() || matrix.iter().any(|r| r.len() != domain.len()) {
            return Err(super::LinAlgError::ShapeMismatch {
                expected: (codomain.len(), domain.len()),
                found: (matrix.len(), matrix.first().map_or(domain.len(), |r| r.len())),
            });
        }
        let rows = matrix
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect();
        Ok(LinMap { domain: domain.clone(), codomain: codomain.clone(), rows })
    }

    /// Builds a map from unsorted `(row, col, value)` triples; duplicates add.
    pub fn from_triplets(
        domain: &LabeledBasis,
        codomain: &LabeledBasis,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Self {
        let mut raw: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); codomain.len()];
        for (i, j, v) in entries {
            assert!(i < codomain.len() && j < domain.len(), "triplet out of range");
            if !v.is_zero() {
                raw[i].push((j, v));
            }
        }
        let rows = raw.into_iter().map(normalize_row).collect();
        LinMap { domain: domain.clone(), codomain: codomain.clone(), rows }
    }

    /// Builds a map from the images of the domain basis vectors.
    pub fn from_columns(
        domain: &LabeledBasis,
        codomain: &LabeledBasis,
        columns: &[SparseVec<usize>],
    ) -> Self {
        assert_eq!(columns.len(), domain.len(), "one column per domain vector");
        let entries = columns
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(&i, v)| (i, j, v.clone())));
        Self::from_triplets(domain, codomain, entries)
    }

    pub(crate) fn from_sorted_rows(
        domain: &LabeledBasis,
        codomain: &LabeledBasis,
        rows: Vec<SparseRow>,
    ) -> Self {
        debug_assert_eq!(rows.len(), codomain.len());
        LinMap { domain: domain.clone(), codomain: codomain.clone(), rows }
    }

    pub fn domain(&self) -> &LabeledBasis {
        &self.domain
    }

    pub fn codomain(&self) -> &LabeledBasis {
        &self.codomain
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.codomain.len()
    }

    pub fn ncols(&self) -> usize {
        self.domain.len()
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match self.rows[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(p) => self.rows[i][p].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        self.rows
            .iter()
            .map(|r| {
                let mut dense = vec![Scalar::zero(); self.ncols()];
                for (j, v) in r {
                    dense[*j] = v.clone();
                }
                dense
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    /// Same matrix over different (equal-sized) bases.
    pub fn with_bases(&self, domain: &LabeledBasis, codomain: &LabeledBasis) -> Self {
        assert_eq!(domain.len(), self.ncols(), "domain size mismatch");
        assert_eq!(codomain.len(), self.nrows(), "codomain size mismatch");
        LinMap { domain: domain.clone(), codomain: codomain.clone(), rows: self.rows.clone() }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinMap) -> LinMap {
        assert!(
            inner.codomain.same_as(&self.domain),
            "compose: inner codomain {:?} does not match outer domain {:?}",
            inner.codomain.len(),
            self.domain.len()
        );
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = BTreeMap::new();
                for (k, a) in row {
                    for (j, b) in &inner.rows[*k] {
                        accumulate(&mut acc, *j, a * b);
                    }
                }
                finish_row(acc)
            })
            .collect();
        LinMap { domain: inner.domain.clone(), codomain: self.codomain.clone(), rows }
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert!(v.basis().same_as(&self.domain), "apply: basis mismatch");
        Vector { basis: self.codomain.clone(), coeffs: self.apply_coeffs(v.coeffs()) }
    }

    pub fn apply_coeffs(&self, v: &SparseVec<usize>) -> SparseVec<usize> {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, row)| {
                let s: Scalar = row
                    .iter()
                    .filter_map(|(j, a)| v.get(j).map(|b| a * b))
                    .sum();
                (!s.is_zero()).then_some((i, s))
            })
            .collect()
    }

    /// Image of the `j`-th domain basis vector.
    pub fn column(&self, j: usize) -> SparseVec<usize> {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, row)| {
                row.binary_search_by_key(&j, |(c, _)| *c).ok().map(|p| (i, row[p].1.clone()))
            })
            .collect()
    }

    pub fn columns(&self) -> Vec<SparseVec<usize>> {
        let mut cols = vec![SparseVec::new(); self.ncols()];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                cols[*j].add_term(i, v);
            }
        }
        cols
    }

    pub fn add(&self, other: &LinMap) -> LinMap {
        self.lin_comb(other, &Scalar::one())
    }

    pub fn sub(&self, other: &LinMap) -> LinMap {
        self.lin_comb(other, &-Scalar::one())
    }

    /// `self + c·other`.
    pub fn lin_comb(&self, other: &LinMap, c: &Scalar) -> LinMap {
        assert!(
            self.domain.same_as(&other.domain) && self.codomain.same_as(&other.codomain),
            "lin_comb: shape mismatch"
        );
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut row: Vec<(usize, Scalar)> = a.clone();
                row.extend(b.iter().map(|(j, v)| (*j, v * c)));
                normalize_row(row)
            })
            .collect();
        LinMap { domain: self.domain.clone(), codomain: self.codomain.clone(), rows }
    }

    pub fn scaled(&self, c: &Scalar) -> LinMap {
        if c.is_zero() {
            return LinMap::zero(&self.domain, &self.codomain);
        }
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|(j, v)| (*j, v * c)).collect())
            .collect();
        LinMap { domain: self.domain.clone(), codomain: self.codomain.clone(), rows }
    }

    pub fn transpose(&self) -> LinMap {
        let mut rows: Vec<SparseRow> = vec![Vec::new(); self.ncols()];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                rows[*j].push((i, v.clone()));
            }
        }
        LinMap { domain: self.codomain.clone(), codomain: self.domain.clone(), rows }
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.nrows(), self.ncols(), "trace of a non-square map");
        (0..self.nrows()).map(|i| self.get(i, i)).sum()
    }

    /// Row and column of the first differing entry, in row-major order.
    pub fn first_difference(&self, other: &LinMap) -> Option<(usize, usize)> {
        assert_eq!(
            (self.nrows(), self.ncols()),
            (other.nrows(), other.ncols()),
            "first_difference: shape mismatch"
        );
        for (i, (a, b)) in self.rows.iter().zip(&other.rows).enumerate() {
            if a != b {
                let diff = normalize_row(
                    a.iter().cloned().chain(b.iter().map(|(j, v)| (*j, -v))).collect(),
                );
                return Some((i, diff[0].0));
            }
        }
        None
    }

    /// Same as `first_difference`, reported with labels.
    pub fn first_difference_labels(&self, other: &LinMap) -> Option<(Label, Label)> {
        self.first_difference(other)
            .map(|(i, j)| (self.codomain.label(i).clone(), self.domain.label(j).clone()))
    }

    /// Keeps the listed rows (in the given order) under a new codomain basis.
    pub fn select_rows(&self, rows: &[usize], codomain: &LabeledBasis) -> LinMap {
        assert_eq!(rows.len(), codomain.len(), "select_rows: basis size mismatch");
        let rows = rows.iter().map(|&i| self.rows[i].clone()).collect();
        LinMap { domain: self.domain.clone(), codomain: codomain.clone(), rows }
    }

    /// Keeps the listed columns (in the given order) under a new domain basis.
    pub fn select_columns(&self, cols: &[usize], domain: &LabeledBasis) -> LinMap {
        assert_eq!(cols.len(), domain.len(), "select_columns: basis size mismatch");
        let mut position = vec![None; self.ncols()];
        for (new, &old) in cols.iter().enumerate() {
            position[old] = Some(new);
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                normalize_row(
                    r.iter()
                        .filter_map(|(j, v)| position[*j].map(|p| (p, v.clone())))
                        .collect(),
                )
            })
            .collect();
        LinMap { domain: domain.clone(), codomain: self.codomain.clone(), rows }
    }
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinMap {}x{}", self.nrows(), self.ncols())?;
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Kronecker product `f ⊗ g`, ordered consistently with [`tensor_basis`].
pub fn tensor_map(f: &LinMap, g: &LinMap) -> LinMap {
    let domain = tensor_basis(&f.domain, &g.domain);
    let codomain = tensor_basis(&f.codomain, &g.codomain);
    tensor_map_with_bases(f, g, &domain, &codomain)
}

/// Kronecker product over caller-supplied tensor bases; avoids rebuilding
/// large pair bases in hot loops.
pub fn tensor_map_with_bases(
    f: &LinMap,
    g: &LinMap,
    domain: &LabeledBasis,
    codomain: &LabeledBasis,
) -> LinMap {
    assert_eq!(domain.len(), f.ncols() * g.ncols(), "tensor domain size");
    assert_eq!(codomain.len(), f.nrows() * g.nrows(), "tensor codomain size");
    let gn = g.ncols();
    let mut rows = Vec::with_capacity(codomain.len());
    for frow in &f.rows {
        for grow in &g.rows {
            let mut row = Vec::with_capacity(frow.len() * grow.len());
            for (j1, a) in frow {
                for (j2, b) in grow {
                    row.push((j1 * gn + j2, a * b));
                }
            }
            rows.push(row);
        }
    }
    LinMap { domain: domain.clone(), codomain: codomain.clone(), rows }
}

/// The transpose, read as the dual map `f*: V* → U*` on the dual bases.
pub fn dual_map(f: &LinMap) -> LinMap {
    f.transpose()
}

/// The swap `a ⊗ b ↦ b ⊗ a` between `b1 ⊗ b2` and `b2 ⊗ b1`.
pub fn swap_map(b1: &LabeledBasis, b2: &LabeledBasis) -> LinMap {
    let domain = tensor_basis(b1, b2);
    let codomain = tensor_basis(b2, b1);
    swap_map_with_bases(b1.len(), b2.len(), &domain, &codomain)
}

pub fn swap_map_with_bases(
    n1: usize,
    n2: usize,
    domain: &LabeledBasis,
    codomain: &LabeledBasis,
) -> LinMap {
    let rows = (0..n2)
        .flat_map(|j| (0..n1).map(move |i| vec![(i * n2 + j, Scalar::one())]))
        .collect();
    LinMap { domain: domain.clone(), codomain: codomain.clone(), rows }
}
