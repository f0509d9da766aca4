//! Subspaces of `Q^n` in reduced row echelon form.
//!
//! The RREF is the canonical form used everywhere in the crate: two
//! subspaces are equal iff their `Subspace` values are equal, membership is
//! reduction to zero, and quotient representatives are residues after
//! reduction.

use crate::scalar::{one, Scalar};
use crate::svec::{self, SVec};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Incremental row-echelon accumulator: rows are kept monic and keyed by
/// pivot column; inserted rows are forward-reduced only, so building a large
/// system is cheap and back-substitution happens once at the end.
#[derive(Clone, Debug)]
pub struct RrefBuilder {
    ncols: usize,
    /// pivot column -> monic row with that leading column.
    rows: BTreeMap<usize, SVec>,
}

impl RrefBuilder {
    pub fn new(ncols: usize) -> Self {
        RrefBuilder { ncols, rows: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the current pivots; the residue is either zero
    /// or has a fresh pivot column.
    pub fn reduce(&self, row: SVec) -> SVec {
        let mut row = row;
        loop {
            let Some((lead, coeff)) = svec::leading(&row).map(|(i, c)| (i, c.clone())) else {
                return row;
            };
            match self.rows.get(&lead) {
                Some(pivot_row) => row = svec::add_scaled(&row, &(-coeff), pivot_row),
                None => return row,
            }
        }
    }

    /// Inserts a row; returns true iff the rank grew.
    pub fn insert(&mut self, row: SVec) -> bool {
        debug_assert!(row.iter().all(|(i, _)| *i < self.ncols));
        let row = self.reduce(row);
        match svec::leading(&row).map(|(i, c)| (i, c.clone())) {
            None => false,
            Some((lead, coeff)) => {
                let mut row = row;
                let inv = one() / coeff;
                svec::scale_in_place(&mut row, &inv);
                self.rows.insert(lead, row);
                true
            }
        }
    }

    /// Full back-substitution into canonical RREF.
    pub fn into_subspace(self) -> Subspace {
        let ncols = self.ncols;
        let mut rows: Vec<SVec> = self.rows.into_values().collect();
        // Rows are sorted by pivot column already (BTreeMap order).
        let pivots: Vec<usize> = rows.iter().map(|r| r[0].0).collect();
        for i in (0..rows.len()).rev() {
            for j in (0..i).rev() {
                if let Some(c) = svec::get(&rows[j], pivots[i]) {
                    let c = -c.clone();
                    rows[j] = svec::add_scaled(&rows[j], &c, &rows[i]);
                }
            }
        }
        Subspace { ncols, rows, pivots }
    }

    /// Basis of the solution space, treating the accumulated rows as
    /// homogeneous equations over `ncols` unknowns.
    pub fn kernel(self) -> Subspace {
        let ncols = self.ncols;
        let rref = self.into_subspace();
        let mut is_pivot = vec![false; ncols];
        for p in &rref.pivots {
            is_pivot[*p] = true;
        }
        let mut out = RrefBuilder::new(ncols);
        for free in 0..ncols {
            if is_pivot[free] {
                continue;
            }
            let mut v: SVec = Vec::new();
            for (row, p) in rref.rows.iter().zip(&rref.pivots) {
                if let Some(c) = svec::get(row, free) {
                    v.push((*p, -c.clone()));
                }
            }
            v.push((free, one()));
            v.sort_by_key(|(i, _)| *i);
            let grew = out.insert(v);
            debug_assert!(grew);
        }
        out.into_subspace()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ncols: usize,
    rows: Vec<SVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ncols: usize) -> Self {
        Subspace { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ncols: usize) -> Self {
        Self::from_rows(ncols, (0..ncols).map(svec::unit))
    }

    pub fn from_rows(ncols: usize, rows: impl IntoIterator<Item = SVec>) -> Self {
        let mut b = RrefBuilder::new(ncols);
        for r in rows {
            b.insert(r);
        }
        b.into_subspace()
    }

    pub fn span_of(ncols: usize, rows: &[SVec]) -> Self {
        Self::from_rows(ncols, rows.iter().cloned())
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Canonical residue of `v` modulo this subspace.
    pub fn reduce(&self, v: &SVec) -> SVec {
        let mut v = v.clone();
        for (row, p) in self.rows.iter().zip(&self.pivots) {
            if let Some(c) = svec::get(&v, *p) {
                let c = -c.clone();
                v = svec::add_scaled(&v, &c, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &SVec) -> bool {
        svec::is_zero(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    /// In canonical RREF the coordinate along row `i` is the entry of `v`
    /// at that row's pivot column.
    pub fn coords(&self, v: &SVec) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(
            self.pivots
                .iter()
                .map(|p| svec::get(v, *p).cloned().unwrap_or_else(Scalar::zero))
                .collect(),
        )
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ncols, other.ncols);
        Self::from_rows(self.ncols, self.rows.iter().chain(&other.rows).cloned())
    }

    /// Zassenhaus intersection.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ncols, other.ncols);
        let n = self.ncols;
        let mut b = RrefBuilder::new(2 * n);
        for r in &self.rows {
            let mut row = r.clone();
            row.extend(r.iter().map(|(i, c)| (i + n, c.clone())));
            b.insert(row);
        }
        for r in &other.rows {
            b.insert(r.clone());
        }
        let rref = b.into_subspace();
        let mut out = RrefBuilder::new(n);
        for row in rref.rows {
            if row.first().map(|(i, _)| *i >= n).unwrap_or(false) {
                out.insert(row.into_iter().map(|(i, c)| (i - n, c)).collect());
            }
        }
        out.into_subspace()
    }

    /// Representatives of a basis of `sup / self`; requires `self ⊆ sup`.
    /// The representatives are `sup` basis rows not absorbed by `self`,
    /// reduced to canonical residues.
    pub fn complement_in(&self, sup: &Subspace) -> Vec<SVec> {
        assert!(sup.contains_subspace(self), "complement_in requires containment");
        let mut b = RrefBuilder::new(self.ncols);
        for r in &self.rows {
            b.insert(r.clone());
        }
        let mut out = Vec::new();
        for r in &sup.rows {
            if b.insert(r.clone()) {
                out.push(self.reduce(r));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn v(entries: &[i64]) -> SVec {
        svec::from_dense(&entries.iter().map(|&x| int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        // rows (1 1), (1 1) -> kernel spanned by (1, -1) (canonicalized).
        let mut b = RrefBuilder::new(2);
        b.insert(v(&[1, 1]));
        b.insert(v(&[1, 1]));
        let k = b.kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&v(&[1, -1])));
        assert!(!k.contains(&v(&[1, 1])));
    }

    #[test]
    fn rref_is_canonical() {
        let a = Subspace::from_rows(3, [v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let b = Subspace::from_rows(3, [v(&[2, 5, 7]), v(&[1, 3, 4])]);
        assert_eq!(a, b);
    }

    #[test]
    fn intersection_dims() {
        // Two planes in Q^3 meet in a line.
        let a = Subspace::from_rows(3, [v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::from_rows(3, [v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&v(&[0, 1, 0])));
    }

    #[test]
    fn dimension_formula_holds() {
        let a = Subspace::from_rows(4, [v(&[1, 1, 0, 0]), v(&[0, 0, 1, 1])]);
        let b = Subspace::from_rows(4, [v(&[1, 1, 1, 1]), v(&[1, 0, 0, 0])]);
        assert_eq!(
            a.sum(&b).dim() + a.intersect(&b).dim(),
            a.dim() + b.dim()
        );
    }

    #[test]
    fn complement_has_right_size() {
        let sub = Subspace::from_rows(3, [v(&[1, 1, 0])]);
        let sup = Subspace::full(3);
        let comp = sub.complement_in(&sup);
        assert_eq!(comp.len(), 2);
    }
}
