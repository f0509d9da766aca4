//! Lie superalgebras given by sparse structure-constant tables.
//!
//! Brackets are stored only for basis pairs `i <= j`; the other half follows
//! from super-anticommutativity `[y,x] = -(-1)^{|x||y|}[x,y]`.

use crate::error::{CoreError, Result};
use crate::matrix::LinearMap;
use crate::scalar::{self, Scalar};
use crate::space::{Parity, SuperSpace};
use crate::subspace::{RrefBuilder, Subspace};
use crate::svec::{self, SVec};
use num_traits::Zero;
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub struct LieSuperalgebra {
    name: String,
    space: SuperSpace,
    table: BTreeMap<(usize, usize), SVec>,
}

impl LieSuperalgebra {
    /// Builds an algebra from a table defined on pairs `i <= j`, validating
    /// parity additivity and `[x,x] = 0` for even basis vectors. The Jacobi
    /// identity is *not* checked here; call [`check_jacobi`].
    ///
    /// [`check_jacobi`]: LieSuperalgebra::check_jacobi
    pub fn new(
        name: impl Into<String>,
        space: SuperSpace,
        table: BTreeMap<(usize, usize), SVec>,
    ) -> Result<Self> {
        let mut table = table;
        table.retain(|_, v| !svec::is_zero(v));
        for (&(i, j), v) in &table {
            assert!(i <= j && j < space.dim(), "table keys must satisfy i <= j < dim");
            let expected = space.parity(i) + space.parity(j);
            match space.parity_of_vec(v) {
                None => {}
                Some(p) if p == expected => {}
                Some(_) => return Err(CoreError::BadParity { i, j }),
            }
            if i == j && space.parity(i) == Parity::Even {
                return Err(CoreError::EvenSquare { i });
            }
        }
        Ok(LieSuperalgebra { name: name.into(), space, table })
    }

    /// Builds from a closure producing `[e_i, e_j]` for `i <= j`.
    pub fn from_fn(
        name: impl Into<String>,
        space: SuperSpace,
        mut f: impl FnMut(usize, usize) -> SVec,
    ) -> Result<Self> {
        let n = space.dim();
        let mut table = BTreeMap::new();
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                if !svec::is_zero(&v) {
                    table.insert((i, j), v);
                }
            }
        }
        Self::new(name, space, table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn sdim(&self) -> (usize, usize) {
        self.space.sdim()
    }

    pub fn table(&self) -> &BTreeMap<(usize, usize), SVec> {
        &self.table
    }

    /// `[e_i, e_j]` for arbitrary `i`, `j`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> SVec {
        if i <= j {
            self.table.get(&(i, j)).cloned().unwrap_or_default()
        } else {
            match self.table.get(&(j, i)) {
                None => SVec::new(),
                Some(v) => {
                    let sign = -self.space.parity(i).koszul_sign(self.space.parity(j));
                    svec::scale(v, &scalar::int(sign))
                }
            }
        }
    }

    pub fn bracket(&self, x: &SVec, y: &SVec) -> SVec {
        let mut out = SVec::new();
        for (i, xi) in x {
            for (j, yj) in y {
                let v = self.bracket_basis(*i, *j);
                if !svec::is_zero(&v) {
                    out = svec::add_scaled(&out, &(xi * yj), &v);
                }
            }
        }
        out
    }

    /// Adjoint operator of basis vector `i`.
    pub fn ad_basis(&self, i: usize) -> LinearMap {
        let n = self.dim();
        let cols = (0..n).map(|j| self.bracket_basis(i, j)).collect();
        LinearMap::from_cols(n, cols, self.space.parity(i))
    }

    /// Adjoint operator of a parity-homogeneous vector.
    pub fn ad(&self, x: &SVec) -> LinearMap {
        let parity = self.space.parity_of_vec(x).unwrap_or(Parity::Even);
        let n = self.dim();
        let cols = (0..n).map(|j| self.bracket(x, &svec::unit(j))).collect();
        LinearMap::from_cols(n, cols, parity)
    }

    /// Right-multiplication operator `x -> [x, e_j]`.
    pub fn right_mult_basis(&self, j: usize) -> LinearMap {
        let n = self.dim();
        let cols = (0..n).map(|i| self.bracket_basis(i, j)).collect();
        LinearMap::from_cols(n, cols, self.space.parity(j))
    }

    /// Verifies the super Jacobi identity on all basis triples `i <= j <= k`:
    /// `(-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0`.
    pub fn check_jacobi(&self) -> Result<()> {
        let n = self.dim();
        let p = |i: usize| self.space.parity(i);
        for i in 0..n {
            let ei = svec::unit(i);
            for j in i..n {
                let ej = svec::unit(j);
                let bij = self.bracket_basis(i, j);
                for k in j..n {
                    let ek = svec::unit(k);
                    let t1 = self.bracket(&ei, &self.bracket_basis(j, k));
                    let t2 = self.bracket(&ej, &self.bracket_basis(k, i));
                    let t3 = self.bracket(&ek, &bij);
                    let s1 = scalar::int(p(i).koszul_sign(p(k)));
                    let s2 = scalar::int(p(j).koszul_sign(p(i)));
                    let s3 = scalar::int(p(k).koszul_sign(p(j)));
                    let mut acc = svec::scale(&t1, &s1);
                    acc = svec::add_scaled(&acc, &s2, &t2);
                    acc = svec::add_scaled(&acc, &s3, &t3);
                    if !svec::is_zero(&acc) {
                        return Err(CoreError::Jacobi { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks that a linear map of the same dimension is a superderivation:
    /// `D[x,y] = [Dx,y] + (-1)^{|D||x|}[x,Dy]`.
    pub fn is_derivation(&self, d: &LinearMap) -> Result<()> {
        let n = self.dim();
        assert_eq!(d.domain(), n);
        assert_eq!(d.codomain(), n);
        for i in 0..n {
            let di = d.col(i);
            let sign = scalar::int(d.parity().koszul_sign(self.space.parity(i)));
            for j in i..n {
                let lhs = d.apply(&self.bracket_basis(i, j));
                let t1 = self.bracket(di, &svec::unit(j));
                let t2 = self.bracket(&svec::unit(i), d.col(j));
                let rhs = svec::add_scaled(&t1, &sign, &t2);
                if svec::add_scaled(&lhs, &scalar::int(-1), &rhs) != SVec::new() {
                    return Err(CoreError::NotDerivation { i, j });
                }
            }
        }
        Ok(())
    }

    /// Smallest ideal containing the given generators.
    pub fn ideal_generated(&self, gens: &Subspace) -> Subspace {
        let n = self.dim();
        let mut b = RrefBuilder::new(n);
        let mut queue: Vec<SVec> = Vec::new();
        for r in gens.rows() {
            if b.insert(r.clone()) {
                queue.push(r.clone());
            }
        }
        while let Some(x) = queue.pop() {
            for j in 0..n {
                let y = self.bracket(&x, &svec::unit(j));
                let red = b.reduce(y);
                if !svec::is_zero(&red) {
                    b.insert(red.clone());
                    queue.push(red);
                }
            }
        }
        b.into_subspace()
    }

    pub fn is_ideal(&self, sub: &Subspace) -> bool {
        sub.rows().iter().all(|r| {
            (0..self.dim()).all(|j| sub.contains(&self.bracket(r, &svec::unit(j))))
        })
    }

    pub fn is_subalgebra(&self, sub: &Subspace) -> bool {
        sub.rows()
            .iter()
            .enumerate()
            .all(|(i, r)| sub.rows()[i..].iter().all(|s| sub.contains(&self.bracket(r, s))))
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let mut b = RrefBuilder::new(n);
        for j in 0..n {
            // Rows of the right-multiplication operator as equations on x.
            let rm = self.right_mult_basis(j);
            for i in 0..n {
                let mut row: SVec = Vec::new();
                for (a, col) in rm.cols().iter().enumerate() {
                    if let Some(c) = svec::get(col, i) {
                        row.push((a, c.clone()));
                    }
                }
                b.insert(row);
            }
        }
        b.kernel()
    }

    pub fn derived(&self) -> Subspace {
        Subspace::from_rows(self.dim(), self.table.values().cloned())
    }

    pub fn supertrace_of_ad(&self, x: &SVec) -> Scalar {
        let ad = self.ad(x);
        let mut t = Scalar::zero();
        for i in 0..self.dim() {
            let sign = if self.space.parity(i) == Parity::Even { 1 } else { -1 };
            t += ad.entry(i, i) * scalar::int(sign);
        }
        t
    }

    /// Induced algebra on a bracket-closed subspace. Returns the algebra and
    /// the embedding (basis rows of `sub` as ambient vectors).
    pub fn subalgebra(&self, sub: &Subspace, name: impl Into<String>) -> Result<(Self, Vec<SVec>)> {
        let rows = sub.rows().to_vec();
        let mut basis = Vec::with_capacity(rows.len());
        for (i, r) in rows.iter().enumerate() {
            let p = self
                .space
                .try_parity_of_vec(r)
                .map_err(|_| CoreError::MixedParity { i })?
                .unwrap_or(Parity::Even);
            basis.push((format!("b{i}"), p));
        }
        let space = SuperSpace::new(basis);
        let mut table = BTreeMap::new();
        for i in 0..rows.len() {
            for j in i..rows.len() {
                let v = self.bracket(&rows[i], &rows[j]);
                if svec::is_zero(&v) {
                    continue;
                }
                let coords = sub.coords(&v).ok_or(CoreError::NotClosed { i, j })?;
                table.insert((i, j), svec::from_dense(&coords));
            }
        }
        let alg = LieSuperalgebra::new(name, space, table)?;
        Ok((alg, rows))
    }

    /// Quotient by an ideal, realized on the canonical complement basis.
    /// Returns the quotient and the chosen representatives.
    pub fn quotient(&self, ideal: &Subspace, name: impl Into<String>) -> Result<(Self, Vec<SVec>)> {
        assert!(self.is_ideal(ideal), "quotient requires an ideal");
        let reps = ideal.complement_in(&Subspace::full(self.dim()));
        let mut basis = Vec::with_capacity(reps.len());
        for (i, r) in reps.iter().enumerate() {
            let p = self
                .space
                .try_parity_of_vec(r)
                .ok()
                .flatten()
                .ok_or(CoreError::MixedParity { i })?;
            basis.push((format!("q{i}"), p));
        }
        let space = SuperSpace::new(basis);
        let mut table = BTreeMap::new();
        for i in 0..reps.len() {
            for j in i..reps.len() {
                let v = ideal.reduce(&self.bracket(&reps[i], &reps[j]));
                if svec::is_zero(&v) {
                    continue;
                }
                let coords = coords_in_basis(self.dim(), &reps, &v)
                    .ok_or(CoreError::NotClosed { i, j })?;
                table.insert((i, j), svec::from_dense(&coords));
            }
        }
        let alg = LieSuperalgebra::new(name, space, table)?;
        Ok((alg, reps))
    }

    /// Semidirect sum `ideal ⋊ sub`: the ideal occupies indices
    /// `0..ideal.dim()`, the subalgebra follows, and `action[k]` is the
    /// derivation of the ideal given by the `k`-th basis vector of `sub`.
    pub fn semidirect(
        name: impl Into<String>,
        ideal: &LieSuperalgebra,
        sub: &LieSuperalgebra,
        action: &[LinearMap],
    ) -> Result<Self> {
        assert_eq!(action.len(), sub.dim());
        let ni = ideal.dim();
        for (k, a) in action.iter().enumerate() {
            assert_eq!(a.domain(), ni);
            assert_eq!(a.parity(), sub.space().parity(k), "action parity mismatch");
            ideal.is_derivation(a)?;
        }
        let mut basis: Vec<(String, Parity)> = Vec::new();
        for i in 0..ni {
            basis.push((format!("i.{}", ideal.space.label(i)), ideal.space.parity(i)));
        }
        for k in 0..sub.dim() {
            basis.push((format!("s.{}", sub.space.label(k)), sub.space.parity(k)));
        }
        let space = SuperSpace::new(basis);
        let mut table = BTreeMap::new();
        for i in 0..ni {
            for j in i..ni {
                let v = ideal.bracket_basis(i, j);
                if !svec::is_zero(&v) {
                    table.insert((i, j), v);
                }
            }
        }
        for i in 0..ni {
            for k in 0..sub.dim() {
                // [e_i, s_k] = -(-1)^{|i||k|} action_k(e_i)
                let sign = -space.parity(i).koszul_sign(sub.space.parity(k));
                let v = svec::scale(&action[k].apply(&svec::unit(i)), &scalar::int(sign));
                if !svec::is_zero(&v) {
                    table.insert((i, ni + k), v);
                }
            }
        }
        for k in 0..sub.dim() {
            for l in k..sub.dim() {
                let v = sub.bracket_basis(k, l);
                if !svec::is_zero(&v) {
                    table.insert((ni + k, ni + l), svec::reindex(&v, |i| i + ni));
                }
            }
        }
        LieSuperalgebra::new(name, space, table)
    }

    /// Relabels basis vectors in place.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        let parities = self.space.parities().to_vec();
        self.space = SuperSpace::new(labels.into_iter().zip(parities).collect());
        self
    }
}

/// Coordinates of `v` in an arbitrary independent spanning set (not
/// necessarily RREF). Returns `None` when `v` is outside the span.
pub fn coords_in_basis(ncols: usize, basis: &[SVec], v: &SVec) -> Option<Vec<Scalar>> {
    // Augment each basis vector with a tracking unit vector.
    let m = basis.len();
    let mut b = RrefBuilder::new(ncols + m);
    for (k, r) in basis.iter().enumerate() {
        let mut row = r.clone();
        row.push((ncols + k, scalar::one()));
        let grew = b.insert(row);
        assert!(grew, "basis vectors must be independent");
    }
    let mut probe = v.clone();
    probe = b.reduce(probe);
    // The residue must have no support on the original coordinates.
    if probe.iter().any(|(i, _)| *i < ncols) {
        return None;
    }
    let mut coords = vec![scalar::zero(); m];
    for (i, c) in probe {
        coords[i - ncols] = -c;
    }
    Some(coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    /// sl(2): e, h, f with [h,e]=2e, [h,f]=-2f, [e,f]=h.
    pub fn sl2() -> LieSuperalgebra {
        let space = SuperSpace::new(vec![
            ("e".into(), Parity::Even),
            ("h".into(), Parity::Even),
            ("f".into(), Parity::Even),
        ]);
        let mut table = BTreeMap::new();
        table.insert((0, 1), vec![(0, int(-2))]);
        table.insert((0, 2), vec![(1, int(1))]);
        table.insert((1, 2), vec![(2, int(-2))]);
        LieSuperalgebra::new("sl(2)", space, table).unwrap()
    }

    #[test]
    fn sl2_jacobi() {
        sl2().check_jacobi().unwrap();
    }

    #[test]
    fn sl2_center_trivial() {
        assert_eq!(sl2().center().dim(), 0);
    }

    #[test]
    fn sl2_is_perfect() {
        assert_eq!(sl2().derived().dim(), 3);
    }

    #[test]
    fn antisymmetry_of_bracket_basis() {
        let g = sl2();
        let b01 = g.bracket_basis(0, 1);
        let b10 = g.bracket_basis(1, 0);
        assert_eq!(b10, svec::scale(&b01, &int(-1)));
    }

    #[test]
    fn ideal_generated_by_anything_is_whole_sl2() {
        let g = sl2();
        let gens = Subspace::from_rows(3, [svec::unit(0)]);
        assert_eq!(g.ideal_generated(&gens).dim(), 3);
    }

    #[test]
    fn coords_in_skew_basis() {
        let basis = vec![vec![(0, int(1)), (1, int(1))], vec![(1, int(1))]];
        let v = vec![(0, int(2)), (1, int(5))];
        let c = coords_in_basis(2, &basis, &v).unwrap();
        assert_eq!(c, vec![int(2), int(3)]);
    }

    #[test]
    fn quotient_of_gl1_extension() {
        // Heisenberg-like: [x, y] = z, z central; quotient by z is abelian.
        let space = SuperSpace::new(vec![
            ("x".into(), Parity::Odd),
            ("y".into(), Parity::Odd),
            ("z".into(), Parity::Even),
        ]);
        let mut table = BTreeMap::new();
        table.insert((0, 1), vec![(2, int(1))]);
        let g = LieSuperalgebra::new("heis", space, table).unwrap();
        g.check_jacobi().unwrap();
        let ideal = Subspace::from_rows(3, [svec::unit(2)]);
        let (q, _) = g.quotient(&ideal, "heis/z").unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.table().is_empty());
    }
}
