//! Z-gradings of Lie superalgebras.
//!
//! A grading is stored as its eigenspace decomposition; when every basis
//! vector is homogeneous the degree vector is kept as well. Gradings may be
//! installed either directly from degrees or as the eigenspace decomposition
//! of an even semisimple derivation with integer spectrum (the grading
//! operator `D` with `D|_{g^p} = p·Id`).

use crate::algebra::LieSuperalgebra;
use crate::error::{CoreError, Result};
use crate::matrix::{char_poly, integer_roots, LinearMap};
use crate::scalar;
use crate::space::Parity;
use crate::subspace::{RrefBuilder, Subspace};
use crate::svec::{self, SVec};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    dim: usize,
    pieces: BTreeMap<i64, Subspace>,
    degrees: Option<Vec<i64>>,
    operator: Option<LinearMap>,
}

impl Grading {
    /// Grading with basis vector `i` placed in degree `degrees[i]`.
    /// Verifies bracket compatibility `[g^p, g^q] ⊆ g^{p+q}`.
    pub fn from_degrees(alg: &LieSuperalgebra, degrees: Vec<i64>) -> Result<Self> {
        assert_eq!(degrees.len(), alg.dim());
        for (&(i, j), v) in alg.table() {
            let expected = degrees[i] + degrees[j];
            for (k, _) in v {
                if degrees[*k] != expected {
                    return Err(CoreError::NotGraded { p: degrees[i], q: degrees[j] });
                }
            }
        }
        let mut by_deg: BTreeMap<i64, Vec<SVec>> = BTreeMap::new();
        for (i, d) in degrees.iter().enumerate() {
            by_deg.entry(*d).or_default().push(svec::unit(i));
        }
        let pieces = by_deg
            .into_iter()
            .map(|(d, rows)| (d, Subspace::from_rows(alg.dim(), rows)))
            .collect();
        Ok(Grading { dim: alg.dim(), pieces, degrees: Some(degrees), operator: None })
    }

    /// Grading from an even derivation acting semisimply with integer
    /// spectrum. Integer eigenvalue candidates are read off the
    /// characteristic polynomial (divisors of the constant coefficient of
    /// `p(x)/x^m`, together with 0); the eigenspaces must fill the algebra.
    pub fn from_operator(alg: &LieSuperalgebra, op: &LinearMap) -> Result<Self> {
        let n = alg.dim();
        assert_eq!(op.domain(), n);
        assert_eq!(op.codomain(), n);
        if op.parity() != Parity::Even {
            return Err(CoreError::BadOperator { reason: "operator must be even".into() });
        }
        alg.is_derivation(op)
            .map_err(|_| CoreError::BadOperator { reason: "operator is not a derivation".into() })?;
        let cp = char_poly(op);
        let candidates = integer_roots(&cp);
        let mut pieces = BTreeMap::new();
        let mut total = 0usize;
        for r in candidates {
            let mut shifted = op.clone();
            for i in 0..n {
                let e = shifted.entry(i, i) - scalar::int(r);
                shifted.set_entry(i, i, e);
            }
            let eig = shifted.kernel();
            if !eig.is_zero() {
                total += eig.dim();
                pieces.insert(r, eig);
            }
        }
        if total != n {
            return Err(CoreError::BadOperator {
                reason: format!(
                    "integer eigenspaces span {total} of {n} dimensions (not semisimple over Z)"
                ),
            });
        }
        // Basis-aligned degrees when every unit vector is homogeneous.
        let mut degrees = Some(vec![0i64; n]);
        'outer: for i in 0..n {
            for (d, sp) in &pieces {
                if sp.contains(&svec::unit(i)) {
                    if let Some(ref mut ds) = degrees {
                        ds[i] = *d;
                    }
                    continue 'outer;
                }
            }
            degrees = None;
            break;
        }
        let g = Grading { dim: n, pieces, degrees, operator: Some(op.clone()) };
        g.check_compatible(alg)?;
        Ok(g)
    }

    /// Verifies `[g^p, g^q] ⊆ g^{p+q}` piecewise.
    pub fn check_compatible(&self, alg: &LieSuperalgebra) -> Result<()> {
        for (&p, sp) in &self.pieces {
            for (&q, sq) in &self.pieces {
                if q < p {
                    continue;
                }
                let target = self.pieces.get(&(p + q));
                for x in sp.rows() {
                    for y in sq.rows() {
                        let b = alg.bracket(x, y);
                        if svec::is_zero(&b) {
                            continue;
                        }
                        match target {
                            Some(t) if t.contains(&b) => {}
                            _ => return Err(CoreError::NotGraded { p, q }),
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pieces(&self) -> &BTreeMap<i64, Subspace> {
        &self.pieces
    }

    pub fn piece(&self, p: i64) -> Subspace {
        self.pieces.get(&p).cloned().unwrap_or_else(|| Subspace::zero(self.dim))
    }

    pub fn degrees(&self) -> Option<&[i64]> {
        self.degrees.as_deref()
    }

    pub fn operator(&self) -> Option<&LinearMap> {
        self.operator.as_ref()
    }

    /// Degree of a vector if it lies in a single piece.
    pub fn degree_of(&self, v: &SVec) -> Option<i64> {
        if svec::is_zero(v) {
            return None;
        }
        self.pieces
            .iter()
            .find(|(_, sp)| sp.contains(v))
            .map(|(d, _)| *d)
    }

    /// `(depth, height)`: negatives of the lowest degree and the highest
    /// degree carrying a nonzero piece.
    pub fn depth_height(&self) -> (i64, i64) {
        let lo = self.pieces.keys().next().copied().unwrap_or(0);
        let hi = self.pieces.keys().next_back().copied().unwrap_or(0);
        (-lo, hi)
    }

    /// Dimension pair of a piece as `(even, odd)` under the algebra's
    /// parity; pieces in RREF have homogeneous rows.
    pub fn piece_sdim(&self, alg: &LieSuperalgebra, p: i64) -> (usize, usize) {
        let sp = self.piece(p);
        let mut even = 0;
        let mut odd = 0;
        for r in sp.rows() {
            match alg.space().parity_of_vec(r) {
                Some(Parity::Even) | None => even += 1,
                Some(Parity::Odd) => odd += 1,
            }
        }
        (even, odd)
    }

    /// Sum of the pieces of nonnegative degree.
    pub fn nonneg_part(&self) -> Subspace {
        let mut b = RrefBuilder::new(self.dim);
        for (d, sp) in &self.pieces {
            if *d >= 0 {
                for r in sp.rows() {
                    b.insert(r.clone());
                }
            }
        }
        b.into_subspace()
    }

    /// Transitivity: no nonzero `x` in a piece of degree `p >= 0` satisfies
    /// `[x, g^{-1}] = 0`.
    pub fn is_transitive(&self, alg: &LieSuperalgebra) -> bool {
        let gm1 = self.piece(-1);
        assert!(!gm1.is_zero(), "transitivity needs a nonzero degree -1 piece");
        for (&p, sp) in &self.pieces {
            if p < 0 || sp.is_zero() {
                continue;
            }
            // Kernel of x -> ([x, v])_{v in basis of g^{-1}} over piece coords.
            let mut b = RrefBuilder::new(sp.dim());
            for v in gm1.rows() {
                let images: Vec<SVec> =
                    sp.rows().iter().map(|x| alg.bracket(x, v)).collect();
                for k in 0..self.dim {
                    let mut row: SVec = Vec::new();
                    for (idx, img) in images.iter().enumerate() {
                        if let Some(c) = svec::get(img, k) {
                            row.push((idx, c.clone()));
                        }
                    }
                    b.insert(row);
                }
            }
            if b.kernel().dim() > 0 {
                return false;
            }
        }
        true
    }

    /// Nonlinearity: the degree 1 piece is nonzero.
    pub fn is_nonlinear(&self) -> bool {
        !self.piece(1).is_zero()
    }

    /// Adjoint action of `g^0` on `g^{-1}`, as matrices in the coordinates
    /// of the degree -1 piece.
    pub fn negative_action(&self, alg: &LieSuperalgebra) -> Vec<LinearMap> {
        let g0 = self.piece(0);
        let gm1 = self.piece(-1);
        g0.rows()
            .iter()
            .map(|x| {
                let cols: Vec<SVec> = gm1
                    .rows()
                    .iter()
                    .map(|v| {
                        let img = alg.bracket(x, v);
                        let coords = gm1
                            .coords(&img)
                            .expect("grading is not bracket-compatible");
                        svec::from_dense(&coords)
                    })
                    .collect();
                let parity = alg.space().parity_of_vec(x).unwrap_or(Parity::Even);
                LinearMap::from_cols(gm1.dim(), cols, parity)
            })
            .collect()
    }

    /// Irreducibility of `g^{-1}` as a `g^0`-module in the associative
    /// (Burnside) sense: the envelope of the action maps is the full matrix
    /// algebra.
    pub fn is_irreducible(&self, alg: &LieSuperalgebra) -> bool {
        let maps = self.negative_action(alg);
        crate::burnside::is_irreducible(self.piece(-1).dim(), &maps)
    }

    /// Restricts the grading to a graded subalgebra given by its ambient
    /// basis rows; each row must be homogeneous.
    pub fn restrict_to(&self, alg_sub: &LieSuperalgebra, rows: &[SVec]) -> Result<Grading> {
        let mut degrees = Vec::with_capacity(rows.len());
        for r in rows {
            let d = self.degree_of(r).ok_or_else(|| CoreError::Invalid(
                "subalgebra basis row is not degree-homogeneous".into(),
            ))?;
            degrees.push(d);
        }
        Grading::from_degrees(alg_sub, degrees)
    }

    /// Diagonal grading operator, available when degrees are basis-aligned.
    pub fn diagonal_operator(&self) -> Option<LinearMap> {
        let degrees = self.degrees.as_ref()?;
        let mut m = LinearMap::zero(self.dim, self.dim, Parity::Even);
        for (i, d) in degrees.iter().enumerate() {
            m.set_entry(i, i, scalar::int(*d));
        }
        Some(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::space::SuperSpace;

    fn sl2() -> LieSuperalgebra {
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
    fn sl2_principal_grading() {
        let g = sl2();
        let gr = Grading::from_degrees(&g, vec![1, 0, -1]).unwrap();
        assert_eq!(gr.depth_height(), (1, 1));
        assert!(gr.is_transitive(&g));
        assert!(gr.is_nonlinear());
        assert!(gr.is_irreducible(&g));
    }

    #[test]
    fn sl2_grading_from_ad_h() {
        let g = sl2();
        // ad(h/2) has eigenvalues 1, 0, -1.
        let op = g.ad_basis(1).scale(&crate::scalar::ratio(1, 2));
        let gr = Grading::from_operator(&g, &op).unwrap();
        assert_eq!(gr.degrees(), Some(&[1i64, 0, -1][..]));
    }

    #[test]
    fn incompatible_degrees_rejected() {
        let g = sl2();
        assert!(Grading::from_degrees(&g, vec![1, 1, -1]).is_err());
    }
}
