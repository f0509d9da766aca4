//! Superderivations of a Lie superalgebra, split by parity, with the
//! inner/outer decomposition.
//!
//! A parity-`d` map `D` is a derivation iff for all basis pairs `i <= j`
//! `D[x_i, x_j] = [D x_i, x_j] + (-1)^{d |x_i|} [x_i, D x_j]`.
//! The conditions form one sparse linear system per parity of `D`; unknowns
//! are the matrix entries compatible with that parity.

use crate::algebra::LieSuperalgebra;
use crate::matrix::LinearMap;
use crate::scalar::{self, Scalar};
use crate::space::Parity;
use crate::subspace::{RrefBuilder, Subspace};
use crate::svec::SVec;
use num_traits::Zero;
use std::collections::HashMap;

#[derive(Clone, Debug)]
pub struct DerivationSplit {
    dim: usize,
    /// Solution spaces in flattened `n*n` coordinates (entry `(a,b)` at
    /// `a*n+b`), one per derivation parity.
    pub even: Subspace,
    pub odd: Subspace,
    /// Spans of the adjoint operators of homogeneous basis vectors.
    pub inner_even: Subspace,
    pub inner_odd: Subspace,
}

impl DerivationSplit {
    pub fn der_sdim(&self) -> (usize, usize) {
        (self.even.dim(), self.odd.dim())
    }

    pub fn inner_sdim(&self) -> (usize, usize) {
        (self.inner_even.dim(), self.inner_odd.dim())
    }

    pub fn out_sdim(&self) -> (usize, usize) {
        (
            self.even.dim() - self.inner_even.dim(),
            self.odd.dim() - self.inner_odd.dim(),
        )
    }

    fn space(&self, parity: Parity) -> (&Subspace, &Subspace) {
        match parity {
            Parity::Even => (&self.even, &self.inner_even),
            Parity::Odd => (&self.odd, &self.inner_odd),
        }
    }

    pub fn basis(&self, parity: Parity) -> Vec<LinearMap> {
        let (der, _) = self.space(parity);
        der.rows()
            .iter()
            .map(|r| LinearMap::from_flat(self.dim, self.dim, r, parity))
            .collect()
    }

    /// Representatives of a complement of the inner derivations.
    pub fn outer_reps(&self, parity: Parity) -> Vec<LinearMap> {
        let (der, inner) = self.space(parity);
        inner
            .complement_in(der)
            .into_iter()
            .map(|r| LinearMap::from_flat(self.dim, self.dim, &r, parity))
            .collect()
    }

    /// True if the flattened map lies in the inner span.
    pub fn is_inner(&self, d: &LinearMap) -> bool {
        let (_, inner) = self.space(d.parity());
        inner.contains(&d.flatten())
    }
}

pub fn derivations(alg: &LieSuperalgebra) -> DerivationSplit {
    let even = solve_parity(alg, Parity::Even);
    let odd = solve_parity(alg, Parity::Odd);
    let n = alg.dim();
    let mut inner = HashMap::new();
    for parity in [Parity::Even, Parity::Odd] {
        let mut b = RrefBuilder::new(n * n);
        for i in 0..n {
            if alg.space().parity(i) == parity {
                b.insert(alg.ad_basis(i).flatten());
            }
        }
        inner.insert(parity, b.into_subspace());
    }
    let split = DerivationSplit {
        dim: n,
        even,
        odd,
        inner_even: inner.remove(&Parity::Even).unwrap(),
        inner_odd: inner.remove(&Parity::Odd).unwrap(),
    };
    debug_assert!(split.even.contains_subspace(&split.inner_even));
    debug_assert!(split.odd.contains_subspace(&split.inner_odd));
    split
}

fn solve_parity(alg: &LieSuperalgebra, dp: Parity) -> Subspace {
    let n = alg.dim();
    let sp = alg.space();
    // Compressed unknowns: entries (a, b) with |a| = |b| + dp.
    let mut unknowns: Vec<(usize, usize)> = Vec::new();
    let mut pos: Vec<Option<usize>> = vec![None; n * n];
    for a in 0..n {
        for b in 0..n {
            if sp.parity(a) == sp.parity(b) + dp {
                pos[a * n + b] = Some(unknowns.len());
                unknowns.push((a, b));
            }
        }
    }
    let u = unknowns.len();
    // Rows of ad and right-multiplication operators, as columns of the
    // transposes: lt[i].col(b) = (c_{i,a}^b)_a, rt[j].col(b) = (c_{a,j}^b)_a.
    let lt: Vec<LinearMap> = (0..n).map(|i| alg.ad_basis(i).transpose()).collect();
    let mut eq = RrefBuilder::new(u);
    let mut row_acc: HashMap<usize, Scalar> = HashMap::new();
    for i in 0..n {
        let sign_i = scalar::int(dp.koszul_sign(sp.parity(i)));
        for j in i..n {
            let bij = alg.bracket_basis(i, j);
            let rt_j = &lt[j]; // note: c_{a,j}^b = -(-1)^{|a||j|} c_{j,a}^b
            // Output components b carry parity |i| + |j| + dp.
            let pb = sp.parity(i) + sp.parity(j) + dp;
            for b in 0..n {
                if sp.parity(b) != pb {
                    continue;
                }
                row_acc.clear();
                // D[x_i, x_j] term: + c_{ij}^k D_{b,k}.
                for (k, c) in &bij {
                    if let Some(p) = pos[b * n + *k] {
                        *row_acc.entry(p).or_insert_with(Scalar::zero) += c;
                    }
                }
                // -[D x_i, x_j] term: - c_{a,j}^b D_{a,i}.
                for (a, c) in rt_j.col(b) {
                    // c here is c_{j,a}^b; convert to c_{a,j}^b.
                    if let Some(p) = pos[a * n + i] {
                        let s = -scalar::int(-sp.parity(*a).koszul_sign(sp.parity(j)));
                        *row_acc.entry(p).or_insert_with(Scalar::zero) += c * s;
                    }
                }
                // -(-1)^{dp |i|}[x_i, D x_j] term: - sign_i c_{i,a}^b D_{a,j}.
                for (a, c) in lt[i].col(b) {
                    if let Some(p) = pos[a * n + j] {
                        *row_acc.entry(p).or_insert_with(Scalar::zero) -= c * &sign_i;
                    }
                }
                if row_acc.is_empty() {
                    continue;
                }
                let mut row: SVec = row_acc
                    .drain()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                row.sort_by_key(|(p, _)| *p);
                eq.insert(row);
            }
        }
    }
    let sols = eq.kernel();
    // Decompress to flattened n*n coordinates.
    let mut out = RrefBuilder::new(n * n);
    for r in sols.rows() {
        out.insert(
            r.iter()
                .map(|(p, c)| {
                    let (a, b) = unknowns[*p];
                    (a * n + b, c.clone())
                })
                .collect::<Vec<_>>()
                .tap_sort(),
        );
    }
    out.into_subspace()
}

trait TapSort {
    fn tap_sort(self) -> Self;
}

impl TapSort for SVec {
    fn tap_sort(mut self) -> Self {
        self.sort_by_key(|(i, _)| *i);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::space::SuperSpace;
    use std::collections::BTreeMap;

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
    fn sl2_derivations_are_inner() {
        let g = sl2();
        let d = derivations(&g);
        assert_eq!(d.der_sdim(), (3, 0));
        assert_eq!(d.out_sdim(), (0, 0));
        for m in d.basis(Parity::Even) {
            g.is_derivation(&m).unwrap();
        }
    }

    #[test]
    fn abelian_line_has_gl1_of_derivations() {
        let space = SuperSpace::new(vec![("a".into(), Parity::Even)]);
        let g = LieSuperalgebra::new("C", space, BTreeMap::new()).unwrap();
        let d = derivations(&g);
        assert_eq!(d.der_sdim(), (1, 0));
        assert_eq!(d.out_sdim(), (1, 0));
    }
}
