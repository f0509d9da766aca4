//! The canonical decreasing filtration attached to a subalgebra
//! `L_0 ⊆ L` and its associated graded algebra.
//!
//! `L_{-1} = L`, and for `p >= 1`,
//! `L_p = { x ∈ L_{p-1} : [x, L] ⊆ L_{p-1} }`.
//! The filtration stabilizes; a zero stable term means the pair `(L, L_0)`
//! is transitive (no ideal of `L` inside `L_0`).

use crate::algebra::{coords_in_basis, LieSuperalgebra};
use crate::error::{CoreError, Result};
use crate::grading::Grading;
use crate::space::SuperSpace;
use crate::subspace::{RrefBuilder, Subspace};
use crate::svec::{self, SVec};
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub struct FiltrationResult {
    /// `levels[k]` is `L_{k-1}`; `levels[0]` is the whole algebra.
    pub levels: Vec<Subspace>,
    /// Stable term of the filtration (largest ideal contained in `L_0`).
    pub residual: Subspace,
}

impl FiltrationResult {
    pub fn level(&self, p: i64) -> &Subspace {
        &self.levels[usize::try_from(p + 1).expect("level index starts at -1")]
    }

    pub fn is_transitive_pair(&self) -> bool {
        self.residual.is_zero()
    }

    /// Depth of the induced grading: 1 when `L_0` is a proper subalgebra.
    pub fn piece_dims(&self) -> Vec<usize> {
        self.levels
            .windows(2)
            .map(|w| w[0].dim() - w[1].dim())
            .collect()
    }
}

pub fn weisfeiler_filtration(alg: &LieSuperalgebra, l0: &Subspace) -> FiltrationResult {
    let n = alg.dim();
    assert!(alg.is_subalgebra(l0), "L_0 must be a subalgebra");
    let mut levels = vec![Subspace::full(n), l0.clone()];
    loop {
        let prev = levels.last().unwrap();
        let next = next_level(alg, prev);
        if &next == prev {
            // `prev` is the stable term and stays as the final level, so the
            // window differences enumerate every graded piece.
            let residual = next;
            return FiltrationResult { levels, residual };
        }
        levels.push(next);
    }
}

fn next_level(alg: &LieSuperalgebra, prev: &Subspace) -> Subspace {
    let n = alg.dim();
    let basis = prev.rows();
    let mut eq = RrefBuilder::new(basis.len());
    for j in 0..n {
        // Residues of [b_i, e_j] mod prev; x = Σ α_i b_i must kill them all.
        let residues: Vec<SVec> = basis
            .iter()
            .map(|b| prev.reduce(&alg.bracket(b, &svec::unit(j))))
            .collect();
        for k in 0..n {
            let mut row: SVec = Vec::new();
            for (idx, r) in residues.iter().enumerate() {
                if let Some(c) = svec::get(r, k) {
                    row.push((idx, c.clone()));
                }
            }
            eq.insert(row);
        }
    }
    let sols = eq.kernel();
    let mut out = RrefBuilder::new(n);
    for s in sols.rows() {
        let mut v: SVec = Vec::new();
        for (idx, c) in s {
            v = svec::add_scaled(&v, c, &basis[*idx]);
        }
        out.insert(v);
    }
    out.into_subspace()
}

/// Associated graded algebra of a filtration with zero residual. Returns
/// the graded algebra, its grading, and the adapted basis as pairs
/// `(degree, ambient representative)` in basis order.
pub fn associated_graded(
    alg: &LieSuperalgebra,
    filt: &FiltrationResult,
) -> Result<(LieSuperalgebra, Grading, Vec<(i64, SVec)>)> {
    if !filt.residual.is_zero() {
        return Err(CoreError::Invalid(
            "associated graded algebra needs a transitive pair (zero residual)".into(),
        ));
    }
    let n = alg.dim();
    let zero = Subspace::zero(n);
    let mut adapted: Vec<(i64, SVec)> = Vec::new();
    for (k, level) in filt.levels.iter().enumerate() {
        let next = filt.levels.get(k + 1).unwrap_or(&zero);
        let deg = k as i64 - 1;
        for rep in next.complement_in(level) {
            adapted.push((deg, rep));
        }
    }
    assert_eq!(adapted.len(), n);
    let reps: Vec<SVec> = adapted.iter().map(|(_, r)| r.clone()).collect();
    let degrees: Vec<i64> = adapted.iter().map(|(d, _)| *d).collect();
    let mut basis = Vec::with_capacity(n);
    for (i, r) in reps.iter().enumerate() {
        let p = alg
            .space()
            .try_parity_of_vec(r)
            .map_err(|_| CoreError::MixedParity { i })?
            .ok_or(CoreError::MixedParity { i })?;
        basis.push((format!("gr{i}"), p));
    }
    let space = SuperSpace::new(basis);
    let mut table = BTreeMap::new();
    for i in 0..n {
        for j in i..n {
            let b = alg.bracket(&reps[i], &reps[j]);
            if svec::is_zero(&b) {
                continue;
            }
            let coords = coords_in_basis(n, &reps, &b)
                .ok_or(CoreError::Invalid("adapted basis does not span".into()))?;
            let target = degrees[i] + degrees[j];
            let mut val: SVec = Vec::new();
            for (k, c) in coords.iter().enumerate() {
                use num_traits::Zero;
                if c.is_zero() {
                    continue;
                }
                // Components of lower degree contradict the filtration
                // property [L_p, L_q] ⊆ L_{p+q}; higher ones are discarded
                // by passing to the quotient.
                if degrees[k] < target {
                    return Err(CoreError::Invalid(format!(
                        "filtration is not multiplicative on pair ({i},{j})"
                    )));
                }
                if degrees[k] == target {
                    val.push((k, c.clone()));
                }
            }
            if !val.is_empty() {
                table.insert((i, j), val);
            }
        }
    }
    let gr = LieSuperalgebra::new(format!("gr({})", alg.name()), space, table)?;
    gr.check_jacobi()?;
    let grading = Grading::from_degrees(&gr, degrees)?;
    Ok((gr, grading, adapted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::space::Parity;

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
    fn sl2_borel_filtration_round_trip() {
        let g = sl2();
        // L_0 = span{e, h}: the Borel subalgebra.
        let l0 = Subspace::from_rows(3, [svec::unit(0), svec::unit(1)]);
        let filt = weisfeiler_filtration(&g, &l0);
        assert!(filt.is_transitive_pair());
        assert_eq!(filt.piece_dims(), vec![1, 1, 1]);
        let (gr, grading, _) = associated_graded(&g, &filt).unwrap();
        assert_eq!(gr.dim(), 3);
        assert_eq!(grading.depth_height(), (1, 1));
    }

    #[test]
    fn nontransitive_pair_detected() {
        // Abelian 2-dim algebra, L_0 a line: the line is an ideal.
        let space = SuperSpace::new(vec![
            ("a".into(), Parity::Even),
            ("b".into(), Parity::Even),
        ]);
        let g = LieSuperalgebra::new("ab", space, BTreeMap::new()).unwrap();
        let l0 = Subspace::from_rows(2, [svec::unit(0)]);
        let filt = weisfeiler_filtration(&g, &l0);
        assert!(!filt.is_transitive_pair());
        assert_eq!(filt.residual.dim(), 1);
    }
}
