//! Depth-one grading constructors: the diagonal-operator gradings of the
//! strange families psq(n) and spe(n), the type-k gradings of the Cartan
//! families selected by a (dim U^{-1}, dim U^0, dim U^1) triple, and the
//! three-piece algebra sξ ⊕ (s ⋉ F̃) ⊕ ℂ∂_ξ built inside
//! (der s ⊗ Λ(1)) ⋊ W(1).

use crate::algebra::LieSuperalgebra;
use crate::error::{CoreError, Result};
use crate::grading::Grading;
use crate::grassmann::{socle_max, socle_max_degrees, Intermediate, TypeK, WCtx};
use crate::scalar::{ratio, Scalar};
use crate::svec::{self, SVec};

use super::cartan::{CartanFamily, CartanModel};
use super::matrixfam::{psq, spe, Realization};
use super::outer::{der_algebra, OuterGen};

fn gl_diag(nn: usize, entries: Vec<(usize, Scalar)>) -> SVec {
    let mut out: SVec = entries
        .into_iter()
        .filter(|(_, c)| !num_traits::Zero::is_zero(c))
        .map(|(i, c)| (i * nn + i, c))
        .collect();
    out.sort_by_key(|(i, _)| *i);
    out
}

/// Grading of psq(n) from crossing the p-th node: the operator is
/// ad(diag(P, P)) with P the projection onto the first p coordinates.
pub fn psq_depth_one(n: usize, p: usize) -> Result<(Realization, Grading)> {
    if p == 0 || p >= n {
        return Err(CoreError::Invalid(format!(
            "node index must lie in 1..{} for psq({})",
            n - 1,
            n
        )));
    }
    let r = psq(n)?;
    let nn = 2 * n;
    let mut entries = Vec::new();
    for i in 0..p {
        entries.push((i, ratio(1, 1)));
        entries.push((n + i, ratio(1, 1)));
    }
    let op = r.push_ad(&gl_diag(nn, entries))?;
    let g = Grading::from_operator(&r.alg, &op)?;
    Ok((r, g))
}

/// Grading of sl(m|n) (or psl(n|n)) from crossing the chain node after
/// the first p even and q odd coordinates: the operator is
/// ad(diag(P_p, P_q)).
pub fn sl_depth_one(real: &Realization, p: usize, q: usize) -> Result<Grading> {
    let nn = real.m + real.n;
    if p > real.m || q > real.n || p + q == 0 || p + q == nn {
        return Err(CoreError::Invalid(format!(
            "bad node ({}, {}) for sl({}|{})",
            p, q, real.m, real.n
        )));
    }
    let mut entries: Vec<(usize, Scalar)> = (0..p).map(|i| (i, ratio(1, 1))).collect();
    entries.extend((0..q).map(|j| (real.m + j, ratio(1, 1))));
    let op = real.push_ad(&gl_diag(nn, entries))?;
    Grading::from_operator(&real.alg, &op)
}

/// Row selector for the depth-one gradings of spe(n).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpeRow {
    /// No crossed node, k = −1: g^{-1} = Π(S²ℂⁿ).
    KMinusOne,
    /// No crossed node, k = 1: g^{-1} = Π(Λ²(ℂⁿ)*)... with the two odd
    /// pieces swapped relative to `KMinusOne`.
    KPlusOne,
    /// p-th node crossed, k = 1.
    Node(usize),
    /// First node crossed, k = 2: height-two grading ending in g² = ℂ^{0|1}.
    FirstKTwo,
}

/// Grading of spe(n) for one row of its depth-one table. The grading
/// operator is built from ad of gl diagonals together with the halved
/// parity operator diag(I, −I)/2, which is ±1-valued on the two odd
/// blocks and 0 on the even part.
pub fn spe_depth_one(n: usize, row: SpeRow) -> Result<(Realization, Grading)> {
    let r = spe(n)?;
    let nn = 2 * n;
    let half = |s: i64| -> SVec {
        gl_diag(
            nn,
            (0..nn)
                .map(|i| (i, ratio(if i < n { s } else { -s }, 2)))
                .collect(),
        )
    };
    let proj = |p: usize| -> SVec {
        gl_diag(
            nn,
            (0..p)
                .flat_map(|i| [(i, ratio(1, 1)), (n + i, ratio(-1, 1))])
                .collect(),
        )
    };
    let x = match row {
        SpeRow::KMinusOne => half(-1),
        SpeRow::KPlusOne => half(1),
        SpeRow::Node(p) => {
            if p == 0 || p >= n {
                return Err(CoreError::Invalid(format!(
                    "node index must lie in 1..{} for spe({})",
                    n - 1,
                    n
                )));
            }
            svec::add(&proj(p), &half(-1))
        }
        SpeRow::FirstKTwo => proj(1),
    };
    let op = r.push_ad(&x)?;
    let g = Grading::from_operator(&r.alg, &op)?;
    Ok((r, g))
}

/// Depth-one grading of a Cartan model from the table triple
/// (dim U^{-1}, dim U^0, dim U^1), translated to a type-k vector.
pub fn cartan_depth_one(
    model: &CartanModel,
    row: (usize, usize, usize),
) -> Result<Grading> {
    let n = model.w.nvars();
    let (u_neg, u_zero, u_pos) = row;
    if u_neg + u_zero + u_pos != n {
        return Err(CoreError::Invalid(
            "row entries must sum to the number of odd variables".into(),
        ));
    }
    let mut k = Vec::with_capacity(n);
    k.extend(std::iter::repeat(-1).take(u_neg));
    k.extend(std::iter::repeat(0).take(u_zero));
    k.extend(std::iter::repeat(1).take(u_pos));
    let ok = match model.family {
        CartanFamily::W | CartanFamily::S | CartanFamily::CS => {
            row == (1, n - 1, 0) || (u_neg == 0 && u_pos >= 1)
        }
        CartanFamily::H | CartanFamily::Hfull => {
            // homogeneity of the symplectic form pins the admissible rows
            row == (0, 0, n)
                || row == (1, n - 2, 1)
                || (n % 2 == 0 && row == (0, n / 2, n / 2))
        }
    };
    if !ok {
        return Err(CoreError::Invalid(format!(
            "({}, {}, {}) is not a depth-one row for this family",
            u_neg, u_zero, u_pos
        )));
    }
    let degrees = model.typek_degrees(&TypeK::new(k))?;
    Grading::from_degrees(&model.alg, degrees)
}

/// Spanning set for F̃ ⊆ out(s) ⊕ ℂ ξ∂_ξ: coordinates 0..outs count the
/// outer generators, coordinate `outs` is ξ∂_ξ.
pub fn three_piece_algebra(
    s: &LieSuperalgebra,
    outs: &[OuterGen],
    ftilde: &[SVec],
) -> Result<(Intermediate, Grading)> {
    let der_s = der_algebra(s, outs)?;
    let w = WCtx::new(1);
    let ambient = socle_max(&der_s, &w)?;
    let dim_s = s.dim();
    let dd = der_s.dim();
    let w_offset = dd * 2;
    let mut f_rows = Vec::with_capacity(ftilde.len() + 1);
    for row in ftilde {
        let mut out = SVec::new();
        for (i, c) in row {
            let amb = if *i < outs.len() {
                // outer generator ⊗ 1 (constant monomial has index 0)
                (dim_s + i) * 2
            } else if *i == outs.len() {
                w_offset + w.field_index(1, 0)
            } else {
                return Err(CoreError::Invalid(
                    "F̃ coordinate out of range".into(),
                ));
            };
            out.push((amb, c.clone()));
        }
        out.sort_by_key(|(i, _)| *i);
        f_rows.push(out);
    }
    f_rows.push(svec::unit(w_offset + w.field_index(0, 0)));
    let ia = Intermediate::build(
        &ambient,
        dim_s,
        &w,
        &f_rows,
        format!("three-piece[{}]", s.name()),
    )?;
    let degrees = socle_max_degrees(&vec![0; dd], &w, &TypeK::new(vec![-1]));
    let amb_grading = Grading::from_degrees(&ambient, degrees)?;
    let g = amb_grading.restrict_to(&ia.algebra, &ia.rows)?;
    Ok((ia, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::matrixfam::osp;

    fn sdims(r: &Realization, g: &Grading) -> Vec<(i64, (usize, usize))> {
        g.pieces()
            .keys()
            .map(|&p| (p, g.piece_sdim(&r.alg, p)))
            .collect()
    }

    #[test]
    fn psq3_first_node() {
        let (r, g) = psq_depth_one(3, 1).unwrap();
        assert_eq!(
            sdims(&r, &g),
            vec![(-1, (2, 2)), (0, (4, 4)), (1, (2, 2))]
        );
        assert!(g.is_transitive(&r.alg));
        assert!(g.is_irreducible(&r.alg));
    }

    #[test]
    fn spe3_table_rows() {
        let (r, g) = spe_depth_one(3, SpeRow::KMinusOne).unwrap();
        assert_eq!(
            sdims(&r, &g),
            vec![(-1, (0, 6)), (0, (8, 0)), (1, (0, 3))]
        );
        let (r, g) = spe_depth_one(3, SpeRow::KPlusOne).unwrap();
        assert_eq!(
            sdims(&r, &g),
            vec![(-1, (0, 3)), (0, (8, 0)), (1, (0, 6))]
        );
        let (r, g) = spe_depth_one(3, SpeRow::Node(1)).unwrap();
        assert_eq!(g.depth_height(), (1, 1));
        assert_eq!(g.piece_sdim(&r.alg, 0), (4, 4));
        assert_eq!(g.piece_sdim(&r.alg, -1), (2, 3));
        let (r, g) = spe_depth_one(3, SpeRow::FirstKTwo).unwrap();
        assert_eq!(
            sdims(&r, &g),
            vec![(-1, (2, 2)), (0, (4, 4)), (1, (2, 2)), (2, (0, 1))]
        );
        assert!(g.is_transitive(&r.alg));
    }

    #[test]
    fn cartan_rows() {
        let m = CartanModel::build(CartanFamily::W, 3).unwrap();
        let g = cartan_depth_one(&m, (1, 2, 0)).unwrap();
        assert_eq!(g.piece_sdim(&m.alg, -1), (4, 4));
        assert_eq!(g.piece_sdim(&m.alg, 0), (6, 6));
        let g = cartan_depth_one(&m, (0, 1, 2)).unwrap();
        assert_eq!(g.piece_sdim(&m.alg, -1), (2, 2));
        assert_eq!(g.piece_sdim(&m.alg, 0), (5, 5));
        assert!(cartan_depth_one(&m, (2, 1, 0)).is_err());

        let m = CartanModel::build(CartanFamily::H, 5).unwrap();
        let g = cartan_depth_one(&m, (0, 0, 5)).unwrap();
        assert_eq!(g.piece_sdim(&m.alg, -1), (0, 5));
        assert_eq!(g.piece_sdim(&m.alg, 0), (10, 0));
        let g = cartan_depth_one(&m, (1, 3, 1)).unwrap();
        assert_eq!(g.piece_sdim(&m.alg, -1), (4, 4));
        assert_eq!(g.piece_sdim(&m.alg, 0), (7, 7));
    }

    #[test]
    fn three_piece_on_osp12() {
        let r = osp(1, 2).unwrap();
        // osp(1|2) has no outer derivations; F̃ = ℂ ξ∂_ξ
        let (ia, g) = three_piece_algebra(&r.alg, &[], &[svec::unit(0)]).unwrap();
        assert_eq!(ia.algebra.sdim(), (6, 6));
        assert_eq!(g.piece_sdim(&ia.algebra, -1), (2, 3));
        assert_eq!(g.piece_sdim(&ia.algebra, 0), (4, 2));
        assert_eq!(g.piece_sdim(&ia.algebra, 1), (0, 1));
        assert!(g.is_transitive(&ia.algebra));
        assert!(g.is_irreducible(&ia.algebra));
        assert!(g.is_nonlinear());
        // F̃ = 0 also closes
        let (ia, g) = three_piece_algebra(&r.alg, &[], &[]).unwrap();
        assert_eq!(ia.algebra.sdim(), (5, 6));
        assert!(g.is_transitive(&ia.algebra));
    }
}
