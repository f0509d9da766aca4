//! Root decompositions relative to the standard diagonal torus, simple
//! systems selected by a linear positivity functional, diagram data
//! (Cartan matrix, node colors, marks), and gradings generated by degree
//! assignments on the simple roots.

use std::collections::BTreeMap;

use crate::algebra::{coords_in_basis, LieSuperalgebra};
use crate::error::{CoreError, Result};
use crate::grading::Grading;
use crate::matrix::LinearMap;
use crate::scalar::{self, Scalar};
use crate::space::Parity;
use crate::svec::{self, SVec};
use num_traits::{Signed, Zero};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NodeColor {
    White,
    Gray,
    Black,
}

pub struct RootData {
    pub alg: LieSuperalgebra,
    /// Basis indices whose ad is diagonal (the standard torus).
    pub cartan: Vec<usize>,
    /// Extra toral derivations appended to the weight coordinates.
    pub extras: Vec<LinearMap>,
    /// Weight of every basis vector (length = cartan.len() + extras.len()).
    pub weights: Vec<Vec<Scalar>>,
    /// Nonzero weights with their root-space basis indices.
    pub roots: Vec<(Vec<Scalar>, Vec<usize>)>,
}

fn is_diagonal(m: &LinearMap) -> bool {
    (0..m.domain()).all(|j| m.col(j).iter().all(|(k, _)| *k == j))
}

fn eigenvalue_on(col: &SVec, j: usize) -> Result<Scalar> {
    match col.len() {
        0 => Ok(scalar::zero()),
        1 if col[0].0 == j => Ok(col[0].1.clone()),
        _ => Err(CoreError::BadOperator {
            reason: format!("basis vector {} is not a simultaneous eigenvector", j),
        }),
    }
}

/// Decomposes `alg` into simultaneous ad-eigenspaces of the diagonal
/// torus extended by `extras`; every root space must be one-dimensional.
pub fn root_data(alg: &LieSuperalgebra, extras: Vec<LinearMap>) -> Result<RootData> {
    let cartan: Vec<usize> = (0..alg.dim())
        .filter(|&i| is_diagonal(&alg.ad_basis(i)))
        .collect();
    let ads: Vec<LinearMap> = cartan.iter().map(|&i| alg.ad_basis(i)).collect();
    let mut weights = Vec::with_capacity(alg.dim());
    for j in 0..alg.dim() {
        let mut w = Vec::new();
        for m in ads.iter().chain(extras.iter()) {
            w.push(eigenvalue_on(m.col(j), j)?);
        }
        weights.push(w);
    }
    let mut grouped: BTreeMap<Vec<Scalar>, Vec<usize>> = BTreeMap::new();
    for (j, w) in weights.iter().enumerate() {
        if w.iter().any(|c| !c.is_zero()) {
            grouped.entry(w.clone()).or_default().push(j);
        }
    }
    for (w, idxs) in &grouped {
        if idxs.len() != 1 {
            return Err(CoreError::BadOperator {
                reason: format!("root space of weight {:?} is not one-dimensional", w),
            });
        }
    }
    Ok(RootData {
        alg: alg.clone(),
        cartan,
        extras,
        weights,
        roots: grouped.into_iter().collect(),
    })
}

pub struct Dynkin {
    /// Simple roots in diagram order (decreasing positivity functional).
    pub simple: Vec<Vec<Scalar>>,
    /// One root-vector basis index per simple root.
    pub simple_idx: Vec<usize>,
    pub cartan_matrix: Vec<Vec<Scalar>>,
    pub colors: Vec<NodeColor>,
    pub marks: Vec<i64>,
    /// Every root expressed in the simple basis (integer coordinates).
    pub root_coords: Vec<(Vec<Scalar>, Vec<i64>)>,
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn weight_to_svec(w: &[Scalar]) -> SVec {
    w.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// Builds diagram data for the positive system {α : φ(α) > 0}.
pub fn dynkin(rd: &RootData, functional: &[Scalar]) -> Result<Dynkin> {
    let ncoord = rd.cartan.len() + rd.extras.len();
    assert_eq!(functional.len(), ncoord);
    let mut positives: Vec<&(Vec<Scalar>, Vec<usize>)> = Vec::new();
    for r in &rd.roots {
        let v = dot(functional, &r.0);
        if v.is_zero() {
            return Err(CoreError::BadOperator {
                reason: "functional vanishes on a root".into(),
            });
        }
        if v.is_positive() {
            positives.push(r);
        }
    }
    let pos_set: Vec<Vec<Scalar>> = positives.iter().map(|r| r.0.clone()).collect();
    let mut simple: Vec<(Vec<Scalar>, usize)> = Vec::new();
    for r in &positives {
        let decomposable = pos_set.iter().any(|b| {
            if *b == r.0 {
                return false;
            }
            let rest: Vec<Scalar> = r.0.iter().zip(b.iter()).map(|(x, y)| x - y).collect();
            pos_set.iter().any(|c| *c == rest)
        });
        if !decomposable {
            simple.push((r.0.clone(), r.1[0]));
        }
    }
    simple.sort_by(|a, b| dot(functional, &b.0).cmp(&dot(functional, &a.0)));
    let rank = simple.len();
    let simple_svecs: Vec<SVec> = simple.iter().map(|(w, _)| weight_to_svec(w)).collect();

    // Express every root in the simple basis; all coordinates must be
    // integers (and all-nonnegative or all-nonpositive).
    let mut root_coords = Vec::with_capacity(rd.roots.len());
    for (w, _) in &rd.roots {
        let coords = coords_in_basis(ncoord, &simple_svecs, &weight_to_svec(w))
            .ok_or_else(|| CoreError::BadOperator {
                reason: "root outside the span of the simple system".into(),
            })?;
        let ints: Vec<i64> = coords
            .iter()
            .map(|c| {
                scalar::as_i64(c).ok_or_else(|| CoreError::BadOperator {
                    reason: "non-integral root coordinate".into(),
                })
            })
            .collect::<Result<_>>()?;
        root_coords.push((w.clone(), ints));
    }
    // Highest root: maximal coordinate-sum among positives.
    let marks = root_coords
        .iter()
        .filter(|(w, _)| dot(functional, w).is_positive())
        .max_by_key(|(_, ints)| ints.iter().sum::<i64>())
        .map(|(_, ints)| ints.clone())
        .ok_or_else(|| CoreError::BadOperator {
            reason: "empty positive system".into(),
        })?;

    // Cartan matrix from h_i = [e_i, f_i].
    let find_index = |w: &Vec<Scalar>| -> Result<usize> {
        rd.roots
            .iter()
            .find(|(x, _)| x == w)
            .map(|(_, idxs)| idxs[0])
            .ok_or_else(|| CoreError::BadOperator {
                reason: "missing opposite root".into(),
            })
    };
    let mut cartan_matrix = Vec::with_capacity(rank);
    let mut colors = Vec::with_capacity(rank);
    for (w, e_idx) in &simple {
        let neg: Vec<Scalar> = w.iter().map(|c| -c.clone()).collect();
        let f_idx = find_index(&neg)?;
        let h = rd.alg.bracket_basis(*e_idx, f_idx);
        let mut row = Vec::with_capacity(rank);
        for (_, ej) in &simple {
            let img = rd.alg.bracket(&h, &svec::unit(*ej));
            row.push(eigenvalue_on(&img, *ej)?);
        }
        cartan_matrix.push(row);
    }
    for (i, (_, e_idx)) in simple.iter().enumerate() {
        let parity = rd.alg.space().parity(*e_idx);
        let aii = cartan_matrix[i][i].clone();
        let color = match (parity, aii.is_zero()) {
            (Parity::Even, _) => NodeColor::White,
            (Parity::Odd, true) => NodeColor::Gray,
            (Parity::Odd, false) => NodeColor::Black,
        };
        colors.push(color);
        // normalize: white a_ii = 2, black a_ii = 1, gray first nonzero
        // off-diagonal entry = −1
        let scale = match color {
            NodeColor::White => Some(scalar::int(2) / &aii),
            NodeColor::Black => Some(scalar::one() / &aii),
            NodeColor::Gray => cartan_matrix[i]
                .iter()
                .find(|c| !c.is_zero())
                .map(|c| scalar::int(-1) / c),
        };
        if let Some(s) = scale {
            for c in cartan_matrix[i].iter_mut() {
                *c *= &s;
            }
        }
    }
    Ok(Dynkin {
        simple: simple.iter().map(|(w, _)| w.clone()).collect(),
        simple_idx: simple.iter().map(|(_, i)| *i).collect(),
        cartan_matrix,
        colors,
        marks,
        root_coords,
    })
}

impl Dynkin {
    fn coords_of(&self, w: &[Scalar]) -> Option<&[i64]> {
        self.root_coords
            .iter()
            .find(|(x, _)| x.as_slice() == w)
            .map(|(_, c)| c.as_slice())
    }
}

/// Grading with deg(α_i) = λ_i extended additively; torus in degree 0.
pub fn grade_by_weights(rd: &RootData, dy: &Dynkin, lambda: &[i64]) -> Result<Grading> {
    assert_eq!(lambda.len(), dy.simple.len());
    let mut degrees = Vec::with_capacity(rd.alg.dim());
    for w in &rd.weights {
        if w.iter().all(|c| c.is_zero()) {
            degrees.push(0);
        } else {
            let coords = dy.coords_of(w).ok_or_else(|| CoreError::BadOperator {
                reason: "weight not a recorded root".into(),
            })?;
            degrees.push(coords.iter().zip(lambda).map(|(c, l)| c * l).sum());
        }
    }
    Grading::from_degrees(&rd.alg, degrees)
}

/// Crossing a single mark-1 node: λ = δ_node.
pub fn grade_by_crossing(rd: &RootData, dy: &Dynkin, node: usize) -> Result<Grading> {
    if dy.marks[node] != 1 {
        return Err(CoreError::Invalid(format!(
            "node {} has mark {}, not 1",
            node, dy.marks[node]
        )));
    }
    let mut lambda = vec![0i64; dy.simple.len()];
    lambda[node] = 1;
    grade_by_weights(rd, dy, &lambda)
}

/// Lexicographic positivity functional on `ncoord` coordinates visited in
/// `priority` order (powers of a large base keep it exact).
pub fn lex_functional(ncoord: usize, priority: &[usize]) -> Vec<Scalar> {
    assert_eq!(priority.len(), ncoord);
    let mut out = vec![scalar::zero(); ncoord];
    let mut weight = scalar::one();
    for &coord in priority.iter().rev() {
        out[coord] = weight.clone();
        weight *= scalar::int(1 << 20);
    }
    out
}

/// Degree of an operator under the grading: [D, z] = deg·z for the
/// diagonal grading operator D, when z is an eigenvector.
pub fn operator_degree(g: &Grading, z: &LinearMap) -> Option<i64> {
    let d = g.diagonal_operator()?;
    let comm = d.compose(z).add(&z.compose(&d).scale(&scalar::int(-1)));
    let zf = z.flatten();
    let cf = comm.flatten();
    if svec::is_zero(&cf) {
        return Some(0);
    }
    let coords = coords_in_basis(z.domain() * z.codomain(), &[zf], &cf)?;
    scalar::as_i64(&coords[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::matrixfam::{osp, sl};

    #[test]
    fn sl21_roots_and_diagram() {
        let r = sl(2, 1).unwrap();
        let rd = root_data(&r.alg, vec![]).unwrap();
        assert_eq!(rd.cartan.len(), 2);
        assert_eq!(rd.roots.len(), 6);
        let odd = rd
            .roots
            .iter()
            .filter(|(_, idxs)| r.alg.space().parity(idxs[0]) == Parity::Odd)
            .count();
        assert_eq!(odd, 4);
        let dy = dynkin(&rd, &lex_functional(2, &[0, 1])).unwrap();
        assert_eq!(dy.simple.len(), 2);
        assert_eq!(dy.marks, vec![1, 1]);
        assert_eq!(
            dy.colors.iter().filter(|c| **c == NodeColor::Gray).count(),
            1
        );
    }

    #[test]
    fn sl21_crossing_gives_depth_one() {
        let r = sl(2, 1).unwrap();
        let rd = root_data(&r.alg, vec![]).unwrap();
        let dy = dynkin(&rd, &lex_functional(2, &[0, 1])).unwrap();
        for node in 0..dy.simple.len() {
            let g = grade_by_crossing(&rd, &dy, node).unwrap();
            let (d, h) = g.depth_height();
            assert_eq!((d, h), (1, 1));
            let (e1, o1) = g.piece_sdim(&r.alg, -1);
            let (e2, o2) = g.piece_sdim(&r.alg, 1);
            assert_eq!((e1, o1), (e2, o2));
        }
    }

    #[test]
    fn osp32_diagram_marks() {
        let r = osp(3, 2).unwrap();
        let rd = root_data(&r.alg, vec![]).unwrap();
        let dy = dynkin(&rd, &lex_functional(2, &[0, 1])).unwrap();
        assert_eq!(dy.marks, vec![1, 2]);
        assert_eq!(dy.colors[1], NodeColor::Black);
        let g = grade_by_crossing(&rd, &dy, 0).unwrap();
        assert_eq!(g.piece_sdim(&r.alg, -1), (1, 2));
    }
}
