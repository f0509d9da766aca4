//! psl(2|2) and its outer sl(2) = ⟨Z₊, Z, Z₋⟩.
//!
//! Z is ad(diag(1,1,0,0)): zero on the even part, ±1 on the two odd
//! blocks. Z₊ is the (unique up to scale) even derivation killing the
//! even part and the +1 block; it maps the −1 block isomorphically onto
//! the +1 block, and Z₋ is its counterpart normalised by [Z₊, Z₋] = Z.
//! Root data is taken with respect to the standard torus extended by Z,
//! which separates the otherwise two-dimensional odd root spaces.

use crate::catalog::matrixfam::{psl, Realization};
use crate::catalog::roots::{dynkin, root_data, Dynkin, NodeColor, RootData};
use crate::derivations::derivations;
use crate::error::{CoreError, Result};
use crate::grading::Grading;
use crate::matrix::LinearMap;
use crate::scalar::{self, Scalar};
use crate::space::Parity;
use crate::subspace::RrefBuilder;
use crate::svec::{self, SVec};

pub struct Psl22 {
    pub real: Realization,
    pub z: LinearMap,
    pub z_plus: LinearMap,
    pub z_minus: LinearMap,
    pub rd: RootData,
}

/// Partition of the basis indices into even part and the two odd blocks
/// (upper-right = +1 eigenspace of Z, lower-left = −1 eigenspace).
fn blocks(real: &Realization) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let (mut even, mut upper, mut lower) = (Vec::new(), Vec::new(), Vec::new());
    for b in 0..real.alg.dim() {
        if real.alg.space().parity(b) == Parity::Even {
            even.push(b);
            continue;
        }
        let lifted = real.lift(&svec::unit(b));
        let (i, j) = (lifted[0].0 / 4, lifted[0].0 % 4);
        if i < 2 && j >= 2 {
            upper.push(b);
        } else {
            lower.push(b);
        }
        debug_assert!(lifted
            .iter()
            .all(|(p, _)| (p / 4 < 2) == (i < 2) && (p % 4 >= 2) == (j >= 2)));
    }
    (even, upper, lower)
}

/// The derivations in `flats` (flattened d×d maps) vanishing on the
/// columns in `banned`; must cut out a line.
fn constrained_line(
    flats: &[SVec],
    banned: &[usize],
    d: usize,
    parity: Parity,
) -> Result<LinearMap> {
    let mut b = RrefBuilder::new(flats.len());
    for &col in banned {
        for a in 0..d {
            let coord = a * d + col;
            let mut row: SVec = flats
                .iter()
                .enumerate()
                .filter_map(|(r, f)| svec::get(f, coord).map(|c| (r, c.clone())))
                .collect();
            row.sort_by_key(|(i, _)| *i);
            b.insert(row);
        }
    }
    let ker = b.kernel();
    if ker.dim() != 1 {
        return Err(CoreError::Invalid(format!(
            "expected a line of constrained derivations, found dimension {}",
            ker.dim()
        )));
    }
    let mut flat = SVec::new();
    for (r, c) in &ker.rows()[0] {
        flat = svec::add_scaled(&flat, c, &flats[*r]);
    }
    Ok(LinearMap::from_flat(d, d, &flat, parity))
}

pub fn build() -> Result<Psl22> {
    let real = psl(2)?;
    let d = real.alg.dim();
    let mut zvec = SVec::new();
    zvec.push((0, scalar::one()));
    zvec.push((5, scalar::one()));
    let z = real.push_ad(&zvec)?;

    let split = derivations(&real.alg);
    let flats: Vec<SVec> = split.even.rows().to_vec();
    let (even, upper, lower) = blocks(&real);
    let mut ban_plus = even.clone();
    ban_plus.extend(&upper);
    let mut ban_minus = even;
    ban_minus.extend(&lower);
    let z_plus = constrained_line(&flats, &ban_plus, d, Parity::Even)?;
    let mut z_minus = constrained_line(&flats, &ban_minus, d, Parity::Even)?;

    // [Z, Z₊] = 2 Z₊ pins the direction; [Z₊, Z₋] = c Z fixes the scale.
    let comm = z.supercommutator(&z_plus);
    let twice = z_plus.scale(&scalar::int(2));
    if !comm.add(&twice.scale(&scalar::int(-1))).is_zero() {
        return Err(CoreError::Invalid("[Z, Z+] != 2 Z+".into()));
    }
    let pm = z_plus.supercommutator(&z_minus);
    let coords = crate::algebra::coords_in_basis(d * d, &[z.flatten()], &pm.flatten())
        .ok_or_else(|| CoreError::Invalid("[Z+, Z-] is not proportional to Z".into()))?;
    let c = coords[0].clone();
    if num_traits::Zero::is_zero(&c) {
        return Err(CoreError::Invalid("[Z+, Z-] vanishes".into()));
    }
    z_minus = z_minus.scale(&(scalar::one() / c));

    let rd = root_data(&real.alg, vec![z.clone()])?;
    Ok(Psl22 {
        real,
        z,
        z_plus,
        z_minus,
        rd,
    })
}

/// The three inequivalent simple-root systems, numbered by their pattern
/// of odd nodes along the chain: 1 = (white, gray, white),
/// 2 = (gray, white, gray), 3 = (gray, gray, gray).
///
/// The functionals below list nodes by decreasing value, which puts the
/// middle node of the chain first; `CHAIN` maps chain positions to the
/// listed node order.
pub const CHAIN: [usize; 3] = [1, 0, 2];

/// Node colors in listed (functional) order.
pub fn diagram_colors(which: usize) -> [NodeColor; 3] {
    match which {
        1 => [NodeColor::Gray, NodeColor::White, NodeColor::White],
        2 => [NodeColor::White, NodeColor::Gray, NodeColor::Gray],
        3 => [NodeColor::Gray, NodeColor::Gray, NodeColor::Gray],
        _ => panic!("diagram index must be 1, 2 or 3"),
    }
}

/// Expected degree of Z₊ when the i-th chain node gets degree λ_i.
pub fn expected_z_plus_degree(which: usize, lambda: &[i64; 3]) -> i64 {
    match which {
        1 => lambda[0] + 2 * lambda[1] + lambda[2],
        2 => lambda[0] - lambda[2],
        3 => lambda[0] + lambda[2],
        _ => panic!("diagram index must be 1, 2 or 3"),
    }
}

/// Frozen positivity functionals (coordinates: the two torus weights,
/// then the Z-weight), one per diagram.
pub fn functional(which: usize) -> Vec<Scalar> {
    let pow = |k: u32| -> Scalar { scalar::int(1i64 << (20 * k)) };
    match which {
        1 => vec![pow(1), pow(0), pow(2)],
        2 => vec![pow(2), pow(1), pow(0)],
        3 => vec![pow(2), pow(0), pow(1)],
        _ => panic!("diagram index must be 1, 2 or 3"),
    }
}

impl Psl22 {
    pub fn diagram(&self, which: usize) -> Result<Dynkin> {
        let dy = dynkin(&self.rd, &functional(which))?;
        if dy.colors != diagram_colors(which) {
            return Err(CoreError::Invalid(format!(
                "functional {} produced colors {:?}",
                which, dy.colors
            )));
        }
        Ok(dy)
    }

    /// Grading with chain-node degrees λ.
    pub fn grade(&self, dy: &Dynkin, lambda: &[i64; 3]) -> Result<Grading> {
        let mut listed = [0i64; 3];
        for (chain_pos, &node) in CHAIN.iter().enumerate() {
            listed[node] = lambda[chain_pos];
        }
        crate::catalog::roots::grade_by_weights(&self.rd, dy, &listed)
    }

    pub fn z_plus_degree(&self, g: &Grading) -> Option<i64> {
        crate::catalog::roots::operator_degree(g, &self.z_plus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn outer_sl2_relations() {
        let p = build().unwrap();
        let zm = p.z.supercommutator(&p.z_minus);
        assert!(zm
            .add(&p.z_minus.scale(&scalar::int(2)))
            .is_zero());
        let pm = p.z_plus.supercommutator(&p.z_minus);
        assert!(pm.add(&p.z.scale(&scalar::int(-1))).is_zero());
        // all three are outer
        let split = derivations(&p.real.alg);
        assert!(!split.is_inner(&p.z));
        assert!(!split.is_inner(&p.z_plus));
        assert!(!split.is_inner(&p.z_minus));
    }

    #[test]
    fn z_plus_degree_formulas() {
        let p = build().unwrap();
        for which in 1..=3 {
            let dy = p.diagram(which).unwrap();
            for bits in 1..8u32 {
                let lambda = [
                    (bits & 1) as i64,
                    (bits >> 1 & 1) as i64,
                    (bits >> 2 & 1) as i64,
                ];
                let g = p.grade(&dy, &lambda).unwrap();
                assert_eq!(
                    p.z_plus_degree(&g),
                    Some(expected_z_plus_degree(which, &lambda)),
                    "diagram {} lambda {:?}",
                    which,
                    lambda
                );
            }
        }
    }
}
