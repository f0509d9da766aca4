//! The one-parameter family osp(4|2;α), presented as three commuting
//! copies of sl(2) acting on V⊗V⊗V (V = ℂ^{1|0}-free 2-dim module placed
//! in odd parity), with odd bracket weighted by σ = (1, α, −1−α).

use std::collections::BTreeMap;

use crate::algebra::LieSuperalgebra;
use crate::error::{CoreError, Result};
use crate::scalar::{self, Scalar};
use crate::space::{Parity, SuperSpace};
use crate::svec::SVec;

// sl(2) basis order (e, h, f) inside each factor; even block is
// indices 3i + {0,1,2}, odd block starts at 9 with u_a⊗u_b⊗u_c at
// 9 + 4a + 2b + c.

const ODD0: usize = 9;

fn sl2_on_v(gen: usize, a: usize) -> Option<(usize, i64)> {
    // action of e/h/f on u_a: e u1 = u0; h u_a = (−1)^a u_a; f u0 = u1
    match (gen, a) {
        (0, 1) => Some((0, 1)),
        (1, 0) => Some((0, 1)),
        (1, 1) => Some((1, -1)),
        (2, 0) => Some((1, 1)),
        _ => None,
    }
}

fn omega(a: usize, b: usize) -> i64 {
    match (a, b) {
        (0, 1) => 1,
        (1, 0) => -1,
        _ => 0,
    }
}

// p(u_a, u_b) ∈ sl(2) with p(x,y)w = ω(x,w)y + ω(y,w)x:
// p(u0,u0) = 2e, p(u0,u1) = p(u1,u0) = −h, p(u1,u1) = −2f.
fn pmap(a: usize, b: usize) -> (usize, i64) {
    match (a, b) {
        (0, 0) => (0, 2),
        (1, 1) => (2, -2),
        _ => (1, -1),
    }
}

fn odd_parts(idx: usize) -> [usize; 3] {
    let t = idx - ODD0;
    [t >> 2 & 1, t >> 1 & 1, t & 1]
}

/// osp(4|2;α); Jacobi holds because the weights (1, α, −1−α) sum to zero.
pub fn osp4_2_alpha(alpha: &Scalar) -> Result<LieSuperalgebra> {
    for bad in [scalar::int(0), scalar::int(1), scalar::int(-1), scalar::int(-2), scalar::ratio(-1, 2)] {
        if alpha.eq(&bad) {
            return Err(CoreError::Invalid(
                "alpha must avoid {0, 1, -1, -2, -1/2}".into(),
            ));
        }
    }
    let sigma = [scalar::one(), alpha.clone(), -scalar::one() - alpha.clone()];
    let mut basis: Vec<(String, Parity)> = Vec::new();
    for i in 0..3 {
        for g in ["e", "h", "f"] {
            basis.push((format!("{}{}", g, i + 1), Parity::Even));
        }
    }
    for t in 0..8 {
        let a = [t >> 2 & 1, t >> 1 & 1, t & 1];
        basis.push((format!("u{}{}{}", a[0], a[1], a[2]), Parity::Odd));
    }
    let space = SuperSpace::new(basis);
    let name = format!("osp(4|2;{})", scalar::format(alpha));
    LieSuperalgebra::from_fn(name, space, |p, q| {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        if p < ODD0 && q < ODD0 {
            let (i, gi) = (p / 3, p % 3);
            let (j, gj) = (q / 3, q % 3);
            if i == j {
                // sl(2): [e,h] = −2e, [e,f] = h, [h,f] = −2f
                let terms: &[(usize, i64)] = match (gi, gj) {
                    (0, 1) => &[(0, -2)],
                    (0, 2) => &[(1, 1)],
                    (1, 2) => &[(2, -2)],
                    _ => &[],
                };
                for (g, c) in terms {
                    *acc.entry(3 * i + g).or_insert_with(scalar::zero) += scalar::int(*c);
                }
            }
        } else if p < ODD0 {
            // even on odd: act in the matching tensor slot
            let (i, gi) = (p / 3, p % 3);
            let parts = odd_parts(q);
            if let Some((na, c)) = sl2_on_v(gi, parts[i]) {
                let mut np = parts;
                np[i] = na;
                let idx = ODD0 + 4 * np[0] + 2 * np[1] + np[2];
                *acc.entry(idx).or_insert_with(scalar::zero) += scalar::int(c);
            }
        } else {
            // odd-odd: Σ_i σ_i (Π_{j≠i} ω(v_j, w_j)) p_i(v_i, w_i)
            let v = odd_parts(p);
            let w = odd_parts(q);
            for i in 0..3 {
                let mut coeff = scalar::one();
                let mut zero = false;
                for j in 0..3 {
                    if j != i {
                        let om = omega(v[j], w[j]);
                        if om == 0 {
                            zero = true;
                            break;
                        }
                        coeff *= scalar::int(om);
                    }
                }
                if zero {
                    continue;
                }
                let (g, c) = pmap(v[i], w[i]);
                *acc.entry(3 * i + g).or_insert_with(scalar::zero) +=
                    coeff * &sigma[i] * scalar::int(c);
            }
        }
        acc.into_iter()
            .filter(|(_, c)| !c.eq(&scalar::zero()))
            .collect::<SVec>()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_for_several_alpha() {
        for a in [scalar::int(2), scalar::int(3), scalar::ratio(1, 3), scalar::int(-3)] {
            let g = osp4_2_alpha(&a).unwrap();
            assert_eq!(g.sdim(), (9, 8));
            g.check_jacobi().unwrap();
            assert_eq!(g.center().dim(), 0);
            assert_eq!(g.derived().dim(), 17);
        }
    }

    #[test]
    fn excluded_alpha_rejected() {
        assert!(osp4_2_alpha(&scalar::int(0)).is_err());
        assert!(osp4_2_alpha(&scalar::int(-1)).is_err());
        assert!(osp4_2_alpha(&scalar::ratio(-1, 2)).is_err());
    }
}
