//! Named vector-field algebras inside W(n): the full algebra W(n), the
//! divergence-free algebra S(n), its extension CS(n) by the Euler field,
//! and the Hamiltonian algebras H(n) ⊂ H'(n); plus their canonical outer
//! derivations and the restriction of type-k gradings.

use crate::algebra::LieSuperalgebra;
use crate::error::{CoreError, Result};
use crate::grassmann::{TypeK, WCtx};
use crate::subspace::Subspace;
use crate::svec::{self, SVec};

use super::outer::{restricted_ad, OuterGen};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CartanFamily {
    W,
    S,
    CS,
    H,
    Hfull,
}

pub struct CartanModel {
    pub family: CartanFamily,
    pub w: WCtx,
    pub walg: LieSuperalgebra,
    pub alg: LieSuperalgebra,
    /// Basis rows of `alg` in W(n) coordinates.
    pub rows: Vec<SVec>,
}

impl CartanModel {
    pub fn build(family: CartanFamily, n: usize) -> Result<CartanModel> {
        let min = match family {
            CartanFamily::W => 3,
            CartanFamily::S | CartanFamily::CS => 4,
            CartanFamily::H | CartanFamily::Hfull => 5,
        };
        if n < min {
            return Err(CoreError::Invalid(format!(
                "family requires n >= {}",
                min
            )));
        }
        Self::build_unchecked(family, n)
    }

    /// Same construction without the size conventions (used internally for
    /// small cross-checks such as S(3) ≅ spe(3)).
    pub fn build_unchecked(family: CartanFamily, n: usize) -> Result<CartanModel> {
        let w = WCtx::new(n);
        let walg = w.algebra();
        let (span, name) = match family {
            CartanFamily::W => (Subspace::full(w.dim()), format!("W({})", n)),
            CartanFamily::S => (w.divergence_free(), format!("S({})", n)),
            CartanFamily::CS => {
                let mut s = w.divergence_free();
                s = s.sum(&Subspace::from_rows(w.dim(), [w.euler()]));
                (s, format!("CS({})", n))
            }
            CartanFamily::H => (w.hamiltonian_span(false), format!("H({})", n)),
            CartanFamily::Hfull => (w.hamiltonian_span(true), format!("H'({})", n)),
        };
        let (alg, rows) = walg.subalgebra(&span, name)?;
        Ok(CartanModel {
            family,
            w,
            walg,
            alg,
            rows,
        })
    }

    /// Canonical outer derivation generators: none for W(n) and CS(n); the
    /// Euler field for S(n); the Euler field and the Hamiltonian field of
    /// the top monomial for H(n); the Euler field for H'(n).
    pub fn outer_gens(&self) -> Result<Vec<OuterGen>> {
        let euler = || -> Result<OuterGen> {
            Ok(OuterGen {
                label: "E".into(),
                map: restricted_ad(&self.walg, &self.rows, &self.w.euler())?,
            })
        };
        let top_field = || -> Result<OuterGen> {
            let top = self.w.gr.dim() - 1;
            let h = self.w.hamiltonian(&svec::unit(top));
            Ok(OuterGen {
                label: "Htop".into(),
                map: restricted_ad(&self.walg, &self.rows, &h)?,
            })
        };
        Ok(match self.family {
            CartanFamily::W | CartanFamily::CS => vec![],
            CartanFamily::S | CartanFamily::Hfull => vec![euler()?],
            CartanFamily::H => vec![euler()?, top_field()?],
        })
    }

    /// Degrees of the basis rows under a type-k grading of W(n); fails if
    /// some row is not homogeneous (e.g. H(n) with k not constant on the
    /// pairing ξ_a ↔ ξ_{n+1−a}).
    pub fn typek_degrees(&self, k: &TypeK) -> Result<Vec<i64>> {
        let field_deg = k.field_degrees(&self.w);
        let mut out = Vec::with_capacity(self.rows.len());
        for (ri, r) in self.rows.iter().enumerate() {
            let mut deg: Option<i64> = None;
            for (i, _) in r {
                match deg {
                    None => deg = Some(field_deg[*i]),
                    Some(d) if d == field_deg[*i] => {}
                    _ => {
                        return Err(CoreError::NotGraded {
                            p: ri as i64,
                            q: field_deg[*i],
                        })
                    }
                }
            }
            out.push(deg.unwrap_or(0));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivations::derivations;
    use crate::grading::Grading;

    #[test]
    fn dimensions() {
        let s4 = CartanModel::build(CartanFamily::S, 4).unwrap();
        assert_eq!(s4.alg.dim(), 3 * 16 + 1);
        assert_eq!(s4.alg.sdim(), (25, 24));
        let h5 = CartanModel::build(CartanFamily::H, 5).unwrap();
        assert_eq!(h5.alg.dim(), 30);
        assert_eq!(h5.alg.sdim(), (15, 15));
        let cs4 = CartanModel::build(CartanFamily::CS, 4).unwrap();
        assert_eq!(cs4.alg.dim(), 50);
    }

    #[test]
    fn s3_matches_spe3_dimension() {
        let s3 = CartanModel::build_unchecked(CartanFamily::S, 3).unwrap();
        let spe3 = crate::catalog::matrixfam::spe(3).unwrap();
        assert_eq!(s3.alg.dim(), spe3.alg.dim());
        assert_eq!(s3.alg.sdim().0 + s3.alg.sdim().1, 17);
    }

    #[test]
    fn s4_outer_is_euler_line() {
        let s4 = CartanModel::build(CartanFamily::S, 4).unwrap();
        let outs = s4.outer_gens().unwrap();
        assert_eq!(outs.len(), 1);
        s4.alg.is_derivation(&outs[0].map).unwrap();
        let split = derivations(&s4.alg);
        assert_eq!(split.out_sdim(), (1, 0));
        assert!(!split.is_inner(&outs[0].map));
    }

    #[test]
    fn principal_grading_restricts_to_s4() {
        let s4 = CartanModel::build(CartanFamily::S, 4).unwrap();
        let k = TypeK::new(vec![1, 1, 1, 1]);
        let degs = s4.typek_degrees(&k).unwrap();
        let g = Grading::from_degrees(&s4.alg, degs).unwrap();
        let (d, h) = g.depth_height();
        assert_eq!(d, 1);
        assert_eq!(h, 2);
    }

    #[test]
    fn h5_needs_paired_degrees() {
        let h5 = CartanModel::build(CartanFamily::H, 5).unwrap();
        assert!(h5.typek_degrees(&TypeK::new(vec![1, 0, 0, 0, 0])).is_err());
        let ok = h5.typek_degrees(&TypeK::new(vec![0, 0, 0, 0, 0])).unwrap();
        assert!(ok.iter().all(|&d| d == 0));
        let princ = h5.typek_degrees(&TypeK::new(vec![1, 1, 1, 1, 1])).unwrap();
        let g = Grading::from_degrees(&h5.alg, princ).unwrap();
        assert_eq!(g.depth_height().0, 1);
    }
}
