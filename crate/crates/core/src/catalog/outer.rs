//! Derivations presented explicitly: restriction of ambient adjoint maps
//! to subalgebras, push-down through central quotients, canonical outer
//! generators for each family, and the full derivation algebra of a
//! centerless algebra assembled from its inner part plus outer maps.

use crate::algebra::{coords_in_basis, LieSuperalgebra};
use crate::error::{CoreError, Result};
use crate::matrix::LinearMap;
use crate::space::{Parity, SuperSpace};
use crate::subspace::Subspace;
use crate::svec::{self, SVec};

/// A named outer derivation generator.
pub struct OuterGen {
    pub label: String,
    pub map: LinearMap,
}

/// The map on `rows`-coordinates induced by ad(x) in the ambient algebra;
/// fails when ad(x) does not preserve the span of `rows`.
pub fn restricted_ad(
    ambient: &LieSuperalgebra,
    rows: &[SVec],
    x: &SVec,
) -> Result<LinearMap> {
    let parity = ambient
        .space()
        .try_parity_of_vec(x)
        .map_err(|_| CoreError::Invalid("ad of a parity-mixed element".into()))?
        .unwrap_or(Parity::Even);
    let mut cols = Vec::with_capacity(rows.len());
    for r in rows {
        let v = ambient.bracket(x, r);
        let coords = coords_in_basis(ambient.dim(), rows, &v).ok_or_else(|| {
            CoreError::Invalid("adjoint action leaves the subalgebra".into())
        })?;
        cols.push(svec::from_dense(&coords));
    }
    Ok(LinearMap::from_cols(rows.len(), cols, parity))
}

/// Projection of `v` onto span(reps) along `ideal` (all in the same
/// coordinates); `None` when v ∉ ideal ⊕ span(reps).
pub fn project_along(ideal: &Subspace, reps: &[SVec], v: &SVec) -> Option<SVec> {
    let mut basis: Vec<SVec> = ideal.rows().to_vec();
    basis.extend(reps.iter().cloned());
    let coords = coords_in_basis(ideal.ncols(), &basis, v)?;
    let mut out: SVec = coords[ideal.dim()..]
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(i, c)| (i, c.clone()))
        .collect();
    out.sort_by_key(|(i, _)| *i);
    Some(out)
}

/// Pushes a derivation of a subalgebra down to the quotient by a central
/// ideal it preserves.
pub fn quotient_push(
    d: &LinearMap,
    ideal: &Subspace,
    reps: &[SVec],
) -> Result<LinearMap> {
    for r in ideal.rows() {
        let img = d.apply(r);
        if !ideal.contains(&img) {
            return Err(CoreError::Invalid(
                "derivation does not preserve the ideal".into(),
            ));
        }
    }
    let mut cols = Vec::with_capacity(reps.len());
    for rep in reps {
        let img = d.apply(rep);
        let proj = project_along(ideal, reps, &img).ok_or_else(|| {
            CoreError::Invalid("derivation image escapes the complement".into())
        })?;
        cols.push(proj);
    }
    Ok(LinearMap::from_cols(reps.len(), cols, d.parity()))
}

/// der(g) for a centerless g, assembled as g (acting by ad) extended by
/// the given outer maps; the combined span must be bracket-closed.
pub fn der_algebra(g: &LieSuperalgebra, outs: &[OuterGen]) -> Result<LieSuperalgebra> {
    for o in outs {
        g.is_derivation(&o.map)?;
    }
    let d = g.dim();
    let flat_dim = d * d;
    let mut maps: Vec<LinearMap> = (0..d).map(|i| g.ad_basis(i)).collect();
    maps.extend(outs.iter().map(|o| o.map.clone()));
    let flats: Vec<SVec> = maps.iter().map(|m| m.flatten()).collect();
    let mut basis: Vec<(String, Parity)> = (0..d)
        .map(|i| (g.space().label(i).to_string(), g.space().parity(i)))
        .collect();
    basis.extend(
        outs.iter()
            .map(|o| (o.label.clone(), o.map.parity())),
    );
    let space = SuperSpace::new(basis);
    let total = maps.len();
    let mut table = std::collections::BTreeMap::new();
    for i in 0..total {
        for j in i..total {
            let br = maps[i].supercommutator(&maps[j]).flatten();
            if svec::is_zero(&br) {
                continue;
            }
            let coords = coords_in_basis(flat_dim, &flats, &br).ok_or_else(|| {
                CoreError::Invalid("outer maps do not close under bracket".into())
            })?;
            let v = svec::from_dense(&coords);
            if !svec::is_zero(&v) {
                table.insert((i, j), v);
            }
        }
    }
    LieSuperalgebra::new(format!("der({})", g.name()), space, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::matrixfam::{psl, psq, spe};
    use crate::derivations::derivations;
    use crate::scalar;

    fn diag_gl(nn: usize, entries: &[i64]) -> SVec {
        entries
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| (i * nn + i, scalar::int(e)))
            .collect()
    }

    #[test]
    fn psl_outer_generator_z() {
        let r = psl(3).unwrap();
        let z = r.push_ad(&diag_gl(6, &[1, 1, 1, 0, 0, 0])).unwrap();
        r.alg.is_derivation(&z).unwrap();
        // Z is outer: not in the span of inner derivations.
        let split = derivations(&r.alg);
        assert_eq!(split.out_sdim(), (1, 0));
        assert!(!split.is_inner(&z));
        let der = der_algebra(&r.alg, &[OuterGen { label: "Z".into(), map: z }]).unwrap();
        der.check_jacobi().unwrap();
        assert_eq!(der.dim(), r.alg.dim() + 1);
    }

    #[test]
    fn spe_outer_generator_delta() {
        let r = spe(3).unwrap();
        let mut d = r
            .push_ad(&diag_gl(6, &[1, 1, 1, -1, -1, -1]))
            .unwrap();
        d = d.scale(&crate::scalar::ratio(1, 2));
        r.alg.is_derivation(&d).unwrap();
        let split = derivations(&r.alg);
        assert_eq!(split.out_sdim(), (1, 0));
        assert!(!split.is_inner(&d));
        // Δ acts as 0 on A-part, +1 on B-part, −1 on C-part: eigenvalues.
        let der = der_algebra(&r.alg, &[OuterGen { label: "Delta".into(), map: d }]).unwrap();
        der.check_jacobi().unwrap();
    }

    #[test]
    fn psq_outer_generator_is_odd() {
        let r = psq(3).unwrap();
        // odd element J = [[0,I],[I,0]] of gl(3|3)
        let j: SVec = {
            let mut v: SVec = (0..3).map(|i| (i * 6 + (i + 3), scalar::one())).collect();
            v.extend((0..3).map(|i| ((i + 3) * 6 + i, scalar::one())));
            v.sort_by_key(|(i, _)| *i);
            v
        };
        let d = r.push_ad(&j).unwrap().scale(&crate::scalar::ratio(1, 2));
        assert_eq!(d.parity(), Parity::Odd);
        r.alg.is_derivation(&d).unwrap();
        let split = derivations(&r.alg);
        assert_eq!(split.out_sdim(), (0, 1));
        assert!(!split.is_inner(&d));
        let der = der_algebra(&r.alg, &[OuterGen { label: "D".into(), map: d }]).unwrap();
        der.check_jacobi().unwrap();
    }
}
