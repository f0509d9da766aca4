//! Matrix models inside gl(m|n): the special linear chain sl/psl, the
//! orthosymplectic algebras osp(m|2n) for a split form, the periplectic
//! family pe/spe, and the queer family q/sq/psq/pq.

use std::collections::BTreeMap;

use crate::algebra::{coords_in_basis, LieSuperalgebra};
use crate::error::{CoreError, Result};
use crate::matrix::LinearMap;
use crate::scalar::{self, Scalar};
use crate::space::{Parity, SuperSpace};
use crate::subspace::Subspace;
use crate::svec::{self, SVec};

/// A matrix algebra presented as a subquotient of gl(m|n): RREF rows of
/// the subalgebra in gl coordinates, plus (for psl/psq/pq) the central
/// ideal and explicit complement representatives.
pub struct Realization {
    pub gl: LieSuperalgebra,
    pub m: usize,
    pub n: usize,
    pub sub: LieSuperalgebra,
    /// Basis rows of `sub` in gl coordinates.
    pub sub_rows: Vec<SVec>,
    /// Central ideal in `sub` coordinates, when `alg` is a quotient.
    pub ideal: Option<Subspace>,
    /// Complement representatives in `sub` coordinates.
    pub reps: Option<Vec<SVec>>,
    pub alg: LieSuperalgebra,
}

fn row_parity(m: usize, i: usize) -> usize {
    usize::from(i >= m)
}

fn entry_index(nn: usize, i: usize, j: usize) -> usize {
    i * nn + j
}

/// gl(m|n) on the elementary matrices E_ij, index i(m+n)+j.
pub fn gl(m: usize, n: usize) -> LieSuperalgebra {
    let nn = m + n;
    let basis: Vec<(String, Parity)> = (0..nn * nn)
        .map(|p| {
            let (i, j) = (p / nn, p % nn);
            (
                format!("E{},{}", i + 1, j + 1),
                Parity::from_usize(row_parity(m, i) + row_parity(m, j)),
            )
        })
        .collect();
    let space = SuperSpace::new(basis);
    LieSuperalgebra::from_fn(format!("gl({}|{})", m, n), space.clone(), |p, q| {
        let (i, j) = (p / nn, p % nn);
        let (k, l) = (q / nn, q % nn);
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        if j == k {
            *acc.entry(entry_index(nn, i, l)).or_insert_with(scalar::zero) += scalar::one();
        }
        let sign = space.parity(p).koszul_sign(space.parity(q));
        if l == i {
            *acc.entry(entry_index(nn, k, j)).or_insert_with(scalar::zero) -=
                scalar::int(sign);
        }
        acc.into_iter().filter(|(_, c)| !c.eq(&scalar::zero())).collect()
    })
    .expect("gl structure constants are consistent")
}

/// Supertrace of a gl(m|n) element in flattened coordinates.
pub fn supertrace(m: usize, n: usize, x: &SVec) -> Scalar {
    let nn = m + n;
    let mut t = scalar::zero();
    for (p, c) in x {
        let (i, j) = (p / nn, p % nn);
        if i == j {
            if i < m {
                t += c.clone();
            } else {
                t -= c.clone();
            }
        }
    }
    t
}

fn str_kernel(m: usize, n: usize) -> Subspace {
    let nn = m + n;
    let cols: Vec<SVec> = (0..nn * nn)
        .map(|p| {
            let t = supertrace(m, n, &svec::unit(p));
            if t.eq(&scalar::zero()) {
                SVec::new()
            } else {
                vec![(0usize, t)]
            }
        })
        .collect();
    LinearMap::from_cols(1, cols, Parity::Even).kernel()
}

fn flattened_identity(nn: usize) -> SVec {
    (0..nn).map(|i| (entry_index(nn, i, i), scalar::one())).collect()
}

fn quotient_by_center_line(
    sub: LieSuperalgebra,
    sub_rows: Vec<SVec>,
    glnn: &LieSuperalgebra,
    m: usize,
    n: usize,
    central: SVec,
    name: String,
) -> Result<Realization> {
    let coords = coords_in_basis(glnn.dim(), &sub_rows, &central)
        .ok_or_else(|| CoreError::Invalid("central element outside the subalgebra".into()))?;
    let c_sub = svec::from_dense(&coords);
    let ideal = Subspace::from_rows(sub.dim(), [c_sub]);
    let (alg, reps) = sub.quotient(&ideal, name)?;
    Ok(Realization {
        gl: glnn.clone(),
        m,
        n,
        sub,
        sub_rows,
        ideal: Some(ideal),
        reps: Some(reps),
        alg,
    })
}

/// sl(m|n): supertrace-free matrices.
pub fn sl(m: usize, n: usize) -> Result<Realization> {
    if m + n < 2 {
        return Err(CoreError::Invalid("sl(m|n) needs m+n >= 2".into()));
    }
    let g = gl(m, n);
    let ker = str_kernel(m, n);
    let (sub, sub_rows) = g.subalgebra(&ker, format!("sl({}|{})", m, n))?;
    Ok(Realization {
        gl: g,
        m,
        n,
        sub: sub.clone(),
        sub_rows,
        ideal: None,
        reps: None,
        alg: sub,
    })
}

/// psl(n|n) = sl(n|n) / ⟨identity⟩.
pub fn psl(n: usize) -> Result<Realization> {
    if n < 2 {
        return Err(CoreError::Invalid("psl(n|n) needs n >= 2".into()));
    }
    let r = sl(n, n)?;
    quotient_by_center_line(
        r.sub,
        r.sub_rows,
        &r.gl,
        n,
        n,
        flattened_identity(2 * n),
        format!("psl({}|{})", n, n),
    )
}

/// Gram matrix of the split even supersymmetric form: antidiagonal ones on
/// the even block, antidiagonal ±1 on the odd (symplectic) block.
fn split_form(m: usize, n2: usize) -> Vec<(usize, usize, Scalar)> {
    let nn = m + n2;
    let mut g = Vec::new();
    for a in 0..m {
        g.push((a, m - 1 - a, scalar::one()));
    }
    let half = n2 / 2;
    for a in 0..n2 {
        let val = if a < half { scalar::one() } else { scalar::int(-1) };
        g.push((m + a, m + n2 - 1 - a, val));
    }
    let _ = nn;
    g
}

/// osp(m|2n): X with X^{st} G + G X = 0 for the split form G.
pub fn osp(m: usize, n2: usize) -> Result<Realization> {
    if n2 % 2 != 0 || n2 == 0 || m == 0 {
        return Err(CoreError::Invalid(
            "osp(m|2n) needs m >= 1 and a positive even odd-dimension".into(),
        ));
    }
    let glmn = gl(m, n2);
    let nn = m + n2;
    let form = split_form(m, n2);
    // φ(E_ij) = sign(i,j) E_ji G + G E_ij, sign = −1 exactly on the
    // even-row/odd-column block (supertranspose convention).
    let cols: Vec<SVec> = (0..nn * nn)
        .map(|p| {
            let (i, j) = (p / nn, p % nn);
            let st_sign = if i < m && j >= m { -1i64 } else { 1 };
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (r, c, v) in &form {
                // (E_ji G)_{ab} = δ_{a,j} G_{i,b}
                if *r == i {
                    *acc.entry(entry_index(nn, j, *c)).or_insert_with(scalar::zero) +=
                        v * &scalar::int(st_sign);
                }
                // (G E_ij)_{ab} = G_{a,i} δ_{j,b}
                if *c == i {
                    *acc.entry(entry_index(nn, *r, j)).or_insert_with(scalar::zero) +=
                        v.clone();
                }
            }
            acc.into_iter().filter(|(_, c)| !c.eq(&scalar::zero())).collect()
        })
        .collect();
    let ker = LinearMap::from_cols(nn * nn, cols, Parity::Even).kernel();
    let (sub, sub_rows) = glmn.subalgebra(&ker, format!("osp({}|{})", m, n2))?;
    Ok(Realization {
        gl: glmn,
        m,
        n: n2,
        sub: sub.clone(),
        sub_rows,
        ideal: None,
        reps: None,
        alg: sub,
    })
}

fn condition_kernel(
    glnn: &LieSuperalgebra,
    nn: usize,
    conds: impl Fn(usize, usize) -> Vec<(usize, usize, Scalar)>,
    extra_trace: Option<Vec<(usize, Scalar)>>,
) -> Subspace {
    // Conditions indexed by matrix positions in a condition matrix plus an
    // optional trace functional appended last.
    let ncond = nn * nn + 1;
    let cols: Vec<SVec> = (0..glnn.dim())
        .map(|p| {
            let (i, j) = (p / nn, p % nn);
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (a, b, v) in conds(i, j) {
                *acc.entry(entry_index(nn, a, b)).or_insert_with(scalar::zero) += v;
            }
            if let Some(tr) = &extra_trace {
                for (idx, v) in tr {
                    if *idx == p {
                        *acc.entry(nn * nn).or_insert_with(scalar::zero) += v.clone();
                    }
                }
            }
            acc.into_iter().filter(|(_, c)| !c.eq(&scalar::zero())).collect()
        })
        .collect();
    LinearMap::from_cols(ncond, cols, Parity::Even).kernel()
}

/// pe(n) ⊂ gl(n|n): blocks [[A,B],[C,−Aᵀ]] with B symmetric, C
/// antisymmetric; spe(n) additionally has tr A = 0.
fn periplectic(n: usize, special: bool) -> Result<Realization> {
    if n < 2 || (special && n < 3) {
        return Err(CoreError::Invalid("pe needs n >= 2, spe needs n >= 3".into()));
    }
    let glnn = gl(n, n);
    let nn = 2 * n;
    let conds = |i: usize, j: usize| -> Vec<(usize, usize, Scalar)> {
        let mut out = Vec::new();
        if i < n && j < n {
            // D_{ji} + A_{ij} = 0, filed at condition slot (j+n, i+n)
            out.push((j + n, i + n, scalar::one()));
        }
        if i >= n && j >= n {
            out.push((i, j, scalar::one()));
        }
        if i < n && j >= n {
            // B block: B_{i,j−n} − B_{j−n,i} = 0 at slot (min, max) upper
            let (a, b) = (i, j - n);
            if a < b {
                out.push((a, b + n, scalar::one()));
            } else if a > b {
                out.push((b, a + n, scalar::int(-1)));
            }
        }
        if i >= n && j < n {
            // C block: C_{i−n,j} + C_{j,i−n} = 0 at slot (min+n, max)
            let (a, b) = (i - n, j);
            if a <= b {
                out.push((a + n, b, scalar::one()));
            } else {
                out.push((b + n, a, scalar::one()));
            }
        }
        out
    };
    let trace = if special {
        Some(
            (0..n)
                .map(|i| (entry_index(nn, i, i), scalar::one()))
                .collect::<Vec<_>>(),
        )
    } else {
        None
    };
    let ker = condition_kernel(&glnn, nn, conds, trace);
    let name = if special { format!("spe({})", n) } else { format!("pe({})", n) };
    let (sub, sub_rows) = glnn.subalgebra(&ker, name)?;
    Ok(Realization {
        gl: glnn,
        m: n,
        n,
        sub: sub.clone(),
        sub_rows,
        ideal: None,
        reps: None,
        alg: sub,
    })
}

pub fn pe(n: usize) -> Result<Realization> {
    periplectic(n, false)
}

pub fn spe(n: usize) -> Result<Realization> {
    periplectic(n, true)
}

/// q(n) ⊂ gl(n|n): blocks [[A,B],[B,A]]; sq(n) has tr B = 0.
fn queer(n: usize, special: bool) -> Result<Realization> {
    if n < 2 {
        return Err(CoreError::Invalid("q(n) needs n >= 2".into()));
    }
    let glnn = gl(n, n);
    let nn = 2 * n;
    let conds = |i: usize, j: usize| -> Vec<(usize, usize, Scalar)> {
        let mut out = Vec::new();
        if i < n && j < n {
            // D − A = 0 at slot (i+n, j+n)
            out.push((i + n, j + n, scalar::int(-1)));
        }
        if i >= n && j >= n {
            out.push((i, j, scalar::one()));
        }
        if i < n && j >= n {
            // C − B = 0 at slot (i+n, j−n): −B part
            out.push((i + n, j - n, scalar::int(-1)));
        }
        if i >= n && j < n {
            out.push((i, j, scalar::one()));
        }
        out
    };
    let trace = if special {
        Some(
            (0..n)
                .map(|i| (entry_index(nn, i, i + n), scalar::one()))
                .collect::<Vec<_>>(),
        )
    } else {
        None
    };
    let ker = condition_kernel(&glnn, nn, conds, trace);
    let name = if special { format!("sq({})", n) } else { format!("q({})", n) };
    let (sub, sub_rows) = glnn.subalgebra(&ker, name)?;
    Ok(Realization {
        gl: glnn,
        m: n,
        n,
        sub: sub.clone(),
        sub_rows,
        ideal: None,
        reps: None,
        alg: sub,
    })
}

pub fn q(n: usize) -> Result<Realization> {
    queer(n, false)
}

pub fn sq(n: usize) -> Result<Realization> {
    queer(n, true)
}

/// psq(n) = sq(n) / ⟨identity⟩.
pub fn psq(n: usize) -> Result<Realization> {
    if n < 3 {
        return Err(CoreError::Invalid("psq(n) needs n >= 3".into()));
    }
    let r = sq(n)?;
    quotient_by_center_line(
        r.sub,
        r.sub_rows,
        &r.gl,
        n,
        n,
        flattened_identity(2 * n),
        format!("psq({})", n),
    )
}

/// pq(n) = q(n) / ⟨identity⟩.
pub fn pq(n: usize) -> Result<Realization> {
    let r = q(n)?;
    quotient_by_center_line(
        r.sub,
        r.sub_rows,
        &r.gl,
        n,
        n,
        flattened_identity(2 * n),
        format!("pq({})", n),
    )
}

impl Realization {
    /// Lifts a basis vector of `alg` to gl coordinates.
    pub fn lift(&self, v: &SVec) -> SVec {
        let in_sub = match &self.reps {
            Some(reps) => {
                let mut acc = SVec::new();
                for (i, c) in v {
                    acc = svec::add_scaled(&acc, c, &reps[*i]);
                }
                acc
            }
            None => v.clone(),
        };
        let mut out = SVec::new();
        for (i, c) in &in_sub {
            out = svec::add_scaled(&out, c, &self.sub_rows[*i]);
        }
        out
    }

    /// The derivation of `alg` induced by ad(x) for x ∈ gl(m|n), provided
    /// ad(x) preserves the subalgebra (and the central ideal).
    pub fn push_ad(&self, x: &SVec) -> Result<LinearMap> {
        let d = super::outer::restricted_ad(&self.gl, &self.sub_rows, x)?;
        match (&self.ideal, &self.reps) {
            (Some(ideal), Some(reps)) => super::outer::quotient_push(&d, ideal, reps),
            _ => Ok(d),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_of_matrix_families() {
        assert_eq!(gl(2, 1).sdim(), (5, 4));
        assert_eq!(sl(2, 1).unwrap().alg.sdim(), (4, 4));
        assert_eq!(psl(2).unwrap().alg.sdim(), (6, 8));
        assert_eq!(osp(3, 2).unwrap().alg.sdim(), (6, 6));
        assert_eq!(osp(4, 2).unwrap().alg.sdim(), (9, 8));
        assert_eq!(pe(3).unwrap().alg.sdim(), (9, 9));
        assert_eq!(spe(3).unwrap().alg.sdim(), (8, 9));
        assert_eq!(q(3).unwrap().alg.sdim(), (9, 9));
        assert_eq!(sq(3).unwrap().alg.sdim(), (9, 8));
        assert_eq!(psq(3).unwrap().alg.sdim(), (8, 8));
    }

    #[test]
    fn jacobi_on_small_instances() {
        for alg in [
            sl(2, 1).unwrap().alg,
            psl(2).unwrap().alg,
            osp(3, 2).unwrap().alg,
            spe(3).unwrap().alg,
            psq(3).unwrap().alg,
            pq(3).unwrap().alg,
        ] {
            alg.check_jacobi().unwrap();
        }
    }

    #[test]
    fn simple_instances_are_centerless_and_perfect() {
        for alg in [
            psl(2).unwrap().alg,
            osp(3, 2).unwrap().alg,
            spe(3).unwrap().alg,
            psq(3).unwrap().alg,
        ] {
            assert_eq!(alg.center().dim(), 0, "{}", alg.name());
            assert_eq!(alg.derived().dim(), alg.dim(), "{}", alg.name());
        }
    }

    #[test]
    fn osp_cartan_is_diagonal() {
        let r = osp(3, 2).unwrap();
        // diagonal RREF rows should have diagonal ad
        let diag: Vec<usize> = (0..r.alg.dim())
            .filter(|&i| {
                let ad = r.alg.ad_basis(i);
                (0..r.alg.dim()).all(|j| {
                    ad.col(j).iter().all(|(k, _)| *k == j)
                })
            })
            .collect();
        assert_eq!(diag.len(), 2);
    }
}
