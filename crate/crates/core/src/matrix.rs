//! Sparse linear maps (column-major) and exact characteristic polynomials.

use crate::scalar::{self, Scalar};
use crate::space::Parity;
use crate::subspace::{RrefBuilder, Subspace};
use crate::svec::{self, SVec};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// A linear map `Q^domain -> Q^codomain` stored by columns, together with
/// its parity as a map of super spaces (`Even` preserves parities, `Odd`
/// swaps them).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    codomain: usize,
    cols: Vec<SVec>,
    parity: Parity,
}

impl LinearMap {
    pub fn zero(domain: usize, codomain: usize, parity: Parity) -> Self {
        LinearMap { codomain, cols: vec![Vec::new(); domain], parity }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap {
            codomain: n,
            cols: (0..n).map(svec::unit).collect(),
            parity: Parity::Even,
        }
    }

    pub fn from_cols(codomain: usize, cols: Vec<SVec>, parity: Parity) -> Self {
        debug_assert!(cols.iter().flatten().all(|(i, _)| *i < codomain));
        LinearMap { codomain, cols, parity }
    }

    pub fn domain(&self) -> usize {
        self.cols.len()
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn col(&self, j: usize) -> &SVec {
        &self.cols[j]
    }

    pub fn cols(&self) -> &[SVec] {
        &self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        svec::get(&self.cols[j], i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn set_entry(&mut self, i: usize, j: usize, c: Scalar) {
        let col = &mut self.cols[j];
        match col.binary_search_by_key(&i, |(k, _)| *k) {
            Ok(k) => {
                if c.is_zero() {
                    col.remove(k);
                } else {
                    col[k].1 = c;
                }
            }
            Err(k) => {
                if !c.is_zero() {
                    col.insert(k, (i, c));
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn apply(&self, v: &SVec) -> SVec {
        let mut out: SVec = Vec::new();
        for (j, c) in v {
            out = svec::add_scaled(&out, c, &self.cols[*j]);
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.domain(), other.codomain);
        LinearMap {
            codomain: self.codomain,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
            parity: self.parity + other.parity,
        }
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.domain(), other.domain());
        assert_eq!(self.codomain, other.codomain);
        assert_eq!(self.parity, other.parity, "adding maps of different parity");
        LinearMap {
            codomain: self.codomain,
            cols: self
                .cols
                .iter()
                .zip(&other.cols)
                .map(|(a, b)| svec::add(a, b))
                .collect(),
            parity: self.parity,
        }
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap {
            codomain: self.codomain,
            cols: self.cols.iter().map(|col| svec::scale(col, c)).collect(),
            parity: self.parity,
        }
    }

    /// Supercommutator `self ∘ other - (-1)^{|self||other|} other ∘ self`.
    pub fn supercommutator(&self, other: &LinearMap) -> LinearMap {
        let ab = self.compose(other);
        let ba = other.compose(self);
        let sign = scalar::int(-self.parity.koszul_sign(other.parity));
        ab.add(&ba.scale(&sign))
    }

    /// Flattens to a vector of length `domain * codomain`, entry `(i, j)`
    /// at index `i * domain + j` (row-major).
    pub fn flatten(&self) -> SVec {
        let n = self.domain();
        let mut out: Vec<(usize, Scalar)> = Vec::new();
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col {
                out.push((i * n + j, c.clone()));
            }
        }
        out.sort_by_key(|(k, _)| *k);
        out
    }

    pub fn from_flat(domain: usize, codomain: usize, flat: &SVec, parity: Parity) -> Self {
        let mut m = LinearMap::zero(domain, codomain, parity);
        for (k, c) in flat {
            m.set_entry(k / domain, k % domain, c.clone());
        }
        m
    }

    pub fn image(&self) -> Subspace {
        Subspace::from_rows(self.codomain, self.cols.iter().cloned())
    }

    pub fn kernel(&self) -> Subspace {
        // Equations indexed by output coordinates: row i over unknowns j.
        let mut rows: Vec<SVec> = vec![Vec::new(); self.codomain];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col {
                rows[*i].push((j, c.clone()));
            }
        }
        let mut b = RrefBuilder::new(self.domain());
        for r in rows {
            b.insert(r);
        }
        b.kernel()
    }

    pub fn rank(&self) -> usize {
        self.image().dim()
    }

    /// Restricts an invariant subspace: columns are coordinates of the image
    /// of each basis row of `sub` expressed in the basis of `sub`.
    /// Panics if `sub` is not invariant.
    pub fn restrict(&self, sub: &Subspace) -> LinearMap {
        let cols: Vec<SVec> = sub
            .rows()
            .iter()
            .map(|r| {
                let img = self.apply(r);
                let coords = sub
                    .coords(&img)
                    .expect("subspace is not invariant under the map");
                svec::from_dense(&coords)
            })
            .collect();
        LinearMap { codomain: sub.dim(), cols, parity: self.parity }
    }

    pub fn transpose(&self) -> LinearMap {
        let mut cols: Vec<SVec> = vec![Vec::new(); self.codomain];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col {
                cols[*i].push((j, c.clone()));
            }
        }
        for c in &mut cols {
            c.sort_by_key(|(i, _)| *i);
        }
        LinearMap { codomain: self.domain(), cols, parity: self.parity }
    }

    pub fn trace(&self) -> Scalar {
        let mut t = Scalar::zero();
        for (j, col) in self.cols.iter().enumerate() {
            if let Some(c) = svec::get(col, j) {
                t += c;
            }
        }
        t
    }
}

/// Characteristic polynomial of a square map by the Faddeev–LeVerrier
/// recurrence; returns coefficients `c_0 .. c_n` of
/// `c_0 + c_1 x + ... + c_n x^n` with `c_n = 1`.
pub fn char_poly(m: &LinearMap) -> Vec<Scalar> {
    let n = m.domain();
    assert_eq!(n, m.codomain, "characteristic polynomial of a square map");
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = scalar::one();
    let mut aux = LinearMap::identity(n); // M_1 = I
    for k in 1..=n {
        let prod = m.compose(&aux);
        let c = -prod.trace() / scalar::int(k as i64);
        coeffs[n - k] = c.clone();
        if k < n {
            let mut shifted = prod;
            for j in 0..n {
                let e = shifted.entry(j, j) + &c;
                shifted.set_entry(j, j, e);
            }
            aux = shifted;
        }
    }
    coeffs
}

/// All integer roots of a monic integer-coefficient polynomial given as
/// `c_0 .. c_n` (rational input is scaled first). Roots of the zero
/// polynomial are rejected; strip zero roots before calling if needed.
pub fn integer_roots(coeffs: &[Scalar]) -> Vec<i64> {
    // Strip trailing zeros (leading coefficient side is last).
    let mut cs: Vec<Scalar> = coeffs.to_vec();
    while cs.last().map(|c| c.is_zero()).unwrap_or(false) {
        cs.pop();
    }
    assert!(!cs.is_empty(), "zero polynomial");
    // Factor out x^m.
    let mut low = 0;
    while cs[low].is_zero() {
        low += 1;
    }
    let cs = &cs[low..];
    let mut roots: Vec<i64> = if low > 0 { vec![0] } else { vec![] };
    if cs.len() == 1 {
        return roots;
    }
    // Clear denominators.
    let mut lcm = BigInt::one();
    for c in cs {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = cs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let constant = ints[0].magnitude().clone();
    let eval = |r: i64| -> bool {
        let x = BigInt::from(r);
        let mut acc = BigInt::zero();
        for c in ints.iter().rev() {
            acc = acc * &x + c;
        }
        acc.is_zero()
    };
    // Candidate roots divide the constant term.
    let mut d = BigInt::one();
    let limit = BigInt::from(i64::MAX);
    while &d * &d <= BigInt::from(constant.clone()) {
        if (BigInt::from(constant.clone()) % &d).is_zero() {
            for cand in [d.clone(), BigInt::from(constant.clone()) / &d] {
                if cand <= limit {
                    let c = i64::try_from(cand).unwrap();
                    for r in [c, -c] {
                        if eval(r) && !roots.contains(&r) {
                            roots.push(r);
                        }
                    }
                }
            }
        }
        d += 1;
    }
    roots.sort();
    roots
}
