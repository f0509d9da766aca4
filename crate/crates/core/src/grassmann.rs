//! Exterior (Grassmann) algebra Λ(n) on odd generators, the Lie
//! superalgebra W(n) of its derivations, the divergence-free and
//! Hamiltonian subalgebras, per-variable integer gradings, and the
//! constructions `s ⊗ Λ(n)` and `(der s ⊗ Λ(n)) ⋊ W(n)` used for
//! semisimple algebras with a tensor-product socle.

use std::collections::BTreeMap;

use crate::algebra::LieSuperalgebra;
use crate::error::{CoreError, Result};
use crate::matrix::LinearMap;
use crate::scalar::{self, Scalar};
use crate::space::{Parity, SuperSpace};
use crate::subspace::{RrefBuilder, Subspace};
use crate::svec::{self, SVec};

/// Λ(n): basis of monomials ξ^S indexed by bitmask subsets S of the odd
/// generators ξ_1, …, ξ_n, ordered by (|S|, mask).
pub struct Grassmann {
    n: usize,
    masks: Vec<u32>,
    index: Vec<usize>, // mask -> basis index
}

impl Grassmann {
    pub fn new(n: usize) -> Self {
        assert!(n <= 20, "too many odd generators");
        let mut masks: Vec<u32> = (0..1u32 << n).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        let mut index = vec![0usize; 1 << n];
        for (i, &m) in masks.iter().enumerate() {
            index[m as usize] = i;
        }
        Grassmann { n, masks, index }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    pub fn mask(&self, i: usize) -> u32 {
        self.masks[i]
    }

    pub fn index_of_mask(&self, mask: u32) -> usize {
        self.index[mask as usize]
    }

    /// Exterior degree |S| of the i-th monomial.
    pub fn mon_degree(&self, i: usize) -> usize {
        self.masks[i].count_ones() as usize
    }

    pub fn mon_parity(&self, i: usize) -> Parity {
        Parity::from_usize(self.mon_degree(i))
    }

    pub fn mon_label(&self, i: usize) -> String {
        let m = self.masks[i];
        if m == 0 {
            return "1".into();
        }
        (0..self.n)
            .filter(|a| m >> a & 1 == 1)
            .map(|a| format!("x{}", a + 1))
            .collect()
    }

    pub fn space(&self) -> SuperSpace {
        SuperSpace::new(
            (0..self.dim())
                .map(|i| (self.mon_label(i), self.mon_parity(i)))
                .collect(),
        )
    }

    /// ξ^S · ξ^T with the Koszul sign from sorting the concatenation;
    /// `None` when the factors share a generator.
    pub fn mul_mon(&self, i: usize, j: usize) -> Option<(usize, i64)> {
        let (s, t) = (self.masks[i], self.masks[j]);
        if s & t != 0 {
            return None;
        }
        // Count inversions: pairs a ∈ S, b ∈ T with a > b.
        let mut inv = 0u32;
        for a in 0..self.n {
            if s >> a & 1 == 1 {
                inv += (t & ((1 << a) - 1)).count_ones();
            }
        }
        let sign = if inv % 2 == 0 { 1 } else { -1 };
        Some((self.index_of_mask(s | t), sign))
    }

    pub fn mul(&self, f: &SVec, g: &SVec) -> SVec {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, a) in f {
            for (j, b) in g {
                if let Some((k, sign)) = self.mul_mon(*i, *j) {
                    let c = a * b * scalar::int(sign);
                    let e = acc.entry(k).or_insert_with(scalar::zero);
                    *e += c;
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.eq(&scalar::zero())).collect()
    }

    /// Left partial derivative ∂_a ξ^S (a is 0-based).
    pub fn deriv_mon(&self, a: usize, i: usize) -> Option<(usize, i64)> {
        let s = self.masks[i];
        if s >> a & 1 == 0 {
            return None;
        }
        let below = (s & ((1u32 << a) - 1)).count_ones();
        let sign = if below % 2 == 0 { 1 } else { -1 };
        Some((self.index_of_mask(s & !(1 << a)), sign))
    }

    pub fn deriv(&self, a: usize, f: &SVec) -> SVec {
        let mut out: Vec<(usize, Scalar)> = f
            .iter()
            .filter_map(|(i, c)| {
                self.deriv_mon(a, *i)
                    .map(|(k, sign)| (k, c * scalar::int(sign)))
            })
            .collect();
        out.sort_by_key(|(i, _)| *i);
        out
    }
}

/// W(n): vector fields ξ^S ∂_a on Λ(n). Basis index `m * n + a` where
/// `m` is the monomial index and `a` the 0-based derivative slot;
/// parity of ξ^S ∂_a is |S| + 1.
pub struct WCtx {
    pub gr: Grassmann,
}

impl WCtx {
    pub fn new(n: usize) -> Self {
        WCtx { gr: Grassmann::new(n) }
    }

    pub fn nvars(&self) -> usize {
        self.gr.nvars()
    }

    pub fn dim(&self) -> usize {
        self.gr.dim() * self.gr.nvars()
    }

    pub fn field_index(&self, mon: usize, a: usize) -> usize {
        mon * self.gr.nvars() + a
    }

    pub fn field_parts(&self, idx: usize) -> (usize, usize) {
        (idx / self.gr.nvars(), idx % self.gr.nvars())
    }

    pub fn field_parity(&self, idx: usize) -> Parity {
        let (m, _) = self.field_parts(idx);
        Parity::from_usize(self.gr.mon_degree(m) + 1)
    }

    pub fn field_label(&self, idx: usize) -> String {
        let (m, a) = self.field_parts(idx);
        if self.gr.mask(m) == 0 {
            format!("d{}", a + 1)
        } else {
            format!("{}d{}", self.gr.mon_label(m), a + 1)
        }
    }

    pub fn space(&self) -> SuperSpace {
        SuperSpace::new(
            (0..self.dim())
                .map(|i| (self.field_label(i), self.field_parity(i)))
                .collect(),
        )
    }

    /// Applies a vector field (in W coordinates) to an element of Λ(n).
    pub fn apply_field(&self, x: &SVec, g: &SVec) -> SVec {
        let n = self.gr.nvars();
        let mut acc = SVec::new();
        for (idx, c) in x {
            let (m, a) = self.field_parts(*idx);
            let dg = self.deriv(a, g);
            let term = self.gr.mul(&svec::unit(m), &dg);
            acc = svec::add_scaled(&acc, c, &term);
        }
        let _ = n;
        acc
    }

    fn deriv(&self, a: usize, g: &SVec) -> SVec {
        self.gr.deriv(a, g)
    }

    /// [ξ^S ∂_a, ξ^T ∂_b] = ξ^S (∂_a ξ^T) ∂_b
    ///   − (−1)^{(|S|+1)(|T|+1)} ξ^T (∂_b ξ^S) ∂_a.
    pub fn bracket_fields(&self, i: usize, j: usize) -> SVec {
        let (mi, a) = self.field_parts(i);
        let (mj, b) = self.field_parts(j);
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        if let Some((dt, s1)) = self.gr.deriv_mon(a, mj) {
            if let Some((prod, s2)) = self.gr.mul_mon(mi, dt) {
                let e = acc
                    .entry(self.field_index(prod, b))
                    .or_insert_with(scalar::zero);
                *e += scalar::int(s1 * s2);
            }
        }
        let koszul = self.field_parity(i).koszul_sign(self.field_parity(j));
        if let Some((ds, s1)) = self.gr.deriv_mon(b, mi) {
            if let Some((prod, s2)) = self.gr.mul_mon(mj, ds) {
                let e = acc
                    .entry(self.field_index(prod, a))
                    .or_insert_with(scalar::zero);
                *e += scalar::int(-koszul * s1 * s2);
            }
        }
        acc.into_iter().filter(|(_, c)| !c.eq(&scalar::zero())).collect()
    }

    pub fn algebra(&self) -> LieSuperalgebra {
        let space = self.space();
        let alg = LieSuperalgebra::from_fn(
            format!("W({})", self.gr.nvars()),
            space,
            |i, j| self.bracket_fields(i, j),
        )
        .expect("W(n) structure constants are consistent");
        alg
    }

    /// The vector field as an odd-degree operator matrix on Λ(n); used to
    /// cross-check the bracket against the operator supercommutator.
    pub fn field_as_operator(&self, x: &SVec) -> LinearMap {
        let d = self.gr.dim();
        let parity = self
            .space()
            .parity_of_vec(x)
            .expect("operator form needs a parity-homogeneous field");
        let cols = (0..d)
            .map(|m| self.apply_field(x, &svec::unit(m)))
            .collect();
        LinearMap::from_cols(d, cols, parity)
    }

    /// Euler field Σ_a ξ_a ∂_a.
    pub fn euler(&self) -> SVec {
        let mut v: SVec = (0..self.gr.nvars())
            .map(|a| {
                let m = self.gr.index_of_mask(1 << a);
                (self.field_index(m, a), scalar::one())
            })
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    /// div(ξ^S ∂_a) = ∂_a ξ^S, extended linearly (an element of Λ(n)).
    pub fn divergence(&self, x: &SVec) -> SVec {
        let mut acc = SVec::new();
        for (idx, c) in x {
            let (m, a) = self.field_parts(*idx);
            if let Some((k, sign)) = self.gr.deriv_mon(a, m) {
                acc = svec::add_scaled(&acc, c, &svec::scale(&svec::unit(k), &scalar::int(sign)));
            }
        }
        acc
    }

    /// Canonical basis of the divergence-free fields S(n) ⊂ W(n).
    pub fn divergence_free(&self) -> Subspace {
        let cols = (0..self.dim())
            .map(|i| self.divergence(&svec::unit(i)))
            .collect();
        let div = LinearMap::from_cols(self.gr.dim(), cols, Parity::Odd);
        div.kernel()
    }

    /// Hamiltonian field of f ∈ Λ(n):
    /// H_f = −(−1)^{|f|} Σ_α (∂f/∂ξ_α) ∂_{ξ_{n+1−α}}.
    pub fn hamiltonian(&self, f: &SVec) -> SVec {
        let n = self.gr.nvars();
        let space = self.gr.space();
        let pf = space
            .parity_of_vec(f)
            .expect("Hamiltonian of a parity-homogeneous element");
        let lead = if pf == Parity::Even { -1 } else { 1 };
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, c) in f {
            for a in 0..n {
                if let Some((m, sign)) = self.gr.deriv_mon(a, *i) {
                    let idx = self.field_index(m, n - 1 - a);
                    let e = acc.entry(idx).or_insert_with(scalar::zero);
                    *e += c * scalar::int(lead * sign);
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.eq(&scalar::zero())).collect()
    }

    /// Span of Hamiltonian fields H_f over monomials with
    /// 1 ≤ |S| ≤ n−1 (plus the top monomial when `with_top`).
    pub fn hamiltonian_span(&self, with_top: bool) -> Subspace {
        let n = self.gr.nvars();
        let hi = if with_top { n } else { n - 1 };
        let rows: Vec<SVec> = (0..self.gr.dim())
            .filter(|&m| {
                let d = self.gr.mon_degree(m);
                d >= 1 && d <= hi
            })
            .map(|m| self.hamiltonian(&svec::unit(m)))
            .collect();
        Subspace::span_of(self.dim(), &rows)
    }
}

/// Integer grading of Λ(n) / W(n) determined by integer degrees
/// k = (k_1, …, k_n) of the generators.
#[derive(Clone, Debug)]
pub struct TypeK {
    pub k: Vec<i64>,
}

impl TypeK {
    pub fn new(k: Vec<i64>) -> Self {
        TypeK { k }
    }

    pub fn mon_degree(&self, gr: &Grassmann, i: usize) -> i64 {
        let m = gr.mask(i);
        (0..gr.nvars())
            .filter(|a| m >> a & 1 == 1)
            .map(|a| self.k[a])
            .sum()
    }

    pub fn field_degree(&self, w: &WCtx, idx: usize) -> i64 {
        let (m, a) = w.field_parts(idx);
        self.mon_degree(&w.gr, m) - self.k[a]
    }

    pub fn mon_degrees(&self, gr: &Grassmann) -> Vec<i64> {
        (0..gr.dim()).map(|i| self.mon_degree(gr, i)).collect()
    }

    pub fn field_degrees(&self, w: &WCtx) -> Vec<i64> {
        (0..w.dim()).map(|i| self.field_degree(w, i)).collect()
    }

    /// Closed-form depth of the induced grading of Λ(n):
    /// 0 when every k_a ≥ 0, otherwise Σ_{k_a<0} |k_a|.
    pub fn lambda_depth(&self) -> i64 {
        self.k.iter().filter(|&&x| x < 0).map(|x| -x).sum()
    }

    /// Closed-form depth of the induced grading of W(n):
    /// max_a k_a plus the depth of Λ(n).
    pub fn w_depth(&self) -> i64 {
        self.k.iter().copied().max().unwrap_or(0) + self.lambda_depth()
    }
}

/// s ⊗ Λ(n) with basis x_i ⊗ ξ^S at index `i * 2^n + m` and bracket
/// [x ⊗ a, y ⊗ b] = (−1)^{|a||y|} [x, y] ⊗ ab.
pub fn tensor_with_grassmann(
    s: &LieSuperalgebra,
    gr: &Grassmann,
    name: impl Into<String>,
) -> LieSuperalgebra {
    let d = gr.dim();
    let mut basis = Vec::with_capacity(s.dim() * d);
    for i in 0..s.dim() {
        for m in 0..d {
            let label = if gr.mask(m) == 0 {
                s.space().label(i).to_string()
            } else {
                format!("{}(x){}", s.space().label(i), gr.mon_label(m))
            };
            basis.push((label, s.space().parity(i) + gr.mon_parity(m)));
        }
    }
    let space = SuperSpace::new(basis);
    LieSuperalgebra::from_fn(name, space, |p, q| {
        let (i, m) = (p / d, p % d);
        let (j, mm) = (q / d, q % d);
        let Some((prod, msign)) = gr.mul_mon(m, mm) else {
            return SVec::new();
        };
        let koszul = gr.mon_parity(m).koszul_sign(s.space().parity(j));
        let c = scalar::int(msign * koszul);
        let v = s.bracket_basis(i, j);
        let mut out: SVec = v
            .iter()
            .map(|(k, x)| (k * d + prod, x * &c))
            .collect();
        out.sort_by_key(|(i, _)| *i);
        out
    })
    .expect("tensor bracket is consistent")
}

/// (der s ⊗ Λ(n)) ⋊ W(n): the ideal occupies indices
/// 0..dim(der s)·2^n, the W(n) copy follows, and a field w acts by
/// w(D ⊗ a) = (−1)^{|w||D|} D ⊗ w(a).
pub fn socle_max(der_s: &LieSuperalgebra, w: &WCtx) -> Result<LieSuperalgebra> {
    let gr = &w.gr;
    let d = gr.dim();
    let tens = tensor_with_grassmann(der_s, gr, format!("{}(x)L", der_s.name()));
    let wn = w.algebra();
    let mut action = Vec::with_capacity(wn.dim());
    for widx in 0..w.dim() {
        let wp = w.field_parity(widx);
        let cols: Vec<SVec> = (0..tens.dim())
            .map(|p| {
                let (i, m) = (p / d, p % d);
                let koszul = wp.koszul_sign(der_s.space().parity(i));
                let wa = w.apply_field(&svec::unit(widx), &svec::unit(m));
                let mut out: SVec = wa
                    .iter()
                    .map(|(mm, c)| (i * d + mm, c * &scalar::int(koszul)))
                    .collect();
                out.sort_by_key(|(q, _)| *q);
                out
            })
            .collect();
        action.push(LinearMap::from_cols(tens.dim(), cols, wp));
    }
    LieSuperalgebra::semidirect(
        format!("smax[{};{}]", der_s.name(), gr.nvars()),
        &tens,
        &wn,
        &action,
    )
}

/// Degrees on `socle_max(der_s, w)` induced by degrees on der s and a
/// type-k grading of Λ(n)/W(n).
pub fn socle_max_degrees(der_deg: &[i64], w: &WCtx, k: &TypeK) -> Vec<i64> {
    let d = w.gr.dim();
    let mut out = Vec::with_capacity(der_deg.len() * d + w.dim());
    for &dd in der_deg {
        for m in 0..d {
            out.push(dd + k.mon_degree(&w.gr, m));
        }
    }
    for idx in 0..w.dim() {
        out.push(k.field_degree(w, idx));
    }
    out
}

/// Rows (in coordinates of an ambient algebra of dimension `ambient`)
/// spanning s ⊗ Λ(n), assuming der s carries s as its leading block.
pub fn socle_rows_in(ambient: usize, dim_s: usize, w: &WCtx) -> Subspace {
    let d = w.gr.dim();
    let rows: Vec<SVec> = (0..dim_s * d).map(svec::unit).collect();
    Subspace::from_rows(ambient, rows)
}

/// An intermediate algebra g = (s ⊗ Λ(n)) ⊕ F inside `socle_max`.
pub struct Intermediate {
    pub ambient: LieSuperalgebra,
    pub algebra: LieSuperalgebra,
    /// Basis rows of `algebra` in ambient coordinates.
    pub rows: Vec<SVec>,
    /// Socle s ⊗ Λ(n) in ambient coordinates.
    pub socle: Subspace,
    nvars: usize,
    dim_ders: usize,
}

impl Intermediate {
    /// Builds the span of the socle together with `f_span`, requiring the
    /// result to be a subalgebra of the ambient algebra.
    pub fn build(
        ambient: &LieSuperalgebra,
        dim_s: usize,
        w: &WCtx,
        f_span: &[SVec],
        name: impl Into<String>,
    ) -> Result<Intermediate> {
        let socle = socle_rows_in(ambient.dim(), dim_s, w);
        let mut all: Vec<SVec> = socle.rows().to_vec();
        all.extend(f_span.iter().cloned());
        let span = Subspace::from_rows(ambient.dim(), all);
        if !ambient.is_subalgebra(&span) {
            return Err(CoreError::Invalid(
                "socle + F does not close under the bracket".into(),
            ));
        }
        let (algebra, rows) = ambient.subalgebra(&span, name)?;
        Ok(Intermediate {
            ambient: ambient.clone(),
            algebra,
            rows,
            socle,
            nvars: w.nvars(),
            dim_ders: ambient.dim() / w.gr.dim() - w.nvars(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn dim_ders(&self) -> usize {
        self.dim_ders
    }

    /// Dimension of the simple factor s in the socle s ⊗ Λ(n).
    pub fn dim_s(&self) -> usize {
        self.socle.dim() >> self.nvars
    }

    /// g is admissible when its projection to the constant fields
    /// ∂_1, …, ∂_n ⊂ W(n) is onto.
    pub fn is_admissible(&self) -> bool {
        let n = self.nvars;
        let w_offset = self.dim_ders * (1 << n);
        let mut b = RrefBuilder::new(n);
        for r in &self.rows {
            let proj: SVec = r
                .iter()
                .filter(|(i, _)| *i >= w_offset && *i < w_offset + n)
                .map(|(i, c)| (i - w_offset, c.clone()))
                .collect();
            b.insert(proj);
        }
        b.rank() == n
    }

    /// The socle is a minimal ideal iff g acts irreducibly on it.
    pub fn socle_is_minimal_ideal(&self) -> Result<bool> {
        if !self.ambient.is_ideal(&self.socle) {
            return Ok(false);
        }
        let maps: Vec<LinearMap> = self
            .rows
            .iter()
            .map(|r| self.ambient.ad(r).restrict(&self.socle))
            .collect();
        Ok(crate::burnside::is_irreducible(self.socle.dim(), &maps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
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
    fn grassmann_multiplication_signs() {
        let gr = Grassmann::new(3);
        let x1 = gr.index_of_mask(0b001);
        let x2 = gr.index_of_mask(0b010);
        // ξ2 ξ1 = −ξ1 ξ2
        let (k, s) = gr.mul_mon(x2, x1).unwrap();
        assert_eq!(k, gr.index_of_mask(0b011));
        assert_eq!(s, -1);
        assert!(gr.mul_mon(x1, x1).is_none());
        // associativity on a full sweep
        for i in 0..gr.dim() {
            for j in 0..gr.dim() {
                for k in 0..gr.dim() {
                    let a = gr.mul(&gr.mul(&svec::unit(i), &svec::unit(j)), &svec::unit(k));
                    let b = gr.mul(&svec::unit(i), &gr.mul(&svec::unit(j), &svec::unit(k)));
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn derivative_is_odd_derivation() {
        let gr = Grassmann::new(3);
        for a in 0..3 {
            for i in 0..gr.dim() {
                for j in 0..gr.dim() {
                    // ∂_a(fg) = (∂_a f) g + (−1)^{|f|} f (∂_a g)
                    let fg = gr.mul(&svec::unit(i), &svec::unit(j));
                    let lhs = gr.deriv(a, &fg);
                    let sign = gr.mon_parity(i).koszul_sign(Parity::Odd);
                    let rhs = svec::add(
                        &gr.mul(&gr.deriv(a, &svec::unit(i)), &svec::unit(j)),
                        &svec::scale(
                            &gr.mul(&svec::unit(i), &gr.deriv(a, &svec::unit(j))),
                            &scalar::int(sign),
                        ),
                    );
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn w_bracket_matches_operator_supercommutator() {
        let w = WCtx::new(3);
        let alg = w.algebra();
        alg.check_jacobi().unwrap();
        for i in 0..w.dim() {
            for j in 0..w.dim() {
                let br = alg.bracket_basis(i, j);
                let op = w
                    .field_as_operator(&svec::unit(i))
                    .supercommutator(&w.field_as_operator(&svec::unit(j)));
                let br_op = if svec::is_zero(&br) {
                    LinearMap::zero(w.gr.dim(), w.gr.dim(), op.parity())
                } else {
                    w.field_as_operator(&br)
                };
                assert_eq!(op.cols(), br_op.cols(), "mismatch at [{}, {}]", i, j);
            }
        }
    }

    #[test]
    fn divergence_free_dimension() {
        for n in 2..=4 {
            let w = WCtx::new(n);
            let s = w.divergence_free();
            assert_eq!(s.dim(), (n - 1) * (1 << n) + 1);
            let alg = w.algebra();
            assert!(alg.is_subalgebra(&s));
        }
    }

    #[test]
    fn hamiltonian_span_dimensions() {
        for n in 2..=4 {
            let w = WCtx::new(n);
            let h = w.hamiltonian_span(false);
            assert_eq!(h.dim(), (1 << n) - 2);
            let hp = w.hamiltonian_span(true);
            assert_eq!(hp.dim(), (1 << n) - 1);
            let alg = w.algebra();
            assert!(alg.is_subalgebra(&h));
            assert!(alg.is_subalgebra(&hp));
        }
    }

    #[test]
    fn euler_grades_w_by_exterior_degree() {
        let w = WCtx::new(3);
        let alg = w.algebra();
        let e = w.euler();
        for i in 0..w.dim() {
            let (m, _) = w.field_parts(i);
            let expect = w.gr.mon_degree(m) as i64 - 1;
            let v = alg.bracket(&e, &svec::unit(i));
            assert_eq!(v, svec::scale(&svec::unit(i), &scalar::int(expect)));
        }
    }

    #[test]
    fn type_k_depth_formulas() {
        let w = WCtx::new(3);
        let alg = w.algebra();
        for k1 in -2..=2i64 {
            for k2 in -2..=2i64 {
                for k3 in -2..=2i64 {
                    let k = TypeK::new(vec![k1, k2, k3]);
                    let degs = k.field_degrees(&w);
                    let min = degs.iter().copied().min().unwrap();
                    assert_eq!(-min, k.w_depth(), "k = {:?}", k.k);
                    let g = crate::grading::Grading::from_degrees(&alg, degs).unwrap();
                    let (depth, _) = g.depth_height();
                    assert_eq!(depth, k.w_depth());
                    let lmin = k.mon_degrees(&w.gr).iter().copied().min().unwrap();
                    assert_eq!(-lmin, k.lambda_depth());
                }
            }
        }
    }

    #[test]
    fn tensor_and_socle_max_are_consistent() {
        let s = sl2();
        let gr = Grassmann::new(2);
        let t = tensor_with_grassmann(&s, &gr, "sl2(x)L2");
        assert_eq!(t.dim(), 12);
        t.check_jacobi().unwrap();
        let w = WCtx::new(2);
        let m = socle_max(&s, &w).unwrap();
        assert_eq!(m.dim(), 12 + 8);
        m.check_jacobi().unwrap();
        // the socle is an ideal of the full envelope
        let soc = socle_rows_in(m.dim(), 3, &w);
        assert!(m.is_ideal(&soc));
    }

    #[test]
    fn admissible_intermediate_has_minimal_socle() {
        let s = sl2();
        let w = WCtx::new(1);
        let m = socle_max(&s, &w).unwrap();
        // F = all of W(1): admissible.
        let woff = 3 * 2;
        let f: Vec<SVec> = (0..2).map(|i| svec::unit(woff + i)).collect();
        let g = Intermediate::build(&m, 3, &w, &f, "g").unwrap();
        assert!(g.is_admissible());
        assert!(g.socle_is_minimal_ideal().unwrap());
        // F = ξ1 ∂1 only: not admissible, socle decomposes.
        let f2 = vec![svec::unit(woff + 1)];
        let g2 = Intermediate::build(&m, 3, &w, &f2, "g2").unwrap();
        assert!(!g2.is_admissible());
        assert!(!g2.socle_is_minimal_ideal().unwrap());
    }
}
