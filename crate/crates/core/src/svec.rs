//! Sparse vectors over `Q`: sorted `(index, coefficient)` pairs with no zeros.

use crate::scalar::Scalar;
use num_traits::Zero;

pub type SVec = Vec<(usize, Scalar)>;

pub fn from_dense(entries: &[Scalar]) -> SVec {
    entries
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn unit(i: usize) -> SVec {
    vec![(i, crate::scalar::one())]
}

pub fn is_zero(v: &SVec) -> bool {
    v.is_empty()
}

/// Leading (lowest-index) entry.
pub fn leading(v: &SVec) -> Option<(usize, &Scalar)> {
    v.first().map(|(i, c)| (*i, c))
}

pub fn get<'a>(v: &'a SVec, i: usize) -> Option<&'a Scalar> {
    v.binary_search_by_key(&i, |(j, _)| *j).ok().map(|k| &v[k].1)
}

pub fn scale(v: &SVec, c: &Scalar) -> SVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * c)).collect()
}

pub fn scale_in_place(v: &mut SVec, c: &Scalar) {
    if c.is_zero() {
        v.clear();
    } else {
        for (_, x) in v.iter_mut() {
            *x *= c;
        }
    }
}

pub fn neg(v: &SVec) -> SVec {
    v.iter().map(|(i, x)| (*i, -x)).collect()
}

/// `a + c * b`, merging sorted supports.
pub fn add_scaled(a: &SVec, c: &Scalar, b: &SVec) -> SVec {
    if c.is_zero() || b.is_empty() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((b[j].0, c * &b[j].1));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let x = &a[i].1 + c * &b[j].1;
                if !x.is_zero() {
                    out.push((a[i].0, x));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for (k, x) in &b[j..] {
        out.push((*k, c * x));
    }
    out
}

pub fn add(a: &SVec, b: &SVec) -> SVec {
    add_scaled(a, &crate::scalar::one(), b)
}

pub fn to_dense(v: &SVec, n: usize) -> Vec<Scalar> {
    let mut out = vec![crate::scalar::zero(); n];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

/// Re-indexes entries through `map` (which must be strictly increasing on the support).
pub fn reindex(v: &SVec, map: impl Fn(usize) -> usize) -> SVec {
    let out: SVec = v.iter().map(|(i, c)| (map(*i), c.clone())).collect();
    debug_assert!(out.windows(2).all(|w| w[0].0 < w[1].0));
    out
}
