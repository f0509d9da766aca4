//! Super vector spaces: ordered bases with a parity attached to each vector.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_usize(k: usize) -> Parity {
        if k % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    /// Sign `(-1)^{|x||y|}` as an integer factor.
    pub fn koszul_sign(self, other: Parity) -> i64 {
        if self == Parity::Odd && other == Parity::Odd {
            -1
        } else {
            1
        }
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// Finite-dimensional super vector space with a distinguished homogeneous
/// basis. Labels are unique and purely descriptive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperSpace {
    labels: Vec<String>,
    parities: Vec<Parity>,
}

impl SuperSpace {
    pub fn new(basis: Vec<(String, Parity)>) -> Self {
        let (labels, parities): (Vec<_>, Vec<_>) = basis.into_iter().unzip();
        {
            let mut seen = std::collections::HashSet::new();
            for l in &labels {
                assert!(seen.insert(l.clone()), "duplicate basis label {l:?}");
            }
        }
        SuperSpace { labels, parities }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Dimension pair `(even, odd)`.
    pub fn sdim(&self) -> (usize, usize) {
        let even = self.parities.iter().filter(|p| **p == Parity::Even).count();
        (even, self.dim() - even)
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Parity reversal: same basis, flipped parities.
    pub fn parity_shift(&self) -> SuperSpace {
        SuperSpace {
            labels: self.labels.iter().map(|l| format!("P[{l}]")).collect(),
            parities: self.parities.iter().map(|p| p.flip()).collect(),
        }
    }

    /// Tensor product basis in row-major order: index of `x_i ⊗ y_j` is
    /// `i * other.dim() + j`; parities add.
    pub fn tensor(&self, other: &SuperSpace) -> SuperSpace {
        let mut basis = Vec::with_capacity(self.dim() * other.dim());
        for i in 0..self.dim() {
            for j in 0..other.dim() {
                basis.push((
                    format!("{}(x){}", self.labels[i], other.labels[j]),
                    self.parities[i] + other.parities[j],
                ));
            }
        }
        SuperSpace::new(basis)
    }

    /// Checks that a sparse vector is parity-homogeneous and returns the
    /// common parity (zero vectors get `None`).
    ///
    /// # Panics
    /// Panics on a parity-mixed vector; use [`try_parity_of_vec`] to handle
    /// that case.
    ///
    /// [`try_parity_of_vec`]: SuperSpace::try_parity_of_vec
    pub fn parity_of_vec(&self, v: &crate::svec::SVec) -> Option<Parity> {
        self.try_parity_of_vec(v)
            .expect("vector is not parity-homogeneous")
    }

    /// Like [`parity_of_vec`] but reports mixed vectors as `Err`.
    ///
    /// [`parity_of_vec`]: SuperSpace::parity_of_vec
    pub fn try_parity_of_vec(
        &self,
        v: &crate::svec::SVec,
    ) -> Result<Option<Parity>, ()> {
        let mut it = v.iter().map(|(i, _)| self.parities[*i]);
        let Some(first) = it.next() else { return Ok(None) };
        if it.all(|p| p == first) {
            Ok(Some(first))
        } else {
            Err(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(parities: &[Parity]) -> SuperSpace {
        SuperSpace::new(
            parities
                .iter()
                .enumerate()
                .map(|(i, p)| (format!("e{i}"), *p))
                .collect(),
        )
    }

    #[test]
    fn tensor_dims_and_parities() {
        use Parity::*;
        let a = sp(&[Even, Odd]);
        let b = sp(&[Even, Odd, Odd]);
        let t = a.tensor(&b);
        assert_eq!(t.dim(), 6);
        // (1|1) x (1|2): even part 1*1 + 1*2 = 3.
        assert_eq!(t.sdim(), (3, 3));
        assert_eq!(t.parity(1), Odd); // e0 ⊗ e1
        assert_eq!(t.parity(4), Even); // e1 ⊗ e1
    }

    #[test]
    fn shift_swaps_sdim() {
        use Parity::*;
        let a = sp(&[Even, Even, Odd]);
        assert_eq!(a.parity_shift().sdim(), (1, 2));
    }
}
