use crate::error::{Error, Result};

/// A permutation of `0..len` in one-line notation: `self[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(len: usize) -> Self {
        Perm((0..len).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() {
                return Err(Error::InvalidPermutation(format!(
                    "image {i} out of range 0..{}",
                    images.len()
                )));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!("image {i} repeated")));
            }
        }
        Ok(Perm(images))
    }

    /// Builds from a function already known to be a bijection.
    pub(crate) fn from_fn(len: usize, f: impl FnMut(usize) -> usize) -> Self {
        let p = Perm((0..len).map(f).collect());
        debug_assert!(Perm::from_images(p.0.clone()).is_ok());
        p
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| other.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.0[i];
            }
            out.push(cycle);
        }
        out
    }

    /// For each point, the index of its cycle in [`Perm::cycles`] order.
    pub fn cycle_labels(&self) -> Vec<usize> {
        let mut labels = vec![usize::MAX; self.len()];
        for (c, cycle) in self.cycles().iter().enumerate() {
            for &i in cycle {
                labels[i] = c;
            }
        }
        labels
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }
}
