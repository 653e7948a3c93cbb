use itertools::Itertools;

use super::Subset;
use crate::error::{Error, Result};

/// A bijection on `N_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[i] = pi(i + 1) - 1
    images: Vec<usize>,
}

impl Permutation {
    /// Builds `pi` from 1-based images: `images[i - 1] = pi(i)`.
    pub fn new(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n {
                return Err(Error::Permutation(format!("image {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::Permutation(format!("image {v} repeated")));
            }
        }
        Ok(Self {
            images: images.iter().map(|v| v - 1).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// The transposition `(i j)` on `N_n`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i - 1, j - 1);
        p
    }

    /// Every permutation of `N_n` in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Self> {
        (0..n)
            .permutations(n)
            .map(|images| Self { images })
            .collect()
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `pi(e)` for a 1-based element.
    pub fn image(&self, e: usize) -> usize {
        self.images[e - 1] + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `pi(A) = { pi(a) : a in A }`.
    pub fn map_subset(&self, s: Subset) -> Subset {
        Subset(
            s.elements()
                .fold(0, |m, e| m | 1 << self.images[e - 1]),
        )
    }

    /// `self ∘ other`, i.e. `x -> self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }
}
