//! Set functions on the ground set `N_n = {1, ..., n}`.
//!
//! Subsets are bitmasks with bit `i - 1` standing for element `i`. The empty
//! set is never stored: every set function is pinned to 0 there, so the
//! coordinate space has dimension `2^n - 1`.

mod inequality;
mod json;
mod permutation;
mod set_function;

use std::fmt;

use serde::Serialize;

pub use inequality::{elemental_inequalities, InequalityKind, LinearInequality};
pub use json::{AnySetFunction, SetFunctionJson};
pub use permutation::Permutation;
pub use set_function::{combine, is_polymatroid, SetFunction};

use crate::error::{Error, Result};

pub const MAX_GROUND: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if (1..=MAX_GROUND).contains(&n) {
            Ok(Self { n })
        } else {
            Err(Error::GroundSize(n))
        }
    }

    pub fn size(self) -> usize {
        self.n
    }

    /// Number of coordinates, `2^n - 1`.
    pub fn dim(self) -> usize {
        (1usize << self.n) - 1
    }

    pub fn full(self) -> Subset {
        Subset(((1u64 << self.n) - 1) as u32)
    }

    /// All nonempty subsets in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = Subset> + Clone {
        (1..=self.full().0).map(Subset)
    }

    pub fn contains(self, s: Subset) -> bool {
        s.0 & !self.full().0 == 0
    }

    pub(crate) fn check(self, s: Subset) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::SubsetOutOfRange { mask: s.0, n: self.n })
        }
    }
}

/// A subset of `N_n`, stored as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// Builds a subset from 1-based element labels.
    pub fn of(elements: &[usize]) -> Self {
        Subset(elements.iter().fold(0, |m, &e| {
            debug_assert!((1..=32).contains(&e));
            m | 1 << (e - 1)
        }))
    }

    pub fn singleton(e: usize) -> Self {
        Subset(1 << (e - 1))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, e: usize) -> bool {
        e >= 1 && self.0 >> (e - 1) & 1 == 1
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn with(self, e: usize) -> Subset {
        Subset(self.0 | 1 << (e - 1))
    }

    pub fn without(self, e: usize) -> Subset {
        Subset(self.0 & !(1 << (e - 1)))
    }

    /// Element labels in ascending order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |b| self.0 >> b & 1 == 1).map(|b| b + 1)
    }

    /// Coordinate index of a nonempty subset in a value vector.
    pub(crate) fn index(self) -> usize {
        debug_assert!(self.0 != 0);
        self.0 as usize - 1
    }
}

impl fmt::Display for Subset {
    /// Concatenated labels, e.g. `124`; `{}` for the empty set.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        for e in self.elements() {
            write!(f, "{e}")?;
        }
        Ok(())
    }
}
