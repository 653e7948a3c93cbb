use num_rational::BigRational;

use super::{GroundSet, Permutation, Subset};
use crate::error::{Error, Result};
use crate::scalar::{Scalar, DEFAULT_TOL};

/// A set function `f : 2^{N_n} -> T` with `f(∅) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct SetFunction<T> {
    ground: GroundSet,
    // values[mask - 1]
    values: Vec<T>,
}

impl<T: Scalar> SetFunction<T> {
    /// `values[mask - 1]` is the value on the subset with bitmask `mask`.
    pub fn new(ground: GroundSet, values: Vec<T>) -> Result<Self> {
        if values.len() != ground.dim() {
            return Err(Error::ValueCount {
                n: ground.size(),
                expected: ground.dim(),
                got: values.len(),
            });
        }
        Ok(Self { ground, values })
    }

    pub fn zero(ground: GroundSet) -> Self {
        Self {
            ground,
            values: vec![T::zero(); ground.dim()],
        }
    }

    pub fn from_fn(ground: GroundSet, mut f: impl FnMut(Subset) -> T) -> Self {
        Self {
            ground,
            values: ground.subsets().map(&mut f).collect(),
        }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    /// Value on `s`; zero on the empty set.
    ///
    /// Panics if `s` is not a subset of the ground set.
    pub fn get(&self, s: Subset) -> T {
        assert!(self.ground.contains(s), "subset {s} outside N_{}", self.ground.size());
        if s.is_empty() {
            T::zero()
        } else {
            self.values[s.index()].clone()
        }
    }

    pub(crate) fn get_ref(&self, s: Subset) -> Option<&T> {
        (!s.is_empty()).then(|| &self.values[s.index()])
    }

    pub fn is_polymatroid(&self, tol: f64) -> bool {
        let zero = T::zero();
        let val = |s: Subset| self.get_ref(s).unwrap_or(&zero);
        let full = self.ground.full().mask();
        for a in 0..=full {
            let fa = val(Subset(a));
            if !fa.ge_tol(&zero, tol) {
                return false;
            }
            for b in 0..=full {
                let (sa, sb) = (Subset(a), Subset(b));
                let fb = val(sb);
                if sa.is_subset_of(sb) && !fb.ge_tol(fa, tol) {
                    return false;
                }
                if a < b {
                    let lhs = fa.clone() + fb.clone();
                    let rhs = val(sa.intersection(sb)).clone() + val(sa.union(sb)).clone();
                    if !lhs.ge_tol(&rhs, tol) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Restriction to `s`, with the elements of `s` relabelled `1..=|s|` in
    /// ascending order of their original labels.
    pub fn restrict(&self, s: Subset) -> Result<SetFunction<T>> {
        self.ground.check(s)?;
        if s.is_empty() {
            return Err(Error::EmptySubset);
        }
        let elems: Vec<usize> = s.elements().collect();
        let ground = GroundSet::new(elems.len())?;
        Ok(SetFunction::from_fn(ground, |b| {
            let lifted = b
                .elements()
                .fold(Subset::EMPTY, |acc, j| acc.with(elems[j - 1]));
            self.get(lifted)
        }))
    }

    /// `g(A) = f(pi(A))`.
    ///
    /// This is a right action: applying `pi` and then `sigma` equals applying
    /// `pi ∘ sigma`.
    pub fn apply_permutation(&self, perm: &Permutation) -> Result<SetFunction<T>> {
        if perm.degree() != self.ground.size() {
            return Err(Error::Permutation(format!(
                "degree {} does not match N_{}",
                perm.degree(),
                self.ground.size()
            )));
        }
        Ok(SetFunction::from_fn(self.ground, |a| self.get(perm.map_subset(a))))
    }

    pub fn scale(&self, c: &T) -> SetFunction<T> {
        SetFunction {
            ground: self.ground,
            values: self.values.iter().map(|v| c.clone() * v.clone()).collect(),
        }
    }

    pub fn to_real(&self) -> SetFunction<f64> {
        SetFunction {
            ground: self.ground,
            values: self.values.iter().map(Scalar::to_f64).collect(),
        }
    }

    /// Largest coordinate-wise absolute difference, computed in `f64`.
    pub fn max_abs_diff<U: Scalar>(&self, other: &SetFunction<U>) -> Result<f64> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch(self.ground.size(), other.ground.size()));
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(x, y)| (x.to_f64() - y.to_f64()).abs())
            .fold(0.0, f64::max))
    }
}

impl SetFunction<BigRational> {
    /// Exact set function from integer values.
    pub fn from_integers(ground: GroundSet, values: &[i64]) -> Result<Self> {
        Self::new(ground, values.iter().map(|&v| BigRational::from_i64(v)).collect())
    }
}

/// Polymatroid axioms with the default tolerance (exact on rationals).
pub fn is_polymatroid<T: Scalar>(f: &SetFunction<T>) -> bool {
    f.is_polymatroid(DEFAULT_TOL)
}

/// Pointwise `c1 * f1 + c2 * f2`.
pub fn combine<T: Scalar>(
    c1: &T,
    f1: &SetFunction<T>,
    c2: &T,
    f2: &SetFunction<T>,
) -> Result<SetFunction<T>> {
    if f1.ground != f2.ground {
        return Err(Error::GroundMismatch(f1.ground.size(), f2.ground.size()));
    }
    Ok(SetFunction {
        ground: f1.ground,
        values: f1
            .values
            .iter()
            .zip(&f2.values)
            .map(|(x, y)| c1.clone() * x.clone() + c2.clone() * y.clone())
            .collect(),
    })
}
