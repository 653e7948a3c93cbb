use std::fmt;

use serde::Serialize;

use super::{GroundSet, SetFunction, Subset};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InequalityKind {
    /// `h(N) >= h(N \ {i})`.
    Monotone { i: usize },
    /// `h(K ∪ i) + h(K ∪ j) >= h(K) + h(K ∪ ij)`.
    Submodular { i: usize, j: usize, k: Subset },
    /// Anything not built from the elemental family (e.g. dual data).
    Custom,
}

impl fmt::Display for InequalityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            InequalityKind::Monotone { i } => write!(f, "h(N) >= h(N-{i})"),
            InequalityKind::Submodular { i, j, k } => {
                let k_str = if k.is_empty() { String::new() } else { k.to_string() };
                write!(f, "h({k_str}{i}) + h({k_str}{j}) >= h({k_str}) + h({k_str}{i}{j})")
            }
            InequalityKind::Custom => f.write_str("custom"),
        }
    }
}

/// A homogeneous inequality `c · f >= 0` over subset coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearInequality<T> {
    pub index: usize,
    pub kind: InequalityKind,
    coefficients: SetFunction<T>,
}

impl<T: Scalar> LinearInequality<T> {
    pub fn new(index: usize, kind: InequalityKind, coefficients: SetFunction<T>) -> Result<Self> {
        if coefficients.values().iter().all(|c| c.is_zero()) {
            return Err(Error::Parse(format!("inequality {index} has no nonzero coefficient")));
        }
        Ok(Self {
            index,
            kind,
            coefficients,
        })
    }

    pub fn ground(&self) -> GroundSet {
        self.coefficients.ground()
    }

    pub fn coefficients(&self) -> &SetFunction<T> {
        &self.coefficients
    }

    /// `c · f`.
    pub fn evaluate(&self, f: &SetFunction<T>) -> T {
        self.coefficients
            .values()
            .iter()
            .zip(f.values())
            .fold(T::zero(), |acc, (c, v)| acc + c.clone() * v.clone())
    }

    pub fn holds(&self, f: &SetFunction<T>, tol: f64) -> bool {
        self.evaluate(f).ge_tol(&T::zero(), tol)
    }
}

/// The elemental inequalities of `Γ_n`: `n` monotonicity rows (ascending
/// `i`) followed by `C(n,2) · 2^(n-2)` submodularity rows sorted by
/// `(i, j, K)`.
pub fn elemental_inequalities<T: Scalar>(ground: GroundSet) -> Vec<LinearInequality<T>> {
    let n = ground.size();
    let full = ground.full();
    let mut out = Vec::with_capacity(n + n * (n - 1) / 2 * (1 << n.saturating_sub(2)));
    let mut push = |kind, terms: &[(Subset, i64)]| {
        let mut c = vec![T::zero(); ground.dim()];
        for &(s, v) in terms {
            if !s.is_empty() {
                c[s.index()] = c[s.index()].clone() + T::from_i64(v);
            }
        }
        let coefficients = SetFunction::new(ground, c).expect("dimension matches ground set");
        let index = out.len();
        out.push(LinearInequality {
            index,
            kind,
            coefficients,
        });
    };
    for i in 1..=n {
        push(
            InequalityKind::Monotone { i },
            &[(full, 1), (full.without(i), -1)],
        );
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let rest = full.without(i).without(j);
            for mask in 0..=full.mask() {
                let k = Subset(mask);
                if !k.is_subset_of(rest) {
                    continue;
                }
                push(
                    InequalityKind::Submodular { i, j, k },
                    &[(k.with(i), 1), (k.with(j), 1), (k, -1), (k.with(i).with(j), -1)],
                );
            }
        }
    }
    out
}
