//! Extreme rays and two-dimensional faces of polyhedral cones given by
//! exact linear inequalities.

mod dd;
pub mod linalg;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

pub use dd::double_description;

use crate::{ExactInequality, ExactSetFunction};

#[derive(Clone, Debug, PartialEq)]
pub struct ExtremeRay {
    /// Primitive integer representative.
    pub rep: ExactSetFunction,
    /// `index` of every inequality vanishing at `rep`.
    pub tight: BTreeSet<usize>,
}

impl ExtremeRay {
    pub fn integers(&self) -> Vec<BigInt> {
        self.rep.values().iter().map(|x| x.to_integer()).collect()
    }
}

/// A pair of rays `i < j` and whether their conic hull is a face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FacePair {
    pub i: usize,
    pub j: usize,
    pub is_2face: bool,
}

/// Indices of the inequalities that vanish at `f`.
pub fn tight_facets(f: &ExactSetFunction, ineqs: &[ExactInequality]) -> BTreeSet<usize> {
    ineqs
        .iter()
        .filter(|q| num_traits::Zero::is_zero(&q.evaluate(f)))
        .map(|q| q.index)
        .collect()
}

fn rows_of(ineqs: &[ExactInequality], which: &BTreeSet<usize>) -> Vec<Vec<BigInt>> {
    ineqs
        .iter()
        .filter(|q| which.contains(&q.index))
        .map(|q| linalg::integer_row(q.coefficients().values()))
        .collect()
}

/// Rank of the inequality rows whose `index` lies in `which`.
pub fn tight_rank(ineqs: &[ExactInequality], which: &BTreeSet<usize>) -> usize {
    let rows = rows_of(ineqs, which);
    let refs: Vec<&[BigInt]> = rows.iter().map(Vec::as_slice).collect();
    linalg::rank(&refs)
}

/// `true` when `f` is nonzero, satisfies every inequality, and the tight
/// inequalities pin it down to a line.
pub fn verify_extreme(f: &ExactSetFunction, ineqs: &[ExactInequality]) -> bool {
    if f.values().iter().all(num_traits::Zero::is_zero) {
        return false;
    }
    if ineqs.iter().any(|q| q.evaluate(f).is_negative()) {
        return false;
    }
    let d = f.ground().dim();
    tight_rank(ineqs, &tight_facets(f, ineqs)) + 1 == d
}

/// Classifies every ray pair `i < j`. The pair spans a face exactly when no
/// third ray is tight at every inequality tight at both, i.e. the smallest
/// face containing the two rays has no other extreme ray.
pub fn enumerate_2faces(rays: &[ExtremeRay]) -> Vec<FacePair> {
    let mut out = Vec::with_capacity(rays.len() * rays.len().saturating_sub(1) / 2);
    for i in 0..rays.len() {
        for j in i + 1..rays.len() {
            let common: BTreeSet<usize> = rays[i].tight.intersection(&rays[j].tight).copied().collect();
            let is_2face = !(0..rays.len())
                .any(|k| k != i && k != j && common.is_subset(&rays[k].tight));
            out.push(FacePair { i, j, is_2face });
        }
    }
    out
}
