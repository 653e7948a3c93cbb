//! Double description method on exact integer rows.
//!
//! Rows are inserted one at a time. After each insertion the ray list is
//! exactly the set of extreme rays of the cone cut out by the rows seen so
//! far. Adjacency of a positive/negative ray pair is decided algebraically:
//! the rows tight at both must have rank `d - 2`.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::linalg::{dot, integer_row, kernel_vector, normalize, rank};
use super::ExtremeRay;
use crate::entspace::SetFunction;
use crate::error::{Error, Result};
use crate::ExactInequality;

struct Ray {
    v: Vec<BigInt>,
    /// Positions (into the row list) of inserted rows that vanish on `v`.
    zeros: FixedBitSet,
}

/// Extreme rays of the pointed cone `{x : a·x >= 0 for every row}`.
///
/// Rays are returned primitive (integer, gcd 1), sorted lexicographically by
/// their value vector, and carry the `index` of every inequality tight at
/// them. Fails with [`Error::NotPointed`] when the rows do not have full rank.
pub fn double_description(ineqs: &[ExactInequality]) -> Result<Vec<ExtremeRay>> {
    let first = ineqs.first().ok_or(Error::EmptySystem)?;
    let ground = first.ground();
    let d = ground.dim();
    if let Some(bad) = ineqs.iter().find(|q| q.ground() != ground) {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: bad.ground().dim(),
        });
    }
    let rows: Vec<Vec<BigInt>> = ineqs
        .iter()
        .map(|q| integer_row(q.coefficients().values()))
        .collect();

    let basis = independent_rows(&rows, d);
    if basis.len() < d {
        return Err(Error::NotPointed(format!(
            "constraint rows have rank {} < {d}",
            basis.len()
        )));
    }

    let mut rays = initial_rays(&rows, &basis, d);
    let mut inserted = FixedBitSet::with_capacity(rows.len());
    for &b in &basis {
        inserted.insert(b);
    }
    for pos in 0..rows.len() {
        if inserted.contains(pos) {
            continue;
        }
        rays = insert_row(rays, &rows, pos, d);
        inserted.insert(pos);
    }

    let mut seen = HashSet::new();
    for r in &rays {
        let neg: Vec<BigInt> = r.v.iter().map(|x| -x).collect();
        if seen.contains(&neg) {
            return Err(Error::NotPointed("a line survived elimination".into()));
        }
        seen.insert(r.v.clone());
    }

    let mut out: Vec<ExtremeRay> = rays
        .into_iter()
        .map(|r| {
            let tight = ineqs
                .iter()
                .zip(&rows)
                .filter(|(_, row)| dot(row, &r.v).is_zero())
                .map(|(q, _)| q.index)
                .collect();
            let values = r.v.into_iter().map(crate::BigRational::from_integer).collect();
            ExtremeRay {
                rep: SetFunction::new(ground, values).expect("dimension checked above"),
                tight,
            }
        })
        .collect();
    out.sort_by(|a, b| a.rep.values().cmp(b.rep.values()));
    Ok(out)
}

/// Greedily picks rows (in input order) that increase the rank.
fn independent_rows(rows: &[Vec<BigInt>], d: usize) -> Vec<usize> {
    let mut basis: Vec<usize> = Vec::with_capacity(d);
    for i in 0..rows.len() {
        if basis.len() == d {
            break;
        }
        let mut cand: Vec<&[BigInt]> = basis.iter().map(|&b| rows[b].as_slice()).collect();
        cand.push(&rows[i]);
        if rank(&cand) == cand.len() {
            basis.push(i);
        }
    }
    basis
}

/// The simplicial cone of `d` independent rows: ray `i` is tight at every
/// basis row except row `i`, and positive on it.
fn initial_rays(rows: &[Vec<BigInt>], basis: &[usize], d: usize) -> Vec<Ray> {
    basis
        .iter()
        .map(|&skip| {
            let others: Vec<&[BigInt]> = basis
                .iter()
                .filter(|&&b| b != skip)
                .map(|&b| rows[b].as_slice())
                .collect();
            let mut v = kernel_vector(&others, d).expect("basis rows are independent");
            if dot(&rows[skip], &v).is_negative() {
                v.iter_mut().for_each(|x| *x = -&*x);
            }
            let mut zeros = FixedBitSet::with_capacity(rows.len());
            basis.iter().filter(|&&b| b != skip).for_each(|&b| zeros.insert(b));
            Ray { v, zeros }
        })
        .collect()
}

fn insert_row(rays: Vec<Ray>, rows: &[Vec<BigInt>], pos: usize, d: usize) -> Vec<Ray> {
    let row = &rows[pos];
    let vals: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.v)).collect();
    let (mut pos_idx, mut neg_idx) = (Vec::new(), Vec::new());
    for (i, v) in vals.iter().enumerate() {
        if v.is_positive() {
            pos_idx.push(i);
        } else if v.is_negative() {
            neg_idx.push(i);
        }
    }

    let pairs: Vec<(usize, usize)> = pos_idx
        .iter()
        .flat_map(|&p| neg_idx.iter().map(move |&q| (p, q)))
        .collect();
    let created: Vec<Ray> = pairs
        .par_iter()
        .filter_map(|&(p, q)| {
            let (rp, rq) = (&rays[p], &rays[q]);
            let mut common = rp.zeros.clone();
            common.intersect_with(&rq.zeros);
            if d >= 2 && common.count_ones(..) < d - 2 {
                return None;
            }
            let tight: Vec<&[BigInt]> = common.ones().map(|i| rows[i].as_slice()).collect();
            if rank(&tight) != d.saturating_sub(2) {
                return None;
            }
            let ap = &vals[p];
            let aq = &vals[q];
            let mut v: Vec<BigInt> = rp
                .v
                .iter()
                .zip(&rq.v)
                .map(|(x, y)| ap * y - aq * x)
                .collect();
            normalize(&mut v);
            let mut zeros = common;
            zeros.insert(pos);
            Some(Ray { v, zeros })
        })
        .collect();

    let mut out: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
    for (r, v) in rays.into_iter().zip(&vals) {
        if v.is_positive() {
            out.push(r);
        } else if v.is_zero() {
            let mut r = r;
            r.zeros.insert(pos);
            out.push(r);
        }
    }
    out.extend(created);
    out
}
