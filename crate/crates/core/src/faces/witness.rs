//! Distributions realizing entropic points of the characterized faces.
//!
//! Every construction is carried out on the representative of the face type
//! and then moved onto the requested face by relabeling variables. Most are
//! assembled from independent "atoms" (single variables, cyclic triples),
//! each observed variable being a tuple of atoms.

use super::{face_point_vector, membership, partition_entropy, Face, FacePoint, VerdictStatus};
use crate::catalog::{Family, RayCatalog};
use crate::dist::{cyclic_construction, dist_with_entropy, entropy, entropy_vector, skewed_cyclic, JointDist};
use crate::error::{Error, Result};
use crate::RealSetFunction;

/// Largest round-trip error a witness may have.
pub const WITNESS_TOL: f64 = 1e-9;

/// Largest component count tried by the non-lattice `U14` search.
const MAX_COMPONENTS: usize = 4096;
/// Largest size increment `l` tried by the same search.
const MAX_INCREMENT: u64 = 1024;
/// Outcome budget for a single witness.
const MAX_OUTCOMES: u64 = 4_000_000;

/// Exact parameters that override the corresponding coordinates of the
/// type's representative: `K(k)` sets `a = log k`, `K1K2` sets both
/// coordinates, `Partition(α)` sets `a = H(α/k)` and `b = log k - a` with
/// `k = Σ α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Params {
    K(u64),
    K1K2(u64, u64),
    Partition(Vec<u64>),
}

#[derive(Clone, Debug)]
pub struct Witness {
    pub dist: JointDist,
    /// The realized point, in the orientation of the requested face.
    pub a: f64,
    pub b: f64,
    pub target: RealSetFunction,
    pub entropy: RealSetFunction,
    /// Largest coordinate gap between `entropy` and `target`.
    pub max_error: f64,
}

fn log2(k: u64) -> f64 {
    (k as f64).log2()
}

/// Smallest alphabet that can carry `h` bits.
fn alphabet_for(h: f64) -> usize {
    if h <= 0.0 {
        return 1;
    }
    let mut m = h.exp2().ceil().max(1.0) as usize;
    while (m as f64).log2() < h {
        m += 1;
    }
    m
}

/// A single variable with entropy `h`.
fn rank1(h: f64) -> Result<JointDist> {
    JointDist::single(&dist_with_entropy(h, alphabet_for(h))?)
}

/// Joins the atoms independently and forms `X_i` from `groups[i]`.
fn assemble(atoms: &[JointDist], groups: [&[usize]; 4]) -> Result<JointDist> {
    let joined = atoms
        .iter()
        .skip(1)
        .fold(atoms[0].clone(), |acc, d| acc.join(d));
    joined.regroup(&groups.map(<[usize]>::to_vec))
}

/// Builds a distribution whose entropy vector is `a·r1 + b·r2` and checks
/// it. `tol` bounds both coordinate matching and the round-trip error.
pub fn witness(catalog: &RayCatalog, fp: &FacePoint, params: Option<&Params>, tol: f64) -> Result<Witness> {
    let face = &fp.face;
    let (mut ca, mut cb) = face.canonical_coords(fp.a, fp.b);
    let bad_params = |reason: &str| Error::Params {
        face: face.label(),
        reason: reason.into(),
    };
    let mut alpha = None;
    match (params, face.theorem) {
        (None, _) => {}
        (Some(Params::K(k)), Some(2 | 3 | 4 | 7)) if *k >= 1 => ca = log2(*k),
        (Some(Params::K1K2(k1, k2)), Some(5)) if *k1 >= 1 && *k2 >= 1 => {
            ca = log2(*k1);
            cb = log2(*k2);
        }
        (Some(Params::Partition(parts)), Some(6)) if !parts.is_empty() && !parts.contains(&0) => {
            let k: u64 = parts.iter().sum();
            ca = partition_entropy(parts);
            cb = (log2(k) - ca).max(0.0);
            let mut sorted = parts.clone();
            sorted.sort_unstable_by(|x, y| y.cmp(x));
            alpha = Some(sorted);
        }
        (Some(p), _) => return Err(bad_params(&format!("{p:?} does not apply"))),
    }
    let (a, b) = if face.swapped { (cb, ca) } else { (ca, cb) };
    let resolved = FacePoint::new(face.clone(), a, b)?;
    let verdict = membership(&resolved, tol)?;
    match verdict.status {
        VerdictStatus::Entropic => {}
        VerdictStatus::NotEntropic => {
            return Err(Error::NotEntropic {
                face: face.label(),
                a,
                b,
            })
        }
        VerdictStatus::Uncharacterized => return Err(Error::Uncharacterized(face.label())),
    }

    let canonical = canonical_witness(catalog, face, ca, cb, verdict.detail.k, alpha.or(verdict.detail.partition), tol)?;
    let dist = canonical.relabel(&face.perm.inverse())?;
    let target = face_point_vector(catalog, &resolved)?;
    let entropy = entropy_vector(&dist)?;
    let max_error = entropy.max_abs_diff(&target)?;
    if max_error.is_nan() || max_error > tol {
        return Err(Error::RoundTrip { error: max_error, tol });
    }
    Ok(Witness {
        dist,
        a,
        b,
        target,
        entropy,
        max_error,
    })
}

fn canonical_witness(
    catalog: &RayCatalog,
    face: &Face,
    a: f64,
    b: f64,
    k: Option<u64>,
    alpha: Option<Vec<u64>>,
    tol: f64,
) -> Result<JointDist> {
    let n1 = catalog.names()[face.canonical.0];
    let n2 = catalog.names()[face.canonical.1];
    let key = (n1.to_string(), n2.to_string());
    let key = (key.0.as_str(), key.1.as_str());
    let missing = || Error::Params {
        face: face.label(),
        reason: "no construction for this face type".into(),
    };
    match face.theorem {
        Some(1) => {
            let supports = [n1, n2].map(|nm| match nm.family() {
                Family::Uniform { rank: 1, .. } => Some(nm.support()),
                _ => None,
            });
            let [Some(s1), Some(s2)] = supports else {
                return Err(missing());
            };
            let atoms = [rank1(a)?, rank1(b)?];
            let groups: Vec<Vec<usize>> = (1..=4)
                .map(|i| [(s1, 1), (s2, 2)].iter().filter(|(s, _)| s.contains(i)).map(|&(_, atom)| atom).collect())
                .collect();
            assemble(&atoms, [&groups[0], &groups[1], &groups[2], &groups[3]])
        }
        Some(2) => {
            let k = k.ok_or_else(missing)?;
            let lk = log2(k);
            let p = dist_with_entropy(a.min(lk), k as usize)?;
            let atoms = [skewed_cyclic(k as u32, &p, (1, 2, 3), 3)?, rank1((a + b - lk).max(0.0))?];
            // atoms: 1 = low, 2 = low + U, 3 = U, 4 = padding
            let x4: &[usize] = match key {
                ("U23^123", "U12^12") => &[],
                ("W2^34", "U12^12") => &[1],
                ("W2^14", "U13^124") => &[2, 4],
                _ => return Err(missing()),
            };
            assemble(&atoms, [&[2, 4], &[3, 4], &[1], x4])
        }
        Some(3) => {
            let k = k.ok_or_else(missing)?;
            let atoms = [cyclic_construction(k as u32, [1, 2, 3], 3)?, rank1(b)?];
            // atoms: 1, 2, 3 = cyclic triple, 4 = the b-variable
            let (x1, x4): (&[usize], &[usize]) = match key {
                ("U23^123", "U11^1") => (&[1, 4], &[]),
                ("U23^123", "U11^4") => (&[1], &[4]),
                ("U23^123", "U12^14") => (&[1, 4], &[4]),
                ("W2^14", "U11^1") => (&[1, 4], &[1]),
                ("W2^34", "U11^1") => (&[1, 4], &[3]),
                ("W2^14", "U12^14") => (&[1, 4], &[1, 4]),
                ("W2^24", "U12^14") => (&[1, 4], &[2, 4]),
                _ => return Err(missing()),
            };
            assemble(&atoms, [x1, &[2], &[3], x4])
        }
        Some(4) => {
            let k = k.ok_or_else(missing)?;
            let atoms = [cyclic_construction(k as u32, [1, 2, 3], 3)?, rank1(b)?];
            assemble(&atoms, [&[1, 4], &[2, 4], &[3], &[4]])
        }
        Some(5) => {
            let (k1, k2) = match (super::log_lattice(a, tol), super::log_lattice(b, tol)) {
                (Some(k1), Some(k2)) => (k1, k2),
                _ => return Err(missing()),
            };
            let atoms = [
                cyclic_construction(k1 as u32, [1, 2, 3], 3)?,
                cyclic_construction(k2 as u32, [1, 2, 3], 3)?,
            ];
            assemble(&atoms, [&[1, 4], &[2, 5], &[3], &[6]])
        }
        Some(6) => partition_witness(&alpha.ok_or_else(missing)?),
        Some(7) => match super::log_lattice(a, tol) {
            Some(k) => {
                let m = alphabet_for(b);
                let p = dist_with_entropy(b, m)?;
                let sizes = vec![k; m];
                component_witness(&sizes, &p)
            }
            None => non_lattice_half_open(a, b),
        },
        _ => Err(Error::Uncharacterized(face.label())),
    }
}

/// `X1`, `X3` uniform on `Z_k`, `X4 = X1 + X3`, `X2` the cell of `X1` in a
/// partition of `Z_k` into blocks of sizes `α`.
fn partition_witness(alpha: &[u64]) -> Result<JointDist> {
    let k: u64 = alpha.iter().sum();
    let cell: Vec<u32> = alpha
        .iter()
        .enumerate()
        .flat_map(|(c, &size)| std::iter::repeat_n(c as u32, size as usize))
        .collect();
    let k32 = k as u32;
    let mass = 1.0 / (k as f64 * k as f64);
    let mut outcomes = Vec::with_capacity((k * k) as usize);
    for s1 in 0..k32 {
        for s3 in 0..k32 {
            outcomes.push((vec![s1, cell[s1 as usize], s3, (s1 + s3) % k32], mass));
        }
    }
    JointDist::new(vec![k32, alpha.len() as u32, k32, k32], outcomes)
}

/// Disjoint cyclic triples: component `j` has size `sizes[j]` and weight
/// `p[j]`; `X4` is the component index.
fn component_witness(sizes: &[u64], p: &[f64]) -> Result<JointDist> {
    let total: u64 = sizes.iter().sum();
    let mut outcomes = Vec::new();
    let mut offset = 0u32;
    for (j, (&size, &pj)) in sizes.iter().zip(p).enumerate() {
        let s = size as u32;
        if pj > 0.0 {
            let mass = pj / (size as f64 * size as f64);
            for s1 in 0..s {
                for s2 in 0..s {
                    outcomes.push((
                        vec![offset + s1, offset + s2, offset + (s1 + s2) % s, j as u32],
                        mass,
                    ));
                }
            }
        }
        offset += s;
    }
    let t = total as u32;
    JointDist::new(vec![t, t, t, sizes.len() as u32], outcomes)
}

/// `U14` face off the lattice: `t - 1` components of size `c = ⌊2^a⌋` and
/// one of size `c + l` whose weight `p_t` makes the average log-size `a`;
/// the other weights are tuned so the component index has entropy `b`.
fn non_lattice_half_open(a: f64, b: f64) -> Result<JointDist> {
    let c = a.exp2().floor().max(1.0) as u64;
    let lc = log2(c);
    for t in 2..=MAX_COMPONENTS {
        let mut l = 1;
        while l <= MAX_INCREMENT {
            let outcomes = (t as u64 - 1) * c * c + (c + l) * (c + l);
            if outcomes > MAX_OUTCOMES {
                break;
            }
            let pt = (a - lc) / (log2(c + l) - lc);
            if pt > 0.0 && pt < 1.0 {
                let rest = (b - entropy(&[pt, 1.0 - pt])) / (1.0 - pt);
                let room = ((t - 1) as f64).log2();
                if rest >= -1e-12 && rest <= room + 1e-12 {
                    let q = dist_with_entropy(rest.clamp(0.0, room), t - 1)?;
                    let mut p: Vec<f64> = q.iter().map(|x| x * (1.0 - pt)).collect();
                    p.push(pt);
                    let mut sizes = vec![c; t - 1];
                    sizes.push(c + l);
                    return component_witness(&sizes, &p);
                }
            }
            l *= 2;
        }
    }
    Err(Error::SearchFailed(format!(
        "no (t, l) with t in 2..={MAX_COMPONENTS} and l in 1..={MAX_INCREMENT} (powers of two) fits a = {a}, b = {b}"
    )))
}
