//! Entropic points on the two-dimensional faces of `Γ_4`.
//!
//! A point `(a, b)` on the face spanned by rays `r1` and `r2` stands for the
//! polymatroid `a·r1 + b·r2`. Membership predicates decide whether it is an
//! entropy function (for the characterized face types); witnesses construct a
//! distribution realizing it.

mod partition;
mod witness;

use serde::Serialize;

use rayon::prelude::*;

use crate::catalog::{FaceStatus, RayCatalog, RayName};
use crate::entspace::{combine, Permutation};
use crate::error::{Error, Result};
use crate::RealSetFunction;

pub use partition::{partition_entropy, partitions, PARTITION_CAP};
pub use witness::{witness, Params, Witness, WITNESS_TOL};

/// A two-dimensional face of `Γ_4` with an orientation: `ray1` carries
/// coordinate `a`, `ray2` carries `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub ray1: RayName,
    pub ray2: RayName,
    pub type_id: usize,
    pub theorem: Option<u8>,
    pub status: FaceStatus,
    /// Catalog indices of `ray1` and `ray2`.
    rays: (usize, usize),
    /// Canonical representative of the face type, as catalog indices.
    canonical: (usize, usize),
    /// `π` with `canonical∘π` equal to this face (up to `swapped`).
    perm: Permutation,
    /// `true` when `ray1` plays the role of the representative's second ray.
    swapped: bool,
}

impl Face {
    /// Resolves `(ray1,ray2)` or a face-type id. Either orientation of a
    /// face is accepted; coordinates always follow the order given.
    pub fn resolve(catalog: &RayCatalog, label: &str) -> Result<Face> {
        let unknown = || Error::UnknownFace(label.to_string());
        let trimmed = label.trim();
        if let Ok(id) = trimmed.parse::<usize>() {
            let t = catalog
                .face_types()
                .iter()
                .find(|t| t.id == id)
                .ok_or_else(unknown)?;
            return Self::resolve_pair(catalog, t.indices.0, t.indices.1).ok_or_else(unknown);
        }
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(trimmed);
        let (s1, s2) = split_pair(inner).ok_or_else(unknown)?;
        let n = catalog.ground().size();
        let (r1, r2) = (RayName::parse(s1, n)?, RayName::parse(s2, n)?);
        let i = catalog.index_of(&r1).ok_or_else(unknown)?;
        let j = catalog.index_of(&r2).ok_or_else(unknown)?;
        Self::resolve_pair(catalog, i, j).ok_or_else(|| {
            Error::UnknownFace(format!("{label}: the rays do not span a two-dimensional face"))
        })
    }

    fn resolve_pair(catalog: &RayCatalog, i: usize, j: usize) -> Option<Face> {
        let (swapped, (t, p)) = match catalog.face_type_of(i, j) {
            Some(found) => (false, found),
            None => (true, catalog.face_type_of(j, i)?),
        };
        Some(Face {
            ray1: catalog.names()[i],
            ray2: catalog.names()[j],
            type_id: t.id,
            theorem: t.theorem,
            status: t.status,
            rays: (i, j),
            canonical: t.indices,
            perm: catalog.permutations()[p].clone(),
            swapped,
        })
    }

    pub fn label(&self) -> String {
        format!("({},{})", self.ray1, self.ray2)
    }

    /// Coordinates with respect to the type's representative.
    fn canonical_coords(&self, a: f64, b: f64) -> (f64, f64) {
        if self.swapped {
            (b, a)
        } else {
            (a, b)
        }
    }
}

/// Splits `X,Y` at the comma separating two ray names. Names may contain
/// commas inside braces, e.g. `U_{2,3}^{123},U_{1,1}^{1}`.
fn split_pair(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (pos, c) in s.char_indices() {
        match c {
            '{' => depth += 1,
            '}' => depth -= 1,
            ',' if depth == 0 => return Some((&s[..pos], &s[pos + 1..])),
            _ => {}
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq)]
pub struct FacePoint {
    pub face: Face,
    pub a: f64,
    pub b: f64,
}

impl FacePoint {
    pub fn new(face: Face, a: f64, b: f64) -> Result<Self> {
        if !(a >= 0.0 && b >= 0.0) || !a.is_finite() || !b.is_finite() {
            return Err(Error::NegativeCoordinate { a, b });
        }
        Ok(Self { face, a, b })
    }
}

/// `a·r1 + b·r2` in the real backend.
pub fn face_point_vector(catalog: &RayCatalog, fp: &FacePoint) -> Result<RealSetFunction> {
    let (i, j) = fp.face.rays;
    let r1 = catalog.rays()[i].rep.to_real();
    let r2 = catalog.rays()[j].rep.to_real();
    combine(&fp.a, &r1, &fp.b, &r2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum VerdictStatus {
    Entropic,
    NotEntropic,
    Uncharacterized,
}

/// Parameters matched while deciding membership.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerdictDetail {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k1: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k2: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub detail: VerdictDetail,
}

impl Verdict {
    fn new(status: VerdictStatus) -> Self {
        Self {
            status,
            detail: VerdictDetail::default(),
        }
    }

    fn with_k(status: VerdictStatus, k: u64) -> Self {
        Self {
            status,
            detail: VerdictDetail {
                k: Some(k),
                ..Default::default()
            },
        }
    }
}

/// JSON form of a membership query and its verdict.
#[derive(Clone, Debug, Serialize)]
pub struct VerdictReport {
    pub face: String,
    pub a: f64,
    pub b: f64,
    pub status: VerdictStatus,
    pub detail: VerdictDetail,
}

impl VerdictReport {
    pub fn new(fp: &FacePoint, verdict: &Verdict) -> Self {
        Self {
            face: fp.face.label(),
            a: fp.a,
            b: fp.b,
            status: verdict.status,
            detail: verdict.detail.clone(),
        }
    }
}

/// `Some(k)` when `x` is within `tol` of `log2 k` for a positive integer `k`.
pub fn log_lattice(x: f64, tol: f64) -> Option<u64> {
    let k = x.exp2().round();
    if !(1.0..=9.0e15).contains(&k) {
        return None;
    }
    ((x - k.log2()).abs() <= tol).then_some(k as u64)
}

/// Decides whether the point is entropic, using the default partition cap.
pub fn membership(fp: &FacePoint, tol: f64) -> Result<Verdict> {
    membership_with_cap(fp, tol, PARTITION_CAP)
}

pub fn membership_with_cap(fp: &FacePoint, tol: f64, cap: u64) -> Result<Verdict> {
    let (a, b) = fp.face.canonical_coords(fp.a, fp.b);
    if !(a >= 0.0 && b >= 0.0) {
        return Err(Error::NegativeCoordinate { a: fp.a, b: fp.b });
    }
    use VerdictStatus::*;
    Ok(match fp.face.theorem {
        None => Verdict::new(Uncharacterized),
        Some(1) => Verdict::new(Entropic),
        Some(2) => match log_lattice(a, tol) {
            Some(k) => Verdict::with_k(Entropic, k),
            None => {
                let k = a.exp2().ceil();
                let status = if a + b >= k.log2() - tol { Entropic } else { NotEntropic };
                Verdict::with_k(status, k as u64)
            }
        },
        Some(3 | 4) => match log_lattice(a, tol) {
            Some(k) => Verdict::with_k(Entropic, k),
            None => Verdict::new(NotEntropic),
        },
        Some(5) => match (log_lattice(a, tol), log_lattice(b, tol)) {
            (Some(k1), Some(k2)) => Verdict {
                status: Entropic,
                detail: VerdictDetail {
                    k1: Some(k1),
                    k2: Some(k2),
                    ..Default::default()
                },
            },
            _ => Verdict::new(NotEntropic),
        },
        Some(6) => match log_lattice(a + b, tol) {
            None => Verdict::new(NotEntropic),
            Some(k) => {
                let found = partitions(k, cap)?
                    .into_iter()
                    .find(|alpha| (a - partition_entropy(alpha)).abs() <= tol);
                match found {
                    Some(alpha) => Verdict {
                        status: Entropic,
                        detail: VerdictDetail {
                            k: Some(k),
                            partition: Some(alpha),
                            ..Default::default()
                        },
                    },
                    None => Verdict::with_k(NotEntropic, k),
                }
            }
        },
        Some(7) => {
            if b > tol {
                Verdict::new(Entropic)
            } else {
                match log_lattice(a, tol) {
                    Some(k) => Verdict::with_k(Entropic, k),
                    None => Verdict::new(NotEntropic),
                }
            }
        }
        Some(t) => return Err(Error::Catalog(format!("no predicate for theorem {t}"))),
    })
}

/// Membership on the grid `a = i·step ≤ a_max`, `b = j·step ≤ b_max`, in
/// row-major order (`a` outer).
pub fn region_sample(
    face: &Face,
    a_max: f64,
    b_max: f64,
    step: f64,
    tol: f64,
) -> Result<Vec<(f64, f64, Verdict)>> {
    let nonnegative = |x: f64| x >= 0.0;
    if !nonnegative(a_max) || !nonnegative(b_max) || step.is_nan() || step <= 0.0 {
        return Err(Error::Parse(format!(
            "grid needs nonnegative bounds and a positive step, got ({a_max}, {b_max}, {step})"
        )));
    }
    let steps = |max: f64| (max / step + 1e-9).floor() as usize;
    let (na, nb) = (steps(a_max), steps(b_max));
    let rows: Vec<Vec<(f64, f64, Verdict)>> = (0..=na)
        .into_par_iter()
        .map(|i| {
            let a = i as f64 * step;
            (0..=nb)
                .map(|j| {
                    let b = j as f64 * step;
                    let fp = FacePoint::new(face.clone(), a, b)?;
                    Ok((a, b, membership(&fp, tol)?))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(rows.into_iter().flatten().collect())
}
