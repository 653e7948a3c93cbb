use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use super::{RayCatalog, RayName};
use crate::error::{Error, Result};

/// What is known about the entropic points of a face type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FaceStatus {
    /// Every point of the face is entropic.
    AllEntropic,
    /// Entropic iff `a` is `log k`, or `a + b >= log ⌈2^a⌉`.
    Sawtooth,
    /// Entropic iff `a` is `log k`.
    LogK,
    /// Entropic iff both coordinates are logarithms of integers.
    LogGrid,
    /// Entropic iff `a + b = log k` and `a` is the entropy of a partition of `k`.
    Partition,
    /// Entropic iff `b > 0`, or `b = 0` and `a = log k`.
    HalfOpen,
    Uncharacterized,
}

impl FaceStatus {
    pub fn from_theorem(theorem: Option<u8>) -> FaceStatus {
        match theorem {
            Some(1) => FaceStatus::AllEntropic,
            Some(2) => FaceStatus::Sawtooth,
            Some(3 | 4) => FaceStatus::LogK,
            Some(5) => FaceStatus::LogGrid,
            Some(6) => FaceStatus::Partition,
            Some(7) => FaceStatus::HalfOpen,
            _ => FaceStatus::Uncharacterized,
        }
    }
}

impl fmt::Display for FaceStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An `S_n`-orbit of two-dimensional faces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceType {
    #[serde(rename = "type_id")]
    pub id: usize,
    pub ray1: RayName,
    pub ray2: RayName,
    /// Number of faces in the orbit.
    pub count: usize,
    pub status: FaceStatus,
    /// Characterizing theorem, 1 to 7, when there is one.
    pub theorem: Option<u8>,
    /// Catalog indices of `ray1` and `ray2`.
    #[serde(skip)]
    pub indices: (usize, usize),
}

impl FaceType {
    /// `(ray1,ray2)`, the form accepted by face lookups.
    pub fn label(&self) -> String {
        format!("({},{})", self.ray1, self.ray2)
    }
}

/// Preferred representatives of the face types of `Γ_4` with their
/// characterizing theorem (0 when uncharacterized). The first ray is the one
/// carrying coordinate `a`.
pub const REPRESENTATIVES: &[(&str, &str, u8)] = &[
    ("U11^1", "U11^2", 1),
    ("U12^12", "U11^1", 1),
    ("U12^12", "U11^3", 1),
    ("U13^123", "U11^1", 1),
    ("U13^123", "U11^4", 1),
    ("U14", "U11^1", 1),
    ("U23^123", "U11^1", 3),
    ("U23^123", "U11^4", 3),
    ("W2^14", "U11^1", 3),
    ("W2^34", "U11^1", 3),
    ("U24", "U11^1", 0),
    ("U34", "U11^1", 0),
    ("Uhat25^1", "U11^1", 0),
    ("Uhat25^1", "U11^2", 0),
    ("Uhat35^1", "U11^1", 0),
    ("Uhat35^1", "U11^2", 0),
    ("V8^12", "U11^1", 0),
    ("V8^12", "U11^3", 0),
    ("U12^12", "U12^13", 1),
    ("U12^12", "U12^34", 1),
    ("U13^123", "U12^12", 1),
    ("U13^123", "U12^14", 1),
    ("U14", "U12^12", 1),
    ("U23^123", "U12^12", 2),
    ("U23^123", "U12^14", 3),
    ("W2^14", "U12^14", 3),
    ("W2^24", "U12^14", 3),
    ("W2^34", "U12^12", 2),
    ("U24", "U12^12", 0),
    ("U34", "U12^12", 0),
    ("Uhat25^1", "U12^12", 0),
    ("Uhat35^1", "U12^12", 0),
    ("V8^12", "U12^13", 0),
    ("U13^123", "U13^124", 1),
    ("U14", "U13^123", 1),
    ("U23^123", "U13^124", 4),
    ("W2^14", "U13^124", 2),
    ("U24", "U13^123", 0),
    ("U34", "U13^123", 0),
    ("Uhat25^1", "U13^123", 0),
    ("Uhat35^1", "U13^234", 0),
    ("V8^12", "U13^134", 0),
    ("U23^123", "U14", 7),
    ("U34", "U14", 0),
    ("V8^12", "U14", 0),
    ("U23^123", "U23^124", 5),
    ("W2^12", "U23^134", 6),
    ("U24", "U23^123", 0),
    ("U34", "U23^123", 0),
    ("Uhat25^1", "U23^234", 0),
    ("Uhat35^1", "U23^123", 0),
    ("V8^12", "U23^123", 0),
    ("W2^12", "W2^13", 0),
    ("U24", "W2^12", 0),
    ("Uhat25^1", "W2^12", 0),
    ("Uhat35^1", "W2^23", 0),
    ("Uhat25^1", "U24", 0),
    ("Uhat35^1", "U24", 0),
    ("V8^12", "U34", 0),
];

/// Orients a pair so the first ray has the later family; within a family
/// the smaller support comes first.
fn oriented(cat: &RayCatalog, i: usize, j: usize) -> (usize, usize) {
    let (a, b) = (&cat.names[i], &cat.names[j]);
    let swap = match a.family().order().cmp(&b.family().order()) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => b < a,
    };
    if swap {
        (j, i)
    } else {
        (i, j)
    }
}

type PairTypes = HashMap<(usize, usize), usize>;

pub(super) fn face_type_table(cat: &RayCatalog) -> Result<(Vec<FaceType>, PairTypes)> {
    let mut orbit_of: PairTypes = HashMap::new();
    let mut orbits: Vec<Vec<(usize, usize)>> = Vec::new();
    for f in cat.faces.iter().filter(|f| f.is_2face) {
        if orbit_of.contains_key(&(f.i, f.j)) {
            continue;
        }
        let members: BTreeSet<(usize, usize)> = cat
            .action
            .iter()
            .map(|row| {
                let (x, y) = (row[f.i], row[f.j]);
                (x.min(y), x.max(y))
            })
            .collect();
        for &m in &members {
            orbit_of.insert(m, orbits.len());
        }
        orbits.push(members.into_iter().collect());
    }

    // per orbit: the oriented representative pair and its theorem
    type Rep = ((usize, usize), Option<u8>);
    let mut reps: Vec<Option<Rep>> = vec![None; orbits.len()];
    if cat.ground.size() == 4 {
        for &(r1, r2, thm) in REPRESENTATIVES {
            let idx = |s: &str| -> Result<usize> {
                let name: RayName = s.parse()?;
                cat.index_of(&name)
                    .ok_or_else(|| Error::Catalog(format!("no ray named {name}")))
            };
            let (i, j) = (idx(r1)?, idx(r2)?);
            let o = *orbit_of
                .get(&(i.min(j), i.max(j)))
                .ok_or_else(|| Error::Catalog(format!("({r1},{r2}) is not a 2-face")))?;
            if reps[o].is_some() {
                return Err(Error::Catalog(format!("({r1},{r2}) shares its orbit with another entry")));
            }
            reps[o] = Some(((i, j), (thm != 0).then_some(thm)));
        }
    }

    let mut types: Vec<FaceType> = orbits
        .iter()
        .zip(reps)
        .map(|(members, rep)| {
            let ((i, j), theorem) = rep.unwrap_or_else(|| {
                let pair = members
                    .iter()
                    .map(|&(x, y)| oriented(cat, x, y))
                    .min_by_key(|&(x, y)| (cat.names[x], cat.names[y]))
                    .expect("orbits are nonempty");
                (pair, None)
            });
            FaceType {
                id: 0,
                ray1: cat.names[i],
                ray2: cat.names[j],
                count: members.len(),
                status: FaceStatus::from_theorem(theorem),
                theorem,
                indices: (i, j),
            }
        })
        .collect();
    let key = |t: &FaceType| {
        let sup = |n: &RayName| n.support().elements().collect::<Vec<_>>();
        (
            t.ray1.family().order(),
            t.ray2.family().order(),
            sup(&t.ray1),
            sup(&t.ray2),
        )
    };
    types.sort_by_key(key);

    let mut pair_type = HashMap::new();
    for (new_idx, t) in types.iter_mut().enumerate() {
        t.id = new_idx + 1;
        let (i, j) = t.indices;
        for &m in &orbits[orbit_of[&(i.min(j), i.max(j))]] {
            pair_type.insert(m, new_idx);
        }
    }
    Ok((types, pair_type))
}
