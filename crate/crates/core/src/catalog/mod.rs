//! Named extreme rays of `Γ_n`, their orbits under the symmetric group, and
//! the catalog of two-dimensional face types.

mod names;
mod table;

use std::collections::{BTreeSet, HashMap};

use crate::cone::{double_description, enumerate_2faces, ExtremeRay, FacePair};
use crate::entspace::{elemental_inequalities, GroundSet, Permutation, Subset};
use crate::error::{Error, Result};
use crate::{BigRational, ExactInequality, ExactSetFunction};

pub use names::{named_rank_function, Family, RayName};
pub use table::{FaceStatus, FaceType, REPRESENTATIVES};

/// Largest ground set the catalog is built for.
pub const MAX_CATALOG_GROUND: usize = 4;

/// `action[p][i]`: index of the ray `rays[i]∘π_p`, for `π_p = perms[p]`.
fn ray_action(rays: &[ExtremeRay], perms: &[Permutation]) -> Result<Vec<Vec<usize>>> {
    let lookup: HashMap<&[BigRational], usize> = rays
        .iter()
        .enumerate()
        .map(|(i, r)| (r.rep.values(), i))
        .collect();
    perms
        .iter()
        .map(|p| {
            rays.iter()
                .map(|r| {
                    let img = r.rep.apply_permutation(p)?;
                    lookup.get(img.values()).copied().ok_or_else(|| {
                        Error::Catalog("ray set is not closed under permutation".into())
                    })
                })
                .collect()
        })
        .collect()
}

/// Orbits of ray indices, each sorted, ordered by least member.
fn orbits_of(action: &[Vec<usize>], members: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &i in members {
        if seen.contains(&i) {
            continue;
        }
        let orbit: BTreeSet<usize> = action.iter().map(|row| row[i]).collect();
        seen.extend(orbit.iter().copied());
        out.push(orbit.into_iter().collect());
    }
    out
}

fn adjacency(n_rays: usize, faces: &[FacePair]) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n_rays]; n_rays];
    for f in faces.iter().filter(|f| f.is_2face) {
        adj[f.i][f.j] = true;
        adj[f.j][f.i] = true;
    }
    adj
}

/// Names every extreme ray of `Γ_n`.
///
/// Matroid rays are matched exactly against [`named_rank_function`]. On
/// `N_4` the 14 remaining rays fall into orbits of sizes 4, 4 and 6, which
/// are told apart by which `U23` rays they share a two-dimensional face
/// with:
/// * the size-6 orbit is `V8`; its support is the common part of the
///   supports of its `U23` neighbours;
/// * in a size-4 orbit the support `i` is the point fixed by the ray's
///   stabilizer; the orbit is `Uhat25` when it meets `U23` on `N \ i`, and
///   `Uhat35` otherwise.
pub fn name_rays(rays: &[ExtremeRay], faces: &[FacePair]) -> Result<Vec<RayName>> {
    let Some(first) = rays.first() else {
        return Ok(Vec::new());
    };
    let ground = first.rep.ground();
    let matroids: HashMap<Vec<BigRational>, RayName> = names::matroid_names(ground)
        .into_iter()
        .map(|name| Ok((named_rank_function(&name)?.into_values(), name)))
        .collect::<Result<_>>()?;

    let mut names: Vec<Option<RayName>> = rays
        .iter()
        .map(|r| matroids.get(r.rep.values()).copied())
        .collect();
    let unnamed: Vec<usize> = (0..rays.len()).filter(|&i| names[i].is_none()).collect();
    if !unnamed.is_empty() {
        if ground.size() != 4 {
            return Err(Error::Catalog(format!(
                "{} extreme rays of Γ_{} are not matroid rank functions",
                unnamed.len(),
                ground.size()
            )));
        }
        name_non_matroids(ground, rays, faces, &unnamed, &mut names)?;
    }
    let names: Vec<RayName> = names.into_iter().flatten().collect();
    let distinct: BTreeSet<&RayName> = names.iter().collect();
    if distinct.len() != rays.len() {
        return Err(Error::Catalog("ray names are not unique".into()));
    }
    Ok(names)
}

fn name_non_matroids(
    ground: GroundSet,
    rays: &[ExtremeRay],
    faces: &[FacePair],
    unnamed: &[usize],
    names: &mut [Option<RayName>],
) -> Result<()> {
    let perms = Permutation::all(4);
    let action = ray_action(rays, &perms)?;
    let adj = adjacency(rays.len(), faces);
    let u23 = Family::Uniform { rank: 2, size: 3 };
    let u23_support: Vec<Option<Subset>> = names
        .iter()
        .map(|nm| nm.filter(|nm| nm.family() == u23).map(|nm| nm.support()))
        .collect();
    let u23_neighbours = |r: usize| -> Vec<Subset> {
        (0..rays.len())
            .filter(|&j| adj[r][j])
            .filter_map(|j| u23_support[j])
            .collect()
    };
    let fixed_point = |r: usize| -> Result<usize> {
        let fixed: Vec<usize> = (1..=4)
            .filter(|&e| {
                perms
                    .iter()
                    .zip(&action)
                    .filter(|(_, row)| row[r] == r)
                    .all(|(p, _)| p.image(e) == e)
            })
            .collect();
        match fixed[..] {
            [e] => Ok(e),
            _ => Err(Error::Catalog(format!("stabilizer of ray {r} fixes {fixed:?}"))),
        }
    };

    let mut orbits = orbits_of(&action, unnamed);
    orbits.sort_by_key(|o| (o.len(), o[0]));
    let sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
    if sizes != [4, 4, 6] {
        return Err(Error::Catalog(format!(
            "non-matroid orbit sizes {sizes:?}, expected [4, 4, 6]"
        )));
    }

    for &r in &orbits[2] {
        let alpha = u23_neighbours(r)
            .into_iter()
            .reduce(Subset::intersection)
            .unwrap_or(Subset::EMPTY);
        names[r] = Some(RayName::new(ground, Family::V8, alpha)?);
    }

    let mut families = Vec::new();
    for orbit in &orbits[..2] {
        let r = orbit[0];
        let i = fixed_point(r)?;
        let complement = ground.full().without(i);
        let neighbours = u23_neighbours(r);
        let family = if neighbours.contains(&complement) {
            Family::Uhat25
        } else if neighbours.iter().any(|a| a.contains(i)) {
            Family::Uhat35
        } else {
            return Err(Error::Catalog(format!("ray {r} has no U23 fingerprint")));
        };
        families.push(family);
        for &m in orbit {
            names[m] = Some(RayName::new(ground, family, Subset::singleton(fixed_point(m)?))?);
        }
    }
    if families[0] == families[1] {
        return Err(Error::Catalog("both size-4 orbits got the same family".into()));
    }
    Ok(())
}

/// Name of the ray with representative `rep`.
pub fn name_ray(rep: &ExactSetFunction, rays: &[ExtremeRay], faces: &[FacePair]) -> Result<RayName> {
    let idx = rays
        .iter()
        .position(|r| &r.rep == rep)
        .ok_or_else(|| Error::Catalog("representative is not among the extreme rays".into()))?;
    Ok(name_rays(rays, faces)?[idx])
}

/// An orbit of extreme rays under `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayOrbit {
    pub family: Family,
    /// Ray indices, ascending.
    pub members: Vec<usize>,
}

/// Everything derived from `Γ_n`: inequalities, rays, names, faces, the
/// group action and the face-type table.
#[derive(Clone, Debug)]
pub struct RayCatalog {
    ground: GroundSet,
    inequalities: Vec<ExactInequality>,
    rays: Vec<ExtremeRay>,
    names: Vec<RayName>,
    faces: Vec<FacePair>,
    adjacency: Vec<Vec<bool>>,
    perms: Vec<Permutation>,
    action: Vec<Vec<usize>>,
    face_types: Vec<FaceType>,
    pair_type: HashMap<(usize, usize), usize>,
}

impl RayCatalog {
    pub fn build(n: usize) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        if n > MAX_CATALOG_GROUND {
            return Err(Error::Catalog(format!(
                "catalog is built only for n <= {MAX_CATALOG_GROUND}"
            )));
        }
        let inequalities = elemental_inequalities(ground);
        let rays = double_description(&inequalities)?;
        let faces = enumerate_2faces(&rays);
        let names = name_rays(&rays, &faces)?;
        let perms = Permutation::all(n);
        let action = ray_action(&rays, &perms)?;
        let adjacency = adjacency(rays.len(), &faces);
        let mut cat = RayCatalog {
            ground,
            inequalities,
            rays,
            names,
            faces,
            adjacency,
            perms,
            action,
            face_types: Vec::new(),
            pair_type: HashMap::new(),
        };
        let (types, pair_type) = table::face_type_table(&cat)?;
        cat.face_types = types;
        cat.pair_type = pair_type;
        Ok(cat)
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn inequalities(&self) -> &[ExactInequality] {
        &self.inequalities
    }

    pub fn rays(&self) -> &[ExtremeRay] {
        &self.rays
    }

    pub fn names(&self) -> &[RayName] {
        &self.names
    }

    pub fn faces(&self) -> &[FacePair] {
        &self.faces
    }

    pub fn face_types(&self) -> &[FaceType] {
        &self.face_types
    }

    pub fn permutations(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn index_of(&self, name: &RayName) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn rep(&self, name: &RayName) -> Option<&ExactSetFunction> {
        self.index_of(name).map(|i| &self.rays[i].rep)
    }

    pub fn is_2face(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }

    /// Index of `rays[i]∘π` where `π = permutations()[p]`.
    pub fn act(&self, p: usize, i: usize) -> usize {
        self.action[p][i]
    }

    pub fn orbits(&self) -> Vec<RayOrbit> {
        let all: Vec<usize> = (0..self.rays.len()).collect();
        let mut out: Vec<RayOrbit> = orbits_of(&self.action, &all)
            .into_iter()
            .map(|members| RayOrbit {
                family: self.names[members[0]].family(),
                members,
            })
            .collect();
        out.sort_by_key(|o| (o.family.order(), o.members[0]));
        out
    }

    /// The face type of the 2-face spanned by rays `i` and `j`, together
    /// with the index of a permutation `π` carrying the type's
    /// representative onto the ordered pair: `act(π, ray1) = i` and
    /// `act(π, ray2) = j`. `None` when the pair is not a 2-face.
    pub fn face_type_of(&self, i: usize, j: usize) -> Option<(&FaceType, usize)> {
        let key = (i.min(j), i.max(j));
        let t = &self.face_types[*self.pair_type.get(&key)?];
        let (r1, r2) = t.indices;
        let p = (0..self.perms.len()).find(|&p| self.action[p][r1] == i && self.action[p][r2] == j)?;
        Some((t, p))
    }
}

/// `(family, orbit size)` for every orbit of `catalog`'s rays, in family
/// order.
pub fn classify_orbits(catalog: &RayCatalog) -> Vec<(Family, usize)> {
    catalog
        .orbits()
        .into_iter()
        .map(|o| (o.family, o.members.len()))
        .collect()
}
