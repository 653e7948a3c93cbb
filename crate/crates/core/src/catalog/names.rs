use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::entspace::{GroundSet, Permutation, SetFunction, Subset};
use crate::error::{Error, Result};
use crate::{BigRational, ExactSetFunction, Scalar};

/// Ray families of `Γ_4` (and the uniform families of smaller `Γ_n`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `U_{k,m}` on the support, loops elsewhere.
    Uniform { rank: u8, size: u8 },
    /// Rank-2 wheel: the support is a parallel pair, every other element is
    /// its own parallel class.
    Wheel2,
    Uhat25,
    Uhat35,
    V8,
}

impl Family {
    /// Position in the table's column order. Uniform families outside the
    /// `Γ_4` catalog sort after it.
    pub fn order(self) -> u32 {
        match self {
            Family::Uniform { rank: 1, size: 1 } => 0,
            Family::Uniform { rank: 1, size: 2 } => 1,
            Family::Uniform { rank: 1, size: 3 } => 2,
            Family::Uniform { rank: 1, size: 4 } => 3,
            Family::Uniform { rank: 2, size: 3 } => 4,
            Family::Wheel2 => 5,
            Family::Uniform { rank: 2, size: 4 } => 6,
            Family::Uniform { rank: 3, size: 4 } => 7,
            Family::Uhat25 => 8,
            Family::Uhat35 => 9,
            Family::V8 => 10,
            Family::Uniform { rank, size } => 100 + 10 * u32::from(rank) + u32::from(size),
        }
    }

    pub fn is_matroid(self) -> bool {
        matches!(self, Family::Uniform { .. } | Family::Wheel2)
    }

    /// Required support size on `N_n`; `None` for a symmetric family that
    /// always uses the whole ground set.
    pub fn support_size(self, n: usize) -> Option<usize> {
        match self {
            Family::Uniform { size, .. } if usize::from(size) == n => None,
            Family::Uniform { size, .. } => Some(usize::from(size)),
            Family::Wheel2 | Family::V8 => Some(2),
            Family::Uhat25 | Family::Uhat35 => Some(1),
        }
    }

    fn label(self) -> String {
        match self {
            Family::Uniform { rank, size } => format!("U{rank}{size}"),
            Family::Wheel2 => "W2".into(),
            Family::Uhat25 => "Uhat25".into(),
            Family::Uhat35 => "Uhat35".into(),
            Family::V8 => "V8".into(),
        }
    }

    fn from_label(s: &str) -> Option<Family> {
        Some(match s {
            "W2" => Family::Wheel2,
            "Uhat25" => Family::Uhat25,
            "Uhat35" => Family::Uhat35,
            "V8" => Family::V8,
            _ => {
                let digits = s.strip_prefix('U')?.as_bytes();
                if digits.len() != 2 || !digits.iter().all(u8::is_ascii_digit) {
                    return None;
                }
                Family::Uniform {
                    rank: digits[0] - b'0',
                    size: digits[1] - b'0',
                }
            }
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// A named extreme ray such as `U23^123` or `V8^12`.
///
/// Names on `N_4` print bare; other ground sets carry a `_n` suffix on the
/// family, e.g. `U11_3^1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RayName {
    ground: GroundSet,
    family: Family,
    support: Subset,
}

impl RayName {
    pub fn new(ground: GroundSet, family: Family, support: Subset) -> Result<Self> {
        let n = ground.size();
        let bad = |why: &str| Err(Error::RayName(format!("{family} on N_{n} with support {support}: {why}")));
        ground.check(support)?;
        match family {
            Family::Uniform { rank, size } => {
                if rank == 0 || rank > size || usize::from(size) > n {
                    return bad("need 1 <= k <= m <= n");
                }
            }
            Family::Wheel2 if n < 3 => return bad("wheels need at least 3 elements"),
            Family::Uhat25 | Family::Uhat35 | Family::V8 if n != 4 => {
                return bad("only defined on N_4")
            }
            _ => {}
        }
        let support = match family.support_size(n) {
            None if support.is_empty() || support == ground.full() => ground.full(),
            None => return bad("symmetric family takes no support"),
            Some(m) if support.len() == m => support,
            Some(m) => return bad(&format!("support must have {m} elements")),
        };
        Ok(Self { ground, family, support })
    }

    /// Parses a name, using `default_n` unless the name carries a `_n`
    /// suffix. Braces and `Û` are accepted: `U_{2,3}^{123}`, `Û25^1`.
    pub fn parse(s: &str, default_n: usize) -> Result<Self> {
        let err = || Error::RayName(s.to_string());
        let cleaned: String = s
            .trim()
            .replace('Û', "Uhat")
            .chars()
            .filter(|c| !matches!(c, '{' | '}' | ' '))
            .collect();
        let (head, sup) = match cleaned.split_once('^') {
            Some((h, a)) => (h, Some(a)),
            None => (cleaned.as_str(), None),
        };
        let squash = |h: &str| h.replace(['_', ','], "");
        let (family, n) = match Family::from_label(&squash(head)) {
            Some(f) => (f, default_n),
            None => {
                let (h, n) = head.rsplit_once('_').ok_or_else(err)?;
                let n: usize = n.parse().map_err(|_| err())?;
                (Family::from_label(&squash(h)).ok_or_else(err)?, n)
            }
        };
        let ground = GroundSet::new(n)?;
        let support = match sup {
            None => Subset::EMPTY,
            Some(a) => {
                let mut elems = Vec::new();
                for c in a.chars().filter(|&c| c != ',') {
                    let e = c.to_digit(10).ok_or_else(err)? as usize;
                    if e == 0 || e > n || elems.contains(&e) {
                        return Err(err());
                    }
                    elems.push(e);
                }
                if elems.is_empty() {
                    return Err(err());
                }
                Subset::of(&elems)
            }
        };
        Self::new(ground, family, support)
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn support(&self) -> Subset {
        self.support
    }

    /// Name of `f∘π` when `self` names `f`: supports move by `π⁻¹`.
    pub fn permuted(&self, perm: &Permutation) -> RayName {
        RayName {
            support: perm.inverse().map_subset(self.support),
            ..*self
        }
    }

    fn support_key(&self) -> Vec<usize> {
        self.support.elements().collect()
    }
}

impl Ord for RayName {
    /// Family order, then support as a sorted element list.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ground, self.family.order(), self.support_key()).cmp(&(
            other.ground,
            other.family.order(),
            other.support_key(),
        ))
    }
}

impl PartialOrd for RayName {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RayName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        let n = self.ground.size();
        if n != 4 {
            write!(f, "_{n}")?;
        }
        if self.family.support_size(n).is_some() {
            write!(f, "^{}", self.support)?;
        }
        Ok(())
    }
}

impl FromStr for RayName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, 4)
    }
}

impl Serialize for RayName {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Rank function of a matroid family member.
pub fn named_rank_function(name: &RayName) -> Result<ExactSetFunction> {
    let alpha = name.support;
    let rank = |a: Subset| -> i64 {
        match name.family {
            Family::Uniform { rank, .. } => i64::from(rank).min(a.intersection(alpha).len() as i64),
            _ => {
                let classes = a.difference(alpha).len() + usize::from(!a.intersection(alpha).is_empty());
                2.min(classes as i64)
            }
        }
    };
    if !name.family.is_matroid() {
        return Err(Error::NotMatroid(name.to_string()));
    }
    Ok(SetFunction::from_fn(name.ground, |a| BigRational::from_i64(rank(a))))
}

/// Every matroid-family name on `N_n`, in catalog order.
pub(crate) fn matroid_names(ground: GroundSet) -> Vec<RayName> {
    let n = ground.size();
    let mut families: Vec<Family> = Vec::new();
    for size in 1..=n as u8 {
        for rank in 1..=size {
            families.push(Family::Uniform { rank, size });
        }
    }
    if n >= 3 {
        families.push(Family::Wheel2);
    }
    let mut out = Vec::new();
    for family in families {
        match family.support_size(n) {
            None => out.extend(RayName::new(ground, family, ground.full())),
            Some(m) => out.extend(
                ground
                    .subsets()
                    .filter(|s| s.len() == m)
                    .filter_map(|s| RayName::new(ground, family, s).ok()),
            ),
        }
    }
    out.sort();
    out
}
