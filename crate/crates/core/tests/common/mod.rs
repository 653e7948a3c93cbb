//! Reference face-type data for `Γ_4`: representatives, counts and characterizations.
#![allow(dead_code)]

use std::sync::OnceLock;

use gammaface::catalog::RayCatalog;
use gammaface::faces::{partition_entropy, partitions, Params, PARTITION_CAP};

pub fn catalog() -> &'static RayCatalog {
    static CAT: OnceLock<RayCatalog> = OnceLock::new();
    CAT.get_or_init(|| RayCatalog::build(4).expect("catalog of Γ_4"))
}

/// `(ray1, ray2, count, theorem)`; theorem 0 marks an uncharacterized type.
pub const TABLE_CELLS: &[(&str, &str, usize, u8)] = &[
    ("U11^1", "U11^2", 6, 1),
    ("U12^12", "U11^1", 12, 1),
    ("U12^12", "U11^3", 12, 1),
    ("U13^123", "U11^1", 12, 1),
    ("U13^123", "U11^4", 4, 1),
    ("U14", "U11^1", 4, 1),
    ("U23^123", "U11^1", 12, 3),
    ("U23^123", "U11^4", 4, 3),
    ("W2^14", "U11^1", 12, 3),
    ("W2^34", "U11^1", 12, 3),
    ("U24", "U11^1", 4, 0),
    ("U34", "U11^1", 4, 0),
    ("Uhat25^1", "U11^1", 4, 0),
    ("Uhat25^1", "U11^2", 12, 0),
    ("Uhat35^1", "U11^1", 4, 0),
    ("Uhat35^1", "U11^2", 12, 0),
    ("V8^12", "U11^1", 12, 0),
    ("V8^12", "U11^3", 12, 0),
    ("U12^12", "U12^13", 12, 1),
    ("U12^12", "U12^34", 3, 1),
    ("U13^123", "U12^12", 12, 1),
    ("U13^123", "U12^14", 12, 1),
    ("U14", "U12^12", 6, 1),
    ("U23^123", "U12^12", 12, 2),
    ("U23^123", "U12^14", 12, 3),
    ("W2^14", "U12^14", 6, 3),
    ("W2^24", "U12^14", 24, 3),
    ("W2^34", "U12^12", 6, 2),
    ("U24", "U12^12", 6, 0),
    ("U34", "U12^12", 6, 0),
    ("Uhat25^1", "U12^12", 12, 0),
    ("Uhat35^1", "U12^12", 12, 0),
    ("V8^12", "U12^13", 24, 0),
    ("U13^123", "U13^124", 6, 1),
    ("U14", "U13^123", 4, 1),
    ("U23^123", "U13^124", 12, 4),
    ("W2^14", "U13^124", 12, 2),
    ("U24", "U13^123", 4, 0),
    ("U34", "U13^123", 4, 0),
    ("Uhat25^1", "U13^123", 12, 0),
    ("Uhat35^1", "U13^234", 4, 0),
    ("V8^12", "U13^134", 12, 0),
    ("U23^123", "U14", 4, 7),
    ("U34", "U14", 1, 0),
    ("V8^12", "U14", 6, 0),
    ("U23^123", "U23^124", 6, 5),
    ("W2^12", "U23^134", 12, 6),
    ("U24", "U23^123", 4, 0),
    ("U34", "U23^123", 4, 0),
    ("Uhat25^1", "U23^234", 4, 0),
    ("Uhat35^1", "U23^123", 12, 0),
    ("V8^12", "U23^123", 12, 0),
    ("W2^12", "W2^13", 12, 0),
    ("U24", "W2^12", 6, 0),
    ("Uhat25^1", "W2^12", 12, 0),
    ("Uhat35^1", "W2^23", 12, 0),
    ("Uhat25^1", "U24", 4, 0),
    ("Uhat35^1", "U24", 4, 0),
    ("V8^12", "U34", 6, 0),
];

/// Family pairs whose table cell is 0: no member pair spans a face.
pub const ZERO_CELLS: &[(&str, &str)] = &[
    ("U24", "U34"),
    ("U14", "W2"),
    ("U14", "U24"),
    ("U14", "Uhat25"),
    ("U14", "Uhat35"),
    ("W2", "U34"),
    ("W2", "V8"),
    ("U24", "V8"),
    ("U34", "Uhat25"),
    ("U34", "Uhat35"),
    ("Uhat25", "Uhat25"),
    ("Uhat25", "Uhat35"),
    ("Uhat25", "V8"),
    ("Uhat35", "Uhat35"),
    ("Uhat35", "V8"),
    ("V8", "V8"),
];

/// One point of the witness validation set, on the representative of a
/// characterized type.
#[derive(Clone, Debug)]
pub struct Sample {
    pub face: String,
    pub theorem: u8,
    pub a: f64,
    pub b: f64,
    pub params: Option<Params>,
}

fn lg(k: u64) -> f64 {
    (k as f64).log2()
}

/// Lattice points with `k, k1, k2 <= 5`, boundary and interior points of
/// the sawtooth, all partitions of `k <= 6`, and both regimes of the
/// half-open region.
pub fn validation_set(cat: &RayCatalog) -> Vec<Sample> {
    let mut out = Vec::new();
    for t in cat.face_types() {
        let Some(theorem) = t.theorem else { continue };
        let mut push = |a: f64, b: f64, params: Option<Params>| {
            out.push(Sample {
                face: t.label(),
                theorem,
                a,
                b,
                params,
            })
        };
        match theorem {
            1 | 5 => {
                for k1 in 1..=5 {
                    for k2 in 1..=5 {
                        let params = (theorem == 5).then_some(Params::K1K2(k1, k2));
                        push(lg(k1), lg(k2), params);
                    }
                }
                if theorem == 1 {
                    push(0.5, 1.7, None);
                    push(2.3, 0.1, None);
                }
            }
            2 => {
                for k in 1..=5 {
                    for b in [0.0, 0.6] {
                        push(lg(k), b, Some(Params::K(k)));
                    }
                }
                for a in [0.2f64, 0.5, 1.1, 1.5, 1.9, 2.2] {
                    let boundary = a.exp2().ceil().log2() - a;
                    push(a, boundary, None);
                    push(a, boundary + 0.3, None);
                }
            }
            3 | 4 => {
                for k in 1..=5 {
                    for b in [0.0, 0.7, 2.0] {
                        push(lg(k), b, Some(Params::K(k)));
                    }
                }
            }
            6 => {
                for k in 1..=6 {
                    for alpha in partitions(k, PARTITION_CAP).unwrap() {
                        let a = partition_entropy(&alpha);
                        push(a, (lg(k) - a).max(0.0), Some(Params::Partition(alpha)));
                    }
                }
            }
            7 => {
                for k in 1..=5 {
                    for b in [0.0, 0.4, 1.3] {
                        push(lg(k), b, Some(Params::K(k)));
                    }
                }
                for a in [0.3, 1.3, 2.5] {
                    for b in [0.5, 1.0, 2.0] {
                        push(a, b, None);
                    }
                }
            }
            _ => unreachable!("theorem {theorem}"),
        }
    }
    out
}
