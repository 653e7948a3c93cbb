mod common;

use std::collections::BTreeMap;

use common::{catalog, TABLE_CELLS, ZERO_CELLS};
use gammaface::catalog::{classify_orbits, name_ray, named_rank_function, Family, FaceStatus, RayCatalog, RayName};
use gammaface::cone::verify_extreme;
use gammaface::entspace::elemental_inequalities;
use gammaface::BigRational;
use num_traits::Zero;

fn family_label(name: &RayName) -> String {
    name.family().to_string()
}

#[test]
fn orbit_sizes() {
    let sizes: Vec<usize> = classify_orbits(catalog()).iter().map(|o| o.1).collect();
    assert_eq!(sizes, vec![4, 6, 4, 1, 4, 6, 1, 1, 4, 4, 6]);
    let families: Vec<String> = classify_orbits(catalog()).iter().map(|o| o.0.to_string()).collect();
    assert_eq!(families, ["U11", "U12", "U13", "U14", "U23", "W2", "U24", "U34", "Uhat25", "Uhat35", "V8"]);
    let n3: Vec<usize> = classify_orbits(&RayCatalog::build(3).unwrap()).iter().map(|o| o.1).collect();
    assert_eq!(n3, vec![3, 3, 1, 1]);
    let n2: Vec<usize> = classify_orbits(&RayCatalog::build(2).unwrap()).iter().map(|o| o.1).collect();
    assert_eq!(n2, vec![2, 1]);
}

#[test]
fn every_cell_count_matches() {
    let types = catalog().face_types();
    assert_eq!(types.len(), TABLE_CELLS.len());
    let by_pair: BTreeMap<(String, String), _> = types
        .iter()
        .map(|t| ((t.ray1.to_string(), t.ray2.to_string()), t))
        .collect();
    for &(r1, r2, count, theorem) in TABLE_CELLS {
        let t = by_pair
            .get(&(r1.to_string(), r2.to_string()))
            .unwrap_or_else(|| panic!("missing type ({r1},{r2})"));
        assert_eq!(t.count, count, "({r1},{r2})");
        assert_eq!(t.theorem, (theorem != 0).then_some(theorem), "({r1},{r2})");
    }
}

#[test]
fn zero_cells_have_no_faces() {
    let cat = catalog();
    for &(f1, f2) in ZERO_CELLS {
        for f in cat.faces().iter().filter(|f| f.is_2face) {
            let (a, b) = (family_label(&cat.names()[f.i]), family_label(&cat.names()[f.j]));
            assert!(
                !((a == f1 && b == f2) || (a == f2 && b == f1)),
                "{} and {} span a face",
                cat.names()[f.i],
                cat.names()[f.j]
            );
        }
    }
}

#[test]
fn counts_partition_the_faces() {
    let cat = catalog();
    let total: usize = cat.face_types().iter().map(|t| t.count).sum();
    assert_eq!(total, cat.faces().iter().filter(|f| f.is_2face).count());
    for t in cat.face_types() {
        assert_eq!(24 % t.count, 0, "orbit size {} of {}", t.count, t.label());
    }
    // every member maps back to its representative
    for f in cat.faces().iter().filter(|f| f.is_2face) {
        let (t, p) = cat.face_type_of(f.i, f.j).or_else(|| cat.face_type_of(f.j, f.i)).unwrap();
        let (r1, r2) = t.indices;
        let image = (cat.act(p, r1), cat.act(p, r2));
        assert!(image == (f.i, f.j) || image == (f.j, f.i));
    }
}

#[test]
fn status_split() {
    let mut per_theorem = BTreeMap::new();
    for t in catalog().face_types() {
        *per_theorem.entry(t.theorem).or_insert(0) += 1;
    }
    let expect: BTreeMap<Option<u8>, usize> = [
        (None, 32),
        (Some(1), 13),
        (Some(2), 3),
        (Some(3), 7),
        (Some(4), 1),
        (Some(5), 1),
        (Some(6), 1),
        (Some(7), 1),
    ]
    .into_iter()
    .collect();
    assert_eq!(per_theorem, expect);
    let gray = catalog().face_types().iter().filter(|t| t.status == FaceStatus::Uncharacterized).count();
    assert_eq!(gray, 32);
}

#[test]
fn table_is_sorted_and_numbered() {
    let types = catalog().face_types();
    for (i, t) in types.iter().enumerate() {
        assert_eq!(t.id, i + 1);
    }
    let keys: Vec<(u32, u32)> = types.iter().map(|t| (t.ray1.family().order(), t.ray2.family().order())).collect();
    assert!(keys.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn named_rank_functions_are_extreme_rays() {
    let cat = catalog();
    let ineqs = elemental_inequalities(cat.ground());
    for name in cat.names().iter().filter(|n| n.family().is_matroid()) {
        let f = named_rank_function(name).unwrap();
        assert_eq!(cat.rep(name), Some(&f));
        assert!(verify_extreme(&f, &ineqs));
        for q in &ineqs {
            assert!(q.evaluate(&f) >= BigRational::zero());
        }
    }
}

#[test]
fn name_lookup() {
    let cat = catalog();
    let u24 = named_rank_function(&"U24".parse().unwrap()).unwrap();
    assert_eq!(name_ray(&u24, cat.rays(), cat.faces()).unwrap().to_string(), "U24");
    let v8: Vec<&RayName> = cat.names().iter().filter(|n| n.family() == Family::V8).collect();
    assert_eq!(v8.len(), 6);
    assert!(cat.names().iter().all(|n| n.to_string().parse::<RayName>().unwrap() == *n));
}

#[test]
fn non_matroid_names_are_equivariant() {
    let cat = catalog();
    for (p, perm) in cat.permutations().iter().enumerate() {
        for (i, name) in cat.names().iter().enumerate() {
            assert_eq!(cat.names()[cat.act(p, i)], name.permuted(perm));
        }
    }
}
