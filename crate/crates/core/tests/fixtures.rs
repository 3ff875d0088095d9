use std::path::PathBuf;

use cusp_iso::fillpair::{verify_bound_pipeline, CombinatorialMap, SeparationCase};
use cusp_iso::Error;

fn read(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

fn load(name: &str) -> CombinatorialMap {
    CombinatorialMap::from_json(&read(name)).unwrap()
}

#[test]
fn torus() {
    let r = verify_bound_pipeline(&load("torus_single_crossing.json")).unwrap();
    assert!(r.passed);
    assert_eq!(
        (r.genus.g, r.genus.i, r.genus.r, r.cusp_sides),
        (1, 1, 1, 4)
    );
    assert!((r.bound - 4.0 * (1.0 + 2f64.sqrt()).ln()).abs() < 1e-14);
}

#[test]
fn genus_two_minimal() {
    let r = verify_bound_pipeline(&load("genus2_minimal.json")).unwrap();
    assert!(r.passed);
    assert_eq!((r.genus.g, r.genus.i, r.genus.r), (2, 4, 2));
    assert_eq!(r.face_sides, vec![12, 4]);
    assert_eq!(r.cusp_sides, 12);
    assert_eq!(r.case, SeparationCase::NonSeparating);
}

#[test]
fn genus_two_three_faces() {
    let r = verify_bound_pipeline(&load("genus2_three_faces.json")).unwrap();
    assert!(r.passed);
    assert_eq!(r.genus.r, 3);
    assert_eq!(r.spread_forest.edges.len(), 2);
    assert_eq!(r.polygons.len(), 1);
    assert_eq!(r.polygons[0].side_sum, 20);
    assert_eq!(r.cusp_sides, 12);
}

#[test]
fn genus_three_single_face() {
    let r = verify_bound_pipeline(&load("genus3_single_face.json")).unwrap();
    assert!(r.passed);
    assert_eq!((r.genus.g, r.genus.r), (3, 1));
    assert!(r.spread_forest.edges.is_empty());
    assert_eq!(r.cusp_sides, 20);
}

#[test]
fn both_curves_separating() {
    let r = verify_bound_pipeline(&load("genus2_both_separating.json")).unwrap();
    assert!(r.passed, "{:?}", r.identities);
    assert!(r.alpha_separating && r.beta_separating);
    assert_eq!(r.case, SeparationCase::BothSeparating);
    let mut sides: Vec<usize> = r.polygons.iter().map(|p| p.sides).collect();
    sides.sort();
    assert_eq!(sides, vec![8, 8]);
    let c = r.comparison.unwrap();
    assert_eq!((c.n1, c.n2, c.m), (8, 8, 12));
    assert!(c.holds);
}

#[test]
fn sphere_is_rejected() {
    let err = verify_bound_pipeline(&load("sphere_two_crossings.json")).unwrap_err();
    assert!(matches!(err, Error::Inconsistent(_)), "{err}");
}

#[test]
fn corrupted_involution_names_dart() {
    match CombinatorialMap::from_json(&read("corrupted_involution.json")) {
        Err(Error::InvalidMap { dart, .. }) => assert_eq!(dart, 0),
        other => panic!("expected an invalid map, got {other:?}"),
    }
}

#[test]
fn documents_round_trip() {
    for name in [
        "torus_single_crossing.json",
        "genus2_minimal.json",
        "genus2_three_faces.json",
        "genus3_single_face.json",
        "genus2_both_separating.json",
    ] {
        let m = load(name);
        let text = serde_json::to_string(&m.to_document()).unwrap();
        let back = CombinatorialMap::from_json(&text).unwrap();
        assert_eq!(back.to_document(), m.to_document(), "{name}");
    }
}
