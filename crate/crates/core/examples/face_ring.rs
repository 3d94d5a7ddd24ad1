//! Face rings of simplicial posets: Hilbert functions, relation checks, and
//! the loop-space cohomology ranks Tor and HH.

use simplicial_hga::face_rings::{hh_free_loops, tor_loops, FaceRing, PosetSpec};
use simplicial_hga::CoefficientRing;

fn main() {
    let square = PosetSpec::from_json(r#"{"vertices": [1, 2, 3, 4], "facets": [[1, 2], [2, 3], [3, 4], [4, 1]]}"#).unwrap();
    let ring = FaceRing::new(square.build().unwrap());
    println!("square boundary, dims by polynomial degree: {:?}", ring.hilbert(6));
    let relations = ring.check_relations();
    println!("{} relation instances, all hold: {}", relations.len(), relations.iter().all(|c| c.passed()));

    let digon = PosetSpec::from_json(
        r#"{"vertices": [1, 2], "elements": [
            {"id": "a", "rank": 1, "vertices": [1]},
            {"id": "b", "rank": 1, "vertices": [2]},
            {"id": "A", "rank": 2, "covers": ["a", "b"]},
            {"id": "B", "rank": 2, "covers": ["a", "b"]}]}"#,
    )
    .unwrap();
    println!("digon (not a complex) dims: {:?}", FaceRing::new(digon.build().unwrap()).hilbert(4));

    let two_points = FaceRing::new(PosetSpec::from_json(r#"{"vertices": [1, 2], "facets": [[1], [2]]}"#).unwrap().build().unwrap());
    let tor = tor_loops(&two_points, 6, CoefficientRing::Rationals).unwrap();
    println!("two points, Tor totals by homological degree: {:?}", tor.totals(3));

    let vertex = FaceRing::new(PosetSpec::from_json(r#"{"vertices": [1], "facets": [[1]]}"#).unwrap().build().unwrap());
    let hh = hh_free_loops(&vertex, 6, CoefficientRing::Rationals).unwrap();
    for ((n, q), r) in &hh.ranks {
        println!("HH_{n} of the polynomial ring, internal degree {q}: rank {r}");
    }
}
