//! Formality maps for Davis–Januszkiewicz spaces, built simplex by simplex
//! from the torus maps and checked for compatibility and vanishing.

use simplicial_hga::face_rings::{DJFormality, SimplicialPoset};

fn main() {
    let square = SimplicialPoset::from_facets(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap();
    let dj = DJFormality::new(square.clone());
    for sigma in square.maximal() {
        let f = dj.f_sigma(sigma, &[1, 1]);
        println!("σ = {}: f_σ(y_(1,1)) has {} simplices", square.id(sigma), f.len());
    }
    let compat = dj.check_compatibility(6);
    let vanish = dj.check_vanishing(4, 2, 3);
    println!("{} compatibility squares commute: {}", compat.len(), compat.iter().all(|c| c.passed()));
    println!("{} vanishing instances pass: {}", vanish.len(), vanish.iter().all(|c| c.passed()));
}
