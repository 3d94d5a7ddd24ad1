//! The homotopy Gerstenhaber structure on cochains of a simplicial set and
//! the induced product on its bar construction.

use simplicial_hga::bar_hga::Hga;
use simplicial_hga::simplicial::StandardSimplex;
use simplicial_hga::suites::hga_suite;

fn main() {
    let hga = Hga::cochains_of_finite(&StandardSimplex::new(2), 2).unwrap();
    println!("C*(Δ²) presented with {} generators", hga.base().ranks().iter().sum::<usize>());
    for c in hga_suite(50, 1).unwrap() {
        println!("{:<50} {:<30} {}", c.identity, c.window, if c.passed() { "pass" } else { "FAIL" });
    }
}
