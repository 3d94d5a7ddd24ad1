//! Integral homology of finite simplicial sets through Smith normal form.

use simplicial_hga::homlin::normalized_chain_complex;
use simplicial_hga::simplicial::{Product, SimplicialComplexSpace, StandardSimplex};

fn main() {
    let circle = SimplicialComplexSpace::from_facets(&[vec![0, 1], vec![1, 2], vec![0, 2]]);
    let sphere = SimplicialComplexSpace::from_facets(&[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]);
    let prism = Product::new(StandardSimplex::new(1), StandardSimplex::new(2));
    report("boundary of a triangle", &normalized_chain_complex(&circle, 1).unwrap());
    report("boundary of a tetrahedron", &normalized_chain_complex(&sphere, 2).unwrap());
    report("Δ¹ × Δ²", &normalized_chain_complex(&prism, 3).unwrap());
}

fn report(name: &str, complex: &simplicial_hga::homlin::FgComplex) {
    println!("{name}:");
    for n in complex.lo()..=complex.hi() {
        let h = complex.homology(n).unwrap();
        println!("  H_{n} = Z^{} torsion {:?}", h.free_rank, h.torsion);
    }
}
