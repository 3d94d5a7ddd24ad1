//! The shuffle map into a product of simplices and the Alexander–Whitney
//! diagonal, with the Eilenberg–Zilber composite `AW ∘ EZ = id`.

use simplicial_hga::chains::{boundary, shuffle_map, Chain};
use simplicial_hga::simplicial::{DeltaSimplex, Product, StandardSimplex};
use simplicial_hga::surjections::{aw_tilde, Surjection};

fn main() {
    let (d1, d2) = (StandardSimplex::new(1), StandardSimplex::new(2));
    let a: Chain<DeltaSimplex, i64> = Chain::basis(DeltaSimplex::new(vec![0, 1]));
    let b: Chain<DeltaSimplex, i64> = Chain::basis(DeltaSimplex::new(vec![0, 1, 2]));
    let ez = shuffle_map(&d1, &d2, &a, &b);
    println!("EZ([01] ⊗ [012]) has {} prisms:", ez.len());
    for (x, c) in &ez {
        println!("  {c:+} ({:?}, {:?})", x.0.vertices, x.1.vertices);
    }

    let prod = Product::new(d1, d2);
    let db = boundary(&prod, &ez);
    let expected = shuffle_map(&d1, &d2, &boundary(&d1, &a), &b) - shuffle_map(&d1, &d2, &a, &boundary(&d2, &b));
    println!("EZ is a chain map: {}", db == expected);

    let aw = aw_tilde(&Surjection::new(vec![1, 2]).unwrap(), &d1, &d2, &ez).unwrap();
    let identity = aw.len() == 1 && aw.coefficient(&(DeltaSimplex::new(vec![0, 1]), vec![DeltaSimplex::new(vec![0, 1, 2])])) == 1;
    println!("AW ∘ EZ = id on [01] ⊗ [012]: {identity}");
}
