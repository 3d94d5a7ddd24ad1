//! Interval cut operations on the standard 2-simplex and the operad identity
//! `d AW_u - (-1)^{deg u} AW_u d = AW_{du}` for a few surjections.

use simplicial_hga::chains::{boundary, tensor_boundary, Chain, Tensor};
use simplicial_hga::ring::sign;
use simplicial_hga::simplicial::{DeltaSimplex, StandardSimplex};
use simplicial_hga::surjections::{interval_cut, Surjection};

fn main() {
    let d2 = StandardSimplex::new(2);
    let top: Chain<DeltaSimplex, i64> = Chain::basis(DeltaSimplex::new(vec![0, 1, 2]));
    for values in [vec![1, 2], vec![2, 1], vec![1, 2, 1], vec![1, 2, 1, 2]] {
        let u = Surjection::new(values).unwrap();
        let cut = interval_cut(&u, &d2, &top);
        println!("AW_{u} [012] =");
        for (factors, c) in &cut {
            let parts: Vec<String> = factors.iter().map(|x| format!("{:?}", x.vertices)).collect();
            println!("  {c:+} {}", parts.join(" ⊗ "));
        }

        let lhs: Tensor<DeltaSimplex, i64> = tensor_boundary(&d2, &cut)
            - interval_cut(&u, &d2, &boundary(&d2, &top)).scale(&sign::<i64>(u.degree() as i64));
        let mut rhs = Tensor::zero();
        for (v, c) in &u.differential() {
            rhs += &interval_cut(v, &d2, &top).scale(c);
        }
        println!("  operad identity holds: {}", lhs == rhs);
    }
}
