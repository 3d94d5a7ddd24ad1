//! The formality map from the polynomial coalgebra into chains on the
//! classifying space of a torus, with its chain-map, coalgebra and
//! vanishing checks.

use simplicial_hga::suites::one_biased;
use simplicial_hga::torus_formality::{exponents, TorusFormality};

fn main() {
    for rank in 1..=2 {
        let tf = TorusFormality::new(rank);
        for d in 1..=2 {
            for alpha in exponents(rank, d) {
                let f = tf.f(&alpha);
                println!("rank {rank}, α = {alpha:?}: f(y_α) has {} simplices", f.len());
                let coalgebra = tf.check_f_coalgebra(&alpha);
                let mut vanishing = 0;
                for u in one_biased(2, 2).into_iter().filter(|u| u.classify().strongly_biased) {
                    assert!(tf.verify_vanishing(&u, &alpha).unwrap().passed());
                    vanishing += 1;
                }
                println!("  coalgebra map: {}, vanishing under {vanishing} strongly biased cuts", coalgebra.passed());
            }
        }
    }
}
