//! Seeded random generators for simplices, chains and cochains.

use rand::Rng;

use crate::lincomb::LinComb;
use crate::simplicial::{MonotoneMap, TorusSimplex};

/// A random `dim`-simplex of the nerve of `ℤ^rank`, with zero entries
/// (degenerate directions) occurring now and then.
pub fn torus_simplex<G: Rng>(rng: &mut G, rank: usize, dim: usize) -> TorusSimplex {
    let entries = (0..dim)
        .map(|_| {
            if rng.gen_bool(0.2) {
                vec![0; rank]
            } else {
                (0..rank).map(|_| rng.gen_range(-2..=2)).collect()
            }
        })
        .collect();
    TorusSimplex::new(rank, entries)
}

pub fn monotone<G: Rng>(rng: &mut G, m: usize, n: usize) -> MonotoneMap {
    let mut v: Vec<usize> = (0..=m).map(|_| rng.gen_range(0..=n)).collect();
    v.sort_unstable();
    MonotoneMap::new(v, n).expect("sorted values in range")
}

/// A random integer combination of up to `terms` entries of `basis`.
pub fn combination<K: Ord + Clone, G: Rng>(rng: &mut G, basis: &[K], terms: usize) -> LinComb<K, i64> {
    let mut c = LinComb::zero();
    if basis.is_empty() {
        return c;
    }
    for _ in 0..terms {
        let k = basis[rng.gen_range(0..basis.len())].clone();
        let mut a = rng.gen_range(-3..=3);
        if a == 0 {
            a = 1;
        }
        c.add_term(k, a);
    }
    c
}
