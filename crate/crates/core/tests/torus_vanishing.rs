use simplicial_hga::chains::{cochain_from_fn, Cochain};
use simplicial_hga::simplicial::{ClassifyingSimplex, TorusSimplex};
use simplicial_hga::surjections::{e_k, e_tilde_k, Surjection};
use simplicial_hga::torus_formality::{check_naturality, CoordinateMap, ExteriorBialgebra, TorusFormality};

#[test]
fn aw_u_f_vanishes_for_strongly_biased_u() {
    for n in 1..=2 {
        let t = TorusFormality::new(n);
        let certs = t.vanishing_suite(3, 3, 6);
        let alphas: usize = (1..=3).map(|m| t.koszul().coalgebra().basis(2 * m).len()).sum();
        assert_eq!(certs.len(), alphas * brute_force_strongly_biased_count(3, 3));
        let failed: Vec<_> = certs.iter().filter(|c| !c.passed()).collect();
        assert!(failed.is_empty(), "{failed:?}");
    }
}

/// Sequences over `1..=l` of length `k + l` that hit every value, have no
/// equal neighbours, and repeat exactly one value.
fn brute_force_strongly_biased_count(max_k: usize, max_l: usize) -> usize {
    let mut count = 0;
    for l in 2..=max_l {
        for k in 1..=max_k {
            let len = k + l;
            for code in 0..l.pow(len as u32) {
                let seq: Vec<usize> = (0..len).map(|i| code / l.pow(i as u32) % l).collect();
                let mut mult = vec![0; l];
                seq.iter().for_each(|&v| mult[v] += 1);
                let ok = mult.iter().all(|&m| m > 0)
                    && seq.windows(2).all(|w| w[0] != w[1])
                    && mult.iter().filter(|&&m| m > 1).count() == 1;
                count += usize::from(ok);
            }
        }
    }
    count
}

#[test]
fn strongly_biased_surjections_in_range() {
    assert_eq!(TorusFormality::strongly_biased_surjections(3, 3).len(), brute_force_strongly_biased_count(3, 3));
    let us = TorusFormality::strongly_biased_surjections(3, 3);
    assert!(us.iter().all(|u| u.classify().strongly_biased && u.degree() >= 1 && u.arity() <= 3));
    assert!(us.contains(&Surjection::new(vec![1, 2, 1]).unwrap()));
    assert!(us.contains(&Surjection::new(vec![2, 1, 3, 1]).unwrap()));
    assert!(!us.contains(&Surjection::new(vec![1, 2, 1, 2]).unwrap()));
}

type BaseCochain = Cochain<ClassifyingSimplex<TorusSimplex>, i64>;

/// A cochain on `BT` with pseudo-random integer values.
fn scrambled(degree: usize, seed: i64) -> BaseCochain {
    cochain_from_fn(degree, move |x: &ClassifyingSimplex<TorusSimplex>| {
        let mut h = seed;
        for s in &x.comps {
            for g in &s.entries {
                for c in g {
                    h = (h * 31 + c + 7).rem_euclid(1_000_003);
                }
            }
            h = (h * 17 + 3).rem_euclid(1_000_003);
        }
        h % 5 - 2
    })
}

#[test]
fn transpose_of_f_kills_e_k_and_e_tilde_k() {
    let t = TorusFormality::new(2);
    let base = t.bundle().base.clone();
    for k in 1..=2 {
        for d in (2..=6).step_by(2) {
            for alpha in t.koszul().coalgebra().basis(d) {
                // degrees of the inputs must add up to |y_α| + k
                for first in 0..=d + k {
                    let rest_total = d + k - first;
                    let mut splits = vec![vec![]];
                    for _ in 0..k {
                        splits = splits
                            .into_iter()
                            .flat_map(|s: Vec<usize>| (0..=rest_total).map(move |x| [s.clone(), vec![x]].concat()))
                            .collect();
                    }
                    for split in splits.into_iter().filter(|s| s.iter().sum::<usize>() == rest_total) {
                        let a = scrambled(first, 11);
                        let bs: Vec<BaseCochain> = split.iter().enumerate().map(|(i, &e)| scrambled(e, 100 + i as i64)).collect();
                        let refs: Vec<&BaseCochain> = bs.iter().collect();
                        assert_eq!(t.f_pair(&e_k(&base, &a, &refs).unwrap(), &alpha), 0);
                        assert_eq!(t.f_pair(&e_tilde_k(&base, &refs, &a).unwrap(), &alpha), 0);
                    }
                }
            }
        }
    }
}

#[test]
fn naturality_through_degree_six() {
    let t1 = TorusFormality::new(1);
    let t2 = TorusFormality::new(2);
    for j in 0..2 {
        let inc = CoordinateMap::inclusion(2, vec![j]).unwrap();
        let proj = CoordinateMap::projection(2, &[j]).unwrap();
        for d in (0..=6).step_by(2) {
            for alpha in t1.koszul().coalgebra().basis(d) {
                assert!(check_naturality(&inc, &t1, &t2, &alpha).unwrap().passed());
            }
            for alpha in t2.koszul().coalgebra().basis(d) {
                assert!(check_naturality(&proj, &t2, &t1, &alpha).unwrap().passed());
            }
        }
    }
}

#[test]
fn big_f_is_equivariant_for_every_exterior_monomial() {
    for n in 1..=3 {
        let t = TorusFormality::new(n);
        for d in 0..=6 {
            for k in t.koszul().basis(d) {
                for a in ExteriorBialgebra::new(n).all_basis() {
                    let c = t.check_equivariance(a, &k);
                    assert!(c.passed(), "{c:?}");
                }
            }
        }
    }
}
