use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::error::Error;
use crate::lincomb::LinComb;
use crate::ring::CoefficientRing;
use crate::simplicial::{ClassifyingSpace, ConstantCyclic, StandardSimplex, UniversalBundle};

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn check_smith(m: &IntMatrix) -> SmithForm {
    let f = smith_normal_form(m);
    assert_eq!(f.u.mul(m).mul(&f.v), f.d);
    for i in 0..f.d.rows() {
        for j in 0..f.d.cols() {
            if i != j {
                assert!(f.d[(i, j)].is_zero());
            }
        }
    }
    let diag = f.d.diagonal();
    for w in diag.windows(2) {
        assert!(!w[0].is_negative());
        if !w[0].is_zero() {
            assert!(w[1].is_multiple_of(&w[0]), "{diag:?}");
        } else {
            assert!(w[1].is_zero());
        }
    }
    assert!(f.u.determinant().abs().is_one());
    assert!(f.v.determinant().abs().is_one());
    f
}

#[test]
fn smith_examples() {
    let f = check_smith(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 0]]));
    assert_eq!(f.d.diagonal(), big(&[2, 0]));
    let f = check_smith(&IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]));
    assert_eq!(f.d.diagonal(), big(&[2, 4]));
    let f = check_smith(&IntMatrix::zeros(0, 0));
    assert!(f.d.diagonal().is_empty());
    let f = check_smith(&IntMatrix::zeros(0, 3));
    assert_eq!(f.v, IntMatrix::identity(3));
}

fn minors_gcd(m: &IntMatrix, k: usize) -> BigInt {
    fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
        crate::simplicial::subsets(n, k)
    }
    let mut g = BigInt::zero();
    for rows in choose(m.rows(), k) {
        for cols in choose(m.cols(), k) {
            let mut sub = IntMatrix::zeros(k, k);
            for (a, &i) in rows.iter().enumerate() {
                for (b, &j) in cols.iter().enumerate() {
                    sub[(a, b)] = m[(i, j)].clone();
                }
            }
            g = g.gcd(&sub.determinant());
        }
    }
    g
}

#[test]
fn invariant_factors_match_determinantal_divisors() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..200 {
        let r = rng.gen_range(1..=4);
        let c = rng.gen_range(1..=4);
        let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-6..=6)).collect()).collect();
        let m = IntMatrix::from_rows(&rows);
        let mut expected = Vec::new();
        let mut prev = BigInt::one();
        for k in 1..=r.min(c) {
            let dk = minors_gcd(&m, k);
            if dk.is_zero() {
                break;
            }
            expected.push(&dk / &prev);
            prev = dk;
        }
        assert_eq!(invariant_factors(&m), expected, "{rows:?}");
        assert_eq!(SparseMatrix::from_dense(&rows).invariant_factors(), expected);
        assert_eq!(SparseMatrix::from_dense(&rows).rank_rational(), expected.len());
    }
}

/// Rank mod p by dense elimination.
fn dense_rank_mod(rows: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(rank, piv);
        let inv = (1..p).find(|x| x * a[rank][c] % p == 1).unwrap();
        for i in 0..a.len() {
            if i != rank && a[i][c] != 0 {
                let f = a[i][c] * inv % p;
                for j in 0..cols {
                    a[i][j] = (a[i][j] - f * a[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn modular_ranks() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..200 {
        let r = rng.gen_range(1..=8);
        let c = rng.gen_range(1..=8);
        let rows: Vec<Vec<i64>> = (0..r)
            .map(|_| (0..c).map(|_| if rng.gen_bool(0.5) { 0 } else { rng.gen_range(-4..=4) }).collect())
            .collect();
        let m = SparseMatrix::from_dense(&rows);
        for p in [2u64, 3, 5, 7] {
            assert_eq!(m.rank_mod(p), dense_rank_mod(&rows, p as i64), "{rows:?} mod {p}");
        }
        // the rank over ℚ is the number of invariant factors, and never below a modular rank
        assert_eq!(m.rank_rational(), invariant_factors(&m.to_dense()).len());
        assert!(m.rank_rational() >= m.rank_mod(2));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]
    #[test]
    fn smith_large(seed in any::<u64>(), r in 30usize..=40, c in 30usize..=40) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-50..=50)).collect()).collect();
        let m = IntMatrix::from_rows(&rows);
        check_smith(&m);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn smith_small(rows in prop::collection::vec(prop::collection::vec(-9i64..=9, 5), 1..7)) {
        let m = IntMatrix::from_rows(&rows);
        let f = check_smith(&m);
        prop_assert_eq!(f.invariant_factors(), SparseMatrix::from_dense(&rows).invariant_factors());
    }
}

#[test]
fn homology_examples() {
    let c = FgComplex::bounded(0, vec![1], vec![]).unwrap();
    assert_eq!(c.homology(0).unwrap(), HomologyGroup { free_rank: 1, torsion: vec![] });
    let two = SparseMatrix::from_dense(&[vec![2]]);
    let c = FgComplex::bounded(0, vec![1, 1], vec![two]).unwrap();
    assert_eq!(c.homology(0).unwrap(), HomologyGroup { free_rank: 0, torsion: big(&[2]) });
    assert!(c.homology(1).unwrap().is_zero());
    assert_eq!(c.betti(0, CoefficientRing::Rationals).unwrap(), 0);
    assert_eq!(c.betti(0, CoefficientRing::IntegersMod { modulus: 2 }).unwrap(), 1);
    assert_eq!(c.betti(1, CoefficientRing::IntegersMod { modulus: 2 }).unwrap(), 1);
    assert!(matches!(c.betti(0, CoefficientRing::Integers), Err(Error::NotField(_))));

    let d2 = normalized_chain_complex(&StandardSimplex::new(2), 2).unwrap();
    assert_eq!(d2.homology(0).unwrap(), HomologyGroup { free_rank: 1, torsion: vec![] });
    assert!(d2.homology(1).unwrap().is_zero());
    assert!(d2.homology(2).unwrap().is_zero());
    assert!(FgComplex::bounded(0, vec![1, 1], vec![SparseMatrix::new(2, 1)]).is_err());
}

#[test]
fn projective_space_homology_and_window_edges() {
    // W̄(ℤ/2) has one nondegenerate simplex per degree: H_odd = ℤ/2 below the top
    let bundle = UniversalBundle::new(ConstantCyclic::new(2));
    let base: &ClassifyingSpace<ConstantCyclic> = &bundle.base;
    let c = normalized_chain_complex(base, 6).unwrap();
    assert_eq!(c.homology(1).unwrap().torsion, big(&[2]));
    assert!(c.homology(2).unwrap().is_zero());
    assert_eq!(c.homology(5).unwrap().torsion, big(&[2]));
    assert!(matches!(c.homology(6), Err(Error::WindowEdge(6))));
    assert!(matches!(c.homology(0), Err(Error::WindowEdge(0))));
    assert_eq!(c.betti(3, CoefficientRing::IntegersMod { modulus: 2 }).unwrap(), 1);
    assert_eq!(c.betti(3, CoefficientRing::Rationals).unwrap(), 0);
}

#[test]
fn rational_homology_is_integral_free_rank() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..40 {
        let (n0, n1, n2) = (rng.gen_range(1..6), rng.gen_range(1..7), rng.gen_range(1..6));
        let b: Vec<Vec<i64>> = (0..n0).map(|_| (0..n1).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        // columns of A in the kernel of B, taken from the Smith transform
        let f = smith_normal_form(&IntMatrix::from_rows(&b));
        let r = f.rank();
        let mut a = vec![vec![0i64; n2]; n1];
        for k in 0..n2 {
            for kc in r..n1 {
                let coeff: i64 = rng.gen_range(-2..=2);
                for row in 0..n1 {
                    let v: i64 = (&f.v[(row, kc)]).try_into().unwrap();
                    a[row][k] += coeff * v;
                }
            }
        }
        let c = FgComplex::bounded(
            0,
            vec![n0, n1, n2],
            vec![SparseMatrix::from_dense(&b), SparseMatrix::from_dense(&a)],
        )
        .unwrap();
        for n in 0..=2 {
            assert_eq!(c.betti(n, CoefficientRing::Rationals).unwrap(), c.homology(n).unwrap().free_rank);
        }
    }
}

fn poly(terms: &[(&[u32], i64)]) -> Polynomial {
    terms.iter().map(|(m, c)| (m.to_vec(), *c)).collect()
}

#[test]
fn hilbert_functions() {
    let q = CoefficientRing::Rationals;
    assert_eq!(hilbert_function(&[2], &[], 6, q).unwrap(), vec![1, 0, 1, 0, 1, 0, 1]);
    let h = hilbert_function(&[2, 2], &[poly(&[(&[1, 1], 1)])], 8, q).unwrap();
    // monomial count: t1^a and t2^b alone survive
    let oracle: Vec<usize> = (0..=8)
        .map(|d| {
            monomials_of_degree(&[2, 2], d)
                .into_iter()
                .filter(|m| m[0] == 0 || m[1] == 0)
                .count()
        })
        .collect();
    assert_eq!(h, oracle);
    assert_eq!(h, vec![1, 0, 2, 0, 2, 0, 2, 0, 2]);
    assert_eq!(hilbert_function(&[2], &[poly(&[(&[0], 1)])], 4, q).unwrap(), vec![0; 5]);
    assert!(matches!(
        hilbert_function(&[2], &[], 4, CoefficientRing::Integers),
        Err(Error::NotField(_))
    ));
    assert!(hilbert_function(&[1, 1], &[poly(&[(&[1, 0], 1), (&[2, 0], 1)])], 3, q).is_err());
    // a non-monomial relation: k[x, y]/(x² - y²) has dimensions 1, 2, 2, 2, ...
    let h = hilbert_function(&[1, 1], &[poly(&[(&[2, 0], 1), (&[0, 2], -1)])], 5, q).unwrap();
    assert_eq!(h, vec![1, 2, 2, 2, 2, 2]);
    let v: Vec<LinComb<u8, i64>> = vec![LinComb::from_term(0, 2), LinComb::from_term(0, 4)];
    assert_eq!(rank_of_vectors(&v, CoefficientRing::IntegersMod { modulus: 2 }).unwrap(), 0);
    assert_eq!(rank_of_vectors(&v, q).unwrap(), 1);
}
