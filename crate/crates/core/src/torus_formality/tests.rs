use super::*;
use crate::chains::{boundary, Chain};
use crate::lincomb::{Graded, LinComb};
use crate::ring::sign;
use crate::simplicial::{BundleSimplex, ClassifyingSimplex, SimplicialGroup, TorusGroup, TorusSimplex};
use crate::surjections::Surjection;

fn loop_(rank: usize, g: Vec<i64>) -> TorusSimplex {
    TorusSimplex::new(rank, vec![g])
}

fn surj(v: &[usize]) -> Surjection {
    Surjection::new(v.to_vec()).unwrap()
}

type Pair = LinComb<(u32, u32), i64>;

fn ext_coproduct(m: u32) -> Pair {
    ExteriorBialgebra::coproduct(m).into_iter().map(|(a, b, s)| ((a, b), s)).collect()
}

/// `(a ⊗ b)(c ⊗ d) = (-1)^{|b||c|} ac ⊗ bd`.
fn tensor_multiply(x: &Pair, y: &Pair) -> Pair {
    let mut out = Pair::zero();
    for ((a, b), s) in x {
        for ((c, d), t) in y {
            let (Some((ac, e1)), Some((bd, e2))) = (ExteriorBialgebra::product(*a, *c), ExteriorBialgebra::product(*b, *d)) else {
                continue;
            };
            let k = sign::<i64>((b.count_ones() * c.count_ones()) as i64);
            out.add_term((ac, bd), k * e1 * e2 * s * t);
        }
    }
    out
}

#[test]
fn exterior_bialgebra_axioms() {
    let lambda = ExteriorBialgebra::new(3);
    // x1 x2 = x_{12}, x2 x1 = -x_{12}, x1 x1 = 0
    assert_eq!(ExteriorBialgebra::product(1, 2), Some((3, 1)));
    assert_eq!(ExteriorBialgebra::product(2, 1), Some((3, -1)));
    assert_eq!(ExteriorBialgebra::product(1, 1), None);
    // Δ(x1 x2) = x1x2⊗1 + x1⊗x2 - x2⊗x1 + 1⊗x1x2
    let expected: Pair = [((3, 0), 1), ((1, 2), 1), ((2, 1), -1), ((0, 3), 1)].into_iter().collect();
    assert_eq!(ext_coproduct(3), expected);
    for a in lambda.all_basis() {
        for b in lambda.all_basis() {
            let lhs = match ExteriorBialgebra::product(a, b) {
                Some((m, s)) => ext_coproduct(m).scale(&s),
                None => Pair::zero(),
            };
            assert_eq!(lhs, tensor_multiply(&ext_coproduct(a), &ext_coproduct(b)), "Δ(ab), a={a} b={b}");
        }
        // counit and coassociativity
        let left: LinComb<u32, i64> = ExteriorBialgebra::coproduct(a)
            .into_iter()
            .map(|(x, y, s)| (y, s * ExteriorBialgebra::augmentation(x)))
            .collect();
        assert_eq!(left, LinComb::basis(a));
        let mut l = LinComb::<(u32, u32, u32), i64>::zero();
        let mut r = LinComb::<(u32, u32, u32), i64>::zero();
        for (x, y, s) in ExteriorBialgebra::coproduct(a) {
            for (x1, x2, t) in ExteriorBialgebra::coproduct(x) {
                l.add_term((x1, x2, y), s * t);
            }
            for (y1, y2, t) in ExteriorBialgebra::coproduct(y) {
                r.add_term((x, y1, y2), s * t);
            }
        }
        assert_eq!(l, r);
    }
}

#[test]
fn divided_coalgebra_axioms() {
    let s = DividedCoalgebra::new(2);
    assert_eq!(s.basis(4).len(), 3);
    assert!(s.basis(3).is_empty());
    // Δy_(1,1) = y0⊗y11 + y01⊗y10 + y10⊗y01 + y11⊗y0
    let d = DividedCoalgebra::diagonal(&[1, 1]);
    assert_eq!(d.len(), 4);
    for d in 0..=8 {
        for alpha in s.basis(d) {
            let diag = DividedCoalgebra::diagonal(&alpha);
            let swapped: std::collections::BTreeSet<_> = diag.iter().map(|(b, c)| (c.clone(), b.clone())).collect();
            let plain: std::collections::BTreeSet<_> = diag.iter().cloned().collect();
            assert_eq!(plain, swapped, "cocommutative");
            let counit: Vec<_> = diag.iter().filter(|(b, _)| DividedCoalgebra::counit(b) == 1).collect();
            assert_eq!(counit.len(), 1);
            assert_eq!(counit[0].1, alpha);
            assert_eq!(diag.len() as u32, alpha.iter().map(|a| a + 1).product::<u32>());
        }
    }
}

fn koszul_tensor_differential(k: &KoszulComplex, t: &LinComb<(KoszulBasis, KoszulBasis), i64>) -> LinComb<(KoszulBasis, KoszulBasis), i64> {
    let mut out = LinComb::zero();
    for ((a, b), s) in t {
        for (da, c) in &k.differential(a) {
            out.add_term((da.clone(), b.clone()), s * c);
        }
        let e = sign::<i64>(a.degree());
        for (db, c) in &k.differential(b) {
            out.add_term((a.clone(), db.clone()), e * s * c);
        }
    }
    out
}

#[test]
fn koszul_complex_structure() {
    for n in 1..=3 {
        let k = KoszulComplex::new(n);
        for d in 0..=8 {
            for b in k.basis(d) {
                assert_eq!(b.degree(), d as i64);
                assert!(k.differential_chain(&k.differential(&b)).is_zero(), "d² on {b}");
                let lhs = k.diagonal(&b).map_linear(|_| LinComb::zero()) + {
                    let mut t = LinComb::zero();
                    for (c, s) in &k.differential(&b) {
                        t.add_scaled(&k.diagonal(c), s);
                    }
                    t
                };
                assert_eq!(lhs, koszul_tensor_differential(&k, &k.diagonal(&b)), "coderivation on {b}");
                // K → 𝐒 kills boundaries and respects the diagonal
                assert!(k.differential(&b).keys().all(|c| k.to_coalgebra(c).is_none()));
                if let Some(alpha) = k.to_coalgebra(&b) {
                    let mut image = LinComb::<(Exponent, Exponent), i64>::zero();
                    for ((p, q), s) in &k.diagonal(&b) {
                        if let (Some(x), Some(y)) = (k.to_coalgebra(p), k.to_coalgebra(q)) {
                            image.add_term((x, y), *s);
                        }
                    }
                    let expected: LinComb<_, i64> = DividedCoalgebra::diagonal(&alpha).into_iter().map(|p| (p, 1)).collect();
                    assert_eq!(image, expected);
                }
            }
        }
    }
    // d(y_(2,1)) = x1 y_(1,1) + x2 y_(2,0)
    let k = KoszulComplex::new(2);
    let expected: KoszulChain = [(KoszulBasis::new(1, vec![1, 1]), 1), (KoszulBasis::new(2, vec![2, 0]), 1)].into_iter().collect();
    assert_eq!(k.differential(&KoszulBasis::coalgebra(vec![2, 1])), expected);
    // d(x1 y_(0,1)) = x2 x1 = -x1x2
    let expected: KoszulChain = [(KoszulBasis::new(3, vec![0, 0]), -1)].into_iter().collect();
    assert_eq!(k.differential(&KoszulBasis::new(1, vec![0, 1])), expected);
}

#[test]
fn koszul_complex_is_acyclic() {
    for n in 1..=3 {
        let h = KoszulComplex::new(n).homology(8).unwrap();
        assert_eq!(h[0].free_rank, 1);
        assert!(h[0].torsion.is_empty());
        assert!(h[1..].iter().all(|g| g.is_zero()), "rank {n}: {h:?}");
    }
}

#[test]
fn phi_examples() {
    let t = TorusFormality::new(2);
    let g = TorusGroup::new(2);
    assert_eq!(t.phi(0), Chain::basis(g.identity(0)));
    assert_eq!(t.phi(1), Chain::basis(TorusSimplex::unit_loop(2, 0)));
    // the two shuffles of [e1] and [e2]
    let expected: Chain<TorusSimplex, i64> = [
        (TorusSimplex::new(2, vec![vec![1, 0], vec![0, 1]]), 1),
        (TorusSimplex::new(2, vec![vec![0, 1], vec![1, 0]]), -1),
    ]
    .into_iter()
    .collect();
    assert_eq!(t.phi(3), expected);
    for n in 1..=2 {
        let t = TorusFormality::new(n);
        for a in ExteriorBialgebra::new(n).all_basis() {
            assert!(boundary(&g_of(n), &t.phi(a)).is_zero(), "dφ(x_{a})");
        }
    }
}

fn g_of(n: usize) -> TorusGroup {
    TorusGroup::new(n)
}

#[test]
fn f_low_degrees() {
    let t = TorusFormality::new(2);
    let g = TorusGroup::new(2);
    assert_eq!(t.big_f(&t.koszul().unit()), Chain::basis(t.bundle().basepoint()));
    // F(y_1) = S(c_1 · e_0) = S((e_1, 1)) = (1_2, e_1, 1_0)
    let y1 = BundleSimplex {
        comps: vec![g.identity(2), TorusSimplex::unit_loop(2, 0), g.identity(0)],
    };
    assert_eq!(t.big_f(&KoszulBasis::coalgebra(vec![1, 0])), Chain::basis(y1));
    assert_eq!(t.f(&[0, 0]), Chain::basis(t.bundle().base_vertex()));
    let b = ClassifyingSimplex {
        comps: vec![TorusSimplex::unit_loop(2, 0), g.identity(0)],
    };
    assert_eq!(t.f(&[1, 0]), Chain::basis(b));
}

#[test]
fn f_is_a_chain_map_and_coalgebra_map() {
    for n in 1..=2 {
        let t = TorusFormality::new(n);
        for d in 0..=6 {
            for k in t.koszul().basis(d) {
                let c = t.check_chain_map(&k);
                assert!(c.passed(), "{c:?}");
                let c = t.check_coalgebra(&k);
                assert!(c.passed(), "{c:?}");
                for a in ExteriorBialgebra::new(n).all_basis() {
                    if a.count_ones() as usize + d <= 6 {
                        let c = t.check_equivariance(a, &k);
                        assert!(c.passed(), "{c:?}");
                    }
                }
            }
            for alpha in t.koszul().coalgebra().basis(d) {
                assert!(boundary(&t.bundle().base, &t.f(&alpha)).is_zero());
                assert!(t.check_f_coalgebra(&alpha).passed());
                assert!(t.check_homology_surrogate(&alpha).passed());
            }
        }
    }
}

#[test]
fn vanishing_examples() {
    let t = TorusFormality::new(2);
    assert!(t.verify_vanishing(&surj(&[1, 2, 1]), &[1, 0]).unwrap().passed());
    assert!(t.verify_vanishing(&surj(&[2, 1, 2]), &[2, 0]).unwrap().passed());
    assert!(t
        .verify_vanishing_hat(&surj(&[1, 2, 1]), &KoszulBasis::coalgebra(vec![1, 1]))
        .unwrap()
        .passed());
    assert!(matches!(
        t.verify_vanishing(&surj(&[1, 2]), &[1, 0]),
        Err(crate::Error::NotStronglyBiased(_))
    ));
    assert!(matches!(
        t.verify_vanishing(&surj(&[1, 2, 1, 2]), &[1, 0]),
        Err(crate::Error::NotStronglyBiased(_))
    ));
    assert!(t.verify_vanishing_hat(&surj(&[2, 1, 2]), &t.koszul().unit()).is_err());
    // the cup product itself does not vanish on f
    let aw = crate::surjections::interval_cut::<_, i64>(&surj(&[1, 2]), &t.bundle().base, &t.f(&[1, 1]));
    assert!(!aw.is_zero());
}

#[test]
fn hat_vanishing_in_low_degrees() {
    let t = TorusFormality::new(2);
    let us: Vec<_> = TorusFormality::strongly_biased_surjections(2, 3)
        .into_iter()
        .filter(|u| u.classify().strongly_one_biased)
        .collect();
    assert!(!us.is_empty());
    for d in 0..=4 {
        for k in t.koszul().basis(d) {
            for u in &us {
                let c = t.verify_vanishing_hat(u, &k).unwrap();
                assert!(c.passed(), "{c:?}");
            }
        }
    }
}

#[test]
fn naturality_low_degrees() {
    let t1 = TorusFormality::new(1);
    let t2 = TorusFormality::new(2);
    let maps = [
        (CoordinateMap::inclusion(2, vec![0]).unwrap(), &t1, &t2),
        (CoordinateMap::inclusion(2, vec![1]).unwrap(), &t1, &t2),
        (CoordinateMap::projection(2, &[0]).unwrap(), &t2, &t1),
        (CoordinateMap::projection(2, &[1]).unwrap(), &t2, &t1),
    ];
    for (m, s, t) in maps {
        for d in (0..=4).step_by(2) {
            for alpha in s.koszul().coalgebra().basis(d) {
                let c = check_naturality(&m, s, t, &alpha).unwrap();
                assert!(c.passed(), "{c:?}");
            }
        }
    }
    assert_eq!(CoordinateMap::projection(2, &[1]).unwrap().on_coalgebra(&[1, 2]), None);
    assert_eq!(CoordinateMap::inclusion(2, vec![1]).unwrap().on_coalgebra(&[3]), Some(vec![0, 3]));
    assert!(CoordinateMap::new(2, 2, vec![Some(0), Some(0)]).is_err());
}

#[test]
fn rep_choice_validation() {
    assert!(RepChoice::new(1, vec![Chain::basis(loop_(1, vec![1]))]).is_ok());
    // [2] - [1] is homologous to [1]
    let c: Chain<TorusSimplex, i64> = [(loop_(1, vec![2]), 1), (loop_(1, vec![1]), -1)].into_iter().collect();
    let reps = RepChoice::new(1, vec![c]).unwrap();
    let t = TorusFormality::with_reps(reps);
    for d in 0..=4 {
        for k in t.koszul().basis(d) {
            assert!(t.check_chain_map(&k).passed());
        }
    }
    assert!(RepChoice::new(1, vec![Chain::basis(loop_(1, vec![2]))]).is_err());
    let two = TorusSimplex::new(1, vec![vec![1], vec![0]]);
    assert!(RepChoice::new(1, vec![Chain::basis(two)]).is_err());
    assert!(RepChoice::new(2, vec![Chain::basis(loop_(2, vec![1, 0]))]).is_err());
    assert!(!RepChoice::new(2, vec![Chain::basis(loop_(2, vec![1, 0])), Chain::basis(loop_(2, vec![1, 1])) - Chain::basis(loop_(2, vec![1, 0]))])
        .unwrap()
        .is_coordinatewise());
}

#[test]
fn cup_two_probe_runs() {
    let t = TorusFormality::new(1);
    let p = t.cup_two_probe(&[0]);
    assert!(p.vanishes && p.terms == 0);
    let p = t.cup_two_probe(&[2]);
    assert_eq!(p.alpha, vec![2]);
}
