use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::lincomb::Graded;
use crate::sample;
use crate::simplicial::{
    bar_circle, torus, ConstantCyclic, DeltaSimplex, FiniteSimplicialSet, Product, SimplicialComplexSpace,
    StandardSimplex, TorusSimplex,
};

fn v(xs: &[usize]) -> DeltaSimplex {
    DeltaSimplex::new(xs.to_vec())
}

fn basis<S: Cell>(x: S) -> Chain<S, i64> {
    Chain::basis(x)
}

fn random_delta_chain(rng: &mut ChaCha8Rng, n: usize, dim: usize) -> Chain<DeltaSimplex, i64> {
    let nd = StandardSimplex::new(n).nondegenerate(dim);
    sample::combination(rng, &nd, 4)
}

fn random_torus_chain(rng: &mut ChaCha8Rng, rank: usize, dim: usize) -> Chain<TorusSimplex, i64> {
    let t = torus(rank);
    let mut c = Chain::zero();
    for _ in 0..3 {
        let x = sample::torus_simplex(rng, rank, dim);
        if !t.is_degenerate(&x) {
            c.add_term(x, rng.gen_range(1..=3));
        }
    }
    c
}

#[test]
fn boundary_of_two_simplex() {
    let d = StandardSimplex::new(2);
    let expected: Chain<DeltaSimplex, i64> = [(v(&[1, 2]), 1), (v(&[0, 2]), -1), (v(&[0, 1]), 1)].into_iter().collect();
    assert_eq!(boundary(&d, &basis(v(&[0, 1, 2]))), expected);
    assert!(boundary(&d, &basis(v(&[1]))).is_zero());
}

#[test]
fn boundary_squares_to_zero() {
    let d = StandardSimplex::new(5);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for dim in 0..=5 {
        for _ in 0..20 {
            let c = random_delta_chain(&mut rng, 5, dim);
            assert!(boundary(&d, &boundary(&d, &c)).is_zero());
        }
    }
    let t = torus(2);
    for dim in 0..5 {
        for _ in 0..20 {
            let c = random_torus_chain(&mut rng, 2, dim);
            assert!(boundary(&t, &boundary(&t, &c)).is_zero());
        }
    }
}

#[test]
fn shuffle_of_two_edges() {
    let d1 = StandardSimplex::new(1);
    let x = v(&[0, 1]);
    let nabla = shuffle_map(&d1, &d1, &basis(x.clone()), &basis(x.clone()));
    // The (1,1)-shuffle raising λ first is even, the other one odd.
    let expected: Chain<_, i64> = [
        (ProdSimplex(v(&[0, 1, 1]), v(&[0, 0, 1])), 1),
        (ProdSimplex(v(&[0, 0, 1]), v(&[0, 1, 1])), -1),
    ]
    .into_iter()
    .collect();
    assert_eq!(nabla, expected);
    assert_eq!(shuffles(2, 3).len(), 10);
    assert_eq!(shuffles(0, 4).len(), 1);
}

#[test]
fn shuffle_with_vertex_is_inclusion() {
    let d3 = StandardSimplex::new(3);
    let y = v(&[0, 2, 3]);
    let nabla = shuffle_map(&d3, &d3, &basis(v(&[1])), &basis(y.clone()));
    assert_eq!(nabla, basis(ProdSimplex(v(&[1, 1, 1]), y)));
}

#[test]
fn shuffle_is_chain_map() {
    let d3 = StandardSimplex::new(3);
    let prod = Product::new(d3, d3);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for p in 0..=3 {
        for q in 0..=3 {
            let x = random_delta_chain(&mut rng, 3, p);
            let y = random_delta_chain(&mut rng, 3, q);
            let lhs = boundary(&prod, &shuffle_map(&d3, &d3, &x, &y));
            let mut rhs = shuffle_map(&d3, &d3, &boundary(&d3, &x), &y);
            let s: i64 = sign(p as i64);
            rhs.add_scaled(&shuffle_map(&d3, &d3, &x, &boundary(&d3, &y)), &s);
            assert_eq!(lhs, rhs, "p={p} q={q}");
        }
    }
}

#[test]
fn shuffle_symmetry() {
    let d3 = StandardSimplex::new(3);
    let t2 = torus(2);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for p in 0..=3 {
        for q in 0..=3 {
            let x = random_delta_chain(&mut rng, 3, p);
            let y = random_torus_chain(&mut rng, 2, q);
            let swapped = shuffle_map(&d3, &t2, &x, &y).map_keys(|z| Some((ProdSimplex(z.1.clone(), z.0.clone()), 1)));
            let other = shuffle_map(&t2, &d3, &y, &x).scale(&sign((p * q) as i64));
            assert_eq!(swapped, other);
        }
    }
}

#[test]
fn shuffle_is_coalgebra_map() {
    let d3 = StandardSimplex::new(3);
    let d2 = StandardSimplex::new(2);
    let prod = Product::new(d3, d2);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for p in 0..=3 {
        for q in 0..=2 {
            if p + q > 5 {
                continue;
            }
            let x = random_delta_chain(&mut rng, 3, p);
            let y = random_delta_chain(&mut rng, 2, q);
            let lhs = aw_diagonal(&prod, &shuffle_map(&d3, &d2, &x, &y));
            let mut rhs = Tensor::zero();
            for (xs, a) in &aw_diagonal(&d3, &x) {
                for (ys, b) in &aw_diagonal(&d2, &y) {
                    let s: i64 = sign((xs[1].dim() * ys[0].dim()) as i64);
                    let front = shuffle_map(&d3, &d2, &basis(xs[0].clone()), &basis(ys[0].clone()));
                    let back = shuffle_map(&d3, &d2, &basis(xs[1].clone()), &basis(ys[1].clone()));
                    for (f, c) in &front {
                        for (g, e) in &back {
                            rhs.add_term(vec![f.clone(), g.clone()], s * a * b * c * e);
                        }
                    }
                }
            }
            assert_eq!(lhs, rhs, "p={p} q={q}");
        }
    }
}

#[test]
fn alexander_whitney_examples() {
    let d2 = StandardSimplex::new(2);
    let expected: Tensor<DeltaSimplex, i64> = [
        (vec![v(&[0]), v(&[0, 1, 2])], 1),
        (vec![v(&[0, 1]), v(&[1, 2])], 1),
        (vec![v(&[0, 1, 2]), v(&[2])], 1),
    ]
    .into_iter()
    .collect();
    assert_eq!(aw_diagonal(&d2, &basis(v(&[0, 1, 2]))), expected);
    assert_eq!(aw_diagonal(&d2, &basis(v(&[2]))), Tensor::basis(vec![v(&[2]), v(&[2])]));
}

fn split_factor(t: &Tensor<DeltaSimplex, i64>, i: usize, space: &StandardSimplex) -> Tensor<DeltaSimplex, i64> {
    t.map_linear(|f| {
        aw_diagonal(space, &basis(f[i].clone())).map_keys(|parts| {
            let mut g = f[..i].to_vec();
            g.extend(parts.iter().cloned());
            g.extend(f[i + 1..].iter().cloned());
            Some((g, 1))
        })
    })
}

#[test]
fn alexander_whitney_is_coassociative_and_a_chain_map() {
    let d4 = StandardSimplex::new(4);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for dim in 0..=4 {
        let c = random_delta_chain(&mut rng, 4, dim);
        let delta = aw_diagonal(&d4, &c);
        assert_eq!(split_factor(&delta, 0, &d4), split_factor(&delta, 1, &d4));
        assert_eq!(tensor_boundary(&d4, &delta), aw_diagonal(&d4, &boundary(&d4, &c)));
        // counit on either side
        let left: Chain<_, i64> = delta
            .iter()
            .filter(|(f, _)| f[0].dim() == 0)
            .map(|(f, a)| (f[1].clone(), *a))
            .collect();
        assert_eq!(left, c);
    }
}

#[test]
fn transposition_and_suspension_signs() {
    let e = |degree, label| BasisElem { degree, label };
    let t = transposition::<BasisElem, BasisElem, i64>();
    let pair = (e(3, 0), e(5, 1));
    assert_eq!(t.on_basis(&pair), LinComb::from_term((e(5, 1), e(3, 0)), -1));
    assert_eq!(t.on_basis(&(e(2, 0), e(5, 1))), LinComb::from_term((e(5, 1), e(2, 0)), 1));

    type Sh = Shifted<BasisElem>;
    let s = GradedMap::<Sh, Sh, i64>::suspension();
    let ss = s.tensor(&s);
    let tt = transposition::<Sh, Sh, i64>();
    let lhs = ss.compose(&tt);
    let rhs = tt.compose(&ss);
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..100 {
        let a = Shifted { shift: rng.gen_range(-2..3), inner: e(rng.gen_range(-3..4), 0) };
        let b = Shifted { shift: rng.gen_range(-2..3), inner: e(rng.gen_range(-3..4), 1) };
        let x = (a, b);
        assert_eq!(lhs.on_basis(&x), -rhs.on_basis(&x));
    }
}

#[test]
fn suspension_anticommutes_with_differential() {
    // d on a two-term complex: d(e_1) = 2 e_0.
    type Sh = Shifted<BasisElem>;
    let d = GradedMap::<BasisElem, BasisElem, i64>::new("d", -1, |x: &BasisElem| {
        if x.degree == 1 {
            LinComb::from_term(BasisElem { degree: 0, label: x.label }, 2)
        } else {
            LinComb::zero()
        }
    });
    let d_sh = GradedMap::<Sh, Sh, i64>::shifted_differential(&d);
    let s = GradedMap::<Sh, Sh, i64>::suspension();
    for shift in -2..3 {
        let a = Shifted { shift, inner: BasisElem { degree: 1, label: 7 } };
        assert_eq!(d_sh.on_basis(&s.on_basis(&a).keys().next().unwrap().clone()), -s.apply(&d_sh.on_basis(&a)));
    }
}

/// A degree-`deg` map between free modules on `n` generators given by a matrix.
fn matrix_map(name: &str, src: i64, deg: i64, m: Vec<Vec<i64>>) -> GradedMap<BasisElem, BasisElem, i64> {
    GradedMap::new(name, deg, move |x: &BasisElem| {
        if x.degree != src {
            return LinComb::zero();
        }
        m[x.label as usize]
            .iter()
            .enumerate()
            .map(|(j, a)| (BasisElem { degree: src + deg, label: j as u32 }, *a))
            .collect()
    })
}

fn elems(degree: i64, n: u32) -> Vec<BasisElem> {
    (0..n).map(|label| BasisElem { degree, label }).collect()
}

#[test]
fn transpose_of_composite_and_inverse() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let rand_matrix = |rng: &mut ChaCha8Rng| -> Vec<Vec<i64>> {
        (0..3).map(|_| (0..3).map(|_| rng.gen_range(-3..4)).collect()).collect()
    };
    for _ in 0..20 {
        // g: degree 1 -> 2, f: degree 2 -> 5
        let g = matrix_map("g", 1, 1, rand_matrix(&mut rng));
        let f = matrix_map("f", 2, 3, rand_matrix(&mut rng));
        let fg = f.compose(&g);
        let gamma = Functional::new(5, sample::combination(&mut rng, &elems(5, 3), 3));
        let lhs = transpose(&fg, &gamma, &elems(1, 3));
        let tf = transpose(&f, &gamma, &elems(2, 3));
        let rhs = transpose(&g, &tf, &elems(1, 3));
        let s: i64 = sign(f.degree() * g.degree());
        assert_eq!(lhs.values, rhs.values.scale(&s));
    }
    // f of degree 1 with inverse f⁻¹ of degree -1 (a unimodular matrix).
    let m = vec![vec![1, 2, 0], vec![0, 1, 3], vec![0, 0, 1]];
    let minv = vec![vec![1, -2, 6], vec![0, 1, -3], vec![0, 0, 1]];
    let f = matrix_map("f", 4, 1, m);
    let finv = matrix_map("f⁻¹", 5, -1, minv);
    for label in 0..3 {
        let alpha = Functional::new(4, LinComb::basis(BasisElem { degree: 4, label }));
        let beta = transpose(&finv, &alpha, &elems(5, 3));
        // ᵗf ∘ ᵗ(f⁻¹) = (-1)^{|f|}, i.e. ᵗ(f⁻¹) = (-1)^{|f|} (ᵗf)⁻¹
        assert_eq!(transpose(&f, &beta, &elems(4, 3)).values, alpha.values.scale(&-1));
    }
}

#[test]
fn tensor_of_functionals_matches_transpose_convention() {
    let e = |degree, label| BasisElem { degree, label };
    let b = Functional::<BasisElem, i64>::new(1, LinComb::basis(e(1, 0)));
    let c = Functional::new(3, LinComb::basis(e(3, 0)));
    let bc = b.tensor(&c);
    assert_eq!(bc.values.coefficient(&(e(1, 0), e(3, 0))), -1);
    assert_eq!(b.degree + c.degree, bc.degree);
    assert_eq!(bc.values.keys().next().unwrap().degree(), 4);
}

#[test]
fn unit_and_trivial_actions() {
    let t2 = torus(2);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for dim in 0..4 {
        let c = random_torus_chain(&mut rng, 2, dim);
        let unit = basis(TorusSimplex::new(2, vec![]));
        assert_eq!(pontryagin_product(&t2, &unit, &c), c);
        assert_eq!(pontryagin_product(&t2, &c, &unit), c);
    }
    let z3 = ConstantCyclic::new(3);
    let bundle = UniversalBundle::new(z3);
    let base = &bundle.base;
    let a: Chain<_, i64> = [(z3.element(0, 1), 2), (z3.element(0, 2), -5)].into_iter().collect();
    for dim in 0..4 {
        let c = sample::combination(&mut rng, &base.nondegenerate(dim), 3);
        assert_eq!(group_action(&z3, base, &a, &c), c.scale(&augmentation(&a)));
    }
}

#[test]
fn action_satisfies_leibniz() {
    let t2 = torus(2);
    let d2 = StandardSimplex::new(2);
    let space = Product::new(t2.clone(), d2);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for p in 0..3 {
        for q in 0..3 {
            let a = random_torus_chain(&mut rng, 2, p);
            let mut c = Chain::zero();
            for y in d2.all_simplices(q) {
                let x = sample::torus_simplex(&mut rng, 2, q);
                let z = ProdSimplex(x, y);
                if !space.is_degenerate(&z) {
                    c.add_term(z, rng.gen_range(-2..3));
                }
            }
            let lhs = boundary(&space, &group_action(&t2, &space, &a, &c));
            let mut rhs = group_action(&t2, &space, &boundary(&t2, &a), &c);
            rhs.add_scaled(&group_action(&t2, &space, &a, &boundary(&space, &c)), &sign(p as i64));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn chains_on_circle_are_graded_commutative() {
    let bz = bar_circle();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for p in 0..=3 {
        for q in 0..=3 {
            let a = random_torus_chain(&mut rng, 1, p);
            let b = random_torus_chain(&mut rng, 1, q);
            let ab = pontryagin_product(&bz, &a, &b);
            let ba = pontryagin_product(&bz, &b, &a);
            assert_eq!(ab, ba.scale(&sign((p * q) as i64)));
            // associativity
            let c = random_torus_chain(&mut rng, 1, 1);
            assert_eq!(
                pontryagin_product(&bz, &ab, &c),
                pontryagin_product(&bz, &a, &pontryagin_product(&bz, &b, &c))
            );
        }
    }
}

#[test]
fn extra_degeneracy_is_a_contraction() {
    let bundle = UniversalBundle::new(ConstantCyclic::new(2));
    let e0 = bundle.basepoint();
    for dim in 0..4 {
        for x in bundle.total.nondegenerate(dim) {
            let c: Chain<_, i64> = basis(x);
            let mut h = boundary(&bundle.total, &extra_degeneracy(&bundle, &c));
            h += &extra_degeneracy(&bundle, &boundary(&bundle.total, &c));
            let mut expected = c.clone();
            if dim == 0 {
                expected.add_term(e0.clone(), -augmentation(&c));
            }
            assert_eq!(h, expected);
        }
    }
}

#[test]
fn projection_is_a_chain_map() {
    let bundle = UniversalBundle::new(ConstantCyclic::new(3));
    for dim in 1..4 {
        for x in bundle.total.nondegenerate(dim) {
            let c: Chain<_, i64> = basis(x);
            assert_eq!(
                project_chain(&bundle, &boundary(&bundle.total, &c)),
                boundary(&bundle.base, &project_chain(&bundle, &c))
            );
        }
    }
}

#[test]
fn coboundary_and_cup_product() {
    let sphere = SimplicialComplexSpace::sphere_boundary(3);
    let d3 = StandardSimplex::new(3);
    // d(0*) evaluated on edges from 0 is -(-1)^0 0*(d(0j)) = -(-1) = 1
    let zero = Cochain::<DeltaSimplex, i64>::dual_basis(v(&[0]));
    let dz = coboundary(&d3, &zero);
    assert_eq!(dz.on_simplex(&v(&[0, 1])), 1);
    assert_eq!(dz.on_simplex(&v(&[1, 2])), 0);
    assert!(coboundary(&d3, &dz).tabulate(&d3).iter().all(|(_, a)| *a == 0));

    let a = Cochain::<DeltaSimplex, i64>::dual_basis(v(&[0, 1]));
    let b = Cochain::dual_basis(v(&[1, 2]));
    let ab = cup_product(&sphere, &a, &b);
    // (α ⊗ β)(x ⊗ y) = (-1)^{|β||x|} α(x) β(y)
    assert_eq!(ab.on_simplex(&v(&[0, 1, 2])), -1);
    assert_eq!(ab.on_simplex(&v(&[0, 1, 3])), 0);

    // Leibniz: d(a ∪ b) = da ∪ b + (-1)^{|a|} a ∪ db
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for p in 0..=2 {
        for q in 0..=(3 - p) {
            let a = Cochain::from_values(p, sample::combination(&mut rng, &d3.nondegenerate(p), 3));
            let b = Cochain::from_values(q, sample::combination(&mut rng, &d3.nondegenerate(q), 3));
            let lhs = coboundary(&d3, &cup_product(&d3, &a, &b));
            let rhs = cup_product(&d3, &coboundary(&d3, &a), &b)
                .add(&cup_product(&d3, &a, &coboundary(&d3, &b)).scale(sign(p as i64)));
            assert_eq!(lhs.tabulate(&d3), rhs.tabulate(&d3));
        }
    }
}

#[test]
fn tensor_boundary_and_permutation() {
    let d2 = StandardSimplex::new(2);
    let t: Tensor<DeltaSimplex, i64> = Tensor::basis(vec![v(&[0, 1]), v(&[1, 2])]);
    let swapped = swap_factors(&t);
    assert_eq!(swapped, Tensor::from_term(vec![v(&[1, 2]), v(&[0, 1])], -1));
    assert_eq!(swap_factors(&swapped), t);
    let dt = tensor_boundary(&d2, &t);
    assert_eq!(tensor_boundary(&d2, &dt), Tensor::zero());
    assert_eq!(dt.coefficient(&vec![v(&[0, 1]), v(&[2])]), -1);
    assert!(!permutation_sign(&[1, 1, 1], &[2, 0, 1]));
    assert!(permutation_sign(&[1, 1, 2], &[1, 0, 2]));
}
