//! Certificate-producing suites for the chain-level identities, shared by the
//! command line and the acceptance tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bar_hga::{
    bar_diagonal, bar_diagonal_chain, bar_differential, bar_differential_chain, bar_product, bar_product_chains, BarChain,
    BarWord, Element, Gen, Hga, PresentedDGA,
};
use crate::certificate::Certificate;
use crate::chains::{
    aw_diagonal, boundary, coboundary, cup_product, extra_degeneracy, permute_factors, shuffle_map, tensor_boundary, Chain,
    Cochain, Tensor,
};
use crate::error::Result;
use crate::face_rings::{DJFormality, SimplicialPoset};
use crate::lincomb::{Graded, LinComb};
use crate::ring::sign;
use crate::sample;
use crate::simplicial::{
    BundleSimplex, ConstantCyclic, ConstantSimplex, FiniteSimplicialSet, ProdSimplex, Product, StandardSimplex, UniversalBundle,
};
use crate::surjections::{aw_tilde, cup_i, interval_cut, interval_cut_tensor, Surjection};
use crate::torus_formality::{check_naturality, exponents, CoordinateMap, ExteriorBialgebra, KoszulBasis, TorusFormality};

/// Nondegenerate surjections of length `1..=max_len`.
pub fn surjections_up_to(max_len: usize) -> Vec<Surjection> {
    (1..=max_len).flat_map(|len| (1..=len).flat_map(move |l| Surjection::enumerate(len, l))).collect()
}

/// 1-biased surjections onto `1..=l+1` of length `k+l+1`, `k ≤ max_k`, `l ≤ max_l`.
pub fn one_biased(max_k: usize, max_l: usize) -> Vec<Surjection> {
    let mut out = Vec::new();
    for l in 0..=max_l {
        for k in 0..=max_k {
            out.extend(Surjection::enumerate(k + l + 1, l + 1).into_iter().filter(Surjection::is_one_biased));
        }
    }
    out
}

/// All permutations of `1..=n`, in one-line notation.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out
}

fn first_failure<T>(items: impl IntoIterator<Item = T>, fails: impl FnMut(T) -> Option<String>) -> Option<String> {
    items.into_iter().find_map(fails)
}

/// `d AW_u − (−1)^{deg u} AW_u d = AW_{du}` on one simplex.
fn operad_differential_witness(u: &Surjection, space: &StandardSimplex, x: &crate::simplicial::DeltaSimplex) -> Option<String> {
    let c: Chain<_, i64> = Chain::basis(x.clone());
    let mut lhs = tensor_boundary(space, &interval_cut(u, space, &c));
    lhs.add_scaled(&interval_cut(u, space, &boundary(space, &c)), &-sign::<i64>(u.degree() as i64));
    let mut rhs = Tensor::zero();
    for (v, a) in &u.differential() {
        rhs.add_scaled(&interval_cut(v, space, &c), a);
    }
    (lhs != rhs).then(|| format!("x={x:?}"))
}

/// The interval cut operations form a map of operads: compatibility with
/// differentials and with the symmetric group, on all faces of `Δ^max_dim`.
pub fn operad_suite(max_len: usize, max_dim: usize) -> Vec<Certificate> {
    let space = StandardSimplex::new(max_dim);
    let simplices: Vec<_> = (0..=max_dim).flat_map(|p| space.nondegenerate(p)).collect();
    let window = format!("k+l ≤ {max_len}, Δ^p for p ≤ {max_dim}");
    let mut out = Vec::new();
    for u in surjections_up_to(max_len) {
        let witness = first_failure(&simplices, |x| operad_differential_witness(&u, &space, x));
        out.push(Certificate::new("d AW_u − (−1)^{deg u} AW_u d = AW_{du}", format!("u={u}"), &window).with_witness(witness));
        // adjacent transpositions generate, all permutations for small arity
        let l = u.arity();
        let mut perms: Vec<Vec<usize>> = (1..l)
            .map(|i| {
                let mut p: Vec<usize> = (1..=l).collect();
                p.swap(i - 1, i);
                p
            })
            .collect();
        if l <= 3 {
            perms = permutations(l);
        }
        let witness = first_failure(&perms, |perm| {
            let pu = u.permute(perm).ok()?;
            let to: Vec<usize> = perm.iter().map(|v| v - 1).collect();
            first_failure(&simplices, |x| {
                let c: Chain<_, i64> = Chain::basis(x.clone());
                (interval_cut(&pu, &space, &c) != permute_factors(&interval_cut(&u, &space, &c), &to))
                    .then(|| format!("σ={perm:?} x={x:?}"))
            })
        });
        out.push(Certificate::new("AW_{σu} = σ AW_u", format!("u={u}"), &window).with_witness(witness));
    }
    let s = |v: &[usize]| Surjection::new(v.to_vec()).expect("valid surjection");
    let expected = |terms: &[(&[usize], i64)]| -> LinComb<Surjection, i64> { terms.iter().map(|(v, c)| (s(v), *c)).collect() };
    for (u, rhs) in [
        (s(&[1, 2, 1]), expected(&[(&[2, 1], 1), (&[1, 2], -1)])),
        (s(&[1, 2, 1, 2]), expected(&[(&[2, 1, 2], 1), (&[1, 2, 1], 1)])),
    ] {
        let du = u.differential();
        out.push(
            Certificate::new("differential of a surjection", format!("d{u}"), "exact")
                .with_witness((du != rhs).then(|| format!("got {du:?}"))),
        );
    }
    out
}

fn random_cochain<X: FiniteSimplicialSet>(rng: &mut ChaCha8Rng, space: &X, deg: usize) -> Cochain<X::Simplex, i64> {
    Cochain::from_values(deg, sample::combination(rng, &space.nondegenerate(deg), 4))
}

fn same<X: FiniteSimplicialSet>(space: &X, a: &Cochain<X::Simplex, i64>, b: &Cochain<X::Simplex, i64>) -> bool {
    a.tabulate(space) == b.tabulate(space)
}

fn cup_identities_on<X: FiniteSimplicialSet + Clone + Send + Sync + 'static>(name: &str, space: &X, top: usize, samples: usize, seed: u64) -> Result<Vec<Certificate>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut cup1, mut cup2, mut hirsch) = (None, None, None);
    for n in 0..samples {
        let (p, q, r) = (rng.gen_range(0..=top), rng.gen_range(0..=top), rng.gen_range(0..=top));
        let b = random_cochain(&mut rng, space, p);
        let g = random_cochain(&mut rng, space, q);
        let a = random_cochain(&mut rng, space, r);
        let (sp, spq): (i64, i64) = (sign(p as i64), sign((p * q) as i64));
        let (db, dg) = (coboundary(space, &b), coboundary(space, &g));
        // d(β∪₁γ) + dβ∪₁γ + (-1)^{|β|} β∪₁dγ = β∪γ - (-1)^{|β||γ|} γ∪β
        let lhs = coboundary(space, &cup_i(space, &b, &g, 1)?)
            .add(&cup_i(space, &db, &g, 1)?)
            .add(&cup_i(space, &b, &dg, 1)?.scale(sp));
        let rhs = cup_product(space, &b, &g).add(&cup_product(space, &g, &b).scale(-spq));
        if cup1.is_none() && !same(space, &lhs, &rhs) {
            cup1 = Some(format!("sample {n}: |β|={p} |γ|={q}"));
        }
        // d(β∪₂γ) - dβ∪₂γ - (-1)^{|β|} β∪₂dγ = β∪₁γ + (-1)^{|β||γ|} γ∪₁β
        let lhs = coboundary(space, &cup_i(space, &b, &g, 2)?)
            .add(&cup_i(space, &db, &g, 2)?.scale(-1))
            .add(&cup_i(space, &b, &dg, 2)?.scale(-sp));
        let rhs = cup_i(space, &b, &g, 1)?.add(&cup_i(space, &g, &b, 1)?.scale(spq));
        if cup2.is_none() && !same(space, &lhs, &rhs) {
            cup2 = Some(format!("sample {n}: |β|={p} |γ|={q}"));
        }
        // (αβ)∪₁γ = (-1)^{|α|} α(β∪₁γ) + (-1)^{|β||γ|} (α∪₁γ)β
        let lhs = cup_i(space, &cup_product(space, &a, &b), &g, 1)?;
        let rhs = cup_product(space, &a, &cup_i(space, &b, &g, 1)?)
            .scale(sign(r as i64))
            .add(&cup_product(space, &cup_i(space, &a, &g, 1)?, &b).scale(sign((p * q) as i64)));
        if hirsch.is_none() && !same(space, &lhs, &rhs) {
            hirsch = Some(format!("sample {n}: |α|={r} |β|={p} |γ|={q}"));
        }
    }
    let window = format!("{samples} random samples, seed {seed}");
    Ok(vec![
        Certificate::new("d(β∪₁γ) formula", name, &window).with_witness(cup1),
        Certificate::new("d(β∪₂γ) formula", name, &window).with_witness(cup2),
        Certificate::new("Hirsch formula", name, &window).with_witness(hirsch),
    ])
}

/// The ∪₁ and ∪₂ coboundary formulas and the Hirsch formula on random
/// integer cochains of `Δ³` and `Δ¹ × Δ²`.
pub fn cup_suite(samples: usize, seed: u64) -> Result<Vec<Certificate>> {
    let mut out = cup_identities_on("Δ^3", &StandardSimplex::new(3), 3, samples, seed)?;
    let prism = Product::new(StandardSimplex::new(1), StandardSimplex::new(2));
    out.extend(cup_identities_on("Δ^1×Δ^2", &prism, 3, samples, seed.wrapping_add(1))?);
    Ok(out)
}

/// Both composites of the square relating the shuffle map `∇` and `AW̃_u`,
/// on every `x ⊗ w` with `x ∈ Δ^a`, `w ∈ Δ^b × Δ^c`.
pub fn aw_shuffle_witness(u: &Surjection, a: usize, b: usize, c: usize) -> Result<Option<String>> {
    let (dx, dy, dz) = (StandardSimplex::new(a), StandardSimplex::new(b), StandardSimplex::new(c));
    let yz = Product::new(dy, dz);
    let xy = Product::new(dx, dy);
    for p in 0..=a {
        for x in dx.nondegenerate(p) {
            let xc: Chain<_, i64> = Chain::basis(x.clone());
            for q in 0..=(b + c) {
                for w in yz.nondegenerate(q) {
                    let wc: Chain<_, i64> = Chain::basis(w.clone());
                    // right then down
                    let nabla = shuffle_map(&dx, &yz, &xc, &wc)
                        .map_keys(|t| Some((ProdSimplex(ProdSimplex(t.0.clone(), t.1 .0.clone()), t.1 .1.clone()), 1)));
                    let right = aw_tilde(u, &xy, &dz, &nabla)?;
                    // down then right
                    let mut left = LinComb::zero();
                    let s0: i64 = sign((u.degree() * p) as i64);
                    for ((y, zs), coeff) in &aw_tilde(u, &dy, &dz, &wc)? {
                        for (xy_simplex, e) in &shuffle_map(&dx, &dy, &xc, &Chain::basis(y.clone())) {
                            left.add_term((xy_simplex.clone(), zs.clone()), s0 * coeff * e);
                        }
                    }
                    if left != right {
                        return Ok(Some(format!("x={x:?} w={w:?}")));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// `AW̃_u ∇ = (∇ ⊗ 1) (1 ⊗ AW̃_u)` for all 1-biased `u` with `k ≤ max_k`,
/// `l ≤ max_l` and all `Δ^a, Δ^b, Δ^c` with `a + b + c ≤ max_total`.
pub fn aw_shuffle_suite(max_total: usize, max_k: usize, max_l: usize) -> Result<Vec<Certificate>> {
    let us = one_biased(max_k, max_l);
    let window = format!("a+b+c ≤ {max_total}, k ≤ {max_k}, l ≤ {max_l}");
    let mut out = Vec::new();
    for a in 0..=max_total {
        for b in 0..=max_total - a {
            for c in 0..=max_total - a - b {
                for u in &us {
                    out.push(
                        Certificate::new("AW̃_u ∇ = (∇⊗1)(1⊗AW̃_u)", format!("u={u} Δ^{a}, Δ^{b}, Δ^{c}"), &window)
                            .with_witness(aw_shuffle_witness(u, a, b, c)?),
                    );
                }
            }
        }
    }
    Ok(out)
}

type WSimplex = BundleSimplex<ConstantSimplex>;

/// Interval cuts and the extra degeneracy `S` on `W(ℤ/2)`, for all `u` with
/// `u(1) = 1` and length `2..=max_len`, through dimension `max_dim`, together
/// with `ΔS = (S ⊗ 1)Δ + e₀ ⊗ S`.
pub fn aw_s_suite(max_len: usize, max_dim: usize) -> Vec<Certificate> {
    let bundle = UniversalBundle::new(ConstantCyclic::new(2));
    let total = &bundle.total;
    let e0 = bundle.basepoint();
    let simplices: Vec<WSimplex> = (0..=max_dim).flat_map(|d| total.nondegenerate(d)).collect();
    let s_first = |t: &Tensor<WSimplex, i64>| {
        t.map_linear(|f| {
            extra_degeneracy(&bundle, &Chain::basis(f[0].clone())).map_keys(|y| {
                let mut g = f.clone();
                g[0] = y.clone();
                Some((g, 1))
            })
        })
    };
    let window = format!("W(ℤ/2) through dimension {max_dim}");
    let mut out = Vec::new();
    for len in 2..=max_len {
        for l in 1..=len {
            for u in Surjection::enumerate(len, l).into_iter().filter(|u| u.values()[0] == 1) {
                let up = u.truncate().expect("length at least two");
                let is_final = u.final_positions()[0];
                let witness = first_failure(&simplices, |x| {
                    let c: Chain<_, i64> = Chain::basis(x.clone());
                    let sc = extra_degeneracy(&bundle, &c);
                    let lhs = interval_cut(&u, total, &sc);
                    let mut rhs = s_first(&interval_cut(&u, total, &c)).scale(&sign(u.degree() as i64));
                    let tail = interval_cut(&up, total, &sc);
                    if is_final {
                        rhs += &tail.map_keys(|f| {
                            let mut g = vec![e0.clone()];
                            g.extend(f.iter().cloned());
                            Some((g, 1))
                        });
                    } else {
                        rhs += &s_first(&tail);
                    }
                    (lhs != rhs).then(|| format!("x={x:?}"))
                });
                let identity = if is_final {
                    "AW_u S = (−1)^{deg u}(S⊗1)AW_u + e₀⊗AW_{u'} S"
                } else {
                    "AW_u S = (−1)^{deg u}(S⊗1)AW_u + (S⊗1)AW_{u'} S"
                };
                out.push(Certificate::new(identity, format!("u={u}"), &window).with_witness(witness));
            }
        }
    }
    let witness = first_failure(&simplices, |x| {
        let c: Chain<_, i64> = Chain::basis(x.clone());
        let lhs = aw_diagonal(total, &extra_degeneracy(&bundle, &c));
        let mut rhs = s_first(&aw_diagonal(total, &c));
        rhs += &Tensor::basis(vec![e0.clone()]).map_linear(|_| {
            extra_degeneracy(&bundle, &c).map_keys(|y| Some((vec![e0.clone(), y.clone()], 1)))
        });
        (lhs != rhs).then(|| format!("x={x:?}"))
    });
    out.push(Certificate::new("ΔS = (S⊗1)Δ + e₀⊗S", "u=(1,2)", &window).with_witness(witness));
    // the split of the diagonal used above, for u with first value final
    let d = StandardSimplex::new(max_dim);
    for u in surjections_up_to(max_len).into_iter().filter(|u| u.len() >= 2 && u.final_positions()[0]) {
        let first = u.values()[0];
        let up = u.truncate().expect("length at least two");
        let l = u.arity();
        let mut to: Vec<usize> = vec![first - 1];
        to.extend((1..l).map(|i| if i < first { i - 1 } else { i }));
        let witness = first_failure((0..=max_dim).flat_map(|p| d.nondegenerate(p)), |x| {
            let c: Chain<_, i64> = Chain::basis(x.clone());
            let split = interval_cut_tensor(&up, &d, &aw_diagonal(&d, &c), 1);
            (interval_cut(&u, &d, &c) != permute_factors(&split, &to)).then(|| format!("x={x:?}"))
        });
        out.push(Certificate::new("AW_u = τ(1⊗AW_{u'})Δ", format!("u={u}"), format!("Δ^{max_dim}")).with_witness(witness));
    }
    out
}

/// All words in the augmentation ideal of length `≤ len` and internal degree `≤ q`.
pub fn small_bar_words(a: &PresentedDGA, len: usize, q: i64) -> Vec<BarWord> {
    let letters: Vec<Gen> = (0..=q).flat_map(|d| a.ideal_basis(d)).collect();
    let mut out = vec![BarWord::empty()];
    let mut frontier = vec![BarWord::empty()];
    for _ in 0..len {
        let mut next = Vec::new();
        for x in &frontier {
            for &l in &letters {
                let y = x.concat(&BarWord(vec![l]));
                if y.internal_degree() <= q {
                    next.push(y);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn bar_bialgebra_certificates(name: &str, h: &Hga, words: &[BarWord]) -> Result<Vec<Certificate>> {
    let a = h.base();
    let (mut leibniz, mut multiplicative, mut associative) = (None, None, None);
    for x in words {
        let dx = bar_differential(a, x)?;
        for y in words {
            let xy = bar_product(h, x, y)?;
            let lhs = bar_differential_chain(a, &xy)?;
            let mut rhs = bar_product_chains(h, &dx, &BarChain::basis(y.clone()))?;
            rhs.add_scaled(&bar_product_chains(h, &BarChain::basis(x.clone()), &bar_differential(a, y)?)?, &sign(x.degree()));
            if leibniz.is_none() && lhs != rhs {
                leibniz = Some(format!("{x:?} {y:?}"));
            }
            let lhs = bar_diagonal_chain(&xy);
            let mut rhs = LinComb::<(BarWord, BarWord), i64>::zero();
            for ((x1, x2), c) in &bar_diagonal(x) {
                for ((y1, y2), d) in &bar_diagonal(y) {
                    let s = c * d * sign::<i64>(x2.degree() * y1.degree());
                    for (p, e) in &bar_product(h, x1, y1)? {
                        for (q, f) in &bar_product(h, x2, y2)? {
                            rhs.add_term((p.clone(), q.clone()), s * e * f);
                        }
                    }
                }
            }
            if multiplicative.is_none() && lhs != rhs {
                multiplicative = Some(format!("{x:?} {y:?}"));
            }
            for z in words.iter().filter(|z| z.len() + x.len() + y.len() <= 4) {
                let left = bar_product_chains(h, &xy, &BarChain::basis(z.clone()))?;
                let right = bar_product_chains(h, &BarChain::basis(x.clone()), &bar_product(h, y, z)?)?;
                if associative.is_none() && left != right {
                    associative = Some(format!("{x:?} {y:?} {z:?}"));
                }
            }
        }
    }
    let window = format!("{} bar words", words.len());
    Ok(vec![
        Certificate::new("d(xy) = d(x)y + (−1)^{|x|} x d(y) in BA", name, &window).with_witness(leibniz),
        Certificate::new("Δ(xy) = Δ(x)Δ(y) in BA", name, &window).with_witness(multiplicative),
        Certificate::new("(xy)z = x(yz) in BA", name, &window).with_witness(associative),
    ])
}

fn cup_one_certificates(name: &str, h: &Hga, samples: usize, seed: u64) -> Result<Vec<Certificate>> {
    let a = h.base();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let available: Vec<i64> = (0..=2).filter(|&d| !a.ideal_basis(d).is_empty()).collect();
    let (mut coboundary_formula, mut hirsch) = (None, None);
    for n in 0..samples {
        let degs: Vec<i64> = (0..3).map(|_| available[rng.gen_range(0..available.len())]).collect();
        let el: Vec<Element> = degs.iter().map(|&d| sample::combination(&mut rng, &a.ideal_basis(d), 2)).collect();
        let (x, y, z) = (&el[0], &el[1], &el[2]);
        let (p, q) = (degs[0], degs[1]);
        let mut lhs = a.d_element(&h.cup_one(x, y)?)?;
        lhs += &h.cup_one(&a.d_element(x)?, y)?;
        lhs.add_scaled(&h.cup_one(x, &a.d_element(y)?)?, &sign(p));
        let mut rhs = a.mul_elements(x, y)?;
        rhs.add_scaled(&a.mul_elements(y, x)?, &-sign::<i64>(p * q));
        if coboundary_formula.is_none() && lhs != rhs {
            coboundary_formula = Some(format!("sample {n}: degrees {degs:?}"));
        }
        let lhs = h.cup_one(&a.mul_elements(x, y)?, z)?;
        let mut rhs = a.mul_elements(x, &h.cup_one(y, z)?)?.scale(&sign(p));
        rhs.add_scaled(&a.mul_elements(&h.cup_one(x, z)?, y)?, &sign(q * degs[2]));
        if hirsch.is_none() && lhs != rhs {
            hirsch = Some(format!("sample {n}: degrees {degs:?}"));
        }
    }
    let window = format!("{samples} random triples, seed {seed}");
    Ok(vec![
        Certificate::new("d(a∪₁b) formula", name, &window).with_witness(coboundary_formula),
        Certificate::new("Hirsch formula", name, &window).with_witness(hirsch),
    ])
}

/// hga identities for the normalized cochains of `W̄(ℤ/2)` and of `Δ²`: the
/// ∪₁ formulas on random triples, and the dg bialgebra structure on `BA`.
pub fn hga_suite(samples: usize, seed: u64) -> Result<Vec<Certificate>> {
    let rp = Hga::cochains(&UniversalBundle::new(ConstantCyclic::new(2)).base, 7)?;
    let d2 = Hga::cochains_of_finite(&StandardSimplex::new(2), 2)?;
    let mut out = cup_one_certificates("C*(W̄ℤ/2)", &rp, samples, seed)?;
    out.extend(cup_one_certificates("C*(Δ^2)", &d2, samples, seed.wrapping_add(1))?);
    out.extend(bar_bialgebra_certificates("B C*(W̄ℤ/2)", &rp, &small_bar_words(rp.base(), 2, 3))?);
    out.extend(bar_bialgebra_certificates("B C*(Δ^2)", &d2, &small_bar_words(d2.base(), 2, 2))?);
    Ok(out)
}

/// The torus formality map on `T^n`, `n ≤ max_rank`, for `2|α| ≤ max_degree`:
/// `dF = Fd` and `ΔF = (F⊗F)Δ` on the Koszul complex, `AW_u f(y_α) = 0` for
/// strongly biased `u` of degree `≤ max_u_degree` and arity `≤ max_arity`,
/// and naturality for one inclusion and one projection.
pub fn bt_formality_suite(max_rank: usize, max_degree: usize, max_u_degree: usize, max_arity: usize) -> Result<Vec<Certificate>> {
    let mut out = Vec::new();
    let tori: Vec<TorusFormality> = (1..=max_rank).map(TorusFormality::new).collect();
    for t in &tori {
        let n = t.rank();
        for a in ExteriorBialgebra::new(n).all_basis() {
            for d in 0..=max_degree / 2 {
                for alpha in exponents(n, d as u32) {
                    let k = KoszulBasis::new(a, alpha);
                    out.push(t.check_chain_map(&k));
                    out.push(t.check_coalgebra(&k));
                }
            }
        }
        out.extend(t.vanishing_suite(max_u_degree, max_arity, max_degree));
    }
    if max_rank >= 2 {
        let (t1, t2) = (&tori[0], &tori[1]);
        let inclusion = CoordinateMap::inclusion(2, vec![1])?;
        let projection = CoordinateMap::projection(2, &[0])?;
        for d in 0..=max_degree / 2 {
            for alpha in exponents(1, d as u32) {
                out.push(check_naturality(&inclusion, t1, t2, &alpha)?);
            }
            for alpha in exponents(2, d as u32) {
                out.push(check_naturality(&projection, t2, t1, &alpha)?);
            }
        }
    }
    Ok(out)
}

/// The assembled formality map for `DJ_Σ`: compatibility of the `f_σ` under
/// covering relations and per-σ vanishing for strongly biased `u`.
pub fn dj_formality_suite(poset: &SimplicialPoset, max_degree: usize, max_u_degree: usize, max_arity: usize) -> Vec<Certificate> {
    let dj = DJFormality::new(poset.clone());
    let mut out = dj.check_compatibility(max_degree);
    out.extend(dj.check_vanishing(max_degree, max_u_degree, max_arity));
    out
}
