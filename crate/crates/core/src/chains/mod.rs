//! Normalized chains, tensors of chains, the shuffle map and group actions.

mod cochain;
mod graded;

pub use cochain::{coboundary, cochain_from_fn, cup_product, evaluate_tensor, Cochain};
pub use graded::{transpose, transposition, BasisElem, Functional, GradedMap, Shifted};

use crate::lincomb::LinComb;
use crate::ring::{sign, Ring};
use crate::simplicial::{
    Cell, GroupAction, MonotoneMap, ProdSimplex, SimplicialGroup, SimplicialSet, UniversalBundle,
    BundleSimplex,
};

pub type Chain<S, R> = LinComb<S, R>;

/// An element of `C^{⊗n}`; the vector lists the factors in order.
pub type Tensor<S, R> = LinComb<Vec<S>, R>;

/// The basis chain of `x`, or zero if `x` is degenerate.
pub fn simplex_chain<X: SimplicialSet + ?Sized, R: Ring>(space: &X, x: X::Simplex) -> Chain<X::Simplex, R> {
    if space.is_degenerate(&x) {
        Chain::zero()
    } else {
        Chain::basis(x)
    }
}

/// Drops degenerate simplices.
pub fn normalize<X: SimplicialSet + ?Sized, R: Ring>(space: &X, c: &Chain<X::Simplex, R>) -> Chain<X::Simplex, R> {
    c.filter(|x| !space.is_degenerate(x))
}

pub fn boundary<X: SimplicialSet + ?Sized, R: Ring>(space: &X, c: &Chain<X::Simplex, R>) -> Chain<X::Simplex, R> {
    let mut out = Chain::zero();
    for (x, a) in c {
        let p = x.dim();
        if p == 0 {
            continue;
        }
        for i in 0..=p {
            let y = space.face(x, i);
            if !space.is_degenerate(&y) {
                let s: R = sign(i as i64);
                out.add_term(y, s * a.clone());
            }
        }
    }
    out
}

/// `f_*` for a simplicial map given on simplices.
pub fn pushforward<S, Y, R, F>(target: &Y, c: &Chain<S, R>, mut f: F) -> Chain<Y::Simplex, R>
where
    S: Cell,
    Y: SimplicialSet + ?Sized,
    R: Ring,
    F: FnMut(&S) -> Y::Simplex,
{
    c.map_keys(|x| {
        let y = f(x);
        (!target.is_degenerate(&y)).then(|| (y, R::one()))
    })
}

/// The augmentation: sum of the coefficients of vertices.
pub fn augmentation<S: Cell, R: Ring>(c: &Chain<S, R>) -> R {
    c.iter()
        .filter(|(x, _)| x.dim() == 0)
        .fold(R::zero(), |acc, (_, a)| acc + a.clone())
}

/// A `(p, q)`-shuffle as a pair of slowly increasing surjections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shuffle {
    pub p: usize,
    pub q: usize,
    pub lambda: MonotoneMap,
    pub mu: MonotoneMap,
    /// `true` if the ordering permutation is odd.
    pub negative: bool,
}

impl Shuffle {
    pub fn sign<R: Ring>(&self) -> R {
        if self.negative {
            -R::one()
        } else {
            R::one()
        }
    }
}

/// All `(p, q)`-shuffles, in lexicographic order of the steps where `λ` increases.
pub fn shuffles(p: usize, q: usize) -> Vec<Shuffle> {
    let n = p + q;
    crate::simplicial::subsets(n, p)
        .into_iter()
        .map(|lambda_steps| {
            // step i (moving from position i to i+1) raises λ iff i ∈ lambda_steps
            let mut lam = vec![0usize; n + 1];
            let mut mu = vec![0usize; n + 1];
            let mut inversions = 0usize;
            let mut mu_steps_so_far = 0usize;
            let mut k = 0usize;
            for i in 0..n {
                let up = k < lambda_steps.len() && lambda_steps[k] == i;
                if up {
                    k += 1;
                    inversions += mu_steps_so_far;
                    lam[i + 1] = lam[i] + 1;
                    mu[i + 1] = mu[i];
                } else {
                    mu_steps_so_far += 1;
                    lam[i + 1] = lam[i];
                    mu[i + 1] = mu[i] + 1;
                }
            }
            Shuffle {
                p,
                q,
                lambda: MonotoneMap::new(lam, p).expect("slowly increasing"),
                mu: MonotoneMap::new(mu, q).expect("slowly increasing"),
                negative: inversions % 2 == 1,
            }
        })
        .collect()
}

/// The shuffle map `∇: C(X) ⊗ C(Y) → C(X × Y)` on a pair of chains.
pub fn shuffle_map<X, Y, R>(
    x_space: &X,
    y_space: &Y,
    a: &Chain<X::Simplex, R>,
    b: &Chain<Y::Simplex, R>,
) -> Chain<ProdSimplex<X::Simplex, Y::Simplex>, R>
where
    X: SimplicialSet + ?Sized,
    Y: SimplicialSet + ?Sized,
    R: Ring,
{
    let mut out = Chain::zero();
    for (x, ca) in a {
        for (y, cb) in b {
            let coeff = ca.clone() * cb.clone();
            for sh in shuffles(x.dim(), y.dim()) {
                let z = ProdSimplex(x_space.act(x, &sh.lambda), y_space.act(y, &sh.mu));
                out.add_term(z, sh.sign::<R>() * coeff.clone());
            }
        }
    }
    out
}

/// `∇` applied to a tensor `a ⊗ b` given as a two-factor tensor of mixed spaces.
pub fn shuffle_tensor<X, Y, R>(
    x_space: &X,
    y_space: &Y,
    t: &LinComb<(X::Simplex, Y::Simplex), R>,
) -> Chain<ProdSimplex<X::Simplex, Y::Simplex>, R>
where
    X: SimplicialSet + ?Sized,
    Y: SimplicialSet + ?Sized,
    R: Ring,
{
    let mut out = Chain::zero();
    for ((x, y), c) in t {
        out.add_scaled(
            &shuffle_map(x_space, y_space, &Chain::basis(x.clone()), &Chain::basis(y.clone())),
            c,
        );
    }
    out
}

/// The Alexander–Whitney diagonal, as a two-factor tensor.
pub fn aw_diagonal<X: SimplicialSet + ?Sized, R: Ring>(space: &X, c: &Chain<X::Simplex, R>) -> Tensor<X::Simplex, R> {
    let mut out = Tensor::zero();
    for (x, a) in c {
        let p = x.dim();
        for k in 0..=p {
            let front = space.act(x, &MonotoneMap::new((0..=k).collect(), p).unwrap());
            let back = space.act(x, &MonotoneMap::new((k..=p).collect(), p).unwrap());
            if space.is_degenerate(&front) || space.is_degenerate(&back) {
                continue;
            }
            out.add_term(vec![front, back], a.clone());
        }
    }
    out
}

/// The tensor-product differential with Koszul signs.
pub fn tensor_boundary<X: SimplicialSet + ?Sized, R: Ring>(space: &X, t: &Tensor<X::Simplex, R>) -> Tensor<X::Simplex, R> {
    let mut out = Tensor::zero();
    for (factors, a) in t {
        let mut prefix = 0i64;
        for (i, x) in factors.iter().enumerate() {
            let dx = boundary(space, &Chain::<_, R>::basis(x.clone()));
            let s: R = sign(prefix);
            for (y, b) in &dx {
                let mut f = factors.clone();
                f[i] = y.clone();
                out.add_term(f, s.clone() * b.clone() * a.clone());
            }
            prefix += x.dim() as i64;
        }
    }
    out
}

/// Koszul sign of permuting graded factors so that factor `i` lands at `perm[i]`.
pub fn permutation_sign(degrees: &[i64], perm: &[usize]) -> bool {
    let mut neg = false;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] && degrees[i] & 1 == 1 && degrees[j] & 1 == 1 {
                neg = !neg;
            }
        }
    }
    neg
}

/// Moves factor `i` to position `perm[i]`, with Koszul signs.
pub fn permute_factors<S: Cell, R: Ring>(t: &Tensor<S, R>, perm: &[usize]) -> Tensor<S, R> {
    t.map_keys(|f| {
        debug_assert_eq!(f.len(), perm.len());
        let degrees: Vec<i64> = f.iter().map(|x| x.dim() as i64).collect();
        let mut g = f.clone();
        for (i, x) in f.iter().enumerate() {
            g[perm[i]] = x.clone();
        }
        let s = if permutation_sign(&degrees, perm) { -R::one() } else { R::one() };
        Some((g, s))
    })
}

/// The transposition `T` on two-factor tensors.
pub fn swap_factors<S: Cell, R: Ring>(t: &Tensor<S, R>) -> Tensor<S, R> {
    permute_factors(t, &[1, 0])
}

/// `a ⊗ b ↦ a ⊗ b` as a tensor; for joining homogeneous tensors.
pub fn tensor_product<S: Cell, R: Ring>(a: &Tensor<S, R>, b: &Tensor<S, R>) -> Tensor<S, R> {
    let mut out = Tensor::zero();
    for (x, ca) in a {
        for (y, cb) in b {
            let mut f = x.clone();
            f.extend(y.iter().cloned());
            out.add_term(f, ca.clone() * cb.clone());
        }
    }
    out
}

/// Applies a degree-`deg` linear map to factor `i` of every term, with the
/// Koszul sign for passing the factors before it.
pub fn apply_to_factor<S: Cell, R: Ring, F>(t: &Tensor<S, R>, i: usize, deg: i64, mut f: F) -> Tensor<S, R>
where
    F: FnMut(&S) -> Chain<S, R>,
{
    let mut out = Tensor::zero();
    for (factors, a) in t {
        let before: i64 = factors[..i].iter().map(|x| x.dim() as i64).sum();
        let s: R = sign(before * deg);
        for (y, b) in &f(&factors[i]) {
            let mut g = factors.clone();
            g[i] = y.clone();
            out.add_term(g, s.clone() * b.clone() * a.clone());
        }
    }
    out
}

/// Pontryagin product `μ_* ∇` in `C(G)`.
pub fn pontryagin_product<G, R>(group: &G, a: &Chain<G::Simplex, R>, b: &Chain<G::Simplex, R>) -> Chain<G::Simplex, R>
where
    G: SimplicialGroup + GroupAction<G>,
    R: Ring,
{
    group_action(group, group, a, b)
}

/// The `C(G)`-module structure `a · c = (action)_* ∇(a ⊗ c)` on `C(X)`.
pub fn group_action<G, X, R>(group: &G, space: &X, a: &Chain<G::Simplex, R>, c: &Chain<X::Simplex, R>) -> Chain<X::Simplex, R>
where
    G: SimplicialGroup,
    X: GroupAction<G> + ?Sized,
    R: Ring,
{
    let mut out = Chain::zero();
    for (g, ca) in a {
        for (x, cx) in c {
            let coeff = ca.clone() * cx.clone();
            for sh in shuffles(g.dim(), x.dim()) {
                let g2 = group.act(g, &sh.lambda);
                let x2 = space.act(x, &sh.mu);
                let y = space.act_by(group, &g2, &x2);
                if !space.is_degenerate(&y) {
                    out.add_term(y, sh.sign::<R>() * coeff.clone());
                }
            }
        }
    }
    out
}

/// `S` extended linearly to chains; degenerate images vanish.
pub fn extra_degeneracy<G: SimplicialGroup, R: Ring>(
    bundle: &UniversalBundle<G>,
    c: &Chain<BundleSimplex<G::Simplex>, R>,
) -> Chain<BundleSimplex<G::Simplex>, R> {
    c.map_keys(|e| {
        let s = bundle.extra_degeneracy(e);
        (!bundle.total.is_degenerate(&s)).then(|| (s, R::one()))
    })
}

/// `π_*: C(EG) → C(BG)`.
pub fn project_chain<G: SimplicialGroup, R: Ring>(
    bundle: &UniversalBundle<G>,
    c: &Chain<BundleSimplex<G::Simplex>, R>,
) -> Chain<crate::simplicial::ClassifyingSimplex<G::Simplex>, R> {
    pushforward(&bundle.base, c, |e| bundle.project(e))
}

#[cfg(test)]
mod tests;
