//! Interval cut operations `AW_u` and their variants on products and bundles.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::Surjection;
use crate::chains::{Chain, Tensor};
use crate::lincomb::LinComb;
use crate::ring::Ring;
use crate::simplicial::{BundleSimplex, ClassifyingSimplex, MonotoneMap, ProdSimplex, SimplicialGroup, SimplicialSet, UniversalBundle};

/// One admissible cut of `[0, p]` for a surjection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut {
    /// `0 = p_0 ≤ p_1 ≤ ... ≤ p_{k+l} = p`.
    pub points: Vec<usize>,
    /// `ν_1, ..., ν_l` as strictly increasing maps into `[0, p]`.
    pub nus: Vec<MonotoneMap>,
    pub negative: bool,
}

/// The sign of a cut: permutation sign times position sign. `true` means `-1`.
///
/// `points` has one more entry than `u`; positions whose intervals would be
/// degenerate are not checked here.
pub fn cut_sign(u: &Surjection, points: &[usize]) -> bool {
    let vals = u.values();
    let fin = u.final_positions();
    let len = |i: usize| points[i + 1] - points[i] + usize::from(!fin[i]);
    let mut negative = false;
    // stable sort by value: pairs i < j with vals[i] > vals[j] get swapped
    for i in 0..vals.len() {
        for j in i + 1..vals.len() {
            if vals[i] > vals[j] && len(i) % 2 == 1 && len(j) % 2 == 1 {
                negative = !negative;
            }
        }
    }
    for i in 0..vals.len() {
        if !fin[i] && points[i + 1] % 2 == 1 {
            negative = !negative;
        }
    }
    negative
}

type CutCache = Mutex<HashMap<(Vec<usize>, usize), Arc<Vec<Cut>>>>;

fn cache() -> &'static CutCache {
    static CACHE: OnceLock<CutCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All cuts of `[0, p]` for `u` in which no two intervals of the same value
/// overlap, in lexicographic order of the cut points.
pub fn cuts(u: &Surjection, p: usize) -> Arc<Vec<Cut>> {
    let key = (u.values().to_vec(), p);
    if let Some(c) = cache().lock().unwrap().get(&key) {
        return c.clone();
    }
    let computed = Arc::new(enumerate_cuts(u, p));
    let mut guard = cache().lock().unwrap();
    if guard.len() > 4096 {
        guard.clear();
    }
    guard.insert(key, computed.clone());
    computed
}

fn enumerate_cuts(u: &Surjection, p: usize) -> Vec<Cut> {
    let vals = u.values();
    let n = vals.len();
    let l = u.arity();
    // previous occurrence of the same value, for the overlap test
    let prev: Vec<Option<usize>> = (0..n).map(|j| (0..j).rev().find(|&i| vals[i] == vals[j])).collect();
    let mut out = Vec::new();
    let mut points = vec![0usize; n + 1];
    points[n] = p;

    // Interval `j` starts at `points[j]`; it overlaps the previous interval `i`
    // of the same value when `points[i + 1] == points[j]`.
    fn rec(
        pos: usize,
        n: usize,
        p: usize,
        points: &mut Vec<usize>,
        prev: &[Option<usize>],
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if pos == n {
            emit(points);
            return;
        }
        let lo = points[pos - 1];
        for v in lo..=p {
            points[pos] = v;
            if let Some(i) = prev[pos] {
                if points[i + 1] == v {
                    continue;
                }
            }
            rec(pos + 1, n, p, points, prev, emit);
        }
    }

    let mut emit = |pts: &[usize]| {
        let mut seqs: Vec<Vec<usize>> = vec![Vec::new(); l];
        for i in 0..n {
            seqs[vals[i] - 1].extend(pts[i]..=pts[i + 1]);
        }
        let nus = seqs
            .into_iter()
            .map(|s| {
                debug_assert!(s.windows(2).all(|w| w[0] < w[1]));
                MonotoneMap::new(s, p).expect("increasing sequence")
            })
            .collect();
        out.push(Cut {
            points: pts.to_vec(),
            nus,
            negative: cut_sign(u, pts),
        });
    };
    rec(1, n, p, &mut points, &prev, &mut emit);
    out
}

/// `AW_u: C(X) → C(X)^{⊗l}`.
pub fn interval_cut<X, R>(u: &Surjection, space: &X, c: &Chain<X::Simplex, R>) -> Tensor<X::Simplex, R>
where
    X: SimplicialSet + ?Sized,
    R: Ring,
{
    let mut out = Tensor::zero();
    for (x, a) in c {
        let p = crate::simplicial::Cell::dim(x);
        'cut: for cut in cuts(u, p).iter() {
            let mut factors = Vec::with_capacity(cut.nus.len());
            for nu in &cut.nus {
                let y = space.act(x, nu);
                if space.is_degenerate(&y) {
                    continue 'cut;
                }
                factors.push(y);
            }
            out.add_term(factors, if cut.negative { -a.clone() } else { a.clone() });
        }
    }
    out
}

/// Applies `AW_u` to factor `i` of every term, with the Koszul sign
/// `(-1)^{deg u · (degrees before i)}`.
pub fn interval_cut_tensor<X, R>(u: &Surjection, space: &X, t: &Tensor<X::Simplex, R>, i: usize) -> Tensor<X::Simplex, R>
where
    X: SimplicialSet + ?Sized,
    R: Ring,
{
    let mut out = Tensor::zero();
    for (factors, a) in t {
        let before: usize = factors[..i].iter().map(crate::simplicial::Cell::dim).sum();
        let s: R = crate::ring::sign((u.degree() * before) as i64);
        let image: Tensor<X::Simplex, R> = interval_cut(u, space, &Chain::basis(factors[i].clone()));
        for (parts, b) in &image {
            let mut g = factors[..i].to_vec();
            g.extend(parts.iter().cloned());
            g.extend(factors[i + 1..].iter().cloned());
            out.add_term(g, s.clone() * b.clone() * a.clone());
        }
    }
    out
}

/// `AW̃_u = ((π_X)_* ⊗ (π_Y)_*^{⊗l}) AW_u` on `C(X × Y)`, for `u` 1-biased.
#[allow(clippy::type_complexity)]
pub fn aw_tilde<X, Y, R>(
    u: &Surjection,
    x_space: &X,
    y_space: &Y,
    c: &Chain<ProdSimplex<X::Simplex, Y::Simplex>, R>,
) -> crate::Result<LinComb<(X::Simplex, Vec<Y::Simplex>), R>>
where
    X: SimplicialSet + ?Sized,
    Y: SimplicialSet + ?Sized,
    R: Ring,
{
    if !u.is_one_biased() {
        return Err(crate::Error::NotOneBiased(u.values().to_vec()));
    }
    let mut out = LinComb::zero();
    for (z, a) in c {
        let p = crate::simplicial::Cell::dim(&z.0);
        'cut: for cut in cuts(u, p).iter() {
            let first = x_space.act(&z.0, &cut.nus[0]);
            if x_space.is_degenerate(&first) {
                continue;
            }
            let mut rest = Vec::with_capacity(cut.nus.len() - 1);
            for nu in &cut.nus[1..] {
                let y = y_space.act(&z.1, nu);
                if y_space.is_degenerate(&y) {
                    continue 'cut;
                }
                rest.push(y);
            }
            out.add_term((first, rest), if cut.negative { -a.clone() } else { a.clone() });
        }
    }
    Ok(out)
}

/// `ÂW_u = (1 ⊗ π_*^{⊗l}) AW_u: C(EG) → C(EG) ⊗ C(BG)^{⊗l}`, for `u` 1-biased.
#[allow(clippy::type_complexity)]
pub fn aw_hat<G, R>(
    u: &Surjection,
    bundle: &UniversalBundle<G>,
    c: &Chain<BundleSimplex<G::Simplex>, R>,
) -> crate::Result<LinComb<(BundleSimplex<G::Simplex>, Vec<ClassifyingSimplex<G::Simplex>>), R>>
where
    G: SimplicialGroup,
    R: Ring,
{
    if !u.is_one_biased() {
        return Err(crate::Error::NotOneBiased(u.values().to_vec()));
    }
    let total = &bundle.total;
    let base = &bundle.base;
    let mut out = LinComb::zero();
    for (e, a) in c {
        let p = crate::simplicial::Cell::dim(e);
        'cut: for cut in cuts(u, p).iter() {
            let first = total.act(e, &cut.nus[0]);
            if total.is_degenerate(&first) {
                continue;
            }
            let mut rest = Vec::with_capacity(cut.nus.len() - 1);
            for nu in &cut.nus[1..] {
                let b = bundle.project(&total.act(e, nu));
                if base.is_degenerate(&b) {
                    continue 'cut;
                }
                rest.push(b);
            }
            out.add_term((first, rest), if cut.negative { -a.clone() } else { a.clone() });
        }
    }
    Ok(out)
}
