//! Symbolic simplicial sets.
//!
//! Every space here has a canonical representation of *all* its simplices
//! (degenerate ones included), so normal forms are computed rather than
//! stored. Chains only ever hold nondegenerate simplices.

mod bundle;
mod groups;
mod monotone;
mod product;
mod standard;

pub use bundle::{BundleSimplex, ClassifyingSimplex, ClassifyingSpace, TotalSpace, UniversalBundle};
pub use groups::{bar_circle, torus, ConstantCyclic, ConstantSimplex, GroupAction, SimplicialGroup, TorusGroup, TorusSimplex};
pub use monotone::{MonotoneKind, MonotoneMap};
pub use product::{ProdSimplex, Product};
pub use standard::{DeltaSimplex, SimplicialComplexSpace, StandardSimplex};

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::lincomb::Graded;

/// A simplex representation: totally ordered so chains are canonical.
pub trait Cell: Clone + Ord + Hash + Debug + Graded + Send + Sync + 'static {
    fn dim(&self) -> usize {
        self.degree() as usize
    }
}

/// Face and degeneracy rules of a simplicial set.
pub trait SimplicialSet {
    type Simplex: Cell;

    fn face(&self, x: &Self::Simplex, i: usize) -> Self::Simplex;

    fn degeneracy(&self, x: &Self::Simplex, i: usize) -> Self::Simplex;

    /// Whether `x` lies in the image of `s_i`.
    fn is_degenerate_at(&self, x: &Self::Simplex, i: usize) -> bool {
        let d = x.dim();
        d > 0 && i < d && self.degeneracy(&self.face(x, i), i) == *x
    }

    fn is_degenerate(&self, x: &Self::Simplex) -> bool {
        (0..x.dim()).any(|i| self.is_degenerate_at(x, i))
    }

    /// The simplicial operator `x ↦ x(ν)` for a monotone `ν: [m] → [dim x]`.
    fn act(&self, x: &Self::Simplex, nu: &MonotoneMap) -> Self::Simplex {
        default_act(self, x, nu)
    }
}

/// Spaces with finitely many nondegenerate simplices in each dimension.
pub trait FiniteSimplicialSet: SimplicialSet {
    fn nondegenerate(&self, dim: usize) -> Vec<Self::Simplex>;

    /// All simplices of dimension `dim`, degenerate ones included.
    fn all_simplices(&self, dim: usize) -> Vec<Self::Simplex> {
        let mut out = Vec::new();
        for base_dim in 0..=dim {
            let bases = self.nondegenerate(base_dim);
            if bases.is_empty() {
                continue;
            }
            for positions in subsets(dim, dim - base_dim) {
                for b in &bases {
                    let mut y = b.clone();
                    for &j in &positions {
                        y = self.degeneracy(&y, j);
                    }
                    out.push(y);
                }
            }
        }
        out
    }
}

/// Subsets of `{0..n-1}` of size `k`, ascending.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

pub(crate) fn default_act<X: SimplicialSet + ?Sized>(
    space: &X,
    x: &X::Simplex,
    nu: &MonotoneMap,
) -> X::Simplex {
    debug_assert_eq!(nu.target(), x.dim());
    let values = nu.values();
    // face part: drop the vertices missed by ν, highest first
    let mut image: Vec<usize> = values.to_vec();
    image.dedup();
    let mut y = x.clone();
    let mut keep = image.iter().rev().peekable();
    for v in (0..=x.dim()).rev() {
        if keep.peek() == Some(&&v) {
            keep.next();
        } else {
            y = space.face(&y, v);
        }
    }
    // degeneracy part: repeats of ν, lowest first
    for j in 0..values.len().saturating_sub(1) {
        if values[j] == values[j + 1] {
            y = space.degeneracy(&y, j);
        }
    }
    y
}

/// Eilenberg–Zilber normal form `s_{j_k} ⋯ s_{j_1} base` with `j_k > ⋯ > j_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EzForm<S> {
    /// Strictly decreasing degeneracy indices, outermost first.
    pub word: Vec<usize>,
    pub base: S,
}

pub fn ez_form<X: SimplicialSet + ?Sized>(space: &X, x: &X::Simplex) -> EzForm<X::Simplex> {
    let positions: Vec<usize> = (0..x.dim()).filter(|&i| space.is_degenerate_at(x, i)).collect();
    let mut base = x.clone();
    for &j in positions.iter().rev() {
        base = space.face(&base, j);
    }
    EzForm {
        word: positions.into_iter().rev().collect(),
        base,
    }
}

/// Rebuilds the simplex described by an Eilenberg–Zilber form.
pub fn from_ez_form<X: SimplicialSet + ?Sized>(space: &X, form: &EzForm<X::Simplex>) -> X::Simplex {
    let mut y = form.base.clone();
    for &j in form.word.iter().rev() {
        y = space.degeneracy(&y, j);
    }
    y
}

/// A face or degeneracy operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimplicialOp {
    Face(usize),
    Degeneracy(usize),
}

/// Applies a composite operator word; the rightmost operator acts first.
pub fn apply_ops<X: SimplicialSet + ?Sized>(
    space: &X,
    ops: &[SimplicialOp],
    x: &X::Simplex,
) -> Result<X::Simplex> {
    let mut y = x.clone();
    for op in ops.iter().rev() {
        let d = y.dim();
        y = match *op {
            SimplicialOp::Face(i) => {
                if d == 0 || i > d {
                    return Err(Error::IndexOutOfRange { index: i, dim: d });
                }
                space.face(&y, i)
            }
            SimplicialOp::Degeneracy(i) => {
                if i > d {
                    return Err(Error::IndexOutOfRange { index: i, dim: d });
                }
                space.degeneracy(&y, i)
            }
        };
    }
    Ok(y)
}

/// Normal form of `s_{w_0} s_{w_1} ⋯ s_{w_r}(base)` (rightmost applied first).
pub fn normalize<X: SimplicialSet + ?Sized>(
    space: &X,
    word: &[usize],
    base: &X::Simplex,
) -> Result<EzForm<X::Simplex>> {
    let ops: Vec<SimplicialOp> = word.iter().map(|&i| SimplicialOp::Degeneracy(i)).collect();
    let y = apply_ops(space, &ops, base)?;
    Ok(ez_form(space, &y))
}

/// Checked version of [`SimplicialSet::act`].
pub fn act<X: SimplicialSet + ?Sized>(
    space: &X,
    x: &X::Simplex,
    nu: &MonotoneMap,
) -> Result<X::Simplex> {
    if nu.target() != x.dim() {
        return Err(Error::RangeMismatch(format!(
            "map lands in [0..{}] but the simplex has dimension {}",
            nu.target(),
            x.dim()
        )));
    }
    Ok(space.act(x, nu))
}

/// Checks the simplicial identities on one simplex; returns a description of
/// the first violation.
pub fn check_simplicial_identities<X: SimplicialSet + ?Sized>(
    space: &X,
    x: &X::Simplex,
) -> std::result::Result<(), String> {
    let n = x.dim();
    let fail = |what: &str| Err(format!("{what} fails on {x:?}"));
    if n >= 2 {
        for j in 0..=n {
            for i in 0..j {
                let lhs = space.face(&space.face(x, j), i);
                let rhs = space.face(&space.face(x, i), j - 1);
                if lhs != rhs {
                    return fail(&format!("d_{i} d_{j} = d_{} d_{i}", j - 1));
                }
            }
        }
    }
    for j in 0..=n {
        for i in 0..=j {
            let lhs = space.degeneracy(&space.degeneracy(x, j), i);
            let rhs = space.degeneracy(&space.degeneracy(x, i), j + 1);
            if lhs != rhs {
                return fail(&format!("s_{i} s_{j} = s_{} s_{i}", j + 1));
            }
        }
    }
    for j in 0..=n {
        let sx = space.degeneracy(x, j);
        for i in 0..=n + 1 {
            let lhs = space.face(&sx, i);
            let rhs = if i < j {
                if n == 0 {
                    continue;
                }
                space.degeneracy(&space.face(x, i), j - 1)
            } else if i == j || i == j + 1 {
                x.clone()
            } else {
                if n == 0 {
                    continue;
                }
                space.degeneracy(&space.face(x, i - 1), j)
            };
            if lhs != rhs {
                return fail(&format!("d_{i} s_{j}"));
            }
        }
        if !space.is_degenerate_at(&sx, j) {
            return fail(&format!("s_{j} x detected as nondegenerate at {j}"));
        }
    }
    Ok(())
}
