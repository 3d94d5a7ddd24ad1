//! The universal bundle `WG → W̄G` in tuple form.
//!
//! A `p`-simplex of `WG` is `(c_0, ..., c_p)` with `c_j ∈ G_{p-j}`; projecting
//! drops `c_0`, so a `p`-simplex of `W̄G` is `(b_0, ..., b_{p-1})` with
//! `b_j ∈ G_{p-1-j}`. `G` acts by left multiplication on `c_0`, and the extra
//! degeneracy prepends an identity.

use super::{Cell, FiniteSimplicialSet, GroupAction, SimplicialGroup, SimplicialSet};
use crate::lincomb::Graded;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BundleSimplex<S> {
    pub comps: Vec<S>,
}

impl<S: Cell> Graded for BundleSimplex<S> {
    fn degree(&self) -> i64 {
        self.comps.len() as i64 - 1
    }
}

impl<S: Cell> Cell for BundleSimplex<S> {}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassifyingSimplex<S> {
    pub comps: Vec<S>,
}

impl<S: Cell> Graded for ClassifyingSimplex<S> {
    fn degree(&self) -> i64 {
        self.comps.len() as i64
    }
}

impl<S: Cell> Cell for ClassifyingSimplex<S> {}

/// `EG = WG`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalSpace<G> {
    pub group: G,
}

/// `BG = W̄G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyingSpace<G> {
    pub group: G,
}

/// Faces of a tuple `c` whose entry `j` lives in `G_{top-j}`; shared by both
/// spaces since `W̄G` is `WG` with the first entry forgotten.
fn tuple_face<G: SimplicialGroup>(g: &G, c: &[G::Simplex], i: usize, shift: usize) -> Vec<G::Simplex> {
    // entry j of c is paired with face index i - j - shift
    let n = c.len();
    let mut out = Vec::with_capacity(n.saturating_sub(1));
    let pivot = i.checked_sub(shift);
    for (j, cj) in c.iter().enumerate() {
        match pivot {
            Some(pv) if j < pv => out.push(g.face(cj, pv - j)),
            Some(pv) if j == pv => {
                if j + 1 < n {
                    out.push(g.multiply(&g.face(cj, 0), &c[j + 1]));
                }
            }
            Some(pv) if j == pv + 1 => {}
            _ => out.push(cj.clone()),
        }
    }
    out
}

fn tuple_degeneracy<G: SimplicialGroup>(
    g: &G,
    c: &[G::Simplex],
    i: usize,
    shift: usize,
    top: usize,
) -> Vec<G::Simplex> {
    let mut out = Vec::with_capacity(c.len() + 1);
    let pivot = i as isize - shift as isize;
    for (j, cj) in c.iter().enumerate() {
        if (j as isize) <= pivot {
            out.push(g.degeneracy(cj, i - shift - j));
        }
    }
    // identity in G_{top - i}
    out.push(g.identity(top - i));
    for (j, cj) in c.iter().enumerate() {
        if (j as isize) > pivot {
            out.push(cj.clone());
        }
    }
    out
}

impl<G: SimplicialGroup> SimplicialSet for TotalSpace<G> {
    type Simplex = BundleSimplex<G::Simplex>;

    fn face(&self, x: &Self::Simplex, i: usize) -> Self::Simplex {
        BundleSimplex {
            comps: tuple_face(&self.group, &x.comps, i, 0),
        }
    }

    fn degeneracy(&self, x: &Self::Simplex, i: usize) -> Self::Simplex {
        let p = x.comps.len() - 1;
        BundleSimplex {
            comps: tuple_degeneracy(&self.group, &x.comps, i, 0, p),
        }
    }

    fn is_degenerate_at(&self, x: &Self::Simplex, i: usize) -> bool {
        let p = x.comps.len() - 1;
        i < p
            && self.group.is_identity(&x.comps[i + 1])
            && (0..=i).all(|j| self.group.is_degenerate_at(&x.comps[j], i - j))
    }
}

impl<G: SimplicialGroup> SimplicialSet for ClassifyingSpace<G> {
    type Simplex = ClassifyingSimplex<G::Simplex>;

    fn face(&self, x: &Self::Simplex, i: usize) -> Self::Simplex {
        let comps = if i == 0 {
            x.comps[1..].to_vec()
        } else {
            tuple_face(&self.group, &x.comps, i, 1)
        };
        ClassifyingSimplex { comps }
    }

    fn degeneracy(&self, x: &Self::Simplex, i: usize) -> Self::Simplex {
        let p = x.comps.len();
        let comps = if i == 0 {
            let mut c = vec![self.group.identity(p)];
            c.extend(x.comps.iter().cloned());
            c
        } else {
            tuple_degeneracy(&self.group, &x.comps, i, 1, p)
        };
        ClassifyingSimplex { comps }
    }

    fn is_degenerate_at(&self, x: &Self::Simplex, i: usize) -> bool {
        let p = x.comps.len();
        i < p
            && self.group.is_identity(&x.comps[i])
            && (1..=i).all(|j| self.group.is_degenerate_at(&x.comps[j - 1], i - j))
    }
}

fn all_tuples<G>(g: &G, dims: impl Iterator<Item = usize>) -> Vec<Vec<G::Simplex>>
where
    G: SimplicialGroup + FiniteSimplicialSet,
{
    let mut acc: Vec<Vec<G::Simplex>> = vec![Vec::new()];
    for d in dims {
        let choices = g.all_simplices(d);
        let mut next = Vec::with_capacity(acc.len() * choices.len());
        for t in &acc {
            for c in &choices {
                let mut t2 = t.clone();
                t2.push(c.clone());
                next.push(t2);
            }
        }
        acc = next;
    }
    acc
}

impl<G: SimplicialGroup + FiniteSimplicialSet> FiniteSimplicialSet for TotalSpace<G> {
    fn nondegenerate(&self, dim: usize) -> Vec<Self::Simplex> {
        all_tuples(&self.group, (0..=dim).map(|j| dim - j))
            .into_iter()
            .map(|comps| BundleSimplex { comps })
            .filter(|x| !self.is_degenerate(x))
            .collect()
    }
}

impl<G: SimplicialGroup + FiniteSimplicialSet> FiniteSimplicialSet for ClassifyingSpace<G> {
    fn nondegenerate(&self, dim: usize) -> Vec<Self::Simplex> {
        all_tuples(&self.group, (0..dim).map(|j| dim - 1 - j))
            .into_iter()
            .map(|comps| ClassifyingSimplex { comps })
            .filter(|x| !self.is_degenerate(x))
            .collect()
    }
}

impl<G: SimplicialGroup> GroupAction<G> for TotalSpace<G> {
    fn act_by(&self, group: &G, g: &G::Simplex, x: &Self::Simplex) -> Self::Simplex {
        let mut comps = x.comps.clone();
        comps[0] = group.multiply(g, &comps[0]);
        BundleSimplex { comps }
    }
}

/// `G` acts trivially on the base.
impl<G: SimplicialGroup> GroupAction<G> for ClassifyingSpace<G> {
    fn act_by(&self, _group: &G, _g: &G::Simplex, x: &Self::Simplex) -> Self::Simplex {
        x.clone()
    }
}

/// The universal `G`-bundle with its extra degeneracy `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalBundle<G> {
    pub total: TotalSpace<G>,
    pub base: ClassifyingSpace<G>,
}

impl<G: SimplicialGroup> UniversalBundle<G> {
    pub fn new(group: G) -> Self {
        UniversalBundle {
            total: TotalSpace { group: group.clone() },
            base: ClassifyingSpace { group },
        }
    }

    pub fn group(&self) -> &G {
        &self.total.group
    }

    /// `e_0`.
    pub fn basepoint(&self) -> BundleSimplex<G::Simplex> {
        BundleSimplex {
            comps: vec![self.group().identity(0)],
        }
    }

    /// The unique vertex of the reduced space `W̄G`.
    pub fn base_vertex(&self) -> ClassifyingSimplex<G::Simplex> {
        ClassifyingSimplex { comps: Vec::new() }
    }

    pub fn project(&self, e: &BundleSimplex<G::Simplex>) -> ClassifyingSimplex<G::Simplex> {
        ClassifyingSimplex {
            comps: e.comps[1..].to_vec(),
        }
    }

    /// The extra degeneracy `S: EG_p → EG_{p+1}`.
    pub fn extra_degeneracy(&self, e: &BundleSimplex<G::Simplex>) -> BundleSimplex<G::Simplex> {
        let p = e.comps.len() - 1;
        let mut comps = Vec::with_capacity(p + 2);
        comps.push(self.group().identity(p + 1));
        comps.extend(e.comps.iter().cloned());
        BundleSimplex { comps }
    }

    pub fn act(&self, g: &G::Simplex, e: &BundleSimplex<G::Simplex>) -> BundleSimplex<G::Simplex> {
        self.total.act_by(self.group(), g, e)
    }

    /// The orbit map `g ↦ g·e_0`, which in degree `p` is `(g, 1, ..., 1)`.
    pub fn fibre_simplex(&self, g: &G::Simplex) -> BundleSimplex<G::Simplex> {
        let p = g.dim();
        let mut comps = vec![g.clone()];
        comps.extend((0..p).map(|j| self.group().identity(p - 1 - j)));
        BundleSimplex { comps }
    }
}
