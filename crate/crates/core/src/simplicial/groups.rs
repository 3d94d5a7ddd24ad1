use super::{Cell, FiniteSimplicialSet, MonotoneMap, SimplicialSet};
use crate::lincomb::Graded;

/// A simplicial group. All groups shipped here are abelian.
pub trait SimplicialGroup: SimplicialSet + Clone {
    fn identity(&self, dim: usize) -> Self::Simplex;

    fn multiply(&self, a: &Self::Simplex, b: &Self::Simplex) -> Self::Simplex;

    fn invert(&self, a: &Self::Simplex) -> Self::Simplex;

    fn is_identity(&self, a: &Self::Simplex) -> bool {
        *a == self.identity(a.dim())
    }
}

/// A `p`-simplex of the nerve of `ℤ^rank`: `p` vectors `[g_1 | ... | g_p]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusSimplex {
    pub rank: usize,
    pub entries: Vec<Vec<i64>>,
}

impl TorusSimplex {
    pub fn new(rank: usize, entries: Vec<Vec<i64>>) -> Self {
        assert!(entries.iter().all(|g| g.len() == rank));
        TorusSimplex { rank, entries }
    }

    /// The loop `[e_i]` wrapping once around circle `i`.
    pub fn unit_loop(rank: usize, i: usize) -> Self {
        let mut g = vec![0; rank];
        g[i] = 1;
        TorusSimplex {
            rank,
            entries: vec![g],
        }
    }

    /// Coordinates used by some entry.
    pub fn support(&self) -> Vec<usize> {
        (0..self.rank)
            .filter(|&c| self.entries.iter().any(|g| g[c] != 0))
            .collect()
    }
}

impl Graded for TorusSimplex {
    fn degree(&self) -> i64 {
        self.entries.len() as i64
    }
}

impl Cell for TorusSimplex {}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// The simplicial torus `(Bℤ)^rank`, realized as the nerve of `ℤ^rank`.
///
/// It is reduced, so every 1-simplex is a loop at the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorusGroup {
    pub rank: usize,
}

impl TorusGroup {
    pub fn new(rank: usize) -> Self {
        TorusGroup { rank }
    }
}

/// `Bℤ`.
pub fn bar_circle() -> TorusGroup {
    TorusGroup::new(1)
}

/// The product of one circle per vertex.
pub fn torus(vertices: usize) -> TorusGroup {
    TorusGroup::new(vertices)
}

impl SimplicialSet for TorusGroup {
    type Simplex = TorusSimplex;

    fn face(&self, x: &TorusSimplex, i: usize) -> TorusSimplex {
        let p = x.entries.len();
        let mut e = x.entries.clone();
        if i == 0 {
            e.remove(0);
        } else if i == p {
            e.pop();
        } else {
            let merged = add(&e[i - 1], &e[i]);
            e[i - 1] = merged;
            e.remove(i);
        }
        TorusSimplex { rank: x.rank, entries: e }
    }

    fn degeneracy(&self, x: &TorusSimplex, i: usize) -> TorusSimplex {
        let mut e = x.entries.clone();
        e.insert(i, vec![0; x.rank]);
        TorusSimplex { rank: x.rank, entries: e }
    }

    fn is_degenerate_at(&self, x: &TorusSimplex, i: usize) -> bool {
        x.entries.get(i).is_some_and(|g| g.iter().all(|&c| c == 0))
    }

    fn act(&self, x: &TorusSimplex, nu: &MonotoneMap) -> TorusSimplex {
        let v = nu.values();
        let entries = v
            .windows(2)
            .map(|w| {
                let mut g = vec![0; x.rank];
                for h in &x.entries[w[0]..w[1]] {
                    for (a, b) in g.iter_mut().zip(h) {
                        *a += b;
                    }
                }
                g
            })
            .collect();
        TorusSimplex { rank: x.rank, entries }
    }
}

impl SimplicialGroup for TorusGroup {
    fn identity(&self, dim: usize) -> TorusSimplex {
        TorusSimplex {
            rank: self.rank,
            entries: vec![vec![0; self.rank]; dim],
        }
    }

    fn multiply(&self, a: &TorusSimplex, b: &TorusSimplex) -> TorusSimplex {
        TorusSimplex {
            rank: a.rank,
            entries: a.entries.iter().zip(&b.entries).map(|(g, h)| add(g, h)).collect(),
        }
    }

    fn invert(&self, a: &TorusSimplex) -> TorusSimplex {
        TorusSimplex {
            rank: a.rank,
            entries: a
                .entries
                .iter()
                .map(|g| g.iter().map(|c| -c).collect())
                .collect(),
        }
    }

    fn is_identity(&self, a: &TorusSimplex) -> bool {
        a.entries.iter().all(|g| g.iter().all(|&c| c == 0))
    }
}

/// A simplex of the constant simplicial group `ℤ/m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConstantSimplex {
    pub dim: usize,
    pub g: u64,
}

impl Graded for ConstantSimplex {
    fn degree(&self) -> i64 {
        self.dim as i64
    }
}

impl Cell for ConstantSimplex {}

/// The discrete group `ℤ/m` as a constant simplicial group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstantCyclic {
    pub modulus: u64,
}

impl ConstantCyclic {
    pub fn new(modulus: u64) -> Self {
        assert!(modulus >= 1);
        ConstantCyclic { modulus }
    }

    pub fn element(&self, dim: usize, g: u64) -> ConstantSimplex {
        ConstantSimplex {
            dim,
            g: g % self.modulus,
        }
    }
}

impl SimplicialSet for ConstantCyclic {
    type Simplex = ConstantSimplex;

    fn face(&self, x: &ConstantSimplex, _i: usize) -> ConstantSimplex {
        ConstantSimplex { dim: x.dim - 1, g: x.g }
    }

    fn degeneracy(&self, x: &ConstantSimplex, _i: usize) -> ConstantSimplex {
        ConstantSimplex { dim: x.dim + 1, g: x.g }
    }

    fn is_degenerate_at(&self, x: &ConstantSimplex, i: usize) -> bool {
        i < x.dim
    }

    fn act(&self, x: &ConstantSimplex, nu: &MonotoneMap) -> ConstantSimplex {
        ConstantSimplex {
            dim: nu.source(),
            g: x.g,
        }
    }
}

impl FiniteSimplicialSet for ConstantCyclic {
    fn nondegenerate(&self, dim: usize) -> Vec<ConstantSimplex> {
        if dim == 0 {
            (0..self.modulus).map(|g| self.element(0, g)).collect()
        } else {
            Vec::new()
        }
    }
}

impl SimplicialGroup for ConstantCyclic {
    fn identity(&self, dim: usize) -> ConstantSimplex {
        ConstantSimplex { dim, g: 0 }
    }

    fn multiply(&self, a: &ConstantSimplex, b: &ConstantSimplex) -> ConstantSimplex {
        ConstantSimplex {
            dim: a.dim,
            g: (a.g + b.g) % self.modulus,
        }
    }

    fn invert(&self, a: &ConstantSimplex) -> ConstantSimplex {
        ConstantSimplex {
            dim: a.dim,
            g: (self.modulus - a.g) % self.modulus,
        }
    }
}


/// A simplicial left action of `G`.
pub trait GroupAction<G: SimplicialGroup>: SimplicialSet {
    fn act_by(&self, group: &G, g: &G::Simplex, x: &Self::Simplex) -> Self::Simplex;
}

impl GroupAction<TorusGroup> for TorusGroup {
    fn act_by(&self, group: &TorusGroup, g: &TorusSimplex, x: &TorusSimplex) -> TorusSimplex {
        group.multiply(g, x)
    }
}

impl GroupAction<ConstantCyclic> for ConstantCyclic {
    fn act_by(&self, group: &ConstantCyclic, g: &ConstantSimplex, x: &ConstantSimplex) -> ConstantSimplex {
        group.multiply(g, x)
    }
}

/// `G` acting on the first factor only.
impl<G, X, Y> GroupAction<G> for super::Product<X, Y>
where
    G: SimplicialGroup,
    X: GroupAction<G>,
    Y: SimplicialSet,
{
    fn act_by(&self, group: &G, g: &G::Simplex, x: &Self::Simplex) -> Self::Simplex {
        super::ProdSimplex(self.left.act_by(group, g, &x.0), x.1.clone())
    }
}
