use std::collections::BTreeSet;

use super::{Cell, FiniteSimplicialSet, MonotoneMap, SimplicialSet};
use crate::lincomb::Graded;

/// A simplex of an ordered simplicial complex: a weakly increasing vertex list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeltaSimplex {
    pub vertices: Vec<usize>,
}

impl DeltaSimplex {
    pub fn new(vertices: Vec<usize>) -> Self {
        assert!(!vertices.is_empty(), "a simplex needs at least one vertex");
        debug_assert!(vertices.windows(2).all(|w| w[0] <= w[1]));
        DeltaSimplex { vertices }
    }
}

impl Graded for DeltaSimplex {
    fn degree(&self) -> i64 {
        self.vertices.len() as i64 - 1
    }
}

impl Cell for DeltaSimplex {}

fn delta_face(x: &DeltaSimplex, i: usize) -> DeltaSimplex {
    let mut v = x.vertices.clone();
    v.remove(i);
    DeltaSimplex { vertices: v }
}

fn delta_degeneracy(x: &DeltaSimplex, i: usize) -> DeltaSimplex {
    let mut v = x.vertices.clone();
    v.insert(i, x.vertices[i]);
    DeltaSimplex { vertices: v }
}

fn delta_act(x: &DeltaSimplex, nu: &MonotoneMap) -> DeltaSimplex {
    DeltaSimplex {
        vertices: nu.values().iter().map(|&j| x.vertices[j]).collect(),
    }
}

/// The standard simplex `Δ^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StandardSimplex {
    pub n: usize,
}

impl StandardSimplex {
    pub fn new(n: usize) -> Self {
        StandardSimplex { n }
    }

    /// The top nondegenerate simplex `(0, 1, ..., n)`.
    pub fn top(&self) -> DeltaSimplex {
        DeltaSimplex::new((0..=self.n).collect())
    }
}

impl SimplicialSet for StandardSimplex {
    type Simplex = DeltaSimplex;

    fn face(&self, x: &DeltaSimplex, i: usize) -> DeltaSimplex {
        delta_face(x, i)
    }

    fn degeneracy(&self, x: &DeltaSimplex, i: usize) -> DeltaSimplex {
        delta_degeneracy(x, i)
    }

    fn is_degenerate_at(&self, x: &DeltaSimplex, i: usize) -> bool {
        i + 1 < x.vertices.len() && x.vertices[i] == x.vertices[i + 1]
    }

    fn act(&self, x: &DeltaSimplex, nu: &MonotoneMap) -> DeltaSimplex {
        delta_act(x, nu)
    }
}

impl FiniteSimplicialSet for StandardSimplex {
    fn nondegenerate(&self, dim: usize) -> Vec<DeltaSimplex> {
        super::subsets(self.n + 1, dim + 1)
            .into_iter()
            .map(DeltaSimplex::new)
            .collect()
    }

    fn all_simplices(&self, dim: usize) -> Vec<DeltaSimplex> {
        // weakly increasing sequences of length dim+1 in 0..=n
        let mut out = Vec::new();
        let mut cur = vec![0usize; dim + 1];
        loop {
            out.push(DeltaSimplex::new(cur.clone()));
            let mut k = dim + 1;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if cur[k] < self.n {
                    let v = cur[k] + 1;
                    for c in cur.iter_mut().skip(k) {
                        *c = v;
                    }
                    break;
                }
            }
        }
    }
}

/// A finite simplicial complex on ordered vertices, viewed as a simplicial set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplexSpace {
    faces: BTreeSet<Vec<usize>>,
}

impl SimplicialComplexSpace {
    /// The downward closure of `facets`; each facet is sorted first.
    pub fn from_facets(facets: &[Vec<usize>]) -> Self {
        let mut faces = BTreeSet::new();
        for f in facets {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            for k in 1..=f.len() {
                for idx in super::subsets(f.len(), k) {
                    faces.insert(idx.iter().map(|&i| f[i]).collect::<Vec<_>>());
                }
            }
        }
        SimplicialComplexSpace { faces }
    }

    /// The boundary of `Δ^n`.
    pub fn sphere_boundary(n: usize) -> Self {
        let facets: Vec<Vec<usize>> = (0..=n)
            .map(|skip| (0..=n).filter(|&v| v != skip).collect())
            .collect();
        Self::from_facets(&facets)
    }

    pub fn contains(&self, x: &DeltaSimplex) -> bool {
        let mut v = x.vertices.clone();
        v.dedup();
        self.faces.contains(&v)
    }
}

impl SimplicialSet for SimplicialComplexSpace {
    type Simplex = DeltaSimplex;

    fn face(&self, x: &DeltaSimplex, i: usize) -> DeltaSimplex {
        delta_face(x, i)
    }

    fn degeneracy(&self, x: &DeltaSimplex, i: usize) -> DeltaSimplex {
        delta_degeneracy(x, i)
    }

    fn is_degenerate_at(&self, x: &DeltaSimplex, i: usize) -> bool {
        i + 1 < x.vertices.len() && x.vertices[i] == x.vertices[i + 1]
    }

    fn act(&self, x: &DeltaSimplex, nu: &MonotoneMap) -> DeltaSimplex {
        delta_act(x, nu)
    }
}

impl FiniteSimplicialSet for SimplicialComplexSpace {
    fn nondegenerate(&self, dim: usize) -> Vec<DeltaSimplex> {
        self.faces
            .iter()
            .filter(|f| f.len() == dim + 1)
            .map(|f| DeltaSimplex::new(f.clone()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::check_simplicial_identities;

    #[test]
    fn counts() {
        let d = StandardSimplex::new(3);
        assert_eq!(d.nondegenerate(1).len(), 6);
        assert_eq!(d.nondegenerate(4).len(), 0);
        // multisets of size 3 from 4 vertices
        assert_eq!(d.all_simplices(2).len(), 20);
        assert_eq!(SimplicialComplexSpace::sphere_boundary(3).nondegenerate(2).len(), 4);
        assert_eq!(SimplicialComplexSpace::sphere_boundary(3).nondegenerate(3).len(), 0);
    }

    #[test]
    fn identities_hold_exhaustively() {
        for n in 0..=3 {
            let d = StandardSimplex::new(n);
            for dim in 0..=5 {
                for x in d.all_simplices(dim) {
                    check_simplicial_identities(&d, &x).unwrap();
                }
            }
        }
    }

    #[test]
    fn default_all_simplices_agrees() {
        let d = StandardSimplex::new(2);
        for dim in 0..=4 {
            let mut fast = d.all_simplices(dim);
            let mut slow = Vec::new();
            for base_dim in 0..=dim {
                for pos in crate::simplicial::subsets(dim, dim - base_dim) {
                    for b in d.nondegenerate(base_dim) {
                        let mut y = b.clone();
                        for &j in &pos {
                            y = d.degeneracy(&y, j);
                        }
                        slow.push(y);
                    }
                }
            }
            fast.sort();
            slow.sort();
            assert_eq!(fast, slow);
        }
    }
}
