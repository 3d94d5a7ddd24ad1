use super::{Cell, FiniteSimplicialSet, MonotoneMap, SimplicialSet};
use crate::lincomb::Graded;

/// A simplex of `X × Y`: two simplices of equal dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProdSimplex<A, B>(pub A, pub B);

impl<A: Cell, B: Cell> Graded for ProdSimplex<A, B> {
    fn degree(&self) -> i64 {
        debug_assert_eq!(self.0.dim(), self.1.dim());
        self.0.degree()
    }
}

impl<A: Cell, B: Cell> Cell for ProdSimplex<A, B> {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Product<X, Y> {
    pub left: X,
    pub right: Y,
}

impl<X, Y> Product<X, Y> {
    pub fn new(left: X, right: Y) -> Self {
        Product { left, right }
    }
}

impl<X: SimplicialSet, Y: SimplicialSet> SimplicialSet for Product<X, Y> {
    type Simplex = ProdSimplex<X::Simplex, Y::Simplex>;

    fn face(&self, x: &Self::Simplex, i: usize) -> Self::Simplex {
        ProdSimplex(self.left.face(&x.0, i), self.right.face(&x.1, i))
    }

    fn degeneracy(&self, x: &Self::Simplex, i: usize) -> Self::Simplex {
        ProdSimplex(self.left.degeneracy(&x.0, i), self.right.degeneracy(&x.1, i))
    }

    fn is_degenerate_at(&self, x: &Self::Simplex, i: usize) -> bool {
        self.left.is_degenerate_at(&x.0, i) && self.right.is_degenerate_at(&x.1, i)
    }

    fn act(&self, x: &Self::Simplex, nu: &MonotoneMap) -> Self::Simplex {
        ProdSimplex(self.left.act(&x.0, nu), self.right.act(&x.1, nu))
    }
}

impl<X: FiniteSimplicialSet, Y: FiniteSimplicialSet> FiniteSimplicialSet for Product<X, Y> {
    fn nondegenerate(&self, dim: usize) -> Vec<Self::Simplex> {
        let ys = self.right.all_simplices(dim);
        let mut out = Vec::new();
        for x in self.left.all_simplices(dim) {
            for y in &ys {
                let s = ProdSimplex(x.clone(), y.clone());
                if !self.is_degenerate(&s) {
                    out.push(s);
                }
            }
        }
        out.sort();
        out
    }

    fn all_simplices(&self, dim: usize) -> Vec<Self::Simplex> {
        let ys = self.right.all_simplices(dim);
        let mut out = Vec::new();
        for x in self.left.all_simplices(dim) {
            for y in &ys {
                out.push(ProdSimplex(x.clone(), y.clone()));
            }
        }
        out
    }
}
