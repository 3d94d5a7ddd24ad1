//! Cochains as functionals on nondegenerate simplices.
//!
//! Spaces such as `BT` have infinitely many simplices per degree, so a cochain
//! is either a finite combination of dual basis elements or an evaluation rule.

use std::fmt;
use std::sync::Arc;

use super::{aw_diagonal, boundary, Chain, Functional, Tensor};
use crate::lincomb::LinComb;
use crate::ring::{sign, Ring};
use crate::simplicial::{Cell, FiniteSimplicialSet, SimplicialSet};

type Rule<S, R> = Arc<dyn Fn(&S) -> R + Send + Sync>;

#[derive(Clone)]
pub struct Cochain<S: Ord, R> {
    degree: i64,
    values: LinComb<S, R>,
    rule: Option<Rule<S, R>>,
}

impl<S: Ord + fmt::Debug, R: fmt::Debug> fmt::Debug for Cochain<S, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rule {
            Some(_) => write!(f, "Cochain(deg {}, rule)", self.degree),
            None => write!(f, "Cochain(deg {}, {:?})", self.degree, self.values),
        }
    }
}

impl<S: Cell, R: Ring> Cochain<S, R> {
    /// The dual-basis combination `Σ c_x x*`.
    pub fn from_values(degree: usize, values: LinComb<S, R>) -> Self {
        let values = values.filter(|x| x.dim() == degree);
        Cochain {
            degree: degree as i64,
            values,
            rule: None,
        }
    }

    pub fn dual_basis(x: S) -> Self {
        let d = x.dim();
        Self::from_values(d, LinComb::basis(x))
    }

    pub fn zero(degree: usize) -> Self {
        Self::from_values(degree, LinComb::zero())
    }

    /// The zero cochain in any degree, including negative ones.
    pub fn vanishing(degree: i64) -> Self {
        Cochain {
            degree,
            values: LinComb::zero(),
            rule: None,
        }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// The value on a single nondegenerate simplex.
    pub fn on_simplex(&self, x: &S) -> R {
        if x.dim() as i64 != self.degree {
            return R::zero();
        }
        match &self.rule {
            Some(f) => f(x),
            None => self.values.coefficient(x),
        }
    }

    pub fn evaluate(&self, c: &Chain<S, R>) -> R {
        match &self.rule {
            None => self.values.dot(c),
            Some(_) => c
                .iter()
                .fold(R::zero(), |acc, (x, a)| acc + self.on_simplex(x) * a.clone()),
        }
    }

    /// Tabulates the cochain on the nondegenerate simplices of a finite space.
    pub fn tabulate<X>(&self, space: &X) -> LinComb<S, R>
    where
        X: FiniteSimplicialSet<Simplex = S> + ?Sized,
    {
        if self.degree < 0 {
            return LinComb::zero();
        }
        space
            .nondegenerate(self.degree as usize)
            .into_iter()
            .map(|x| {
                let v = self.on_simplex(&x);
                (x, v)
            })
            .collect()
    }

    pub fn to_functional<X>(&self, space: &X) -> Functional<S, R>
    where
        X: FiniteSimplicialSet<Simplex = S> + ?Sized,
    {
        Functional {
            degree: self.degree,
            values: self.tabulate(space),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "adding cochains of different degrees");
        if self.rule.is_none() && other.rule.is_none() {
            return Cochain {
                degree: self.degree,
                values: &self.values + &other.values,
                rule: None,
            };
        }
        let (a, b) = (self.clone(), other.clone());
        Cochain {
            degree: self.degree,
            values: LinComb::zero(),
            rule: Some(Arc::new(move |x| a.on_simplex(x) + b.on_simplex(x))),
        }
    }

    pub fn scale(&self, r: R) -> Self {
        match &self.rule {
            None => Cochain {
                degree: self.degree,
                values: self.values.scale(&r),
                rule: None,
            },
            Some(f) => {
                let f = f.clone();
                Cochain {
                    degree: self.degree,
                    values: LinComb::zero(),
                    rule: Some(Arc::new(move |x| f(x) * r.clone())),
                }
            }
        }
    }
}

/// A cochain given by an evaluation rule on nondegenerate `degree`-simplices.
pub fn cochain_from_fn<S, R, F>(degree: usize, f: F) -> Cochain<S, R>
where
    S: Cell,
    R: Ring,
    F: Fn(&S) -> R + Send + Sync + 'static,
{
    Cochain {
        degree: degree as i64,
        values: LinComb::zero(),
        rule: Some(Arc::new(f)),
    }
}

/// `(dγ)(c) = -(-1)^{|γ|} γ(dc)`.
pub fn coboundary<X, R>(space: &X, gamma: &Cochain<X::Simplex, R>) -> Cochain<X::Simplex, R>
where
    X: SimplicialSet + Clone + Send + Sync + 'static,
    R: Ring,
{
    let space = space.clone();
    let g = gamma.clone();
    let s: R = -sign::<R>(gamma.degree);
    Cochain {
        degree: gamma.degree + 1,
        values: LinComb::zero(),
        rule: Some(Arc::new(move |x| {
            let dx = boundary(&space, &Chain::basis(x.clone()));
            s.clone() * g.evaluate(&dx)
        })),
    }
}

/// Evaluates `γ_1 ⊗ ... ⊗ γ_n` on a tensor:
/// `(γ_1 ⊗ ... ⊗ γ_n)(x_1 ⊗ ... ⊗ x_n) = (-1)^{Σ_{i<j} |γ_j||x_i|} Π γ_i(x_i)`.
pub fn evaluate_tensor<S: Cell, R: Ring>(gammas: &[&Cochain<S, R>], t: &Tensor<S, R>) -> R {
    let mut acc = R::zero();
    'terms: for (factors, a) in t {
        if factors.len() != gammas.len() {
            continue;
        }
        let mut value = a.clone();
        let mut exponent = 0i64;
        for (i, (g, x)) in gammas.iter().zip(factors).enumerate() {
            if g.degree != x.dim() as i64 {
                continue 'terms;
            }
            let v = g.on_simplex(x);
            if v.is_zero() {
                continue 'terms;
            }
            value = value * v;
            for h in &gammas[i + 1..] {
                exponent += h.degree * g.degree;
            }
        }
        acc = acc + sign::<R>(exponent) * value;
    }
    acc
}

/// `α ∪ β`, the transpose of the Alexander–Whitney diagonal applied to `α ⊗ β`.
pub fn cup_product<X, R>(space: &X, alpha: &Cochain<X::Simplex, R>, beta: &Cochain<X::Simplex, R>) -> Cochain<X::Simplex, R>
where
    X: SimplicialSet + Clone + Send + Sync + 'static,
    R: Ring,
{
    if alpha.degree + beta.degree < 0 {
        return Cochain::vanishing(alpha.degree + beta.degree);
    }
    let space = space.clone();
    let (a, b) = (alpha.clone(), beta.clone());
    cochain_from_fn((alpha.degree + beta.degree) as usize, move |x: &X::Simplex| {
        let t = aw_diagonal(&space, &Chain::basis(x.clone()));
        evaluate_tensor(&[&a, &b], &t)
    })
}
