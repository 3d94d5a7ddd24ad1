//! Graded maps between free graded modules, with the Koszul conventions for
//! tensor products, transposes and (de)suspension.

use std::fmt;
use std::sync::Arc;

use crate::lincomb::{Graded, LinComb};
use crate::ring::{koszul, sign, Ring};

/// A basis element of a free graded module: a label with a degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisElem {
    pub degree: i64,
    pub label: u32,
}

impl Graded for BasisElem {
    fn degree(&self) -> i64 {
        self.degree
    }
}

/// `s^shift k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shifted<K> {
    pub shift: i64,
    pub inner: K,
}

impl<K: Graded> Graded for Shifted<K> {
    fn degree(&self) -> i64 {
        self.inner.degree() + self.shift
    }
}

type Rule<A, B, R> = Arc<dyn Fn(&A) -> LinComb<B, R> + Send + Sync>;

/// A homogeneous linear map, given on basis elements.
#[derive(Clone)]
pub struct GradedMap<A, B: Ord, R> {
    degree: i64,
    name: String,
    rule: Rule<A, B, R>,
}

impl<A, B: Ord, R> fmt::Debug for GradedMap<A, B, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (degree {})", self.name, self.degree)
    }
}

impl<A, B, R> GradedMap<A, B, R>
where
    A: Ord + Clone + Graded + 'static,
    B: Ord + Clone + Graded + 'static,
    R: Ring,
{
    pub fn new<F>(name: impl Into<String>, degree: i64, rule: F) -> Self
    where
        F: Fn(&A) -> LinComb<B, R> + Send + Sync + 'static,
    {
        GradedMap {
            degree,
            name: name.into(),
            rule: Arc::new(rule),
        }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn on_basis(&self, a: &A) -> LinComb<B, R> {
        (self.rule)(a)
    }

    pub fn apply(&self, c: &LinComb<A, R>) -> LinComb<B, R> {
        c.map_linear(|a| (self.rule)(a))
    }

    pub fn scaled(&self, r: R) -> Self {
        let rule = self.rule.clone();
        GradedMap {
            degree: self.degree,
            name: self.name.clone(),
            rule: Arc::new(move |a| rule(a).scale(&r)),
        }
    }

    /// `self ∘ g`.
    pub fn compose<Z>(&self, g: &GradedMap<Z, A, R>) -> GradedMap<Z, B, R>
    where
        Z: Ord + Clone + Graded + 'static,
    {
        let f = self.rule.clone();
        let g2 = g.rule.clone();
        GradedMap {
            degree: self.degree + g.degree,
            name: format!("{}∘{}", self.name, g.name),
            rule: Arc::new(move |z| g2(z).map_linear(|a| f(a))),
        }
    }

    /// `(f ⊗ g)(a ⊗ c) = (-1)^{|g||a|} f(a) ⊗ g(c)`.
    pub fn tensor<C, D>(&self, g: &GradedMap<C, D, R>) -> GradedMap<(A, C), (B, D), R>
    where
        C: Ord + Clone + Graded + 'static,
        D: Ord + Clone + Graded + 'static,
    {
        let f = self.rule.clone();
        let g2 = g.rule.clone();
        let gd = g.degree;
        GradedMap {
            degree: self.degree + g.degree,
            name: format!("{}⊗{}", self.name, g.name),
            rule: Arc::new(move |(a, c): &(A, C)| {
                let s: R = sign(gd * a.degree());
                let fa = f(a);
                let gc = g2(c);
                let mut out = LinComb::zero();
                for (b, x) in &fa {
                    for (d, y) in &gc {
                        out.add_term((b.clone(), d.clone()), s.clone() * x.clone() * y.clone());
                    }
                }
                out
            }),
        }
    }
}

impl<A, R> GradedMap<A, A, R>
where
    A: Ord + Clone + Graded + 'static,
    R: Ring,
{
    pub fn identity() -> Self {
        GradedMap::new("1", 0, |a: &A| LinComb::basis(a.clone()))
    }
}

impl<A, R> GradedMap<Shifted<A>, Shifted<A>, R>
where
    A: Ord + Clone + Graded + 'static,
    R: Ring,
{
    /// `s`, raising the shift by one.
    pub fn suspension() -> Self {
        GradedMap::new("s", 1, |a: &Shifted<A>| {
            LinComb::basis(Shifted {
                shift: a.shift + 1,
                inner: a.inner.clone(),
            })
        })
    }

    /// `s⁻¹`.
    pub fn desuspension() -> Self {
        GradedMap::new("s⁻¹", -1, |a: &Shifted<A>| {
            LinComb::basis(Shifted {
                shift: a.shift - 1,
                inner: a.inner.clone(),
            })
        })
    }

    /// The differential of the shifted complex: `d(s c) = -s(dc)` for every shift.
    pub fn shifted_differential(d: &GradedMap<A, A, R>) -> Self {
        let d = d.clone();
        GradedMap::new(format!("d[{}]", d.name), d.degree, move |a: &Shifted<A>| {
            let s: R = sign(a.shift * d.degree);
            d.on_basis(&a.inner).map_keys(|b| {
                Some((
                    Shifted {
                        shift: a.shift,
                        inner: b.clone(),
                    },
                    s.clone(),
                ))
            })
        })
    }
}

/// `T(b ⊗ c) = (-1)^{|b||c|} c ⊗ b`.
pub fn transposition<A, B, R>() -> GradedMap<(A, B), (B, A), R>
where
    A: Ord + Clone + Graded + 'static,
    B: Ord + Clone + Graded + 'static,
    R: Ring,
{
    GradedMap::new("T", 0, |(a, b): &(A, B)| {
        let s: R = sign(a.degree() * b.degree());
        LinComb::from_term((b.clone(), a.clone()), s)
    })
}

/// A homogeneous linear functional with finite support on a dual basis.
///
/// `degree` is the degree of the elements it can be nonzero on.
#[derive(Clone, Debug, PartialEq)]
pub struct Functional<K: Ord, R> {
    pub degree: i64,
    pub values: LinComb<K, R>,
}

impl<K: Ord + Clone + Graded, R: Ring> Functional<K, R> {
    pub fn new(degree: i64, values: LinComb<K, R>) -> Self {
        debug_assert!(values.keys().all(|k| k.degree() == degree));
        Functional { degree, values }
    }

    pub fn zero(degree: i64) -> Self {
        Functional {
            degree,
            values: LinComb::zero(),
        }
    }

    pub fn evaluate(&self, c: &LinComb<K, R>) -> R {
        self.values.dot(c)
    }

    pub fn on_basis(&self, k: &K) -> R {
        self.values.coefficient(k)
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_zero()
    }

    /// `(β ⊗ γ)(a ⊗ b) = (-1)^{|γ||a|} β(a) γ(b)`.
    pub fn tensor<L: Ord + Clone + Graded>(&self, other: &Functional<L, R>) -> Functional<(K, L), R> {
        let neg = koszul(other.degree, self.degree);
        let mut values = LinComb::zero();
        for (a, x) in &self.values {
            for (b, y) in &other.values {
                let v = x.clone() * y.clone();
                values.add_term((a.clone(), b.clone()), if neg { -v } else { v });
            }
        }
        Functional {
            degree: self.degree + other.degree,
            values,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        Functional {
            degree: self.degree,
            values: &self.values + &other.values,
        }
    }

    pub fn scale(&self, r: &R) -> Self {
        Functional {
            degree: self.degree,
            values: self.values.scale(r),
        }
    }
}

/// The transpose `ᵗf(γ) = (-1)^{|f||γ|} γ ∘ f`, tabulated on `source_basis`.
pub fn transpose<A, B, R>(f: &GradedMap<A, B, R>, gamma: &Functional<B, R>, source_basis: &[A]) -> Functional<A, R>
where
    A: Ord + Clone + Graded + 'static,
    B: Ord + Clone + Graded + 'static,
    R: Ring,
{
    let degree = gamma.degree - f.degree();
    let s: R = sign(f.degree() * gamma.degree);
    let mut values = LinComb::zero();
    for a in source_basis.iter().filter(|a| a.degree() == degree) {
        let v = gamma.evaluate(&f.on_basis(a));
        values.add_term(a.clone(), s.clone() * v);
    }
    Functional { degree, values }
}
