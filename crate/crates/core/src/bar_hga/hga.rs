//! Homotopy Gerstenhaber structures: operations `E_k: A ⊗ A^{⊗k} → A`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use super::algebra::{Element, Gen, PresentedDGA, UNIT};
use crate::chains::{coboundary, cup_product, Cochain};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::simplicial::{Cell, FiniteSimplicialSet};
use crate::surjections::e_k;

type OpRule = Arc<dyn Fn(Gen, &[Gen]) -> Result<Element> + Send + Sync>;

#[derive(Clone)]
enum Ops {
    Trivial,
    Rule(OpRule),
}

/// An augmented dga with operations `E_k`, `k ≥ 1`.
#[derive(Clone)]
pub struct Hga {
    base: PresentedDGA,
    ops: Ops,
}

impl fmt::Debug for Hga {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.is_trivial() { "trivial" } else { "rule" };
        write!(f, "Hga({:?}, {kind})", self.base)
    }
}

impl Hga {
    /// A commutative dga with `E_k = 0`.
    pub fn trivial(base: PresentedDGA) -> Result<Self> {
        if let Some((a, b)) = base.commutativity_witness() {
            return Err(Error::NotCommutative(format!(
                "{}·{} ≠ ±{}·{}",
                base.label(a),
                base.label(b),
                base.label(b),
                base.label(a)
            )));
        }
        Ok(Hga { base, ops: Ops::Trivial })
    }

    /// Operations given on basis elements of the augmentation ideal.
    pub fn from_rule<F>(base: PresentedDGA, rule: F) -> Self
    where
        F: Fn(Gen, &[Gen]) -> Result<Element> + Send + Sync + 'static,
    {
        Hga {
            base,
            ops: Ops::Rule(Arc::new(rule)),
        }
    }

    /// The normalized cochains of a simplicial set through degree `top`,
    /// augmented at its first vertex, with `E_k` the transposed interval cuts.
    pub fn cochains<X>(space: &X, top: usize) -> Result<Self>
    where
        X: FiniteSimplicialSet + Clone + Send + Sync + 'static,
    {
        build_cochain_hga(space, top, false)
    }

    /// As [`Hga::cochains`] for a space with no nondegenerate simplices above
    /// `dimension`, so that everything above is zero.
    pub fn cochains_of_finite<X>(space: &X, dimension: usize) -> Result<Self>
    where
        X: FiniteSimplicialSet + Clone + Send + Sync + 'static,
    {
        for n in dimension + 1..=2 * dimension + 2 {
            if !space.nondegenerate(n).is_empty() {
                return Err(Error::Invalid(format!("the space has nondegenerate {n}-simplices")));
            }
        }
        build_cochain_hga(space, dimension, true)
    }

    pub fn base(&self) -> &PresentedDGA {
        &self.base
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self.ops, Ops::Trivial)
    }

    /// `E_k(a; b_1, ..., b_k)` on basis elements.
    pub fn e(&self, a: Gen, bs: &[Gen]) -> Result<Element> {
        if bs.is_empty() {
            return Ok(Element::basis(a));
        }
        match &self.ops {
            Ops::Trivial => Ok(Element::zero()),
            Ops::Rule(f) => f(a, bs),
        }
    }

    /// `E_k` extended multilinearly.
    pub fn e_elements(&self, a: &Element, bs: &[&Element]) -> Result<Element> {
        let mut out = Element::zero();
        let mut stack: Vec<(Vec<Gen>, i64)> = vec![(Vec::new(), 1)];
        for b in bs {
            let mut next = Vec::new();
            for (prefix, c) in &stack {
                for (g, x) in *b {
                    let mut p = prefix.clone();
                    p.push(*g);
                    next.push((p, c * x));
                }
            }
            stack = next;
        }
        for (g, x) in a {
            for (gs, c) in &stack {
                out.add_scaled(&self.e(*g, gs)?, &(x * c));
            }
        }
        Ok(out)
    }

    /// `a ∪₁ b = -E_1(a; b)`.
    pub fn cup_one(&self, a: &Element, b: &Element) -> Result<Element> {
        Ok(-self.e_elements(a, &[b])?)
    }
}

fn build_cochain_hga<X>(space: &X, top: usize, complete: bool) -> Result<Hga>
where
    X: FiniteSimplicialSet + Clone + Send + Sync + 'static,
{
    let simplices: Arc<Vec<Vec<X::Simplex>>> = Arc::new((0..=top).map(|n| space.nondegenerate(n)).collect());
    if simplices[0].is_empty() {
        return Err(Error::Invalid("the space has no vertices".into()));
    }
    let labels: Vec<Vec<String>> = simplices
        .iter()
        .enumerate()
        .map(|(n, xs)| {
            xs.iter()
                .enumerate()
                .map(|(i, x)| if n == 0 && i == 0 { "1".to_string() } else { format!("{x:?}*") })
                .collect()
        })
        .collect();
    let conv = Converter { simplices: simplices.clone() };
    let d = |g: Gen| {
        let c = coboundary(space, &conv.cochain(g));
        conv.coordinates(&c, g.degree + 1)
    };
    let mul = |a: Gen, b: Gen| {
        let c = cup_product(space, &conv.cochain(a), &conv.cochain(b));
        conv.coordinates(&c, a.degree + b.degree)
    };
    let base = PresentedDGA::from_rules(format!("C*({top})"), labels, complete, Some(&d), &mul)?;
    let space = space.clone();
    let memo: Mutex<HashMap<(Gen, Vec<Gen>), Element>> = Mutex::new(HashMap::new());
    let window = top as i64;
    let rule = move |a: Gen, bs: &[Gen]| -> Result<Element> {
        let key = (a, bs.to_vec());
        if let Some(v) = memo.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let degree = a.degree + bs.iter().map(|b| b.degree).sum::<i64>() - bs.len() as i64;
        let value = if degree < 0 || a == UNIT || bs.contains(&UNIT) {
            Element::zero()
        } else if degree > window {
            if !complete {
                return Err(Error::TruncationExceeded { needed: degree, window });
            }
            Element::zero()
        } else {
            let alpha = conv.cochain(a);
            let betas: Vec<_> = bs.iter().map(|&b| conv.cochain(b)).collect();
            let refs: Vec<_> = betas.iter().collect();
            conv.coordinates(&e_k(&space, &alpha, &refs)?, degree)
        };
        memo.lock().unwrap().insert(key, value.clone());
        Ok(value)
    };
    Ok(Hga::from_rule(base, rule))
}

/// Passes between cochains and coordinates in the adapted basis: in degree 0
/// the unit is the sum of all vertex duals and the other basis elements are
/// the duals of the remaining vertices.
struct Converter<S: Cell> {
    simplices: Arc<Vec<Vec<S>>>,
}

impl<S: Cell> Converter<S> {
    fn cochain(&self, g: Gen) -> Cochain<S, i64> {
        let n = g.degree as usize;
        if g == UNIT {
            let all: LinComb<S, i64> = self.simplices[0].iter().map(|v| (v.clone(), 1)).collect();
            return Cochain::from_values(0, all);
        }
        Cochain::dual_basis(self.simplices[n][g.index].clone())
    }

    fn coordinates(&self, c: &Cochain<S, i64>, degree: i64) -> Element {
        if degree < 0 || degree as usize >= self.simplices.len() {
            return Element::zero();
        }
        let n = degree as usize;
        let values: Vec<i64> = self.simplices[n].iter().map(|x| c.on_simplex(x)).collect();
        if n == 0 {
            let base = values[0];
            let mut out = Element::from_term(UNIT, base);
            for (i, v) in values.iter().enumerate().skip(1) {
                out.add_term(Gen::new(0, i), v - base);
            }
            return out;
        }
        values.into_iter().enumerate().map(|(i, v)| (Gen::new(degree, i), v)).collect()
    }
}
