//! Degreewise finite augmented dgas given by structure tables.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homlin::{monomials_of_degree, Monomial};
use crate::lincomb::{Graded, LinComb};
use crate::ring::sign;

/// A basis element: the `index`-th basis vector in `degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Gen {
    pub degree: i64,
    pub index: usize,
}

impl Gen {
    pub const fn new(degree: i64, index: usize) -> Self {
        Gen { degree, index }
    }
}

impl Graded for Gen {
    fn degree(&self) -> i64 {
        self.degree
    }
}

/// The unit, and the coaugmentation of a coalgebra.
pub const UNIT: Gen = Gen::new(0, 0);

pub type Element = LinComb<Gen, i64>;

type DiffRule<'a> = &'a dyn Fn(Gen) -> Element;
type MulRule<'a> = &'a dyn Fn(Gen, Gen) -> Element;

/// A cohomologically graded augmented dga, finite rank in each degree, known
/// through degree `top`.
///
/// The unit is `Gen(0, 0)` and the augmentation reads off its coefficient, so
/// the remaining basis elements span the augmentation ideal. A `complete`
/// algebra is zero above `top`; otherwise anything beyond `top` is unknown and
/// asking for it is an error.
#[derive(Clone)]
pub struct PresentedDGA {
    name: String,
    labels: Vec<Vec<String>>,
    complete: bool,
    zero_differential: bool,
    differential: HashMap<Gen, Element>,
    products: HashMap<(Gen, Gen), Element>,
}

impl fmt::Debug for PresentedDGA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PresentedDGA({}, ranks {:?})", self.name, self.ranks())
    }
}

impl PresentedDGA {
    /// Tabulates `d` and the product on augmentation-ideal pairs, then checks
    /// the dga axioms inside the window. `d = None` means `d = 0`.
    pub fn from_rules(
        name: impl Into<String>,
        labels: Vec<Vec<String>>,
        complete: bool,
        d: Option<DiffRule<'_>>,
        mul: MulRule<'_>,
    ) -> Result<Self> {
        if labels.first().is_none_or(Vec::is_empty) {
            return Err(Error::Invalid("an augmented algebra needs a unit in degree 0".into()));
        }
        let top = labels.len() as i64 - 1;
        let gens: Vec<Gen> = (0..=top).flat_map(|n| (0..labels[n as usize].len()).map(move |i| Gen::new(n, i))).collect();
        let mut differential = HashMap::new();
        if let Some(d) = d {
            for &g in &gens {
                let v = d(g);
                if v.keys().any(|h| h.degree != g.degree + 1) {
                    return Err(Error::Invalid(format!("d{g:?} is not homogeneous of degree {}", g.degree + 1)));
                }
                if g.degree == top && !v.is_zero() && complete {
                    return Err(Error::Invalid(format!("d{g:?} leaves a complete algebra")));
                }
                if !v.is_zero() {
                    differential.insert(g, v);
                }
            }
        }
        let mut products = HashMap::new();
        for &a in gens.iter().filter(|&&g| g != UNIT) {
            for &b in gens.iter().filter(|&&g| g != UNIT && g.degree + a.degree <= top) {
                let v = mul(a, b);
                if v.keys().any(|h| h.degree != a.degree + b.degree) {
                    return Err(Error::Invalid(format!("{a:?}·{b:?} is not homogeneous")));
                }
                if !v.is_zero() {
                    products.insert((a, b), v);
                }
            }
        }
        let alg = PresentedDGA {
            name: name.into(),
            labels,
            complete,
            zero_differential: d.is_none(),
            differential,
            products,
        };
        alg.validate()?;
        Ok(alg)
    }

    /// A graded-commutative monomial algebra: variables of the given degrees,
    /// basis the monomials accepted by `allowed` (a set closed under
    /// division), odd variables squaring to zero.
    pub fn monomial(
        name: impl Into<String>,
        var_degrees: &[usize],
        allowed: &dyn Fn(&Monomial) -> bool,
        top: usize,
        complete: bool,
    ) -> Result<Self> {
        let model = MonomialModel::new(var_degrees, allowed, top);
        let labels = model.labels();
        Self::from_rules(name, labels, complete, None, &|a, b| model.product(a, b))
    }

    /// `𝕜[x_1, ..., x_n]` with the given (even) degrees, truncated at `top`.
    pub fn polynomial(var_degrees: &[usize], top: usize) -> Result<Self> {
        if var_degrees.iter().any(|d| d % 2 == 1 || *d == 0) {
            return Err(Error::Invalid("polynomial generators need positive even degrees".into()));
        }
        Self::monomial(format!("poly{var_degrees:?}"), var_degrees, &|_| true, top, false)
    }

    /// `𝕜[t]/(t^h)` with `|t| = degree`.
    pub fn truncated_polynomial(degree: usize, height: u32) -> Result<Self> {
        let top = degree * (height.max(1) as usize - 1);
        Self::monomial(format!("trunc({degree},{height})"), &[degree], &|m| m[0] < height, top, true)
    }

    /// The exterior algebra on `n` generators of degree 1.
    pub fn exterior(n: usize) -> Result<Self> {
        Self::monomial(format!("ext({n})"), &vec![1; n], &|_| true, n, true)
    }

    /// `𝕜 ⊕ V` with zero products; generators in the given positive degrees.
    pub fn square_zero(degrees: &[usize]) -> Result<Self> {
        let top = degrees.iter().copied().max().unwrap_or(0);
        let mut labels = vec![Vec::new(); top + 1];
        labels[0].push("1".to_string());
        for (i, &d) in degrees.iter().enumerate() {
            if d == 0 {
                return Err(Error::Invalid("square-zero generators need positive degree".into()));
            }
            labels[d].push(format!("v{}", i + 1));
        }
        Self::from_rules(format!("sqz{degrees:?}"), labels, true, None, &|_, _| Element::zero())
    }

    /// A monomial algebra with a differential given on the variables and
    /// extended as a derivation.
    pub fn monomial_dga(
        name: impl Into<String>,
        var_degrees: &[usize],
        allowed: &dyn Fn(&Monomial) -> bool,
        top: usize,
        complete: bool,
        d_vars: &[LinComb<Monomial, i64>],
    ) -> Result<Self> {
        let model = MonomialModel::new(var_degrees, allowed, top);
        let labels = model.labels();
        let d = |g: Gen| model.derivation(g, d_vars);
        Self::from_rules(name, labels, complete, Some(&d), &|a, b| model.product(a, b))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn top(&self) -> i64 {
        self.labels.len() as i64 - 1
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn has_zero_differential(&self) -> bool {
        self.zero_differential || self.differential.is_empty()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn rank(&self, degree: i64) -> usize {
        if degree < 0 {
            return 0;
        }
        self.labels.get(degree as usize).map_or(0, Vec::len)
    }

    pub fn basis(&self, degree: i64) -> Vec<Gen> {
        (0..self.rank(degree)).map(|i| Gen::new(degree, i)).collect()
    }

    /// Basis of the augmentation ideal in `degree`.
    pub fn ideal_basis(&self, degree: i64) -> Vec<Gen> {
        self.basis(degree).into_iter().filter(|&g| g != UNIT).collect()
    }

    pub fn label(&self, g: Gen) -> &str {
        &self.labels[g.degree as usize][g.index]
    }

    pub fn format(&self, e: &Element) -> String {
        if e.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = e.iter().map(|(g, c)| format!("{c}·{}", self.label(*g))).collect();
        parts.join(" + ")
    }

    /// Whether degree `n` lies in the known range, erroring if it does not.
    fn check_degree(&self, n: i64) -> Result<bool> {
        if n <= self.top() {
            Ok(true)
        } else if self.complete {
            Ok(false)
        } else {
            Err(Error::TruncationExceeded { needed: n, window: self.top() })
        }
    }

    pub fn augmentation(&self, e: &Element) -> i64 {
        e.coefficient(&UNIT)
    }

    pub fn d(&self, g: Gen) -> Result<Element> {
        if self.zero_differential {
            return Ok(Element::zero());
        }
        if !self.check_degree(g.degree + 1)? {
            return Ok(Element::zero());
        }
        Ok(self.differential.get(&g).cloned().unwrap_or_default())
    }

    pub fn d_element(&self, e: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (g, c) in e {
            out.add_scaled(&self.d(*g)?, c);
        }
        Ok(out)
    }

    pub fn mul(&self, a: Gen, b: Gen) -> Result<Element> {
        if a == UNIT {
            return Ok(Element::basis(b));
        }
        if b == UNIT {
            return Ok(Element::basis(a));
        }
        if !self.check_degree(a.degree + b.degree)? {
            return Ok(Element::zero());
        }
        Ok(self.products.get(&(a, b)).cloned().unwrap_or_default())
    }

    pub fn mul_elements(&self, x: &Element, y: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (a, s) in x {
            for (b, t) in y {
                out.add_scaled(&self.mul(*a, *b)?, &(s * t));
            }
        }
        Ok(out)
    }

    /// `ab = (-1)^{|a||b|} ba` on all basis pairs in the window.
    pub fn is_graded_commutative(&self) -> bool {
        self.commutativity_witness().is_none()
    }

    pub(crate) fn commutativity_witness(&self) -> Option<(Gen, Gen)> {
        for (&(a, b), v) in &self.products {
            let w = self.products.get(&(b, a)).cloned().unwrap_or_default();
            if *v != w.scale(&sign(a.degree * b.degree)) {
                return Some((a, b));
            }
        }
        None
    }

    /// Checks d² = 0, the Leibniz rule, associativity and that the
    /// augmentation is multiplicative, everywhere inside the window.
    pub fn validate(&self) -> Result<()> {
        let top = self.top();
        let fail = |msg: String| Err(Error::Invalid(format!("{}: {msg}", self.name)));
        let all: Vec<Gen> = (0..=top).flat_map(|n| self.basis(n)).collect();
        let ideal: Vec<Gen> = all.iter().copied().filter(|&g| g != UNIT).collect();
        if !self.d(UNIT)?.is_zero() {
            return fail("d(1) ≠ 0".into());
        }
        for &g in &all {
            if g.degree + 2 <= top || self.complete {
                if !self.d_element(&self.d(g)?)?.is_zero() {
                    return fail(format!("d² ≠ 0 on {}", self.label(g)));
                }
            }
        }
        for &a in &ideal {
            for &b in ideal.iter().filter(|b| a.degree + b.degree <= top) {
                let ab = self.mul(a, b)?;
                if ab.coefficient(&UNIT) != 0 {
                    return fail(format!("{}·{} has a unit component", self.label(a), self.label(b)));
                }
                if a.degree + b.degree < top || self.complete {
                    let lhs = self.d_element(&ab)?;
                    let mut rhs = self.mul_elements(&self.d(a)?, &Element::basis(b))?;
                    rhs.add_scaled(&self.mul_elements(&Element::basis(a), &self.d(b)?)?, &sign(a.degree));
                    if lhs != rhs {
                        return fail(format!("Leibniz fails on {}, {}", self.label(a), self.label(b)));
                    }
                }
                for &c in ideal.iter().filter(|c| a.degree + b.degree + c.degree <= top) {
                    let left = self.mul_elements(&ab, &Element::basis(c))?;
                    let right = self.mul_elements(&Element::basis(a), &self.mul(b, c)?)?;
                    if left != right {
                        return fail(format!(
                            "associativity fails on {}, {}, {}",
                            self.label(a),
                            self.label(b),
                            self.label(c)
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// The same algebra with a smaller window.
    pub fn truncate(&self, top: i64) -> PresentedDGA {
        if top >= self.top() {
            return self.clone();
        }
        let keep = |g: &Gen| g.degree <= top;
        PresentedDGA {
            name: self.name.clone(),
            labels: self.labels[..=top as usize].to_vec(),
            complete: false,
            zero_differential: self.zero_differential,
            differential: self.differential.iter().filter(|(g, _)| keep(g)).map(|(g, v)| (*g, v.clone())).collect(),
            products: self
                .products
                .iter()
                .filter(|((a, b), _)| a.degree + b.degree <= top)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }
}

/// Monomial bookkeeping shared by the monomial constructors.
pub(crate) struct MonomialModel {
    var_degrees: Vec<usize>,
    basis: Vec<Vec<Monomial>>,
    index: HashMap<Monomial, Gen>,
}

impl MonomialModel {
    pub(crate) fn new(var_degrees: &[usize], allowed: &dyn Fn(&Monomial) -> bool, top: usize) -> Self {
        let mut basis = Vec::with_capacity(top + 1);
        let mut index = HashMap::new();
        for d in 0..=top {
            let ms: Vec<Monomial> = monomials_of_degree(var_degrees, d)
                .into_iter()
                .filter(|m| allowed(m))
                .filter(|m| m.iter().zip(var_degrees).all(|(e, deg)| deg % 2 == 0 || *e <= 1))
                .collect();
            for (i, m) in ms.iter().enumerate() {
                index.insert(m.clone(), Gen::new(d as i64, i));
            }
            basis.push(ms);
        }
        MonomialModel {
            var_degrees: var_degrees.to_vec(),
            basis,
            index,
        }
    }

    pub(crate) fn labels(&self) -> Vec<Vec<String>> {
        self.basis.iter().map(|ms| ms.iter().map(|m| monomial_label(m)).collect()).collect()
    }

    pub(crate) fn monomial(&self, g: Gen) -> &Monomial {
        &self.basis[g.degree as usize][g.index]
    }

    pub(crate) fn gen_of(&self, m: &Monomial) -> Option<Gen> {
        self.index.get(m).copied()
    }

    /// Sign of `x^a · x^b = ± x^{a+b}` in the graded-commutative algebra.
    pub(crate) fn product_sign(&self, a: &Monomial, b: &Monomial) -> i64 {
        let odd = |i: usize| self.var_degrees[i] % 2 == 1;
        let mut exponent = 0i64;
        for (j, &bj) in b.iter().enumerate() {
            if !odd(j) || bj == 0 {
                continue;
            }
            for (i, &ai) in a.iter().enumerate().skip(j + 1) {
                if odd(i) {
                    exponent += (ai * bj) as i64;
                }
            }
        }
        sign(exponent)
    }

    pub(crate) fn product(&self, a: Gen, b: Gen) -> Element {
        let (ma, mb) = (self.monomial(a), self.monomial(b));
        let m: Monomial = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
        match self.gen_of(&m) {
            Some(g) => Element::from_term(g, self.product_sign(ma, mb)),
            None => Element::zero(),
        }
    }

    fn element_of(&self, p: &LinComb<Monomial, i64>) -> Element {
        p.iter().filter_map(|(m, c)| self.gen_of(m).map(|g| (g, *c))).collect()
    }

    /// The derivation with the given values on the variables, via
    /// `d(x_i · m) = dx_i · m + (-1)^{|x_i|} x_i · dm` on the first variable.
    pub(crate) fn derivation(&self, g: Gen, d_vars: &[LinComb<Monomial, i64>]) -> Element {
        let m = self.monomial(g).clone();
        let Some(i) = m.iter().position(|&e| e > 0) else {
            return Element::zero();
        };
        let mut xi = vec![0u32; m.len()];
        xi[i] = 1;
        let mut rest = m.clone();
        rest[i] -= 1;
        let (Some(gx), Some(gr)) = (self.gen_of(&xi), self.gen_of(&rest)) else {
            return Element::zero();
        };
        let s = self.product_sign(&xi, &rest);
        // m = s · x_i · rest
        let dx = self.element_of(&d_vars[i]);
        let mut out = Element::zero();
        for (h, c) in &dx {
            if (h.degree + gr.degree) as usize >= self.basis.len() {
                continue;
            }
            out.add_scaled(&self.product(*h, gr), &(c * s));
        }
        let dr = self.derivation(gr, d_vars);
        for (h, c) in &dr {
            if (h.degree + gx.degree) as usize >= self.basis.len() {
                continue;
            }
            out.add_scaled(&self.product(gx, *h), &(c * s * sign::<i64>(gx.degree)));
        }
        out
    }
}

pub(crate) fn monomial_label(m: &[u32]) -> String {
    let mut s = String::new();
    for (i, &e) in m.iter().enumerate() {
        match e {
            0 => {}
            1 => s.push_str(&format!("t{}", i + 1)),
            _ => s.push_str(&format!("t{}^{e}", i + 1)),
        }
    }
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

/// Shared handle used by structures that outlive a borrow of the algebra.
pub type SharedDGA = Arc<PresentedDGA>;
