//! Connected dgcs, twisting cochains `C → A`, and the correspondence with
//! coalgebra maps `C → BA`.

use std::collections::{BTreeMap, HashMap};

use super::algebra::{Element, Gen, PresentedDGA, UNIT};
use super::bar::{bar_diagonal, bar_differential, bar_differential_chain, bar_words_total, BarChain, BarWord};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::ring::sign;

pub type CoElement = LinComb<(Gen, Gen), i64>;

/// A connected coaugmented dgc (cohomologically graded), finite rank in each
/// degree, known through degree `top`. `Gen(0, 0)` is the coaugmentation.
#[derive(Clone, Debug)]
pub struct PresentedDGC {
    name: String,
    ranks: Vec<usize>,
    differential: HashMap<Gen, Element>,
    diagonal: HashMap<Gen, CoElement>,
    words: Option<Vec<Vec<BarWord>>>,
}

impl PresentedDGC {
    /// `diagonal` must list every basis element; `differential` may omit zeros.
    /// Degree-`top` differentials are not recorded.
    pub fn from_tables(
        name: impl Into<String>,
        ranks: Vec<usize>,
        differential: HashMap<Gen, Element>,
        diagonal: HashMap<Gen, CoElement>,
    ) -> Result<Self> {
        let c = PresentedDGC {
            name: name.into(),
            ranks,
            differential,
            diagonal,
            words: None,
        };
        c.validate()?;
        Ok(c)
    }

    /// The bar construction of a simply connected dga through total degree `top`.
    pub fn bar(a: &PresentedDGA, top: i64) -> Result<Self> {
        let words: Vec<Vec<BarWord>> = (0..=top).map(|t| bar_words_total(a, t)).collect::<Result<_>>()?;
        let index: HashMap<&BarWord, Gen> = words
            .iter()
            .enumerate()
            .flat_map(|(t, ws)| ws.iter().enumerate().map(move |(i, w)| (w, Gen::new(t as i64, i))))
            .collect();
        let mut differential = HashMap::new();
        let mut diagonal = HashMap::new();
        for (w, &g) in &index {
            let pieces = bar_diagonal(w);
            diagonal.insert(g, pieces.rekey(|(x, y)| (index[x], index[y])));
            if g.degree < top {
                let dw = bar_differential(a, w)?;
                if !dw.is_zero() {
                    differential.insert(g, dw.rekey(|x| index[x]));
                }
            }
        }
        let c = PresentedDGC {
            name: format!("B({})", a.name()),
            ranks: words.iter().map(Vec::len).collect(),
            differential,
            diagonal,
            words: Some(words),
        };
        c.validate()?;
        Ok(c)
    }

    /// The tensor coalgebra on generators of the given positive degrees with
    /// zero differential and deconcatenation.
    pub fn tensor_coalgebra(degrees: &[usize], top: i64) -> Result<Self> {
        let shifted: Vec<usize> = degrees.iter().map(|d| d + 1).collect();
        let mut c = Self::bar(&PresentedDGA::square_zero(&shifted)?, top)?;
        c.name = format!("T{degrees:?}");
        Ok(c)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn top(&self) -> i64 {
        self.ranks.len() as i64 - 1
    }

    pub fn basis(&self, degree: i64) -> Vec<Gen> {
        if degree < 0 {
            return Vec::new();
        }
        (0..self.ranks.get(degree as usize).copied().unwrap_or(0)).map(|i| Gen::new(degree, i)).collect()
    }

    pub fn all_basis(&self) -> Vec<Gen> {
        (0..=self.top()).flat_map(|n| self.basis(n)).collect()
    }

    /// The bar word behind a basis element, for bar-construction coalgebras.
    pub fn word(&self, g: Gen) -> Option<&BarWord> {
        self.words.as_ref().map(|w| &w[g.degree as usize][g.index])
    }

    pub fn gen_of_word(&self, w: &BarWord) -> Option<Gen> {
        use crate::lincomb::Graded;
        let t = w.degree();
        let ws = self.words.as_ref()?.get(t as usize)?;
        ws.binary_search(w).ok().map(|i| Gen::new(t, i))
    }

    pub fn d(&self, g: Gen) -> Result<Element> {
        if g.degree >= self.top() {
            return Err(Error::TruncationExceeded { needed: g.degree + 1, window: self.top() });
        }
        Ok(self.differential.get(&g).cloned().unwrap_or_default())
    }

    pub fn diagonal(&self, g: Gen) -> CoElement {
        self.diagonal.get(&g).cloned().unwrap_or_default()
    }

    /// `Δ̄c = Δc - c ⊗ 1 - 1 ⊗ c` for `c ≠ 1`.
    pub fn reduced_diagonal(&self, g: Gen) -> CoElement {
        let mut d = self.diagonal(g);
        if g != UNIT {
            d.add_term((g, UNIT), -1);
            d.add_term((UNIT, g), -1);
        }
        d
    }

    fn validate(&self) -> Result<()> {
        if self.ranks.first() != Some(&1) {
            return Err(Error::NotConnected(format!("{} must be 𝕜 in degree 0", self.name)));
        }
        let fail = |msg: String| Err(Error::Invalid(format!("{}: {msg}", self.name)));
        if self.diagonal(UNIT) != CoElement::basis((UNIT, UNIT)) {
            return fail("Δ(1) ≠ 1 ⊗ 1".into());
        }
        for g in self.all_basis() {
            let dg = self.diagonal(g);
            if dg.keys().any(|(x, y)| x.degree + y.degree != g.degree) {
                return fail(format!("Δ{g:?} is not homogeneous"));
            }
            // counit: (ε ⊗ 1)Δ = 1 = (1 ⊗ ε)Δ
            let left: Element = dg.iter().filter(|((x, _), _)| *x == UNIT).map(|((_, y), c)| (*y, *c)).collect();
            let right: Element = dg.iter().filter(|((_, y), _)| *y == UNIT).map(|((x, _), c)| (*x, *c)).collect();
            if left != Element::basis(g) || right != Element::basis(g) {
                return fail(format!("counit fails on {g:?}"));
            }
            // coassociativity
            let mut l = LinComb::<(Gen, Gen, Gen), i64>::zero();
            let mut r = LinComb::<(Gen, Gen, Gen), i64>::zero();
            for ((x, y), c) in &dg {
                for ((x1, x2), e) in &self.diagonal(*x) {
                    l.add_term((*x1, *x2, *y), c * e);
                }
                for ((y1, y2), e) in &self.diagonal(*y) {
                    r.add_term((*x, *y1, *y2), c * e);
                }
            }
            if l != r {
                return fail(format!("coassociativity fails on {g:?}"));
            }
            if g.degree + 1 < self.top() {
                let d2: Element = self
                    .d(g)?
                    .iter()
                    .try_fold(Element::zero(), |mut acc, (h, c)| -> Result<Element> {
                        acc.add_scaled(&self.d(*h)?, c);
                        Ok(acc)
                    })?;
                if !d2.is_zero() {
                    return fail(format!("d² ≠ 0 on {g:?}"));
                }
            }
            if g.degree < self.top() {
                // Δd = (d ⊗ 1 + 1 ⊗ d)Δ
                let mut lhs = CoElement::zero();
                for (h, c) in &self.d(g)? {
                    lhs.add_scaled(&self.diagonal(*h), c);
                }
                let mut rhs = CoElement::zero();
                for ((x, y), c) in &dg {
                    for (dx, e) in &self.d(*x)? {
                        rhs.add_term((*dx, *y), c * e);
                    }
                    for (dy, e) in &self.d(*y)? {
                        rhs.add_term((*x, *dy), c * e * sign::<i64>(x.degree));
                    }
                }
                if lhs != rhs {
                    return fail(format!("d is not a coderivation on {g:?}"));
                }
            }
        }
        Ok(())
    }
}

/// A degree `+1` map `t: C → A`, given on the basis of `C`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct TwistingCochain {
    pub values: BTreeMap<Gen, Element>,
}

impl TwistingCochain {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn on(&self, g: Gen) -> Element {
        self.values.get(&g).cloned().unwrap_or_default()
    }
}

/// A map `C → BA`, given on the basis of `C`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct CoalgebraMap {
    pub values: BTreeMap<Gen, BarChain>,
}

impl CoalgebraMap {
    pub fn on(&self, g: Gen) -> BarChain {
        self.values.get(&g).cloned().unwrap_or_default()
    }

    /// The identity of a bar-construction coalgebra, as a map into `BA`.
    pub fn identity(c: &PresentedDGC) -> Result<Self> {
        let mut values = BTreeMap::new();
        for g in c.all_basis() {
            let w = c.word(g).ok_or_else(|| Error::Invalid("not a bar construction".into()))?;
            values.insert(g, BarChain::basis(w.clone()));
        }
        Ok(CoalgebraMap { values })
    }
}

/// `t = s ∘ pr_1 ∘ f`.
pub fn twisting_from_map(f: &CoalgebraMap) -> TwistingCochain {
    let mut values = BTreeMap::new();
    for (g, x) in &f.values {
        let t: Element = x.iter().filter(|(w, _)| w.len() == 1).map(|(w, c)| (w.0[0], *c)).collect();
        if !t.is_zero() {
            values.insert(*g, t);
        }
    }
    TwistingCochain { values }
}

/// `f = Σ_k (s⁻¹t)^{⊗k} Δ̄^{(k)}`, with `f(1) = []`. `s⁻¹t` has degree 0, so
/// no Koszul signs appear.
pub fn map_from_twisting(c: &PresentedDGC, t: &TwistingCochain) -> Result<CoalgebraMap> {
    if c.ranks.first() != Some(&1) {
        return Err(Error::NotConnected(c.name.clone()));
    }
    let mut memo: HashMap<Gen, BarChain> = HashMap::new();
    let mut values = BTreeMap::new();
    for g in c.all_basis() {
        let v = if g == UNIT { BarChain::basis(BarWord::empty()) } else { reduced_image(c, t, g, &mut memo)? };
        values.insert(g, v);
    }
    Ok(CoalgebraMap { values })
}

fn one_letter(e: &Element) -> Result<BarChain> {
    if e.coefficient(&UNIT) != 0 {
        return Err(Error::Invalid("twisting cochain leaves the augmentation ideal".into()));
    }
    Ok(e.rekey(|g| BarWord(vec![*g])))
}

fn reduced_image(c: &PresentedDGC, t: &TwistingCochain, g: Gen, memo: &mut HashMap<Gen, BarChain>) -> Result<BarChain> {
    if let Some(v) = memo.get(&g) {
        return Ok(v.clone());
    }
    let mut out = one_letter(&t.on(g))?;
    for ((x, y), coeff) in &c.reduced_diagonal(g) {
        let head = one_letter(&t.on(*x))?;
        if head.is_zero() {
            continue;
        }
        let tail = reduced_image(c, t, *y, memo)?;
        for (w1, a) in &head {
            for (w2, b) in &tail {
                out.add_term(w1.concat(w2), coeff * a * b);
            }
        }
    }
    memo.insert(g, out.clone());
    Ok(out)
}

/// Checks `d(t) = t ∪ t`, `tη = 0` and `εt = 0` on the basis of `C` wherever
/// both sides are inside the windows.
pub fn is_twisting(c: &PresentedDGC, a: &PresentedDGA, t: &TwistingCochain) -> Result<bool> {
    if !t.on(UNIT).is_zero() {
        return Ok(false);
    }
    for g in c.all_basis() {
        let tg = t.on(g);
        if tg.keys().any(|h| h.degree != g.degree + 1) || tg.coefficient(&UNIT) != 0 {
            return Ok(false);
        }
        if g.degree >= c.top() || g.degree + 2 > a.top() {
            continue;
        }
        // d(t) = d_A t + t d_C for a map of degree 1
        let mut lhs = a.d_element(&tg)?;
        for (h, x) in &c.d(g)? {
            lhs.add_scaled(&t.on(*h), x);
        }
        let mut rhs = Element::zero();
        for ((x, y), k) in &c.diagonal(g) {
            let p = a.mul_elements(&t.on(*x), &t.on(*y))?;
            rhs.add_scaled(&p, &(k * sign::<i64>(x.degree)));
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Δf = (f ⊗ f)Δ` on every basis element.
pub fn is_coalgebra_map(c: &PresentedDGC, f: &CoalgebraMap) -> bool {
    for g in c.all_basis() {
        let mut lhs = LinComb::<(BarWord, BarWord), i64>::zero();
        for (w, x) in &f.on(g) {
            lhs.add_scaled(&bar_diagonal(w), x);
        }
        let mut rhs = LinComb::zero();
        for ((x, y), k) in &c.diagonal(g) {
            for (w1, p) in &f.on(*x) {
                for (w2, q) in &f.on(*y) {
                    rhs.add_term((w1.clone(), w2.clone()), k * p * q);
                }
            }
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// `d f = f d` on basis elements of degree below the top of `C`.
pub fn is_chain_map(c: &PresentedDGC, a: &PresentedDGA, f: &CoalgebraMap) -> Result<bool> {
    for g in c.all_basis() {
        if g.degree >= c.top() {
            continue;
        }
        let lhs = bar_differential_chain(a, &f.on(g))?;
        let mut rhs = BarChain::zero();
        for (h, x) in &c.d(g)? {
            rhs.add_scaled(&f.on(*h), x);
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
