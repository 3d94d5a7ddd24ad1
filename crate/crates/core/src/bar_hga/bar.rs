//! The reduced bar construction `BA = ⊕ (s⁻¹Ā)^{⊗k}`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::algebra::{Element, Gen, PresentedDGA, UNIT};
use super::hga::Hga;
use crate::error::{Error, Result};
use crate::homlin::{matrix_of, FgComplex};
use crate::lincomb::{Graded, LinComb};
use crate::ring::{sign, CoefficientRing};

/// `[a_1|...|a_k]` with every `a_i` a basis element of the augmentation ideal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BarWord(pub Vec<Gen>);

impl BarWord {
    /// The unit `[]`.
    pub fn empty() -> Self {
        BarWord(Vec::new())
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Σ deg a_i`.
    pub fn internal_degree(&self) -> i64 {
        self.0.iter().map(|g| g.degree).sum()
    }

    pub fn concat(&self, other: &BarWord) -> BarWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        BarWord(v)
    }

    pub fn format(&self, a: &PresentedDGA) -> String {
        let parts: Vec<&str> = self.0.iter().map(|g| a.label(*g)).collect();
        format!("[{}]", parts.join("|"))
    }
}

impl fmt::Debug for BarWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{}.{}", g.degree, g.index)?;
        }
        write!(f, "]")
    }
}

/// Total degree `Σ (deg a_i - 1)`.
impl Graded for BarWord {
    fn degree(&self) -> i64 {
        self.0.iter().map(|g| g.degree - 1).sum()
    }
}

pub type BarChain = LinComb<BarWord, i64>;

/// `ε_0, ..., ε_k` with `ε_i = deg a_1 + ... + deg a_i - i`.
pub(crate) fn prefix_degrees(letters: &[Gen]) -> Vec<i64> {
    let mut out = Vec::with_capacity(letters.len() + 1);
    let mut acc = 0;
    out.push(0);
    for g in letters {
        acc += g.degree - 1;
        out.push(acc);
    }
    out
}

fn replace(letters: &[Gen], range: std::ops::Range<usize>, middle: Gen) -> BarWord {
    let mut v = letters[..range.start].to_vec();
    v.push(middle);
    v.extend_from_slice(&letters[range.end..]);
    BarWord(v)
}

fn check_ideal(e: &Element, what: &str) -> Result<()> {
    if e.coefficient(&UNIT) != 0 {
        return Err(Error::Invalid(format!("{what} leaves the augmentation ideal")));
    }
    Ok(())
}

/// `d[a_1|...|a_k] = -Σ (-1)^{ε_{i-1}} [...|da_i|...] + Σ (-1)^{ε_i} [...|a_i a_{i+1}|...]`.
pub fn bar_differential(a: &PresentedDGA, w: &BarWord) -> Result<BarChain> {
    let letters = w.letters();
    let eps = prefix_degrees(letters);
    let mut out = BarChain::zero();
    for i in 0..letters.len() {
        let da = a.d(letters[i])?;
        check_ideal(&da, "the differential")?;
        let s = -sign::<i64>(eps[i]);
        for (g, c) in &da {
            out.add_term(replace(letters, i..i + 1, *g), s * c);
        }
    }
    for i in 0..letters.len().saturating_sub(1) {
        let p = a.mul(letters[i], letters[i + 1])?;
        check_ideal(&p, "the product")?;
        let s = sign::<i64>(eps[i + 1]);
        for (g, c) in &p {
            out.add_term(replace(letters, i..i + 2, *g), s * c);
        }
    }
    Ok(out)
}

pub fn bar_differential_chain(a: &PresentedDGA, x: &BarChain) -> Result<BarChain> {
    let mut out = BarChain::zero();
    for (w, c) in x {
        out.add_scaled(&bar_differential(a, w)?, c);
    }
    Ok(out)
}

/// Deconcatenation `Δ[a_1|...|a_k] = Σ [a_1|...|a_i] ⊗ [a_{i+1}|...|a_k]`.
pub fn bar_diagonal(w: &BarWord) -> LinComb<(BarWord, BarWord), i64> {
    (0..=w.len())
        .map(|i| ((BarWord(w.0[..i].to_vec()), BarWord(w.0[i..].to_vec())), 1))
        .collect()
}

pub fn bar_diagonal_chain(x: &BarChain) -> LinComb<(BarWord, BarWord), i64> {
    let mut out = LinComb::zero();
    for (w, c) in x {
        out.add_scaled(&bar_diagonal(w), c);
    }
    out
}

/// Expands a sequence of letters, each a combination of basis elements, into
/// bar words. Unit components are rejected.
fn expand_letters(letters: &[Element], coeff: i64) -> Result<BarChain> {
    let mut partial: Vec<(Vec<Gen>, i64)> = vec![(Vec::new(), coeff)];
    for e in letters {
        check_ideal(e, "an hga operation")?;
        let mut next = Vec::with_capacity(partial.len() * e.len());
        for (prefix, c) in &partial {
            for (g, x) in e {
                let mut p = prefix.clone();
                p.push(*g);
                next.push((p, c * x));
            }
        }
        partial = next;
        if partial.is_empty() {
            break;
        }
    }
    Ok(partial.into_iter().map(|(v, c)| (BarWord(v), c)).collect())
}

/// The product on `BA` whose twisting cochain has components `E_{10}`,
/// `E_{01}` (the canonical maps) and `E_{1l}` (from `E_l`).
///
/// It is the coalgebra map `Σ_k (s⁻¹E)^{⊗k} Δ̄^{(k)}` on `BA ⊗ BA`: both words
/// are cut into pieces `(u_p, v_p)`, each piece becomes one letter, and the
/// reshuffling of the pieces contributes `(-1)^{Σ_{p>q} |u_p||v_q|}`.
pub fn bar_product(h: &Hga, w1: &BarWord, w2: &BarWord) -> Result<BarChain> {
    let mut out = BarChain::zero();
    let mut letters = Vec::with_capacity(w1.len() + w2.len());
    product_rec(h, w1.letters(), w2.letters(), 0, 0, 0, 0, &mut letters, &mut out)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn product_rec(
    h: &Hga,
    u: &[Gen],
    v: &[Gen],
    i: usize,
    j: usize,
    v_degree: i64,
    exponent: i64,
    letters: &mut Vec<Element>,
    out: &mut BarChain,
) -> Result<()> {
    if i == u.len() && j == v.len() {
        out.add_scaled(&expand_letters(letters, 1)?, &sign(exponent));
        return Ok(());
    }
    if j < v.len() {
        letters.push(Element::basis(v[j]));
        product_rec(h, u, v, i, j + 1, v_degree + v[j].degree - 1, exponent, letters, out)?;
        letters.pop();
    }
    if i < u.len() {
        let a = u[i];
        let exponent = exponent + (a.degree - 1) * v_degree;
        let max_l = if h.is_trivial() { 0 } else { v.len() - j };
        let mut block_degree = 0;
        for l in 0..=max_l {
            if l > 0 {
                block_degree += v[j + l - 1].degree - 1;
            }
            let bs = &v[j..j + l];
            let letter = if l == 0 {
                Element::basis(a)
            } else {
                h.e(a, bs)?.scale(&sign(suspension_exponent(a, bs)))
            };
            if letter.is_zero() {
                continue;
            }
            letters.push(letter);
            product_rec(h, u, v, i + 1, j + l, v_degree + block_degree, exponent, letters, out)?;
            letters.pop();
        }
    }
    Ok(())
}

/// `E_{1l}([a] ⊗ [b_1|...|b_l]) = (-1)^{Σ_i |x_i|(n-i)} E_l(a; b_1, ..., b_l)`
/// for `x = (a, b_1, ..., b_l)`, `n = l + 1`: the Koszul sign of `(s⁻¹)^{⊗n}`.
fn suspension_exponent(a: Gen, bs: &[Gen]) -> i64 {
    let n = bs.len() as i64 + 1;
    std::iter::once(a).chain(bs.iter().copied()).enumerate().map(|(i, x)| x.degree * (n - 1 - i as i64)).sum()
}

pub fn bar_product_chains(h: &Hga, x: &BarChain, y: &BarChain) -> Result<BarChain> {
    let mut out = BarChain::zero();
    for (w1, a) in x {
        for (w2, b) in y {
            out.add_scaled(&bar_product(h, w1, w2)?, &(a * b));
        }
    }
    Ok(out)
}

/// Bar words of word length `n` and internal degree `q`, in lexicographic order.
pub fn bar_words(a: &PresentedDGA, n: usize, q: i64) -> Result<Vec<BarWord>> {
    if !a.ideal_basis(0).is_empty() {
        return Err(Error::NotConnected(format!("{} has augmentation ideal in degree 0", a.name())));
    }
    if q > a.top() && !a.is_complete() {
        return Err(Error::TruncationExceeded { needed: q, window: a.top() });
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    words_rec(a, n, q, &mut cur, &mut out);
    Ok(out)
}

fn words_rec(a: &PresentedDGA, n: usize, q: i64, cur: &mut Vec<Gen>, out: &mut Vec<BarWord>) {
    if n == 0 {
        if q == 0 {
            out.push(BarWord(cur.clone()));
        }
        return;
    }
    for d in 1..=q - (n as i64 - 1) {
        for g in a.ideal_basis(d) {
            cur.push(g);
            words_rec(a, n - 1, q - d, cur, out);
            cur.pop();
        }
    }
}

/// The bar complex of a dga with zero differential in internal degree `q`,
/// graded by word length.
pub fn bar_complex(a: &PresentedDGA, q: i64) -> Result<FgComplex> {
    if !a.has_zero_differential() {
        return Err(Error::Invalid("word-length grading needs a zero differential".into()));
    }
    let max_n = q.max(0) as usize;
    let bases: Vec<Vec<BarWord>> = (0..=max_n).map(|n| bar_words(a, n, q)).collect::<Result<_>>()?;
    let mut diffs = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        diffs.push(matrix_of(&bases[n], &bases[n - 1], |w| bar_differential(a, w))?);
    }
    FgComplex::bounded(0, bases.iter().map(Vec::len).collect(), diffs)
}

/// Ranks of `H(BA) = Tor^A(𝕜, 𝕜)` by (word length, internal degree), for
/// internal degrees `0..=max_q`, over a field.
pub fn bar_homology(a: &PresentedDGA, max_q: i64, ring: CoefficientRing) -> Result<BTreeMap<(usize, i64), usize>> {
    if !ring.is_field() {
        return Err(Error::NotField(ring.to_string()));
    }
    let mut out = BTreeMap::new();
    for q in 0..=max_q {
        let c = bar_complex(a, q)?;
        for n in 0..=q.max(0) as usize {
            let r = c.betti(n as i64, ring)?;
            if r > 0 {
                out.insert((n, q), r);
            }
        }
    }
    Ok(out)
}

/// Bar words of total degree `t` for a simply connected algebra.
pub fn bar_words_total(a: &PresentedDGA, t: i64) -> Result<Vec<BarWord>> {
    if !a.ideal_basis(1).is_empty() {
        return Err(Error::NotConnected(format!("{} is not simply connected", a.name())));
    }
    let mut out = Vec::new();
    for n in 0..=t.max(0) as usize {
        out.extend(bar_words(a, n, t + n as i64)?);
    }
    out.sort();
    Ok(out)
}

/// Ranks of `H^t(BA)` by total degree, `0 ≤ t ≤ max_t`, for a simply
/// connected dga with any differential.
pub fn bar_cohomology_total(a: &PresentedDGA, max_t: i64, ring: CoefficientRing) -> Result<Vec<usize>> {
    if !ring.is_field() {
        return Err(Error::NotField(ring.to_string()));
    }
    // homological degree -t, window -(max_t+1) ..= 1
    let bases: Vec<Vec<BarWord>> = (-1..=max_t + 1)
        .rev()
        .map(|t| if t < 0 { Ok(Vec::new()) } else { bar_words_total(a, t) })
        .collect::<Result<_>>()?;
    let mut diffs = Vec::new();
    for i in 0..bases.len() - 1 {
        // d raises t: maps bases[i+1] (degree t) to bases[i] (degree t+1)
        diffs.push(matrix_of(&bases[i + 1], &bases[i], |w| bar_differential(a, w))?);
    }
    let c = FgComplex::window(-(max_t + 1), bases.iter().map(Vec::len).collect(), diffs)?;
    (0..=max_t).map(|t| c.betti(-t, ring)).collect()
}
