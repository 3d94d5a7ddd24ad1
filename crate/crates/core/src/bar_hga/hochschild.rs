//! Hochschild chains `A ⊗ (s⁻¹Ā)^{⊗n}` of a graded-commutative dga, with the
//! shuffle product.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::algebra::{Element, Gen, PresentedDGA, UNIT};
use super::bar::{bar_differential, bar_product, bar_words, prefix_degrees, BarWord};
use super::hga::Hga;
use crate::error::{Error, Result};
use crate::homlin::{matrix_of, FgComplex};
use crate::lincomb::{Graded, LinComb};
use crate::ring::{sign, CoefficientRing};

/// `a[a_1|...|a_n]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HochschildWord {
    pub coefficient: Gen,
    pub word: BarWord,
}

impl fmt::Debug for HochschildWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}{:?}", self.coefficient.degree, self.coefficient.index, self.word)
    }
}

/// Total degree `|a| + Σ (|a_i| - 1)`.
impl Graded for HochschildWord {
    fn degree(&self) -> i64 {
        self.coefficient.degree + self.word.degree()
    }
}

impl HochschildWord {
    pub fn new(coefficient: Gen, letters: Vec<Gen>) -> Self {
        HochschildWord {
            coefficient,
            word: BarWord(letters),
        }
    }

    /// `|a| + Σ |a_i|`.
    pub fn internal_degree(&self) -> i64 {
        self.coefficient.degree + self.word.internal_degree()
    }

    pub fn format(&self, a: &PresentedDGA) -> String {
        format!("{}{}", a.label(self.coefficient), self.word.format(a))
    }
}

pub type HochschildChain = LinComb<HochschildWord, i64>;

/// The Hochschild complex of a graded-commutative dga (the trivial hga).
#[derive(Clone, Debug)]
pub struct HochschildComplex {
    hga: Hga,
}

impl HochschildComplex {
    pub fn new(a: PresentedDGA) -> Result<Self> {
        Ok(HochschildComplex { hga: Hga::trivial(a)? })
    }

    pub fn algebra(&self) -> &PresentedDGA {
        self.hga.base()
    }

    /// `d(a[w]) = (da)[w] + (-1)^{|a|} a·d_B[w] + (-1)^{|a|} (a a_1)[a_2|...]
    ///          - (-1)^{(|a|+|w'|)(|a_n|+1)} (a_n a)[a_1|...|a_{n-1}]`,
    /// `w' = [a_1|...|a_{n-1}]`.
    pub fn differential(&self, x: &HochschildWord) -> Result<HochschildChain> {
        let alg = self.algebra();
        let a = x.coefficient;
        let letters = x.word.letters();
        let n = letters.len();
        let mut out = HochschildChain::zero();
        for (g, c) in &alg.d(a)? {
            out.add_term(HochschildWord { coefficient: *g, word: x.word.clone() }, *c);
        }
        let sa = sign::<i64>(a.degree);
        for (w, c) in &bar_differential(alg, &x.word)? {
            out.add_term(HochschildWord { coefficient: a, word: w.clone() }, sa * c);
        }
        if n > 0 {
            for (g, c) in &alg.mul(a, letters[0])? {
                out.add_term(HochschildWord::new(*g, letters[1..].to_vec()), sa * c);
            }
            let last = letters[n - 1];
            let w_prime = prefix_degrees(&letters[..n - 1])[n - 1];
            let s = -sign::<i64>((a.degree + w_prime) * (last.degree + 1));
            for (g, c) in &alg.mul(last, a)? {
                out.add_term(HochschildWord::new(*g, letters[..n - 1].to_vec()), s * c);
            }
        }
        Ok(out)
    }

    pub fn differential_chain(&self, x: &HochschildChain) -> Result<HochschildChain> {
        let mut out = HochschildChain::zero();
        for (w, c) in x {
            out.add_scaled(&self.differential(w)?, c);
        }
        Ok(out)
    }

    /// `(a[u]) · (b[v]) = (-1)^{|u||b|} (ab)[u ⧢ v]`.
    pub fn product(&self, x: &HochschildWord, y: &HochschildWord) -> Result<HochschildChain> {
        let alg = self.algebra();
        let ab = alg.mul(x.coefficient, y.coefficient)?;
        let s = sign::<i64>(x.word.degree() * y.coefficient.degree);
        let shuffles = bar_product(&self.hga, &x.word, &y.word)?;
        let mut out = HochschildChain::zero();
        for (g, c) in &ab {
            for (w, e) in &shuffles {
                out.add_term(HochschildWord { coefficient: *g, word: w.clone() }, s * c * e);
            }
        }
        Ok(out)
    }

    pub fn product_chains(&self, x: &HochschildChain, y: &HochschildChain) -> Result<HochschildChain> {
        let mut out = HochschildChain::zero();
        for (u, a) in x {
            for (v, b) in y {
                out.add_scaled(&self.product(u, v)?, &(a * b));
            }
        }
        Ok(out)
    }

    /// Chains of homological degree `n` and internal degree `q`.
    pub fn chains(&self, n: usize, q: i64) -> Result<Vec<HochschildWord>> {
        let alg = self.algebra();
        let mut out = Vec::new();
        for p in 0..=q {
            let coeffs = alg.basis(p);
            if coeffs.is_empty() {
                continue;
            }
            for w in bar_words(alg, n, q - p)? {
                for &a in &coeffs {
                    out.push(HochschildWord { coefficient: a, word: w.clone() });
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// The complex in internal degree `q`, graded by word length; needs a
    /// zero differential on `A`.
    pub fn complex(&self, q: i64) -> Result<FgComplex> {
        if !self.algebra().has_zero_differential() {
            return Err(Error::Invalid("word-length grading needs a zero differential".into()));
        }
        let max_n = q.max(0) as usize;
        let bases: Vec<Vec<HochschildWord>> = (0..=max_n).map(|n| self.chains(n, q)).collect::<Result<_>>()?;
        let mut diffs = Vec::with_capacity(max_n);
        for n in 1..=max_n {
            diffs.push(matrix_of(&bases[n], &bases[n - 1], |w| self.differential(w))?);
        }
        FgComplex::bounded(0, bases.iter().map(Vec::len).collect(), diffs)
    }

    /// Ranks of `HH_n` in internal degree `q` for `0 ≤ q ≤ max_q`.
    pub fn homology(&self, max_q: i64, ring: CoefficientRing) -> Result<BTreeMap<(usize, i64), usize>> {
        if !ring.is_field() {
            return Err(Error::NotField(ring.to_string()));
        }
        let mut out = BTreeMap::new();
        for q in 0..=max_q {
            let c = self.complex(q)?;
            for n in 0..=q.max(0) as usize {
                let r = c.betti(n as i64, ring)?;
                if r > 0 {
                    out.insert((n, q), r);
                }
            }
        }
        Ok(out)
    }
}

/// `a[]` for an algebra element.
pub fn hochschild_zero_chain(a: &Element) -> HochschildChain {
    a.rekey(|g| HochschildWord { coefficient: *g, word: BarWord::empty() })
}

/// `1[a_1|...|a_n]`.
pub fn hochschild_unit_word(letters: Vec<Gen>) -> HochschildWord {
    HochschildWord::new(UNIT, letters)
}
