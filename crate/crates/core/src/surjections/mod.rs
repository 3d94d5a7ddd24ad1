//! The surjection operad and its action on normalized chains by interval cuts.

mod cut;
mod operations;

pub use cut::{aw_hat, aw_tilde, cut_sign, cuts, interval_cut, interval_cut_tensor, Cut};
pub use operations::{bracket, cup_i, e_k, e_tilde_k, transpose_cut};

use std::fmt;

use crate::error::{Error, Result};
use crate::lincomb::{Graded, LinComb};

/// A nondegenerate surjection `u: {1..k+l} → {1..l}`, stored 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Surjection {
    values: Vec<usize>,
    arity: usize,
}

pub type SurjectionSum = LinComb<Surjection, i64>;

impl fmt::Debug for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Graded for Surjection {
    fn degree(&self) -> i64 {
        self.degree() as i64
    }
}

/// Which structural predicates a surjection satisfies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    /// `final_positions[i]` is true if the value at position `i` (0-based) does not recur later.
    pub final_positions: Vec<bool>,
    pub biased: bool,
    pub strongly_biased: bool,
    pub one_biased: bool,
    pub strongly_one_biased: bool,
    /// The repeated value, if exactly one value repeats.
    pub distinguished: Option<usize>,
}

impl Surjection {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidSurjection {
            values: values.clone(),
            reason: reason.to_string(),
        };
        if values.is_empty() {
            return Err(invalid("empty sequence"));
        }
        let arity = *values.iter().max().unwrap();
        if values.contains(&0) {
            return Err(invalid("values start at 1"));
        }
        let mut hit = vec![false; arity];
        for &v in &values {
            hit[v - 1] = true;
        }
        if hit.iter().any(|h| !h) {
            return Err(invalid("not surjective"));
        }
        if values.windows(2).any(|w| w[0] == w[1]) {
            return Err(invalid("degenerate (repeated consecutive value)"));
        }
        Ok(Surjection { values, arity })
    }

    /// Builds a surjection from values known to be valid.
    pub(crate) fn from_valid(values: Vec<usize>) -> Self {
        let arity = values.iter().copied().max().unwrap_or(0);
        debug_assert!(Surjection::new(values.clone()).is_ok(), "{values:?}");
        Surjection { values, arity }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `l`, the number of outputs of the interval cut.
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// `k = |u| - l`.
    pub fn degree(&self) -> usize {
        self.values.len() - self.arity
    }

    /// `true` at 0-based positions whose value does not occur later.
    pub fn final_positions(&self) -> Vec<bool> {
        (0..self.values.len())
            .map(|i| !self.values[i + 1..].contains(&self.values[i]))
            .collect()
    }

    fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.arity];
        for &v in &self.values {
            m[v - 1] += 1;
        }
        m
    }

    pub fn classify(&self) -> Classification {
        let repeated: Vec<usize> = self
            .multiplicities()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 1)
            .map(|(v, _)| v + 1)
            .collect();
        let biased = repeated.len() <= 1;
        let strongly_biased = repeated.len() == 1;
        Classification {
            final_positions: self.final_positions(),
            biased,
            strongly_biased,
            one_biased: biased && repeated.iter().all(|&v| v == 1),
            strongly_one_biased: strongly_biased && repeated[0] == 1,
            distinguished: if strongly_biased { Some(repeated[0]) } else { None },
        }
    }

    pub fn is_one_biased(&self) -> bool {
        self.classify().one_biased
    }

    /// `u'`: drop the first value and, if it does not recur, close the gap.
    pub fn truncate(&self) -> Result<Surjection> {
        if self.values.len() < 2 {
            return Err(Error::InvalidSurjection {
                values: self.values.clone(),
                reason: "nothing left after removing the first value".into(),
            });
        }
        let first = self.values[0];
        let rest = &self.values[1..];
        let values = if rest.contains(&first) {
            rest.to_vec()
        } else {
            rest.iter().map(|&v| if v > first { v - 1 } else { v }).collect()
        };
        Surjection::new(values)
    }

    /// Relabels values: `v ↦ perm[v - 1]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Surjection> {
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if perm.len() != self.arity || sorted != (1..=self.arity).collect::<Vec<_>>() {
            return Err(Error::ArityMismatch(format!(
                "{perm:?} is not a permutation of 1..{}",
                self.arity
            )));
        }
        Ok(Surjection::from_valid(self.values.iter().map(|&v| perm[v - 1]).collect()))
    }

    /// The operad differential: remove one position at a time, keeping the
    /// results that are still nondegenerate surjections.
    ///
    /// Removing an inner position `i` carries `(-1)^{#inner positions before i}`;
    /// removing a final position whose value last occurred at `j` carries
    /// `-(-1)^{#inner positions before j}`.
    pub fn differential(&self) -> SurjectionSum {
        let fin = self.final_positions();
        let inner_before = |i: usize| (0..i).filter(|&j| !fin[j]).count() as i64;
        let mut out = SurjectionSum::zero();
        for i in 0..self.values.len() {
            let mut w = self.values.clone();
            let removed = w.remove(i);
            let Ok(s) = Surjection::new(w) else { continue };
            if s.arity != self.arity {
                continue;
            }
            let exponent = if !fin[i] {
                inner_before(i)
            } else {
                let j = (0..i).rev().find(|&j| self.values[j] == removed).expect("value still present");
                inner_before(j) + 1
            };
            out.add_term(s, crate::ring::sign(exponent));
        }
        out
    }

    /// Operadic composition `u ∘_s v`: `v` is plugged into output `s`.
    ///
    /// The combinatorics split `v` into overlapping pieces placed at the
    /// occurrences of `s`; the sign of each summand is read off by evaluating
    /// both sides of `AW_{u ∘_s v} = AW_u ∘_s AW_v` on one cut with all
    /// intervals of length two, where the summand's term is unique.
    pub fn compose(&self, s: usize, v: &Surjection) -> Result<SurjectionSum> {
        if s == 0 || s > self.arity {
            return Err(Error::ArityMismatch(format!(
                "cannot insert at output {s} of a surjection with {} outputs",
                self.arity
            )));
        }
        let occ: Vec<usize> = (0..self.values.len()).filter(|&i| self.values[i] == s).collect();
        let a = occ.len();
        let m = v.values.len();
        let t = v.arity;
        let mut out = SurjectionSum::zero();
        for split in splittings(m - 1, a) {
            // w, with each fine position tagged by its u-position and v-position
            let mut w = Vec::new();
            let mut u_pos = Vec::new();
            let mut v_pos: Vec<Option<usize>> = Vec::new();
            let mut c = 0;
            for (i, &x) in self.values.iter().enumerate() {
                if x == s {
                    let (lo, hi) = (split[c], split[c + 1]);
                    for j in lo..=hi {
                        w.push(v.values[j] + s - 1);
                        u_pos.push(i);
                        v_pos.push(Some(j));
                    }
                    c += 1;
                } else {
                    w.push(if x < s { x } else { x + t - 1 });
                    u_pos.push(i);
                    v_pos.push(None);
                }
            }
            if w.windows(2).any(|p| p[0] == p[1]) {
                continue;
            }
            let w = Surjection::from_valid(w);
            let n = w.values.len();
            let fine: Vec<usize> = (0..=n).map(|r| 2 * r).collect();
            // coarse cut for u: end of the last fine interval of each u-position
            let mut coarse = vec![0usize; self.values.len() + 1];
            for (r, &i) in u_pos.iter().enumerate() {
                coarse[i + 1] = fine[r + 1];
            }
            let sigma_u = cut_sign(self, &coarse);
            let sigma_w = cut_sign(&w, &fine);
            // vertices of ν_s, and the cut of it induced by v
            let mut nu: Vec<usize> = Vec::new();
            for &i in &occ {
                nu.extend(coarse[i]..=coarse[i + 1]);
            }
            let mut q = vec![0usize; m + 1];
            for (r, vp) in v_pos.iter().enumerate() {
                if let Some(j) = vp {
                    q[j + 1] = nu.binary_search(&fine[r + 1]).expect("cut point inside ν_s");
                }
            }
            let sigma_v = cut_sign(v, &q);
            let fin = self.final_positions();
            let before: usize = (0..self.values.len())
                .filter(|&i| self.values[i] < s)
                .map(|i| coarse[i + 1] - coarse[i] + usize::from(!fin[i]))
                .sum();
            let kappa = crate::ring::koszul(v.degree() as i64, before as i64);
            let negative = sigma_u ^ sigma_v ^ sigma_w ^ kappa;
            out.add_term(w, if negative { -1 } else { 1 });
        }
        Ok(out)
    }

    /// `(1, 2, 1, 3, 1, ..., 1, k+1, 1)`.
    pub fn e_k_surjection(k: usize) -> Surjection {
        let mut v = vec![1];
        for j in 2..=k + 1 {
            v.push(j);
            v.push(1);
        }
        Surjection::from_valid(v)
    }

    /// `(k+1, 1, k+1, 2, ..., k+1, k, k+1)`.
    pub fn e_tilde_k_surjection(k: usize) -> Surjection {
        let mut v = vec![k + 1];
        for j in 1..=k {
            v.push(j);
            v.push(k + 1);
        }
        Surjection::from_valid(v)
    }

    /// All nondegenerate surjections with `len` positions and `arity` values.
    pub fn enumerate(len: usize, arity: usize) -> Vec<Surjection> {
        fn rec(len: usize, arity: usize, cur: &mut Vec<usize>, out: &mut Vec<Surjection>) {
            if cur.len() == len {
                if let Ok(s) = Surjection::new(cur.clone()) {
                    if s.arity == arity {
                        out.push(s);
                    }
                }
                return;
            }
            for v in 1..=arity {
                if cur.last() == Some(&v) {
                    continue;
                }
                cur.push(v);
                rec(len, arity, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if arity >= 1 && len >= arity {
            rec(len, arity, &mut Vec::new(), &mut out);
        }
        out
    }
}

/// Sequences `0 = j_0 ≤ j_1 ≤ ... ≤ j_a = last`.
fn splittings(last: usize, a: usize) -> Vec<Vec<usize>> {
    fn rec(last: usize, remaining: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 1 {
            cur.push(last);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        let lo = *cur.last().unwrap();
        for j in lo..=last {
            cur.push(j);
            rec(last, remaining - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(last, a, &mut vec![0], &mut out);
    out
}
