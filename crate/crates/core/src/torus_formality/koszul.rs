//! `Λ = H(T)`, `𝐒 = H(BT)` and the Koszul complex `K = Λ ⊗ 𝐒`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::homlin::{matrix_of, FgComplex, HomologyGroup};
use crate::lincomb::{Graded, LinComb};
use crate::ring::sign;

/// A monomial `x_S` of `Λ`, as the bitmask of `S`.
pub type ExteriorMonomial = u32;
pub type ExteriorElement = LinComb<ExteriorMonomial, i64>;

/// The exterior bialgebra on primitive generators `x_1, ..., x_n` of degree 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExteriorBialgebra {
    rank: usize,
}

/// `(-1)^{#{(i, j) : i ∈ a, j ∈ b, i > j}}`, the sign of `x_a x_b = ± x_{a ∪ b}`.
fn merge_sign(a: u32, b: u32) -> i64 {
    let mut inversions = 0;
    for j in 0..32 {
        if b & (1 << j) != 0 {
            inversions += (a >> (j + 1)).count_ones();
        }
    }
    sign(inversions as i64)
}

impl ExteriorBialgebra {
    pub fn new(rank: usize) -> Self {
        assert!(rank < 32, "exterior rank {rank} too large");
        ExteriorBialgebra { rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generator(i: usize) -> ExteriorMonomial {
        1 << i
    }

    pub fn basis(&self, degree: usize) -> Vec<ExteriorMonomial> {
        (0..1u32 << self.rank).filter(|m| m.count_ones() as usize == degree).collect()
    }

    pub fn all_basis(&self) -> Vec<ExteriorMonomial> {
        (0..1u32 << self.rank).collect()
    }

    /// `x_a x_b`, or `None` when they share a generator.
    pub fn product(a: ExteriorMonomial, b: ExteriorMonomial) -> Option<(ExteriorMonomial, i64)> {
        (a & b == 0).then(|| (a | b, merge_sign(a, b)))
    }

    pub fn multiply(&self, a: &ExteriorElement, b: &ExteriorElement) -> ExteriorElement {
        let mut out = LinComb::zero();
        for (x, s) in a {
            for (y, t) in b {
                if let Some((z, e)) = Self::product(*x, *y) {
                    out.add_term(z, e * s * t);
                }
            }
        }
        out
    }

    /// `Δx_S = Σ_{A ⊔ B = S} ± x_A ⊗ x_B`, generators being primitive.
    pub fn coproduct(m: ExteriorMonomial) -> Vec<(ExteriorMonomial, ExteriorMonomial, i64)> {
        let mut out = Vec::new();
        let mut a = m;
        loop {
            let b = m & !a;
            out.push((a, b, merge_sign(a, b)));
            if a == 0 {
                break;
            }
            a = (a - 1) & m;
        }
        out.reverse();
        out
    }

    pub fn augmentation(m: ExteriorMonomial) -> i64 {
        i64::from(m == 0)
    }

    pub fn format(m: ExteriorMonomial) -> String {
        if m == 0 {
            return "1".into();
        }
        (0..32).filter(|i| m & (1 << i) != 0).map(|i| format!("x{}", i + 1)).collect()
    }
}

/// An exponent vector `α ∈ ℕⁿ`; `y_α` has degree `2|α|`.
pub type Exponent = Vec<u32>;

/// The divided power coalgebra `𝐒` with `Δy_α = Σ_{β+γ=α} y_β ⊗ y_γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DividedCoalgebra {
    rank: usize,
}

pub fn exponent_degree(alpha: &[u32]) -> usize {
    2 * alpha.iter().map(|&a| a as usize).sum::<usize>()
}

/// All `α ∈ ℕⁿ` with `|α| = total`, in lexicographic order.
pub fn exponents(rank: usize, total: u32) -> Vec<Exponent> {
    fn rec(rank: usize, left: u32, cur: &mut Exponent, out: &mut Vec<Exponent>) {
        if cur.len() + 1 == rank {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in 0..=left {
            cur.push(a);
            rec(rank, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if rank == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(rank, total, &mut Vec::new(), &mut out);
    out
}

pub fn format_exponent(alpha: &[u32]) -> String {
    let parts: Vec<String> = alpha.iter().map(u32::to_string).collect();
    format!("y({})", parts.join(","))
}

impl DividedCoalgebra {
    pub fn new(rank: usize) -> Self {
        DividedCoalgebra { rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn unit(&self) -> Exponent {
        vec![0; self.rank]
    }

    /// `y_i`.
    pub fn generator(&self, i: usize) -> Exponent {
        let mut a = self.unit();
        a[i] = 1;
        a
    }

    pub fn basis(&self, degree: usize) -> Vec<Exponent> {
        if degree % 2 == 1 {
            return Vec::new();
        }
        exponents(self.rank, (degree / 2) as u32)
    }

    pub fn diagonal(alpha: &[u32]) -> Vec<(Exponent, Exponent)> {
        let mut out = Vec::new();
        let n = alpha.len();
        let mut beta = vec![0u32; n];
        loop {
            let gamma = alpha.iter().zip(&beta).map(|(a, b)| a - b).collect();
            out.push((beta.clone(), gamma));
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if beta[i] < alpha[i] {
                    beta[i] += 1;
                    break;
                }
                beta[i] = 0;
            }
        }
    }

    pub fn counit(alpha: &[u32]) -> i64 {
        i64::from(alpha.iter().all(|&a| a == 0))
    }
}

/// `α|i`: lower the `i`-th exponent, if positive.
pub fn lower(alpha: &[u32], i: usize) -> Option<Exponent> {
    (alpha[i] > 0).then(|| {
        let mut b = alpha.to_vec();
        b[i] -= 1;
        b
    })
}

/// The basis element `a y_α` of `K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KoszulBasis {
    pub a: ExteriorMonomial,
    pub alpha: Exponent,
}

impl KoszulBasis {
    pub fn new(a: ExteriorMonomial, alpha: Exponent) -> Self {
        KoszulBasis { a, alpha }
    }

    /// `y_α` with `a = 1`.
    pub fn coalgebra(alpha: Exponent) -> Self {
        KoszulBasis { a: 0, alpha }
    }
}

impl Graded for KoszulBasis {
    fn degree(&self) -> i64 {
        self.a.count_ones() as i64 + exponent_degree(&self.alpha) as i64
    }
}

impl fmt::Display for KoszulBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", ExteriorBialgebra::format(self.a), format_exponent(&self.alpha))
    }
}

pub type KoszulChain = LinComb<KoszulBasis, i64>;

/// `K = Λ ⊗ 𝐒` with `d(a y_α) = Σ_i x_i a y_{α|i}` and the tensor product
/// coalgebra structure. Since `𝐒` is concentrated in even degrees, the
/// diagonal carries only the signs of `Λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KoszulComplex {
    rank: usize,
}

impl KoszulComplex {
    pub fn new(rank: usize) -> Self {
        KoszulComplex { rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn exterior(&self) -> ExteriorBialgebra {
        ExteriorBialgebra::new(self.rank)
    }

    pub fn coalgebra(&self) -> DividedCoalgebra {
        DividedCoalgebra::new(self.rank)
    }

    pub fn unit(&self) -> KoszulBasis {
        KoszulBasis::coalgebra(vec![0; self.rank])
    }

    pub fn basis(&self, degree: usize) -> Vec<KoszulBasis> {
        let lambda = self.exterior();
        let mut out = Vec::new();
        for e in 0..=degree.min(self.rank) {
            for alpha in self.coalgebra().basis(degree - e) {
                for a in lambda.basis(e) {
                    out.push(KoszulBasis::new(a, alpha.clone()));
                }
            }
        }
        out.sort();
        out
    }

    pub fn differential(&self, k: &KoszulBasis) -> KoszulChain {
        let mut out = LinComb::zero();
        for i in 0..self.rank {
            let Some(beta) = lower(&k.alpha, i) else { continue };
            if let Some((m, s)) = ExteriorBialgebra::product(ExteriorBialgebra::generator(i), k.a) {
                out.add_term(KoszulBasis::new(m, beta), s);
            }
        }
        out
    }

    pub fn differential_chain(&self, c: &KoszulChain) -> KoszulChain {
        c.map_linear(|k| self.differential(k))
    }

    pub fn diagonal(&self, k: &KoszulBasis) -> LinComb<(KoszulBasis, KoszulBasis), i64> {
        let mut out = LinComb::zero();
        for (a1, a2, s) in ExteriorBialgebra::coproduct(k.a) {
            for (b1, b2) in DividedCoalgebra::diagonal(&k.alpha) {
                out.add_term((KoszulBasis::new(a1, b1), KoszulBasis::new(a2, b2)), s);
            }
        }
        out
    }

    /// The map `K → 𝐒` induced by the augmentation of `Λ`.
    pub fn to_coalgebra(&self, k: &KoszulBasis) -> Option<Exponent> {
        (k.a == 0).then(|| k.alpha.clone())
    }

    /// The complex in degrees `0..=top`, homologically graded; degree `top`
    /// is a truncation edge.
    pub fn complex(&self, top: usize) -> Result<FgComplex> {
        let bases: Vec<Vec<KoszulBasis>> = (0..=top).map(|d| self.basis(d)).collect();
        let mut dims = vec![0];
        dims.extend(bases.iter().map(Vec::len));
        let mut diffs = vec![crate::homlin::SparseMatrix::new(0, bases[0].len())];
        for d in 1..=top {
            diffs.push(matrix_of(&bases[d], &bases[d - 1], |k| Ok(self.differential(k)))?);
        }
        FgComplex::window(-1, dims, diffs)
    }

    /// `H_d(K)` for `0 ≤ d < top`.
    pub fn homology(&self, top: usize) -> Result<Vec<HomologyGroup>> {
        let c = self.complex(top)?;
        (0..top as i64).map(|d| c.homology(d)).collect()
    }
}
