//! The quasi-isomorphism `F: K → C(ET)` and the formality map `f = π_* F`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use super::koszul::{format_exponent, lower, DividedCoalgebra, Exponent, ExteriorBialgebra, ExteriorMonomial, KoszulBasis, KoszulChain, KoszulComplex};
use crate::certificate::Certificate;
use crate::chains::{aw_diagonal, boundary, extra_degeneracy, group_action, pontryagin_product, project_chain, Chain, Cochain, Tensor};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::simplicial::{BundleSimplex, ClassifyingSimplex, SimplicialGroup, SimplicialSet, TorusGroup, TorusSimplex, UniversalBundle};
use crate::surjections::{aw_hat, interval_cut, Surjection};

pub type TorusChain = Chain<TorusSimplex, i64>;
pub type TotalChain = Chain<BundleSimplex<TorusSimplex>, i64>;
pub type BaseChain = Chain<ClassifyingSimplex<TorusSimplex>, i64>;

/// Representatives `c_i ∈ C_1(T)` of the generators of `H_1(T)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RepChoice {
    rank: usize,
    loops: Vec<TorusChain>,
}

impl RepChoice {
    /// `c_i = [e_i]`, the minimal loop around circle `i`.
    pub fn unit_loops(rank: usize) -> Self {
        RepChoice {
            rank,
            loops: (0..rank).map(|i| Chain::basis(TorusSimplex::unit_loop(rank, i))).collect(),
        }
    }

    /// Checks that every `c_i` is a combination of loops at the identity
    /// whose homology class is `e_i`.
    pub fn new(rank: usize, loops: Vec<TorusChain>) -> Result<Self> {
        if loops.len() != rank {
            return Err(Error::Invalid(format!("{} representatives for a rank {rank} torus", loops.len())));
        }
        let group = TorusGroup::new(rank);
        let vertex = group.identity(0);
        for (i, c) in loops.iter().enumerate() {
            let mut class = vec![0i64; rank];
            for (s, a) in c {
                if s.rank != rank || s.entries.len() != 1 {
                    return Err(Error::Invalid(format!("c_{} has a term {s:?} that is not a 1-simplex", i + 1)));
                }
                if group.face(s, 0) != vertex || group.face(s, 1) != vertex {
                    return Err(Error::Invalid(format!("c_{} has a term {s:?} that is not a loop", i + 1)));
                }
                for (k, g) in class.iter_mut().zip(&s.entries[0]) {
                    *k += a * g;
                }
            }
            let mut expected = vec![0; rank];
            expected[i] = 1;
            if class != expected {
                return Err(Error::Invalid(format!("c_{} has class {class:?}, expected {expected:?}", i + 1)));
            }
        }
        Ok(RepChoice { rank, loops })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn loops(&self) -> &[TorusChain] {
        &self.loops
    }

    /// Whether each `c_i` lives on circle `i` alone, as naturality requires.
    pub fn is_coordinatewise(&self) -> bool {
        self.loops
            .iter()
            .enumerate()
            .all(|(i, c)| c.keys().all(|s| s.support().iter().all(|&j| j == i)))
    }
}

/// Outcome of the empirical `∪₂` probe on one `y_α`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CupTwoProbe {
    pub alpha: Exponent,
    /// `AW_{(1,2,1,2)} f(y_α) = 0` at chain level.
    pub vanishes: bool,
    /// `(1 + T) AW_{(1,2,1,2)} f(y_α) = 0`, with `T` the signed swap.
    pub symmetrized_vanishes: bool,
    pub terms: usize,
}

/// `F`, `f` and the checks built on them, for the simplicial torus of a given rank.
pub struct TorusFormality {
    group: TorusGroup,
    bundle: UniversalBundle<TorusGroup>,
    reps: RepChoice,
    koszul: KoszulComplex,
    // F(y_α); concurrent fills compute the same value, so the last write wins harmlessly
    memo: Mutex<HashMap<Exponent, Arc<TotalChain>>>,
}

fn summarize<K: std::fmt::Debug + Ord + Clone>(c: &LinComb<K, i64>) -> String {
    let shown: Vec<String> = c.iter().take(4).map(|(k, a)| format!("{a}*{k:?}")).collect();
    let more = if c.len() > 4 { format!(" + ... ({} terms)", c.len()) } else { String::new() };
    format!("{}{more}", shown.join(" + "))
}

impl TorusFormality {
    pub fn new(rank: usize) -> Self {
        Self::with_reps(RepChoice::unit_loops(rank))
    }

    pub fn with_reps(reps: RepChoice) -> Self {
        let group = TorusGroup::new(reps.rank());
        TorusFormality {
            group,
            bundle: UniversalBundle::new(group),
            koszul: KoszulComplex::new(reps.rank()),
            reps,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn rank(&self) -> usize {
        self.reps.rank()
    }

    pub fn group(&self) -> &TorusGroup {
        &self.group
    }

    pub fn bundle(&self) -> &UniversalBundle<TorusGroup> {
        &self.bundle
    }

    pub fn koszul(&self) -> &KoszulComplex {
        &self.koszul
    }

    pub fn reps(&self) -> &RepChoice {
        &self.reps
    }

    /// `φ(x_S)`, the Pontryagin product of the `c_i` for `i ∈ S` in increasing order.
    pub fn phi(&self, a: ExteriorMonomial) -> TorusChain {
        let mut out = Chain::basis(self.group.identity(0));
        for i in 0..self.rank() {
            if a & (1 << i) != 0 {
                out = pontryagin_product(&self.group, &out, &self.reps.loops[i]);
            }
        }
        out
    }

    pub fn phi_element(&self, a: &LinComb<ExteriorMonomial, i64>) -> TorusChain {
        a.map_linear(|m| self.phi(*m))
    }

    fn f_coalgebra(&self, alpha: &[u32]) -> Arc<TotalChain> {
        if let Some(c) = self.memo.lock().unwrap().get(alpha) {
            return c.clone();
        }
        let value = if alpha.iter().all(|&a| a == 0) {
            Chain::basis(self.bundle.basepoint())
        } else {
            // d y_α = Σ_i x_i y_{α|i}
            let mut dy = TotalChain::zero();
            for i in 0..self.rank() {
                if let Some(beta) = lower(alpha, i) {
                    let inner = self.f_coalgebra(&beta);
                    dy += &group_action(&self.group, &self.bundle.total, &self.reps.loops[i], &inner);
                }
            }
            extra_degeneracy(&self.bundle, &dy)
        };
        let value = Arc::new(value);
        self.memo.lock().unwrap().insert(alpha.to_vec(), value.clone());
        value
    }

    /// `F(a y_α) = φ(a) · F(y_α)`.
    pub fn big_f(&self, k: &KoszulBasis) -> TotalChain {
        let y = self.f_coalgebra(&k.alpha);
        if k.a == 0 {
            return (*y).clone();
        }
        group_action(&self.group, &self.bundle.total, &self.phi(k.a), &y)
    }

    pub fn big_f_chain(&self, c: &KoszulChain) -> TotalChain {
        c.map_linear(|k| self.big_f(k))
    }

    /// `f(y_α) = π_* F(y_α)`.
    pub fn f(&self, alpha: &[u32]) -> BaseChain {
        project_chain(&self.bundle, &self.f_coalgebra(alpha))
    }

    pub fn f_chain(&self, y: &LinComb<Exponent, i64>) -> BaseChain {
        y.map_linear(|a| self.f(a))
    }

    /// `(ᵗf γ)(y_α) = γ(f(y_α))`.
    pub fn f_pair(&self, gamma: &Cochain<ClassifyingSimplex<TorusSimplex>, i64>, alpha: &[u32]) -> i64 {
        gamma.evaluate(&self.f(alpha))
    }

    fn instance(k: &KoszulBasis) -> String {
        format!("{k}")
    }

    fn window(&self) -> String {
        format!("rank {}", self.rank())
    }

    /// `dF(k) = F(dk)`.
    pub fn check_chain_map(&self, k: &KoszulBasis) -> Certificate {
        let lhs = boundary(&self.bundle.total, &self.big_f(k));
        let rhs = self.big_f_chain(&self.koszul.differential(k));
        let diff = &lhs - &rhs;
        Certificate::new("dF = Fd", Self::instance(k), self.window())
            .with_witness((!diff.is_zero()).then(|| summarize(&diff)))
    }

    /// `ΔF(k) = (F ⊗ F)Δ_K(k)`.
    pub fn check_coalgebra(&self, k: &KoszulBasis) -> Certificate {
        let lhs: Tensor<_, i64> = aw_diagonal(&self.bundle.total, &self.big_f(k));
        let mut rhs = Tensor::zero();
        for ((k1, k2), s) in &self.koszul.diagonal(k) {
            let (a, b) = (self.big_f(k1), self.big_f(k2));
            for (x, p) in &a {
                for (y, q) in &b {
                    rhs.add_term(vec![x.clone(), y.clone()], s * p * q);
                }
            }
        }
        let diff = &lhs - &rhs;
        Certificate::new("ΔF = (F⊗F)Δ", Self::instance(k), self.window())
            .with_witness((!diff.is_zero()).then(|| summarize(&diff)))
    }

    /// `Δf(y_α) = (f ⊗ f)Δ(y_α)` on `C(BT)`.
    pub fn check_f_coalgebra(&self, alpha: &[u32]) -> Certificate {
        let lhs: Tensor<_, i64> = aw_diagonal(&self.bundle.base, &self.f(alpha));
        let mut rhs = Tensor::zero();
        for (b, c) in DividedCoalgebra::diagonal(alpha) {
            for (x, p) in &self.f(&b) {
                for (y, q) in &self.f(&c) {
                    rhs.add_term(vec![x.clone(), y.clone()], p * q);
                }
            }
        }
        let diff = &lhs - &rhs;
        Certificate::new("Δf = (f⊗f)Δ", format_exponent(alpha), self.window())
            .with_witness((!diff.is_zero()).then(|| summarize(&diff)))
    }

    /// `F(a · k) = φ(a) · F(k)`, compared through the action's own associativity.
    pub fn check_equivariance(&self, a: ExteriorMonomial, k: &KoszulBasis) -> Certificate {
        let lhs = match ExteriorBialgebra::product(a, k.a) {
            Some((m, s)) => self.big_f(&KoszulBasis::new(m, k.alpha.clone())).scale(&s),
            None => TotalChain::zero(),
        };
        let rhs = group_action(&self.group, &self.bundle.total, &self.phi(a), &self.big_f(k));
        let diff = &lhs - &rhs;
        Certificate::new("F(a·k) = φ(a)·F(k)", format!("a={} k={k}", ExteriorBialgebra::format(a)), self.window())
            .with_witness((!diff.is_zero()).then(|| summarize(&diff)))
    }

    /// `AW_u f(y_α) = 0` for a strongly biased `u`.
    pub fn verify_vanishing(&self, u: &Surjection, alpha: &[u32]) -> Result<Certificate> {
        if !u.classify().strongly_biased {
            return Err(Error::NotStronglyBiased(u.values().to_vec()));
        }
        let image: Tensor<_, i64> = interval_cut(u, &self.bundle.base, &self.f(alpha));
        Ok(Certificate::new("AW_u f = 0", format!("u={u} y={}", format_exponent(alpha)), self.window())
            .with_witness((!image.is_zero()).then(|| summarize(&image))))
    }

    /// `ÂW_u F(k) = 0` for a strongly 1-biased `u`.
    pub fn verify_vanishing_hat(&self, u: &Surjection, k: &KoszulBasis) -> Result<Certificate> {
        if !u.classify().strongly_one_biased {
            return Err(Error::NotStronglyBiased(u.values().to_vec()));
        }
        let image = aw_hat(u, &self.bundle, &self.big_f(k))?;
        Ok(Certificate::new("ÂW_u F = 0", format!("u={u} k={k}"), self.window())
            .with_witness((!image.is_zero()).then(|| summarize(&image))))
    }

    /// The checkable part of `H(f) = id`: `f(1)` is the base vertex, `f(y_α)`
    /// is a cycle, and it pairs nontrivially with the dual of some simplex in
    /// its support.
    pub fn check_homology_surrogate(&self, alpha: &[u32]) -> Certificate {
        let c = self.f(alpha);
        let witness = if alpha.iter().all(|&a| a == 0) {
            (c != Chain::basis(self.bundle.base_vertex())).then(|| format!("f(1) = {}", summarize(&c)))
        } else if !boundary(&self.bundle.base, &c).is_zero() {
            Some("f(y) is not a cycle".into())
        } else if c.is_zero() {
            Some("f(y) vanishes, so no dual of its support pairs nontrivially".into())
        } else {
            None
        };
        Certificate::new("f is a cycle-valued chain map on 𝐒", format_exponent(alpha), self.window()).with_witness(witness)
    }

    /// Whether `f(y_α)` already kills `∪₂`, evaluated at chain level; no claim
    /// is attached to the answer.
    pub fn cup_two_probe(&self, alpha: &[u32]) -> CupTwoProbe {
        let u = Surjection::new(vec![1, 2, 1, 2]).expect("valid surjection");
        let c = self.f(alpha);
        let image: Tensor<_, i64> = interval_cut(&u, &self.bundle.base, &c);
        let swapped = crate::chains::swap_factors(&image);
        let sym = &image + &swapped;
        CupTwoProbe {
            alpha: alpha.to_vec(),
            vanishes: image.is_zero(),
            symmetrized_vanishes: sym.is_zero(),
            terms: image.len(),
        }
    }

    /// Strongly biased surjections of degree `1..=max_degree` and arity `2..=max_arity`.
    pub fn strongly_biased_surjections(max_degree: usize, max_arity: usize) -> Vec<Surjection> {
        let mut out = Vec::new();
        for l in 2..=max_arity {
            for k in 1..=max_degree {
                out.extend(Surjection::enumerate(k + l, l).into_iter().filter(|u| u.classify().strongly_biased));
            }
        }
        out
    }

    /// `AW_u f(y_α)` for every strongly biased `u` in range and `2|α| ≤ max_degree`.
    pub fn vanishing_suite(&self, max_u_degree: usize, max_arity: usize, max_degree: usize) -> Vec<Certificate> {
        let us = Self::strongly_biased_surjections(max_u_degree, max_arity);
        let s = self.koszul.coalgebra();
        let mut out = Vec::new();
        for d in (2..=max_degree).step_by(2) {
            for alpha in s.basis(d) {
                for u in &us {
                    out.push(self.verify_vanishing(u, &alpha).expect("strongly biased by construction"));
                }
            }
        }
        out
    }
}
