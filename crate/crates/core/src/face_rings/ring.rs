//! Face rings `𝕜[Σ] = lim_σ 𝕜[σ]` as compatible tuples of polynomials.

use std::collections::BTreeSet;

use super::poset::{SimplicialPoset, VertexPreservingMap};
use crate::bar_hga::{Element, Gen, PresentedDGA, UNIT};
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::homlin::{monomials_of_degree, rank_of_vectors, Monomial, Polynomial};
use crate::lincomb::LinComb;
use crate::ring::CoefficientRing;

/// A homogeneous element of `𝕜[Σ]`: one polynomial per maximal element, in
/// the vertex variables of that element, each variable of degree 2.
#[derive(Clone, Debug, PartialEq)]
pub struct FaceRingElement {
    degree: usize,
    components: Vec<Polynomial>,
}

impl FaceRingElement {
    /// The internal degree, always even.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(LinComb::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "adding face ring elements of different degrees");
        FaceRingElement {
            degree: self.degree,
            components: self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, r: i64) -> Self {
        FaceRingElement {
            degree: self.degree,
            components: self.components.iter().map(|p| p.scale(&r)).collect(),
        }
    }
}

/// A basis element `x_{σ,α}`: the tuple with `t^α` on every maximal element
/// above `σ`, where the support of `α` is exactly the vertex set of `σ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceBasis {
    pub element: usize,
    pub exponent: Monomial,
}

fn multiply_polynomials(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero();
    for (m, s) in a {
        for (n, t) in b {
            out.add_term(m.iter().zip(n).map(|(x, y)| x + y).collect(), s * t);
        }
    }
    out
}

fn restrict(p: &Polynomial, vertices: &[usize]) -> Polynomial {
    p.filter(|m| m.iter().enumerate().all(|(v, &e)| e == 0 || vertices.contains(&v)))
}

fn support(m: &[u32]) -> Vec<usize> {
    (0..m.len()).filter(|&v| m[v] > 0).collect()
}

#[derive(Clone, Debug)]
pub struct FaceRing {
    poset: SimplicialPoset,
    maximal: Vec<usize>,
}

impl FaceRing {
    pub fn new(poset: SimplicialPoset) -> Self {
        let maximal = poset.maximal();
        FaceRing { poset, maximal }
    }

    pub fn poset(&self) -> &SimplicialPoset {
        &self.poset
    }

    pub fn maximal(&self) -> &[usize] {
        &self.maximal
    }

    fn n(&self) -> usize {
        self.poset.n_vertices()
    }

    pub fn zero(&self, degree: usize) -> FaceRingElement {
        FaceRingElement {
            degree,
            components: vec![Polynomial::zero(); self.maximal.len()],
        }
    }

    /// A tuple given directly, one polynomial per maximal element.
    pub fn from_components(&self, degree: usize, components: Vec<Polynomial>) -> FaceRingElement {
        assert_eq!(components.len(), self.maximal.len(), "one component per maximal element");
        FaceRingElement { degree, components }
    }

    pub fn one(&self) -> FaceRingElement {
        self.t(self.poset.bottom())
    }

    /// `x_{σ,α}`; `α` must have support exactly the vertices of `σ`.
    pub fn basis_element(&self, b: &FaceBasis) -> FaceRingElement {
        debug_assert_eq!(support(&b.exponent), self.poset.vertices_of(b.element));
        let degree = 2 * b.exponent.iter().map(|&e| e as usize).sum::<usize>();
        FaceRingElement {
            degree,
            components: self
                .maximal
                .iter()
                .map(|&mu| {
                    if self.poset.leq(b.element, mu) {
                        Polynomial::basis(b.exponent.clone())
                    } else {
                        Polynomial::zero()
                    }
                })
                .collect(),
        }
    }

    /// `t_σ`: the square-free monomial of `σ` on every maximal element above it.
    pub fn t(&self, sigma: usize) -> FaceRingElement {
        let mut m = vec![0; self.n()];
        for &v in self.poset.vertices_of(sigma) {
            m[v] = 1;
        }
        self.basis_element(&FaceBasis {
            element: sigma,
            exponent: m,
        })
    }

    /// The image of the polynomial generator `t_v` under the folding map.
    pub fn vertex(&self, v: usize) -> FaceRingElement {
        let mut out = self.zero(2);
        for a in self.poset.atoms() {
            if self.poset.vertices_of(a) == [v] {
                out = out.add(&self.t(a));
            }
        }
        out
    }

    pub fn multiply(&self, a: &FaceRingElement, b: &FaceRingElement) -> FaceRingElement {
        FaceRingElement {
            degree: a.degree + b.degree,
            components: a.components.iter().zip(&b.components).map(|(p, q)| multiply_polynomials(p, q)).collect(),
        }
    }

    /// The component of `e` in `𝕜[ρ]`, read off any maximal element above `ρ`.
    pub fn component_at(&self, e: &FaceRingElement, rho: usize) -> Polynomial {
        let k = self
            .maximal
            .iter()
            .position(|&mu| self.poset.leq(rho, mu))
            .expect("every element lies below a maximal one");
        restrict(&e.components[k], self.poset.vertices_of(rho))
    }

    /// Whether the tuple agrees under restriction to every common lower bound.
    pub fn is_compatible(&self, e: &FaceRingElement) -> bool {
        for (i, &mu) in self.maximal.iter().enumerate() {
            if e.components[i].keys().any(|m| support(m).iter().any(|v| !self.poset.vertices_of(mu).contains(v))) {
                return false;
            }
            for (j, &nu) in self.maximal.iter().enumerate().skip(i + 1) {
                for &rho in self.poset.below(mu).intersection(self.poset.below(nu)) {
                    let vs = self.poset.vertices_of(rho);
                    if restrict(&e.components[i], vs) != restrict(&e.components[j], vs) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The basis `x_{σ,α}` of the internal degree `degree` part.
    pub fn basis(&self, degree: usize) -> Vec<FaceBasis> {
        if degree % 2 == 1 {
            return Vec::new();
        }
        let d = degree / 2;
        let mut out = Vec::new();
        for sigma in 0..self.poset.len() {
            let vs = self.poset.vertices_of(sigma);
            if vs.len() > d || (vs.is_empty() && d > 0) {
                continue;
            }
            // distribute d - |σ| extra powers over the vertices of σ
            let var_degrees = vec![1; vs.len()];
            for extra in monomials_of_degree(&var_degrees, d - vs.len()) {
                let mut m = vec![0; self.n()];
                for (k, &v) in vs.iter().enumerate() {
                    m[v] = 1 + extra[k];
                }
                out.push(FaceBasis {
                    element: sigma,
                    exponent: m,
                });
            }
        }
        out.sort();
        out
    }

    pub fn dim(&self, degree: usize) -> usize {
        self.basis(degree).len()
    }

    /// `dim 𝕜[Σ]_{2d}` for `d = 0..=max_d`.
    pub fn hilbert(&self, max_d: usize) -> Vec<usize> {
        (0..=max_d).map(|d| self.dim(2 * d)).collect()
    }

    /// Coordinates of a compatible element in the basis `x_{σ,α}`.
    pub fn coordinates(&self, e: &FaceRingElement) -> LinComb<FaceBasis, i64> {
        let mut out = LinComb::zero();
        let mut seen = BTreeSet::new();
        for (k, &mu) in self.maximal.iter().enumerate() {
            for (m, c) in &e.components[k] {
                let vs = support(m);
                let sigma = self.poset.face_with_vertices(mu, &vs).expect("component uses vertices of its element");
                let b = FaceBasis {
                    element: sigma,
                    exponent: m.clone(),
                };
                if seen.insert(b.clone()) {
                    out.add_term(b, *c);
                }
            }
        }
        out
    }

    /// Dimension of the limit in internal degree `degree`, by solving the
    /// compatibility equations directly.
    pub fn limit_dimension(&self, degree: usize, ring: CoefficientRing) -> Result<usize> {
        if degree % 2 == 1 {
            return Ok(0);
        }
        let d = degree / 2;
        let n = self.n();
        // unknowns: (maximal index, monomial in its vertices)
        let mut unknowns = Vec::new();
        for (k, &mu) in self.maximal.iter().enumerate() {
            let vs = self.poset.vertices_of(mu);
            for e in monomials_of_degree(&vec![1; vs.len()], d) {
                let mut m = vec![0; n];
                for (i, &v) in vs.iter().enumerate() {
                    m[v] = e[i];
                }
                unknowns.push((k, m));
            }
        }
        // one equation per (pair of maximal elements, common lower bound, monomial on it)
        let mut equations: Vec<LinComb<usize, i64>> = Vec::new();
        for (i, &mu) in self.maximal.iter().enumerate() {
            for (j, &nu) in self.maximal.iter().enumerate().skip(i + 1) {
                for &rho in self.poset.below(mu).intersection(self.poset.below(nu)) {
                    let vs = self.poset.vertices_of(rho);
                    for (u, (k, m)) in unknowns.iter().enumerate() {
                        if *k != i || !support(m).iter().all(|v| vs.contains(v)) {
                            continue;
                        }
                        let partner = unknowns.iter().position(|(k2, m2)| *k2 == j && m2 == m).expect("shared monomial");
                        equations.push([(u, 1), (partner, -1)].into_iter().collect());
                    }
                }
            }
        }
        Ok(unknowns.len() - rank_of_vectors(&equations, ring)?)
    }

    fn flatten(&self, e: &FaceRingElement) -> LinComb<(usize, Monomial), i64> {
        let mut out = LinComb::zero();
        for (k, p) in e.components.iter().enumerate() {
            for (m, c) in p {
                out.add_term((k, m.clone()), *c);
            }
        }
        out
    }

    /// Dimension of the span of products of the generators `t_σ` in internal
    /// degree `degree`.
    pub fn generated_dimension(&self, degree: usize, ring: CoefficientRing) -> Result<usize> {
        let gens: Vec<usize> = (0..self.poset.len()).filter(|&s| self.poset.rank(s) > 0).collect();
        let mut products = Vec::new();
        fn rec(ring: &FaceRing, gens: &[usize], start: usize, left: usize, acc: FaceRingElement, out: &mut Vec<FaceRingElement>) {
            if left == 0 {
                out.push(acc);
                return;
            }
            for (i, &s) in gens.iter().enumerate().skip(start) {
                let r = 2 * ring.poset.rank(s);
                if r <= left {
                    let next = ring.multiply(&acc, &ring.t(s));
                    if !next.is_zero() {
                        rec(ring, gens, i, left - r, next, out);
                    }
                }
            }
        }
        if degree % 2 == 1 {
            return Ok(0);
        }
        rec(self, &gens, 0, degree, self.one(), &mut products);
        let vectors: Vec<_> = products.iter().map(|p| self.flatten(p)).collect();
        rank_of_vectors(&vectors, ring)
    }

    /// `t_0̂ = 1` and `t_σ t_τ = t_{σ∧τ} Σ_{ρ ∈ σ∨τ} t_ρ` for all pairs.
    pub fn check_relations(&self) -> Vec<Certificate> {
        let mut out = Vec::new();
        let unit = self.one();
        let ones = FaceRingElement {
            degree: 0,
            components: vec![Polynomial::basis(vec![0; self.n()]); self.maximal.len()],
        };
        out.push(Certificate::new("t_0̂ = 1", "0̂", "all").with_witness((unit != ones).then(|| "t_0̂ differs from 1".into())));
        for a in 0..self.poset.len() {
            for b in a..self.poset.len() {
                let lhs = self.multiply(&self.t(a), &self.t(b));
                let joins = self.poset.join(a, b);
                let rhs = if joins.is_empty() {
                    self.zero(lhs.degree)
                } else {
                    let meet = self.poset.meet(a, b).expect("elements with a join have a meet");
                    let mut sum = self.zero(lhs.degree - 2 * self.poset.rank(meet));
                    for &r in &joins {
                        sum = sum.add(&self.t(r));
                    }
                    self.multiply(&self.t(meet), &sum)
                };
                let instance = format!("σ={} τ={}", self.poset.id(a), self.poset.id(b));
                out.push(
                    Certificate::new("t_σ t_τ = t_{σ∧τ} Σ t_ρ", instance, "all")
                        .with_witness((lhs != rhs).then(|| format!("{:?} vs {:?}", self.coordinates(&lhs), self.coordinates(&rhs)))),
                );
            }
        }
        out
    }

    /// `κ*: 𝕜[Σ'] → 𝕜[Σ]` for `κ: Σ → Σ'`, where `self` is `𝕜[Σ']`.
    pub fn pullback(&self, kappa: &VertexPreservingMap, source: &FaceRing, e: &FaceRingElement) -> FaceRingElement {
        FaceRingElement {
            degree: e.degree,
            components: source.maximal.iter().map(|&mu| self.component_at(e, kappa.image(mu))).collect(),
        }
    }

    /// The face ring truncated at internal degree `top`, as a presented
    /// algebra on the basis `x_{σ,α}`.
    pub fn to_dga(&self, top: usize) -> Result<PresentedDGA> {
        let complete = (0..self.poset.len()).all(|s| self.poset.rank(s) == 0);
        let top = if complete { 0 } else { top };
        let bases: Vec<Vec<FaceBasis>> = (0..=top).map(|q| self.basis(q)).collect();
        let labels: Vec<Vec<String>> = bases.iter().map(|bs| bs.iter().map(|b| self.format_basis(b)).collect()).collect();
        let index = |b: &FaceBasis| -> Gen {
            let q = 2 * b.exponent.iter().map(|&e| e as usize).sum::<usize>();
            Gen::new(q as i64, bases[q].binary_search(b).expect("basis element in window"))
        };
        let mul = |a: Gen, b: Gen| -> Element {
            let x = self.basis_element(&bases[a.degree as usize][a.index]);
            let y = self.basis_element(&bases[b.degree as usize][b.index]);
            self.coordinates(&self.multiply(&x, &y)).rekey(index)
        };
        debug_assert_eq!(index(&bases[0][0]), UNIT);
        PresentedDGA::from_rules(format!("face ring ({} elements)", self.poset.len()), labels, complete, None, &mul)
    }

    pub fn format_basis(&self, b: &FaceBasis) -> String {
        if b.exponent.iter().all(|&e| e == 0) {
            return "1".into();
        }
        let mut s = String::new();
        for (v, &e) in b.exponent.iter().enumerate() {
            if e > 0 {
                s.push_str(&format!("t{}", self.poset.vertex_label(v)));
                if e > 1 {
                    s.push_str(&format!("^{e}"));
                }
            }
        }
        if !self.poset.is_complex() {
            s.push_str(&format!("@{}", self.poset.id(b.element)));
        }
        s
    }
}

/// Exactness of `0 → 𝕜[Σ] → 𝕜[Σ₁] ⊕ 𝕜[Σ₂] → 𝕜[Σ₁ ∩ Σ₂] → 0` in each even
/// degree up to `max_degree`, by rank computations on the restriction maps.
pub fn mayer_vietoris_check(
    poset: &SimplicialPoset,
    part1: &BTreeSet<usize>,
    part2: &BTreeSet<usize>,
    max_degree: usize,
    ring: CoefficientRing,
) -> Result<Vec<Certificate>> {
    let union: BTreeSet<usize> = part1.union(part2).copied().collect();
    if union.len() != poset.len() {
        let missing: Vec<&str> = (0..poset.len()).filter(|i| !union.contains(i)).map(|i| poset.id(i)).collect();
        return Err(Error::NotACover(format!("elements {missing:?} are in neither part")));
    }
    let inter: BTreeSet<usize> = part1.intersection(part2).copied().collect();
    let whole = FaceRing::new(poset.clone());
    let (p1, m1) = poset.subposet(part1)?;
    let (p2, m2) = poset.subposet(part2)?;
    let (p12, m12) = poset.subposet(&inter)?;
    let r1 = FaceRing::new(p1.clone());
    let r2 = FaceRing::new(p2.clone());
    let r12 = FaceRing::new(p12.clone());
    let k1 = VertexPreservingMap::inclusion(&p1, poset, &m1)?;
    let k2 = VertexPreservingMap::inclusion(&p2, poset, &m2)?;
    // Σ₁ ∩ Σ₂ inside each part
    let into = |m: &[usize], target: &[usize], sub: &SimplicialPoset, part: &SimplicialPoset| {
        let images = m.iter().map(|o| target.iter().position(|t| t == o).expect("intersection lies in the part")).collect();
        VertexPreservingMap::new(sub, part, images)
    };
    let k12_1 = into(&m12, &m1, &p12, &p1)?;
    let k12_2 = into(&m12, &m2, &p12, &p2)?;

    let mut out = Vec::new();
    for degree in (0..=max_degree).step_by(2) {
        let (ba, b1, b2, b12) = (whole.basis(degree), r1.basis(degree), r2.basis(degree), r12.basis(degree));
        // columns of α: 𝕜[Σ] → 𝕜[Σ₁] ⊕ 𝕜[Σ₂], keyed (part, basis)
        let alpha: Vec<LinComb<(u8, FaceBasis), i64>> = ba
            .iter()
            .map(|b| {
                let e = whole.basis_element(b);
                let x = r1.coordinates(&whole.pullback(&k1, &r1, &e)).rekey(|c| (1u8, c.clone()));
                let y = r2.coordinates(&whole.pullback(&k2, &r2, &e)).rekey(|c| (2u8, c.clone()));
                &x + &y
            })
            .collect();
        let beta_of = |part: u8, b: &FaceBasis| -> LinComb<FaceBasis, i64> {
            if part == 1 {
                r12.coordinates(&r1.pullback(&k12_1, &r12, &r1.basis_element(b)))
            } else {
                r12.coordinates(&r2.pullback(&k12_2, &r12, &r2.basis_element(b))).scale(&-1)
            }
        };
        let beta: Vec<LinComb<FaceBasis, i64>> = b1.iter().map(|b| beta_of(1, b)).chain(b2.iter().map(|b| beta_of(2, b))).collect();
        let composite_zero = alpha.iter().all(|col| {
            let mut img = LinComb::<FaceBasis, i64>::zero();
            for ((part, b), c) in col {
                img.add_scaled(&beta_of(*part, b), c);
            }
            img.is_zero()
        });
        let rank_alpha = rank_of_vectors(&alpha, ring)?;
        let rank_beta = rank_of_vectors(&beta, ring)?;
        let dims = (ba.len(), b1.len(), b2.len(), b12.len());
        let witness = if !composite_zero {
            Some("restriction maps do not compose to zero".to_string())
        } else if rank_alpha != dims.0 {
            Some(format!("restriction to the parts has rank {rank_alpha} < {}", dims.0))
        } else if rank_beta != dims.3 {
            Some(format!("difference map has rank {rank_beta} < {}", dims.3))
        } else if dims.0 + dims.3 != dims.1 + dims.2 {
            Some(format!("not exact in the middle: dims {dims:?}"))
        } else {
            None
        };
        out.push(
            Certificate::new("Mayer–Vietoris sequence exact", format!("degree {degree}, dims {dims:?}"), format!("degrees ≤ {max_degree}"))
                .with_witness(witness),
        );
    }
    Ok(out)
}
