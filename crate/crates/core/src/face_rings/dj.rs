//! Davis–Januszkiewicz simplicial sets and the assembled formality map.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use super::poset::SimplicialPoset;
use super::ring::{FaceRing, FaceRingElement};
use crate::certificate::Certificate;
use crate::chains::{cup_product, Chain, Cochain};
use crate::error::{Error, Result};
use crate::homlin::Polynomial;
use crate::lincomb::Graded;
use crate::simplicial::{Cell, ClassifyingSimplex, ClassifyingSpace, MonotoneMap, SimplicialSet, TorusGroup, TorusSimplex};
use crate::surjections::{interval_cut, Surjection};
use crate::torus_formality::{exponents, CoordinateMap, TorusFormality};

/// A simplex of `DJ_Σ = colim_σ DJ_σ`: a simplex `x` of `BT` together with
/// the unique element `σ` whose vertex set is the support of `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DJSimplex {
    pub element: usize,
    pub simplex: ClassifyingSimplex<TorusSimplex>,
}

impl Graded for DJSimplex {
    fn degree(&self) -> i64 {
        self.simplex.degree()
    }
}

impl Cell for DJSimplex {}

/// Coordinates used by a simplex of `BT = B(Bℤ)^V`.
pub fn bt_support(x: &ClassifyingSimplex<TorusSimplex>) -> Vec<usize> {
    let s: BTreeSet<usize> = x.comps.iter().flat_map(TorusSimplex::support).collect();
    s.into_iter().collect()
}

/// `DJ_Σ` in its colimit model. In `DJ_σ ⊂ DJ_τ` for `σ ≤ τ`, a simplex
/// with support `S` is identified with its copy in the unique face of `τ`
/// with vertex set `S`, so every class has exactly one representative
/// `(σ, x)` with `V(σ) = supp x`.
#[derive(Clone, Debug)]
pub struct DJSpace {
    poset: Arc<SimplicialPoset>,
    base: ClassifyingSpace<TorusGroup>,
}

impl DJSpace {
    pub fn new(poset: SimplicialPoset) -> Self {
        let n = poset.n_vertices();
        DJSpace {
            poset: Arc::new(poset),
            base: ClassifyingSpace {
                group: TorusGroup::new(n),
            },
        }
    }

    pub fn poset(&self) -> &SimplicialPoset {
        &self.poset
    }

    /// `BT` for the torus on all vertices, ghosts included.
    pub fn ambient(&self) -> &ClassifyingSpace<TorusGroup> {
        &self.base
    }

    /// The class of `x ∈ DJ_σ`, if `x` lies there.
    pub fn lift(&self, sigma: usize, x: ClassifyingSimplex<TorusSimplex>) -> Option<DJSimplex> {
        let s = bt_support(&x);
        let element = self.poset.face_with_vertices(sigma, &s)?;
        Some(DJSimplex { element, simplex: x })
    }

    /// The map `DJ_Σ → BT` induced by the folding map.
    pub fn to_bt(&self, x: &DJSimplex) -> ClassifyingSimplex<TorusSimplex> {
        x.simplex.clone()
    }

    /// Membership in the subobject `⋃_σ DJ_σ ⊂ BT`, for simplicial complexes.
    pub fn contains(&self, x: &ClassifyingSimplex<TorusSimplex>) -> bool {
        let s = bt_support(x);
        (0..self.poset.len()).any(|i| self.poset.vertices_of(i) == s)
    }

    /// The lift of a subobject simplex; unique when `Σ` is a complex.
    pub fn lift_subobject(&self, x: &ClassifyingSimplex<TorusSimplex>) -> Option<DJSimplex> {
        let s = bt_support(x);
        let element = (0..self.poset.len()).find(|&i| self.poset.vertices_of(i) == s)?;
        Some(DJSimplex {
            element,
            simplex: x.clone(),
        })
    }

    pub fn lift_chain(&self, sigma: usize, c: &Chain<ClassifyingSimplex<TorusSimplex>, i64>) -> Result<Chain<DJSimplex, i64>> {
        let mut out = Chain::zero();
        for (x, a) in c {
            let y = self
                .lift(sigma, x.clone())
                .ok_or_else(|| Error::Invalid(format!("simplex does not lie in DJ_{}", self.poset.id(sigma))))?;
            out.add_term(y, *a);
        }
        Ok(out)
    }

    fn relabel(&self, element: usize, x: ClassifyingSimplex<TorusSimplex>) -> DJSimplex {
        let s = bt_support(&x);
        let element = self.poset.face_with_vertices(element, &s).expect("faces shrink the support");
        DJSimplex { element, simplex: x }
    }
}

impl SimplicialSet for DJSpace {
    type Simplex = DJSimplex;

    fn face(&self, x: &DJSimplex, i: usize) -> DJSimplex {
        self.relabel(x.element, self.base.face(&x.simplex, i))
    }

    fn degeneracy(&self, x: &DJSimplex, i: usize) -> DJSimplex {
        DJSimplex {
            element: x.element,
            simplex: self.base.degeneracy(&x.simplex, i),
        }
    }

    fn is_degenerate_at(&self, x: &DJSimplex, i: usize) -> bool {
        self.base.is_degenerate_at(&x.simplex, i)
    }

    fn is_degenerate(&self, x: &DJSimplex) -> bool {
        self.base.is_degenerate(&x.simplex)
    }

    fn act(&self, x: &DJSimplex, nu: &MonotoneMap) -> DJSimplex {
        self.relabel(x.element, self.base.act(&x.simplex, nu))
    }
}

/// The per-element formality maps `f_σ: 𝐒_σ → C(DJ_σ) ⊂ C(DJ_Σ)`, built from
/// one torus formality per rank and the coordinate inclusions.
pub struct DJFormality {
    space: DJSpace,
    tori: HashMap<usize, TorusFormality>,
}

impl DJFormality {
    pub fn new(poset: SimplicialPoset) -> Self {
        let ranks: BTreeSet<usize> = (0..poset.len()).map(|i| poset.rank(i)).collect();
        DJFormality {
            tori: ranks.into_iter().map(|r| (r, TorusFormality::new(r))).collect(),
            space: DJSpace::new(poset),
        }
    }

    pub fn space(&self) -> &DJSpace {
        &self.space
    }

    fn inclusion(&self, sigma: usize) -> CoordinateMap {
        let p = self.space.poset();
        CoordinateMap::inclusion(p.n_vertices(), p.vertices_of(sigma).to_vec()).expect("vertices of an element are distinct")
    }

    /// `f_σ(y_α)` with `α` indexed by the vertices of `σ` in increasing order.
    pub fn f_sigma(&self, sigma: usize, alpha: &[u32]) -> Chain<DJSimplex, i64> {
        let t = &self.tori[&self.space.poset().rank(sigma)];
        let c = self.inclusion(sigma).on_base_chain(&t.f(alpha));
        self.space.lift_chain(sigma, &c).expect("the image of f_σ lies in DJ_σ")
    }

    /// `f_ρ(y_α) = f_σ(y_{ια})` for every covering pair `ρ ⋖ σ` and `2|α| ≤ max_degree`.
    pub fn check_compatibility(&self, max_degree: usize) -> Vec<Certificate> {
        let p = self.space.poset();
        let mut out = Vec::new();
        for sigma in 0..p.len() {
            for &rho in &p.element(sigma).covers {
                let vs = p.vertices_of(sigma);
                let positions: Vec<usize> = p.vertices_of(rho).iter().map(|v| vs.iter().position(|w| w == v).expect("face vertices")).collect();
                for d in 0..=max_degree / 2 {
                    for alpha in exponents(p.rank(rho), d as u32) {
                        let mut beta = vec![0; p.rank(sigma)];
                        for (k, &pos) in positions.iter().enumerate() {
                            beta[pos] = alpha[k];
                        }
                        let diff = &self.f_sigma(rho, &alpha) - &self.f_sigma(sigma, &beta);
                        out.push(
                            Certificate::new(
                                "f_ρ = f_σ on DJ_ρ",
                                format!("ρ={} σ={} α={alpha:?}", p.id(rho), p.id(sigma)),
                                format!("degrees ≤ {max_degree}"),
                            )
                            .with_witness((!diff.is_zero()).then(|| format!("{} differing terms", diff.len()))),
                        );
                    }
                }
            }
        }
        out
    }

    /// `AW_u f_σ(y_α) = 0` in `C(DJ_Σ)` for maximal `σ`, strongly biased `u`
    /// of degree `1..=max_u_degree` and arity `2..=max_arity`, and `2|α| ≤ max_degree`.
    pub fn check_vanishing(&self, max_degree: usize, max_u_degree: usize, max_arity: usize) -> Vec<Certificate> {
        let p = self.space.poset();
        let us = TorusFormality::strongly_biased_surjections(max_u_degree, max_arity);
        let mut out = Vec::new();
        for sigma in p.maximal() {
            for d in 1..=max_degree / 2 {
                for alpha in exponents(p.rank(sigma), d as u32) {
                    let c = self.f_sigma(sigma, &alpha);
                    for u in &us {
                        out.push(self.vanishing_certificate(u, sigma, &alpha, &c, max_degree));
                    }
                }
            }
        }
        out
    }

    fn vanishing_certificate(&self, u: &Surjection, sigma: usize, alpha: &[u32], c: &Chain<DJSimplex, i64>, max_degree: usize) -> Certificate {
        let image = interval_cut::<_, i64>(u, &self.space, c);
        Certificate::new(
            "AW_u f_σ = 0",
            format!("u={u} σ={} α={alpha:?}", self.space.poset().id(sigma)),
            format!("degrees ≤ {max_degree}"),
        )
        .with_witness((!image.is_zero()).then(|| format!("{} nonzero terms", image.len())))
    }

    /// `AW_u f_σ(y_α) = 0` for a single strongly biased `u`.
    pub fn verify_vanishing(&self, u: &Surjection, sigma: usize, alpha: &[u32]) -> Result<Certificate> {
        if !u.classify().strongly_biased {
            return Err(Error::NotStronglyBiased(u.values().to_vec()));
        }
        let d = 2 * alpha.iter().map(|&a| a as usize).sum::<usize>();
        Ok(self.vanishing_certificate(u, sigma, alpha, &self.f_sigma(sigma, alpha), d))
    }

    /// `f*_Σ γ ∈ 𝕜[Σ]`: on each maximal `μ`, the polynomial `Σ_α γ(f_μ(y_α)) t^α`.
    pub fn assemble(&self, ring: &FaceRing, gamma: &Cochain<DJSimplex, i64>) -> Result<FaceRingElement> {
        let degree = gamma.degree();
        if degree < 0 || degree % 2 == 1 {
            return Ok(ring.zero(degree.max(0) as usize));
        }
        let p = self.space.poset();
        let mut components = Vec::new();
        for &mu in ring.maximal() {
            let vs = p.vertices_of(mu);
            let mut poly = Polynomial::zero();
            for alpha in exponents(vs.len(), (degree / 2) as u32) {
                let value = gamma.evaluate(&self.f_sigma(mu, &alpha));
                let mut m = vec![0; p.n_vertices()];
                for (k, &v) in vs.iter().enumerate() {
                    m[v] = alpha[k];
                }
                poly.add_term(m, value);
            }
            components.push(poly);
        }
        Ok(ring.from_components(degree as usize, components))
    }

    /// `f*(γ ∪ δ) = f*(γ) f*(δ)`, and both sides are compatible tuples.
    pub fn check_multiplicative(&self, ring: &FaceRing, gamma: &Cochain<DJSimplex, i64>, delta: &Cochain<DJSimplex, i64>) -> Result<Certificate> {
        let cup = cup_product(&self.space, gamma, delta);
        let lhs = self.assemble(ring, &cup)?;
        let rhs = ring.multiply(&self.assemble(ring, gamma)?, &self.assemble(ring, delta)?);
        let witness = if !ring.is_compatible(&lhs) {
            Some("f*(γ∪δ) is not a compatible tuple".to_string())
        } else if lhs != rhs {
            Some(format!("{:?} vs {:?}", ring.coordinates(&lhs), ring.coordinates(&rhs)))
        } else {
            None
        };
        Ok(Certificate::new(
            "f*(γ∪δ) = f*(γ)f*(δ)",
            format!("|γ|={} |δ|={}", gamma.degree(), delta.degree()),
            "sampled cochains",
        )
        .with_witness(witness))
    }
}
