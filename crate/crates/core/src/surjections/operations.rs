//! Cochain operations given by transposed interval cuts.

use super::{interval_cut, Surjection};
use crate::chains::{cochain_from_fn, evaluate_tensor, Chain, Cochain};
use crate::error::{Error, Result};
use crate::ring::{sign, Ring};
use crate::simplicial::SimplicialSet;

/// `ᵗAW_u(γ_1 ⊗ ... ⊗ γ_l) = (-1)^{deg u · Σ|γ_i|} (γ_1 ⊗ ... ⊗ γ_l) ∘ AW_u`.
pub fn transpose_cut<X, R>(u: &Surjection, space: &X, gammas: &[&Cochain<X::Simplex, R>]) -> Result<Cochain<X::Simplex, R>>
where
    X: SimplicialSet + Clone + Send + Sync + 'static,
    R: Ring,
{
    if gammas.len() != u.arity() {
        return Err(Error::ArityMismatch(format!(
            "{} cochains for a surjection with {} outputs",
            gammas.len(),
            u.arity()
        )));
    }
    let total: i64 = gammas.iter().map(|g| g.degree()).sum();
    let k = u.degree() as i64;
    if total < k {
        return Ok(Cochain::vanishing(total - k));
    }
    let owned: Vec<Cochain<X::Simplex, R>> = gammas.iter().map(|g| (*g).clone()).collect();
    let u = u.clone();
    let space = space.clone();
    let s: R = sign(k * total);
    Ok(cochain_from_fn((total - k) as usize, move |x: &X::Simplex| {
        let refs: Vec<&Cochain<X::Simplex, R>> = owned.iter().collect();
        let t = interval_cut(&u, &space, &Chain::basis(x.clone()));
        s.clone() * evaluate_tensor(&refs, &t)
    }))
}

/// `β ∪_i γ` for `i ≤ 2`: `∪_0 = ᵗAW_{(1,2)}`, `∪_1 = -ᵗAW_{(1,2,1)}`, `∪_2 = -ᵗAW_{(1,2,1,2)}`.
pub fn cup_i<X, R>(space: &X, beta: &Cochain<X::Simplex, R>, gamma: &Cochain<X::Simplex, R>, i: usize) -> Result<Cochain<X::Simplex, R>>
where
    X: SimplicialSet + Clone + Send + Sync + 'static,
    R: Ring,
{
    let (values, negate) = match i {
        0 => (vec![1, 2], false),
        1 => (vec![1, 2, 1], true),
        2 => (vec![1, 2, 1, 2], true),
        _ => return Err(Error::ArityMismatch(format!("cup_{i} is not provided"))),
    };
    let c = transpose_cut(&Surjection::from_valid(values), space, &[beta, gamma])?;
    Ok(if negate { c.scale(-R::one()) } else { c })
}

/// `E_k(α; β_1, ..., β_k) = ᵗAW_{(1,2,1,3,1,...,1,k+1,1)}(α ⊗ β_1 ⊗ ... ⊗ β_k)`.
pub fn e_k<X, R>(space: &X, alpha: &Cochain<X::Simplex, R>, betas: &[&Cochain<X::Simplex, R>]) -> Result<Cochain<X::Simplex, R>>
where
    X: SimplicialSet + Clone + Send + Sync + 'static,
    R: Ring,
{
    let mut all = vec![alpha];
    all.extend_from_slice(betas);
    transpose_cut(&Surjection::e_k_surjection(betas.len()), space, &all)
}

/// The operations for the swapped convention:
/// `Ẽ_k(β_1, ..., β_k; α) = (-1)^k ᵗAW_{(k+1,1,k+1,2,...,k+1,k,k+1)}(β_1 ⊗ ... ⊗ β_k ⊗ α)`.
pub fn e_tilde_k<X, R>(space: &X, betas: &[&Cochain<X::Simplex, R>], alpha: &Cochain<X::Simplex, R>) -> Result<Cochain<X::Simplex, R>>
where
    X: SimplicialSet + Clone + Send + Sync + 'static,
    R: Ring,
{
    let k = betas.len();
    let mut all = betas.to_vec();
    all.push(alpha);
    Ok(transpose_cut(&Surjection::e_tilde_k_surjection(k), space, &all)?.scale(sign(k as i64)))
}

/// `{a, b} = (-1)^{|a|-1} (a ∪_1 b + (-1)^{|a||b|} b ∪_1 a)`.
pub fn bracket<X, R>(space: &X, a: &Cochain<X::Simplex, R>, b: &Cochain<X::Simplex, R>) -> Result<Cochain<X::Simplex, R>>
where
    X: SimplicialSet + Clone + Send + Sync + 'static,
    R: Ring,
{
    let ab = cup_i(space, a, b, 1)?;
    let ba = cup_i(space, b, a, 1)?.scale(sign(a.degree() * b.degree()));
    Ok(ab.add(&ba).scale(sign(a.degree() - 1)))
}
