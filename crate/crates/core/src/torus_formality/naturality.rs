//! Coordinatewise maps of tori and the naturality square for `f`.

use super::formality::{BaseChain, TorusFormality};
use super::koszul::{format_exponent, Exponent};
use crate::certificate::Certificate;
use crate::chains::{pushforward, Chain};
use crate::error::{Error, Result};
use crate::simplicial::{ClassifyingSimplex, TorusGroup, TorusSimplex};

/// A homomorphism `ℤ^m → ℤ^n` sending each standard basis vector to a
/// standard basis vector or to zero, injectively on the survivors. This covers
/// coordinatewise inclusions and projections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateMap {
    source_rank: usize,
    target_rank: usize,
    images: Vec<Option<usize>>,
}

impl CoordinateMap {
    pub fn new(source_rank: usize, target_rank: usize, images: Vec<Option<usize>>) -> Result<Self> {
        if images.len() != source_rank {
            return Err(Error::Invalid(format!("{} images for {source_rank} coordinates", images.len())));
        }
        let mut hit = vec![false; target_rank];
        for &j in images.iter().flatten() {
            if j >= target_rank || hit[j] {
                return Err(Error::Invalid(format!("coordinate image {j} out of range or repeated")));
            }
            hit[j] = true;
        }
        Ok(CoordinateMap {
            source_rank,
            target_rank,
            images,
        })
    }

    /// `T^m ↪ T^n`, sending circle `i` to circle `positions[i]`.
    pub fn inclusion(target_rank: usize, positions: Vec<usize>) -> Result<Self> {
        Self::new(positions.len(), target_rank, positions.into_iter().map(Some).collect())
    }

    /// `T^m ↠ T^k`, keeping the circles listed in `kept` in that order.
    pub fn projection(source_rank: usize, kept: &[usize]) -> Result<Self> {
        let images = (0..source_rank).map(|i| kept.iter().position(|&j| j == i)).collect();
        let map = Self::new(source_rank, kept.len(), images)?;
        if map.images.iter().flatten().count() != kept.len() {
            return Err(Error::Invalid(format!("projection onto {kept:?} from rank {source_rank}")));
        }
        Ok(map)
    }

    pub fn source_rank(&self) -> usize {
        self.source_rank
    }

    pub fn target_rank(&self) -> usize {
        self.target_rank
    }

    pub fn apply_vector(&self, g: &[i64]) -> Vec<i64> {
        let mut h = vec![0; self.target_rank];
        for (i, &c) in g.iter().enumerate() {
            if let Some(j) = self.images[i] {
                h[j] += c;
            }
        }
        h
    }

    pub fn apply_simplex(&self, s: &TorusSimplex) -> TorusSimplex {
        TorusSimplex::new(self.target_rank, s.entries.iter().map(|g| self.apply_vector(g)).collect())
    }

    /// The induced map on `𝐒 = H(BT)`: `y_α ↦ y_{Mα}`, or zero if `α` uses a
    /// killed coordinate.
    pub fn on_coalgebra(&self, alpha: &[u32]) -> Option<Exponent> {
        let mut beta = vec![0; self.target_rank];
        for (i, &a) in alpha.iter().enumerate() {
            match self.images[i] {
                Some(j) => beta[j] = a,
                None if a > 0 => return None,
                None => {}
            }
        }
        Some(beta)
    }

    /// The induced map `C(BT^m) → C(BT^n)`; degenerate images vanish.
    pub fn on_base_chain(&self, c: &BaseChain) -> BaseChain {
        let base = crate::simplicial::ClassifyingSpace {
            group: TorusGroup::new(self.target_rank),
        };
        pushforward(&base, c, |b| ClassifyingSimplex {
            comps: b.comps.iter().map(|s| self.apply_simplex(s)).collect(),
        })
    }
}

/// `f_target(M_* y_α) = (BM)_* f_source(y_α)`.
pub fn check_naturality(map: &CoordinateMap, source: &TorusFormality, target: &TorusFormality, alpha: &[u32]) -> Result<Certificate> {
    if source.rank() != map.source_rank() || target.rank() != map.target_rank() {
        return Err(Error::ArityMismatch(format!(
            "map of ranks {}→{} against tori of ranks {}→{}",
            map.source_rank(),
            map.target_rank(),
            source.rank(),
            target.rank()
        )));
    }
    if !source.reps().is_coordinatewise() || !target.reps().is_coordinatewise() {
        return Err(Error::Invalid("naturality needs coordinatewise representatives".into()));
    }
    let lhs = match map.on_coalgebra(alpha) {
        Some(beta) => target.f(&beta),
        None => Chain::zero(),
    };
    let rhs = map.on_base_chain(&source.f(alpha));
    let diff = &lhs - &rhs;
    Ok(Certificate::new(
        "f natural for coordinatewise maps",
        format!("{:?} on {}", map.images, format_exponent(alpha)),
        format!("ranks {}→{}", map.source_rank(), map.target_rank()),
    )
    .with_witness((!diff.is_zero()).then(|| format!("{} differing terms", diff.len()))))
}
