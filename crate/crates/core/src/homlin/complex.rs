//! Degreewise finite chain complexes and their homology.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::sparse::SparseMatrix;
use crate::error::{Error, Result};
use crate::ring::CoefficientRing;
use crate::simplicial::FiniteSimplicialSet;

/// A chain complex `C_n` for `n` in a window `lo..=hi`, with `d_n: C_n → C_{n-1}`.
///
/// A bounded complex is zero outside the window; otherwise the window is a
/// truncation and homology at its edges is unavailable.
#[derive(Clone, Debug)]
pub struct FgComplex {
    lo: i64,
    dims: Vec<usize>,
    boundaries: BTreeMap<i64, SparseMatrix>,
    bounded: bool,
}

/// `ℤ^free_rank ⊕ ⊕ ℤ/t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl FgComplex {
    /// `diffs[i]` is `d_{lo+i+1}`, a `dims[i] × dims[i+1]` matrix.
    fn build(lo: i64, dims: Vec<usize>, diffs: Vec<SparseMatrix>, bounded: bool) -> Result<Self> {
        if !dims.is_empty() && diffs.len() + 1 != dims.len() {
            return Err(Error::Invalid(format!(
                "{} degrees need {} boundary maps, got {}",
                dims.len(),
                dims.len() - 1,
                diffs.len()
            )));
        }
        let mut boundaries = BTreeMap::new();
        for (i, d) in diffs.into_iter().enumerate() {
            if d.nrows() != dims[i] || d.ncols() != dims[i + 1] {
                return Err(Error::Invalid(format!(
                    "d_{} should be {}x{}, got {}x{}",
                    lo + i as i64 + 1,
                    dims[i],
                    dims[i + 1],
                    d.nrows(),
                    d.ncols()
                )));
            }
            boundaries.insert(lo + i as i64 + 1, d);
        }
        let c = FgComplex {
            lo,
            dims,
            boundaries,
            bounded,
        };
        c.check()?;
        Ok(c)
    }

    pub fn bounded(lo: i64, dims: Vec<usize>, diffs: Vec<SparseMatrix>) -> Result<Self> {
        Self::build(lo, dims, diffs, true)
    }

    pub fn window(lo: i64, dims: Vec<usize>, diffs: Vec<SparseMatrix>) -> Result<Self> {
        Self::build(lo, dims, diffs, false)
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.dims.len() as i64 - 1
    }

    pub fn dim(&self, n: i64) -> usize {
        if n < self.lo || n > self.hi() {
            0
        } else {
            self.dims[(n - self.lo) as usize]
        }
    }

    pub fn boundary(&self, n: i64) -> Option<&SparseMatrix> {
        self.boundaries.get(&n)
    }

    fn check(&self) -> Result<()> {
        for (&n, d) in &self.boundaries {
            if let Some(d_prev) = self.boundaries.get(&(n - 1)) {
                if !d_prev.mul(d).is_zero() {
                    return Err(Error::Invalid(format!("d_{} ∘ d_{} ≠ 0", n - 1, n)));
                }
            }
        }
        Ok(())
    }

    fn in_interior(&self, n: i64) -> Result<()> {
        if self.dims.is_empty() {
            return Ok(());
        }
        if !self.bounded && (n <= self.lo || n >= self.hi()) {
            return Err(Error::WindowEdge(n));
        }
        Ok(())
    }

    fn rank_with(&self, n: i64, rank: &dyn Fn(&SparseMatrix) -> usize) -> usize {
        self.boundaries.get(&n).map_or(0, rank)
    }

    /// Integral homology `H_n`.
    pub fn homology(&self, n: i64) -> Result<HomologyGroup> {
        self.in_interior(n)?;
        let dim = self.dim(n);
        let out_rank = self.rank_with(n, &|m| m.rank_rational());
        let incoming = self.boundaries.get(&(n + 1)).map(SparseMatrix::invariant_factors).unwrap_or_default();
        let torsion: Vec<BigInt> = incoming.iter().filter(|x| !x.is_one()).cloned().collect();
        Ok(HomologyGroup {
            free_rank: dim - out_rank - incoming.len(),
            torsion,
        })
    }

    /// `dim H_n` over a field.
    pub fn betti(&self, n: i64, ring: CoefficientRing) -> Result<usize> {
        self.in_interior(n)?;
        let rank: Box<dyn Fn(&SparseMatrix) -> usize> = match ring {
            CoefficientRing::Rationals => Box::new(|m: &SparseMatrix| m.rank_rational()),
            CoefficientRing::IntegersMod { modulus } if ring.is_field() => Box::new(move |m: &SparseMatrix| m.rank_mod(modulus)),
            other => return Err(Error::NotField(other.to_string())),
        };
        Ok(self.dim(n) - self.rank_with(n, &*rank) - self.rank_with(n + 1, &*rank))
    }
}

/// The normalized chain complex of a finite simplicial set in degrees `0..=top`.
///
/// It is bounded when the space has no nondegenerate simplices above `top`.
pub fn normalized_chain_complex<X>(space: &X, top: usize) -> Result<FgComplex>
where
    X: FiniteSimplicialSet + ?Sized,
{
    let bases: Vec<Vec<X::Simplex>> = (0..=top).map(|d| space.nondegenerate(d)).collect();
    let index: Vec<BTreeMap<&X::Simplex, usize>> =
        bases.iter().map(|b| b.iter().enumerate().map(|(i, x)| (x, i)).collect()).collect();
    let mut diffs = Vec::new();
    for d in 1..=top {
        let mut m = SparseMatrix::new(bases[d - 1].len(), bases[d].len());
        for (j, x) in bases[d].iter().enumerate() {
            for i in 0..=d {
                let y = space.face(x, i);
                if !space.is_degenerate(&y) {
                    m.add(index[d - 1][&y], j, if i % 2 == 0 { 1 } else { -1 });
                }
            }
        }
        diffs.push(m);
    }
    let dims = bases.iter().map(Vec::len).collect();
    if space.nondegenerate(top + 1).is_empty() {
        FgComplex::bounded(0, dims, diffs)
    } else {
        FgComplex::window(0, dims, diffs)
    }
}
