//! Loop-space cohomology of Davis–Januszkiewicz spaces: `Tor_{𝕜[Σ]}(𝕜, 𝕜)`
//! through the bar construction and `HH(𝕜[Σ])` through Hochschild chains.

use std::collections::BTreeMap;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::ring::FaceRing;
use crate::bar_hga::{bar_homology, HochschildComplex};
use crate::error::Result;
use crate::ring::CoefficientRing;

/// Ranks by (homological degree, internal degree) for internal degrees
/// `0..=max_q`, with totals per homological degree over the same window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoopRanks {
    pub max_q: i64,
    #[serde(serialize_with = "nonzero_entries")]
    pub ranks: BTreeMap<(usize, i64), usize>,
}

#[derive(Serialize)]
struct Entry {
    n: usize,
    q: i64,
    rank: usize,
}

fn nonzero_entries<S: Serializer>(ranks: &BTreeMap<(usize, i64), usize>, s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(None)?;
    for (&(n, q), &rank) in ranks.iter().filter(|(_, &r)| r > 0) {
        seq.serialize_element(&Entry { n, q, rank })?;
    }
    seq.end()
}

impl LoopRanks {
    fn new(max_q: i64, ranks: BTreeMap<(usize, i64), usize>) -> Self {
        LoopRanks { max_q, ranks }
    }

    pub fn rank(&self, n: usize, q: i64) -> usize {
        self.ranks.get(&(n, q)).copied().unwrap_or(0)
    }

    /// `Σ_q rank(n, q)` for `n = 0..=max_n`, within the window.
    pub fn totals(&self, max_n: usize) -> Vec<usize> {
        (0..=max_n).map(|n| self.ranks.iter().filter(|((m, _), _)| *m == n).map(|(_, r)| r).sum()).collect()
    }
}

/// `H*(ΩDJ_Σ) ≅ Tor_{𝕜[Σ]}(𝕜, 𝕜) = H(B𝕜[Σ])`, with `𝕜[Σ]` a trivial hga.
pub fn tor_loops(ring: &FaceRing, max_q: usize, coefficients: CoefficientRing) -> Result<LoopRanks> {
    let a = ring.to_dga(max_q)?;
    Ok(LoopRanks::new(max_q as i64, bar_homology(&a, max_q as i64, coefficients)?))
}

/// The Hochschild complex of `𝕜[Σ]` truncated at internal degree `max_q`,
/// carrying the shuffle product.
pub fn hochschild(ring: &FaceRing, max_q: usize) -> Result<HochschildComplex> {
    HochschildComplex::new(ring.to_dga(max_q)?)
}

/// `H*(LDJ_Σ) ≅ HH(𝕜[Σ])`.
pub fn hh_free_loops(ring: &FaceRing, max_q: usize, coefficients: CoefficientRing) -> Result<LoopRanks> {
    Ok(LoopRanks::new(max_q as i64, hochschild(ring, max_q)?.homology(max_q as i64, coefficients)?))
}
