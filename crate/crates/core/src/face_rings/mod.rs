//! Simplicial posets, their face rings, Davis–Januszkiewicz spaces and the
//! cohomology of their loop spaces.

mod dj;
mod loops;
mod poset;
mod ring;

pub use dj::{bt_support, DJFormality, DJSimplex, DJSpace};
pub use loops::{hh_free_loops, hochschild, tor_loops, LoopRanks};
pub use poset::{ElementSpec, Label, PosetElement, PosetReport, PosetSpec, SimplicialPoset, VertexPreservingMap};
pub use ring::{mayer_vietoris_check, FaceBasis, FaceRing, FaceRingElement};

#[cfg(test)]
mod tests;
