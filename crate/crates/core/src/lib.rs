//! Exact chain-level algebra on simplicial sets: interval cut operations,
//! shuffle maps, bar constructions, homotopy Gerstenhaber structures, and the
//! formality maps for classifying spaces of tori and Davis–Januszkiewicz spaces.

pub mod bar_hga;
pub mod certificate;
pub mod chains;
pub mod error;
pub mod face_rings;
pub mod homlin;
pub mod lincomb;
pub mod ring;
pub mod sample;
pub mod simplicial;
pub mod suites;
pub mod surjections;
pub mod torus_formality;

pub use error::{Error, Result};
pub use lincomb::{Graded, LinComb};
pub use ring::{CoefficientRing, Field, ModInt, Ring};
