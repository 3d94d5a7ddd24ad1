//! Formality of `BT` for the simplicial torus `T`: the Koszul complex
//! `K = Λ ⊗ 𝐒`, the map `F: K → C(ET)` and the dgc map `f = π_* F: 𝐒 → C(BT)`.

mod formality;
mod koszul;
mod naturality;

pub use formality::{BaseChain, CupTwoProbe, RepChoice, TorusChain, TorusFormality, TotalChain};
pub use koszul::{
    exponent_degree, exponents, format_exponent, lower, DividedCoalgebra, Exponent, ExteriorBialgebra, ExteriorElement, ExteriorMonomial,
    KoszulBasis, KoszulChain, KoszulComplex,
};
pub use naturality::{check_naturality, CoordinateMap};

#[cfg(test)]
mod tests;
