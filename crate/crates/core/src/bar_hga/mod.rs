//! Bar constructions of augmented dgas, homotopy Gerstenhaber structures,
//! twisting cochains and Hochschild chains.

mod algebra;
mod bar;
mod hga;
mod hochschild;
mod twisting;

pub use algebra::{Element, Gen, PresentedDGA, SharedDGA, UNIT};
pub use bar::{
    bar_cohomology_total, bar_complex, bar_diagonal, bar_diagonal_chain, bar_differential, bar_differential_chain,
    bar_homology, bar_product, bar_product_chains, bar_words, bar_words_total, BarChain, BarWord,
};
pub use hga::Hga;
pub use hochschild::{hochschild_unit_word, hochschild_zero_chain, HochschildChain, HochschildComplex, HochschildWord};
pub use twisting::{
    is_chain_map, is_coalgebra_map, is_twisting, map_from_twisting, twisting_from_map, CoElement, CoalgebraMap,
    PresentedDGC, TwistingCochain,
};
