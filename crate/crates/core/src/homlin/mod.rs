//! Exact homological linear algebra over ℤ, ℚ and 𝔽_p.

mod complex;
mod hilbert;
mod matrix;
mod sparse;

pub use complex::{normalized_chain_complex, FgComplex, HomologyGroup};
pub use hilbert::{hilbert_function, monomial_degree, monomials_of_degree, rank_of_vectors, Monomial, Polynomial};
pub use matrix::{invariant_factors, smith_normal_form, IntMatrix, SmithForm};
pub use sparse::{matrix_of, SparseMatrix};

#[cfg(test)]
mod tests;
