//! Polynomial matrices and their eigenstructure.

mod eigen;
mod kernel;
pub(crate) mod linalg;
mod matrix;
mod smith;

pub use eigen::{eigenstructure, Eigenstructure};
pub use kernel::{minimal_indices, right_minimal_basis, MinimalBasis, MinimalIndices};
pub use matrix::{companion_form, PolyMatrix};
pub use smith::{infinite_multiplicities, rank_of, smith_form};

pub fn degree_of(p: &PolyMatrix) -> crate::error::Result<usize> {
    p.degree_of()
}

pub fn reversal(p: &PolyMatrix) -> crate::error::Result<PolyMatrix> {
    p.reversal()
}

pub fn stack_rows(p: &PolyMatrix, w: &PolyMatrix) -> crate::error::Result<PolyMatrix> {
    p.stack_rows(w)
}
