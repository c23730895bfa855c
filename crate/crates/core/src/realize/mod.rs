//! Realization of eigenstructures and exhaustive search over small fields.

mod blocks;
pub mod oracle;
mod search;
mod targets;

pub use blocks::{kronecker_block, realization_blocks, realize_low_degree, BlockKind};
pub use search::{search_completion, search_matrix, MatrixSpace, SearchBudget};
pub use targets::{
    enumerate_targets, enumerate_targets_with, homog_chains, monic_chains, nondecreasing_seqs, partitions_exact,
    partitions_upto, DEFAULT_TARGET_LIMIT,
};
