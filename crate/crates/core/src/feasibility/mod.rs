//! Decision procedures for row completions `[P; W]` with `deg W <= deg P`
//! and prescribed (possibly partial) eigenstructure.

mod checks;
mod gaps;
mod target;

pub use checks::{
    check, check_existence, check_finite_only, check_full, check_full_col_form, check_hom_only, check_hom_plus_cols,
    check_hom_plus_rows, check_infinite_only, construct_d, violation, FeasibilityReport,
};
pub use gaps::{build_gaps_col_form, build_gaps_row_form, Gaps};
pub use target::{CompletionTarget, Theorem};
