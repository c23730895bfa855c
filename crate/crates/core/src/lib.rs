//! Exact polynomial matrices over Q and GF(p), their eigenstructure, and
//! feasibility and realization of row completions with prescribed
//! eigenstructure.

pub mod algebra;
pub mod error;
pub mod feasibility;
pub mod io;
pub mod polymatrix;
pub mod realize;
pub mod sequences;

pub use error::{Error, Result};
