use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{HomogPoly, Poly};
use crate::error::{Error, Result};
use crate::polymatrix::Eigenstructure;
use crate::sequences::Partition;

/// Which invariants are prescribed, and so which characterization applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Theorem {
    /// Homogeneous invariant factors, column and row minimal indices.
    #[serde(rename = "full")]
    Full,
    #[serde(rename = "hom+cols")]
    HomCols,
    #[serde(rename = "hom+rows")]
    HomRows,
    #[serde(rename = "hom")]
    Hom,
    #[serde(rename = "finite")]
    Finite,
    #[serde(rename = "infinite")]
    Infinite,
    /// Existence of any matrix with the target eigenstructure.
    #[serde(rename = "exists")]
    Exists,
}

impl Theorem {
    pub const COMPLETION: [Theorem; 6] = [
        Theorem::Full,
        Theorem::HomCols,
        Theorem::HomRows,
        Theorem::Hom,
        Theorem::Finite,
        Theorem::Infinite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Full => "full",
            Theorem::HomCols => "hom+cols",
            Theorem::HomRows => "hom+rows",
            Theorem::Hom => "hom",
            Theorem::Finite => "finite",
            Theorem::Infinite => "infinite",
            Theorem::Exists => "exists",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Theorem::Exists]
            .into_iter()
            .chain(Theorem::COMPLETION)
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown theorem {s:?}")))
    }
}

/// A partially prescribed eigenstructure for `[P; W]` with `W` having `z`
/// rows. Absent components are unprescribed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompletionTarget {
    pub z: usize,
    pub rank: usize,
    pub hom_factors: Option<Vec<HomogPoly>>,
    pub finite_factors: Option<Vec<Poly>>,
    pub infinite_powers: Option<Vec<usize>>,
    pub col_indices: Option<Partition>,
    pub row_indices: Option<Partition>,
}

impl CompletionTarget {
    pub fn new(z: usize, rank: usize) -> Self {
        Self {
            z,
            rank,
            hom_factors: None,
            finite_factors: None,
            infinite_powers: None,
            col_indices: None,
            row_indices: None,
        }
    }

    /// Everything `es` prescribes.
    pub fn full(z: usize, es: &Eigenstructure) -> Self {
        Self::new(z, es.rank)
            .with_hom(es.hom_factors.clone())
            .with_cols(es.col_indices.clone())
            .with_rows(es.row_indices.clone())
    }

    pub fn with_hom(mut self, h: Vec<HomogPoly>) -> Self {
        self.rank = h.len();
        self.hom_factors = Some(h);
        self
    }

    pub fn with_finite(mut self, beta: Vec<Poly>) -> Self {
        self.rank = beta.len();
        self.finite_factors = Some(beta);
        self
    }

    pub fn with_infinite(mut self, f: Vec<usize>) -> Self {
        self.rank = f.len();
        self.infinite_powers = Some(f);
        self
    }

    pub fn with_cols(mut self, d: Partition) -> Self {
        self.col_indices = Some(d);
        self
    }

    pub fn with_rows(mut self, v: Partition) -> Self {
        self.row_indices = Some(v);
        self
    }

    /// Keeps just what `theorem` consumes, deriving the finite or infinite
    /// part from the homogeneous factors when needed.
    pub fn project(&self, theorem: Theorem) -> CompletionTarget {
        let mut out = CompletionTarget::new(self.z, self.rank);
        let hom = self.hom_factors.clone();
        match theorem {
            Theorem::Full | Theorem::Exists => return self.clone(),
            Theorem::HomCols => {
                out.hom_factors = hom;
                out.col_indices = self.col_indices.clone();
            }
            Theorem::HomRows => {
                out.hom_factors = hom;
                out.row_indices = self.row_indices.clone();
            }
            Theorem::Hom => out.hom_factors = hom,
            Theorem::Finite => {
                out.finite_factors = self
                    .finite_factors
                    .clone()
                    .or_else(|| hom.map(|h| h.iter().map(|g| g.alpha().clone()).collect()));
            }
            Theorem::Infinite => {
                out.infinite_powers = self
                    .infinite_powers
                    .clone()
                    .or_else(|| hom.map(|h| h.iter().map(HomogPoly::e).collect()));
            }
        }
        out
    }

    pub(crate) fn require_hom(&self, theorem: Theorem) -> Result<&[HomogPoly]> {
        self.hom_factors
            .as_deref()
            .ok_or_else(|| missing(theorem, "hom_factors"))
    }

    pub(crate) fn require_cols(&self, theorem: Theorem) -> Result<&Partition> {
        self.col_indices.as_ref().ok_or_else(|| missing(theorem, "col_indices"))
    }

    pub(crate) fn require_rows(&self, theorem: Theorem) -> Result<&Partition> {
        self.row_indices.as_ref().ok_or_else(|| missing(theorem, "row_indices"))
    }

    pub(crate) fn require_finite(&self, theorem: Theorem) -> Result<&[Poly]> {
        self.finite_factors
            .as_deref()
            .ok_or_else(|| missing(theorem, "finite_factors"))
    }

    pub(crate) fn require_infinite(&self, theorem: Theorem) -> Result<&[usize]> {
        self.infinite_powers
            .as_deref()
            .ok_or_else(|| missing(theorem, "infinite_powers"))
    }
}

fn missing(theorem: Theorem, field: &'static str) -> Error {
    Error::MissingField {
        theorem: theorem.to_string(),
        field,
    }
}
