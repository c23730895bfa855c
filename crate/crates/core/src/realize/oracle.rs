//! Ground truth for the feasibility checkers: every completion of every
//! small matrix over `GF(p)` is enumerated and its eigenstructure recorded.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use super::search::{MatrixSpace, SearchBudget};
use super::targets::{enumerate_targets, homog_chains, monic_chains, nondecreasing_seqs, partitions_upto};
use crate::algebra::{default_alphabet, FieldTag};
use crate::error::{Error, Result};
use crate::feasibility::{check, CompletionTarget, Theorem};
use crate::io::{matrix_to_json, target_to_json};
use crate::polymatrix::{companion_form, eigenstructure, Eigenstructure, PolyMatrix};

/// Mismatches kept in a report for triage.
pub const MAX_SAMPLES: usize = 20;

/// Every `m x n` matrix of degree exactly `d` over `field`, completed by `z`
/// rows of degree at most `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Grid {
    #[serde(serialize_with = "field_name")]
    pub field: FieldTag,
    pub m: usize,
    pub n: usize,
    pub z: usize,
    pub d: usize,
}

fn field_name<S: serde::Serializer>(f: &FieldTag, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(f)
}

impl FromStr for Grid {
    type Err = Error;

    /// Parses `"gf2 n=1 m=1 z=1 d=1"`; tokens may come in any order.
    fn from_str(s: &str) -> Result<Self> {
        let mut field = None;
        let (mut m, mut n, mut z, mut d) = (None, None, None, None);
        for tok in s.split_whitespace() {
            match tok.split_once('=') {
                Some((key, val)) => {
                    let val: usize = val
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad grid value {tok:?}")))?;
                    let slot = match key {
                        "m" => &mut m,
                        "n" => &mut n,
                        "z" => &mut z,
                        "d" => &mut d,
                        _ => return Err(Error::Parse(format!("unknown grid key {key:?}"))),
                    };
                    *slot = Some(val);
                }
                None => field = Some(tok.parse::<FieldTag>()?),
            }
        }
        let need = |v: Option<usize>, k: &str| v.ok_or_else(|| Error::Parse(format!("grid is missing {k}=")));
        let grid = Grid {
            field: field.ok_or_else(|| Error::Parse("grid is missing a field".into()))?,
            m: need(m, "m")?,
            n: need(n, "n")?,
            z: need(z, "z")?,
            d: need(d, "d")?,
        };
        if !grid.field.is_finite() {
            return Err(Error::InvalidParameter("oracle grids need a finite field".into()));
        }
        if grid.m == 0 || grid.n == 0 || grid.z == 0 || grid.d == 0 {
            return Err(Error::InvalidParameter("grid sizes, z and d must be positive".into()));
        }
        Ok(grid)
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.field.characteristic();
        write!(f, "gf{p} m={} n={} z={} d={}", self.m, self.n, self.z, self.d)
    }
}

impl Grid {
    pub fn matrix_space(&self) -> MatrixSpace {
        MatrixSpace::new(self.field, self.m, self.n, self.d).expect("validated grid")
    }

    pub fn completion_space(&self) -> MatrixSpace {
        MatrixSpace::new(self.field, self.z, self.n, self.d).expect("validated grid")
    }

    /// Number of `(P, W)` pairs the grid enumerates.
    pub fn size(&self) -> u128 {
        self.matrix_space()
            .size()
            .saturating_mul(self.completion_space().size())
    }

    pub fn check_budget(&self, budget: &SearchBudget) -> Result<()> {
        let size = self.size();
        if size > budget.max_candidates {
            return Err(Error::BudgetExceeded {
                needed: size,
                budget: budget.max_candidates,
            });
        }
        Ok(())
    }

    /// The matrices `P` of the grid, in enumeration order.
    pub fn matrices(&self) -> Vec<PolyMatrix> {
        let space = self.matrix_space();
        (0..space.size() as u64)
            .map(|k| space.nth(k))
            .filter(|p| p.degree() == Some(self.d))
            .collect()
    }
}

/// Eigenstructures of `[base; A]` over every `A` with `z` rows and degree at
/// most `dmax`.
pub fn achieved_set(
    base: &PolyMatrix,
    z: usize,
    dmax: usize,
    budget: &SearchBudget,
) -> Result<HashSet<Eigenstructure>> {
    let space = MatrixSpace::new(base.field(), z, base.cols(), dmax)?;
    let size = space.check_budget(budget)?;
    let one = |k: u64| {
        let stacked = base.stack_rows(&space.nth(k)).expect("same width and field");
        eigenstructure(&stacked).expect("stack of a nonzero matrix")
    };
    Ok(match budget.parallel {
        None => (0..size).map(one).collect(),
        Some(workers) => rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool")
            .install(|| (0..size).into_par_iter().map(one).collect()),
    })
}

/// Candidate targets of `theorem` for `P` with eigenstructure `p`: every
/// well-formed target with rank in `[r, r + min(z, n - r)]` and degree sums
/// bounded by `rank * d`, including ones no completion reaches.
pub fn candidate_targets(theorem: Theorem, p: &Eigenstructure, z: usize) -> Result<Vec<CompletionTarget>> {
    let (m, n) = p.dims;
    let (f, d, r) = (p.field, p.degree, p.rank);
    let alphabet = default_alphabet(f);
    if theorem == Theorem::Full {
        return Ok(enumerate_targets(m, n, z, d, f)?
            .iter()
            .map(|t| CompletionTarget::full(z, t))
            .collect());
    }
    let mut out = Vec::new();
    for rank in r..=r + z.min(n - r) {
        let bound = rank * d;
        let base = CompletionTarget::new(z, rank);
        match theorem {
            Theorem::HomCols | Theorem::HomRows | Theorem::Hom => {
                let sides = match theorem {
                    Theorem::HomCols => partitions_upto(n - rank, bound),
                    Theorem::HomRows => partitions_upto(m + z - rank, bound),
                    _ => vec![Default::default()],
                };
                for chain in homog_chains(f, rank, bound, &alphabet, false) {
                    for side in &sides {
                        let t = base.clone().with_hom(chain.clone());
                        out.push(match theorem {
                            Theorem::HomCols => t.with_cols(side.clone()),
                            Theorem::HomRows => t.with_rows(side.clone()),
                            _ => t,
                        });
                    }
                }
            }
            Theorem::Finite => out.extend(
                monic_chains(f, rank, bound, &alphabet)
                    .into_iter()
                    .map(|b| base.clone().with_finite(b)),
            ),
            Theorem::Infinite => out.extend(
                nondecreasing_seqs(rank, bound, false)
                    .into_iter()
                    .map(|e| base.clone().with_infinite(e)),
            ),
            Theorem::Full | Theorem::Exists => unreachable!(),
        }
    }
    Ok(out)
}

/// Whether some achieved structure agrees with every prescribed component.
pub fn extends(target: &CompletionTarget, es: &Eigenstructure) -> bool {
    es.rank == target.rank
        && target.hom_factors.as_ref().is_none_or(|h| *h == es.hom_factors)
        && target.finite_factors.as_ref().is_none_or(|b| *b == es.finite_factors())
        && target
            .infinite_powers
            .as_ref()
            .is_none_or(|e| *e == es.infinite_powers())
        && target.col_indices.as_ref().is_none_or(|c| *c == es.col_indices)
        && target.row_indices.as_ref().is_none_or(|v| *v == es.row_indices)
}

/// A target where the checker and the enumeration disagree.
#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub theorem: Theorem,
    pub matrix: Value,
    pub target: Value,
    /// Checker verdict, or its error message.
    pub checker: std::result::Result<bool, String>,
    pub oracle: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<&'static str>,
}

/// Agreement counts for one theorem.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TheoremTally {
    pub cases: usize,
    pub feasible: usize,
    /// Achieved structures no candidate describes.
    pub uncovered: usize,
    pub mismatches: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub grid: Grid,
    pub matrices: usize,
    pub completions: u128,
    pub tallies: Vec<(Theorem, TheoremTally)>,
    pub mismatches: usize,
    /// The first [`MAX_SAMPLES`] mismatches in enumeration order.
    pub samples: Vec<Mismatch>,
}

impl OracleReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches == 0
    }
}

/// Compares `theorem`'s checker with the achieved set of `P` on every
/// candidate target.
pub fn compare(
    theorem: Theorem,
    p: &PolyMatrix,
    es: &Eigenstructure,
    z: usize,
    achieved: &HashSet<Eigenstructure>,
) -> Result<(TheoremTally, Vec<Mismatch>)> {
    let mut tally = TheoremTally::default();
    let mut bad = Vec::new();
    let candidates = candidate_targets(theorem, es, z)?;
    tally.uncovered = achieved
        .iter()
        .filter(|a| !candidates.iter().any(|t| extends(t, a)))
        .count();
    tally.mismatches = tally.uncovered;
    for target in candidates {
        let truth = achieved.iter().any(|a| extends(&target, a));
        let verdict = check(theorem, es, &target);
        tally.cases += 1;
        tally.feasible += truth as usize;
        let ok = matches!(&verdict, Ok(rep) if rep.feasible == truth);
        if !ok {
            tally.mismatches += 1;
            bad.push(Mismatch {
                theorem,
                matrix: serde_json::from_str(&matrix_to_json(p)).unwrap(),
                target: serde_json::from_str(&target_to_json(&target)).unwrap(),
                violations: verdict.as_ref().map(|r| r.violations.clone()).unwrap_or_default(),
                checker: verdict.map(|r| r.feasible).map_err(|e| e.to_string()),
                oracle: truth,
            });
        }
    }
    Ok((tally, bad))
}

/// Runs `theorems` over every matrix of `grid`. `jobs` spreads matrices over
/// worker threads; results are merged in enumeration order.
pub fn run_grid(grid: &Grid, theorems: &[Theorem], budget: &SearchBudget) -> Result<OracleReport> {
    grid.check_budget(budget)?;
    let matrices = grid.matrices();
    let per_matrix = |p: &PolyMatrix| -> Result<Vec<(TheoremTally, Vec<Mismatch>)>> {
        let es = eigenstructure(p)?;
        let achieved = achieved_set(p, grid.z, grid.d, &SearchBudget::new(u128::MAX))?;
        theorems
            .iter()
            .map(|&th| compare(th, p, &es, grid.z, &achieved))
            .collect()
    };
    let results: Vec<_> = match budget.parallel {
        None => matrices.iter().map(per_matrix).collect::<Result<_>>()?,
        Some(workers) => rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool")
            .install(|| matrices.par_iter().map(per_matrix).collect::<Result<_>>())?,
    };

    let mut tallies: Vec<(Theorem, TheoremTally)> = theorems.iter().map(|&t| (t, TheoremTally::default())).collect();
    let mut samples = Vec::new();
    let mut mismatches = 0;
    for per in results {
        for ((_, total), (tally, bad)) in tallies.iter_mut().zip(per) {
            total.cases += tally.cases;
            total.feasible += tally.feasible;
            total.uncovered += tally.uncovered;
            total.mismatches += tally.mismatches;
            mismatches += tally.mismatches;
            samples.extend(bad.into_iter().take(MAX_SAMPLES.saturating_sub(samples.len())));
        }
    }
    Ok(OracleReport {
        grid: *grid,
        matrices: matrices.len(),
        completions: grid.completion_space().size(),
        tallies,
        mismatches,
        samples,
    })
}

/// Structures reached by polynomial completions of `p`, mapped through the
/// companion correspondence, against those reached by pencil completions
/// of its companion form. Returns `(polynomial side, pencil side)`.
pub fn pencil_sets(
    p: &PolyMatrix,
    z: usize,
    budget: &SearchBudget,
) -> Result<(HashSet<Eigenstructure>, HashSet<Eigenstructure>)> {
    let d = p.degree_of()?;
    let poly: HashSet<Eigenstructure> = achieved_set(p, z, d, budget)?
        .iter()
        .map(Eigenstructure::companion_transform)
        .collect();
    let pencil = achieved_set(&companion_form(p)?, z, 1, budget)?;
    Ok((poly, pencil))
}
