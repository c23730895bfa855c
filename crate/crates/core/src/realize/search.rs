use rayon::prelude::*;

use crate::algebra::{FieldTag, Poly, Scalar};
use crate::error::{Error, Result};
use crate::polymatrix::{eigenstructure, Eigenstructure, PolyMatrix};

/// Limits for exhaustive searches over `GF(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest enumeration size accepted.
    pub max_candidates: u128,
    /// Worker threads; `None` searches sequentially.
    pub parallel: Option<usize>,
}

impl SearchBudget {
    pub const DEFAULT_MAX: u128 = 1 << 20;

    pub fn new(max_candidates: u128) -> Self {
        Self {
            max_candidates,
            parallel: None,
        }
    }

    pub fn with_parallel(mut self, workers: usize) -> Self {
        self.parallel = Some(workers.max(1));
        self
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::new(Self::DEFAULT_MAX)
    }
}

/// All `rows x cols` matrices over `GF(p)` with entry degrees at most
/// `max_deg`, indexed in lexicographic order of the row-major flattened
/// coefficient vector (entries in order, coefficients ascending within an
/// entry, first coordinate most significant).
#[derive(Clone, Copy, Debug)]
pub struct MatrixSpace {
    pub field: FieldTag,
    pub rows: usize,
    pub cols: usize,
    pub max_deg: usize,
}

impl MatrixSpace {
    pub fn new(field: FieldTag, rows: usize, cols: usize, max_deg: usize) -> Result<Self> {
        if !field.is_finite() {
            return Err(Error::InvalidParameter("exhaustive search needs a finite field".into()));
        }
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidParameter("search space needs positive dimensions".into()));
        }
        Ok(Self {
            field,
            rows,
            cols,
            max_deg,
        })
    }

    pub fn digits(&self) -> usize {
        self.rows * self.cols * (self.max_deg + 1)
    }

    /// `p^digits`, saturating.
    pub fn size(&self) -> u128 {
        let p = self.field.characteristic() as u128;
        (0..self.digits())
            .try_fold(1u128, |acc, _| acc.checked_mul(p))
            .unwrap_or(u128::MAX)
    }

    pub fn check_budget(&self, budget: &SearchBudget) -> Result<u64> {
        let size = self.size();
        if size > budget.max_candidates || size > u64::MAX as u128 {
            return Err(Error::BudgetExceeded {
                needed: size,
                budget: budget.max_candidates,
            });
        }
        Ok(size as u64)
    }

    pub fn nth(&self, mut k: u64) -> PolyMatrix {
        let p = self.field.characteristic();
        let mut digits = vec![0u64; self.digits()];
        for slot in digits.iter_mut().rev() {
            *slot = k % p;
            k /= p;
        }
        let per = self.max_deg + 1;
        let mut m = PolyMatrix::zeros(self.field, self.rows, self.cols);
        for (idx, chunk) in digits.chunks(per).enumerate() {
            let coeffs: Vec<Scalar> = chunk.iter().map(|&c| self.field.element(c)).collect();
            m.set(idx / self.cols, idx % self.cols, Poly::new(self.field, coeffs).unwrap());
        }
        m
    }
}

/// Smallest index in `0..size` satisfying `pred`, honouring the worker count.
pub(crate) fn first_index<F>(size: u64, parallel: Option<usize>, pred: F) -> Option<u64>
where
    F: Fn(u64) -> bool + Sync + Send,
{
    match parallel {
        None => (0..size).find(|&k| pred(k)),
        Some(workers) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .expect("thread pool");
            pool.install(|| (0..size).into_par_iter().find_first(|&k| pred(k)))
        }
    }
}

/// First `W` with `z` rows and degree at most `dmax` such that the
/// eigenstructure of `[P; W]` satisfies `predicate`.
pub fn search_completion<F>(
    p: &PolyMatrix,
    z: usize,
    dmax: usize,
    predicate: F,
    budget: &SearchBudget,
) -> Result<Option<PolyMatrix>>
where
    F: Fn(&Eigenstructure) -> bool + Sync + Send,
{
    let space = MatrixSpace::new(p.field(), z, p.cols(), dmax)?;
    let size = space.check_budget(budget)?;
    let hit = first_index(size, budget.parallel, |k| {
        let stacked = p.stack_rows(&space.nth(k)).expect("same width and field");
        predicate(&eigenstructure(&stacked).expect("stack of a nonzero matrix"))
    });
    Ok(hit.map(|k| space.nth(k)))
}

/// First nonzero `rows x cols` matrix of degree at most `max_deg` whose
/// eigenstructure satisfies `predicate`.
pub fn search_matrix<F>(
    field: FieldTag,
    rows: usize,
    cols: usize,
    max_deg: usize,
    predicate: F,
    budget: &SearchBudget,
) -> Result<Option<PolyMatrix>>
where
    F: Fn(&Eigenstructure) -> bool + Sync + Send,
{
    let space = MatrixSpace::new(field, rows, cols, max_deg)?;
    let size = space.check_budget(budget)?;
    let hit = first_index(size, budget.parallel, |k| {
        let m = space.nth(k);
        !m.is_zero() && predicate(&eigenstructure(&m).unwrap())
    });
    Ok(hit.map(|k| space.nth(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::HomogPoly;

    const GF2: FieldTag = FieldTag::Prime(2);

    fn s() -> PolyMatrix {
        PolyMatrix::from_i64s(GF2, &[&[&[0, 1]]])
    }

    fn target(alpha: &[i64], v: &[i64]) -> impl Fn(&Eigenstructure) -> bool + Sync + Send {
        let h = vec![HomogPoly::new(Poly::from_i64s(GF2, alpha), 0).unwrap()];
        let v = v.to_vec();
        move |es: &Eigenstructure| es.hom_factors == h && es.row_indices.values() == v.as_slice()
    }

    #[test]
    fn lexicographic_order() {
        let space = MatrixSpace::new(GF2, 1, 1, 1).unwrap();
        let seen: Vec<Poly> = (0..4).map(|k| space.nth(k).get(0, 0).clone()).collect();
        let expected: Vec<Poly> = [&[][..], &[0, 1], &[1], &[1, 1]]
            .iter()
            .map(|c| Poly::from_i64s(GF2, c))
            .collect();
        assert_eq!(seen, expected);
    }

    #[test]
    fn search_examples() {
        let budget = SearchBudget::default();
        let w = search_completion(&s(), 1, 1, target(&[0, 1], &[0]), &budget).unwrap();
        assert_eq!(w, Some(PolyMatrix::zeros(GF2, 1, 1)));
        let w = search_completion(&s(), 1, 1, target(&[1], &[1]), &budget).unwrap();
        assert_eq!(w, Some(PolyMatrix::from_i64s(GF2, &[&[&[1]]])));
        let w = search_completion(&s(), 1, 1, target(&[0, 0, 1], &[0]), &budget).unwrap();
        assert_eq!(w, None);
    }

    #[test]
    fn parallel_matches_sequential() {
        let p = PolyMatrix::from_i64s(GF2, &[&[&[0, 1], &[1, 1]]]);
        let pred = |es: &Eigenstructure| es.rank == 2 && es.hom_factors[1].degree() == 2;
        let seq = search_completion(&p, 1, 2, pred, &SearchBudget::default()).unwrap();
        let par = search_completion(&p, 1, 2, pred, &SearchBudget::default().with_parallel(3)).unwrap();
        assert!(seq.is_some());
        assert_eq!(seq, par);
    }

    #[test]
    fn budget_and_field_guards() {
        let err = search_completion(&s(), 1, 3, |_| true, &SearchBudget::new(8)).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { needed: 16, budget: 8 });
        let q = PolyMatrix::from_i64s(FieldTag::Rationals, &[&[&[0, 1]]]);
        assert!(search_completion(&q, 1, 1, |_| true, &SearchBudget::default()).is_err());
    }

    #[test]
    fn matrix_search_finds_realization() {
        let want = HomogPoly::new(Poly::from_i64s(GF2, &[1, 0, 1]), 0).unwrap();
        let m = search_matrix(
            GF2,
            1,
            1,
            2,
            |es| es.hom_factors == [want.clone()],
            &SearchBudget::default(),
        )
        .unwrap()
        .unwrap();
        assert_eq!(m.get(0, 0), &Poly::from_i64s(GF2, &[1, 0, 1]));
    }
}
