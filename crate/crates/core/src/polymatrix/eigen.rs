use crate::algebra::{FieldTag, HomogPoly};
use crate::error::{Error, Result};
use crate::sequences::Partition;

use super::{infinite_multiplicities, minimal_indices, smith_form, PolyMatrix};

/// Complete strict-equivalence data of a polynomial matrix: homogeneous
/// invariant factors plus column and row minimal indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Eigenstructure {
    pub field: FieldTag,
    pub dims: (usize, usize),
    pub degree: usize,
    pub rank: usize,
    pub hom_factors: Vec<HomogPoly>,
    pub col_indices: Partition,
    pub row_indices: Partition,
}

impl Eigenstructure {
    /// Assembles and validates a structure given by hand. Dimensions follow
    /// from the rank and the index counts.
    pub fn new(
        field: FieldTag,
        degree: usize,
        hom_factors: Vec<HomogPoly>,
        col_indices: Partition,
        row_indices: Partition,
    ) -> Result<Self> {
        let rank = hom_factors.len();
        if let Some(h) = hom_factors.iter().find(|h| h.field() != field) {
            return Err(Error::FieldMismatch(field, h.field()));
        }
        if !hom_factors.windows(2).all(|w| w[0].divides_unchecked(&w[1])) {
            return Err(Error::NotAChain("homogeneous factors".into()));
        }
        let dims = (rank + row_indices.len(), rank + col_indices.len());
        if dims.0 == 0 || dims.1 == 0 {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        Ok(Self {
            field,
            dims,
            degree,
            rank,
            hom_factors,
            col_indices,
            row_indices,
        })
    }

    pub fn rows(&self) -> usize {
        self.dims.0
    }

    pub fn cols(&self) -> usize {
        self.dims.1
    }

    pub fn hom_degree_sum(&self) -> i64 {
        self.hom_factors.iter().map(|h| h.degree() as i64).sum()
    }

    /// `sum deg(gamma) + sum c + sum u - r d`; zero for every actual matrix.
    pub fn index_sum_defect(&self) -> i64 {
        self.hom_degree_sum() + self.col_indices.sum() + self.row_indices.sum() - (self.rank * self.degree) as i64
    }

    pub fn finite_factors(&self) -> Vec<crate::algebra::Poly> {
        self.hom_factors.iter().map(|h| h.alpha().clone()).collect()
    }

    pub fn infinite_powers(&self) -> Vec<usize> {
        self.hom_factors.iter().map(HomogPoly::e).collect()
    }

    /// Expected structure of the first companion form of a matrix of degree
    /// `degree >= 1` with this structure.
    pub fn companion_transform(&self) -> Eigenstructure {
        let (m, n) = self.dims;
        let extra = (self.degree.max(1) - 1) * n;
        let shift = self.degree.max(1) as i64 - 1;
        let mut hom = vec![HomogPoly::one(self.field); extra];
        hom.extend(self.hom_factors.iter().cloned());
        let col = Partition::new(self.col_indices.iter().map(|c| c + shift).collect()).unwrap();
        Eigenstructure {
            field: self.field,
            dims: (m + extra, n * self.degree.max(1)),
            degree: 1,
            rank: self.rank + extra,
            hom_factors: hom,
            col_indices: col,
            row_indices: self.row_indices.clone(),
        }
    }
}

pub fn eigenstructure(p: &PolyMatrix) -> Result<Eigenstructure> {
    let degree = p.degree_of()?;
    let alphas = smith_form(p);
    let es = infinite_multiplicities(p)?;
    assert_eq!(alphas.len(), es.len(), "rank of the reversal differs");
    let hom_factors = alphas
        .into_iter()
        .zip(es)
        .map(|(a, e)| HomogPoly::new(a, e).expect("invariant factors are monic"))
        .collect::<Vec<_>>();
    let mi = minimal_indices(p);
    let out = Eigenstructure {
        field: p.field(),
        dims: p.dims(),
        degree,
        rank: hom_factors.len(),
        hom_factors,
        col_indices: mi.col,
        row_indices: mi.row,
    };
    assert!(
        out.hom_factors.windows(2).all(|w| w[0].divides_unchecked(&w[1])),
        "homogeneous factors of {p} do not form a chain"
    );
    assert_eq!(out.index_sum_defect(), 0, "index sum identity fails for {p}");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;
    use crate::polymatrix::companion_form;
    use rand::{Rng, SeedableRng};

    const Q: FieldTag = FieldTag::Rationals;

    fn h(c: &[i64], e: usize) -> HomogPoly {
        HomogPoly::new(Poly::from_i64s(Q, c), e).unwrap()
    }

    #[test]
    fn eigen_examples() {
        let es = eigenstructure(&PolyMatrix::from_i64s(Q, &[&[&[0, 1], &[]], &[&[], &[1]]])).unwrap();
        assert_eq!((es.degree, es.rank), (1, 2));
        assert_eq!(es.hom_factors, vec![h(&[1], 0), h(&[0, 1], 1)]);
        assert!(es.col_indices.is_empty() && es.row_indices.is_empty());

        let es = eigenstructure(&PolyMatrix::from_i64s(Q, &[&[&[0, 1], &[1]]])).unwrap();
        assert_eq!(es.hom_factors, vec![h(&[1], 0)]);
        assert_eq!(es.col_indices.values(), &[1]);

        let es = eigenstructure(&PolyMatrix::from_i64s(Q, &[&[&[0, 0, 1]]])).unwrap();
        assert_eq!((es.degree, es.rank), (2, 1));
        assert_eq!(es.hom_factors, vec![h(&[0, 0, 1], 0)]);

        assert_eq!(eigenstructure(&PolyMatrix::zeros(Q, 2, 1)), Err(Error::ZeroMatrix));
    }

    #[test]
    fn companion_matches_transform() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for field in [Q, FieldTag::Prime(2), FieldTag::Prime(3)] {
            for _ in 0..30 {
                let (m, n, d) = (rng.gen_range(1..=2), rng.gen_range(1..=2), rng.gen_range(1..=3));
                let p = PolyMatrix::random(&mut rng, field, m, n, d, 2);
                let lhs = eigenstructure(&companion_form(&p).unwrap()).unwrap();
                assert_eq!(lhs, eigenstructure(&p).unwrap().companion_transform(), "{p}");
            }
        }
    }

    #[test]
    fn hand_built_structure() {
        let es = Eigenstructure::new(
            Q,
            1,
            vec![h(&[1], 0)],
            Partition::new(vec![1]).unwrap(),
            Partition::empty(),
        )
        .unwrap();
        assert_eq!(es.dims, (1, 2));
        assert_eq!(es.index_sum_defect(), 0);
        let bad = Eigenstructure::new(
            Q,
            1,
            vec![h(&[0, 1], 0), h(&[1, 1], 0)],
            Partition::empty(),
            Partition::empty(),
        );
        assert!(matches!(bad, Err(Error::NotAChain(_))));
    }
}
