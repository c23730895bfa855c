use std::fmt;

use rand::Rng;

use crate::algebra::{FieldTag, Poly, Scalar};
use crate::error::{Error, Result};

/// An `m x n` matrix over `F[s]`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    field: FieldTag,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn new(field: FieldTag, entries: Vec<Vec<Poly>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(
                "matrix must have at least one row and column".into(),
            ));
        }
        if let Some(bad) = entries.iter().position(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has {} entries, expected {cols}",
                entries[bad].len()
            )));
        }
        for p in entries.iter().flatten() {
            if p.field() != field {
                return Err(Error::FieldMismatch(field, p.field()));
            }
        }
        Ok(Self {
            field,
            rows,
            cols,
            entries: entries.into_iter().flatten().collect(),
        })
    }

    pub fn zeros(field: FieldTag, rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0);
        Self {
            field,
            rows,
            cols,
            entries: vec![Poly::zero(field); rows * cols],
        }
    }

    pub fn identity(field: FieldTag, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Poly::one(field));
        }
        m
    }

    /// Integer coefficient lists, ascending degree.
    pub fn from_i64s(field: FieldTag, rows: &[&[&[i64]]]) -> Self {
        let entries = rows
            .iter()
            .map(|r| r.iter().map(|c| Poly::from_i64s(field, c)).collect())
            .collect();
        Self::new(field, entries).expect("well-formed literal matrix")
    }

    /// Builds from coefficient matrices `coeffs[k]` of `s^k`, each row-major.
    pub fn from_coefficients(field: FieldTag, rows: usize, cols: usize, coeffs: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let c = coeffs.iter().map(|ck| ck[i * cols + j].clone()).collect();
                m.set(i, j, Poly::from_raw(field, c));
            }
        }
        m
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        debug_assert_eq!(p.field(), self.field);
        self.entries[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> impl Iterator<Item = &Poly> {
        self.entries.iter()
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Poly>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    /// Largest entry degree; the zero matrix has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(Poly::degree).max()
    }

    pub fn degree_of(&self) -> Result<usize> {
        self.degree().ok_or(Error::ZeroMatrix)
    }

    /// Row-major coefficient matrix of `s^k`.
    pub fn coefficient(&self, k: usize) -> Vec<Scalar> {
        self.entries.iter().map(|p| p.coeff(k)).collect()
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Poly::zero(self.field);
                for k in 0..self.cols {
                    acc = &acc + &(self.get(i, k) * other.get(k, j));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Vertical concatenation `[self; below]`.
    pub fn stack_rows(&self, below: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != below.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack {} columns over {}",
                self.cols, below.cols
            )));
        }
        if self.field != below.field {
            return Err(Error::FieldMismatch(self.field, below.field));
        }
        let mut entries = self.entries.clone();
        entries.extend(below.entries.iter().cloned());
        Ok(Self {
            field: self.field,
            rows: self.rows + below.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Places `block` with its top-left corner at `(r0, c0)`.
    pub fn put_block(&mut self, r0: usize, c0: usize, block: &PolyMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    /// `t^d P(1/t)` with `d = deg P`.
    pub fn reversal(&self) -> Result<PolyMatrix> {
        let d = self.degree_of()?;
        Ok(Self {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|p| p.reversed(d)).collect(),
        })
    }

    /// Uniformly random coefficients of degree at most `deg`, resampled until
    /// the degree is exactly `deg`. Q coefficients are drawn from
    /// `[-bound, bound]`.
    pub fn random<R: Rng + ?Sized>(
        rng: &mut R,
        field: FieldTag,
        rows: usize,
        cols: usize,
        deg: usize,
        bound: i64,
    ) -> PolyMatrix {
        loop {
            let entries = (0..rows)
                .map(|_| {
                    (0..cols)
                        .map(|_| {
                            let c: Vec<i64> = (0..=deg)
                                .map(|_| match field {
                                    FieldTag::Rationals => rng.gen_range(-bound..=bound),
                                    FieldTag::Prime(p) => rng.gen_range(0..p as i64),
                                })
                                .collect();
                            Poly::from_i64s(field, &c)
                        })
                        .collect()
                })
                .collect();
            let m = PolyMatrix::new(field, entries).unwrap();
            if m.degree() == Some(deg) {
                return m;
            }
        }
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// First Frobenius companion form `s X_1 + Y_1`, an
/// `(m + (d-1)n) x dn` pencil. A pencil is returned unchanged.
pub fn companion_form(p: &PolyMatrix) -> Result<PolyMatrix> {
    let d = p.degree_of()?;
    if d == 0 {
        return Err(Error::ConstantMatrix);
    }
    if d == 1 {
        return Ok(p.clone());
    }
    let (m, n) = p.dims();
    let f = p.field();
    let mut c = PolyMatrix::zeros(f, m + (d - 1) * n, d * n);
    let s = Poly::var(f);
    let minus_one = Poly::constant(f, f.from_i64(-1));
    // first block row: [s P_d + P_{d-1}, P_{d-2}, ..., P_0]
    for i in 0..m {
        for j in 0..n {
            let entry = p.get(i, j);
            let lead = &s.scale(&entry.coeff(d)) + &Poly::constant(f, entry.coeff(d - 1));
            c.set(i, j, lead);
            for k in 1..d {
                c.set(i, k * n + j, Poly::constant(f, entry.coeff(d - 1 - k)));
            }
        }
    }
    // block row k: -I in column block k-1, s I in column block k
    for k in 1..d {
        for j in 0..n {
            let row = m + (k - 1) * n + j;
            c.set(row, (k - 1) * n + j, minus_one.clone());
            c.set(row, k * n + j, s.clone());
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldTag = FieldTag::Rationals;

    #[test]
    fn degree_examples() {
        assert_eq!(PolyMatrix::from_i64s(Q, &[&[&[1, 0, 1]]]).degree_of(), Ok(2));
        assert_eq!(
            PolyMatrix::from_i64s(Q, &[&[&[0, 1], &[1]], &[&[], &[0, 1]]]).degree_of(),
            Ok(1)
        );
        assert_eq!(PolyMatrix::from_i64s(Q, &[&[&[3]]]).degree_of(), Ok(0));
        assert_eq!(PolyMatrix::zeros(Q, 2, 2).degree_of(), Err(Error::ZeroMatrix));
    }

    #[test]
    fn reversal_examples() {
        let p = PolyMatrix::from_i64s(Q, &[&[&[1, 0, 1]]]);
        assert_eq!(p.reversal().unwrap(), p);
        let p = PolyMatrix::from_i64s(Q, &[&[&[0, 1], &[1]]]);
        assert_eq!(p.reversal().unwrap(), PolyMatrix::from_i64s(Q, &[&[&[1], &[0, 1]]]));
        let c = PolyMatrix::from_i64s(Q, &[&[&[4], &[-2]]]);
        assert_eq!(c.reversal().unwrap(), c);
        assert_eq!(PolyMatrix::zeros(Q, 1, 1).reversal(), Err(Error::ZeroMatrix));
    }

    #[test]
    fn companion_examples() {
        let p = PolyMatrix::from_i64s(Q, &[&[&[0, 0, 1]]]);
        let expected = PolyMatrix::from_i64s(Q, &[&[&[0, 1], &[]], &[&[-1], &[0, 1]]]);
        assert_eq!(companion_form(&p).unwrap(), expected);

        let p = PolyMatrix::from_i64s(Q, &[&[&[1, 1, 1]]]);
        let expected = PolyMatrix::from_i64s(Q, &[&[&[1, 1], &[1]], &[&[-1], &[0, 1]]]);
        assert_eq!(companion_form(&p).unwrap(), expected);

        let pencil = PolyMatrix::from_i64s(Q, &[&[&[0, 1], &[1]], &[&[2], &[0, 3]]]);
        assert_eq!(companion_form(&pencil).unwrap(), pencil);
        assert_eq!(
            companion_form(&PolyMatrix::from_i64s(Q, &[&[&[5]]])),
            Err(Error::ConstantMatrix)
        );
    }

    #[test]
    fn companion_shape() {
        // 2x3 of degree 3: (2 + 2*3) x 9
        let mut rng = rand::thread_rng();
        let p = PolyMatrix::random(&mut rng, FieldTag::Prime(3), 2, 3, 3, 1);
        let c = companion_form(&p).unwrap();
        assert_eq!(c.dims(), (8, 9));
        assert_eq!(c.degree(), Some(1));
    }

    #[test]
    fn stack_examples() {
        let s = PolyMatrix::from_i64s(Q, &[&[&[0, 1]]]);
        let one = PolyMatrix::from_i64s(Q, &[&[&[1]]]);
        let zero = PolyMatrix::zeros(Q, 1, 1);
        assert_eq!(
            s.stack_rows(&one).unwrap(),
            PolyMatrix::from_i64s(Q, &[&[&[0, 1]], &[&[1]]])
        );
        assert_eq!(
            s.stack_rows(&zero).unwrap(),
            PolyMatrix::from_i64s(Q, &[&[&[0, 1]], &[&[]]])
        );
        let wide = PolyMatrix::zeros(Q, 1, 2);
        assert!(matches!(s.stack_rows(&wide), Err(Error::DimensionMismatch(_))));
        let g2 = PolyMatrix::zeros(FieldTag::Prime(2), 1, 1);
        assert!(matches!(s.stack_rows(&g2), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn construction_checks() {
        assert!(PolyMatrix::new(Q, vec![]).is_err());
        assert!(PolyMatrix::new(Q, vec![vec![Poly::one(Q)], vec![]]).is_err());
        assert!(PolyMatrix::new(Q, vec![vec![Poly::one(FieldTag::Prime(5))]]).is_err());
    }
}
