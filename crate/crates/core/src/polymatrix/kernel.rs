use serde::Serialize;

use crate::algebra::{FieldTag, Poly, Scalar};
use crate::sequences::Partition;

use super::linalg;
use super::PolyMatrix;

/// A minimal polynomial basis of a null space, ordered by decreasing degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalBasis {
    #[serde(skip)]
    pub vectors: Vec<Vec<Poly>>,
    pub orders: Vec<usize>,
}

impl MinimalBasis {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// The basis as the columns of a matrix with `dim` rows; `None` when empty.
    pub fn as_matrix(&self, field: FieldTag, dim: usize) -> Option<PolyMatrix> {
        if self.vectors.is_empty() {
            return None;
        }
        let mut out = PolyMatrix::zeros(field, dim, self.vectors.len());
        for (j, v) in self.vectors.iter().enumerate() {
            for (i, e) in v.iter().enumerate() {
                out.set(i, j, e.clone());
            }
        }
        Some(out)
    }
}

/// Column and row minimal indices together with the bases realizing them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalIndices {
    pub col: Partition,
    pub row: Partition,
    pub right_basis: MinimalBasis,
    pub left_basis: MinimalBasis,
}

pub fn minimal_indices(p: &PolyMatrix) -> MinimalIndices {
    let right_basis = right_minimal_basis(p);
    let left_basis = right_minimal_basis(&p.transpose());
    let col = Partition::new(right_basis.orders.iter().map(|&k| k as i64).collect()).unwrap();
    let row = Partition::new(left_basis.orders.iter().map(|&k| k as i64).collect()).unwrap();
    MinimalIndices {
        col,
        row,
        right_basis,
        left_basis,
    }
}

fn column_degree(col: &[Poly]) -> Option<usize> {
    col.iter().filter_map(Poly::degree).max()
}

/// A right minimal basis: columns of a unimodular `V` with `P V = [H 0]`
/// span the polynomial kernel and have no finite zeros; column reduction
/// then makes them minimal.
pub fn right_minimal_basis(p: &PolyMatrix) -> MinimalBasis {
    let f = p.field();
    let (m, n) = p.dims();
    let mut a: Vec<Vec<Poly>> = (0..n).map(|j| (0..m).map(|i| p.get(i, j).clone()).collect()).collect();
    let mut v: Vec<Vec<Poly>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| if i == j { Poly::one(f) } else { Poly::zero(f) })
                .collect()
        })
        .collect();
    // a[j] is column j of P V, v[j] column j of V
    let mut free: Vec<usize> = (0..n).collect();
    for i in 0..m {
        loop {
            let live: Vec<usize> = free.iter().copied().filter(|&j| !a[j][i].is_zero()).collect();
            if live.len() <= 1 {
                if let Some(&j) = live.first() {
                    free.retain(|&k| k != j);
                }
                break;
            }
            let piv = *live.iter().min_by_key(|&&j| a[j][i].degree().unwrap()).unwrap();
            for &j in &live {
                if j == piv {
                    continue;
                }
                let q = a[j][i].div_rem(&a[piv][i]).0;
                sub_multiple(&mut a, j, piv, &q);
                sub_multiple(&mut v, j, piv, &q);
            }
        }
    }
    let mut basis: Vec<Vec<Poly>> = free.iter().map(|&j| v[j].clone()).collect();
    column_reduce(f, &mut basis);
    debug_assert!(is_column_reduced(f, &basis));
    basis.sort_by_key(|c| std::cmp::Reverse(column_degree(c).unwrap()));
    let orders = basis.iter().map(|c| column_degree(c).unwrap()).collect();
    MinimalBasis { vectors: basis, orders }
}

fn sub_multiple(cols: &mut [Vec<Poly>], target: usize, src: usize, q: &Poly) {
    for k in 0..cols[target].len() {
        let t = q * &cols[src][k];
        cols[target][k] = &cols[target][k] - &t;
    }
}

/// Rows are entries, columns are basis vectors, coefficients taken at each
/// vector's own degree.
pub(crate) fn high_coefficients(cols: &[Vec<Poly>]) -> Vec<Vec<Scalar>> {
    let dim = cols.first().map_or(0, Vec::len);
    let degs: Vec<usize> = cols.iter().map(|c| column_degree(c).unwrap()).collect();
    (0..dim)
        .map(|i| cols.iter().zip(&degs).map(|(c, &d)| c[i].coeff(d)).collect())
        .collect()
}

pub(crate) fn is_column_reduced(f: FieldTag, cols: &[Vec<Poly>]) -> bool {
    cols.is_empty() || linalg::rank(f, &high_coefficients(cols), cols.len()) == cols.len()
}

/// Unimodular degree-lowering column operations until the high-coefficient
/// matrix has full column rank. Each step strictly lowers the total degree.
fn column_reduce(f: FieldTag, cols: &mut [Vec<Poly>]) {
    loop {
        if cols.is_empty() {
            return;
        }
        let hc = high_coefficients(cols);
        let Some(x) = linalg::null_vector(f, &hc, cols.len()) else {
            return;
        };
        let degs: Vec<usize> = cols.iter().map(|c| column_degree(c).unwrap()).collect();
        let j = (0..cols.len())
            .filter(|&k| !x[k].is_zero())
            .max_by_key(|&k| degs[k])
            .unwrap();
        let inv = f.inv(&x[j]);
        for k in 0..cols.len() {
            if k == j || x[k].is_zero() {
                continue;
            }
            let q = Poly::monomial(f, f.mul(&x[k], &inv), degs[j] - degs[k]);
            let (head, tail) = cols.split_at_mut(j.max(k));
            let (dst, src) = if j < k {
                (&mut head[j], &tail[0])
            } else {
                (&mut tail[0], &head[k])
            };
            for i in 0..dst.len() {
                let t = &q * &src[i];
                dst[i] = &dst[i] + &t;
            }
        }
    }
}
