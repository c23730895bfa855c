//! Dense linear algebra over the coefficient field, for high-coefficient
//! matrices.

use crate::algebra::{FieldTag, Scalar};

/// Reduced row echelon form in place; returns the pivot columns.
#[allow(clippy::needless_range_loop)]
fn rref(f: FieldTag, a: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = f.inv(&a[row][col]);
        for x in a[row].iter_mut() {
            *x = f.mul(x, &inv);
        }
        for i in 0..a.len() {
            if i != row && !a[i][col].is_zero() {
                let factor = a[i][col].clone();
                for j in 0..cols {
                    let t = f.mul(&factor, &a[row][j]);
                    a[i][j] = f.sub(&a[i][j], &t);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == a.len() {
            break;
        }
    }
    pivots
}

pub(crate) fn rank(f: FieldTag, a: &[Vec<Scalar>], cols: usize) -> usize {
    let mut work = a.to_vec();
    rref(f, &mut work, cols).len()
}

/// A nonzero vector `x` with `a x = 0`, if one exists.
pub(crate) fn null_vector(f: FieldTag, a: &[Vec<Scalar>], cols: usize) -> Option<Vec<Scalar>> {
    let mut work = a.to_vec();
    let pivots = rref(f, &mut work, cols);
    let free = (0..cols).find(|c| !pivots.contains(c))?;
    let mut x = vec![f.zero(); cols];
    x[free] = f.one();
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = f.neg(&work[row][free]);
    }
    Some(x)
}
