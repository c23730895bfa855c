use crate::algebra::{FieldTag, Poly};
use crate::error::{Error, Result};
use crate::feasibility::check_existence;
use crate::polymatrix::{companion_form, eigenstructure, Eigenstructure, PolyMatrix};

/// Building blocks of the low-degree realization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockKind {
    /// Companion pencil of a monic polynomial of positive degree.
    Companion(Poly),
    /// `N_k`: `1` on the diagonal, `s` on the superdiagonal.
    InfinityBlock(usize),
    /// `L_k`, of size `k x (k+1)`.
    ColumnSingular(usize),
    /// `R_k = L_k^T`, of size `(k+1) x k`.
    RowSingular(usize),
}

/// The block over `field`. `L_0` and `R_0` have an empty side and are
/// rejected; they amount to a zero column or row.
pub fn kronecker_block(field: FieldTag, kind: &BlockKind) -> Result<PolyMatrix> {
    match kind {
        BlockKind::Companion(alpha) => {
            if alpha.field() != field {
                return Err(Error::FieldMismatch(field, alpha.field()));
            }
            if !alpha.is_monic() || alpha.degree() == Some(0) {
                return Err(Error::InvalidParameter(format!(
                    "companion block needs a monic polynomial of positive degree, got {alpha}"
                )));
            }
            companion_form(&PolyMatrix::new(field, vec![vec![alpha.clone()]])?)
        }
        BlockKind::InfinityBlock(0) => Err(Error::InvalidParameter("N_k needs k >= 1".into())),
        BlockKind::InfinityBlock(k) => Ok(bidiagonal(field, *k, *k, false)),
        BlockKind::ColumnSingular(0) | BlockKind::RowSingular(0) => Err(Error::InvalidParameter(
            "empty singular block; use a zero column or row".into(),
        )),
        BlockKind::ColumnSingular(k) => Ok(bidiagonal(field, *k, *k + 1, true)),
        BlockKind::RowSingular(k) => Ok(bidiagonal(field, *k, *k + 1, true).transpose()),
    }
}

/// `rows x cols` with `(diag, superdiag)` equal to `(s, 1)` when `s_first`,
/// otherwise `(1, s)`.
fn bidiagonal(field: FieldTag, rows: usize, cols: usize, s_first: bool) -> PolyMatrix {
    let (s, one) = (Poly::var(field), Poly::one(field));
    let (diag, sup) = if s_first { (s, one) } else { (one, s) };
    let mut m = PolyMatrix::zeros(field, rows, cols);
    for i in 0..rows {
        m.set(i, i, diag.clone());
        if i + 1 < cols {
            m.set(i, i + 1, sup.clone());
        }
    }
    m
}

/// The blocks used for a degree-one target, in the order companion,
/// infinity, column singular, row singular.
pub fn realization_blocks(target: &Eigenstructure) -> Vec<BlockKind> {
    let mut blocks = Vec::new();
    for h in &target.hom_factors {
        if h.alpha().degree() != Some(0) {
            blocks.push(BlockKind::Companion(h.alpha().clone()));
        }
    }
    for h in &target.hom_factors {
        if h.e() > 0 {
            blocks.push(BlockKind::InfinityBlock(h.e()));
        }
    }
    for &c in target.col_indices.iter().filter(|&&c| c > 0) {
        blocks.push(BlockKind::ColumnSingular(c as usize));
    }
    for &u in target.row_indices.iter().filter(|&&u| u > 0) {
        blocks.push(BlockKind::RowSingular(u as usize));
    }
    blocks
}

/// A matrix of degree at most one with exactly the eigenstructure `target`.
pub fn realize_low_degree(target: &Eigenstructure) -> Result<PolyMatrix> {
    if target.degree > 1 {
        return Err(Error::InvalidParameter(format!(
            "direct realization covers degree 0 and 1, target has degree {}",
            target.degree
        )));
    }
    let report = check_existence(target)?;
    if !report.feasible {
        return Err(Error::Infeasible(report.violations.join(", ")));
    }
    let f = target.field;
    let (m, n) = target.dims;
    let mut out = PolyMatrix::zeros(f, m, n);
    if target.degree == 0 {
        for i in 0..target.rank {
            out.set(i, i, Poly::one(f));
        }
    } else {
        let (mut r0, mut c0) = (0, 0);
        for kind in realization_blocks(target) {
            let b = kronecker_block(f, &kind).expect("blocks from a valid target");
            out.put_block(r0, c0, &b);
            r0 += b.rows();
            c0 += b.cols();
        }
        assert!(r0 <= m && c0 <= n, "blocks exceed the target size");
    }
    assert_eq!(out.degree(), Some(target.degree), "realization has the wrong degree");
    let got = eigenstructure(&out)?;
    assert_eq!(&got, target, "realization round trip failed");
    Ok(out)
}
