use crate::algebra::{default_alphabet, monic_polys, FieldTag, HomogPoly, Poly};
use crate::error::{Error, Result};
use crate::polymatrix::Eigenstructure;
use crate::sequences::Partition;

/// Largest candidate list produced before reporting a budget error.
pub const DEFAULT_TARGET_LIMIT: usize = 1_000_000;

/// Monic divisibility chains `alpha_1 | ... | alpha_len` with total degree
/// at most `max_total`. Over Q the quotients draw coefficients from
/// `alphabet`.
pub fn monic_chains(field: FieldTag, len: usize, max_total: usize, alphabet: &[i64]) -> Vec<Vec<Poly>> {
    fn rec(
        field: FieldTag,
        len: usize,
        left: usize,
        alphabet: &[i64],
        prefix: &mut Vec<Poly>,
        out: &mut Vec<Vec<Poly>>,
    ) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        let last = prefix.last().cloned().unwrap_or_else(|| Poly::one(field));
        let last_deg = last.degree().unwrap();
        let remaining = len - prefix.len();
        // every later entry has degree >= the current one
        for qdeg in 0..=left {
            let deg = last_deg + qdeg;
            if deg * remaining > left {
                break;
            }
            for q in monic_polys(field, qdeg, alphabet) {
                let next = &last * &q;
                prefix.push(next);
                rec(field, len, left - deg, alphabet, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(field, len, max_total, alphabet, &mut Vec::new(), &mut out);
    out
}

/// Nondecreasing sequences of length `len` with sum at most `max_total`,
/// optionally pinned to start at zero.
pub fn nondecreasing_seqs(len: usize, max_total: usize, first_zero: bool) -> Vec<Vec<usize>> {
    fn rec(len: usize, left: usize, lo: usize, first_zero: bool, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        let remaining = len - prefix.len();
        let hi = if prefix.is_empty() && first_zero {
            0
        } else {
            left / remaining
        };
        for k in lo..=hi {
            prefix.push(k);
            rec(len, left - k, k, first_zero, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, max_total, 0, first_zero, &mut Vec::new(), &mut out);
    out
}

/// Partitions with exactly `len` nonnegative parts summing to `total`.
pub fn partitions_exact(len: usize, total: usize) -> Vec<Partition> {
    fn rec(len: usize, left: usize, hi: usize, prefix: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if prefix.len() == len {
            if left == 0 {
                out.push(Partition::new(prefix.clone()).unwrap());
            }
            return;
        }
        let remaining = len - prefix.len();
        for k in (0..=hi.min(left)).rev() {
            if k * remaining < left {
                break;
            }
            prefix.push(k as i64);
            rec(len, left - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, total, total, &mut Vec::new(), &mut out);
    out
}

/// Partitions with `len` parts and sum at most `max_total`.
pub fn partitions_upto(len: usize, max_total: usize) -> Vec<Partition> {
    (0..=max_total).flat_map(|t| partitions_exact(len, t)).collect()
}

/// Homogeneous chains of length `len` with total degree at most
/// `max_total`; pinned to `e_1 = 0` when `first_finite`.
pub fn homog_chains(
    field: FieldTag,
    len: usize,
    max_total: usize,
    alphabet: &[i64],
    first_finite: bool,
) -> Vec<Vec<HomogPoly>> {
    let mut out = Vec::new();
    for alphas in monic_chains(field, len, max_total, alphabet) {
        let used: usize = alphas.iter().map(|a| a.degree().unwrap()).sum();
        for es in nondecreasing_seqs(len, max_total - used, first_finite) {
            out.push(
                alphas
                    .iter()
                    .zip(&es)
                    .map(|(a, &e)| HomogPoly::new(a.clone(), e).unwrap())
                    .collect(),
            );
        }
    }
    out
}

/// Every eigenstructure an `(m+z) x n` matrix of degree `d` could have a
/// priori: positive rank, `e_1 = 0`, and the index sum identity.
pub fn enumerate_targets(m: usize, n: usize, z: usize, d: usize, field: FieldTag) -> Result<Vec<Eigenstructure>> {
    enumerate_targets_with(m + z, n, d, field, &default_alphabet(field), DEFAULT_TARGET_LIMIT)
}

pub fn enumerate_targets_with(
    rows: usize,
    cols: usize,
    d: usize,
    field: FieldTag,
    alphabet: &[i64],
    limit: usize,
) -> Result<Vec<Eigenstructure>> {
    let mut out = Vec::new();
    for rank in 1..=rows.min(cols) {
        let total = rank * d;
        for chain in homog_chains(field, rank, total, alphabet, true) {
            let used: usize = chain.iter().map(HomogPoly::degree).sum();
            let rest = total - used;
            for split in 0..=rest {
                let cols_p = partitions_exact(cols - rank, split);
                let rows_p = partitions_exact(rows - rank, rest - split);
                for c in &cols_p {
                    for u in &rows_p {
                        out.push(Eigenstructure::new(field, d, chain.clone(), c.clone(), u.clone())?);
                        if out.len() > limit {
                            return Err(Error::BudgetExceeded {
                                needed: out.len() as u128,
                                budget: limit as u128,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const GF2: FieldTag = FieldTag::Prime(2);

    #[test]
    fn chains_over_gf2() {
        // length 1, total <= 1: 1, s, s+1
        assert_eq!(monic_chains(GF2, 1, 1, &[0, 1]).len(), 3);
        // length 2, total <= 2: (1,1), (1,s), (1,s+1), (1, deg2 x4), (s,s), (s+1,s+1)
        let chains = monic_chains(GF2, 2, 2, &[0, 1]);
        assert_eq!(chains.len(), 9);
        assert!(chains.iter().all(|c| c[0].divides(&c[1])));
    }

    #[test]
    fn sequence_helpers() {
        assert_eq!(nondecreasing_seqs(2, 2, true), vec![vec![0, 0], vec![0, 1], vec![0, 2]]);
        assert_eq!(nondecreasing_seqs(2, 2, false).len(), 4);
        let p: Vec<Vec<i64>> = partitions_exact(2, 3).iter().map(|p| p.values().to_vec()).collect();
        assert_eq!(p, vec![vec![3, 0], vec![2, 1]]);
        assert_eq!(partitions_exact(0, 0).len(), 1);
        assert!(partitions_exact(0, 1).is_empty());
    }

    #[test]
    fn target_examples() {
        let ts = enumerate_targets(1, 1, 1, 1, GF2).unwrap();
        let h = |c: &[i64]| HomogPoly::new(Poly::from_i64s(GF2, c), 0).unwrap();
        let has = |g: &[i64], v: &[i64]| {
            ts.iter()
                .any(|t| t.hom_factors == [h(g)] && t.row_indices.values() == v)
        };
        assert!(has(&[0, 1], &[0]));
        assert!(has(&[1, 1], &[0]));
        assert!(has(&[1], &[1]));
        assert!(ts
            .iter()
            .all(|t| t.rank >= 1 && t.index_sum_defect() == 0 && t.hom_factors[0].e() == 0));
        assert!(ts.iter().all(|t| t.dims == (2, 1)));
    }

    #[test]
    fn degree_zero_targets_are_trivial() {
        let ts = enumerate_targets(2, 2, 0, 0, GF2).unwrap();
        assert_eq!(ts.len(), 2);
        assert!(ts.iter().all(|t| t.hom_factors.iter().all(HomogPoly::is_one)));
    }
}
