use crate::algebra::Poly;
use crate::error::Result;

use super::PolyMatrix;

/// Invariant factors by gcd-pivot elimination. Returns the nonzero
/// diagonal entries, monic and forming a divisibility chain.
#[allow(clippy::needless_range_loop)]
pub fn smith_form(p: &PolyMatrix) -> Vec<Poly> {
    let (m, n) = p.dims();
    let mut a = p.to_rows();
    let mut out = Vec::new();
    for k in 0..m.min(n) {
        loop {
            // smallest-degree nonzero entry of the trailing block
            let mut best: Option<(usize, usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(k) {
                for (j, e) in row.iter().enumerate().skip(k) {
                    if let Some(dg) = e.degree() {
                        if best.is_none_or(|b| dg < b.0) {
                            best = Some((dg, i, j));
                        }
                    }
                }
            }
            let Some((_, bi, bj)) = best else {
                return out;
            };
            a.swap(k, bi);
            for row in a.iter_mut() {
                row.swap(k, bj);
            }
            let mut clean = true;
            for i in k + 1..m {
                if a[i][k].is_zero() {
                    continue;
                }
                let (q, r) = a[i][k].div_rem(&a[k][k]);
                for j in k..n {
                    let t = &q * &a[k][j];
                    a[i][j] = &a[i][j] - &t;
                }
                clean &= r.is_zero();
            }
            for j in k + 1..n {
                if a[k][j].is_zero() {
                    continue;
                }
                let (q, r) = a[k][j].div_rem(&a[k][k]);
                for row in a.iter_mut().skip(k) {
                    let t = &q * &row[k];
                    row[j] = &row[j] - &t;
                }
                clean &= r.is_zero();
            }
            if !clean {
                continue;
            }
            // pivot must divide the rest of the block
            let offender = (k + 1..m).find(|&i| (k + 1..n).any(|j| !a[k][k].divides(&a[i][j])));
            match offender {
                Some(i) => {
                    for j in k..n {
                        a[k][j] = &a[k][j] + &a[i][j];
                    }
                }
                None => break,
            }
        }
        out.push(a[k][k].monic());
    }
    out
}

pub fn rank_of(p: &PolyMatrix) -> usize {
    smith_form(p).len()
}

/// Powers of `t` in the invariant factors of the reversal.
pub fn infinite_multiplicities(p: &PolyMatrix) -> Result<Vec<usize>> {
    let rev = p.reversal()?;
    Ok(smith_form(&rev)
        .iter()
        .map(|f| f.valuation().expect("invariant factors are nonzero"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FieldTag;
    use rand::SeedableRng;

    const Q: FieldTag = FieldTag::Rationals;

    fn polys(f: FieldTag, cs: &[&[i64]]) -> Vec<Poly> {
        cs.iter().map(|c| Poly::from_i64s(f, c)).collect()
    }

    #[test]
    fn smith_examples() {
        let p = PolyMatrix::from_i64s(Q, &[&[&[0, 1], &[1]], &[&[], &[0, 1]]]);
        assert_eq!(smith_form(&p), polys(Q, &[&[1], &[0, 0, 1]]));
        let p = PolyMatrix::from_i64s(Q, &[&[&[0, 1], &[]], &[&[], &[0, 0, 1]]]);
        assert_eq!(smith_form(&p), polys(Q, &[&[0, 1], &[0, 0, 1]]));
        assert_eq!(smith_form(&PolyMatrix::from_i64s(Q, &[&[&[1]]])), polys(Q, &[&[1]]));
    }

    #[test]
    fn rank_examples() {
        let p = PolyMatrix::from_i64s(Q, &[&[&[0, 1], &[1]], &[&[0, 0, 1], &[0, 1]]]);
        assert_eq!(rank_of(&p), 1);
        assert_eq!(rank_of(&PolyMatrix::zeros(Q, 2, 2)), 0);
        let p = PolyMatrix::from_i64s(Q, &[&[&[0, 1], &[]], &[&[], &[1]]]);
        assert_eq!(rank_of(&p), 2);
    }

    #[test]
    fn infinite_examples() {
        let p = PolyMatrix::from_i64s(Q, &[&[&[0, 1], &[]], &[&[], &[1]]]);
        assert_eq!(infinite_multiplicities(&p).unwrap(), vec![0, 1]);
        let p = PolyMatrix::from_i64s(Q, &[&[&[1], &[0, 1]], &[&[], &[1]]]);
        assert_eq!(infinite_multiplicities(&p).unwrap(), vec![0, 2]);
        assert_eq!(
            infinite_multiplicities(&PolyMatrix::from_i64s(Q, &[&[&[0, 1]]])).unwrap(),
            vec![0]
        );
    }

    #[test]
    fn random_chains_and_reversal_rank() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for field in [Q, FieldTag::Prime(2), FieldTag::Prime(3)] {
            for _ in 0..60 {
                let p = PolyMatrix::random(&mut rng, field, 3, 3, 2, 2);
                let inv = smith_form(&p);
                assert!(inv.iter().all(Poly::is_monic));
                assert!(inv.windows(2).all(|w| w[0].divides(&w[1])));
                let e = infinite_multiplicities(&p).unwrap();
                assert_eq!(e.len(), inv.len());
                assert!(e.windows(2).all(|w| w[0] <= w[1]));
                assert_eq!(e[0], 0);
                assert_eq!(rank_of(&p.reversal().unwrap()), inv.len());
            }
        }
    }

    #[test]
    fn determinant_degree_matches_product() {
        // for a 2x2 matrix the product of invariant factors is det up to a unit
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let p = PolyMatrix::random(&mut rng, Q, 2, 2, 2, 3);
            let det = &(p.get(0, 0) * p.get(1, 1)) - &(p.get(0, 1) * p.get(1, 0));
            let inv = smith_form(&p);
            if det.is_zero() {
                assert!(inv.len() < 2);
            } else {
                assert_eq!(&inv[0] * &inv[1], det.monic());
            }
        }
    }
}
