use serde::Serialize;

use crate::algebra::{lcm_degree_sum, Chain, HomogPoly};
use crate::error::{Error, Result};

/// The gap sequences `a` (length `x`) and `b` (length `z - x`).
///
/// They are nonincreasing whenever the interlacing conditions hold; with
/// arbitrary chains they are returned as computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gaps {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl Gaps {
    pub fn is_monotone(&self) -> bool {
        self.a.windows(2).all(|w| w[0] >= w[1]) && self.b.windows(2).all(|w| w[0] >= w[1])
    }
}

pub(crate) fn validate_chains(phi: &[HomogPoly], gamma: &[HomogPoly], x: usize, z: usize) -> Result<()> {
    if x > z {
        return Err(Error::InvalidParameter(format!("x = {x} exceeds z = {z}")));
    }
    if gamma.len() != phi.len() + x {
        return Err(Error::LengthMismatch {
            what: "target homogeneous factors",
            expected: phi.len() + x,
            found: gamma.len(),
        });
    }
    if !Chain::new(phi).is_divisibility_chain() {
        return Err(Error::NotAChain("homogeneous factors of P".into()));
    }
    if !Chain::new(gamma).is_divisibility_chain() {
        return Err(Error::NotAChain("target homogeneous factors".into()));
    }
    Ok(())
}

/// `sum_{i=1}^{upto} deg lcm(phi_{i+shift}, gamma_i)`.
pub(crate) fn lcm_sum(phi: &[HomogPoly], gamma: &[HomogPoly], shift: i64, upto: i64) -> i64 {
    lcm_degree_sum(Chain::new(phi), Chain::new(gamma), shift, upto)
}

pub(crate) fn hom_degree(chain: &[HomogPoly]) -> i64 {
    chain.iter().map(|h| h.degree() as i64).sum()
}

/// Shared tail of both forms: `a_j` for `j >= 2` and `b_j` for `j >= 2`,
/// with caller-supplied first entries.
fn assemble(phi: &[HomogPoly], gamma: &[HomogPoly], x: usize, z: usize, d: usize, a1: i64, b1: i64) -> Gaps {
    let (r, x, z, d) = (phi.len() as i64, x as i64, z as i64, d as i64);
    let l = |shift, upto| lcm_sum(phi, gamma, shift, upto);
    let mut a = Vec::with_capacity(x as usize);
    if x >= 1 {
        a.push(a1);
    }
    for j in 2..=x {
        a.push(l(-x + j - 1, r + x - j + 1) - l(-x + j, r + x - j) - d);
    }
    let mut b = Vec::with_capacity((z - x) as usize);
    if z - x >= 1 {
        b.push(b1);
    }
    for j in 2..=z - x {
        b.push(l(-x - j + 1, r + x) - l(-x - j, r + x));
    }
    Gaps { a, b }
}

/// Gaps expressed through the row minimal indices `u` of `P` and `v` of the
/// target.
pub fn build_gaps_row_form(
    phi: &[HomogPoly],
    gamma: &[HomogPoly],
    u: &[i64],
    v: &[i64],
    x: usize,
    z: usize,
    d: usize,
) -> Result<Gaps> {
    validate_chains(phi, gamma, x, z)?;
    Ok(gaps_row_form_unchecked(phi, gamma, u, v, x, z, d))
}

pub(crate) fn gaps_row_form_unchecked(
    phi: &[HomogPoly],
    gamma: &[HomogPoly],
    u: &[i64],
    v: &[i64],
    x: usize,
    z: usize,
    d: usize,
) -> Gaps {
    let (r, xi, di) = (phi.len() as i64, x as i64, d as i64);
    let s = v.iter().sum::<i64>() - u.iter().sum::<i64>() + hom_degree(gamma);
    let a1 = s - lcm_sum(phi, gamma, -xi + 1, r + xi - 1) - di;
    let b1 = s - lcm_sum(phi, gamma, -xi - 1, r + xi);
    assemble(phi, gamma, x, z, d, a1, b1)
}

/// Gaps expressed through the column minimal indices `c` of `P` and `dd`
/// of the target.
pub fn build_gaps_col_form(
    phi: &[HomogPoly],
    gamma: &[HomogPoly],
    c: &[i64],
    dd: &[i64],
    x: usize,
    z: usize,
    d: usize,
) -> Result<Gaps> {
    validate_chains(phi, gamma, x, z)?;
    Ok(gaps_col_form_unchecked(phi, gamma, c, dd, x, z, d))
}

pub(crate) fn gaps_col_form_unchecked(
    phi: &[HomogPoly],
    gamma: &[HomogPoly],
    c: &[i64],
    dd: &[i64],
    x: usize,
    z: usize,
    d: usize,
) -> Gaps {
    let (r, xi, di) = (phi.len() as i64, x as i64, d as i64);
    let sc = c.iter().sum::<i64>() - dd.iter().sum::<i64>() + hom_degree(phi);
    let a1 = sc - lcm_sum(phi, gamma, -xi + 1, r + xi - 1) + (xi - 1) * di;
    let b1 = sc - lcm_sum(phi, gamma, -xi - 1, r + xi) + xi * di;
    assemble(phi, gamma, x, z, d, a1, b1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FieldTag, Poly};

    const Q: FieldTag = FieldTag::Rationals;

    fn h(c: &[i64], e: usize) -> HomogPoly {
        HomogPoly::new(Poly::from_i64s(Q, c), e).unwrap()
    }

    #[test]
    fn row_form_examples() {
        let phi = [h(&[0, 1], 0)];
        let g = build_gaps_row_form(&phi, &[h(&[0, 1], 0)], &[], &[0], 0, 1, 1).unwrap();
        assert_eq!(g, Gaps { a: vec![], b: vec![0] });
        let g = build_gaps_row_form(&phi, &[h(&[1], 0)], &[], &[1], 0, 1, 1).unwrap();
        assert_eq!(g, Gaps { a: vec![], b: vec![1] });
    }

    #[test]
    fn row_form_x_zero_collapse() {
        // b_1 = sum v - sum u + sum deg gamma - sum deg lcm(phi_{i-1}, gamma_i)
        let phi = [h(&[1], 0), h(&[0, 1], 1)];
        let gamma = [h(&[1], 0), h(&[0, 1], 0)];
        let g = build_gaps_row_form(&phi, &gamma, &[2], &[2, 1], 0, 1, 1).unwrap();
        let expected = 3 - 2 + 1 - lcm_sum(&phi, &gamma, -1, 2);
        assert!(g.a.is_empty());
        assert_eq!(g.b, vec![expected]);
    }

    #[test]
    fn col_form_examples() {
        let phi = [h(&[1], 0)];
        let gamma = [h(&[1], 0), h(&[1], 0)];
        let g = build_gaps_col_form(&phi, &gamma, &[1], &[], 1, 1, 1).unwrap();
        assert_eq!(g.a, vec![1]);
        assert!(g.b.is_empty());

        let g = build_gaps_col_form(&phi, &[h(&[1], 0)], &[1], &[1], 0, 1, 1).unwrap();
        assert!(g.a.is_empty());
    }

    #[test]
    fn col_form_unit_collapse() {
        // all-unit chains: a_1 = sum c - sum dd + (x - 1) d
        let phi = vec![HomogPoly::one(Q); 2];
        let gamma = vec![HomogPoly::one(Q); 3];
        let g = build_gaps_col_form(&phi, &gamma, &[3, 2], &[3], 1, 2, 2).unwrap();
        assert_eq!(g.a, vec![2]);
    }

    #[test]
    fn rejects_malformed() {
        let phi = [h(&[0, 1], 0)];
        assert!(build_gaps_row_form(&phi, &[], &[], &[], 0, 1, 1).is_err());
        let bad = [h(&[0, 1], 0), h(&[1, 1], 0)];
        assert!(matches!(
            build_gaps_row_form(&phi, &bad, &[], &[], 1, 1, 1),
            Err(Error::NotAChain(_))
        ));
        assert!(build_gaps_row_form(&phi, &[h(&[1], 0), h(&[1], 0)], &[], &[], 1, 0, 1).is_err());
    }
}
