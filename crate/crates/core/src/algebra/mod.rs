//! Exact scalars, univariate polynomials and homogeneous invariant factors.

mod field;
mod homog;
mod poly;

pub use field::{FieldTag, Scalar};
pub use homog::{lcm_degree_sum, Chain, ChainElem, HomogPoly, Sentinel};
pub use poly::Poly;

use crate::error::Result;

pub fn poly_gcd(p: &Poly, q: &Poly) -> Result<Poly> {
    p.gcd(q)
}

pub fn poly_lcm(p: &Poly, q: &Poly) -> Result<Poly> {
    p.lcm(q)
}

pub fn homog_divides(phi: &HomogPoly, psi: &HomogPoly) -> Result<bool> {
    phi.divides(psi)
}

pub fn homog_lcm(phi: &HomogPoly, psi: &HomogPoly) -> Result<HomogPoly> {
    phi.lcm(psi)
}

pub fn homog_deg(phi: &HomogPoly) -> usize {
    phi.degree()
}

/// All monic polynomials of exactly degree `deg` over a finite field, in a
/// fixed order.
pub fn monic_polys(field: FieldTag, deg: usize, alphabet: &[i64]) -> Vec<Poly> {
    let size = alphabet.len();
    let total = size.pow(deg as u32);
    (0..total)
        .map(|mut idx| {
            let mut c = Vec::with_capacity(deg + 1);
            for _ in 0..deg {
                c.push(alphabet[idx % size]);
                idx /= size;
            }
            c.push(1);
            Poly::from_i64s(field, &c)
        })
        .collect()
}

/// The coefficient alphabet used to enumerate polynomials: every residue for
/// a prime field, `{-1, 0, 1}` over Q.
pub fn default_alphabet(field: FieldTag) -> Vec<i64> {
    match field {
        FieldTag::Rationals => vec![-1, 0, 1],
        FieldTag::Prime(p) => (0..p as i64).collect(),
    }
}
