use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{FieldTag, Scalar};
use crate::error::{Error, Result};

/// Dense univariate polynomial in `s`, coefficients in ascending degree.
///
/// The zero polynomial has an empty coefficient vector; otherwise the last
/// coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldTag,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: FieldTag, coeffs: Vec<Scalar>) -> Result<Self> {
        for c in &coeffs {
            field.check(c)?;
        }
        Ok(Self::from_raw(field, coeffs))
    }

    /// Skips the membership check; coefficients must already be in `field`.
    pub(crate) fn from_raw(field: FieldTag, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Self { field, coeffs }
    }

    pub fn from_i64s(field: FieldTag, coeffs: &[i64]) -> Self {
        Self::from_raw(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: FieldTag) -> Self {
        Self {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: FieldTag) -> Self {
        Self::constant(field, field.one())
    }

    pub fn constant(field: FieldTag, c: Scalar) -> Self {
        Self::from_raw(field, vec![c])
    }

    /// `c * s^k`.
    pub fn monomial(field: FieldTag, c: Scalar, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Self::from_raw(field, coeffs)
    }

    /// The indeterminate `s`.
    pub fn var(field: FieldTag) -> Self {
        Self::monomial(field, field.one(), 1)
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Scalar::is_one)
    }

    /// Multiplicity of `s` as a factor. `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.field);
        }
        let f = self.field;
        Poly::from_raw(f, self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    /// Multiplies by `s^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly::from_raw(self.field, coeffs)
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&self.field.inv(lc)),
        }
    }

    /// `t^d p(1/t)`: coefficient `k` of the result is coefficient `d - k`
    /// of `self`. Requires `deg(self) <= d`.
    pub fn reversed(&self, d: usize) -> Poly {
        assert!(self.degree().is_none_or(|k| k <= d));
        let coeffs = (0..=d).map(|k| self.coeff(d - k)).collect();
        Poly::from_raw(self.field, coeffs)
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let f = self.field;
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = f.inv(divisor.leading().unwrap());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(f), self.clone());
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = f.mul(&rem[k], &lc_inv);
            for (i, b) in divisor.coeffs.iter().enumerate() {
                let t = f.mul(&q, b);
                rem[k - dd + i] = f.sub(&rem[k - dd + i], &t);
            }
            quot[k - dd] = q;
        }
        (Poly::from_raw(f, quot), Poly::from_raw(f, rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    /// True iff `self` divides `other`. Zero divides only zero.
    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    fn same_field(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field, other.field))
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial("gcd of two zero polynomials"));
        }
        Ok(gcd_nonzero(self, other))
    }

    /// Monic least common multiple of two nonzero polynomials.
    pub fn lcm(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroPolynomial("lcm argument"));
        }
        Ok(lcm_nonzero(self, other))
    }
}

pub(crate) fn gcd_nonzero(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    match a.field {
        FieldTag::Rationals => gcd_rational(a, b),
        FieldTag::Prime(_) => {
            let (mut x, mut y) = (a.clone(), b.clone());
            while !y.is_zero() {
                let r = x.rem(&y);
                x = y;
                y = r;
            }
            x.monic()
        }
    }
}

pub(crate) fn lcm_nonzero(a: &Poly, b: &Poly) -> Poly {
    let g = gcd_nonzero(a, b);
    (a * b).div_rem(&g).0.monic()
}

// Primitive polynomial remainder sequence over Z; keeps coefficient growth
// bounded where plain Euclid over Q would not.
fn gcd_rational(a: &Poly, b: &Poly) -> Poly {
    let mut x = primitive_integer(a);
    let mut y = primitive_integer(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = primitive(pseudo_rem(&x, &y));
        x = y;
        y = r;
    }
    let coeffs = x
        .into_iter()
        .map(|c| Scalar::Rational(BigRational::from_integer(c)))
        .collect();
    Poly::from_raw(FieldTag::Rationals, coeffs).monic()
}

fn primitive_integer(p: &Poly) -> Vec<BigInt> {
    let denom = p
        .coeffs
        .iter()
        .filter_map(Scalar::as_rational)
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = p
        .coeffs
        .iter()
        .filter_map(Scalar::as_rational)
        .map(|c| (c * BigRational::from_integer(denom.clone())).to_integer())
        .collect();
    primitive(ints)
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return v;
    }
    let content = if v.last().unwrap().is_negative() {
        -content
    } else {
        content
    };
    v.iter().map(|c| c / &content).collect()
}

// lc(b)^k * a mod b over Z, for some k >= 0.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &lr * bc;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        debug_assert_eq!(self.field, rhs.field);
        let f = self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_raw(f, (0..n).map(|k| f.add(&self.coeff(k), &rhs.coeff(k))).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        debug_assert_eq!(self.field, rhs.field);
        let f = self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_raw(f, (0..n).map(|k| f.sub(&self.coeff(k), &rhs.coeff(k))).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = self.field;
        Poly::from_raw(f, self.coeffs.iter().map(|c| f.neg(c)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        debug_assert_eq!(self.field, rhs.field);
        let f = self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Poly::from_raw(f, out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "s")?,
                (1, false) => write!(f, "{c}*s")?,
                (_, true) => write!(f, "s^{k}")?,
                (_, false) => write!(f, "{c}*s^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldTag = FieldTag::Rationals;
    const GF2: FieldTag = FieldTag::Prime(2);

    fn q(c: &[i64]) -> Poly {
        Poly::from_i64s(Q, c)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(q(&[-1, 0, 1]).gcd(&q(&[-1, 1])).unwrap(), q(&[-1, 1]));
        assert_eq!(q(&[0, 1]).gcd(&q(&[1])).unwrap(), q(&[1]));
        let g2 = |c: &[i64]| Poly::from_i64s(GF2, c);
        assert_eq!(g2(&[1, 0, 1]).gcd(&g2(&[1, 1])).unwrap(), g2(&[1, 1]));
        // (s+1)^2 = s^2 + 1 over GF(2)
        assert_eq!(&g2(&[1, 1]) * &g2(&[1, 1]), g2(&[1, 0, 1]));
    }

    #[test]
    fn gcd_errors() {
        assert_eq!(
            Poly::zero(Q).gcd(&Poly::zero(Q)),
            Err(Error::ZeroPolynomial("gcd of two zero polynomials"))
        );
        assert_eq!(q(&[1]).gcd(&Poly::one(GF2)), Err(Error::FieldMismatch(Q, GF2)));
        assert_eq!(Poly::zero(Q).gcd(&q(&[2, 4])).unwrap(), q(&[1, 2]).monic());
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(q(&[0, 1]).lcm(&q(&[0, 0, 1])).unwrap(), q(&[0, 0, 1]));
        assert_eq!(q(&[-1, 1]).lcm(&q(&[1, 1])).unwrap(), q(&[-1, 0, 1]));
        assert_eq!(q(&[1]).lcm(&q(&[1])).unwrap(), q(&[1]));
        assert!(q(&[1]).lcm(&Poly::zero(Q)).is_err());
    }

    #[test]
    fn rational_gcd_with_fractions() {
        let half = Q.ratio(1, 2).unwrap();
        // (s/2 - 1/2)(s + 3) and 3(s - 1)
        let a = &Poly::new(Q, vec![Q.neg(&half), half.clone()]).unwrap() * &q(&[3, 1]);
        let b = q(&[-3, 3]);
        assert_eq!(a.gcd(&b).unwrap(), q(&[-1, 1]));
    }

    #[test]
    fn division_and_reversal() {
        let (quot, rem) = q(&[1, 0, 1]).div_rem(&q(&[1, 1]));
        assert_eq!(quot, q(&[-1, 1]));
        assert_eq!(rem, q(&[2]));
        assert_eq!(q(&[1, 0, 1]).reversed(2), q(&[1, 0, 1]));
        assert_eq!(q(&[0, 1]).reversed(1), q(&[1]));
        assert_eq!(q(&[1]).reversed(1), q(&[0, 1]));
        assert_eq!(q(&[0, 0, 3]).valuation(), Some(2));
    }

    fn arb_poly(field: FieldTag) -> impl Strategy<Value = Poly> {
        let range = match field {
            FieldTag::Rationals => -3i64..=3,
            FieldTag::Prime(p) => 0..=(p as i64 - 1),
        };
        prop::collection::vec(range, 0..6).prop_map(move |c| Poly::from_i64s(field, &c))
    }

    proptest! {
        #[test]
        fn gcd_divides_and_lcm_product(a in arb_poly(Q), b in arb_poly(Q)) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let g = a.gcd(&b).unwrap();
            prop_assert!(g.is_monic());
            prop_assert!(g.divides(&a) && g.divides(&b));
            let l = a.lcm(&b).unwrap();
            prop_assert_eq!(l.degree().unwrap() + g.degree().unwrap(),
                a.degree().unwrap() + b.degree().unwrap());
            prop_assert_eq!((&l * &g).monic(), (&a * &b).monic());
        }

        #[test]
        fn gcd_over_gf3(a in arb_poly(FieldTag::Prime(3)), b in arb_poly(FieldTag::Prime(3))) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let g = a.gcd(&b).unwrap();
            prop_assert!(g.divides(&a) && g.divides(&b));
            let l = a.lcm(&b).unwrap();
            prop_assert!(a.divides(&l) && b.divides(&l));
            prop_assert_eq!((&l * &g).monic(), (&a * &b).monic());
        }

        #[test]
        fn div_rem_reconstructs(a in arb_poly(Q), b in arb_poly(Q)) {
            prop_assume!(!b.is_zero());
            let (quot, rem) = a.div_rem(&b);
            prop_assert_eq!(&(&quot * &b) + &rem, a);
            prop_assert!(rem.degree().is_none_or(|k| k < b.degree().unwrap()));
        }
    }
}
