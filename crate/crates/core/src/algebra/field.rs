use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The coefficient field of a polynomial or matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldTag {
    Rationals,
    Prime(u64),
}

/// A field element. Residues are kept in `[0, p)`, rationals in lowest terms.
///
/// Scalars carry no field of their own; arithmetic goes through the
/// [`FieldTag`] that owns them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u64;
    while k.saturating_mul(k) <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

impl FieldTag {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldTag::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldTag::Rationals => 0,
            FieldTag::Prime(p) => *p,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldTag::Prime(_))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldTag::Rationals => Scalar::Rational(BigRational::zero()),
            FieldTag::Prime(_) => Scalar::Residue(0),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldTag::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldTag::Prime(p) => Scalar::Residue(v.rem_euclid(*p as i64) as u64),
        }
    }

    /// Builds a rational `num/den`; only valid for [`FieldTag::Rationals`].
    pub fn ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        match self {
            FieldTag::Rationals if den != 0 => {
                Ok(Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den))))
            }
            FieldTag::Rationals => Err(Error::Parse("zero denominator".into())),
            FieldTag::Prime(_) => Err(Error::NotInField(format!("{num}/{den}"), *self)),
        }
    }

    /// The `k`-th element in a fixed enumeration of a finite field.
    pub fn element(&self, k: u64) -> Scalar {
        match self {
            FieldTag::Rationals => self.from_i64(k as i64),
            FieldTag::Prime(p) => Scalar::Residue(k % p),
        }
    }

    pub fn contains(&self, a: &Scalar) -> bool {
        match (self, a) {
            (FieldTag::Rationals, Scalar::Rational(_)) => true,
            (FieldTag::Prime(p), Scalar::Residue(v)) => v < p,
            _ => false,
        }
    }

    pub fn check(&self, a: &Scalar) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::NotInField(a.to_string(), *self))
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldTag::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (FieldTag::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(((*x as u128 + *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldTag::Rationals, Scalar::Rational(x)) => Scalar::Rational(-x),
            (FieldTag::Prime(p), Scalar::Residue(x)) => Scalar::Residue((p - x) % p),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldTag::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (FieldTag::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        assert!(!a.is_zero(), "inverse of zero");
        match (self, a) {
            (FieldTag::Rationals, Scalar::Rational(x)) => Scalar::Rational(x.recip()),
            (FieldTag::Prime(p), Scalar::Residue(x)) => {
                // Fermat: x^(p-2)
                let m = *p as u128;
                let (mut base, mut exp, mut acc) = (*x as u128 % m, p - 2, 1u128);
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % m;
                    }
                    base = base * base % m;
                    exp >>= 1;
                }
                Scalar::Residue(acc as u64)
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_zero(),
            Scalar::Residue(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_one(),
            Scalar::Residue(v) => *v == 1,
        }
    }

    /// Small-integer view, used by the JSON writer for residues.
    pub fn as_residue(&self) -> Option<u64> {
        match self {
            Scalar::Residue(v) => Some(*v),
            Scalar::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(x) => Some(x),
            Scalar::Residue(_) => None,
        }
    }

    /// Parses `"a"`, `"-a"` or `"a/b"` for [`FieldTag::Rationals`] and a
    /// residue in `[0, p)` for a prime field.
    pub fn parse(field: FieldTag, text: &str) -> Result<Scalar> {
        let text = text.trim();
        match field {
            FieldTag::Rationals => {
                let value = match text.split_once('/') {
                    Some((n, d)) => {
                        let n: BigInt = n.trim().parse().map_err(|_| bad_scalar(text))?;
                        let d: BigInt = d.trim().parse().map_err(|_| bad_scalar(text))?;
                        if d.is_zero() {
                            return Err(Error::Parse(format!("zero denominator in {text:?}")));
                        }
                        BigRational::new(n, d)
                    }
                    None => BigRational::from_integer(text.parse().map_err(|_| bad_scalar(text))?),
                };
                Ok(Scalar::Rational(value))
            }
            FieldTag::Prime(p) => {
                let v: u64 = text.parse().map_err(|_| bad_scalar(text))?;
                if v >= p {
                    return Err(Error::NotInField(text.to_string(), field));
                }
                Ok(Scalar::Residue(v))
            }
        }
    }

    /// Integer value if this is an integral rational or a residue.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Residue(v) => i64::try_from(*v).ok(),
            Scalar::Rational(x) if x.is_integer() => x.numer().to_i64(),
            Scalar::Rational(_) => None,
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(x) if x.is_negative())
    }
}

fn bad_scalar(text: &str) -> Error {
    Error::Parse(format!("invalid scalar {text:?}"))
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rationals => write!(f, "Q"),
            FieldTag::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(x) => write!(f, "{x}"),
            Scalar::Residue(v) => write!(f, "{v}"),
        }
    }
}
