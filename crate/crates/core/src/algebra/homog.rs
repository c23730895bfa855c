use std::fmt;

use super::field::FieldTag;
use super::poly::{lcm_nonzero, Poly};
use crate::error::{Error, Result};

/// A monic homogeneous polynomial `t^e * t^deg(alpha) * alpha(s/t)`,
/// stored as its finite part `alpha` and the power `e` of `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomogPoly {
    alpha: Poly,
    e: usize,
}

impl HomogPoly {
    /// Fails unless `alpha` is monic (which excludes zero).
    pub fn new(alpha: Poly, e: usize) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::ZeroPolynomial("homogeneous factor"));
        }
        if !alpha.is_monic() {
            return Err(Error::NotMonic);
        }
        Ok(Self { alpha, e })
    }

    pub fn one(field: FieldTag) -> Self {
        Self {
            alpha: Poly::one(field),
            e: 0,
        }
    }

    pub fn alpha(&self) -> &Poly {
        &self.alpha
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn field(&self) -> FieldTag {
        self.alpha.field()
    }

    pub fn is_one(&self) -> bool {
        self.e == 0 && self.alpha.is_one()
    }

    /// Total homogeneous degree `e + deg(alpha)`.
    pub fn degree(&self) -> usize {
        self.e + self.alpha.degree().unwrap()
    }

    fn same_field(&self, other: &HomogPoly) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field(), other.field()))
        }
    }

    /// `self | other`: `alpha` divides and `e` does not decrease.
    pub fn divides(&self, other: &HomogPoly) -> Result<bool> {
        self.same_field(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub fn lcm(&self, other: &HomogPoly) -> Result<HomogPoly> {
        self.same_field(other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &HomogPoly) -> bool {
        self.e <= other.e && self.alpha.divides(&other.alpha)
    }

    pub(crate) fn lcm_unchecked(&self, other: &HomogPoly) -> HomogPoly {
        HomogPoly {
            alpha: lcm_nonzero(&self.alpha, &other.alpha),
            e: self.e.max(other.e),
        }
    }
}

impl fmt::Display for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; t^{})", self.alpha, self.e)
    }
}

/// Elements that can sit in a divisibility chain: finite invariant factors
/// (`Poly`) and homogeneous invariant factors (`HomogPoly`).
pub trait ChainElem: Clone {
    fn divides_elem(&self, other: &Self) -> bool;
    fn lcm_degree(&self, other: &Self) -> usize;
    fn elem_degree(&self) -> usize;
}

impl ChainElem for Poly {
    fn divides_elem(&self, other: &Self) -> bool {
        self.divides(other)
    }
    fn lcm_degree(&self, other: &Self) -> usize {
        lcm_nonzero(self, other).degree().unwrap()
    }
    fn elem_degree(&self) -> usize {
        self.degree().expect("chain element is nonzero")
    }
}

impl ChainElem for HomogPoly {
    fn divides_elem(&self, other: &Self) -> bool {
        self.divides_unchecked(other)
    }
    fn lcm_degree(&self, other: &Self) -> usize {
        self.lcm_unchecked(other).degree()
    }
    fn elem_degree(&self) -> usize {
        self.degree()
    }
}

/// A chain entry under the out-of-range conventions: index below one reads
/// as the unit, index past the end reads as zero.
#[derive(Debug, PartialEq, Eq)]
pub enum Sentinel<'a, T> {
    One,
    Value(&'a T),
    Zero,
}

impl<T> Clone for Sentinel<'_, T> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<T> Copy for Sentinel<'_, T> {}

impl<'a, T: ChainElem> Sentinel<'a, T> {
    /// Divisibility with `1 | x` for every `x` and `x | 0` for every `x`.
    pub fn divides(&self, other: &Sentinel<'a, T>) -> bool {
        match (self, other) {
            (Sentinel::One, _) | (_, Sentinel::Zero) => true,
            (Sentinel::Zero, _) => false,
            (Sentinel::Value(a), Sentinel::One) => a.elem_degree() == 0,
            (Sentinel::Value(a), Sentinel::Value(b)) => a.divides_elem(b),
        }
    }

    /// Degree of the least common multiple; undefined when zero is involved.
    pub fn lcm_degree(&self, other: &Sentinel<'a, T>) -> Option<usize> {
        match (self, other) {
            (Sentinel::Zero, _) | (_, Sentinel::Zero) => None,
            (Sentinel::One, Sentinel::One) => Some(0),
            (Sentinel::One, Sentinel::Value(a)) | (Sentinel::Value(a), Sentinel::One) => Some(a.elem_degree()),
            (Sentinel::Value(a), Sentinel::Value(b)) => Some(a.lcm_degree(b)),
        }
    }
}

/// 1-based view of a chain `x_1 | ... | x_k` with the sentinel conventions.
#[derive(Debug)]
pub struct Chain<'a, T> {
    items: &'a [T],
}

impl<T> Clone for Chain<'_, T> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<T> Copy for Chain<'_, T> {}

impl<'a, T: ChainElem> Chain<'a, T> {
    pub fn new(items: &'a [T]) -> Self {
        Self { items }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn at(&self, i: i64) -> Sentinel<'a, T> {
        if i < 1 {
            Sentinel::One
        } else if i as usize > self.items.len() {
            Sentinel::Zero
        } else {
            Sentinel::Value(&self.items[i as usize - 1])
        }
    }

    pub fn degree_sum(&self) -> i64 {
        self.items.iter().map(|x| x.elem_degree() as i64).sum()
    }

    /// True iff consecutive entries divide each other.
    pub fn is_divisibility_chain(&self) -> bool {
        self.items.windows(2).all(|w| w[0].divides_elem(&w[1]))
    }
}

/// `sum_{i=1}^{upto} deg lcm(left_{i + shift}, right_i)`.
///
/// Panics if an index lands on the zero sentinel; callers keep the ranges
/// inside the chains.
pub fn lcm_degree_sum<T: ChainElem>(left: Chain<'_, T>, right: Chain<'_, T>, shift: i64, upto: i64) -> i64 {
    (1..=upto)
        .map(|i| {
            left.at(i + shift)
                .lcm_degree(&right.at(i))
                .expect("lcm index within chain") as i64
        })
        .sum()
}
