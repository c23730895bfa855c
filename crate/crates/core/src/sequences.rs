//! Nonincreasing integer sequences, majorization and generalized
//! majorization.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer extended by `-inf` and `+inf`. Variant order gives the order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtInt {
    NegInf,
    Fin(i64),
    PosInf,
}

impl ExtInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Fin(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => write!(f, "-inf"),
            ExtInt::Fin(v) => write!(f, "{v}"),
            ExtInt::PosInf => write!(f, "+inf"),
        }
    }
}

/// A nonincreasing finite integer sequence `a_1 >= ... >= a_m`.
///
/// Read through [`IntSeq::at`], `a_i` is `+inf` for `i < 1` and `-inf` for
/// `i > m`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct IntSeq(Vec<i64>);

impl IntSeq {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotNonincreasing(values));
        }
        Ok(Self(values))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    pub fn at(&self, i: i64) -> ExtInt {
        at(&self.0, i)
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Sum of `a_lo..=a_hi` (1-based), zero for an empty range.
    pub fn range_sum(&self, lo: i64, hi: i64) -> i64 {
        range_sum(&self.0, lo, hi)
    }

    /// Adds `k` to every entry.
    pub fn shifted(&self, k: i64) -> IntSeq {
        IntSeq(self.0.iter().map(|v| v + k).collect())
    }

    /// Number of strictly positive entries.
    pub fn positive_count(&self) -> usize {
        self.0.iter().filter(|&&v| v > 0).count()
    }
}

impl TryFrom<Vec<i64>> for IntSeq {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        IntSeq::new(v)
    }
}

impl<'de> Deserialize<'de> for IntSeq {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<i64>::deserialize(de)?;
        IntSeq::new(v).map_err(serde::de::Error::custom)
    }
}

impl Deref for IntSeq {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

/// A nonincreasing sequence of nonnegative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(IntSeq);

impl Partition {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.iter().any(|&v| v < 0) {
            return Err(Error::NegativePart(values));
        }
        Ok(Self(IntSeq::new(values)?))
    }

    pub fn from_unsorted(mut values: Vec<i64>) -> Result<Self> {
        values.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(values)
    }

    pub fn empty() -> Self {
        Self(IntSeq::empty())
    }

    pub fn as_seq(&self) -> &IntSeq {
        &self.0
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<i64>::deserialize(de)?;
        Partition::new(v).map_err(serde::de::Error::custom)
    }
}

impl Deref for Partition {
    type Target = IntSeq;
    fn deref(&self) -> &IntSeq {
        &self.0
    }
}

pub(crate) fn at(values: &[i64], i: i64) -> ExtInt {
    if i < 1 {
        ExtInt::PosInf
    } else if i as usize > values.len() {
        ExtInt::NegInf
    } else {
        ExtInt::Fin(values[i as usize - 1])
    }
}

pub(crate) fn range_sum(values: &[i64], lo: i64, hi: i64) -> i64 {
    let lo = lo.max(1);
    let hi = hi.min(values.len() as i64);
    if lo > hi {
        return 0;
    }
    values[lo as usize - 1..hi as usize].iter().sum()
}

/// `a ≺ b`: every proper prefix sum of `a` is at most that of `b`, and the
/// totals agree.
pub fn majorizes(a: &IntSeq, b: &IntSeq) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            what: "majorization operands",
            expected: a.len(),
            found: b.len(),
        });
    }
    Ok(majorized_raw(a, b))
}

pub(crate) fn majorized_raw(a: &[i64], b: &[i64]) -> bool {
    debug_assert_eq!(a.len(), b.len());
    let (mut pa, mut pb) = (0i64, 0i64);
    for (x, y) in a.iter().zip(b) {
        pa += x;
        pb += y;
        if pa > pb {
            return false;
        }
    }
    pa == pb
}

/// Outcome of a generalized majorization test, with the cut thresholds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenMajorization {
    pub holds: bool,
    /// `h_1, ..., h_s` (1-based positions in `g`).
    pub thresholds: Vec<i64>,
    pub dominated: bool,
    pub cuts: bool,
    pub total: bool,
}

/// `g ≺' (d, a)` for nonincreasing sequences with `|g| = |d| + |a|`.
pub fn gen_majorizes(g: &IntSeq, d: &IntSeq, a: &IntSeq) -> Result<bool> {
    Ok(gen_majorization(g, d, a)?.holds)
}

pub fn gen_majorization(g: &IntSeq, d: &IntSeq, a: &IntSeq) -> Result<GenMajorization> {
    if g.len() != d.len() + a.len() {
        return Err(Error::LengthMismatch {
            what: "generalized majorization: |g| = |d| + |a|",
            expected: d.len() + a.len(),
            found: g.len(),
        });
    }
    Ok(gen_majorization_raw(g, d, a))
}

/// Generalized majorization on raw slices. The definition is evaluated as
/// written even if the inputs are not sorted.
pub(crate) fn gen_majorization_raw(g: &[i64], d: &[i64], a: &[i64]) -> GenMajorization {
    let m = d.len() as i64;
    let s = a.len() as i64;
    debug_assert_eq!(g.len() as i64, m + s);

    let dominated = (1..=m).all(|i| at(d, i) >= at(g, i + s));

    let mut thresholds = Vec::with_capacity(a.len());
    let mut cuts = true;
    for j in 1..=s {
        // d_{m+1} = -inf guarantees a hit by i = m + j
        let h = (1..=m + s)
            .find(|&i| at(d, i - j + 1) < at(g, i))
            .expect("threshold exists since d_{m+1} = -inf");
        assert!(j <= h && h <= m + j, "threshold h_{j} = {h} out of [j, m + j]");
        thresholds.push(h);
        let lhs = range_sum(g, 1, h) - range_sum(d, 1, h - j);
        if lhs > range_sum(a, 1, j) {
            cuts = false;
        }
    }

    let total = g.iter().sum::<i64>() == d.iter().sum::<i64>() + a.iter().sum::<i64>();
    GenMajorization {
        holds: dominated && cuts && total,
        thresholds,
        dominated,
        cuts,
        total,
    }
}

/// The union of two sequences, sorted nonincreasingly.
pub fn union_desc(u: &IntSeq, b: &IntSeq) -> IntSeq {
    let mut v: Vec<i64> = u.iter().chain(b.iter()).copied().collect();
    v.sort_unstable_by(|x, y| y.cmp(x));
    IntSeq(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(v: &[i64]) -> IntSeq {
        IntSeq::new(v.to_vec()).unwrap()
    }

    #[test]
    fn construction_rejects_unsorted() {
        assert!(IntSeq::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![1, -1]).is_err());
        assert!(Partition::new(vec![2, 0]).is_ok());
        assert_eq!(Partition::from_unsorted(vec![0, 3, 1]).unwrap().values(), &[3, 1, 0]);
    }

    #[test]
    fn accessor_conventions() {
        let a = seq(&[3, 1]);
        assert_eq!(a.at(0), ExtInt::PosInf);
        assert_eq!(a.at(1), ExtInt::Fin(3));
        assert_eq!(a.at(3), ExtInt::NegInf);
        assert!(ExtInt::NegInf < ExtInt::Fin(i64::MIN));
        assert!(ExtInt::Fin(i64::MAX) < ExtInt::PosInf);
        assert_eq!(a.range_sum(2, 1), 0);
        assert_eq!(a.range_sum(0, 5), 4);
    }

    #[test]
    fn majorization_examples() {
        assert!(majorizes(&seq(&[2, 2]), &seq(&[3, 1])).unwrap());
        assert!(!majorizes(&seq(&[3, 1]), &seq(&[2, 2])).unwrap());
        assert!(majorizes(&seq(&[4, 0, -1]), &seq(&[4, 0, -1])).unwrap());
        assert!(majorizes(&seq(&[]), &seq(&[])).unwrap());
        assert!(majorizes(&seq(&[1]), &seq(&[1, 0])).is_err());
    }

    #[test]
    fn gen_majorization_examples() {
        let r = gen_majorization(&seq(&[3, 2, 1]), &seq(&[3, 1]), &seq(&[2])).unwrap();
        assert!(r.holds);
        assert_eq!(r.thresholds, vec![2]);
        let r = gen_majorization(&seq(&[3, 2, 1]), &seq(&[1, 1]), &seq(&[4])).unwrap();
        assert!(!r.holds);
        assert!(!r.dominated);
        assert!(gen_majorizes(&seq(&[2, 1]), &seq(&[2, 1]), &seq(&[])).unwrap());
        assert!(!gen_majorizes(&seq(&[2, 1]), &seq(&[2, 0]), &seq(&[])).unwrap());
        assert!(!gen_majorizes(&seq(&[2, 1]), &seq(&[3, 0]), &seq(&[])).unwrap());
        assert!(gen_majorizes(&seq(&[1]), &seq(&[1]), &seq(&[4])).is_err());
    }

    #[test]
    fn union_examples() {
        assert_eq!(union_desc(&seq(&[3, 1]), &seq(&[2])), seq(&[3, 2, 1]));
        assert_eq!(union_desc(&seq(&[]), &seq(&[5])), seq(&[5]));
        assert_eq!(union_desc(&seq(&[1, 1]), &seq(&[1])), seq(&[1, 1, 1]));
    }

    fn arb_seq_len(len: usize) -> impl Strategy<Value = IntSeq> {
        prop::collection::vec(-4i64..6, len).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            IntSeq::new(v).unwrap()
        })
    }

    fn arb_pair(max_len: usize) -> impl Strategy<Value = (IntSeq, IntSeq)> {
        (0..=max_len).prop_flat_map(|n| (arb_seq_len(n), arb_seq_len(n)))
    }

    fn arb_seq(max_len: usize) -> impl Strategy<Value = IntSeq> {
        prop::collection::vec(-4i64..6, 0..=max_len).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            IntSeq::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn union_is_gen_majorized(u in arb_seq(5), b in arb_seq(5)) {
            prop_assert!(gen_majorizes(&union_desc(&u, &b), &u, &b).unwrap());
        }

        #[test]
        fn empty_d_reduces_to_majorization((g, a) in arb_pair(5)) {
            prop_assert_eq!(
                gen_majorizes(&g, &IntSeq::empty(), &a).unwrap(),
                majorizes(&g, &a).unwrap()
            );
        }

        #[test]
        fn empty_a_reduces_to_equality((g, d) in arb_pair(4)) {
            prop_assert_eq!(gen_majorizes(&g, &d, &IntSeq::empty()).unwrap(), g == d);
        }

        #[test]
        fn shift_invariance(g in arb_seq(6), d in arb_seq(3), k in -5i64..=5) {
            prop_assume!(g.len() >= d.len());
            let s = g.len() - d.len();
            // a chosen to sometimes satisfy the total condition
            let mut a: Vec<i64> = vec![0; s];
            if s > 0 {
                a[0] = g.sum() - d.sum() - (s as i64 - 1) * a.get(1).copied().unwrap_or(0);
                a.sort_unstable_by(|x, y| y.cmp(x));
            }
            let a = IntSeq::new(a).unwrap();
            prop_assert_eq!(
                gen_majorizes(&g, &d, &a).unwrap(),
                gen_majorizes(&g.shifted(k), &d.shifted(k), &a.shifted(k)).unwrap()
            );
        }
    }
}
