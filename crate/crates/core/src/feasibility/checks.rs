use serde::Serialize;

use super::gaps::{gaps_col_form_unchecked, gaps_row_form_unchecked, hom_degree, lcm_sum, validate_chains, Gaps};
use super::target::{CompletionTarget, Theorem};
use crate::algebra::{lcm_degree_sum, Chain, ChainElem, HomogPoly, Poly};
use crate::error::{Error, Result};
use crate::polymatrix::Eigenstructure;
use crate::sequences::{gen_majorization_raw, majorized_raw, range_sum, IntSeq};

/// Condition identifiers used in [`FeasibilityReport::violations`].
pub mod violation {
    pub const RANK_RANGE: &str = "rank-range";
    pub const INTERLACING: &str = "interlacing";
    pub const ETA: &str = "eta";
    pub const COL_GEN_MAJORIZATION: &str = "col-gen-majorization";
    pub const ROW_GEN_MAJORIZATION: &str = "row-gen-majorization";
    pub const DEGREE_SUM: &str = "degree-sum";
    pub const C_MAJORIZATION: &str = "c-majorization";
    pub const C_SUM_ELL: &str = "c-sum-ell";
    pub const C_SUM_TAIL: &str = "c-sum-tail";
    pub const HOM_ONLY_J: &str = "hom-only-j";
    pub const FINITE_ONLY_J: &str = "finite-only-j";
    pub const INFINITE_ONLY_J: &str = "infinite-only-j";
    pub const GAMMA1_AT_INFINITY: &str = "gamma1-at-infinity";
    pub const INDEX_SUM: &str = "index-sum";
}

use violation as v;

/// Verdict plus every violated condition and the intermediate data used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FeasibilityReport {
    pub theorem: Theorem,
    pub feasible: bool,
    pub violations: Vec<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<i64>>,
    /// `h_j` of the column-index generalized majorization.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub col_thresholds: Option<Vec<i64>>,
    /// `h_j` of the row-index generalized majorization.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub row_thresholds: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<i64>,
}

impl FeasibilityReport {
    fn new(theorem: Theorem, x: Option<i64>) -> Self {
        Self {
            theorem,
            feasible: true,
            violations: Vec::new(),
            x,
            a: None,
            b: None,
            col_thresholds: None,
            row_thresholds: None,
            ell: None,
        }
    }

    fn require(&mut self, ok: bool, id: &'static str) {
        if !ok {
            self.violations.push(id);
            self.feasible = false;
        }
    }

    fn with_gaps(&mut self, g: &Gaps) {
        self.a = Some(g.a.clone());
        self.b = Some(g.b.clone());
    }

    pub fn violates(&self, id: &str) -> bool {
        self.violations.contains(&id)
    }
}

/// Sizes of `P` together with `x = rank(target) - r`.
struct Setup<'a> {
    p: &'a Eigenstructure,
    r: i64,
    m: i64,
    n: i64,
    d: i64,
    z: i64,
    x: i64,
}

impl Setup<'_> {
    fn phi(&self) -> &[HomogPoly] {
        &self.p.hom_factors
    }

    fn c(&self) -> &[i64] {
        self.p.col_indices.values()
    }

    fn u(&self) -> &[i64] {
        self.p.row_indices.values()
    }

    fn eta(&self) -> usize {
        self.p.row_indices.positive_count()
    }

    fn check_len(&self, what: &'static str, expected: i64, found: usize) -> Result<()> {
        if expected as usize != found {
            return Err(Error::LengthMismatch {
                what,
                expected: expected as usize,
                found,
            });
        }
        Ok(())
    }

    fn check_cols(&self, dd: &[i64]) -> Result<()> {
        self.check_len("target column minimal indices", self.n - self.r - self.x, dd.len())
    }

    fn check_rows(&self, vv: &[i64]) -> Result<()> {
        self.check_len(
            "target row minimal indices",
            self.m + self.z - self.r - self.x,
            vv.len(),
        )
    }

    /// `sum_{i<=j} c_i + sum_{i=x+1}^{n-r} c_i`, the column-index part of the
    /// j-indexed inequality families.
    fn c_part(&self, j: i64) -> i64 {
        let c = self.c();
        range_sum(c, 1, j) + range_sum(c, self.x + 1, self.n - self.r)
    }

    fn u_sum(&self) -> i64 {
        self.u().iter().sum()
    }
}

/// Derives `x` and rejects ranks outside `[r, r + min(z, n - r)]`.
#[allow(clippy::result_large_err)]
fn setup<'a>(
    theorem: Theorem,
    p: &'a Eigenstructure,
    target: &CompletionTarget,
) -> std::result::Result<Setup<'a>, FeasibilityReport> {
    let (m, n) = p.dims;
    let r = p.rank as i64;
    let z = target.z as i64;
    let x = target.rank as i64 - r;
    if x < 0 || x > z.min(n as i64 - r) {
        let mut rep = FeasibilityReport::new(theorem, Some(x));
        rep.require(false, v::RANK_RANGE);
        return Err(rep);
    }
    Ok(Setup {
        p,
        r,
        m: m as i64,
        n: n as i64,
        d: p.degree as i64,
        z,
        x,
    })
}

macro_rules! setup_or_return {
    ($theorem:expr, $p:expr, $target:expr) => {
        match setup($theorem, $p, $target) {
            Ok(s) => s,
            Err(rep) => return Ok(rep),
        }
    };
}

/// `target_i | source_i | target_{i+z}` for `1 <= i <= |source|`, with the
/// sentinel conventions at both ends.
pub(crate) fn interlaces<T: ChainElem>(target: &[T], source: &[T], z: usize) -> bool {
    let (t, s) = (Chain::new(target), Chain::new(source));
    (1..=source.len() as i64).all(|i| {
        let si = s.at(i);
        t.at(i).divides(&si) && si.divides(&t.at(i + z as i64))
    })
}

fn warn_if_not_monotone(g: &Gaps, interlacing: bool) {
    if interlacing && !g.is_monotone() {
        log::warn!(
            "gap sequences not nonincreasing although interlacing holds: a={:?} b={:?}",
            g.a,
            g.b
        );
    }
}

/// The conditions of the existence lemma for `d` with `c ≺' (d, a)`.
/// Returns `ell` and whether the head and tail inequalities hold.
/// Requires `|c| > |a|`.
pub(crate) fn lemma_conditions(c: &[i64], a: &[i64]) -> (i64, bool, bool) {
    let x = a.len() as i64;
    assert!(c.len() as i64 > x, "need |c| > |a|");
    // a_{x+1} = -inf makes j = x + 1 always qualify
    let ell = (1..=x)
        .find(|&j| range_sum(c, 1, j) > range_sum(a, 1, j))
        .unwrap_or(x + 1);
    let head = range_sum(c, 1, x + 1) - c[ell as usize - 1] >= a.iter().sum::<i64>();
    let tail = (ell..=x - 1).all(|j| range_sum(c, j + 2, x + 1) >= range_sum(a, j + 1, x));
    (ell, head, tail)
}

/// If some `d` satisfies `c ≺' (d, a)`, the canonical one:
/// `d_1 = sum_{i<=x+1} c_i - sum a`, `d_i = c_{i+x}` for `i >= 2`.
pub fn construct_d(c: &IntSeq, a: &IntSeq) -> Result<Option<IntSeq>> {
    if c.len() <= a.len() {
        return Err(Error::InvalidParameter(format!(
            "construct_d needs |c| > |a|, got {} and {}",
            c.len(),
            a.len()
        )));
    }
    let (_, head, tail) = lemma_conditions(c, a);
    if !(head && tail) {
        return Ok(None);
    }
    let x = a.len() as i64;
    let mut d = vec![range_sum(c, 1, x + 1) - a.sum()];
    d.extend_from_slice(&c[a.len() + 1..]);
    let d = IntSeq::new(d).expect("constructed sequence is nonincreasing");
    debug_assert!(gen_majorization_raw(c, &d, a).holds);
    Ok(Some(d))
}

/// Any matrix with eigenstructure `target` exists iff `e_1 = 0` and the
/// index sum identity holds.
pub fn check_existence(target: &Eigenstructure) -> Result<FeasibilityReport> {
    if target.rank == 0 {
        return Err(Error::InvalidParameter("target rank must be positive".into()));
    }
    let mut rep = FeasibilityReport::new(Theorem::Exists, None);
    rep.require(target.hom_factors[0].e() == 0, v::GAMMA1_AT_INFINITY);
    rep.require(target.index_sum_defect() == 0, v::INDEX_SUM);
    Ok(rep)
}

/// Full prescription: homogeneous factors, column and row minimal indices.
pub fn check_full(p: &Eigenstructure, target: &CompletionTarget) -> Result<FeasibilityReport> {
    full_impl(p, target, false)
}

/// The same characterization with the gaps and the degree condition written
/// through column minimal indices. Agrees with [`check_full`] whenever the
/// interlacing holds.
pub fn check_full_col_form(p: &Eigenstructure, target: &CompletionTarget) -> Result<FeasibilityReport> {
    full_impl(p, target, true)
}

fn full_impl(p: &Eigenstructure, target: &CompletionTarget, col_form: bool) -> Result<FeasibilityReport> {
    let th = Theorem::Full;
    let gamma = target.require_hom(th)?;
    let dd = target.require_cols(th)?.values();
    let vv = target.require_rows(th)?.values();
    let s = setup_or_return!(th, p, target);
    let (x, z) = (s.x as usize, s.z as usize);
    validate_chains(s.phi(), gamma, x, z)?;
    s.check_cols(dd)?;
    s.check_rows(vv)?;

    let mut rep = FeasibilityReport::new(th, Some(s.x));
    let inter = interlaces(gamma, s.phi(), z);
    rep.require(inter, v::INTERLACING);
    rep.require(vv.iter().filter(|&&k| k > 0).count() >= s.eta(), v::ETA);

    let gaps = if col_form {
        gaps_col_form_unchecked(s.phi(), gamma, s.c(), dd, x, z, s.d as usize)
    } else {
        gaps_row_form_unchecked(s.phi(), gamma, s.u(), vv, x, z, s.d as usize)
    };
    warn_if_not_monotone(&gaps, inter);
    let cm = gen_majorization_raw(s.c(), dd, &gaps.a);
    rep.require(cm.holds, v::COL_GEN_MAJORIZATION);
    let rm = gen_majorization_raw(vv, s.u(), &gaps.b);
    rep.require(rm.holds, v::ROW_GEN_MAJORIZATION);

    let lhs = lcm_sum(s.phi(), gamma, -s.x, s.r + s.x);
    let ok = if col_form {
        let rhs = s.c().iter().sum::<i64>() - dd.iter().sum::<i64>() + hom_degree(s.phi()) + s.x * s.d;
        lhs <= rhs && (s.x != s.z || lhs == rhs)
    } else {
        let rhs = vv.iter().sum::<i64>() - s.u_sum() + hom_degree(gamma);
        lhs <= rhs && (s.x != 0 || lhs == rhs)
    };
    rep.require(ok, v::DEGREE_SUM);

    rep.with_gaps(&gaps);
    rep.col_thresholds = Some(cm.thresholds);
    rep.row_thresholds = Some(rm.thresholds);
    Ok(rep)
}

/// Homogeneous invariant factors and column minimal indices prescribed.
pub fn check_hom_plus_cols(p: &Eigenstructure, target: &CompletionTarget) -> Result<FeasibilityReport> {
    let th = Theorem::HomCols;
    let gamma = target.require_hom(th)?;
    let dd = target.require_cols(th)?.values();
    let s = setup_or_return!(th, p, target);
    let (x, z) = (s.x as usize, s.z as usize);
    validate_chains(s.phi(), gamma, x, z)?;
    s.check_cols(dd)?;

    let mut rep = FeasibilityReport::new(th, Some(s.x));
    let inter = interlaces(gamma, s.phi(), z);
    rep.require(inter, v::INTERLACING);
    let gaps = gaps_col_form_unchecked(s.phi(), gamma, s.c(), dd, x, z, s.d as usize);
    warn_if_not_monotone(&gaps, inter);
    let cm = gen_majorization_raw(s.c(), dd, &gaps.a);
    rep.require(cm.holds, v::COL_GEN_MAJORIZATION);

    let lhs = lcm_sum(s.phi(), gamma, -s.x, s.r + s.x);
    let rhs = s.c().iter().sum::<i64>() - dd.iter().sum::<i64>() + hom_degree(s.phi()) + s.x * s.d;
    rep.require(lhs <= rhs && (s.x != s.z || lhs == rhs), v::DEGREE_SUM);

    rep.a = Some(gaps.a);
    rep.col_thresholds = Some(cm.thresholds);
    Ok(rep)
}

/// Homogeneous invariant factors and row minimal indices prescribed.
pub fn check_hom_plus_rows(p: &Eigenstructure, target: &CompletionTarget) -> Result<FeasibilityReport> {
    let th = Theorem::HomRows;
    let gamma = target.require_hom(th)?;
    let vv = target.require_rows(th)?.values();
    let s = setup_or_return!(th, p, target);
    let (x, z) = (s.x as usize, s.z as usize);
    validate_chains(s.phi(), gamma, x, z)?;
    s.check_rows(vv)?;

    let mut rep = FeasibilityReport::new(th, Some(s.x));
    let inter = interlaces(gamma, s.phi(), z);
    rep.require(inter, v::INTERLACING);
    rep.require(vv.iter().filter(|&&k| k > 0).count() >= s.eta(), v::ETA);
    let gaps = gaps_row_form_unchecked(s.phi(), gamma, s.u(), vv, x, z, s.d as usize);
    warn_if_not_monotone(&gaps, inter);
    let rm = gen_majorization_raw(vv, s.u(), &gaps.b);
    rep.require(rm.holds, v::ROW_GEN_MAJORIZATION);

    let lhs = lcm_sum(s.phi(), gamma, -s.x, s.r + s.x);
    let rhs = vv.iter().sum::<i64>() - s.u_sum() + hom_degree(gamma);
    rep.require(lhs <= rhs && (s.x != 0 || lhs == rhs), v::DEGREE_SUM);

    if s.x == s.n - s.r {
        rep.require(majorized_raw(s.c(), &gaps.a), v::C_MAJORIZATION);
    } else {
        let (ell, head, tail) = lemma_conditions(s.c(), &gaps.a);
        rep.require(head, v::C_SUM_ELL);
        rep.require(tail, v::C_SUM_TAIL);
        rep.ell = Some(ell);
    }
    rep.with_gaps(&gaps);
    rep.row_thresholds = Some(rm.thresholds);
    Ok(rep)
}

/// Only the homogeneous invariant factors prescribed.
pub fn check_hom_only(p: &Eigenstructure, target: &CompletionTarget) -> Result<FeasibilityReport> {
    let th = Theorem::Hom;
    let gamma = target.require_hom(th)?;
    let s = setup_or_return!(th, p, target);
    let (x, z) = (s.x as usize, s.z as usize);
    validate_chains(s.phi(), gamma, x, z)?;

    let mut rep = FeasibilityReport::new(th, Some(s.x));
    rep.require(interlaces(gamma, s.phi(), z), v::INTERLACING);
    if s.x < s.z || s.x == s.n - s.r {
        let tight = s.x == s.z && s.x == s.n - s.r;
        let ok = (0..s.x).all(|j| {
            let lhs = lcm_sum(s.phi(), gamma, -s.x + j, s.r + s.x - j) + s.u_sum() + s.c_part(j);
            let rhs = (s.r + s.x - j) * s.d;
            lhs <= rhs && !(tight && j == 0 && lhs != rhs)
        });
        rep.require(ok, v::HOM_ONLY_J);
    } else {
        // x = z < n - r: the row indices cannot change, so v = u
        let gaps = gaps_row_form_unchecked(s.phi(), gamma, s.u(), s.u(), x, z, s.d as usize);
        let (ell, head, tail) = lemma_conditions(s.c(), &gaps.a);
        rep.require(head, v::C_SUM_ELL);
        rep.require(tail, v::C_SUM_TAIL);
        rep.ell = Some(ell);
        rep.a = Some(gaps.a);
    }
    Ok(rep)
}

/// Only the finite invariant factors prescribed.
pub fn check_finite_only(p: &Eigenstructure, target: &CompletionTarget) -> Result<FeasibilityReport> {
    let th = Theorem::Finite;
    let beta = target.require_finite(th)?;
    let s = setup_or_return!(th, p, target);
    if let Some(b) = beta.iter().find(|b| !b.is_monic()) {
        return Err(Error::InvalidParameter(format!(
            "target invariant factor {b} is not monic"
        )));
    }
    if !Chain::new(beta).is_divisibility_chain() {
        return Err(Error::NotAChain("target invariant factors".into()));
    }
    s.check_len("target invariant factors", s.r + s.x, beta.len())?;
    let alpha: Vec<Poly> = p.finite_factors();
    let e_sum: i64 = p.infinite_powers().iter().map(|&e| e as i64).sum();

    let mut rep = FeasibilityReport::new(th, Some(s.x));
    rep.require(interlaces(beta, &alpha, s.z as usize), v::INTERLACING);
    let ok = (0..s.x).all(|j| {
        let lcm = lcm_degree_sum(Chain::new(&alpha), Chain::new(beta), -s.x + j, s.r + s.x - j);
        lcm + e_sum + s.u_sum() + s.c_part(j) <= (s.r + s.x - j) * s.d
    });
    rep.require(ok, v::FINITE_ONLY_J);
    Ok(rep)
}

/// Only the partial multiplicities at infinity prescribed.
pub fn check_infinite_only(p: &Eigenstructure, target: &CompletionTarget) -> Result<FeasibilityReport> {
    let th = Theorem::Infinite;
    let f = target.require_infinite(th)?;
    let s = setup_or_return!(th, p, target);
    if !f.windows(2).all(|w| w[0] <= w[1]) {
        return Err(Error::InvalidParameter(format!(
            "partial multiplicities {f:?} are not nondecreasing"
        )));
    }
    s.check_len("target partial multiplicities at infinity", s.r + s.x, f.len())?;
    let e: Vec<i64> = p.infinite_powers().iter().map(|&k| k as i64).collect();
    let f: Vec<i64> = f.iter().map(|&k| k as i64).collect();
    let alpha_deg: i64 = p.finite_factors().iter().map(|a| a.degree().unwrap() as i64).sum();
    // e_k = 0 below the range; f_k = +inf above it
    let e_at = |k: i64| if k < 1 { 0 } else { e[k as usize - 1] };

    let mut rep = FeasibilityReport::new(th, Some(s.x));
    let inter = (1..=s.r).all(|i| {
        let ei = e[i as usize - 1];
        f[i as usize - 1] <= ei && (i + s.z > s.r + s.x || ei <= f[(i + s.z) as usize - 1])
    });
    rep.require(inter, v::INTERLACING);
    let ok = (0..s.x).all(|j| {
        let maxes: i64 = (1..=s.r + s.x - j)
            .map(|i| e_at(i - s.x + j).max(f[i as usize - 1]))
            .sum();
        maxes + alpha_deg + s.u_sum() + s.c_part(j) <= (s.r + s.x - j) * s.d
    });
    rep.require(ok, v::INFINITE_ONLY_J);
    Ok(rep)
}

/// Dispatches to the characterization for `theorem`. For
/// [`Theorem::Exists`] the target is read as a complete structure of a
/// matrix of the same degree as `p`.
pub fn check(theorem: Theorem, p: &Eigenstructure, target: &CompletionTarget) -> Result<FeasibilityReport> {
    match theorem {
        Theorem::Full => check_full(p, target),
        Theorem::HomCols => check_hom_plus_cols(p, target),
        Theorem::HomRows => check_hom_plus_rows(p, target),
        Theorem::Hom => check_hom_only(p, target),
        Theorem::Finite => check_finite_only(p, target),
        Theorem::Infinite => check_infinite_only(p, target),
        Theorem::Exists => {
            let es = Eigenstructure::new(
                p.field,
                p.degree,
                target.require_hom(theorem)?.to_vec(),
                target.require_cols(theorem)?.clone(),
                target.require_rows(theorem)?.clone(),
            )?;
            check_existence(&es)
        }
    }
}
