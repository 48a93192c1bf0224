//! The two eigenproblems of the ultradiscrete Lax pair.
//!
//! For a potential `u` the first two Lax equations read
//!
//! ```text
//! Φ¹_i = max(Φ¹_{i+1} + γ_i − k, Φ¹_{i−1} + γ_i),   γ_i = min(u_i, 1 − u_{i−1})
//! Φ²_i = max(Φ²_{i+1} + δ_i − k, Φ²_{i−1} + δ_i),   δ_i = min(u_{i−1}, 1 − u_i)
//! ```
//!
//! i.e. `A(γ) ⊗ Φ¹ = Φ¹` and `A(δ) ⊗ Φ² = Φ²` for tridiagonal matrices
//! `A(γ)`, `A(δ)`. Everything here works on the finite window
//! `[−N−1, N+1]`, where `u` vanishes outside `(−N, N)`; solutions on the
//! whole line are recovered by the tail rule stored in [`EigenSeq`].

use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::MaxPlusMatrix;
use crate::scalar::{one, MaxPlus, Rational};
use crate::spectral::{is_eigenvector, kleene_star_column};

/// A finitely supported rational sequence; zero outside the stored values.
///
/// Stored trimmed: the first and last stored values are nonzero, and the
/// zero potential has no stored values and `support_lo == 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Potential {
    support_lo: i64,
    values: Vec<Rational>,
}

/// A value outside `[0, 1)`. Formulas still apply literally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueWarning {
    pub index: i64,
    pub value: Rational,
}

impl fmt::Display for ValueWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u_{} = {} lies outside [0, 1)", self.index, self.value)
    }
}

impl Potential {
    pub fn new(support_lo: i64, values: Vec<Rational>) -> Self {
        let mut values = values;
        let lead = values.iter().take_while(|v| v.is_zero()).count();
        if lead == values.len() {
            return Self::zero();
        }
        values.drain(..lead);
        while values.last().is_some_and(Zero::is_zero) {
            values.pop();
        }
        Potential { support_lo: support_lo + lead as i64, values }
    }

    pub fn zero() -> Self {
        Potential { support_lo: 0, values: Vec::new() }
    }

    /// Builds from an index → value closure on `[lo, hi]`.
    pub fn from_fn(lo: i64, hi: i64, f: impl FnMut(i64) -> Rational) -> Self {
        Self::new(lo, (lo..=hi).map(f).collect())
    }

    pub fn support_lo(&self) -> i64 {
        self.support_lo
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// First and last nonzero index.
    pub fn support(&self) -> Option<(i64, i64)> {
        (!self.values.is_empty()).then(|| (self.support_lo, self.support_lo + self.values.len() as i64 - 1))
    }

    /// `u_i`, zero outside the support.
    pub fn get(&self, i: i64) -> Rational {
        let off = i - self.support_lo;
        if off < 0 {
            return Rational::zero();
        }
        self.values.get(off as usize).cloned().unwrap_or_else(Rational::zero)
    }

    /// `u_i + u_{i+1}`.
    pub fn pair_sum(&self, i: i64) -> Rational {
        self.get(i) + self.get(i + 1)
    }

    /// Smallest `N ≥ 0` with `u_i = 0` whenever `i ≥ N` or `i ≤ −N`.
    pub fn bound(&self) -> i64 {
        match self.support() {
            None => 0,
            Some((lo, hi)) => lo.abs().max(hi.abs()) + 1,
        }
    }

    /// The canonical window `[−N−1, N+1]`.
    pub fn window(&self) -> (i64, i64) {
        let n = self.bound();
        (-n - 1, n + 1)
    }

    pub fn mass(&self) -> Rational {
        self.values.iter().fold(Rational::zero(), |acc, v| acc + v)
    }

    /// The same sequence moved `by` sites to the right.
    pub fn shifted(&self, by: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Potential { support_lo: self.support_lo + by, values: self.values.clone() }
    }

    /// Values outside `[0, 1)`.
    pub fn warnings(&self) -> Vec<ValueWarning> {
        let lo = self.support_lo;
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_negative() || **v >= one())
            .map(|(i, v)| ValueWarning { index: lo + i as i64, value: v.clone() })
            .collect()
    }
}

/// Which side of `v_sup = 1` a potential lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Case {
    /// `v_sup < 1`: no massive solitons.
    C1,
    /// `v_sup > 1`.
    C2,
    /// `v_sup = 1`, readable either way.
    Borderline,
}

impl Case {
    pub fn as_str(self) -> &'static str {
        match self {
            Case::C1 => "C1",
            Case::C2 => "C2",
            Case::Borderline => "Borderline",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub case: Case,
    /// `sup_i (u_i + u_{i+1})`, including the zero fringe.
    pub v_sup: Rational,
}

/// `sup_i (u_i + u_{i+1})` over the whole line.
pub fn v_sup(u: &Potential) -> Rational {
    let mut best = Rational::zero();
    if let Some((lo, hi)) = u.support() {
        for i in lo - 1..=hi {
            let s = u.pair_sum(i);
            if s > best {
                best = s;
            }
        }
    }
    best
}

pub fn classify_case(u: &Potential) -> Classification {
    let v = v_sup(u);
    let case = match v.cmp(&one()) {
        core::cmp::Ordering::Less => Case::C1,
        core::cmp::Ordering::Equal => Case::Borderline,
        core::cmp::Ordering::Greater => Case::C2,
    };
    Classification { case, v_sup: v }
}

/// `k = min(max_i (u_{i−1} + u_i), 1)`, the only value admitting bound states.
pub fn compute_k(u: &Potential) -> Rational {
    v_sup(u).min(one())
}

/// `γ_i = min(u_i, 1 − u_{i−1})`.
pub fn gamma(u: &Potential, i: i64) -> Rational {
    u.get(i).min(one() - u.get(i - 1))
}

/// `δ_i = min(u_{i−1}, 1 − u_i)`.
pub fn delta(u: &Potential, i: i64) -> Rational {
    u.get(i - 1).min(one() - u.get(i))
}

/// A rational sequence on an integer window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexedSeq {
    pub lo: i64,
    pub values: Vec<Rational>,
}

impl IndexedSeq {
    pub fn hi(&self) -> i64 {
        self.lo + self.values.len() as i64 - 1
    }

    pub fn get(&self, i: i64) -> Option<&Rational> {
        usize::try_from(i - self.lo).ok().and_then(|o| self.values.get(o))
    }
}

/// `γ` on the canonical window.
pub fn build_gamma(u: &Potential) -> IndexedSeq {
    let (lo, hi) = u.window();
    IndexedSeq { lo, values: (lo..=hi).map(|i| gamma(u, i)).collect() }
}

/// `δ` on the canonical window.
pub fn build_delta(u: &Potential) -> IndexedSeq {
    let (lo, hi) = u.window();
    IndexedSeq { lo, values: (lo..=hi).map(|i| delta(u, i)).collect() }
}

/// Selects `A(γ)` (time `t`) or `A(δ)` (time `t+1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LaxMatrix {
    Gamma,
    Delta,
}

impl LaxMatrix {
    pub fn as_str(self) -> &'static str {
        match self {
            LaxMatrix::Gamma => "gamma",
            LaxMatrix::Delta => "delta",
        }
    }
}

/// Which closed-form coefficient table to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    /// All adjacent sums at most 1.
    C1,
    /// Piecewise formulas split on `u_i + u_{i±1}` versus 1.
    C2,
}

impl From<Case> for Branch {
    fn from(case: Case) -> Self {
        match case {
            Case::C1 => Branch::C1,
            Case::C2 | Case::Borderline => Branch::C2,
        }
    }
}

/// Subdiagonal coefficient `A_{i+1,i}`.
pub fn sub_coeff(u: &Potential, which: LaxMatrix, branch: Branch, i: i64) -> Rational {
    let massive = u.pair_sum(i) >= one();
    match (which, branch) {
        (LaxMatrix::Gamma, Branch::C1) => u.get(i + 1),
        (LaxMatrix::Gamma, Branch::C2) if massive => one() - u.get(i),
        (LaxMatrix::Gamma, Branch::C2) => u.get(i + 1),
        (LaxMatrix::Delta, Branch::C1) => u.get(i),
        (LaxMatrix::Delta, Branch::C2) if massive => one() - u.get(i + 1),
        (LaxMatrix::Delta, Branch::C2) => u.get(i),
    }
}

/// Superdiagonal coefficient `A_{i,i+1}`.
pub fn super_coeff(u: &Potential, which: LaxMatrix, branch: Branch, i: i64, k: &Rational) -> Rational {
    let massive = u.pair_sum(i - 1) >= one();
    let base = match (which, branch) {
        (LaxMatrix::Gamma, Branch::C1) => u.get(i),
        (LaxMatrix::Gamma, Branch::C2) if massive => one() - u.get(i - 1),
        (LaxMatrix::Gamma, Branch::C2) => u.get(i),
        (LaxMatrix::Delta, Branch::C1) => u.get(i - 1),
        (LaxMatrix::Delta, Branch::C2) if massive => one() - u.get(i),
        (LaxMatrix::Delta, Branch::C2) => u.get(i - 1),
    };
    base - k
}

/// Tridiagonal Lax matrix on `[lo, hi]` using an explicit coefficient branch.
pub fn build_matrix_with(
    u: &Potential,
    which: LaxMatrix,
    branch: Branch,
    k: &Rational,
    lo: i64,
    hi: i64,
) -> Result<MaxPlusMatrix> {
    MaxPlusMatrix::from_fn(lo, hi, |i, j| {
        if i == j + 1 {
            MaxPlus::Finite(sub_coeff(u, which, branch, j))
        } else if j == i + 1 {
            MaxPlus::Finite(super_coeff(u, which, branch, i, k))
        } else {
            MaxPlus::Bottom
        }
    })
}

/// Lax matrix on `[lo, hi]`, branch chosen from the potential's case.
pub fn build_matrix_on(u: &Potential, which: LaxMatrix, k: &Rational, lo: i64, hi: i64) -> Result<MaxPlusMatrix> {
    let branch = Branch::from(classify_case(u).case);
    build_matrix_with(u, which, branch, k, lo, hi)
}

/// Lax matrix on the canonical window.
pub fn build_matrix(u: &Potential, which: LaxMatrix, k: &Rational) -> MaxPlusMatrix {
    let (lo, hi) = u.window();
    build_matrix_on(u, which, k, lo, hi).expect("canonical window is nonempty")
}

pub fn build_gamma_matrix(u: &Potential, k: &Rational) -> MaxPlusMatrix {
    build_matrix(u, LaxMatrix::Gamma, k)
}

pub fn build_delta_matrix(u: &Potential, k: &Rational) -> MaxPlusMatrix {
    build_matrix(u, LaxMatrix::Delta, k)
}

/// A maximal index run `l, …, l+s` of large adjacent sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Soliton {
    pub l: i64,
    pub s: i64,
    pub case: Case,
}

impl Soliton {
    /// Right end `l + s`.
    pub fn head(&self) -> i64 {
        self.l + self.s
    }

    pub fn indices(&self) -> core::ops::RangeInclusive<i64> {
        self.l..=self.head()
    }
}

/// Solitons ordered left to right.
///
/// Below `v_sup = 1` a soliton is a maximal run of adjacent sums equal to
/// `v_sup`; at or above it, a maximal run of sums `≥ 1`. A vanishing
/// `v_sup` yields no solitons.
pub fn detect_solitons(u: &Potential) -> Vec<Soliton> {
    let Classification { case, v_sup } = classify_case(u);
    let Some((lo, hi)) = u.support() else { return Vec::new() };
    if v_sup.is_zero() {
        return Vec::new();
    }
    let in_run = |i: i64| match case {
        Case::C1 => u.pair_sum(i) == v_sup,
        Case::C2 | Case::Borderline => u.pair_sum(i) >= one(),
    };
    let mut out = Vec::new();
    let mut start: Option<i64> = None;
    for i in lo - 1..=hi + 1 {
        match (in_run(i), start) {
            (true, None) => start = Some(i),
            (false, Some(a)) => {
                out.push(Soliton { l: a, s: i - a, case });
                start = None;
            }
            _ => {}
        }
    }
    out
}

/// An eigenvector on the whole line: stored window plus tail rule.
///
/// Right of the window the sequence is constant; left of it, it drops by
/// `k` per site.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenSeq {
    lo: i64,
    values: Vec<Rational>,
    k: Rational,
}

impl EigenSeq {
    pub fn new(lo: i64, values: Vec<Rational>, k: Rational) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyWindow { lo, hi: lo - 1 });
        }
        Ok(EigenSeq { lo, values, k })
    }

    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.lo + self.values.len() as i64 - 1)
    }

    pub fn k(&self) -> &Rational {
        &self.k
    }

    pub fn stored(&self) -> &[Rational] {
        &self.values
    }

    /// `Φ_i` with tails materialised.
    pub fn value(&self, i: i64) -> Rational {
        let (lo, hi) = self.window();
        if i > hi {
            self.values[self.values.len() - 1].clone()
        } else if i < lo {
            &self.values[0] - &self.k * Rational::from_integer((lo - i).into())
        } else {
            self.values[(i - lo) as usize].clone()
        }
    }

    /// Values on `[lo, hi]`.
    pub fn restrict(&self, lo: i64, hi: i64) -> Vec<Rational> {
        (lo..=hi).map(|i| self.value(i)).collect()
    }

    pub fn restrict_maxplus(&self, lo: i64, hi: i64) -> Vec<MaxPlus> {
        (lo..=hi).map(|i| MaxPlus::Finite(self.value(i))).collect()
    }

    /// Adds `c` to every coordinate.
    pub fn shifted(&self, c: &Rational) -> EigenSeq {
        EigenSeq { lo: self.lo, values: self.values.iter().map(|v| v + c).collect(), k: self.k.clone() }
    }

    /// Gauge with the right tail equal to 0.
    pub fn normalized(&self) -> EigenSeq {
        let last = self.values[self.values.len() - 1].clone();
        self.shifted(&-last)
    }

    /// Coordinatewise maximum; both sequences must share `k`.
    pub fn pointwise_max(&self, other: &EigenSeq) -> Option<EigenSeq> {
        if self.k != other.k {
            return None;
        }
        let lo = self.lo.min(other.lo);
        let hi = self.window().1.max(other.window().1);
        let values = (lo..=hi).map(|i| self.value(i).max(other.value(i))).collect();
        Some(EigenSeq { lo, values, k: self.k.clone() })
    }
}

/// Extends an eigenvector of a window matrix to the whole line.
///
/// `v` lives on `[lo, lo + v.len() − 1]`, which must contain `[−N−1, N+1]`,
/// and must satisfy `A_window ⊗ v = v` with finite coordinates.
pub fn extend_eigenseq(v: &[MaxPlus], lo: i64, u: &Potential, which: LaxMatrix, k: &Rational) -> Result<EigenSeq> {
    let (wlo, whi) = u.window();
    let hi = lo + v.len() as i64 - 1;
    if lo > wlo || hi < whi {
        return Err(Error::WindowTooSmall { lo: wlo, hi: whi });
    }
    let a = build_matrix_on(u, which, k, lo, hi)?;
    if !is_eigenvector(&a, v, &MaxPlus::unit()) {
        return Err(Error::NotEigenvector);
    }
    let values = v
        .iter()
        .enumerate()
        .map(|(o, x)| x.as_finite().cloned().ok_or(Error::InfiniteComponent { index: lo + o as i64 }))
        .collect::<Result<Vec<_>>>()?;
    EigenSeq::new(lo, values, k.clone())
}

/// Column `column` of `(A_window)*`, normalised and extended.
pub fn fundamental_eigenvector(u: &Potential, which: LaxMatrix, column: i64, k: &Rational) -> Result<EigenSeq> {
    let (lo, _) = u.window();
    let a = build_matrix(u, which, k);
    let col = kleene_star_column(&a, column)?;
    let last = col.last().and_then(MaxPlus::as_finite).cloned().unwrap_or_else(Rational::zero);
    let col: Vec<MaxPlus> = col.iter().map(|x| x.shift(&-last.clone())).collect();
    extend_eigenseq(&col, lo, u, which, k)
}

/// Fundamental eigenvectors of `A(γ)` and `A(δ)` attached to one soliton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalPair {
    pub soliton: Soliton,
    pub k: Rational,
    pub phi1: EigenSeq,
    pub phi2: EigenSeq,
}

/// Columns `l` of `A(γ)*` and `l+s` of `A(δ)*`.
///
/// The tail cycle `(l, l+1)` is critical in `A(γ)` and the head cycle
/// `(l+s, l+s+1)` is critical in `A(δ)`, so both columns are eigenvectors.
pub fn fundamental_pair(u: &Potential, sol: &Soliton) -> Result<FundamentalPair> {
    let k = compute_k(u);
    let phi1 = fundamental_eigenvector(u, LaxMatrix::Gamma, sol.l, &k)?;
    let phi2 = fundamental_eigenvector(u, LaxMatrix::Delta, sol.head(), &k)?;
    Ok(FundamentalPair { soliton: *sol, k, phi1, phi2 })
}

/// One neighbour difference that disagrees with its closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborViolation {
    /// 1 for `Φ¹`, 2 for `Φ²`.
    pub sequence: u8,
    pub index: i64,
    pub expected: Rational,
    pub found: Rational,
}

/// Checks the closed-form neighbour relations of a fundamental pair on
/// `[lo, hi]`.
///
/// Left of the critical cycle the forward difference `Φ_i − Φ_{i+1}` equals
/// the superdiagonal coefficient, right of it the backward difference
/// `Φ_{i+1} − Φ_i` equals the subdiagonal one. Both sides of each relation
/// are written out directly from `u`, not read from a matrix. For `Φ²` the
/// switch happens at the head cycle `(l+s, l+s+1)`.
pub fn neighbor_relation_violations(u: &Potential, pair: &FundamentalPair, lo: i64, hi: i64) -> Vec<NeighborViolation> {
    let sol = pair.soliton;
    let (l, head) = (sol.l, sol.head());
    let k = &pair.k;
    let below = |i: i64, j: i64| u.get(i) + u.get(j) < one();
    let mut out = Vec::new();
    let mut check = |sequence: u8, index: i64, expected: Rational, found: Rational| {
        if expected != found {
            out.push(NeighborViolation { sequence, index, expected, found });
        }
    };
    for i in lo..=hi {
        let (p1, p1n) = (pair.phi1.value(i), pair.phi1.value(i + 1));
        let (p2, p2n) = (pair.phi2.value(i), pair.phi2.value(i + 1));
        match sol.case {
            Case::C1 => {
                if i <= l {
                    check(1, i, u.get(i) - k, &p1 - &p1n);
                }
                if i >= l {
                    check(1, i, u.get(i + 1), &p1n - &p1);
                }
                if i <= head {
                    check(2, i, u.get(i - 1) - k, &p2 - &p2n);
                }
                if i >= head {
                    check(2, i, u.get(i), &p2n - &p2);
                }
            }
            Case::C2 | Case::Borderline => {
                if i <= l {
                    let e = if below(i, i - 1) { u.get(i) - one() } else { -u.get(i - 1) };
                    check(1, i, e, &p1 - &p1n);
                }
                if i >= l {
                    let e = if below(i, i + 1) { u.get(i + 1) } else { one() - u.get(i) };
                    check(1, i, e, &p1n - &p1);
                }
                if i <= head {
                    let e = if below(i, i - 1) { u.get(i - 1) - one() } else { -u.get(i) };
                    check(2, i, e, &p2 - &p2n);
                }
                if i >= head {
                    let e = if below(i, i + 1) { u.get(i) } else { one() - u.get(i + 1) };
                    check(2, i, e, &p2n - &p2);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use crate::spectral::{critical_graph, max_cycle_mean};
    use alloc::vec;

    fn pis() -> [Rational; 4] {
        [rat(3, 5), rat(7, 10), rat(4, 5), rat(9, 10)]
    }

    fn one_soliton() -> Potential {
        let [a, b, c, d] = pis();
        Potential::new(0, vec![rat(0, 1), a, b, c, d, rat(0, 1), rat(0, 1)])
    }

    fn two_solitons() -> Potential {
        let [a, b, c, d] = pis();
        let z = || rat(0, 1);
        Potential::new(0, vec![z(), a, b, z(), z(), c, d, z(), z()])
    }

    fn c1_bump() -> Potential {
        Potential::new(0, vec![rat(0, 1), rat(1, 4), rat(1, 2), rat(1, 4), rat(0, 1)])
    }

    #[test]
    fn potential_is_trimmed() {
        let u = one_soliton();
        assert_eq!(u.support(), Some((1, 4)));
        assert_eq!(u.bound(), 5);
        assert_eq!(u.window(), (-6, 6));
        assert_eq!(Potential::new(3, vec![rat(0, 1); 4]), Potential::zero());
        assert_eq!(Potential::zero().window(), (-1, 1));
        assert_eq!(Potential::new(-2, vec![rat(1, 2)]).bound(), 3);
    }

    #[test]
    fn warnings_flag_out_of_range_values() {
        let u = Potential::new(0, vec![rat(-1, 2), rat(1, 2), rat(1, 1)]);
        let w = u.warnings();
        assert_eq!(w.iter().map(|w| w.index).collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_case(&Potential::zero()), Classification { case: Case::C1, v_sup: rat(0, 1) });
        assert_eq!(classify_case(&one_soliton()), Classification { case: Case::C2, v_sup: rat(17, 10) });
        assert_eq!(classify_case(&c1_bump()), Classification { case: Case::C1, v_sup: rat(3, 4) });
        let edge = Potential::new(0, vec![rat(1, 2), rat(1, 2)]);
        assert_eq!(classify_case(&edge).case, Case::Borderline);
    }

    #[test]
    fn k_examples() {
        assert_eq!(compute_k(&Potential::zero()), rat(0, 1));
        assert_eq!(compute_k(&one_soliton()), rat(1, 1));
        assert_eq!(compute_k(&two_solitons()), rat(1, 1));
        assert_eq!(compute_k(&c1_bump()), rat(3, 4));
    }

    #[test]
    fn gamma_delta_one_soliton_table() {
        let [p1, p2, p3, p4] = pis();
        let u = one_soliton();
        let z = rat(0, 1);
        let o = rat(1, 1);
        let g = [z.clone(), p1.clone(), &o - &p1, &o - &p2, &o - &p3, z.clone(), z.clone()];
        let d = [z.clone(), z.clone(), &o - &p2, &o - &p3, &o - &p4, p4.clone(), z.clone()];
        let gs = build_gamma(&u);
        let ds = build_delta(&u);
        for i in 0..7 {
            assert_eq!(gs.get(i).unwrap(), &g[i as usize], "gamma_{i}");
            assert_eq!(ds.get(i).unwrap(), &d[i as usize], "delta_{i}");
        }
    }

    #[test]
    fn gamma_delta_zero_potential() {
        assert!(build_gamma(&Potential::zero()).values.iter().all(Zero::is_zero));
        assert!(build_delta(&Potential::zero()).values.iter().all(Zero::is_zero));
    }

    #[test]
    fn one_soliton_matrix_weights() {
        let u = one_soliton();
        let k = compute_k(&u);
        let g = build_gamma_matrix(&u, &k);
        let [p1, _, _, p4] = pis();
        assert_eq!(g.get(2, 3).unwrap(), &MaxPlus::Finite(-p1));
        let d = build_delta_matrix(&u, &k);
        assert_eq!(d.get(5, 4).unwrap(), &MaxPlus::Finite(p4.clone()));
        assert_eq!(d.get(4, 5).unwrap(), &MaxPlus::Finite(-p4));
    }

    #[test]
    fn zero_potential_tails() {
        let u = Potential::zero();
        let k = rat(0, 1);
        for which in [LaxMatrix::Gamma, LaxMatrix::Delta] {
            let a = build_matrix(&u, which, &k);
            for i in -1..1 {
                assert_eq!(a.get(i + 1, i).unwrap(), &MaxPlus::unit());
                assert_eq!(a.get(i, i + 1).unwrap(), &MaxPlus::unit());
            }
        }
    }

    #[test]
    fn solitons_detected() {
        assert!(detect_solitons(&Potential::zero()).is_empty());
        let two: Vec<_> = detect_solitons(&two_solitons()).iter().map(|s| (s.l, s.s)).collect();
        assert_eq!(two, vec![(1, 1), (5, 1)]);
        let bump = detect_solitons(&c1_bump());
        assert_eq!(bump, vec![Soliton { l: 1, s: 2, case: Case::C1 }]);
        let one = detect_solitons(&one_soliton());
        assert_eq!(one, vec![Soliton { l: 1, s: 3, case: Case::C2 }]);
    }

    #[test]
    fn head_cycle_is_critical_in_delta() {
        let u = one_soliton();
        let k = compute_k(&u);
        let crit_d = critical_graph(&build_delta_matrix(&u, &k)).unwrap();
        assert_eq!(crit_d.components, vec![[4, 5].into_iter().collect()]);
        let crit_g = critical_graph(&build_gamma_matrix(&u, &k)).unwrap();
        assert_eq!(crit_g.components, vec![[1, 2].into_iter().collect()]);
        assert_eq!(crit_g.lambda, MaxPlus::unit());
    }

    #[test]
    fn c1_pair_relations_and_eigen() {
        let u = c1_bump();
        let sol = detect_solitons(&u)[0];
        let pair = fundamental_pair(&u, &sol).unwrap();
        let (lo, hi) = u.window();
        assert!(neighbor_relation_violations(&u, &pair, lo - 5, hi + 5).is_empty());
        let k = &pair.k;
        let a = build_gamma_matrix(&u, k);
        assert!(is_eigenvector(&a, &pair.phi1.restrict_maxplus(lo, hi), &MaxPlus::unit()));
        assert_eq!(pair.phi1.value(hi + 10), rat(0, 1));
        assert_eq!(max_cycle_mean(&a), MaxPlus::unit());
    }

    #[test]
    fn c2_pair_relations() {
        for u in [one_soliton(), two_solitons()] {
            let (lo, hi) = u.window();
            for sol in detect_solitons(&u) {
                let pair = fundamental_pair(&u, &sol).unwrap();
                assert!(neighbor_relation_violations(&u, &pair, lo - 5, hi + 5).is_empty());
            }
        }
    }

    #[test]
    fn extension_rules() {
        let u = c1_bump();
        let k = compute_k(&u);
        let (lo, hi) = u.window();
        let phi = fundamental_eigenvector(&u, LaxMatrix::Gamma, 1, &k).unwrap();
        let stored = phi.stored().to_vec();
        assert_eq!(phi.restrict(lo, hi), stored);
        assert_eq!(phi.value(hi + 4), phi.value(hi));
        assert_eq!(phi.value(lo - 3), phi.value(lo) - &k * rat(3, 1));

        let zero_k = rat(0, 1);
        let z = Potential::zero();
        let flat = extend_eigenseq(&vec![MaxPlus::unit(); 3], -1, &z, LaxMatrix::Gamma, &zero_k).unwrap();
        assert_eq!(flat.value(-7), rat(0, 1));
        assert_eq!(flat.value(9), rat(0, 1));
    }

    #[test]
    fn extension_rejects_non_eigenvectors() {
        let u = c1_bump();
        let k = compute_k(&u);
        let (lo, hi) = u.window();
        let n = (hi - lo + 1) as usize;
        let v = vec![MaxPlus::unit(); n];
        assert_eq!(extend_eigenseq(&v, lo, &u, LaxMatrix::Gamma, &k), Err(Error::NotEigenvector));
        assert!(matches!(
            extend_eigenseq(&v[1..], lo + 1, &u, LaxMatrix::Gamma, &k),
            Err(Error::WindowTooSmall { .. })
        ));
    }

    #[test]
    fn borderline_branches_agree() {
        let u = Potential::new(0, vec![rat(1, 2), rat(1, 2), rat(3, 10), rat(7, 10)]);
        assert_eq!(classify_case(&u).case, Case::Borderline);
        let k = compute_k(&u);
        let (lo, hi) = u.window();
        for which in [LaxMatrix::Gamma, LaxMatrix::Delta] {
            let a = build_matrix_with(&u, which, Branch::C1, &k, lo, hi).unwrap();
            let b = build_matrix_with(&u, which, Branch::C2, &k, lo, hi).unwrap();
            assert_eq!(a, b);
        }
    }
}
