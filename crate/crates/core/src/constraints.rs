//! The coupling equations of the full Lax system.
//!
//! Besides the two eigenproblems, a solution pair `(Φ¹, Φ²)` has to satisfy
//!
//! ```text
//! Φ¹_l     = max(Φ²_{l+1}, Φ¹_{l+1} + u_l − 1)           (backward)
//! Φ²_{l+1} = max(Φ¹_l − μ, Φ²_l + u_l + k − 1)           (forward)
//! ```
//!
//! with `μ = ω − k ≥ 0`.
//!
//! All checks run on `[−N−2, N+2]`. Left of that window `u` vanishes and both
//! sequences drop by `k` per site, so every term in either equation moves by
//! the same amount and the truth value at `−N−2` repeats. Right of it
//! everything is constant. Checking the window therefore checks the line.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lax::{build_matrix_on, detect_solitons, Case, EigenSeq, FundamentalPair, LaxMatrix, Potential, Soliton};
use crate::scalar::{one, MaxPlus, Rational};
use crate::spectral::saturation_graph;

/// `[−N−2, N+2]`.
pub fn verification_window(u: &Potential) -> (i64, i64) {
    let n = u.bound();
    (-n - 2, n + 2)
}

/// One side-by-side evaluation of an equation at an index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexCheck {
    pub index: i64,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl IndexCheck {
    pub fn ok(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `Φ¹_l = max(Φ²_{l+1}, Φ¹_{l+1} + u_l − 1)` for every `l` in `[lo, hi]`.
pub fn check_backward(phi1: &EigenSeq, phi2: &EigenSeq, u: &Potential, lo: i64, hi: i64) -> Vec<IndexCheck> {
    (lo..=hi)
        .map(|l| IndexCheck {
            index: l,
            lhs: phi1.value(l),
            rhs: phi2.value(l + 1).max(phi1.value(l + 1) + u.get(l) - one()),
        })
        .collect()
}

/// `Φ²_{l+1} = max(Φ¹_l − μ, Φ²_l + u_l + k − 1)` for every `l` in `[lo, hi]`.
pub fn check_forward(
    phi1: &EigenSeq,
    phi2: &EigenSeq,
    u: &Potential,
    mu: &Rational,
    k: &Rational,
    lo: i64,
    hi: i64,
) -> Result<Vec<IndexCheck>> {
    if mu.is_negative() {
        return Err(Error::NegativeMu);
    }
    Ok((lo..=hi)
        .map(|l| IndexCheck {
            index: l,
            lhs: phi2.value(l + 1),
            rhs: (phi1.value(l) - mu).max(phi2.value(l) + u.get(l) + k - one()),
        })
        .collect())
}

/// `μ` for a single soliton: 0 without massive solitons, otherwise
/// `Σ_{i=l}^{l+s−1} (u_i + u_{i+1} − 1)`.
pub fn compute_mu(u: &Potential, sol: &Soliton) -> Rational {
    match sol.case {
        Case::C1 => Rational::zero(),
        Case::C2 | Case::Borderline => (sol.l..sol.head()).fold(Rational::zero(), |acc, i| acc + u.pair_sum(i) - one()),
    }
}

/// Edges that no solution of the full system may saturate.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ForbiddenEdges {
    /// Forward edges `(i, i+1)` of `A(γ)` with `u_{i−1} + u_i > 1`.
    pub gamma: BTreeSet<(i64, i64)>,
    /// Backward edges `(i+1, i)` of `A(δ)` with `u_i + u_{i+1} > 1`.
    pub delta: BTreeSet<(i64, i64)>,
}

pub fn forbidden_edges(u: &Potential) -> ForbiddenEdges {
    let mut out = ForbiddenEdges::default();
    let Some((lo, hi)) = u.support() else { return out };
    for i in lo - 1..=hi + 1 {
        if u.pair_sum(i - 1) > one() {
            out.gamma.insert((i, i + 1));
        }
        if u.pair_sum(i) > one() {
            out.delta.insert((i + 1, i));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Equation {
    /// `A(γ) ⊗ Φ¹ = Φ¹`.
    GammaEigen,
    /// `A(δ) ⊗ Φ² = Φ²`.
    DeltaEigen,
    Backward,
    Forward,
}

impl Equation {
    pub fn as_str(self) -> &'static str {
        match self {
            Equation::GammaEigen => "gamma_eigen",
            Equation::DeltaEigen => "delta_eigen",
            Equation::Backward => "backward",
            Equation::Forward => "forward",
        }
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub equation: Equation,
    pub index: i64,
    pub lhs: MaxPlus,
    pub rhs: MaxPlus,
}

/// Outcome of checking all four equations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintReport {
    pub gamma_eigen_ok: bool,
    pub delta_eigen_ok: bool,
    pub backward_ok: bool,
    pub forward_ok: bool,
    pub mu: Rational,
    /// `μ + k`.
    pub omega: Rational,
    pub window: (i64, i64),
    /// Leftmost failing index; ties go to the earlier equation.
    pub first_violation: Option<Violation>,
}

impl ConstraintReport {
    pub fn all_ok(&self) -> bool {
        self.gamma_eigen_ok && self.delta_eigen_ok && self.backward_ok && self.forward_ok
    }
}

fn eigen_violations(
    u: &Potential,
    which: LaxMatrix,
    phi: &EigenSeq,
    k: &Rational,
    (lo, hi): (i64, i64),
    equation: Equation,
) -> Result<Vec<Violation>> {
    let a = build_matrix_on(u, which, k, lo, hi)?;
    let v = phi.restrict_maxplus(lo, hi);
    let av = a.mul_vec(&v)?;
    Ok(av
        .into_iter()
        .zip(v)
        .enumerate()
        .filter(|(_, (x, y))| x != y)
        .map(|(o, (lhs, rhs))| Violation { equation, index: lo + o as i64, lhs, rhs })
        .collect())
}

fn failures(checks: Vec<IndexCheck>, equation: Equation) -> Vec<Violation> {
    checks
        .into_iter()
        .filter(|c| !c.ok())
        .map(|c| Violation { equation, index: c.index, lhs: c.lhs.into(), rhs: c.rhs.into() })
        .collect()
}

/// Checks both eigenproblems and both coupling equations, with
/// `Φ^{(t)} = Φ¹`, `Φ^{(t+1)} = Φ²` and `ω = μ + k`.
pub fn full_system_check(
    u: &Potential,
    phi1: &EigenSeq,
    phi2: &EigenSeq,
    k: &Rational,
    mu: &Rational,
) -> Result<ConstraintReport> {
    let window = verification_window(u);
    let (lo, hi) = window;
    let gamma = eigen_violations(u, LaxMatrix::Gamma, phi1, k, window, Equation::GammaEigen)?;
    let delta = eigen_violations(u, LaxMatrix::Delta, phi2, k, window, Equation::DeltaEigen)?;
    let backward = failures(check_backward(phi1, phi2, u, lo, hi), Equation::Backward);
    let forward = failures(check_forward(phi1, phi2, u, mu, k, lo, hi)?, Equation::Forward);

    let first_violation = [&gamma, &delta, &backward, &forward]
        .into_iter()
        .filter_map(|v| v.first())
        .min_by_key(|v| (v.index, v.equation))
        .cloned();

    Ok(ConstraintReport {
        gamma_eigen_ok: gamma.is_empty(),
        delta_eigen_ok: delta.is_empty(),
        backward_ok: backward.is_empty(),
        forward_ok: forward.is_empty(),
        mu: mu.clone(),
        omega: mu + k,
        window,
        first_violation,
    })
}

/// Every `μ` that could make the forward equation hold.
///
/// If the forward equation holds for `μ`, then either its first branch is
/// tight somewhere, so `μ = Φ¹_l − Φ²_{l+1}` for some `l`, or it is never
/// tight and the least admissible choice is `max(0, max_l (Φ¹_l − Φ²_{l+1}))`.
/// Both kinds of value are in the returned list, sorted and deduplicated.
pub fn candidate_mus(phi1: &EigenSeq, phi2: &EigenSeq, u: &Potential) -> Vec<Rational> {
    let (lo, hi) = verification_window(u);
    let mut out: Vec<Rational> =
        (lo..=hi).map(|l| phi1.value(l) - phi2.value(l + 1)).filter(|m| !m.is_negative()).collect();
    out.push(Rational::zero());
    out.sort();
    out.dedup();
    out
}

/// The `μ ≥ 0` for which the forward equation holds, found exactly.
///
/// Candidates are the gaps `Φ¹_l − Φ²_{l+1}` at indices where the second
/// branch of the forward equation is slack; each is tested on the whole
/// window. Returns `None` when no single value works.
pub fn infer_mu(phi1: &EigenSeq, phi2: &EigenSeq, u: &Potential, k: &Rational) -> Option<Rational> {
    let (lo, hi) = verification_window(u);
    let mut candidates: Vec<Rational> = (lo..=hi)
        .filter(|&l| phi2.value(l + 1) > phi2.value(l) + u.get(l) + k - one())
        .map(|l| phi1.value(l) - phi2.value(l + 1))
        .filter(|m| !m.is_negative())
        .collect();
    candidates.sort();
    candidates.dedup();
    candidates
        .into_iter()
        .find(|mu| check_forward(phi1, phi2, u, mu, k, lo, hi).is_ok_and(|c| c.iter().all(IndexCheck::ok)))
}

/// Smallest `μ` for which the pair solves the whole system, if any.
///
/// Only the forward equation involves `μ`, so the other three are checked
/// once.
pub fn admissible_mu(u: &Potential, pair: &FundamentalPair) -> Result<Option<Rational>> {
    let (phi1, phi2, k) = (&pair.phi1, &pair.phi2, &pair.k);
    let base = full_system_check(u, phi1, phi2, k, &Rational::zero())?;
    if !(base.gamma_eigen_ok && base.delta_eigen_ok && base.backward_ok) {
        return Ok(None);
    }
    let (lo, hi) = base.window;
    for mu in candidate_mus(phi1, phi2, u) {
        if check_forward(phi1, phi2, u, &mu, k, lo, hi)?.iter().all(IndexCheck::ok) {
            return Ok(Some(mu));
        }
    }
    Ok(None)
}

/// Saturated edges of `Φ¹` in `A(γ)` and of `Φ²` in `A(δ)` that are forbidden.
pub fn saturated_forbidden_edges(
    u: &Potential,
    phi1: &EigenSeq,
    phi2: &EigenSeq,
    k: &Rational,
) -> Result<ForbiddenEdges> {
    let (lo, hi) = verification_window(u);
    let forbidden = forbidden_edges(u);
    let a_g = build_matrix_on(u, LaxMatrix::Gamma, k, lo, hi)?;
    let a_d = build_matrix_on(u, LaxMatrix::Delta, k, lo, hi)?;
    let sat1 = saturation_graph(&a_g, &phi1.restrict_maxplus(lo, hi), &MaxPlus::unit())?;
    let sat2 = saturation_graph(&a_d, &phi2.restrict_maxplus(lo, hi), &MaxPlus::unit())?;
    Ok(ForbiddenEdges {
        gamma: sat1.edges.intersection(&forbidden.gamma).copied().collect(),
        delta: sat2.edges.intersection(&forbidden.delta).copied().collect(),
    })
}

/// Result of trying every fundamental pair of a potential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSearch {
    pub soliton: Soliton,
    /// Smallest `μ` solving the whole system, if any.
    pub mu: Option<Rational>,
    pub candidates_tried: usize,
}

/// Tries each soliton's fundamental pair against every candidate `μ`.
pub fn search_fundamental_pairs(u: &Potential) -> Result<Vec<PairSearch>> {
    detect_solitons(u)
        .into_iter()
        .map(|sol| {
            let pair = crate::lax::fundamental_pair(u, &sol)?;
            let candidates_tried = candidate_mus(&pair.phi1, &pair.phi2, u).len();
            Ok(PairSearch { soliton: sol, mu: admissible_mu(u, &pair)?, candidates_tried })
        })
        .collect()
}
