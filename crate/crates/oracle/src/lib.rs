//! Exponential-time reference computations for max-plus matrices.
//!
//! Nothing here calls into the algorithms of `tropical-lax`; only its data
//! types are shared. Paths and cycles are enumerated explicitly.

use std::fmt;

use tropical_lax::{MaxPlus, MaxPlusMatrix, Rational};

/// Largest dimension the enumerations accept.
pub const MAX_DIM: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    TooLarge { n: usize },
    PositiveCycle,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooLarge { n } => write!(f, "dimension {n} exceeds oracle limit {MAX_DIM}"),
            OracleError::PositiveCycle => f.write_str("matrix has a cycle of positive weight"),
        }
    }
}

impl std::error::Error for OracleError {}

fn weights(a: &MaxPlusMatrix) -> Vec<Vec<Option<Rational>>> {
    let n = a.dim();
    (0..n).map(|r| (0..n).map(|c| a.at(r, c).as_finite().cloned()).collect()).collect()
}

fn check_dim(n: usize) -> Result<(), OracleError> {
    if n > MAX_DIM {
        Err(OracleError::TooLarge { n })
    } else {
        Ok(())
    }
}

/// Maximum mean weight over all simple cycles, or bottom if there are none.
///
/// Each cycle is enumerated once, rooted at its largest node.
pub fn brute_mcm(a: &MaxPlusMatrix) -> Result<MaxPlus, OracleError> {
    let n = a.dim();
    check_dim(n)?;
    let w = weights(a);
    let mut best: Option<Rational> = None;
    for root in (0..n).rev() {
        let mut on_path = vec![false; n];
        on_path[root] = true;
        cycles_from(&w, root, root, Rational::from_integer(0.into()), 0, &mut on_path, &mut best);
    }
    Ok(best.map_or(MaxPlus::Bottom, MaxPlus::Finite))
}

fn cycles_from(
    w: &[Vec<Option<Rational>>],
    root: usize,
    at: usize,
    sum: Rational,
    len: i64,
    on_path: &mut [bool],
    best: &mut Option<Rational>,
) {
    for next in (0..=root).rev() {
        let Some(edge) = &w[at][next] else { continue };
        let total = &sum + edge;
        if next == root {
            let mean = total / Rational::from_integer((len + 1).into());
            if best.as_ref().is_none_or(|b| mean > *b) {
                *best = Some(mean);
            }
        } else if !on_path[next] {
            on_path[next] = true;
            cycles_from(w, root, next, total, len + 1, on_path, best);
            on_path[next] = false;
        }
    }
}

/// `A*` with entry `(i, j)` the heaviest path from `i` to `j`, found by
/// depth-first enumeration of every simple path. Without positive cycles no
/// walk beats the best simple path, and simple paths have at most `n − 1`
/// edges.
pub fn brute_star(a: &MaxPlusMatrix) -> Result<MaxPlusMatrix, OracleError> {
    let n = a.dim();
    check_dim(n)?;
    if let MaxPlus::Finite(m) = brute_mcm(a)? {
        if m > Rational::from_integer(0.into()) {
            return Err(OracleError::PositiveCycle);
        }
    }
    let w = weights(a);
    let mut rows = Vec::with_capacity(n);
    for src in 0..n {
        let mut best: Vec<Option<Rational>> = vec![None; n];
        best[src] = Some(Rational::from_integer(0.into()));
        let mut on_path = vec![false; n];
        on_path[src] = true;
        paths_from(&w, src, Rational::from_integer(0.into()), &mut on_path, &mut best);
        rows.push(best.into_iter().map(|b| b.map_or(MaxPlus::Bottom, MaxPlus::Finite)).collect());
    }
    Ok(MaxPlusMatrix::from_rows(a.offset(), rows).expect("square by construction"))
}

fn paths_from(
    w: &[Vec<Option<Rational>>],
    at: usize,
    sum: Rational,
    on_path: &mut [bool],
    best: &mut [Option<Rational>],
) {
    for (next, edge) in w[at].iter().enumerate() {
        let Some(edge) = edge else { continue };
        if on_path[next] {
            continue;
        }
        let total = &sum + edge;
        if best[next].as_ref().is_none_or(|b| total > *b) {
            best[next] = Some(total.clone());
        }
        on_path[next] = true;
        paths_from(w, next, total, on_path, best);
        on_path[next] = false;
    }
}

/// Whether `A ⊗ v = v` coordinatewise. Length mismatches are `false`.
pub fn brute_eigencheck(a: &MaxPlusMatrix, v: &[MaxPlus]) -> bool {
    let n = a.dim();
    if v.len() != n {
        return false;
    }
    for (r, target) in v.iter().enumerate() {
        let mut acc: Option<Rational> = None;
        for (c, x) in v.iter().enumerate() {
            if let (MaxPlus::Finite(e), MaxPlus::Finite(x)) = (a.at(r, c), x) {
                let s = e + x;
                if acc.as_ref().is_none_or(|b| s > *b) {
                    acc = Some(s);
                }
            }
        }
        let got = acc.map_or(MaxPlus::Bottom, MaxPlus::Finite);
        if got != *target {
            return false;
        }
    }
    true
}
