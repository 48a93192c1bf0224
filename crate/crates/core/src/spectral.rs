//! Max-plus spectral theory for finite matrices.
//!
//! Cycle means use Karp's recurrence; the Kleene star is a semiring
//! Floyd–Warshall closure. Critical edges are recovered from the closure of
//! the normalised matrix `A − λ`: an edge `(i, j)` lies on a critical cycle
//! exactly when `(A − λ)_{ij} + (A − λ)^+_{ji} = 0`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::MaxPlusMatrix;
use crate::scalar::{MaxPlus, Rational};

/// Nodes and edges lying on cycles of maximal mean weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalGraph {
    pub lambda: MaxPlus,
    pub nodes: BTreeSet<i64>,
    pub edges: BTreeSet<(i64, i64)>,
    /// Strongly connected components, each sorted, ordered by smallest node.
    pub components: Vec<BTreeSet<i64>>,
}

impl CriticalGraph {
    /// Component containing `node`, if critical.
    pub fn component_of(&self, node: i64) -> Option<usize> {
        self.components.iter().position(|c| c.contains(&node))
    }
}

/// Edges `(i, j)` with `A_{ij} + Φ_j = λ + Φ_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationGraph {
    pub nodes: BTreeSet<i64>,
    pub edges: BTreeSet<(i64, i64)>,
}

impl SaturationGraph {
    pub fn has_outgoing(&self, node: i64) -> bool {
        self.edges.range((node, i64::MIN)..=(node, i64::MAX)).next().is_some()
    }
}

/// A critical column of `A*` together with its column index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalEigenvector {
    pub index: i64,
    pub vector: Vec<MaxPlus>,
}

/// Maximum cycle mean `λ(A)`; bottom when the digraph is acyclic.
pub fn max_cycle_mean(a: &MaxPlusMatrix) -> MaxPlus {
    let n = a.dim();
    if n == 0 {
        return MaxPlus::Bottom;
    }
    // walks[k][v]: greatest weight of a walk with exactly k edges ending at v,
    // starting anywhere.
    let mut walks: Vec<Vec<MaxPlus>> = Vec::with_capacity(n + 1);
    walks.push(alloc::vec![MaxPlus::unit(); n]);
    for k in 1..=n {
        let prev = &walks[k - 1];
        let mut cur = alloc::vec![MaxPlus::Bottom; n];
        for (u, row) in a.rows().enumerate() {
            if prev[u].is_bottom() {
                continue;
            }
            for (v, w) in row.iter().enumerate() {
                let cand = prev[u].otimes(w);
                if cand > cur[v] {
                    cur[v] = cand;
                }
            }
        }
        walks.push(cur);
    }

    let mut best = MaxPlus::Bottom;
    for v in 0..n {
        let Some(dn) = walks[n][v].as_finite() else { continue };
        let mut worst: Option<Rational> = None;
        for (k, row) in walks.iter().enumerate().take(n) {
            if let Some(dk) = row[v].as_finite() {
                let mean = (dn - dk) / Rational::from_integer(BigInt::from(n - k));
                if worst.as_ref().is_none_or(|w| mean < *w) {
                    worst = Some(mean);
                }
            }
        }
        if let Some(w) = worst {
            best = best.oplus(&MaxPlus::Finite(w));
        }
    }
    best
}

/// `A⁺ = A ⊕ A² ⊕ …`, the greatest weight of nonempty paths.
///
/// Fails with [`Error::PositiveCycle`] when some cycle has positive weight.
pub fn kleene_plus(a: &MaxPlusMatrix) -> Result<MaxPlusMatrix> {
    let n = a.dim();
    let mut s = a.clone();
    for k in 0..n {
        for i in 0..n {
            let sik = s.at(i, k).clone();
            if sik.is_bottom() {
                continue;
            }
            for j in 0..n {
                let cand = sik.otimes(s.at(k, j));
                if cand > *s.at(i, j) {
                    *s.at_mut(i, j) = cand;
                }
            }
        }
    }
    let zero = Rational::zero();
    if (0..n).any(|i| s.at(i, i).cmp_rational(&zero).is_gt()) {
        return Err(Error::PositiveCycle);
    }
    Ok(s)
}

/// Kleene star `A* = I ⊕ A ⊕ … ⊕ A^{n-1}`; requires `λ(A) ≤ 0`.
pub fn kleene_star(a: &MaxPlusMatrix) -> Result<MaxPlusMatrix> {
    let mut s = kleene_plus(a)?;
    for i in 0..a.dim() {
        let d = s.at(i, i).oplus(&MaxPlus::unit());
        *s.at_mut(i, i) = d;
    }
    Ok(s)
}

/// Column `j` of `A*` (greatest path weights into `j`) by Bellman–Ford
/// relaxation. Cheaper than the full closure on sparse matrices. Fails with
/// [`Error::PositiveCycle`] when a positive cycle has a path into `j`.
pub fn kleene_star_column(a: &MaxPlusMatrix, j: i64) -> Result<Vec<MaxPlus>> {
    let n = a.dim();
    let target = a.get(j, j).map(|_| (j - a.offset()) as usize)?;
    let edges: Vec<(usize, usize, &Rational)> =
        (0..n).flat_map(|r| (0..n).filter_map(move |c| a.at(r, c).as_finite().map(|w| (r, c, w)))).collect();
    let mut col = alloc::vec![MaxPlus::Bottom; n];
    col[target] = MaxPlus::unit();
    for round in 0..=n {
        let mut changed = false;
        for &(r, c, w) in &edges {
            if let MaxPlus::Finite(x) = &col[c] {
                let cand = MaxPlus::Finite(w + x);
                if cand > col[r] {
                    col[r] = cand;
                    changed = true;
                }
            }
        }
        if !changed {
            return Ok(col);
        }
        if round == n {
            break;
        }
    }
    Err(Error::PositiveCycle)
}

/// Critical graph of `A`, with its strongly connected components.
pub fn critical_graph(a: &MaxPlusMatrix) -> Result<CriticalGraph> {
    let lambda = max_cycle_mean(a);
    let MaxPlus::Finite(lam) = &lambda else {
        return Err(Error::Acyclic);
    };
    let normalised = a.shift(&-lam.clone());
    let plus = kleene_plus(&normalised)?;
    let n = a.dim();
    let off = a.offset();

    let mut edges = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            let closes = normalised.at(i, j).otimes(plus.at(j, i));
            if closes.is_zero_value() {
                edges.insert((off + i as i64, off + j as i64));
            }
        }
    }
    let nodes: BTreeSet<i64> = edges.iter().map(|&(i, _)| i).collect();

    // The critical graph is a disjoint union of strongly connected pieces,
    // so weak connectivity over critical edges gives the components.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(i, j) in &edges {
        let (ri, rj) = (find(&mut parent, (i - off) as usize), find(&mut parent, (j - off) as usize));
        if ri != rj {
            parent[ri.max(rj)] = ri.min(rj);
        }
    }
    let mut components: Vec<BTreeSet<i64>> = Vec::new();
    let mut root_slot: Vec<Option<usize>> = alloc::vec![None; n];
    for &node in &nodes {
        let r = find(&mut parent, (node - off) as usize);
        let slot = *root_slot[r].get_or_insert_with(|| {
            components.push(BTreeSet::new());
            components.len() - 1
        });
        components[slot].insert(node);
    }
    components.sort_by_key(|c| c.first().copied());

    Ok(CriticalGraph { lambda, nodes, edges, components })
}

/// `A ⊗ v = λ ⊗ v`, exactly. A vector that is entirely bottom is rejected.
pub fn is_eigenvector(a: &MaxPlusMatrix, v: &[MaxPlus], lambda: &MaxPlus) -> bool {
    if v.iter().all(MaxPlus::is_bottom) {
        return false;
    }
    match a.mul_vec(v) {
        Ok(av) => av.iter().zip(v).all(|(x, y)| *x == lambda.otimes(y)),
        Err(_) => false,
    }
}

/// Saturation graph of an eigenvector.
pub fn saturation_graph(a: &MaxPlusMatrix, v: &[MaxPlus], lambda: &MaxPlus) -> Result<SaturationGraph> {
    if !is_eigenvector(a, v, lambda) {
        return Err(Error::NotEigenvector);
    }
    let off = a.offset();
    let mut edges = BTreeSet::new();
    for (i, row) in a.rows().enumerate() {
        let target = lambda.otimes(&v[i]);
        if target.is_bottom() {
            continue;
        }
        for (j, w) in row.iter().enumerate() {
            if w.otimes(&v[j]) == target {
                edges.insert((off + i as i64, off + j as i64));
            }
        }
    }
    Ok(SaturationGraph { nodes: a.indices().collect(), edges })
}

fn require_zero_lambda(a: &MaxPlusMatrix) -> Result<()> {
    let lambda = max_cycle_mean(a);
    if lambda.is_zero_value() {
        Ok(())
    } else {
        Err(Error::NonZeroEigenvalue(lambda))
    }
}

/// One critical column of `A*` per critical component (the smallest index
/// of each component). Requires `λ(A) = 0`.
pub fn eigenspace_basis(a: &MaxPlusMatrix) -> Result<Vec<FundamentalEigenvector>> {
    require_zero_lambda(a)?;
    let star = kleene_star(a)?;
    let crit = critical_graph(a)?;
    crit.components
        .iter()
        .map(|comp| {
            let index = *comp.first().expect("components are nonempty");
            let vector = star.column(index)?;
            debug_assert!(is_eigenvector(a, &vector, &MaxPlus::unit()));
            Ok(FundamentalEigenvector { index, vector })
        })
        .collect()
}

/// Greatest coefficients `α_i` with `⊕_i α_i ⊗ A*_{·i} ≤ v`:
/// `α_i = min_j (v_j − A*_{ji})`, skipping bottom entries of the column.
pub fn residuation_coeffs(a_star: &MaxPlusMatrix, v: &[MaxPlus], basis_indices: &[i64]) -> Result<Vec<MaxPlus>> {
    if v.len() != a_star.dim() {
        return Err(Error::DimensionMismatch { expected: a_star.dim(), found: v.len() });
    }
    basis_indices
        .iter()
        .map(|&i| {
            let col = a_star.column(i)?;
            let alpha = v.iter().zip(&col).filter_map(|(vj, cj)| vj.residual(cj)).min().unwrap_or(MaxPlus::Bottom);
            Ok(alpha)
        })
        .collect()
}

/// `⊕_i α_i ⊗ columns_i`.
pub fn max_linear_combination(coeffs: &[MaxPlus], columns: &[Vec<MaxPlus>]) -> Vec<MaxPlus> {
    let len = columns.first().map_or(0, Vec::len);
    let mut out = alloc::vec![MaxPlus::Bottom; len];
    for (alpha, col) in coeffs.iter().zip(columns) {
        for (slot, x) in out.iter_mut().zip(col) {
            let cand = alpha.otimes(x);
            if cand > *slot {
                *slot = cand;
            }
        }
    }
    out
}

/// Whether `v` is a max-linear combination of the fundamental eigenvectors.
/// Requires `λ(A) = 0`.
pub fn in_eigenspace(a: &MaxPlusMatrix, v: &[MaxPlus]) -> Result<bool> {
    require_zero_lambda(a)?;
    if v.len() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: v.len() });
    }
    let star = kleene_star(a)?;
    let crit = critical_graph(a)?;
    let indices: Vec<i64> = crit.components.iter().filter_map(|c| c.first().copied()).collect();
    let alpha = residuation_coeffs(&star, v, &indices)?;
    let columns = indices.iter().map(|&i| star.column(i)).collect::<Result<Vec<_>>>()?;
    Ok(max_linear_combination(&alpha, &columns) == v && v.iter().any(MaxPlus::is_finite))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn b() -> MaxPlus {
        MaxPlus::Bottom
    }

    fn mat(rows: Vec<Vec<MaxPlus>>) -> MaxPlusMatrix {
        MaxPlusMatrix::from_rows(0, rows).unwrap()
    }

    fn swap() -> MaxPlusMatrix {
        mat(vec![vec![b(), MaxPlus::int(0)], vec![MaxPlus::int(0), b()]])
    }

    #[test]
    fn cycle_mean_examples() {
        assert_eq!(max_cycle_mean(&mat(vec![vec![MaxPlus::frac(7, 3)]])), MaxPlus::frac(7, 3));
        let a = mat(vec![vec![b(), MaxPlus::int(-1)], vec![MaxPlus::int(0), b()]]);
        assert_eq!(max_cycle_mean(&a), MaxPlus::frac(-1, 2));
        assert_eq!(max_cycle_mean(&MaxPlusMatrix::bottom(3, 0)), MaxPlus::Bottom);
        let dag = mat(vec![vec![b(), MaxPlus::int(5)], vec![b(), b()]]);
        assert_eq!(max_cycle_mean(&dag), MaxPlus::Bottom);
    }

    #[test]
    fn triangle_cycle_mean() {
        let a = mat(vec![
            vec![b(), MaxPlus::int(2), b()],
            vec![b(), b(), MaxPlus::int(-1)],
            vec![MaxPlus::int(2), b(), b()],
        ]);
        assert_eq!(max_cycle_mean(&a), MaxPlus::int(1));
    }

    #[test]
    fn star_examples() {
        assert_eq!(kleene_star(&MaxPlusMatrix::bottom(3, 2)).unwrap(), MaxPlusMatrix::identity(3, 2));
        let all_zero = mat(vec![vec![MaxPlus::int(0); 2]; 2]);
        assert_eq!(kleene_star(&swap()).unwrap(), all_zero);
        assert_eq!(kleene_star(&mat(vec![vec![MaxPlus::int(1)]])), Err(Error::PositiveCycle));
    }

    #[test]
    fn critical_graph_of_swap() {
        let crit = critical_graph(&swap()).unwrap();
        assert_eq!(crit.lambda, MaxPlus::int(0));
        assert_eq!(crit.nodes, [0, 1].into_iter().collect());
        assert_eq!(crit.edges, [(0, 1), (1, 0)].into_iter().collect());
        assert_eq!(crit.components.len(), 1);
        assert_eq!(critical_graph(&MaxPlusMatrix::bottom(2, 0)), Err(Error::Acyclic));
    }

    #[test]
    fn critical_graph_two_components() {
        // Two disjoint zero-weight loops joined by a negative path.
        let a = mat(vec![
            vec![MaxPlus::int(0), MaxPlus::int(-2), b()],
            vec![MaxPlus::int(-3), b(), MaxPlus::int(-1)],
            vec![b(), MaxPlus::int(-4), MaxPlus::int(0)],
        ]);
        let crit = critical_graph(&a).unwrap();
        assert_eq!(crit.edges, [(0, 0), (2, 2)].into_iter().collect());
        assert_eq!(crit.components.len(), 2);
        assert_eq!(eigenspace_basis(&a).unwrap().len(), 2);
    }

    #[test]
    fn eigen_checks() {
        let v = vec![MaxPlus::frac(1, 3), MaxPlus::int(-4)];
        assert!(is_eigenvector(&MaxPlusMatrix::identity(2, 0), &v, &MaxPlus::unit()));
        assert!(!is_eigenvector(&MaxPlusMatrix::identity(2, 0), &[b(), b()], &MaxPlus::unit()));
        let basis = eigenspace_basis(&swap()).unwrap();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0].vector, vec![MaxPlus::int(0), MaxPlus::int(0)]);
        let mut bad = basis[0].vector.clone();
        bad[0] = MaxPlus::int(1);
        assert!(!is_eigenvector(&swap(), &bad, &MaxPlus::unit()));
    }

    #[test]
    fn saturation_of_swap() {
        let v = vec![MaxPlus::int(0), MaxPlus::int(0)];
        let sat = saturation_graph(&swap(), &v, &MaxPlus::unit()).unwrap();
        assert_eq!(sat.edges, [(0, 1), (1, 0)].into_iter().collect());
        assert!(sat.has_outgoing(0) && sat.has_outgoing(1));
        let w = vec![MaxPlus::int(0), MaxPlus::int(1)];
        assert_eq!(saturation_graph(&swap(), &w, &MaxPlus::unit()), Err(Error::NotEigenvector));
    }

    #[test]
    fn residuation_recovers_shifted_combination() {
        let a = mat(vec![
            vec![MaxPlus::int(0), MaxPlus::int(-20), b()],
            vec![MaxPlus::int(-30), b(), MaxPlus::int(-10)],
            vec![b(), MaxPlus::int(-40), MaxPlus::int(0)],
        ]);
        let star = kleene_star(&a).unwrap();
        let cols = vec![star.column(0).unwrap(), star.column(2).unwrap()];
        let alpha = vec![MaxPlus::int(0), MaxPlus::int(5)];
        let v = max_linear_combination(&alpha, &cols);
        assert_eq!(residuation_coeffs(&star, &v, &[0, 2]).unwrap(), alpha);
        assert!(in_eigenspace(&a, &v).unwrap());

        let self_alpha = residuation_coeffs(&star, &cols[0], &[0]).unwrap();
        assert_eq!(self_alpha, vec![MaxPlus::int(0)]);

        let mut off_span = v.clone();
        off_span[1] = off_span[1].shift(&crate::rat(-1, 1));
        assert!(!in_eigenspace(&a, &off_span).unwrap());
    }

    #[test]
    fn eigenspace_requires_zero_lambda() {
        let a = mat(vec![vec![MaxPlus::int(-1)]]);
        assert!(matches!(eigenspace_basis(&a), Err(Error::NonZeroEigenvalue(_))));
        assert!(matches!(in_eigenspace(&a, &[MaxPlus::int(0)]), Err(Error::NonZeroEigenvalue(_))));
    }
}
