mod common;

use std::collections::{BTreeSet, VecDeque};

use common::{matrix, normalised};
use proptest::prelude::*;
use tropical_lax::spectral::{
    critical_graph, eigenspace_basis, in_eigenspace, is_eigenvector, kleene_star, max_linear_combination,
    residuation_coeffs, saturation_graph,
};
use tropical_lax::{rat, MaxPlus};

fn reaches(edges: &BTreeSet<(i64, i64)>, from: i64, to: i64) -> bool {
    let mut seen = BTreeSet::from([from]);
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            return true;
        }
        for &(_, y) in edges.range((x, i64::MIN)..=(x, i64::MAX)) {
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    false
}

fn coefficients(len: usize, seed: u64) -> Vec<MaxPlus> {
    (0..len).map(|i| MaxPlus::int(((seed >> (i * 5 % 60)) % 9) as i64 - 4)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn saturation_graph_properties(a in matrix(6), seed in any::<u64>()) {
        let Some(b) = normalised(&a) else { return Ok(()) };
        let basis = eigenspace_basis(&b).unwrap();
        let columns: Vec<_> = basis.iter().map(|f| f.vector.clone()).collect();
        let v = max_linear_combination(&coefficients(columns.len(), seed), &columns);
        prop_assert!(is_eigenvector(&b, &v, &MaxPlus::unit()));

        let sat = saturation_graph(&b, &v, &MaxPlus::unit()).unwrap();
        let crit = critical_graph(&b).unwrap();
        let off = b.offset();
        let finite = |i: i64| v[(i - off) as usize].is_finite();
        for i in b.indices().filter(|&i| finite(i)) {
            prop_assert!(sat.has_outgoing(i), "node {} has no saturated edge", i);
        }
        for &(i, j) in &sat.edges {
            if reaches(&sat.edges, j, i) {
                prop_assert!(crit.edges.contains(&(i, j)), "saturated cycle edge ({}, {}) is not critical", i, j);
            }
        }
        for &(i, j) in crit.edges.iter().filter(|&&(i, _)| finite(i)) {
            prop_assert!(sat.edges.contains(&(i, j)));
        }
    }

    #[test]
    fn eigenspace_is_spanned_by_critical_columns(a in matrix(6), seed in any::<u64>(), bump in 0usize..6) {
        let Some(b) = normalised(&a) else { return Ok(()) };
        let basis = eigenspace_basis(&b).unwrap();
        let indices: Vec<i64> = basis.iter().map(|f| f.index).collect();
        let columns: Vec<_> = basis.iter().map(|f| f.vector.clone()).collect();
        let v = max_linear_combination(&coefficients(columns.len(), seed), &columns);
        let star = kleene_star(&b).unwrap();
        let alpha = residuation_coeffs(&star, &v, &indices).unwrap();
        prop_assert_eq!(max_linear_combination(&alpha, &columns), v.clone());
        prop_assert!(in_eigenspace(&b, &v).unwrap());

        let mut w = v.clone();
        let i = bump % w.len();
        w[i] = w[i].shift(&rat(1, 2));
        prop_assert_eq!(in_eigenspace(&b, &w).unwrap(), is_eigenvector(&b, &w, &MaxPlus::unit()));
    }
}
