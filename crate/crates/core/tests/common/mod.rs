#![allow(dead_code)]

use proptest::prelude::*;
use tropical_lax::{rat, MaxPlus, MaxPlusMatrix, Potential};

/// Values `p/10` with `p` in `0..=max_tenths`, on a random offset.
pub fn potential_tenths(max_tenths: i64, max_len: usize) -> impl Strategy<Value = Potential> {
    (-6i64..=6, prop::collection::vec(0..=max_tenths, 0..=max_len))
        .prop_map(|(lo, ps)| Potential::new(lo, ps.into_iter().map(|p| rat(p, 10)).collect()))
}

/// No adjacent sum reaches 1.
pub fn c1_potential() -> impl Strategy<Value = Potential> {
    potential_tenths(4, 10)
}

/// Values anywhere in `[0, 1]`.
pub fn any_potential() -> impl Strategy<Value = Potential> {
    potential_tenths(10, 10)
}

pub fn entry() -> impl Strategy<Value = MaxPlus> {
    prop_oneof![1 => Just(MaxPlus::Bottom), 3 => (-4i64..=4).prop_map(|p| MaxPlus::frac(p, 2))]
}

pub fn matrix(max_n: usize) -> impl Strategy<Value = MaxPlusMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(entry(), n), n)
            .prop_map(|rows| MaxPlusMatrix::from_rows(0, rows).unwrap())
    })
}

/// `A − λ(A)`, so that `λ = 0`, or `None` when `A` is acyclic.
pub fn normalised(a: &MaxPlusMatrix) -> Option<MaxPlusMatrix> {
    match tropical_lax::spectral::max_cycle_mean(a) {
        MaxPlus::Finite(l) => Some(a.shift(&-l)),
        MaxPlus::Bottom => None,
    }
}

/// Two or three blocks of values in `[6/10, 1]`, separated by zero gaps, so
/// every block is a soliton with adjacent sums strictly above 1.
pub fn several_massive() -> impl Strategy<Value = Potential> {
    let block = (prop::collection::vec(6i64..=10, 2..=4), 2usize..=3);
    (-4i64..=4, prop::collection::vec(block, 2..=3)).prop_map(|(lo, blocks)| {
        let mut values = Vec::new();
        for (b, gap) in blocks {
            values.extend(b.into_iter().map(|p| rat(p, 10)));
            values.extend(std::iter::repeat_n(rat(0, 1), gap));
        }
        Potential::new(lo, values)
    })
}
