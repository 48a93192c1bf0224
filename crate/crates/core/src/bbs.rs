//! Box-ball dynamics: `U^{t+1}_l = min(1 − U^t_l, Σ_{k<l} (U^t_k − U^{t+1}_k))`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_traits::{One, Zero};

use crate::lax::Potential;
use crate::scalar::{one, Rational};

/// One time step.
///
/// The carry `S_l` only depends on sites left of `l`, so a single sweep from
/// the left edge of the support resolves the implicit equation. The sweep
/// continues past the support until the carry is spent.
pub fn step(u: &Potential) -> Potential {
    let Some((lo, hi)) = u.support() else { return Potential::zero() };
    let mut carry = Rational::zero();
    let mut next = Vec::with_capacity(u.values().len() + 2);
    let mut i = lo;
    while i <= hi || !carry.is_zero() {
        let cur = u.get(i);
        let new = (one() - &cur).min(carry.clone());
        carry += cur - &new;
        next.push(new);
        i += 1;
    }
    Potential::new(lo, next)
}

/// `states[0] = u`, followed by `t` steps.
pub fn evolve(u: &Potential, t: usize) -> Vec<Potential> {
    let mut states = Vec::with_capacity(t + 1);
    states.push(u.clone());
    for _ in 0..t {
        let next = step(states.last().expect("nonempty"));
        states.push(next);
    }
    states
}

/// One text row per state, columns aligned by site index.
///
/// `.` is 0, `1` is 1, `*` is any other value; a legend line follows when a
/// `*` appears.
pub fn render_timeline(states: &[Potential]) -> String {
    let (lo, hi) =
        states.iter().filter_map(Potential::support).reduce(|(a, b), (c, d)| (a.min(c), b.max(d))).unwrap_or((0, 0));
    let width = states.len().saturating_sub(1).to_string_len();
    let mut out = String::new();
    let mut fractional = false;
    for (t, state) in states.iter().enumerate() {
        let _ = write!(out, "{t:>width$} ");
        for i in lo..=hi {
            let v = state.get(i);
            let glyph = if v.is_zero() {
                '.'
            } else if v.is_one() {
                '1'
            } else {
                fractional = true;
                '*'
            };
            out.push(glyph);
        }
        out.push('\n');
    }
    if fractional {
        out.push_str("legend: . = 0, 1 = 1, * = other value\n");
    }
    out
}

trait DigitCount {
    fn to_string_len(self) -> usize;
}

impl DigitCount for usize {
    fn to_string_len(self) -> usize {
        let mut n = self;
        let mut digits = 1;
        while n >= 10 {
            n /= 10;
            digits += 1;
        }
        digits
    }
}
