//! Undressing a potential with a fundamental eigenvector pair.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lax::{detect_solitons, fundamental_pair, Case, EigenSeq, Potential, Soliton};
use crate::scalar::{one, Rational};

/// `ũ_i = u_i + Φ¹_{i+1} + Φ²_i − Φ¹_i − Φ²_{i+1}`.
///
/// Evaluated on the union of the input windows widened by one site; outside
/// it both pairs are in their tail regime and the differences cancel.
pub fn undress_general(u: &Potential, phi1: &EigenSeq, phi2: &EigenSeq) -> Potential {
    let (a_lo, a_hi) = phi1.window();
    let (b_lo, b_hi) = phi2.window();
    let (u_lo, u_hi) = u.support().unwrap_or((0, 0));
    let lo = a_lo.min(b_lo).min(u_lo) - 1;
    let hi = a_hi.max(b_hi).max(u_hi) + 1;
    Potential::from_fn(lo, hi, |i| u.get(i) + phi1.value(i + 1) + phi2.value(i) - phi1.value(i) - phi2.value(i + 1))
}

/// Closed form of the undressing attached to `sol`.
///
/// Left of the soliton the potential moves one site right, right of it one
/// site left. Inside, a non-massive run keeps `u_{i−1} (= u_{i+1})` and a
/// massive one is reflected to `1 − u_i`.
pub fn undress_closed_form(u: &Potential, sol: &Soliton) -> Result<Potential> {
    if !detect_solitons(u).contains(sol) {
        return Err(Error::NoSoliton);
    }
    let (lo, hi) = u.support().ok_or(Error::NoSoliton)?;
    let (l, head) = (sol.l, sol.head());
    Ok(Potential::from_fn(lo.min(l) - 2, hi.max(head) + 2, |i| {
        if i <= l {
            u.get(i - 1)
        } else if i >= head {
            u.get(i + 1)
        } else {
            match sol.case {
                Case::C1 => u.get(i - 1),
                Case::C2 | Case::Borderline => one() - u.get(i),
            }
        }
    }))
}

/// Whether the general transform with the soliton's own fundamental pair
/// matches the closed form.
pub fn undress_crosscheck(u: &Potential, sol: &Soliton) -> Result<bool> {
    let closed = undress_closed_form(u, sol)?;
    let pair = fundamental_pair(u, sol)?;
    Ok(undress_general(u, &pair.phi1, &pair.phi2) == closed)
}

/// Length of the run of consecutive adjacent sums equal to `value` that
/// covers index `i`, or 0.
pub fn run_length_at(u: &Potential, i: i64, value: &Rational) -> i64 {
    if u.pair_sum(i) != *value {
        return 0;
    }
    let mut lo = i;
    while u.pair_sum(lo - 1) == *value {
        lo -= 1;
    }
    let mut hi = i;
    while u.pair_sum(hi + 1) == *value {
        hi += 1;
    }
    hi - lo + 1
}

/// Solitons of the undressed potential, for reporting.
pub fn solitons_after(u: &Potential, sol: &Soliton) -> Result<Vec<Soliton>> {
    Ok(detect_solitons(&undress_closed_form(u, sol)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use alloc::vec;

    #[test]
    fn massive_block_disappears() {
        // (a 1 … 1 b) on zero background.
        for u in [
            Potential::new(3, vec![rat(1, 2), rat(1, 1), rat(7, 10)]),
            Potential::new(-2, vec![rat(1, 3), rat(1, 1), rat(1, 1), rat(1, 1), rat(0, 1)]),
            Potential::new(0, vec![rat(1, 1)]),
        ] {
            let sols = detect_solitons(&u);
            assert_eq!(sols.len(), 1, "{u:?}");
            let sol = sols[0];
            assert_eq!(undress_closed_form(&u, &sol).unwrap(), Potential::zero());
            let pair = fundamental_pair(&u, &sol).unwrap();
            assert_eq!(undress_general(&u, &pair.phi1, &pair.phi2), Potential::zero());
        }
    }

    #[test]
    fn one_soliton_table_crosscheck() {
        let u = Potential::new(1, vec![rat(3, 5), rat(7, 10), rat(4, 5), rat(9, 10)]);
        let sol = detect_solitons(&u)[0];
        assert!(undress_crosscheck(&u, &sol).unwrap());
        // Interior reflected, ends removed.
        let expected = Potential::new(2, vec![rat(3, 10), rat(1, 5)]);
        assert_eq!(undress_closed_form(&u, &sol).unwrap(), expected);
    }

    #[test]
    fn c1_length_three_soliton() {
        // u_l = u_{l+2}, u_{l+1} = u_{l+3}: every sum in the run equals 1/2.
        let u = Potential::new(0, vec![rat(1, 10), rat(1, 5), rat(3, 10), rat(1, 5), rat(3, 10), rat(1, 10)]);
        let sols = detect_solitons(&u);
        assert_eq!(sols, vec![Soliton { l: 1, s: 3, case: Case::C1 }]);
        let sol = sols[0];
        let ut = undress_closed_form(&u, &sol).unwrap();
        // Shift in from both sides; the run shrinks by two.
        assert_eq!(ut, Potential::new(0, vec![rat(0, 1), rat(1, 10), rat(1, 5), rat(3, 10), rat(1, 10)]));
        assert!(undress_crosscheck(&u, &sol).unwrap());
        let v = rat(1, 2);
        assert_eq!(run_length_at(&u, 1, &v), 3);
        assert_eq!(run_length_at(&ut, 2, &v), 1);
    }

    #[test]
    fn zero_potential_has_nothing_to_undress() {
        let sol = Soliton { l: 0, s: 1, case: Case::C1 };
        assert_eq!(undress_closed_form(&Potential::zero(), &sol), Err(Error::NoSoliton));
    }

    #[test]
    fn general_transform_of_constant_pair_is_identity() {
        let z = Potential::zero();
        let k = rat(0, 1);
        let flat = EigenSeq::new(-1, vec![rat(2, 1); 3], k).unwrap();
        assert_eq!(undress_general(&z, &flat, &flat), Potential::zero());
    }
}
