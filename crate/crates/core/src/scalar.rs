//! The max-plus semiring `ℚ ∪ {−∞}` with `a ⊕ b = max(a, b)` and `a ⊗ b = a + b`.

use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// Shorthand for `n / d` as a [`Rational`].
///
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// An element of the max-plus semiring.
///
/// `Bottom` is the semiring zero (`−∞`): neutral for ⊕ and absorbing for ⊗.
/// The derived order puts `Bottom` below every finite value.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MaxPlus {
    #[default]
    Bottom,
    Finite(Rational),
}

impl MaxPlus {
    /// The semiring zero, `−∞`.
    pub fn bottom() -> Self {
        MaxPlus::Bottom
    }

    /// The semiring unity, `0`.
    pub fn unit() -> Self {
        MaxPlus::Finite(Rational::zero())
    }

    pub fn int(n: i64) -> Self {
        MaxPlus::Finite(Rational::from_integer(BigInt::from(n)))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        MaxPlus::Finite(rat(n, d))
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, MaxPlus::Bottom)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_bottom()
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            MaxPlus::Bottom => None,
            MaxPlus::Finite(r) => Some(r),
        }
    }

    pub fn into_finite(self) -> Option<Rational> {
        match self {
            MaxPlus::Bottom => None,
            MaxPlus::Finite(r) => Some(r),
        }
    }

    /// `a ⊕ b = max(a, b)`.
    pub fn oplus(&self, other: &MaxPlus) -> MaxPlus {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// `a ⊗ b = a + b`, bottom if either side is bottom.
    pub fn otimes(&self, other: &MaxPlus) -> MaxPlus {
        match (self, other) {
            (MaxPlus::Finite(a), MaxPlus::Finite(b)) => MaxPlus::Finite(a + b),
            _ => MaxPlus::Bottom,
        }
    }

    /// Adds a finite rational (a max-plus scaling by `r`).
    pub fn shift(&self, r: &Rational) -> MaxPlus {
        match self {
            MaxPlus::Finite(a) => MaxPlus::Finite(a + r),
            MaxPlus::Bottom => MaxPlus::Bottom,
        }
    }

    /// Residual `self − other` used by residuation.
    ///
    /// Returns `None` for `finite − bottom` (that is `+∞`, which never wins a
    /// minimum), and `Bottom` for `bottom − finite`. `bottom − bottom` is also
    /// treated as `+∞`.
    pub fn residual(&self, other: &MaxPlus) -> Option<MaxPlus> {
        match (self, other) {
            (_, MaxPlus::Bottom) => None,
            (MaxPlus::Bottom, MaxPlus::Finite(_)) => Some(MaxPlus::Bottom),
            (MaxPlus::Finite(a), MaxPlus::Finite(b)) => Some(MaxPlus::Finite(a - b)),
        }
    }

    pub fn is_zero_value(&self) -> bool {
        matches!(self, MaxPlus::Finite(r) if r.is_zero())
    }

    /// Compares with a finite rational, bottom being smaller than everything.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        match self {
            MaxPlus::Bottom => Ordering::Less,
            MaxPlus::Finite(a) => a.cmp(r),
        }
    }
}

impl From<Rational> for MaxPlus {
    fn from(r: Rational) -> Self {
        MaxPlus::Finite(r)
    }
}

impl From<i64> for MaxPlus {
    fn from(n: i64) -> Self {
        MaxPlus::int(n)
    }
}

impl fmt::Display for MaxPlus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaxPlus::Bottom => f.write_str("-inf"),
            MaxPlus::Finite(r) => write!(f, "{r}"),
        }
    }
}

/// `1` as a rational.
pub(crate) fn one() -> Rational {
    Rational::one()
}
