//! JSON encodings of potentials, matrices and rationals.
//!
//! Rationals are always reduced `"p/q"` strings (`"p"` when `q = 1`), bottom
//! is `null`.

use std::fmt;

use serde::{Deserialize, Serialize};
use tropical_lax::{MaxPlus, MaxPlusMatrix, Potential, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError(pub String);

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for FormatError {}

/// Parses `"p/q"` or `"p"` with `q > 0`; no spaces, no decimals.
pub fn parse_rational(s: &str) -> Result<Rational, FormatError> {
    let bad = || FormatError(format!("invalid rational {s:?}; expected \"p/q\" or \"p\""));
    let is_int = |t: &str| {
        let digits = t.strip_prefix('-').unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    let (num, den) = s.split_once('/').unwrap_or((s, "1"));
    if !is_int(num) || den.is_empty() || !den.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let r: Rational = format!("{num}/{den}").parse().map_err(|_| bad())?;
    Ok(r)
}

pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn format_maxplus(x: &MaxPlus) -> Option<String> {
    x.as_finite().map(format_rational)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PotentialJson {
    pub support_lo: i64,
    pub values: Vec<String>,
}

impl PotentialJson {
    pub fn from_potential(u: &Potential) -> Self {
        PotentialJson { support_lo: u.support_lo(), values: u.values().iter().map(format_rational).collect() }
    }

    pub fn to_potential(&self) -> Result<Potential, FormatError> {
        let values = self.values.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
        Ok(Potential::new(self.support_lo, values))
    }
}

pub fn parse_potential(text: &str) -> Result<Potential, FormatError> {
    let raw: PotentialJson =
        serde_json::from_str(text).map_err(|e| FormatError(format!("malformed potential JSON: {e}")))?;
    raw.to_potential()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub offset: i64,
    pub entries: Vec<Vec<Option<String>>>,
}

impl MatrixJson {
    pub fn from_matrix(a: &MaxPlusMatrix) -> Self {
        MatrixJson {
            offset: a.offset(),
            entries: a.rows().map(|row| row.iter().map(format_maxplus).collect()).collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<MaxPlusMatrix, FormatError> {
        let rows = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| match e {
                        None => Ok(MaxPlus::Bottom),
                        Some(s) => parse_rational(s).map(MaxPlus::Finite),
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        MaxPlusMatrix::from_rows(self.offset, rows).map_err(|e| FormatError(e.to_string()))
    }
}
