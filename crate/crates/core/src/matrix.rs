//! Dense square max-plus matrices over an integer index window.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::scalar::MaxPlus;

/// A square matrix over the max-plus semiring.
///
/// Rows and columns are addressed by *external* indices in
/// `[offset, offset + n - 1]`, so a window such as `[-N-1, N+1]` keeps the
/// indexing of the underlying sequence.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MaxPlusMatrix {
    n: usize,
    offset: i64,
    entries: Vec<MaxPlus>,
}

impl MaxPlusMatrix {
    /// All-bottom matrix (the semiring zero).
    pub fn bottom(n: usize, offset: i64) -> Self {
        MaxPlusMatrix { n, offset, entries: alloc::vec![MaxPlus::Bottom; n * n] }
    }

    /// `0` on the diagonal, bottom elsewhere.
    pub fn identity(n: usize, offset: i64) -> Self {
        let mut m = Self::bottom(n, offset);
        for i in 0..n {
            m.entries[i * n + i] = MaxPlus::unit();
        }
        m
    }

    pub fn from_rows(offset: i64, rows: Vec<Vec<MaxPlus>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::NotSquare);
            }
            entries.extend(row);
        }
        Ok(MaxPlusMatrix { n, offset, entries })
    }

    /// Builds a matrix on the window `[lo, hi]` from a closure of external indices.
    pub fn from_fn(lo: i64, hi: i64, mut f: impl FnMut(i64, i64) -> MaxPlus) -> Result<Self> {
        if hi < lo {
            return Err(Error::EmptyWindow { lo, hi });
        }
        let n = (hi - lo + 1) as usize;
        let mut entries = Vec::with_capacity(n * n);
        for i in lo..=hi {
            for j in lo..=hi {
                entries.push(f(i, j));
            }
        }
        Ok(MaxPlusMatrix { n, offset: lo, entries })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Largest external index.
    pub fn last_index(&self) -> i64 {
        self.offset + self.n as i64 - 1
    }

    /// External indices in increasing order.
    pub fn indices(&self) -> core::ops::Range<i64> {
        self.offset..self.offset + self.n as i64
    }

    fn local(&self, index: i64) -> Result<usize> {
        if index < self.offset || index > self.last_index() {
            return Err(Error::IndexOutOfWindow { index, lo: self.offset, hi: self.last_index() });
        }
        Ok((index - self.offset) as usize)
    }

    /// Entry by external indices.
    pub fn get(&self, i: i64, j: i64) -> Result<&MaxPlus> {
        let (r, c) = (self.local(i)?, self.local(j)?);
        Ok(&self.entries[r * self.n + c])
    }

    pub fn set(&mut self, i: i64, j: i64, value: MaxPlus) -> Result<()> {
        let (r, c) = (self.local(i)?, self.local(j)?);
        self.entries[r * self.n + c] = value;
        Ok(())
    }

    /// Entry by zero-based row and column.
    pub fn at(&self, r: usize, c: usize) -> &MaxPlus {
        &self.entries[r * self.n + c]
    }

    pub(crate) fn at_mut(&mut self, r: usize, c: usize) -> &mut MaxPlus {
        &mut self.entries[r * self.n + c]
    }

    pub fn row(&self, r: usize) -> &[MaxPlus] {
        &self.entries[r * self.n..(r + 1) * self.n]
    }

    /// Column `j` (external index) as a vector.
    pub fn column(&self, j: i64) -> Result<Vec<MaxPlus>> {
        let c = self.local(j)?;
        Ok((0..self.n).map(|r| self.at(r, c).clone()).collect())
    }

    pub fn rows(&self) -> impl Iterator<Item = &[MaxPlus]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    fn check_compatible(&self, other: &MaxPlusMatrix) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        if self.offset != other.offset {
            return Err(Error::OffsetMismatch { left: self.offset, right: other.offset });
        }
        Ok(())
    }

    /// Max-plus product `(A ⊗ B)_{ik} = max_j (A_{ij} + B_{jk})`.
    pub fn mul(&self, other: &MaxPlusMatrix) -> Result<MaxPlusMatrix> {
        self.check_compatible(other)?;
        let n = self.n;
        let mut out = Self::bottom(n, self.offset);
        for i in 0..n {
            for j in 0..n {
                let a = self.at(i, j);
                if a.is_bottom() {
                    continue;
                }
                for k in 0..n {
                    let cand = a.otimes(other.at(j, k));
                    let slot = out.at_mut(i, k);
                    if cand > *slot {
                        *slot = cand;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Entrywise maximum.
    pub fn oplus(&self, other: &MaxPlusMatrix) -> Result<MaxPlusMatrix> {
        self.check_compatible(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.oplus(b)).collect();
        Ok(MaxPlusMatrix { n: self.n, offset: self.offset, entries })
    }

    /// `(A ⊗ v)_i = max_j (A_{ij} + v_j)`.
    pub fn mul_vec(&self, v: &[MaxPlus]) -> Result<Vec<MaxPlus>> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: v.len() });
        }
        Ok(self
            .rows()
            .map(|row| row.iter().zip(v).fold(MaxPlus::Bottom, |acc, (a, x)| acc.oplus(&a.otimes(x))))
            .collect())
    }

    /// Submatrix on the external window `[lo, hi]`.
    pub fn submatrix(&self, lo: i64, hi: i64) -> Result<MaxPlusMatrix> {
        self.local(lo)?;
        self.local(hi)?;
        MaxPlusMatrix::from_fn(lo, hi, |i, j| self.get(i, j).cloned().unwrap_or_default())
    }

    /// Adds a finite constant to every finite entry.
    pub fn shift(&self, r: &crate::scalar::Rational) -> MaxPlusMatrix {
        MaxPlusMatrix { n: self.n, offset: self.offset, entries: self.entries.iter().map(|a| a.shift(r)).collect() }
    }

    pub fn entries(&self) -> &[MaxPlus] {
        &self.entries
    }
}

impl fmt::Debug for MaxPlusMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MaxPlusMatrix(offset={}, n={})", self.offset, self.n)?;
        for row in self.rows() {
            f.write_str("  [")?;
            for (c, x) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}
