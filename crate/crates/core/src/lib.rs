//! Exact max-plus spectral theory for the ultradiscrete KdV (box-ball) Lax pair.
//!
//! The crate is `no_std` and only needs `alloc`. All arithmetic is exact:
//! scalars are arbitrary-precision rationals extended by a bottom element
//! (`−∞`), so ties such as `u_i + u_{i+1} = 1` are decided exactly.
//!
//! Layout:
//! - [`scalar`], [`matrix`]: the max-plus semiring and dense square matrices
//!   indexed by an external integer window.
//! - [`spectral`]: maximum cycle mean (Karp), Kleene star, critical and
//!   saturation graphs, eigenspace bases and residuation.
//! - [`lax`]: potentials, the `A(γ)` / `A(δ)` Lax matrices, solitons and
//!   fundamental eigenvector pairs.
//! - [`undress`]: the undressing transform and its closed forms.
//! - [`constraints`]: the two coupling equations of the full Lax system.
//! - [`bbs`]: box-ball time evolution.
#![no_std]

extern crate alloc;

pub mod bbs;
pub mod constraints;
mod error;
pub mod lax;
pub mod matrix;
pub mod scalar;
pub mod spectral;
pub mod undress;

pub use error::{Error, Result};
pub use lax::{Case, Classification, EigenSeq, FundamentalPair, LaxMatrix, Potential, Soliton};
pub use matrix::MaxPlusMatrix;
pub use scalar::{rat, MaxPlus, Rational};
