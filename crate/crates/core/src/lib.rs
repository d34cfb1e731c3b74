//! Exact structure-constant computations for quadratic Poisson brackets
//! compatible with the multiplication of a finite-dimensional associative
//! algebra.
//!
//! Everything is computed over arbitrary-precision rationals. The layers are:
//!
//! - [`exact`]: [`Rational`] scalars and sparse multivariate [`Polynomial`]s.
//! - [`algebra`]: algebras by structure constants, the componentwise tensor
//!   square and cube, symmetrizers and slot lifts of operators.
//! - [`bracket`]: degree-two brackets, Jacobi checks (polynomial and
//!   Schouten-operator), compatibility checks (diagonal and derivation) and
//!   translations of coordinates.
//! - [`coboundary`]: brackets coming from an r-matrix `δ(x) = [r, x]`.
//! - [`bialgebra`]: the Lie bialgebra attached to a compatible bracket on a
//!   unital algebra, pencils of brackets and affine restriction.
//! - [`catalog`]: ready-made algebras, r-matrices and brackets.

pub mod algebra;
pub mod bialgebra;
pub mod bracket;
pub mod catalog;
pub mod coboundary;
mod error;
pub mod exact;
pub mod json;
pub mod report;

pub use algebra::{AlgebraSpec, Operator2, Operator3, Slots, Tensor2, Tensor3};
pub use bialgebra::Cocommutator;
pub use bracket::{DeltaMap, PolyBracket};
pub use coboundary::RMatrix;
pub use error::{Error, Result};
pub use exact::{q, Polynomial, Rational};
pub use report::{CheckReport, Residual, Verdict, Witness};
