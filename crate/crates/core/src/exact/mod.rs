//! Exact scalars and polynomials.

mod polynomial;
mod rational;

pub use polynomial::{Monomial, Polynomial};
pub use rational::{q, Rational};
