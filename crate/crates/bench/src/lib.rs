//! Shared fixtures for the criterion benchmarks.

use quadbracket::catalog;
use quadbracket::coboundary::derive_bracket_from_r;
use quadbracket::{q, AlgebraSpec, PolyBracket, RMatrix};

/// Quaternions with `r = a i∧j + b i∧k + c j∧k` for `(a, b, c) = (1, 2, 3)`
/// and the bracket it induces.
pub fn quaternion_fixture() -> (AlgebraSpec, RMatrix, PolyBracket) {
    let spec = catalog::quaternions();
    let r = catalog::quaternion_r(&q(1, 1), &q(2, 1), &q(3, 1));
    let bracket = derive_bracket_from_r(&spec, &r).expect("dimensions agree");
    (spec, r, bracket)
}

/// `Mat(2)` with `r = E11∧E12 + E21∧E22`.
pub fn matrix_fixture() -> (AlgebraSpec, RMatrix, PolyBracket) {
    let spec = catalog::mat(2);
    let r = RMatrix::basis_wedge(4, 0, 1)
        .checked_add(&RMatrix::basis_wedge(4, 2, 3))
        .expect("same dimension");
    let bracket = derive_bracket_from_r(&spec, &r).expect("dimensions agree");
    (spec, r, bracket)
}
