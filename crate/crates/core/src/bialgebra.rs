//! The Lie bialgebra `Δ(x) = δ(x⊗u + u⊗x)` attached to a compatible
//! quadratic bracket on a unital algebra, the pencil `δ* + tΔ*`, and the
//! restriction of a bracket to the affine hyperplane `x⁰ = 1`.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::algebra::{AlgebraSpec, Tensor2};
use crate::bracket::{bracket_to_delta, jacobiator, translate, PolyBracket};
use crate::error::{Error, Result};
use crate::exact::{Polynomial, Rational};
use crate::report::{CheckReport, Residual, Witness};

/// `Δ(e_m) = Σ_{i,j} d^{ij}_m e_i⊗e_j`, antisymmetric in `(i, j)`.
/// Stored as `d[i][j][m]`, matching the linear part of [`PolyBracket`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cocommutator {
    n: usize,
    d: Vec<Rational>,
}

impl Cocommutator {
    pub fn new(n: usize, d: Vec<Rational>) -> Result<Self> {
        if d.len() != n.pow(3) {
            return Err(Error::DimensionMismatch {
                expected: n.pow(3),
                found: d.len(),
            });
        }
        let out = Cocommutator { n, d };
        for i in 0..n {
            for j in 0..=i {
                if (0..n).any(|m| out.get(i, j, m) != &-out.get(j, i, m)) {
                    return Err(Error::NotAntisymmetric { i, j });
                }
            }
        }
        Ok(out)
    }

    /// Builds from the images `Δ(e_m)`.
    pub fn from_images(images: &[Tensor2]) -> Result<Self> {
        let n = images.len();
        let mut d = vec![Rational::zero(); n.pow(3)];
        for (m, t) in images.iter().enumerate() {
            if t.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: t.dim(),
                });
            }
            for ([i, j], v) in t.nonzero() {
                d[(i * n + j) * n + m] = v.clone();
            }
        }
        Cocommutator::new(n, d)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.d
    }

    pub fn get(&self, i: usize, j: usize, m: usize) -> &Rational {
        &self.d[(i * self.n + j) * self.n + m]
    }

    /// `Δ(e_m)`.
    pub fn image(&self, m: usize) -> Tensor2 {
        Tensor2::from_fn(self.n, |[i, j]| self.get(i, j, m).clone())
    }

    /// `Δ(x)` for an arbitrary vector `x`.
    pub fn apply(&self, x: &[Rational]) -> Tensor2 {
        Tensor2::from_fn(self.n, |[i, j]| {
            x.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(m, v)| v * self.get(i, j, m))
                .sum()
        })
    }

    pub fn is_zero(&self) -> bool {
        self.d.iter().all(Rational::is_zero)
    }
}

/// `Δ(e_m) = δ(e_m⊗u + u⊗e_m) = Σ_l u^l δ(e_m⊗e_l + e_l⊗e_m)`.
pub fn cocommutator_from_bracket(
    spec: &AlgebraSpec,
    bracket: &PolyBracket,
) -> Result<Cocommutator> {
    if bracket.dim() != spec.dim() {
        return Err(Error::DimensionMismatch {
            expected: spec.dim(),
            found: bracket.dim(),
        });
    }
    let unit = spec.find_unit().ok_or(Error::NoUnit)?;
    let delta = bracket_to_delta(bracket)?;
    let n = spec.dim();
    let images: Vec<Tensor2> = (0..n)
        .map(|m| {
            unit.iter().enumerate().filter(|(_, u)| !u.is_zero()).fold(
                Tensor2::zeros(n),
                |acc, (l, u)| {
                    acc.checked_add(&delta.image(m, l).scale(u))
                        .expect("same shape")
                },
            )
        })
        .collect();
    Cocommutator::from_images(&images)
}

/// The linear bracket `{x^i, x^j} = d^{ij}_m x^m` dual to `Δ`.
pub fn cocommutator_to_linear_bracket(cocommutator: &Cocommutator) -> PolyBracket {
    PolyBracket::linear(cocommutator.n, cocommutator.d.clone())
        .expect("cocommutator is antisymmetric")
}

/// `(ad_x⊗1 + 1⊗ad_x) T` with `ad_x = [e_x, ·]`.
fn ad_action(spec: &AlgebraSpec, x: usize, t: &Tensor2) -> Tensor2 {
    let n = spec.dim();
    let mut out = Tensor2::zeros(n);
    for ([i, j], v) in t.nonzero() {
        for (k, c) in spec.basis_commutator(x, i) {
            out.add_at([k, j], &(v * &c));
        }
        for (k, c) in spec.basis_commutator(x, j) {
            out.add_at([i, k], &(v * &c));
        }
    }
    out
}

/// Lie bialgebra axioms for `(A_L, Δ)`: co-Jacobi (the dual linear bracket
/// satisfies Jacobi) and the 1-cocycle condition
/// `Δ([x,y]) = x·Δ(y) - y·Δ(x)` on basis pairs, `x·` being the adjoint
/// action on `A⊗A`.
pub fn bialgebra_axioms_check(
    spec: &AlgebraSpec,
    cocommutator: &Cocommutator,
) -> Result<CheckReport> {
    let started = Instant::now();
    let n = spec.dim();
    if cocommutator.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: cocommutator.dim(),
        });
    }
    let mut witnesses: Vec<Witness> = jacobiator(&cocommutator_to_linear_bracket(cocommutator))
        .witnesses
        .into_iter()
        .map(|w| w.with_context("co-jacobi"))
        .collect();
    let images: Vec<Tensor2> = (0..n).map(|m| cocommutator.image(m)).collect();
    for a in 0..n {
        for b in a + 1..n {
            let ab = spec.commutator(&spec.basis_vector(a), &spec.basis_vector(b))?;
            let lhs = cocommutator.apply(&ab);
            let rhs =
                ad_action(spec, a, &images[b]).checked_sub(&ad_action(spec, b, &images[a]))?;
            let diff = lhs.checked_sub(&rhs)?;
            if !diff.is_zero() {
                witnesses
                    .push(Witness::at(&[a, b], Residual::Tensor2(diff)).with_context("cocycle"));
            }
        }
    }
    Ok(CheckReport::from_witnesses("bialgebra", witnesses, started))
}

/// Jacobi for `B_quad + t·B_lin` at each `t`. With `certify`, at least three
/// distinct values are required; the Jacobiator is quadratic in `t`, so
/// vanishing at three points means it vanishes for the whole pencil. The two
/// endpoints `B_quad` and `B_lin` are checked as well in that mode.
pub fn pencil_check(
    spec: &AlgebraSpec,
    quadratic: &PolyBracket,
    linear: &PolyBracket,
    ts: &[Rational],
    certify: bool,
) -> Result<CheckReport> {
    let started = Instant::now();
    let n = spec.dim();
    for d in [quadratic.dim(), linear.dim()] {
        if d != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: d,
            });
        }
    }
    quadratic.require_quadratic()?;
    if linear.has_quadratic_part() {
        return Err(Error::NotLinear { part: "quadratic" });
    }
    if linear.has_constant_part() {
        return Err(Error::NotLinear { part: "constant" });
    }
    let distinct: BTreeSet<&Rational> = ts.iter().collect();
    if certify && distinct.len() < 3 {
        return Err(Error::TooFewPencilValues(distinct.len()));
    }
    let mut witnesses = Vec::new();
    for t in distinct {
        let member = quadratic.checked_add(&linear.scale(t))?;
        witnesses.extend(
            jacobiator(&member)
                .witnesses
                .into_iter()
                .map(|w| w.with_context(format!("t = {t}"))),
        );
    }
    if certify {
        for (label, b) in [
            ("quadratic endpoint", quadratic),
            ("linear endpoint", linear),
        ] {
            witnesses.extend(
                jacobiator(b)
                    .witnesses
                    .into_iter()
                    .map(|w| w.with_context(label)),
            );
        }
    }
    Ok(CheckReport::from_witnesses("pencil", witnesses, started))
}

/// Compares `translate(B, u, t)` with `B + t·Δ*` coefficientwise for each
/// `t`, `u` being the unit; the constant part must vanish.
pub fn translation_oracle(
    spec: &AlgebraSpec,
    quadratic: &PolyBracket,
    ts: &[Rational],
) -> Result<CheckReport> {
    let started = Instant::now();
    let unit = spec.find_unit().ok_or(Error::NoUnit)?;
    let linear = cocommutator_to_linear_bracket(&cocommutator_from_bracket(spec, quadratic)?);
    let mut witnesses = Vec::new();
    for t in ts {
        let moved = translate(quadratic, &unit, t)?;
        let expected = quadratic.checked_add(&linear.scale(t))?;
        for ((i, j, lhs), (_, _, rhs)) in moved.table().into_iter().zip(expected.table()) {
            let diff = &lhs - &rhs;
            if !diff.is_zero() {
                witnesses.push(
                    Witness::at(&[i, j], Residual::Polynomial(diff))
                        .with_context(format!("t = {t}")),
                );
            }
        }
    }
    Ok(CheckReport::from_witnesses(
        "translation",
        witnesses,
        started,
    ))
}

/// A bracket on the hyperplane `x^{unit_index} = 1`, with the original
/// (0-based) index of each remaining coordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineRestriction {
    pub bracket: PolyBracket,
    pub coordinates: Vec<usize>,
}

/// Sets the Casimir coordinate `x^{unit_index}` to one in the brackets of
/// the remaining coordinates.
pub fn affine_restriction(bracket: &PolyBracket, unit_index: usize) -> Result<AffineRestriction> {
    let n = bracket.dim();
    if unit_index >= n || n < 2 {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: unit_index + 1,
        });
    }
    for j in 0..n {
        let p = bracket.pair(unit_index, j);
        if !p.is_zero() {
            return Err(Error::NotCasimir {
                index: unit_index + 1,
                other: j + 1,
                residual: p.to_string(),
            });
        }
    }
    let coordinates: Vec<usize> = (0..n).filter(|&v| v != unit_index).collect();
    let images: Vec<Polynomial> = (0..n)
        .map(|v| match coordinates.iter().position(|&c| c == v) {
            Some(new) => Polynomial::var(n - 1, new),
            None => Polynomial::constant(n - 1, Rational::one()),
        })
        .collect();
    let mut entries = Vec::new();
    for (a, &i) in coordinates.iter().enumerate() {
        for (b, &j) in coordinates.iter().enumerate().skip(a + 1) {
            entries.push((a, b, bracket.pair(i, j).substitute(&images, n - 1)?));
        }
    }
    Ok(AffineRestriction {
        bracket: PolyBracket::from_table(n - 1, entries)?,
        coordinates,
    })
}

/// [`affine_restriction`] at the coordinate of the algebra's unit, which
/// must be a basis vector.
pub fn affine_restriction_at_unit(
    spec: &AlgebraSpec,
    bracket: &PolyBracket,
) -> Result<AffineRestriction> {
    let unit = spec.find_unit().ok_or(Error::NoUnit)?;
    let index = (0..spec.dim())
        .find(|&i| unit == spec.basis_vector(i))
        .ok_or_else(|| Error::Malformed {
            pointer: "/m".into(),
            message: "the unit is not a basis vector".into(),
        })?;
    affine_restriction(bracket, index)
}
