//! Cross-check of the tabulated quaternion bracket against the bracket
//! derived from the r-matrix, plus evidence about the unit sphere.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{quaternion_r, quaternion_table, quaternions};
use crate::bracket::{
    bracket_poly, compat_direct, jacobiator, schouten_operator_check, PolyBracket,
};
use crate::coboundary::{derive_bracket_from_r, mybe_check};
use crate::error::{Error, Result};
use crate::exact::{q, Monomial, Polynomial, Rational};
use crate::report::CheckReport;

#[derive(Clone, Debug, Serialize)]
pub struct PairComparison {
    /// 1-based coordinate pair.
    pub pair: (usize, usize),
    /// `λ·{x^i,x^j}` of the derived bracket.
    pub derived: Polynomial,
    pub table: Polynomial,
    pub agree: bool,
    /// `table - λ·derived`.
    pub difference: Polynomial,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConformanceReport {
    pub params: [Rational; 3],
    /// Global scale applied to the derived bracket; `None` when it is zero
    /// and any scale fits.
    pub lambda: Option<Rational>,
    pub matched_coefficients: usize,
    pub total_coefficients: usize,
    pub pairs: Vec<PairComparison>,
    /// Checks on the r-derived bracket; these decide the overall verdict.
    pub derived_checks: Vec<CheckReport>,
    /// Checks on the tabulated bracket, recorded as findings.
    pub table_checks: Vec<CheckReport>,
    pub table_sphere: SphereReport,
    pub derived_sphere: SphereReport,
}

impl ConformanceReport {
    pub fn derived_passes(&self) -> bool {
        self.derived_checks.iter().all(CheckReport::passed)
    }

    pub fn full_agreement(&self) -> bool {
        self.pairs.iter().all(|p| p.agree)
    }
}

/// All `(pair, monomial)` slots where either bracket has a coefficient.
fn coefficient_slots(
    a: &PolyBracket,
    b: &PolyBracket,
) -> Vec<(usize, usize, Monomial, Rational, Rational)> {
    let mut out = Vec::new();
    for ((i, j, pa), (_, _, pb)) in a.table().into_iter().zip(b.table()) {
        let monos: BTreeSet<Monomial> = pa
            .terms()
            .chain(pb.terms())
            .map(|(m, _)| m.clone())
            .collect();
        for m in monos {
            let (ca, cb) = (pa.coeff(&m), pb.coeff(&m));
            out.push((i, j, m, ca, cb));
        }
    }
    out
}

/// The scale `λ` making `λ·derived` agree with `table` on the most
/// coefficients; ties go to the smallest candidate.
fn fit_lambda(slots: &[(usize, usize, Monomial, Rational, Rational)]) -> Option<(Rational, usize)> {
    let candidates: BTreeSet<Rational> = slots
        .iter()
        .filter(|(_, _, _, d, t)| !d.is_zero() && !t.is_zero())
        .map(|(_, _, _, d, t)| t / d)
        .collect();
    let score = |lambda: &Rational| {
        slots
            .iter()
            .filter(|(_, _, _, d, t)| &(d * lambda) == t)
            .count()
    };
    let mut best: Option<(Rational, usize)> = None;
    for c in candidates {
        let s = score(&c);
        if best.as_ref().is_none_or(|(_, bs)| s > *bs) {
            best = Some((c, s));
        }
    }
    best
}

pub fn quaternion_conformance(
    a: &Rational,
    b: &Rational,
    c: &Rational,
) -> Result<ConformanceReport> {
    let spec = quaternions();
    let r = quaternion_r(a, b, c);
    let derived = derive_bracket_from_r(&spec, &r)?;
    let table = quaternion_table(a, b, c);
    let slots = coefficient_slots(&derived, &table);
    let (lambda, matched) = match fit_lambda(&slots) {
        Some((l, m)) => (Some(l), m),
        None if derived.is_zero() => (None, slots.iter().filter(|s| s.4.is_zero()).count()),
        None => (
            Some(Rational::one()),
            slots.iter().filter(|s| s.3 == s.4).count(),
        ),
    };
    let scale = lambda.clone().unwrap_or_else(Rational::one);
    let pairs = derived
        .table()
        .into_iter()
        .zip(table.table())
        .map(|((i, j, d), (_, _, t))| {
            let scaled = d.scale(&scale);
            let difference = &t - &scaled;
            PairComparison {
                pair: (i + 1, j + 1),
                agree: difference.is_zero(),
                derived: scaled,
                table: t,
                difference,
            }
        })
        .collect();
    let derived_checks = vec![
        jacobiator(&derived),
        compat_direct(&spec, &derived)?,
        mybe_check(&spec, &r)?,
    ];
    let table_checks = vec![
        jacobiator(&table),
        schouten_operator_check(&table)?,
        compat_direct(&spec, &table)?,
    ];
    Ok(ConformanceReport {
        params: [a.clone(), b.clone(), c.clone()],
        lambda,
        matched_coefficients: matched,
        total_coefficients: slots.len(),
        pairs,
        derived_checks,
        table_checks,
        table_sphere: sphere_poisson_check(&table)?,
        derived_sphere: sphere_poisson_check(&derived)?,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SphereEntry {
    /// 1-based coordinate index `i` of `{N, x^i}`.
    pub index: usize,
    pub bracket: Polynomial,
    pub identically_zero: bool,
    /// Quotient by `N - 1` when it divides.
    pub quotient_by_norm_minus_one: Option<Polynomial>,
    pub values: Vec<Rational>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SphereReport {
    pub points: Vec<[Rational; 4]>,
    pub entries: Vec<SphereEntry>,
    /// Every `{N, x^i}` is zero or divisible by `N - 1`.
    pub evidence: bool,
}

/// Rational points on the unit sphere of `H` where `{N, x^i}` is sampled.
pub fn sphere_points() -> Vec<[Rational; 4]> {
    let (z, o, a, b) = (q(0, 1), q(1, 1), q(3, 5), q(4, 5));
    vec![
        [o.clone(), z.clone(), z.clone(), z.clone()],
        [a.clone(), b.clone(), z.clone(), z.clone()],
        [a.clone(), z.clone(), b.clone(), z.clone()],
        [z.clone(), a, z, b],
    ]
}

/// With `N = Σ (x^i)²`, computes `p_i = {N, x^i}` and reports whether each
/// vanishes identically or is divisible by `N - 1`, plus its values at
/// [`sphere_points`].
pub fn sphere_poisson_check(bracket: &PolyBracket) -> Result<SphereReport> {
    if bracket.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: bracket.dim(),
        });
    }
    let norm = (0..4).fold(Polynomial::zero(4), |acc, i| {
        &acc + &(&Polynomial::var(4, i) * &Polynomial::var(4, i))
    });
    let norm_minus_one = &norm - &Polynomial::constant(4, Rational::one());
    let points = sphere_points();
    let mut entries = Vec::new();
    for i in 0..4 {
        let p = bracket_poly(bracket, &norm, &Polynomial::var(4, i))?;
        let quotient = p.divide_exact(&norm_minus_one)?;
        let values = points.iter().map(|pt| p.eval(pt)).collect::<Result<_>>()?;
        entries.push(SphereEntry {
            index: i + 1,
            identically_zero: p.is_zero(),
            quotient_by_norm_minus_one: quotient,
            bracket: p,
            values,
        });
    }
    let evidence = entries
        .iter()
        .all(|e| e.identically_zero || e.quotient_by_norm_minus_one.is_some());
    Ok(SphereReport {
        points,
        entries,
        evidence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_parameters_agree() {
        let z = q(0, 1);
        let rep = quaternion_conformance(&z, &z, &z).unwrap();
        assert!(rep.lambda.is_none());
        assert!(rep.full_agreement());
        assert!(rep.derived_passes());
        assert!(rep.table_sphere.evidence);
    }

    #[test]
    fn derived_bracket_passes_everywhere() {
        for (a, b, c) in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 2, 3)] {
            let rep = quaternion_conformance(&q(a, 1), &q(b, 1), &q(c, 1)).unwrap();
            assert!(rep.derived_passes(), "({a},{b},{c})");
            assert_eq!(rep.pairs.len(), 6);
            assert!(rep.lambda.is_some());
            assert_eq!(rep.table_sphere.entries.len(), 4);
        }
    }

    #[test]
    fn sphere_examples() {
        let zero = sphere_poisson_check(&PolyBracket::zero(4)).unwrap();
        assert!(zero.evidence);
        assert!(zero.entries.iter().all(|e| e.identically_zero));
        let x = |i| Polynomial::var(4, i);
        let b = PolyBracket::from_table(4, [(0, 1, &x(2) * &x(3))]).unwrap();
        let rep = sphere_poisson_check(&b).unwrap();
        assert!(!rep.evidence);
        // {N, x^1} = 2 x^2 {x^2, x^1} = -2 x^2 x^3 x^4
        let expected = (&(&x(1) * &x(2)) * &x(3)).scale(&q(-2, 1));
        assert_eq!(rep.entries[0].bracket, expected);
        assert!(rep
            .entries
            .iter()
            .flat_map(|e| &e.values)
            .all(Rational::is_zero));
        assert!(sphere_poisson_check(&PolyBracket::zero(3)).is_err());
    }
}
