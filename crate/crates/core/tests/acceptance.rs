//! Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. All comparisons are exact.

mod support;

use std::process::ExitCode;

use quadbracket::bialgebra::{
    affine_restriction, affine_restriction_at_unit, bialgebra_axioms_check,
    cocommutator_from_bracket, cocommutator_to_linear_bracket, pencil_check, translation_oracle,
};
use quadbracket::bracket::{
    bracket_to_delta, compat_direct, derivation_check, extension_independence, jacobiator,
    schouten_operator_check, translate,
};
use quadbracket::catalog::{self, quaternion_conformance, KEYS};
use quadbracket::coboundary::{
    ad_invariance_check, cybe_check, derive_bracket_from_r, element_schouten, mybe_check,
};
use quadbracket::exact::q;
use quadbracket::{AlgebraSpec, PolyBracket, Polynomial, RMatrix, Rational, Tensor3};

const SEED: u64 = 0x5eed_2026;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

type Criterion = fn() -> Result<Outcome, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn c1_first_column() -> Result<Outcome, String> {
    let spec = catalog::first_column(3);
    let b = catalog::first_column_bracket(3);
    let compat = compat_direct(&spec, &b).map_err(err)?;
    let jac = jacobiator(&b);
    Ok(outcome(
        compat.passed() && jac.passed(),
        format!(
            "compat_direct {}, jacobiator {}",
            compat.verdict, jac.verdict
        ),
    ))
}

fn c2_solvable2() -> Result<Outcome, String> {
    let spec = catalog::solvable2();
    let r = catalog::solvable2_r();
    let cybe = cybe_check(&spec, &r).map_err(err)?;
    let b = derive_bracket_from_r(&spec, &r).map_err(err)?;
    let jac = jacobiator(&b);
    let compat = compat_direct(&spec, &b).map_err(err)?;
    Ok(outcome(
        cybe.passed() && jac.passed() && compat.passed() && !b.is_zero(),
        format!(
            "[[r,r]] = 0: {}, derived jacobiator {}, compat_direct {}",
            cybe.passed(),
            jac.verdict,
            compat.verdict
        ),
    ))
}

/// `2·Σ_σ sgn(σ) σ(i⊗j⊗k)` on the quaternion basis `1, i, j, k`.
fn quaternion_ijk_expected() -> Tensor3 {
    let mut t = Tensor3::zeros(4);
    for (perm, sign) in [
        ([1, 2, 3], 2),
        ([2, 3, 1], 2),
        ([3, 1, 2], 2),
        ([2, 1, 3], -2),
        ([1, 3, 2], -2),
        ([3, 2, 1], -2),
    ] {
        t.set(perm, q(sign, 1));
    }
    t
}

fn c3_quaternions() -> Result<Outcome, String> {
    let spec = catalog::quaternions();
    let mut points: Vec<(i64, i64, i64)> = Vec::new();
    for a in -1..=1 {
        for b in -1..=1 {
            for c in -1..=1 {
                points.push((a, b, c));
            }
        }
    }
    points.push((1, 2, 3));
    let mut failing = Vec::new();
    for &(a, b, c) in &points {
        let r = catalog::quaternion_r(&q(a, 1), &q(b, 1), &q(c, 1));
        if !mybe_check(&spec, &r).map_err(err)?.passed() {
            failing.push((a, b, c));
        }
    }
    let s = element_schouten(&spec, &RMatrix::basis_wedge(4, 1, 2)).map_err(err)?;
    let tensor_ok = s == quaternion_ijk_expected();
    Ok(outcome(
        failing.is_empty() && tensor_ok,
        format!(
            "mybe passes on {}/{} parameter points, [[i∧j, i∧j]] matches: {tensor_ok}",
            points.len() - failing.len(),
            points.len()
        ),
    ))
}

struct Agreement {
    name: &'static str,
    total: usize,
    agree: usize,
    passes: usize,
}

impl Agreement {
    fn new(name: &'static str) -> Self {
        Agreement {
            name,
            total: 0,
            agree: 0,
            passes: 0,
        }
    }

    fn record(&mut self, left: bool, right: bool) {
        self.total += 1;
        self.agree += usize::from(left == right);
        self.passes += usize::from(left);
    }

    fn ok(&self) -> bool {
        self.total >= 100 && self.agree == self.total
    }

    fn describe(&self) -> String {
        format!(
            "{} {}/{} agree ({} passing)",
            self.name, self.agree, self.total, self.passes
        )
    }
}

fn c4_equivalences() -> Result<Outcome, String> {
    let mut rng = support::rng(SEED);
    let instances = 120;
    let mut schou = Agreement::new("jacobi~schouten");
    let mut diff = Agreement::new("compat~derivation");
    let mut my = Agreement::new("jacobi(derived)~mybe");
    let mut ad = Agreement::new("mybe~ad-invariance");
    for _ in 0..instances {
        let spec = support::random_algebra(&mut rng);
        let b = support::random_bracket(&mut rng, &spec);
        schou.record(
            jacobiator(&b).passed(),
            schouten_operator_check(&b).map_err(err)?.passed(),
        );

        let b = support::random_bracket(&mut rng, &spec);
        let delta = bracket_to_delta(&b).map_err(err)?;
        diff.record(
            compat_direct(&spec, &b).map_err(err)?.passed(),
            derivation_check(&spec, &delta).map_err(err)?.passed(),
        );

        let r = support::random_r(&mut rng, spec.dim());
        let derived = derive_bracket_from_r(&spec, &r).map_err(err)?;
        my.record(
            jacobiator(&derived).passed(),
            mybe_check(&spec, &r).map_err(err)?.passed(),
        );

        let unital = support::random_unital_algebra(&mut rng);
        let r = support::random_r(&mut rng, unital.dim());
        ad.record(
            mybe_check(&unital, &r).map_err(err)?.passed(),
            ad_invariance_check(&unital, &r).map_err(err)?.passed(),
        );
    }
    let all = [&schou, &diff, &my, &ad];
    Ok(outcome(
        all.iter().all(|a| a.ok()),
        all.iter()
            .map(|a| a.describe())
            .collect::<Vec<_>>()
            .join("; "),
    ))
}

fn c5_extension_independence() -> Result<Outcome, String> {
    let mut rng = support::rng(SEED ^ 5);
    let pairs = 60;
    let mut identical = 0;
    for _ in 0..pairs {
        let spec = support::random_algebra(&mut rng);
        let b = support::random_bracket(&mut rng, &spec);
        let e = support::random_antisymmetric_extension(&mut rng, spec.dim());
        identical += usize::from(extension_independence(&b, &e).map_err(err)?.passed());
    }
    Ok(outcome(
        identical == pairs,
        format!("{identical}/{pairs} (B, E) pairs identical"),
    ))
}

/// Every compatible quadratic bracket the catalog offers on a unital algebra.
fn catalog_compatible_brackets() -> Result<Vec<(String, AlgebraSpec, PolyBracket)>, String> {
    let mut out = Vec::new();
    let mut consider = |label: String, spec: &AlgebraSpec, b: PolyBracket| -> Result<(), String> {
        if spec.find_unit().is_some() && compat_direct(spec, &b).map_err(err)?.passed() {
            out.push((label, spec.clone(), b));
        }
        Ok(())
    };
    for &(key, params, _) in KEYS {
        let param_sets: Vec<Vec<Rational>> = match params {
            "" => vec![vec![]],
            "a,b,c" => [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 2, 3)]
                .iter()
                .map(|&(a, b, c)| vec![q(a, 1), q(b, 1), q(c, 1)])
                .collect(),
            "n" => (1..=3).map(|n| vec![q(n, 1)]).collect(),
            _ => (1..=2).map(|k| vec![q(k, 1)]).collect(),
        };
        for params in param_sets {
            let entry = catalog::build(key, &params).map_err(err)?;
            let label = format!("{key}{params:?}");
            for (name, b) in &entry.brackets {
                consider(format!("{label}/{name}"), &entry.spec, b.clone())?;
            }
            for (name, r) in &entry.r_matrices {
                let b = derive_bracket_from_r(&entry.spec, r).map_err(err)?;
                consider(format!("{label}/{name}"), &entry.spec, b)?;
            }
        }
    }
    Ok(out)
}

fn c6_bialgebra() -> Result<Outcome, String> {
    let brackets = catalog_compatible_brackets()?;
    let mut failures = Vec::new();
    for (label, spec, b) in &brackets {
        let d = cocommutator_from_bracket(spec, b).map_err(err)?;
        let axioms = bialgebra_axioms_check(spec, &d).map_err(err)?;
        let unit = spec.find_unit().expect("filtered to unital");
        let kills_unit = d.apply(&unit).is_zero();
        if !axioms.passed() || !kills_unit {
            failures.push(label.clone());
        }
    }
    Ok(outcome(
        failures.is_empty() && !brackets.is_empty(),
        format!(
            "{}/{} compatible catalog brackets pass with Δ(u) = 0{}",
            brackets.len() - failures.len(),
            brackets.len(),
            if failures.is_empty() {
                String::new()
            } else {
                format!("; failing {failures:?}")
            }
        ),
    ))
}

fn c7_translation() -> Result<Outcome, String> {
    let ts = [q(1, 1), q(2, 1), q(5, 7)];
    let quaternions = catalog::quaternions();
    let heis = catalog::unitalize(&catalog::heisenberg());
    let cases = [
        (
            "quaternion_r(1,2,3)",
            quaternions.clone(),
            catalog::quaternion_r(&q(1, 1), &q(2, 1), &q(3, 1)),
        ),
        (
            "quaternion_r(0,0,1)",
            quaternions,
            catalog::quaternion_r(&q(0, 1), &q(0, 1), &q(1, 1)),
        ),
        ("heisenberg_unital_r", heis, RMatrix::basis_wedge(4, 1, 2)),
    ];
    let mut notes = Vec::new();
    let mut ok = true;
    for (label, spec, r) in cases {
        let b = derive_bracket_from_r(&spec, &r).map_err(err)?;
        let oracle = translation_oracle(&spec, &b, &ts).map_err(err)?;
        let unit = spec.find_unit().ok_or("no unit")?;
        let no_constant = ts
            .iter()
            .map(|t| translate(&b, &unit, t).map(|m| !m.has_constant_part()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?
            .into_iter()
            .all(|v| v);
        let linear =
            cocommutator_to_linear_bracket(&cocommutator_from_bracket(&spec, &b).map_err(err)?);
        let pencil = pencil_check(&spec, &b, &linear, &ts, true).map_err(err)?;
        ok &= oracle.passed() && no_constant && pencil.passed();
        notes.push(format!(
            "{label}: translation {}, constant part zero {no_constant}, pencil {}",
            oracle.verdict, pencil.verdict
        ));
    }
    Ok(outcome(ok, notes.join("; ")))
}

/// `{x^p, x^q} = 2 Σ_{l,i} (r^{pl} c^q_{li} + r^{lq} c^p_{li}) x^i` with `c`
/// the associative constants, in `n` variables.
fn nilpotent_formula(n: usize, c: &[Rational], r: &[Rational], p: usize, qq: usize) -> Polynomial {
    let mut out = Polynomial::zero(n);
    for i in 0..n {
        let mut coeff = q(0, 1);
        for l in 0..n {
            coeff += &(&r[p * n + l] * &c[(l * n + i) * n + qq]);
            coeff += &(&r[l * n + qq] * &c[(l * n + i) * n + p]);
        }
        out = &out + &Polynomial::var(n, i).scale(&(&coeff * &q(2, 1)));
    }
    out
}

fn restriction_matches_formula(spec: &AlgebraSpec, r: &RMatrix) -> Result<bool, String> {
    let n = spec.dim();
    let unital = catalog::unitalize(spec);
    let map: Vec<usize> = (1..=n).collect();
    let big_r = r.embed(n + 1, &map).map_err(err)?;
    let b = derive_bracket_from_r(&unital, &big_r).map_err(err)?;
    let restricted = affine_restriction_at_unit(&unital, &b)
        .map_err(err)?
        .bracket;
    let mut ok = !restricted.has_quadratic_part() && !restricted.has_constant_part();
    for p in 0..n {
        for qq in 0..n {
            ok &= restricted.pair(p, qq)
                == nilpotent_formula(n, spec.structure_constants(), r.tensor().coeffs(), p, qq);
        }
    }
    Ok(ok)
}

fn c8_nilpotent() -> Result<Outcome, String> {
    let heis = catalog::heisenberg();
    let r = RMatrix::basis_wedge(3, 0, 1);
    let plain_zero = derive_bracket_from_r(&heis, &r).map_err(err)?.is_zero();

    let unital = catalog::unitalize(&heis);
    let b = derive_bracket_from_r(&unital, &r.embed(4, &[1, 2, 3]).map_err(err)?).map_err(err)?;
    let restricted = affine_restriction(&b, 0).map_err(err)?.bracket;
    let (xp, xq) = (Polynomial::var(3, 0), Polynomial::var(3, 1));
    let literal = restricted.pair(0, 1).is_zero()
        && restricted.pair(0, 2) == -&xp
        && restricted.pair(1, 2) == -&xq;
    let formula = restriction_matches_formula(&heis, &r)?;

    let mut rng = support::rng(SEED ^ 8);
    let instances = 20;
    let mut random_ok = 0;
    for _ in 0..instances {
        let (spec, _) = support::random_two_step(&mut rng);
        let r = support::random_r(&mut rng, spec.dim());
        random_ok += usize::from(restriction_matches_formula(&spec, &r)?);
    }
    Ok(outcome(
        plain_zero && literal && formula && random_ok == instances,
        format!(
            "zero bracket on the nilpotent algebra {plain_zero}, restriction literal {literal}, \
             formula {formula}, random two-step {random_ok}/{instances}"
        ),
    ))
}

fn c9_conformance() -> Result<Outcome, String> {
    let mut ok = true;
    let mut notes = Vec::new();
    for (a, b, c) in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 2, 3)] {
        let rep = quaternion_conformance(&q(a, 1), &q(b, 1), &q(c, 1)).map_err(err)?;
        let complete = rep.pairs.len() == 6
            && rep.table_sphere.entries.len() == 4
            && rep.derived_sphere.entries.len() == 4;
        ok &= complete && rep.derived_passes();
        let lambda = rep
            .lambda
            .as_ref()
            .map_or("any".to_string(), |l| l.to_string());
        notes.push(format!(
            "({a},{b},{c}): derived {}, λ = {lambda}, {}/{} coefficients match, table jacobi {}, table sphere evidence {}",
            if rep.derived_passes() { "pass" } else { "fail" },
            rep.matched_coefficients,
            rep.total_coefficients,
            rep.table_checks[0].verdict,
            rep.table_sphere.evidence
        ));
    }
    Ok(outcome(ok, notes.join("; ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 9] = [
        (
            "first-column bracket is compatible and Poisson",
            c1_first_column,
        ),
        (
            "solvable2 r-matrix solves CYBE; derived bracket Poisson and compatible",
            c2_solvable2,
        ),
        (
            "quaternion r-matrices satisfy MYBE; [[i∧j, i∧j]] tensor",
            c3_quaternions,
        ),
        ("oracle equivalence suites", c4_equivalences),
        (
            "Schouten expression independent of the extension",
            c5_extension_independence,
        ),
        ("cocommutators satisfy the bialgebra axioms", c6_bialgebra),
        (
            "translation equals B + tΔ*; pencil compatible",
            c7_translation,
        ),
        ("nilpotent example and restriction formula", c8_nilpotent),
        ("quaternion conformance reports", c9_conformance),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (ok, detail) = match run() {
            Ok(o) => (o.ok, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        failed += usize::from(!ok);
        println!(
            "{} [{}] {name}: {detail}",
            if ok { "PASS" } else { "FAIL" },
            i + 1
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
