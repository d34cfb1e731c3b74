//! Ready-made algebras, r-matrices and brackets, addressable by key.

mod conformance;

pub use conformance::{
    quaternion_conformance, sphere_poisson_check, ConformanceReport, PairComparison, SphereReport,
};

use crate::algebra::AlgebraSpec;
use crate::bracket::PolyBracket;
use crate::coboundary::RMatrix;
use crate::error::{Error, Result};
use crate::exact::{q, Polynomial, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    pub key: String,
    pub spec: AlgebraSpec,
    pub unit: Option<Vec<Rational>>,
    pub brackets: Vec<(String, PolyBracket)>,
    pub r_matrices: Vec<(String, RMatrix)>,
    pub description: &'static str,
}

/// `(key, parameter names, description)` for every buildable key.
pub const KEYS: &[(&str, &str, &str)] = &[
    ("quaternions", "", "quaternion algebra, basis 1,i,j,k"),
    (
        "quaternion_r",
        "a,b,c",
        "r = a i∧j + b i∧k + c j∧k on the quaternions",
    ),
    (
        "quaternion_table",
        "a,b,c",
        "tabulated quadratic bracket on the quaternions",
    ),
    (
        "first_column",
        "n",
        "first-column matrix algebra with {x^i,x^j} = x^i x^j",
    ),
    (
        "first_column_bracket",
        "n",
        "the bracket {x^i,x^j} = x^i x^j (i<j) alone",
    ),
    ("solvable2", "", "span{E11, E12} with r = a∧b"),
    ("solvable2_r", "", "r = a∧b on span{E11, E12}"),
    (
        "heisenberg",
        "",
        "Heisenberg algebra with a*b = [a,b]/2 and r = p∧q",
    ),
    ("heisenberg_r", "", "r = p∧q on the Heisenberg *-algebra"),
    ("heisenberg_unital", "", "<1> ⊕ Heisenberg with r = p∧q"),
    ("heisenberg_unital_r", "", "r = p∧q inside <1> ⊕ Heisenberg"),
    ("mat", "k", "full matrix algebra Mat(k)"),
];

fn int_param(key: &str, params: &[Rational], min: i64, max: i64) -> Result<usize> {
    let bad = |message: String| Error::BadParams {
        key: key.to_string(),
        message,
    };
    match params {
        [p] if p.is_integer() => {
            let v: i64 = p
                .numer()
                .try_into()
                .map_err(|_| bad(format!("{p} out of range")))?;
            if v < min || v > max {
                return Err(bad(format!(
                    "expected an integer in {min}..={max}, got {v}"
                )));
            }
            Ok(v as usize)
        }
        _ => Err(bad("expected one integer parameter".into())),
    }
}

fn abc(key: &str, params: &[Rational]) -> Result<(Rational, Rational, Rational)> {
    match params {
        [a, b, c] => Ok((a.clone(), b.clone(), c.clone())),
        _ => Err(Error::BadParams {
            key: key.to_string(),
            message: "expected three parameters a,b,c".into(),
        }),
    }
}

fn no_params(key: &str, params: &[Rational]) -> Result<()> {
    if params.is_empty() {
        Ok(())
    } else {
        Err(Error::BadParams {
            key: key.to_string(),
            message: "takes no parameters".into(),
        })
    }
}

fn entry(
    key: &str,
    spec: AlgebraSpec,
    brackets: Vec<(&str, PolyBracket)>,
    r_matrices: Vec<(&str, RMatrix)>,
    description: &'static str,
) -> CatalogEntry {
    CatalogEntry {
        key: key.to_string(),
        unit: spec.find_unit(),
        spec,
        brackets: brackets
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
        r_matrices: r_matrices
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
        description,
    }
}

pub fn build(key: &str, params: &[Rational]) -> Result<CatalogEntry> {
    Ok(match key {
        "quaternions" => {
            no_params(key, params)?;
            entry(key, quaternions(), vec![], vec![], "quaternion algebra")
        }
        "quaternion_r" => {
            let (a, b, c) = abc(key, params)?;
            let r = quaternion_r(&a, &b, &c);
            entry(
                key,
                quaternions(),
                vec![],
                vec![("quaternion_r", r)],
                "quaternion algebra with a constant r-matrix",
            )
        }
        "quaternion_table" => {
            let (a, b, c) = abc(key, params)?;
            let t = quaternion_table(&a, &b, &c);
            entry(
                key,
                quaternions(),
                vec![("quaternion_table", t)],
                vec![],
                "quaternion algebra with the tabulated quadratic bracket",
            )
        }
        "first_column" | "first_column_bracket" => {
            let n = int_param(key, params, 1, 8)?;
            let b = first_column_bracket(n);
            entry(
                key,
                first_column(n),
                vec![("first_column_bracket", b)],
                vec![],
                "first-column matrix algebra",
            )
        }
        "solvable2" | "solvable2_r" => {
            no_params(key, params)?;
            entry(
                key,
                solvable2(),
                vec![],
                vec![("solvable2_r", solvable2_r())],
                "two-dimensional solvable matrix algebra",
            )
        }
        "heisenberg" | "heisenberg_r" => {
            no_params(key, params)?;
            let r = RMatrix::basis_wedge(3, 0, 1);
            entry(
                key,
                heisenberg(),
                vec![],
                vec![("heisenberg_r", r)],
                "Heisenberg two-step nilpotent algebra",
            )
        }
        "heisenberg_unital" | "heisenberg_unital_r" => {
            no_params(key, params)?;
            let r = RMatrix::basis_wedge(4, 1, 2);
            entry(
                key,
                unitalize(&heisenberg()),
                vec![],
                vec![("heisenberg_unital_r", r)],
                "Heisenberg algebra with an adjoined unit",
            )
        }
        "mat" => {
            let k = int_param(key, params, 1, 2)?;
            entry(key, mat(k), vec![], vec![], "full matrix algebra")
        }
        other => return Err(Error::UnknownCatalogKey(other.to_string())),
    })
}

// quaternion basis: 0 = 1, 1 = i, 2 = j, 3 = k
const QUATERNION_TABLE: [[(i64, usize); 4]; 4] = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0)],
];

pub fn quaternions() -> AlgebraSpec {
    AlgebraSpec::from_fn("quaternions", 4, |i, j, k| {
        let (s, e) = QUATERNION_TABLE[i][j];
        if e == k {
            Rational::from_integer(s)
        } else {
            Rational::zero()
        }
    })
}

/// `r = a·i∧j + b·i∧k + c·j∧k`.
pub fn quaternion_r(a: &Rational, b: &Rational, c: &Rational) -> RMatrix {
    RMatrix::basis_wedge(4, 1, 2)
        .scale(a)
        .checked_add(&RMatrix::basis_wedge(4, 1, 3).scale(b))
        .and_then(|r| r.checked_add(&RMatrix::basis_wedge(4, 2, 3).scale(c)))
        .expect("same dimension")
}

/// The six tabulated brackets on `H`, transcribed literally (variables
/// `x^1..x^4` dual to `1, i, j, k`).
pub fn quaternion_table(a: &Rational, b: &Rational, c: &Rational) -> PolyBracket {
    let x = |i: usize| Polynomial::var(4, i - 1);
    let s = |p: &Polynomial, v: &Rational| p.scale(v);
    let sq = |i: usize| &x(i) * &x(i);
    let rows = [
        // x^2(b x^3 − a x^4) + c((x^3)^2 + (x^4)^2)
        (
            1,
            2,
            &(&x(2) * &(&s(&x(3), b) - &s(&x(4), a))) + &s(&(&sq(3) + &sq(4)), c),
        ),
        // −x^3(c x^2 + a x^4) − b((x^2)^2 + (x^4)^2)
        (
            1,
            3,
            &(-&(&x(3) * &(&s(&x(2), c) + &s(&x(4), a)))) - &s(&(&sq(2) + &sq(4)), b),
        ),
        // x^4(−c x^2 + b x^3) + a((x^2)^2 + (x^3)^2)
        (
            1,
            4,
            &(&x(4) * &(&s(&x(3), b) - &s(&x(2), c))) + &s(&(&sq(2) + &sq(3)), a),
        ),
        // x^1(−b x^2 + c x^3)
        (2, 3, &x(1) * &(&s(&x(3), c) - &s(&x(2), b))),
        // −x^1(a x^2 + c x^4)
        (2, 4, -&(&x(1) * &(&s(&x(2), a) + &s(&x(4), c)))),
        // x^1(a x^3 − b x^4)
        (3, 4, &x(1) * &(&s(&x(3), a) - &s(&x(4), b))),
    ];
    PolyBracket::from_table(4, rows.into_iter().map(|(i, j, p)| (i - 1, j - 1, p)))
        .expect("quadratic entries")
}

/// Matrices supported on the first column: `f_i = E_{i1}`,
/// `f_i · f_j = δ_{j1} f_i`.
pub fn first_column(n: usize) -> AlgebraSpec {
    AlgebraSpec::from_fn(format!("first_column({n})"), n, |i, j, k| {
        if j == 0 && k == i {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// `{x^i, x^j} = x^i x^j` for `i < j`.
pub fn first_column_bracket(n: usize) -> PolyBracket {
    let entries = (0..n).flat_map(|i| {
        (i + 1..n).map(move |j| (i, j, &Polynomial::var(n, i) * &Polynomial::var(n, j)))
    });
    PolyBracket::from_table(n, entries).expect("quadratic entries")
}

/// `span{a = E11, b = E12}` inside 2×2 matrices; `[a, b] = b`.
pub fn solvable2() -> AlgebraSpec {
    AlgebraSpec::from_fn("solvable2", 2, |i, j, k| match (i, j, k) {
        (0, 0, 0) | (0, 1, 1) => Rational::one(),
        _ => Rational::zero(),
    })
}

pub fn solvable2_r() -> RMatrix {
    RMatrix::basis_wedge(2, 0, 1)
}

/// `<p, q, z>` with `[p, q] = z` and product `a * b = [a, b] / 2`.
pub fn heisenberg() -> AlgebraSpec {
    let mut f = vec![Rational::zero(); 27];
    // [p, q] = z with p, q, z at indices 0, 1, 2
    f[5] = Rational::one();
    f[11] = -Rational::one();
    two_step_nilpotent("heisenberg", 3, f).expect("Heisenberg constants are two-step")
}

/// Associative product `a * b = [a, b] / 2` from Lie constants
/// `[e_i, e_j] = Σ_k f[i][j][k] e_k` of a Lie algebra with `[[g, g], g] = 0`.
pub fn two_step_nilpotent(name: &str, n: usize, f: Vec<Rational>) -> Result<AlgebraSpec> {
    if f.len() != n.pow(3) {
        return Err(Error::DimensionMismatch {
            expected: n.pow(3),
            found: f.len(),
        });
    }
    let at = |i: usize, j: usize, k: usize| &f[(i * n + j) * n + k];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if at(i, j, k) != &-at(j, i, k) {
                    return Err(Error::InvalidLieConstants(format!(
                        "[e{},e{}] is not antisymmetric",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
    }
    // [[e_i, e_j], e_k] = Σ_m f[i][j][m] [e_m, e_k]; two-step forces this to
    // vanish, which also gives the Jacobi identity
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for out in 0..n {
                    let v: Rational = (0..n).map(|m| at(i, j, m) * at(m, k, out)).sum();
                    if !v.is_zero() {
                        return Err(Error::NotTwoStep(i + 1, j + 1, k + 1));
                    }
                }
            }
        }
    }
    let half = q(1, 2);
    let spec = AlgebraSpec::new(name, n, f.iter().map(|v| v * &half).collect())?;
    debug_assert!(spec.is_associative());
    Ok(spec)
}

/// `A⁺ = <1> ⊕ A`, with the adjoined unit as basis vector 0 and `e_i ↦ e_{i+1}`.
pub fn unitalize(spec: &AlgebraSpec) -> AlgebraSpec {
    let n = spec.dim();
    AlgebraSpec::from_fn(format!("{}+1", spec.name()), n + 1, |i, j, k| {
        match (i, j) {
            (0, _) => (j == k).then(Rational::one).unwrap_or_else(Rational::zero),
            (_, 0) => (i == k).then(Rational::one).unwrap_or_else(Rational::zero),
            _ if k == 0 => Rational::zero(),
            _ => spec.constant(i - 1, j - 1, k - 1).clone(),
        }
    })
}

/// `Mat(k)` with basis `E_{ab}` at index `a·k + b`.
pub fn mat(k: usize) -> AlgebraSpec {
    AlgebraSpec::from_fn(format!("mat({k})"), k * k, |x, y, z| {
        let (a, b) = (x / k, x % k);
        let (c, d) = (y / k, y % k);
        if b == c && z == a * k + d {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}
