//! Random instances shared by the integration tests. Everything is driven by
//! a seeded ChaCha generator so runs are reproducible.

#![allow(dead_code)]

use quadbracket::catalog::{self, two_step_nilpotent};
use quadbracket::exact::q;
use quadbracket::{AlgebraSpec, Operator2, PolyBracket, Polynomial, RMatrix, Rational};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small rational: numerator in -3..=3, denominator 1 or 2.
pub fn small(rng: &mut ChaCha8Rng) -> Rational {
    q(rng.gen_range(-3..=3), *[1, 1, 2].choose(rng).unwrap())
}

pub fn small_nonzero(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let v = small(rng);
        if !v.is_zero() {
            return v;
        }
    }
}

pub type Matrix = Vec<Vec<Rational>>;

/// Gauss-Jordan inverse; `None` for singular input.
pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { q(1, 1) } else { q(0, 1) }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip().expect("nonzero pivot");
        for v in m[col].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (v, p) in m[r].iter_mut().zip(&pivot_row) {
                    *v = &*v - &(&f * p);
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Random invertible matrix with small entries, with its inverse.
pub fn invertible(rng: &mut ChaCha8Rng, n: usize) -> (Matrix, Matrix) {
    loop {
        let p: Matrix = (0..n)
            .map(|_| (0..n).map(|_| q(rng.gen_range(-2..=2), 1)).collect())
            .collect();
        if let Some(inv) = inverse(&p) {
            return (p, inv);
        }
    }
}

/// Structure constants of a bilinear map `e_i·e_j = Σ_k m[i][j][k] e_k`
/// in the basis `f_a = Σ_i p[i][a] e_i`.
pub fn transform_constants(n: usize, m: &[Rational], p: &Matrix, pinv: &Matrix) -> Vec<Rational> {
    let mut out = vec![q(0, 1); n * n * n];
    for a in 0..n {
        for b in 0..n {
            for i in 0..n {
                if p[i][a].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if p[j][b].is_zero() {
                        continue;
                    }
                    let w = &p[i][a] * &p[j][b];
                    for k in 0..n {
                        let c = &m[(i * n + j) * n + k];
                        if c.is_zero() {
                            continue;
                        }
                        for (t, row) in pinv.iter().enumerate() {
                            out[(a * n + b) * n + t] += &(&w * c) * &row[k];
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn change_basis(spec: &AlgebraSpec, p: &Matrix, pinv: &Matrix) -> AlgebraSpec {
    let n = spec.dim();
    let m = transform_constants(n, spec.structure_constants(), p, pinv);
    AlgebraSpec::new(format!("{}'", spec.name()), n, m).unwrap()
}

fn table(name: &str, n: usize, products: &[(usize, usize, usize, i64)]) -> AlgebraSpec {
    AlgebraSpec::from_fn(name, n, |i, j, k| {
        products
            .iter()
            .find(|&&(a, b, c, _)| (a, b, c) == (i, j, k))
            .map_or(q(0, 1), |&(_, _, _, v)| q(v, 1))
    })
}

/// Associative algebras of dimension at most three, unital ones first.
pub fn unital_pool() -> Vec<AlgebraSpec> {
    vec![
        catalog::mat(1),
        table("k2", 2, &[(0, 0, 0, 1), (1, 1, 1, 1)]),
        table(
            "complex",
            2,
            &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, -1)],
        ),
        table("dual", 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]),
        table("k3", 3, &[(0, 0, 0, 1), (1, 1, 1, 1), (2, 2, 2, 1)]),
        table(
            "truncated",
            3,
            &[
                (0, 0, 0, 1),
                (0, 1, 1, 1),
                (1, 0, 1, 1),
                (0, 2, 2, 1),
                (2, 0, 2, 1),
                (1, 1, 2, 1),
            ],
        ),
        // upper triangular 2x2: E11, E12, E22
        table(
            "upper",
            3,
            &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)],
        ),
        catalog::unitalize(&catalog::solvable2()),
        catalog::unitalize(&catalog::first_column(2)),
        catalog::unitalize(&table("zero2", 2, &[])),
    ]
}

pub fn pool() -> Vec<AlgebraSpec> {
    let mut out = unital_pool();
    out.extend([
        catalog::first_column(1),
        catalog::first_column(2),
        catalog::first_column(3),
        catalog::solvable2(),
        catalog::heisenberg(),
        // opposite of the first-column algebra: f_i f_j = δ_{i0} f_j
        AlgebraSpec::from_fn("first_row", 3, |i, j, k| {
            if i == 0 && j == k {
                q(1, 1)
            } else {
                q(0, 1)
            }
        }),
        table("nil2", 2, &[(0, 0, 1, 1)]),
    ]);
    out
}

fn randomize(rng: &mut ChaCha8Rng, spec: &AlgebraSpec) -> AlgebraSpec {
    if rng.gen_bool(0.25) {
        return spec.clone();
    }
    let (p, pinv) = invertible(rng, spec.dim());
    change_basis(spec, &p, &pinv)
}

pub fn random_algebra(rng: &mut ChaCha8Rng) -> AlgebraSpec {
    let spec = pool().choose(rng).unwrap().clone();
    randomize(rng, &spec)
}

pub fn random_unital_algebra(rng: &mut ChaCha8Rng) -> AlgebraSpec {
    let spec = unital_pool().choose(rng).unwrap().clone();
    randomize(rng, &spec)
}

pub fn random_r(rng: &mut ChaCha8Rng, n: usize) -> RMatrix {
    let mut r = RMatrix::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.6) {
                r = r
                    .checked_add(&RMatrix::basis_wedge(n, i, j).scale(&small(rng)))
                    .unwrap();
            }
        }
    }
    r
}

/// Quadratic bracket with random sparse coefficients.
pub fn random_quadratic(rng: &mut ChaCha8Rng, n: usize) -> PolyBracket {
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut p = Polynomial::zero(n);
            for k in 0..n {
                for l in k..n {
                    if rng.gen_bool(0.3) {
                        p = &p
                            + &(&Polynomial::var(n, k) * &Polynomial::var(n, l)).scale(&small(rng));
                    }
                }
            }
            entries.push((i, j, p));
        }
    }
    PolyBracket::from_table(n, entries).unwrap()
}

/// `{x^i, x^j} = q_ij x^i x^j`, always Poisson.
pub fn log_canonical(rng: &mut ChaCha8Rng, n: usize) -> PolyBracket {
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let p = (&Polynomial::var(n, i) * &Polynomial::var(n, j)).scale(&small(rng));
            entries.push((i, j, p));
        }
    }
    PolyBracket::from_table(n, entries).unwrap()
}

/// A mix of random, log-canonical and r-derived brackets on `spec`.
pub fn random_bracket(rng: &mut ChaCha8Rng, spec: &AlgebraSpec) -> PolyBracket {
    let n = spec.dim();
    match rng.gen_range(0..4) {
        0 => random_quadratic(rng, n),
        1 => log_canonical(rng, n),
        2 => quadbracket::coboundary::derive_bracket_from_r(spec, &random_r(rng, n)).unwrap(),
        _ => {
            let derived =
                quadbracket::coboundary::derive_bracket_from_r(spec, &random_r(rng, n)).unwrap();
            if rng.gen_bool(0.5) {
                derived.checked_add(&random_quadratic(rng, n)).unwrap()
            } else {
                derived
            }
        }
    }
}

/// `X ∘ Π_anti` for a random operator `X`: vanishes on symmetric tensors.
pub fn random_antisymmetric_extension(rng: &mut ChaCha8Rng, n: usize) -> Operator2 {
    let size = n * n;
    let mut x = Operator2::zeros(n);
    for row in 0..size {
        for col in 0..size {
            if rng.gen_bool(0.4) {
                x.set(row, col, small(rng));
            }
        }
    }
    x.compose(&Operator2::anti_projector(n)).unwrap()
}

/// A random two-step nilpotent Lie algebra: `v`-dimensional generating part,
/// `z`-dimensional centre, in a randomly changed basis. Returns the Lie
/// constants `f[i][j][k]`.
pub fn random_two_step_constants(rng: &mut ChaCha8Rng) -> (usize, Vec<Rational>) {
    let v = rng.gen_range(2..=3);
    let z = rng.gen_range(1..=2);
    let n = v + z;
    let mut f = vec![q(0, 1); n * n * n];
    for i in 0..v {
        for j in i + 1..v {
            for k in v..n {
                let c = small(rng);
                f[(i * n + j) * n + k] = c.clone();
                f[(j * n + i) * n + k] = -c;
            }
        }
    }
    let (p, pinv) = invertible(rng, n);
    (n, transform_constants(n, &f, &p, &pinv))
}

pub fn random_two_step(rng: &mut ChaCha8Rng) -> (AlgebraSpec, Vec<Rational>) {
    let (n, f) = random_two_step_constants(rng);
    (two_step_nilpotent("two_step", n, f.clone()).unwrap(), f)
}
