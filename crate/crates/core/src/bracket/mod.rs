//! Brackets `{x^i, x^j} = c^{ij}_{kl} x^k x^l + b^{ij}_k x^k + a^{ij}` on the
//! coordinate functions of an `n`-dimensional algebra.

mod checks;
mod delta;

pub use checks::{bracket_poly, compat_direct, jacobiator, pair_table};
pub use delta::{
    bracket_to_delta, delta_to_bracket, derivation_check, extension_independence,
    schouten_on_symmetric, schouten_operator, schouten_operator_check, DeltaMap,
};

use crate::error::{Error, Result};
use crate::exact::{Monomial, Polynomial, Rational};

/// Bracket of degree at most two. Upper indices are antisymmetric in every
/// part; the lower pair of the quadratic part is kept symmetric.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyBracket {
    n: usize,
    c: Vec<Rational>,
    b: Vec<Rational>,
    a: Vec<Rational>,
}

impl PolyBracket {
    pub fn zero(n: usize) -> Self {
        PolyBracket {
            n,
            c: vec![Rational::zero(); n.pow(4)],
            b: vec![Rational::zero(); n.pow(3)],
            a: vec![Rational::zero(); n * n],
        }
    }

    /// Builds from flattened dense parts (`c[i][j][k][l]`, `b[i][j][k]`,
    /// `a[i][j]`). Fails on the first `(i, j)` breaking antisymmetry; the
    /// lower pair of `c` is symmetrized.
    pub fn from_parts(
        n: usize,
        c: Vec<Rational>,
        b: Vec<Rational>,
        a: Vec<Rational>,
    ) -> Result<Self> {
        for (part, expected) in [(&c, n.pow(4)), (&b, n.pow(3)), (&a, n * n)] {
            if part.len() != expected {
                return Err(Error::DimensionMismatch {
                    expected,
                    found: part.len(),
                });
            }
        }
        let mut out = PolyBracket { n, c, b, a };
        for i in 0..n {
            for j in 0..=i {
                let ok = (0..n * n)
                    .all(|kl| out.c[(i * n + j) * n * n + kl] == -&out.c[(j * n + i) * n * n + kl])
                    && (0..n).all(|k| out.b[(i * n + j) * n + k] == -&out.b[(j * n + i) * n + k])
                    && out.a[i * n + j] == -&out.a[j * n + i];
                if !ok {
                    return Err(Error::NotAntisymmetric { i, j });
                }
            }
        }
        let half = Rational::new(1, 2).expect("nonzero");
        for ij in 0..n * n {
            for k in 0..n {
                for l in 0..k {
                    let x = ij * n * n + k * n + l;
                    let y = ij * n * n + l * n + k;
                    let s = (&out.c[x] + &out.c[y]) * &half;
                    out.c[x] = s.clone();
                    out.c[y] = s;
                }
            }
        }
        Ok(out)
    }

    /// Builds from the brackets of coordinate pairs: each `(i, j, p)` sets
    /// `{x^i, x^j} = p` (and `{x^j, x^i} = -p`). Pairs not listed are zero.
    pub fn from_table<I>(n: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Polynomial)>,
    {
        let mut out = PolyBracket::zero(n);
        for (i, j, p) in entries {
            if p.nvars() != n {
                return Err(Error::VariableCountMismatch {
                    left: n,
                    right: p.nvars(),
                });
            }
            if i == j {
                if p.is_zero() {
                    continue;
                }
                return Err(Error::NotAntisymmetric { i, j });
            }
            for (m, coeff) in p.terms() {
                let vars: Vec<usize> = m
                    .exponents()
                    .iter()
                    .enumerate()
                    .flat_map(|(v, &e)| std::iter::repeat_n(v, e as usize))
                    .collect();
                match vars.as_slice() {
                    [] => {
                        out.a[i * n + j] = coeff.clone();
                        out.a[j * n + i] = -coeff;
                    }
                    [k] => {
                        out.b[(i * n + j) * n + k] = coeff.clone();
                        out.b[(j * n + i) * n + k] = -coeff;
                    }
                    [k, l] => {
                        let v = if k == l {
                            coeff.clone()
                        } else {
                            coeff * Rational::new(1, 2).expect("nonzero")
                        };
                        for (x, y) in [(*k, *l), (*l, *k)] {
                            out.c[((i * n + j) * n + x) * n + y] = v.clone();
                            out.c[((j * n + i) * n + x) * n + y] = -&v;
                        }
                    }
                    _ => {
                        return Err(Error::Malformed {
                            pointer: format!("/{}/{}", i, j),
                            message: "bracket entries must have degree at most two".into(),
                        })
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn c(&self, i: usize, j: usize, k: usize, l: usize) -> &Rational {
        &self.c[((i * self.n + j) * self.n + k) * self.n + l]
    }

    pub fn b(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.b[(i * self.n + j) * self.n + k]
    }

    pub fn a(&self, i: usize, j: usize) -> &Rational {
        &self.a[i * self.n + j]
    }

    pub fn quadratic_coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn linear_coeffs(&self) -> &[Rational] {
        &self.b
    }

    pub fn constant_coeffs(&self) -> &[Rational] {
        &self.a
    }

    pub fn has_quadratic_part(&self) -> bool {
        self.c.iter().any(|v| !v.is_zero())
    }

    pub fn has_linear_part(&self) -> bool {
        self.b.iter().any(|v| !v.is_zero())
    }

    pub fn has_constant_part(&self) -> bool {
        self.a.iter().any(|v| !v.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        !self.has_quadratic_part() && !self.has_linear_part() && !self.has_constant_part()
    }

    /// Errors unless the linear and constant parts vanish.
    pub fn require_quadratic(&self) -> Result<()> {
        if self.has_linear_part() {
            return Err(Error::NotQuadratic { part: "linear" });
        }
        if self.has_constant_part() {
            return Err(Error::NotQuadratic { part: "constant" });
        }
        Ok(())
    }

    pub fn quadratic_part(&self) -> PolyBracket {
        PolyBracket {
            c: self.c.clone(),
            ..PolyBracket::zero(self.n)
        }
    }

    pub fn linear_part(&self) -> PolyBracket {
        PolyBracket {
            b: self.b.clone(),
            ..PolyBracket::zero(self.n)
        }
    }

    pub fn constant_part(&self) -> PolyBracket {
        PolyBracket {
            a: self.a.clone(),
            ..PolyBracket::zero(self.n)
        }
    }

    /// Linear bracket `{x^i, x^j} = Σ_k b[i][j][k] x^k`.
    pub fn linear(n: usize, b: Vec<Rational>) -> Result<Self> {
        PolyBracket::from_parts(
            n,
            vec![Rational::zero(); n.pow(4)],
            b,
            vec![Rational::zero(); n * n],
        )
    }

    /// `{x^i, x^j}` as a polynomial in `n` variables.
    pub fn pair(&self, i: usize, j: usize) -> Polynomial {
        let n = self.n;
        let mut p = Polynomial::zero(n);
        for k in 0..n {
            for l in 0..n {
                let v = self.c(i, j, k, l);
                if !v.is_zero() {
                    p.add_term(Monomial::var(n, k).mul(&Monomial::var(n, l)), v.clone());
                }
            }
            p.add_term(Monomial::var(n, k), self.b(i, j, k).clone());
        }
        p.add_term(Monomial::one(n), self.a(i, j).clone());
        p
    }

    pub fn checked_add(&self, other: &PolyBracket) -> Result<PolyBracket> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let add = |x: &[Rational], y: &[Rational]| x.iter().zip(y).map(|(p, q)| p + q).collect();
        Ok(PolyBracket {
            n: self.n,
            c: add(&self.c, &other.c),
            b: add(&self.b, &other.b),
            a: add(&self.a, &other.a),
        })
    }

    pub fn scale(&self, s: &Rational) -> PolyBracket {
        let sc = |x: &[Rational]| x.iter().map(|v| v * s).collect();
        PolyBracket {
            n: self.n,
            c: sc(&self.c),
            b: sc(&self.b),
            a: sc(&self.a),
        }
    }

    /// `(i, j, {x^i, x^j})` for `i < j`, in order.
    pub fn table(&self) -> Vec<(usize, usize, Polynomial)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                out.push((i, j, self.pair(i, j)));
            }
        }
        out
    }

    /// `{x^i,x^j} = ...` lines for `i < j`.
    pub fn render_table(&self) -> String {
        self.table()
            .into_iter()
            .map(|(i, j, p)| format!("{{x^{},x^{}}} = {}", i + 1, j + 1, p))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// The bracket in the coordinates `y = x - t·u`: substitutes `x = y + t·u`
/// into every coefficient part.
pub fn translate(bracket: &PolyBracket, u: &[Rational], t: &Rational) -> Result<PolyBracket> {
    let n = bracket.n;
    if u.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: u.len(),
        });
    }
    let mut out = bracket.clone();
    let two_t = t * Rational::from_integer(2);
    let t2 = t * t;
    for i in 0..n {
        for j in 0..n {
            let ij = i * n + j;
            let mut constant = Rational::zero();
            for k in 0..n {
                let mut shift = Rational::zero();
                for l in 0..n {
                    let c = bracket.c(i, j, k, l);
                    if c.is_zero() || u[l].is_zero() {
                        continue;
                    }
                    shift += c * &u[l];
                    constant += &t2 * c * &u[k] * &u[l];
                }
                out.b[ij * n + k] += &two_t * shift;
                constant += t * bracket.b(i, j, k) * &u[k];
            }
            out.a[ij] += constant;
        }
    }
    Ok(out)
}
