use std::time::Instant;

use super::PolyBracket;
use crate::algebra::AlgebraSpec;
use crate::error::{Error, Result};
use crate::exact::{Monomial, Polynomial};
use crate::report::{CheckReport, Residual, Witness};

/// `table[i][j] = {x^i, x^j}` for all ordered pairs.
pub fn pair_table(bracket: &PolyBracket) -> Vec<Vec<Polynomial>> {
    let n = bracket.dim();
    (0..n)
        .map(|i| (0..n).map(|j| bracket.pair(i, j)).collect())
        .collect()
}

fn bracket_with_table(table: &[Vec<Polynomial>], f: &Polynomial, g: &Polynomial) -> Polynomial {
    let n = table.len();
    let df: Vec<Polynomial> = (0..n).map(|i| f.partial(i)).collect();
    let dg: Vec<Polynomial> = (0..n).map(|j| g.partial(j)).collect();
    let mut out = Polynomial::zero(n);
    for i in 0..n {
        if df[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if i == j || dg[j].is_zero() || table[i][j].is_zero() {
                continue;
            }
            out = &out + &(&(&df[i] * &dg[j]) * &table[i][j]);
        }
    }
    out
}

/// `{f, g} = Σ_{i,j} ∂_i f ∂_j g {x^i, x^j}`, the biderivation extending the
/// bracket of coordinates.
pub fn bracket_poly(bracket: &PolyBracket, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let n = bracket.dim();
    for p in [f, g] {
        if p.nvars() != n {
            return Err(Error::VariableCountMismatch {
                left: n,
                right: p.nvars(),
            });
        }
    }
    Ok(bracket_with_table(&pair_table(bracket), f, g))
}

/// Cyclic sum `{x^i,{x^j,x^k}} + {x^j,{x^k,x^i}} + {x^k,{x^i,x^j}}` for
/// every `i < j < k`, compared with zero as a polynomial.
pub fn jacobiator(bracket: &PolyBracket) -> CheckReport {
    let started = Instant::now();
    let n = bracket.dim();
    let table = pair_table(bracket);
    let mut witnesses = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let xi = Polynomial::var(n, i);
                let xj = Polynomial::var(n, j);
                let xk = Polynomial::var(n, k);
                let s = &(&bracket_with_table(&table, &xi, &table[j][k])
                    + &bracket_with_table(&table, &xj, &table[k][i]))
                    + &bracket_with_table(&table, &xk, &table[i][j]);
                if !s.is_zero() {
                    witnesses.push(Witness::at(&[i, j, k], Residual::Polynomial(s)));
                }
            }
        }
    }
    CheckReport::from_witnesses("jacobi", witnesses, started)
}

/// The product bracket on `2n` variables `(y, z)`: the given bracket on the
/// `y`'s, a copy on the `z`'s, and `{y, z} = 0`.
fn product_bracket(bracket: &PolyBracket) -> PolyBracket {
    let n = bracket.dim();
    let n2 = 2 * n;
    let mut entries = Vec::new();
    for (i, j, p) in bracket.table() {
        for offset in [0, n] {
            let mut q = Polynomial::zero(n2);
            for (m, c) in p.terms() {
                let mut e = vec![0; n2];
                e[offset..offset + n].copy_from_slice(m.exponents());
                q.add_term(Monomial::from_exponents(e), c.clone());
            }
            entries.push((i + offset, j + offset, q));
        }
    }
    PolyBracket::from_table(n2, entries).expect("copied entries are valid")
}

/// Checks `Δ({x^i, x^j}) = {Δx^i, Δx^j}` for all `i < j`, where
/// `Δx^i = Σ m[k][l][i] y^k z^l` and the right side uses the product bracket.
pub fn compat_direct(spec: &AlgebraSpec, bracket: &PolyBracket) -> Result<CheckReport> {
    let started = Instant::now();
    let n = spec.dim();
    if bracket.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bracket.dim(),
        });
    }
    bracket.require_quadratic()?;
    let n2 = 2 * n;
    let coproduct: Vec<Polynomial> = (0..n)
        .map(|i| {
            let mut p = Polynomial::zero(n2);
            for k in 0..n {
                for l in 0..n {
                    let c = spec.constant(k, l, i);
                    if !c.is_zero() {
                        let mut e = vec![0; n2];
                        e[k] += 1;
                        e[n + l] += 1;
                        p.add_term(Monomial::from_exponents(e), c.clone());
                    }
                }
            }
            p
        })
        .collect();
    let doubled = product_bracket(bracket);
    let doubled_table = pair_table(&doubled);
    let mut witnesses = Vec::new();
    for (i, j, p) in bracket.table() {
        let lhs = p.substitute(&coproduct, n2)?;
        let rhs = bracket_with_table(&doubled_table, &coproduct[i], &coproduct[j]);
        let diff = &lhs - &rhs;
        if !diff.is_zero() {
            witnesses.push(Witness::at(&[i, j], Residual::Polynomial(diff)));
        }
    }
    Ok(CheckReport::from_witnesses("compat", witnesses, started))
}
