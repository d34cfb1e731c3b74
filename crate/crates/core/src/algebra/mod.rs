//! Finite-dimensional associative algebras given by structure constants,
//! together with the componentwise algebra structure on `A⊗A` and `A⊗A⊗A`.

mod linsolve;
mod operator;
mod tensor;

use std::sync::OnceLock;
use std::time::Instant;

pub(crate) use linsolve::solve;
pub use operator::{lift_operator, Operator, Operator2, Operator3, Slots};
pub use tensor::{symmetric_basis3, Tensor, Tensor2, Tensor3, SLOT_PERMUTATIONS};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::report::{CheckReport, Residual, Witness};

/// An algebra on `K^n` with `e_i · e_j = Σ_k m[i][j][k] e_k`.
#[derive(Debug)]
pub struct AlgebraSpec {
    name: String,
    dim: usize,
    m: Vec<Rational>,
    // products[i*n + j] = nonzero (k, m[i][j][k])
    products: Vec<Vec<(usize, Rational)>>,
    unit: OnceLock<Option<Vec<Rational>>>,
}

impl Clone for AlgebraSpec {
    fn clone(&self) -> Self {
        AlgebraSpec {
            name: self.name.clone(),
            dim: self.dim,
            m: self.m.clone(),
            products: self.products.clone(),
            unit: self.unit.clone(),
        }
    }
}

impl PartialEq for AlgebraSpec {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.dim == other.dim && self.m == other.m
    }
}

impl AlgebraSpec {
    /// `m` is the flattened `n×n×n` array, last index fastest.
    pub fn new(name: impl Into<String>, dim: usize, m: Vec<Rational>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Malformed {
                pointer: "/dim".into(),
                message: "dimension must be positive".into(),
            });
        }
        if m.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: m.len(),
            });
        }
        let products = (0..dim * dim)
            .map(|ij| {
                (0..dim)
                    .filter_map(|k| {
                        let v = &m[ij * dim + k];
                        (!v.is_zero()).then(|| (k, v.clone()))
                    })
                    .collect()
            })
            .collect();
        Ok(AlgebraSpec {
            name: name.into(),
            dim,
            m,
            products,
            unit: OnceLock::new(),
        })
    }

    pub fn from_fn(
        name: impl Into<String>,
        dim: usize,
        f: impl Fn(usize, usize, usize) -> Rational,
    ) -> Self {
        let mut m = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    m.push(f(i, j, k));
                }
            }
        }
        AlgebraSpec::new(name, dim, m).expect("shape built from dim")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure_constants(&self) -> &[Rational] {
        &self.m
    }

    /// `m[i][j][k]`, the `e_k` coefficient of `e_i · e_j`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.m[(i * self.dim + j) * self.dim + k]
    }

    /// Sparse `e_i · e_j` as `(k, coefficient)` pairs.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.products[i * self.dim + j]
    }

    /// First `(i, j, k)` (0-based, lexicographic) with
    /// `(e_i e_j) e_k ≠ e_i (e_j e_k)`, together with the difference.
    pub fn associativity_violation(&self) -> Option<((usize, usize, usize), Vec<Rational>)> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left =
                        self.multiply_unchecked(&self.basis_vector(i), &self.basis_vector(j));
                    let left = self.multiply_unchecked(&left, &self.basis_vector(k));
                    let right =
                        self.multiply_unchecked(&self.basis_vector(j), &self.basis_vector(k));
                    let right = self.multiply_unchecked(&self.basis_vector(i), &right);
                    if left != right {
                        let diff = left.iter().zip(&right).map(|(a, b)| a - b).collect();
                        return Some(((i, j, k), diff));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_violation().is_none()
    }

    /// Reports the first violating triple; the residual is
    /// `(e_i e_j) e_k - e_i (e_j e_k)`.
    pub fn check_associative(&self) -> CheckReport {
        let started = Instant::now();
        let witnesses = self
            .associativity_violation()
            .map(|((i, j, k), diff)| vec![Witness::at(&[i, j, k], Residual::Vector(diff))])
            .unwrap_or_default();
        CheckReport::from_witnesses("associativity", witnesses, started)
    }

    /// The two-sided unit, found by solving `u·e_j = e_j = e_j·u` for all
    /// `j`. Cached after the first call.
    pub fn find_unit(&self) -> Option<Vec<Rational>> {
        self.unit.get_or_init(|| self.solve_unit()).clone()
    }

    fn solve_unit(&self) -> Option<Vec<Rational>> {
        let n = self.dim;
        let mut rows = Vec::with_capacity(2 * n * n);
        let mut rhs = Vec::with_capacity(2 * n * n);
        for j in 0..n {
            for k in 0..n {
                let target = if j == k {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                rows.push((0..n).map(|i| self.constant(i, j, k).clone()).collect());
                rhs.push(target.clone());
                rows.push((0..n).map(|i| self.constant(j, i, k).clone()).collect());
                rhs.push(target);
            }
        }
        solve(rows, rhs, n)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim];
        v[i] = Rational::one();
        v
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn multiply(&self, a: &[Rational], b: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(self.multiply_unchecked(a, b))
    }

    fn multiply_unchecked(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for (i, ai) in a.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let ab = ai * bj;
                for (k, c) in self.basis_product(i, j) {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// `[a, b] = ab - ba` in the adjacent Lie algebra.
    pub fn commutator(&self, a: &[Rational], b: &[Rational]) -> Result<Vec<Rational>> {
        let ab = self.multiply(a, b)?;
        let ba = self.multiply(b, a)?;
        Ok(ab.iter().zip(&ba).map(|(x, y)| x - y).collect())
    }

    /// `[e_i, e_j]` as `(k, coefficient)` pairs with nonzero coefficients.
    pub fn basis_commutator(&self, i: usize, j: usize) -> Vec<(usize, Rational)> {
        let mut out = vec![Rational::zero(); self.dim];
        for (k, c) in self.basis_product(i, j) {
            out[*k] += c;
        }
        for (k, c) in self.basis_product(j, i) {
            out[*k] -= c;
        }
        out.into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Product in the componentwise algebra on the `R`-th tensor power:
    /// `(a_1⊗…⊗a_R)(b_1⊗…⊗b_R) = a_1b_1⊗…⊗a_Rb_R`.
    pub fn tensor_mul<const R: usize>(&self, s: &Tensor<R>, t: &Tensor<R>) -> Result<Tensor<R>> {
        for d in [s.dim(), t.dim()] {
            if d != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: d,
                });
            }
        }
        let mut out = Tensor::<R>::zeros(self.dim);
        let tn: Vec<_> = t.nonzero().collect();
        for (si, sc) in s.nonzero() {
            for (ti, tc) in &tn {
                let coeff = sc * *tc;
                let factors: [&[(usize, Rational)]; R] =
                    std::array::from_fn(|slot| self.basis_product(si[slot], ti[slot]));
                if factors.iter().any(|f| f.is_empty()) {
                    continue;
                }
                accumulate_products(&mut out, &factors, &coeff);
            }
        }
        Ok(out)
    }

    pub fn tensor2_mul(&self, s: &Tensor2, t: &Tensor2) -> Result<Tensor2> {
        self.tensor_mul(s, t)
    }

    pub fn tensor3_mul(&self, s: &Tensor3, t: &Tensor3) -> Result<Tensor3> {
        self.tensor_mul(s, t)
    }

    /// `st - ts` in the componentwise tensor-power algebra.
    pub fn tensor_commutator<const R: usize>(
        &self,
        s: &Tensor<R>,
        t: &Tensor<R>,
    ) -> Result<Tensor<R>> {
        self.tensor_mul(s, t)?.checked_sub(&self.tensor_mul(t, s)?)
    }
}

fn accumulate_products<const R: usize>(
    out: &mut Tensor<R>,
    factors: &[&[(usize, Rational)]; R],
    coeff: &Rational,
) {
    // odometer over one nonzero entry per slot
    let mut pos = [0usize; R];
    loop {
        let mut idx = [0usize; R];
        let mut c = coeff.clone();
        for slot in 0..R {
            let (k, v) = &factors[slot][pos[slot]];
            idx[slot] = *k;
            c *= v;
        }
        out.add_at(idx, &c);
        let mut slot = R;
        loop {
            if slot == 0 {
                return;
            }
            slot -= 1;
            pos[slot] += 1;
            if pos[slot] < factors[slot].len() {
                break;
            }
            pos[slot] = 0;
        }
    }
}
