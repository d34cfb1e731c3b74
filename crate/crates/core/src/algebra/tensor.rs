use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Dense coefficient array of an element of the `R`-fold tensor power of an
/// `n`-dimensional algebra, indexed row-major: the last slot varies fastest.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor<const R: usize> {
    n: usize,
    coeffs: Vec<Rational>,
}

pub type Tensor2 = Tensor<2>;
pub type Tensor3 = Tensor<3>;

impl<const R: usize> Tensor<R> {
    pub fn zeros(n: usize) -> Self {
        Tensor {
            n,
            coeffs: vec![Rational::zero(); n.pow(R as u32)],
        }
    }

    pub fn from_coeffs(n: usize, coeffs: Vec<Rational>) -> Result<Self> {
        let expected = n.pow(R as u32);
        if coeffs.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: coeffs.len(),
            });
        }
        Ok(Tensor { n, coeffs })
    }

    pub fn from_fn(n: usize, f: impl Fn([usize; R]) -> Rational) -> Self {
        let mut t = Tensor::zeros(n);
        for flat in 0..t.coeffs.len() {
            t.coeffs[flat] = f(t.unflatten(flat));
        }
        t
    }

    /// The basis tensor `e_{i_1} ⊗ ... ⊗ e_{i_R}`.
    pub fn basis(n: usize, idx: [usize; R]) -> Self {
        let mut t = Tensor::zeros(n);
        let flat = t.flatten(idx);
        t.coeffs[flat] = Rational::one();
        t
    }

    /// The pure tensor of the given vectors.
    pub fn pure(vectors: [&[Rational]; R]) -> Result<Self> {
        let n = vectors[0].len();
        if let Some(v) = vectors.iter().find(|v| v.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.len(),
            });
        }
        Ok(Tensor::from_fn(n, |idx| {
            idx.iter()
                .zip(vectors.iter())
                .map(|(&i, v)| v[i].clone())
                .product()
        }))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn flatten(&self, idx: [usize; R]) -> usize {
        idx.iter().fold(0, |acc, &i| acc * self.n + i)
    }

    pub fn unflatten(&self, mut flat: usize) -> [usize; R] {
        let mut idx = [0; R];
        for slot in (0..R).rev() {
            idx[slot] = flat % self.n;
            flat /= self.n;
        }
        idx
    }

    pub fn get(&self, idx: [usize; R]) -> &Rational {
        &self.coeffs[self.flatten(idx)]
    }

    pub fn set(&mut self, idx: [usize; R], v: Rational) {
        let flat = self.flatten(idx);
        self.coeffs[flat] = v;
    }

    pub fn add_at(&mut self, idx: [usize; R], v: &Rational) {
        let flat = self.flatten(idx);
        self.coeffs[flat] += v;
    }

    /// Nonzero entries with their multi-indices.
    pub fn nonzero(&self) -> impl Iterator<Item = ([usize; R], &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(flat, c)| (self.unflatten(flat), c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        Tensor {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Tensor {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Moves slot `perm[s]` of the input into slot `s` of the output.
    pub fn permute_slots(&self, perm: [usize; R]) -> Self {
        Tensor::from_fn(self.n, |idx| {
            let mut src = [0; R];
            for s in 0..R {
                src[perm[s]] = idx[s];
            }
            self.get(src).clone()
        })
    }

    fn nested_json(&self) -> serde_json::Value {
        fn build(coeffs: &[Rational], n: usize, depth: usize) -> serde_json::Value {
            if depth == 1 {
                return serde_json::Value::Array(
                    coeffs
                        .iter()
                        .map(|c| serde_json::Value::String(c.to_string()))
                        .collect(),
                );
            }
            let chunk = coeffs.len() / n;
            serde_json::Value::Array(
                coeffs
                    .chunks(chunk.max(1))
                    .map(|c| build(c, n, depth - 1))
                    .collect(),
            )
        }
        build(&self.coeffs, self.n, R)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "n": self.n, "t": self.nested_json() })
    }
}

impl Tensor2 {
    pub fn transpose(&self) -> Self {
        self.permute_slots([1, 0])
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get([i, j]) == self.get([j, i])))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|i| (0..=i).all(|j| self.get([i, j]) == &-self.get([j, i])))
    }

    /// `(t^{ij} + t^{ji}) / 2`.
    pub fn symmetrize(&self) -> Self {
        let half = Rational::new(1, 2).expect("nonzero");
        self.zip_with(&self.transpose(), |a, b| (a + b) * &half)
    }

    /// `(t^{ij} - t^{ji}) / 2`.
    pub fn antisymmetrize(&self) -> Self {
        let half = Rational::new(1, 2).expect("nonzero");
        self.zip_with(&self.transpose(), |a, b| (a - b) * &half)
    }

    /// `a ⊗ b - b ⊗ a`.
    pub fn wedge(a: &[Rational], b: &[Rational]) -> Result<Self> {
        let ab = Tensor::pure([a, b])?;
        Ok(ab.checked_sub(&ab.transpose()).expect("same shape"))
    }
}

pub const SLOT_PERMUTATIONS: [([usize; 3], i8); 6] = [
    ([0, 1, 2], 1),
    ([1, 2, 0], 1),
    ([2, 0, 1], 1),
    ([1, 0, 2], -1),
    ([0, 2, 1], -1),
    ([2, 1, 0], -1),
];

impl Tensor3 {
    pub fn is_fully_symmetric(&self) -> bool {
        SLOT_PERMUTATIONS
            .iter()
            .all(|(p, _)| &self.permute_slots(*p) == self)
    }

    pub fn is_fully_antisymmetric(&self) -> bool {
        SLOT_PERMUTATIONS
            .iter()
            .all(|(p, s)| self.permute_slots(*p) == self.scale(&Rational::from_integer(*s as i64)))
    }
}

/// The unnormalized fully symmetric basis of `A⊗A⊗A`: for each `i ≤ j ≤ k`
/// the sum over all six slot permutations of `e_i⊗e_j⊗e_k`.
pub fn symmetric_basis3(n: usize) -> Vec<Tensor3> {
    let mut out = Vec::with_capacity(n * (n + 1) * (n + 2) / 6);
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let mut t = Tensor3::zeros(n);
                for (p, _) in SLOT_PERMUTATIONS {
                    let idx = [i, j, k];
                    t.add_at([idx[p[0]], idx[p[1]], idx[p[2]]], &Rational::one());
                }
                out.push(t);
            }
        }
    }
    out
}

impl<const R: usize> Serialize for Tensor<R> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<const R: usize> fmt::Display for Tensor<R> {
    /// Sparse rendering, e.g. `2 e1⊗e3 - 1/2 e2⊗e2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, c) in self.nonzero() {
            let name: Vec<String> = idx.iter().map(|i| format!("e{}", i + 1)).collect();
            let abs = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if !abs.is_one() {
                write!(f, "{abs} ")?;
            }
            f.write_str(&name.join("⊗"))?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<const R: usize> fmt::Debug for Tensor<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor{R}[{}]({})", self.n, self)
    }
}
