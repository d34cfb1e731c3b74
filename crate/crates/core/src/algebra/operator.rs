use std::str::FromStr;

use super::tensor::Tensor;
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Dense linear operator on the `R`-fold tensor power of an `n`-dimensional
/// space, stored as an `n^R × n^R` row-major matrix acting on flattened
/// tensor coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Operator<const R: usize> {
    n: usize,
    size: usize,
    data: Vec<Rational>,
}

pub type Operator2 = Operator<2>;
pub type Operator3 = Operator<3>;

impl<const R: usize> Operator<R> {
    pub fn zeros(n: usize) -> Self {
        let size = n.pow(R as u32);
        Operator {
            n,
            size,
            data: vec![Rational::zero(); size * size],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut op = Operator::zeros(n);
        for i in 0..op.size {
            op.data[i * op.size + i] = Rational::one();
        }
        op
    }

    /// Builds the operator whose column `col` is the image of the `col`-th
    /// basis tensor.
    pub fn from_columns(n: usize, image: impl Fn(usize) -> Tensor<R>) -> Result<Self> {
        let mut op = Operator::zeros(n);
        for col in 0..op.size {
            let t = image(col);
            if t.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: t.dim(),
                });
            }
            for (row, v) in t.coeffs().iter().enumerate() {
                op.data[row * op.size + col] = v.clone();
            }
        }
        Ok(op)
    }

    pub fn from_rows(n: usize, data: Vec<Rational>) -> Result<Self> {
        let size = n.pow(R as u32);
        if data.len() != size * size {
            return Err(Error::DimensionMismatch {
                expected: size * size,
                found: data.len(),
            });
        }
        Ok(Operator { n, size, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.data[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: Rational) {
        self.data[row * self.size + col] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    fn check_same(&self, n: usize) -> Result<()> {
        if self.n != n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: n,
            });
        }
        Ok(())
    }

    pub fn apply(&self, t: &Tensor<R>) -> Result<Tensor<R>> {
        self.check_same(t.dim())?;
        let mut out = vec![Rational::zero(); self.size];
        for (col, v) in t.coeffs().iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            for (row, slot) in out.iter_mut().enumerate() {
                let a = &self.data[row * self.size + col];
                if !a.is_zero() {
                    *slot += a * v;
                }
            }
        }
        Tensor::from_coeffs(self.n, out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same(other.n)?;
        let s = self.size;
        let mut out = vec![Rational::zero(); s * s];
        for i in 0..s {
            for k in 0..s {
                let a = &self.data[i * s + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..s {
                    let b = &other.data[k * s + j];
                    if !b.is_zero() {
                        out[i * s + j] += a * b;
                    }
                }
            }
        }
        Ok(Operator {
            n: self.n,
            size: s,
            data: out,
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other.n)?;
        Ok(Operator {
            n: self.n,
            size: self.size,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other.n)?;
        Ok(Operator {
            n: self.n,
            size: self.size,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Operator {
            n: self.n,
            size: self.size,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// `[self, other] = self∘other - other∘self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.compose(other)?.checked_sub(&other.compose(self)?)
    }
}

impl Operator2 {
    /// The flip `e_a⊗e_b ↦ e_b⊗e_a`.
    pub fn swap(n: usize) -> Self {
        Operator::from_columns(n, |col| Tensor::basis(n, [col % n, col / n])).expect("shapes agree")
    }

    /// Projector onto symmetric tensors.
    pub fn sym_projector(n: usize) -> Self {
        let half = Rational::new(1, 2).expect("nonzero");
        Operator::identity(n)
            .checked_add(&Operator::swap(n))
            .expect("shapes agree")
            .scale(&half)
    }

    /// Projector onto antisymmetric tensors.
    pub fn anti_projector(n: usize) -> Self {
        let half = Rational::new(1, 2).expect("nonzero");
        Operator::identity(n)
            .checked_sub(&Operator::swap(n))
            .expect("shapes agree")
            .scale(&half)
    }
}

/// Pair of tensor slots an operator on `A⊗A` is lifted to inside `A⊗A⊗A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slots {
    S12,
    S13,
    S23,
}

impl Slots {
    pub const ALL: [Slots; 3] = [Slots::S12, Slots::S13, Slots::S23];

    /// `(first, second, untouched)` slot positions.
    fn positions(self) -> (usize, usize, usize) {
        match self {
            Slots::S12 => (0, 1, 2),
            Slots::S13 => (0, 2, 1),
            Slots::S23 => (1, 2, 0),
        }
    }
}

impl FromStr for Slots {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "12" => Ok(Slots::S12),
            "13" => Ok(Slots::S13),
            "23" => Ok(Slots::S23),
            other => Err(Error::InvalidSlot(other.to_string())),
        }
    }
}

/// `P^{ab}`: acts as `p` on slots `a, b` and as the identity on the third.
pub fn lift_operator(p: &Operator2, slots: Slots) -> Operator3 {
    let n = p.dim();
    let (a, b, c) = slots.positions();
    let mut out = Operator3::zeros(n);
    let probe = Tensor::<3>::zeros(n);
    let n2 = n * n;
    for row in 0..out.size() {
        let ri = probe.unflatten(row);
        for pc in 0..n2 {
            let v = p.get(ri[a] * n + ri[b], pc);
            if v.is_zero() {
                continue;
            }
            let mut ci = [0; 3];
            ci[a] = pc / n;
            ci[b] = pc % n;
            ci[c] = ri[c];
            out.set(row, probe.flatten(ci), v.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tensor::{Tensor2, Tensor3};
    use crate::exact::q;

    fn pseudo_random_op(n: usize, seed: i64) -> Operator2 {
        let s = n * n;
        let data = (0..s * s)
            .map(|k| {
                let v = (k as i64 * 7 + seed * 13) % 11 - 5;
                if v.abs() > 2 {
                    Rational::zero()
                } else {
                    q(v, 1 + (k as i64 % 3))
                }
            })
            .collect();
        Operator2::from_rows(n, data).unwrap()
    }

    #[test]
    fn lifting_identity_gives_identity() {
        for slots in Slots::ALL {
            assert_eq!(
                lift_operator(&Operator2::identity(3), slots),
                Operator3::identity(3)
            );
        }
    }

    #[test]
    fn lifted_swap_permutes_slots() {
        let n = 3;
        let swap12 = lift_operator(&Operator2::swap(n), Slots::S12);
        let t = Tensor3::basis(n, [0, 1, 2]);
        assert_eq!(swap12.apply(&t).unwrap(), Tensor3::basis(n, [1, 0, 2]));
        let swap13 = lift_operator(&Operator2::swap(n), Slots::S13);
        assert_eq!(swap13.apply(&t).unwrap(), Tensor3::basis(n, [2, 1, 0]));
        let swap23 = lift_operator(&Operator2::swap(n), Slots::S23);
        assert_eq!(swap23.apply(&t).unwrap(), Tensor3::basis(n, [0, 2, 1]));
    }

    #[test]
    fn lift_respects_composition_and_commutators() {
        for seed in 0..4 {
            let p = pseudo_random_op(2, seed);
            let r = pseudo_random_op(2, seed + 17);
            for slots in Slots::ALL {
                let lhs = lift_operator(&p.compose(&r).unwrap(), slots);
                let rhs = lift_operator(&p, slots)
                    .compose(&lift_operator(&r, slots))
                    .unwrap();
                assert_eq!(lhs, rhs);
                let lc = lift_operator(&p.commutator(&r).unwrap(), slots);
                let rc = lift_operator(&p, slots)
                    .commutator(&lift_operator(&r, slots))
                    .unwrap();
                assert_eq!(lc, rc);
            }
        }
    }

    #[test]
    fn projectors_are_complementary() {
        let n = 3;
        let s = Operator2::sym_projector(n);
        let a = Operator2::anti_projector(n);
        assert_eq!(s.compose(&s).unwrap(), s);
        assert_eq!(a.compose(&a).unwrap(), a);
        assert!(s.compose(&a).unwrap().is_zero());
        assert_eq!(s.checked_add(&a).unwrap(), Operator2::identity(n));
        let t = Tensor2::basis(n, [0, 2]);
        assert_eq!(s.apply(&t).unwrap(), t.symmetrize());
    }

    #[test]
    fn bad_slot_tag() {
        assert_eq!("21".parse::<Slots>(), Err(Error::InvalidSlot("21".into())));
    }
}
