//! The dual map `δ: Symm(A⊗A) → A∧A` of a quadratic bracket and the
//! operator-level criteria built from it.
//!
//! Convention: `δ(e_k⊗e_l + e_l⊗e_k) = Σ_{i,j} 2 c^{ij}_{kl} e_i⊗e_j`, so the
//! extension `δ̃ = δ∘Π_sym` has matrix entries `δ̃[(i,j),(k,l)] = c^{ij}_{kl}`.

use std::time::Instant;

use super::PolyBracket;
use crate::algebra::{
    lift_operator, symmetric_basis3, AlgebraSpec, Operator2, Operator3, Slots, Tensor2, Tensor3,
};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::report::{CheckReport, Residual, Witness};

/// Images `δ(e_k⊗e_l + e_l⊗e_k)` for `k ≤ l`, each antisymmetric.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeltaMap {
    n: usize,
    images: Vec<Tensor2>,
}

fn pair_index(n: usize, k: usize, l: usize) -> usize {
    let (k, l) = if k <= l { (k, l) } else { (l, k) };
    // rows 0..k hold n, n-1, ..., n-k+1 pairs
    k * n - k * k.saturating_sub(1) / 2 + (l - k)
}

impl DeltaMap {
    /// `images` ordered by `(k, l)` with `k ≤ l`, lexicographically.
    pub fn new(n: usize, images: Vec<Tensor2>) -> Result<Self> {
        let expected = n * (n + 1) / 2;
        if images.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: images.len(),
            });
        }
        for t in &images {
            if t.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: t.dim(),
                });
            }
            if !t.is_antisymmetric() {
                let (i, j) = first_asymmetry(t);
                return Err(Error::NotAntisymmetric { i, j });
            }
        }
        Ok(DeltaMap { n, images })
    }

    pub fn zero(n: usize) -> Self {
        DeltaMap {
            n,
            images: vec![Tensor2::zeros(n); n * (n + 1) / 2],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// `δ(e_k⊗e_l + e_l⊗e_k)`; the order of `k, l` is irrelevant.
    pub fn image(&self, k: usize, l: usize) -> &Tensor2 {
        &self.images[pair_index(self.n, k, l)]
    }

    pub fn images(&self) -> &[Tensor2] {
        &self.images
    }

    /// `δ(S)` for a symmetric tensor `S`.
    pub fn apply_symmetric(&self, s: &Tensor2) -> Result<Tensor2> {
        if s.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: s.dim(),
            });
        }
        if !s.is_symmetric() {
            return Err(Error::NonSymmetricProduct);
        }
        let half = Rational::new(1, 2).expect("nonzero");
        let mut out = Tensor2::zeros(self.n);
        for k in 0..self.n {
            for l in k..self.n {
                let v = s.get([k, l]);
                if v.is_zero() {
                    continue;
                }
                let w = if k == l { v * &half } else { v.clone() };
                out = out.checked_add(&self.image(k, l).scale(&w))?;
            }
        }
        Ok(out)
    }

    /// The canonical extension `δ̃ = δ∘Π_sym` to all of `A⊗A`.
    pub fn extension(&self) -> Operator2 {
        let n = self.n;
        let half = Rational::new(1, 2).expect("nonzero");
        Operator2::from_columns(n, |col| self.image(col / n, col % n).scale(&half))
            .expect("shapes agree")
    }
}

fn first_asymmetry(t: &Tensor2) -> (usize, usize) {
    let n = t.dim();
    for i in 0..n {
        for j in 0..=i {
            if t.get([i, j]) != &-t.get([j, i]) {
                return (i, j);
            }
        }
    }
    (0, 0)
}

pub fn bracket_to_delta(bracket: &PolyBracket) -> Result<DeltaMap> {
    bracket.require_quadratic()?;
    let n = bracket.dim();
    let two = Rational::from_integer(2);
    let mut images = Vec::with_capacity(n * (n + 1) / 2);
    for k in 0..n {
        for l in k..n {
            images.push(Tensor2::from_fn(n, |[i, j]| &two * bracket.c(i, j, k, l)));
        }
    }
    DeltaMap::new(n, images)
}

pub fn delta_to_bracket(delta: &DeltaMap) -> PolyBracket {
    let n = delta.n;
    let half = Rational::new(1, 2).expect("nonzero");
    let mut c = Vec::with_capacity(n.pow(4));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    c.push(delta.image(k, l).get([i, j]) * &half);
                }
            }
        }
    }
    PolyBracket::from_parts(
        n,
        c,
        vec![Rational::zero(); n.pow(3)],
        vec![Rational::zero(); n * n],
    )
    .expect("images are antisymmetric")
}

fn sym_pair(n: usize, i: usize, j: usize) -> Tensor2 {
    let mut t = Tensor2::basis(n, [i, j]);
    t.add_at([j, i], &Rational::one());
    t
}

/// Checks `δ(pq) = p δ(q) + δ(p) q` for all symmetric basis pairs
/// `p = e_i⊗e_j + e_j⊗e_i`, `q = e_k⊗e_l + e_l⊗e_k`.
pub fn derivation_check(spec: &AlgebraSpec, delta: &DeltaMap) -> Result<CheckReport> {
    let started = Instant::now();
    let n = spec.dim();
    if delta.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: delta.dim(),
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut witnesses = Vec::new();
    for &(i, j) in &pairs {
        let p = sym_pair(n, i, j);
        let dp = delta.image(i, j);
        for &(k, l) in &pairs {
            let q = sym_pair(n, k, l);
            let dq = delta.image(k, l);
            let lhs = delta.apply_symmetric(&spec.tensor2_mul(&p, &q)?)?;
            let rhs = spec
                .tensor2_mul(&p, dq)?
                .checked_add(&spec.tensor2_mul(dp, &q)?)?;
            let diff = lhs.checked_sub(&rhs)?;
            if !diff.is_zero() {
                witnesses.push(Witness::at(&[i, j, k, l], Residual::Tensor2(diff)));
            }
        }
    }
    Ok(CheckReport::from_witnesses(
        "derivation",
        witnesses,
        started,
    ))
}

/// `[[P]] = [P¹²,P¹³] + [P¹²,P²³] + [P¹³,P²³]`.
pub fn schouten_operator(p: &Operator2) -> Operator3 {
    let [p12, p13, p23] = Slots::ALL.map(|s| lift_operator(p, s));
    let a = p12.commutator(&p13).expect("same shape");
    let b = p12.commutator(&p23).expect("same shape");
    let c = p13.commutator(&p23).expect("same shape");
    a.checked_add(&b)
        .and_then(|ab| ab.checked_add(&c))
        .expect("same shape")
}

/// `[[P]](X)` for each element of the fully symmetric basis, with the
/// `(i, j, k)`, `i ≤ j ≤ k`, labelling the basis element.
pub fn schouten_on_symmetric(p: &Operator2) -> Vec<([usize; 3], Tensor3)> {
    let n = p.dim();
    let s = schouten_operator(p);
    let labels = (0..n).flat_map(|i| (i..n).flat_map(move |j| (j..n).map(move |k| [i, j, k])));
    labels
        .zip(symmetric_basis3(n))
        .map(|(idx, x)| (idx, s.apply(&x).expect("same shape")))
        .collect()
}

/// Jacobi criterion on the operator level: `[[δ̃]]` must annihilate every
/// fully symmetric tensor.
pub fn schouten_operator_check(bracket: &PolyBracket) -> Result<CheckReport> {
    let started = Instant::now();
    let delta = bracket_to_delta(bracket)?;
    let witnesses = schouten_on_symmetric(&delta.extension())
        .into_iter()
        .filter(|(_, t)| !t.is_zero())
        .map(|(idx, t)| Witness::at(&idx, Residual::Tensor3(t)))
        .collect();
    Ok(CheckReport::from_witnesses("schouten", witnesses, started))
}

/// Compares the Schouten expressions of `δ̃` and `δ̃ + E` on fully symmetric
/// tensors, for an `E` vanishing on symmetric tensors.
pub fn extension_independence(bracket: &PolyBracket, extra: &Operator2) -> Result<CheckReport> {
    let started = Instant::now();
    let delta = bracket_to_delta(bracket)?;
    let n = delta.dim();
    if extra.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: extra.dim(),
        });
    }
    if !extra.compose(&Operator2::sym_projector(n))?.is_zero() {
        return Err(Error::ExtensionNotVanishing);
    }
    let base = delta.extension();
    let shifted = base.checked_add(extra)?;
    let witnesses = schouten_on_symmetric(&base)
        .into_iter()
        .zip(schouten_on_symmetric(&shifted))
        .filter_map(|((idx, s1), (_, s2))| {
            let diff = s1.checked_sub(&s2).expect("same shape");
            (!diff.is_zero()).then(|| Witness::at(&idx, Residual::Tensor3(diff)))
        })
        .collect();
    Ok(CheckReport::from_witnesses(
        "extension-independence",
        witnesses,
        started,
    ))
}
