//! Coboundary brackets: the derivation `δ(x) = [r, x]` of `A⊗A` for an
//! antisymmetric `r`, its Schouten element `[[r, r]]` and the criteria
//! deciding whether the resulting quadratic bracket is Poisson.

use std::time::Instant;

use crate::algebra::{symmetric_basis3, AlgebraSpec, Tensor2, Tensor3};
use crate::bracket::{delta_to_bracket, DeltaMap, PolyBracket};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::report::{CheckReport, Residual, Witness};

/// `r = Σ r^{ij} e_i⊗e_j ∈ A∧A`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RMatrix(Tensor2);

impl RMatrix {
    /// Rejects input that is not antisymmetric, naming the first bad `(i, j)`.
    pub fn new(t: Tensor2) -> Result<Self> {
        let n = t.dim();
        for i in 0..n {
            for j in 0..=i {
                if t.get([i, j]) != &-t.get([j, i]) {
                    return Err(Error::NotAntisymmetric { i, j });
                }
            }
        }
        Ok(RMatrix(t))
    }

    pub fn zero(n: usize) -> Self {
        RMatrix(Tensor2::zeros(n))
    }

    /// `a ∧ b = a⊗b - b⊗a`.
    pub fn wedge(a: &[Rational], b: &[Rational]) -> Result<Self> {
        Tensor2::wedge(a, b).map(RMatrix)
    }

    /// `e_i ∧ e_j` in dimension `n`.
    pub fn basis_wedge(n: usize, i: usize, j: usize) -> Self {
        let mut t = Tensor2::basis(n, [i, j]);
        t.add_at([j, i], &-Rational::one());
        RMatrix(t)
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn tensor(&self) -> &Tensor2 {
        &self.0
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        self.0.get([i, j])
    }

    pub fn checked_add(&self, other: &RMatrix) -> Result<RMatrix> {
        self.0.checked_add(&other.0).map(RMatrix)
    }

    pub fn scale(&self, s: &Rational) -> RMatrix {
        RMatrix(self.0.scale(s))
    }

    /// Re-indexes into a space of dimension `new_dim` via `map[i]`, e.g. to
    /// carry `r ∈ 𝔤∧𝔤` into `⟨1⟩⊕𝔤`.
    pub fn embed(&self, new_dim: usize, map: &[usize]) -> Result<RMatrix> {
        if map.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: map.len(),
            });
        }
        let mut t = Tensor2::zeros(new_dim);
        for ([i, j], v) in self.0.nonzero() {
            t.set([map[i], map[j]], v.clone());
        }
        Ok(RMatrix(t))
    }
}

fn check_dim(spec: &AlgebraSpec, r: &RMatrix) -> Result<()> {
    if r.dim() != spec.dim() {
        return Err(Error::DimensionMismatch {
            expected: spec.dim(),
            found: r.dim(),
        });
    }
    Ok(())
}

/// `[[r, r]] = [r¹²,r¹³] + [r¹²,r²³] + [r¹³,r²³]`, contracted directly:
/// `Σ r^{ij} r^{kl} ([e_i,e_k]⊗e_j⊗e_l + e_i⊗[e_j,e_k]⊗e_l + e_i⊗e_k⊗[e_j,e_l])`.
pub fn element_schouten(spec: &AlgebraSpec, r: &RMatrix) -> Result<Tensor3> {
    check_dim(spec, r)?;
    let n = spec.dim();
    let brackets: Vec<Vec<Vec<(usize, Rational)>>> = (0..n)
        .map(|a| (0..n).map(|b| spec.basis_commutator(a, b)).collect())
        .collect();
    let entries: Vec<([usize; 2], &Rational)> = r.0.nonzero().collect();
    let mut out = Tensor3::zeros(n);
    for ([i, j], rij) in &entries {
        for ([k, l], rkl) in &entries {
            let w = *rij * *rkl;
            for (m, c) in &brackets[*i][*k] {
                out.add_at([*m, *j, *l], &(&w * c));
            }
            for (m, c) in &brackets[*j][*k] {
                out.add_at([*i, *m, *l], &(&w * c));
            }
            for (m, c) in &brackets[*j][*l] {
                out.add_at([*i, *k, *m], &(&w * c));
            }
        }
    }
    Ok(out)
}

/// Classical Yang–Baxter equation `[[r, r]] = 0`.
pub fn cybe_check(spec: &AlgebraSpec, r: &RMatrix) -> Result<CheckReport> {
    let started = Instant::now();
    let t = element_schouten(spec, r)?;
    let witnesses = if t.is_zero() {
        Vec::new()
    } else {
        vec![Witness::at(&[], Residual::Tensor3(t))]
    };
    Ok(CheckReport::from_witnesses("cybe", witnesses, started))
}

/// `[[r, r]]` must commute with every fully symmetric tensor; checked on the
/// symmetric basis, labelled by `i ≤ j ≤ k`.
pub fn mybe_check(spec: &AlgebraSpec, r: &RMatrix) -> Result<CheckReport> {
    let started = Instant::now();
    let t = element_schouten(spec, r)?;
    let n = spec.dim();
    let labels = (0..n).flat_map(|i| (i..n).flat_map(move |j| (j..n).map(move |k| [i, j, k])));
    let mut witnesses = Vec::new();
    if !t.is_zero() {
        for (idx, x) in labels.zip(symmetric_basis3(n)) {
            let c = spec.tensor_commutator(&t, &x)?;
            if !c.is_zero() {
                witnesses.push(Witness::at(&idx, Residual::Tensor3(c)));
            }
        }
    }
    Ok(CheckReport::from_witnesses("mybe", witnesses, started))
}

/// On a unital algebra: `[[r, r]]` must commute with
/// `x⊗1⊗1 + 1⊗x⊗1 + 1⊗1⊗x` for every basis vector `x`.
pub fn ad_invariance_check(spec: &AlgebraSpec, r: &RMatrix) -> Result<CheckReport> {
    let started = Instant::now();
    check_dim(spec, r)?;
    let unit = spec.find_unit().ok_or(Error::NoUnit)?;
    let t = element_schouten(spec, r)?;
    let n = spec.dim();
    let mut witnesses = Vec::new();
    for x in 0..n {
        let e = spec.basis_vector(x);
        let d = Tensor3::pure([&e, &unit, &unit])?
            .checked_add(&Tensor3::pure([&unit, &e, &unit])?)?
            .checked_add(&Tensor3::pure([&unit, &unit, &e])?)?;
        let c = spec.tensor_commutator(&t, &d)?;
        if !c.is_zero() {
            witnesses.push(Witness::at(&[x], Residual::Tensor3(c)));
        }
    }
    Ok(CheckReport::from_witnesses(
        "ad-invariance",
        witnesses,
        started,
    ))
}

/// `δ(e_k⊗e_l + e_l⊗e_k) = [r, e_k⊗e_l + e_l⊗e_k]` in the tensor square.
pub fn coboundary_delta(spec: &AlgebraSpec, r: &RMatrix) -> Result<DeltaMap> {
    check_dim(spec, r)?;
    let n = spec.dim();
    let mut images = Vec::with_capacity(n * (n + 1) / 2);
    for k in 0..n {
        for l in k..n {
            let mut s = Tensor2::basis(n, [k, l]);
            s.add_at([l, k], &Rational::one());
            images.push(spec.tensor_commutator(r.tensor(), &s)?);
        }
    }
    DeltaMap::new(n, images)
}

/// The quadratic bracket dual to `δ(x) = [r, x]`.
pub fn derive_bracket_from_r(spec: &AlgebraSpec, r: &RMatrix) -> Result<PolyBracket> {
    Ok(delta_to_bracket(&coboundary_delta(spec, r)?))
}
