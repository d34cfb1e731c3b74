use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// Exponent vector of a monomial, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `nvars` commuting variables `x^1..x^nvars` with
/// rational coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: Rational,
    exps: Vec<u32>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Polynomial::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    /// The coordinate function `x^{i+1}` (0-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(
            i < nvars,
            "variable index {i} out of range for {nvars} variables"
        );
        let mut p = Polynomial::zero(nvars);
        p.add_term(Monomial::var(nvars, i), Rational::one());
        p
    }

    pub fn monomial(coeff: Rational, exps: Vec<u32>) -> Self {
        let nvars = exps.len();
        let mut p = Polynomial::zero(nvars);
        p.add_term(Monomial(exps), coeff);
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, Vec<u32>)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (c, e) in terms {
            if e.len() != nvars {
                return Err(Error::VariableCountMismatch {
                    left: nvars,
                    right: e.len(),
                });
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.0.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_vars(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_vars(other)?;
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Rational) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    /// Partial derivative with respect to the 0-based variable `i`.
    pub fn partial(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut dm = m.0.clone();
            dm[i] -= 1;
            out.add_term(Monomial(dm), c * Rational::from_integer(e as i64));
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= x.pow(e);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitutes polynomial `images[i]` for variable `i`. All images must
    /// share one variable count, which becomes the variable count of the
    /// result (`target_nvars` is used when the polynomial is constant).
    pub fn substitute(&self, images: &[Polynomial], target_nvars: usize) -> Result<Polynomial> {
        if images.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: images.len(),
            });
        }
        if let Some(bad) = images.iter().find(|p| p.nvars != target_nvars) {
            return Err(Error::VariableCountMismatch {
                left: target_nvars,
                right: bad.nvars,
            });
        }
        // powers[i][e] = images[i]^e, built lazily up to the max exponent seen
        let mut powers: Vec<Vec<Polynomial>> =
            vec![vec![Polynomial::constant(target_nvars, Rational::one())]; self.nvars];
        let mut out = Polynomial::zero(target_nvars);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target_nvars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    t = &t * &powers[i][e as usize];
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Division by a single divisor under graded-lex order. Returns
    /// `(quotient, remainder)` with `self = quotient * divisor + remainder`
    /// and no term of the remainder divisible by the leading monomial of the
    /// divisor.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.check_vars(divisor)?;
        let (lm, lc) = match divisor.leading_term() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        let mut rest = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        let mut rem = Polynomial::zero(self.nvars);
        while let Some((m, c)) = rest.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            if lm.divides(&m) {
                let tm = lm.quotient_of(&m);
                let tc = &c / &lc;
                let mut step = Polynomial::zero(self.nvars);
                step.add_term(tm.clone(), tc.clone());
                rest = &rest - &(&step * divisor);
                quot.add_term(tm, tc);
            } else {
                rest.terms.remove(&m);
                rem.add_term(m, c);
            }
        }
        Ok((quot, rem))
    }

    /// `Some(h)` with `self = divisor * h` when such a polynomial exists.
    pub fn divide_exact(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        let (quot, rem) = self.div_rem(divisor)?;
        Ok(rem.is_zero().then_some(quot))
    }

    /// Drops variable `i` after checking it does not occur.
    pub fn remove_var(&self, i: usize) -> Option<Polynomial> {
        let mut out = Polynomial::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            if m.0[i] != 0 {
                return None;
            }
            let mut e = m.0.clone();
            e.remove(i);
            out.terms.insert(Monomial(e), c.clone());
        }
        Some(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("polynomial serializes")
    }

    pub fn from_json(nvars: usize, value: &serde_json::Value) -> Result<Polynomial> {
        let terms: Vec<TermJson> =
            serde_json::from_value(value.clone()).map_err(|e| Error::Malformed {
                pointer: String::new(),
                message: e.to_string(),
            })?;
        Polynomial::from_terms(nvars, terms.into_iter().map(|t| (t.coeff, t.exps)))
    }

    /// Renders with custom variable names, highest terms first.
    pub fn display_with(&self, names: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            names(i)
                        } else {
                            format!("({})^{e}", names(i))
                        }
                    })
                    .collect();
            if mono.is_empty() {
                s.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    s.push_str(&abs.to_string());
                    s.push(' ');
                }
                s.push_str(&mono.join(" "));
            }
        }
        s
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&|i| format!("x^{}", i + 1)))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.nvars, self)
    }
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in self.terms.iter().rev() {
            seq.serialize_element(&TermJson {
                coeff: c.clone(),
                exps: m.0.clone(),
            })?;
        }
        seq.end()
    }
}

// The operator forms panic on a variable-count mismatch; the `checked_*`
// methods report it instead.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("variable counts agree")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("variable counts agree")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("variable counts agree")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;
    use proptest::prelude::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    #[test]
    fn mul_examples() {
        let x1 = x(2, 0);
        let x2 = x(2, 1);
        assert_eq!(&x1 * &x1, Polynomial::monomial(q(1, 1), vec![2, 0]));
        assert!((&x1 * &Polynomial::zero(2)).is_zero());
        let lhs = &(&x1 + &x2) * &(&x1 - &x2);
        let rhs =
            &Polynomial::monomial(q(1, 1), vec![2, 0]) - &Polynomial::monomial(q(1, 1), vec![0, 2]);
        assert_eq!(lhs, rhs);
        assert!(matches!(
            x(2, 0).checked_mul(&x(3, 0)),
            Err(Error::VariableCountMismatch { .. })
        ));
    }

    #[test]
    fn divisible_examples() {
        let x1 = x(2, 0);
        let x2 = x(2, 1);
        let p = &(&x1 * &x1) - &(&x2 * &x2);
        assert_eq!(p.divide_exact(&(&x1 - &x2)).unwrap(), Some(&x1 + &x2));
        assert_eq!(x1.divide_exact(&x2).unwrap(), None);
        assert_eq!(
            Polynomial::zero(2).divide_exact(&x2).unwrap(),
            Some(Polynomial::zero(2))
        );
        assert_eq!(
            x1.divide_exact(&Polynomial::zero(2)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn eval_examples() {
        let n2 = &(&x(2, 0) * &x(2, 0)) + &(&x(2, 1) * &x(2, 1));
        assert_eq!(n2.eval(&[q(3, 5), q(4, 5)]).unwrap(), q(1, 1));
        let p = &(&x(3, 0) * &x(3, 1)) * &x(3, 2);
        assert_eq!(p.eval(&[q(1, 1), q(2, 1), q(3, 1)]).unwrap(), q(6, 1));
        let with_const = &p + &Polynomial::constant(3, q(-7, 2));
        assert_eq!(
            with_const.eval(&[q(0, 1), q(0, 1), q(0, 1)]).unwrap(),
            q(-7, 2)
        );
        assert!(p.eval(&[q(1, 1)]).is_err());
    }

    #[test]
    fn display_and_json() {
        let p = &Polynomial::monomial(q(-1, 2), vec![2, 1]) + &Polynomial::constant(2, q(3, 1));
        assert_eq!(p.to_string(), "-1/2 (x^1)^2 x^2 + 3");
        let back = Polynomial::from_json(2, &p.to_json()).unwrap();
        assert_eq!(back, p);
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"[{"coeff":"-1/2","exps":[2,1]},{"coeff":"3","exps":[0,0]}]"#
        );
    }

    #[test]
    fn substitute_and_partial() {
        // p = x1^2 x2, substitute x1 -> y1 + 1, x2 -> 2 y1
        let p = Polynomial::monomial(q(1, 1), vec![2, 1]);
        let y1 = x(1, 0);
        let one = Polynomial::constant(1, q(1, 1));
        let img = [&y1 + &one, y1.scale(&q(2, 1))];
        let s = p.substitute(&img, 1).unwrap();
        for v in [-2i64, 0, 3] {
            let pt = [q(v, 1)];
            let direct = p.eval(&[q(v + 1, 1), q(2 * v, 1)]).unwrap();
            assert_eq!(s.eval(&pt).unwrap(), direct);
        }
        assert_eq!(p.partial(0), Polynomial::monomial(q(2, 1), vec![1, 1]));
    }

    fn arb_poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(
            (
                (-4i64..=4, 1i64..=3),
                prop::collection::vec(0u32..=1, nvars),
            ),
            0..5,
        )
        .prop_map(move |ts| {
            Polynomial::from_terms(nvars, ts.into_iter().map(|((a, b), e)| (q(a, b), e))).unwrap()
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(3), r in arb_poly(3), s in arb_poly(3)) {
            prop_assert_eq!(&(&p * &r) * &s, &p * &(&r * &s));
            prop_assert_eq!(&p * &(&r + &s), &(&p * &r) + &(&p * &s));
            prop_assert_eq!(&p * &r, &r * &p);
        }

        #[test]
        fn product_is_divisible(p in arb_poly(4), d in arb_poly(4)) {
            prop_assume!(!d.is_zero());
            let prod = &p * &d;
            prop_assert_eq!(prod.divide_exact(&d).unwrap(), Some(p));
        }

        #[test]
        fn eval_is_homomorphism(p in arb_poly(3), r in arb_poly(3), pt in prop::collection::vec(-3i64..=3, 3)) {
            let pt: Vec<Rational> = pt.into_iter().map(Rational::from_integer).collect();
            let lhs = (&p * &r).eval(&pt).unwrap();
            prop_assert_eq!(lhs, p.eval(&pt).unwrap() * r.eval(&pt).unwrap());
        }
    }
}
