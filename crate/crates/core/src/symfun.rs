//! Polynomials in power sums `p₁, p₂, …`: Newton expressions for elementary and hook monomial
//! symmetric functions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// A product `p_{λ₁} p_{λ₂} ⋯`, stored as the weakly decreasing list of indices.
pub type PowerMonomial = Vec<u32>;

/// A rational polynomial in the power sums.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SymPoly {
    terms: BTreeMap<PowerMonomial, BigRational>,
}

impl SymPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Vec::new(), BigRational::one())
    }

    /// `c · p_λ` (indices in any order).
    pub fn monomial(mut lambda: PowerMonomial, c: BigRational) -> Self {
        lambda.sort_unstable_by(|a, b| b.cmp(a));
        let mut s = Self::zero();
        if !c.is_zero() {
            s.terms.insert(lambda, c);
        }
        s
    }

    /// The single power sum `p_r`.
    pub fn p(r: u32) -> Self {
        Self::monomial(vec![r], BigRational::one())
    }

    pub fn terms(&self) -> &BTreeMap<PowerMonomial, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest power-sum index occurring.
    pub fn max_index(&self) -> u32 {
        self.terms.keys().filter_map(|m| m.first().copied()).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: PowerMonomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut m: Vec<u32> = m1.iter().chain(m2).copied().collect();
                m.sort_unstable_by(|a, b| b.cmp(a));
                out.add_term(m, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for r in m {
                write!(f, "*p{r}")?;
            }
        }
        Ok(())
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Elementary symmetric `e_0, …, e_k` in power sums via `j·e_j = Σ_{i=1}^{j} (−1)^{i−1} e_{j−i} p_i`.
fn elementary_up_to(k: u32) -> Vec<SymPoly> {
    let mut es = vec![SymPoly::one()];
    for j in 1..=k {
        let mut acc = SymPoly::zero();
        for i in 1..=j {
            let sign = if i % 2 == 1 { 1 } else { -1 };
            acc = acc.add(&es[(j - i) as usize].mul(&SymPoly::p(i)).scale(&rat(sign)));
        }
        es.push(acc.scale(&BigRational::new(BigInt::one(), BigInt::from(j))));
    }
    es
}

/// The elementary symmetric function `e_k` as a polynomial in `p₁, …, p_k`.
pub fn p_poly(k: u32) -> SymPoly {
    assert!(k >= 1, "degree must be positive");
    elementary_up_to(k).pop().expect("nonempty")
}

/// The monomial symmetric function of the hook partition `(a, 1^{k−a})` in power sums.
///
/// For `a ≥ 2` this is `Σ_{j=0}^{k−a} (−1)^j p_{a+j} e_{k−a−j}`; for `a = 1` it is `e_k`.
pub fn mixed_sym_poly(k: u32, a: u32) -> SymPoly {
    assert!(1 <= a && a <= k, "need 1 ≤ a ≤ k");
    if a == 1 {
        return p_poly(k);
    }
    let b = k - a;
    let es = elementary_up_to(b);
    let mut acc = SymPoly::zero();
    for j in 0..=b {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        acc = acc.add(&SymPoly::p(a + j).mul(&es[(b - j) as usize]).scale(&rat(sign)));
    }
    acc
}

/// Substitutes `p_r = values[r−1]`.
pub fn sym_poly_eval(poly: &SymPoly, values: &[Scalar]) -> Result<Scalar> {
    let needed = poly.max_index() as usize;
    if values.len() < needed {
        return Err(Error::Arity { needed, got: values.len() });
    }
    let mut total = Scalar::zero();
    for (m, c) in &poly.terms {
        let mut term = Scalar::from_rational(c.clone());
        for &r in m {
            term = term * &values[r as usize - 1];
        }
        total += &term;
    }
    Ok(total)
}

/// Power sums `p_1, …, p_k` of the multiset `values`.
pub fn power_sums(values: &[Scalar], k: u32) -> Vec<Scalar> {
    (1..=k)
        .map(|r| values.iter().map(|v| v.pow_i(i64::from(r)).expect("nonnegative power")).sum())
        .collect()
}

/// `p_r = (d^{rkn} − 1)/(d^{rn} − 1)` for `r = 1..k`: the power sums of `1, d^n, …, d^{(k−1)n}`.
pub fn geometric_power_sums(k: u32, n: u32, d: &Scalar) -> Result<Vec<Scalar>> {
    let (k, n) = (i64::from(k), i64::from(n));
    (1..=k)
        .map(|r| {
            let num = d.pow_i(r * k * n)? - Scalar::one();
            let den = d.pow_i(r * n)? - Scalar::one();
            num.checked_div(&den)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, m: i64) -> BigRational {
        BigRational::new(n.into(), m.into())
    }

    #[test]
    fn newton_low_degrees() {
        assert_eq!(p_poly(1), SymPoly::p(1));
        let e2 = SymPoly::monomial(vec![1, 1], q(1, 2)).add(&SymPoly::monomial(vec![2], q(-1, 2)));
        assert_eq!(p_poly(2), e2);
        let e3 = SymPoly::monomial(vec![1, 1, 1], q(1, 6))
            .add(&SymPoly::monomial(vec![2, 1], q(-1, 2)))
            .add(&SymPoly::monomial(vec![3], q(1, 3)));
        assert_eq!(p_poly(3), e3);
    }

    #[test]
    fn hooks() {
        assert_eq!(mixed_sym_poly(4, 1), p_poly(4));
        assert_eq!(mixed_sym_poly(2, 2), SymPoly::p(2));
        let m21 = SymPoly::monomial(vec![2, 1], q(1, 1)).add(&SymPoly::monomial(vec![3], q(-1, 1)));
        assert_eq!(mixed_sym_poly(3, 2), m21);
    }

    #[test]
    fn evaluations() {
        let two = Scalar::from_int(2);
        assert_eq!(sym_poly_eval(&p_poly(2), &[two.clone(), two]).unwrap(), Scalar::one());
        let d = Scalar::d();
        let ps = geometric_power_sums(2, 2, &d).unwrap();
        assert_eq!(sym_poly_eval(&p_poly(2), &ps).unwrap(), Scalar::d_pow(2));
        assert!(matches!(sym_poly_eval(&p_poly(3), &[Scalar::one()]), Err(Error::Arity { needed: 3, got: 1 })));
    }
}
