//! Sparse multivariate polynomials over ℚ in the fixed parameter set
//! `d, β, a₁, …, a₆`.
//!
//! Terms are kept sorted in descending graded-lexicographic order with `d`
//! as the most significant variable; no stored coefficient is zero.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Number of variable slots: `d`, `β` and six `a` parameters.
pub const NVARS: usize = 8;

/// Exponent vector of a power product.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub(crate) [u16; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(v: usize, e: u16) -> Self {
        let mut m = Self::ONE;
        m.0[v] = e;
        m
    }

    pub fn exp(&self, v: usize) -> u16 {
        self.0[v]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = *self;
        for (o, e) in out.0.iter_mut().zip(other.0.iter()) {
            *o = o.checked_add(*e).expect("monomial exponent overflow");
        }
        out
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`; the caller guarantees divisibility.
    pub fn div(&self, other: &Self) -> Self {
        let mut out = *self;
        for (o, e) in out.0.iter_mut().zip(other.0.iter()) {
            *o -= *e;
        }
        out
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut out = *self;
        for (o, e) in out.0.iter_mut().zip(other.0.iter()) {
            *o = (*o).min(*e);
        }
        out
    }

    pub fn scale(&self, k: u16) -> Self {
        let mut out = *self;
        for o in out.0.iter_mut() {
            *o = o.checked_mul(k).expect("monomial exponent overflow");
        }
        out
    }

    /// Bit set of variables with positive exponent.
    pub fn support(&self) -> u16 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |acc, (v, _)| acc | (1 << v))
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

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

pub(crate) fn var_name(v: usize) -> String {
    match v {
        0 => "d".to_string(),
        1 => "beta".to_string(),
        _ => format!("a{}", v - 1),
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, BigRational)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn var(v: usize) -> Self {
        Self::term(Monomial::var(v, 1), BigRational::one())
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut acc: HashMap<Monomial, BigRational> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(BigRational::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn lead(&self) -> Option<&(Monomial, BigRational)> {
        self.terms.first()
    }

    pub fn lead_coeff(&self) -> BigRational {
        self.lead().map(|t| t.1.clone()).unwrap_or_else(BigRational::zero)
    }

    pub fn support(&self) -> u16 {
        self.terms.iter().fold(0, |acc, (m, _)| acc | m.support())
    }

    pub fn degree_in(&self, v: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_monomial(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::ONE,
            Some((m, _)) => it.fold(*m, |acc, (m, _)| acc.gcd(m)),
        }
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_term(&self, mono: &Monomial, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (m.mul(mono), x * c)).collect(),
        }
    }

    /// Divides every term by `mono`; the caller guarantees divisibility.
    pub fn div_monomial(&self, mono: &Monomial) -> Self {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.div(mono), c.clone())).collect(),
        }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for (m, c) in &b[j..] {
            out.push((*m, if negate { -c } else { c.clone() }));
        }
        Poly { terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        Self::from_terms(self.terms.iter().flat_map(|(ma, ca)| {
            other.terms.iter().map(move |(mb, cb)| (ma.mul(mb), ca * cb))
        }))
    }

    pub fn pow(&self, e: u32) -> Self {
        if self.is_monomial() {
            let (m, c) = &self.terms[0];
            return Self::term(m.scale(e as u16), num_traits::pow(c.clone(), e as usize));
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (lm, lc) = divisor.lead()?;
        if divisor.is_monomial() {
            if !self.terms.iter().all(|(m, _)| lm.divides(m)) {
                return None;
            }
            let inv = lc.recip();
            return Some(Poly {
                terms: self.terms.iter().map(|(m, c)| (m.div(lm), c * &inv)).collect(),
            });
        }
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((rm, rc)) = rem.lead().cloned() {
            if !lm.divides(&rm) {
                return None;
            }
            let qm = rm.div(lm);
            let qc = rc / lc;
            rem = rem.sub(&divisor.mul_term(&qm, &qc));
            quot.push((qm, qc));
        }
        Some(Poly { terms: quot })
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Scales to integer coefficients with unit content and positive leading coefficient.
    pub fn integer_primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        let mut factor = BigRational::new(den_lcm, num_gcd);
        if self.lead_coeff().is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Splits into coefficients of powers of `v` (index = exponent of `v`).
    pub fn to_univariate(&self, v: usize) -> Vec<Poly> {
        let deg = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, BigRational)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            let mut rest = *m;
            rest.0[v] = 0;
            buckets[e].push((rest, c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut t| {
                t.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                Poly { terms: t }
            })
            .collect()
    }

    pub fn from_univariate(v: usize, coeffs: &[Poly]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().flat_map(|(e, p)| {
            let shift = Monomial::var(v, e as u16);
            p.terms.iter().map(move |(m, c)| (m.mul(&shift), c.clone()))
        }))
    }

    /// Evaluates at a point; every variable occurring must be assigned.
    pub fn eval(&self, point: &[Option<BigRational>; NVARS]) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let x = point[v].as_ref().ok_or_else(|| Error::Unassigned(var_name(v)))?;
                t *= num_traits::pow(x.clone(), e as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitutes the assigned variables, leaving the others symbolic.
    pub fn subst(&self, point: &[Option<BigRational>; NVARS]) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let mut rest = *m;
            let mut t = c.clone();
            for (v, x) in point.iter().enumerate() {
                if let Some(x) = x {
                    let e = rest.0[v];
                    if e > 0 {
                        t *= num_traits::pow(x.clone(), e as usize);
                        rest.0[v] = 0;
                    }
                }
            }
            (rest, t)
        }))
    }
}

fn fmt_monomial(m: &Monomial) -> String {
    let parts: Vec<String> = m
        .0
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(v, &e)| {
            if e == 1 {
                var_name(v)
            } else {
                format!("{}^{}", var_name(v), e)
            }
        })
        .collect();
    parts.join("*")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", fmt_monomial(m))?;
            } else {
                write!(f, "{abs}*{}", fmt_monomial(m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn d() -> Poly {
        Poly::var(0)
    }

    #[test]
    fn grlex_orders_by_degree_then_d_first() {
        let d2 = Monomial::var(0, 2);
        let b3 = Monomial::var(1, 3);
        let d1b1 = Monomial::var(0, 1).mul(&Monomial::var(1, 1));
        let b2 = Monomial::var(1, 2);
        assert!(b3 > d2);
        assert!(d1b1 > b2);
        assert!(d2 > d1b1);
    }

    #[test]
    fn exact_division_and_failure() {
        let p = d().mul(&d()).sub(&Poly::one()); // d^2 - 1
        let f = d().sub(&Poly::one());
        let qt = p.div_exact(&f).unwrap();
        assert_eq!(qt, d().add(&Poly::one()));
        assert!(p.div_exact(&d()).is_none());
    }

    #[test]
    fn univariate_split_roundtrip() {
        let p = Poly::from_terms(vec![
            (Monomial::var(0, 2).mul(&Monomial::var(1, 1)), q(3)),
            (Monomial::var(1, 2), q(-1)),
            (Monomial::ONE, q(5)),
        ]);
        let parts = p.to_univariate(1);
        assert_eq!(parts.len(), 3);
        assert_eq!(Poly::from_univariate(1, &parts), p);
    }

    #[test]
    fn display_is_canonical() {
        let p = Poly::from_terms(vec![
            (Monomial::var(0, 2), q(1)),
            (Monomial::var(1, 1), q(-2)),
            (Monomial::ONE, BigRational::new(1.into(), 2.into())),
        ]);
        assert_eq!(p.to_string(), "d^2 - 2*beta + 1/2");
    }

    #[test]
    fn integer_primitive_clears_denominators() {
        let p = Poly::from_terms(vec![
            (Monomial::var(0, 1), BigRational::new((-2).into(), 3.into())),
            (Monomial::ONE, BigRational::new(4.into(), 9.into())),
        ]);
        let pp = p.integer_primitive();
        assert_eq!(pp.terms()[0].1, q(3));
        assert_eq!(pp.terms()[1].1, q(-2));
    }
}
