//! Exact arithmetic in the rational function field ℚ(d, β, a₁, …, a₆).
//!
//! A [`Scalar`] is a reduced fraction of polynomials whose denominator has
//! leading coefficient one, so equality and zero tests are syntactic.

mod gcd;
mod matrix;
mod poly;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use gcd::gcd as poly_gcd;
pub use matrix::{rank_det, solve_linear, ScalarMatrix};
pub use poly::{Monomial, Poly, NVARS};

/// Maximum number of `a` parameters.
pub const MAX_A: usize = NVARS - 2;

/// A named parameter of the field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    D,
    Beta,
    /// `a_i`, with `1 ≤ i ≤ 6`.
    A(u8),
}

impl Param {
    pub(crate) fn var(self) -> usize {
        match self {
            Param::D => 0,
            Param::Beta => 1,
            Param::A(i) => {
                assert!((1..=MAX_A as u8).contains(&i), "a-parameter index out of range");
                1 + i as usize
            }
        }
    }

    pub fn name(self) -> String {
        poly::var_name(self.var())
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Values for some of the parameters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParamAssignment {
    values: BTreeMap<Param, BigRational>,
}

impl ParamAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, p: Param, v: BigRational) -> Self {
        self.values.insert(p, v);
        self
    }

    pub fn set(&mut self, p: Param, v: BigRational) {
        self.values.insert(p, v);
    }

    pub fn get(&self, p: Param) -> Option<&BigRational> {
        self.values.get(&p)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Param, &BigRational)> {
        self.values.iter()
    }

    /// `d ∉ {0, 1, −1}`, the rational stand-in for "not a root of unity".
    pub fn d_is_admissible(&self) -> bool {
        match self.get(Param::D) {
            None => true,
            Some(d) => !d.is_zero() && d.abs() != BigRational::one(),
        }
    }

    pub fn beta_is_nonzero(&self) -> bool {
        self.get(Param::Beta).map_or(true, |b| !b.is_zero())
    }

    /// The assigned `a` values are pairwise distinct.
    pub fn a_are_distinct(&self) -> bool {
        let a: Vec<_> = self
            .values
            .iter()
            .filter(|(p, _)| matches!(p, Param::A(_)))
            .map(|(_, v)| v)
            .collect();
        (0..a.len()).all(|i| (i + 1..a.len()).all(|j| a[i] != a[j]))
    }

    fn point(&self) -> [Option<BigRational>; NVARS] {
        let mut pt: [Option<BigRational>; NVARS] = Default::default();
        for (p, v) in &self.values {
            pt[p.var()] = Some(v.clone());
        }
        pt
    }
}

/// An element of ℚ(d, β, a₁, …, a₆) in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Scalar { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn from_ratio(n: i64, m: i64) -> Self {
        assert!(m != 0, "zero denominator");
        Self::from_rational(BigRational::new(n.into(), m.into()))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Scalar { num: Poly::constant(q), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        Scalar { num: p, den: Poly::one() }
    }

    pub fn param(p: Param) -> Self {
        Self::from_poly(Poly::var(p.var()))
    }

    pub fn d() -> Self {
        Self::param(Param::D)
    }

    pub fn beta() -> Self {
        Self::param(Param::Beta)
    }

    pub fn a(i: u8) -> Self {
        Self::param(Param::A(i))
    }

    /// `p^k` for a parameter and any integer `k`; negative powers go to the denominator.
    pub fn param_pow(p: Param, k: i64) -> Self {
        let m = Monomial::var(p.var(), k.unsigned_abs() as u16);
        let mono = Poly::term(m, BigRational::one());
        if k >= 0 {
            Self::from_poly(mono)
        } else {
            Scalar { num: Poly::one(), den: mono }
        }
    }

    /// `d^k`, `k ∈ ℤ`.
    pub fn d_pow(k: i64) -> Self {
        Self::param_pow(Param::D, k)
    }

    /// Builds `num / den` and reduces it.
    pub fn fraction(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value if this is a rational constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    pub fn is_constant(&self) -> bool {
        self.as_rational().is_some()
    }

    fn normalize(num: Poly, den: Poly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        if let Some(c) = den.as_constant() {
            return Scalar { num: num.scale(&c.recip()), den: Poly::one() };
        }
        let (num, den) = if den.is_monomial() {
            let (dm, _) = den.lead().cloned().unwrap();
            let g = dm.gcd(&num.min_monomial());
            if g.is_one() {
                (num, den)
            } else {
                (num.div_monomial(&g), den.div_monomial(&g))
            }
        } else {
            let g = gcd::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
            }
        };
        Self::make_monic(num, den)
    }

    fn make_monic(num: Poly, den: Poly) -> Self {
        let lc = den.lead_coeff();
        if lc.is_one() {
            Scalar { num, den }
        } else {
            let inv = lc.recip();
            Scalar { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    /// Cancels `num / den` knowing that any common factor divides `hint`.
    fn reduce_with(num: Poly, den: Poly, hint: &Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if hint.is_constant() {
            return Self::make_monic(num, den);
        }
        Self::normalize(num, den)
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { other.neg_ref() } else { other.clone() };
        }
        let combine = |a: &Poly, b: &Poly| if negate { a.sub(b) } else { a.add(b) };
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(combine(&self.num, &other.num));
        }
        if self.den == other.den {
            let num = combine(&self.num, &other.num);
            return Self::reduce_with(num, self.den.clone(), &self.den);
        }
        let g = if self.den.is_one() || other.den.is_one() {
            Poly::one()
        } else if self.den.is_monomial() && other.den.is_monomial() {
            let m = self.den.lead().unwrap().0.gcd(&other.den.lead().unwrap().0);
            Poly::term(m, BigRational::one())
        } else {
            gcd::gcd(&self.den, &other.den)
        };
        let (sa, sb) = if g.is_one() {
            (other.den.clone(), self.den.clone())
        } else {
            (
                other.den.div_exact(&g).unwrap(),
                self.den.div_exact(&g).unwrap(),
            )
        };
        let num = combine(&self.num.mul(&sa), &other.num.mul(&sb));
        let den = self.den.mul(&sa);
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_monomial() {
            return Self::normalize(num, den);
        }
        Self::reduce_with(num, den, &g)
    }

    fn neg_ref(&self) -> Self {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        if let Some(c) = self.as_rational() {
            return Scalar { num: other.num.scale(&c), den: other.den.clone() };
        }
        if let Some(c) = other.as_rational() {
            return Scalar { num: self.num.scale(&c), den: self.den.clone() };
        }
        let (n1, d2) = cancel(&self.num, &other.den);
        let (n2, d1) = cancel(&other.num, &self.den);
        Self::make_monic(n1.mul(&n2), d1.mul(&d2))
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::make_monic(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul_impl(&other.inv()?))
    }

    /// `self^k` for any integer `k`.
    pub fn pow_i(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inv()?.pow_i(-k);
        }
        if k == 0 {
            return Ok(Self::one());
        }
        let e = k as u32;
        Ok(Scalar { num: self.num.pow(e), den: self.den.pow(e) })
    }

    pub fn scale_int(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Scalar { num: self.num.scale(&rat(c)), den: self.den.clone() }
    }

    /// Rendering suitable as a factor in a product: parenthesized unless atomic.
    pub fn factor_string(&self) -> String {
        if self.den.is_one() && self.num.len() <= 1 {
            let s = self.to_string();
            if self.num.lead_coeff().is_integer() || self.num.is_constant() {
                return s;
            }
            return format!("({s})");
        }
        format!("({self})")
    }

    /// Value at a point assigning every parameter that occurs.
    pub fn eval_at(&self, sigma: &ParamAssignment) -> Result<BigRational> {
        let pt = sigma.point();
        let den = self.den.eval(&pt)?;
        let num = self.num.eval(&pt)?;
        if den.is_zero() {
            return Err(Error::Pole);
        }
        Ok(num / den)
    }

    /// Substitutes the assigned parameters and keeps the rest symbolic.
    pub fn specialize(&self, sigma: &ParamAssignment) -> Result<Self> {
        let pt = sigma.point();
        let den = self.den.subst(&pt);
        if den.is_zero() {
            return Err(Error::Pole);
        }
        Ok(Self::normalize(self.num.subst(&pt), den))
    }
}

// Removes the gcd of `a` and `b` from both.
fn cancel(a: &Poly, b: &Poly) -> (Poly, Poly) {
    if b.is_one() || a.is_constant() || b.is_constant() {
        return (a.clone(), b.clone());
    }
    if b.is_monomial() || a.is_monomial() {
        let g = if b.is_monomial() {
            b.lead().unwrap().0.gcd(&a.min_monomial())
        } else {
            a.lead().unwrap().0.gcd(&b.min_monomial())
        };
        if g.is_one() {
            return (a.clone(), b.clone());
        }
        return (a.div_monomial(&g), b.div_monomial(&g));
    }
    let g = gcd::gcd(a, b);
    if g.is_one() {
        (a.clone(), b.clone())
    } else {
        (a.div_exact(&g).unwrap(), b.div_exact(&g).unwrap())
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::from_rational(q)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                $body(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                $body(&self, rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                $body(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a: &Scalar, b: &Scalar| a.add_impl(b, false));
binop!(Sub, sub, |a: &Scalar, b: &Scalar| a.add_impl(b, true));
binop!(Mul, mul, |a: &Scalar, b: &Scalar| a.mul_impl(b));

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.add_impl(rhs, false);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.add_impl(rhs, true);
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num_atomic = self.num.len() == 1 && self.num.lead_coeff().is_integer();
        if num_atomic {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        let den_atomic = self.den.len() == 1 && self.den.support().count_ones() <= 1;
        if den_atomic {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d() -> Scalar {
        Scalar::d()
    }
    fn c(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn polynomial_cancellation() {
        let x = (d() * d() - c(1)).checked_div(&(d() - c(1))).unwrap();
        assert_eq!(x, d() + c(1));
    }

    #[test]
    fn inverse_of_square() {
        let b2 = Scalar::beta() * Scalar::beta();
        assert!((b2.inv().unwrap() * &b2).is_one());
    }

    #[test]
    fn linear_combination() {
        let x = Scalar::a(1) * d() - Scalar::a(2) * d();
        assert_eq!(x, (Scalar::a(1) - Scalar::a(2)) * d());
    }

    #[test]
    fn zero_tests() {
        let x = (d() + c(1)) * (d() - c(1)) - (d() * d() - c(1));
        assert!(x.is_zero());
        assert!(!(d().pow_i(3).unwrap() - c(1)).is_zero());
        let y = c(2) - (d() + Scalar::d_pow(-1));
        assert!(!y.is_zero());
        assert_eq!(y, (c(2) * d() - d() * d() - c(1)).checked_div(&d()).unwrap());
    }

    #[test]
    fn laurent_powers_fold_into_denominator() {
        let x = Scalar::d_pow(-3);
        assert!(x.numer().is_one());
        assert_eq!(x * Scalar::d_pow(5), Scalar::d_pow(2));
        assert_eq!(Scalar::d_pow(2) + Scalar::d_pow(-2), (d().pow_i(4).unwrap() + c(1)).checked_div(&d().pow_i(2).unwrap()).unwrap());
    }

    #[test]
    fn evaluation() {
        let sigma = ParamAssignment::new().with(Param::D, rat(3));
        let x = (d() * d() - c(1)).checked_div(&(d() - c(1))).unwrap();
        assert_eq!(x.eval_at(&sigma).unwrap(), rat(4));
        let pole = c(1).checked_div(&(d() - c(1))).unwrap();
        let at1 = ParamAssignment::new().with(Param::D, rat(1));
        assert_eq!(pole.eval_at(&at1), Err(Error::Pole));
        let at5 = ParamAssignment::new().with(Param::D, rat(5));
        assert_eq!(d().eval_at(&at5).unwrap(), rat(5));
        assert!(matches!(Scalar::beta().eval_at(&at5), Err(Error::Unassigned(_))));
    }

    #[test]
    fn specialize_partially() {
        let x = (Scalar::a(1) - Scalar::a(2)) * d();
        let sigma = ParamAssignment::new().with(Param::A(1), rat(2)).with(Param::A(2), rat(2));
        assert!(x.specialize(&sigma).unwrap().is_zero());
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(c(1).checked_div(&(d() - d())), Err(Error::DivisionByZero));
        assert_eq!(Scalar::zero().pow_i(-1), Err(Error::DivisionByZero));
    }

    #[test]
    fn denominator_is_monic() {
        let x = c(1).checked_div(&(c(2) * d() + c(4))).unwrap();
        assert!(x.denom().lead_coeff().is_one());
        assert_eq!(x.to_string(), "(1/2)/(d + 2)");
    }

    #[test]
    fn admissibility_flags() {
        let s = ParamAssignment::new().with(Param::D, rat(-1));
        assert!(!s.d_is_admissible());
        let s = ParamAssignment::new().with(Param::A(1), rat(2)).with(Param::A(2), rat(2));
        assert!(!s.a_are_distinct());
    }
}
