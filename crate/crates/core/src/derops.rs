//! Matrices over `s`-differential operators with one central extension.
//!
//! Elements are sums of `E[i,j] ⊗ ∂^r x^l` (∂ to the left of x) plus a
//! multiple of the central element `cD`. Relation: `∂ x = x (∂ + s)`, `s = nβ`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice;
use crate::lie::{LieAlgebra, LieElem};
use crate::scalars::Scalar;

/// Index of a basis monomial `E[i,j] ⊗ ∂^r x^l` (matrix indices 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DerKey {
    pub i: usize,
    pub j: usize,
    pub r: u32,
    pub l: i64,
}

#[derive(Clone, PartialEq, Eq)]
pub struct DerOp {
    n: usize,
    terms: BTreeMap<DerKey, Scalar>,
    cd: Scalar,
}

/// Root-lattice degree together with the filtration level.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiltDegree {
    pub alpha: Vec<i64>,
    pub k: u32,
}

fn add_into<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let v = e.get() + &c;
            if v.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
    }
}

pub(crate) fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::from(1);
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

fn int(b: BigInt) -> Scalar {
    Scalar::from_rational(BigRational::from_integer(b))
}

impl DerOp {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "matrix size must be positive");
        DerOp { n, terms: BTreeMap::new(), cd: Scalar::zero() }
    }

    /// `c · E[i,j] ⊗ ∂^r x^l`.
    pub fn monomial(n: usize, i: usize, j: usize, r: u32, l: i64, c: Scalar) -> Self {
        assert!((1..=n).contains(&i) && (1..=n).contains(&j), "matrix index out of range");
        let mut x = Self::zero(n);
        add_into(&mut x.terms, DerKey { i, j, r, l }, c);
        x
    }

    pub fn unit(n: usize, i: usize, j: usize, r: u32, l: i64) -> Self {
        Self::monomial(n, i, j, r, l, Scalar::one())
    }

    /// `E[i,j] ⊗ (∂ + shift)^r x^l`, expanded in powers of `∂`.
    pub fn shifted(n: usize, i: usize, j: usize, shift: &Scalar, r: u32, l: i64) -> Self {
        let mut x = Self::zero(n);
        for c in 0..=r {
            let coeff = int(binomial(r, c)) * shift.pow_i((r - c) as i64).expect("nonnegative power");
            add_into(&mut x.terms, DerKey { i, j, r: c, l }, coeff);
        }
        x
    }

    pub fn central(n: usize) -> Self {
        let mut x = Self::zero(n);
        x.cd = Scalar::one();
        x
    }

    pub fn with_central(mut self, cd: Scalar) -> Self {
        self.cd = cd;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<DerKey, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, i: usize, j: usize, r: u32, l: i64) -> Scalar {
        self.terms.get(&DerKey { i, j, r, l }).cloned().unwrap_or_default()
    }

    pub fn cd(&self) -> &Scalar {
        &self.cd
    }

    pub fn centerless(&self) -> Self {
        DerOp { n: self.n, terms: self.terms.clone(), cd: Scalar::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.cd.is_zero()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        DerOp {
            n: self.n,
            terms: self.terms.iter().map(|(key, v)| (*key, v * c)).collect(),
            cd: &self.cd * c,
        }
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        assert_eq!(self.n, other.n, "adding operators of different matrix size");
        let mut out = self.clone();
        for (key, v) in &other.terms {
            add_into(&mut out.terms, *key, if negate { -v } else { v.clone() });
        }
        if negate {
            out.cd -= &other.cd;
        } else {
            out.cd += &other.cd;
        }
        out
    }

    /// Highest power of `∂` present (zero for central or zero elements).
    pub fn max_order(&self) -> u32 {
        self.terms.keys().map(|k| k.r).max().unwrap_or(0)
    }

    /// Matrix of coefficients of `∂^r x^l`, as `(i, j) → coefficient`.
    pub fn level_matrix(&self, r: u32, l: i64) -> BTreeMap<(usize, usize), Scalar> {
        self.terms
            .iter()
            .filter(|(key, _)| key.r == r && key.l == l)
            .map(|(key, c)| ((key.i, key.j), c.clone()))
            .collect()
    }

    /// Root-lattice degree shared by all terms.
    pub fn alpha(&self) -> Result<Vec<i64>> {
        let mut it = self.terms.keys().map(|k| lattice::unit_alpha(self.n, k.i, k.j, k.l));
        let first = match it.next() {
            Some(a) => a,
            None => return Ok(vec![0; self.n]),
        };
        if it.any(|a| a != first) {
            return Err(Error::NotHomogeneous);
        }
        if !self.cd.is_zero() && first.iter().any(|&c| c != 0) {
            return Err(Error::NotHomogeneous);
        }
        Ok(first)
    }

    /// Degree and minimal filtration level. Level `k` admits every `∂`-power up
    /// to `k` but requires the `∂^k` coefficient matrices to be traceless.
    pub fn filt_degree(&self) -> Result<FiltDegree> {
        let alpha = self.alpha()?;
        if self.terms.is_empty() {
            return Ok(FiltDegree { alpha, k: 0 });
        }
        let top = self.max_order();
        let traceless = self
            .terms
            .keys()
            .filter(|key| key.r == top)
            .map(|key| key.l)
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .all(|l| {
                let tr: Scalar = (1..=self.n).map(|i| self.coeff(i, i, top, l)).sum();
                tr.is_zero()
            });
        Ok(FiltDegree { alpha, k: if traceless { top } else { top + 1 } })
    }
}

impl Add for &DerOp {
    type Output = DerOp;
    fn add(self, rhs: &DerOp) -> DerOp {
        self.combine(rhs, false)
    }
}

impl Sub for &DerOp {
    type Output = DerOp;
    fn sub(self, rhs: &DerOp) -> DerOp {
        self.combine(rhs, true)
    }
}

impl Add for DerOp {
    type Output = DerOp;
    fn add(self, rhs: DerOp) -> DerOp {
        self.combine(&rhs, false)
    }
}

impl Sub for DerOp {
    type Output = DerOp;
    fn sub(self, rhs: DerOp) -> DerOp {
        self.combine(&rhs, true)
    }
}

impl Neg for &DerOp {
    type Output = DerOp;
    fn neg(self) -> DerOp {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Display for DerOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .terms
            .iter()
            .map(|(key, c)| {
                let dpart = match key.r {
                    0 => String::new(),
                    1 => "*del".to_string(),
                    r => format!("*del^{r}"),
                };
                let xpart = match key.l {
                    0 => String::new(),
                    1 => "*x".to_string(),
                    l => format!("*x^{l}"),
                };
                format!("{}*E[{},{}]{dpart}{xpart}", c.factor_string(), key.i, key.j)
            })
            .collect();
        if !self.cd.is_zero() {
            parts.push(format!("{}*cD", self.cd.factor_string()));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for DerOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DerOp[n={}]({self})", self.n)
    }
}

impl LieElem for DerOp {
    fn size(&self) -> usize {
        self.n
    }
    fn is_zero(&self) -> bool {
        DerOp::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn scaled(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
}

/// Deliberate corruptions used to check that the verifiers can fail.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DerCocycleVariant {
    #[default]
    Standard,
    /// Evaluates `f₂` at `a·s` instead of `(a − l₁)·s` in the `l₁ > 0` branch.
    Unshifted,
}

/// Laurent polynomial vector `(row, exponent) → coefficient`.
pub type LaurentVec = BTreeMap<(usize, i64), Scalar>;

#[derive(Clone, Debug)]
pub struct DerAlgebra {
    n: usize,
    beta: Scalar,
    variant: DerCocycleVariant,
}

impl DerAlgebra {
    /// The algebra with symbolic `β`.
    pub fn new(n: usize) -> Self {
        Self::with_beta(n, Scalar::beta())
    }

    pub fn with_beta(n: usize, beta: Scalar) -> Self {
        assert!(n >= 1, "matrix size must be positive");
        DerAlgebra { n, beta, variant: DerCocycleVariant::Standard }
    }

    pub fn with_variant(mut self, variant: DerCocycleVariant) -> Self {
        self.variant = variant;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn beta(&self) -> &Scalar {
        &self.beta
    }

    /// `s = nβ`.
    pub fn s(&self) -> Scalar {
        self.beta.scale_int(self.n as i64)
    }

    fn check(&self, x: &DerOp) -> Result<()> {
        if x.n != self.n {
            return Err(Error::SizeMismatch(self.n, x.n));
        }
        Ok(())
    }

    /// Associative product of the centerless parts.
    pub fn product(&self, x: &DerOp, y: &DerOp) -> Result<DerOp> {
        self.check(x)?;
        self.check(y)?;
        let s = self.s();
        let mut out = DerOp::zero(self.n);
        for (kx, cx) in &x.terms {
            // ∂^{r₁} x^{l₁} ∂^{r₂} = ∂^{r₁} (∂ − l₁ s)^{r₂} x^{l₁}
            let shift = s.scale_int(-kx.l);
            for (ky, cy) in y.terms.range(DerKey { i: kx.j, j: 0, r: 0, l: i64::MIN }..) {
                if ky.i != kx.j {
                    break;
                }
                let base = cx * cy;
                for c in 0..=ky.r {
                    let coeff = &base
                        * int(binomial(ky.r, c))
                        * shift.pow_i((ky.r - c) as i64).expect("nonnegative power");
                    add_into(
                        &mut out.terms,
                        DerKey { i: kx.i, j: ky.j, r: kx.r + c, l: kx.l + ky.l },
                        coeff,
                    );
                }
            }
        }
        Ok(out)
    }

    // Σ_{a=0}^{l₁−1} f₁(as) f₂((a−l₁)s) for f₁ = ∂^{r₁}, f₂ = ∂^{r₂}, without the s-power.
    fn positive_branch(&self, r1: u32, r2: u32, l1: i64) -> BigInt {
        let mut acc = BigInt::zero();
        for a in 0..l1 {
            let second = match self.variant {
                DerCocycleVariant::Standard => a - l1,
                DerCocycleVariant::Unshifted => a,
            };
            acc += num_traits::pow(BigInt::from(a), r1 as usize)
                * num_traits::pow(BigInt::from(second), r2 as usize);
        }
        acc
    }

    /// The cocycle `φ` on monomials, extended bilinearly.
    pub fn cocycle(&self, x: &DerOp, y: &DerOp) -> Result<Scalar> {
        self.check(x)?;
        self.check(y)?;
        let s = self.s();
        let mut acc = Scalar::zero();
        for (kx, cx) in &x.terms {
            if kx.l == 0 {
                continue;
            }
            for (ky, cy) in y.terms.range(DerKey { i: kx.j, j: kx.i, r: 0, l: i64::MIN }..) {
                if ky.i != kx.j || ky.j != kx.i {
                    break;
                }
                if ky.l != -kx.l {
                    continue;
                }
                let sum = if kx.l > 0 {
                    self.positive_branch(kx.r, ky.r, kx.l)
                } else {
                    let mut acc = BigInt::zero();
                    for a in 0..-kx.l {
                        acc += num_traits::pow(BigInt::from(a), ky.r as usize)
                            * num_traits::pow(BigInt::from(a + kx.l), kx.r as usize);
                    }
                    -acc
                };
                if sum.is_zero() {
                    continue;
                }
                let sp = s.pow_i((kx.r + ky.r) as i64).expect("s is nonzero");
                acc += &(cx * cy * int(sum) * sp);
            }
        }
        Ok(acc)
    }

    /// Bracket in the central extension; central parts of the inputs drop out.
    pub fn bracket(&self, x: &DerOp, y: &DerOp) -> Result<DerOp> {
        let xy = self.product(x, y)?;
        let yx = self.product(y, x)?;
        let c = self.cocycle(x, y)?;
        Ok((&xy - &yx).with_central(c))
    }

    /// Action on Laurent polynomial vectors: `x` multiplies by `z`, `∂ z^m = s m z^m`.
    pub fn apply(&self, x: &DerOp, v: &LaurentVec) -> LaurentVec {
        let s = self.s();
        let mut out = LaurentVec::new();
        for (key, c) in &x.terms {
            for (&(row, m), a) in v {
                if row != key.j {
                    continue;
                }
                let e = m + key.l;
                let factor = s.scale_int(e).pow_i(key.r as i64).expect("nonnegative power");
                add_into(&mut out, (key.i, e), c * a * factor);
            }
        }
        out
    }

    pub fn oracle_apply(&self, x: &DerOp, m: i64, col: usize) -> LaurentVec {
        let mut v = LaurentVec::new();
        v.insert((col, m), Scalar::one());
        self.apply(x, &v)
    }
}

impl LieAlgebra for DerAlgebra {
    type Elem = DerOp;

    fn n(&self) -> usize {
        self.n
    }
    fn zero(&self) -> DerOp {
        DerOp::zero(self.n)
    }
    fn bracket(&self, x: &DerOp, y: &DerOp) -> Result<DerOp> {
        DerAlgebra::bracket(self, x, y)
    }
}

/// Dimension of the filtration level `≤ k` in degree `alpha`, by enumerating monomials.
pub fn filtration_dim(n: usize, alpha: &[i64], k: i64) -> usize {
    if k < 0 {
        return 0;
    }
    let l = alpha[0];
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| lattice::unit_alpha(n, i, j, l) == alpha)
        .collect();
    let has_diag = pairs.iter().any(|(i, j)| i == j);
    let mut dim = 0;
    for r in 0..=k {
        dim += pairs.len();
        if r == k && has_diag {
            // the trace of the top coefficient is constrained
            dim -= 1;
        }
    }
    dim
}

/// `dim F_k − dim F_{k−1}` in degree `alpha`.
pub fn dim_diff(n: usize, alpha: &[i64], k: u32) -> usize {
    filtration_dim(n, alpha, k as i64) - filtration_dim(n, alpha, k as i64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(n: usize) -> DerAlgebra {
        DerAlgebra::new(n)
    }

    #[test]
    fn product_rule() {
        let a = alg(2);
        let del = &DerOp::unit(2, 1, 1, 1, 0) + &DerOp::unit(2, 2, 2, 1, 0);
        let x = &DerOp::unit(2, 1, 1, 0, 1) + &DerOp::unit(2, 2, 2, 0, 1);
        let dx = &DerOp::unit(2, 1, 1, 1, 1) + &DerOp::unit(2, 2, 2, 1, 1);
        assert_eq!(a.product(&del, &x).unwrap(), dx);
        let s = a.s();
        let expected = &dx - &x.scale(&s);
        assert_eq!(a.product(&x, &del).unwrap(), expected);
    }

    #[test]
    fn loop_pair_product() {
        let a = alg(2);
        let two_beta = Scalar::beta().scale_int(2);
        for (r, s) in [(0, 0), (1, 2), (3, 1)] {
            let x = DerOp::unit(2, 2, 1, r, 1);
            let y = DerOp::shifted(2, 1, 2, &two_beta, s, -1);
            assert_eq!(a.product(&x, &y).unwrap(), DerOp::unit(2, 2, 2, r + s, 0));
        }
    }

    #[test]
    fn cocycle_values() {
        let a = alg(2);
        assert!(a.cocycle(&DerOp::unit(2, 1, 1, 0, 1), &DerOp::unit(2, 1, 1, 0, -1)).unwrap().is_one());
        let two_beta = Scalar::beta().scale_int(2);
        let x = DerOp::unit(2, 2, 1, 1, 1);
        let y = DerOp::shifted(2, 1, 2, &two_beta, 1, -1);
        assert!(a.cocycle(&x, &y).unwrap().is_zero());
        assert!(a.cocycle(&DerOp::unit(2, 1, 1, 2, 2), &DerOp::unit(2, 1, 1, 1, -1)).unwrap().is_zero());
    }

    #[test]
    fn brackets() {
        let a = alg(3);
        let del = &(&DerOp::unit(3, 1, 1, 1, 0) + &DerOp::unit(3, 2, 2, 1, 0)) + &DerOp::unit(3, 3, 3, 1, 0);
        let x = &(&DerOp::unit(3, 1, 1, 0, 1) + &DerOp::unit(3, 2, 2, 0, 1)) + &DerOp::unit(3, 3, 3, 0, 1);
        assert_eq!(a.bracket(&del, &x).unwrap(), x.scale(&Scalar::beta().scale_int(3)));

        let a = alg(2);
        let two_beta = Scalar::beta().scale_int(2);
        for (r, s) in [(0u32, 0u32), (1, 0), (2, 1)] {
            let x = DerOp::unit(2, 2, 1, r, 1);
            let y = DerOp::shifted(2, 1, 2, &two_beta, s, -1);
            let mut expected = &DerOp::unit(2, 2, 2, r + s, 0) - &DerOp::shifted(2, 1, 1, &two_beta, r + s, 0);
            if r + s == 0 {
                expected = &expected + &DerOp::central(2);
            }
            assert_eq!(a.bracket(&x, &y).unwrap(), expected);
        }
        assert!(a.bracket(&DerOp::unit(2, 1, 2, 1, 1), &DerOp::unit(2, 1, 2, 1, 1)).unwrap().is_zero());
    }

    #[test]
    fn filtration_levels() {
        let h = &DerOp::unit(2, 1, 1, 1, 1) - &DerOp::unit(2, 2, 2, 1, 1);
        assert_eq!(h.filt_degree().unwrap(), FiltDegree { alpha: vec![1, 1], k: 1 });
        let i = &DerOp::unit(2, 1, 1, 1, 1) + &DerOp::unit(2, 2, 2, 1, 1);
        assert_eq!(i.filt_degree().unwrap(), FiltDegree { alpha: vec![1, 1], k: 2 });
        let e = DerOp::unit(2, 1, 2, 0, 0);
        assert_eq!(e.filt_degree().unwrap(), FiltDegree { alpha: vec![0, 1], k: 0 });
    }

    #[test]
    fn dimension_jumps() {
        assert_eq!(dim_diff(2, &[1, 1], 0), 1);
        assert_eq!(dim_diff(2, &[1, 1], 2), 2);
        assert_eq!(dim_diff(3, &[0, 1, 2], 3), 0);
        assert_eq!(dim_diff(2, &[0, 1], 5), 1);
    }

    #[test]
    fn oracle_action() {
        let a = alg(1);
        let s = a.s();
        let v = a.oracle_apply(&DerOp::unit(1, 1, 1, 1, 0), 3, 1);
        assert_eq!(v.get(&(1, 3)), Some(&s.scale_int(3)));
        let v = a.oracle_apply(&DerOp::unit(1, 1, 1, 1, 1), 4, 1);
        assert_eq!(v.get(&(1, 5)), Some(&s.scale_int(5)));
    }
}
