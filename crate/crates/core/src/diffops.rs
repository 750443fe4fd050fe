//! Matrices over `t`-difference operators with their two central extensions.
//!
//! An element is a finite sum of `E[i,j] ⊗ D^k Z^l` (always with `D` to the
//! left of `Z`) plus multiples of the central elements `c1` and `c2`.
//! Relation: `D Z = t Z D`, with `t = d^n`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice;
use crate::lie::{LieAlgebra, LieElem};
use crate::scalars::Scalar;

/// Index of a basis monomial `E[i,j] ⊗ D^k Z^l` (matrix indices 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiffKey {
    pub i: usize,
    pub j: usize,
    pub k: i64,
    pub l: i64,
}

#[derive(Clone, PartialEq, Eq)]
pub struct DiffOp {
    n: usize,
    terms: BTreeMap<DiffKey, Scalar>,
    c1: Scalar,
    c2: Scalar,
}

/// Grading by the root lattice and the `D`-exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiffDegree {
    pub alpha: Vec<i64>,
    pub k: i64,
}

impl DiffDegree {
    pub fn new(alpha: Vec<i64>, k: i64) -> Self {
        DiffDegree { alpha, k }
    }

    pub fn zero(n: usize) -> Self {
        DiffDegree { alpha: vec![0; n], k: 0 }
    }

    pub fn add(&self, other: &Self) -> Self {
        DiffDegree {
            alpha: self.alpha.iter().zip(&other.alpha).map(|(a, b)| a + b).collect(),
            k: self.k + other.k,
        }
    }
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

impl DiffOp {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "matrix size must be positive");
        DiffOp { n, terms: BTreeMap::new(), c1: Scalar::zero(), c2: Scalar::zero() }
    }

    /// `c · E[i,j] ⊗ D^k Z^l`.
    pub fn monomial(n: usize, i: usize, j: usize, k: i64, l: i64, c: Scalar) -> Self {
        assert!((1..=n).contains(&i) && (1..=n).contains(&j), "matrix index out of range");
        let mut x = Self::zero(n);
        add_into(&mut x.terms, DiffKey { i, j, k, l }, c);
        x
    }

    /// `E[i,j] ⊗ D^k Z^l`.
    pub fn unit(n: usize, i: usize, j: usize, k: i64, l: i64) -> Self {
        Self::monomial(n, i, j, k, l, Scalar::one())
    }

    /// `A ⊗ D^k Z^l` for a diagonal matrix `A = diag(entries)`.
    pub fn diagonal(entries: &[Scalar], k: i64, l: i64) -> Self {
        let n = entries.len();
        let mut x = Self::zero(n);
        for (p, c) in entries.iter().enumerate() {
            add_into(&mut x.terms, DiffKey { i: p + 1, j: p + 1, k, l }, c.clone());
        }
        x
    }

    /// `I ⊗ D^k Z^l`.
    pub fn identity(n: usize, k: i64, l: i64) -> Self {
        Self::diagonal(&vec![Scalar::one(); n], k, l)
    }

    pub fn central1(n: usize) -> Self {
        let mut x = Self::zero(n);
        x.c1 = Scalar::one();
        x
    }

    pub fn central2(n: usize) -> Self {
        let mut x = Self::zero(n);
        x.c2 = Scalar::one();
        x
    }

    pub fn with_centrals(mut self, c1: Scalar, c2: Scalar) -> Self {
        self.c1 = c1;
        self.c2 = c2;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<DiffKey, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, i: usize, j: usize, k: i64, l: i64) -> Scalar {
        self.terms.get(&DiffKey { i, j, k, l }).cloned().unwrap_or_default()
    }

    pub fn c1(&self) -> &Scalar {
        &self.c1
    }

    pub fn c2(&self) -> &Scalar {
        &self.c2
    }

    /// The same element with both central coordinates removed.
    pub fn centerless(&self) -> Self {
        DiffOp { n: self.n, terms: self.terms.clone(), c1: Scalar::zero(), c2: Scalar::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.c1.is_zero() && self.c2.is_zero()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        DiffOp {
            n: self.n,
            terms: self.terms.iter().map(|(key, v)| (*key, v * c)).collect(),
            c1: &self.c1 * c,
            c2: &self.c2 * c,
        }
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        assert_eq!(self.n, other.n, "adding operators of different matrix size");
        let mut out = self.clone();
        for (key, v) in &other.terms {
            add_into(&mut out.terms, *key, if negate { -v } else { v.clone() });
        }
        if negate {
            out.c1 -= &other.c1;
            out.c2 -= &other.c2;
        } else {
            out.c1 += &other.c1;
            out.c2 += &other.c2;
        }
        out
    }

    /// Trace of the matrix coefficient of `D^0 Z^0` vanishes.
    pub fn is_traceless(&self) -> bool {
        let tr: Scalar = (1..=self.n).map(|i| self.coeff(i, i, 0, 0)).sum();
        tr.is_zero()
    }

    /// The common degree of all terms; central parts sit in degree zero.
    pub fn degree(&self) -> Result<DiffDegree> {
        let mut degs = self
            .terms
            .keys()
            .map(|key| DiffDegree::new(lattice::unit_alpha(self.n, key.i, key.j, key.l), key.k));
        let first = match degs.next() {
            Some(d) => d,
            None => return Ok(DiffDegree::zero(self.n)),
        };
        if degs.any(|d| d != first) {
            return Err(Error::NotHomogeneous);
        }
        if (!self.c1.is_zero() || !self.c2.is_zero()) && first != DiffDegree::zero(self.n) {
            return Err(Error::NotHomogeneous);
        }
        Ok(first)
    }
}

impl Add for &DiffOp {
    type Output = DiffOp;
    fn add(self, rhs: &DiffOp) -> DiffOp {
        self.combine(rhs, false)
    }
}

impl Sub for &DiffOp {
    type Output = DiffOp;
    fn sub(self, rhs: &DiffOp) -> DiffOp {
        self.combine(rhs, true)
    }
}

impl Add for DiffOp {
    type Output = DiffOp;
    fn add(self, rhs: DiffOp) -> DiffOp {
        self.combine(&rhs, false)
    }
}

impl Sub for DiffOp {
    type Output = DiffOp;
    fn sub(self, rhs: DiffOp) -> DiffOp {
        self.combine(&rhs, true)
    }
}

impl Neg for &DiffOp {
    type Output = DiffOp;
    fn neg(self) -> DiffOp {
        self.scale(&-Scalar::one())
    }
}

fn fmt_exp(name: &str, e: i64) -> String {
    match e {
        0 => String::new(),
        1 => format!("*{name}"),
        _ => format!("*{name}^{e}"),
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .terms
            .iter()
            .map(|(key, c)| {
                format!(
                    "{}*E[{},{}]{}{}",
                    c.factor_string(),
                    key.i,
                    key.j,
                    fmt_exp("D", key.k),
                    fmt_exp("Z", key.l)
                )
            })
            .collect();
        if !self.c1.is_zero() {
            parts.push(format!("{}*c1", self.c1.factor_string()));
        }
        if !self.c2.is_zero() {
            parts.push(format!("{}*c2", self.c2.factor_string()));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffOp[n={}]({self})", self.n)
    }
}

impl LieElem for DiffOp {
    fn size(&self) -> usize {
        self.n
    }
    fn is_zero(&self) -> bool {
        DiffOp::is_zero(self)
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
pub enum DiffCocycleVariant {
    #[default]
    Standard,
    /// Drops the factor `t^{k₁ l₁}` from both cocycles.
    DropTwist,
}

/// A vector of Laurent polynomials: `(row, exponent) → coefficient`.
pub type LaurentVec = BTreeMap<(usize, i64), Scalar>;

/// The algebra at a fixed size `n` and parameter value `d`.
#[derive(Clone, Debug)]
pub struct DiffAlgebra {
    n: usize,
    d: Scalar,
    variant: DiffCocycleVariant,
}

impl DiffAlgebra {
    /// The algebra with symbolic `d`.
    pub fn new(n: usize) -> Self {
        Self::with_d(n, Scalar::d())
    }

    pub fn with_d(n: usize, d: Scalar) -> Self {
        assert!(n >= 1, "matrix size must be positive");
        DiffAlgebra { n, d, variant: DiffCocycleVariant::Standard }
    }

    pub fn with_variant(mut self, variant: DiffCocycleVariant) -> Self {
        self.variant = variant;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> &Scalar {
        &self.d
    }

    /// `d^e`.
    pub fn d_pow(&self, e: i64) -> Scalar {
        self.d.pow_i(e).expect("d is nonzero")
    }

    /// `t^e = d^{n e}`.
    pub fn t_pow(&self, e: i64) -> Scalar {
        self.d_pow(self.n as i64 * e)
    }

    pub fn t(&self) -> Scalar {
        self.t_pow(1)
    }

    fn check(&self, x: &DiffOp) -> Result<()> {
        if x.n != self.n {
            return Err(Error::SizeMismatch(self.n, x.n));
        }
        Ok(())
    }

    /// Associative product of the centerless parts.
    pub fn product(&self, x: &DiffOp, y: &DiffOp) -> Result<DiffOp> {
        self.check(x)?;
        self.check(y)?;
        let mut out = DiffOp::zero(self.n);
        for (kx, cx) in &x.terms {
            for (ky, cy) in y.terms.range(DiffKey { i: kx.j, j: 0, k: i64::MIN, l: i64::MIN }..) {
                if ky.i != kx.j {
                    break;
                }
                let c = cx * cy * self.t_pow(-kx.l * ky.k);
                add_into(
                    &mut out.terms,
                    DiffKey { i: kx.i, j: ky.j, k: kx.k + ky.k, l: kx.l + ky.l },
                    c,
                );
            }
        }
        Ok(out)
    }

    fn cocycle(&self, x: &DiffOp, y: &DiffOp, second: bool) -> Result<Scalar> {
        self.check(x)?;
        self.check(y)?;
        let mut acc = Scalar::zero();
        for (kx, cx) in &x.terms {
            let lead = if second { kx.k } else { kx.l };
            if lead == 0 {
                continue;
            }
            // tr(E[i,j] E[j,i]) = 1 is the only nonzero trace
            let Some(cy) = y.terms.get(&DiffKey { i: kx.j, j: kx.i, k: -kx.k, l: -kx.l }) else {
                continue;
            };
            let twist = match self.variant {
                DiffCocycleVariant::Standard => self.t_pow(kx.k * kx.l),
                DiffCocycleVariant::DropTwist => Scalar::one(),
            };
            acc += &(cx * cy * twist).scale_int(lead);
        }
        Ok(acc)
    }

    /// `φ₁(M₁⊗D^{k₁}Z^{l₁}, M₂⊗D^{k₂}Z^{l₂}) = l₁ t^{k₁l₁} δ_{k₁,−k₂} δ_{l₁,−l₂} tr(M₁M₂)`.
    pub fn cocycle1(&self, x: &DiffOp, y: &DiffOp) -> Result<Scalar> {
        self.cocycle(x, y, false)
    }

    /// As [`cocycle1`](Self::cocycle1) with leading factor `k₁`.
    pub fn cocycle2(&self, x: &DiffOp, y: &DiffOp) -> Result<Scalar> {
        self.cocycle(x, y, true)
    }

    /// Bracket in the central extension; central parts of the inputs drop out.
    pub fn bracket(&self, x: &DiffOp, y: &DiffOp) -> Result<DiffOp> {
        let xy = self.product(x, y)?;
        let yx = self.product(y, x)?;
        let c1 = self.cocycle1(x, y)?;
        let c2 = self.cocycle2(x, y)?;
        Ok((&xy - &yx).with_centrals(c1, c2))
    }

    /// Action on a vector of Laurent polynomials, `D: z ↦ t z`, `Z`: multiplication by `z`.
    pub fn apply(&self, x: &DiffOp, v: &LaurentVec) -> LaurentVec {
        let mut out = LaurentVec::new();
        for (key, c) in &x.terms {
            for (&(row, m), a) in v {
                if row != key.j {
                    continue;
                }
                let e = m + key.l;
                add_into(&mut out, (key.i, e), c * a * self.t_pow(key.k * e));
            }
        }
        out
    }

    /// Image of the basis vector `e_col z^m`.
    pub fn oracle_apply(&self, x: &DiffOp, m: i64, col: usize) -> LaurentVec {
        let mut v = LaurentVec::new();
        v.insert((col, m), Scalar::one());
        self.apply(x, &v)
    }

    /// A basis of the graded piece of the traceless subalgebra (centrals excluded).
    pub fn graded_basis(&self, deg: &DiffDegree) -> Vec<DiffOp> {
        graded_basis(self.n, deg)
    }
}

/// Enumerates a basis of the degree-`deg` piece of the traceless subalgebra.
pub fn graded_basis(n: usize, deg: &DiffDegree) -> Vec<DiffOp> {
    assert_eq!(deg.alpha.len(), n, "degree has wrong length");
    let l = deg.alpha[0];
    let mut offdiag = Vec::new();
    let mut diag = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if lattice::unit_alpha(n, i, j, l) != deg.alpha {
                continue;
            }
            if i == j {
                diag.push(i);
            } else {
                offdiag.push(DiffOp::unit(n, i, j, deg.k, l));
            }
        }
    }
    if deg.k == 0 && l == 0 && !diag.is_empty() {
        // traceless diagonal: E[i,i] − E[i+1,i+1]
        for w in diag.windows(2) {
            offdiag.push(&DiffOp::unit(n, w[0], w[0], 0, 0) - &DiffOp::unit(n, w[1], w[1], 0, 0));
        }
    } else {
        offdiag.extend(diag.into_iter().map(|i| DiffOp::unit(n, i, i, deg.k, l)));
    }
    offdiag
}

impl LieAlgebra for DiffAlgebra {
    type Elem = DiffOp;

    fn n(&self) -> usize {
        self.n
    }
    fn zero(&self) -> DiffOp {
        DiffOp::zero(self.n)
    }
    fn bracket(&self, x: &DiffOp, y: &DiffOp) -> Result<DiffOp> {
        DiffAlgebra::bracket(self, x, y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(n: usize) -> DiffAlgebra {
        DiffAlgebra::new(n)
    }

    #[test]
    fn product_reorders_z_past_d() {
        let a = alg(2);
        let x = DiffOp::unit(2, 1, 2, 1, 1);
        let y = DiffOp::unit(2, 2, 1, 1, -1);
        let p = a.product(&x, &y).unwrap();
        assert_eq!(p, DiffOp::monomial(2, 1, 1, 2, 0, Scalar::d_pow(-2)));

        for n in 1..=3 {
            let a = alg(n);
            let p = a.product(&DiffOp::identity(n, 0, 1), &DiffOp::identity(n, 1, 0)).unwrap();
            assert_eq!(p, DiffOp::identity(n, 1, 1).scale(&Scalar::d_pow(-(n as i64))));
        }
    }

    #[test]
    fn matrix_units_annihilate() {
        let a = alg(3);
        let p = a.product(&DiffOp::unit(3, 1, 2, 0, 0), &DiffOp::unit(3, 3, 1, 0, 0)).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn cocycle_values() {
        let a = alg(2);
        let x = DiffOp::unit(2, 1, 2, 0, 1);
        let y = DiffOp::unit(2, 2, 1, 0, -1);
        assert!(a.cocycle1(&x, &y).unwrap().is_one());
        assert!(a.cocycle2(&x, &y).unwrap().is_zero());
        let i = DiffOp::identity(2, 1, 0);
        assert!(a.cocycle1(&i, &i).unwrap().is_zero());
    }

    #[test]
    fn brackets() {
        let a = alg(2);
        let x = DiffOp::unit(2, 1, 2, 0, 1);
        let y = DiffOp::unit(2, 2, 1, 0, -1);
        let expected = &(&DiffOp::unit(2, 1, 1, 0, 0) - &DiffOp::unit(2, 2, 2, 0, 0)) + &DiffOp::central1(2);
        assert_eq!(a.bracket(&x, &y).unwrap(), expected);

        let n = 3;
        let a = alg(n);
        let b = a.bracket(&DiffOp::identity(n, 1, 0), &DiffOp::identity(n, 0, 1)).unwrap();
        let coef = Scalar::one() - Scalar::d_pow(-3);
        assert_eq!(b, DiffOp::identity(n, 1, 1).scale(&coef));
        assert!(alg(2).bracket(&x.scale(&Scalar::d()), &x.scale(&Scalar::d())).unwrap().is_zero());
    }

    #[test]
    fn central_inputs_are_annihilated() {
        let a = alg(2);
        let x = &DiffOp::unit(2, 1, 2, 0, 1) + &DiffOp::central1(2);
        let y = &DiffOp::unit(2, 2, 1, 0, -1) + &DiffOp::central2(2);
        let plain = a.bracket(&x.centerless(), &y.centerless()).unwrap();
        assert_eq!(a.bracket(&x, &y).unwrap(), plain);
    }

    #[test]
    fn degrees() {
        let x = DiffOp::unit(3, 1, 2, 3, 0);
        assert_eq!(x.degree().unwrap(), DiffDegree::new(vec![0, 1, 0], 3));
        let y = DiffOp::unit(2, 2, 1, 1, 1);
        assert_eq!(y.degree().unwrap(), DiffDegree::new(vec![1, 0], 1));
        let z = &DiffOp::identity(2, 0, 0) + &DiffOp::central1(2);
        assert_eq!(z.degree().unwrap(), DiffDegree::zero(2));
        let w = &DiffOp::unit(2, 1, 2, 0, 0) + &DiffOp::unit(2, 1, 1, 0, 0);
        assert_eq!(w.degree(), Err(Error::NotHomogeneous));
    }

    #[test]
    fn traceless_flag() {
        let h = &DiffOp::unit(2, 1, 1, 0, 0) - &DiffOp::unit(2, 2, 2, 0, 0);
        assert!(h.is_traceless());
        assert!(DiffOp::identity(3, 2, 0).is_traceless());
        assert!(!DiffOp::identity(3, 0, 0).is_traceless());
    }

    #[test]
    fn graded_pieces() {
        let b = graded_basis(2, &DiffDegree::new(vec![1, 1], 1));
        assert_eq!(b, vec![DiffOp::unit(2, 1, 1, 1, 1), DiffOp::unit(2, 2, 2, 1, 1)]);
        let b = graded_basis(3, &DiffDegree::new(vec![0, 1, 0], 0));
        assert_eq!(b, vec![DiffOp::unit(3, 1, 2, 0, 0)]);
        let b = graded_basis(2, &DiffDegree::zero(2));
        assert_eq!(b.len(), 1);
        assert!(b[0].is_traceless());
    }

    #[test]
    fn oracle_action() {
        let a = alg(2);
        let v = a.oracle_apply(&DiffOp::identity(2, 1, 0), 3, 2);
        assert_eq!(v.get(&(2, 3)), Some(&a.t_pow(3)));
        let v = a.oracle_apply(&DiffOp::unit(2, 1, 2, 0, 1), 0, 2);
        assert_eq!(v.into_iter().collect::<Vec<_>>(), vec![((1, 1), Scalar::one())]);
    }

    #[test]
    fn size_mismatch() {
        let a = alg(2);
        assert_eq!(
            a.product(&DiffOp::unit(3, 1, 1, 0, 0), &DiffOp::unit(2, 1, 1, 0, 0)),
            Err(Error::SizeMismatch(2, 3))
        );
    }
}
