//! Small predicates and generators shared by the suites.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::derops::DerOp;
use crate::diffops::{DiffKey, DiffOp};
use crate::error::Result;
use crate::lie::LieElem;
use crate::morphisms::CommutativeFamily;
use crate::scalars::Scalar;

/// `Ok(None)` for zero, the rendered element otherwise.
pub(crate) fn residual<E: LieElem>(x: Result<E>) -> Result<Option<String>> {
    let x = x?;
    Ok(if x.is_zero() { None } else { Some(x.to_string()) })
}

/// `Ok(None)` when `lhs == rhs`, the rendered difference otherwise.
pub(crate) fn mismatch<E: LieElem>(lhs: Result<E>, rhs: Result<E>) -> Result<Option<String>> {
    residual(Ok(lhs?.minus(&rhs?)))
}

pub(crate) fn verdict(ok: bool, msg: impl FnOnce() -> String) -> Result<Option<String>> {
    Ok(if ok { None } else { Some(msg()) })
}

/// Coordinates of `x` in a basis of single monomials, or `None` if `x` leaves their span.
pub(crate) fn coords(x: &DiffOp, basis: &[DiffOp]) -> Option<Vec<Scalar>> {
    if !x.c1().is_zero() || !x.c2().is_zero() {
        return None;
    }
    let keys: Vec<DiffKey> = basis
        .iter()
        .map(|b| {
            assert_eq!(b.terms().len(), 1, "basis element is not a monomial");
            *b.terms().keys().next().unwrap()
        })
        .collect();
    if x.terms().keys().any(|k| !keys.contains(k)) {
        return None;
    }
    Some(
        keys.iter()
            .zip(basis)
            .map(|(k, b)| x.coeff(k.i, k.j, k.k, k.l).checked_div(&b.coeff(k.i, k.j, k.k, k.l)).unwrap())
            .collect(),
    )
}

/// Every `D`-level matrix (at each fixed `Z`-exponent) has trace zero.
pub(crate) fn traceless_levels(x: &DiffOp) -> bool {
    let mut traces: std::collections::BTreeMap<(i64, i64), Scalar> = Default::default();
    for (k, c) in x.terms() {
        if k.i == k.j {
            *traces.entry((k.k, k.l)).or_default() += c;
        }
    }
    traces.values().all(Scalar::is_zero)
}

/// In `sl_n[D, D^{-1}] ⊕ ℂc⁽²⁾`.
pub(crate) fn in_vertical(x: &DiffOp) -> bool {
    x.c1().is_zero() && x.terms().keys().all(|k| k.l == 0) && traceless_levels(x)
}

/// In `sl_n[Z, Z^{-1}] ⊕ ℂc⁽¹⁾`.
pub(crate) fn in_horizontal(x: &DiffOp) -> bool {
    x.c2().is_zero() && x.terms().keys().all(|k| k.k == 0) && traceless_levels(x)
}

/// In `gl_n[D, D^{-1}]⁰ ⊕ ℂc⁽²⁾`: no `Z`, traceless constant term, no `c⁽¹⁾`.
pub(crate) fn in_vertical_gl(x: &DiffOp) -> bool {
    x.c1().is_zero() && x.terms().keys().all(|k| k.l == 0) && x.is_traceless()
}

fn small_coeff(rng: &mut ChaCha8Rng) -> Scalar {
    let c: i64 = rng.gen_range(1..=3);
    Scalar::from_int(if rng.gen_bool(0.5) { c } else { -c })
}

pub(crate) fn random_diff_monomial(rng: &mut ChaCha8Rng, n: usize, w: i64) -> DiffOp {
    let (i, j) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
    let (k, l) = (rng.gen_range(-w..=w), rng.gen_range(-w..=w));
    DiffOp::monomial(n, i, j, k, l, small_coeff(rng))
}

pub(crate) fn random_der_monomial(rng: &mut ChaCha8Rng, n: usize, w: i64) -> DerOp {
    let (i, j) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
    let (r, l) = (rng.gen_range(0..=w as u32), rng.gen_range(-w..=w));
    DerOp::monomial(n, i, j, r, l, small_coeff(rng))
}

/// Three monomials; every other call returns a triple of total degree zero with cyclic
/// matrix indices `(i,j), (j,k), (k,i)`, the only triples on which the cocycles enter Jacobi.
pub(crate) fn random_diff_triple(rng: &mut ChaCha8Rng, n: usize, w: i64) -> [DiffOp; 3] {
    if rng.gen_bool(0.5) {
        return std::array::from_fn(|_| random_diff_monomial(rng, n, w));
    }
    let ix: [usize; 3] = std::array::from_fn(|_| rng.gen_range(1..=n));
    let (k1, k2, l1, l2) = (rng.gen_range(-w..=w), rng.gen_range(-w..=w), rng.gen_range(-w..=w), rng.gen_range(-w..=w));
    [
        DiffOp::monomial(n, ix[0], ix[1], k1, l1, small_coeff(rng)),
        DiffOp::monomial(n, ix[1], ix[2], k2, l2, small_coeff(rng)),
        DiffOp::monomial(n, ix[2], ix[0], -k1 - k2, -l1 - l2, small_coeff(rng)),
    ]
}

/// As [`random_diff_triple`]; only the `x`-degree can be balanced on this side.
pub(crate) fn random_der_triple(rng: &mut ChaCha8Rng, n: usize, w: i64) -> [DerOp; 3] {
    if rng.gen_bool(0.5) {
        return std::array::from_fn(|_| random_der_monomial(rng, n, w));
    }
    let ix: [usize; 3] = std::array::from_fn(|_| rng.gen_range(1..=n));
    let r: [u32; 3] = std::array::from_fn(|_| rng.gen_range(0..=w as u32));
    let (l1, l2) = (rng.gen_range(-w..=w), rng.gen_range(-w..=w));
    [
        DerOp::monomial(n, ix[0], ix[1], r[0], l1, small_coeff(rng)),
        DerOp::monomial(n, ix[1], ix[2], r[1], l2, small_coeff(rng)),
        DerOp::monomial(n, ix[2], ix[0], r[2], -l1 - l2, small_coeff(rng)),
    ]
}

pub(crate) fn random_diff_element(rng: &mut ChaCha8Rng, n: usize, w: i64) -> DiffOp {
    let terms = rng.gen_range(1..=3);
    (0..terms).fold(DiffOp::zero(n), |acc, _| acc + random_diff_monomial(rng, n, w))
}

pub(crate) fn random_der_element(rng: &mut ChaCha8Rng, n: usize, w: i64) -> DerOp {
    let terms = rng.gen_range(1..=3);
    (0..terms).fold(DerOp::zero(n), |acc, _| acc + random_der_monomial(rng, n, w))
}

/// A traceless monomial-sized element: off the `(0, 0)` diagonal as is, otherwise `E_ii − E_jj`.
pub(crate) fn random_traceless(rng: &mut ChaCha8Rng, n: usize, w: i64) -> DiffOp {
    let x = random_diff_monomial(rng, n, w);
    let key = *x.terms().keys().next().unwrap();
    if key.i == key.j && key.k == 0 && key.l == 0 {
        let other = if n == 1 { key.i } else { key.i % n + 1 };
        DiffOp::unit(n, key.i, key.i, 0, 0) - DiffOp::unit(n, other, other, 0, 0)
    } else {
        x
    }
}

/// Ways in which parameters fail to be generic for the commutative family:
/// coinciding `a_i` or `d` a root of unity.
pub fn genericity_violations(family: &CommutativeFamily) -> Vec<String> {
    let mut out = Vec::new();
    for p in 0..family.a.len() {
        for q in p + 1..family.a.len() {
            if family.a[p] == family.a[q] {
                out.push(format!("a{} = a{}", p + 1, q + 1));
            }
        }
    }
    if let Some(d) = family.d.as_rational() {
        let one = num_rational::BigRational::from_integer(1.into());
        if d == one || d == -one.clone() || d == num_rational::BigRational::from_integer(0.into()) {
            out.push(format!("d = {d} is zero or a root of unity"));
        }
    }
    out
}
