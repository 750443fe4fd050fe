//! Generators, bracket expressions and the defining relations of the two
//! presented Lie algebras: the loop-type algebra with generators
//! `e, f, h` (indices in `ℤ`) and central `c`, and the Yangian-type algebra
//! with generators `x⁺, x⁻, ξ` (indices in `ℤ₊`).

mod catalog;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::Scalar;

pub use catalog::{u_relations, u_relations_at, u_tags, y_relations, y_relations_at, y_tags};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    E,
    F,
    H,
    C,
    XPlus,
    XMinus,
    Xi,
}

impl Family {
    /// Whether the family belongs to the Yangian-type side.
    pub fn is_y_side(self) -> bool {
        matches!(self, Family::XPlus | Family::XMinus | Family::Xi)
    }
}

/// A generator symbol. `i` is a residue mod `n`; `c` carries `i = idx = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenSym {
    pub family: Family,
    pub i: usize,
    pub idx: i64,
}

impl GenSym {
    pub fn e(i: usize, k: i64) -> Self {
        GenSym { family: Family::E, i, idx: k }
    }
    pub fn f(i: usize, k: i64) -> Self {
        GenSym { family: Family::F, i, idx: k }
    }
    pub fn h(i: usize, k: i64) -> Self {
        GenSym { family: Family::H, i, idx: k }
    }
    pub fn c() -> Self {
        GenSym { family: Family::C, i: 0, idx: 0 }
    }
    pub fn xp(i: usize, r: u32) -> Self {
        GenSym { family: Family::XPlus, i, idx: r as i64 }
    }
    pub fn xm(i: usize, r: u32) -> Self {
        GenSym { family: Family::XMinus, i, idx: r as i64 }
    }
    /// `x⁺` for `sign > 0`, `x⁻` otherwise.
    pub fn x(sign: i64, i: usize, r: u32) -> Self {
        if sign > 0 {
            Self::xp(i, r)
        } else {
            Self::xm(i, r)
        }
    }
    pub fn xi(i: usize, r: u32) -> Self {
        GenSym { family: Family::Xi, i, idx: r as i64 }
    }
}

impl fmt::Display for GenSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.family {
            Family::E => "e",
            Family::F => "f",
            Family::H => "h",
            Family::C => return write!(f, "c"),
            Family::XPlus => "x+",
            Family::XMinus => "x-",
            Family::Xi => "xi",
        };
        write!(f, "{name}[{},{}]", self.i, self.idx)
    }
}

/// A formal Lie expression over generator symbols.
#[derive(Clone, Debug, PartialEq)]
pub enum LieExpr {
    Gen(GenSym),
    Scaled(Scalar, Box<LieExpr>),
    Sum(Vec<LieExpr>),
    Bracket(Box<LieExpr>, Box<LieExpr>),
}

impl LieExpr {
    pub fn gen(g: GenSym) -> Self {
        LieExpr::Gen(g)
    }

    pub fn bracket(a: LieExpr, b: LieExpr) -> Self {
        LieExpr::Bracket(Box::new(a), Box::new(b))
    }

    pub fn br(a: GenSym, b: GenSym) -> Self {
        Self::bracket(Self::gen(a), Self::gen(b))
    }

    pub fn scale(self, c: Scalar) -> Self {
        LieExpr::Scaled(c, Box::new(self))
    }

    pub fn sum(parts: Vec<LieExpr>) -> Self {
        LieExpr::Sum(parts)
    }

    pub fn zero() -> Self {
        LieExpr::Sum(Vec::new())
    }

    /// `self − other`.
    pub fn minus(self, other: LieExpr) -> Self {
        LieExpr::Sum(vec![self, other.scale(-Scalar::one())])
    }

    /// `self + other`.
    pub fn plus(self, other: LieExpr) -> Self {
        LieExpr::Sum(vec![self, other])
    }

    /// Every generator occurring, with repetition.
    pub fn generators(&self) -> Vec<GenSym> {
        let mut out = Vec::new();
        self.collect_generators(&mut out);
        out
    }

    fn collect_generators(&self, out: &mut Vec<GenSym>) {
        match self {
            LieExpr::Gen(g) => out.push(*g),
            LieExpr::Scaled(_, e) => e.collect_generators(out),
            LieExpr::Sum(v) => v.iter().for_each(|e| e.collect_generators(out)),
            LieExpr::Bracket(a, b) => {
                a.collect_generators(out);
                b.collect_generators(out);
            }
        }
    }

    /// Multilinear expansion into a combination of bracket words.
    pub fn expand(&self) -> BTreeMap<Word, Scalar> {
        let mut out = BTreeMap::new();
        for (w, c) in self.expand_list() {
            let v = out.remove(&w).unwrap_or_else(Scalar::zero) + c;
            if !v.is_zero() {
                out.insert(w, v);
            }
        }
        out
    }

    fn expand_list(&self) -> Vec<(Word, Scalar)> {
        match self {
            LieExpr::Gen(g) => vec![(Word::Gen(*g), Scalar::one())],
            LieExpr::Scaled(c, e) => e.expand_list().into_iter().map(|(w, x)| (w, x * c)).collect(),
            LieExpr::Sum(v) => v.iter().flat_map(|e| e.expand_list()).collect(),
            LieExpr::Bracket(a, b) => {
                let la = a.expand_list();
                let lb = b.expand_list();
                let mut out = Vec::with_capacity(la.len() * lb.len());
                for (wa, ca) in &la {
                    for (wb, cb) in &lb {
                        out.push((Word::Br(Box::new(wa.clone()), Box::new(wb.clone())), ca * cb));
                    }
                }
                out
            }
        }
    }
}

impl fmt::Display for LieExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieExpr::Gen(g) => write!(f, "{g}"),
            LieExpr::Scaled(c, e) => write!(f, "{}*{e}", c.factor_string()),
            LieExpr::Sum(v) if v.is_empty() => write!(f, "0"),
            LieExpr::Sum(v) => {
                let parts: Vec<String> = v.iter().map(|e| e.to_string()).collect();
                write!(f, "({})", parts.join(" + "))
            }
            LieExpr::Bracket(a, b) => write!(f, "[{a}, {b}]"),
        }
    }
}

/// A bracket monomial: a binary tree with generator leaves.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Word {
    Gen(GenSym),
    Br(Box<Word>, Box<Word>),
}

impl Word {
    pub fn leaves(&self) -> Vec<GenSym> {
        match self {
            Word::Gen(g) => vec![*g],
            Word::Br(a, b) => {
                let mut v = a.leaves();
                v.extend(b.leaves());
                v
            }
        }
    }
}

/// A value in a relation's parameter record.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Str(String),
}

impl From<i64> for ParamValue {
    fn from(v: i64) -> Self {
        ParamValue::Int(v)
    }
}

impl From<usize> for ParamValue {
    fn from(v: usize) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<u32> for ParamValue {
    fn from(v: u32) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<&str> for ParamValue {
    fn from(v: &str) -> Self {
        ParamValue::Str(v.to_string())
    }
}

pub type Params = BTreeMap<String, ParamValue>;

/// Builds a parameter record from `(name, value)` pairs.
pub fn params<const N: usize>(items: [(&str, ParamValue); N]) -> Params {
    items.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// One instance of a defining relation, stored as `LHS − RHS`.
#[derive(Clone, Debug)]
pub struct RelationInstance {
    pub family: String,
    pub params: Params,
    pub expr: LieExpr,
}

/// `a_{i,j} = 2δ_{i,j} − δ_{i,j+1} − δ_{i,j−1}` with indices mod `n`.
pub fn cartan(n: usize, i: usize, j: usize) -> i64 {
    let (i, j) = (i % n, j % n);
    2 * i64::from(i == j) - i64::from(i == (j + 1) % n) - i64::from(i == (j + n - 1) % n)
}

/// `m_{i,j} = δ_{i,j+1} − δ_{i,j−1}` with indices mod `n`.
pub fn twist(n: usize, i: usize, j: usize) -> i64 {
    let (i, j) = (i % n, j % n);
    i64::from(i == (j + 1) % n) - i64::from(i == (j + n - 1) % n)
}

/// The constants `b̄(i,j;k)` at symbolic `d`.
pub fn bbar(n: usize, i: usize, j: usize, k: i64) -> Result<Scalar> {
    bbar_at(n, i, j, k, &Scalar::d())
}

/// `b̄(i,j;k)`: `a_{i,j} d^{−k m_{i,j}}` for `n > 2`,
/// `2δ_{i,j} − (d^k + d^{−k}) δ_{i,j+1}` for `n = 2` and `2 − d^k − d^{−k}` for `n = 1`.
pub fn bbar_at(n: usize, i: usize, j: usize, k: i64, d: &Scalar) -> Result<Scalar> {
    if k == 0 {
        return Err(Error::ZeroMode);
    }
    let dk = d.pow_i(k)?;
    let dmk = d.pow_i(-k)?;
    Ok(match n {
        1 => Scalar::from_int(2) - dk - dmk,
        2 => {
            if i % 2 == j % 2 {
                Scalar::from_int(2)
            } else {
                -(dk + dmk)
            }
        }
        _ => {
            let a = cartan(n, i, j);
            if a == 0 {
                Scalar::zero()
            } else {
                d.pow_i(-k * twist(n, i, j))?.scale_int(a)
            }
        }
    })
}

/// Right-nested commutator `[a₁,[a₂,[…,a_N]]]`.
pub fn nested_commutator(seq: &[GenSym]) -> Result<LieExpr> {
    let (last, rest) = seq
        .split_last()
        .ok_or_else(|| Error::BadSequence("empty sequence".into()))?;
    Ok(rest
        .iter()
        .rev()
        .fold(LieExpr::gen(*last), |acc, g| LieExpr::bracket(LieExpr::gen(*g), acc)))
}

/// Checks that `seq` runs through consecutive residues mod `n` in one family.
pub fn check_cyclic(n: usize, seq: &[GenSym]) -> Result<()> {
    let first = seq.first().ok_or_else(|| Error::BadSequence("empty sequence".into()))?;
    for (p, g) in seq.iter().enumerate() {
        if g.family != first.family {
            return Err(Error::BadSequence(format!("mixed families at position {p}")));
        }
        if g.i != (first.i + p) % n {
            return Err(Error::BadSequence(format!("residue {} at position {p}", g.i)));
        }
    }
    Ok(())
}

/// `[ē_{i,a}; ē_{i+1,0}; …; ē_{i−1,b}]` of length `l·n`.
pub fn v_comm(n: usize, i: usize, l: usize, a: i64, b: i64) -> Result<LieExpr> {
    let len = l * n;
    if n == 0 || len < 2 {
        return Err(Error::BadSequence(format!("length {len} is too short")));
    }
    let seq: Vec<GenSym> = (0..len)
        .map(|p| {
            let idx = if p == 0 {
                a
            } else if p == len - 1 {
                b
            } else {
                0
            };
            GenSym::e((i + p) % n, idx)
        })
        .collect();
    check_cyclic(n, &seq)?;
    nested_commutator(&seq)
}

/// `[x̄⁺_{i,a}; x̄⁺_{i+1,0}; …; x̄⁺_{i,0}; x̄⁺_{i+1,b}]` of length `2l`, residues mod 2.
pub fn w_comm(i: usize, l: usize, a: u32, b: u32) -> Result<LieExpr> {
    let len = 2 * l;
    if len < 2 {
        return Err(Error::BadSequence("length must be positive".into()));
    }
    let seq: Vec<GenSym> = (0..len)
        .map(|p| {
            let idx = if p == 0 {
                a
            } else if p == len - 1 {
                b
            } else {
                0
            };
            GenSym::xp((i + p) % 2, idx)
        })
        .collect();
    check_cyclic(2, &seq)?;
    nested_commutator(&seq)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structure_constants() {
        assert_eq!(cartan(3, 1, 1), 2);
        assert_eq!(cartan(3, 1, 2), -1);
        assert_eq!(cartan(2, 0, 1), -2);
        assert_eq!(twist(3, 1, 2), -1);
        assert_eq!(twist(3, 2, 1), 1);
        assert_eq!(twist(2, 0, 1), 0);
        assert_eq!(cartan(4, 0, 2), 0);
    }

    #[test]
    fn bbar_values() {
        let d = Scalar::d();
        assert_eq!(bbar(2, 0, 1, 1).unwrap(), -(&d + &Scalar::d_pow(-1)));
        assert_eq!(bbar(3, 1, 1, 5).unwrap(), Scalar::from_int(2));
        assert_eq!(bbar(3, 1, 2, 2).unwrap(), -Scalar::d_pow(2));
        assert_eq!(bbar(3, 1, 2, 0), Err(Error::ZeroMode));
        assert_eq!(bbar(1, 0, 0, 2).unwrap(), Scalar::from_int(2) - Scalar::d_pow(2) - Scalar::d_pow(-2));
    }

    #[test]
    fn commutator_builders() {
        let v = v_comm(2, 0, 1, 1, -1).unwrap();
        assert_eq!(v, LieExpr::br(GenSym::e(0, 1), GenSym::e(1, -1)));
        let w = w_comm(1, 1, 0, 1).unwrap();
        assert_eq!(w, LieExpr::br(GenSym::xp(1, 0), GenSym::xp(0, 1)));
        assert_eq!(nested_commutator(&[GenSym::h(0, 3)]).unwrap(), LieExpr::gen(GenSym::h(0, 3)));
        let v = v_comm(3, 2, 1, 4, 5).unwrap();
        let expected = LieExpr::bracket(
            LieExpr::gen(GenSym::e(2, 4)),
            LieExpr::br(GenSym::e(0, 0), GenSym::e(1, 5)),
        );
        assert_eq!(v, expected);
        assert!(matches!(v_comm(1, 0, 1, 0, 0), Err(Error::BadSequence(_))));
        assert!(check_cyclic(3, &[GenSym::e(0, 0), GenSym::e(2, 0)]).is_err());
    }

    #[test]
    fn expansion_is_multilinear() {
        let a = LieExpr::gen(GenSym::e(0, 0)).plus(LieExpr::gen(GenSym::e(1, 0)).scale(Scalar::from_int(2)));
        let b = LieExpr::gen(GenSym::f(0, 0));
        let x = LieExpr::bracket(a, b).minus(LieExpr::br(GenSym::e(0, 0), GenSym::f(0, 0)));
        let ex = x.expand();
        assert_eq!(ex.len(), 1);
        let (w, c) = ex.into_iter().next().unwrap();
        assert_eq!(w.leaves(), vec![GenSym::e(1, 0), GenSym::f(0, 0)]);
        assert_eq!(c, Scalar::from_int(2));
    }
}
