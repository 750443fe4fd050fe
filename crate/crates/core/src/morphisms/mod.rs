//! The generator assignments into the operator algebras and evaluation of Lie expressions.

mod commutative;
mod miki;
mod shift;

pub use commutative::{commutative_gen, commutative_gen_with, commutative_matrix, CommutativeFamily};
pub use miki::{miki_bar, miki_bar_at, miki_bar_inv, miki_bar_inv_at};
pub use shift::{heisenberg_closed_form, shift_closed_form, ShiftElement};

use crate::derops::{DerAlgebra, DerOp};
use crate::diffops::{DiffAlgebra, DiffOp};
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, LieElem};
use crate::presentations::{Family, GenSym, LieExpr};
use crate::scalars::Scalar;

/// Which side of the correspondence a morphism lands on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Difference,
    Differential,
}

/// Deliberate corruptions of the generator images, used to check that the
/// verification suites are not vacuous.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ImageVariant {
    #[default]
    Standard,
    /// Difference side: drop the factor `d^{(n−i)k}`; differential side: drop the shift `(n−i)β`.
    DropTwist,
}

/// A Lie algebra map defined on generator symbols.
pub trait Morphism: Send + Sync {
    type Alg: LieAlgebra;

    fn n(&self) -> usize;
    fn side(&self) -> Side;
    fn algebra(&self) -> &Self::Alg;
    fn image(&self, g: &GenSym) -> Result<<Self::Alg as LieAlgebra>::Elem>;
}

/// Evaluates `expr` by sending generators to their images and brackets to brackets.
pub fn eval_expr<M: Morphism>(expr: &LieExpr, m: &M) -> Result<<M::Alg as LieAlgebra>::Elem> {
    let alg = m.algebra();
    match expr {
        LieExpr::Gen(g) => m.image(g),
        LieExpr::Scaled(c, e) => Ok(eval_expr(e, m)?.scaled(c)),
        LieExpr::Sum(parts) => {
            let mut acc = alg.zero();
            for p in parts {
                acc = acc.plus(&eval_expr(p, m)?);
            }
            Ok(acc)
        }
        LieExpr::Bracket(a, b) => {
            let x = eval_expr(a, m)?;
            if x.is_zero() {
                return Ok(alg.zero());
            }
            let y = eval_expr(b, m)?;
            alg.bracket(&x, &y)
        }
    }
}

fn check_index(n: usize, g: &GenSym) -> Result<()> {
    if g.i >= n {
        return Err(Error::IllegalGenerator(format!("{g} for n = {n}")));
    }
    Ok(())
}

/// The map from the loop-type presentation onto the difference operators.
#[derive(Clone, Debug)]
pub struct Theta {
    alg: DiffAlgebra,
    variant: ImageVariant,
}

/// The assignment with symbolic `d`.
pub fn theta(n: usize) -> Theta {
    Theta::new(DiffAlgebra::new(n))
}

impl Theta {
    pub fn new(alg: DiffAlgebra) -> Self {
        Theta { alg, variant: ImageVariant::Standard }
    }

    pub fn with_variant(mut self, variant: ImageVariant) -> Self {
        self.variant = variant;
        self
    }

    pub fn variant(&self) -> ImageVariant {
        self.variant
    }

    fn twist(&self, i: usize, k: i64) -> Scalar {
        match self.variant {
            ImageVariant::Standard => self.alg.d_pow((self.alg.n() - i) as i64 * k),
            ImageVariant::DropTwist => Scalar::one(),
        }
    }
}

impl Morphism for Theta {
    type Alg = DiffAlgebra;

    fn n(&self) -> usize {
        self.alg.n()
    }

    fn side(&self) -> Side {
        Side::Difference
    }

    fn algebra(&self) -> &DiffAlgebra {
        &self.alg
    }

    fn image(&self, g: &GenSym) -> Result<DiffOp> {
        let n = self.alg.n();
        if g.family.is_y_side() {
            return Err(Error::IllegalGenerator(format!("{g} on the difference side")));
        }
        if g.family == Family::C {
            return Ok(DiffOp::central2(n));
        }
        check_index(n, g)?;
        let (i, k) = (g.i, g.idx);
        Ok(if i == 0 {
            match g.family {
                Family::E => DiffOp::unit(n, n, 1, k, 1),
                // Z^{-1} D^k = t^k D^k Z^{-1}
                Family::F => DiffOp::monomial(n, 1, n, k, -1, self.alg.t_pow(k)),
                Family::H => {
                    let x = DiffOp::unit(n, n, n, k, 0) - DiffOp::monomial(n, 1, 1, k, 0, self.alg.t_pow(k));
                    if k == 0 {
                        x + DiffOp::central1(n)
                    } else {
                        x
                    }
                }
                _ => unreachable!(),
            }
        } else {
            let c = self.twist(i, k);
            match g.family {
                Family::E => DiffOp::monomial(n, i, i + 1, k, 0, c),
                Family::F => DiffOp::monomial(n, i + 1, i, k, 0, c),
                Family::H => DiffOp::monomial(n, i, i, k, 0, c.clone()) - DiffOp::monomial(n, i + 1, i + 1, k, 0, c),
                _ => unreachable!(),
            }
        })
    }
}

/// The map from the Yangian-type presentation onto the differential operators.
#[derive(Clone, Debug)]
pub struct Vartheta {
    alg: DerAlgebra,
    variant: ImageVariant,
}

/// The assignment with symbolic `β`.
pub fn vartheta(n: usize) -> Vartheta {
    Vartheta::new(DerAlgebra::new(n))
}

impl Vartheta {
    pub fn new(alg: DerAlgebra) -> Self {
        Vartheta { alg, variant: ImageVariant::Standard }
    }

    pub fn with_variant(mut self, variant: ImageVariant) -> Self {
        self.variant = variant;
        self
    }

    pub fn variant(&self) -> ImageVariant {
        self.variant
    }
}

impl Morphism for Vartheta {
    type Alg = DerAlgebra;

    fn n(&self) -> usize {
        self.alg.n()
    }

    fn side(&self) -> Side {
        Side::Differential
    }

    fn algebra(&self) -> &DerAlgebra {
        &self.alg
    }

    fn image(&self, g: &GenSym) -> Result<DerOp> {
        let n = self.alg.n();
        if !g.family.is_y_side() {
            return Err(Error::IllegalGenerator(format!("{g} on the differential side")));
        }
        check_index(n, g)?;
        let (i, r) = (g.i, g.idx as u32);
        let s = self.alg.s();
        Ok(if i == 0 {
            match g.family {
                Family::XPlus => DerOp::unit(n, n, 1, r, 1),
                // x^{-1} ∂^r = (∂ + s)^r x^{-1}
                Family::XMinus => DerOp::shifted(n, 1, n, &s, r, -1),
                Family::Xi => {
                    let x = DerOp::unit(n, n, n, r, 0) - DerOp::shifted(n, 1, 1, &s, r, 0);
                    if r == 0 {
                        x + DerOp::central(n)
                    } else {
                        x
                    }
                }
                _ => unreachable!(),
            }
        } else {
            let shift = match self.variant {
                ImageVariant::Standard => self.alg.beta().scale_int((n - i) as i64),
                ImageVariant::DropTwist => Scalar::zero(),
            };
            match g.family {
                Family::XPlus => DerOp::shifted(n, i, i + 1, &shift, r, 0),
                Family::XMinus => DerOp::shifted(n, i + 1, i, &shift, r, 0),
                Family::Xi => DerOp::shifted(n, i, i, &shift, r, 0) - DerOp::shifted(n, i + 1, i + 1, &shift, r, 0),
                _ => unreachable!(),
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::GenSym as G;

    #[test]
    fn theta_examples() {
        let th = theta(2);
        assert_eq!(th.image(&G::e(0, 2)).unwrap(), DiffOp::unit(2, 2, 1, 2, 1));
        assert_eq!(th.image(&G::c()).unwrap(), DiffOp::central2(2));
        for n in 1..=4 {
            let th = theta(n);
            let total = LieExpr::sum((0..n).map(|i| LieExpr::gen(G::h(i, 0))).collect());
            assert_eq!(eval_expr(&total, &th).unwrap(), DiffOp::central1(n));
        }
        let rel = LieExpr::br(G::e(0, 1), G::f(0, -1)).minus(LieExpr::gen(G::h(0, 0))).minus(LieExpr::gen(G::c()));
        assert!(eval_expr(&rel, &th).unwrap().is_zero());
        assert!(matches!(th.image(&G::xp(0, 0)), Err(Error::IllegalGenerator(_))));
        assert!(matches!(th.image(&G::e(2, 0)), Err(Error::IllegalGenerator(_))));
    }

    #[test]
    fn vartheta_examples() {
        let vt = vartheta(2);
        let beta = Scalar::beta();
        for r in 0..4u32 {
            assert_eq!(vt.image(&G::xp(1, r)).unwrap(), DerOp::shifted(2, 1, 2, &beta, r, 0));
        }
        let total = LieExpr::sum((0..2).map(|i| LieExpr::gen(G::xi(i, 0))).collect());
        assert_eq!(eval_expr(&total, &vt).unwrap(), DerOp::central(2));
        for r in 0..3u32 {
            for s in 0..3u32 {
                let rel = LieExpr::br(G::xp(0, r), G::xm(0, s)).minus(LieExpr::gen(G::xi(0, r + s)));
                assert!(eval_expr(&rel, &vt).unwrap().is_zero(), "r={r} s={s}");
            }
        }
    }

    #[test]
    fn images_are_homogeneous() {
        for n in 1..=4 {
            let th = theta(n);
            let vt = vartheta(n);
            for i in 0..n {
                for k in -2..=2 {
                    for g in [G::e(i, k), G::f(i, k), G::h(i, k)] {
                        let x = th.image(&g).unwrap();
                        x.degree().unwrap();
                        assert!(x.is_traceless());
                    }
                }
                for r in 0..3 {
                    for g in [G::xp(i, r), G::xm(i, r), G::xi(i, r)] {
                        let x = vt.image(&g).unwrap();
                        // for n = 1 the top coefficient of x^{±1} terms is a nonzero scalar
                        let bound = if n == 1 { r + 1 } else { r };
                        assert!(x.filt_degree().unwrap().k <= bound, "{g} n={n}");
                    }
                }
            }
        }
    }
}
