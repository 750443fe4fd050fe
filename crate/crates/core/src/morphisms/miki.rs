//! The rotation automorphism of the centrally extended difference operators.

use crate::diffops::DiffOp;
use crate::scalars::Scalar;

// Coefficient λ with D^k Z^l ↦ λ · D^l Z^{-k}:
// d^{-nk} (-d)^{nl} from the assignment and t^{kl} from reordering Z^{-k} D^l.
fn rotation_coeff(n: i64, k: i64, l: i64, d: &Scalar) -> Scalar {
    let sign = if (n * l) % 2 == 0 { 1 } else { -1 };
    d.pow_i(-n * k + n * l + n * k * l).expect("d is nonzero").scale_int(sign)
}

/// Applies `c⁽¹⁾ ↦ c⁽²⁾`, `c⁽²⁾ ↦ −c⁽¹⁾`, `A⊗D^kZ^l ↦ d^{−nk}(−d)^{nl} A⊗Z^{−k}D^l` at symbolic `d`.
pub fn miki_bar(x: &DiffOp) -> DiffOp {
    miki_bar_at(x, &Scalar::d())
}

pub fn miki_bar_at(x: &DiffOp, d: &Scalar) -> DiffOp {
    let n = x.n();
    let mut out = DiffOp::zero(n).with_centrals(-x.c2(), x.c1().clone());
    for (key, c) in x.terms() {
        let lam = rotation_coeff(n as i64, key.k, key.l, d);
        out = out + DiffOp::monomial(n, key.i, key.j, key.l, -key.k, c * &lam);
    }
    out
}

/// The inverse of [`miki_bar`].
pub fn miki_bar_inv(x: &DiffOp) -> DiffOp {
    miki_bar_inv_at(x, &Scalar::d())
}

pub fn miki_bar_inv_at(x: &DiffOp, d: &Scalar) -> DiffOp {
    let n = x.n();
    let mut out = DiffOp::zero(n).with_centrals(x.c2().clone(), -x.c1());
    for (key, c) in x.terms() {
        // D^k Z^l is the image of D^{-l} Z^k
        let lam = rotation_coeff(n as i64, -key.l, key.k, d);
        let c = c.checked_div(&lam).expect("nonzero coefficient");
        out = out + DiffOp::monomial(n, key.i, key.j, -key.l, key.k, c);
    }
    out
}
