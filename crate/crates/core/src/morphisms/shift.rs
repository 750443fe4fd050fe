//! Cartan combinations acting as index shifts, and the vertical Heisenberg elements.

use super::{eval_expr, Morphism, Theta};
use crate::diffops::DiffOp;
use crate::error::{Error, Result};
use crate::presentations::{bbar_at, GenSym, LieExpr};
use crate::scalars::{solve_linear, Scalar, ScalarMatrix};
use crate::symfun::p_poly;

/// A combination `Σ_j c_j h̄_{j,k}` together with its image.
#[derive(Clone, Debug, PartialEq)]
pub struct ShiftElement {
    pub coeffs: Vec<Scalar>,
    pub image: DiffOp,
}

impl Theta {
    fn cartan_image(&self, coeffs: &[Scalar], k: i64) -> Result<DiffOp> {
        let expr = LieExpr::sum(
            coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| LieExpr::gen(GenSym::h(j, k)).scale(c.clone()))
                .collect(),
        );
        eval_expr(&expr, self)
    }

    /// The combination of `h̄_{·,k}` whose adjoint action shifts the loop index of the
    /// `i`-th family by `k` and kills the others.
    pub fn shift_element(&self, i: usize, k: i64) -> Result<ShiftElement> {
        let n = self.n();
        if k == 0 {
            return Err(Error::ZeroMode);
        }
        if i >= n {
            return Err(Error::IllegalGenerator(format!("residue {i} for n = {n}")));
        }
        let d = self.algebra().d();
        let mut rows = Vec::with_capacity(n);
        for jp in 0..n {
            let row = (0..n).map(|j| bbar_at(n, j, jp, k, d)).collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        let rhs: Vec<Scalar> = (0..n).map(|jp| if jp == i { Scalar::one() } else { Scalar::zero() }).collect();
        let coeffs = solve_linear(&ScalarMatrix::from_rows(rows)?, &rhs)?;
        let image = self.cartan_image(&coeffs, k)?;
        Ok(ShiftElement { coeffs, image })
    }

    /// The degree-`k` Cartan combination commuting with the vertical `sl_n`, normalized by `c₀ = 1`.
    pub fn heisenberg_v(&self, k: i64) -> Result<DiffOp> {
        let n = self.n();
        if k == 0 {
            return Err(Error::ZeroMode);
        }
        let d = self.algebra().d();
        let mut coeffs = vec![Scalar::one()];
        if n > 1 {
            let mut rows = Vec::with_capacity(n - 1);
            let mut rhs = Vec::with_capacity(n - 1);
            for j in 1..n {
                let row = (1..n).map(|i| bbar_at(n, i, j, k, d)).collect::<Result<Vec<_>>>()?;
                rows.push(row);
                rhs.push(-bbar_at(n, 0, j, k, d)?);
            }
            coeffs.extend(solve_linear(&ScalarMatrix::from_rows(rows)?, &rhs)?);
        }
        self.cartan_image(&coeffs, k)
    }

    /// `e_k(ad h̄′_{i,±1}, …, ad h̄′_{i,±k})` applied to `target`; the sign of `k` selects the direction.
    pub fn ad_poly(&self, i: usize, k: i64, target: &DiffOp) -> Result<DiffOp> {
        if k == 0 {
            return Err(Error::ZeroMode);
        }
        let sign = k.signum();
        let m = k.unsigned_abs() as u32;
        let shifts = (1..=m)
            .map(|r| self.shift_element(i, sign * i64::from(r)).map(|s| s.image))
            .collect::<Result<Vec<_>>>()?;
        let alg = self.algebra();
        let mut total = DiffOp::zero(self.n());
        for (lambda, c) in p_poly(m).terms() {
            let mut x = target.clone();
            for &r in lambda.iter().rev() {
                x = alg.bracket(&shifts[r as usize - 1], &x)?;
            }
            total = total + x.scale(&Scalar::from_rational(c.clone()));
        }
        Ok(total)
    }
}

/// `(d^{(2n−i)k}/(d^{nk}−1)) (E₁₁+…+E_ii) + (d^{(n−i)k}/(d^{nk}−1)) (E_{i+1,i+1}+…+E_nn)) ⊗ D^k`,
/// where residue `0` is read as `i = n`.
pub fn shift_closed_form(n: usize, i: usize, k: i64, d: &Scalar) -> Result<DiffOp> {
    let ic = if i % n == 0 { n } else { i % n } as i64;
    let nn = n as i64;
    let den = d.pow_i(nn * k)? - Scalar::one();
    let hi = d.pow_i((2 * nn - ic) * k)?.checked_div(&den)?;
    let lo = d.pow_i((nn - ic) * k)?.checked_div(&den)?;
    let entries: Vec<Scalar> = (1..=nn).map(|p| if p <= ic { hi.clone() } else { lo.clone() }).collect();
    Ok(DiffOp::diagonal(&entries, k, 0))
}

/// `((1 − d^{nk})/n) · I ⊗ D^k`.
pub fn heisenberg_closed_form(n: usize, k: i64, d: &Scalar) -> Result<DiffOp> {
    let c = (Scalar::one() - d.pow_i(n as i64 * k)?).checked_div(&Scalar::from_int(n as i64))?;
    Ok(DiffOp::identity(n, k, 0).scale(&c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphisms::theta;

    #[test]
    fn two_by_two_solution() {
        let s = theta(2).shift_element(0, 1).unwrap();
        let q = Scalar::d() + Scalar::d_pow(-1);
        let den = Scalar::from_int(4) - &q * &q;
        assert_eq!(s.coeffs[0], Scalar::from_int(2).checked_div(&den).unwrap());
        assert_eq!(s.coeffs[1], q.checked_div(&den).unwrap());
    }

    #[test]
    fn closed_forms() {
        let d = Scalar::d();
        for n in 1..=4 {
            let th = theta(n);
            for k in [-3i64, -2, -1, 1, 2, 3] {
                for i in 0..n {
                    let s = th.shift_element(i, k).unwrap();
                    assert_eq!(s.image, shift_closed_form(n, i, k, &d).unwrap(), "n={n} i={i} k={k}");
                }
                assert_eq!(th.heisenberg_v(k).unwrap(), heisenberg_closed_form(n, k, &d).unwrap());
            }
        }
    }

    #[test]
    fn shift_contract() {
        let th = theta(3);
        let alg = th.algebra();
        let s = th.shift_element(1, 2).unwrap();
        for j in 0..3 {
            for l in -1..=1 {
                let lhs = alg.bracket(&s.image, &th.image(&GenSym::e(j, l)).unwrap()).unwrap();
                let rhs = if j == 1 { th.image(&GenSym::e(j, l + 2)).unwrap() } else { DiffOp::zero(3) };
                assert_eq!(lhs, rhs, "j={j} l={l}");
            }
        }
    }

    #[test]
    fn ad_poly_degree_one_is_adjoint() {
        let th = theta(2);
        let x = th.image(&GenSym::e(1, 0)).unwrap();
        let s = th.shift_element(1, 1).unwrap();
        assert_eq!(th.ad_poly(1, 1, &x).unwrap(), th.algebra().bracket(&s.image, &x).unwrap());
    }
}
