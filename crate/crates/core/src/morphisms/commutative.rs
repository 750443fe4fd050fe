//! Images of the generators of the large commutative subalgebras: diagonal matrices times `Z^k`.

use crate::diffops::DiffOp;
use crate::error::{Error, Result};
use crate::scalars::{rank_det, Scalar, ScalarMatrix, MAX_A};

/// The parameters `a₁, …, a_n` (with `a_n = 1`) and `d` defining the family.
#[derive(Clone, Debug)]
pub struct CommutativeFamily {
    pub n: usize,
    pub a: Vec<Scalar>,
    pub d: Scalar,
}

impl CommutativeFamily {
    /// Symbolic `d` and `a₁, …, a_{n−1}`, with `a_n = 1`.
    pub fn symbolic(n: usize) -> Result<Self> {
        if n == 0 || n - 1 > MAX_A {
            return Err(Error::Shape(format!("no symbolic parameters for n = {n}")));
        }
        let mut a: Vec<Scalar> = (1..n).map(|i| Scalar::a(i as u8)).collect();
        a.push(Scalar::one());
        Ok(CommutativeFamily { n, a, d: Scalar::d() })
    }

    /// Diagonal entries of `e_i(a₁A₁(d^k), …, a_nA_n(d^k))`, where `A_j(d)` has `d^{1−n}` at
    /// position `j` and `d` elsewhere.
    pub fn diagonal(&self, i: usize, k: i64) -> Result<Vec<Scalar>> {
        let n = self.n as i64;
        (1..=self.n)
            .map(|m| {
                let ys = (1..=self.n)
                    .map(|j| {
                        let e = if j == m { 1 - n } else { 1 };
                        Ok(&self.a[j - 1] * &self.d.pow_i(e * k)?)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(elementary(&ys, i))
            })
            .collect()
    }

    pub fn generator(&self, i: usize, k: i64) -> Result<DiffOp> {
        Ok(DiffOp::diagonal(&self.diagonal(i, k)?, 0, k))
    }

    /// Rows are the diagonals of the generators `i = 0, …, n−1` in degree `k`.
    pub fn matrix(&self, k: i64) -> Result<ScalarMatrix> {
        ScalarMatrix::from_rows((0..self.n).map(|i| self.diagonal(i, k)).collect::<Result<Vec<_>>>()?)
    }

    /// Rank and determinant of [`Self::matrix`].
    pub fn independence(&self, k: i64) -> Result<(usize, Option<Scalar>)> {
        Ok(rank_det(&self.matrix(k)?))
    }
}

fn elementary(ys: &[Scalar], i: usize) -> Scalar {
    let mut e = vec![Scalar::zero(); i + 1];
    e[0] = Scalar::one();
    for y in ys {
        for p in (1..=i).rev() {
            let add = &e[p - 1] * y;
            e[p] += &add;
        }
    }
    e.swap_remove(i)
}

/// `e_i(a₁A₁(d^k), …, a_nA_n(d^k)) ⊗ Z^k` with symbolic parameters.
pub fn commutative_gen(n: usize, i: usize, k: i64) -> Result<DiffOp> {
    CommutativeFamily::symbolic(n)?.generator(i, k)
}

pub fn commutative_gen_with(family: &CommutativeFamily, i: usize, k: i64) -> Result<DiffOp> {
    family.generator(i, k)
}

pub fn commutative_matrix(n: usize, k: i64) -> Result<ScalarMatrix> {
    CommutativeFamily::symbolic(n)?.matrix(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        for n in 1..=3 {
            assert_eq!(commutative_gen(n, 0, 2).unwrap(), DiffOp::identity(n, 0, 2));
        }
        let d = Scalar::d();
        let dm = Scalar::d_pow(-1);
        let a1 = Scalar::a(1);
        let expected = DiffOp::diagonal(&[&a1 * &dm + d.clone(), &a1 * &d + dm], 0, 1);
        assert_eq!(commutative_gen(2, 1, 1).unwrap(), expected);
    }

    #[test]
    fn determinant_two() {
        let (rank, det) = CommutativeFamily::symbolic(2).unwrap().independence(1).unwrap();
        assert_eq!(rank, 2);
        let det = det.unwrap();
        let expected = (Scalar::one() - Scalar::a(1)) * (Scalar::d() - Scalar::d_pow(-1));
        assert!(det == expected || det == -expected);
    }
}
