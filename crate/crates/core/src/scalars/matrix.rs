//! Dense matrices over [`Scalar`] with exact elimination.

use std::fmt;

use super::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl ScalarMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ScalarMatrix { rows, cols, entries: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(ScalarMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.cols {
            return Err(Error::Shape(format!("{} columns, vector of length {}", self.cols, x.len())));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl fmt::Debug for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ScalarMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

// Prefer the pivot with the smallest representation to keep intermediate growth down.
fn pick_pivot(m: &ScalarMatrix, col: usize, from: usize) -> Option<usize> {
    (from..m.rows)
        .filter(|&i| !m.get(i, col).is_zero())
        .min_by_key(|&i| {
            let x = m.get(i, col);
            x.numer().len() + x.denom().len()
        })
}

/// Solves `A x = b` for square nonsingular `A`.
pub fn solve_linear(a: &ScalarMatrix, b: &[Scalar]) -> Result<Vec<Scalar>> {
    if a.rows != a.cols {
        return Err(Error::Shape(format!("{}x{} is not square", a.rows, a.cols)));
    }
    if b.len() != a.rows {
        return Err(Error::Shape(format!("right-hand side of length {}", b.len())));
    }
    let n = a.rows;
    let mut aug = ScalarMatrix::zeros(n, n + 1);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, n, b[i].clone());
    }
    for col in 0..n {
        let p = pick_pivot(&aug, col, col).ok_or(Error::SingularMatrix)?;
        aug.swap_rows(col, p);
        let inv = aug.get(col, col).inv()?;
        for j in col..=n {
            let v = aug.get(col, j) * &inv;
            aug.set(col, j, v);
        }
        for i in 0..n {
            if i == col || aug.get(i, col).is_zero() {
                continue;
            }
            let f = aug.get(i, col).clone();
            for j in col..=n {
                let v = aug.get(i, j) - &(&f * aug.get(col, j));
                aug.set(i, j, v);
            }
        }
    }
    Ok((0..n).map(|i| aug.get(i, n).clone()).collect())
}

/// Rank, and the determinant when `a` is square, by fraction-free elimination.
pub fn rank_det(a: &ScalarMatrix) -> (usize, Option<Scalar>) {
    let mut m = a.clone();
    let mut prev = Scalar::one();
    let mut rank = 0;
    let mut sign = 1i64;
    for col in 0..m.cols {
        if rank == m.rows {
            break;
        }
        let Some(p) = pick_pivot(&m, col, rank) else { continue };
        if p != rank {
            m.swap_rows(p, rank);
            sign = -sign;
        }
        let piv = m.get(rank, col).clone();
        for i in rank + 1..m.rows {
            let lead = m.get(i, col).clone();
            for j in col + 1..m.cols {
                let v = &piv * m.get(i, j) - &lead * m.get(rank, j);
                let v = v.checked_div(&prev).expect("previous pivot is nonzero");
                m.set(i, j, v);
            }
            m.set(i, col, Scalar::zero());
        }
        prev = piv;
        rank += 1;
    }
    let det = (a.rows == a.cols).then(|| {
        if rank < a.rows {
            Scalar::zero()
        } else if a.rows == 0 {
            Scalar::one()
        } else {
            m.get(a.rows - 1, a.cols - 1).scale_int(sign)
        }
    });
    (rank, det)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    // Laplace expansion along the first row.
    fn laplace(m: &ScalarMatrix) -> Scalar {
        let n = m.rows();
        if n == 0 {
            return Scalar::one();
        }
        let mut acc = Scalar::zero();
        for j in 0..n {
            let minor = ScalarMatrix::from_rows(
                (1..n)
                    .map(|i| (0..n).filter(|&k| k != j).map(|k| m.get(i, k).clone()).collect())
                    .collect(),
            )
            .unwrap();
            let term = m.get(0, j) * laplace(&minor);
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    #[test]
    fn shift_system_for_two() {
        // rows are indexed by j', columns by j: Σ_j c_j b̄(j, j'; 1) = δ_{0, j'}
        let d = Scalar::d();
        let dd = &d + &Scalar::d_pow(-1);
        let a = ScalarMatrix::from_rows(vec![vec![c(2), -&dd], vec![-&dd, c(2)]]).unwrap();
        let x = solve_linear(&a, &[c(1), c(0)]).unwrap();
        let den = c(4) - &dd * &dd;
        assert_eq!(x[0], c(2).checked_div(&den).unwrap());
        assert_eq!(x[1], dd.checked_div(&den).unwrap());
    }

    #[test]
    fn normalized_two_by_two() {
        // −(d + d⁻¹) c₀ + 2 c₁ = 0 with c₀ = 1
        let d = Scalar::d();
        let dd = &d + &Scalar::d_pow(-1);
        let a = ScalarMatrix::from_rows(vec![vec![c(1), c(0)], vec![-&dd, c(2)]]).unwrap();
        let x = solve_linear(&a, &[c(1), c(0)]).unwrap();
        assert_eq!(x[1], (&d * &d + c(1)).checked_div(&(c(2) * d)).unwrap());
    }

    #[test]
    fn identity_solves_trivially() {
        let b = vec![Scalar::d(), Scalar::beta(), c(7)];
        assert_eq!(solve_linear(&ScalarMatrix::identity(3), &b).unwrap(), b);
    }

    #[test]
    fn singular_is_reported() {
        let d = Scalar::d();
        let a = ScalarMatrix::from_rows(vec![vec![&d - &d, c(0)], vec![c(0), c(1)]]).unwrap();
        assert_eq!(solve_linear(&a, &[c(1), c(1)]), Err(Error::SingularMatrix));
    }

    #[test]
    fn determinant_of_c_matrix() {
        let (a1, a2, d) = (Scalar::a(1), Scalar::a(2), Scalar::d());
        let di = Scalar::d_pow(-1);
        let m = ScalarMatrix::from_rows(vec![
            vec![c(1), c(1)],
            vec![&a1 * &di + &a2 * &d, &a1 * &d + &a2 * &di],
        ])
        .unwrap();
        let (rank, det) = rank_det(&m);
        assert_eq!(rank, 2);
        let expected = (&a2 - &a1) * (&d - &di);
        let det = det.unwrap();
        assert!(det == expected || det == -expected);
    }

    #[test]
    fn zero_matrix() {
        let (rank, det) = rank_det(&ScalarMatrix::zeros(3, 3));
        assert_eq!(rank, 0);
        assert!(det.unwrap().is_zero());
    }

    #[test]
    fn vandermonde() {
        let a: Vec<Scalar> = (1..=3).map(Scalar::a).collect();
        let m = ScalarMatrix::from_rows(
            (0..3).map(|p| a.iter().map(|x| x.pow_i(p).unwrap()).collect()).collect(),
        )
        .unwrap();
        let (rank, det) = rank_det(&m);
        assert_eq!(rank, 3);
        let expected = (&a[1] - &a[0]) * (&a[2] - &a[0]) * (&a[2] - &a[1]);
        assert_eq!(det.unwrap(), expected);
        assert_eq!(laplace(&m), expected);
    }

    #[test]
    fn rank_of_rectangular_and_transpose() {
        let d = Scalar::d();
        let m = ScalarMatrix::from_rows(vec![
            vec![c(1), d.clone(), c(0), c(2)],
            vec![c(2), &d * &c(2), c(0), c(4)],
            vec![c(0), c(1), &d * &d, c(1)],
        ])
        .unwrap();
        assert_eq!(rank_det(&m).0, 2);
        assert_eq!(rank_det(&m.transpose()).0, 2);
        assert!(rank_det(&m).1.is_none());
    }

    #[test]
    fn determinant_matches_laplace() {
        let (d, b) = (Scalar::d(), Scalar::beta());
        let m = ScalarMatrix::from_rows(vec![
            vec![d.clone(), c(1), b.clone()],
            vec![c(0), &d * &b, c(3)],
            vec![Scalar::d_pow(-2), c(2), c(0)],
        ])
        .unwrap();
        assert_eq!(rank_det(&m).1.unwrap(), laplace(&m));
    }
}
