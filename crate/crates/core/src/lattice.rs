//! Coordinates in the affine root lattice of type A and root classification.
//!
//! Degrees are integer vectors `(c₀, …, c_{n−1})` in the simple roots
//! `α₀, …, α_{n−1}`; `δ = α₀ + … + α_{n−1}` is `(1, …, 1)`.

use serde::{Deserialize, Serialize};

/// What kind of element of the root lattice a degree is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RootKind {
    Zero,
    /// A nonzero multiple of `δ`.
    Imaginary,
    Real,
    NotRoot,
}

/// Root-lattice coordinates of `E[i,j]` times a monomial with loop exponent `l`.
///
/// Matrix indices are 1-based.
pub fn unit_alpha(n: usize, i: usize, j: usize, l: i64) -> Vec<i64> {
    let mut alpha = vec![l; n];
    for (m, a) in alpha.iter_mut().enumerate().skip(1) {
        if i <= m && m < j {
            *a += 1;
        }
        if j <= m && m < i {
            *a -= 1;
        }
    }
    alpha
}

pub fn delta(n: usize, l: i64) -> Vec<i64> {
    vec![l; n]
}

/// Classifies a lattice vector as a root of affine `sl_n` (or the `n = 1` analogue).
pub fn classify(alpha: &[i64]) -> RootKind {
    let m = alpha[0];
    let rest: Vec<i64> = alpha[1..].iter().map(|c| c - m).collect();
    if rest.iter().all(|&c| c == 0) {
        return if m == 0 { RootKind::Zero } else { RootKind::Imaginary };
    }
    // a real root has finite part ±(α_a + … + α_b), a contiguous block of ones
    let sign = rest.iter().copied().find(|&c| c != 0).unwrap();
    if sign != 1 && sign != -1 {
        return RootKind::NotRoot;
    }
    let support: Vec<usize> = (0..rest.len()).filter(|&p| rest[p] != 0).collect();
    let contiguous = support.windows(2).all(|w| w[1] == w[0] + 1);
    if contiguous && support.iter().all(|&p| rest[p] == sign) {
        RootKind::Real
    } else {
        RootKind::NotRoot
    }
}

/// Dimension of a graded piece of the traceless difference-operator algebra as
/// predicted by the root classification: `n − 1` at the origin, `n` on the
/// rest of `ℤδ × ℤ`, one on real roots and zero elsewhere.
pub fn difference_table(n: usize, alpha: &[i64], k: i64) -> usize {
    match classify(alpha) {
        RootKind::Zero if k == 0 => n - 1,
        RootKind::Zero | RootKind::Imaginary => n,
        RootKind::Real => 1,
        RootKind::NotRoot => 0,
    }
}

/// Predicted jump of the filtration on the differential side: one on real
/// roots, `n − δ_{k,0}` on `ℤδ`, zero elsewhere.
pub fn differential_table(n: usize, alpha: &[i64], k: u32) -> usize {
    match classify(alpha) {
        RootKind::Zero | RootKind::Imaginary => n - usize::from(k == 0),
        RootKind::Real => 1,
        RootKind::NotRoot => 0,
    }
}

/// All lattice vectors with every coordinate in `[−bound, bound]`.
pub fn box_vectors(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-bound..=bound).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_degrees() {
        assert_eq!(unit_alpha(3, 1, 2, 0), vec![0, 1, 0]);
        assert_eq!(unit_alpha(2, 2, 1, 1), vec![1, 0]);
        assert_eq!(unit_alpha(4, 1, 4, -1), vec![-1, 0, 0, 0]);
        assert_eq!(unit_alpha(1, 1, 1, 5), vec![5]);
    }

    #[test]
    fn classification() {
        assert_eq!(classify(&[0, 0, 0]), RootKind::Zero);
        assert_eq!(classify(&[2, 2]), RootKind::Imaginary);
        assert_eq!(classify(&[0, 1, 1]), RootKind::Real);
        assert_eq!(classify(&[1, 0, 0]), RootKind::Real); // α₀ = δ − α₁ − α₂
        assert_eq!(classify(&[0, 1, 2]), RootKind::NotRoot);
        assert_eq!(classify(&[0, 1, 0, 1]), RootKind::NotRoot);
        assert_eq!(classify(&[3]), RootKind::Imaginary);
    }

    #[test]
    fn tables() {
        assert_eq!(difference_table(2, &[1, 1], 0), 2);
        assert_eq!(difference_table(2, &[0, 0], 0), 1);
        assert_eq!(difference_table(2, &[1, 0], 5), 1);
        assert_eq!(differential_table(2, &[1, 1], 0), 1);
        assert_eq!(differential_table(2, &[1, 1], 2), 2);
    }
}
