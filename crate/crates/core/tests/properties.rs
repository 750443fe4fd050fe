//! Property-based invariants over small random inputs.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use toroidal::derops::{DerAlgebra, DerOp};
use toroidal::diffops::{DiffAlgebra, DiffOp};
use toroidal::morphisms::{miki_bar, miki_bar_inv};
use toroidal::scalars::{solve_linear, Param, ParamAssignment, Scalar, ScalarMatrix};
use toroidal::symfun::{p_poly, power_sums, sym_poly_eval};

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// `c · d^e β^f` with small integer data.
fn small_term() -> impl Strategy<Value = Scalar> {
    (-5i64..=5, -3i64..=3, 0i64..=2).prop_map(|(c, e, f)| {
        Scalar::from_int(c) * Scalar::d_pow(e) * Scalar::beta().pow_i(f).unwrap()
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    prop::collection::vec(small_term(), 1..4).prop_map(|ts| ts.into_iter().sum())
}

/// Laurent polynomials in `d` alone, the scalars the shift solvers see.
fn d_scalar() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-5i64..=5, -3i64..=3), 1..4)
        .prop_map(|ts| ts.into_iter().map(|(c, e)| Scalar::from_int(c) * Scalar::d_pow(e)).sum())
}

fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

fn diff_mono(n: usize) -> impl Strategy<Value = DiffOp> {
    (1..=n, 1..=n, -2i64..=2, -2i64..=2, -4i64..=4)
        .prop_filter("nonzero coefficient", |t| t.4 != 0)
        .prop_map(move |(i, j, k, l, c)| DiffOp::monomial(n, i, j, k, l, Scalar::from_int(c)))
}

fn der_mono(n: usize) -> impl Strategy<Value = DerOp> {
    (1..=n, 1..=n, 0u32..=2, -2i64..=2, -4i64..=4)
        .prop_filter("nonzero coefficient", |t| t.4 != 0)
        .prop_map(move |(i, j, r, l, c)| DerOp::monomial(n, i, j, r, l, Scalar::from_int(c)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in nonzero_scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!((&a * &b).checked_div(&b).unwrap(), a.clone());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(b.inv().unwrap() * &b, Scalar::one());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in scalar(), b in scalar(), dv in 2i64..6, bv in 1i64..6) {
        let sigma = ParamAssignment::new().with(Param::D, rat(dv, 1)).with(Param::Beta, rat(bv, 2));
        let ea = a.eval_at(&sigma).unwrap();
        let eb = b.eval_at(&sigma).unwrap();
        prop_assert_eq!((&a * &b).eval_at(&sigma).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval_at(&sigma).unwrap(), ea + eb);
    }

    #[test]
    fn solver_solves_in_d(rows in prop::collection::vec(prop::collection::vec(d_scalar(), 3), 3),
                          b in prop::collection::vec(d_scalar(), 3)) {
        let a = ScalarMatrix::from_rows(rows).unwrap();
        if let Ok(x) = solve_linear(&a, &b) {
            prop_assert_eq!(a.mul_vec(&x).unwrap(), b);
        }
    }

    #[test]
    fn diff_product_is_associative(
        (n, x, y, z) in (1usize..=3).prop_flat_map(|n| (Just(n), diff_mono(n), diff_mono(n), diff_mono(n)))
    ) {
        let alg = DiffAlgebra::new(n);
        let lhs = alg.product(&alg.product(&x, &y).unwrap(), &z).unwrap();
        let rhs = alg.product(&x, &alg.product(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn der_associativity_n2(x in der_mono(2), y in der_mono(2), z in der_mono(2)) {
        let alg = DerAlgebra::new(2);
        let lhs = alg.product(&alg.product(&x, &y).unwrap(), &z).unwrap();
        let rhs = alg.product(&x, &alg.product(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn brackets_are_antisymmetric(x in diff_mono(3), y in diff_mono(3), u in der_mono(2), v in der_mono(2)) {
        let alg = DiffAlgebra::new(3);
        prop_assert_eq!(alg.bracket(&x, &y).unwrap(), -&alg.bracket(&y, &x).unwrap());
        let alg = DerAlgebra::new(2);
        prop_assert_eq!(alg.bracket(&u, &v).unwrap(), -&alg.bracket(&v, &u).unwrap());
    }

    #[test]
    fn reordering_rule(k in -3i64..=3, l in -3i64..=3) {
        // Z^{−k} D^l = t^{kl} D^l Z^{−k}
        let alg = DiffAlgebra::new(2);
        let lhs = alg.product(&DiffOp::identity(2, 0, -k), &DiffOp::identity(2, l, 0)).unwrap();
        let rhs = DiffOp::identity(2, l, -k).scale(&alg.t_pow(k * l));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn miki_rotation_preserves_brackets(x in diff_mono(2), y in diff_mono(2)) {
        let alg = DiffAlgebra::new(2);
        let lhs = miki_bar(&alg.bracket(&x, &y).unwrap());
        let rhs = alg.bracket(&miki_bar(&x), &miki_bar(&y)).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(miki_bar_inv(&miki_bar(&x)), x);
    }

    #[test]
    fn newton_identity(vals in prop::collection::vec(-6i64..=6, 1..5), k in 1u32..=4) {
        let values: Vec<Scalar> = vals.iter().map(|&v| Scalar::from_int(v)).collect();
        let via_power_sums = sym_poly_eval(&p_poly(k), &power_sums(&values, k)).unwrap();
        // e_k directly from subsets
        let m = values.len();
        let mut direct = Scalar::zero();
        for mask in 0u32..(1 << m) {
            if mask.count_ones() == k {
                direct += &(0..m).filter(|b| mask >> b & 1 == 1).fold(Scalar::one(), |acc, b| acc * &values[b]);
            }
        }
        prop_assert_eq!(via_power_sums, direct);
    }
}

proptest! {
    // fractions in two parameters grow quickly; fewer cases
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn solver_solves_two_parameters(rows in prop::collection::vec(prop::collection::vec(scalar(), 2), 2),
                                    b in prop::collection::vec(scalar(), 2)) {
        let a = ScalarMatrix::from_rows(rows).unwrap();
        if let Ok(x) = solve_linear(&a, &b) {
            prop_assert_eq!(a.mul_vec(&x).unwrap(), b);
        }
    }
}
