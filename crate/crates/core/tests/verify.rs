use toroidal::morphisms::{miki_bar, CommutativeFamily};
use toroidal::presentations::u_relations;
use toroidal::verify::{genericity_violations, run_suite, Mode, Mutation, Report, Suite, SuiteConfig, Window};
use toroidal::{DiffAlgebra, DiffOp, Scalar};

fn run(suite: Suite, n: usize, w: u32) -> Report {
    run_suite(suite, &SuiteConfig::new(n, w)).unwrap()
}

fn families(r: &Report) -> Vec<&str> {
    let mut f: Vec<&str> = r.failures.iter().map(|f| f.family.as_str()).collect();
    f.dedup();
    f
}

#[test]
fn theorem1_small_windows_pass() {
    let r = run(Suite::Theorem1, 2, 1);
    assert!(r.pass, "{:?}", r.failures);
    assert!(r.instances >= u_relations(2, 1).len());
    assert_eq!(r.window, Window::K(1));
    assert!(run(Suite::Theorem1, 1, 2).pass);
}

#[test]
fn theta_twist_breaks_u5() {
    let cfg = SuiteConfig::new(3, 1).with_mutation(Mutation::ThetaTwist);
    let r = run_suite(Suite::Theorem1, &cfg).unwrap();
    assert!(!r.pass);
    assert!(families(&r).contains(&"u5"));
    let mut sorted = r.failures.clone();
    sorted.sort_by(|a, b| (&a.family, &a.params).cmp(&(&b.family, &b.params)));
    assert_eq!(sorted, r.failures);
}

#[test]
fn theorem2_relations_pass_and_report_r_window() {
    for (n, w) in [(1, 3), (3, 2)] {
        let r = run(Suite::Theorem2, n, w);
        assert!(r.pass, "n={n}: {:?}", r.failures);
        assert_eq!(r.window, Window::R(w));
    }
}

#[test]
fn theorem2_n2_fails_only_on_printed_leading_coefficient() {
    let r = run(Suite::Theorem2, 2, 3);
    assert_eq!(families(&r), vec!["lead"]);
    assert_eq!(r.failures.len(), 6);
    for f in &r.failures {
        assert_ne!(f.params["l"], f.params["N"], "{f:?}");
    }
}

#[test]
fn structure_and_cocycle_mutations() {
    assert!(run(Suite::Structure, 2, 2).pass);
    for m in [Mutation::DiffCocycle, Mutation::DerCocycle] {
        let r = run_suite(Suite::Structure, &SuiteConfig::new(2, 2).with_mutation(m)).unwrap();
        assert!(families(&r).iter().any(|f| f.starts_with("jacobi")), "{m:?}");
    }
}

#[test]
fn miki_examples() {
    assert!(run(Suite::Miki, 3, 2).pass);
    let alg = DiffAlgebra::new(2);
    let x = DiffOp::unit(2, 1, 2, 1, 1);
    let y = DiffOp::unit(2, 2, 1, -1, -1);
    let lhs = miki_bar(&alg.bracket(&x, &y).unwrap());
    let rhs = alg.bracket(&miki_bar(&x), &miki_bar(&y)).unwrap();
    assert!(!lhs.c1().is_zero() || !lhs.c2().is_zero());
    assert_eq!(lhs, rhs);
    let c1 = DiffOp::central1(2);
    assert_eq!(miki_bar(&miki_bar(&c1)), -&c1);
}

#[test]
fn subalgebras_commutative_dims_pass() {
    for (suite, n, w) in [
        (Suite::Subalgebras, 2, 3),
        (Suite::Commutative, 2, 3),
        (Suite::Commutative, 3, 2),
        (Suite::Dims, 2, 3),
        (Suite::Dims, 3, 2),
    ] {
        let r = run(suite, n, w);
        assert!(r.pass, "{suite} n={n}: {:?}", r.failures);
    }
}

#[test]
fn every_suite_detects_its_mutation() {
    for suite in Suite::ALL {
        let cfg = SuiteConfig::new(3, 1).with_mutation(suite.designated_mutation());
        assert!(!run_suite(suite, &cfg).unwrap().pass, "{suite}");
    }
}

#[test]
fn equal_parameters_are_a_genericity_violation() {
    let mut fam = CommutativeFamily::symbolic(3).unwrap();
    assert!(genericity_violations(&fam).is_empty());
    fam.a[1] = fam.a[0].clone();
    assert_eq!(genericity_violations(&fam), vec!["a1 = a2".to_string()]);
    let (_, det) = fam.independence(1).unwrap();
    assert!(det.map_or(true, |d| d.is_zero()));
    fam.d = Scalar::one();
    assert_eq!(genericity_violations(&fam).len(), 2);
}

#[test]
fn reports_are_independent_of_workers() {
    let base = SuiteConfig::new(3, 1).with_mutation(Mutation::ThetaTwist);
    let a = run_suite(Suite::Theorem1, &base.clone().with_jobs(1)).unwrap();
    let b = run_suite(Suite::Theorem1, &base.with_jobs(8)).unwrap();
    assert_eq!(a.failures, b.failures);
    assert_eq!(a.instances, b.instances);
}

#[test]
fn random_mode_agrees_with_exact() {
    let cfg = SuiteConfig::new(2, 1).with_mode(Mode::Random).with_seed(11);
    for suite in [Suite::Theorem1, Suite::Miki, Suite::Commutative] {
        let r = run_suite(suite, &cfg).unwrap();
        assert!(r.pass, "{suite}: {:?}", r.failures);
        assert_eq!(r.seed, Some(11));
    }
    assert_eq!(run(Suite::Miki, 2, 1).seed, None);
    let broken = run_suite(Suite::Theorem1, &cfg.clone().with_mutation(Mutation::ThetaTwist)).unwrap();
    assert!(!broken.pass);
}

#[test]
fn invalid_config_is_rejected() {
    assert!(run_suite(Suite::Dims, &SuiteConfig::new(0, 1)).is_err());
}
