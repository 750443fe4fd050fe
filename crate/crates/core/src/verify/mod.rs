//! Verification suites: relation checks, structural identities and dimension counts, with
//! deterministic parallel execution and serializable reports.

mod checks;
mod suites;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::derops::{DerAlgebra, DerCocycleVariant};
use crate::diffops::{DiffAlgebra, DiffCocycleVariant};
use crate::error::{Error, Result};
use crate::morphisms::{CommutativeFamily, ImageVariant, Theta, Vartheta};
use crate::presentations::Params;
use crate::scalars::{Scalar, MAX_A};

/// How parameters are treated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `d`, `β` and `a_i` stay symbolic.
    #[default]
    Exact,
    /// Every identity is checked at several random rational parameter points.
    Random,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "exact" => Ok(Mode::Exact),
            "random" => Ok(Mode::Random),
            other => Err(format!("unknown mode `{other}` (expected exact or random)")),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Random => "random",
        })
    }
}

/// Deliberate corruptions, each of which some suite must detect.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutation {
    /// Drop `d^{(n−i)k}` from the images of the vertical generators.
    ThetaTwist,
    /// Drop the shift `(n−i)β` from the images of the vertical generators.
    VarthetaShift,
    /// Drop `t^{k₁l₁}` from both difference-side cocycles.
    DiffCocycle,
    /// Use `f₂(as)` instead of `f₂((a−l₁)s)` in the differential-side cocycle.
    DerCocycle,
}

impl Mutation {
    pub const ALL: [Mutation; 4] =
        [Mutation::ThetaTwist, Mutation::VarthetaShift, Mutation::DiffCocycle, Mutation::DerCocycle];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::ThetaTwist => "theta-twist",
            Mutation::VarthetaShift => "vartheta-shift",
            Mutation::DiffCocycle => "diff-cocycle",
            Mutation::DerCocycle => "der-cocycle",
        }
    }
}

impl FromStr for Mutation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Mutation::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown mutation `{s}`"))
    }
}

/// The individually runnable suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Theorem1,
    Theorem2,
    Structure,
    Miki,
    Subalgebras,
    Commutative,
    Dims,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Theorem1,
        Suite::Theorem2,
        Suite::Structure,
        Suite::Miki,
        Suite::Subalgebras,
        Suite::Commutative,
        Suite::Dims,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Theorem2 => "theorem2",
            Suite::Structure => "structure",
            Suite::Miki => "miki",
            Suite::Subalgebras => "subalgebras",
            Suite::Commutative => "commutative",
            Suite::Dims => "dims",
        }
    }

    /// The mutation this suite is designed to catch.
    pub fn designated_mutation(self) -> Mutation {
        match self {
            Suite::Theorem1 | Suite::Subalgebras | Suite::Commutative | Suite::Dims => Mutation::ThetaTwist,
            Suite::Theorem2 => Mutation::VarthetaShift,
            Suite::Structure | Suite::Miki => Mutation::DiffCocycle,
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub n: usize,
    /// `K` for the loop-type suites, `R` for `theorem2`.
    pub window: u32,
    pub mode: Mode,
    pub seed: u64,
    /// Parameter points per identity in random mode.
    pub points: usize,
    /// Worker threads; `None` lets the thread pool decide.
    pub jobs: Option<usize>,
    pub mutation: Option<Mutation>,
}

impl SuiteConfig {
    pub fn new(n: usize, window: u32) -> Self {
        SuiteConfig { n, window, mode: Mode::Exact, seed: 0, points: 3, jobs: None, mutation: None }
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = Some(jobs);
        self
    }

    pub fn with_mutation(mut self, mutation: Mutation) -> Self {
        self.mutation = Some(mutation);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Shape("n must be at least 1".into()));
        }
        if self.mode == Mode::Random && self.points == 0 {
            return Err(Error::Shape("random mode needs at least one point".into()));
        }
        Ok(())
    }
}

/// Window echo in reports: `{"K": w}` or `{"R": w}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Window {
    K(u32),
    R(u32),
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Window::K(w) => write!(f, "K={w}"),
            Window::R(w) => write!(f, "R={w}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub family: String,
    pub params: Params,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub n: usize,
    pub window: Window,
    pub mode: Mode,
    pub seed: Option<u64>,
    pub instances: usize,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
    pub pass: bool,
}

impl Report {
    /// One line: `theorem1 n=2 K=3 exact: PASS (NNN instances, T ms)`.
    pub fn summary_line(&self) -> String {
        let status = if self.pass { "PASS".to_string() } else { format!("FAIL ({} failures)", self.failures.len()) };
        format!(
            "{} n={} {} {}: {} ({} instances, {} ms)",
            self.suite, self.n, self.window, self.mode, status, self.instances, self.elapsed_ms
        )
    }
}

/// Failures retained with a full residual, per family.
pub const MAX_RESIDUALS_PER_FAMILY: usize = 10;
const MAX_RESAMPLES: usize = 16;

/// Parameter values for one evaluation run plus the active mutation.
#[derive(Clone, Debug)]
pub(crate) struct Ctx {
    pub n: usize,
    pub d: Scalar,
    pub beta: Scalar,
    pub a: Vec<Scalar>,
    pub mutation: Option<Mutation>,
}

impl Ctx {
    fn symbolic(n: usize, mutation: Option<Mutation>) -> Self {
        let a = (1..=MAX_A).map(|i| Scalar::a(i as u8)).collect();
        Ctx { n, d: Scalar::d(), beta: Scalar::beta(), a, mutation }
    }

    fn sample(n: usize, mutation: Option<Mutation>, rng: &mut ChaCha8Rng) -> Self {
        let rat = |rng: &mut ChaCha8Rng| loop {
            let p: i64 = rng.gen_range(-12..=12);
            let q: i64 = rng.gen_range(1..=7);
            if p != 0 {
                return Scalar::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)));
            }
        };
        let d = loop {
            let d = rat(rng);
            if d != Scalar::one() && d != -Scalar::one() {
                break d;
            }
        };
        let beta = rat(rng);
        let mut a: Vec<Scalar> = Vec::new();
        while a.len() < MAX_A {
            let v = rat(rng);
            // a_n = 1 must stay distinct from the others as well
            if v != Scalar::one() && !a.contains(&v) {
                a.push(v);
            }
        }
        Ctx { n, d, beta, a, mutation }
    }

    pub fn diff_alg(&self) -> DiffAlgebra {
        let alg = DiffAlgebra::with_d(self.n, self.d.clone());
        match self.mutation {
            Some(Mutation::DiffCocycle) => alg.with_variant(DiffCocycleVariant::DropTwist),
            _ => alg,
        }
    }

    pub fn der_alg(&self) -> DerAlgebra {
        let alg = DerAlgebra::with_beta(self.n, self.beta.clone());
        match self.mutation {
            Some(Mutation::DerCocycle) => alg.with_variant(DerCocycleVariant::Unshifted),
            _ => alg,
        }
    }

    pub fn theta(&self) -> Theta {
        let th = Theta::new(self.diff_alg());
        match self.mutation {
            Some(Mutation::ThetaTwist) => th.with_variant(ImageVariant::DropTwist),
            _ => th,
        }
    }

    pub fn vartheta(&self) -> Vartheta {
        let vt = Vartheta::new(self.der_alg());
        match self.mutation {
            Some(Mutation::VarthetaShift) => vt.with_variant(ImageVariant::DropTwist),
            _ => vt,
        }
    }

    /// `a₁, …, a_{n−1}` from the context and `a_n = 1`.
    pub fn commutative_family(&self) -> Result<CommutativeFamily> {
        if self.n == 0 || self.n - 1 > MAX_A {
            return Err(Error::Shape(format!("no parameters a_i available for n = {}", self.n)));
        }
        let mut a: Vec<Scalar> = self.a[..self.n - 1].to_vec();
        a.push(Scalar::one());
        Ok(CommutativeFamily { n: self.n, a, d: self.d.clone() })
    }
}

/// Result of one check: `Ok(None)` passes, `Ok(Some(residual))` fails.
pub(crate) struct Outcome {
    pub family: String,
    pub params: Params,
    pub result: Result<Option<String>>,
}

impl Outcome {
    pub fn new(family: &str, params: Params, result: Result<Option<String>>) -> Self {
        Outcome { family: family.to_string(), params, result }
    }
}

/// Runs `f` on every item in parallel, keeping input order.
pub(crate) fn run_all<T: Sync>(items: &[T], f: impl Fn(&T) -> Outcome + Sync + Send) -> Vec<Outcome> {
    items.par_iter().map(f).collect()
}

fn is_pole(e: &Error) -> bool {
    matches!(e, Error::Pole | Error::DivisionByZero | Error::SingularMatrix)
}

/// Runs one suite.
///
/// Returns `Err` only for configuration problems or when random mode cannot find a
/// usable parameter point.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<Report> {
    cfg.validate()?;
    let start = Instant::now();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cfg.jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder.build().map_err(|e| Error::Shape(format!("thread pool: {e}")))?;
    let (instances, failures) = pool.install(|| -> Result<(usize, Vec<Failure>)> {
        match cfg.mode {
            Mode::Exact => {
                let outcomes = suites::run(suite, cfg, &Ctx::symbolic(cfg.n, cfg.mutation))?;
                let instances = outcomes.len();
                let failures = outcomes
                    .into_iter()
                    .filter_map(|o| match o.result {
                        Ok(None) => None,
                        Ok(Some(residual)) => Some(Failure { family: o.family, params: o.params, residual }),
                        Err(e) => Some(Failure { family: o.family, params: o.params, residual: format!("error: {e}") }),
                    })
                    .collect();
                Ok((instances, failures))
            }
            Mode::Random => {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                let mut merged: BTreeMap<(String, Params), String> = BTreeMap::new();
                let mut instances = 0;
                for _ in 0..cfg.points {
                    let mut attempt = 0;
                    let outcomes = loop {
                        let ctx = Ctx::sample(cfg.n, cfg.mutation, &mut rng);
                        let outcomes = suites::run(suite, cfg, &ctx)?;
                        if !outcomes.iter().any(|o| matches!(&o.result, Err(e) if is_pole(e))) {
                            break outcomes;
                        }
                        attempt += 1;
                        if attempt > MAX_RESAMPLES {
                            return Err(Error::Shape("random mode: no pole-free parameter point found".into()));
                        }
                    };
                    instances = outcomes.len();
                    for o in outcomes {
                        let residual = match o.result {
                            Ok(None) => continue,
                            Ok(Some(r)) => r,
                            Err(e) => format!("error: {e}"),
                        };
                        merged.entry((o.family, o.params)).or_insert(residual);
                    }
                }
                let failures = merged
                    .into_iter()
                    .map(|((family, params), residual)| Failure { family, params, residual })
                    .collect();
                Ok((instances, failures))
            }
        }
    })?;
    let failures = finalize(failures);
    let window = match suite {
        Suite::Theorem2 => Window::R(cfg.window),
        _ => Window::K(cfg.window),
    };
    Ok(Report {
        suite: suite.name().to_string(),
        n: cfg.n,
        window,
        mode: cfg.mode,
        seed: match cfg.mode {
            Mode::Exact => None,
            Mode::Random => Some(cfg.seed),
        },
        instances,
        pass: failures.is_empty(),
        failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Sorts by `(family, params)` and elides residuals beyond the per-family limit.
fn finalize(mut failures: Vec<Failure>) -> Vec<Failure> {
    failures.sort_by(|a, b| (&a.family, &a.params).cmp(&(&b.family, &b.params)));
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    for f in &mut failures {
        let c = seen.entry(f.family.clone()).or_insert(0);
        *c += 1;
        if *c > MAX_RESIDUALS_PER_FAMILY {
            f.residual = "(omitted)".to_string();
        }
    }
    failures
}

/// Runs every suite in order.
pub fn run_all_suites(cfg: &SuiteConfig) -> Result<Vec<Report>> {
    Suite::ALL.iter().map(|&s| run_suite(s, cfg)).collect()
}

pub use checks::genericity_violations;

pub fn verify_theorem1(cfg: &SuiteConfig) -> Result<Report> {
    run_suite(Suite::Theorem1, cfg)
}

pub fn verify_theorem2(cfg: &SuiteConfig) -> Result<Report> {
    run_suite(Suite::Theorem2, cfg)
}

pub fn verify_structure(cfg: &SuiteConfig) -> Result<Report> {
    run_suite(Suite::Structure, cfg)
}

pub fn verify_miki(cfg: &SuiteConfig) -> Result<Report> {
    run_suite(Suite::Miki, cfg)
}

pub fn verify_subalgebras(cfg: &SuiteConfig) -> Result<Report> {
    run_suite(Suite::Subalgebras, cfg)
}

pub fn verify_commutative(cfg: &SuiteConfig) -> Result<Report> {
    run_suite(Suite::Commutative, cfg)
}

pub fn verify_dims(cfg: &SuiteConfig) -> Result<Report> {
    run_suite(Suite::Dims, cfg)
}
