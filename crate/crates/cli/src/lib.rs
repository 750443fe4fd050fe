//! Command-line front end for the verification suites.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use toroidal::verify::{run_suite, Mode, Mutation, Report, Suite, SuiteConfig};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Environment variable holding the default worker count.
pub const JOBS_ENV: &str = "TOROIDAL_JOBS";

#[derive(Parser, Debug)]
#[command(name = "toroidal", version, about = "Exact verification of toroidal Lie algebra homomorphisms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run one suite, or `all` of them in sequence.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Default)]
pub struct VerifyArgs {
    /// theorem1, theorem2, structure, miki, subalgebras, commutative, dims or all.
    /// May be omitted when the config file lists suites.
    pub suite: Option<String>,
    /// Matrix size.
    #[arg(long)]
    pub n: Option<i64>,
    /// Index window: K for loop-type suites, R for theorem2.
    #[arg(long)]
    pub window: Option<i64>,
    #[arg(long)]
    pub mode: Option<Mode>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Parameter points per identity in random mode.
    #[arg(long)]
    pub points: Option<usize>,
    /// Write the JSON report here (an array when several suites run).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// JSON file with the same keys as the flags; flags win.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Deliberately break one construction to check that the suites notice.
    #[arg(long)]
    pub mutation: Option<Mutation>,
}

#[derive(Deserialize, Debug, Default, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub n: Option<i64>,
    pub window: Option<i64>,
    pub mode: Option<Mode>,
    pub seed: Option<u64>,
    pub points: Option<usize>,
    pub suites: Option<Vec<String>>,
    pub out: Option<PathBuf>,
    pub jobs: Option<usize>,
    pub mutation: Option<Mutation>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("bad config {}: {e}", path.display()))
    }
}

/// A fully resolved invocation.
#[derive(Debug, PartialEq)]
pub struct Plan {
    pub suites: Vec<Suite>,
    pub config: SuiteConfig,
    pub out: Option<PathBuf>,
}

fn parse_suites(names: &[String]) -> Result<Vec<Suite>, String> {
    let mut out = Vec::new();
    for name in names {
        if name == "all" {
            out.extend(Suite::ALL);
        } else {
            out.push(name.parse()?);
        }
    }
    if out.is_empty() {
        return Err("no suite given".into());
    }
    Ok(out)
}

/// Merges flags over the config file over defaults. `env_jobs` is the value of [`JOBS_ENV`].
pub fn plan(args: VerifyArgs, env_jobs: Option<&str>) -> Result<Plan, String> {
    let file = match &args.config {
        Some(p) => ConfigFile::load(p)?,
        None => ConfigFile::default(),
    };
    let names = match (args.suite, file.suites) {
        (Some(s), _) => vec![s],
        (None, Some(list)) => list,
        (None, None) => return Err("missing suite name".into()),
    };
    let suites = parse_suites(&names)?;
    let n = args.n.or(file.n).unwrap_or(2);
    if n < 1 {
        return Err(format!("--n must be a positive integer, got {n}"));
    }
    let window = args.window.or(file.window).unwrap_or(3);
    let window = u32::try_from(window).map_err(|_| format!("--window must be nonnegative, got {window}"))?;
    let env_jobs = match env_jobs {
        Some(s) => Some(s.trim().parse::<usize>().map_err(|_| format!("{JOBS_ENV} must be a positive integer, got `{s}`"))?),
        None => None,
    };
    let jobs = args.jobs.or(file.jobs).or(env_jobs);
    if jobs == Some(0) {
        return Err("--jobs must be positive".into());
    }
    let config = SuiteConfig {
        n: n as usize,
        window,
        mode: args.mode.or(file.mode).unwrap_or(Mode::Exact),
        seed: args.seed.or(file.seed).unwrap_or(0),
        points: args.points.or(file.points).unwrap_or(3),
        jobs,
        mutation: args.mutation.or(file.mutation),
    };
    config.validate().map_err(|e| e.to_string())?;
    Ok(Plan { suites, config, out: args.out.or(file.out) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Writes reports as summary lines or JSON (one object, or an array for several).
pub fn emit_report(reports: &[Report], format: Format, dest: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Text => {
            for r in reports {
                writeln!(dest, "{}", r.summary_line())?;
            }
        }
        Format::Json => {
            let json = match reports {
                [one] => serde_json::to_string_pretty(one),
                many => serde_json::to_string_pretty(many),
            }
            .map_err(std::io::Error::other)?;
            writeln!(dest, "{json}")?;
        }
    }
    Ok(())
}

/// Runs a plan, printing one line per suite. Returns the exit code.
pub fn execute(plan: &Plan) -> i32 {
    let mut reports: Vec<Report> = Vec::new();
    let stdout = std::io::stdout();
    for &suite in &plan.suites {
        match run_suite(suite, &plan.config) {
            Ok(r) => {
                let _ = emit_report(std::slice::from_ref(&r), Format::Text, &mut stdout.lock());
                reports.push(r);
            }
            Err(e) => {
                eprintln!("{suite}: internal error: {e}");
                return EXIT_INTERNAL;
            }
        }
    }
    if let Some(path) = &plan.out {
        let written = fs::File::create(path).and_then(|mut f| emit_report(&reports, Format::Json, &mut f));
        if let Err(e) = written {
            eprintln!("cannot write {}: {e}", path.display());
            return EXIT_INTERNAL;
        }
    }
    if reports.iter().all(|r| r.pass) {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

/// Full entry point: parses `argv` and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Verify(args) => {
            let env_jobs = std::env::var(JOBS_ENV).ok();
            match plan(args, env_jobs.as_deref()) {
                Ok(p) => execute(&p),
                Err(msg) => {
                    eprintln!("error: {msg}");
                    eprintln!("usage: toroidal verify <SUITE|all> [--n N] [--window W] [--mode exact|random] [--seed S] [--points P] [--out PATH] [--config PATH] [--jobs J]");
                    EXIT_USAGE
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(v: &[&str]) -> VerifyArgs {
        let mut full = vec!["toroidal", "verify"];
        full.extend_from_slice(v);
        match Cli::try_parse_from(full).unwrap().command {
            Command::Verify(a) => a,
        }
    }

    #[test]
    fn defaults_and_overrides() {
        let p = plan(args(&["theorem1"]), None).unwrap();
        assert_eq!(p.suites, vec![Suite::Theorem1]);
        assert_eq!((p.config.n, p.config.window, p.config.mode), (2, 3, Mode::Exact));
        let p = plan(args(&["all", "--n", "3", "--jobs", "2"]), Some("5")).unwrap();
        assert_eq!(p.suites.len(), 7);
        assert_eq!(p.config.jobs, Some(2));
        let p = plan(args(&["dims"]), Some("5")).unwrap();
        assert_eq!(p.config.jobs, Some(5));
    }

    #[test]
    fn rejects_bad_values() {
        assert!(plan(args(&["theorem2", "--n", "0"]), None).is_err());
        assert!(plan(args(&["bogus"]), None).is_err());
        assert!(plan(args(&["dims"]), Some("x")).is_err());
        assert!(plan(args(&["dims", "--window=-1"]), None).is_err());
    }

    #[test]
    fn config_file_merging() {
        let dir = std::env::temp_dir().join(format!("toroidal-cli-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("c.json");
        fs::write(&path, r#"{"n": 3, "window": 1, "suites": ["miki", "dims"], "mode": "random", "seed": 9}"#).unwrap();
        let p = plan(args(&["--config", path.to_str().unwrap(), "--window", "2"]), None).unwrap();
        assert_eq!(p.suites, vec![Suite::Miki, Suite::Dims]);
        assert_eq!((p.config.n, p.config.window, p.config.mode, p.config.seed), (3, 2, Mode::Random, 9));

        fs::write(&path, r#"{"n": 3, "colour": "red"}"#).unwrap();
        let err = plan(args(&["dims", "--config", path.to_str().unwrap()]), None).unwrap_err();
        assert!(err.contains("colour"), "{err}");
    }
}
