//! `vq`: batch runner for the verification suites.
//!
//! Exit codes: 0 when every check passes (findings allowed), 1 when any
//! check fails, 2 on usage or configuration errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use vq_core::verify::{run_suite, OutputFormat, SuiteConfig};
use vq_core::VqError;

#[derive(Parser)]
#[command(name = "vq", version, about = "Exact verification suites for multiboson logical operators, Laughlin expansions, and Virasoro character identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite and emit a report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// exact-arith | combinatorics | multiboson | laughlin | characters | realizations | all
    suite: String,

    /// Ladder/model order range, inclusive (e.g. 2..5)
    #[arg(long, value_name = "A..B")]
    k: Option<String>,

    /// Floor-formula argument sweep, inclusive (e.g. 0..300)
    #[arg(long = "n-range", value_name = "A..B")]
    n_range: Option<String>,

    /// Coherent amplitudes for the codeword checks (e.g. 1.0,2.0)
    #[arg(long, value_name = "V,...")]
    beta: Option<String>,

    /// Series truncation depth beyond the leading exponent
    #[arg(long)]
    order: Option<u32>,

    /// Monte Carlo sample count
    #[arg(long)]
    samples: Option<u64>,

    /// Master seed; per-check streams derive from it
    #[arg(long)]
    seed: Option<u64>,

    /// Operator-identity tolerance
    #[arg(long)]
    tol: Option<f64>,

    /// Mode window for the realization checks
    #[arg(long = "mode-window")]
    mode_window: Option<i64>,

    /// json | csv | md
    #[arg(long)]
    format: Option<String>,

    /// Write the report here instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,

    /// key=value file with the same keys as the flags; flags take precedence
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Record wall time in the report metadata (makes the bytes run-dependent)
    #[arg(long)]
    timing: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => match verify(&args) {
            Ok(all_passed) => {
                if all_passed {
                    ExitCode::from(0)
                } else {
                    ExitCode::from(1)
                }
            }
            Err(err) => {
                eprintln!("vq: {err}");
                match err {
                    VqError::Config(_) | VqError::OutOfRange(_) => ExitCode::from(2),
                    _ => ExitCode::from(1),
                }
            }
        },
    }
}

fn verify(args: &VerifyArgs) -> Result<bool, VqError> {
    let mut cfg = SuiteConfig::new(&args.suite);
    let mut format = OutputFormat::Json;
    let mut out_path = args.out.clone();

    if let Some(path) = &args.config {
        apply_config_file(path, &mut cfg, &mut format, &mut out_path)?;
    }
    apply_flags(args, &mut cfg, &mut format)?;

    if std::env::var("VQ_THREADS").is_ok() {
        let n: usize = std::env::var("VQ_THREADS")
            .unwrap()
            .parse()
            .map_err(|_| VqError::Config("VQ_THREADS must be a positive integer".into()))?;
        if n == 0 {
            return Err(VqError::Config("VQ_THREADS must be a positive integer".into()));
        }
        // ignore the error if a pool already exists (tests may run in-process)
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }

    let started = Instant::now();
    let mut report = run_suite(&cfg)?;
    if args.timing {
        report.meta.wall_time_ms = Some(started.elapsed().as_millis() as u64);
    }

    let payload = match format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Csv => report.to_csv(),
        OutputFormat::Md => report.to_markdown(),
    };
    match &out_path {
        Some(path) => std::fs::write(path, payload)?,
        None => print!("{payload}"),
    }

    let (pass, fail, finding) = report.counts();
    eprintln!(
        "suite {}: {pass} pass, {fail} fail, {finding} findings ({} checks)",
        report.suite,
        report.checks.len()
    );
    Ok(!report.any_fail())
}

fn apply_flags(args: &VerifyArgs, cfg: &mut SuiteConfig, format: &mut OutputFormat) -> Result<(), VqError> {
    if let Some(k) = &args.k {
        cfg.k_range = parse_range_u32(k)?;
    }
    if let Some(n) = &args.n_range {
        let r = parse_range_u64(n)?;
        cfg.n_range = r;
    }
    if let Some(b) = &args.beta {
        cfg.beta = parse_beta(b)?;
    }
    if let Some(order) = args.order {
        cfg.order = order;
    }
    if let Some(samples) = args.samples {
        cfg.samples = samples;
    }
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    if let Some(tol) = args.tol {
        cfg.tol = tol;
    }
    if let Some(w) = args.mode_window {
        cfg.mode_window = w;
    }
    if let Some(f) = &args.format {
        *format = OutputFormat::from_str(f)?;
    }
    Ok(())
}

fn apply_config_file(
    path: &Path,
    cfg: &mut SuiteConfig,
    format: &mut OutputFormat,
    out_path: &mut Option<PathBuf>,
) -> Result<(), VqError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| VqError::Config(format!("cannot read config {}: {e}", path.display())))?;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| VqError::Config(format!("config line {} is not key=value", lineno + 1)))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "k" => cfg.k_range = parse_range_u32(value)?,
            "n-range" => cfg.n_range = parse_range_u64(value)?,
            "beta" => cfg.beta = parse_beta(value)?,
            "order" => cfg.order = parse_num(key, value)?,
            "samples" => cfg.samples = parse_num(key, value)?,
            "seed" => cfg.seed = parse_num(key, value)?,
            "tol" => {
                cfg.tol = value
                    .parse()
                    .map_err(|_| VqError::Config(format!("bad tol '{value}'")))?;
            }
            "mode-window" => cfg.mode_window = parse_num(key, value)?,
            "format" => *format = OutputFormat::from_str(value)?,
            "out" => *out_path = Some(PathBuf::from(value)),
            other => return Err(VqError::Config(format!("unknown config key '{other}'"))),
        }
    }
    Ok(())
}

fn parse_num<T: FromStr>(key: &str, value: &str) -> Result<T, VqError> {
    value
        .parse()
        .map_err(|_| VqError::Config(format!("bad value '{value}' for {key}")))
}

fn parse_range_u32(s: &str) -> Result<(u32, u32), VqError> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| VqError::Config(format!("range '{s}' is not of the form A..B")))?;
    Ok((parse_num("range", a.trim())?, parse_num("range", b.trim())?))
}

fn parse_range_u64(s: &str) -> Result<(u64, u64), VqError> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| VqError::Config(format!("range '{s}' is not of the form A..B")))?;
    Ok((parse_num("range", a.trim())?, parse_num("range", b.trim())?))
}

fn parse_beta(s: &str) -> Result<Vec<f64>, VqError> {
    s.split(',')
        .map(|v| {
            v.trim()
                .parse()
                .map_err(|_| VqError::Config(format!("bad beta value '{v}'")))
        })
        .collect()
}
