//! `tempered`: evaluate, transform and check Hermite expansions from the
//! command line.
//!
//! Objects are read as JSON from a path (or `-` for stdin). Relative paths
//! that do not exist are also looked up in `$TEMPERED_FIXTURE_DIR`. Tables are
//! written as CSV, objects as JSON. Exit status is 1 for bad input and 2 when
//! a numerical contract is violated.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use tempered::checks;
use tempered::distribution::{derivative_dist, fourier_dist};
use tempered::lcs::validate_certificate;
use tempered::sobolev::{apply_multiplier, default_proj_degree, lambda_s, Multiplier};
use tempered::{BoundCertificate, Error, LinearOp, SchwartzFn, SeminormIndex, TemperedDist};

const FIXTURE_ENV: &str = "TEMPERED_FIXTURE_DIR";

#[derive(Parser)]
#[command(name = "tempered", version, about = "Schwartz functions and tempered distributions on Hermite expansions")]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate f at the given points (CSV: x,re,im).
    Eval {
        f: String,
        #[arg(required = true, allow_negative_numbers = true)]
        x: Vec<f64>,
    },
    /// Fourier transform of f (JSON).
    Fourier {
        f: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Table of p_{k,n}(f) = sup |x|^k |f^(n)(x)| (CSV: k,n,value).
    Seminorms {
        f: String,
        #[arg(long, num_args = 2, value_names = ["KMAX", "NMAX"], default_values_t = [2u32, 2])]
        grid: Vec<u32>,
    },
    /// Bilinear pairing ∫ f g, or ∫ conj(f) g with --inner (CSV: re,im).
    Pair {
        f: String,
        g: String,
        #[arg(long)]
        inner: bool,
    },
    /// Apply a distribution (built-in label or JSON path) to f (CSV: re,im).
    ApplyDist {
        dist: String,
        f: String,
        /// Transform the distribution first; repeatable, applied in order.
        #[arg(long = "transform", value_enum)]
        transforms: Vec<DistTransform>,
    },
    /// Apply a Fourier multiplier by registry label (JSON); residual on stderr.
    Multiplier {
        label: String,
        f: String,
        #[arg(long)]
        proj_degree: Option<usize>,
        /// Fail with status 2 if the aliasing residual exceeds this.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// H^s norm and aliasing residual (CSV: s,norm,aliasing_residual).
    Sobolev {
        f: String,
        #[arg(long, allow_negative_numbers = true)]
        s: f64,
        #[arg(long)]
        proj_degree: Option<usize>,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Try to refute a seminorm bound certificate for an operator (JSON report).
    Certify {
        op: String,
        cert: String,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest degree of the random test functions.
        #[arg(long, default_value_t = 16)]
        degree: usize,
    },
    /// ‖f‖₂, ‖Ff‖₂ and their difference (CSV).
    Plancherel { f: String },
    /// Run the built-in acceptance checks.
    Selftest {
        /// Run only these criteria.
        #[arg(long)]
        only: Vec<u8>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DistTransform {
    Fourier,
    Derivative,
}

enum Failure {
    Input(String),
    Contract(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BoundViolated { .. }
            | Error::ToleranceUnachievable { .. }
            | Error::GrowthViolated { .. }
            | Error::NonLinear { .. } => Failure::Contract(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn num(v: f64) -> String {
    format!("{v:.16e}")
}

fn resolve(path: &str) -> PathBuf {
    let p = Path::new(path);
    if p.is_relative() && !p.exists() {
        if let Some(dir) = std::env::var_os(FIXTURE_ENV) {
            let candidate = Path::new(&dir).join(p);
            if candidate.exists() {
                return candidate;
            }
        }
    }
    p.to_path_buf()
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    let resolved = resolve(path);
    fs::read_to_string(&resolved).map_err(|e| Failure::Input(format!("{}: {e}", resolved.display())))
}

fn load_fn(path: &str) -> Result<SchwartzFn, Failure> {
    Ok(SchwartzFn::from_json(&read_input(path)?)?)
}

fn load_dist(source: &str) -> Result<TemperedDist, Failure> {
    match TemperedDist::builtin(source) {
        Ok(u) => Ok(u),
        Err(Error::UnknownDistribution(_)) => Ok(TemperedDist::from_json(&read_input(source)?)?),
        Err(e) => Err(e.into()),
    }
}

fn load_op(path: &str) -> Result<LinearOp, Failure> {
    let op: LinearOp = serde_json::from_str(&read_input(path)?).map_err(|e| Failure::Input(e.to_string()))?;
    if !op.is_finite() {
        return Err(Failure::Input("operator has non-finite parameters".into()));
    }
    Ok(op)
}

fn complex_row(z: Complex64) -> String {
    format!("{},{}", num(z.re), num(z.im))
}

fn run(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Eval { f, x } => {
            let f = load_fn(&f)?;
            writeln!(out, "x,re,im")?;
            for x in x {
                writeln!(out, "{},{}", num(x), complex_row(f.eval(x)))?;
            }
        }
        Command::Fourier { f, inverse } => {
            let f = load_fn(&f)?;
            let g = if inverse { f.inverse_fourier() } else { f.fourier() };
            writeln!(out, "{}", g.to_json())?;
        }
        Command::Seminorms { f, grid } => {
            let f = load_fn(&f)?;
            writeln!(out, "k,n,value")?;
            for k in 0..=grid[0] {
                for n in 0..=grid[1] {
                    writeln!(out, "{k},{n},{}", num(f.seminorm(SeminormIndex { k, n })))?;
                }
            }
        }
        Command::Pair { f, g, inner } => {
            let (f, g) = (load_fn(&f)?, load_fn(&g)?);
            let z = if inner { f.inner(&g) } else { f.pairing(&g) };
            writeln!(out, "re,im")?;
            writeln!(out, "{}", complex_row(z))?;
        }
        Command::ApplyDist { dist, f, transforms } => {
            let mut u = load_dist(&dist)?;
            let f = load_fn(&f)?;
            for t in transforms {
                u = match t {
                    DistTransform::Fourier => fourier_dist(&u),
                    DistTransform::Derivative => derivative_dist(&u),
                };
            }
            writeln!(out, "re,im")?;
            writeln!(out, "{}", complex_row(u.apply(&f)))?;
        }
        Command::Multiplier {
            label,
            f,
            proj_degree,
            tol,
        } => {
            let m = Multiplier::from_label(&label)?;
            let f = load_fn(&f)?;
            let p = proj_degree.unwrap_or_else(|| default_proj_degree(f.degree(), m.growth_degree()));
            let res = apply_multiplier(&m, &f, p)?;
            writeln!(out, "{}", res.result.to_json())?;
            eprintln!("aliasing_residual,{}", num(res.aliasing_residual));
            check_residual(res.aliasing_residual, tol)?;
        }
        Command::Sobolev {
            f,
            s,
            proj_degree,
            tol,
        } => {
            let f = load_fn(&f)?;
            let growth = Multiplier::japanese_bracket(s)?.growth_degree();
            let p = proj_degree.unwrap_or_else(|| default_proj_degree(f.degree(), growth));
            let res = lambda_s(s, &f, p)?;
            writeln!(out, "s,norm,aliasing_residual")?;
            writeln!(
                out,
                "{},{},{}",
                num(s),
                num(res.result.l2_norm()),
                num(res.aliasing_residual)
            )?;
            check_residual(res.aliasing_residual, tol)?;
        }
        Command::Certify {
            op,
            cert,
            trials,
            seed,
            degree,
        } => {
            let op = load_op(&op)?;
            let cert = BoundCertificate::from_json(&read_input(&cert)?)?;
            let report = validate_certificate(&op, &cert, trials, degree, seed)?;
            writeln!(out, "{}", report.to_json())?;
            if !report.is_clean() {
                return Err(Failure::Contract(format!(
                    "certificate refuted: {} violation(s), first at trial {}",
                    report.total_violations,
                    report.violations.first().map_or(0, |v| v.trial)
                )));
            }
        }
        Command::Plancherel { f } => {
            let f = load_fn(&f)?;
            let (a, b) = (f.l2_norm(), f.fourier().l2_norm());
            writeln!(out, "l2_norm,fourier_l2_norm,difference")?;
            writeln!(out, "{},{},{}", num(a), num(b), num(a - b))?;
        }
        Command::Selftest { only } => {
            let ids: Vec<u8> = if only.is_empty() {
                checks::check_ids().map(|(id, _)| id).collect()
            } else {
                only
            };
            let mut failed = Vec::new();
            for id in ids {
                let outcome = checks::run(id).ok_or_else(|| Failure::Input(format!("no criterion {id}")))?;
                writeln!(out, "{outcome}")?;
                out.flush()?;
                if !outcome.passed {
                    failed.push(id);
                }
            }
            if !failed.is_empty() {
                return Err(Failure::Contract(format!("failed criteria: {failed:?}")));
            }
        }
    }
    Ok(())
}

fn check_residual(residual: f64, tol: Option<f64>) -> Outcome {
    match tol {
        Some(t) if t.is_nan() || t <= 0.0 => Err(Failure::Input(format!("tolerance must be positive, got {t}"))),
        Some(t) if residual > t => Err(Failure::Contract(format!(
            "aliasing residual {} exceeds tolerance {}",
            num(residual),
            num(t)
        ))),
        _ => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let mut sink: Box<dyn Write> = match &cli.output {
        Some(path) => match fs::File::create(path) {
            Ok(file) => Box::new(io::BufWriter::new(file)),
            Err(e) => {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(1);
            }
        },
        None => Box::new(io::stdout().lock()),
    };
    let result = run(cli.command, sink.as_mut()).and_then(|()| sink.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Contract(msg)) => {
            eprintln!("contract violated: {msg}");
            ExitCode::from(2)
        }
    }
}
