//! The `jacobi-lt` command line.
//!
//! Exit codes: `0` every checked bound holds, `1` some bound or property
//! fails (reports are still written), `2` usage, parse or domain error, `3`
//! an eigensolver did not converge (partial output is still written).

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::eigen::{eigenvalues_outside, EigenConfig, SpectrumOutside};
use crate::harness::checks::{checks_to_csv, run_suite, CheckSummary, Suite, SuiteOptions};
use crate::harness::model::RandomModel;
use crate::harness::report::{fmt_real, reports_to_csv, to_json, VerificationReport};
use crate::harness::sharpness::{parse_grid, sharpness_curve, sharpness_to_csv, SharpnessMode};
use crate::harness::verify::{
    check_gammas, sweep_instance, verify_instance, VerifyOptions, DEFAULT_TOL,
};
use crate::harness::{par_map, random_instances, Instance};
use crate::{Error, Perturbation};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONVERGENCE: i32 = 3;

const AFTER_HELP: &str = "\
Report CSV columns (verify, sweep):
  instance_id,inequality,gamma,lhs,rhs,margin,n_used,est_error,pass
  margin = rhs - lhs; pass is true, false or informational.
  inequality: eq1, eq2, eq4_plus, eq4_minus, eq3_report, eq3_report_unsquared,
  eq3_report_riesz, remark_power_gamma, remark_power_gamma_half.
Spectrum CSV columns: branch,index,value,n_used,est_error
Sharpness CSV columns: mode,param,lhs,rhs,ratio,lhs_closed,ratio_closed,n_used,est_error
Constructs CSV columns: suite,check,cases,failures,worst,tol,pass
Reals are printed with 17 significant digits.

Exit codes: 0 pass, 1 inequality failure, 2 usage/parse error, 3 convergence failure.";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "jacobi-lt",
    version,
    about = "Eigenvalue bounds for perturbed Jacobi operators: spectra, verification suites and proof-construct checks",
    after_help = AFTER_HELP
)]
pub struct Cli {
    /// Tolerance: margin tolerance for verify/sweep (default 1e-7),
    /// bisection tolerance for spectrum, override of every check tolerance
    /// for constructs
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true, value_enum, default_value = "csv")]
    pub format: Format,
    /// Seed of the random instances and property suites
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Write the output here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Source {
    /// Draw N instances from the random model instead of reading files
    #[arg(long, value_name = "N")]
    pub random: Option<u64>,
    /// Random model preset: default (|b| <= 2, a in [0, 2]) or constructs
    /// (b >= 0, a in [0, 1])
    #[arg(long, default_value = "default")]
    pub model: String,
    /// Largest truncation half-width tried before giving up (default 16384)
    #[arg(long)]
    pub half_width: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Discrete eigenvalues outside [-2, 2] of one instance
    Spectrum {
        file: PathBuf,
        /// Largest truncation half-width tried before giving up
        #[arg(long)]
        half_width: Option<usize>,
    },
    /// Check eq1, eq2 and eq4 per instance, with informational eq3 rows
    Verify {
        /// Instance files
        files: Vec<PathBuf>,
        #[command(flatten)]
        source: Source,
        /// Riesz exponents, comma separated
        #[arg(long, default_value = "0.75,1,1.5,2.5")]
        gamma: String,
    },
    /// Ratio of eigenvalue sum to bound along a single-bond or single-site family
    Sharpness {
        #[arg(long, default_value = "bond")]
        mode: String,
        /// dyadic:K1..K2 (values 1 + 2^-k) or a comma-separated list
        #[arg(long)]
        grid: Option<String>,
    },
    /// Seeded property suites over the proof constructions
    Constructs {
        /// all, decomposition, bs, smu, gmu or convexity
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Riesz-mean bounds and their lower bounds across a range of exponents
    Sweep {
        /// START:STOP:STEP or a comma-separated list; every value must exceed 1/2
        #[arg(long, default_value = "0.75,1,1.5,2.5")]
        gamma_range: String,
        #[arg(long)]
        instance_file: Vec<PathBuf>,
        #[command(flatten)]
        source: Source,
    },
}

/// Comma-separated reals.
pub fn parse_real_list(s: &str) -> Result<Vec<f64>, Error> {
    let values: Vec<f64> = s
        .split(',')
        .map(|v| {
            v.trim()
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("not a number: '{v}'")))
        })
        .collect::<Result<_, _>>()?;
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::Parse(format!("non-finite value in '{s}'")));
    }
    Ok(values)
}

/// `START:STOP:STEP` (inclusive, up to rounding) or a comma-separated list.
pub fn parse_gamma_range(s: &str) -> Result<Vec<f64>, Error> {
    let parts: Vec<&str> = s.split(':').collect();
    let gammas = match parts.as_slice() {
        [one] => parse_real_list(one)?,
        [start, stop, step] => {
            let [start, stop, step] = [start, stop, step].map(|v| v.trim().parse::<f64>());
            let (start, stop, step) = match (start, stop, step) {
                (Ok(a), Ok(b), Ok(c)) if c > 0.0 && a <= b && a.is_finite() && b.is_finite() => {
                    (a, b, c)
                }
                _ => return Err(Error::Parse(format!("bad range '{s}'"))),
            };
            let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
            (0..count).map(|k| start + k as f64 * step).collect()
        }
        _ => return Err(Error::Parse(format!("bad range '{s}'"))),
    };
    check_gammas(&gammas)?;
    Ok(gammas)
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotConverged { .. } | Error::DenseNotConverged { .. } => EXIT_CONVERGENCE,
        _ => EXIT_USAGE,
    }
}

struct Output {
    text: String,
    code: i32,
}

fn instances(files: &[PathBuf], source: &Source, seed: u64) -> Result<Vec<Instance>, Error> {
    match (source.random, files.is_empty()) {
        (Some(n), true) => random_instances(&RandomModel::preset(&source.model, seed)?, n),
        (None, false) => files.iter().map(|f| Instance::from_file(f)).collect(),
        (Some(_), false) => Err(Error::Parse(
            "give instance files or --random, not both".into(),
        )),
        (None, true) => Err(Error::Parse(
            "no instances: give instance files or --random N".into(),
        )),
    }
}

fn render_reports(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Csv => reports_to_csv(reports),
        Format::Json => to_json(reports),
    }
}

/// Runs a per-instance suite; stops at the first error but keeps the
/// reports of the instances before it.
fn run_reports(
    instances: Vec<Instance>,
    format: Format,
    suite: impl Fn(&Instance) -> Result<Vec<VerificationReport>, Error> + Sync,
) -> Output {
    let results = par_map(instances, suite);
    let mut reports = Vec::new();
    let mut error = None;
    for r in results {
        match r {
            Ok(rows) => reports.extend(rows),
            Err(e) => {
                error = Some(e);
                break;
            }
        }
    }
    let code = match &error {
        Some(e) => {
            eprintln!("error: {e}");
            exit_code(e)
        }
        None if reports.iter().any(VerificationReport::failed) => EXIT_FAIL,
        None => EXIT_PASS,
    };
    Output {
        text: render_reports(&reports, format),
        code,
    }
}

fn spectrum_text(s: &SpectrumOutside, format: Format) -> String {
    match format {
        Format::Json => to_json(s),
        Format::Csv => {
            let mut out = String::from("branch,index,value,n_used,est_error\n");
            let rows = s
                .e_plus
                .iter()
                .map(|&e| ("plus", e))
                .enumerate()
                .chain(s.e_minus.iter().map(|&e| ("minus", e)).enumerate());
            for (j, (branch, e)) in rows {
                out.push_str(&format!(
                    "{branch},{},{},{},{}\n",
                    j + 1,
                    fmt_real(e),
                    s.n_used,
                    fmt_real(s.est_error)
                ));
            }
            out
        }
    }
}

fn cmd_spectrum(cli: &Cli, file: &PathBuf, half_width: Option<usize>) -> Result<Output, Error> {
    let p = Perturbation::read_file(file)?;
    let mut cfg = EigenConfig::default();
    if let Some(tol) = cli.tol {
        cfg.bisect_tol = tol;
    }
    if let Some(hw) = half_width {
        cfg.max_half_width = hw;
    }
    match eigenvalues_outside(&p, &cfg) {
        Ok(s) => Ok(Output {
            text: spectrum_text(&s, cli.format),
            code: EXIT_PASS,
        }),
        Err(Error::NotConverged {
            max_half_width,
            partial,
        }) => {
            eprintln!("error: eigenvalues did not converge up to half-width {max_half_width}; partial output follows");
            Ok(Output {
                text: spectrum_text(&partial, cli.format),
                code: EXIT_CONVERGENCE,
            })
        }
        Err(e) => Err(e),
    }
}

fn cmd_sharpness(cli: &Cli, mode: &str, grid: Option<&str>) -> Result<Output, Error> {
    let mode = SharpnessMode::parse(mode)?;
    let grid = match grid {
        Some(g) => parse_grid(g)?,
        None => mode.default_grid(),
    };
    let rows = sharpness_curve(mode, &grid, &EigenConfig::default())?;
    let text = match cli.format {
        Format::Csv => sharpness_to_csv(&rows),
        Format::Json => to_json(&rows),
    };
    Ok(Output {
        text,
        code: EXIT_PASS,
    })
}

#[derive(Serialize)]
struct ConstructsReport<'a> {
    seed: u64,
    checks: &'a [CheckSummary],
}

fn cmd_constructs(cli: &Cli, suite: &str) -> Result<Output, Error> {
    let suites = Suite::parse_selection(suite)?;
    let opts = SuiteOptions {
        tol: cli.tol,
        ..SuiteOptions::new(cli.seed)
    };
    let mut checks = Vec::new();
    for s in suites {
        checks.extend(run_suite(s, &opts)?);
    }
    let failed = checks.iter().any(|c| !c.pass);
    if failed && cli.format == Format::Csv {
        for c in checks.iter().filter(|c| !c.pass) {
            for d in &c.details {
                eprintln!("{}/{} failed: {d}", c.suite.label(), c.check);
            }
        }
    }
    let text = match cli.format {
        Format::Csv => checks_to_csv(&checks),
        Format::Json => to_json(&ConstructsReport {
            seed: cli.seed,
            checks: &checks,
        }),
    };
    Ok(Output {
        text,
        code: if failed { EXIT_FAIL } else { EXIT_PASS },
    })
}

fn dispatch(cli: &Cli) -> Result<Output, Error> {
    let opts = |gammas: Vec<f64>, source: &Source| {
        let mut eigen = EigenConfig::default();
        if let Some(hw) = source.half_width {
            eigen.max_half_width = hw;
        }
        VerifyOptions {
            gammas,
            tol: cli.tol.unwrap_or(DEFAULT_TOL),
            eigen,
        }
    };
    match &cli.command {
        Command::Spectrum { file, half_width } => cmd_spectrum(cli, file, *half_width),
        Command::Verify {
            files,
            source,
            gamma,
        } => {
            let gammas = parse_real_list(gamma)?;
            check_gammas(&gammas)?;
            let opts = opts(gammas, source);
            let instances = instances(files, source, cli.seed)?;
            Ok(run_reports(instances, cli.format, |i| {
                verify_instance(i, &opts)
            }))
        }
        Command::Sharpness { mode, grid } => cmd_sharpness(cli, mode, grid.as_deref()),
        Command::Constructs { suite } => cmd_constructs(cli, suite),
        Command::Sweep {
            gamma_range,
            instance_file,
            source,
        } => {
            let opts = opts(parse_gamma_range(gamma_range)?, source);
            let instances = instances(instance_file, source, cli.seed)?;
            Ok(run_reports(instances, cli.format, |i| {
                sweep_instance(i, &opts)
            }))
        }
    }
}

fn emit(cli: &Cli, text: &str) -> io::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let _ = e.print();
            return code;
        }
    };
    if let Some(tol) = cli.tol {
        if !(tol > 0.0) || !tol.is_finite() {
            eprintln!("error: --tol must be positive and finite, got {tol}");
            return EXIT_USAGE;
        }
    }
    match dispatch(&cli) {
        Ok(out) => match emit(&cli, &out.text) {
            Ok(()) => out.code,
            Err(e) => {
                eprintln!("error: cannot write output: {e}");
                EXIT_USAGE
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

/// Entry point of the binary.
pub fn main() -> i32 {
    run(std::env::args_os())
}
