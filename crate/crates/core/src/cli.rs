//! The `herglotz` command line: evaluate functions, enumerate and inspect
//! the matrix sets, and run verification suites.
//!
//! Exit codes: 0 success, 1 a check failed, 2 invalid argument value,
//! 64 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::hecke::{chain_decompose, check_cn, enumerate_s, s_plus, theta, CnMode};
use crate::numkernel::{digamma, dilog, rogers, EvalOptions, Kernel, RealValue};
use crate::verify::{GridRun, GridSpec, Identity, ReportFile, Tolerances, Verifier};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Grid used on both axes when none is given.
pub const DEFAULT_GRID: [f64; 5] = [0.3, 0.7, 1.5, 2.0, 5.0];
pub const DEFAULT_PRIMES: [i64; 6] = [2, 3, 5, 7, 11, 13];
pub const DEFAULT_RZ_ORDERS: [i64; 10] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10];
pub const DEFAULT_FIVE_TERM_SAMPLES: usize = 1000;

#[derive(Debug, Parser)]
#[command(
    name = "herglotz",
    version,
    about = "Refined Herglotz-Zagier function and its functional equations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one special function.
    Eval(EvalCmd),
    /// Enumerate S_n, check the C_n condition, or decompose S_l into chains.
    #[command(subcommand)]
    Hecke(HeckeCmd),
    /// Run a verification suite.
    Verify(VerifyCmd),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Function {
    Hz,
    Mhz,
    Rhz,
    Dilog,
    Rogers,
    Digamma,
}

#[derive(Debug, Args)]
struct EvalArgs {
    /// Terms of the HZ series summed directly.
    #[arg(long, default_value_t = 10_000)]
    cutoff: u64,
    /// Bernoulli correction orders in the HZ tail (1..=8).
    #[arg(long, default_value_t = 3)]
    tail_order: u32,
    /// Target absolute error for HZ evaluations.
    #[arg(long, default_value_t = 1e-11)]
    target: f64,
}

impl EvalArgs {
    fn options(&self) -> EvalOptions {
        EvalOptions {
            target_abs_error: self.target,
            series_cutoff: self.cutoff,
            tail_order: self.tail_order,
        }
    }
}

#[derive(Debug, Args)]
struct EvalCmd {
    function: Function,
    #[arg(long, allow_negative_numbers = true)]
    x: f64,
    /// Second argument, required by rhz.
    #[arg(long, allow_negative_numbers = true)]
    y: Option<f64>,
    #[command(flatten)]
    eval: EvalArgs,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

#[derive(Debug, Subcommand)]
enum HeckeCmd {
    /// List S_n in lexicographic order, one [a,b,c,d] record per matrix.
    Enumerate {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Keep only the matrices with b > 0.
        #[arg(long)]
        plus: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Check the C_n boundary condition for theta_n.
    CheckCn {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, default_value = "per-orbit")]
        mode: CnMode,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Split S_l (l prime) into its diagonal pair and chains C_1..C_{l-1}.
    Chains {
        #[arg(long, alias = "n", allow_negative_numbers = true)]
        l: i64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Theorem1,
    Rz,
    FiveTerm,
    Reflection,
    Telescope,
    ChainSum,
    Complement,
    Decomposition,
    All,
}

#[derive(Debug, Args)]
#[command(
    after_help = "Defaults: x, y in {0.3, 0.7, 1.5, 2.0, 5.0} with x = y excluded; \
primes l in {2, 3, 5, 7, 11, 13}; rz orders n in 1..=10; five-term uses 1000 seeded random \
same-side pairs unless --x and --y are given. HERGLOTZ_TOLERANCE overrides the default tolerance."
)]
struct VerifyCmd {
    suite: Suite,
    /// Primes l (comma separated).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    l: Vec<i64>,
    /// Orders n for the rz suite (comma separated).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    n: Vec<i64>,
    /// x values (comma separated).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    x: Vec<f64>,
    /// y values (comma separated).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    y: Vec<f64>,
    /// Values used for both axes when --x or --y is absent.
    #[arg(long, value_delimiter = ',')]
    grid: Vec<f64>,
    /// Random pairs for the five-term suite.
    #[arg(long, default_value_t = DEFAULT_FIVE_TERM_SAMPLES)]
    samples: usize,
    /// Tolerance for both exact and mod zeta(2) identities (defaults 1e-8 and 1e-6).
    #[arg(long, env = "HERGLOTZ_TOLERANCE", allow_negative_numbers = true)]
    tolerance: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write every report to this file (json unless --format csv).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
    #[command(flatten)]
    eval: EvalArgs,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Eval(cmd) => cmd_eval(&cmd, out),
        Command::Hecke(cmd) => cmd_hecke(&cmd, out),
        Command::Verify(cmd) => cmd_verify(&cmd, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            if !message.is_empty() {
                let _ = writeln!(err, "herglotz: {message}");
            }
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let message = match &e {
            Error::Domain(m) => m.clone(),
            other => other.to_string(),
        };
        Failure {
            code: EXIT_INVALID,
            message,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        // A closed downstream pipe (`| head`) is not an error.
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure {
                code: EXIT_OK,
                message: String::new(),
            };
        }
        Failure {
            code: EXIT_INVALID,
            message: format!("i/o error: {e}"),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Nominal accuracy of the closed-form special functions.
const SPECIAL_ERR: f64 = 1e-13;

#[derive(Serialize)]
struct EvalRecord {
    function: &'static str,
    x: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    y: Option<f64>,
    value: f64,
    err_bound: f64,
}

fn cmd_eval(cmd: &EvalCmd, out: &mut dyn Write) -> CmdResult {
    let x = cmd.x;
    if matches!(cmd.function, Function::Rhz) != cmd.y.is_some() {
        return Err(usage(match cmd.function {
            Function::Rhz => "rhz requires --y",
            _ => "--y is only accepted by rhz",
        }));
    }
    let kernel = || Kernel::new(cmd.eval.options());
    let (name, value) = match cmd.function {
        Function::Hz => ("hz", kernel()?.hz(x)?),
        Function::Mhz => ("mhz", kernel()?.mhz(x)?),
        Function::Rhz => ("rhz", kernel()?.rhz(x, cmd.y.expect("checked above"))?),
        Function::Dilog => ("dilog", RealValue::new(dilog(x)?, SPECIAL_ERR)),
        Function::Rogers => ("rogers", RealValue::new(rogers(x)?, SPECIAL_ERR)),
        Function::Digamma => ("digamma", RealValue::new(digamma(x)?, SPECIAL_ERR)),
    };
    let record = EvalRecord {
        function: name,
        x,
        y: cmd.y,
        value: value.value,
        err_bound: value.err_bound,
    };
    match cmd.format {
        OutputFormat::Plain => {
            let args = match cmd.y {
                Some(y) => format!("{x}, {y}"),
                None => format!("{x}"),
            };
            writeln!(out, "{name}({args}) = {}", value.value)?;
            writeln!(out, "err_bound = {:.3e}", value.err_bound)?;
        }
        OutputFormat::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&record).expect("finite")
        )?,
        OutputFormat::Csv => {
            writeln!(out, "function,x,y,value,err_bound")?;
            let y = cmd.y.map(|y| y.to_string()).unwrap_or_default();
            writeln!(out, "{name},{x},{y},{},{}", value.value, value.err_bound)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_hecke(cmd: &HeckeCmd, out: &mut dyn Write) -> CmdResult {
    match *cmd {
        HeckeCmd::Enumerate { n, plus, format } => {
            let mut set = enumerate_s(n)?;
            if plus {
                set = s_plus(&set);
            }
            match format {
                OutputFormat::Plain => {
                    for m in &set {
                        writeln!(out, "[{},{},{},{}]", m.a, m.b, m.c, m.d)?;
                    }
                }
                OutputFormat::Json => {
                    writeln!(out, "{}", serde_json::to_string(&set).expect("integers"))?
                }
                OutputFormat::Csv => {
                    writeln!(out, "a,b,c,d")?;
                    for m in &set {
                        writeln!(out, "{},{},{},{}", m.a, m.b, m.c, m.d)?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        HeckeCmd::CheckCn { n, mode, format } => {
            let report = check_cn(&theta(n)?, n, mode)?;
            match format {
                OutputFormat::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report).expect("integers")
                )?,
                OutputFormat::Plain | OutputFormat::Csv => {
                    for o in &report.orbits {
                        writeln!(
                            out,
                            "orbit {}  members={}  boundary={}  {}",
                            o.canonical,
                            o.members.len(),
                            o.divisor,
                            if o.pass { "ok" } else { "FAIL" }
                        )?;
                    }
                    writeln!(out, "total boundary = {}", report.total)?;
                    writeln!(
                        out,
                        "C_{n} ({mode}): {} over {} orbits",
                        if report.pass { "PASS" } else { "FAIL" },
                        report.orbits.len()
                    )?;
                }
            }
            Ok(if report.pass {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
        HeckeCmd::Chains { l, format } => {
            let l_u = u64::try_from(l).map_err(|_| Error::NotPrime(0))?;
            let dec = chain_decompose(l_u)?;
            match format {
                OutputFormat::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&dec).expect("integers")
                )?,
                OutputFormat::Plain => {
                    writeln!(out, "diagonal: {} {}", dec.diagonal[0], dec.diagonal[1])?;
                    writeln!(out, "{:>5} {:>6} {:>5}  matrices", "chain", "length", "x_n")?;
                    for c in &dec.chains {
                        let ms: Vec<String> = c.matrices.iter().map(|m| m.to_string()).collect();
                        writeln!(
                            out,
                            "{:>5} {:>6} {:>5}  {}",
                            c.index,
                            c.len(),
                            c.x_n,
                            ms.join(" ")
                        )?;
                    }
                }
                OutputFormat::Csv => {
                    writeln!(out, "chain,length,x_n")?;
                    for c in &dec.chains {
                        writeln!(out, "{},{},{}", c.index, c.len(), c.x_n)?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn positive_values(name: &str, values: &[f64]) -> std::result::Result<(), Failure> {
    match values.iter().find(|v| !(v.is_finite() && **v > 0.0)) {
        Some(v) => Err(Failure {
            code: EXIT_INVALID,
            message: format!("{name} values must be positive, got {v}"),
        }),
        None => Ok(()),
    }
}

fn cmd_verify(cmd: &VerifyCmd, out: &mut dyn Write) -> CmdResult {
    let tolerances = match cmd.tolerance {
        Some(t) if !(t.is_finite() && t > 0.0) => {
            return Err(Failure {
                code: EXIT_INVALID,
                message: format!("tolerance must be positive, got {t}"),
            })
        }
        Some(t) => Tolerances::uniform(t),
        None => Tolerances::default(),
    };
    let options = cmd.eval.options();
    let verifier = Verifier::new(options, tolerances)?;

    let fallback = if cmd.grid.is_empty() {
        DEFAULT_GRID.to_vec()
    } else {
        cmd.grid.clone()
    };
    let xs = if cmd.x.is_empty() {
        fallback.clone()
    } else {
        cmd.x.clone()
    };
    let ys = if cmd.y.is_empty() {
        fallback
    } else {
        cmd.y.clone()
    };
    positive_values("x", &xs)?;
    positive_values("y", &ys)?;
    let grid = GridSpec::new(xs, ys);
    let primes = if cmd.l.is_empty() {
        DEFAULT_PRIMES.to_vec()
    } else {
        cmd.l.clone()
    };
    let orders = if cmd.n.is_empty() {
        DEFAULT_RZ_ORDERS.to_vec()
    } else {
        cmd.n.clone()
    };

    let identities: Vec<Identity> = match cmd.suite {
        Suite::All => Identity::ALL.to_vec(),
        Suite::Theorem1 => vec![Identity::Theorem1],
        Suite::Rz => vec![Identity::Rz],
        Suite::FiveTerm => vec![Identity::FiveTerm],
        Suite::Reflection => vec![Identity::Reflection],
        Suite::Telescope => vec![Identity::Telescope],
        Suite::ChainSum => vec![Identity::ChainSum],
        Suite::Complement => vec![Identity::Complement],
        Suite::Decomposition => vec![Identity::Decomposition],
    };

    let mut file = ReportFile::new(cmd.seed, tolerances, options);
    let mut summaries = Vec::new();
    for id in identities {
        let run = match id {
            Identity::FiveTerm if cmd.x.is_empty() || cmd.y.is_empty() => {
                verifier.run_five_term_samples(cmd.seed, cmd.samples)?
            }
            Identity::FiveTerm | Identity::Reflection => verifier.run_grid(id, &[], &grid)?,
            Identity::Rz => verifier.run_grid(id, &orders, &grid)?,
            _ => verifier.run_grid(id, &primes, &grid)?,
        };
        summaries.push((id, summary(&run)));
        file.reports.extend(run.reports);
        file.skipped.extend(run.skipped);
    }

    match cmd.format {
        OutputFormat::Json => writeln!(out, "{}", file.to_json())?,
        OutputFormat::Csv => write!(out, "{}", file.to_csv())?,
        OutputFormat::Plain => {
            writeln!(
                out,
                "# seed {}  tolerance exact={:e} modular={:e}",
                cmd.seed, tolerances.exact, tolerances.modular
            )?;
            let verbose = file.reports.len() <= 25;
            for r in file.reports.iter().filter(|r| verbose || !r.pass) {
                writeln!(out, "{r}")?;
            }
            for s in file.skipped.iter().filter(|_| verbose) {
                writeln!(
                    out,
                    "SKIP {:<10} {}  {}",
                    s.identity.name(),
                    s.params,
                    s.reason
                )?;
            }
            for (id, line) in &summaries {
                writeln!(out, "{:<13} {line}", id.name())?;
            }
            writeln!(out, "{}", if file.all_pass() { "PASS" } else { "FAIL" })?;
        }
    }

    if let Some(path) = &cmd.out {
        let body = match cmd.format {
            OutputFormat::Csv => file.to_csv(),
            _ => file.to_json() + "\n",
        };
        std::fs::write(path, body)?;
    }
    Ok(if file.all_pass() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn summary(run: &GridRun) -> String {
    let passed = run.reports.iter().filter(|r| r.pass).count();
    format!(
        "{passed} pass, {} fail, {} skipped, max excess {:.3e}",
        run.reports.len() - passed,
        run.skipped.len(),
        run.max_excess()
    )
}
