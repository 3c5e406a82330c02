//! Thin command-line front end over the library: grid scans, masker
//! search, and the named verification suites.
//!
//! Exit codes: 0 success, 1 usage error, 2 I/O error, 3 non-convergence
//! (or failed verification). Set NO_COLOR to suppress ANSI styling.

use std::fs::File;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use qmask::optimizer::{min_entanglement_masker, uniform_grid, OptimizationResult, OptimizerConfig};
use qmask::scan::{scan_records, write_csv, ScanCase, ScanRecord};
use qmask::states::PureQubit;
use qmask::verify::{Suite, SuiteReport};

const EXIT_USAGE: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_UNCONVERGED: u8 = 3;

#[derive(Parser)]
#[command(name = "qmask", version, about = "Two-qubit quantum state masking toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the masked mixture family over (p, theta) and emit records
    Scan(ScanArgs),
    /// Search for a masker of two pure inputs and minimize masked entanglement
    FindMasker(FindMaskerArgs),
    /// Run a named verification suite
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ScanArgs {
    /// Masked family: commuting (orthogonal pair) or noncommuting
    #[arg(long, value_parser = parse_case)]
    case: ScanCase,
    /// Number of mixing weights in [0, 1] (at least 2)
    #[arg(long, default_value_t = 101)]
    p_steps: usize,
    /// Single angle in radians
    #[arg(long, conflicts_with = "theta_steps")]
    theta: Option<f64>,
    /// Number of angles covering the family's full range
    #[arg(long)]
    theta_steps: Option<usize>,
    /// Output file; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format
    #[arg(long, default_value = "csv", value_parser = ["csv", "json"])]
    format: String,
}

#[derive(Args)]
struct FindMaskerArgs {
    /// Input pair: commuting (|0>, |1>) or noncommuting (|0>, angle theta)
    #[arg(long, value_parser = parse_case)]
    case: ScanCase,
    /// Bloch polar angle of the second input for the noncommuting case
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_4)]
    theta: f64,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long, default_value_t = 64)]
    restarts: usize,
    /// Output file; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// lemma1, lemma2, lemma3, thm1, thm2, appendix, or all
    #[arg(long)]
    suite: String,
}

fn parse_case(s: &str) -> Result<ScanCase, String> {
    match s {
        "commuting" => Ok(ScanCase::Commuting),
        "noncommuting" => Ok(ScanCase::Noncommuting),
        other => Err(format!("unknown case {other:?}; expected commuting or noncommuting")),
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn io_error(err: &std::io::Error) -> ExitCode {
    eprintln!("I/O error: {err}");
    ExitCode::from(EXIT_IO)
}

/// Opens `--out` or falls back to stdout.
fn open_sink(out: &Option<PathBuf>) -> std::io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(std::io::stdout().lock()),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            // clap renders help and usage errors itself.
            let _ = err.print();
            return ExitCode::from(code);
        }
    };

    match cli.command {
        Command::Scan(args) => cmd_scan(args),
        Command::FindMasker(args) => cmd_find_masker(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

#[derive(Serialize)]
struct ScanOutput<'a> {
    case: &'a str,
    p_steps: usize,
    thetas: &'a [f64],
    records: &'a [ScanRecord],
}

fn cmd_scan(args: ScanArgs) -> ExitCode {
    if args.p_steps < 2 {
        return usage_error("--p-steps must be at least 2");
    }
    let thetas: Vec<f64> = match (args.theta, args.theta_steps) {
        (Some(theta), None) => {
            if !(0.0..=args.case.theta_max()).contains(&theta) {
                return usage_error(&format!(
                    "--theta must lie in [0, {:.6}] for the {} case",
                    args.case.theta_max(),
                    args.case.name()
                ));
            }
            vec![theta]
        }
        (None, Some(steps)) => {
            if steps < 2 {
                return usage_error("--theta-steps must be at least 2");
            }
            let hi = args.case.theta_max();
            (0..steps)
                .map(|k| hi * k as f64 / (steps - 1) as f64)
                .collect()
        }
        (None, None) => return usage_error("one of --theta or --theta-steps is required"),
        (Some(_), Some(_)) => unreachable!("clap enforces the conflict"),
    };

    let p_grid = uniform_grid(args.p_steps);
    let records = match scan_records(args.case, &p_grid, &thetas) {
        Ok(r) => r,
        Err(e) => return usage_error(&e.to_string()),
    };

    let mut sink = match open_sink(&args.out) {
        Ok(s) => s,
        Err(e) => return io_error(&e),
    };
    let result = match args.format.as_str() {
        "csv" => {
            let mut metadata = vec![
                format!("qmask {} scan", env!("CARGO_PKG_VERSION")),
                format!("case={}", args.case.name()),
                format!("p_steps={}", args.p_steps),
            ];
            metadata.push(match (args.theta, args.theta_steps) {
                (Some(t), _) => format!("theta={t:.12e}"),
                (_, Some(s)) => format!("theta_steps={s}"),
                _ => unreachable!(),
            });
            write_csv(&mut sink, &metadata, &records).map_err(|e| e.to_string())
        }
        "json" => {
            let out = ScanOutput {
                case: args.case.name(),
                p_steps: args.p_steps,
                thetas: &thetas,
                records: &records,
            };
            serde_json::to_writer_pretty(&mut sink, &out)
                .map_err(|e| e.to_string())
                .and_then(|_| writeln!(sink).map_err(|e| e.to_string()))
        }
        _ => unreachable!("clap restricts --format"),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("I/O error: {msg}");
            ExitCode::from(EXIT_IO)
        }
    }
}

#[derive(Serialize)]
struct FindMaskerOutput<'a> {
    #[serde(flatten)]
    result: &'a OptimizationResult,
    config: &'a OptimizerConfig,
    case: &'a str,
    theta: f64,
}

fn cmd_find_masker(args: FindMaskerArgs) -> ExitCode {
    let (input1, input2, theta) = match args.case {
        ScanCase::Commuting => (PureQubit::zero(), PureQubit::one(), 0.0),
        ScanCase::Noncommuting => (
            PureQubit::zero(),
            PureQubit::real_superposition(args.theta),
            args.theta,
        ),
    };
    let config = OptimizerConfig {
        restarts: args.restarts,
        seed: args.seed,
        ..OptimizerConfig::default()
    };
    let result = match min_entanglement_masker(&input1, &input2, &config) {
        Ok(r) => r,
        Err(e) => return usage_error(&e.to_string()),
    };

    let mut sink = match open_sink(&args.out) {
        Ok(s) => s,
        Err(e) => return io_error(&e),
    };
    let output = FindMaskerOutput {
        result: &result,
        config: &config,
        case: args.case.name(),
        theta,
    };
    if let Err(e) = serde_json::to_writer_pretty(&mut sink, &output)
        .map_err(std::io::Error::from)
        .and_then(|_| writeln!(sink))
    {
        return io_error(&e);
    }

    if result.converged {
        ExitCode::SUCCESS
    } else {
        eprintln!(
            "warning: no restart reached residual {:.1e}; best attempt written (residual {:.3e})",
            config.masking_tolerance, result.residual
        );
        ExitCode::from(EXIT_UNCONVERGED)
    }
}

fn use_color() -> bool {
    std::env::var_os("NO_COLOR").is_none()
}

fn print_report(report: &SuiteReport, color: bool) {
    let (green, red, reset) = if color {
        ("\x1b[32m", "\x1b[31m", "\x1b[0m")
    } else {
        ("", "", "")
    };
    println!("suite {}", report.suite);
    for check in &report.checks {
        let tag = if check.passed {
            format!("{green}PASS{reset}")
        } else {
            format!("{red}FAIL{reset}")
        };
        println!(
            "  [{tag}] {} (measured {:.6e}, tolerance {:.1e})",
            check.description, check.measured, check.tolerance
        );
    }
    let verdict = if report.passed {
        format!("{green}passed{reset}")
    } else {
        format!("{red}failed{reset}")
    };
    println!("suite {} {}", report.suite, verdict);
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let suite: Suite = match args.suite.parse() {
        Ok(s) => s,
        Err(e) => return usage_error(&e.to_string()),
    };
    let reports = suite.run();
    let color = use_color();
    let mut all_passed = true;
    for report in &reports {
        print_report(report, color);
        all_passed &= report.passed;
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_UNCONVERGED)
    }
}
