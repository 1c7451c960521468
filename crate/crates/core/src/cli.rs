//! The `neutro` command line.
//!
//! Exit codes: 0 on success, 1 on invalid arguments, malformed or
//! out-of-range input, or failed invariants, 2 on I/O failure. Data goes to
//! the output stream; diagnostics go to the error stream only.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::check::{run_check, CheckConfig};
use crate::entropy::EntropyVariant;
use crate::io::{
    compute_rows, emit_classifications, emit_results, parse_records, Format, Grid, GridSpec,
    InputError, ParsedRecords, Quantity,
};
use crate::triple::Tolerance;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_IO: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "neutro",
    version,
    about = "Neutrosophic entropy and its seven-component decomposition"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute indices, both entropies and both decompositions per record.
    Compute(BatchArgs),
    /// Tabulate one quantity over the (mu, nu) square and render it as PPM.
    Sweep(SweepArgs),
    /// Classify each record's information kind.
    Classify(BatchArgs),
    /// Run the invariant suite on seeded random triples.
    Check(CheckArgs),
}

#[derive(Debug, Args)]
struct BatchArgs {
    /// Input file, or "-" for stdin.
    #[arg(default_value = "-")]
    input: String,
    /// Input and output format.
    #[arg(long, default_value = "csv", value_parser = parse_format)]
    format: Format,
    /// Clamp out-of-range values into [0, 1] instead of rejecting them.
    #[arg(long)]
    clamp: bool,
    /// Output file, or "-" for stdout.
    #[arg(short, long, default_value = "-")]
    output: String,
    /// Classification tolerance.
    #[arg(long, default_value_t = crate::triple::DEFAULT_TOLERANCE, value_parser = parse_tolerance)]
    tolerance: f64,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Fixed neutrality level in [0, 1].
    #[arg(long, default_value_t = 0.0)]
    omega: f64,
    /// Grid points per axis (at least 2).
    #[arg(long, default_value_t = 101)]
    resolution: usize,
    /// entropy_c, entropy_r, entropy, or a component t, f, a, u, c, n, s
    /// (optionally suffixed _c or _r).
    #[arg(long)]
    quantity: String,
    /// Entropy variant for unsuffixed quantities.
    #[arg(long, default_value = "c", value_parser = parse_variant)]
    variant: EntropyVariant,
    /// Grid table output (CSV: mu,nu,value), or "-" for stdout.
    #[arg(long, default_value = "-")]
    out_table: String,
    /// PPM (P6) image output.
    #[arg(long)]
    out_image: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// Number of random triples.
    #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Tolerance for the partition and entropy-consistency identities and
    /// for classification.
    #[arg(long, default_value_t = crate::triple::DEFAULT_TOLERANCE, value_parser = parse_tolerance)]
    tolerance: f64,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

fn parse_variant(s: &str) -> Result<EntropyVariant, String> {
    s.parse()
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    let eps: f64 = s.parse().map_err(|e| format!("{e}"))?;
    Tolerance::new(eps)
        .map(|t| t.eps())
        .map_err(|e| e.to_string())
}

/// Streams a command reads from and writes to.
pub struct Streams<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

enum Failure {
    Invalid(String),
    Io(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        match e {
            InputError::Io(io) => Failure::Io(format!("read error: {io}")),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

fn io_failure(what: &str, path: &str, e: io::Error) -> Failure {
    Failure::Io(format!("{what} {path}: {e}"))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, streams: Streams<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(streams.stdout, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(streams.stderr, "{rendered}");
                    EXIT_INVALID
                }
            };
        }
    };
    let Streams {
        stdin,
        stdout,
        stderr,
    } = streams;
    let result = match cli.command {
        Command::Compute(args) => cmd_compute(&args, stdin, stdout, stderr),
        Command::Classify(args) => cmd_classify(&args, stdin, stdout, stderr),
        Command::Sweep(args) => cmd_sweep(&args, stdout, stderr),
        Command::Check(args) => cmd_check(&args, stdout),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INVALID
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_IO
        }
    }
}

fn read_records(
    args: &BatchArgs,
    stdin: &mut dyn Read,
    stderr: &mut dyn Write,
) -> Result<ParsedRecords, Failure> {
    let parsed = if args.input == "-" {
        parse_records(stdin, args.format, args.clamp)?
    } else {
        let file =
            File::open(&args.input).map_err(|e| io_failure("cannot open", &args.input, e))?;
        parse_records(io::BufReader::new(file), args.format, args.clamp)?
    };
    if args.clamp && parsed.clamped > 0 {
        let _ = writeln!(
            stderr,
            "warning: clamped {} value(s) into [0, 1]",
            parsed.clamped
        );
    }
    Ok(parsed)
}

fn write_output(
    path: &str,
    stdout: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> Result<(), Failure> {
    if path == "-" {
        body(stdout).map_err(|e| io_failure("cannot write", "stdout", e))
    } else {
        let file = File::create(path).map_err(|e| io_failure("cannot create", path, e))?;
        let mut w = BufWriter::new(file);
        body(&mut w).map_err(|e| io_failure("cannot write", path, e))
    }
}

fn tolerance(eps: f64) -> Tolerance {
    Tolerance::new(eps).expect("validated by the argument parser")
}

fn cmd_compute(
    args: &BatchArgs,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Failure> {
    let parsed = read_records(args, stdin, stderr)?;
    let rows = compute_rows(&parsed.records, tolerance(args.tolerance));
    write_output(&args.output, stdout, |w| {
        emit_results(&rows, args.format, w)
    })?;
    Ok(EXIT_OK)
}

fn cmd_classify(
    args: &BatchArgs,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Failure> {
    let parsed = read_records(args, stdin, stderr)?;
    let tol = tolerance(args.tolerance);
    write_output(&args.output, stdout, |w| {
        emit_classifications(&parsed.records, tol, args.format, w)
    })?;
    Ok(EXIT_OK)
}

fn cmd_sweep(
    args: &SweepArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Failure> {
    let quantity = Quantity::parse(&args.quantity, args.variant).map_err(Failure::Invalid)?;
    let spec = GridSpec::new(args.omega, args.resolution, quantity)
        .map_err(|e| Failure::Invalid(e.to_string()))?;
    let grid = Grid::evaluate(spec);
    write_output(&args.out_table, stdout, |w| grid.write_table(w))?;
    if let Some(path) = &args.out_image {
        let shown = path.display().to_string();
        let file = File::create(path).map_err(|e| io_failure("cannot create", &shown, e))?;
        grid.write_ppm(BufWriter::new(file))
            .map_err(|e| io_failure("cannot write", &shown, e))?;
    }
    let _ = writeln!(
        stderr,
        "sweep: {} at omega={} over {}x{} points",
        quantity, args.omega, args.resolution, args.resolution
    );
    Ok(EXIT_OK)
}

fn cmd_check(args: &CheckArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let config = CheckConfig {
        samples: args.samples,
        seed: args.seed,
        tolerance: tolerance(args.tolerance),
    };
    let report = run_check(&config);
    writeln!(stdout, "{report}").map_err(|e| io_failure("cannot write", "stdout", e))?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_INVALID
    })
}
