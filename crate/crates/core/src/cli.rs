//! Command-line front end. Exit codes: 0 success or PASS, 1 FAIL or
//! evaluation error, 2 usage or parse error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::arith::ArithFunction;
use crate::dirichlet::{convolve_prefix, tabulate, write_jsonl_row, write_tsv_header, write_tsv_row, ValueTable};
use crate::error::Error;
use crate::fnspec::parse_function;
use crate::numtheory::{build_sieve, factorize, Natural, PrimeSieve, Rational, DEFAULT_SIEVE_LIMIT};
use crate::verify::{self, Identity, IdentityReport, Sweep};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "leibniz", version, about = "Exact arithmetic for Leibniz-additive functions")]
pub struct Cli {
    /// Table output format.
    #[arg(long, value_enum, default_value_t = Format::Tsv, global = true)]
    pub format: Format,

    /// Largest integer covered by the smallest-prime-factor sieve.
    #[arg(long, default_value_t = DEFAULT_SIEVE_LIMIT as u64, value_parser = clap::value_parser!(u64).range(2..=u32::MAX as u64), global = true)]
    pub sieve_limit: u64,

    /// Seed for random tables.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Jsonl,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a function at one point.
    Eval {
        #[arg(long = "fn")]
        function: String,
        #[arg(long, value_parser = parse_natural)]
        n: Natural,
    },
    /// Tabulate a function over a range.
    Table {
        #[arg(long = "fn")]
        function: String,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        from: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        to: u64,
    },
    /// Dirichlet convolution of two functions, tabulated on 1..=to.
    Convolve {
        /// Give exactly two.
        #[arg(long = "fn", num_args = 1, required = true)]
        functions: Vec<String>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        to: u64,
    },
    /// Sweep an identity over a finite range.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdentityArg {
    Leibniz,
    Schwab,
    GenSchwab,
    Cor33,
    SquareConv,
    Tau,
    Distributivity,
}

impl From<IdentityArg> for Identity {
    fn from(a: IdentityArg) -> Self {
        match a {
            IdentityArg::Leibniz => Identity::Leibniz,
            IdentityArg::Schwab => Identity::Schwab,
            IdentityArg::GenSchwab => Identity::GenSchwab,
            IdentityArg::Cor33 => Identity::Cor33,
            IdentityArg::SquareConv => Identity::SquareConv,
            IdentityArg::Tau => Identity::Tau,
            IdentityArg::Distributivity => Identity::Distributivity,
        }
    }
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub identity: IdentityArg,
    /// The function under test.
    #[arg(long = "fn")]
    pub function: Option<String>,
    /// Completely multiplicative part; defaults to the one known for --fn.
    #[arg(long)]
    pub h: Option<String>,
    /// First table, as a function to tabulate. Random when omitted.
    #[arg(long)]
    pub u: Option<String>,
    /// Second table, as a function to tabulate. Random when omitted.
    #[arg(long)]
    pub v: Option<String>,
    /// maxMN for leibniz (default 200), table limit otherwise (default 500).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub limit: Option<u64>,
}

fn parse_natural(s: &str) -> Result<Natural, String> {
    s.parse::<Natural>().map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Eval(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(io) => Failure::Io(io),
            e => Failure::Eval(e),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn function(spec: &str) -> Result<ArithFunction, Failure> {
    parse_function(spec).map_err(|e| Failure::Usage(format!("--fn `{spec}`: {e}")))
}

fn sieve_for(max_n: u64, cli: &Cli) -> Result<PrimeSieve, Failure> {
    let limit = max_n.clamp(2, cli.sieve_limit);
    Ok(build_sieve(limit as usize)?)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Eval(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAIL
        }
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAIL
        }
    }
}

fn execute(cli: &Cli, out: &mut impl Write) -> Result<i32, Failure> {
    match &cli.command {
        Command::Eval { function: spec, n } => {
            let f = function(spec)?;
            let sieve = sieve_for(n.to_u64().unwrap_or(u64::MAX), cli)?;
            let value = f.eval(n, &sieve)?;
            writeln!(out, "{value}")?;
        }
        Command::Table { function: spec, from, to } => {
            if from > to {
                return Err(Failure::Usage(format!("--from {from} exceeds --to {to}")));
            }
            let f = function(spec)?;
            let sieve = sieve_for(*to, cli)?;
            let mut out = std::io::BufWriter::new(out);
            if cli.format == Format::Tsv {
                write_tsv_header(&mut out)?;
            }
            for n in *from..=*to {
                let nat = Natural::try_from(n)?;
                let value = f.eval_factored(&factorize(&nat, &sieve), &sieve)?;
                write_row(&mut out, cli.format, n, &value)?;
            }
            out.flush()?;
        }
        Command::Convolve { functions, to } => {
            let [a, b] = functions.as_slice() else {
                return Err(Failure::Usage(format!(
                    "convolve takes exactly two --fn specs, got {}",
                    functions.len()
                )));
            };
            let (u, v) = (function(a)?, function(b)?);
            let limit = to_usize(*to)?;
            let sieve = sieve_for(*to, cli)?;
            let table = convolve_prefix(&tabulate(&u, limit, &sieve)?, &tabulate(&v, limit, &sieve)?, limit)?;
            let mut out = std::io::BufWriter::new(out);
            match cli.format {
                Format::Tsv => table.write_tsv(&mut out)?,
                Format::Jsonl => table.write_jsonl(&mut out)?,
            }
            out.flush()?;
        }
        Command::Verify(args) => {
            let report = run_verify(cli, args)?;
            writeln!(out, "{report}")?;
            return Ok(if report.passed() { EXIT_OK } else { EXIT_FAIL });
        }
    }
    Ok(EXIT_OK)
}

fn write_row(out: &mut impl Write, format: Format, n: u64, value: &Rational) -> Result<(), Error> {
    match format {
        Format::Tsv => write_tsv_row(out, n, value),
        Format::Jsonl => write_jsonl_row(out, n, value),
    }
}

fn to_usize(n: u64) -> Result<usize, Failure> {
    usize::try_from(n).map_err(|_| Failure::Usage(format!("{n} is too large for a table")))
}

fn run_verify(cli: &Cli, args: &VerifyArgs) -> Result<IdentityReport, Failure> {
    let identity = Identity::from(args.identity);
    let mut sweep = Sweep::new(identity);
    sweep.seed = cli.seed;
    sweep.limit = args.limit;
    sweep.f = args.function.as_deref().map(function).transpose()?;
    sweep.h = args.h.as_deref().map(function).transpose()?;
    let limit = sweep.limit();
    let sieve = sieve_for(limit, cli)?;
    if identity != Identity::Leibniz {
        let limit = to_usize(limit)?;
        let table = |spec: &Option<String>| -> Result<Option<ValueTable>, Failure> {
            spec.as_deref()
                .map(|s| Ok(tabulate(&function(s)?, limit, &sieve)?))
                .transpose()
        };
        sweep.u = table(&args.u)?;
        sweep.v = table(&args.v)?;
    }
    verify::run(&sweep, &sieve).map_err(|e| match e {
        Error::MissingArgument(msg) => Failure::Usage(msg),
        e => e.into(),
    })
}
