use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use seqkernel::crosscheck::{self, Fault, Scope};
use seqkernel_cli::{
    bench, compare, compute, init_threads, parse_bfile, render, CliError, Format, Sequence, SequenceRequest,
    EXIT_MISMATCH, EXIT_OK, EXIT_USAGE,
};

#[derive(Parser)]
#[command(name = "seqkernel", version, about = "Exact partition, Bernoulli, Euler and Stirling sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a range of a sequence.
    Seq {
        /// partition, partition_distinct, partition_restricted, bernoulli,
        /// euler, stirling1, stirling2, higher_bernoulli or slice
        name: String,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        /// Route to use; each sequence has its own default.
        #[arg(long)]
        method: Option<String>,
        /// Sequence parameter as key=value, e.g. D=2, k=3, order=4,
        /// modulus=25 residue=24.
        #[arg(long = "param", value_parser = parse_kv)]
        params: Vec<(String, String)>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// Compare against a local b-file; exits with status 2 on any
        /// difference.
        #[arg(long)]
        compare: Option<PathBuf>,
    },
    /// Run the agreement checks between all routes.
    Crosscheck {
        /// Larger index ranges, including p(199) via the 25k+24 slice.
        #[arg(long)]
        full: bool,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
    /// Time each partition route and emit CSV.
    Bench {
        #[arg(long, value_enum)]
        seq: BenchSeq,
        #[arg(long)]
        nmax: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    Pentagonal,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchSeq {
    Partition,
}

fn parse_kv(s: &str) -> Result<(String, String), String> {
    s.split_once('=')
        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
        .ok_or_else(|| format!("expected key=value, got `{s}`"))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("seqkernel: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    init_threads()?;
    let mut stdout = std::io::stdout().lock();
    match cli.command {
        Command::Seq { name, from, to, method, params, format, compare: reference } => {
            let seq: Sequence = name.parse()?;
            let req = SequenceRequest::new(seq, from, to, method.as_deref(), &params)?;
            let reference = match reference {
                Some(path) => Some(parse_bfile(&std::fs::read_to_string(path)?)?),
                None => None,
            };
            let records = compute(&req)?;
            stdout.write_all(render(&req, &records, format).as_bytes())?;
            if let Some(reference) = reference {
                let diffs = compare(&records, &reference);
                if !diffs.is_empty() {
                    for d in &diffs {
                        eprintln!("mismatch: {d}");
                    }
                    return Ok(EXIT_MISMATCH);
                }
            }
            Ok(EXIT_OK)
        }
        Command::Crosscheck { full, inject_fault } => {
            let scope = if full { Scope::Full } else { Scope::Quick };
            let fault = match inject_fault {
                Some(FaultArg::Pentagonal) => Fault::PentagonalCoefficient,
                None => Fault::None,
            };
            let report = crosscheck::run(scope, fault);
            write!(stdout, "{report}")?;
            Ok(if report.all_pass() { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Bench { seq: BenchSeq::Partition, nmax } => {
            stdout.write_all(bench::bench_partition(nmax)?.as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}
