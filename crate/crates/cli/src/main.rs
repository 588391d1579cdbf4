use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use corekit::genfun::{cd_series_closed, cd_series_eq2, cd_series_oracle};
use corekit::tt1::render_decimal;
use corekit::verify::{self, Suite};
use corekit::{
    average_size, count_tt1_distinct, enumerate_simultaneous_cores, largest_size, maximizer_count,
    maximizers, sequence_table, total_size, Error,
};

mod output;

use output::{EnumerateOutput, PartitionRecord, StatsOutput, VerifyOutput};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Exact enumeration and cross-checks for core partitions with distinct parts.
#[derive(Debug, Parser)]
#[command(name = "corekit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Coefficients cd_t(0..=limit) of the distinct-part t-core series.
    Series {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        limit: usize,
        #[arg(long, value_enum, default_value_t = Method::Eq2)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List every (t1, t2)-core partition.
    Enumerate {
        #[arg(long)]
        t1: u64,
        #[arg(long)]
        t2: u64,
        /// Only partitions with distinct parts.
        #[arg(long)]
        distinct: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Count, largest size, maximizers and average size of distinct-part (t, t+1)-cores.
    Stats {
        #[arg(long)]
        t: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also print the average as a decimal with this many digits.
        #[arg(long)]
        precision: Option<usize>,
    },
    /// The a, b, c, d, e, phi, psi, F sequence table for t = 2..=t-max.
    Table {
        #[arg(long = "t-max")]
        t_max: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Run a cross-verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long = "t-max", default_value_t = 8)]
        t_max: u64,
        #[arg(long = "n-max", default_value_t = 30)]
        n_max: u64,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Eq2,
    Closed,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse::<Suite>()
        .map_err(|e| format!("{e}; expected one of {}", Suite::NAMES.join(", ")))
}

enum Failure {
    Usage(Error),
    Verification,
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli.command, &mut out).and_then(|()| out.flush().map_err(Failure::from)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Verification) => ExitCode::from(EXIT_VERIFY_FAILED),
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<(), Failure> {
    match command {
        Command::Series {
            t,
            limit,
            method,
            format,
        } => {
            let series = match method {
                Method::Eq2 => cd_series_eq2(t, limit)?,
                Method::Closed => cd_series_closed(t, limit)?,
                Method::Oracle => cd_series_oracle(t, limit)?,
            };
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&series)?)?,
                Format::Text => out.write_all(series.to_text().as_bytes())?,
            }
        }
        Command::Enumerate {
            t1,
            t2,
            distinct,
            format,
        } => {
            let cores = enumerate_simultaneous_cores(t1, t2, distinct)?;
            let listing = EnumerateOutput {
                t1,
                t2,
                distinct,
                count: cores.len(),
                partitions: cores.iter().map(PartitionRecord::from).collect(),
            };
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&listing)?)?,
                Format::Text => listing.write_text(out)?,
            }
        }
        Command::Stats {
            t,
            format,
            precision,
        } => {
            let average = average_size(t)?;
            let stats = StatsOutput {
                t,
                count: count_tt1_distinct(t)?,
                largest_size: largest_size(t)?,
                maximizer_count: maximizer_count(t)?,
                maximizers: maximizers(t)?.iter().map(PartitionRecord::from).collect(),
                total_size: total_size(t)?,
                average: average.to_string(),
                average_decimal: precision.map(|digits| render_decimal(&average, digits)),
            };
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&stats)?)?,
                Format::Text => stats.write_text(out)?,
            }
        }
        Command::Table { t_max, format } => {
            let table = sequence_table(t_max)?;
            match format {
                TableFormat::Csv => table
                    .write_csv(&mut *out)
                    .map_err(|e| Failure::Io(io::Error::other(e)))?,
                TableFormat::Json => writeln!(out, "{}", serde_json::to_string(&table)?)?,
            }
        }
        Command::Verify {
            suite,
            t_max,
            n_max,
            jobs,
            format,
        } => {
            let checks = verify::checks_for(suite, t_max, n_max)?;
            let jobs = jobs
                .filter(|&j| j > 0)
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            eprintln!("running {} checks on {jobs} threads", checks.len());
            let reports = verify::run_checks(checks, jobs, |r| {
                eprintln!("  {} {} ({} ms)", r.status, r.check_name, r.elapsed_ms);
            });
            let passed = reports.iter().all(|r| r.passed());
            let result = VerifyOutput {
                suite: suite.to_string(),
                t_max,
                n_max,
                passed,
                reports,
            };
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&result)?)?,
                Format::Text => result.write_text(out)?,
            }
            if !passed {
                out.flush()?;
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}
