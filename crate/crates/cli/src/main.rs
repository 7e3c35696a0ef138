use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use twistvol::check::{all_passed, run_checks};
use twistvol::field::DEFAULT_PRECISION;
use twistvol::{
    parse_reference, twisted_alexander, volume_table, Column, Error, Job, TwistConfig, VolumeConfig,
};

/// Twisted Alexander invariants under symmetric powers of an SL(2)
/// representation, and the volume estimates built from them.
#[derive(Parser, Debug)]
#[command(name = "twistvol", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariant values at t = 1 and volume estimates over a range of n.
    Compute {
        job: PathBuf,
        /// `<min>..<max>` or a single dimension.
        #[arg(long, default_value = "4..15", value_parser = parse_range)]
        n: (usize, usize),
        /// Embedding precision in bits.
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// `auto` or a generator letter.
        #[arg(long, default_value = "auto")]
        column: String,
        /// Reference volume; overrides the job file.
        #[arg(long)]
        reference: Option<String>,
        /// Use the trivial representation at n = 1.
        #[arg(long)]
        trivial_rep: bool,
        /// Append a least-squares fit of v_n = V - c log(n)/n.
        #[arg(long)]
        experimental_fit: bool,
    },
    /// Unit-normalized invariant for one n.
    Invariant {
        job: PathBuf,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value = "auto")]
        column: String,
        /// Use the trivial representation at n = 1.
        #[arg(long)]
        trivial_rep: bool,
    },
    /// Run the self-checks on a job.
    Check { job: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a, b),
        None => (s, s),
    };
    let lo: usize = lo
        .trim()
        .parse()
        .map_err(|_| format!("bad lower bound in `{s}`"))?;
    let hi: usize = hi
        .trim()
        .parse()
        .map_err(|_| format!("bad upper bound in `{s}`"))?;
    if lo == 0 || hi < lo {
        return Err(format!("range `{s}` must satisfy 1 <= min <= max"));
    }
    Ok((lo, hi))
}

/// Error tagged with the pipeline stage that produced it.
struct Failure {
    stage: &'static str,
    error: anyhow::Error,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            stage: e.stage(),
            error: e.into(),
        }
    }
}

fn parse_failure(error: anyhow::Error) -> Failure {
    Failure {
        stage: "parse",
        error,
    }
}

fn load(path: &Path, validate: bool) -> Result<Job, Failure> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read job file {}", path.display()))
        .map_err(parse_failure)?;
    let job = Job::parse_unchecked(&text)?;
    if validate {
        job.validate()?;
    }
    Ok(job)
}

fn resolve_column(job: &Job, column: &str) -> Result<Column, Failure> {
    if column == "auto" {
        return Ok(Column::Auto);
    }
    let mut chars = column.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => job
            .presentation
            .generator_index(c)
            .map(Column::Generator)
            .ok_or_else(|| Error::UnknownGenerator(c.to_string()).into()),
        _ => Err(parse_failure(anyhow::anyhow!(
            "--column expects `auto` or a generator letter"
        ))),
    }
}

fn compute(
    job: &Job,
    (n_min, n_max): (usize, usize),
    precision: usize,
    format: Format,
    column: Column,
    reference: Option<&str>,
    fit: bool,
) -> Result<String, Failure> {
    let reference = reference
        .or(job.reference.as_deref())
        .map(|r| parse_reference(r, precision))
        .transpose()?;
    let cfg = VolumeConfig {
        presentation: &job.presentation,
        rep: &job.rep,
        column,
        precision,
        reference,
    };
    let report = volume_table(&cfg, n_min, n_max)?;
    let mut out = match format {
        Format::Table => report.to_table(),
        Format::Csv => report.to_csv(),
    };
    if fit {
        let prefix = if format == Format::Csv { "# " } else { "" };
        match report.experimental_fit() {
            Some((v, c)) => writeln!(
                out,
                "{prefix}EXPERIMENTAL fit v_n = V - c*log(n)/n: V = {v:.6}, c = {c:.6}"
            ),
            None => writeln!(
                out,
                "{prefix}EXPERIMENTAL fit needs at least two rows with n >= 4"
            ),
        }
        .expect("writing to a string");
    }
    Ok(out)
}

fn invariant(job: &Job, n: usize, column: Column) -> Result<String, Failure> {
    let d =
        twisted_alexander(&TwistConfig::new(&job.presentation, &job.rep, n).with_column(column))?;
    let mut out = String::new();
    let names = job.presentation.generators();
    writeln!(out, "n: {n}").unwrap();
    writeln!(out, "column: {}", names[d.column]).unwrap();
    writeln!(out, "invariant: {}", d.value.to_term_string()).unwrap();
    writeln!(out, "pretty: {}", d.value.pretty()).unwrap();
    writeln!(out, "unit: {}", d.unit).unwrap();
    if !d.value.is_zero() {
        writeln!(out, "order at t = 1: {}", d.order_at_one()).unwrap();
    }
    match d.value_at_one() {
        Ok(v) => writeln!(out, "value at t = 1: {v}").unwrap(),
        Err(Error::DenominatorVanishes { .. }) if n == 1 => {
            writeln!(out, "value at t = 1: undefined (denominator vanishes)").unwrap()
        }
        Err(e) => return Err(e.into()),
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<(String, bool), Failure> {
    match cli.command {
        Command::Compute {
            job,
            n,
            precision,
            format,
            column,
            reference,
            trivial_rep,
            experimental_fit,
        } => {
            let mut job = load(&job, true)?;
            let mut n = n;
            if trivial_rep {
                job = job.with_trivial_rep();
                n = (1, 1);
            }
            let column = resolve_column(&job, &column)?;
            let out = compute(
                &job,
                n,
                precision,
                format,
                column,
                reference.as_deref(),
                experimental_fit,
            )?;
            Ok((out, true))
        }
        Command::Invariant {
            job,
            n,
            column,
            trivial_rep,
        } => {
            if n == 0 {
                return Err(parse_failure(anyhow::anyhow!("--n must be at least 1")));
            }
            let mut job = load(&job, true)?;
            let mut n = n;
            if trivial_rep {
                job = job.with_trivial_rep();
                n = 1;
            }
            let column = resolve_column(&job, &column)?;
            Ok((invariant(&job, n, column)?, true))
        }
        Command::Check { job } => {
            let job = load(&job, false)?;
            let results = run_checks(&job);
            let mut out = String::new();
            for r in &results {
                writeln!(out, "{r}").unwrap();
            }
            let ok = all_passed(&results);
            writeln!(
                out,
                "{}",
                if ok {
                    "all checks passed"
                } else {
                    "some checks failed"
                }
            )
            .unwrap();
            Ok((out, ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(f) => {
            eprintln!("twistvol: {} failed: {:#}", f.stage, f.error);
            ExitCode::FAILURE
        }
    }
}
