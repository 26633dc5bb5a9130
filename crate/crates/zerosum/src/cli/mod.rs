//! Command-line surface: instance generation, pipeline runs, witness
//! verification, stress suites, and the lower-bound construction.
//!
//! Exit codes are a stable contract: 0 success, 1 parse/usage error,
//! 2 pipeline failure, 3 verification failure, 4 invariant violation.

pub mod format;
pub mod stress;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::cycle::{bf_zero_sum_cycle, find_zero_sum_cycle, lower_bound_witness, verify_cycle};
use crate::gf::{FieldSpec, GroupVector};
use crate::instances::random_digraph;
use crate::matching::Mode;
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PIPELINE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;

pub const EXPERIMENT_HEADER: &str = "seed,p,d,n,m_used,u_size,cycle_length,verified,wall_time_ms";

#[derive(Parser)]
#[command(
    name = "zerosum",
    about = "Zero-sum directed cycles in labelled complete digraphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Heuristic,
}

impl From<ModeArg> for Mode {
    fn from(value: ModeArg) -> Mode {
        match value {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Heuristic => Mode::Heuristic,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Haxell,
    Lemma31,
    Lemma32,
    Lemma33,
    Fprobe,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random instance with uniform i.i.d. arc labels.
    Gen {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Find a verified zero-sum cycle in an instance file.
    Find {
        /// Instance file path.
        instance: PathBuf,
        /// Witness output path.
        #[arg(long)]
        out: PathBuf,
        /// Fixed number of basis matchings (disables the escalation schedule).
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum, default_value = "heuristic")]
        mode: ModeArg,
        /// Bookkeeping seed echoed into the experiment row.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check a witness file against an instance.
    Verify {
        instance: PathBuf,
        witness: PathBuf,
    },
    /// Run a property stress suite over seeded random instances.
    Stress {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// CSV output path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Prime modulus for the generated instances.
        #[arg(long, default_value_t = 2)]
        p: u64,
        /// Maximum dimension (or color count for the haxell suite).
        #[arg(long, default_value_t = 3)]
        d: usize,
    },
    /// Write the block construction on (p-1)d vertices with no zero-sum cycle.
    LowerBound {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Parses the process arguments and runs; returns the exit code.
pub fn run() -> i32 {
    match Cli::try_parse() {
        Ok(cli) => dispatch(cli.command),
        Err(err) => match err.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                print!("{err}");
                EXIT_OK
            }
            _ => {
                eprint!("{err}");
                EXIT_USAGE
            }
        },
    }
}

/// Runs with explicit arguments (no binary name); used by tests.
pub fn run_with_args<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("zerosum"))
        .chain(args.into_iter().map(Into::into));
    match Cli::try_parse_from(argv) {
        Ok(cli) => dispatch(cli.command),
        Err(err) => match err.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                print!("{err}");
                EXIT_OK
            }
            _ => {
                eprint!("{err}");
                EXIT_USAGE
            }
        },
    }
}

fn dispatch(command: Command) -> i32 {
    let outcome = match command {
        Command::Gen { p, d, n, seed, out } => cmd_gen(p, d, n, seed, &out),
        Command::Find {
            instance,
            out,
            m,
            mode,
            seed,
        } => cmd_find(&instance, &out, m, mode.into(), seed),
        Command::Verify { instance, witness } => cmd_verify(&instance, &witness),
        Command::Stress {
            suite,
            trials,
            seed,
            out,
            p,
            d,
        } => cmd_stress(suite, trials, seed, out.as_deref(), p, d),
        Command::LowerBound { p, d, out } => cmd_lower_bound(p, d, &out),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Parse { .. }
        | Error::Malformed(_)
        | Error::Io(_)
        | Error::NotPrime(_)
        | Error::ZeroDimension
        | Error::BadCoordinates { .. }
        | Error::EmptyInput(_) => EXIT_USAGE,
        _ => EXIT_PIPELINE,
    }
}

/// Writes a seeded uniform-random instance; identical arguments produce
/// byte-identical files.
pub fn cmd_gen(p: u64, d: usize, n: usize, seed: u64, out: &Path) -> Result<i32> {
    let spec = FieldSpec::new(p, d)?;
    if n < 2 {
        return Err(Error::Malformed(format!("n must be at least 2, got {n}")));
    }
    let dg = random_digraph(spec, n, seed)?;
    std::fs::write(out, format::render_instance(&dg))?;
    Ok(EXIT_OK)
}

/// Runs the pipeline on an instance, writes the witness, and prints one
/// experiment row on stdout.
pub fn cmd_find(
    instance: &Path,
    out: &Path,
    m: Option<usize>,
    mode: Mode,
    seed: u64,
) -> Result<i32> {
    let text = std::fs::read_to_string(instance)?;
    let dg = format::parse_instance(&text)?;
    let start = Instant::now();
    let outcome = find_zero_sum_cycle(&dg, m, mode)?;
    let wall_ms = start.elapsed().as_millis();
    let verified = verify_cycle(&dg, outcome.witness.vertices())?;
    if !verified {
        return Err(Error::Internal("pipeline witness failed verification".into()));
    }
    std::fs::write(
        out,
        format::render_witness(outcome.witness.vertices(), outcome.witness.sum()),
    )?;
    let spec = dg.spec();
    println!("{EXPERIMENT_HEADER}");
    println!(
        "{seed},{},{},{},{},{},{},1,{wall_ms}",
        spec.modulus(),
        spec.dimension(),
        dg.vertex_count(),
        outcome.m_used,
        outcome.deleted.len(),
        outcome.witness.len()
    );
    Ok(EXIT_OK)
}

/// Recomputes the cycle sum of a witness against its instance.
pub fn cmd_verify(instance: &Path, witness: &Path) -> Result<i32> {
    let dg = format::parse_instance(&std::fs::read_to_string(instance)?)?;
    let (vertices, claimed) = format::parse_witness(&std::fs::read_to_string(witness)?)?;
    if claimed.len() != dg.spec().dimension() {
        return Err(Error::Malformed(format!(
            "sum line has {} residues, instance dimension is {}",
            claimed.len(),
            dg.spec().dimension()
        )));
    }
    let claimed_vec = GroupVector::new(dg.spec(), claimed)?;
    // Malformed sequences (repeats, out of range, too short) error out here.
    let zero = verify_cycle(&dg, &vertices)?;
    if !zero {
        eprintln!("verification failed: cycle sum is nonzero");
        return Ok(EXIT_VERIFY);
    }
    if !claimed_vec.is_zero() {
        eprintln!("verification failed: witness claims a nonzero sum");
        return Ok(EXIT_VERIFY);
    }
    Ok(EXIT_OK)
}

fn cmd_stress(
    suite: SuiteArg,
    trials: usize,
    seed: u64,
    out: Option<&Path>,
    p: u64,
    d: usize,
) -> Result<i32> {
    let report = match suite {
        SuiteArg::Haxell => stress::suite_haxell(trials, seed, d)?,
        SuiteArg::Lemma31 => stress::suite_lemma31(trials, seed, p, d)?,
        SuiteArg::Lemma32 => stress::suite_lemma32(trials, seed, p, d)?,
        SuiteArg::Lemma33 => stress::suite_lemma33(trials, seed, p, d)?,
        SuiteArg::Fprobe => stress::suite_fprobe(p, d, trials, seed)?,
    };
    let mut csv = String::with_capacity(report.rows.len() * 32);
    csv.push_str(&report.header);
    csv.push('\n');
    for row in &report.rows {
        csv.push_str(row);
        csv.push('\n');
    }
    match out {
        Some(path) => std::fs::write(path, csv)?,
        None => {
            if report.stdout_note.is_none() {
                print!("{csv}");
            }
        }
    }
    if let Some(note) = &report.stdout_note {
        println!("{note}");
    }
    if report.violations > 0 {
        let suite_name = match suite {
            SuiteArg::Haxell => "haxell",
            SuiteArg::Lemma31 => "lemma31",
            SuiteArg::Lemma32 => "lemma32",
            SuiteArg::Lemma33 => "lemma33",
            SuiteArg::Fprobe => "fprobe",
        };
        let dump_path = match out {
            Some(path) => path.with_file_name(format!("violation_{suite_name}.txt")),
            None => PathBuf::from(format!("violation_{suite_name}.txt")),
        };
        if let Some(dump) = &report.dump {
            std::fs::write(&dump_path, dump)?;
            eprintln!(
                "{} violation(s); first offending instance written to {}",
                report.violations,
                dump_path.display()
            );
        }
        return Ok(EXIT_VIOLATION);
    }
    Ok(EXIT_OK)
}

/// Writes the lower-bound construction and, when small enough, confirms by
/// exhaustive enumeration that it has no zero-sum cycle.
pub fn cmd_lower_bound(p: u64, d: usize, out: &Path) -> Result<i32> {
    let spec = FieldSpec::new(p, d)?;
    let n = (p as usize - 1) * d;
    if n < 2 {
        return Err(Error::Malformed(format!(
            "(p-1)d = {n} is degenerate; need at least 2 vertices"
        )));
    }
    let dg = lower_bound_witness(spec)?;
    std::fs::write(out, format::render_instance(&dg))?;
    if n <= 6 {
        if bf_zero_sum_cycle(&dg)?.is_some() {
            eprintln!("invariant violation: the block construction contains a zero-sum cycle");
            return Ok(EXIT_VIOLATION);
        }
        eprintln!("exhaustively confirmed: no zero-sum cycle on {n} vertices");
    }
    Ok(EXIT_OK)
}
