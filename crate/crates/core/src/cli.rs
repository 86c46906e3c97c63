//! Command-line front end.
//!
//! ```text
//! schubert-mult compute --perm 2143 --show rank-matrix,leadterms
//! schubert-mult table --n 5 --format csv --jobs 8
//! schubert-mult verify --n 6
//! ```
//!
//! Exit codes: 0 success, 1 verification mismatch or computation failure,
//! 2 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::combinatorics::Permutation;
use crate::error::Error;
use crate::pipeline::{self, group_by_multiplicity, MultiplicityRecord, RecordCache};
use crate::polyring::{TermOrder, TieBreak};

/// Environment variable that overrides the default cache location.
pub const CACHE_ENV: &str = "SCHUBERT_MULT_CACHE";

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "schubert-mult",
    version,
    about = "Multiplicity of Schubert varieties Y_w at the most singular point X_w0",
    after_help = "Record formats:\n  \
        text  one human-readable line per permutation (tables end with a by-multiplicity summary)\n  \
        json  one object per line: {\"n\":5,\"w\":\"14325\",\"length\":3,\"dimension\":7,\"multiplicity\":5,\"smooth\":false}\n  \
        csv   header n,w,length,dimension,multiplicity,smooth\n\n\
        Permutations are one-line words: digits (2143) for n <= 9, or comma separated (2,1,4,3).\n\
        The cache is a JSON-lines file of records (plus the tie-break used); it defaults to\n\
        $XDG_CACHE_HOME/schubert-mult/records.jsonl and can be moved with SCHUBERT_MULT_CACHE.\n\n\
        Exit codes: 0 ok, 1 verification mismatch or failure, 2 usage error."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Multiplicity of a single permutation, with optional intermediate objects.
    Compute(ComputeArgs),
    /// Multiplicities of every permutation of S_n.
    Table(TableArgs),
    /// Compute S_n and compare with the reference table (n = 5 or 6).
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    /// Permutation in one-line notation.
    #[arg(long)]
    pub perm: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Intermediate stages to print after the record.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub show: Vec<Stage>,
    #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
    pub order: OrderArg,
}

#[derive(Args, Debug)]
pub struct BatchArgs {
    /// Group size.
    #[arg(long)]
    pub n: usize,
    /// Worker threads (defaults to the available parallelism).
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Cache file.
    #[arg(long, env = CACHE_ENV)]
    pub cache: Option<PathBuf>,
    /// Ignore and do not write the cache.
    #[arg(long)]
    pub no_cache: bool,
    #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
    pub order: OrderArg,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[command(flatten)]
    pub batch: BatchArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub batch: BatchArgs,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Stage {
    RankMatrix,
    Generators,
    Gb,
    Leadterms,
    Hilbert,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Grevlex,
    Lex,
}

impl OrderArg {
    pub fn term_order(self) -> TermOrder {
        match self {
            OrderArg::Grevlex => TermOrder::new(TieBreak::Grevlex),
            OrderArg::Lex => TermOrder::new(TieBreak::Lex),
        }
    }
}

fn default_cache_path() -> Option<PathBuf> {
    let base = std::env::var_os("XDG_CACHE_HOME")
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))?;
    Some(base.join("schubert-mult").join("records.jsonl"))
}

/// Grouped summary: header, then `m | w1, w2, ...` by decreasing m.
pub fn summarize(records: &[MultiplicityRecord]) -> String {
    let mut out = String::from("Multiplicity | Permutations\n");
    for (m, words) in group_by_multiplicity(records) {
        out.push_str(&format!("{m} | {}\n", words.join(", ")));
    }
    out
}

pub fn format_records(records: &[MultiplicityRecord], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            for r in records {
                out.push_str(&format!("{r}\n"));
            }
        }
        Format::Json => {
            for r in records {
                out.push_str(&r.to_json());
                out.push('\n');
            }
        }
        Format::Csv => {
            out.push_str(MultiplicityRecord::CSV_HEADER);
            out.push('\n');
            for r in records {
                out.push_str(&r.to_csv());
                out.push('\n');
            }
        }
    }
    out
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
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Compute(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_MISMATCH
        }
    }
}

enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Compute(e.into())
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    match cli.command {
        Command::Compute(args) => compute(args, out),
        Command::Table(args) => {
            let records = batch(&args.batch)?;
            out.write_all(format_records(&records, args.format).as_bytes())?;
            if args.format == Format::Text {
                writeln!(out)?;
                out.write_all(summarize(&records).as_bytes())?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify(args) => {
            if pipeline::ExpectedTable::for_n(args.batch.n).is_none() {
                return Err(Failure::Usage(format!(
                    "no reference table for n={} (available: 5, 6)",
                    args.batch.n
                )));
            }
            let records = batch(&args.batch)?;
            let report = pipeline::verify(args.batch.n, &records)?;
            writeln!(out, "{report}")?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_MISMATCH })
        }
    }
}

fn compute(args: ComputeArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let w: Permutation = args.perm.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
    if w.n() > crate::polyring::MAX_N {
        return Err(Failure::Usage(Error::UnsupportedSize(w.n()).to_string()));
    }
    let ord = args.order.term_order();
    let (record, trace) = pipeline::multiplicity_with_trace(&w, &ord)?;
    match args.format {
        Format::Text => {
            writeln!(out, "w: {}", record.w)?;
            writeln!(out, "n: {}", record.n)?;
            writeln!(out, "length: {}", record.length)?;
            writeln!(out, "dimension: {}", record.dimension)?;
            writeln!(out, "multiplicity: {}", record.multiplicity)?;
            writeln!(out, "smooth: {}", record.pattern_smooth)?;
        }
        f => out.write_all(format_records(std::slice::from_ref(&record), f).as_bytes())?,
    }
    let ring = &trace.generators.ring;
    let mut stages = args.show.clone();
    stages.dedup();
    for stage in stages {
        match stage {
            Stage::RankMatrix => {
                writeln!(out, "# rank matrix")?;
                writeln!(out, "{}", trace.rank_matrix)?;
            }
            Stage::Generators => out.write_all(trace.generators.render().as_bytes())?,
            Stage::Gb => {
                writeln!(out, "# groebner basis elements={}", trace.basis.len())?;
                for g in trace.basis.basis() {
                    writeln!(out, "{}", ring.format(g))?;
                }
            }
            Stage::Leadterms => {
                writeln!(out, "# initial ideal")?;
                for m in trace.initial.render() {
                    writeln!(out, "{m}")?;
                }
                writeln!(out, "# initial ideal at t=1")?;
                for m in trace.eliminated.render() {
                    writeln!(out, "{m}")?;
                }
            }
            Stage::Hilbert => {
                writeln!(out, "# hilbert numerator")?;
                writeln!(out, "{}", trace.numerator)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn batch(args: &BatchArgs) -> Result<Vec<MultiplicityRecord>, Failure> {
    if args.n == 0 || args.n > crate::polyring::MAX_N {
        return Err(Failure::Usage(Error::UnsupportedSize(args.n).to_string()));
    }
    let jobs = match args.jobs {
        Some(0) => return Err(Failure::Usage("--jobs must be at least 1".into())),
        Some(j) => j,
        None => std::thread::available_parallelism().map_or(1, |p| p.get()),
    };
    let ord = args.order.term_order();
    let cache_path = if args.no_cache {
        None
    } else {
        args.cache.clone().or_else(default_cache_path)
    };
    Ok(match cache_path {
        Some(path) => {
            let mut cache = RecordCache::open(path)?;
            pipeline::table_cached(args.n, &ord, jobs, &mut cache)?
        }
        None => pipeline::table(args.n, &ord, jobs)?,
    })
}
