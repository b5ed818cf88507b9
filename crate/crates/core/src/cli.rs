//! The `revsynth` command-line front end.
//!
//! Results go to standard output, diagnostics to standard error. Exit status
//! is 0 on success, 1 when a requested check comes out negative, and 2 on
//! errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{
    census, check_induction_inequality, lower_bound_toffoli, CensusMode, DEFAULT_SAMPLES,
};
use crate::boolfn::{parse_tt, serialize_tt, Permutation, MAX_VARS};
use crate::circuit::{map_to_toffoli, parse_circuit, serialize_circuit, Circuit, MappingMethod};
use crate::embedding::{
    embed_decode, embed_encode, halfv_count_log2, halfv_enumerate, halfv_recognize, parse_halfv,
    serialize_halfv,
};
use crate::error::Error;
use crate::synthesis::{default_order, synth_young};

#[derive(Debug, Parser)]
#[command(name = "revsynth", version, about = "Reversible circuit synthesis and complexity tools")]
pub struct Cli {
    /// Worker threads for parallel phases (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Positive-polarity Reed-Muller (MCT gates only).
    Pprm,
    /// Greedy ESOP (mixed-polarity gates).
    Esop,
}

impl From<Method> for MappingMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Pprm => MappingMethod::Pprm,
            Method::Esop => MappingMethod::EsopGreedy,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Synthesize a reversible `.tt` function into single-target gates.
    Synth {
        input: PathBuf,
        /// Variable order, e.g. `1,2,3` (default: 1..n).
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
        /// Also map every gate to a Toffoli cascade.
        #[arg(long, value_enum)]
        to_toffoli: Option<Method>,
        /// Output `.rc` path (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check two `.rc`/`.tt` files for extensional equality.
    Verify { a: PathBuf, b: PathBuf },
    /// Map the single-target gates of a `.rc` circuit to Toffoli cascades.
    Map {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Pprm)]
        method: Method,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a circuit on a binary input string (x1 first).
    Sim { circuit: PathBuf, input: String },
    /// Print the Toffoli lower bound and the induction inequality status.
    ///
    /// CSV columns: n,lower_bound,exact,induction.
    Bounds {
        #[arg(long, default_value_t = 16)]
        n_max: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Cost distributions of synthesized circuits.
    ///
    /// CSV columns: metric,value,count. Metrics: stg_count, max_pprm_terms,
    /// max_esop_terms, toffoli_count_pprm, toffoli_count_esop.
    Census(CensusArgs),
    /// Half-V circuits and the line-optimal embedding.
    #[command(subcommand)]
    Halfv(HalfvCommand),
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long)]
    pub n: usize,
    /// Every reversible function (n <= 3).
    #[arg(long, conflicts_with = "samples")]
    pub exhaustive: bool,
    /// Number of random functions.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum HalfvCommand {
    /// Test whether a reversible `.tt` function is a half-V circuit.
    Check {
        input: PathBuf,
        /// Gate count (default: the line count).
        #[arg(long)]
        gates: Option<usize>,
    },
    /// Embed a `.tt` function of k-1 inputs into a half-V circuit.
    Encode {
        input: PathBuf,
        /// Line count (default: inputs + 1).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recover the embedded `.tt` function from a half-V `.rc` file.
    Decode {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count distinct functions of half-V circuits and compare with the formula.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = std::result::Result<T, CliError>;

/// What a command produced: text for standard output, an optional note for
/// standard error, and whether the check it performed passed.
struct Outcome {
    stdout: String,
    stderr: String,
    success: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: String::new(), success: true }
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.into(), source })
}

fn with_path(path: &Path, e: Error) -> CliError {
    CliError::Usage(format!("{}: {e}", path.display()))
}

fn is_circuit_file(path: &Path, text: &str) -> bool {
    match path.extension().and_then(|e| e.to_str()) {
        Some("rc") => true,
        Some("tt") => false,
        _ => text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .find(|l| !l.is_empty())
            .is_some_and(|l| l.starts_with(".lines")),
    }
}

fn load_circuit(path: &Path) -> CliResult<Circuit> {
    parse_circuit(&read(path)?).map_err(|e| with_path(path, e))
}

fn load_permutation(path: &Path) -> CliResult<Permutation> {
    let text = read(path)?;
    if is_circuit_file(path, &text) {
        return Ok(parse_circuit(&text).map_err(|e| with_path(path, e))?.perm());
    }
    let tt = parse_tt(&text).map_err(|e| with_path(path, e))?;
    Permutation::from_truth_table(&tt).map_err(|e| match e {
        Error::NotReversible => CliError::Usage(format!("{}: not reversible", path.display())),
        other => with_path(path, other),
    })
}

fn bits(width: usize, value: u32) -> String {
    (0..width).rev().map(|j| if (value >> j) & 1 == 1 { '1' } else { '0' }).collect()
}

/// Writes `text` to `out` when given; otherwise returns it for stdout.
fn emit(out: Option<&Path>, text: String) -> CliResult<String> {
    match out {
        Some(path) => {
            write(path, &text)?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn cmd_synth(
    input: &Path,
    order: Option<Vec<usize>>,
    to_toffoli: Option<Method>,
    out: Option<&Path>,
) -> CliResult<Outcome> {
    let f = load_permutation(input)?;
    let order = order.unwrap_or_else(|| default_order(f.n()));
    let stg = synth_young(&f, &order)?;
    let mut report = format!("single-target: {} gates\n", stg.gate_count());
    let circuit = match to_toffoli {
        Some(method) => {
            let mapped = map_to_toffoli(&stg, method.into())?;
            let _ = writeln!(report, "toffoli: {} gates", mapped.gate_count());
            mapped
        }
        None => stg,
    };
    let text = serialize_circuit(&circuit);
    Ok(match out {
        Some(path) => {
            write(path, &text)?;
            Outcome::ok(report)
        }
        None => Outcome { stdout: text, stderr: report, success: true },
    })
}

fn cmd_verify(a: &Path, b: &Path) -> CliResult<Outcome> {
    let pa = load_permutation(a)?;
    let pb = load_permutation(b)?;
    let n = pa.n();
    Ok(match pa.first_difference(&pb)? {
        None => Outcome::ok("equal\n".into()),
        Some(x) => Outcome {
            stdout: format!(
                "not equal: input {} -> {} vs {}\n",
                bits(n, x),
                bits(n, pa.apply(x)),
                bits(n, pb.apply(x))
            ),
            stderr: String::new(),
            success: false,
        },
    })
}

fn cmd_map(input: &Path, method: Method, out: Option<&Path>) -> CliResult<Outcome> {
    let c = load_circuit(input)?;
    let mapped = map_to_toffoli(&c, method.into())?;
    let text = emit(out, serialize_circuit(&mapped))?;
    let note = format!("toffoli: {} gates\n", mapped.gate_count());
    Ok(if out.is_some() {
        Outcome::ok(note)
    } else {
        Outcome { stdout: text, stderr: note, success: true }
    })
}

fn cmd_sim(path: &Path, input: &str) -> CliResult<Outcome> {
    let c = load_circuit(path)?;
    if input.len() != c.lines() || !input.bytes().all(|b| b == b'0' || b == b'1') {
        return Err(CliError::Usage(format!(
            "input must be a {}-character string of 0/1",
            c.lines()
        )));
    }
    let state = u32::from_str_radix(input, 2).expect("validated binary string");
    Ok(Outcome::ok(format!("{}\n", bits(c.lines(), c.simulate(state)))))
}

fn cmd_bounds(n_max: usize, csv: Option<&Path>) -> CliResult<Outcome> {
    if !(2..=MAX_VARS).contains(&n_max) {
        return Err(CliError::Usage(format!("--n-max must be in 2..={MAX_VARS}")));
    }
    let mut text = format!("{:>3} {:>12} {:>9} {:>10}\n", "n", "lower_bound", "method", "induction");
    let mut table = String::from("n,lower_bound,exact,induction\n");
    let mut all_ok = true;
    for n in 2..=n_max {
        let report = lower_bound_toffoli(n)?;
        let holds = check_induction_inequality(n)?;
        all_ok &= holds;
        let method = if report.exact { "exact" } else { "interval" };
        let status = if holds { "ok" } else { "FAIL" };
        let _ = writeln!(text, "{n:>3} {:>12} {method:>9} {status:>10}", report.lower_bound);
        let _ = writeln!(table, "{n},{},{},{status}", report.lower_bound, report.exact);
    }
    if let Some(path) = csv {
        write(path, &table)?;
    }
    Ok(Outcome { stdout: text, stderr: String::new(), success: all_ok })
}

fn cmd_census(args: &CensusArgs) -> CliResult<Outcome> {
    let mode = if args.exhaustive {
        CensusMode::Exhaustive
    } else {
        CensusMode::Sampled { samples: args.samples.unwrap_or(DEFAULT_SAMPLES), seed: args.seed }
    };
    let result = census(args.n, mode)?;
    if let Some(path) = &args.csv {
        write(path, &result.to_csv())?;
    }
    Ok(Outcome::ok(result.to_text()))
}

fn cmd_halfv(cmd: &HalfvCommand) -> CliResult<Outcome> {
    match cmd {
        HalfvCommand::Check { input, gates } => {
            let p = load_permutation(input)?;
            let n = gates.unwrap_or(p.n());
            match halfv_recognize(&p, n) {
                Ok(h) => Ok(Outcome::ok(format!(
                    "realizable (n={} k={})\n{}",
                    h.n(),
                    h.k(),
                    serialize_halfv(&h)
                ))),
                Err(Error::NotRealizable { gate, witness }) => Ok(Outcome {
                    stdout: format!(
                        "not realizable (gate {gate}, witness {} {})\n",
                        bits(p.n(), witness.0),
                        bits(p.n(), witness.1)
                    ),
                    stderr: String::new(),
                    success: false,
                }),
                Err(e) => Err(e.into()),
            }
        }
        HalfvCommand::Encode { input, k, out } => {
            let f = parse_tt(&read(input)?).map_err(|e| with_path(input, e))?;
            let k = k.unwrap_or(f.n_inputs() + 1);
            let h = embed_encode(&f, k)?;
            Ok(Outcome::ok(emit(out.as_deref(), serialize_halfv(&h))?))
        }
        HalfvCommand::Decode { input, out } => {
            let h = parse_halfv(&read(input)?).map_err(|e| with_path(input, e))?;
            Ok(Outcome::ok(emit(out.as_deref(), serialize_tt(&embed_decode(&h)))?))
        }
        HalfvCommand::Enumerate { n, k } => {
            let count = halfv_enumerate(*n, *k)?;
            let expected = 1u64 << halfv_count_log2(*n, *k);
            let ok = count == expected;
            Ok(Outcome {
                stdout: format!("{count} = {expected} {}\n", if ok { "ok" } else { "MISMATCH" }),
                stderr: String::new(),
                success: ok,
            })
        }
    }
}

fn dispatch(cli: &Cli) -> CliResult<Outcome> {
    match &cli.command {
        Command::Synth { input, order, to_toffoli, out } => {
            cmd_synth(input, order.clone(), *to_toffoli, out.as_deref())
        }
        Command::Verify { a, b } => cmd_verify(a, b),
        Command::Map { input, method, out } => cmd_map(input, *method, out.as_deref()),
        Command::Sim { circuit, input } => cmd_sim(circuit, input),
        Command::Bounds { n_max, csv } => cmd_bounds(*n_max, csv.as_deref()),
        Command::Census(args) => cmd_census(args),
        Command::Halfv(cmd) => cmd_halfv(cmd),
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(rendered.as_bytes()) } else { stderr.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let result = match cli.threads {
        Some(0) => Err(CliError::Usage("--threads must be at least 1".into())),
        Some(threads) => match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(CliError::Usage(format!("cannot start thread pool: {e}"))),
        },
        None => dispatch(&cli),
    };
    match result {
        Ok(outcome) => {
            let _ = stdout.write_all(outcome.stdout.as_bytes());
            let _ = stderr.write_all(outcome.stderr.as_bytes());
            if outcome.success {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

pub fn main() -> ExitCode {
    let code = run(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr());
    ExitCode::from(code)
}
