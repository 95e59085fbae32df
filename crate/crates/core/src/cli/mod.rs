//! Batch front-end behind the `clutterkit` binary.
//!
//! Every subcommand prints one JSON [`RunReport`] on stdout. Exit codes:
//! 0 the property holds, 1 refuted, 2 exhausted or inconclusive, 3 input error.

pub mod named;
pub mod report;

use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::chordality::{is_chordal, ChordalMode, ChordalVerdict};
use crate::decomposable::{is_decomposable, random_decomposable, DecompOptions, DecompVerdict};
use crate::ideals::{
    find_linear_quotients_order, is_matroidal, is_squarefree_lexsegment, is_squarefree_stable,
    is_squarefree_strongly_stable, OrderedIdeal,
};
use crate::quasiforest::{find_leaf_order, quasiforest_skeleton_clutter};
use crate::resolution::{betti_numbers, Field};
use crate::search::{Budget, Search, DEFAULT_BUDGET};
use crate::shelling::{
    find_shelling, is_extendably_shellable, is_shelling_order, simon_equivalence_check, ExtendableOptions,
    ExtendableVerdict, DEFAULT_EXTENDABLE_FACETS, SIMON_MAX_N,
};
use crate::{Error, SimplicialComplex, UniformClutter, VertexSet};

use named::ExampleName;
use report::{sha256_hex, write_certificate, Outcome, Run, RunReport};

pub const EXIT_INPUT_ERROR: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "clutterkit", version, about = "Decide chordality, decomposability, linear quotients and shellability")]
pub struct Cli {
    /// Node budget for each search.
    #[arg(long, global = true, env = "CLUTTERKIT_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Coefficient field for homology: Q or Fp.
    #[arg(long, global = true, default_value = "Q")]
    pub field: Field,
    #[arg(long, global = true, value_enum, default_value_t = Mode::Complete)]
    pub mode: Mode,
    /// Write certificates here instead of inlining them in the report.
    #[arg(long, global = true)]
    pub output_dir: Option<PathBuf>,
    /// Worker threads for the parallel Betti computation.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Greedy,
    Complete,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RecognizeKind {
    Stable,
    StronglyStable,
    Lex,
    Matroidal,
    Quasiforest,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Clutter JSON in; simplicial order out.
    CheckChordal { input: PathBuf },
    /// Clutter JSON in; decomposition certificate out.
    CheckDecomposable {
        input: PathBuf,
        /// Cap on circuits re-added along one chain of parent steps.
        #[arg(long)]
        max_readded: Option<usize>,
    },
    /// Ideal JSON in; checks the generators in the given order.
    CheckLinearQuotients { input: PathBuf },
    /// Ideal JSON in; searches for a linear-quotients order.
    FindLqOrder { input: PathBuf },
    /// Ideal JSON in; graded Betti table over --field.
    Betti {
        input: PathBuf,
        /// Take this power of the ideal first.
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    /// Complex JSON in; checks --order or searches for a shelling.
    CheckShelling {
        input: PathBuf,
        /// JSON list of facets, e.g. [[1,2],[2,3]].
        #[arg(long, conflicts_with = "find")]
        order: Option<PathBuf>,
        #[arg(long)]
        find: bool,
    },
    /// Complex JSON in; exhaustive extendable-shellability check.
    CheckExtendable {
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_EXTENDABLE_FACETS)]
        max_facets: usize,
    },
    /// Skeleton extendability versus residual chordality; all n <= 6 when --n is omitted.
    SimonVerify {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        d: Option<usize>,
    },
    /// Ideal JSON for the ideal classes, complex JSON for quasiforest.
    Recognize {
        kind: RecognizeKind,
        input: PathBuf,
        /// For quasiforest: also build the clutter of the pure d-skeleton.
        #[arg(long)]
        skeleton: Option<usize>,
    },
    /// Reruns a named worked example against the pinned regression table.
    PaperExample {
        #[arg(value_enum, ignore_case = true)]
        name: ExampleName,
    },
    /// Generates a decomposable clutter with its certificate.
    RandomDecomposable {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::CheckChordal { .. } => "check-chordal",
            Command::CheckDecomposable { .. } => "check-decomposable",
            Command::CheckLinearQuotients { .. } => "check-linear-quotients",
            Command::FindLqOrder { .. } => "find-lq-order",
            Command::Betti { .. } => "betti",
            Command::CheckShelling { .. } => "check-shelling",
            Command::CheckExtendable { .. } => "check-extendable",
            Command::SimonVerify { .. } => "simon-verify",
            Command::Recognize { .. } => "recognize",
            Command::PaperExample { .. } => "paper-example",
            Command::RandomDecomposable { .. } => "random-decomposable",
        }
    }
}

/// Failure before a verdict could be reached.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input: exit 3.
    Input(String),
    /// A size bound of the library was hit: exit 2.
    Bound(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT_ERROR,
            CliError::Bound(_) => Outcome::Inconclusive.exit_code(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::BoundExceeded(_) => CliError::Bound(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Bound(m) => write!(f, "bound exceeded: {m}"),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Raw input bytes; `-` reads standard input.
fn read_input(path: &Path) -> CliResult<Vec<u8>> {
    if path == Path::new("-") {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        return Ok(buf);
    }
    std::fs::read(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Parses JSON; serde_json's message carries the line and column.
fn parse<T: DeserializeOwned>(path: &Path, bytes: &[u8]) -> CliResult<T> {
    serde_json::from_slice(bytes).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report types serialize")
}

struct Context {
    budget: Budget,
    seed: u64,
    field: Field,
    mode: Mode,
}

/// Runs one parsed command. Returns the digest of everything it read and the run.
pub fn execute(cli: &Cli) -> CliResult<(String, Run)> {
    let ctx = Context {
        budget: Budget::nodes(cli.budget),
        seed: cli.seed,
        field: cli.field,
        mode: cli.mode,
    };
    let mut consumed: Vec<u8> = Vec::new();
    let mut load = |path: &Path| -> CliResult<Vec<u8>> {
        let bytes = read_input(path)?;
        consumed.extend_from_slice(&bytes);
        Ok(bytes)
    };
    let run = match &cli.command {
        Command::CheckChordal { input } => {
            let c: UniformClutter = parse(input, &load(input)?)?;
            check_chordal(&c, &ctx)
        }
        Command::CheckDecomposable { input, max_readded } => {
            let c: UniformClutter = parse(input, &load(input)?)?;
            check_decomposable(&c, *max_readded, &ctx)
        }
        Command::CheckLinearQuotients { input } => {
            let ideal: OrderedIdeal = parse(input, &load(input)?)?;
            let check = ideal.linear_quotients_check();
            Run::new(if check.holds { "linear-quotients" } else { "no-linear-quotients" }, Outcome::from_bool(check.holds), to_value(&check))
        }
        Command::FindLqOrder { input } => {
            let ideal: OrderedIdeal = parse(input, &load(input)?)?;
            find_lq_order(&ideal, &ctx)?
        }
        Command::Betti { input, power } => {
            let ideal: OrderedIdeal = parse(input, &load(input)?)?;
            betti(&ideal, *power, &ctx)?
        }
        Command::CheckShelling { input, order, find: _ } => {
            let complex: SimplicialComplex = parse(input, &load(input)?)?;
            let order = match order {
                Some(p) => Some(parse_order(p, &load(p)?, complex.n())?),
                None => None,
            };
            check_shelling(&complex, order, &ctx)?
        }
        Command::CheckExtendable { input, max_facets } => {
            let complex: SimplicialComplex = parse(input, &load(input)?)?;
            check_extendable(&complex, *max_facets, &ctx)?
        }
        Command::SimonVerify { n, d } => simon_verify(*n, *d, &ctx)?,
        Command::Recognize { kind, input, skeleton } => {
            let bytes = load(input)?;
            recognize(*kind, input, &bytes, *skeleton)?
        }
        Command::PaperExample { name } => named::run(*name, ctx.budget)?,
        Command::RandomDecomposable { n, d } => {
            let (c, cert) = random_decomposable(*n, *d, ctx.seed)?;
            Run::new("generated", Outcome::Computed, json!({"clutter": c})).with_certificate(to_value(&cert))
        }
    };
    if consumed.is_empty() {
        // No input file: the arguments are the input.
        consumed = format!("{:?}", cli.command).into_bytes();
    }
    Ok((sha256_hex(&consumed), run))
}

fn parse_order(path: &Path, bytes: &[u8], n: usize) -> CliResult<Vec<VertexSet>> {
    let lists: Vec<Vec<u32>> = parse(path, bytes)?;
    lists
        .into_iter()
        .map(|l| VertexSet::from_vertices(n, l).map_err(CliError::from))
        .collect()
}

fn check_chordal(c: &UniformClutter, ctx: &Context) -> Run {
    let mode = match ctx.mode {
        Mode::Greedy => ChordalMode::Greedy,
        Mode::Complete => ChordalMode::Complete,
    };
    let report = is_chordal(c, mode, ctx.budget);
    let stuck = c.simplicial_maximal_subcircuits();
    let run = match &report.verdict {
        ChordalVerdict::Chordal(order) => {
            Run::new("chordal", Outcome::Holds, json!({"order_length": order.len()})).with_certificate(to_value(order))
        }
        ChordalVerdict::NotChordal => Run::new(
            "not-chordal",
            Outcome::Refuted,
            json!({"simplicial_maximal_subcircuits": stuck}),
        ),
        ChordalVerdict::Inconclusive => Run::new("inconclusive", Outcome::Inconclusive, json!({"mode": "greedy"})),
        ChordalVerdict::Exhausted => Run::new("exhausted", Outcome::Inconclusive, json!({})),
    };
    run.with_stats(report.stats)
}

fn check_decomposable(c: &UniformClutter, max_readded: Option<usize>, ctx: &Context) -> Run {
    let report = is_decomposable(
        c,
        DecompOptions {
            budget: ctx.budget,
            max_readded,
        },
    );
    let run = match report.verdict {
        DecompVerdict::Decomposable(cert) => {
            Run::new("decomposable", Outcome::Holds, json!({"certificate_size": cert.size()}))
                .with_certificate(to_value(&cert))
        }
        // A refutation cut off by --max-readded proves nothing.
        DecompVerdict::Refuted(r) if !r.exact => Run::new("inconclusive", Outcome::Inconclusive, to_value(&r)),
        DecompVerdict::Refuted(r) => Run::new("refuted", Outcome::Refuted, to_value(&r)),
        DecompVerdict::Exhausted => Run::new("exhausted", Outcome::Inconclusive, json!({})),
    };
    run.with_stats(report.stats)
}

fn find_lq_order(ideal: &OrderedIdeal, ctx: &Context) -> CliResult<Run> {
    let res = find_linear_quotients_order(ideal, ctx.budget);
    let run = match res.outcome {
        Search::Found(order) => {
            let reordered = ideal.reordered(&order)?;
            // Report indices 1-based, like every other position in the reports.
            let positions: Vec<usize> = order.iter().map(|i| i + 1).collect();
            Run::new("found", Outcome::Holds, json!({"order": positions})).with_certificate(to_value(&reordered))
        }
        Search::NotFound => Run::new("no-order", Outcome::Refuted, json!({})),
        Search::Exhausted => Run::new("exhausted", Outcome::Inconclusive, json!({})),
    };
    Ok(run.with_stats(res.stats))
}

fn betti(ideal: &OrderedIdeal, power: u32, ctx: &Context) -> CliResult<Run> {
    let ideal = if power == 1 { ideal.clone() } else { ideal.power(power)? };
    let table = betti_numbers(&ideal, ctx.field, ctx.budget)?;
    let mut result = json!({
        "power": power,
        "betti": table,
        "table": table.to_string(),
        "regularity": table.regularity(),
        "projective_dimension": table.projective_dimension(),
    });
    let run = match ideal.generating_degree() {
        Some(d) if ideal.is_equigenerated() => {
            let nonlinear = table.nonlinear_entries(d);
            result["generating_degree"] = json!(d);
            result["nonlinear_entries"] = json!(nonlinear);
            let linear = nonlinear.is_empty();
            Run::new(if linear { "linear-resolution" } else { "nonlinear-resolution" }, Outcome::from_bool(linear), result)
        }
        _ => Run::new("computed", Outcome::Computed, result),
    };
    Ok(run)
}

fn check_shelling(complex: &SimplicialComplex, order: Option<Vec<VertexSet>>, ctx: &Context) -> CliResult<Run> {
    if let Some(order) = order {
        let check = is_shelling_order(complex, &order)?;
        let verdict = if check.holds { "shelling" } else { "not-a-shelling" };
        return Ok(Run::new(verdict, Outcome::from_bool(check.holds), to_value(&check)));
    }
    let res = find_shelling(complex, ctx.budget)?;
    let run = match res.outcome {
        Search::Found(order) => Run::new("shellable", Outcome::Holds, json!({"facets": order.len()}))
            .with_certificate(json!({ "order": order })),
        Search::NotFound => Run::new("not-shellable", Outcome::Refuted, json!({})),
        Search::Exhausted => Run::new("exhausted", Outcome::Inconclusive, json!({})),
    };
    Ok(run.with_stats(res.stats))
}

fn check_extendable(complex: &SimplicialComplex, max_facets: usize, ctx: &Context) -> CliResult<Run> {
    let report = is_extendably_shellable(
        complex,
        ExtendableOptions {
            budget: ctx.budget,
            max_facets,
        },
    )?;
    let (verdict, outcome) = match report.verdict {
        ExtendableVerdict::Extendable => ("extendably-shellable", Outcome::Holds),
        ExtendableVerdict::NotExtendable { .. } => ("not-extendably-shellable", Outcome::Refuted),
        ExtendableVerdict::Exhausted => ("exhausted", Outcome::Inconclusive),
    };
    let stats = report.stats;
    Ok(Run::new(verdict, outcome, to_value(&report)).with_stats(stats))
}

fn simon_verify(n: Option<usize>, d: Option<usize>, ctx: &Context) -> CliResult<Run> {
    let pairs: Vec<(usize, usize)> = match (n, d) {
        (Some(n), Some(d)) => vec![(n, d)],
        (Some(n), None) => (2..=n).map(|d| (n, d)).collect(),
        _ => (2..=SIMON_MAX_N).flat_map(|n| (2..=n).map(move |d| (n, d))).collect(),
    };
    let mut reports = Vec::with_capacity(pairs.len());
    for (n, d) in pairs {
        reports.push(simon_equivalence_check(n, d, ctx.budget)?);
    }
    let holds = reports.iter().all(|r| r.equivalence_holds);
    let verdict = if holds { "equivalence-holds" } else { "counterexample" };
    Ok(Run::new(verdict, Outcome::from_bool(holds), json!({ "reports": reports })))
}

fn recognize(kind: RecognizeKind, path: &Path, bytes: &[u8], skeleton: Option<usize>) -> CliResult<Run> {
    if kind == RecognizeKind::Quasiforest {
        let complex: SimplicialComplex = parse(path, bytes)?;
        let Some(order) = find_leaf_order(&complex) else {
            return Ok(Run::new("not-a-quasiforest", Outcome::Refuted, json!({})));
        };
        let mut result = json!({ "leaf_order": order.facets });
        let mut run_cert = None;
        if let Some(d) = skeleton {
            let (clutter, cert) = quasiforest_skeleton_clutter(&complex, d)?;
            result["skeleton_clutter"] = to_value(&clutter);
            run_cert = Some(to_value(&cert));
        }
        let run = Run::new("quasiforest", Outcome::Holds, result);
        return Ok(match run_cert {
            Some(c) => run.with_certificate(c),
            None => run,
        });
    }
    let ideal: OrderedIdeal = parse(path, bytes)?;
    let rec = match kind {
        RecognizeKind::Stable => is_squarefree_stable(&ideal)?,
        RecognizeKind::StronglyStable => is_squarefree_strongly_stable(&ideal)?,
        RecognizeKind::Lex => is_squarefree_lexsegment(&ideal)?,
        RecognizeKind::Matroidal => is_matroidal(&ideal)?,
        RecognizeKind::Quasiforest => unreachable!(),
    };
    let name = kind.to_possible_value().expect("no skipped variants");
    let verdict = if rec.holds { name.get_name().to_string() } else { format!("not-{}", name.get_name()) };
    Ok(Run::new(verdict, Outcome::from_bool(rec.holds), to_value(&rec)))
}

/// Wraps a run into the report, writing the certificate out when requested.
pub fn report(cli: &Cli, digest: String, run: Run, elapsed_ms: f64) -> CliResult<RunReport> {
    let command = cli.command.name();
    let (certificate, certificate_path) = match (&cli.output_dir, run.certificate) {
        (Some(dir), Some(cert)) => {
            let path = write_certificate(dir, command, &digest, &cert)
                .map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
            (None, Some(path))
        }
        (_, cert) => (cert, None),
    };
    Ok(RunReport {
        command: command.to_string(),
        input_digest: digest,
        verdict: run.verdict,
        holds: run.outcome.holds(),
        result: run.result,
        certificate,
        certificate_path,
        timings_ms: elapsed_ms,
        stats: run.stats,
        seed: cli.seed,
        budget: cli.budget,
    })
}

/// Entry point of the binary; returns the process exit code.
pub fn main() -> i32 {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT_ERROR } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return EXIT_INPUT_ERROR;
        }
    }
    let start = Instant::now();
    let outcome = execute(&cli).and_then(|(digest, run)| {
        let code = run.outcome.exit_code();
        let elapsed = start.elapsed().as_secs_f64() * 1e3;
        report(&cli, digest, run, elapsed).map(|r| (r, code))
    });
    match outcome {
        Ok((report, code)) => {
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
