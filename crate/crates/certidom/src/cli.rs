//! The `certidom` command line.
//!
//! Exit codes: 0 success, 1 verification failures, 2 usage or input
//! errors, 3 solver limit exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::Path;

use certidom_core::corona::{corona_k1, p_corona, two_subdivision, PCoronaGraph};
use certidom_core::domination::SolverLimits;
use certidom_core::enumerate::DEFAULT_MAX_ORDER;
use certidom_core::families::FamilySpec;
use certidom_core::theorems::ids;
use certidom_core::{Graph, InvariantKind};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::report::{classify, compute, limit_violation};
use crate::sweep::{census, sweep, Source, SweepConfig, SweepError, DEFAULT_SEED};
use crate::{graph6, text};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURES: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

/// Environment variable overriding the enumeration cap.
pub const MAX_N_ENV: &str = "CERTIDOM_MAX_N";

#[derive(Parser, Debug)]
#[command(
    name = "certidom",
    version,
    about = "Domination, certified domination and upper domination numbers of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute γ, γ_cer, Γ and Γ_cer with witnesses.
    Compute(ComputeArgs),
    /// Recognize coronas, diadems and the two join forms.
    Classify(ClassifyArgs),
    /// Check registered theorems over a graph source.
    Verify(VerifyArgs),
    /// Build a 𝒫-corona, a corona or a 2-subdivision.
    Construct(ConstructArgs),
    /// Tabulate invariant quadruples over a graph source.
    Census(CensusArgs),
}

#[derive(Args, Debug, Default)]
struct GraphInput {
    /// Family spec such as path:5, kbip:2,3 or corona:cycle:3.
    #[arg(long)]
    family: Option<String>,
    /// Edge list "n m u1 v1 ...", inline (\n allowed) or a file path.
    #[arg(long)]
    edges: Option<String>,
    /// graph6 string or a file whose first line is one.
    #[arg(long)]
    graph6: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Human,
    Tsv,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Gamma,
    #[value(name = "gamma_cer", alias = "gamma-cer")]
    GammaCer,
    #[value(name = "upper_gamma", alias = "upper-gamma")]
    UpperGamma,
    #[value(name = "upper_gamma_cer", alias = "upper-gamma-cer")]
    UpperGammaCer,
}

impl From<Kind> for InvariantKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Gamma => InvariantKind::Gamma,
            Kind::GammaCer => InvariantKind::GammaCer,
            Kind::UpperGamma => InvariantKind::UpperGamma,
            Kind::UpperGammaCer => InvariantKind::UpperGammaCer,
        }
    }
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Invariants to compute (default: all four).
    #[arg(long, value_enum, value_delimiter = ',')]
    kind: Vec<Kind>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Ignore the solver order limits.
    #[arg(long)]
    force: bool,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct SourceArgs {
    /// Every labeled graph on 1..=N vertices (with --samples: the order bound).
    #[arg(long, value_name = "N")]
    enumerate: Option<usize>,
    /// Smallest order enumerated.
    #[arg(long, value_name = "N", default_value_t = 1)]
    min_n: usize,
    /// Keep only connected graphs when enumerating.
    #[arg(long)]
    connected: bool,
    /// graph6 file, one graph per line.
    #[arg(long, value_name = "FILE")]
    graph6: Option<String>,
    /// Named family members (repeatable).
    #[arg(long)]
    family: Vec<String>,
    /// Sample K random (G, 𝒫) pairs instead of enumerating.
    #[arg(long, value_name = "K")]
    samples: Option<usize>,
    #[arg(long, value_name = "S", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, value_name = "J", default_value_t = 0)]
    jobs: usize,
    /// Check graphs above the solver order limits too.
    #[arg(long)]
    force: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Comma separated theorem ids, or "all".
    #[arg(long, default_value = "all")]
    theorems: String,
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct CensusArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Build G∘𝒫 for the family in --partitions.
    #[arg(long, requires = "partitions")]
    p_corona: bool,
    /// Partition family file ("v: {a,b}|{c}" per line).
    #[arg(long, value_name = "FILE")]
    partitions: Option<String>,
    /// Build the corona G∘K1.
    #[arg(long)]
    corona_k1: bool,
    /// Build the 2-subdivision S2(G).
    #[arg(long)]
    two_subdivision: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type CliResult = Result<i32, Failure>;

/// Reads a file when `value` names one, otherwise returns `value` itself.
fn file_or_inline(value: &str) -> Result<String, Failure> {
    let path = Path::new(value);
    if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| usage(format!("{value}: {e}")))
    } else {
        Ok(value.replace("\\n", "\n"))
    }
}

fn read_graph(input: &GraphInput, stdin: &mut dyn Read) -> Result<Graph, Failure> {
    let given = [&input.family, &input.edges, &input.graph6]
        .iter()
        .filter(|o| o.is_some())
        .count();
    if given > 1 {
        return Err(usage("give exactly one of --family, --edges, --graph6"));
    }
    if let Some(spec) = &input.family {
        let spec: FamilySpec = spec.parse().map_err(|e| usage(format!("{e}")))?;
        return spec.build().map_err(|e| usage(format!("{e}")));
    }
    if let Some(edges) = &input.edges {
        let text = file_or_inline(edges)?;
        return text::parse_edge_list(&text).map_err(|e| usage(format!("{e}")));
    }
    let text = match &input.graph6 {
        Some(g6) => file_or_inline(g6)?,
        None => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| usage(format!("stdin: {e}")))?;
            s
        }
    };
    let line = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| usage("no graph given"))?;
    graph6::parse(line).map_err(|e| usage(format!("graph6: {e}")))
}

fn enumeration_cap() -> Result<usize, Failure> {
    match std::env::var(MAX_N_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("{MAX_N_ENV}={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

fn sweep_config(args: &SourceArgs, ids: Vec<String>) -> Result<SweepConfig, Failure> {
    let sources = [
        args.enumerate.is_some() && args.samples.is_none(),
        args.graph6.is_some(),
        !args.family.is_empty(),
        args.samples.is_some(),
    ];
    match sources.iter().filter(|&&s| s).count() {
        0 => return Err(usage("no source: give --enumerate, --graph6, --family or --samples")),
        1 => {}
        _ => return Err(usage("give exactly one source")),
    }
    let source = if let Some(count) = args.samples {
        Source::Samples {
            count,
            max_n: args.enumerate.unwrap_or(5).max(1),
        }
    } else if let Some(max_n) = args.enumerate {
        Source::Enumerate {
            min_n: args.min_n.max(1),
            max_n,
            connected: args.connected,
            cap: enumeration_cap()?,
        }
    } else if let Some(path) = &args.graph6 {
        let text =
            std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?;
        Source::Graph6 {
            name: path.clone(),
            text,
        }
    } else {
        let specs = args
            .family
            .iter()
            .map(|s| s.parse::<FamilySpec>().map_err(|e| usage(format!("{e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Source::Families(specs)
    };
    Ok(SweepConfig {
        ids,
        source,
        seed: args.seed,
        jobs: args.jobs,
        max_order: if args.force {
            usize::MAX
        } else {
            SolverLimits::default().upper_gamma_cer
        },
    })
}

fn sweep_failure(e: SweepError) -> Failure {
    usage(e.to_string())
}

fn parse_ids(spec: &str) -> Result<Vec<String>, Failure> {
    if spec.trim() == "all" {
        return Ok(ids().map(String::from).collect());
    }
    let requested: Vec<String> = spec
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    if let Some(bad) = requested.iter().find(|id| ids().all(|known| known != id.as_str())) {
        let valid: Vec<&str> = ids().collect();
        return Err(usage(format!(
            "unknown theorem id {bad:?}; valid ids: {}",
            valid.join(", ")
        )));
    }
    if requested.is_empty() {
        return Err(usage("no theorem ids given"));
    }
    Ok(requested)
}

fn cmd_compute(args: &ComputeArgs, stdin: &mut dyn Read, out: &mut dyn Write) -> CliResult {
    let g = read_graph(&args.input, stdin)?;
    let kinds: Vec<InvariantKind> = if args.kind.is_empty() {
        InvariantKind::ALL.to_vec()
    } else {
        args.kind.iter().map(|&k| k.into()).collect()
    };
    let limits = SolverLimits::default();
    if !args.force {
        if let Some(kind) = limit_violation(&g, &kinds, &limits) {
            return Err(Failure {
                code: EXIT_LIMIT,
                message: format!(
                    "order {} exceeds the {} solver limit of {}; rerun with --force",
                    g.order(),
                    kind.as_str(),
                    limits.max_order(kind)
                ),
            });
        }
    }
    let report = compute(&g, &kinds);
    let text = match args.format {
        Format::Human | Format::Text => {
            let mut s = format!("graph6 {} n={}\n", report.graph6, report.n);
            for r in &report.results {
                writeln!(s, "{} = {}  witness {:?}", r.kind, r.value, r.witness).unwrap();
            }
            s
        }
        Format::Json | Format::Tsv => {
            serde_json::to_string_pretty(&report).expect("serializes") + "\n"
        }
    };
    write_out(out, &text)?;
    Ok(EXIT_OK)
}

fn cmd_classify(args: &ClassifyArgs, stdin: &mut dyn Read, out: &mut dyn Write) -> CliResult {
    let g = read_graph(&args.input, stdin)?;
    let report = classify(&g);
    let text = match args.format {
        Format::Human | Format::Text => format!(
            "label {}\np4_free {}\nmin_degree {}\nleaves {:?}\nsupports {:?}\n",
            report.label, report.p4_free, report.min_degree, report.leaves, report.supports
        ),
        _ => serde_json::to_string_pretty(&report).expect("serializes") + "\n",
    };
    write_out(out, &text)?;
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> CliResult {
    let ids = parse_ids(&args.theorems)?;
    let config = sweep_config(&args.source, ids)?;
    let report = sweep(&config).map_err(sweep_failure)?;
    let text = match args.format {
        Format::Human | Format::Text | Format::Tsv => {
            let mut s = String::new();
            for c in &report.theorems {
                writeln!(
                    s,
                    "{}\tchecked={}\tpassed={}\tskipped={}\tfailed={}",
                    c.id, c.checked, c.passed, c.skipped, c.failed
                )
                .unwrap();
            }
            for f in &report.failures {
                writeln!(s, "FAIL {} {} {}", f.theorem, f.graph6, f.detail).unwrap();
            }
            for e in &report.errors {
                writeln!(s, "ERROR line {}: {}", e.line, e.message).unwrap();
            }
            s
        }
        Format::Json => report.to_json() + "\n",
    };
    write_out(out, &text)?;
    Ok(if report.total_failed() == 0 {
        EXIT_OK
    } else {
        EXIT_FAILURES
    })
}

fn cmd_census(args: &CensusArgs, out: &mut dyn Write) -> CliResult {
    let config = sweep_config(&args.source, Vec::new())?;
    let report = census(&config).map_err(sweep_failure)?;
    let text = match args.format {
        Format::Tsv | Format::Text | Format::Human => report.to_tsv(),
        Format::Json => report.to_json() + "\n",
    };
    write_out(out, &text)?;
    Ok(EXIT_OK)
}

fn cmd_construct(args: &ConstructArgs, stdin: &mut dyn Read, out: &mut dyn Write) -> CliResult {
    let g = read_graph(&args.input, stdin)?;
    let chosen = [args.p_corona, args.corona_k1, args.two_subdivision]
        .iter()
        .filter(|&&b| b)
        .count();
    if chosen > 1 {
        return Err(usage(
            "give at most one of --p-corona, --corona-k1, --two-subdivision",
        ));
    }
    let built: Option<PCoronaGraph> = if args.p_corona {
        let path = args.partitions.as_deref().expect("required by clap");
        let text =
            std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?;
        let p = text::parse_partition_family(&text, g.order())
            .map_err(|e| usage(format!("{path}: {e}")))?;
        Some(p_corona(&g, &p).map_err(|e| usage(format!("invalid family: {e}")))?)
    } else if args.corona_k1 {
        Some(corona_k1(&g).map_err(|e| usage(e.to_string()))?)
    } else if args.two_subdivision {
        Some(two_subdivision(&g).map_err(|e| usage(e.to_string()))?)
    } else {
        None
    };
    let text = match (&built, args.format) {
        (Some(h), Format::Json) => construct_json(&h.graph, Some(h)),
        (None, Format::Json) => construct_json(&g, None),
        (Some(h), _) => text::write_p_corona(h),
        (None, _) => text::write_edge_list(&g),
    };
    write_out(out, &text)?;
    Ok(EXIT_OK)
}

fn construct_json(g: &Graph, h: Option<&PCoronaGraph>) -> String {
    #[derive(serde::Serialize)]
    struct Out {
        schema: u32,
        graph6: String,
        n: usize,
        edges: Vec<(usize, usize)>,
        #[serde(skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    }
    let o = Out {
        schema: 1,
        graph6: graph6::encode(g),
        n: g.order(),
        edges: g.edges().collect(),
        labels: h.map(|h| h.labels.iter().map(|l| l.to_string()).collect()),
    };
    serde_json::to_string_pretty(&o).expect("serializes") + "\n"
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| usage(format!("write: {e}")))
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Compute(a) => cmd_compute(a, stdin, out),
        Command::Classify(a) => cmd_classify(a, stdin, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Construct(a) => cmd_construct(a, stdin, out),
        Command::Census(a) => cmd_census(a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
