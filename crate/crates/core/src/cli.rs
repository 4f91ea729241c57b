//! Command-line front end. Exit codes: 0 success, 1 a checked property
//! failed, 2 usage or input error.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::audit::{audit_lollipop, audit_parity, audit_smith, audit_thomason, AuditReport};
use crate::chain::{
    truncation_consistency, witness_two_cycles, ChainAnalysis, ChainError, CutChain, End,
};
use crate::constructions::{builtin_chain, builtin_graph, replacement_graph, tutte_fragment};
use crate::graph::{EdgeId, GraphFile, MultiGraph};
use crate::hamilton::{
    cycles_through, enumerate_hamilton_cycles_parallel, parity_from_cycles, second_cycle_lollipop,
    second_cycle_nearly_cubic, HamiltonCycle,
};
use crate::incidence::{check_pair_sum_even, check_uniform_parity, incidence_multigraph};

#[derive(Parser, Debug)]
#[command(
    name = "hamchain",
    version,
    about = "Hamilton cycles of finite and cut-chain cubic graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a built-in graph or chain as JSON
    Construct(ConstructArgs),
    /// Enumerate, count and audit Hamilton cycles of a finite graph
    #[command(subcommand)]
    Hamilton(HamiltonCommand),
    /// Hamilton incidence table between two anchor vertices
    Incidence(IncidenceArgs),
    /// Analyze a cut-chain
    #[command(subcommand)]
    Chain(ChainCommand),
    /// DOT drawing of a graph, or of a chain's layered transfer multigraph
    ExportDot(ExportArgs),
    /// Seeded property audits over sampled graphs
    Audit(AuditArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write machine output here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    /// tutte-fragment, tutte-quotient, k4, petersen, cube, replacement,
    /// chain-G, chain-H, chain-Hprime, chain-ladder, chain-double-ladder,
    /// truncation or segment
    name: String,
    #[arg(long)]
    n: Option<usize>,
    /// Chain for truncation and segment: a built-in name or a chain file
    #[arg(long)]
    chain: Option<String>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = Side::Right)]
    end: Side,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Side {
    Left,
    Right,
}

impl From<Side> for End {
    fn from(s: Side) -> End {
        match s {
            Side::Left => End::Left,
            Side::Right => End::Right,
        }
    }
}

#[derive(Args, Debug)]
struct GraphInput {
    /// Built-in graph name or graph JSON file
    graph: String,
    #[command(flatten)]
    output: Output,
    /// Worker threads for enumeration; output order does not depend on it
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand, Debug)]
enum HamiltonCommand {
    Count(GraphInput),
    List(GraphInput),
    Through {
        #[command(flatten)]
        input: GraphInput,
        /// Comma-separated edge labels every cycle must use
        #[arg(long, value_delimiter = ',')]
        require: Vec<String>,
        /// Comma-separated edge labels no cycle may use
        #[arg(long, value_delimiter = ',')]
        forbid: Vec<String>,
    },
    /// Per-edge membership counts (CSV in text mode)
    Parity(GraphInput),
    /// Two distinct Hamilton cycles: the lollipop walk through `--edge` when
    /// every degree is odd, enumeration for nearly cubic graphs
    Second {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        edge: Option<String>,
    },
}

#[derive(Args, Debug)]
struct IncidenceArgs {
    graph: String,
    #[arg(long)]
    v: String,
    #[arg(long)]
    w: String,
    /// Emit the bipartite multigraph as DOT
    #[arg(long)]
    dot: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct ChainInput {
    /// Built-in chain name or chain JSON file
    chain: String,
    #[command(flatten)]
    output: Output,
}

#[derive(Subcommand, Debug)]
enum ChainCommand {
    /// Layers, survival, limit count and certificates
    Analyze {
        #[command(flatten)]
        input: ChainInput,
        #[arg(long, default_value_t = 16)]
        certificates: usize,
    },
    /// Truncation consistency and certificate splicing up to `--depth`
    Check {
        #[command(flatten)]
        input: ChainInput,
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
    /// Two distinct limit Hamilton cycles of a one-ended chain
    Witness(ChainInput),
}

#[derive(Args, Debug)]
struct ExportArgs {
    /// Built-in graph or chain name, or a graph or chain JSON file
    input: String,
    /// Levels drawn for chains
    #[arg(long, default_value_t = 3)]
    depth: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum AuditKind {
    Smith,
    Thomason,
    Parity,
    Lollipop,
}

#[derive(Args, Debug)]
struct AuditArgs {
    #[arg(value_enum)]
    kind: AuditKind,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long)]
    max_vertices: Option<usize>,
    #[command(flatten)]
    output: Output,
}

/// Machine output plus the exit code it implies.
pub struct Outcome {
    pub output: String,
    pub code: i32,
    out: Option<PathBuf>,
}

impl Outcome {
    fn ok(output: String, out: Option<PathBuf>) -> Self {
        Outcome {
            output,
            code: 0,
            out,
        }
    }

    fn check(output: String, out: Option<PathBuf>, passed: bool) -> Self {
        Outcome {
            output,
            code: if passed { 0 } else { 1 },
            out,
        }
    }
}

type CliResult = Result<Outcome, String>;

fn read(path: &str) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read `{path}`: {e}"))
}

fn load_graph(arg: &str) -> Result<MultiGraph, String> {
    if let Some(g) = builtin_graph(arg) {
        return Ok(g);
    }
    MultiGraph::from_json(&read(arg)?).map_err(|e| format!("{arg}: {e}"))
}

fn load_chain(arg: &str) -> Result<CutChain, String> {
    if let Some(c) = builtin_chain(arg) {
        return Ok(c);
    }
    CutChain::from_json(&read(arg)?).map_err(|e| format!("{arg}: {e}"))
}

fn edges(g: &MultiGraph, labels: &[String]) -> Result<Vec<EdgeId>, String> {
    labels
        .iter()
        .map(|l| g.resolve_edge(l).map_err(|e| e.to_string()))
        .collect()
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable output");
    s.push('\n');
    s
}

fn cycle_line(g: &MultiGraph, c: &HamiltonCycle) -> String {
    c.labels(g).join(" ")
}

fn enumerate(g: &MultiGraph, jobs: usize) -> Result<Vec<HamiltonCycle>, String> {
    enumerate_hamilton_cycles_parallel(g, jobs).map_err(|e| e.to_string())
}

fn construct(a: ConstructArgs) -> CliResult {
    let chain_arg = || a.chain.as_deref().ok_or("--chain is required".to_owned());
    let text = match a.name.as_str() {
        "tutte-fragment" => {
            let t = tutte_fragment();
            let mut file: GraphFile = t.graph.to_file();
            file.boundary = Some(t.boundary);
            pretty(&file)
        }
        "replacement" => {
            let n = a.n.ok_or("replacement needs --n")?;
            replacement_graph(n).to_json() + "\n"
        }
        "truncation" => {
            let c = load_chain(chain_arg()?)?;
            let k = a.k.ok_or("truncation needs --k")?;
            c.truncation_minor(k)
                .map_err(|e| e.to_string())?
                .graph
                .to_json()
                + "\n"
        }
        "segment" => {
            let c = load_chain(chain_arg()?)?;
            let n = a.n.ok_or("segment needs --n")?;
            c.segment_minor(a.end.into(), n)
                .map_err(|e| e.to_string())?
                .graph
                .to_json()
                + "\n"
        }
        name => {
            if let Some(g) = builtin_graph(name) {
                g.to_json() + "\n"
            } else if let Some(c) = builtin_chain(name) {
                c.to_json() + "\n"
            } else {
                return Err(format!("unknown construction `{name}`"));
            }
        }
    };
    Ok(Outcome::ok(text, a.out))
}

fn hamilton(cmd: HamiltonCommand) -> CliResult {
    match cmd {
        HamiltonCommand::Count(i) => {
            let g = load_graph(&i.graph)?;
            let n = enumerate(&g, i.jobs)?.len();
            let text = match i.output.format {
                Format::Text => format!("{n}\n"),
                Format::Json => pretty(&json!({ "count": n })),
            };
            Ok(Outcome::ok(text, i.output.out))
        }
        HamiltonCommand::List(i) => {
            let g = load_graph(&i.graph)?;
            let cycles = enumerate(&g, i.jobs)?;
            let text = match i.output.format {
                Format::Text => cycles.iter().map(|c| cycle_line(&g, c) + "\n").collect(),
                Format::Json => pretty(&cycles.iter().map(|c| c.labels(&g)).collect::<Vec<_>>()),
            };
            Ok(Outcome::ok(text, i.output.out))
        }
        HamiltonCommand::Through {
            input,
            require,
            forbid,
        } => {
            let g = load_graph(&input.graph)?;
            let cycles = cycles_through(&g, &edges(&g, &require)?, &edges(&g, &forbid)?)
                .map_err(|e| e.to_string())?;
            let text = match input.output.format {
                Format::Text => format!("{}\n", cycles.len()),
                Format::Json => pretty(&json!({
                    "count": cycles.len(),
                    "cycles": cycles.iter().map(|c| c.labels(&g)).collect::<Vec<_>>(),
                })),
            };
            Ok(Outcome::ok(text, input.output.out))
        }
        HamiltonCommand::Parity(i) => {
            let g = load_graph(&i.graph)?;
            let report = parity_from_cycles(&g, &enumerate(&g, i.jobs)?);
            let violations: Vec<String> = report
                .violations()
                .iter()
                .map(|e| g.edge_name(*e))
                .collect();
            let text = match i.output.format {
                Format::Text => report.to_csv(&g),
                Format::Json => pretty(&json!({
                    "total": report.total,
                    "counts": (0..g.edge_count())
                        .map(|e| json!({ "edge": g.edge_name(EdgeId(e)), "count": report.counts[e] }))
                        .collect::<Vec<_>>(),
                    "all_even": report.all_even(),
                    "all_degrees_odd": report.all_degrees_odd,
                    "violations": violations,
                })),
            };
            Ok(Outcome::check(text, i.output.out, violations.is_empty()))
        }
        HamiltonCommand::Second { input, edge } => {
            let g = load_graph(&input.graph)?;
            let all_odd = g.vertex_count() > 0 && g.degrees().iter().all(|d| d % 2 == 1);
            let (first, second, method) = if all_odd {
                let label = edge.ok_or("--edge is required when every degree is odd")?;
                let e = g.resolve_edge(&label).map_err(|e| e.to_string())?;
                let first = cycles_through(&g, &[e], &[])
                    .map_err(|e| e.to_string())?
                    .into_iter()
                    .next()
                    .ok_or_else(|| format!("no Hamilton cycle uses {label}"))?;
                let second = second_cycle_lollipop(&g, &first, e).map_err(|e| e.to_string())?;
                (first, second, "lollipop")
            } else if g.is_nearly_cubic() {
                let (a, b) = second_cycle_nearly_cubic(&g).map_err(|e| e.to_string())?;
                (a, b, "enumeration")
            } else {
                return Err("`second` needs all degrees odd or a nearly cubic graph".into());
            };
            let text = match input.output.format {
                Format::Text => format!(
                    "method: {method}\nfirst: {}\nsecond: {}\n",
                    cycle_line(&g, &first),
                    cycle_line(&g, &second)
                ),
                Format::Json => pretty(&json!({
                    "method": method,
                    "first": first.labels(&g),
                    "second": second.labels(&g),
                })),
            };
            Ok(Outcome::ok(text, input.output.out))
        }
    }
}

fn incidence(a: IncidenceArgs) -> CliResult {
    let g = load_graph(&a.graph)?;
    let v = g.vertex(&a.v).map_err(|e| e.to_string())?;
    let w = g.vertex(&a.w).map_err(|e| e.to_string())?;
    let h = incidence_multigraph(&g, v, w).map_err(|e| e.to_string())?;
    let sums = check_pair_sum_even(&h);
    let uniform = check_uniform_parity(&h);
    // the lemmas are claims about cubic simple graphs only
    let applies = g.is_cubic() && g.is_simple();
    let passed = !applies || (sums.all_even && uniform.uniform());
    let text = if a.dot {
        h.to_dot(&g)
    } else {
        match a.output.format {
            Format::Text => format!(
                "{}pair sums even: {}\nuniform parity: {}\n",
                h.render_text(&g),
                sums.all_even,
                match uniform.parity {
                    Some(p) => format!("{p:?}").to_lowercase(),
                    None => "mixed".into(),
                }
            ),
            Format::Json => pretty(&json!({
                "v": a.v,
                "w": a.w,
                "left_states": h.left_states.iter().map(|s| s.render(&g)).collect::<Vec<_>>(),
                "right_states": h.right_states.iter().map(|s| s.render(&g)).collect::<Vec<_>>(),
                "multiplicity": h.multiplicity,
                "pair_sums": sums,
                "uniform_parity": uniform,
                "lemmas_apply": applies,
            })),
        }
    };
    Ok(Outcome::check(text, a.output.out, passed))
}

fn chain_err(e: ChainError) -> String {
    e.to_string()
}

fn chain(cmd: ChainCommand) -> CliResult {
    match cmd {
        ChainCommand::Analyze {
            input,
            certificates,
        } => {
            let c = load_chain(&input.chain)?;
            let report = ChainAnalysis::new(&c)
                .and_then(|a| a.report(certificates))
                .map_err(chain_err)?;
            let text = match input.output.format {
                Format::Text => report.render_text(),
                Format::Json => pretty(&report),
            };
            Ok(Outcome::ok(text, input.output.out))
        }
        ChainCommand::Check { input, depth } => {
            let c = load_chain(&input.chain)?;
            let a = ChainAnalysis::new(&c).map_err(chain_err)?;
            let certs = a.certificates(16).map_err(chain_err)?;
            let mut passed = true;
            let mut reports = Vec::new();
            let mut lines = String::new();
            for k in 0..=depth {
                let r = truncation_consistency(&c, k).map_err(chain_err)?;
                passed &= r.consistent;
                lines.push_str(&format!(
                    "depth {k}: predicted {} observed {} {}\n",
                    r.predicted_total,
                    r.observed_total,
                    if r.consistent { "ok" } else { "MISMATCH" }
                ));
                let mut splices = Vec::new();
                for (i, cert) in certs.iter().enumerate() {
                    let ok = a.validate(cert, k).is_ok();
                    passed &= ok;
                    if !ok {
                        lines.push_str(&format!("depth {k}: certificate {i} fails to splice\n"));
                    }
                    splices.push(ok);
                }
                reports.push(json!({ "consistency": r, "certificates_valid": splices }));
            }
            lines.push_str(&format!(
                "{} certificates checked; {}\n",
                certs.len(),
                if passed { "all consistent" } else { "FAILED" }
            ));
            let text = match input.output.format {
                Format::Text => lines,
                Format::Json => pretty(&json!({ "passed": passed, "depths": reports })),
            };
            Ok(Outcome::check(text, input.output.out, passed))
        }
        ChainCommand::Witness(input) => {
            let c = load_chain(&input.chain)?;
            match witness_two_cycles(&c) {
                Ok((x, y)) => {
                    let text = match input.output.format {
                        Format::Text => format!("{}\n{}\n", x.render(), y.render()),
                        Format::Json => pretty(&[x, y]),
                    };
                    Ok(Outcome::ok(text, input.output.out))
                }
                Err(ChainError::TheoremViolation) => Ok(Outcome::check(
                    format!("{}\n", ChainError::TheoremViolation),
                    input.output.out,
                    false,
                )),
                Err(e) => Err(e.to_string()),
            }
        }
    }
}

fn export_dot(a: ExportArgs) -> CliResult {
    let text = if let Some(g) = builtin_graph(&a.input) {
        g.to_dot(&a.input)
    } else if let Some(c) = builtin_chain(&a.input) {
        ChainAnalysis::new(&c)
            .and_then(|an| an.to_dot(a.depth))
            .map_err(chain_err)?
    } else {
        let raw = read(&a.input)?;
        match CutChain::from_json(&raw) {
            Ok(c) => ChainAnalysis::new(&c)
                .and_then(|an| an.to_dot(a.depth))
                .map_err(chain_err)?,
            Err(_) => MultiGraph::from_json(&raw)
                .map_err(|e| format!("{}: {e}", a.input))?
                .to_dot("G"),
        }
    };
    Ok(Outcome::ok(text, a.out))
}

fn audit(a: AuditArgs) -> CliResult {
    let report: AuditReport = match a.kind {
        AuditKind::Smith => audit_smith(a.seed, a.count, a.max_vertices.unwrap_or(16)),
        AuditKind::Thomason => audit_thomason(a.seed, a.count, a.max_vertices.unwrap_or(14)),
        AuditKind::Parity => audit_parity(a.seed, a.count, a.max_vertices.unwrap_or(16)),
        AuditKind::Lollipop => audit_lollipop(a.seed, a.count, a.max_vertices.unwrap_or(20)),
    };
    let text = match a.output.format {
        Format::Text => report.render_text(),
        Format::Json => pretty(&report),
    };
    Ok(Outcome::check(text, a.output.out, report.passed()))
}

/// Parses and runs one command; usage errors come back as `Err` with the
/// message clap or the loader produced.
pub fn execute<I, T>(args: I) -> CliResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| e.to_string())?;
    match cli.command {
        Command::Construct(a) => construct(a),
        Command::Hamilton(c) => hamilton(c),
        Command::Incidence(a) => incidence(a),
        Command::Chain(c) => chain(c),
        Command::ExportDot(a) => export_dot(a),
        Command::Audit(a) => audit(a),
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    if let Err(e) = Cli::try_parse_from(&args) {
        // help and version requests are not errors
        let code = if e.use_stderr() { 2 } else { 0 };
        let _ = e.print();
        return code;
    }
    match execute(args) {
        Ok(outcome) => {
            if let Some(path) = &outcome.out {
                if let Err(e) = fs::write(path, &outcome.output) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 2;
                }
            } else {
                print!("{}", outcome.output);
            }
            outcome.code
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}
