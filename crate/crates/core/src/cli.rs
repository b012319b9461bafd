//! Command-line front end. Exit codes: 0 success or true, 1 false or not
//! found, 2 usage error, 3 budget exhausted.

use std::io::Write;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::bounds::{evaluate_bound, summary_table, BoundCase, TableParams};
use crate::builders::{glue, size_coverage, verify_builder, BuilderSpec};
use crate::constructions::{make, named_graph, FamilyParams, NamedGraph};
use crate::count::count_copies;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{from_adjacency_matrix, parse_graph6_lines, to_graph6};
use crate::pattern::Pattern;
use crate::saturation::{is_saturated, verify_certificate, SaturationCertificate};
use crate::search::{
    find_h_free_saturated, sat_oracle, search_builder, CopyLimit, SearchBudget, SearchStatus,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Patterns: K<r>, C<l>, Kbar<r>, K<r>-e, P<m>, K<a>,<b>, g6:<code>, or
/// @file.g6 for the first graph in a file.
#[derive(Parser, Debug)]
#[command(name = "satlab", version, about = "Generalized graph saturation toolkit")]
pub struct Cli {
    /// Worker threads for searches.
    #[arg(long, global = true, env = "SATLAB_THREADS")]
    pub threads: Option<usize>,
    /// Byte-identical output: no timings, node caps applied in order.
    #[arg(long, global = true)]
    pub deterministic: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a graph family or a named graph.
    Construct(ConstructArgs),
    /// Count copies of a pattern in each input graph.
    Count {
        #[arg(long)]
        pattern: String,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Decide F-saturation and optionally write a certificate.
    Verify {
        #[arg(long)]
        target: String,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        cert: Option<std::path::PathBuf>,
    },
    /// Check a certificate against a graph.
    VerifyCert {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        cert: std::path::PathBuf,
    },
    /// Exact sat(n, H, F) by exhaustive enumeration.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        h: String,
        #[arg(long)]
        f: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// H-free saturated graphs or C_k-builders.
    Search(SearchArgs),
    /// Builder verification, gluing and size coverage.
    Builder {
        #[command(subcommand)]
        action: BuilderAction,
    },
    /// Evaluate a closed-form bound or print the summary table.
    Bounds(BoundsArgs),
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// graph6 file, one graph per line.
    #[arg(long)]
    pub input: std::path::PathBuf,
    /// Read a 0/1 adjacency matrix instead of graph6.
    #[arg(long)]
    pub matrix: bool,
}

#[derive(Args, Debug, Clone)]
pub struct BudgetArgs {
    #[arg(long)]
    pub max_seconds: Option<f64>,
    #[arg(long)]
    pub max_nodes: Option<u64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Family {
    EhmJoin,
    BookJoin,
    Ws,
    G4k,
    G4k2,
    CompleteBipartite,
    FriendshipLike,
    ApexCliqueFan,
    TwoApexClique,
    StarMatching,
    KaszonyiTuza,
    Petersen,
    C5,
    Coxeter,
    HoffmanSingleton,
    C6Builder11,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OutFormat {
    G6,
    Json,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub m1: Option<usize>,
    #[arg(long)]
    pub m3: Option<usize>,
    #[arg(long)]
    pub m4: Option<usize>,
    /// Forbidden pattern for kaszonyi-tuza.
    #[arg(long)]
    pub f: Option<String>,
    #[arg(long, value_enum, default_value = "g6")]
    pub out: OutFormat,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SearchMode {
    HfreeSaturated,
    Builder,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long, value_enum)]
    pub mode: SearchMode,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub h: Option<String>,
    #[arg(long)]
    pub f: Option<String>,
    /// Cycle length for builder search.
    #[arg(long)]
    pub k: Option<usize>,
    /// Pattern limited in builders.
    #[arg(long, default_value = "C4")]
    pub forbid: String,
    #[arg(long, default_value_t = 0)]
    pub max_copies: u64,
    #[arg(long)]
    pub min_n: Option<usize>,
    #[arg(long)]
    pub max_n: Option<usize>,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Subcommand, Debug)]
pub enum BuilderAction {
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        vertex: usize,
        #[arg(long)]
        k: usize,
    },
    /// Glue m1 copies of the input builder with m2 copies of a second one.
    Glue {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        vertex: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        m1: usize,
        #[arg(long)]
        second: Option<std::path::PathBuf>,
        #[arg(long)]
        second_vertex: Option<usize>,
        #[arg(long, default_value_t = 0)]
        m2: usize,
    },
    Coverage {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, default_value_t = 200)]
        limit: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CaseTag {
    Ehm,
    KrKs,
    QuadLb,
    C4K4,
    CrKs,
    C6K5,
    KtCount,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long, value_enum, required_unless_present = "table")]
    pub case: Option<CaseTag>,
    #[arg(long)]
    pub table: bool,
    #[arg(long)]
    pub n: Option<i64>,
    #[arg(long)]
    pub r: Option<i64>,
    #[arg(long)]
    pub s: Option<i64>,
    #[arg(long)]
    pub k: Option<i64>,
    #[arg(long)]
    pub l: Option<i64>,
    #[arg(long)]
    pub t: Option<i64>,
    /// Pattern H for quad-lb, F for kt-count.
    #[arg(long)]
    pub pattern: Option<String>,
    #[arg(long)]
    pub h1: Option<usize>,
    #[arg(long)]
    pub h2: Option<usize>,
}

#[derive(Serialize)]
struct RunRecord<'a> {
    subcommand: &'a str,
    argv: &'a [String],
    version: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    start: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    end: Option<f64>,
    exit_code: i32,
    output_sha256: String,
}

fn now() -> f64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map_or(0.0, |d| d.as_secs_f64())
}

fn usage(msg: impl Into<String>) -> Error {
    Error::OutOfRange(msg.into())
}

fn param<T: Copy>(v: Option<T>, name: &str) -> Result<T> {
    v.ok_or_else(|| usage(format!("missing --{name}")))
}

fn read(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

pub fn parse_pattern(text: &str) -> Result<Pattern> {
    if let Some(path) = text.strip_prefix('@') {
        let g = parse_graph6_lines(&read(path.as_ref())?)?
            .into_iter()
            .next()
            .ok_or_else(|| usage(format!("{path} holds no graph")))?;
        let p = Pattern::Explicit(g);
        p.validate()?;
        return Ok(p);
    }
    text.parse()
}

fn read_graphs(input: &InputArgs) -> Result<Vec<Graph>> {
    let text = read(&input.input)?;
    if input.matrix {
        Ok(vec![from_adjacency_matrix(&text)?])
    } else {
        let gs = parse_graph6_lines(&text)?;
        if gs.is_empty() {
            return Err(usage(format!("{} holds no graph", input.input.display())));
        }
        Ok(gs)
    }
}

fn read_graph(input: &InputArgs) -> Result<Graph> {
    Ok(read_graphs(input)?.remove(0))
}

fn budget(args: &BudgetArgs, deterministic: bool) -> SearchBudget {
    SearchBudget { max_nodes: args.max_nodes, max_seconds: args.max_seconds, deterministic }
}

fn json_line(out: &mut String, value: &impl Serialize) {
    out.push_str(&serde_json::to_string(value).expect("serializable"));
    out.push('\n');
}

fn family_params(a: &ConstructArgs) -> Result<std::result::Result<FamilyParams, NamedGraph>> {
    let p = |v, name| param(v, name);
    Ok(Ok(match a.family {
        Family::EhmJoin => FamilyParams::EhmJoin { n: p(a.n, "n")?, s: p(a.s, "s")? },
        Family::BookJoin => FamilyParams::BookJoin { n: p(a.n, "n")?, s: p(a.s, "s")? },
        Family::Ws => FamilyParams::Ws { s: p(a.s, "s")?, m1: p(a.m1, "m1")?, m3: p(a.m3, "m3")?, m4: p(a.m4, "m4")? },
        Family::G4k => FamilyParams::G4k { k: p(a.k, "k")? },
        Family::G4k2 => FamilyParams::G4k2 { k: p(a.k, "k")? },
        Family::CompleteBipartite => FamilyParams::CompleteBipartite { a: p(a.a, "a")?, b: p(a.b, "b")? },
        Family::FriendshipLike => FamilyParams::FriendshipLike { m: p(a.m, "m")?, r: p(a.r, "r")? },
        Family::ApexCliqueFan => FamilyParams::ApexCliqueFan { n: p(a.n, "n")?, k: p(a.k, "k")? },
        Family::TwoApexClique => FamilyParams::TwoApexClique { n: p(a.n, "n")?, k: p(a.k, "k")? },
        Family::StarMatching => FamilyParams::StarMatching { n: p(a.n, "n")? },
        Family::KaszonyiTuza => FamilyParams::KaszonyiTuza {
            n: p(a.n, "n")?,
            f: parse_pattern(a.f.as_deref().ok_or_else(|| usage("missing --f"))?)?,
        },
        Family::Petersen => return Ok(Err(NamedGraph::Petersen)),
        Family::C5 => return Ok(Err(NamedGraph::C5)),
        Family::Coxeter => return Ok(Err(NamedGraph::Coxeter)),
        Family::HoffmanSingleton => return Ok(Err(NamedGraph::HoffmanSingleton)),
        Family::C6Builder11 => return Ok(Err(NamedGraph::C6Builder11)),
    }))
}

#[derive(Serialize)]
struct ConstructRecord<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    params: Option<&'a FamilyParams>,
    #[serde(skip_serializing_if = "Option::is_none")]
    named: Option<NamedGraph>,
    legend: String,
    graph6: String,
    vertices: usize,
    edges: usize,
}

fn construct(a: &ConstructArgs, out: &mut String) -> Result<i32> {
    let which = family_params(a)?;
    let (g, legend) = match &which {
        Ok(params) => (make(params)?, params.legend()),
        Err(name) => (named_graph(*name), "standard labeling, see the constructions module".to_string()),
    };
    match a.out {
        OutFormat::G6 => {
            out.push_str(&to_graph6(&g));
            out.push('\n');
        }
        OutFormat::Json => json_line(
            out,
            &ConstructRecord {
                params: which.as_ref().ok(),
                named: which.as_ref().err().copied(),
                legend,
                graph6: to_graph6(&g),
                vertices: g.n(),
                edges: g.edge_count(),
            },
        ),
    }
    Ok(EXIT_OK)
}

fn bounds(a: &BoundsArgs, out: &mut String) -> Result<i32> {
    if a.table {
        let tp = TableParams {
            n: a.n.unwrap_or(0),
            r: a.r.unwrap_or(0),
            s: a.s.unwrap_or(0),
            k: a.k.unwrap_or(0),
            l: a.l.unwrap_or(0),
            t: a.t.unwrap_or(0),
        };
        for row in summary_table(&tp) {
            json_line(out, &row);
        }
        return Ok(EXIT_OK);
    }
    let n = param(a.n, "n")?;
    let case = match a.case.expect("required by clap") {
        CaseTag::Ehm => BoundCase::Ehm { n, s: param(a.s, "s")? },
        CaseTag::KrKs => BoundCase::KrKs { n, r: param(a.r, "r")?, s: param(a.s, "s")? },
        CaseTag::QuadLb => {
            let h = parse_pattern(a.pattern.as_deref().ok_or_else(|| usage("missing --pattern"))?)?;
            BoundCase::quad_lb(n, &h.graph(), param(a.h1, "h1")?, param(a.h2, "h2")?, param(a.s, "s")?)
        }
        CaseTag::C4K4 => BoundCase::C4K4 { n },
        CaseTag::CrKs => BoundCase::CrKs { n, r: param(a.r, "r")?, s: param(a.s, "s")? },
        CaseTag::C6K5 => BoundCase::C6K5 { n },
        CaseTag::KtCount => BoundCase::KtCount {
            n,
            r: param(a.r, "r")?,
            f: parse_pattern(a.pattern.as_deref().ok_or_else(|| usage("missing --pattern"))?)?,
        },
    };
    json_line(out, &evaluate_bound(&case)?);
    Ok(EXIT_OK)
}

fn builder(action: &BuilderAction, out: &mut String) -> Result<i32> {
    match action {
        BuilderAction::Verify { input, vertex, k } => {
            let g = read_graph(input)?;
            let (ok, spec) = verify_builder(&g, *vertex, *k)?;
            let record = spec.map(|s| s.record()).unwrap_or(crate::builders::BuilderRecord {
                graph6: to_graph6(&g),
                distinguished: *vertex,
                k: *k,
                verified: false,
            });
            json_line(out, &record);
            Ok(if ok { EXIT_OK } else { EXIT_FALSE })
        }
        BuilderAction::Glue { input, vertex, k, m1, second, second_vertex, m2 } => {
            let spec = |g: &Graph, v: usize| -> Result<BuilderSpec> {
                verify_builder(g, v, *k)?
                    .1
                    .ok_or_else(|| Error::Verification(format!("{} is not a C{k}-builder at {v}", to_graph6(g))))
            };
            let b1 = spec(&read_graph(input)?, *vertex)?;
            let b2 = match second {
                Some(path) => {
                    let g = read_graph(&InputArgs { input: path.clone(), matrix: input.matrix })?;
                    Some(spec(&g, param(*second_vertex, "second-vertex")?)?)
                }
                None => None,
            };
            let g = glue(&b1, *m1, b2.as_ref(), *m2)?;
            out.push_str(&to_graph6(&g));
            out.push('\n');
            Ok(EXIT_OK)
        }
        BuilderAction::Coverage { a, b, limit } => {
            let c = size_coverage(*a, *b, *limit)?;
            json_line(out, &c);
            Ok(if c.threshold.is_some() { EXIT_OK } else { EXIT_FALSE })
        }
    }
}

fn search(a: &SearchArgs, deterministic: bool, out: &mut String) -> Result<i32> {
    let b = budget(&a.budget, deterministic);
    match a.mode {
        SearchMode::HfreeSaturated => {
            let h = parse_pattern(a.h.as_deref().ok_or_else(|| usage("missing --h"))?)?;
            let f = parse_pattern(a.f.as_deref().ok_or_else(|| usage("missing --f"))?)?;
            let r = find_h_free_saturated(param(a.n, "n")?, &h, &f, &b)?;
            json_line(out, &r);
            Ok(match (r.graph6.is_some(), r.status) {
                (true, _) => EXIT_OK,
                (false, SearchStatus::BudgetExhausted) => EXIT_BUDGET,
                (false, SearchStatus::Complete) => EXIT_FALSE,
            })
        }
        SearchMode::Builder => {
            let k = param(a.k, "k")?;
            let limit = CopyLimit { pattern: parse_pattern(&a.forbid)?, max_copies: a.max_copies };
            let lo = param(a.min_n, "min-n")?;
            let hi = a.max_n.unwrap_or(lo);
            let r = search_builder(k, &limit, lo..=hi, &b)?;
            json_line(out, &r);
            Ok(match (r.builders.is_empty(), r.status) {
                (false, _) => EXIT_OK,
                (true, SearchStatus::BudgetExhausted) => EXIT_BUDGET,
                (true, SearchStatus::Complete) => EXIT_FALSE,
            })
        }
    }
}

fn dispatch(cli: &Cli, out: &mut String) -> Result<i32> {
    match &cli.command {
        Command::Construct(a) => construct(a, out),
        Command::Count { pattern, input, json } => {
            let p = parse_pattern(pattern)?;
            for g in read_graphs(input)? {
                let report = count_copies(&g, &p)?;
                if *json {
                    json_line(out, &report);
                } else {
                    out.push_str(&format!("{}\n", report.copies));
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { target, input, cert } => {
            let f = parse_pattern(target)?;
            let mut all = true;
            for g in read_graphs(input)? {
                let (ok, c) = is_saturated(&g, &f)?;
                all &= ok;
                let nonedges = g.nonedge_count();
                out.push_str(&format!(
                    "{} {} nonedges={nonedges}\n",
                    to_graph6(&g),
                    if ok { "saturated" } else { "not-saturated" }
                ));
                if let (Some(path), Some(c)) = (cert, c) {
                    std::fs::write(path, c.to_json() + "\n")
                        .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
                }
            }
            Ok(if all { EXIT_OK } else { EXIT_FALSE })
        }
        Command::VerifyCert { input, cert } => {
            let g = read_graph(input)?;
            let c = SaturationCertificate::from_json(&read(cert)?)?;
            let ok = verify_certificate(&g, &c);
            out.push_str(if ok { "valid\n" } else { "invalid\n" });
            Ok(if ok { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Oracle { n, h, f, budget: ba } => {
            let r = sat_oracle(*n, &parse_pattern(h)?, &parse_pattern(f)?, &budget(ba, cli.deterministic))?;
            json_line(out, &r);
            Ok(match (r.status, r.minimum) {
                (SearchStatus::BudgetExhausted, _) => EXIT_BUDGET,
                (_, Some(_)) => EXIT_OK,
                (_, None) => EXIT_FALSE,
            })
        }
        Command::Search(a) => search(a, cli.deterministic, out),
        Command::Builder { action } => builder(action, out),
        Command::Bounds(a) => bounds(a, out),
    }
}

fn subcommand_name(c: &Command) -> &'static str {
    match c {
        Command::Construct(_) => "construct",
        Command::Count { .. } => "count",
        Command::Verify { .. } => "verify",
        Command::VerifyCert { .. } => "verify-cert",
        Command::Oracle { .. } => "oracle",
        Command::Search(_) => "search",
        Command::Builder { .. } => "builder",
        Command::Bounds(_) => "bounds",
    }
}

/// Runs one invocation, writing results to `stdout` and diagnostics plus
/// the run record to `stderr`.
pub fn run(argv: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = if e.use_stderr() { write!(stderr, "{e}") } else { write!(stdout, "{e}") };
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let start = now();
    let work = || {
        let mut out = String::new();
        dispatch(&cli, &mut out).map(|code| (code, out))
    };
    let result = match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(work),
            Err(e) => Err(usage(format!("cannot start {t} threads: {e}"))),
        },
        None => work(),
    };
    let (code, out) = match result {
        Ok(done) => done,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            (EXIT_USAGE, String::new())
        }
    };
    let _ = stdout.write_all(out.as_bytes());
    let digest: String = Sha256::digest(out.as_bytes()).iter().map(|b| format!("{b:02x}")).collect();
    let record = RunRecord {
        subcommand: subcommand_name(&cli.command),
        argv,
        version: env!("CARGO_PKG_VERSION"),
        start: (!cli.deterministic).then_some(start),
        end: (!cli.deterministic).then(now),
        exit_code: code,
        output_sha256: digest,
    };
    let _ = writeln!(stderr, "{}", serde_json::to_string(&record).expect("serializable"));
    code
}
