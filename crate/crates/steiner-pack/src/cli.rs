//! Command-line front end. Every command writes one JSON document except
//! `enumerate`, which writes graph6 lines.
//!
//! Exit codes: 0 success, 1 input error, 2 node budget exhausted, 3 regime
//! or size cap error, 4 a verification found a mismatch.

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use steiner_pack_core::enumerate::{enumerate_with, Filter};
use steiner_pack_core::extremal::{brute_force_extremal_with, verify_observations_with};
use steiner_pack_core::families::{
    f_closed_form, h_from_f, k3_lower_bound, remark_lower_bound, Family, FamilySpec,
};
use steiner_pack_core::spanning::{max_spanning_tree_packing, partition_bound, PARTITION_CAP};
use steiner_pack_core::steiner::{greedy_star_tree, peel_lower_bound, profile, steiner_packing, DEFAULT_BUDGET};
use steiner_pack_core::{Edge, Error, Graph, Mode, VertexSet};

use crate::graph6;
use crate::json::{
    CertificateJson, ClosedFormJson, Envelope, FamilySpecJson, LocalJson, LowerBoundJson, ProfileJson, ReportJson,
    ViolationJson, SCHEMA,
};
use crate::parallel::{with_jobs, Rayon};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_REGIME: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "steiner-pack", version, about = "Exact Steiner tree packing and extremal connectivity")]
pub struct Cli {
    /// Write the JSON document here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// kappa(S) / lambda(S) for one set, or the min/max profile over all k-sets.
    Compute(ComputeArgs),
    /// Maximum edge-disjoint spanning tree packing.
    Pack(PackArgs),
    /// Build a member of a named family.
    Construct(ConstructArgs),
    /// Closed-form extremal values and lower bounds.
    Formula(FormulaArgs),
    /// Brute-force extremal values against the closed forms.
    Verify(VerifyArgs),
    /// All graphs of order n up to isomorphism, one graph6 line each.
    Enumerate(EnumerateArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct GraphInput {
    /// graph6 string; `-` reads stdin.
    #[arg(long)]
    pub graph6: Option<String>,
    /// File with one graph6 string per line; `-` reads stdin.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Family name: Kn, Gn, Hn, KnMinusM, Remark.
    #[arg(long)]
    pub family: Option<String>,
    /// Family spec as JSON, or `@path` to read it from a file.
    #[arg(long)]
    pub spec: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    /// Terminal size of the Remark family.
    #[arg(long = "family-k")]
    pub family_k: Option<usize>,
    /// Attachment sets, e.g. `0,1;2,3`.
    #[arg(long)]
    pub attach: Option<String>,
    /// Deleted edges for KnMinusM, e.g. `0-1,2-3`.
    #[arg(long)]
    pub m: Option<String>,
}

#[derive(Args, Debug, Serialize)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// Terminal set size for the profile.
    #[arg(long)]
    pub k: Option<usize>,
    /// Explicit terminal set, comma-separated 0-based indices.
    #[arg(long = "S", visible_alias = "terminals")]
    pub s: Option<String>,
    /// Greedy star tree and peel bound for S = V minus this vertex.
    #[arg(long)]
    pub v: Option<usize>,
    #[arg(long, default_value = "vertex")]
    pub mode: String,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Args, Debug, Serialize)]
pub struct PackArgs {
    #[command(flatten)]
    pub input: GraphInput,
}

#[derive(Args, Debug, Serialize)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub input: GraphInput,
}

#[derive(Args, Debug, Serialize)]
pub struct FormulaArgs {
    #[arg(long)]
    pub n: usize,
    /// A number, `n` or `n-1`.
    #[arg(long)]
    pub k: String,
    #[arg(long)]
    pub l: usize,
    #[arg(long, default_value = "vertex")]
    pub mode: String,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: usize,
    /// A number, `n` or `n-1`.
    #[arg(long, default_value = "n")]
    pub k: String,
    /// A value or an inclusive range `a..b`; all valid values if omitted.
    #[arg(long)]
    pub l: Option<String>,
    #[arg(long, default_value = "vertex")]
    pub mode: String,
    /// Check the basic inequalities on every connected graph of order n instead.
    #[arg(long)]
    pub observations: bool,
    /// Worker threads; 0 uses every core. Output does not depend on it.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Args, Debug, Serialize)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    /// Include disconnected graphs.
    #[arg(long)]
    pub all: bool,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

/// A failure with its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError { code: EXIT_INPUT, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExhausted(_) => EXIT_BUDGET,
            Error::UnsupportedRegime(_) | Error::Cap { .. } => EXIT_REGIME,
            _ => EXIT_INPUT,
        };
        CliError { code, message: e.to_string() }
    }
}

type CliResult<T> = Result<T, CliError>;

/// A finished command: the text to write and the exit code.
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

fn document<C: Serialize, R: Serialize>(command: &'static str, config: &C, result: R) -> CliResult<String> {
    let env = Envelope { schema: SCHEMA, command, config, result };
    let mut text = serde_json::to_string_pretty(&env).map_err(|e| CliError::input(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

pub fn run(cli: &Cli) -> CliResult<Outcome> {
    match &cli.command {
        Command::Compute(a) => cmd_compute(a),
        Command::Pack(a) => cmd_pack(a),
        Command::Construct(a) => cmd_construct(a),
        Command::Formula(a) => cmd_formula(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Enumerate(a) => cmd_enumerate(a),
    }
}

pub fn parse_mode(s: &str) -> CliResult<Mode> {
    crate::json::parse_mode(s).ok_or_else(|| CliError::input(format!("unknown mode {s:?}; use vertex or edge")))
}

pub fn parse_set(s: &str) -> CliResult<VertexSet> {
    let mut out = VertexSet::EMPTY;
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part.parse().map_err(|_| CliError::input(format!("bad vertex {part:?}")))?;
        if v >= 64 {
            return Err(CliError::input(format!("vertex {v} out of range")));
        }
        out.insert(v);
    }
    Ok(out)
}

fn parse_edges(s: &str) -> CliResult<Vec<Edge>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            let (a, b) = p.split_once('-').ok_or_else(|| CliError::input(format!("bad edge {p:?}; use u-v")))?;
            let a: usize = a.trim().parse().map_err(|_| CliError::input(format!("bad edge {p:?}")))?;
            let b: usize = b.trim().parse().map_err(|_| CliError::input(format!("bad edge {p:?}")))?;
            Ok(Edge::new(a, b)?)
        })
        .collect()
}

/// `n`, `n-1` or a number.
pub fn parse_k(s: &str, n: usize) -> CliResult<usize> {
    match s.trim() {
        "n" => Ok(n),
        "n-1" => n.checked_sub(1).ok_or_else(|| CliError::input("n-1 needs n >= 1")),
        other => other.parse().map_err(|_| CliError::input(format!("bad k {other:?}"))),
    }
}

fn read_source(path: &std::path::Path) -> CliResult<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::input(e.to_string()))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
    }
}

fn family_spec(input: &GraphInput) -> CliResult<Option<FamilySpec>> {
    if let Some(text) = &input.spec {
        let raw = match text.strip_prefix('@') {
            Some(path) => read_source(std::path::Path::new(path))?,
            None => text.clone(),
        };
        let json: FamilySpecJson = serde_json::from_str(&raw).map_err(|e| CliError::input(format!("bad spec: {e}")))?;
        return json.to_core().map(Some).map_err(CliError::input);
    }
    let Some(name) = &input.family else {
        return Ok(None);
    };
    let family = Family::parse(name).ok_or_else(|| CliError::input(format!("unknown family {name:?}")))?;
    let n = input.n.ok_or_else(|| CliError::input("--family needs --n"))?;
    let l = match (family, input.l) {
        (Family::Kn | Family::KnMinusM, l) => l.unwrap_or(0),
        (_, Some(l)) => l,
        (_, None) => return Err(CliError::input("this family needs --l")),
    };
    let mut spec = FamilySpec::new(family, n, l);
    spec.k = input.family_k;
    if let Some(m) = &input.m {
        spec.m = parse_edges(m)?;
    }
    if let Some(a) = &input.attach {
        spec.attach = a.split(';').map(parse_set).collect::<CliResult<_>>()?;
    }
    Ok(Some(spec))
}

/// The graphs named by the input options, with the family spec if any.
fn load_graphs(input: &GraphInput) -> CliResult<(Vec<Graph>, Option<FamilySpec>)> {
    let sources = [input.graph6.is_some(), input.file.is_some(), input.family.is_some() || input.spec.is_some()];
    if sources.iter().filter(|&&b| b).count() != 1 {
        return Err(CliError::input("give exactly one of --graph6, --file, --family/--spec"));
    }
    if let Some(g6) = &input.graph6 {
        let text = if g6 == "-" { read_source(std::path::Path::new("-"))? } else { g6.clone() };
        let g = graph6::parse(text.lines().next().unwrap_or("")).map_err(|e| CliError::input(e.to_string()))?;
        return Ok((vec![g], None));
    }
    if let Some(path) = &input.file {
        let text = read_source(path)?;
        let gs = graph6::parse_lines(&text).map_err(|(line, e)| CliError::input(format!("line {line}: {e}")))?;
        if gs.is_empty() {
            return Err(CliError::input("no graphs in input"));
        }
        return Ok((gs, None));
    }
    let spec = family_spec(input)?.unwrap_or_else(|| unreachable!());
    Ok((vec![spec.build()?], Some(spec)))
}

fn g6(g: &Graph) -> CliResult<String> {
    graph6::write(g).map_err(|e| CliError { code: EXIT_REGIME, message: e.to_string() })
}

#[derive(Serialize)]
struct PeelJson {
    v: usize,
    star_tree: Option<Vec<[usize; 2]>>,
    lower_bound: usize,
    certificate: CertificateJson,
}

#[derive(Serialize)]
struct ComputeJson {
    graph6: String,
    n: usize,
    edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    profile: Option<ProfileJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    local: Option<LocalJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    peel: Option<PeelJson>,
}

pub fn cmd_compute(a: &ComputeArgs) -> CliResult<Outcome> {
    let mode = parse_mode(&a.mode)?;
    let terminals = a.s.as_deref().map(parse_set).transpose()?;
    if let (Some(s), Some(k)) = (terminals, a.k) {
        if s.len() != k {
            return Err(CliError::input(format!("--k {k} disagrees with |S| = {}", s.len())));
        }
    }
    if terminals.is_none() && a.k.is_none() && a.v.is_none() {
        return Err(CliError::input("give --k, --S or --v"));
    }
    let (graphs, _) = load_graphs(&a.input)?;
    let mut out = Vec::new();
    for g in &graphs {
        let mut item = ComputeJson { graph6: g6(g)?, n: g.order(), edges: g.edge_count(), profile: None, local: None, peel: None };
        if let Some(v) = a.v {
            let star = greedy_star_tree(g, v)?;
            let (count, cert) = peel_lower_bound(g, v)?;
            item.peel = Some(PeelJson {
                v,
                star_tree: star.map(|t| t.edges.iter().map(|e| [e.u(), e.v()]).collect()),
                lower_bound: count,
                certificate: (&cert).into(),
            });
        }
        if let Some(s) = terminals {
            let (value, cert) = steiner_packing(g, s, mode, a.budget)?;
            item.local = Some(LocalJson {
                parameter: if mode == Mode::Vertex { "kappa_S" } else { "lambda_S" },
                terminals: s.iter().collect(),
                value,
                certificate: (&cert).into(),
            });
        } else if let Some(k) = a.k {
            item.profile = Some((&profile(g, k, mode, a.budget)?).into());
        }
        out.push(item);
    }
    Ok(Outcome { text: document("compute", a, out)?, code: EXIT_OK })
}

#[derive(Serialize)]
struct PackJson {
    graph6: String,
    n: usize,
    edges: usize,
    t: usize,
    partition_bound: Option<usize>,
    certificate: CertificateJson,
}

pub fn cmd_pack(a: &PackArgs) -> CliResult<Outcome> {
    let (graphs, _) = load_graphs(&a.input)?;
    let mut out = Vec::new();
    for g in &graphs {
        let (t, cert) = max_spanning_tree_packing(g)?;
        let bound = if g.order() <= PARTITION_CAP { Some(partition_bound(g)?) } else { None };
        out.push(PackJson { graph6: g6(g)?, n: g.order(), edges: g.edge_count(), t, partition_bound: bound, certificate: (&cert).into() });
    }
    Ok(Outcome { text: document("pack", a, out)?, code: EXIT_OK })
}

#[derive(Serialize)]
struct ConstructJson {
    graph6: String,
    n: usize,
    edges: usize,
    min_degree: usize,
    spec: FamilySpecJson,
}

pub fn cmd_construct(a: &ConstructArgs) -> CliResult<Outcome> {
    if a.input.graph6.is_some() || a.input.file.is_some() {
        return Err(CliError::input("construct takes --family or --spec"));
    }
    let (graphs, spec) = load_graphs(&a.input)?;
    let g = &graphs[0];
    let spec = spec.unwrap_or_else(|| unreachable!());
    let result = ConstructJson { graph6: g6(g)?, n: g.order(), edges: g.edge_count(), min_degree: g.min_degree(), spec: (&spec).into() };
    Ok(Outcome { text: document("construct", a, result)?, code: EXIT_OK })
}

#[derive(Serialize)]
struct FormulaJson {
    n: usize,
    k: usize,
    l: usize,
    mode: &'static str,
    closed_form: Option<ClosedFormJson>,
    h: Option<usize>,
    lower_bounds: Vec<LowerBoundJson>,
}

pub fn cmd_formula(a: &FormulaArgs) -> CliResult<Outcome> {
    let mode = parse_mode(&a.mode)?;
    let k = parse_k(&a.k, a.n)?;
    let closed = f_closed_form(a.n, k, a.l, mode).ok();
    let mut lower_bounds = Vec::new();
    if let Ok(b) = remark_lower_bound(a.n, k, a.l) {
        lower_bounds.push(LowerBoundJson { label: "remark", lower_bound: b });
    }
    if k == 3 && mode == Mode::Vertex {
        if let Ok(b) = k3_lower_bound(a.n, a.l) {
            lower_bounds.push(LowerBoundJson { label: "k3-construction", lower_bound: b });
        }
    }
    if closed.is_none() && lower_bounds.is_empty() {
        return Err(Error::UnsupportedRegime("no closed form or lower bound for these parameters").into());
    }
    let result = FormulaJson {
        n: a.n,
        k,
        l: a.l,
        mode: mode.as_str(),
        h: closed.map(|c| h_from_f(c.value)),
        closed_form: closed.map(Into::into),
        lower_bounds,
    };
    Ok(Outcome { text: document("formula", a, result)?, code: EXIT_OK })
}

fn parse_l_range(s: Option<&str>, top: usize) -> CliResult<Vec<usize>> {
    let Some(s) = s else {
        return Ok((1..=top).collect());
    };
    let num = |x: &str| x.trim().parse::<usize>().map_err(|_| CliError::input(format!("bad l {x:?}")));
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok((num(a)?..=num(b)?).collect())
        }
        None => Ok(vec![num(s)?]),
    }
}

#[derive(Serialize)]
struct VerifyJson {
    reports: Vec<ReportJson>,
    mismatches: usize,
}

#[derive(Serialize)]
struct ObservationsJson {
    n: usize,
    violations: Vec<ViolationJson>,
}

pub fn cmd_verify(a: &VerifyArgs) -> CliResult<Outcome> {
    let mode = parse_mode(&a.mode)?;
    if a.observations {
        let found = with_jobs(a.jobs, || verify_observations_with(a.n, a.budget, &Rayon))?;
        let code = if found.is_empty() { EXIT_OK } else { EXIT_MISMATCH };
        let result = ObservationsJson { n: a.n, violations: found.iter().map(Into::into).collect() };
        return Ok(Outcome { text: document("verify", a, result)?, code });
    }
    let k = parse_k(&a.k, a.n)?;
    let top = a.n.saturating_sub(k.div_ceil(2));
    let ls = parse_l_range(a.l.as_deref(), top)?;
    if ls.is_empty() {
        return Err(CliError::input("empty l range"));
    }
    let reports = with_jobs(a.jobs, || {
        ls.iter().map(|&l| brute_force_extremal_with(a.n, k, l, mode, a.budget, &Rayon)).collect::<Result<Vec<_>, _>>()
    })?;
    let mismatches = reports.iter().filter(|r| !r.formula_agrees() || r.characterization_match == Some(false)).count();
    let code = if mismatches == 0 { EXIT_OK } else { EXIT_MISMATCH };
    let result = VerifyJson { reports: reports.iter().map(Into::into).collect(), mismatches };
    Ok(Outcome { text: document("verify", a, result)?, code })
}

pub fn cmd_enumerate(a: &EnumerateArgs) -> CliResult<Outcome> {
    let filter = if a.all { Filter::All } else { Filter::Connected };
    let graphs = with_jobs(a.jobs, || enumerate_with(a.n, filter, None, &Rayon))?;
    let mut json = String::new();
    for g in &graphs {
        json.push_str(&g6(g)?);
        json.push('\n');
    }
    Ok(Outcome { text: json, code: EXIT_OK })
}
