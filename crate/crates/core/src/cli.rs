//! The `status-lab` command line.
//!
//! Exit codes: 0 success (or every theorem passed), 1 usage or input error,
//! 2 a verification failure, 3 a transform that did not move the minimum
//! status in the expected direction.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use serde::Serialize;

use crate::enumeration::{
    enumerate_connected_graphs, enumerate_tree_codes, MAX_GRAPH_ORDER, MAX_TREE_ORDER,
};
use crate::error::Error;
use crate::families::{self, Family, FamilySpec};
use crate::graph::Graph;
use crate::invariants::{
    domination_number_bruteforce, domination_number_tree, matching_number_bruteforce,
    matching_number_tree,
};
use crate::status::{diameter, min_status, status_profile};
use crate::transforms::{
    caterpillar_shift, contract_to_pendant, dumbbell_shift, move_branches, CutEdge,
};
use crate::verifier::{self, TheoremId, TheoremReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;
pub const EXIT_NOT_MONOTONE: i32 = 3;

/// Environment variable capping the enumeration budget.
pub const MAX_N_ENV: &str = "STATUS_LAB_MAX_N";
const DEFAULT_VERIFY_MAX_N: usize = 12;

#[derive(Parser, Debug)]
#[command(
    name = "status-lab",
    version,
    about = "Minimum status, matching and domination of trees"
)]
struct Cli {
    /// Run metadata (timings) on standard error.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariants of one graph read as an edge-list.
    Compute {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Edge-list of a named family member, e.g. `construct A 8 3`.
    Construct {
        family: String,
        n: usize,
        params: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Value of a closed-form bound.
    Bound {
        #[arg(value_enum)]
        kind: BoundKind,
        n: usize,
        /// Matching or domination number (not used by `order`).
        k: Option<usize>,
    },
    /// Apply a status-monotone transformation.
    Transform {
        #[command(subcommand)]
        op: TransformOp,
    },
    /// All non-isomorphic trees or connected graphs of order n.
    Enumerate {
        #[arg(value_enum)]
        universe: Universe,
        n: usize,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify the bounds over every tree of order n_lo..=n_hi.
    Verify {
        #[arg(long, default_value = "all")]
        theorem: String,
        #[arg(long, default_value_t = 4)]
        n_lo: usize,
        #[arg(long, default_value_t = DEFAULT_VERIFY_MAX_N)]
        n_hi: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum TransformOp {
    /// Contract a non-pendant cut edge u-v and re-attach v as a pendant of u.
    Contract {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
    },
    /// Move the branches at u rooted at `moved` onto w.
    MoveBranches {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        w: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        moved: Vec<usize>,
    },
    /// Emit D_n(p,q) then D_n(p+1,q-1).
    DumbbellShift {
        n: usize,
        p: usize,
        q: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit C_n(p-1,q+1) then C_n(p,q).
    CaterpillarShift {
        n: usize,
        p: usize,
        q: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BoundKind {
    MatchingLower,
    MatchingUpper,
    DominationLower,
    DominationUpperSmall,
    DominationUpperLarge,
    Order,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Universe {
    Trees,
    Graphs,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Verification,
    NotMonotone(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type CliResult = std::result::Result<(), Failure>;

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return EXIT_OK;
        }
        Err(e) => {
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            eprintln!("error: {}", first.trim_start_matches("error: "));
            return EXIT_INPUT;
        }
    };
    match dispatch(cli) {
        Ok(()) => EXIT_OK,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Verification) => EXIT_VERIFY_FAILED,
        Err(Failure::NotMonotone(msg)) => {
            eprintln!("error: {msg}");
            EXIT_NOT_MONOTONE
        }
    }
}

fn dispatch(cli: Cli) -> CliResult {
    let verbose = cli.verbose;
    match cli.command {
        Command::Compute { input, out, format } => {
            if format == Format::Csv {
                return Err(Failure::Input("compute supports --format text|json".into()));
            }
            let g = read_graph(input.as_deref())?;
            emit(out.as_deref(), &compute_report(&g, format)?)
        }
        Command::Construct {
            family,
            n,
            params,
            out,
        } => {
            let family: Family = family.parse()?;
            let g = FamilySpec::new(family, n, params).build()?;
            emit(out.as_deref(), &g.to_string())
        }
        Command::Bound { kind, n, k } => {
            let value = bound_value(kind, n, k)?;
            emit(None, &format!("{value}\n"))
        }
        Command::Transform { op } => transform(op, verbose),
        Command::Enumerate {
            universe,
            n,
            count_only,
            out,
        } => enumerate(universe, n, count_only, out.as_deref()),
        Command::Verify {
            theorem,
            n_lo,
            n_hi,
            format,
            jobs,
            out,
        } => verify(&theorem, n_lo, n_hi, format, jobs, out.as_deref(), verbose),
    }
}

fn read_graph(path: Option<&Path>) -> std::result::Result<Graph, Failure> {
    let text = match path {
        Some(p) => {
            fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?
        }
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    Ok(text.parse()?)
}

fn emit(path: Option<&Path>, text: &str) -> CliResult {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

/// `p/q` plus a six-place decimal, rounded half up in integer arithmetic.
fn render_ratio(r: Ratio<u64>) -> (String, String) {
    let (num, den) = (*r.numer() as u128, *r.denom() as u128);
    let scaled = (num * 2_000_000 + den) / (2 * den);
    (
        format!("{num}/{den}"),
        format!("{}.{:06}", scaled / 1_000_000, scaled % 1_000_000),
    )
}

#[derive(Serialize)]
struct ComputeReport {
    n: usize,
    edges: usize,
    min_status: u64,
    median: Vec<usize>,
    proximity: String,
    proximity_decimal: String,
    matching: Option<usize>,
    domination: Option<usize>,
    diameter: usize,
}

fn compute_report(g: &Graph, format: Format) -> std::result::Result<String, Failure> {
    let profile = status_profile(g);
    let (matching, domination) = if g.is_tree() {
        (
            Some(matching_number_tree(g)?.size),
            Some(domination_number_tree(g)?.size),
        )
    } else {
        (
            matching_number_bruteforce(g).ok().map(|m| m.size),
            domination_number_bruteforce(g).ok().map(|d| d.size),
        )
    };
    let (proximity, proximity_decimal) = render_ratio(profile.proximity);
    let report = ComputeReport {
        n: g.n(),
        edges: g.edge_count(),
        min_status: profile.min_status,
        median: profile.median,
        proximity,
        proximity_decimal,
        matching,
        domination,
        diameter: diameter(g),
    };
    if format == Format::Json {
        let mut s = serde_json::to_string_pretty(&report).expect("serializable");
        s.push('\n');
        return Ok(s);
    }
    let opt = |x: Option<usize>| x.map_or_else(|| "n/a".to_string(), |v| v.to_string());
    let median: Vec<String> = report.median.iter().map(usize::to_string).collect();
    Ok(format!(
        "n {}\nedges {}\nmin_status {}\nmedian {}\nproximity {} {}\nmatching {}\ndomination {}\ndiameter {}\n",
        report.n,
        report.edges,
        report.min_status,
        median.join(" "),
        report.proximity,
        report.proximity_decimal,
        opt(report.matching),
        opt(report.domination),
        report.diameter
    ))
}

fn bound_value(kind: BoundKind, n: usize, k: Option<usize>) -> std::result::Result<i64, Failure> {
    let need_k = || k.ok_or_else(|| Failure::Input("this bound needs a second parameter".into()));
    let value = match kind {
        BoundKind::Order => {
            if k.is_some() {
                return Err(Failure::Input("order bound takes only n".into()));
            }
            families::bound_order(n)?
        }
        BoundKind::MatchingLower => families::bound_matching_lower(n, need_k()?)?,
        BoundKind::MatchingUpper => families::bound_matching_upper(n, need_k()?)?,
        BoundKind::DominationLower => families::bound_domination_lower(n, need_k()?)?,
        BoundKind::DominationUpperSmall => families::bound_domination_upper_small(n, need_k()?)?,
        BoundKind::DominationUpperLarge => families::bound_domination_upper_large(n, need_k()?)?,
    };
    Ok(value)
}

fn transform(op: TransformOp, verbose: bool) -> CliResult {
    match op {
        TransformOp::Contract { input, out, u, v } => {
            let g = read_graph(input.as_deref())?;
            let result = contract_to_pendant(&g, CutEdge::new(&g, u, v)?)?;
            single_result(&g, result, out.as_deref(), Direction::Decrease, verbose)
        }
        TransformOp::MoveBranches {
            input,
            out,
            u,
            w,
            moved,
        } => {
            let t = read_graph(input.as_deref())?;
            let result = move_branches(&t, u, w, &moved)?;
            single_result(&t, result, out.as_deref(), Direction::Increase, verbose)
        }
        TransformOp::DumbbellShift { n, p, q, out } => {
            let (before, after) = dumbbell_shift(n, p, q)?;
            pair_result(&before, &after, out.as_deref(), verbose)
        }
        TransformOp::CaterpillarShift { n, p, q, out } => {
            let (before, after) = caterpillar_shift(n, p, q)?;
            pair_result(&before, &after, out.as_deref(), verbose)
        }
    }
}

#[derive(Clone, Copy)]
enum Direction {
    Increase,
    Decrease,
}

fn single_result(
    input: &Graph,
    result: Graph,
    out: Option<&Path>,
    expected: Direction,
    verbose: bool,
) -> CliResult {
    let (before, after) = (min_status(input), min_status(&result));
    if verbose {
        eprintln!("min status {before} -> {after}");
    }
    emit(out, &result.to_string())?;
    let ok = match expected {
        Direction::Increase => after > before,
        Direction::Decrease => after < before,
    };
    if ok {
        Ok(())
    } else {
        Err(Failure::NotMonotone(format!(
            "minimum status went from {before} to {after}"
        )))
    }
}

/// Writes both graphs; the first must have strictly larger minimum status.
fn pair_result(before: &Graph, after: &Graph, out: Option<&Path>, verbose: bool) -> CliResult {
    let (s_before, s_after) = (min_status(before), min_status(after));
    if verbose {
        eprintln!("min status {s_before} -> {s_after}");
    }
    emit(out, &format!("{before}{after}"))?;
    if s_before > s_after {
        Ok(())
    } else {
        Err(Failure::NotMonotone(format!(
            "expected {s_before} > {s_after}"
        )))
    }
}

fn budget(default: usize) -> std::result::Result<usize, Failure> {
    match std::env::var(MAX_N_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Input(format!("{MAX_N_ENV} must be a positive integer, got {v:?}"))
        }),
        Err(_) => Ok(default),
    }
}

fn enumerate(universe: Universe, n: usize, count_only: bool, out: Option<&Path>) -> CliResult {
    let graphs: Vec<Graph> = match universe {
        Universe::Trees => {
            let cap = budget(MAX_TREE_ORDER)?.min(MAX_TREE_ORDER);
            if n > cap {
                return Err(Failure::Input(format!(
                    "n={n} exceeds the tree budget of {cap}"
                )));
            }
            if count_only {
                let count = enumerate_tree_codes(n)?.len();
                return emit(out, &format!("{count}\n"));
            }
            enumerate_tree_codes(n)?
                .iter()
                .map(|c| c.to_graph())
                .collect()
        }
        Universe::Graphs => {
            if n > MAX_GRAPH_ORDER {
                return Err(Failure::Input(format!(
                    "n={n} exceeds the graph budget of {MAX_GRAPH_ORDER}"
                )));
            }
            enumerate_connected_graphs(n)?.collect()
        }
    };
    if count_only {
        return emit(out, &format!("{}\n", graphs.len()));
    }
    let mut text = String::new();
    for g in &graphs {
        text.push_str(&g.to_flat_edge_list());
        text.push('\n');
    }
    emit(out, &text)
}

fn verify(
    theorem: &str,
    n_lo: usize,
    n_hi: usize,
    format: Format,
    jobs: Option<usize>,
    out: Option<&Path>,
    verbose: bool,
) -> CliResult {
    let ids: Vec<TheoremId> = if theorem == "all" {
        TheoremId::ALL.to_vec()
    } else {
        theorem
            .split(',')
            .map(str::parse)
            .collect::<crate::error::Result<_>>()?
    };
    let cap = budget(DEFAULT_VERIFY_MAX_N)?.min(MAX_TREE_ORDER);
    if n_hi > cap {
        return Err(Failure::Input(format!(
            "n_hi={n_hi} exceeds the verify budget of {cap} (set {MAX_N_ENV} to raise it)"
        )));
    }
    if n_lo < 2 || n_lo > n_hi {
        return Err(Failure::Input(format!(
            "need 2 <= n-lo <= n-hi, got {n_lo}..{n_hi}"
        )));
    }
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = jobs {
        if jobs == 0 {
            return Err(Failure::Input("--jobs must be at least 1".into()));
        }
        pool = pool.num_threads(jobs);
    }
    let pool = pool
        .build()
        .map_err(|e| Failure::Input(format!("thread pool: {e}")))?;
    let start = Instant::now();
    let reports = pool.install(|| verifier::verify(&ids, n_lo, n_hi))?;
    if verbose {
        eprintln!(
            "verified {} theorem(s) over n={n_lo}..{n_hi} in {:.2?} on {} thread(s)",
            ids.len(),
            start.elapsed(),
            pool.current_num_threads()
        );
    }
    let text = match format {
        Format::Text => render_text(&reports),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&reports).expect("serializable");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(&reports)?,
    };
    emit(out, &text)?;
    if reports.iter().all(TheoremReport::passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn render_text(reports: &[TheoremReport]) -> String {
    let mut s = String::new();
    for r in reports {
        s.push_str(&format!(
            "{} n={}..{} {} checked={} not_applicable={} failures={}\n",
            r.theorem_id,
            r.n_range[0],
            r.n_range[1],
            if r.passed() { "PASS" } else { "FAIL" },
            r.checked,
            r.not_applicable.len(),
            r.failures.len()
        ));
        for f in &r.failures {
            let witnesses: Vec<String> = f.witnesses.iter().map(Graph::to_flat_edge_list).collect();
            s.push_str(&format!(
                "  n={} {} {:?} expected={} observed={} witnesses=[{}]\n",
                f.n,
                f.class,
                f.kind,
                f.expected,
                f.observed,
                witnesses.join("; ")
            ));
        }
    }
    s
}

fn render_csv(reports: &[TheoremReport]) -> std::result::Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Failure::Input(e.to_string());
    w.write_record([
        "theorem_id",
        "n_lo",
        "n_hi",
        "verdict",
        "checked",
        "n",
        "class",
        "kind",
        "expected",
        "observed",
        "witnesses",
    ])
    .map_err(csv_err)?;
    for r in reports {
        let head = [
            r.theorem_id.to_string(),
            r.n_range[0].to_string(),
            r.n_range[1].to_string(),
            if r.passed() { "Pass" } else { "Fail" }.to_string(),
            r.checked.to_string(),
        ];
        if r.failures.is_empty() {
            let row: Vec<String> = head
                .iter()
                .cloned()
                .chain(std::iter::repeat_n(String::new(), 6))
                .collect();
            w.write_record(&row).map_err(csv_err)?;
        }
        for f in &r.failures {
            let witnesses: Vec<String> = f.witnesses.iter().map(Graph::to_flat_edge_list).collect();
            let row: Vec<String> = head
                .iter()
                .cloned()
                .chain([
                    f.n.to_string(),
                    f.class.to_string(),
                    serde_json::to_value(f.kind)
                        .ok()
                        .and_then(|v| v.as_str().map(str::to_string))
                        .unwrap_or_default(),
                    f.expected.to_string(),
                    f.observed.to_string(),
                    witnesses.join(";"),
                ])
                .collect();
            w.write_record(&row).map_err(csv_err)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Failure::Input(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
