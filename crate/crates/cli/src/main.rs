// === squarelab: command-line laboratory for presentation graphs
//
// Eight subcommands wire the library end to end: analyze | squares | sweep |
// explore | extremal-scan | oracle | gen | critical-lambda. Every command
// takes --format {json,csv,text}; everything randomized takes --seed and is
// byte-reproducible; parallel commands take --jobs and produce output
// independent of the worker count. Exit codes: 0 success, 1 error (single
// diagnostic line on stderr), 2 usage (from the flag parser), 3 verdict
// indeterminate because the level cap was exceeded.

mod genspec;

use std::collections::BTreeMap;
use std::io::BufRead;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use squarelab_core::explore::{
    critical_lambda, default_exploration_cap, explore_order2_traced,
    explore_square_component_traced, ExplorationOutcome, StepRecord, Verdict,
};
use squarelab_core::extremal::{extremal_scan, ScanMode};
use squarelab_core::graph6::{emit_graph6, parse_graph6};
use squarelab_core::oracle::hypergraph_index_with_limit;
use squarelab_core::randlab::{threshold_sweep, ExperimentConfig, GridParam, SweepResult};
use squarelab_core::thickness::{
    build_square_graph, default_level_cap, enumerate_induced_squares, thickness_order_with_cap,
    Order, ThicknessReport,
};
use squarelab_core::{Graph, NonEdge};

#[derive(Parser)]
#[command(
    name = "squarelab",
    version,
    about = "Thickness, hypergraph index, and threshold experiments on presentation graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Thickness verdict for one graph, or for a graph6 stream on stdin
    Analyze(AnalyzeArgs),
    /// Induced squares and square-graph component statistics
    Squares(SquaresArgs),
    /// Seeded Monte Carlo sweep of thickness verdicts over an (n, c|p) grid
    Sweep(SweepArgs),
    /// Walk a square component pair by pair from a starting square
    Explore(ExploreArgs),
    /// Scan all (or sampled) m-vertex graphs for thickness below 2m-4 edges
    ExtremalScan(ExtremalScanArgs),
    /// Hypergraph-index verdict via the exhaustive small-graph oracle
    Oracle(OracleArgs),
    /// Emit a generated graph as graph6
    Gen(GenArgs),
    /// Critical branching densities of the square exploration process
    CriticalLambda(CriticalLambdaArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

/// Graph input shared by the single-graph commands.
#[derive(Args)]
struct InputArgs {
    /// graph6 string
    #[arg(long, value_name = "G6", conflicts_with_all = ["gen", "file"])]
    g6: Option<String>,
    /// generator spec (path-of-squares:M | k2m:M | gnp:N,P,SEED | glue:SPEC@U,V+SPEC@X,Y)
    #[arg(long, value_name = "SPEC", conflicts_with = "file")]
    gen: Option<String>,
    /// edge-list file: "n m" header line, then one "u v" edge per line, 0-based
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

impl InputArgs {
    fn provided(&self) -> bool {
        self.g6.is_some() || self.gen.is_some() || self.file.is_some()
    }

    fn describe(&self) -> String {
        match (&self.g6, &self.gen, &self.file) {
            (Some(s), _, _) => s.clone(),
            (_, Some(s), _) => s.clone(),
            (_, _, Some(p)) => p.display().to_string(),
            _ => "stdin".to_string(),
        }
    }

    fn load(&self) -> anyhow::Result<Graph> {
        if let Some(s) = &self.g6 {
            Ok(parse_graph6(s)?)
        } else if let Some(spec) = &self.gen {
            Ok(genspec::build(spec)?)
        } else if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("cannot read {}", path.display()))?;
            Ok(Graph::parse_edge_list_text(&text)?)
        } else {
            bail!("no input: pass --g6, --gen, or --file (analyze also reads graph6 lines from stdin)")
        }
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Level cap for the thickness engine (default: non-edge count + n + 2)
    #[arg(long)]
    cap: Option<u32>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct SquaresArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct SweepArgs {
    /// Vertex counts, comma-separated
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    /// Scaled densities c (edge probability c/sqrt(n)), comma-separated
    #[arg(long, value_delimiter = ',')]
    c: Vec<f64>,
    /// Raw edge probabilities, comma-separated (conflicts with --c)
    #[arg(long, value_delimiter = ',')]
    p: Vec<f64>,
    /// Trials per grid point
    #[arg(long)]
    trials: Option<u64>,
    /// Master seed; per-trial seeds are derived, so results do not depend
    /// on execution order
    #[arg(long)]
    seed: Option<u64>,
    /// Level cap for the thickness engine
    #[arg(long)]
    cap: Option<u32>,
    /// Worker threads (default: all cores); any value gives identical output
    #[arg(long)]
    jobs: Option<usize>,
    /// Flat key=value config file; command-line flags override it
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct ExploreArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Starting square as its two diagonals "U,V+X,Y" (default: the first
    /// induced square in scan order)
    #[arg(long)]
    square: Option<String>,
    /// 1 walks square adjacencies only; 2 also crosses bridge pairs
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    level: u8,
    /// Stop once reached + active pairs exceed this (default: ceil(ln(n)^4))
    #[arg(long)]
    cap: Option<usize>,
    /// Include the step-by-step trace in the output
    #[arg(long)]
    trace: bool,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct ExtremalScanArgs {
    /// Number of vertices (exhaustive up to 7)
    #[arg(long)]
    m: usize,
    /// Sample this many edge sets instead of scanning exhaustively
    #[arg(long)]
    samples: Option<u64>,
    /// Seed for sampled mode
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Vertex-count limit guard for the exhaustive oracle
    #[arg(long, default_value_t = 16)]
    limit: usize,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct GenArgs {
    /// Generator spec (path-of-squares:M | k2m:M | gnp:N,P,SEED | glue:SPEC@U,V+SPEC@X,Y)
    spec: String,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct CriticalLambdaArgs {
    #[arg(long, value_enum)]
    format: Option<Format>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Squares(args) => cmd_squares(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Explore(args) => cmd_explore(args),
        Command::ExtremalScan(args) => cmd_extremal_scan(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Gen(args) => cmd_gen(args),
        Command::CriticalLambda(args) => cmd_critical_lambda(args),
    }
}

/// Run `f` on a dedicated pool of `jobs` threads, or inline on the global
/// pool when unset.
fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> anyhow::Result<T> {
    match jobs {
        None => Ok(f()),
        Some(0) => bail!("--jobs must be at least 1"),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .context("cannot build worker pool")?;
            Ok(pool.install(f))
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn rel_hyp_token(r: &ThicknessReport) -> &'static str {
    match r.rel_hyperbolic {
        Some(true) => "true",
        Some(false) => "false",
        None => "unknown",
    }
}

// --- analyze ---------------------------------------------------------------

const ANALYZE_CSV_HEADER: &str =
    "input,n,m,order,rel_hyp,divergence,t1_components,t1_max_component,t1_max_supp1";

fn analyze_json(input: &str, g: &Graph, r: &ThicknessReport) -> serde_json::Value {
    let mut obj = r.to_json();
    obj["input"] = serde_json::json!(input);
    obj["n"] = serde_json::json!(g.n());
    obj["edges"] = serde_json::json!(g.edge_count());
    obj
}

fn analyze_csv_row(input: &str, g: &Graph, r: &ThicknessReport) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{}",
        csv_field(input),
        g.n(),
        g.edge_count(),
        r.order.token(),
        rel_hyp_token(r),
        r.divergence.as_deref().unwrap_or("unknown"),
        r.t1_stats.component_count,
        r.t1_stats.max_component_size,
        r.t1_stats.max_supp1_size,
    )
}

fn analyze_text(input: &str, g: &Graph, r: &ThicknessReport) -> String {
    let mut out = format!(
        "{}: n={} edges={}\n  order: {}",
        input,
        g.n(),
        g.edge_count(),
        r.order.token()
    );
    if let Order::Indeterminate { cap } = r.order {
        out.push_str(&format!(" (undecided at level cap {cap})"));
    }
    out.push_str(&format!(
        "\n  relatively hyperbolic: {}\n  divergence: {}",
        rel_hyp_token(r),
        r.divergence.as_deref().unwrap_or("unknown")
    ));
    if let Some(w) = &r.witness {
        out.push_str(&format!(
            "\n  witness: level {}, component of {} pairs, support {} vertices",
            w.level, w.component_size, w.supp_size
        ));
    }
    out.push_str(&format!(
        "\n  square graph: {} components, largest {} pairs, largest support {}",
        r.t1_stats.component_count, r.t1_stats.max_component_size, r.t1_stats.max_supp1_size
    ));
    out
}

fn cmd_analyze(args: AnalyzeArgs) -> anyhow::Result<ExitCode> {
    let format = args.format.unwrap_or(Format::Json);
    let mut indeterminate = false;
    let mut emit = |input: &str, g: &Graph| {
        let cap = args.cap.unwrap_or_else(|| default_level_cap(g));
        let report = thickness_order_with_cap(g, cap);
        indeterminate |= matches!(report.order, Order::Indeterminate { .. });
        match format {
            Format::Json => println!("{}", analyze_json(input, g, &report)),
            Format::Csv => println!("{}", analyze_csv_row(input, g, &report)),
            Format::Text => println!("{}", analyze_text(input, g, &report)),
        }
    };
    if args.input.provided() {
        if format == Format::Csv {
            println!("{ANALYZE_CSV_HEADER}");
        }
        let g = args.input.load()?;
        emit(&args.input.describe(), &g);
    } else {
        // batch mode: one graph6 string per stdin line
        if format == Format::Csv {
            println!("{ANALYZE_CSV_HEADER}");
        }
        let stdin = std::io::stdin();
        let mut any = false;
        for (i, line) in stdin.lock().lines().enumerate() {
            let line = line.context("reading stdin")?;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            any = true;
            let g = parse_graph6(trimmed).map_err(|e| anyhow!("stdin line {}: {e}", i + 1))?;
            emit(trimmed, &g);
        }
        if !any {
            bail!("no input: pass --g6, --gen, or --file, or pipe graph6 lines to stdin");
        }
    }
    Ok(if indeterminate { ExitCode::from(3) } else { ExitCode::SUCCESS })
}

// --- squares ---------------------------------------------------------------

fn cmd_squares(args: SquaresArgs) -> anyhow::Result<ExitCode> {
    let g = args.input.load()?;
    let squares = enumerate_induced_squares(&g);
    let mut sq = build_square_graph(&g);
    let stats = sq.stats();
    match args.format.unwrap_or(Format::Json) {
        Format::Json => {
            let list: Vec<serde_json::Value> = squares
                .iter()
                .map(|(a, b)| serde_json::json!([[a.u, a.v], [b.u, b.v]]))
                .collect();
            println!(
                "{}",
                serde_json::json!({
                    "input": args.input.describe(),
                    "n": g.n(),
                    "edges": g.edge_count(),
                    "square_count": squares.len(),
                    "t1_stats": {
                        "component_count": stats.component_count,
                        "max_component_size": stats.max_component_size,
                        "max_supp1_size": stats.max_supp1_size,
                    },
                    "squares": list,
                })
            );
        }
        Format::Csv => {
            println!("u,v,x,y");
            for (a, b) in &squares {
                println!("{},{},{},{}", a.u, a.v, b.u, b.v);
            }
        }
        Format::Text => {
            println!(
                "{}: n={} edges={} squares={} | square graph: {} components, largest {} pairs, largest support {}",
                args.input.describe(),
                g.n(),
                g.edge_count(),
                squares.len(),
                stats.component_count,
                stats.max_component_size,
                stats.max_supp1_size,
            );
            for (a, b) in &squares {
                println!("{{{},{}}} x {{{},{}}}", a.u, a.v, b.u, b.v);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// --- sweep -----------------------------------------------------------------

const SWEEP_CONFIG_KEYS: [&str; 8] = ["n", "c", "p", "trials", "seed", "cap", "jobs", "format"];

fn parse_sweep_config(path: &PathBuf) -> anyhow::Result<BTreeMap<String, String>> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read config {}", path.display()))?;
    let mut map = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| anyhow!("config line {}: expected key=value, got `{line}`", i + 1))?;
        let key = key.trim();
        if !SWEEP_CONFIG_KEYS.contains(&key) {
            bail!("config line {}: unknown key `{key}`", i + 1);
        }
        map.insert(key.to_string(), value.trim().to_string());
    }
    Ok(map)
}

fn parse_list<T: std::str::FromStr>(key: &str, value: &str) -> anyhow::Result<Vec<T>> {
    value
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<T>()
                .map_err(|_| anyhow!("config {key}: cannot parse `{}`", s.trim()))
        })
        .collect()
}

fn cmd_sweep(args: SweepArgs) -> anyhow::Result<ExitCode> {
    let config = match &args.config {
        Some(path) => parse_sweep_config(path)?,
        None => BTreeMap::new(),
    };
    let from_cfg = |key: &str| config.get(key).map(String::as_str);
    let ns = if !args.n.is_empty() {
        args.n.clone()
    } else if let Some(v) = from_cfg("n") {
        parse_list("n", v)?
    } else {
        bail!("--n is required (or supply n= in --config)")
    };
    let cs: Vec<f64> = if !args.c.is_empty() {
        args.c.clone()
    } else if let Some(v) = from_cfg("c") {
        parse_list("c", v)?
    } else {
        Vec::new()
    };
    let ps: Vec<f64> = if !args.p.is_empty() {
        args.p.clone()
    } else if let Some(v) = from_cfg("p") {
        parse_list("p", v)?
    } else {
        Vec::new()
    };
    if !cs.is_empty() && !ps.is_empty() {
        bail!("conflicting --p and --c: give the grid in exactly one parameterization");
    }
    if cs.is_empty() && ps.is_empty() {
        bail!("give the grid with --c or --p (or in --config)");
    }
    let parse_scalar = |key: &str| -> anyhow::Result<Option<u64>> {
        from_cfg(key)
            .map(|v| v.parse::<u64>().map_err(|_| anyhow!("config {key}: cannot parse `{v}`")))
            .transpose()
    };
    let trials = match args.trials {
        Some(t) => t,
        None => parse_scalar("trials")?.unwrap_or(10),
    };
    let seed = match args.seed {
        Some(s) => s,
        None => parse_scalar("seed")?.unwrap_or(0),
    };
    let cap = match args.cap {
        Some(c) => Some(c),
        None => parse_scalar("cap")?.map(|c| c as u32),
    };
    let jobs = match args.jobs {
        Some(j) => Some(j),
        None => parse_scalar("jobs")?.map(|j| j as usize),
    };
    let format = match args.format {
        Some(f) => f,
        None => match from_cfg("format") {
            Some("json") => Format::Json,
            Some("csv") => Format::Csv,
            Some("text") => Format::Text,
            Some(other) => bail!("config format: unknown value `{other}`"),
            None => Format::Csv,
        },
    };
    let grid: Vec<GridParam> = if !cs.is_empty() {
        cs.iter().map(|&c| GridParam::C(c)).collect()
    } else {
        ps.iter().map(|&p| GridParam::P(p)).collect()
    };
    let cfg = ExperimentConfig {
        ns,
        grid,
        trials,
        master_seed: seed,
        level_cap: cap,
    };
    let result: SweepResult = with_jobs(jobs, || threshold_sweep(&cfg))??;
    match format {
        Format::Csv => print!("{}", result.to_csv()),
        Format::Json => println!("{}", result.to_json()),
        Format::Text => {
            for a in result.aggregates() {
                println!(
                    "n={} c={} p={} trials={} rel_hyp={:.3} order<=2={:.3} inf={:.3} cap={:.3} max_t1_comp={} max_supp1={}",
                    a.n,
                    a.c,
                    a.p,
                    a.trials,
                    a.frac_rel_hyperbolic,
                    a.frac_order_at_most(2),
                    a.frac_infinite,
                    a.frac_indeterminate,
                    a.max_t1_component_max,
                    a.max_supp1_max,
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// --- explore ---------------------------------------------------------------

fn parse_square_flag(g: &Graph, s: &str) -> anyhow::Result<((usize, usize), (usize, usize))> {
    let err = || anyhow!("--square must be U,V+X,Y (two non-edge diagonals), got `{s}`");
    let (left, right) = s.split_once('+').ok_or_else(err)?;
    let pair = |part: &str| -> anyhow::Result<(usize, usize)> {
        let (a, b) = part.split_once(',').ok_or_else(err)?;
        Ok((
            a.trim().parse().map_err(|_| err())?,
            b.trim().parse().map_err(|_| err())?,
        ))
    };
    let (d1, d2) = (pair(left)?, pair(right)?);
    // validate early for a friendly message; explore re-checks squareness
    NonEdge::new(g, d1.0, d1.1)?;
    NonEdge::new(g, d2.0, d2.1)?;
    Ok((d1, d2))
}

fn verdict_token(v: Verdict) -> &'static str {
    match v {
        Verdict::LargeStop => "large_stop",
        Verdict::ExtinctionStop => "extinction_stop",
    }
}

fn pairs_json(pairs: &[NonEdge]) -> serde_json::Value {
    serde_json::Value::Array(
        pairs
            .iter()
            .map(|f| serde_json::json!([f.u, f.v]))
            .collect(),
    )
}

fn trace_json(trace: &[StepRecord]) -> serde_json::Value {
    serde_json::Value::Array(
        trace
            .iter()
            .map(|s| {
                serde_json::json!({
                    "t": s.t,
                    "selected": [s.selected.u, s.selected.v],
                    "partner": [s.partner.u, s.partner.v],
                    "z": s.z,
                    "activated": pairs_json(&s.activated),
                    "bridges": s.bridges.iter().map(|(a, b)| {
                        serde_json::json!([[a.u, a.v], [b.u, b.v]])
                    }).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

fn cmd_explore(args: ExploreArgs) -> anyhow::Result<ExitCode> {
    let g = args.input.load()?;
    let seed_square = match &args.square {
        Some(s) => parse_square_flag(&g, s)?,
        None => {
            let squares = enumerate_induced_squares(&g);
            let (d1, d2) = *squares
                .first()
                .ok_or_else(|| anyhow!("graph has no induced square to start from"))?;
            (
                (d1.u as usize, d1.v as usize),
                (d2.u as usize, d2.v as usize),
            )
        }
    };
    let cap = args.cap.unwrap_or_else(|| default_exploration_cap(g.n()));
    let run = || -> squarelab_core::Result<(ExplorationOutcome, Vec<StepRecord>)> {
        if args.level == 2 {
            explore_order2_traced(&g, seed_square, cap)
        } else {
            explore_square_component_traced(&g, seed_square, cap)
        }
    };
    let (outcome, trace) = with_jobs(args.jobs, run)??;
    match args.format.unwrap_or(Format::Json) {
        Format::Json => {
            let mut obj = serde_json::json!({
                "input": args.input.describe(),
                "level": args.level,
                "cap": cap,
                "seed_square": [[seed_square.0.0, seed_square.0.1], [seed_square.1.0, seed_square.1.1]],
                "verdict": verdict_token(outcome.verdict),
                "steps": outcome.steps,
                "discovered_vertices": outcome.discovered,
                "pairs_seen": pairs_json(&outcome.pairs_seen),
            });
            if args.trace {
                obj["trace"] = trace_json(&trace);
            }
            println!("{obj}");
        }
        Format::Csv => {
            println!("u,v");
            for f in &outcome.pairs_seen {
                println!("{},{}", f.u, f.v);
            }
        }
        Format::Text => {
            println!(
                "{}: level {} exploration from {{{},{}}}x{{{},{}}}: {} after {} steps, {} pairs, {} vertices discovered (cap {})",
                args.input.describe(),
                args.level,
                seed_square.0.0,
                seed_square.0.1,
                seed_square.1.0,
                seed_square.1.1,
                verdict_token(outcome.verdict),
                outcome.steps,
                outcome.pairs_seen.len(),
                outcome.discovered,
                cap,
            );
            if args.trace {
                for s in &trace {
                    println!(
                        "  step {}: select {{{},{}}} (partner {{{},{}}}), {} new vertices, {} activated, {} bridge pairs",
                        s.t, s.selected.u, s.selected.v, s.partner.u, s.partner.v,
                        s.z.len(), s.activated.len(), s.bridges.len() * 2,
                    );
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// --- extremal-scan ----------------------------------------------------------

fn cmd_extremal_scan(args: ExtremalScanArgs) -> anyhow::Result<ExitCode> {
    let mode = match args.samples {
        Some(samples) => ScanMode::Sampled {
            samples,
            seed: args.seed.unwrap_or(0),
        },
        None => ScanMode::Exhaustive,
    };
    let report = with_jobs(args.jobs, || extremal_scan(args.m, mode))??;
    match args.format.unwrap_or(Format::Json) {
        Format::Json => println!("{}", serde_json::to_value(&report)?),
        Format::Csv => {
            println!("m,graphs_scanned,thick_count,min_edges_among_thick,witness");
            for w in &report.extremal_witnesses {
                println!(
                    "{},{},{},{},{}",
                    report.m,
                    report.graphs_scanned,
                    report.thick_count,
                    report
                        .min_edges_among_thick
                        .map_or(String::new(), |e| e.to_string()),
                    csv_field(w),
                );
            }
        }
        Format::Text => {
            println!(
                "m={}: scanned {} graphs, {} thick, min thick edges {}, {} extremal witnesses, {} violations",
                report.m,
                report.graphs_scanned,
                report.thick_count,
                report
                    .min_edges_among_thick
                    .map_or("-".to_string(), |e| e.to_string()),
                report.extremal_witnesses.len(),
                report.violations.len(),
            );
            for w in &report.extremal_witnesses {
                println!("  witness {w}");
            }
            for v in &report.violations {
                println!("  VIOLATION {v}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// --- oracle ------------------------------------------------------------------

fn cmd_oracle(args: OracleArgs) -> anyhow::Result<ExitCode> {
    let g = args.input.load()?;
    let order = hypergraph_index_with_limit(&g, args.limit)?;
    match args.format.unwrap_or(Format::Json) {
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "input": args.input.describe(),
                "n": g.n(),
                "edges": g.edge_count(),
                "order": order.token(),
            })
        ),
        Format::Csv => {
            println!("input,n,m,order");
            println!(
                "{},{},{},{}",
                csv_field(&args.input.describe()),
                g.n(),
                g.edge_count(),
                order.token()
            );
        }
        Format::Text => println!(
            "{}: hypergraph index {}",
            args.input.describe(),
            order.token()
        ),
    }
    Ok(ExitCode::SUCCESS)
}

// --- gen ----------------------------------------------------------------------

fn cmd_gen(args: GenArgs) -> anyhow::Result<ExitCode> {
    let g = genspec::build(&args.spec)?;
    let g6 = emit_graph6(&g)?;
    match args.format.unwrap_or(Format::Text) {
        Format::Text => println!("{g6}"),
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "spec": args.spec,
                "g6": g6,
                "n": g.n(),
                "edges": g.edge_count(),
            })
        ),
        Format::Csv => {
            println!("spec,g6,n,m");
            println!(
                "{},{},{},{}",
                csv_field(&args.spec),
                csv_field(&g6),
                g.n(),
                g.edge_count()
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

// --- critical-lambda ------------------------------------------------------------

fn cmd_critical_lambda(args: CriticalLambdaArgs) -> anyhow::Result<ExitCode> {
    let unmodified = critical_lambda(false);
    let modified = critical_lambda(true);
    match args.format.unwrap_or(Format::Json) {
        Format::Json => println!(
            "{}",
            serde_json::json!({ "unmodified": unmodified, "modified": modified })
        ),
        Format::Csv => {
            println!("unmodified,modified");
            println!("{unmodified},{modified}");
        }
        Format::Text => {
            println!("critical density (square process):   {unmodified:.9}");
            println!("critical density (with bridge term): {modified:.9}");
        }
    }
    Ok(ExitCode::SUCCESS)
}
