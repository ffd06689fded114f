use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use cyclemax::bounds::{BoundReport, Real};
use cyclemax::constructions::{
    construct_cnm, construct_gn, construct_hn, construct_lower_bound_graph, MultiCycleSpec,
};
use cyclemax::counting::{count_cycles, count_cycles_multi, count_paths, count_paths_multi};
use cyclemax::graph::{parse_graph6, parse_multigraph, to_graph6, to_multi_text};
use cyclemax::reduction::reduce_to_bounded_degree;
use cyclemax::search::{extremal_search, verify_bounds_on_corpus, SearchOptions};
use cyclemax::{Error, Multigraph, SimpleGraph};
use num_rational::BigRational;

/// Cycle counting, cycle-count bounds, extremal constructions and search.
#[derive(Parser, Debug)]
#[command(name = "cyclemax", version)]
struct Cli {
    /// Input graph format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Graph6)]
    format: Format,
    /// Output style.
    #[arg(long, value_enum, global = true, default_value_t = Output::Kv)]
    output: Output,
    /// Read the graph from this file instead of the argument or stdin.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Worker threads for counting and search (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Seed for randomized selection fallbacks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Multi,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Kv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count simple cycles.
    Count { graph: Option<String> },
    /// Count simple paths between two vertices.
    CountPaths {
        s: usize,
        t: usize,
        graph: Option<String>,
    },
    /// Evaluate every applicable cycle-count bound.
    Bounds { graph: Option<String> },
    /// Emit a construction as graph6 (simple) or MULTI text (multigraph).
    Construct {
        #[command(subcommand)]
        which: Construction,
    },
    /// Apply surgery until the maximum degree is at most 11.
    Reduce { graph: Option<String> },
    /// Find the maximum cycle count over graphs with a given edge count.
    Search {
        #[arg(long)]
        edges: usize,
        /// Disable the degree prunes.
        #[arg(long)]
        no_prune: bool,
    },
    /// Check all bounds on every connected graph up to a vertex count.
    Verify {
        #[arg(long, default_value_t = 7)]
        nmax: usize,
    },
}

#[derive(Subcommand, Debug)]
enum Construction {
    /// The ladder-like graph H_n.
    Hn { n: usize },
    /// H_n closed into a ring, with 2n+1 vertices and 5n+1 edges.
    Gn { n: usize },
    /// A graph with exactly m edges built from the largest fitting G_n.
    Lb { m: usize },
    /// The multicycle C_{n,m}.
    Cnm { n: usize, m: u64 },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Limit(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Limit(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(s) | Failure::Limit(s) => s,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Capacity(_)
            | Error::Precondition(_)
            | Error::StepCapExceeded(_)
            | Error::Invariant(_) => Failure::Limit(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

enum Graph {
    Simple(SimpleGraph),
    Multi(Multigraph),
}

struct Report {
    style: Output,
    lines: Vec<(String, String)>,
}

impl Report {
    fn new(style: Output) -> Self {
        Report { style, lines: Vec::new() }
    }

    fn put(&mut self, key: &str, value: impl ToString) {
        self.lines.push((key.to_string(), value.to_string()));
    }

    fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.lines {
            match self.style {
                Output::Kv => out.push_str(&format!("{k}={v}\n")),
                Output::Text => out.push_str(&format!("{k}: {v}\n")),
            }
        }
        out
    }
}

fn read_source(cli: &Cli, inline: Option<&str>) -> Result<String, Failure> {
    if let Some(text) = inline {
        return Ok(text.to_string());
    }
    if let Some(path) = &cli.input {
        return std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())));
    }
    let mut text = String::new();
    io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| Failure::Input(format!("<stdin>: {e}")))?;
    Ok(text)
}

fn origin(cli: &Cli, inline: Option<&str>) -> String {
    match (inline, &cli.input) {
        (Some(_), _) => "<argument>".into(),
        (None, Some(p)) => p.display().to_string(),
        (None, None) => "<stdin>".into(),
    }
}

fn load(cli: &Cli, inline: Option<&str>) -> Result<Graph, Failure> {
    let text = read_source(cli, inline)?;
    let parsed = match cli.format {
        Format::Graph6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .unwrap_or("");
            let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
            parse_graph6(line).map(Graph::Simple)
        }
        Format::Multi => parse_multigraph(&text).map(Graph::Multi),
    };
    parsed.map_err(|e| Failure::Input(format!("{}: {e}", origin(cli, inline))))
}

fn load_simple(cli: &Cli, inline: Option<&str>, what: &str) -> Result<SimpleGraph, Failure> {
    match load(cli, inline)? {
        Graph::Simple(g) => Ok(g),
        Graph::Multi(_) => Err(Failure::Input(format!("{what} needs a simple graph in graph6"))),
    }
}

fn upper(r: &Real) -> String {
    r.upper_decimal(10)
}

fn decimal(q: &BigRational) -> String {
    Real::exact(q.clone()).upper_decimal(10)
}

fn bounds_report(b: &BoundReport, out: &mut Report) {
    let na = || "n/a".to_string();
    out.put("n", b.n);
    out.put("m", b.m);
    out.put("delta", b.delta);
    out.put("components", b.components);
    let (lo, hi) = match &b.ahrens {
        Some((lo, hi)) => (lo.to_string(), hi.to_string()),
        None => (na(), na()),
    };
    out.put("bound.ahrens.lo", lo);
    out.put("bound.ahrens.hi", hi);
    out.put("bound.at", b.aldred_thomassen.as_ref().map_or_else(na, decimal));
    out.put("bound.new", b.new_bound.as_ref().map_or_else(na, upper));
    out.put("bound.corollary", upper(&b.corollary));
    out.put("bound.vertex", b.vertex_bound.as_ref().map_or_else(na, upper));
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let mut out = Report::new(cli.output);
    match &cli.command {
        Command::Count { graph } => {
            let start = Instant::now();
            let c = match load(cli, graph.as_deref())? {
                Graph::Simple(g) => count_cycles(&g),
                Graph::Multi(g) => count_cycles_multi(&g),
            };
            eprintln!("counted in {:.3}s", start.elapsed().as_secs_f64());
            out.put("cycles", c);
        }
        Command::CountPaths { s, t, graph } => {
            let p = match load(cli, graph.as_deref())? {
                Graph::Simple(g) => count_paths(&g, *s, *t)?,
                Graph::Multi(g) => count_paths_multi(&g, *s, *t)?,
            };
            out.put("paths", p);
        }
        Command::Bounds { graph } => {
            let b = match load(cli, graph.as_deref())? {
                Graph::Simple(g) => BoundReport::for_graph(&g)?,
                Graph::Multi(g) => BoundReport::for_multigraph(&g)?,
            };
            bounds_report(&b, &mut out);
        }
        Command::Construct { which } => {
            return Ok(match which {
                Construction::Hn { n } => to_graph6(&construct_hn(*n)?) + "\n",
                Construction::Gn { n } => to_graph6(&construct_gn(*n)?) + "\n",
                Construction::Lb { m } => to_graph6(&construct_lower_bound_graph(*m)?) + "\n",
                Construction::Cnm { n, m } => {
                    to_multi_text(&construct_cnm(&MultiCycleSpec::new(*n, *m)?)?)
                }
            });
        }
        Command::Reduce { graph } => {
            let g = load_simple(cli, graph.as_deref(), "reduce")?;
            let trace = reduce_to_bounded_degree(&g, cli.seed)?;
            out.put("steps", trace.steps.len());
            for (i, step) in trace.steps.iter().enumerate() {
                let key = format!("step.{}", i + 1);
                out.put(&format!("{key}.u"), step.u);
                out.put(&format!("{key}.degree"), step.degree);
                out.put(&format!("{key}.deleted"), join(&step.deleted_vertices()));
                let parts: Vec<String> = step.part_vertices().iter().map(|p| join(p)).collect();
                out.put(&format!("{key}.parts"), parts.join("|"));
                out.put(&format!("{key}.before"), &step.before);
                out.put(&format!("{key}.after"), &step.after);
            }
            out.put("max_degree", trace.graph.max_degree());
            out.put("graph", to_graph6(&trace.graph));
        }
        Command::Search { edges, no_prune } => {
            let opts = if *no_prune {
                SearchOptions::unpruned()
            } else {
                SearchOptions::default()
            };
            let r = extremal_search(*edges, &opts)?;
            eprintln!("searched in {:.3}s", r.seconds);
            out.put("m", r.m);
            out.put("cmax", &r.cmax);
            out.put("witnesses", r.witness_graph6().join(","));
            out.put("nodes", r.nodes_examined);
            out.put("levels", join(&r.level_sizes));
            out.put("n_range", format!("{}..{}", r.n_range_searched.0, r.n_range_searched.1));
            if let Some(all) = &r.all_graphs_max {
                out.put("cmax.all_graphs", all);
            }
        }
        Command::Verify { nmax } => {
            let start = Instant::now();
            let r = verify_bounds_on_corpus(*nmax)?;
            eprintln!("verified in {:.3}s", start.elapsed().as_secs_f64());
            out.put("graphs", r.graphs_checked);
            out.put("violations", r.violations.len());
            for t in &r.tightness {
                out.put(&format!("tightness.{}", t.bound), format!("{:.6}", t.max_ratio));
            }
            if !r.violations.is_empty() {
                print!("{}", out.render());
                return Err(Failure::Limit(format!("{} bound violations", r.violations.len())));
            }
        }
    }
    Ok(out.render())
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global() {
            eprintln!("cyclemax: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(text) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("cyclemax: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
