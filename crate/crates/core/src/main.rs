use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use packcol::closed_form::{construct_coloring, FamilyQuery, GraphFamily};
use packcol::coloring::{graph_violation, oriented_violation};
use packcol::dot::to_dot;
use packcol::io::{self, GraphFile};
use packcol::oriented::{
    classify_oriented_cycle_corona, color_oriented_tree, pcn_oriented_cycle, pcn_oriented_path,
    pcn_oriented_path_corona,
};
use packcol::pattern::{is_compatible, is_valid_pattern, parse_pattern, ApplyOptions};
use packcol::solver::{packing_chromatic_number_with, PcnOutcome, SearchBudget, SearchOptions};
use packcol::verify::{self, random_orientation, Status, VerifyConfig, DEFAULT_SEED};
use packcol::{weak_directed_distances, distances, Coloring, Error, Graph, OrientedGraph};

// Closed pipes (e.g. `| head`) are not an error.
macro_rules! out {
    ($($t:tt)*) => {{
        let _ = write!(std::io::stdout().lock(), $($t)*);
    }};
}

macro_rules! outln {
    ($($t:tt)*) => {{
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

const EXIT_PROPERTY: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INDETERMINATE: u8 = 3;

#[derive(Parser)]
#[command(name = "packcol", version, about = "Packing colorings of paths, cycles and their coronae")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct BudgetArgs {
    /// Largest color the search may use.
    #[arg(long)]
    max_color: Option<u32>,
    /// Search node limit.
    #[arg(long)]
    node_limit: Option<u64>,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    time_limit: Option<f64>,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

impl BudgetArgs {
    fn budget(&self) -> SearchBudget {
        let mut b = SearchBudget::default();
        if let Some(k) = self.max_color {
            b.max_color = k;
        }
        if self.node_limit.is_some() {
            b.node_limit = self.node_limit;
        }
        b.time_limit = self.time_limit.map(Duration::from_secs_f64);
        b
    }
}

#[derive(Args)]
struct OrientArgs {
    /// Orient the graph.
    #[arg(long)]
    oriented: bool,
    /// One 0/1 flag per edge in generation order; 1 reverses the edge.
    #[arg(long)]
    dirs: Option<String>,
    /// Seed for a random orientation when --dirs is absent.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a family graph.
    Gen {
        family: GraphFamily,
        n: usize,
        p: Option<usize>,
        #[command(flatten)]
        orient: OrientArgs,
    },
    /// Exact packing chromatic number of a graph file (`-` reads stdin).
    Pcn {
        graph: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Check a coloring against a graph.
    Check { graph: String, coloring: String },
    /// Print a packing coloring of a family graph or of a tree file.
    Color {
        /// path, cycle, path-corona, cycle-corona or tree
        family: String,
        n: Option<usize>,
        p: Option<usize>,
        /// Graph file to color instead of generating one.
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        orient: OrientArgs,
    },
    /// Pattern tools.
    Pattern {
        #[command(subcommand)]
        cmd: PatternCmd,
    },
    /// Run a verification suite (`all` runs every suite).
    Verify {
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Print every grid point, not only failures.
        #[arg(long, short)]
        verbose: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Graphviz export.
    ExportDot { graph: String, coloring: Option<String> },
}

#[derive(Args)]
struct PatternOpts {
    /// Pendants per spine vertex.
    #[arg(long, default_value_t = 1)]
    p: usize,
    /// Pendant colors for 1-tokens written without a list, e.g. 234.
    #[arg(long)]
    pendants: Option<String>,
    /// Use the first p entries of longer pendant lists.
    #[arg(long)]
    prefix: bool,
}

impl PatternOpts {
    fn options(&self) -> anyhow::Result<ApplyOptions> {
        let default_pendants = match &self.pendants {
            Some(s) => Some(
                s.chars()
                    .map(|c| c.to_digit(10).filter(|&d| d > 0).map(|d| d as u8))
                    .collect::<Option<Vec<u8>>>()
                    .with_context(|| format!("bad pendant list {s:?}"))?,
            ),
            None => None,
        };
        Ok(ApplyOptions { default_pendants, pendant_prefix: self.prefix })
    }
}

#[derive(Subcommand)]
enum PatternCmd {
    /// Is the pattern a packing coloring of its natural graph?
    Validate {
        pattern: String,
        #[command(flatten)]
        opts: PatternOpts,
    },
    /// Is the linear pattern `v` compatible with the circular pattern `u`?
    Compatible {
        u: String,
        v: String,
        #[command(flatten)]
        opts: PatternOpts,
    },
}

/// A command outcome other than success.
#[derive(Debug)]
enum Fail {
    Property(String),
    Input(anyhow::Error),
    Indeterminate(String),
}

impl From<anyhow::Error> for Fail {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast_ref::<Error>() {
            Some(Error::Indeterminate) => Fail::Indeterminate(e.to_string()),
            _ => Fail::Input(e),
        }
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::from(anyhow::Error::from(e))
    }
}

fn read_input(path: &str) -> anyhow::Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn read_graph(path: &str) -> anyhow::Result<GraphFile> {
    io::parse_graph(&read_input(path)?).with_context(|| format!("parsing {path}"))
}

fn family_graph(family: GraphFamily, n: usize, p: Option<usize>) -> anyhow::Result<(FamilyQuery, Graph)> {
    let p = p.unwrap_or(if family.is_corona() { 1 } else { 0 });
    let q = FamilyQuery::new(family, n, p)?;
    Ok((q, q.graph()?))
}

fn orientation(g: &Graph, o: &OrientArgs) -> anyhow::Result<OrientedGraph> {
    match &o.dirs {
        Some(d) => Ok(io::orient_family(g, &io::parse_bits(d)?)?),
        None => Ok(random_orientation(g, &mut ChaCha8Rng::seed_from_u64(o.seed))),
    }
}

fn cmd_gen(family: GraphFamily, n: usize, p: Option<usize>, o: &OrientArgs) -> Result<(), Fail> {
    let (_, g) = family_graph(family, n, p)?;
    if o.oriented || o.dirs.is_some() {
        out!("{}", io::write_oriented(&orientation(&g, o)?));
    } else {
        out!("{}", io::write_graph(&g));
    }
    Ok(())
}

fn cmd_pcn(path: &str, b: &BudgetArgs) -> Result<(), Fail> {
    let f = read_graph(path)?;
    let dm = match &f {
        GraphFile::Undirected(g) => distances(g),
        GraphFile::Oriented(og) => weak_directed_distances(og),
    };
    let opts = SearchOptions { threads: b.threads, deterministic: true };
    match packing_chromatic_number_with(&dm, &b.budget(), &opts) {
        PcnOutcome::Exact { k, witness } => {
            outln!("pcn={k}");
            out!("{}", io::write_coloring(&witness));
            Ok(())
        }
        PcnOutcome::Indeterminate { lower, upper } => {
            outln!("pcn in {lower}..={upper}");
            Err(Fail::Indeterminate(format!("search budget exhausted, pcn in {lower}..={upper}")))
        }
    }
}

fn cmd_check(graph: &str, coloring: &str) -> Result<(), Fail> {
    let f = read_graph(graph)?;
    let col = io::parse_coloring(&read_input(coloring)?, Some(f.vertex_count()))
        .with_context(|| format!("parsing {coloring}"))?;
    let v = match &f {
        GraphFile::Undirected(g) => graph_violation(g, &col)?,
        GraphFile::Oriented(og) => oriented_violation(og, &col)?,
    };
    match v {
        None => {
            outln!("valid packing {}-coloring", col.max_color());
            Ok(())
        }
        Some(v) => {
            outln!("invalid: {v}");
            Err(Fail::Property(String::new()))
        }
    }
}

fn color_oriented(og: &OrientedGraph, tree: bool) -> anyhow::Result<Coloring> {
    if tree {
        return Ok(color_oriented_tree(og)?);
    }
    let layout = og.base().layout().copied().context("oriented input is not a path, cycle or corona of one")?;
    use packcol::Family::*;
    Ok(match (layout.family, layout.p) {
        (Path, 0) => pcn_oriented_path(og)?.1,
        (Cycle, 0) => pcn_oriented_cycle(og)?.1,
        (Path, _) => pcn_oriented_path_corona(og)?.1,
        (Cycle, _) => {
            let (c, w) = classify_oriented_cycle_corona(og)?;
            eprintln!("value {} ({})", c.value, c.reason);
            w
        }
    })
}

fn cmd_color(
    family: &str,
    n: Option<usize>,
    p: Option<usize>,
    input: Option<&PathBuf>,
    o: &OrientArgs,
) -> Result<(), Fail> {
    let tree = family == "tree";
    let col = match input {
        Some(path) => {
            let f = read_graph(path.to_str().context("non-UTF-8 path")?)?;
            match f {
                GraphFile::Oriented(og) => color_oriented(&og, tree)?,
                GraphFile::Undirected(g) if o.oriented || o.dirs.is_some() => {
                    let og = if tree {
                        random_orientation(&g, &mut ChaCha8Rng::seed_from_u64(o.seed))
                    } else {
                        orientation(&g, o)?
                    };
                    out!("{}", io::write_oriented(&og).lines().map(|l| format!("# {l}\n")).collect::<String>());
                    color_oriented(&og, tree)?
                }
                GraphFile::Undirected(g) => {
                    let l = g.layout().context("undirected input is not a path, cycle or corona of one")?;
                    let fam = match (l.family, l.p) {
                        (packcol::Family::Path, 0) => GraphFamily::Path,
                        (packcol::Family::Cycle, 0) => GraphFamily::Cycle,
                        (packcol::Family::Path, _) => GraphFamily::PathCorona,
                        (packcol::Family::Cycle, _) => GraphFamily::CycleCorona,
                    };
                    construct_coloring(&FamilyQuery::new(fam, l.n, l.p)?)?
                }
            }
        }
        None if tree => return Err(Fail::Input(anyhow::anyhow!("color tree needs --input"))),
        None => {
            let family: GraphFamily = family.parse()?;
            let n = n.context("missing spine length n")?;
            let (q, g) = family_graph(family, n, p)?;
            if o.oriented || o.dirs.is_some() {
                let og = orientation(&g, o)?;
                out!("{}", io::write_oriented(&og).lines().map(|l| format!("# {l}\n")).collect::<String>());
                color_oriented(&og, false)?
            } else {
                construct_coloring(&q)?
            }
        }
    };
    outln!("# colors={}", col.max_color());
    out!("{}", io::write_coloring(&col));
    Ok(())
}

fn cmd_pattern(cmd: &PatternCmd) -> Result<(), Fail> {
    let (ok, what) = match cmd {
        PatternCmd::Validate { pattern, opts } => {
            let pat = parse_pattern(pattern)?;
            (is_valid_pattern(&pat, opts.p, &opts.options()?), "valid")
        }
        PatternCmd::Compatible { u, v, opts } => {
            let (u, v) = (parse_pattern(u)?, parse_pattern(v)?);
            (is_compatible(&u, &v, opts.p, &opts.options()?), "compatible")
        }
    };
    if ok {
        outln!("{what}");
        Ok(())
    } else {
        outln!("not {what}");
        Err(Fail::Property(String::new()))
    }
}

fn cmd_verify(suite: &str, max_n: Option<usize>, seed: u64, verbose: bool, b: &BudgetArgs) -> Result<(), Fail> {
    let cfg = VerifyConfig { max_n, seed, budget: b.budget(), threads: b.threads };
    let reports = verify::run(suite, &cfg)?;
    let (mut failed, mut indet) = (0, 0);
    for r in &reports {
        for p in &r.points {
            if verbose || p.status != Status::Pass {
                outln!("{} {}: {}", r.id, p.label, p.status);
            }
        }
        let pass = r.points.len() - r.failures() - r.indeterminate();
        outln!(
            "{}: {} ({pass}/{} pass, {} fail, {} indeterminate)",
            r.id,
            r.title,
            r.points.len(),
            r.failures(),
            r.indeterminate()
        );
        failed += r.failures();
        indet += r.indeterminate();
    }
    if failed > 0 {
        Err(Fail::Property(format!("{failed} grid points failed")))
    } else if indet > 0 {
        Err(Fail::Indeterminate(format!("{indet} grid points indeterminate")))
    } else {
        Ok(())
    }
}

fn cmd_export_dot(graph: &str, coloring: Option<&str>) -> Result<(), Fail> {
    let f = read_graph(graph)?;
    let col = match coloring {
        Some(c) => Some(io::parse_coloring(&read_input(c)?, Some(f.vertex_count())).with_context(|| format!("parsing {c}"))?),
        None => None,
    };
    out!("{}", to_dot(&f, col.as_ref()));
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    let r = match &cli.cmd {
        Cmd::Gen { family, n, p, orient } => cmd_gen(*family, *n, *p, orient),
        Cmd::Pcn { graph, budget } => cmd_pcn(graph, budget),
        Cmd::Check { graph, coloring } => cmd_check(graph, coloring),
        Cmd::Color { family, n, p, input, orient } => cmd_color(family, *n, *p, input.as_ref(), orient),
        Cmd::Pattern { cmd } => cmd_pattern(cmd),
        Cmd::Verify { suite, max_n, seed, verbose, budget } => cmd_verify(suite, *max_n, *seed, *verbose, budget),
        Cmd::ExportDot { graph, coloring } => cmd_export_dot(graph, coloring.as_deref()),
    };
    match r {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Property(m)) => {
            if !m.is_empty() {
                eprintln!("{m}");
            }
            ExitCode::from(EXIT_PROPERTY)
        }
        Err(Fail::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Fail::Indeterminate(m)) => {
            eprintln!("indeterminate: {m}");
            ExitCode::from(EXIT_INDETERMINATE)
        }
    }
}
