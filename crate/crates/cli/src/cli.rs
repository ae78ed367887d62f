//! Argument parsing and subcommand dispatch for `ld`.
//!
//! Every result is printed as `key=value` lines. Human mode (the default)
//! interleaves `# ` commentary, which `--machine` drops. Exit status is 0 on
//! success, 1 when a verification fails and 2 for usage or input errors.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use locdom::colour::{
    build_colour_graph, check_forced_bounds, colour_edge_counts, two_edge_subgraph,
    verify_structure, EdgeSelection,
};
use locdom::forced::{classify_by_characterization, classify_oracle};
use locdom::generators::{
    broom, cycle, min_void_extremal, path, random_connected, sat_reduction, star, verify_reduction,
};
use locdom::paths::{brute_count, c_closed_form, CountTable, STANDARD_TERMS};
use locdom::solver::enumerate_minimum_ld_codes;
use locdom::{Graph, VertexSet};
use thiserror::Error;

use crate::format::{
    parse_dimacs, parse_graph, parse_vertex_list, write_colour_graph, write_graph, ParseError,
};
use crate::reproduce::{Group, Suite};

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Parser)]
#[command(
    name = "ld",
    version,
    about = "Minimum locating-dominating codes: solver and lab bench"
)]
pub struct Cli {
    /// Print only `key=value` lines.
    #[arg(long, global = true)]
    pub machine: bool,
    /// Seed for every random choice.
    #[arg(long, global = true, env = "LD_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Location-domination number of a graph.
    Gamma { graph: PathBuf },
    /// All minimum LD-codes.
    Enumerate {
        graph: PathBuf,
        /// Print at most this many codes.
        #[arg(long)]
        max_report: Option<usize>,
    },
    /// Min-forced vertices.
    Forced {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
    },
    /// Min-void vertices.
    Void { graph: PathBuf },
    /// Colour graph of a code.
    ColourGraph(ColourArgs),
    /// Minimum code counts of paths.
    CountPaths {
        #[arg(long)]
        n_max: usize,
        /// Also run the exact solver up to this length.
        #[arg(long, default_value_t = 0)]
        verify_brute: usize,
    },
    /// Write a generated graph in edge-list format.
    Gen {
        #[command(subcommand)]
        family: Family,
        /// Output file instead of stdout.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Check the 3-SAT reduction on a DIMACS formula.
    VerifyReduction { cnf: PathBuf },
    /// Check the forced-vertex cardinality bounds.
    CheckBounds { graph: PathBuf },
    /// Run the acceptance criteria.
    ReproduceAll {
        /// Comma-separated groups: paths, forced, colour, bounds, void, reduction.
        #[arg(long, value_delimiter = ',')]
        only: Vec<Group>,
        /// Run with a deliberately broken path-count recurrence.
        #[arg(long, hide = true)]
        corrupt_recurrence: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    Characterization,
    Both,
}

/// Which colours `--two-edge-subgraph` takes two edges of.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubgraphColours {
    /// Min-forced codewords.
    Forced,
    /// Every codeword with at least two inner edges.
    All,
    /// An explicit comma-separated list.
    List(Vec<usize>),
}

impl std::str::FromStr for SubgraphColours {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "forced" => Ok(SubgraphColours::Forced),
            "all" => Ok(SubgraphColours::All),
            _ => parse_vertex_list(s)
                .map(SubgraphColours::List)
                .map_err(|_| format!("expected `forced`, `all` or a vertex list, got `{s}`")),
        }
    }
}

#[derive(Debug, Args)]
pub struct ColourArgs {
    graph: PathBuf,
    /// The code, e.g. `2,4,7,9`.
    #[arg(long)]
    code: String,
    /// Check the structural properties.
    #[arg(long)]
    verify: bool,
    /// Extract a two-edge-per-colour subgraph: `forced`, `all` or a list of codewords.
    #[arg(long)]
    two_edge_subgraph: Option<SubgraphColours>,
    /// Pick the two edges per colour at random (seeded) instead of lexicographically.
    #[arg(long)]
    random_selection: bool,
}

#[derive(Debug, Subcommand)]
pub enum Family {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Star {
        leaves: usize,
    },
    /// Path `1..=s` with `t` pendants on `s`.
    Broom {
        s: usize,
        t: usize,
    },
    /// Independent `h`-set plus one vertex per nonempty subset.
    Voidext {
        h: usize,
    },
    /// Random connected graph (uses the seed).
    Random {
        n: usize,
        p: f64,
    },
    /// Reduction graph of a DIMACS 3-CNF formula.
    Reduction {
        cnf: PathBuf,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error(transparent)]
    Library(#[from] locdom::Error),
    #[error("{0}")]
    Usage(String),
    #[error("output: {0}")]
    Output(#[from] io::Error),
}

/// Whether the command's checks all passed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Failed,
}

impl Status {
    fn from_pass(pass: bool) -> Self {
        if pass {
            Status::Ok
        } else {
            Status::Failed
        }
    }
}

struct Report<'a> {
    out: &'a mut dyn Write,
    machine: bool,
}

impl Report<'_> {
    fn kv(&mut self, key: &str, value: impl std::fmt::Display) -> io::Result<()> {
        writeln!(self.out, "{key}={value}")
    }

    fn note(&mut self, text: impl std::fmt::Display) -> io::Result<()> {
        if self.machine {
            return Ok(());
        }
        writeln!(self.out, "# {text}")
    }

    fn raw(&mut self, text: &str) -> io::Result<()> {
        self.out.write_all(text.as_bytes())
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.into(),
        source,
    })
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read(path)?).map_err(|source| CliError::Parse {
        path: path.into(),
        source,
    })
}

fn load_code(g: &Graph, text: &str) -> Result<VertexSet, CliError> {
    let labels = parse_vertex_list(text).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut code = VertexSet::EMPTY;
    for v in labels {
        g.check_vertex(v)?;
        if v > 64 {
            return Err(locdom::Error::TooLarge {
                order: g.order(),
                limit: 64,
            }
            .into());
        }
        code.insert(v);
    }
    Ok(code)
}

/// Parse `args` (including the program name), run, and return the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(Status::Ok) => 0,
        Ok(Status::Failed) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<Status, CliError> {
    let mut r = Report {
        out,
        machine: cli.machine,
    };
    match &cli.command {
        Command::Gamma { graph } => {
            let g = load_graph(graph)?;
            r.kv("gamma", locdom::solver::gamma_ld(&g)?)?;
            Ok(Status::Ok)
        }
        Command::Enumerate { graph, max_report } => {
            let g = load_graph(graph)?;
            let census = enumerate_minimum_ld_codes(&g)?;
            r.kv("gamma", census.gamma)?;
            r.kv("count", census.count())?;
            let limit = max_report.unwrap_or(usize::MAX);
            for code in census.codes.iter().take(limit) {
                r.kv("code", code)?;
            }
            if census.count() > limit {
                r.note(format_args!(
                    "{} more codes not shown",
                    census.count() - limit
                ))?;
            }
            Ok(Status::Ok)
        }
        Command::Forced { graph, method } => forced(&mut r, &load_graph(graph)?, *method),
        Command::Void { graph } => {
            let c = classify_oracle(&load_graph(graph)?)?;
            r.kv("void", c.void)?;
            r.kv("forced", c.forced)?;
            r.kv("free", c.free)?;
            Ok(Status::Ok)
        }
        Command::ColourGraph(args) => colour(&mut r, args, cli.seed),
        Command::CountPaths {
            n_max,
            verify_brute,
        } => count_paths(&mut r, *n_max, *verify_brute),
        Command::Gen { family, output } => {
            let (g, note) = generate(family, cli.seed)?;
            let mut text = String::new();
            if !cli.machine {
                text.push_str(&format!("# {note}\n"));
            }
            text.push_str(&write_graph(&g));
            match output {
                Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io {
                    path: p.clone(),
                    source,
                })?,
                None => r.raw(&text)?,
            }
            Ok(Status::Ok)
        }
        Command::VerifyReduction { cnf } => {
            let f = parse_dimacs(&read(cnf)?).map_err(|source| CliError::Parse {
                path: cnf.clone(),
                source,
            })?;
            let rep = verify_reduction(&f)?;
            r.kv("satisfiable", rep.satisfiable)?;
            r.kv("gamma", rep.gamma)?;
            r.kv("expected_gamma", rep.expected_gamma)?;
            r.kv("minimum_codes", rep.minimum_codes)?;
            r.kv("no_alpha_in_codes", rep.no_alpha_in_codes)?;
            r.kv("one_literal_per_variable", rep.one_literal_per_variable)?;
            r.kv("one_of_w_v", rep.one_of_w_v)?;
            r.kv("w_forced", rep.w_forced)?;
            r.kv("v_void", rep.v_void)?;
            r.kv("passed", rep.passed())?;
            Ok(Status::from_pass(rep.passed()))
        }
        Command::CheckBounds { graph } => {
            let b = check_forced_bounds(&load_graph(graph)?)?;
            r.kv("n", b.order)?;
            r.kv("gamma", b.gamma)?;
            r.kv("forced", b.forced)?;
            if !b.asserted() {
                r.note("no forced vertices, nothing asserted")?;
            }
            r.kv("two_thirds_slack", b.two_thirds_slack())?;
            r.kv("two_thirds_tight", b.two_thirds_tight)?;
            r.kv("two_fifths_slack", b.two_fifths_slack())?;
            r.kv("two_fifths_tight", b.two_fifths_tight)?;
            r.kv("gamma_room", b.order as isize - 3 - b.gamma as isize)?;
            r.kv("holds", b.holds())?;
            Ok(Status::from_pass(b.holds()))
        }
        Command::ReproduceAll {
            only,
            corrupt_recurrence,
        } => {
            let mut suite = Suite::new(cli.seed);
            if *corrupt_recurrence {
                let mut terms = STANDARD_TERMS.to_vec();
                terms[2].weight = 2;
                suite = suite.with_recurrence(terms);
                r.note("running with a corrupted path-count recurrence")?;
            }
            r.kv("seed", cli.seed)?;
            let outcomes = suite.run_groups(only);
            for o in &outcomes {
                r.note(o.line())?;
                r.kv(
                    &format!("criterion.{}", o.criterion.id),
                    if o.passed { "pass" } else { "fail" },
                )?;
            }
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            r.kv("failed", failed)?;
            Ok(Status::from_pass(failed == 0))
        }
    }
}

fn forced(r: &mut Report<'_>, g: &Graph, method: Method) -> Result<Status, CliError> {
    let oracle = matches!(method, Method::Oracle | Method::Both)
        .then(|| classify_oracle(g).map(|c| c.forced))
        .transpose()?;
    let rule = matches!(method, Method::Characterization | Method::Both)
        .then(|| classify_by_characterization(g))
        .transpose()?;
    match (oracle, rule) {
        (Some(a), Some(b)) if a != b => {
            r.kv("forced_oracle", a)?;
            r.kv("forced_characterization", b)?;
            r.kv("agree", false)?;
            Ok(Status::Failed)
        }
        (Some(a), Some(_)) => {
            r.kv("forced", a)?;
            r.kv("agree", true)?;
            Ok(Status::Ok)
        }
        (Some(s), None) | (None, Some(s)) => {
            r.kv("forced", s)?;
            Ok(Status::Ok)
        }
        (None, None) => unreachable!("every method computes something"),
    }
}

fn colour(r: &mut Report<'_>, args: &ColourArgs, seed: u64) -> Result<Status, CliError> {
    let g = load_graph(&args.graph)?;
    let code = load_code(&g, &args.code)?;
    let cg = build_colour_graph(&g, code)?;
    r.raw(&write_colour_graph(&cg))?;
    let mut pass = true;
    if args.verify {
        let report = verify_structure(&cg, &g, code);
        for c in &report.checks {
            r.kv(
                &format!("property.{}", c.property.name()),
                if c.passed { "pass" } else { "fail" },
            )?;
            if let Some(x) = &c.counterexample {
                r.note(x)?;
            }
        }
        r.kv("walks_checked", report.walks_checked)?;
        for (u, (total, inner)) in colour_edge_counts(&cg, code) {
            r.kv(&format!("colour.{u}"), format_args!("{total}/{inner}"))?;
        }
        r.note("colour.u=<edges in colour graph>/<edges avoiding the code>")?;
        pass &= report.all_passed();
    }
    if let Some(which) = &args.two_edge_subgraph {
        let colours = match which {
            SubgraphColours::Forced => classify_oracle(&g)?.forced.intersection(code),
            SubgraphColours::All => colour_edge_counts(&cg, code)
                .into_iter()
                .filter(|&(_, (_, inner))| inner >= 2)
                .map(|(u, _)| u)
                .collect(),
            SubgraphColours::List(list) => load_code(
                &g,
                &list
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(","),
            )?,
        };
        let selection = if args.random_selection {
            r.kv("seed", seed)?;
            EdgeSelection::Seeded(seed)
        } else {
            EdgeSelection::Lexicographic
        };
        r.kv("subgraph_colours", colours)?;
        match two_edge_subgraph(&cg, code, colours, selection) {
            Ok(h) => {
                for e in &h.edges {
                    r.note(format_args!("{} {} colour={}", e.x, e.y, e.colour))?;
                }
                r.kv("subgraph_vertices", h.vertex_count())?;
                r.kv("subgraph_edges", h.edge_count())?;
                r.kv("subgraph_components", h.components)?;
                r.kv("bipartite", h.bipartite)?;
                r.kv("cactus", h.cactus_components)?;
                r.kv("bound_holds", h.bound_holds)?;
                r.kv("bound_tight", h.bound_tight())?;
                pass &= h.all_hold();
            }
            Err(e @ locdom::Error::InsufficientEdges { .. }) => {
                r.kv("subgraph_error", e)?;
                pass = false;
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(Status::from_pass(pass))
}

fn count_paths(r: &mut Report<'_>, n_max: usize, brute_max: usize) -> Result<Status, CliError> {
    if n_max == 0 {
        return Err(CliError::Usage("--n-max must be at least 1".into()));
    }
    let mut table = CountTable::new();
    let mut agree = true;
    r.note("n recurrence closed brute")?;
    for n in 1..=n_max {
        let rec = table.c_of_n(n);
        let closed = c_closed_form(n).ok();
        let brute = if n <= brute_max {
            Some(brute_count(n)?)
        } else {
            None
        };
        agree &= closed.is_none_or(|c| c == rec) && brute.is_none_or(|b| b == rec);
        let show = |v: Option<u64>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
        writeln!(
            r.out,
            "n={n} recurrence={rec} closed={} brute={}",
            show(closed),
            show(brute)
        )?;
    }
    r.kv("agree", agree)?;
    Ok(Status::from_pass(agree))
}

fn generate(family: &Family, seed: u64) -> Result<(Graph, String), CliError> {
    Ok(match family {
        Family::Path { n } => (path(*n)?, format!("path P_{n}")),
        Family::Cycle { n } => (cycle(*n)?, format!("cycle C_{n}")),
        Family::Star { leaves } => (star(*leaves)?, format!("star K_1,{leaves}, centre 1")),
        Family::Broom { s, t } => (
            broom(*s, *t)?,
            format!("broom: path 1..{s}, {t} pendants on {s}"),
        ),
        Family::Voidext { h } => (
            min_void_extremal(*h)?,
            format!("min-void extremal graph, h = {h}"),
        ),
        Family::Random { n, p } => (
            random_connected(*n, *p, seed)?,
            format!("random connected, n = {n}, p = {p}, seed = {seed}"),
        ),
        Family::Reduction { cnf } => {
            let f = parse_dimacs(&read(cnf)?).map_err(|source| CliError::Parse {
                path: cnf.clone(),
                source,
            })?;
            let rg = sat_reduction(&f);
            let note = format!(
                "reduction graph: {} variables, {} clauses, w = {}, v = {}",
                f.vars(),
                f.clauses().len(),
                rg.label(locdom::generators::Role::W),
                rg.label(locdom::generators::Role::V)
            );
            (rg.graph, note)
        }
    })
}
