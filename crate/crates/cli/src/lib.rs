//! The `mdc` command line. [`run`] parses arguments, dispatches to
//! `mdc-core`, and returns the process exit code.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use mdc_core::complex::{build_genus1_complex, build_virtual_complex, ComplexJson};
use mdc_core::enumeration::{aligned_graphs, cache_dir_from_env, stable_graphs_cached, EnumerationRequest, Strategy};
use mdc_core::genus_one::{AlignedGraph, NonemptyCriterion};
use mdc_core::graph::LoopValence;
use mdc_core::homology::chain_complex_from_json;
use mdc_core::io::{
    aligned_to_dot, graph_to_dot, lengths_from_json, lengths_to_json, parse_rational, rational_to_string, GraphJson,
    PointJson,
};
use mdc_core::retract::{check_regime, embed_dual, project_to_dual_with, DualPoint, MetricPoint};
use mdc_core::tangent::{fiber_witness, has_nonvanishing_dependency, TangentClass, TangentVectorList};
use mdc_core::verify::{self, DeskConfig, Instance, RETRACT_INVARIANTS};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "mdc", version, about = "Stable graphs, dual complexes and their homology")]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// TOML file with default option values; command-line flags win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Which aligned graphs count as nonempty.
    #[arg(long, global = true, value_enum)]
    nonempty_criterion: Option<CriterionArg>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum CriterionArg {
    Dmin,
    RadAware,
}

impl From<CriterionArg> for NonemptyCriterion {
    fn from(c: CriterionArg) -> Self {
        match c {
            CriterionArg::Dmin => NonemptyCriterion::Dmin,
            CriterionArg::RadAware => NonemptyCriterion::RadAware,
        }
    }
}

#[derive(Args, Debug, Clone)]
struct Triple {
    #[arg(long)]
    genus: u32,
    #[arg(long)]
    markings: u32,
    #[arg(long)]
    degree: u32,
}

#[derive(Args, Debug, Clone)]
struct CacheArgs {
    /// Regenerate instead of reading the catalog cache.
    #[arg(long)]
    no_cache: bool,
    /// Cache directory (overrides MDC_CACHE_DIR).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Uncontraction,
    Multigraph,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Virtual,
    Genus1,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CheckArg {
    Dependency,
    Fiber,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Desk,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List stable graphs up to isomorphism.
    Enumerate {
        #[command(flatten)]
        triple: Triple,
        /// Also list nonempty radially aligned graphs (genus one).
        #[arg(long)]
        radial: bool,
        #[arg(long)]
        max_edges: Option<usize>,
        #[arg(long, value_enum, default_value = "uncontraction")]
        strategy: StrategyArg,
        /// Count a loop as one incidence instead of two.
        #[arg(long)]
        loop_counts_once: bool,
        #[command(flatten)]
        cache: CacheArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a symmetric Δ-complex as JSON.
    Complex {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[command(flatten)]
        triple: Triple,
        #[command(flatten)]
        cache: CacheArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rational Betti numbers of a complex JSON file.
    Homology {
        file: PathBuf,
        #[arg(long)]
        unreduced: bool,
        /// Print JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Check the retraction invariants on seeded random points.
    Retract {
        #[command(flatten)]
        triple: Triple,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Comma-separated rationals in (0, 1).
        #[arg(long, value_delimiter = ',')]
        times: Option<Vec<String>>,
    },
    /// Map a dual-complex point into the virtual complex.
    Embed {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Map a point of Z back to the dual complex.
    Project {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tangent-space checks.
    Tangent {
        #[arg(long, value_enum)]
        check: CheckArg,
        #[arg(long)]
        input: PathBuf,
    },
    /// Run an acceptance suite.
    VerifyAll {
        #[arg(long, value_enum, default_value = "desk")]
        suite: SuiteArg,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Graphviz rendering of a graph JSON file (aligned if it has levels).
    Dot {
        #[arg(long)]
        input: PathBuf,
    },
}

/// Optional defaults read from `--config`.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    threads: Option<usize>,
    seed: Option<u64>,
    samples: Option<usize>,
    nonempty_criterion: Option<CriterionArg>,
    cache_dir: Option<PathBuf>,
    no_cache: Option<bool>,
}

/// Settings after merging flags, config file and defaults.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub threads: Option<usize>,
    pub seed: u64,
    pub samples: usize,
    pub criterion: NonemptyCriterion,
    pub cache_dir: Option<PathBuf>,
    pub no_cache: bool,
}

impl RunConfig {
    fn merge(cli: &Cli, file: FileConfig) -> Self {
        let desk = DeskConfig::default();
        RunConfig {
            threads: cli.threads.or(file.threads),
            seed: file.seed.unwrap_or(desk.seed),
            samples: file.samples.unwrap_or(desk.samples),
            criterion: cli.nonempty_criterion.or(file.nonempty_criterion).map_or(desk.criterion, Into::into),
            cache_dir: file.cache_dir.or_else(cache_dir_from_env),
            no_cache: file.no_cache.unwrap_or(false),
        }
    }

    fn cache_for(&self, args: &CacheArgs) -> Option<PathBuf> {
        if args.no_cache || self.no_cache {
            None
        } else {
            args.cache_dir.clone().or_else(|| self.cache_dir.clone())
        }
    }
}

/// Errors carrying the exit code they map to.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Property(String),
}

impl From<mdc_core::Error> for Failure {
    fn from(e: mdc_core::Error) -> Self {
        match e {
            mdc_core::Error::Internal(m) => Failure::Property(format!("internal error: {m}")),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<i32, Failure>;

struct Io<'a> {
    out: &'a mut (dyn Write + Send),
    err: &'a mut (dyn Write + Send),
}

impl Io<'_> {
    fn emit(&mut self, text: &str, path: Option<&Path>) -> std::result::Result<(), Failure> {
        match path {
            Some(p) => std::fs::write(p, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
            None => writeln!(self.out, "{text}").map_err(|e| Failure::Property(e.to_string())),
        }
    }

    fn warn(&mut self, msg: &str) {
        let _ = writeln!(self.err, "warning: {msg}");
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> std::result::Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("parse error in {}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

/// Entry point: `argv[0]` is the program name.
pub fn run<I, S>(argv: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let file = match &cli.config {
        Some(p) => match std::fs::read_to_string(p).map_err(|e| e.to_string()).and_then(|t| toml::from_str(&t).map_err(|e| e.to_string())) {
            Ok(f) => f,
            Err(e) => {
                let _ = writeln!(err, "error: config {}: {e}", p.display());
                return EXIT_USAGE;
            }
        },
        None => FileConfig::default(),
    };
    let cfg = RunConfig::merge(&cli, file);
    let mut io = Io { out, err };
    let result = match cfg.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(&cli.command, &cfg, &mut io)),
            Err(e) => Err(Failure::Usage(format!("cannot start {n} threads: {e}"))),
        },
        None => dispatch(&cli.command, &cfg, &mut io),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(io.err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Property(m)) => {
            let _ = writeln!(io.err, "error: {m}");
            EXIT_PROPERTY
        }
    }
}

fn dispatch(cmd: &Command, cfg: &RunConfig, io: &mut Io) -> Outcome {
    match cmd {
        Command::Enumerate { triple, radial, max_edges, strategy, loop_counts_once, cache, out } => {
            let mut req = EnumerationRequest::new(triple.genus, triple.markings, triple.degree);
            req.max_edges = *max_edges;
            req.strategy = match strategy {
                StrategyArg::Uncontraction => Strategy::Uncontraction,
                StrategyArg::Multigraph => Strategy::Multigraph,
            };
            if *loop_counts_once {
                req.loop_valence = LoopValence::One;
            }
            enumerate(&req, *radial, cfg.cache_for(cache).as_deref(), cfg.criterion, out.as_deref(), io)
        }
        Command::Complex { kind, triple, cache, out } => complex(*kind, triple, cfg, cache, out.as_deref(), io),
        Command::Homology { file, unreduced, json } => homology(file, !unreduced, *json, io),
        Command::Retract { triple, samples, seed, times } => retract(triple, *samples, *seed, times.as_deref(), cfg, io),
        Command::Embed { input, out } => embed(input, cfg.criterion, out.as_deref(), io),
        Command::Project { input, out } => project(input, cfg.criterion, out.as_deref(), io),
        Command::Tangent { check, input } => tangent(*check, input, io),
        Command::VerifyAll { suite: SuiteArg::Desk, samples, seed, json } => {
            let desk = DeskConfig {
                seed: seed.unwrap_or(cfg.seed),
                samples: samples.unwrap_or(cfg.samples),
                criterion: cfg.criterion,
                ..DeskConfig::default()
            };
            let reports = verify::run_desk(&desk)?;
            let text = if *json {
                to_json(&reports)
            } else {
                reports.iter().map(|r| r.line()).collect::<Vec<_>>().join("\n")
            };
            io.emit(&text, None)?;
            Ok(if reports.iter().all(|r| r.passed) { EXIT_OK } else { EXIT_PROPERTY })
        }
        Command::Dot { input } => {
            let g: GraphJson = read_json(input)?;
            let text = if g.levels.is_some() { aligned_to_dot(&g.to_aligned()?) } else { graph_to_dot(&g.to_graph()?) };
            io.emit(text.trim_end(), None)?;
            Ok(EXIT_OK)
        }
    }
}

#[derive(Serialize)]
struct CatalogJson {
    g: u32,
    n: u32,
    d: u32,
    edge_bound: usize,
    classes: usize,
    graphs: Vec<GraphJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    aligned: Option<Vec<GraphJson>>,
}

fn enumerate(
    req: &EnumerationRequest,
    radial: bool,
    cache: Option<&Path>,
    criterion: NonemptyCriterion,
    out: Option<&Path>,
    io: &mut Io,
) -> Outcome {
    let cat = stable_graphs_cached(req, cache)?;
    let aligned = if radial {
        if req.genus == 1 && req.degree < 2 {
            io.warn("with degree below 2 no aligned graph has d_min > 1");
        }
        Some(aligned_graphs(&cat, criterion)?.iter().map(GraphJson::from).collect())
    } else {
        None
    };
    let json = CatalogJson {
        g: cat.genus,
        n: cat.markings,
        d: cat.degree,
        edge_bound: cat.edge_bound,
        classes: cat.len(),
        graphs: cat.graphs().map(GraphJson::from).collect(),
        aligned,
    };
    io.emit(&to_json(&json), out)?;
    Ok(EXIT_OK)
}

fn complex(kind: KindArg, t: &Triple, cfg: &RunConfig, cache: &CacheArgs, out: Option<&Path>, io: &mut Io) -> Outcome {
    let cat = stable_graphs_cached(&EnumerationRequest::new(t.genus, t.markings, t.degree), cfg.cache_for(cache).as_deref())?;
    let x = match kind {
        KindArg::Virtual => build_virtual_complex(&cat)?,
        KindArg::Genus1 => {
            if t.genus == 1 && t.degree < 2 {
                io.warn("with degree below 2 the genus-one dual complex is empty");
            }
            build_genus1_complex(&cat, cfg.criterion)?
        }
    };
    io.emit(&to_json(&x.to_json()), out)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct BettiJson {
    reduced: bool,
    min_dim: i64,
    betti: Vec<usize>,
    euler_characteristic: i64,
}

fn homology(file: &Path, reduced: bool, json: bool, io: &mut Io) -> Outcome {
    let x: ComplexJson = read_json(file)?;
    let c = chain_complex_from_json(&x, reduced)?;
    if !c.boundary_squares_vanish() {
        return Err(Failure::Property("the boundary map does not square to zero".into()));
    }
    let betti = c.betti();
    let report = BettiJson {
        reduced,
        min_dim: c.min_dim(),
        euler_characteristic: mdc_core::homology::euler_from_betti(&c),
        betti: betti.clone(),
    };
    let text = if json {
        to_json(&report)
    } else {
        let mut lines = vec![format!("{:>4} {:>6}", "p", "betti")];
        for (i, b) in betti.iter().enumerate() {
            lines.push(format!("{:>4} {:>6}", c.min_dim() + i as i64, b));
        }
        lines.push(format!("euler characteristic {}", report.euler_characteristic));
        lines.join("\n")
    };
    io.emit(&text, None)?;
    Ok(EXIT_OK)
}

fn parse_times(times: &[String]) -> std::result::Result<Vec<BigRational>, Failure> {
    let zero = BigRational::from_integer(0.into());
    let one = BigRational::from_integer(1.into());
    times
        .iter()
        .map(|s| {
            let t = parse_rational(s.trim()).map_err(|e| Failure::Usage(e.to_string()))?;
            if t <= zero || t >= one {
                return Err(Failure::Usage(format!("time {s} is not strictly between 0 and 1")));
            }
            Ok(t)
        })
        .collect()
}

fn retract(t: &Triple, samples: Option<usize>, seed: Option<u64>, times: Option<&[String]>, cfg: &RunConfig, io: &mut Io) -> Outcome {
    check_regime(t.genus, t.markings, t.degree)?;
    let desk = DeskConfig {
        seed: seed.unwrap_or(cfg.seed),
        samples: samples.unwrap_or(cfg.samples),
        criterion: cfg.criterion,
        times: match times {
            Some(ts) => parse_times(ts)?,
            None => verify::default_times(),
        },
        ..DeskConfig::default()
    };
    let inst = Instance::build(t.genus, t.markings, t.degree, cfg.criterion)?;
    if inst.catalog.boundary().next().is_none() {
        return Err(Failure::Usage(format!("{} has no metric points", inst.name())));
    }
    let s = verify::check_retract(&inst, 0, &desk);
    let mut lines = vec![
        format!("instance {} samples {} seed {}", inst.name(), desk.samples, desk.seed),
        format!("{:<12} {:>8} {:>8}  status", "invariant", "checked", "failed"),
    ];
    for (i, name) in RETRACT_INVARIANTS.iter().enumerate() {
        let status = if s.failures[i].is_empty() { "PASS" } else { "FAIL" };
        lines.push(format!("{name:<12} {:>8} {:>8}  {status}", s.checked[i], s.failures[i].len()));
    }
    for f in s.failures.iter().flatten().take(5) {
        lines.push(format!("  {f}"));
    }
    io.emit(&lines.join("\n"), None)?;
    Ok(if s.passed() { EXIT_OK } else { EXIT_PROPERTY })
}

/// Length keys are core edge ids, and `level:m` for path edge `m`.
fn dual_point_json(qp: &DualPoint) -> PointJson {
    let mut lengths = BTreeMap::new();
    let core = lengths_to_json(qp.core_lengths());
    for ((_, v), e) in core.into_iter().zip(qp.aligned().core_edges()) {
        lengths.insert(format!("{e}"), v);
    }
    for (m, l) in qp.level_lengths().iter().enumerate() {
        lengths.insert(format!("level:{}", m + 1), rational_to_string(l));
    }
    PointJson { graph: GraphJson::from(qp.aligned()), lengths }
}

fn dual_point_from_json(p: &PointJson, criterion: NonemptyCriterion) -> std::result::Result<DualPoint, Failure> {
    let a: AlignedGraph = p.graph.to_aligned()?;
    let get = |key: String| -> std::result::Result<BigRational, Failure> {
        let s = p.lengths.get(&key).ok_or_else(|| Failure::Usage(format!("missing length for {key}")))?;
        Ok(parse_rational(s)?)
    };
    let core = a.core_edges().into_iter().map(|e| get(e.to_string())).collect::<std::result::Result<Vec<_>, _>>()?;
    let levels = (1..=a.length()).map(|m| get(format!("level:{m}"))).collect::<std::result::Result<Vec<_>, _>>()?;
    if p.lengths.len() != core.len() + levels.len() {
        return Err(Failure::Usage("lengths given for edges that are not labels".into()));
    }
    Ok(DualPoint::new(a, core, levels, criterion)?)
}

fn embed(input: &Path, criterion: NonemptyCriterion, out: Option<&Path>, io: &mut Io) -> Outcome {
    let p: PointJson = read_json(input)?;
    let qp = dual_point_from_json(&p, criterion)?;
    let m = embed_dual(&qp);
    let json = PointJson { graph: GraphJson::from(m.graph()), lengths: lengths_to_json(m.lengths()) };
    io.emit(&to_json(&json), out)?;
    Ok(EXIT_OK)
}

fn project(input: &Path, criterion: NonemptyCriterion, out: Option<&Path>, io: &mut Io) -> Outcome {
    let p: PointJson = read_json(input)?;
    let g = p.graph.to_graph()?;
    let lengths = lengths_from_json(&p.lengths, g.num_edges())?;
    let m = MetricPoint::new(g, lengths)?;
    let qp = project_to_dual_with(&m, criterion)?;
    io.emit(&to_json(&dual_point_json(&qp)), out)?;
    Ok(EXIT_OK)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DependencyInput {
    dim: usize,
    vectors: Vec<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FiberInput {
    degree: usize,
    vector: Vec<String>,
}

fn parse_all(xs: &[String]) -> std::result::Result<Vec<BigRational>, Failure> {
    xs.iter().map(|s| parse_rational(s).map_err(Failure::from)).collect()
}

fn tangent(check: CheckArg, input: &Path, io: &mut Io) -> Outcome {
    let text = match check {
        CheckArg::Dependency => {
            let x: DependencyInput = read_json(input)?;
            let vectors = x.vectors.iter().map(|v| parse_all(v)).collect::<std::result::Result<Vec<_>, _>>()?;
            let list = TangentVectorList::new(x.dim, vectors)?;
            to_json(&serde_json::json!({ "nonvanishing_dependency": has_nonvanishing_dependency(&list) }))
        }
        CheckArg::Fiber => {
            let x: FiberInput = read_json(input)?;
            if x.vector.len() < 2 {
                return Err(Failure::Usage("the vector needs at least two coordinates".into()));
            }
            let v = TangentClass::from_vector(parse_all(&x.vector)?)?;
            let witness = fiber_witness(&v, x.degree, x.vector.len() - 1)?.map(|w| {
                w.roots().iter().map(|r| r.iter().map(rational_to_string).collect::<Vec<_>>()).collect::<Vec<_>>()
            });
            to_json(&serde_json::json!({ "witness": witness }))
        }
    };
    io.emit(&text, None)?;
    Ok(EXIT_OK)
}
