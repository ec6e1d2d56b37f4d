//! Command-line front end: `solve`, `approx`, `fpt-decide`, `generate`,
//! `verify` and `bench`.
//!
//! Exit status is 0 on success, 1 when a solver hits the exploration cap and
//! 2 on usage, I/O or format errors.

use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::approx::{
    bounded_degree_approx, closed_from_open, fpt_ratio_approx, twin_approx_open, RatioBranch,
    RatioSpec,
};
use crate::bench::{bench_suite, render_bench, BenchAlgorithm, BenchConfig, INSTANCE_EXTENSION};
use crate::catalog::all_graphs_up_to;
use crate::error::{Error, Result};
use crate::format::{read_instance_file, serialize_instance, serialize_instance_with};
use crate::fpt::{solve_connected_influence, FptSolver};
use crate::graph::{Graph, GraphBuilder};
use crate::oracles::{
    decide_influence, solve_max_closed_exact, solve_max_open_exact, SearchConfig, SolveResult,
    DEFAULT_CAP,
};
use crate::record::{render, OutputFormat, ResultRecord};
use crate::reductions::{
    basic_reduction, clique_reduction, constant_threshold_instance, dks_reduction,
    majority_hardness_instance, verify_reduction, Fault, ReductionKind, ReductionOutput,
    VerifyParams,
};
use crate::threshold::{Instance, Scheme, ThresholdAssignment};

#[derive(Debug, Parser)]
#[command(
    name = "kinfluence",
    version,
    about = "Threshold influence spread solvers and reduction generators"
)]
pub struct RunConfig {
    /// Maximum number of candidate sets one search may examine.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap: u64,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: u64,
    /// Write results here instead of stdout (records are appended).
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
    /// Add wall-clock timings to the output.
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

impl RunConfig {
    fn search(&self) -> SearchConfig {
        SearchConfig {
            cap: self.cap,
            workers: self.workers as usize,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact Max Open/Closed k-Influence, or (k,ell)-Influence with --ell.
    Solve(SolveArgs),
    /// Approximation algorithms for unanimity thresholds.
    Approx(ApproxArgs),
    /// Fixed-parameter decision for unanimity thresholds.
    FptDecide(FptArgs),
    /// Reduction instances and graph corpora.
    Generate(GenerateArgs),
    /// Check a reduction against the brute-force oracles.
    Verify(VerifyArgs),
    /// Run algorithms over a corpus directory.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct InstanceArgs {
    /// Instance file.
    pub instance: PathBuf,
    /// Budget; defaults to the file's `c k` line.
    #[arg(short)]
    pub k: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: InstanceArgs,
    /// Exhaustive search (the only solve mode).
    #[arg(long)]
    pub exact: bool,
    /// Maximise |sigma(S)| (default).
    #[arg(long, conflicts_with = "closed")]
    pub open: bool,
    /// Maximise |sigma[S]|.
    #[arg(long)]
    pub closed: bool,
    /// Decide whether some |S| <= k reaches |sigma(S)| >= ell.
    #[arg(long, conflicts_with = "closed")]
    pub ell: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ApproxAlgorithm {
    Twin,
    Greedy,
    FptRatio,
}

#[derive(Debug, Args)]
pub struct ApproxArgs {
    #[command(flatten)]
    pub input: InstanceArgs,
    #[arg(long, value_enum, default_value_t = ApproxAlgorithm::Twin)]
    pub algorithm: ApproxAlgorithm,
    /// Ratio function for fpt-ratio: log2, sqrt, linear or r(1),r(2),...
    #[arg(long, default_value = "log2")]
    pub ratio: RatioSpec,
    /// Report the closed objective, padding the seeds up to k.
    #[arg(long)]
    pub closed: bool,
}

#[derive(Debug, Args)]
pub struct FptArgs {
    #[command(flatten)]
    pub input: InstanceArgs,
    /// Target; defaults to the file's `c ell` line.
    #[arg(long)]
    pub ell: Option<usize>,
    /// Require G[sigma[S]] to be connected.
    #[arg(long)]
    pub connected: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenerateKind {
    Basic,
    Majority,
    Constant,
    Clique,
    Dks,
    /// Every graph up to isomorphism with at most --max-n vertices.
    Catalog,
    /// Seeded G(n, p) samples.
    Random,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub kind: GenerateKind,
    /// Source graph (an instance file; thresholds are ignored). Needed by
    /// the reduction kinds.
    pub source: Option<PathBuf>,
    #[arg(short)]
    pub k: Option<usize>,
    /// Grid depth L of the majority construction.
    #[arg(long, default_value_t = 1)]
    pub grid_depth: usize,
    /// Number of paths P of the constant-threshold construction.
    #[arg(long, default_value_t = 1)]
    pub paths: usize,
    /// Pendings Q per path terminus of the constant-threshold construction.
    #[arg(long, default_value_t = 1)]
    pub pendings: usize,
    /// Corpus directory for catalog and random.
    #[arg(long)]
    pub dir: Option<PathBuf>,
    #[arg(long, default_value_t = 5)]
    pub max_n: usize,
    /// Keep connected graphs only.
    #[arg(long)]
    pub connected: bool,
    /// Keep graphs with maximum degree at most this.
    #[arg(long)]
    pub max_degree: Option<usize>,
    /// Threshold scheme of corpus instances.
    #[arg(long, default_value = "unanimity")]
    pub scheme: Scheme,
    #[arg(long, default_value_t = 10)]
    pub count: usize,
    #[arg(long, default_value_t = 8)]
    pub n: usize,
    #[arg(long, default_value_t = 0.3)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_kind)]
    pub kind: ReductionKind,
    /// Source graph (an instance file; thresholds are ignored).
    pub source: PathBuf,
    #[arg(short)]
    pub k: usize,
    /// Corrupt one target threshold, as VERTEX:THRESHOLD.
    #[arg(long, value_parser = parse_fault)]
    pub fault: Option<Fault>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Directory of `.inst` files.
    pub corpus: PathBuf,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "twin")]
    pub algorithms: Vec<BenchAlgorithm>,
    /// Budget override for every instance.
    #[arg(short)]
    pub k: Option<usize>,
    #[arg(long, default_value = "log2")]
    pub ratio: RatioSpec,
    /// Skip the exact optimum join.
    #[arg(long)]
    pub no_optimum: bool,
}

fn parse_kind(s: &str) -> std::result::Result<ReductionKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_fault(s: &str) -> std::result::Result<Fault, String> {
    let (v, t) = s.split_once(':').ok_or("expected VERTEX:THRESHOLD")?;
    Ok(Fault {
        vertex: v.parse().map_err(|_| format!("bad vertex `{v}`"))?,
        threshold: t.parse().map_err(|_| format!("bad threshold `{t}`"))?,
    })
}

/// Parses `argv` (including the program name), runs the command and
/// returns the exit status. Results go to `--output` or `stdout`;
/// diagnostics go to `stderr`.
pub fn run_command<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(text.as_bytes());
            } else {
                let _ = stderr.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match run(&config, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_cap_exceeded() {
                1
            } else {
                2
            }
        }
    }
}

fn read(path: &Path) -> Result<Instance> {
    read_instance_file(path).map_err(|e| match e {
        Error::Io(io) => Error::invalid(format!("cannot read {}: {io}", path.display())),
        other => other,
    })
}

fn load(input: &InstanceArgs) -> Result<(String, Instance)> {
    let inst = read(&input.instance)?;
    let inst = match input.k {
        Some(k) => inst.with_k(k)?,
        None => inst,
    };
    let id = input
        .instance
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("instance")
        .to_string();
    Ok((id, inst))
}

fn require_unanimity(inst: &Instance, what: &str) -> Result<()> {
    if inst.thresholds.scheme() == Scheme::Unanimity {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "{what} needs unanimity thresholds, the instance declares {}",
            inst.thresholds.scheme()
        )))
    }
}

fn emit(config: &RunConfig, stdout: &mut dyn Write, text: &str) -> Result<()> {
    match &config.output {
        Some(path) => {
            let mut file = OpenOptions::new()
                .create(true)
                .write(true)
                .append(config.format == OutputFormat::Records)
                .truncate(config.format == OutputFormat::Table)
                .open(path)?;
            file.write_all(text.as_bytes())?;
        }
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn base_record(command: &str, algorithm: &str, id: &str, inst: &Instance) -> ResultRecord {
    ResultRecord {
        command: command.into(),
        algorithm: algorithm.into(),
        instance: id.into(),
        n: inst.graph.n(),
        m: inst.graph.m(),
        k: inst.k,
        ell: inst.ell,
        value: None,
        answer: None,
        witness: Vec::new(),
        exact: false,
        explored: 0,
        detail: None,
        elapsed_ms: None,
    }
}

fn run(config: &RunConfig, stdout: &mut dyn Write) -> Result<i32> {
    let cfg = config.search();
    match &config.command {
        Command::Solve(args) => {
            let (id, inst) = load(&args.input)?;
            let record = if let Some(ell) = args.ell {
                let inst = inst.with_ell(ell);
                let r = decide_influence(&inst, &cfg)?;
                ResultRecord {
                    answer: Some(r.answer),
                    witness: r.witness.map(|w| w.into_vec()).unwrap_or_default(),
                    exact: true,
                    explored: r.explored,
                    ..base_record("solve", "exact-decision", &id, &inst)
                }
                .with_elapsed(r.elapsed, config.timings)
            } else {
                let (name, r) = if args.closed {
                    ("exact-closed", solve_max_closed_exact(&inst, &cfg)?)
                } else {
                    ("exact-open", solve_max_open_exact(&inst, &cfg)?)
                };
                ResultRecord {
                    value: Some(if args.closed {
                        r.closed_value
                    } else {
                        r.open_value
                    }),
                    witness: r.seeds.clone().into_vec(),
                    exact: true,
                    explored: r.explored,
                    ..base_record("solve", name, &id, &inst)
                }
                .with_elapsed(r.elapsed, config.timings)
            };
            emit(config, stdout, &render(&[record], config.format)).map(|()| 0)
        }
        Command::Approx(args) => {
            let (id, inst) = load(&args.input)?;
            require_unanimity(&inst, "approx")?;
            let started = Instant::now();
            let mut detail = None;
            let mut solve = |g: &Graph, _: &ThresholdAssignment, k: usize| -> Result<SolveResult> {
                Ok(match args.algorithm {
                    ApproxAlgorithm::Twin => twin_approx_open(g, k),
                    ApproxAlgorithm::Greedy => bounded_degree_approx(g, k),
                    ApproxAlgorithm::FptRatio => {
                        let r = fpt_ratio_approx(g, k, &args.ratio, &cfg)?;
                        detail = Some(match r.branch {
                            RatioBranch::Twin => "twin",
                            RatioBranch::BruteForce => "brute-force",
                        });
                        r.result
                    }
                })
            };
            let r = if args.closed {
                closed_from_open(&inst.graph, &inst.thresholds, inst.k, &mut solve)?
            } else {
                solve(&inst.graph, &inst.thresholds, inst.k)?
            };
            let name = match args.algorithm {
                ApproxAlgorithm::Twin => "twin",
                ApproxAlgorithm::Greedy => "greedy",
                ApproxAlgorithm::FptRatio => "fpt-ratio",
            };
            let record = ResultRecord {
                value: Some(if args.closed {
                    r.closed_value
                } else {
                    r.open_value
                }),
                witness: r.seeds.into_vec(),
                exact: r.exact,
                explored: r.explored,
                detail: detail.map(|d| format!("branch {d}")),
                ..base_record("approx", name, &id, &inst)
            }
            .with_elapsed(started.elapsed(), config.timings);
            emit(config, stdout, &render(&[record], config.format)).map(|()| 0)
        }
        Command::FptDecide(args) => {
            let (id, inst) = load(&args.input)?;
            require_unanimity(&inst, "fpt-decide")?;
            let ell = args
                .ell
                .or(inst.ell)
                .ok_or_else(|| Error::invalid("fpt-decide needs --ell or a `c ell` line"))?;
            let inst = inst.with_ell(ell);
            let (name, r, detail) = if args.connected {
                (
                    "fpt-connected",
                    solve_connected_influence(&inst.graph, inst.k, ell, &cfg)?,
                    None,
                )
            } else {
                let d = FptSolver::new(&inst.graph, cfg).decide(inst.k, ell)?;
                ("fpt", d.result, d.accepting.map(|p| format!("profile {p}")))
            };
            let record = ResultRecord {
                answer: Some(r.answer),
                witness: r.witness.map(|w| w.into_vec()).unwrap_or_default(),
                exact: true,
                explored: r.explored,
                detail,
                ..base_record("fpt-decide", name, &id, &inst)
            }
            .with_elapsed(r.elapsed, config.timings);
            emit(config, stdout, &render(&[record], config.format)).map(|()| 0)
        }
        Command::Generate(args) => generate(config, args, stdout).map(|()| 0),
        Command::Verify(args) => {
            let source = read(&args.source)?.graph;
            let report = verify_reduction(
                args.kind,
                &source,
                VerifyParams {
                    k: args.k,
                    fault: args.fault,
                },
                &cfg,
            )?;
            let text = match config.format {
                OutputFormat::Table => report.render(),
                OutputFormat::Records => format!(
                    "{}\n",
                    serde_json::to_string(&report).expect("report serializes")
                ),
            };
            emit(config, stdout, &text)?;
            let capped = report.source.cap_exceeded || report.target.cap_exceeded;
            Ok(if capped { 1 } else { 0 })
        }
        Command::Bench(args) => {
            let bench = BenchConfig {
                algorithms: args.algorithms.clone(),
                k: args.k,
                ratio: args.ratio.clone(),
                search: cfg,
                join_optimum: !args.no_optimum,
            };
            let rows = bench_suite(&args.corpus, &bench)?;
            let text = match config.format {
                OutputFormat::Table => render_bench(&rows, config.timings),
                OutputFormat::Records => rows
                    .iter()
                    .map(|r| {
                        format!(
                            "{}\n",
                            serde_json::to_string(r).expect("bench rows serialize")
                        )
                    })
                    .collect(),
            };
            emit(config, stdout, &text).map(|()| 0)
        }
    }
}

fn generate(config: &RunConfig, args: &GenerateArgs, stdout: &mut dyn Write) -> Result<()> {
    let reduction = |f: &dyn Fn(&Graph) -> Result<ReductionOutput>| -> Result<ReductionOutput> {
        let path = args
            .source
            .as_ref()
            .ok_or_else(|| Error::invalid("reduction kinds need a source graph file"))?;
        f(&read(path)?.graph)
    };
    let need_k = |min: usize| -> Result<usize> {
        let k = args.k.ok_or_else(|| Error::invalid("this kind needs -k"))?;
        if k < min {
            return Err(Error::invalid(format!("this kind needs k >= {min}")));
        }
        Ok(k)
    };
    let out = match args.kind {
        GenerateKind::Basic => {
            let mut out = reduction(&|g| basic_reduction(g))?;
            if let Some(k) = args.k {
                out.instance = out.instance.with_k(k)?;
                out.params.k = Some(k);
            }
            out
        }
        GenerateKind::Majority => {
            let k = need_k(1)?;
            reduction(&|g| majority_hardness_instance(g, k, args.grid_depth))?
        }
        GenerateKind::Constant => {
            let k = need_k(1)?;
            reduction(&|g| constant_threshold_instance(g, k, args.paths, args.pendings))?
        }
        GenerateKind::Clique => {
            let k = need_k(2)?;
            reduction(&|g| clique_reduction(g, k))?
        }
        GenerateKind::Dks => {
            let k = need_k(1)?;
            reduction(&|g| dks_reduction(g, k))?
        }
        GenerateKind::Catalog => return write_catalog(args, stdout),
        GenerateKind::Random => return write_random(args, stdout),
    };
    let text = serialize_instance_with(&out.instance, &out.params.comment_lines());
    match &config.output {
        Some(path) => {
            std::fs::write(path, text)?;
            let mut sidecar = path.clone().into_os_string();
            sidecar.push(".prov");
            std::fs::write(PathBuf::from(sidecar), out.provenance_text())?;
        }
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn corpus_dir(args: &GenerateArgs) -> Result<&Path> {
    let dir = args
        .dir
        .as_deref()
        .ok_or_else(|| Error::invalid("corpus kinds need --dir"))?;
    std::fs::create_dir_all(dir)?;
    Ok(dir)
}

fn corpus_instance(args: &GenerateArgs, g: Graph) -> Result<Instance> {
    let k = args.k.unwrap_or(1).min(g.n());
    let thr = crate::threshold::assign_thresholds(&g, args.scheme)?;
    Instance::new(g, thr, k, None)
}

fn write_catalog(args: &GenerateArgs, stdout: &mut dyn Write) -> Result<()> {
    if args.max_n > 8 {
        return Err(Error::invalid("catalog corpora go up to n = 8"));
    }
    let dir = corpus_dir(args)?;
    let mut written = 0;
    for (n, graphs) in all_graphs_up_to(args.max_n).into_iter().enumerate().skip(1) {
        let keep = graphs
            .into_iter()
            .filter(|g| !args.connected || g.is_connected())
            .filter(|g| args.max_degree.is_none_or(|d| g.max_degree() <= d));
        for (i, g) in keep.enumerate() {
            let inst = corpus_instance(args, g)?;
            std::fs::write(
                dir.join(format!("n{n}-{i:05}.{INSTANCE_EXTENSION}")),
                serialize_instance(&inst),
            )?;
            written += 1;
        }
    }
    writeln!(stdout, "wrote {written} instances to {}", dir.display())?;
    Ok(())
}

fn write_random(args: &GenerateArgs, stdout: &mut dyn Write) -> Result<()> {
    if !(0.0..=1.0).contains(&args.p) {
        return Err(Error::invalid("edge probability must lie in [0, 1]"));
    }
    let dir = corpus_dir(args)?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    for i in 0..args.count {
        let mut b = GraphBuilder::with_vertices(args.n);
        for v in 1..args.n {
            for u in 0..v {
                if rng.gen_bool(args.p) {
                    b.add_edge(u, v);
                }
            }
        }
        let inst = corpus_instance(args, b.freeze()?)?;
        std::fs::write(
            dir.join(format!("r{i:05}.{INSTANCE_EXTENSION}")),
            serialize_instance(&inst),
        )?;
    }
    writeln!(
        stdout,
        "wrote {} instances to {}",
        args.count,
        dir.display()
    )?;
    Ok(())
}
