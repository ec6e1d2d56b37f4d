//! Benchmark harness: runs solvers over a directory of instance files and
//! joins their values with the exact optimum.

use std::fmt::{self, Write as _};
use std::path::Path;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::approx::{bounded_degree_approx, fpt_ratio_approx, twin_approx_open, RatioSpec};
use crate::error::{Error, Result};
use crate::format::read_instance_file;
use crate::oracles::{solve_max_open_exact, SearchConfig, SolveResult};
use crate::threshold::{Instance, Scheme};

/// Extension of instance files picked up by [`load_corpus`].
pub const INSTANCE_EXTENSION: &str = "inst";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum BenchAlgorithm {
    Exact,
    Twin,
    Greedy,
    FptRatio,
}

impl fmt::Display for BenchAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BenchAlgorithm::Exact => "exact",
            BenchAlgorithm::Twin => "twin",
            BenchAlgorithm::Greedy => "greedy",
            BenchAlgorithm::FptRatio => "fpt-ratio",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub algorithms: Vec<BenchAlgorithm>,
    /// Budget override, capped at each instance's order; otherwise each
    /// instance's own `k`.
    pub k: Option<usize>,
    pub ratio: RatioSpec,
    /// Cap per solver call; `workers` sets how many instances run at once.
    pub search: SearchConfig,
    /// Whether to compute exact optima for the ratio column.
    pub join_optimum: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            algorithms: vec![BenchAlgorithm::Twin],
            k: None,
            ratio: RatioSpec::Log2,
            search: SearchConfig::default(),
            join_optimum: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BenchStatus {
    Ok,
    /// The solver or the optimum oracle hit the exploration cap.
    Cap,
    Error(String),
}

impl fmt::Display for BenchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BenchStatus::Ok => f.write_str("ok"),
            BenchStatus::Cap => f.write_str("cap"),
            BenchStatus::Error(e) => write!(f, "error: {e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub instance: String,
    pub algorithm: BenchAlgorithm,
    pub k: usize,
    pub value: Option<usize>,
    pub optimum: Option<usize>,
    /// `optimum / value` when both are known and `value > 0`.
    pub ratio: Option<f64>,
    #[serde(skip)]
    pub elapsed: Duration,
    pub explored: u64,
    pub status: BenchStatus,
}

/// Instance files in `dir` (non-recursive), sorted by id (the file stem).
pub fn load_corpus(dir: &Path) -> Result<Vec<(String, Result<Instance>)>> {
    if !dir.is_dir() {
        return Err(Error::invalid(format!(
            "corpus directory {} does not exist",
            dir.display()
        )));
    }
    let mut entries: Vec<(String, std::path::PathBuf)> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == INSTANCE_EXTENSION))
        .filter_map(|p| Some((p.file_stem()?.to_str()?.to_string(), p)))
        .collect();
    entries.sort();
    Ok(entries
        .into_iter()
        .map(|(id, path)| (id, read_instance_file(&path)))
        .collect())
}

fn run_one(
    alg: BenchAlgorithm,
    inst: &Instance,
    cfg: &BenchConfig,
    serial: &SearchConfig,
) -> Result<SolveResult> {
    if alg != BenchAlgorithm::Exact && inst.thresholds.scheme() != Scheme::Unanimity {
        return Err(Error::invalid(format!("{alg} needs unanimity thresholds")));
    }
    match alg {
        BenchAlgorithm::Exact => solve_max_open_exact(inst, serial),
        BenchAlgorithm::Twin => Ok(twin_approx_open(&inst.graph, inst.k)),
        BenchAlgorithm::Greedy => Ok(bounded_degree_approx(&inst.graph, inst.k)),
        BenchAlgorithm::FptRatio => {
            fpt_ratio_approx(&inst.graph, inst.k, &cfg.ratio, serial).map(|r| r.result)
        }
    }
}

fn status_of(e: &Error) -> BenchStatus {
    if e.is_cap_exceeded() {
        BenchStatus::Cap
    } else {
        BenchStatus::Error(e.to_string())
    }
}

fn bench_instance(id: &str, inst: &Result<Instance>, cfg: &BenchConfig) -> Vec<BenchRecord> {
    let serial = SearchConfig {
        workers: 1,
        ..cfg.search
    };
    let failed = |alg, k, status: BenchStatus| BenchRecord {
        instance: id.to_string(),
        algorithm: alg,
        k,
        value: None,
        optimum: None,
        ratio: None,
        elapsed: Duration::ZERO,
        explored: 0,
        status,
    };
    let inst = match inst {
        Ok(i) => match cfg.k {
            Some(k) => i.clone().with_k(k.min(i.graph.n())),
            None => Ok(i.clone()),
        },
        Err(e) => Err(Error::invalid(e.to_string())),
    };
    let inst = match inst {
        Ok(i) => i,
        Err(e) => {
            return cfg
                .algorithms
                .iter()
                .map(|&a| failed(a, cfg.k.unwrap_or(0), status_of(&e)))
                .collect()
        }
    };
    let optimum = cfg
        .join_optimum
        .then(|| solve_max_open_exact(&inst, &serial));
    cfg.algorithms
        .iter()
        .map(|&alg| {
            let started = Instant::now();
            let run = run_one(alg, &inst, cfg, &serial);
            let elapsed = started.elapsed();
            let r = match run {
                Ok(r) => r,
                Err(e) => {
                    let mut rec = failed(alg, inst.k, status_of(&e));
                    rec.elapsed = elapsed;
                    return rec;
                }
            };
            let (opt_value, status) = match &optimum {
                None => (None, BenchStatus::Ok),
                Some(Ok(o)) => (Some(o.open_value), BenchStatus::Ok),
                Some(Err(e)) => (None, status_of(e)),
            };
            let ratio = match opt_value {
                Some(o) if r.open_value > 0 => Some(o as f64 / r.open_value as f64),
                _ => None,
            };
            BenchRecord {
                instance: id.to_string(),
                algorithm: alg,
                k: inst.k,
                value: Some(r.open_value),
                optimum: opt_value,
                ratio,
                elapsed,
                explored: r.explored,
                status,
            }
        })
        .collect()
}

/// Runs the configured algorithms on every instance, in parallel over
/// instances. Rows are sorted by instance id, then algorithm.
pub fn bench_instances(
    corpus: &[(String, Result<Instance>)],
    cfg: &BenchConfig,
) -> Vec<BenchRecord> {
    let work = || -> Vec<BenchRecord> {
        corpus
            .par_iter()
            .flat_map_iter(|(id, inst)| bench_instance(id, inst, cfg))
            .collect()
    };
    let mut rows = if cfg.search.workers > 1 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.search.workers)
            .build()
            .expect("thread pool")
            .install(work)
    } else {
        corpus
            .iter()
            .flat_map(|(id, inst)| bench_instance(id, inst, cfg))
            .collect()
    };
    rows.sort_by(|a, b| (&a.instance, a.algorithm).cmp(&(&b.instance, b.algorithm)));
    rows
}

pub fn bench_suite(dir: &Path, cfg: &BenchConfig) -> Result<Vec<BenchRecord>> {
    Ok(bench_instances(&load_corpus(dir)?, cfg))
}

/// Tab-delimited table. Timings are left out unless asked for, so that
/// the same corpus and configuration give byte-identical output.
pub fn render_bench(rows: &[BenchRecord], timings: bool) -> String {
    let mut out = String::from("instance\talgorithm\tk\tvalue\toptimum\tratio\texplored\tstatus");
    if timings {
        out.push_str("\telapsed_ms");
    }
    out.push('\n');
    let dash = || "-".to_string();
    for r in rows {
        let _ = write!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.instance,
            r.algorithm,
            r.k,
            r.value.map_or_else(dash, |v| v.to_string()),
            r.optimum.map_or_else(dash, |v| v.to_string()),
            r.ratio.map_or_else(dash, |v| format!("{v:.4}")),
            r.explored,
            r.status,
        );
        if timings {
            let _ = write!(out, "\t{:.3}", r.elapsed.as_secs_f64() * 1e3);
        }
        out.push('\n');
    }
    out
}
