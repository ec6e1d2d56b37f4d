//! Exact brute-force solvers.
//!
//! These enumerate candidate vertex sets in a fixed canonical order (by
//! size, then lexicographically) and serve as ground truth for the
//! approximation, fixed-parameter and reduction code. Every solver refuses
//! to start when the number of candidates exceeds [`SearchConfig::cap`].

use std::time::{Duration, Instant};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::propagation::{Propagator, SeedSet};
use crate::threshold::{Instance, Scheme, ThresholdAssignment};

pub const DEFAULT_CAP: u64 = 10_000_000;

/// Exploration budget and parallelism for enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of candidate sets a single search may examine.
    pub cap: u64,
    /// Worker threads; 1 runs on the calling thread.
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            cap: DEFAULT_CAP,
            workers: 1,
        }
    }
}

impl SearchConfig {
    pub fn with_cap(cap: u64) -> Self {
        SearchConfig {
            cap,
            ..Self::default()
        }
    }

    pub fn check(&self, needed: u128) -> Result<()> {
        if needed > self.cap as u128 {
            Err(Error::CapExceeded {
                needed,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }
}

/// Outcome of an optimisation run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub seeds: SeedSet,
    /// |sigma(S)|
    pub open_value: usize,
    /// |sigma[S]|
    pub closed_value: usize,
    pub exact: bool,
    pub explored: u64,
    pub elapsed: Duration,
}

impl SolveResult {
    /// Re-propagates `seeds` and fills in both values.
    pub fn evaluate(
        graph: &Graph,
        thr: &ThresholdAssignment,
        seeds: SeedSet,
        exact: bool,
        explored: u64,
        started: Instant,
    ) -> Self {
        let mut p = Propagator::new(graph, thr);
        let closed_value = p.run(&seeds);
        SolveResult {
            open_value: closed_value - seeds.len(),
            closed_value,
            seeds,
            exact,
            explored,
            elapsed: started.elapsed(),
        }
    }
}

/// Answer to (k,ell)-Influence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionResult {
    pub answer: bool,
    /// Present iff `answer`; re-propagation gives `|sigma(witness)| >= ell`.
    pub witness: Option<SeedSet>,
    pub explored: u64,
    pub elapsed: Duration,
}

impl DecisionResult {
    pub(crate) fn no(explored: u64, started: Instant) -> Self {
        DecisionResult {
            answer: false,
            witness: None,
            explored,
            elapsed: started.elapsed(),
        }
    }

    pub(crate) fn yes(witness: SeedSet, explored: u64, started: Instant) -> Self {
        DecisionResult {
            answer: true,
            witness: Some(witness),
            explored,
            elapsed: started.elapsed(),
        }
    }
}

/// `C(n, k)`, saturating.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Number of subsets of an `n`-set with size at most `k`.
pub fn subsets_up_to(n: usize, k: usize) -> u128 {
    (0..=k.min(n)).fold(0u128, |acc, j| acc.saturating_add(binomial(n, j)))
}

/// Enumerates the `j`-subsets of `0..n` in lexicographic order, split by
/// smallest element so partitions can be scanned in parallel and merged
/// deterministically.
pub(crate) struct Scanner {
    pool: Option<rayon::ThreadPool>,
}

impl Scanner {
    pub(crate) fn new(workers: usize) -> Self {
        let pool = (workers > 1).then(|| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .expect("thread pool")
        });
        Scanner { pool }
    }

    fn partition(n: usize, j: usize, first: usize) -> impl Iterator<Item = Vec<Vertex>> {
        (first + 1..n).combinations(j - 1).map(move |mut rest| {
            rest.insert(0, first);
            rest
        })
    }

    fn map_partitions<T: Send>(&self, n: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
        match &self.pool {
            Some(pool) => pool.install(|| (0..n).into_par_iter().map(&f).collect()),
            None => (0..n).map(f).collect(),
        }
    }

    /// Highest-scoring `j`-subset, ties to the lexicographically smallest.
    pub(crate) fn best_of_size<E, S>(
        &self,
        n: usize,
        j: usize,
        init: impl Fn() -> E + Sync + Send,
        score: impl Fn(&mut E, &[Vertex]) -> S + Sync + Send,
    ) -> (Option<(S, Vec<Vertex>)>, u64)
    where
        S: Ord + Copy + Send,
    {
        if j == 0 {
            let mut env = init();
            return (Some((score(&mut env, &[]), Vec::new())), 1);
        }
        if j > n {
            return (None, 0);
        }
        let parts = self.map_partitions(n, |first| {
            let mut env = init();
            let mut best: Option<(S, Vec<Vertex>)> = None;
            let mut seen = 0u64;
            for set in Self::partition(n, j, first) {
                seen += 1;
                let s = score(&mut env, &set);
                if best.as_ref().is_none_or(|(b, _)| s > *b) {
                    best = Some((s, set));
                }
            }
            (best, seen)
        });
        let explored = parts.iter().map(|(_, c)| c).sum();
        // partitions are in lexicographic order, so a strict comparison keeps
        // the earliest maximiser
        let best = parts
            .into_iter()
            .filter_map(|(b, _)| b)
            .fold(None, |acc, cand| match acc {
                None => Some(cand),
                Some(cur) if cand.0 > cur.0 => Some(cand),
                keep => keep,
            });
        (best, explored)
    }

    /// Lexicographically first `j`-subset satisfying `pred`. The explored
    /// count is the canonical position of the hit (or the total when none
    /// exists), independent of the worker count.
    pub(crate) fn first_of_size<E>(
        &self,
        n: usize,
        j: usize,
        init: impl Fn() -> E + Sync + Send,
        pred: impl Fn(&mut E, &[Vertex]) -> bool + Sync + Send,
    ) -> (Option<Vec<Vertex>>, u64) {
        if j == 0 {
            let mut env = init();
            return (pred(&mut env, &[]).then(Vec::new), 1);
        }
        if j > n {
            return (None, 0);
        }
        let parts = self.map_partitions(n, |first| {
            let mut env = init();
            let mut seen = 0u64;
            for set in Self::partition(n, j, first) {
                seen += 1;
                if pred(&mut env, &set) {
                    return (Some(set), seen);
                }
            }
            (None, seen)
        });
        let mut explored = 0;
        for (hit, seen) in parts {
            explored += seen;
            if hit.is_some() {
                return (hit, explored);
            }
        }
        (None, explored)
    }
}

fn influence_guard(instance: &Instance, cfg: &SearchConfig) -> Result<()> {
    cfg.check(subsets_up_to(instance.graph.n(), instance.k))
}

#[derive(Clone, Copy)]
enum Objective {
    Open,
    Closed,
}

fn solve_max_exact(
    instance: &Instance,
    cfg: &SearchConfig,
    objective: Objective,
) -> Result<SolveResult> {
    let started = Instant::now();
    influence_guard(instance, cfg)?;
    let (g, thr) = (&instance.graph, &instance.thresholds);
    let scanner = Scanner::new(cfg.workers);
    let mut best: Option<(usize, Vec<Vertex>)> = None;
    let mut explored = 0;
    for j in 0..=instance.k {
        let (hit, seen) = scanner.best_of_size(
            g.n(),
            j,
            || Propagator::new(g, thr),
            |p, set| {
                let closed = p.run(set);
                match objective {
                    Objective::Open => closed - set.len(),
                    Objective::Closed => closed,
                }
            },
        );
        explored += seen;
        if let Some((value, set)) = hit {
            let better = match &best {
                None => true,
                Some((bv, bs)) => value > *bv || (value == *bv && set < *bs),
            };
            if better {
                best = Some((value, set));
            }
        }
    }
    let (_, seeds) = best.expect("the empty set is always a candidate");
    Ok(SolveResult::evaluate(
        g,
        thr,
        SeedSet::from_sorted(seeds),
        true,
        explored,
        started,
    ))
}

/// Max Open k-Influence: maximise `|sigma(S)|` over `|S| <= k`; ties go to the
/// lexicographically smallest seed set.
pub fn solve_max_open_exact(instance: &Instance, cfg: &SearchConfig) -> Result<SolveResult> {
    solve_max_exact(instance, cfg, Objective::Open)
}

/// Max Closed k-Influence: maximise `|sigma[S]|` over `|S| <= k`.
pub fn solve_max_closed_exact(instance: &Instance, cfg: &SearchConfig) -> Result<SolveResult> {
    solve_max_exact(instance, cfg, Objective::Closed)
}

/// Upper bound `kDelta + #isolated` on the open optimum under unanimity
/// thresholds: each positive-degree activated vertex has its whole
/// neighbourhood among the seeds, and isolated vertices activate for free.
pub fn unanimity_open_bound(graph: &Graph, k: usize) -> usize {
    k * graph.max_degree() + graph.isolated_vertices().count()
}

/// (k,ell)-Influence. Seed sets are tried from size `k` down to 0; the witness
/// is the lexicographically first hit of the largest size that has one.
pub fn decide_influence(instance: &Instance, cfg: &SearchConfig) -> Result<DecisionResult> {
    let started = Instant::now();
    let ell = instance
        .ell
        .ok_or_else(|| Error::invalid("decision problem needs an activation target ell"))?;
    if ell == 0 {
        return Ok(DecisionResult::yes(SeedSet::empty(), 1, started));
    }
    let (g, thr) = (&instance.graph, &instance.thresholds);
    if thr.scheme() == Scheme::Unanimity && ell > unanimity_open_bound(g, instance.k) {
        return Ok(DecisionResult::no(0, started));
    }
    influence_guard(instance, cfg)?;
    let scanner = Scanner::new(cfg.workers);
    let mut explored = 0;
    for j in (0..=instance.k).rev() {
        let (hit, seen) = scanner.first_of_size(
            g.n(),
            j,
            || Propagator::new(g, thr),
            |p, set| p.run(set) - set.len() >= ell,
        );
        explored += seen;
        if let Some(set) = hit {
            return Ok(DecisionResult::yes(
                SeedSet::from_sorted(set),
                explored,
                started,
            ));
        }
    }
    Ok(DecisionResult::no(explored, started))
}

/// Classical problems used as the source side of the reductions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ClassicProblem {
    /// Is there a dominating set of size at most k?
    DominatingSet,
    /// Is there a clique of size k?
    Clique,
    /// Minimum vertex cover (k ignored).
    VertexCover,
    /// Maximum independent set, as the complement of a minimum vertex cover.
    IndependentSet,
    /// Maximum number of edges induced by exactly k vertices.
    DensestSubgraph,
}

impl std::str::FromStr for ClassicProblem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "dominating-set" => ClassicProblem::DominatingSet,
            "clique" => ClassicProblem::Clique,
            "vertex-cover" => ClassicProblem::VertexCover,
            "independent-set" => ClassicProblem::IndependentSet,
            "densest-k-subgraph" => ClassicProblem::DensestSubgraph,
            other => return Err(Error::invalid(format!("unknown problem `{other}`"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicResult {
    pub problem: ClassicProblem,
    /// For the decision problems, whether a solution exists.
    pub found: bool,
    /// Witness size, or the induced edge count for densest subgraph.
    pub value: usize,
    pub witness: Vec<Vertex>,
    pub explored: u64,
}

pub fn is_dominating_set(graph: &Graph, set: &[Vertex]) -> bool {
    let mut dominated = vec![false; graph.n()];
    for &v in set {
        dominated[v] = true;
        for &w in graph.neighbors(v) {
            dominated[w] = true;
        }
    }
    dominated.into_iter().all(|d| d)
}

pub fn is_clique(graph: &Graph, set: &[Vertex]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| graph.has_edge(u, v)))
}

pub fn is_vertex_cover(graph: &Graph, set: &[Vertex]) -> bool {
    let mut inside = vec![false; graph.n()];
    for &v in set {
        inside[v] = true;
    }
    graph.edges().all(|(u, v)| inside[u] || inside[v])
}

pub fn induced_edge_count(graph: &Graph, set: &[Vertex]) -> usize {
    set.iter()
        .enumerate()
        .map(|(i, &u)| {
            set[i + 1..]
                .iter()
                .filter(|&&v| graph.has_edge(u, v))
                .count()
        })
        .sum()
}

/// Smallest-size, lexicographically first set satisfying `pred`, trying
/// sizes in `sizes` order; the cap is checked before each size.
fn first_by_size(
    scanner: &Scanner,
    graph: &Graph,
    sizes: impl Iterator<Item = usize>,
    cfg: &SearchConfig,
    pred: impl Fn(&[Vertex]) -> bool + Sync + Send,
) -> Result<(Option<Vec<Vertex>>, u64)> {
    let mut explored = 0u64;
    for j in sizes {
        cfg.check(explored as u128 + binomial(graph.n(), j))?;
        let (hit, seen) = scanner.first_of_size(graph.n(), j, || (), |_, s| pred(s));
        explored += seen;
        if hit.is_some() {
            return Ok((hit, explored));
        }
    }
    Ok((None, explored))
}

pub fn classic_brute_force(
    problem: ClassicProblem,
    graph: &Graph,
    k: usize,
    cfg: &SearchConfig,
) -> Result<ClassicResult> {
    let n = graph.n();
    if k > n && problem == ClassicProblem::DensestSubgraph {
        return Err(Error::invalid(format!("k={k} exceeds n={n}")));
    }
    let scanner = Scanner::new(cfg.workers);
    let done = |found: bool, value: usize, witness: Vec<Vertex>, explored: u64| ClassicResult {
        problem,
        found,
        value,
        witness,
        explored,
    };
    match problem {
        ClassicProblem::DominatingSet => {
            let (hit, explored) = first_by_size(&scanner, graph, 0..=k.min(n), cfg, |s| {
                is_dominating_set(graph, s)
            })?;
            Ok(match hit {
                Some(w) => done(true, w.len(), w, explored),
                None => done(false, 0, Vec::new(), explored),
            })
        }
        ClassicProblem::Clique if k > n => Ok(done(false, 0, Vec::new(), 0)),
        ClassicProblem::Clique => {
            let (hit, explored) = first_by_size(&scanner, graph, std::iter::once(k), cfg, |s| {
                is_clique(graph, s)
            })?;
            Ok(match hit {
                Some(w) => done(true, k, w, explored),
                None => done(false, 0, Vec::new(), explored),
            })
        }
        ClassicProblem::VertexCover | ClassicProblem::IndependentSet => {
            let (hit, explored) =
                first_by_size(&scanner, graph, 0..=n, cfg, |s| is_vertex_cover(graph, s))?;
            let cover = hit.expect("V is always a vertex cover");
            Ok(if problem == ClassicProblem::VertexCover {
                done(true, cover.len(), cover, explored)
            } else {
                let independent: Vec<Vertex> = graph
                    .vertices()
                    .filter(|v| cover.binary_search(v).is_err())
                    .collect();
                done(true, independent.len(), independent, explored)
            })
        }
        ClassicProblem::DensestSubgraph => {
            cfg.check(binomial(n, k))?;
            let (hit, explored) =
                scanner.best_of_size(n, k, || (), |_, s| induced_edge_count(graph, s));
            let (value, witness) = hit.expect("k <= n");
            Ok(done(true, value, witness, explored))
        }
    }
}
