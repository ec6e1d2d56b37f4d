//! Fixed-parameter decision procedure for (k,ell)-Influence under unanimity
//! thresholds on bounded-degree graphs.
//!
//! Under unanimity thresholds every activated vertex of positive degree has
//! its whole neighbourhood among the seeds, so the connected components of
//! `G[sigma[S]]` each contain a seed and have small diameter. The solver guesses
//! how `k` and `ell` split across those components (a [`PairProfile`]), finds
//! for each pair the vertices that can *realize* it locally, and searches
//! for pairwise vertex-disjoint realizations.
//!
//! A vertex `v` realizes `(alpha, beta)` when some non-empty `V' subset of N^{2alpha-1}[v]` with
//! `|V'| <= alpha` activates at least `beta` vertices and `sigma[V']` is connected;
//! `sigma[V']` then lies inside `N^{2alpha}[v]`.

use std::collections::{HashMap, HashSet};
use std::rc::Rc;
use std::time::Instant;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::oracles::{subsets_up_to, DecisionResult, SearchConfig};
use crate::propagation::{Propagator, SeedSet};
use crate::threshold::ThresholdAssignment;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RealizationQuery {
    pub v: Vertex,
    /// Seed budget of the component, at least 1.
    pub alpha: usize,
    /// Required number of activated (non-seed) vertices.
    pub beta: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RealizationWitness {
    pub center: Vertex,
    /// V', sorted.
    pub seed_subset: Vec<Vertex>,
    /// sigma[V'], sorted.
    pub realization: Vec<Vertex>,
}

impl RealizationWitness {
    pub fn open_value(&self) -> usize {
        self.realization.len() - self.seed_subset.len()
    }
}

/// Split of budget and target over `x` components: `sum k_i = k`,
/// `sum ell_i = ell`, each `k_i >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairProfile {
    pub pairs: Vec<(usize, usize)>,
}

impl PairProfile {
    pub fn x(&self) -> usize {
        self.pairs.len()
    }
}

impl std::fmt::Display for PairProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(k, l)| format!("({k},{l})"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// All ordered compositions of `(k, ell)` into `x` pairs, in ascending
/// lexicographic order of `(k_1, ell_1, k_2, ell_2, ...)`.
pub fn enumerate_pair_profiles(k: usize, ell: usize, x: usize) -> Vec<PairProfile> {
    fn rec(
        k: usize,
        ell: usize,
        x: usize,
        prefix: &mut Vec<(usize, usize)>,
        out: &mut Vec<PairProfile>,
    ) {
        if x == 1 {
            if k >= 1 {
                prefix.push((k, ell));
                out.push(PairProfile {
                    pairs: prefix.clone(),
                });
                prefix.pop();
            }
            return;
        }
        // leave at least one seed for each later pair
        for ki in 1..=k.saturating_sub(x - 1) {
            for li in 0..=ell {
                prefix.push((ki, li));
                rec(k - ki, ell - li, x - 1, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if x >= 1 && x <= k {
        rec(k, ell, x, &mut Vec::new(), &mut out);
    }
    out
}

/// Counters collected while building realizations.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FptStats {
    /// Seed subsets propagated while building realization tables.
    pub subsets_checked: u64,
    /// Realizations produced (each checked for containment).
    pub witnesses_checked: u64,
    /// Realizations that escaped `N^{2alpha}[v]`; always zero for unanimity.
    pub containment_violations: u64,
    /// Nodes visited by the final disjoint-realization search.
    pub final_check_nodes: u64,
}

#[derive(Debug, Clone)]
struct Realization {
    seeds: Vec<Vertex>,
    closed: Vec<Vertex>,
    open: usize,
}

/// Lazily built per-`(v, alpha)` tables of connected realizations.
struct RealizationIndex {
    graph: Graph,
    thr: ThresholdAssignment,
    cap: u64,
    tables: HashMap<(Vertex, usize), Rc<Vec<Realization>>>,
    stats: FptStats,
}

impl RealizationIndex {
    fn new(graph: Graph, cap: u64) -> Self {
        RealizationIndex {
            thr: ThresholdAssignment::unanimity(&graph),
            graph,
            cap,
            tables: HashMap::new(),
            stats: FptStats::default(),
        }
    }

    /// Every connected realization at `v` with at most `alpha` seeds, in
    /// enumeration order: subsets by size, lexicographic over the ball
    /// listed centre first.
    fn table(&mut self, v: Vertex, alpha: usize) -> Result<Rc<Vec<Realization>>> {
        if let Some(t) = self.tables.get(&(v, alpha)) {
            return Ok(Rc::clone(t));
        }
        let g = &self.graph;
        let mut ball = g.ball(v, 2 * alpha - 1);
        ball.retain(|&u| u != v);
        ball.insert(0, v);
        let needed = subsets_up_to(ball.len(), alpha) - 1;
        if needed > self.cap as u128 {
            return Err(Error::CapExceeded {
                needed,
                cap: self.cap,
            });
        }
        let outer = g.ball(v, 2 * alpha);
        let mut p = Propagator::new(g, &self.thr);
        let mut table = Vec::new();
        for size in 1..=alpha.min(ball.len()) {
            for combo in ball.iter().copied().combinations(size) {
                self.stats.subsets_checked += 1;
                let mut seeds = combo;
                seeds.sort_unstable();
                p.run(&seeds);
                let closed = p.active_vertices();
                if !g.is_connected_subset(&closed) {
                    continue;
                }
                self.stats.witnesses_checked += 1;
                if closed.iter().any(|u| outer.binary_search(u).is_err()) {
                    self.stats.containment_violations += 1;
                }
                table.push(Realization {
                    open: closed.len() - seeds.len(),
                    seeds,
                    closed,
                });
            }
        }
        let table = Rc::new(table);
        self.tables.insert((v, alpha), Rc::clone(&table));
        Ok(table)
    }

    fn is_realizing(&mut self, v: Vertex, alpha: usize, beta: usize) -> Result<bool> {
        Ok(self.table(v, alpha)?.iter().any(|r| r.open >= beta))
    }

    fn witness(&mut self, q: RealizationQuery) -> Result<Option<RealizationWitness>> {
        if q.alpha == 0 {
            return Err(Error::invalid("realization queries need alpha >= 1"));
        }
        Ok(self
            .table(q.v, q.alpha)?
            .iter()
            .find(|r| r.open >= q.beta)
            .map(|r| RealizationWitness {
                center: q.v,
                seed_subset: r.seeds.clone(),
                realization: r.closed.clone(),
            }))
    }
}

/// Whether `query.v` realizes `(alpha, beta)` under unanimity thresholds,
/// with the first witness in enumeration order.
pub fn is_realizing_vertex(
    graph: &Graph,
    query: RealizationQuery,
    cfg: &SearchConfig,
) -> Result<Option<RealizationWitness>> {
    RealizationIndex::new(graph.clone(), cfg.cap).witness(query)
}

/// Connected (k,ell)-Influence: is there `|S| <= k` with `|sigma(S)| >= ell` and
/// `G[sigma[S]]` connected? Answers yes iff some vertex realizes `(k, ell)`.
pub fn solve_connected_influence(
    graph: &Graph,
    k: usize,
    ell: usize,
    cfg: &SearchConfig,
) -> Result<DecisionResult> {
    let started = Instant::now();
    if k == 0 {
        return Ok(if ell == 0 {
            DecisionResult::yes(SeedSet::empty(), 0, started)
        } else {
            DecisionResult::no(0, started)
        });
    }
    let mut index = RealizationIndex::new(graph.clone(), cfg.cap);
    for v in graph.vertices() {
        if let Some(w) = index.witness(RealizationQuery {
            v,
            alpha: k,
            beta: ell,
        })? {
            return Ok(DecisionResult::yes(
                SeedSet::from_sorted(w.seed_subset),
                index.stats.subsets_checked,
                started,
            ));
        }
    }
    Ok(DecisionResult::no(index.stats.subsets_checked, started))
}

/// Realizability table and few-realization set for one profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileSearchState {
    /// `counters[i]` = number of vertices realizing pair `i`.
    pub counters: Vec<usize>,
    /// `table[v][i]` = whether `v` realizes pair `i`.
    pub table: Vec<Vec<bool>>,
    /// Pairs with few realizing vertices, ascending.
    pub few: Vec<usize>,
    /// `2*x*Delta^{4k}`, or `None` when it saturated the cap (then every pair
    /// counts as having few realizations).
    pub few_threshold: Option<u64>,
}

/// Accepted run of the fixed-parameter algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FptDecision {
    pub result: DecisionResult,
    /// Component count and profile that produced the yes answer.
    pub accepting: Option<PairProfile>,
    pub stats: FptStats,
}

/// The fixed-parameter solver for one graph. Realization tables are cached
/// across calls, so deciding many `(k, ell)` on the same graph is cheap.
///
/// Isolated vertices have threshold 0 and activate with any seed set; they
/// are stripped and credited against `ell` before the search runs on the
/// remaining graph.
pub struct FptSolver<'g> {
    graph: &'g Graph,
    thr: ThresholdAssignment,
    map: Vec<Vertex>,
    isolated: usize,
    cfg: SearchConfig,
    index: RealizationIndex,
}

impl<'g> FptSolver<'g> {
    pub fn new(graph: &'g Graph, cfg: SearchConfig) -> Self {
        let keep: Vec<Vertex> = graph.vertices().filter(|&v| graph.degree(v) > 0).collect();
        let isolated = graph.n() - keep.len();
        let (reduced, map) = graph.induced_subgraph(&keep);
        FptSolver {
            graph,
            thr: ThresholdAssignment::unanimity(graph),
            map,
            isolated,
            cfg,
            index: RealizationIndex::new(reduced, cfg.cap),
        }
    }

    pub fn stats(&self) -> FptStats {
        self.index.stats
    }

    fn reduced(&self) -> &Graph {
        &self.index.graph
    }

    fn few_threshold(&self, x: usize, k: usize) -> Option<u64> {
        let delta = self.reduced().max_degree() as u64;
        let mut acc: u64 = 2 * x as u64;
        for _ in 0..4 * k {
            acc = acc.checked_mul(delta)?;
            if acc > self.cfg.cap {
                return None;
            }
        }
        Some(acc)
    }

    /// Realizability table, counters and few-realization set for `profile`
    /// under total budget `k`, on the graph with isolated vertices removed.
    pub fn profile_state(&mut self, k: usize, profile: &PairProfile) -> Result<ProfileSearchState> {
        let n = self.reduced().n();
        let x = profile.x();
        let mut table = vec![vec![false; x]; n];
        let mut counters = vec![0; x];
        for (v, row) in table.iter_mut().enumerate() {
            for (i, &(ki, li)) in profile.pairs.iter().enumerate() {
                if self.index.is_realizing(v, ki, li)? {
                    row[i] = true;
                    counters[i] += 1;
                }
            }
        }
        let few_threshold = self.few_threshold(x, k);
        let few = (0..x)
            .filter(|&i| few_threshold.is_none_or(|t| counters[i] as u64 <= t))
            .collect();
        Ok(ProfileSearchState {
            counters,
            table,
            few,
            few_threshold,
        })
    }

    /// Decides (k,ell)-Influence. Every yes carries a seed set re-verified by
    /// propagation on the input graph.
    pub fn decide(&mut self, k: usize, ell: usize) -> Result<FptDecision> {
        let started = Instant::now();
        let before = self.index.stats;
        let finish = |this: &Self, result: DecisionResult, accepting| FptDecision {
            result,
            accepting,
            stats: diff(this.index.stats, before),
        };
        let target = ell.saturating_sub(self.isolated);
        if target == 0 {
            return Ok(finish(
                self,
                DecisionResult::yes(SeedSet::empty(), 0, started),
                None,
            ));
        }
        if k == 0 || target > k * self.reduced().max_degree() {
            return Ok(finish(self, DecisionResult::no(0, started), None));
        }
        for x in 1..=k {
            for profile in enumerate_pair_profiles(k, target, x) {
                if let Some(seeds) = self.try_profile(k, &profile)? {
                    let seeds = SeedSet::from_sorted(seeds.iter().map(|&v| self.map[v]).collect());
                    let mut p = Propagator::new(self.graph, &self.thr);
                    let open = p.run(&seeds) - seeds.len();
                    if open >= ell {
                        let explored =
                            self.index.stats.final_check_nodes - before.final_check_nodes;
                        return Ok(finish(
                            self,
                            DecisionResult::yes(seeds, explored, started),
                            Some(profile),
                        ));
                    }
                }
            }
        }
        let explored = self.index.stats.final_check_nodes - before.final_check_nodes;
        Ok(finish(self, DecisionResult::no(explored, started), None))
    }

    /// Runs one profile; returns reduced-graph seeds whose propagation
    /// reaches the reduced target.
    fn try_profile(&mut self, k: usize, profile: &PairProfile) -> Result<Option<Vec<Vertex>>> {
        let state = self.profile_state(k, profile)?;
        let n = self.reduced().n();
        if state.few.iter().any(|&i| state.counters[i] == 0) {
            return Ok(None);
        }

        // candidate realizations for the few-realization pairs, drawn from
        // the vertices that survive deletion
        let mut choices: Vec<Vec<(Rc<Vec<Realization>>, usize)>> = Vec::new();
        for &i in &state.few {
            let (ki, li) = profile.pairs[i];
            let mut seen = HashSet::new();
            let mut list = Vec::new();
            for v in 0..n {
                if !state.table[v][i] {
                    continue;
                }
                let t = self.index.table(v, ki)?;
                for (idx, r) in t.iter().enumerate() {
                    if r.open >= li && seen.insert(r.seeds.clone()) {
                        list.push((Rc::clone(&t), idx));
                    }
                }
            }
            choices.push(list);
        }

        let mut used = vec![false; n];
        let mut placed: Vec<Vec<Vertex>> = Vec::new();
        let mut search = FinalSearch {
            choices: &choices,
            used: &mut used,
            placed: &mut placed,
            nodes: 0,
            cap: self.cfg.cap,
        };
        let mut outcome = None;
        let target: usize = profile.pairs.iter().map(|p| p.1).sum();
        let state_ref = &state;
        let many: Vec<usize> = (0..profile.x())
            .filter(|i| !state.few.contains(i))
            .collect();
        let index = &mut self.index;
        let res = search.run(0, &mut |used, placed| {
            let mut used = used.to_vec();
            let mut seeds: Vec<Vertex> = placed.iter().flatten().copied().collect();
            for &j in &many {
                let (kj, lj) = profile.pairs[j];
                let mut found = None;
                'scan: for v in 0..n {
                    if !state_ref.table[v][j] {
                        continue;
                    }
                    for r in index.table(v, kj)?.iter() {
                        if r.open >= lj && r.closed.iter().all(|&u| !used[u]) {
                            found = Some(r.clone());
                            break 'scan;
                        }
                    }
                }
                let Some(r) = found else { return Ok(false) };
                for &u in &r.closed {
                    used[u] = true;
                }
                seeds.extend(r.seeds);
            }
            seeds.sort_unstable();
            seeds.dedup();
            debug_assert!(seeds.len() <= k);
            let mut p = Propagator::new(&index.graph, &index.thr);
            if p.run(&seeds) - seeds.len() >= target {
                outcome = Some(seeds);
                Ok(true)
            } else {
                Ok(false)
            }
        });
        self.index.stats.final_check_nodes += search.nodes;
        res?;
        Ok(outcome)
    }
}

fn diff(after: FptStats, before: FptStats) -> FptStats {
    FptStats {
        subsets_checked: after.subsets_checked - before.subsets_checked,
        witnesses_checked: after.witnesses_checked - before.witnesses_checked,
        containment_violations: after.containment_violations - before.containment_violations,
        final_check_nodes: after.final_check_nodes - before.final_check_nodes,
    }
}

/// Candidate realizations of one pair: a centre's table and an index into it.
type Choices = Vec<(Rc<Vec<Realization>>, usize)>;

/// Accepts a full placement: occupied vertices and the placed seed sets.
type Accept<'a> = dyn FnMut(&[bool], &[Vec<Vertex>]) -> Result<bool> + 'a;

/// Backtracking over pairwise-disjoint realizations, one per
/// few-realization pair.
struct FinalSearch<'a> {
    choices: &'a [Choices],
    used: &'a mut Vec<bool>,
    placed: &'a mut Vec<Vec<Vertex>>,
    nodes: u64,
    cap: u64,
}

impl FinalSearch<'_> {
    fn run(&mut self, depth: usize, accept: &mut Accept<'_>) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::CapExceeded {
                needed: self.nodes as u128,
                cap: self.cap,
            });
        }
        if depth == self.choices.len() {
            return accept(self.used, self.placed);
        }
        for (table, idx) in &self.choices[depth] {
            let r = &table[*idx];
            if r.closed.iter().any(|&u| self.used[u]) {
                continue;
            }
            for &u in &r.closed {
                self.used[u] = true;
            }
            self.placed.push(r.seeds.clone());
            let ok = self.run(depth + 1, accept)?;
            self.placed.pop();
            for &u in &r.closed {
                self.used[u] = false;
            }
            if ok {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// One-shot wrapper around [`FptSolver::decide`].
pub fn solve_influence_fpt(
    graph: &Graph,
    k: usize,
    ell: usize,
    cfg: &SearchConfig,
) -> Result<FptDecision> {
    FptSolver::new(graph, *cfg).decide(k, ell)
}
