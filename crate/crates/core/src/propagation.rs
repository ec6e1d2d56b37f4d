//! Synchronous round-based threshold activation.
//!
//! Seeds are active at step 0. At step `t+1` every inactive vertex with at
//! least `thr(v)` neighbours active after step `t` activates. The process
//! stops at the first round that activates nothing. A vertex of threshold 0
//! therefore activates in round 1 even when no seed is chosen.

use std::fmt::Write as _;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::threshold::ThresholdAssignment;

/// Sorted, duplicate-free set of seed vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeedSet(Vec<Vertex>);

impl SeedSet {
    pub fn empty() -> Self {
        SeedSet(Vec::new())
    }

    /// Sorts `vertices` and rejects duplicates or indices `>= n`.
    pub fn new(mut vertices: Vec<Vertex>, n: usize) -> Result<Self> {
        vertices.sort_unstable();
        if let Some(&v) = vertices.iter().find(|&&v| v >= n) {
            return Err(Error::invalid(format!(
                "seed {v} out of range for {n} vertices"
            )));
        }
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("duplicate seed {}", w[0])));
        }
        Ok(SeedSet(vertices))
    }

    /// Caller guarantees the input is sorted and duplicate-free.
    pub(crate) fn from_sorted(vertices: Vec<Vertex>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        SeedSet(vertices)
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }
}

impl Deref for SeedSet {
    type Target = [Vertex];

    fn deref(&self) -> &[Vertex] {
        &self.0
    }
}

/// Per-round record of a propagation run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActivationTrace {
    pub seeds: SeedSet,
    /// `rounds[r]` holds the vertices first activated at step `r + 1`, sorted.
    /// Only non-empty rounds are stored.
    pub rounds: Vec<Vec<Vertex>>,
    /// sigma[S], sorted.
    pub final_closed: Vec<Vertex>,
    /// sigma(S) = sigma[S] \ S, sorted.
    pub final_open: Vec<Vertex>,
}

impl ActivationTrace {
    pub fn open_value(&self) -> usize {
        self.final_open.len()
    }

    pub fn closed_value(&self) -> usize {
        self.final_closed.len()
    }

    /// One line per round, newly activated indices ascending.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (r, round) in self.rounds.iter().enumerate() {
            let _ = write!(out, "round {}:", r + 1);
            for v in round {
                let _ = write!(out, " {v}");
            }
            out.push('\n');
        }
        out
    }
}

/// Reusable propagation state for repeated runs on one graph.
///
/// The brute-force solvers evaluate millions of seed sets; this avoids
/// reallocating the per-vertex buffers for each of them.
pub struct Propagator<'a> {
    graph: &'a Graph,
    thr: &'a [u32],
    active: Vec<bool>,
    count: Vec<u32>,
    frontier: Vec<Vertex>,
    next: Vec<Vertex>,
    touched: Vec<Vertex>,
    rounds: usize,
    closed: usize,
}

impl<'a> Propagator<'a> {
    pub fn new(graph: &'a Graph, thresholds: &'a ThresholdAssignment) -> Self {
        assert_eq!(
            graph.n(),
            thresholds.len(),
            "threshold count must match vertex count"
        );
        let n = graph.n();
        Propagator {
            graph,
            thr: thresholds.values(),
            active: vec![false; n],
            count: vec![0; n],
            frontier: Vec::new(),
            next: Vec::new(),
            touched: Vec::new(),
            rounds: 0,
            closed: 0,
        }
    }

    /// Runs the process from `seeds` and returns `|sigma[S]|`. Afterwards
    /// [`is_active`](Self::is_active) reflects sigma[S].
    pub fn run(&mut self, seeds: &[Vertex]) -> usize {
        self.run_inner(seeds, None)
    }

    fn run_inner(
        &mut self,
        seeds: &[Vertex],
        mut rounds_out: Option<&mut Vec<Vec<Vertex>>>,
    ) -> usize {
        self.active.iter_mut().for_each(|a| *a = false);
        self.count.iter_mut().for_each(|c| *c = 0);
        self.rounds = 0;
        self.frontier.clear();
        for &s in seeds {
            if !self.active[s] {
                self.active[s] = true;
                self.frontier.push(s);
            }
        }
        self.closed = self.frontier.len();
        self.bump_counts();

        // Round 1 must consider every vertex, since threshold-0 vertices
        // activate without any active neighbour.
        self.next.clear();
        for v in self.graph.vertices() {
            if !self.active[v] && self.count[v] >= self.thr[v] {
                self.next.push(v);
            }
        }
        loop {
            if self.next.is_empty() {
                break;
            }
            self.rounds += 1;
            for &v in &self.next {
                self.active[v] = true;
            }
            self.closed += self.next.len();
            if let Some(out) = rounds_out.as_deref_mut() {
                let mut round = self.next.clone();
                round.sort_unstable();
                out.push(round);
            }
            std::mem::swap(&mut self.frontier, &mut self.next);
            self.bump_counts();
            self.next.clear();
            for &v in &self.touched {
                if !self.active[v] && self.count[v] >= self.thr[v] {
                    self.next.push(v);
                }
            }
        }
        self.closed
    }

    /// Adds the frontier's contribution to neighbour counts and records the
    /// inactive neighbours it touched (each once).
    fn bump_counts(&mut self) {
        self.touched.clear();
        for &u in &self.frontier {
            for &w in self.graph.neighbors(u) {
                self.count[w] += 1;
                if !self.active[w] {
                    self.touched.push(w);
                }
            }
        }
        self.touched.sort_unstable();
        self.touched.dedup();
    }

    pub fn is_active(&self, v: Vertex) -> bool {
        self.active[v]
    }

    /// Number of non-empty rounds in the last run.
    pub fn rounds(&self) -> usize {
        self.rounds
    }

    /// `|sigma[S]|` of the last run.
    pub fn closed_value(&self) -> usize {
        self.closed
    }

    pub fn active_vertices(&self) -> Vec<Vertex> {
        self.graph.vertices().filter(|&v| self.active[v]).collect()
    }

    /// Full trace for `seeds`.
    pub fn trace(&mut self, seeds: &SeedSet) -> ActivationTrace {
        let mut rounds = Vec::new();
        self.run_inner(seeds, Some(&mut rounds));
        let final_closed = self.active_vertices();
        let final_open = final_closed
            .iter()
            .copied()
            .filter(|v| seeds.binary_search(v).is_err())
            .collect();
        ActivationTrace {
            seeds: seeds.clone(),
            rounds,
            final_closed,
            final_open,
        }
    }
}

pub fn propagate(graph: &Graph, thr: &ThresholdAssignment, seeds: &SeedSet) -> ActivationTrace {
    Propagator::new(graph, thr).trace(seeds)
}

/// sigma(S), sorted.
pub fn sigma_open(graph: &Graph, thr: &ThresholdAssignment, seeds: &SeedSet) -> Vec<Vertex> {
    propagate(graph, thr, seeds).final_open
}

/// sigma[S] = sigma(S) union S, sorted.
pub fn sigma_closed(graph: &Graph, thr: &ThresholdAssignment, seeds: &SeedSet) -> Vec<Vertex> {
    propagate(graph, thr, seeds).final_closed
}
