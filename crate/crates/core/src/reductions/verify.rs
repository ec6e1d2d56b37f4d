use std::fmt::Write as _;

use serde::Serialize;

use super::{basic_reduction, clique_reduction, dks_reduction, ReductionKind};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::oracles::{
    classic_brute_force, decide_influence, solve_max_closed_exact, solve_max_open_exact,
    ClassicProblem, SearchConfig,
};
use crate::threshold::{Instance, ThresholdAssignment};

/// Deliberate corruption of one target threshold, for harness self-tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fault {
    /// Target-instance vertex.
    pub vertex: Vertex,
    pub threshold: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyParams {
    pub k: usize,
    pub fault: Option<Fault>,
}

impl VerifyParams {
    pub fn new(k: usize) -> Self {
        VerifyParams { k, fault: None }
    }
}

/// Outcome of one oracle side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SideReport {
    pub problem: String,
    /// Decision answer, or for value comparisons whether a value was found.
    pub answer: Option<bool>,
    pub value: Option<usize>,
    pub witness: Option<Vec<Vertex>>,
    pub explored: u64,
    /// Set when the oracle failed.
    pub error: Option<String>,
    pub cap_exceeded: bool,
}

impl SideReport {
    fn failed(problem: &str, err: Error) -> Self {
        SideReport {
            problem: problem.to_string(),
            answer: None,
            value: None,
            witness: None,
            explored: 0,
            cap_exceeded: err.is_cap_exceeded(),
            error: Some(err.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub kind: ReductionKind,
    pub k: usize,
    pub faulted: bool,
    pub source: SideReport,
    pub target: SideReport,
    /// `None` when either side failed.
    pub agree: Option<bool>,
}

impl VerifyReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let verdict = match self.agree {
            Some(true) => "agree",
            Some(false) => "disagree",
            None => "incomplete",
        };
        let _ = writeln!(out, "kind\t{}", self.kind);
        let _ = writeln!(out, "k\t{}", self.k);
        let _ = writeln!(out, "fault\t{}", if self.faulted { "on" } else { "off" });
        for (side, r) in [("source", &self.source), ("target", &self.target)] {
            let answer = match (r.answer, r.value) {
                (_, Some(v)) => v.to_string(),
                (Some(true), None) => "yes".into(),
                (Some(false), None) => "no".into(),
                (None, None) => "-".into(),
            };
            let witness = r
                .witness
                .as_ref()
                .map(|w| {
                    w.iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .unwrap_or_else(|| "-".into());
            let _ = write!(out, "{side}\t{}\t{answer}\t{witness}", r.problem);
            if let Some(e) = &r.error {
                let _ = write!(out, "\t{e}");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "verdict\t{verdict}");
        out
    }
}

fn apply_fault(instance: Instance, fault: Option<Fault>) -> Result<Instance> {
    let Some(f) = fault else { return Ok(instance) };
    let n = instance.graph.n();
    if f.vertex >= n {
        return Err(Error::invalid(format!(
            "fault vertex {} out of range for {n}",
            f.vertex
        )));
    }
    let mut values = instance.thresholds.values().to_vec();
    values[f.vertex] = f.threshold;
    Instance::new(
        instance.graph,
        ThresholdAssignment::general(values),
        instance.k,
        instance.ell,
    )
}

/// Runs the source-side classic oracle and the target-side influence
/// oracle on the construction of `kind` and compares them:
///
/// - `basic`: dominating set of size `k` iff `k` seeds activate every vertex;
/// - `clique`: `k`-clique iff the `(k, (k+1)*C(k,2))` decision is yes;
/// - `dks`: densest-`k`-subgraph edge count equals the best open influence
///   (needs `k < n`).
///
/// The two sides run concurrently. Oracle failures are reported per side.
pub fn verify_reduction(
    kind: ReductionKind,
    source: &Graph,
    params: VerifyParams,
    cfg: &SearchConfig,
) -> Result<VerifyReport> {
    let k = params.k;
    let (source_side, target_side): (SideReport, SideReport) = match kind {
        ReductionKind::Basic => {
            let out = basic_reduction(source)?;
            let target = apply_fault(out.instance.with_k(k.min(2 * source.n()))?, params.fault)?;
            rayon::join(
                || {
                    decision_side(
                        ClassicProblem::DominatingSet,
                        "dominating-set",
                        source,
                        k,
                        cfg,
                    )
                },
                || {
                    let name = "full-activation";
                    match solve_max_closed_exact(&target, cfg) {
                        Ok(r) => {
                            let full = r.closed_value == target.graph.n();
                            SideReport {
                                problem: name.into(),
                                answer: Some(full),
                                value: None,
                                witness: full.then(|| r.seeds.into_vec()),
                                explored: r.explored,
                                error: None,
                                cap_exceeded: false,
                            }
                        }
                        Err(e) => SideReport::failed(name, e),
                    }
                },
            )
        }
        ReductionKind::Clique => {
            let out = clique_reduction(source, k)?;
            let target = apply_fault(out.instance, params.fault)?;
            rayon::join(
                || decision_side(ClassicProblem::Clique, "clique", source, k, cfg),
                || {
                    let name = "influence-decision";
                    match decide_influence(&target, cfg) {
                        Ok(r) => SideReport {
                            problem: name.into(),
                            answer: Some(r.answer),
                            value: None,
                            witness: r.witness.map(|w| w.into_vec()),
                            explored: r.explored,
                            error: None,
                            cap_exceeded: false,
                        },
                        Err(e) => SideReport::failed(name, e),
                    }
                },
            )
        }
        ReductionKind::Dks => {
            if k >= source.n() {
                return Err(Error::invalid(format!(
                    "densest-subgraph equivalence needs k < n (k={k}, n={})",
                    source.n()
                )));
            }
            let out = dks_reduction(source, k)?;
            let target = apply_fault(out.instance, params.fault)?;
            rayon::join(
                || {
                    let name = "densest-k-subgraph";
                    match classic_brute_force(ClassicProblem::DensestSubgraph, source, k, cfg) {
                        Ok(r) => SideReport {
                            problem: name.into(),
                            answer: Some(true),
                            value: Some(r.value),
                            witness: Some(r.witness),
                            explored: r.explored,
                            error: None,
                            cap_exceeded: false,
                        },
                        Err(e) => SideReport::failed(name, e),
                    }
                },
                || {
                    let name = "max-open-influence";
                    match solve_max_open_exact(&target, cfg) {
                        Ok(r) => SideReport {
                            problem: name.into(),
                            answer: Some(true),
                            value: Some(r.open_value),
                            witness: Some(r.seeds.into_vec()),
                            explored: r.explored,
                            error: None,
                            cap_exceeded: false,
                        },
                        Err(e) => SideReport::failed(name, e),
                    }
                },
            )
        }
        ReductionKind::Majority | ReductionKind::Constant => {
            return Err(Error::invalid(format!(
                "verification covers basic, clique and dks, not {kind}"
            )))
        }
    };
    let agree = match (&source_side, &target_side) {
        (s, t) if s.error.is_some() || t.error.is_some() => None,
        (s, t) => Some(s.answer == t.answer && s.value == t.value),
    };
    Ok(VerifyReport {
        kind,
        k,
        faulted: params.fault.is_some(),
        source: source_side,
        target: target_side,
        agree,
    })
}

fn decision_side(
    problem: ClassicProblem,
    name: &str,
    g: &Graph,
    k: usize,
    cfg: &SearchConfig,
) -> SideReport {
    match classic_brute_force(problem, g, k, cfg) {
        Ok(r) => SideReport {
            problem: name.into(),
            answer: Some(r.found),
            value: None,
            witness: r.found.then_some(r.witness),
            explored: r.explored,
            error: None,
            cap_exceeded: false,
        },
        Err(e) => SideReport::failed(name, e),
    }
}
