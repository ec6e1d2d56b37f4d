use super::{InstanceBuilder, Label, ReductionKind, ReductionOutput, ReductionParams, Thr};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles::binomial;
use crate::threshold::Scheme;

/// Copies of `V` (indices `0..n`) followed by `k+1` edge-vertices per source
/// edge, edges in ascending order. Unanimity thresholds; the target is
/// `ell = (k+1)*C(k,2)`, reachable with `k` seeds iff `G` has a `k`-clique.
///
/// Copies of isolated source vertices get threshold 1 instead of 0 so they
/// stay inert; the scheme is then general rather than unanimity.
pub fn clique_reduction(graph: &Graph, k: usize) -> Result<ReductionOutput> {
    if k < 2 {
        return Err(Error::invalid("clique reduction needs k >= 2"));
    }
    let n = graph.n();
    let mut b = InstanceBuilder::new();
    for v in graph.vertices() {
        let thr = if graph.degree(v) == 0 {
            Thr::Fixed(1)
        } else {
            Thr::Degree
        };
        b.add_vertex(Label::Copy(v), thr);
    }
    for (u, v) in graph.edges() {
        for copy in 0..=k {
            let e = b.add_vertex(Label::EdgeVertex(u, v, copy), Thr::Degree);
            b.add_edge(u, e).add_edge(v, e);
        }
    }
    let ell = (k + 1) * binomial(k, 2) as usize;
    let expected = n + (k + 1) * graph.m();
    let budget = k.min(expected);
    let scheme = if graph.isolated_vertices().next().is_some() {
        Scheme::General
    } else {
        Scheme::Unanimity
    };
    let (instance, labels) = b.finish(scheme, budget, Some(ell))?;
    let mut params = ReductionParams::new(ReductionKind::Clique, graph, expected);
    params.k = Some(k);
    Ok(ReductionOutput {
        instance,
        labels,
        image: graph.vertices().collect(),
        extra: Vec::new(),
        params,
    })
}
