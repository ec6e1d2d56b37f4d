use super::{
    tops_and_bottoms, InstanceBuilder, Label, ReductionKind, ReductionOutput, ReductionParams, Thr,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::threshold::Scheme;

/// Majority-threshold construction over the basic reduction, with grid depth
/// `depth` in place of the asymptotic padding.
///
/// Creation order: tops `0..n`, bottoms `n..2n`; the `(k+2)`-edges, first
/// `v^t`-`v^b` for each `v`, then `u^t`-`v^b` and `v^t`-`u^b` per source
/// edge; the hub `w` and its `(n + (k+2)(deg v - 1))`-edge to each `v^b`;
/// the grid row by row; `n` pendings per last-row grid vertex;
/// `(deg v + 1)(k+2)` pendings per top; `n + n^2 + (k+2)(2m - n)` pendings on
/// `w`.
///
/// The instance budget is `k + 1` (the tops of a dominating set plus `w`).
pub fn majority_hardness_instance(
    graph: &Graph,
    k: usize,
    depth: usize,
) -> Result<ReductionOutput> {
    if k == 0 || depth == 0 {
        return Err(Error::invalid(
            "majority construction needs k >= 1 and L >= 1",
        ));
    }
    if let Some(v) = graph.isolated_vertices().next() {
        return Err(Error::invalid(format!(
            "majority construction rejects isolated vertices (vertex {v})"
        )));
    }
    let (n, m) = (graph.n(), graph.m());
    let w_gadget = k + 2;
    let mut b = InstanceBuilder::new();
    tops_and_bottoms(&mut b, graph, Thr::Majority, Thr::Majority);
    for v in graph.vertices() {
        b.add_ell_edge(v, n + v, w_gadget);
    }
    for (u, v) in graph.edges() {
        b.add_ell_edge(u, n + v, w_gadget);
        b.add_ell_edge(v, n + u, w_gadget);
    }
    let hub = b.add_vertex(Label::Hub, Thr::Majority);
    for v in graph.vertices() {
        b.add_ell_edge(hub, n + v, n + w_gadget * (graph.degree(v) - 1));
    }
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(depth);
    for j in 0..depth {
        let row: Vec<usize> = (0..n)
            .map(|i| b.add_vertex(Label::Grid(i, j), Thr::Majority))
            .collect();
        for &x in &row {
            match rows.last() {
                None => {
                    for v in graph.vertices() {
                        b.add_edge(x, n + v);
                    }
                    b.add_edge(x, hub);
                }
                Some(prev) => {
                    for &y in prev {
                        b.add_edge(x, y);
                    }
                }
            }
        }
        rows.push(row);
    }
    for &x in rows.last().expect("depth >= 1") {
        b.add_pendings(x, n, Thr::Majority);
    }
    for v in graph.vertices() {
        b.add_pendings(v, (graph.degree(v) + 1) * w_gadget, Thr::Majority);
    }
    b.add_pendings(hub, n + n * n + w_gadget * (2 * m - n), Thr::Majority);

    let expected = 2 * n
        + w_gadget * (n + 2 * m)
        + 1
        + (n * n + w_gadget * (2 * m - n))
        + n * depth
        + n * n
        + w_gadget * (2 * m + n)
        + (n + n * n + w_gadget * (2 * m - n));
    let (instance, labels) = b.finish(Scheme::Majority, (k + 1).min(expected), None)?;
    let mut params = ReductionParams::new(ReductionKind::Majority, graph, expected);
    params.k = Some(k);
    params.grid_depth = Some(depth);
    if instance.graph.n() != expected {
        return Err(Error::invalid(format!(
            "majority tally mismatch: built {} vertices, expected {expected}",
            instance.graph.n()
        )));
    }
    Ok(ReductionOutput {
        instance,
        labels,
        image: graph.vertices().collect(),
        extra: vec![hub],
        params,
    })
}
