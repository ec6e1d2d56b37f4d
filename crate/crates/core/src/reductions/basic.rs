use super::{
    tops_and_bottoms, InstanceBuilder, ReductionKind, ReductionOutput, ReductionParams, Thr,
};
use crate::error::Result;
use crate::graph::Graph;
use crate::threshold::Scheme;

/// Bipartite graph with a top copy `v^t` (index `v`) and a bottom copy `v^b`
/// (index `n + v`) per source vertex. `v^t` is adjacent to `v^b` and to the
/// bottoms of the neighbours of `v`. Tops need all of their bottoms,
/// bottoms need one top. A dominating set of size `k` maps to `k` tops that
/// activate everything.
///
/// The instance budget is 0; callers set it with [`Instance::with_k`].
///
/// [`Instance::with_k`]: crate::threshold::Instance::with_k
pub fn basic_reduction(graph: &Graph) -> Result<ReductionOutput> {
    let n = graph.n();
    let mut b = InstanceBuilder::new();
    tops_and_bottoms(&mut b, graph, Thr::Degree, Thr::Fixed(1));
    for v in graph.vertices() {
        b.add_edge(v, n + v);
    }
    for (u, v) in graph.edges() {
        b.add_edge(u, n + v).add_edge(v, n + u);
    }
    let (instance, labels) = b.finish(Scheme::General, 0, None)?;
    Ok(ReductionOutput {
        instance,
        labels,
        image: graph.vertices().collect(),
        extra: Vec::new(),
        params: ReductionParams::new(ReductionKind::Basic, graph, 2 * n),
    })
}
