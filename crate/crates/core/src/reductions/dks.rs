use super::{InstanceBuilder, Label, ReductionKind, ReductionOutput, ReductionParams, Thr};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::threshold::Scheme;

/// Copies of `V` (indices `0..n`), one edge-vertex per source edge in
/// ascending order, then `k+1` guards adjacent to every copy. Unanimity
/// thresholds. For `k < n` the best open influence with `k` seeds equals the
/// densest-`k`-subgraph edge count: the guards keep seeded copies from
/// activating anything but edge-vertices.
pub fn dks_reduction(graph: &Graph, k: usize) -> Result<ReductionOutput> {
    if k == 0 {
        return Err(Error::invalid("densest-subgraph reduction needs k >= 1"));
    }
    let n = graph.n();
    let mut b = InstanceBuilder::new();
    for v in graph.vertices() {
        b.add_vertex(Label::Copy(v), Thr::Degree);
    }
    for (u, v) in graph.edges() {
        let e = b.add_vertex(Label::EdgeVertex(u, v, 0), Thr::Degree);
        b.add_edge(u, e).add_edge(v, e);
    }
    for guard in 0..=k {
        let x = b.add_vertex(Label::Guard(guard), Thr::Degree);
        for v in graph.vertices() {
            b.add_edge(v, x);
        }
    }
    let expected = n + graph.m() + k + 1;
    let (instance, labels) = b.finish(Scheme::Unanimity, k, None)?;
    let mut params = ReductionParams::new(ReductionKind::Dks, graph, expected);
    params.k = Some(k);
    Ok(ReductionOutput {
        instance,
        labels,
        image: graph.vertices().collect(),
        extra: Vec::new(),
        params,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::oracles::{classic_brute_force, solve_max_open_exact, ClassicProblem, SearchConfig};

    fn both_sides(g: &Graph, k: usize) -> (usize, usize) {
        let cfg = SearchConfig::default();
        let out = dks_reduction(g, k).unwrap();
        let target = solve_max_open_exact(&out.instance, &cfg)
            .unwrap()
            .open_value;
        let source = classic_brute_force(ClassicProblem::DensestSubgraph, g, k, &cfg)
            .unwrap()
            .value;
        (source, target)
    }

    #[test]
    fn small_graph_values() {
        assert_eq!(both_sides(&named::complete(3), 2), (1, 1));
        assert_eq!(both_sides(&named::star(3), 2), (1, 1));
        for k in 1..4 {
            assert_eq!(both_sides(&Graph::empty(4), k), (0, 0));
        }
    }

    #[test]
    fn guards_fire_once_every_copy_is_seeded() {
        let out = dks_reduction(&named::path(2), 2).unwrap();
        let best = solve_max_open_exact(&out.instance, &SearchConfig::default()).unwrap();
        // both copies seeded: the edge-vertex and all three guards activate
        assert_eq!(best.open_value, 4);
    }
}
