use super::{
    tops_and_bottoms, InstanceBuilder, Label, ReductionKind, ReductionOutput, ReductionParams, Thr,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::threshold::Scheme;

/// Thresholds-at-most-two construction over the basic reduction, with
/// `paths` paths and `pendings` pendings per path terminus in place of the
/// asymptotic padding.
///
/// Creation order: tops `0..n` (threshold 2), bottoms `n..2n` (threshold 1);
/// a directed-edge gadget `v^t -> v^b` per `v`, then `u^t -> v^b` and
/// `v^t -> u^b` per source edge; then for each path `j` its vertices
/// `p_1..p_{n-1}` (threshold 2), the gadgets `v_1^b -> p_1` and
/// `v_i^b -> p_{i-1}` for `i = 2..n`, and the pendings on `p_{n-1}`.
pub fn constant_threshold_instance(
    graph: &Graph,
    k: usize,
    paths: usize,
    pendings: usize,
) -> Result<ReductionOutput> {
    let n = graph.n();
    if n < 2 {
        return Err(Error::invalid(
            "constant-threshold construction needs n >= 2",
        ));
    }
    if k == 0 || paths == 0 || pendings == 0 {
        return Err(Error::invalid(
            "constant-threshold construction needs k, P, Q >= 1",
        ));
    }
    let mut b = InstanceBuilder::new();
    tops_and_bottoms(&mut b, graph, Thr::Fixed(2), Thr::Fixed(1));
    for v in graph.vertices() {
        b.add_directed_edge_gadget(v, n + v);
    }
    for (u, v) in graph.edges() {
        b.add_directed_edge_gadget(u, n + v);
        b.add_directed_edge_gadget(v, n + u);
    }
    for j in 0..paths {
        let path: Vec<usize> = (0..n - 1)
            .map(|i| b.add_vertex(Label::Path(i, j), Thr::Fixed(2)))
            .collect();
        for w in path.windows(2) {
            b.add_edge(w[0], w[1]);
        }
        b.add_directed_edge_gadget(n, path[0]);
        for i in 1..n {
            b.add_directed_edge_gadget(n + i, path[i - 1]);
        }
        b.add_pendings(path[n - 2], pendings, Thr::Fixed(1));
    }
    let expected = 2 * n + 4 * (n + 2 * graph.m()) + paths * (n - 1 + 4 * n + pendings);
    let (instance, labels) = b.finish(Scheme::Constant(2), k.min(expected), None)?;
    debug_assert_eq!(instance.graph.n(), expected);
    let mut params = ReductionParams::new(ReductionKind::Constant, graph, expected);
    params.k = Some(k);
    params.paths = Some(paths);
    params.pendings = Some(pendings);
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
    use crate::oracles::{solve_max_closed_exact, SearchConfig};
    use crate::propagation::{propagate, SeedSet};

    #[test]
    fn path_center_reaches_every_pending() {
        let out = constant_threshold_instance(&named::path(3), 1, 2, 3).unwrap();
        let s = out.forward_map(&[1]).unwrap();
        let tr = propagate(&out.instance.graph, &out.instance.thresholds, &s);
        let pend = out.vertices_labeled(|l| *l == Label::Pending);
        assert_eq!(pend.len(), 6);
        assert!(pend
            .iter()
            .all(|p| tr.final_closed.binary_search(p).is_ok()));
        let termini = out.vertices_labeled(|l| matches!(l, Label::Path(1, _)));
        assert_eq!(termini.len(), 2);
        assert!(termini
            .iter()
            .all(|p| tr.final_closed.binary_search(p).is_ok()));
        assert_eq!(out.instance.graph.n(), out.params.expected_vertices);
    }

    #[test]
    fn two_edges_single_seed_reaches_no_pending() {
        let out = constant_threshold_instance(&named::matching(2), 1, 1, 1).unwrap();
        let g = &out.instance.graph;
        let pend = out.vertices_labeled(|l| *l == Label::Pending);
        let on_path = |v: usize| matches!(out.labels[v], Label::Path(..) | Label::Pending);
        for s in g.vertices().filter(|&s| !on_path(s)) {
            let tr = propagate(
                g,
                &out.instance.thresholds,
                &SeedSet::new(vec![s], g.n()).unwrap(),
            );
            assert!(pend
                .iter()
                .all(|p| tr.final_closed.binary_search(p).is_err()));
        }
        // a seed on the path reaches at most the Q pendings of that path
        let best = solve_max_closed_exact(&out.instance, &SearchConfig::default()).unwrap();
        let closed = crate::propagation::sigma_closed(g, &out.instance.thresholds, &best.seeds);
        assert!(
            pend.iter()
                .filter(|p| closed.binary_search(p).is_ok())
                .count()
                <= 1
        );
        assert!(best.closed_value < g.n());
    }

    #[test]
    fn thresholds_at_most_two() {
        for g in [named::g5(), named::path(2), Graph::empty(3)] {
            let out = constant_threshold_instance(&g, 1, 1, 1).unwrap();
            assert!(out.instance.thresholds.values().iter().all(|&t| t <= 2));
            assert_eq!(out.instance.thresholds.scheme(), Scheme::Constant(2));
            assert_eq!(out.instance.graph.n(), out.params.expected_vertices);
        }
    }

    #[test]
    fn rejects_tiny_graphs() {
        assert!(constant_threshold_instance(&Graph::empty(1), 1, 1, 1).is_err());
    }
}
