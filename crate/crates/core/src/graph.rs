//! Immutable undirected simple graphs over dense vertex indices.

use std::collections::VecDeque;

use crate::error::GraphError;

/// Dense vertex index in `[0, n)`.
pub type Vertex = usize;

/// Undirected simple graph with sorted adjacency lists.
///
/// Graphs are frozen: build them through [`GraphBuilder`] or
/// [`Graph::from_edges`], which reject self-loops, duplicate edges and
/// out-of-range endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut b = GraphBuilder::with_vertices(n);
        for &(u, v) in edges {
            b.add_edge(u, v);
        }
        b.freeze()
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, adj)| adj.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn isolated_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.vertices().filter(|&v| self.degree(v) == 0)
    }

    /// `N^radius[v]`: every vertex within distance `radius` of `v`, sorted.
    pub fn ball(&self, v: Vertex, radius: usize) -> Vec<Vertex> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::new();
        dist[v] = 0;
        queue.push_back(v);
        let mut out = vec![v];
        while let Some(u) = queue.pop_front() {
            if dist[u] == radius {
                continue;
            }
            for &w in &self.adjacency[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    out.push(w);
                    queue.push_back(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Whether `set` (sorted or not) induces a connected subgraph.
    /// The empty set counts as connected.
    pub fn is_connected_subset(&self, set: &[Vertex]) -> bool {
        if set.is_empty() {
            return true;
        }
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![set[0]];
        seen[set[0]] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adjacency[u] {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == set.len()
    }

    pub fn is_connected(&self) -> bool {
        let all: Vec<Vertex> = self.vertices().collect();
        self.is_connected_subset(&all)
    }

    /// Whether no edge joins two members of `set`.
    pub fn is_independent(&self, set: &[Vertex]) -> bool {
        set.iter()
            .all(|&u| set.iter().all(|&v| u == v || !self.has_edge(u, v)))
    }

    /// Subgraph induced by `keep` (any order, no duplicates). Returns the
    /// subgraph and the map from new indices to old ones, in the order
    /// `keep` was sorted into.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut old_of_new = keep.to_vec();
        old_of_new.sort_unstable();
        let mut new_of_old = vec![usize::MAX; self.n()];
        for (i, &v) in old_of_new.iter().enumerate() {
            new_of_old[v] = i;
        }
        let adjacency: Vec<Vec<Vertex>> = old_of_new
            .iter()
            .map(|&v| {
                self.adjacency[v]
                    .iter()
                    .filter_map(|&w| (new_of_old[w] != usize::MAX).then_some(new_of_old[w]))
                    .collect()
            })
            .collect();
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        (
            Graph {
                adjacency,
                edge_count,
            },
            old_of_new,
        )
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(
            other
                .adjacency
                .iter()
                .map(|adj| adj.iter().map(|&w| w + shift).collect()),
        );
        Graph {
            adjacency,
            edge_count: self.edge_count + other.edge_count,
        }
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut b = GraphBuilder::with_vertices(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    b.add_edge(u, v);
                }
            }
        }
        b.freeze().expect("complement of a simple graph is simple")
    }
}

/// Mutable single-owner graph under construction. Validation happens in
/// [`GraphBuilder::freeze`].
#[derive(Debug, Clone, Default)]
pub struct GraphBuilder {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(n: usize) -> Self {
        GraphBuilder {
            n,
            edges: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.n += 1;
        self.n - 1
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> &mut Self {
        self.edges.push((u, v));
        self
    }

    pub fn freeze(self) -> Result<Graph, GraphError> {
        let n = self.n;
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &self.edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, adj) in adjacency.iter_mut().enumerate() {
            adj.sort_unstable();
            if let Some(w) = adj.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0];
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(Graph {
            adjacency,
            edge_count: self.edges.len(),
        })
    }
}

/// Small named graphs used throughout tests and examples.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    /// `count` disjoint edges `{2i, 2i+1}`.
    pub fn matching(count: usize) -> Graph {
        let edges: Vec<_> = (0..count).map(|i| (2 * i, 2 * i + 1)).collect();
        Graph::from_edges(2 * count, &edges).unwrap()
    }

    /// Five-vertex graph with edges 12, 23, 34, 45, 25, 13 (0-based here).
    pub fn g5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 4), (0, 2)]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(3, &[(1, 5)]),
            Err(GraphError::VertexOutOfRange { vertex: 5, n: 3 })
        );
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted() {
        let g = named::g5();
        assert_eq!(g.m(), 6);
        for u in g.vertices() {
            assert!(g.neighbors(u).windows(2).all(|w| w[0] < w[1]));
            for &v in g.neighbors(u) {
                assert!(g.has_edge(v, u));
            }
        }
        assert_eq!(g.neighbors(1), &[0, 2, 4]);
        assert_eq!(g.max_degree(), 3);
    }

    #[test]
    fn balls_grow_by_distance() {
        let g = named::path(6);
        assert_eq!(g.ball(2, 0), vec![2]);
        assert_eq!(g.ball(2, 1), vec![1, 2, 3]);
        assert_eq!(g.ball(2, 3), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(g.ball(0, 2), vec![0, 1, 2]);
    }

    #[test]
    fn connectivity_and_independence() {
        let g = named::cycle(4);
        assert!(g.is_connected());
        assert!(g.is_connected_subset(&[0, 1, 2]));
        assert!(!g.is_connected_subset(&[0, 2]));
        assert!(g.is_independent(&[0, 2]));
        assert!(!g.is_independent(&[0, 1]));
        assert!(!named::matching(2).is_connected());
    }

    #[test]
    fn induced_and_union() {
        let g = named::g5();
        let (h, map) = g.induced_subgraph(&[4, 1, 2]);
        assert_eq!(map, vec![1, 2, 4]);
        assert_eq!(h.m(), 2);
        let u = named::path(3).disjoint_union(&named::path(2));
        assert_eq!(u.n(), 5);
        assert_eq!(u.m(), 3);
        assert!(u.has_edge(3, 4));
        assert_eq!(named::complete(4).complement().m(), 0);
    }
}
