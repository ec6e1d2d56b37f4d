//! Exhaustive catalog of small graphs up to isomorphism.
//!
//! Graphs on `n` vertices are obtained from those on `n - 1` by adding a
//! vertex with every possible neighbourhood, then deduplicated by a
//! canonical code: colour refinement followed by individualization of the
//! first non-singleton cell, keeping the smallest adjacency code over all
//! leaves of the search tree. The code is exact, not a heuristic.

use std::collections::BTreeSet;

use crate::graph::{Graph, Vertex};

/// Largest order whose adjacency code fits in a `u64`.
pub const MAX_ORDER: usize = 11;

fn pair_bit(i: usize, j: usize) -> u32 {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    (j * (j - 1) / 2 + i) as u32
}

/// Adjacency bits of `graph` relabelled by `pos`.
fn code_under(graph: &Graph, pos: &[usize]) -> u64 {
    graph
        .edges()
        .fold(0u64, |acc, (u, v)| acc | 1 << pair_bit(pos[u], pos[v]))
}

/// Refines `colour` to the coarsest equitable partition it contains.
/// Colours are ranks: a cell's colour is the number of vertices in cells
/// ordered before it.
fn refine(graph: &Graph, colour: &mut [usize]) {
    let n = graph.n();
    let mut cells = distinct(colour);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = graph.neighbors(v).iter().map(|&w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<usize>)> = signatures.iter().collect();
        sorted.sort();
        for v in 0..n {
            colour[v] = sorted.partition_point(|s| *s < &signatures[v]);
        }
        let now = distinct(colour);
        if now == cells {
            return;
        }
        cells = now;
    }
}

fn distinct(colour: &[usize]) -> usize {
    colour.iter().collect::<BTreeSet<_>>().len()
}

fn search(graph: &Graph, colour: Vec<usize>, best: &mut Option<u64>) {
    let n = graph.n();
    let mut size = vec![0usize; n];
    for &c in &colour {
        size[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| size[c] > 1) else {
        let code = code_under(graph, &colour);
        if best.is_none_or(|b| code < b) {
            *best = Some(code);
        }
        return;
    };
    for v in (0..n).filter(|&v| colour[v] == target) {
        let mut next = colour.clone();
        for (u, c) in next.iter_mut().enumerate() {
            if *c == target && u != v {
                *c = target + 1;
            }
        }
        refine(graph, &mut next);
        search(graph, next, best);
    }
}

/// Isomorphism-invariant code: two graphs of the same order are isomorphic
/// iff their codes are equal.
pub fn canonical_code(graph: &Graph) -> u64 {
    let n = graph.n();
    assert!(
        n <= MAX_ORDER,
        "canonical codes support at most {MAX_ORDER} vertices"
    );
    if n == 0 {
        return 0;
    }
    let mut colour = vec![0; n];
    refine(graph, &mut colour);
    let mut best = None;
    search(graph, colour, &mut best);
    best.expect("search reaches at least one leaf")
}

/// Graph on `n` vertices with the given adjacency code.
pub fn from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if code >> pair_bit(i, j) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("codes describe simple graphs")
}

/// Canonical representative of the isomorphism class of `graph`.
pub fn canonical_form(graph: &Graph) -> Graph {
    from_code(graph.n(), canonical_code(graph))
}

/// All graphs of each order `0..=max_n` up to isomorphism; entry `n` is
/// sorted by canonical code.
pub fn all_graphs_up_to(max_n: usize) -> Vec<Vec<Graph>> {
    assert!(
        max_n <= MAX_ORDER,
        "catalog supports at most {MAX_ORDER} vertices"
    );
    let mut levels: Vec<Vec<u64>> = vec![vec![0]];
    for n in 1..=max_n {
        let mut codes = BTreeSet::new();
        for &code in &levels[n - 1] {
            let base = from_code(n - 1, code);
            let base_edges: Vec<(Vertex, Vertex)> = base.edges().collect();
            for mask in 0u32..1 << (n - 1) {
                let mut edges = base_edges.clone();
                edges.extend(
                    (0..n - 1)
                        .filter(|&u| mask >> u & 1 == 1)
                        .map(|u| (u, n - 1)),
                );
                let g = Graph::from_edges(n, &edges).expect("augmentation keeps graphs simple");
                codes.insert(canonical_code(&g));
            }
        }
        levels.push(codes.into_iter().collect());
    }
    levels
        .into_iter()
        .enumerate()
        .map(|(n, codes)| codes.into_iter().map(|c| from_code(n, c)).collect())
        .collect()
}

pub fn all_graphs(n: usize) -> Vec<Graph> {
    all_graphs_up_to(n).pop().expect("level n exists")
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}

/// Connected graphs of every order `1..=max_n`, by increasing order.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    all_graphs_up_to(max_n)
        .into_iter()
        .skip(1)
        .flatten()
        .filter(Graph::is_connected)
        .collect()
}
