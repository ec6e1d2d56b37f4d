//! Grouping vertices by identical open neighbourhood.

use std::collections::BTreeMap;

use crate::graph::{Graph, Vertex};

/// Vertices sharing one open neighbourhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinClass {
    /// Sorted members.
    pub members: Vec<Vertex>,
    /// Common degree, equal to `|N(v)|` for every member.
    pub degree: usize,
}

impl TwinClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Partition of `V` into maximal false-twin classes, ordered by smallest
/// member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    pub classes: Vec<TwinClass>,
}

impl TwinPartition {
    pub fn class_of(&self, v: Vertex) -> Option<&TwinClass> {
        self.classes
            .iter()
            .find(|c| c.members.binary_search(&v).is_ok())
    }
}

/// Two vertices land in the same class iff `N(u) = N(v)`. Adjacent vertices
/// never share an open neighbourhood, so every class is independent.
pub fn false_twin_classes(graph: &Graph) -> TwinPartition {
    let mut by_neighborhood: BTreeMap<&[Vertex], Vec<Vertex>> = BTreeMap::new();
    for v in graph.vertices() {
        by_neighborhood
            .entry(graph.neighbors(v))
            .or_default()
            .push(v);
    }
    let mut classes: Vec<TwinClass> = by_neighborhood
        .into_iter()
        .map(|(nbhd, members)| TwinClass {
            members,
            degree: nbhd.len(),
        })
        .collect();
    classes.sort_by_key(|c| c.members[0]);
    TwinPartition { classes }
}
