//! Gadget constructions from Dominating Set, Clique and Densest k-Subgraph
//! into influence instances, with the forward solution map and a harness
//! checking each construction against the brute-force oracles.
//!
//! Vertex numbering is deterministic: each construction documents the order
//! in which it creates vertices, and every vertex carries a [`Label`].

mod basic;
mod clique;
mod constant;
mod dks;
mod majority;
pub mod verify;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use basic::basic_reduction;
pub use clique::clique_reduction;
pub use constant::constant_threshold_instance;
pub use dks::dks_reduction;
pub use majority::majority_hardness_instance;
pub use verify::{verify_reduction, Fault, SideReport, VerifyParams, VerifyReport};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, Vertex};
use crate::propagation::SeedSet;
use crate::threshold::{Instance, Scheme, ThresholdAssignment};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionKind {
    Basic,
    Majority,
    Constant,
    Clique,
    Dks,
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReductionKind::Basic => "basic",
            ReductionKind::Majority => "majority",
            ReductionKind::Constant => "constant",
            ReductionKind::Clique => "clique",
            ReductionKind::Dks => "dks",
        })
    }
}

impl FromStr for ReductionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "basic" => ReductionKind::Basic,
            "majority" => ReductionKind::Majority,
            "constant" => ReductionKind::Constant,
            "clique" => ReductionKind::Clique,
            "dks" => ReductionKind::Dks,
            other => return Err(Error::invalid(format!("unknown reduction kind `{other}`"))),
        })
    }
}

/// Role of a gadget vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GadgetPart {
    /// Member of an ell-edge.
    Connector,
    A,
    B,
    C,
    D,
}

/// Provenance of a generated vertex. Source vertices and grid/path
/// coordinates are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Top(Vertex),
    Bottom(Vertex),
    Gadget(GadgetPart),
    Pending,
    /// Grid vertex `x_i^j`: column `i`, row `j`.
    Grid(usize, usize),
    Hub,
    /// Copy `b` of the edge-vertex for source edge `{u, v}`.
    EdgeVertex(Vertex, Vertex, usize),
    /// Position `i` on path `j`.
    Path(usize, usize),
    Copy(Vertex),
    Guard(usize),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Top(v) => write!(f, "top {v}"),
            Label::Bottom(v) => write!(f, "bottom {v}"),
            Label::Gadget(GadgetPart::Connector) => write!(f, "gadget connector"),
            Label::Gadget(GadgetPart::A) => write!(f, "gadget a"),
            Label::Gadget(GadgetPart::B) => write!(f, "gadget b"),
            Label::Gadget(GadgetPart::C) => write!(f, "gadget c"),
            Label::Gadget(GadgetPart::D) => write!(f, "gadget d"),
            Label::Pending => write!(f, "pending"),
            Label::Grid(i, j) => write!(f, "grid {i} {j}"),
            Label::Hub => write!(f, "hub"),
            Label::EdgeVertex(u, v, b) => write!(f, "edge-vertex {u} {v} {b}"),
            Label::Path(i, j) => write!(f, "path {i} {j}"),
            Label::Copy(v) => write!(f, "copy {v}"),
            Label::Guard(b) => write!(f, "guard {b}"),
        }
    }
}

/// Threshold rule for a vertex, resolved when the builder finishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Thr {
    Fixed(u32),
    /// `deg(v)` in the finished graph.
    Degree,
    /// `ceil(deg(v)/2)` in the finished graph.
    Majority,
}

/// Padding and budget parameters used by a construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionParams {
    pub kind: ReductionKind,
    pub source_n: usize,
    pub source_m: usize,
    pub k: Option<usize>,
    /// Grid depth of the majority construction.
    pub grid_depth: Option<usize>,
    /// Number of paths of the constant-threshold construction.
    pub paths: Option<usize>,
    /// Pendings per path terminus of the constant-threshold construction.
    pub pendings: Option<usize>,
    /// Vertex count predicted by the closed-form tally.
    pub expected_vertices: usize,
}

impl ReductionParams {
    fn new(kind: ReductionKind, source: &Graph, expected_vertices: usize) -> Self {
        ReductionParams {
            kind,
            source_n: source.n(),
            source_m: source.m(),
            k: None,
            grid_depth: None,
            paths: None,
            pendings: None,
            expected_vertices,
        }
    }

    /// `c param ...` comment lines for the instance file.
    pub fn comment_lines(&self) -> Vec<String> {
        let mut out = vec![
            format!("param kind {}", self.kind),
            format!("param source-n {}", self.source_n),
            format!("param source-m {}", self.source_m),
        ];
        let optional = [
            ("k", self.k),
            ("grid-depth", self.grid_depth),
            ("paths", self.paths),
            ("pendings", self.pendings),
        ];
        for (name, value) in optional {
            if let Some(v) = value {
                out.push(format!("param {name} {v}"));
            }
        }
        out
    }
}

/// Generated instance with provenance and the forward solution map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub instance: Instance,
    pub labels: Vec<Label>,
    /// `image[v]` is the target vertex representing source vertex `v`.
    pub image: Vec<Vertex>,
    /// Target vertices added to every mapped solution (the hub).
    pub extra: Vec<Vertex>,
    pub params: ReductionParams,
}

impl ReductionOutput {
    /// Seed set in the target corresponding to the source solution `set`.
    pub fn forward_map(&self, set: &[Vertex]) -> Result<SeedSet> {
        let n = self.image.len();
        let mut out = Vec::with_capacity(set.len() + self.extra.len());
        for &v in set {
            if v >= n {
                return Err(Error::invalid(format!(
                    "source vertex {v} out of range for {n}"
                )));
            }
            out.push(self.image[v]);
        }
        out.extend_from_slice(&self.extra);
        SeedSet::new(out, self.instance.graph.n())
    }

    /// Sidecar text: one `index label` line per vertex.
    pub fn provenance_text(&self) -> String {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| format!("{i} {l}\n"))
            .collect()
    }

    pub fn vertices_labeled(&self, pred: impl Fn(&Label) -> bool) -> Vec<Vertex> {
        (0..self.labels.len())
            .filter(|&v| pred(&self.labels[v]))
            .collect()
    }
}

/// Mutable construction state: graph, labels and threshold rules.
#[derive(Debug, Default)]
pub struct InstanceBuilder {
    graph: GraphBuilder,
    labels: Vec<Label>,
    rules: Vec<Thr>,
}

impl InstanceBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn add_vertex(&mut self, label: Label, thr: Thr) -> Vertex {
        let v = self.graph.add_vertex();
        self.labels.push(label);
        self.rules.push(thr);
        v
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> &mut Self {
        self.graph.add_edge(u, v);
        self
    }

    /// Attaches `count` degree-one vertices to `v`.
    pub fn add_pendings(&mut self, v: Vertex, count: usize, thr: Thr) -> &mut Self {
        for _ in 0..count {
            let p = self.add_vertex(Label::Pending, thr);
            self.add_edge(v, p);
        }
        self
    }

    /// ell-edge: `ell` new threshold-1 vertices, each adjacent to `u` and `v`.
    pub fn add_ell_edge(&mut self, u: Vertex, v: Vertex, ell: usize) -> &mut Self {
        for _ in 0..ell {
            let c = self.add_vertex(Label::Gadget(GadgetPart::Connector), Thr::Fixed(1));
            self.add_edge(u, c).add_edge(v, c);
        }
        self
    }

    /// Directed edge from `u` to `v`: a 4-cycle `a-b-c-d` with `a ~ u`,
    /// `c ~ v`, thresholds `a = b = d = 1` and `c = 2`. Returns `[a, b, c, d]`.
    pub fn add_directed_edge_gadget(&mut self, u: Vertex, v: Vertex) -> [Vertex; 4] {
        let a = self.add_vertex(Label::Gadget(GadgetPart::A), Thr::Fixed(1));
        let b = self.add_vertex(Label::Gadget(GadgetPart::B), Thr::Fixed(1));
        let c = self.add_vertex(Label::Gadget(GadgetPart::C), Thr::Fixed(2));
        let d = self.add_vertex(Label::Gadget(GadgetPart::D), Thr::Fixed(1));
        self.add_edge(a, b)
            .add_edge(b, c)
            .add_edge(c, d)
            .add_edge(d, a);
        self.add_edge(u, a).add_edge(v, c);
        [a, b, c, d]
    }

    /// Freezes the graph, resolves thresholds and tags them with `scheme`.
    pub fn finish(
        self,
        scheme: Scheme,
        k: usize,
        ell: Option<usize>,
    ) -> Result<(Instance, Vec<Label>)> {
        let graph = self.graph.freeze()?;
        let values = self
            .rules
            .iter()
            .enumerate()
            .map(|(v, rule)| match rule {
                Thr::Fixed(t) => *t,
                Thr::Degree => graph.degree(v) as u32,
                Thr::Majority => graph.degree(v).div_ceil(2) as u32,
            })
            .collect();
        let thresholds = ThresholdAssignment::with_scheme(&graph, values, scheme)?;
        Ok((Instance::new(graph, thresholds, k, ell)?, self.labels))
    }
}

/// Top copies `0..n`, bottom copies `n..2n`, with the self edge and both
/// cross edges per source edge. Shared by the dominating-set constructions.
fn tops_and_bottoms(b: &mut InstanceBuilder, g: &Graph, top: Thr, bottom: Thr) {
    for v in g.vertices() {
        b.add_vertex(Label::Top(v), top);
    }
    for v in g.vertices() {
        b.add_vertex(Label::Bottom(v), bottom);
    }
}
