//! Threshold assignments and problem instances.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// How the thresholds of an assignment were derived.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Scheme {
    General,
    /// `thr(v) = ceil(deg(v)/2)`
    Majority,
    /// `thr(v) = deg(v)`
    Unanimity,
    /// Every threshold is at most the constant.
    Constant(u32),
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scheme::General => write!(f, "general"),
            Scheme::Majority => write!(f, "majority"),
            Scheme::Unanimity => write!(f, "unanimity"),
            Scheme::Constant(c) => write!(f, "constant {c}"),
        }
    }
}

impl std::str::FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split_whitespace();
        let scheme = match (parts.next(), parts.next()) {
            (Some("general"), None) => Scheme::General,
            (Some("majority"), None) => Scheme::Majority,
            (Some("unanimity"), None) => Scheme::Unanimity,
            (Some("constant"), Some(c)) => Scheme::Constant(
                c.parse()
                    .map_err(|_| Error::invalid(format!("bad constant in scheme `{s}`")))?,
            ),
            _ => return Err(Error::invalid(format!("unknown threshold scheme `{s}`"))),
        };
        if parts.next().is_some() {
            return Err(Error::invalid(format!("unknown threshold scheme `{s}`")));
        }
        Ok(scheme)
    }
}

/// Per-vertex activation thresholds tagged with the scheme they satisfy.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThresholdAssignment {
    values: Vec<u32>,
    scheme: Scheme,
}

impl ThresholdAssignment {
    pub fn majority(graph: &Graph) -> Self {
        ThresholdAssignment {
            values: graph
                .vertices()
                .map(|v| graph.degree(v).div_ceil(2) as u32)
                .collect(),
            scheme: Scheme::Majority,
        }
    }

    pub fn unanimity(graph: &Graph) -> Self {
        ThresholdAssignment {
            values: graph.vertices().map(|v| graph.degree(v) as u32).collect(),
            scheme: Scheme::Unanimity,
        }
    }

    pub fn general(values: Vec<u32>) -> Self {
        ThresholdAssignment {
            values,
            scheme: Scheme::General,
        }
    }

    /// Explicit values bounded by `c`.
    pub fn constant(values: Vec<u32>, c: u32) -> Result<Self> {
        if let Some(v) = values.iter().position(|&t| t > c) {
            return Err(Error::invalid(format!(
                "threshold {} of vertex {v} exceeds constant {c}",
                values[v]
            )));
        }
        Ok(ThresholdAssignment {
            values,
            scheme: Scheme::Constant(c),
        })
    }

    /// Tags `values` with `scheme` after checking the scheme invariant.
    pub fn with_scheme(graph: &Graph, values: Vec<u32>, scheme: Scheme) -> Result<Self> {
        let t = ThresholdAssignment { values, scheme };
        t.validate(graph)?;
        Ok(t)
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn get(&self, v: Vertex) -> u32 {
        self.values[v]
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Checks the length and the scheme invariant against `graph`.
    pub fn validate(&self, graph: &Graph) -> Result<()> {
        if self.values.len() != graph.n() {
            return Err(Error::invalid(format!(
                "{} thresholds for {} vertices",
                self.values.len(),
                graph.n()
            )));
        }
        let bad = graph.vertices().find(|&v| {
            let t = self.values[v];
            match self.scheme {
                Scheme::General => false,
                Scheme::Majority => t as usize != graph.degree(v).div_ceil(2),
                Scheme::Unanimity => t as usize != graph.degree(v),
                Scheme::Constant(c) => t > c,
            }
        });
        match bad {
            Some(v) => Err(Error::invalid(format!(
                "threshold {} of vertex {v} violates the {} scheme",
                self.values[v], self.scheme
            ))),
            None => Ok(()),
        }
    }
}

/// Derives thresholds for the two degree-based schemes.
///
/// `Constant` and `General` need explicit values; use
/// [`ThresholdAssignment::constant`] or [`ThresholdAssignment::general`].
pub fn assign_thresholds(graph: &Graph, scheme: Scheme) -> Result<ThresholdAssignment> {
    match scheme {
        Scheme::Majority => Ok(ThresholdAssignment::majority(graph)),
        Scheme::Unanimity => Ok(ThresholdAssignment::unanimity(graph)),
        other => Err(Error::invalid(format!(
            "the {other} scheme needs explicit per-vertex values"
        ))),
    }
}

/// Graph, thresholds, budget `k` and optional activation target `ell`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub thresholds: ThresholdAssignment,
    pub k: usize,
    pub ell: Option<usize>,
}

impl Instance {
    pub fn new(
        graph: Graph,
        thresholds: ThresholdAssignment,
        k: usize,
        ell: Option<usize>,
    ) -> Result<Self> {
        thresholds.validate(&graph)?;
        let n = graph.n();
        if k > n {
            return Err(Error::invalid(format!("budget k={k} exceeds n={n}")));
        }
        Ok(Instance {
            graph,
            thresholds,
            k,
            ell,
        })
    }

    pub fn unanimity(graph: Graph, k: usize) -> Result<Self> {
        let t = ThresholdAssignment::unanimity(&graph);
        Instance::new(graph, t, k, None)
    }

    pub fn majority(graph: Graph, k: usize) -> Result<Self> {
        let t = ThresholdAssignment::majority(&graph);
        Instance::new(graph, t, k, None)
    }

    pub fn with_k(mut self, k: usize) -> Result<Self> {
        if k > self.graph.n() {
            return Err(Error::invalid(format!(
                "budget k={k} exceeds n={}",
                self.graph.n()
            )));
        }
        self.k = k;
        Ok(self)
    }

    /// Targets above `n` are allowed; such instances are trivially no.
    pub fn with_ell(mut self, ell: usize) -> Self {
        self.ell = Some(ell);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn majority_on_cycle_and_star() {
        assert_eq!(
            ThresholdAssignment::majority(&named::cycle(4)).values(),
            &[1, 1, 1, 1]
        );
        assert_eq!(
            ThresholdAssignment::majority(&named::star(3)).values(),
            &[2, 1, 1, 1]
        );
    }

    #[test]
    fn unanimity_is_degree() {
        let g = named::g5();
        let t = assign_thresholds(&g, Scheme::Unanimity).unwrap();
        for v in g.vertices() {
            assert_eq!(t.get(v) as usize, g.degree(v));
        }
        assert_eq!(
            ThresholdAssignment::unanimity(&named::path(3)).values(),
            &[1, 2, 1]
        );
    }

    #[test]
    fn isolated_vertices_get_zero() {
        let g = Graph::empty(2);
        assert_eq!(ThresholdAssignment::majority(&g).values(), &[0, 0]);
        assert_eq!(ThresholdAssignment::unanimity(&g).values(), &[0, 0]);
    }

    #[test]
    fn scheme_validation() {
        let g = named::path(3);
        assert!(ThresholdAssignment::with_scheme(&g, vec![1, 2, 1], Scheme::Unanimity).is_ok());
        assert!(ThresholdAssignment::with_scheme(&g, vec![1, 1, 1], Scheme::Unanimity).is_err());
        assert!(ThresholdAssignment::constant(vec![1, 3], 2).is_err());
        assert!(assign_thresholds(&g, Scheme::Constant(2)).is_err());
    }

    #[test]
    fn instance_bounds() {
        assert!(Instance::unanimity(named::path(3), 4).is_err());
        assert_eq!(
            Instance::unanimity(named::path(3), 3)
                .unwrap()
                .with_ell(4)
                .ell,
            Some(4)
        );
    }

    #[test]
    fn scheme_text_round_trip() {
        for s in [
            Scheme::General,
            Scheme::Majority,
            Scheme::Unanimity,
            Scheme::Constant(2),
        ] {
            assert_eq!(s.to_string().parse::<Scheme>().unwrap(), s);
        }
    }
}
