//! Line-oriented instance text format.
//!
//! ```text
//! c k 2                # optional metadata comments
//! c ell 3
//! c scheme unanimity
//! p influence <n> <m>
//! t <v> <theta>        # one per vertex
//! e <u> <v>            # m lines, 0-based, u < v
//! ```
//!
//! Any other line starting with `c` is a free comment. Serialization emits
//! thresholds and edges in ascending order so output is byte-deterministic.

use std::fmt::Write as _;
use std::io::Read;

use crate::error::{Error, ParseErrorKind, Result};
use crate::graph::GraphBuilder;
use crate::threshold::{Instance, Scheme, ThresholdAssignment};

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut thresholds: Vec<Option<u32>> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen_edges = std::collections::HashSet::new();
    let mut k = 0usize;
    let mut ell = None;
    let mut scheme = Scheme::General;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let err = |kind| Error::parse(line_no, kind);
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(ParseErrorKind::MalformedLine))
        };
        match fields[0] {
            "c" => match fields.get(1).copied() {
                Some("k") if fields.len() == 3 => k = num(fields[2])?,
                Some("ell") if fields.len() == 3 => ell = Some(num(fields[2])?),
                Some("scheme") => {
                    scheme = fields[2..]
                        .join(" ")
                        .parse()
                        .map_err(|_| err(ParseErrorKind::MalformedLine))?
                }
                _ => {}
            },
            "p" => {
                if header.is_some() {
                    return Err(err(ParseErrorKind::DuplicateHeader));
                }
                if fields.len() != 4 || fields[1] != "influence" {
                    return Err(err(ParseErrorKind::MalformedHeader));
                }
                let n = fields[2]
                    .parse()
                    .map_err(|_| err(ParseErrorKind::MalformedHeader))?;
                let m = fields[3]
                    .parse()
                    .map_err(|_| err(ParseErrorKind::MalformedHeader))?;
                header = Some((n, m, line_no));
                thresholds = vec![None; n];
            }
            "t" => {
                let (n, _, _) = header.ok_or_else(|| err(ParseErrorKind::MissingHeader))?;
                if fields.len() != 3 {
                    return Err(err(ParseErrorKind::MalformedLine));
                }
                let v = num(fields[1])?;
                let theta: u32 = fields[2]
                    .parse()
                    .map_err(|_| err(ParseErrorKind::MalformedLine))?;
                if v >= n {
                    return Err(err(ParseErrorKind::UnknownVertexThreshold(v)));
                }
                if thresholds[v].replace(theta).is_some() {
                    return Err(err(ParseErrorKind::DuplicateThreshold(v)));
                }
            }
            "e" => {
                let (n, _, _) = header.ok_or_else(|| err(ParseErrorKind::MissingHeader))?;
                if fields.len() != 3 {
                    return Err(err(ParseErrorKind::MalformedLine));
                }
                let (u, v) = (num(fields[1])?, num(fields[2])?);
                for x in [u, v] {
                    if x >= n {
                        return Err(err(ParseErrorKind::VertexOutOfRange { vertex: x, n }));
                    }
                }
                if u == v {
                    return Err(err(ParseErrorKind::SelfLoop(u)));
                }
                let key = (u.min(v), u.max(v));
                if !seen_edges.insert(key) {
                    return Err(err(ParseErrorKind::DuplicateEdge(key.0, key.1)));
                }
                edges.push(key);
            }
            _ => return Err(err(ParseErrorKind::MalformedLine)),
        }
    }

    let (n, m, header_line) = header.ok_or(Error::parse(1, ParseErrorKind::MissingHeader))?;
    let herr = |kind| Error::parse(header_line, kind);
    if edges.len() != m {
        return Err(herr(ParseErrorKind::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        }));
    }
    let values = thresholds
        .iter()
        .enumerate()
        .map(|(v, t)| t.ok_or_else(|| herr(ParseErrorKind::MissingThreshold(v))))
        .collect::<Result<Vec<u32>>>()?;
    let mut b = GraphBuilder::with_vertices(n);
    for &(u, v) in &edges {
        b.add_edge(u, v);
    }
    let graph = b.freeze()?;
    let thr = ThresholdAssignment::with_scheme(&graph, values, scheme)
        .map_err(|e| herr(ParseErrorKind::SchemeViolation(e.to_string())))?;
    Instance::new(graph, thr, k, ell)
        .map_err(|e| herr(ParseErrorKind::InvalidInstance(e.to_string())))
}

pub fn read_instance(mut reader: impl Read) -> Result<Instance> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;
    parse_instance(&text)
}

pub fn read_instance_file(path: impl AsRef<std::path::Path>) -> Result<Instance> {
    parse_instance(&std::fs::read_to_string(path)?)
}

/// Canonical text form; `extra_comments` are emitted verbatim as `c` lines
/// before the metadata.
pub fn serialize_instance_with(instance: &Instance, extra_comments: &[String]) -> String {
    let g = &instance.graph;
    let mut out = String::new();
    for c in extra_comments {
        let _ = writeln!(out, "c {c}");
    }
    let _ = writeln!(out, "c k {}", instance.k);
    if let Some(ell) = instance.ell {
        let _ = writeln!(out, "c ell {ell}");
    }
    let _ = writeln!(out, "c scheme {}", instance.thresholds.scheme());
    let _ = writeln!(out, "p influence {} {}", g.n(), g.m());
    for v in g.vertices() {
        let _ = writeln!(out, "t {v} {}", instance.thresholds.get(v));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

pub fn serialize_instance(instance: &Instance) -> String {
    serialize_instance_with(instance, &[])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use proptest::prelude::*;

    const PATH: &str = "c path a-b-c\np influence 3 2\nt 0 1\nt 1 2\nt 2 1\ne 0 1\ne 1 2\n";

    fn kind_of(text: &str) -> (usize, ParseErrorKind) {
        match parse_instance(text) {
            Err(Error::Parse { line, kind }) => (line, kind),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parses_path_with_unanimity_values() {
        let inst = parse_instance(PATH).unwrap();
        assert_eq!(inst.graph.n(), 3);
        assert_eq!(inst.graph.m(), 2);
        assert_eq!(inst.thresholds.values(), &[1, 2, 1]);
        assert_eq!(inst.k, 0);
        assert_eq!(inst.ell, None);
    }

    #[test]
    fn reports_errors_with_line_numbers() {
        let (line, kind) = kind_of("p influence 3 1\nt 0 1\nt 1 1\nt 2 1\ne 1 5\n");
        assert_eq!(line, 5);
        assert_eq!(kind, ParseErrorKind::VertexOutOfRange { vertex: 5, n: 3 });

        let (line, kind) = kind_of("p influence 3 2\nt 0 1\nt 1 1\nt 2 1\ne 1 2\ne 2 1\n");
        assert_eq!(line, 6);
        assert_eq!(kind, ParseErrorKind::DuplicateEdge(1, 2));

        let (_, kind) = kind_of("p influence 2 1\nt 0 1\nt 1 1\ne 1 1\n");
        assert_eq!(kind, ParseErrorKind::SelfLoop(1));

        let (line, kind) = kind_of("p influence 2 0\nt 0 1\nt 7 1\n");
        assert_eq!(line, 3);
        assert_eq!(kind, ParseErrorKind::UnknownVertexThreshold(7));

        let (_, kind) = kind_of("p influence 2 0\nt 0 1\n");
        assert_eq!(kind, ParseErrorKind::MissingThreshold(1));

        let (_, kind) = kind_of("p influence 2 1\nt 0 1\nt 1 1\n");
        assert_eq!(
            kind,
            ParseErrorKind::EdgeCountMismatch {
                declared: 1,
                found: 0
            }
        );

        let (line, kind) = kind_of("c nothing\np graph 2\n");
        assert_eq!((line, kind), (2, ParseErrorKind::MalformedHeader));

        let (_, kind) = kind_of("t 0 1\n");
        assert_eq!(kind, ParseErrorKind::MissingHeader);

        let (_, kind) = kind_of("c scheme unanimity\np influence 2 1\nt 0 1\nt 1 2\ne 0 1\n");
        assert!(matches!(kind, ParseErrorKind::SchemeViolation(_)));
    }

    #[test]
    fn serialization_is_canonical() {
        let inst = Instance::unanimity(named::path(3), 1).unwrap().with_ell(2);
        let text = serialize_instance(&inst);
        assert_eq!(
            text,
            "c k 1\nc ell 2\nc scheme unanimity\np influence 3 2\nt 0 1\nt 1 2\nt 2 1\ne 0 1\ne 1 2\n"
        );
    }

    fn arb_instance() -> impl Strategy<Value = Instance> {
        (1usize..9)
            .prop_flat_map(|n| {
                let pairs: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .collect();
                let np = pairs.len();
                (
                    Just(n),
                    Just(pairs),
                    proptest::collection::vec(any::<bool>(), np),
                    proptest::collection::vec(0u32..5, n),
                    0..=n,
                    proptest::option::of(0..=n),
                    0u8..3,
                )
            })
            .prop_map(|(n, pairs, mask, values, k, ell, which)| {
                let edges: Vec<_> = pairs
                    .into_iter()
                    .zip(mask)
                    .filter(|(_, b)| *b)
                    .map(|(e, _)| e)
                    .collect();
                let g = crate::graph::Graph::from_edges(n, &edges).unwrap();
                let thr = match which {
                    0 => ThresholdAssignment::general(values),
                    1 => ThresholdAssignment::majority(&g),
                    _ => ThresholdAssignment::unanimity(&g),
                };
                Instance::new(g, thr, k, ell).unwrap()
            })
    }

    proptest! {
        #[test]
        fn parse_inverts_serialize(inst in arb_instance()) {
            let text = serialize_instance(&inst);
            prop_assert_eq!(parse_instance(&text).unwrap(), inst);
        }
    }
}
