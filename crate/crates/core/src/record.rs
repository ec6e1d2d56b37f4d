//! Result records written by the command-line front end.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use crate::graph::Vertex;

/// Output layout: a tab-delimited table or one JSON object per line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Table,
    Records,
}

/// Outcome of one solver run on one instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResultRecord {
    pub command: String,
    pub algorithm: String,
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub ell: Option<usize>,
    /// Open influence reached, for optimisation runs.
    pub value: Option<usize>,
    /// For decision runs.
    pub answer: Option<bool>,
    pub witness: Vec<Vertex>,
    pub exact: bool,
    pub explored: u64,
    /// Solver-specific note, e.g. the branch taken or the accepting profile.
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl ResultRecord {
    pub fn with_elapsed(mut self, elapsed: Duration, include: bool) -> Self {
        self.elapsed_ms = include.then_some(elapsed.as_secs_f64() * 1e3);
        self
    }
}

const COLUMNS: [&str; 13] = [
    "command",
    "algorithm",
    "instance",
    "n",
    "m",
    "k",
    "ell",
    "value",
    "answer",
    "witness",
    "exact",
    "explored",
    "detail",
];

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

/// Renders `records` in `format`. Tables carry an `elapsed_ms` column only
/// when some record has a timing.
pub fn render(records: &[ResultRecord], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Records => {
            for r in records {
                out.push_str(&serde_json::to_string(r).expect("records serialize"));
                out.push('\n');
            }
        }
        OutputFormat::Table => {
            let timed = records.iter().any(|r| r.elapsed_ms.is_some());
            out.push_str(&COLUMNS.join("\t"));
            if timed {
                out.push_str("\telapsed_ms");
            }
            out.push('\n');
            for r in records {
                let witness = if r.witness.is_empty() {
                    "-".to_string()
                } else {
                    r.witness
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                };
                let answer = r.answer.map(|a| if a { "yes" } else { "no" });
                let _ = write!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.command,
                    r.algorithm,
                    r.instance,
                    r.n,
                    r.m,
                    r.k,
                    opt(&r.ell),
                    opt(&r.value),
                    opt(&answer),
                    witness,
                    r.exact,
                    r.explored,
                    opt(&r.detail),
                );
                if timed {
                    let _ = write!(
                        out,
                        "\t{}",
                        r.elapsed_ms.map_or("-".into(), |t| format!("{t:.3}"))
                    );
                }
                out.push('\n');
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ResultRecord {
        ResultRecord {
            command: "solve".into(),
            algorithm: "exact-open".into(),
            instance: "c4".into(),
            n: 4,
            m: 4,
            k: 2,
            ell: None,
            value: Some(2),
            answer: None,
            witness: vec![0, 2],
            exact: true,
            explored: 11,
            detail: None,
            elapsed_ms: None,
        }
    }

    #[test]
    fn table_row() {
        let t = render(&[sample()], OutputFormat::Table);
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(
            lines[1],
            "solve\texact-open\tc4\t4\t4\t2\t-\t2\t-\t0,2\ttrue\t11\t-"
        );
        assert!(!t.contains("elapsed"));
    }

    #[test]
    fn json_records() {
        let t = render(&[sample()], OutputFormat::Records);
        let v: serde_json::Value = serde_json::from_str(t.trim()).unwrap();
        assert_eq!(v["value"], 2);
        assert_eq!(v["witness"], serde_json::json!([0, 2]));
        assert!(v.get("elapsed_ms").is_none());
        let timed = sample().with_elapsed(Duration::from_millis(5), true);
        assert!(render(&[timed], OutputFormat::Table).contains("elapsed_ms"));
    }
}
