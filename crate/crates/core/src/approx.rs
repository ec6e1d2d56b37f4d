//! Approximation algorithms for unanimity thresholds and the bridges to
//! independent set and vertex cover.

use std::cmp::Reverse;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::oracles::{solve_max_open_exact, SearchConfig, SolveResult};
use crate::propagation::{Propagator, SeedSet};
use crate::threshold::{Instance, ThresholdAssignment};
use crate::twins::false_twin_classes;

/// A strictly increasing ratio function `r(n)` over positive integers.
#[derive(Debug, Clone, PartialEq)]
pub enum RatioSpec {
    Log2,
    Sqrt,
    Linear,
    /// `values[i] = r(i + 1)`; queries beyond the table are undefined.
    Table(Vec<f64>),
}

impl RatioSpec {
    pub fn table(values: Vec<f64>) -> Result<Self> {
        if values.is_empty()
            || values
                .windows(2)
                .any(|w| w[1].partial_cmp(&w[0]) != Some(std::cmp::Ordering::Greater))
        {
            return Err(Error::invalid(
                "ratio table must be non-empty and strictly increasing",
            ));
        }
        Ok(RatioSpec::Table(values))
    }

    /// `r(n)`, or `None` for `n = 0` or past the end of a table.
    pub fn value(&self, n: usize) -> Option<f64> {
        if n == 0 {
            return None;
        }
        let x = n as f64;
        match self {
            RatioSpec::Log2 => Some(x.log2()),
            RatioSpec::Sqrt => Some(x.sqrt()),
            RatioSpec::Linear => Some(x),
            RatioSpec::Table(t) => t.get(n - 1).copied(),
        }
    }

    fn domain_end(&self) -> usize {
        match self {
            RatioSpec::Table(t) => t.len(),
            _ => 1 << 52,
        }
    }

    /// Smallest `n >= 1` with `r(n) >= y`, by binary search.
    pub fn inverse(&self, y: f64) -> Option<usize> {
        let (mut lo, mut hi) = (1usize, self.domain_end());
        if self.value(hi)? < y {
            return None;
        }
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if self.value(mid)? >= y {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        Some(lo)
    }
}

impl std::str::FromStr for RatioSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "log2" => Ok(RatioSpec::Log2),
            "sqrt" => Ok(RatioSpec::Sqrt),
            "linear" => Ok(RatioSpec::Linear),
            other => {
                let values = other
                    .split(',')
                    .map(|x| x.trim().parse::<f64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::invalid(format!("unknown ratio `{other}`")))?;
                RatioSpec::table(values)
            }
        }
    }
}

/// Max Open k-Influence under unanimity thresholds within a factor `2^k`.
///
/// Picks the largest false-twin class `F` whose common degree is between 1
/// and `k` (ties: smaller degree, then smaller first member) and seeds
/// `N(F)`. Every member of `F` activates in the first round. Isolated
/// vertices are never chosen as `F`; they activate on their own.
pub fn twin_approx_open(graph: &Graph, k: usize) -> SolveResult {
    let started = Instant::now();
    let thr = ThresholdAssignment::unanimity(graph);
    let partition = false_twin_classes(graph);
    let explored = partition.classes.len() as u64;
    let chosen = partition
        .classes
        .iter()
        .filter(|c| c.degree >= 1 && c.degree <= k)
        .max_by_key(|c| (c.len(), Reverse(c.degree), Reverse(c.members[0])));
    let seeds = match chosen {
        Some(class) => SeedSet::from_sorted(graph.neighbors(class.members[0]).to_vec()),
        None => SeedSet::empty(),
    };
    SolveResult::evaluate(graph, &thr, seeds, false, explored, started)
}

/// Turns an open-objective solution into a closed-objective one.
///
/// The solver's seeds are padded up to `k` with the smallest vertices
/// outside sigma[S] so that `|sigma[S]| = k + |sigma(S)|`; adding seeds never shrinks
/// sigma[S]. Padding stops early only when sigma[S] already covers the graph.
pub fn closed_from_open<F>(
    graph: &Graph,
    thr: &ThresholdAssignment,
    k: usize,
    open_solver: F,
) -> Result<SolveResult>
where
    F: FnOnce(&Graph, &ThresholdAssignment, usize) -> Result<SolveResult>,
{
    let started = Instant::now();
    let base = open_solver(graph, thr, k)?;
    let mut seeds = base.seeds.clone().into_vec();
    let mut p = Propagator::new(graph, thr);
    while seeds.len() < k {
        p.run(&seeds);
        match graph.vertices().find(|&v| !p.is_active(v)) {
            Some(v) => {
                seeds.push(v);
                seeds.sort_unstable();
            }
            None => break,
        }
    }
    let mut r = SolveResult::evaluate(
        graph,
        thr,
        SeedSet::from_sorted(seeds),
        base.exact,
        base.explored,
        started,
    );
    r.elapsed += base.elapsed;
    Ok(r)
}

/// Greedy constant-factor approximation for unanimity thresholds on
/// bounded-degree graphs.
///
/// Repeatedly picks a positive-degree vertex that is neither seeded nor
/// active, has no previously picked neighbour, and whose unseeded
/// neighbourhood fits the remaining budget, preferring the smallest
/// residual neighbourhood (ties by index); its neighbourhood is then
/// seeded. Picked vertices stay outside the seed set, so the value is at
/// least the number of picks, and each pick costs at most Delta seeds.
pub fn bounded_degree_approx(graph: &Graph, k: usize) -> SolveResult {
    greedy_picks(graph, k).0
}

/// As [`bounded_degree_approx`], also returning the picked vertices.
pub fn greedy_picks(graph: &Graph, k: usize) -> (SolveResult, Vec<Vertex>) {
    let started = Instant::now();
    let thr = ThresholdAssignment::unanimity(graph);
    let n = graph.n();
    let mut seeded = vec![false; n];
    let mut picked = vec![false; n];
    let mut seeds: Vec<Vertex> = Vec::new();
    let mut picks = Vec::new();
    let mut budget = k;
    let mut explored = 0u64;
    let mut p = Propagator::new(graph, &thr);
    loop {
        p.run(&seeds);
        let mut best: Option<(usize, Vertex)> = None;
        for u in graph.vertices() {
            if graph.degree(u) == 0 || seeded[u] || p.is_active(u) {
                continue;
            }
            explored += 1;
            let nbrs = graph.neighbors(u);
            if nbrs.iter().any(|&w| picked[w]) {
                continue;
            }
            let residual = nbrs.iter().filter(|&&w| !seeded[w]).count();
            if residual <= budget && best.is_none_or(|(r, _)| residual < r) {
                best = Some((residual, u));
            }
        }
        let Some((residual, u)) = best else { break };
        for &w in graph.neighbors(u) {
            if !seeded[w] {
                seeded[w] = true;
                seeds.push(w);
            }
        }
        seeds.sort_unstable();
        budget -= residual;
        picked[u] = true;
        picks.push(u);
    }
    (
        SolveResult::evaluate(
            graph,
            &thr,
            SeedSet::from_sorted(seeds),
            false,
            explored,
            started,
        ),
        picks,
    )
}

/// Which side of the ratio switch ran.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RatioBranch {
    /// `2^k <= r(n)`: the twin approximation already meets `r(n)`.
    Twin,
    /// `2^k > r(n)`: n is small relative to k, so brute force is fpt.
    BruteForce,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FptRatioResult {
    pub result: SolveResult,
    pub branch: RatioBranch,
}

/// `r(n)`-approximation in fpt-time for unanimity thresholds, switching
/// between the `2^k` twin approximation and exhaustive search.
pub fn fpt_ratio_approx(
    graph: &Graph,
    k: usize,
    ratio: &RatioSpec,
    cfg: &SearchConfig,
) -> Result<FptRatioResult> {
    if k > graph.n() {
        return Err(Error::invalid(format!(
            "budget k={k} exceeds n={}",
            graph.n()
        )));
    }
    let twin_ratio = 2f64.powi(k.min(1023) as i32);
    let use_twin = ratio.value(graph.n()).is_some_and(|r| twin_ratio <= r);
    if use_twin {
        Ok(FptRatioResult {
            result: twin_approx_open(graph, k),
            branch: RatioBranch::Twin,
        })
    } else {
        let inst = Instance::unanimity(graph.clone(), k)?;
        Ok(FptRatioResult {
            result: solve_max_open_exact(&inst, cfg)?,
            branch: RatioBranch::BruteForce,
        })
    }
}

/// A maximum independent set, read off as sigma(S*) for the best exact open
/// influence optimum over `k = 1..=n` under unanimity thresholds.
pub fn max_independent_set_via_influence(graph: &Graph, cfg: &SearchConfig) -> Result<Vec<Vertex>> {
    let thr = ThresholdAssignment::unanimity(graph);
    let mut best: Option<SolveResult> = None;
    for k in 1..=graph.n() {
        let inst = Instance::new(graph.clone(), thr.clone(), k, None)?;
        let r = solve_max_open_exact(&inst, cfg)?;
        if best.as_ref().is_none_or(|b| r.open_value > b.open_value) {
            best = Some(r);
        }
    }
    Ok(match best {
        Some(r) => {
            let mut p = Propagator::new(graph, &thr);
            p.run(&r.seeds);
            graph
                .vertices()
                .filter(|&v| p.is_active(v) && r.seeds.binary_search(&v).is_err())
                .collect()
        }
        None => Vec::new(),
    })
}

/// `V \ sigma(S)` under unanimity thresholds; sigma(S) is independent, so this is
/// always a vertex cover.
pub fn vertex_cover_from_influence(graph: &Graph, seeds: &SeedSet) -> Vec<Vertex> {
    let thr = ThresholdAssignment::unanimity(graph);
    let mut p = Propagator::new(graph, &thr);
    p.run(seeds);
    graph
        .vertices()
        .filter(|&v| !p.is_active(v) || seeds.binary_search(&v).is_ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::oracles::is_vertex_cover;

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn twin_on_four_cycle() {
        let r = twin_approx_open(&named::cycle(4), 2);
        assert_eq!(r.seeds.as_slice(), &[1, 3]);
        assert_eq!(r.open_value, 2);
    }

    #[test]
    fn twin_on_star_and_clique() {
        let r = twin_approx_open(&named::star(3), 1);
        assert_eq!(r.seeds.as_slice(), &[0]);
        assert_eq!(r.open_value, 3);
        let r = twin_approx_open(&named::complete(4), 1);
        assert!(r.seeds.is_empty());
        assert_eq!(r.open_value, 0);
    }

    #[test]
    fn twin_counts_isolated_vertices_for_free() {
        let g = Graph::from_edges(4, &[(0, 1)]).unwrap();
        let r = twin_approx_open(&g, 1);
        // F = {0} (tie with {1}, smaller member), seeds N(F) = {1}
        assert_eq!(r.seeds.as_slice(), &[1]);
        assert_eq!(r.open_value, 3);
    }

    #[test]
    fn closed_from_open_examples() {
        let c4 = named::cycle(4);
        let t = ThresholdAssignment::unanimity(&c4);
        let r = closed_from_open(&c4, &t, 2, |g, _, k| Ok(twin_approx_open(g, k))).unwrap();
        assert_eq!(r.closed_value, 4);

        let r = closed_from_open(&c4, &t, 0, |g, _, k| Ok(twin_approx_open(g, k))).unwrap();
        assert_eq!(r.closed_value, 0);

        let p3 = named::path(3);
        let t3 = ThresholdAssignment::unanimity(&p3);
        let r = closed_from_open(&p3, &t3, 1, |g, t, k| {
            solve_max_open_exact(&Instance::new(g.clone(), t.clone(), k, None)?, &cfg())
        })
        .unwrap();
        assert_eq!(r.closed_value, 3);
        assert_eq!(r.closed_value, 1 + r.open_value);
    }

    #[test]
    fn closed_from_open_pads_short_seed_sets() {
        let g = named::path(5);
        let t = ThresholdAssignment::unanimity(&g);
        let r = closed_from_open(&g, &t, 3, |_, _, _| {
            Ok(SolveResult::evaluate(
                &g,
                &t,
                SeedSet::empty(),
                false,
                0,
                Instant::now(),
            ))
        })
        .unwrap();
        assert_eq!(r.seeds.len(), 3);
        assert_eq!(r.closed_value, 3 + r.open_value);
    }

    #[test]
    fn greedy_examples() {
        let (r, picks) = greedy_picks(&named::matching(3), 2);
        assert_eq!(picks.len(), 2);
        assert_eq!(r.open_value, 2);

        let (r, picks) = greedy_picks(&named::cycle(4), 2);
        assert_eq!(picks, vec![0]);
        assert_eq!(r.seeds.as_slice(), &[1, 3]);
        assert_eq!(r.open_value, 2);

        let (r, picks) = greedy_picks(&named::star(3), 2);
        assert_eq!(picks, vec![1]);
        assert!(r.open_value >= 1);
        assert!(r.seeds.len() <= 2);
    }

    #[test]
    fn ratio_presets_and_inverse() {
        assert_eq!(RatioSpec::Linear.value(4), Some(4.0));
        assert_eq!(RatioSpec::Log2.value(4), Some(2.0));
        assert_eq!(RatioSpec::Log2.inverse(3.0), Some(8));
        assert_eq!(RatioSpec::Sqrt.inverse(3.0), Some(9));
        let t = RatioSpec::table(vec![1.0, 2.0, 5.0]).unwrap();
        assert_eq!(t.inverse(3.0), Some(3));
        assert_eq!(t.inverse(6.0), None);
        assert!(RatioSpec::table(vec![1.0, 1.0]).is_err());
        assert_eq!(
            "1,2,3".parse::<RatioSpec>().unwrap(),
            RatioSpec::Table(vec![1.0, 2.0, 3.0])
        );
    }

    #[test]
    fn fpt_ratio_branches() {
        let r = fpt_ratio_approx(&named::cycle(4), 1, &RatioSpec::Linear, &cfg()).unwrap();
        assert_eq!(r.branch, RatioBranch::Twin);

        let k4 = named::complete(4);
        let r = fpt_ratio_approx(&k4, 3, &RatioSpec::Log2, &cfg()).unwrap();
        assert_eq!(r.branch, RatioBranch::BruteForce);
        let exact =
            solve_max_open_exact(&Instance::unanimity(k4.clone(), 3).unwrap(), &cfg()).unwrap();
        assert_eq!(r.result.open_value, exact.open_value);

        let r = fpt_ratio_approx(&k4, 0, &RatioSpec::Log2, &cfg()).unwrap();
        assert_eq!(r.result.open_value, 0);
    }

    #[test]
    fn independent_set_bridge() {
        let mis = max_independent_set_via_influence(&named::cycle(4), &cfg()).unwrap();
        assert_eq!(mis.len(), 2);
        assert!(named::cycle(4).is_independent(&mis));
        assert_eq!(
            max_independent_set_via_influence(&named::path(3), &cfg()).unwrap(),
            vec![0, 2]
        );
        assert_eq!(
            max_independent_set_via_influence(&Graph::empty(1), &cfg()).unwrap(),
            vec![0]
        );
    }

    #[test]
    fn vertex_cover_bridge() {
        let c4 = named::cycle(4);
        let s = SeedSet::new(vec![1, 3], 4).unwrap();
        assert_eq!(vertex_cover_from_influence(&c4, &s), vec![1, 3]);
        let p3 = named::path(3);
        let vc = vertex_cover_from_influence(&p3, &SeedSet::new(vec![1], 3).unwrap());
        assert_eq!(vc, vec![1]);
        assert!(is_vertex_cover(&p3, &vc));
        assert_eq!(
            vertex_cover_from_influence(&p3, &SeedSet::empty()),
            vec![0, 1, 2]
        );
    }
}
