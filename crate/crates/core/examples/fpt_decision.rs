//! The fixed-parameter decision on a bounded-degree graph, with its
//! pair profiles and realizing vertices.

use kinfluence::fpt::{enumerate_pair_profiles, is_realizing_vertex, FptSolver, RealizationQuery};
use kinfluence::graph::named;
use kinfluence::oracles::SearchConfig;

fn main() -> kinfluence::error::Result<()> {
    let g = named::path(3).disjoint_union(&named::path(3));
    let cfg = SearchConfig::default();
    for p in enumerate_pair_profiles(2, 4, 2) {
        println!("profile\t{p}");
    }
    let q = RealizationQuery {
        v: 1,
        alpha: 2,
        beta: 1,
    };
    if let Some(w) = is_realizing_vertex(&g, q, &cfg)? {
        println!(
            "realizing\tv=1\tseeds\t{:?}\trealization\t{:?}",
            w.seed_subset, w.realization
        );
    }
    let mut solver = FptSolver::new(&g, cfg);
    for ell in 1..=5 {
        let d = solver.decide(2, ell)?;
        let profile = d.accepting.map_or("-".to_string(), |p| p.to_string());
        let witness = d.result.witness.map(|w| w.into_vec());
        println!(
            "k=2 ell={ell}\t{}\t{profile}\t{witness:?}",
            if d.result.answer { "yes" } else { "no" }
        );
    }
    let s = solver.stats();
    println!(
        "realizations\t{}\tcontainment violations\t{}",
        s.witnesses_checked, s.containment_violations
    );
    Ok(())
}
