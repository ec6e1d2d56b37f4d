//! False-twin classes and the approximations for unanimity thresholds.

use kinfluence::approx::{
    bounded_degree_approx, closed_from_open, fpt_ratio_approx, twin_approx_open, RatioSpec,
};
use kinfluence::graph::named;
use kinfluence::oracles::{solve_max_open_exact, SearchConfig};
use kinfluence::threshold::{Instance, ThresholdAssignment};
use kinfluence::twins::false_twin_classes;

fn main() -> kinfluence::error::Result<()> {
    let g = named::star(5).disjoint_union(&named::cycle(4));
    for class in &false_twin_classes(&g).classes {
        println!("class\t{:?}\tdegree\t{}", class.members, class.degree);
    }
    let cfg = SearchConfig::default();
    for k in 1..=3 {
        let opt = solve_max_open_exact(&Instance::unanimity(g.clone(), k)?, &cfg)?;
        let twin = twin_approx_open(&g, k);
        let greedy = bounded_degree_approx(&g, k);
        let ratio = fpt_ratio_approx(&g, k, &RatioSpec::Log2, &cfg)?;
        println!(
            "k={k}\toptimum\t{}\ttwin\t{}\tgreedy\t{}\tfpt-ratio\t{} ({:?})",
            opt.open_value,
            twin.open_value,
            greedy.open_value,
            ratio.result.open_value,
            ratio.branch
        );
    }
    let thr = ThresholdAssignment::unanimity(&g);
    let closed = closed_from_open(&g, &thr, 3, |g, _, k| Ok(twin_approx_open(g, k)))?;
    println!(
        "closed k=3\t{}\tseeds\t{:?}",
        closed.closed_value,
        closed.seeds.as_slice()
    );
    Ok(())
}
