//! Writes a small catalog corpus and benchmarks the approximations on it.

use kinfluence::bench::{bench_suite, render_bench, BenchAlgorithm, BenchConfig};
use kinfluence::catalog::connected_graphs;
use kinfluence::format::serialize_instance;
use kinfluence::threshold::Instance;

fn main() -> kinfluence::error::Result<()> {
    let dir = std::env::temp_dir().join(format!("kinfluence-corpus-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    for (i, g) in connected_graphs(5).into_iter().enumerate().take(8) {
        let inst = Instance::unanimity(g, 2)?;
        std::fs::write(
            dir.join(format!("n5-{i:05}.inst")),
            serialize_instance(&inst),
        )?;
    }
    let cfg = BenchConfig {
        algorithms: vec![BenchAlgorithm::Twin, BenchAlgorithm::Greedy],
        ..BenchConfig::default()
    };
    let rows = bench_suite(&dir, &cfg)?;
    print!("{}", render_bench(&rows, false));
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
