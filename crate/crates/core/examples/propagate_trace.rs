//! Round-by-round activation under the three degree-based schemes.

use kinfluence::graph::named;
use kinfluence::propagation::{propagate, SeedSet};
use kinfluence::threshold::{assign_thresholds, Scheme, ThresholdAssignment};

fn main() -> kinfluence::error::Result<()> {
    let g = named::g5();
    let seeds = SeedSet::new(vec![1, 3], g.n())?;
    let schemes = [
        ("unanimity", assign_thresholds(&g, Scheme::Unanimity)?),
        ("majority", assign_thresholds(&g, Scheme::Majority)?),
        (
            "constant 1",
            ThresholdAssignment::constant(vec![1; g.n()], 1)?,
        ),
    ];
    for (name, thr) in schemes {
        let tr = propagate(&g, &thr, &seeds);
        println!("scheme\t{name}\tseeds\t{:?}", seeds.as_slice());
        print!("{}", tr.dump());
        println!("open\t{}\tclosed\t{}", tr.open_value(), tr.closed_value());
    }
    Ok(())
}
