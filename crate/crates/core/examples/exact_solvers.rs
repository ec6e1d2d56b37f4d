//! Exhaustive Max Open/Closed k-Influence and the (k,l) decision.

use kinfluence::graph::named;
use kinfluence::oracles::{
    decide_influence, solve_max_closed_exact, solve_max_open_exact, SearchConfig,
};
use kinfluence::threshold::Instance;

fn main() -> kinfluence::error::Result<()> {
    let cfg = SearchConfig::default();
    let inst = Instance::unanimity(named::cycle(4), 2)?;
    let open = solve_max_open_exact(&inst, &cfg)?;
    let closed = solve_max_closed_exact(&inst, &cfg)?;
    println!(
        "c4 k=2 open\t{}\tseeds\t{:?}",
        open.open_value,
        open.seeds.as_slice()
    );
    println!(
        "c4 k=2 closed\t{}\tseeds\t{:?}",
        closed.closed_value,
        closed.seeds.as_slice()
    );
    for ell in 1..=3 {
        let d = decide_influence(&inst.clone().with_ell(ell), &cfg)?;
        println!(
            "ell={ell}\t{}\texplored\t{}",
            if d.answer { "yes" } else { "no" },
            d.explored
        );
    }
    match solve_max_open_exact(&inst, &SearchConfig::with_cap(3)) {
        Err(e) if e.is_cap_exceeded() => println!("cap 3\t{e}"),
        other => println!("cap 3\tunexpected {other:?}"),
    }
    Ok(())
}
